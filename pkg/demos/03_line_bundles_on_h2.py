"""On H2 the twist O(1,0) is a line bundle on the toric part only.

The degrees of x1..x4 are printed in this run's Pic basis; twists are read
in that same basis.
"""

from toricproj import cox_model, hirzebruch, twist_line_bundle_locus

model = cox_model(hirzebruch(2))
print("degrees:", [list(d) for d in model.degrees])
print("Pic basis (rows):", [list(r) for r in model.pic.free_projection])

locus = twist_line_bundle_locus(model, (1, 0))
for key, ok in sorted(locus.flags.items(), key=lambda kv: (len(kv[0]), kv[0])):
    tag = "toric" if key in model.fan.cone_set else "extra"
    print(f"  complement {list(key)!s:<8} {tag:<5} line bundle: {ok}")
print("all toric charts:", locus.tproj_all, "| all charts:", locus.projmh_all)
