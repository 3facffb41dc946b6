"""Which complete smooth toric surfaces have toric Proj equal to Proj_MH?

Only P^2 and P^1 x P^1. For every other surface some pair of independent
rays does not span a cone of the fan, and that pair gives an extra chart.
"""

from toricproj import classify_surface, compare_fan, hirzebruch, projective_space, star_subdivision
from toricproj.fan import product

p1 = projective_space(1)
surfaces = {"P2": projective_space(2), "P1 x P1": product(p1, p1)}
for r in range(1, 4):
    surfaces[f"H{r}"] = hirzebruch(r)
surfaces["P2 blown up once"] = star_subdivision(projective_space(2), (0, 1))

print(f"{'surface':<18} {'rays':>4} {'rank Pic':>8}  verdict")
for name, fan in surfaces.items():
    c = classify_surface(fan)
    rep = compare_fan(fan)
    print(f"{name:<18} {c.n_rays:>4} {c.pic_rank:>8}  {rep.verdict}")
    for cone in rep.missing_cones:
        print(" " * 20, "missing cone on rays", [fan.rays[i] for i in cone])

# The witness for H1: the prime ideal of the two missing-cone variables.
rep = compare_fan(hirzebruch(1))
w = rep.witnesses[0].to_dict()
print("\nH1 witness ideal:", w["generators"], "lives on the extra chart", w["extra_chart"])
