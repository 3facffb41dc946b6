"""P(1,1,2): simplicial but singular, so the polynomial model is only a model.

The ray functions need dilation 2 on the two rays next to the singular
point, and the monoid of nonnegative support functions has an extra
irreducible (1, 0, 1) that no monomial in the ray functions produces.
"""

from toricproj import cox_model, monoid_irreducibles_box, weighted_projective_space
from toricproj.coxring import chart_degree_zero_monoid, chart_of_cone

fan = weighted_projective_space(1, 1, 2)
model = cox_model(fan)
print("rays:", fan.rays)
print("dilations:", model.dilations)
print("model kind:", model.model_kind)
print("irreducibles (box 3):", monoid_irreducibles_box(model.sf, 3))
for w in model.warnings:
    print("warning:", w)

rep = chart_degree_zero_monoid(model, chart_of_cone(model, (0, 2)), 3)
print(f"\nchart of the singular cone: {rep.checked} lattice points checked, "
      f"{len(rep.counterexamples)} disagree with the dual cone")
print("first few:", list(rep.counterexamples[:5]))
