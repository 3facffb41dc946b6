"""Random blow-ups: the verdict always matches simplicial completeness.

Surfaces are grown from P^2 and H0..H3 by blowing up torus-fixed points.
"""

import random
from collections import Counter

from toricproj import compare_fan, is_simplicially_complete, random_smooth_surface

rng = random.Random(1)
tally = Counter()
for _ in range(40):
    fan = random_smooth_surface(rng, max_rays=9)
    rep = compare_fan(fan)
    assert rep.is_isomorphism == is_simplicially_complete(fan).complete
    tally[(fan.n_rays, rep.verdict)] += 1

for (n, verdict), count in sorted(tally.items()):
    print(f"{n} rays  {verdict:<20} x{count}")
