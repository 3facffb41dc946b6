"""Exact integer linear algebra underneath everything else.

Smith form, cokernels, lattice membership and minimal dilations, all on
Python integers. Run with ``python demos/01_lattice_toolkit.py``.
"""

from toricproj import intlin

# The rays of P^2 as rows. Read as a map Z^2 -> Z^3 (m -> ray values), its
# cokernel is the Picard group.
div = [[1, 0], [0, 1], [-1, -1]]
snf = intlin.smith_decompose(div)
print("invariant factors:", snf.invariant_factors)

coker = intlin.cokernel(div)
print("Pic rank:", coker.free_rank, "torsion:", coker.torsion)
for e in ([1, 0, 0], [0, 1, 0], [0, 0, 1]):
    print("  class of", e, "=", coker.apply(e)[1])

# Membership in the lattice spanned by (-2, 1) and (0, 1), given as columns.
L = [[-2, 0], [1, 1]]
print("(2,-1) coordinates:", intlin.lattice_membership(L, (2, -1)))
print("(1, 0) coordinates:", intlin.lattice_membership(L, (1, 0)))
print("index of the lattice:", intlin.subgroup_index([(-2, 1), (0, 1)], 2).index)

# Smallest multiple of a vector that lands in a sublattice.
print("dilation of (1,0) into {a even}:", intlin.minimal_dilation([[2, 0], [0, 1]], (1, 0)))

# Strict feasibility: is there x with x1 > 0, x2 > 0 and x1 - x2 = 0?
pt = intlin.strict_cone_feasibility([[1, -1]], [[1, 0], [0, 1]], [0, 1], nvars=2)
print("strictly feasible point:", pt)
