from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricproj import intlin
from oracles import grid_feasible, invariant_factors, matrix_rank, subgroup_index_brute

small = st.integers(min_value=-6, max_value=6)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=m, max_size=m)))


# --- Smith form -------------------------------------------------------------


def test_smith_p2_rays():
    d = intlin.smith_decompose([[1, 0], [0, 1], [-1, -1]])
    assert d.rank == 2
    assert d.torsion == ()


def test_smith_zero_matrix():
    assert intlin.smith_decompose([[0, 0], [0, 0]]).rank == 0


def test_smith_one_by_one():
    d = intlin.smith_decompose([[2]])
    assert d.S == ((2,),)
    assert d.torsion == (2,)


@given(matrices())
@settings(max_examples=80, deadline=None)
def test_smith_identity_and_unimodularity(A):
    d = intlin.smith_decompose(A)
    assert intlin.matmul(intlin.matmul(d.U, A), d.V) == d.S
    assert abs(intlin.determinant(d.U)) == 1
    assert abs(intlin.determinant(d.V)) == 1
    assert intlin.matmul(d.U, d.U_inv) == intlin.identity(len(A))
    assert intlin.matmul(d.V, d.V_inv) == intlin.identity(len(A[0]))
    fs = d.invariant_factors
    assert all(b % a == 0 for a, b in zip(fs, fs[1:]))
    assert list(fs) == invariant_factors(A)
    assert d.rank == matrix_rank(A)


# --- cokernel ----------------------------------------------------------------


def test_cokernel_p2_div():
    c = intlin.cokernel([[1, 0], [0, 1], [-1, -1]])
    assert c.free_rank == 1 and c.torsion == ()
    classes = {c.apply(e)[1] for e in ([1, 0, 0], [0, 1, 0], [0, 0, 1])}
    assert len(classes) == 1 and classes.pop() in {(1,), (-1,)}


def test_cokernel_of_identity():
    assert intlin.cokernel([[1, 0], [0, 1]]).free_rank == 0


def test_cokernel_h2_div():
    # Div for H_2: columns are the two coordinate functionals on the rays
    div = [[1, 0], [0, 1], [-1, 2], [0, -1]]
    c = intlin.cokernel(div)
    assert c.free_rank == 2 and c.torsion == ()
    for m in ([1, 0], [0, 1], [3, -7]):
        assert c.apply(intlin.matvec(div, m))[1] == (0, 0)


@given(matrices(), st.lists(small, min_size=4, max_size=4))
@settings(max_examples=60, deadline=None)
def test_cokernel_kills_image(A, m):
    c = intlin.cokernel(A)
    img = intlin.matvec(A, m[: len(A[0])])
    tors, free = c.apply(img)
    assert not any(free)
    assert all(t % q == 0 for t, q in zip(tors, c.torsion))


# --- membership and dilation -------------------------------------------------

L_EXAMPLE = [[-2, 0], [1, 1]]  # columns (-2,1) and (0,1)


def test_membership_examples():
    assert intlin.lattice_membership(L_EXAMPLE, (1, 0)) is None
    assert intlin.lattice_membership(L_EXAMPLE, (2, -1)) == (-1, 0)
    assert intlin.lattice_membership(L_EXAMPLE, (0, 0)) == (0, 0)


def test_membership_dimension_mismatch():
    with pytest.raises(ValueError):
        intlin.lattice_membership(L_EXAMPLE, (1, 2, 3))


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=3), st.data())
@settings(max_examples=80, deadline=None)
def test_membership_recovers_coefficients(cols, data):
    if matrix_rank(cols) < len(cols):
        return
    L = intlin.from_columns(cols, 3)
    c = data.draw(st.lists(small, min_size=len(cols), max_size=len(cols)))
    v = intlin.matvec(L, c)
    assert intlin.lattice_membership(L, v) == tuple(c)


def test_dilation_examples():
    assert intlin.minimal_dilation([[2, 0], [0, 1]], (1, 0)) == 2
    assert intlin.minimal_dilation(intlin.identity(2), (3, 5)) == 1


def test_dilation_rejects_zero_and_outside_span():
    with pytest.raises(ValueError):
        intlin.minimal_dilation(intlin.identity(2), (0, 0))
    with pytest.raises(ValueError):
        intlin.minimal_dilation([[1], [0]], (0, 1))


@given(st.lists(st.lists(small, min_size=2, max_size=2), min_size=2, max_size=2),
       st.lists(small, min_size=2, max_size=2), st.integers(1, 5))
@settings(max_examples=80, deadline=None)
def test_dilation_divisibility(cols, v, k):
    if matrix_rank(cols) < 2 or not any(v):
        return
    L = intlin.from_columns(cols, 2)
    lam = intlin.minimal_dilation(L, v)
    assert intlin.lattice_membership(L, [lam * x for x in v]) is not None
    assert all(intlin.lattice_membership(L, [j * x for x in v]) is None for j in range(1, lam))
    assert lam % intlin.minimal_dilation(L, [k * x for x in v]) == 0
    assert intlin.minimal_dilation(L, intlin.matvec(L, v)) == 1


# --- subgroup index ----------------------------------------------------------


def test_subgroup_index_examples():
    assert intlin.subgroup_index([(-2, 1), (0, 1)], 2) == (True, 2)
    assert intlin.subgroup_index([], 1) == (False, None)
    assert intlin.subgroup_index([(1, 0), (0, 1)], 2) == (True, 1)
    assert intlin.subgroup_index([], 0) == (True, 1)


@given(st.lists(st.lists(small, min_size=2, max_size=2), min_size=0, max_size=4))
@settings(max_examples=80, deadline=None)
def test_subgroup_index_matches_minors(vs):
    finite, idx = intlin.subgroup_index(vs, 2)
    expect = subgroup_index_brute(vs, 2)
    assert finite == (expect is not None)
    assert idx == expect


# --- feasibility ---------------------------------------------------------------


def test_feasibility_single_variable():
    pt = intlin.strict_cone_feasibility([], [[1]], [0], nvars=1)
    assert pt is not None and pt[0] > 0


def test_feasibility_contradiction():
    assert intlin.strict_cone_feasibility([[1]], [[1]], [0], nvars=1) is None


rows2 = st.lists(st.lists(st.integers(-3, 3), min_size=2, max_size=2), min_size=1, max_size=4)


@given(st.lists(st.lists(st.integers(-3, 3), min_size=2, max_size=2), max_size=1), rows2, st.data())
@settings(max_examples=120, deadline=None)
def test_feasibility_against_grid(eqs, nonneg, data):
    strict = data.draw(st.lists(st.integers(0, len(nonneg) - 1), max_size=len(nonneg), unique=True))
    pt = intlin.strict_cone_feasibility(eqs, nonneg, strict, nvars=2)
    if pt is not None:
        assert all(isinstance(x, Fraction) for x in pt)
        assert all(intlin.dot(r, pt) == 0 for r in eqs)
        assert all(intlin.dot(r, pt) >= 0 for r in nonneg)
        assert all(intlin.dot(nonneg[i], pt) > 0 for i in strict)
    if grid_feasible(eqs, nonneg, strict, 2) is not None:
        assert pt is not None


def test_rational_cone_flags():
    c = intlin.RationalCone.from_generators([(1, 0), (-2, 1), (0, 1)], 2)
    assert c.is_full_dimensional and c.is_pointed
    assert c.contains((-1, 1)) and not c.contains((0, -1))
    line = intlin.RationalCone.from_generators([(1, 0), (-1, 0)], 2)
    assert not line.is_pointed and not line.is_full_dimensional


def test_unimodular_transform_roundtrip():
    A = [(1, 0), (-2, 1), (1, 0), (0, 1)]
    G = [[1, 1], [0, 1]]
    B = [intlin.matvec(G, a) for a in A]
    assert intlin.unimodular_transform(A, B) == tuple(map(tuple, G))
    assert intlin.unimodular_transform(A, [(2 * x, y) for x, y in A]) is None
    assert intlin.matmul(G, intlin.inverse_unimodular(G)) == intlin.identity(2)


def test_integer_kernel_is_saturated():
    K = intlin.integer_kernel([[2, 4, 6]], 3)
    assert len(K) == 2
    assert all(intlin.dot([2, 4, 6], k) == 0 for k in K)
    # (1, 1, -1) is primitive in the kernel and must be an integer combination
    lat = intlin.IntLattice(K, 3)
    assert (1, 1, -1) in lat
