import random
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricproj import (
    FanValidationError,
    builtin_fan,
    fan_report,
    hirzebruch,
    independent_subsets,
    is_complete,
    is_simplicially_complete,
    picard,
    projective_space,
    random_smooth_surface,
    star_subdivision,
    support_function_lattice,
    validate_fan,
    weighted_projective_space,
)
from toricproj.fan import angular_order, displaced_cube
from oracles import independent_subsets_brute

P2_DATA = {"lattice_rank": 2, "rays": [[1, 0], [0, 1], [-1, -1]], "cones": [[0, 1], [1, 2], [0, 2]]}


def _errors(data):
    with pytest.raises(FanValidationError) as exc:
        validate_fan(data)
    return exc.value.errors


def test_p2_face_closure():
    f = validate_fan(P2_DATA)
    assert len(f.cones) == 7
    assert f == projective_space(2)


def test_non_primitive_ray():
    errs = _errors({"lattice_rank": 2, "rays": [[2, 0], [0, 1]], "cones": [[0, 1]]})
    assert any("not primitive" in e for e in errs)


def test_line_is_not_strongly_convex():
    errs = _errors({"lattice_rank": 2, "rays": [[1, 0], [-1, 0]], "cones": [[0, 1]]})
    assert any("not strongly convex" in e for e in errs)


def test_overlapping_cones_rejected():
    data = {"lattice_rank": 2, "rays": [[1, 0], [0, 1], [1, 1]], "cones": [[0, 1], [0, 2]]}
    assert any("common face" in e for e in _errors(data))


def test_non_extremal_ray_rejected():
    data = {"lattice_rank": 2, "rays": [[1, 0], [0, 1], [1, 1]], "cones": [[0, 1, 2]]}
    assert any("not extremal" in e for e in _errors(data))


def test_every_error_is_listed():
    data = {"lattice_rank": 2, "rays": [[2, 0], [0, 0], [0, 1], [0, 1]], "cones": [[0, 7]]}
    errs = _errors(data)
    assert len(errs) >= 4


@pytest.mark.parametrize("bad", [{"rays": []}, {"lattice_rank": 0, "rays": [], "cones": []},
                                 {"lattice_rank": 2, "rays": [[1]], "cones": []},
                                 {"lattice_rank": 2, "rays": [[1, 0]], "cones": [[True]]}])
def test_malformed_input(bad):
    with pytest.raises(FanValidationError):
        validate_fan(bad)


def test_builtins():
    assert hirzebruch(0).rays == ((1, 0), (0, 1), (-1, 0), (0, -1))
    assert builtin_fan("p", 2) == projective_space(2)
    w = weighted_projective_space(1, 1, 2)
    assert w.rays == ((1, 0), (0, 1), (-1, -2))
    assert len(w.maximal_cones) == 3 and all(len(c) == 2 for c in w.maximal_cones)
    assert projective_space(3).n_rays == 4 and is_complete(projective_space(3))


@pytest.mark.parametrize("weights", [(1, 1, 2), (1, 2, 3), (2, 3, 5), (1, 1, 1, 2)])
def test_weighted_relation(weights):
    f = weighted_projective_space(*weights)
    assert f.is_simplicial and is_complete(f) is not False
    # some matching of weights to rays gives sum q_i n_i = 0
    assert any(
        not any(sum(q * r[t] for q, r in zip(qs, f.rays)) for t in range(f.lattice_rank))
        for qs in permutations(weights)
    )


def test_bad_weights():
    with pytest.raises(ValueError):
        weighted_projective_space(2, 2, 4)
    with pytest.raises(ValueError):
        weighted_projective_space(1, 0, 1)
    with pytest.raises(ValueError):
        builtin_fan("nope")


def test_displaced_cube_report():
    f = displaced_cube()
    rep = fan_report(f)
    assert len(f.cones) == 27
    assert rep.complete is True and not rep.simplicial


def test_blowups():
    b = star_subdivision(projective_space(2), (0, 1))
    assert b.n_rays == 4 and (1, 1) in b.rays and len(b.maximal_cones) == 4
    assert validate_fan(b) == b
    assert star_subdivision(hirzebruch(1), (0, 1)).n_rays == 5
    with pytest.raises(ValueError):
        star_subdivision(projective_space(2), (0,))
    with pytest.raises(ValueError):
        star_subdivision(weighted_projective_space(1, 1, 2), (0, 2))


def test_independent_subsets_counts():
    assert len(list(independent_subsets(projective_space(2)))) == 7
    assert len(list(independent_subsets(hirzebruch(0)))) == 9
    single = validate_fan({"lattice_rank": 2, "rays": [[1, 0]], "cones": [[0]]})
    assert len(list(independent_subsets(single))) == 2


def test_simplicial_completeness_examples():
    assert is_simplicially_complete(projective_space(2)) == (True, [])
    assert is_simplicially_complete(hirzebruch(0)) == (True, [])
    for r in range(1, 6):
        flag, missing = is_simplicially_complete(hirzebruch(r))
        assert not flag and missing == [(0, 2)]
        assert hirzebruch(r).rays[2] == (-1, r)
    with pytest.raises(ValueError):
        is_simplicially_complete(displaced_cube())


def test_completeness_tristate():
    half = validate_fan({"lattice_rank": 2, "rays": [[1, 0], [0, 1]], "cones": [[0, 1]]})
    assert is_complete(half) is False
    assert is_complete(hirzebruch(3)) is True
    assert angular_order(projective_space(2)) == [0, 1, 2]


# --- properties on random fans ----------------------------------------------

seeds = st.integers(0, 10**6)


@given(seeds)
@settings(max_examples=25, deadline=None)
def test_closure_idempotent(seed):
    f = random_smooth_surface(random.Random(seed), max_rays=8)
    assert validate_fan(f) == f
    assert validate_fan(validate_fan(f.to_dict())) == validate_fan(f.to_dict())


@given(seeds)
@settings(max_examples=25, deadline=None)
def test_independent_subsets_against_brute_force(seed):
    f = random_smooth_surface(random.Random(seed), max_rays=7)
    subsets = list(independent_subsets(f))
    assert sorted(subsets) == sorted(independent_subsets_brute(f.rays))
    assert set(f.cones) <= set(subsets)
    assert not set(is_simplicially_complete(f).missing) & f.cone_set


@given(seeds)
@settings(max_examples=20, deadline=None)
def test_surface_pic_rank(seed):
    f = random_smooth_surface(random.Random(seed), max_rays=9)
    assert is_complete(f) is True and f.is_smooth
    p = picard(support_function_lattice(f)).free_rank
    assert p == f.n_rays - 2
    assert (f.n_rays >= 5) == (p >= 3)


unimodular = st.sampled_from([((1, 0), (0, 1)), ((0, 1), (1, 0)), ((1, 1), (0, 1)), ((2, 1), (1, 1)),
                              ((-1, 0), (0, 1)), ((1, -3), (0, -1)), ((3, 2), (1, 1))])


@given(seeds, unimodular, st.randoms(use_true_random=False))
@settings(max_examples=25, deadline=None)
def test_simplicial_completeness_invariant(seed, G, rnd):
    f = random_smooth_surface(random.Random(seed), max_rays=8)
    perm = list(range(f.n_rays))
    rnd.shuffle(perm)
    g = f.permuted(perm).transformed(G)
    a = is_simplicially_complete(f)
    b = is_simplicially_complete(g)
    assert a.complete == b.complete
    assert sorted(tuple(sorted(perm[i] for i in S)) for S in a.missing) == sorted(b.missing)
