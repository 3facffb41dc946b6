"""Acceptance criteria, one test per criterion.

A pass/fail line per criterion is printed at the end of the run by the
summary hook in conftest.py. Every comparison here is exact; the only
tolerances are wall-clock budgets (1 s per fan, 60 s per suite).
"""

import random
import time
from itertools import combinations

from conftest import CORPUS_SIZE, SESSION_START, named_fans
from oracles import dilation_brute
from test_lint import SRC, offences
from toricproj import (
    Monomial,
    compare_fan,
    cox_model,
    enough_cartier,
    hirzebruch,
    is_relevant,
    is_simplicially_complete,
    monoid_irreducibles_box,
    projective_space,
    ray_functions,
    star_subdivision,
    support_function_lattice,
    twist_line_bundle_locus,
    verify_witness,
    weighted_projective_space,
)
from toricproj import intlin
from toricproj.fan import displaced_cube, product

PER_FAN_SECONDS = 1
SUITE_SECONDS = 60


def _blowups():
    p2 = projective_space(2)
    b1 = star_subdivision(p2, (0, 1))
    b2 = star_subdivision(b1, (1, 2))
    b3 = star_subdivision(b2, (0, 2))
    out = {"Bl1 P2": b1, "Bl2 P2": b2, "Bl3 P2": b3}
    for r in range(4):
        out[f"Bl H{r}"] = star_subdivision(hirzebruch(r), (0, 1))
    return out


def test_ac01_surface_classification_table():
    p1 = projective_space(1)
    expected = {"P2": (projective_space(2), True), "P1xP1": (product(p1, p1), True)}
    for r in range(1, 6):
        expected[f"H{r}"] = (hirzebruch(r), False)
    for name, f in _blowups().items():
        expected[name] = (f, False)
    for name, (fan, iso) in expected.items():
        t = time.perf_counter()
        rep = compare_fan(fan)
        elapsed = time.perf_counter() - t
        assert rep.is_isomorphism is iso, name
        assert elapsed < PER_FAN_SECONDS, (name, elapsed)


def test_ac02_isomorphism_equals_simplicial_completeness(surface_corpus, corpus_reports):
    assert len(surface_corpus) >= CORPUS_SIZE >= 100
    assert len({f.rays for f in surface_corpus}) > 50  # the corpus is not degenerate
    for f, rep in zip(surface_corpus, corpus_reports):
        assert f.n_rays <= 10
        assert rep.is_isomorphism is is_simplicially_complete(f).complete


def test_ac03_surfaces_with_five_rays_fail(surface_corpus, corpus_reports):
    assert any(f.n_rays >= 5 for f in surface_corpus)
    for f, rep in zip(surface_corpus, corpus_reports):
        assert len(rep.degrees[0]) == f.n_rays - 2
        if f.n_rays >= 5:
            assert rep.is_isomorphism is False


def test_ac04_relevance_criteria_agree():
    fans = [projective_space(2), projective_space(3), weighted_projective_space(1, 1, 2)]
    fans += [hirzebruch(r) for r in range(4)]
    checked = 0
    for f in fans:
        m = cox_model(f)
        for k in range(f.n_rays + 1):
            for S in combinations(range(f.n_rays), k):
                rel = is_relevant(m, Monomial.from_support(f.n_rays, S))
                assert rel.relevant == rel.independent_complement
                checked += 1
    assert checked == 8 + 16 + 8 + 4 * 16


def test_ac05_exact_sequence():
    for name, f in named_fans().items():
        m = cox_model(f)
        pic, sf = m.pic, m.sf
        assert pic.is_free
        deg_div = intlin.matmul(pic.free_projection, pic.div_matrix)
        assert all(v == 0 for row in deg_div for v in row), name
        ker = intlin.IntLattice(intlin.integer_kernel(pic.free_projection, sf.rank), sf.rank)
        img = intlin.IntLattice(intlin.columns(pic.div_matrix, f.lattice_rank), sf.rank)
        assert ker == img, name
        assert sf.rank == f.lattice_rank + pic.free_rank, name


def test_ac06_cone_degrees_generate_pic():
    rng = random.Random(6)
    for name, f in named_fans().items():
        m = cox_model(f)
        for cone in f.cones:
            degs = [m.degrees[i] for i in range(f.n_rays) if i not in cone]
            assert intlin.subgroup_index(degs, m.pic_rank) == (True, 1), (name, cone)
        for _ in range(20):
            d = tuple(rng.randint(-10, 10) for _ in range(m.pic_rank))
            assert twist_line_bundle_locus(m, d, charts=[]).tproj_all, (name, d)


def test_ac07_line_bundle_separation_on_h2():
    m = cox_model(hirzebruch(2))
    assert [list(d) for d in m.degrees] == [[1, 0], [-2, 1], [1, 0], [0, 1]]
    loc = twist_line_bundle_locus(m, (1, 0))
    assert loc.tproj_all
    assert all(loc.flags[c] for c in m.fan.cones)
    assert loc.flags[(0, 2)] is False
    assert [m.fan.rays[i] for i in (0, 2)] == [(1, 0), (-1, 2)]
    assert is_relevant(m, Monomial.from_support(4, (1, 3))).index == 2


def test_ac08_dilations():
    for name, f in named_fans().items():
        lams = [rf.dilation for rf in ray_functions(support_function_lattice(f))]
        assert lams == [dilation_brute(f, rho) for rho in range(f.n_rays)], name
        if f.is_smooth:
            assert set(lams) == {1}, name
    w = weighted_projective_space(1, 1, 2)
    assert w.rays == ((1, 0), (0, 1), (-1, -2))
    sf = support_function_lattice(w)
    lams = [rf.dilation for rf in ray_functions(sf)]
    assert lams == [2, 1, 2]
    assert lams == [intlin.minimal_dilation(sf.basis_matrix, [int(i == r) for i in range(3)]) for r in range(3)]


def test_ac09_witness_soundness():
    fans = {f"H{r}": hirzebruch(r) for r in (1, 2, 3)}
    fans.update(_blowups())
    n_witnesses = 0
    for name, f in fans.items():
        m = cox_model(f)
        rep = compare_fan(f)
        assert rep.missing_cones, name
        for w in rep.witnesses:
            assert verify_witness(m, w), (name, w.cone)
            assert not set(w.generators) & set(w.extra_chart_support)
            for tau in f.cones:
                assert set(w.generators) - set(tau), (name, tau)
            n_witnesses += 1
    assert n_witnesses >= len(fans)


def test_ac10_enough_cartier():
    for name, f in named_fans().items():
        assert enough_cartier(support_function_lattice(f)).holds, name
    sf = support_function_lattice(displaced_cube())
    ec = enough_cartier(sf, method="fm")
    assert ec.flags[()] is False
    # no support function is nonnegative on all eight rays and positive on each
    assert intlin.strict_cone_feasibility([], sf.basis_matrix, range(8), nvars=sf.rank) is None


def test_ac11_monoid_oracle():
    for f in [projective_space(2)] + [hirzebruch(r) for r in range(3)]:
        units = sorted(tuple(int(i == j) for i in range(f.n_rays)) for j in range(f.n_rays))
        assert monoid_irreducibles_box(support_function_lattice(f), 3) == units
    w = weighted_projective_space(1, 1, 2)
    assert (1, 0, 1) in monoid_irreducibles_box(support_function_lattice(w), 3)
    m = cox_model(w)
    assert m.model_kind == "polynomial-model" and m.warnings
    assert any("not smooth" in n for n in compare_fan(w).notes)


def test_ac12_suite_runtime_and_no_floats():
    assert all(offences(p) == [] for p in SRC)
    elapsed = time.perf_counter() - SESSION_START[0]
    assert elapsed < SUITE_SECONDS, elapsed
