"""The Pic-graded polynomial model ``C[x_rho]`` of the support-function algebra.

Variable ``x_rho`` stands for the ray function ``K_rho``. For smooth fans
the model is exact; for simplicial fans that are not smooth the nonnegative
support functions may need more generators than the ``K_rho`` (for
instance ``(1, 0, 1)`` on P(1,1,2)), and the model carries a warning.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, NamedTuple, Optional, Sequence

from . import intlin
from .fan import Cone, Fan
from .suppfun import (
    AssumptionViolation,
    PicData,
    RayFunction,
    SFLattice,
    monoid_irreducibles_box,
    picard,
    ray_functions,
    support_function_lattice,
    weight_cone,
)

MONOMIAL_CHART_NOTE = (
    "charts of Proj_MH are modelled by square-free relevant monomials; "
    "that these cover Proj_MH is assumed, not computed"
)


class NotRelevant(ValueError):
    pass


@dataclass(frozen=True)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be nonnegative")

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> "Monomial":
        s = set(support)
        return cls(tuple(int(i in s) for i in range(n)))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e)

    def squarefree(self) -> "Monomial":
        return Monomial(tuple(min(e, 1) for e in self.exponents))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __str__(self):
        parts = [f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(self.exponents) if e]
        return "*".join(parts) or "1"


@dataclass(frozen=True)
class CoxModel:
    fan: Fan
    sf: SFLattice
    pic: PicData
    ray_functions: tuple[RayFunction, ...]
    degrees: tuple[tuple[int, ...], ...]
    model_kind: str  # "exact" or "polynomial-model"
    warnings: tuple[str, ...] = ()
    extra_irreducibles: tuple[tuple[int, ...], ...] = field(default=(), repr=False)

    @property
    def n_vars(self) -> int:
        return self.fan.n_rays

    @property
    def pic_rank(self) -> int:
        return self.pic.free_rank

    @property
    def krull_dimension(self) -> int:
        return self.n_vars

    @property
    def dilations(self) -> tuple[int, ...]:
        return tuple(rf.dilation for rf in self.ray_functions)

    def degree(self, m: Monomial) -> tuple[int, ...]:
        out = [0] * self.pic_rank
        for e, d in zip(m.exponents, self.degrees):
            if e:
                out = [a + e * b for a, b in zip(out, d)]
        return tuple(out)

    def weight_cone(self) -> intlin.RationalCone:
        return weight_cone(self.pic, self.ray_functions)


def cox_model(fan: Fan, monoid_bound: int = 3, pic_basis: Optional[Sequence[Sequence[int]]] = None) -> CoxModel:
    """Build the graded model; raises :class:`AssumptionViolation` when a hypothesis fails.

    ``pic_basis`` optionally pins the Pic basis by giving the wanted degree
    of every variable; it must differ from the computed one by a unimodular
    change of basis.
    """
    violations = []
    if not fan.support_spans:
        violations.append("support of the fan does not span N_R")
    if not fan.is_simplicial:
        violations.append("fan is not simplicial")
    if violations:
        raise AssumptionViolation(violations)
    sf = support_function_lattice(fan)
    pic = picard(sf)
    if not pic.is_free:
        raise AssumptionViolation([f"Pic has torsion {list(pic.torsion)}"])
    rfs = ray_functions(sf)
    degrees = tuple(pic.degree_of_coordinates(rf.coordinates) for rf in rfs)
    if pic_basis is not None:
        G = intlin.unimodular_transform(degrees, pic_basis)
        if G is None:
            raise ValueError("requested Pic basis is not a unimodular change of the computed one")
        pic = pic.rebased(G)
        degrees = tuple(pic.degree_of_coordinates(rf.coordinates) for rf in rfs)

    warnings: list[str] = []
    extra: tuple = ()
    if fan.is_smooth:
        kind = "exact"
    else:
        kind = "polynomial-model"
        expected = {rf.values for rf in rfs}
        found = monoid_irreducibles_box(sf, monoid_bound)
        extra = tuple(v for v in found if v not in expected)
        msg = "fan is simplicial but not smooth: the ray functions K_rho are used as polynomial generators"
        if extra:
            msg += (f"; the nonnegative support functions have extra irreducibles {[list(v) for v in extra]}"
                    f" (box bound {monoid_bound}), so the polynomial model differs from the monoid algebra")
        warnings.append(msg)
    return CoxModel(fan, sf, pic, rfs, degrees, kind, tuple(warnings), extra)


# ---------------------------------------------------------------------------
# relevance and charts


class Relevance(NamedTuple):
    relevant: bool
    index: Optional[int]  # None: infinite index
    independent_complement: bool


def _degree_index(model: CoxModel, support: Sequence[int]) -> intlin.SubgroupIndex:
    return intlin.subgroup_index([model.degrees[i] for i in support], model.pic_rank)


def is_relevant(model: CoxModel, m: Monomial) -> Relevance:
    """Degree criterion (finite index of the degree subgroup) and the complement-independence test."""
    supp = m.support
    idx = _degree_index(model, supp)
    comp = [model.fan.rays[i] for i in range(model.n_vars) if i not in supp]
    indep = intlin.vectors_independent(comp)
    assert idx.finite == indep, f"relevance criteria disagree on {m}"
    return Relevance(idx.finite, idx.index, indep)


@dataclass(frozen=True)
class Chart:
    """``D_+(f)`` for a relevant square-free monomial ``f``, keyed by its complement."""

    key: Cone
    support: tuple[int, ...]
    index: int

    @property
    def cone(self) -> Cone:
        return self.key

    def monomial(self, n: int) -> Monomial:
        return Monomial.from_support(n, self.support)

    def to_dict(self, n: int) -> dict:
        return {"complement": list(self.key), "monomial": str(self.monomial(n)), "index": self.index}


def chart(model: CoxModel, m: Monomial) -> Chart:
    if any(e > 1 for e in m.exponents):
        m = m.squarefree()
    supp = m.support
    idx = _degree_index(model, supp)
    if not idx.finite:
        raise NotRelevant(f"{m} is not relevant")
    key = tuple(i for i in range(model.n_vars) if i not in supp)
    return Chart(key, supp, idx.index)


def degree_lattice(model: CoxModel, ch: Chart) -> intlin.IntLattice:
    """``D_f``: the subgroup of Pic generated by the degrees of the variables of the chart monomial."""
    return intlin.IntLattice([model.degrees[i] for i in ch.support], model.pic_rank)


def chart_of_cone(model: CoxModel, cone: Sequence[int]) -> Chart:
    """Chart of ``prod_{rho not in cone} x_rho``; its cone is ``cone`` itself."""
    cone = tuple(sorted(cone))
    if cone not in model.fan.cone_set:
        raise ValueError(f"{list(cone)} is not a cone of the fan")
    return chart(model, Monomial.from_support(model.n_vars, [i for i in range(model.n_vars) if i not in cone]))


def relevant_squarefree_complements(model: CoxModel) -> list[Cone]:
    """Complements ``S`` of the relevant square-free monomials, by the degree criterion only."""
    k, p = model.n_vars, model.pic_rank
    out = []
    for size in range(0, k - p + 1):
        for S in combinations(range(k), size):
            supp = [i for i in range(k) if i not in S]
            if intlin.rank([model.degrees[i] for i in supp]) == p:
                out.append(S)
    return sorted(out)


@dataclass(frozen=True)
class DegreeZeroReport:
    cone: Cone
    box_bound: int
    checked: int
    in_dual_cone: int
    counterexamples: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict:
        return {"cone": list(self.cone), "box_bound": self.box_bound, "checked": self.checked,
                "in_dual_cone": self.in_dual_cone, "counterexamples": [list(m) for m in self.counterexamples]}


def chart_degree_zero_monoid(model: CoxModel, ch: Chart, box_bound: int) -> DegreeZeroReport:
    """Compare ``sigma^dual cap M`` with degree-zero monomials of the chart on a box of ``M``.

    ``m`` lies in the dual cone iff ``u_rho = <m, n_rho> / lambda_rho`` is
    integral with ``u_rho >= 0`` on the rays of the cone; every ``m`` where
    the two sides disagree is reported.
    """
    fan = model.fan
    if ch.key not in fan.cone_set:
        raise ValueError("chart does not come from a cone of the fan")
    n = fan.lattice_rank
    checked = inside = 0
    bad = []
    rng = range(-box_bound, box_bound + 1)
    for m in _box(n, rng):
        checked += 1
        vals = [intlin.dot(m, r) for r in fan.rays]
        in_dual = all(vals[i] >= 0 for i in ch.key)
        integral = all(v % lam == 0 for v, lam in zip(vals, model.dilations))
        in_chart = integral and all(vals[i] >= 0 for i in ch.key)
        inside += in_dual
        if in_dual != in_chart:
            bad.append(tuple(m))
    return DegreeZeroReport(ch.key, box_bound, checked, inside, tuple(bad))


def _box(n, rng):
    if n == 0:
        yield ()
        return
    for head in rng:
        for tail in _box(n - 1, rng):
            yield (head,) + tail


@dataclass(frozen=True)
class LineBundleLocus:
    twist: tuple[int, ...]
    flags: dict  # chart key -> bool
    tproj_all: bool
    projmh_all: bool

    def to_dict(self) -> dict:
        return {
            "twist": list(self.twist),
            "charts": [{"complement": list(k), "line_bundle": v} for k, v in sorted(self.flags.items())],
            "tproj_all": self.tproj_all, "projmh_all": self.projmh_all,
        }


def twist_line_bundle_locus(model: CoxModel, d: Sequence[int], charts: Optional[Iterable[Chart]] = None) -> LineBundleLocus:
    """Where ``O(d)`` is a line bundle: ``d`` must lie in the chart's degree lattice.

    ``charts`` defaults to every chart of Proj_MH; the two conjunctions are
    always taken over the full atlases.
    """
    d = tuple(d)
    if len(d) != model.pic_rank:
        raise ValueError(f"twist must have {model.pic_rank} coordinates")
    all_keys = relevant_squarefree_complements(model)
    cache = {}

    def ok(key):
        if key not in cache:
            supp = [i for i in range(model.n_vars) if i not in key]
            lat = intlin.IntLattice([model.degrees[i] for i in supp], model.pic_rank)
            cache[key] = d in lat
        return cache[key]

    keys = [c.key for c in charts] if charts is not None else all_keys
    flags = {k: ok(k) for k in keys}
    return LineBundleLocus(
        d, flags,
        tproj_all=all(ok(c) for c in model.fan.cones),
        projmh_all=all(ok(k) for k in all_keys),
    )
