"""Compare the toric Proj with the multihomogeneous Proj of the same graded ring.

Both spaces are described by atlases of charts keyed by ray subsets: the
toric Proj by the cones of the fan, Proj_MH by the complements of all
relevant square-free monomials. ``mu`` is an isomorphism exactly when the
two key sets agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Optional, Sequence

from . import intlin
from .coxring import (
    MONOMIAL_CHART_NOTE,
    Chart,
    CoxModel,
    Monomial,
    chart,
    chart_of_cone,
    cox_model,
    relevant_squarefree_complements,
)
from .fan import Cone, Fan, fan_report, hirzebruch, is_complete, projective_space
from .suppfun import AssumptionViolation


def tproj_atlas(model: CoxModel) -> dict[Cone, Chart]:
    return {c: chart_of_cone(model, c) for c in sorted(model.fan.cones)}


def projmh_atlas(model: CoxModel) -> dict[Cone, Chart]:
    out = {}
    for S in relevant_squarefree_complements(model):
        supp = [i for i in range(model.n_vars) if i not in S]
        out[S] = chart(model, Monomial.from_support(model.n_vars, supp))
    return out


@dataclass(frozen=True)
class WitnessIdeal:
    """The prime ``(x_rho : rho in sigma)`` for a simplicial cone ``sigma`` missing from the fan."""

    cone: Cone
    generators: tuple[int, ...]
    extra_chart_support: tuple[int, ...]
    certificate: tuple[tuple[Cone, int], ...]  # (fan cone tau, generator dividing its chart monomial)

    def to_dict(self) -> dict:
        return {
            "cone": list(self.cone),
            "generators": [f"x{i + 1}" for i in self.generators],
            "generator_rays": list(self.generators),
            "extra_chart": str(Monomial.from_support(max(self.extra_chart_support + self.cone, default=-1) + 1,
                                                     self.extra_chart_support)),
            "certificate": [{"cone": list(t), "divisor": f"x{g + 1}"} for t, g in self.certificate],
        }


def witness_ideal(model: CoxModel, cone: Sequence[int]) -> WitnessIdeal:
    fan = model.fan
    cone = tuple(sorted(cone))
    if cone in fan.cone_set:
        raise ValueError(f"{list(cone)} is a cone of the fan; no witness exists")
    if not intlin.vectors_independent(fan.ray_vectors(cone)):
        raise ValueError(f"rays {list(cone)} are not linearly independent")
    gens = set(cone)
    f_support = tuple(i for i in range(model.n_vars) if i not in gens)
    assert not gens & set(f_support)
    cert = []
    for tau in fan.cones:
        g_support = [i for i in range(model.n_vars) if i not in tau]
        divisor = next((i for i in g_support if i in gens), None)
        if divisor is None:
            raise AssertionError(f"chart of cone {list(tau)} avoids every generator")
        cert.append((tau, divisor))
    return WitnessIdeal(cone, tuple(sorted(gens)), f_support, tuple(cert))


def verify_witness(model: CoxModel, w: WitnessIdeal) -> bool:
    """Both divisibility checks, recomputed from scratch."""
    n = model.n_vars
    f = Monomial.from_support(n, w.extra_chart_support)
    if any(f.exponents[i] for i in w.generators):
        return False
    for tau in model.fan.cones:
        g = Monomial.from_support(n, [i for i in range(n) if i not in tau])
        if not any(g.exponents[i] for i in w.generators):
            return False
    return True


@dataclass(frozen=True)
class ComparisonReport:
    fan_summary: dict
    assumptions: dict
    verdict: str
    is_isomorphism: Optional[bool]
    tproj_atlas: tuple[Cone, ...] = ()
    projmh_atlas: tuple[Cone, ...] = ()
    missing_cones: tuple[Cone, ...] = ()
    witnesses: tuple[WitnessIdeal, ...] = ()
    notes: tuple[str, ...] = ()
    pic_basis: tuple[tuple[int, ...], ...] = field(default=())
    degrees: tuple[tuple[int, ...], ...] = ()

    def to_dict(self) -> dict:
        return {
            "fan": self.fan_summary,
            "assumptions": self.assumptions,
            "verdict": self.verdict,
            "is_isomorphism": self.is_isomorphism,
            "tproj_atlas": [list(c) for c in self.tproj_atlas],
            "projmh_atlas": [list(c) for c in self.projmh_atlas],
            "missing_cones": [list(c) for c in self.missing_cones],
            "witnesses": [w.to_dict() for w in self.witnesses],
            "notes": list(self.notes),
            "pic_basis": [list(r) for r in self.pic_basis],
            "degrees": [list(d) for d in self.degrees],
        }


def _fan_summary(fan: Fan) -> dict:
    return {"name": fan.name, "lattice_rank": fan.lattice_rank, "rays": [list(r) for r in fan.rays],
            "maximal_cones": [list(c) for c in fan.maximal_cones]}


def compare(model: CoxModel) -> ComparisonReport:
    fan = model.fan
    t_atlas = tproj_atlas(model)
    p_atlas = projmh_atlas(model)
    missing = tuple(k for k in p_atlas if k not in t_atlas)
    assert set(t_atlas) <= set(p_atlas), "toric Proj chart missing from Proj_MH"
    iso = not missing
    return ComparisonReport(
        fan_summary=_fan_summary(fan),
        assumptions={"support_spans": True, "simplicial": True, "pic_free": True, "enough_cartier": True},
        verdict="isomorphism" if iso else "not an isomorphism",
        is_isomorphism=iso,
        tproj_atlas=tuple(t_atlas),
        projmh_atlas=tuple(p_atlas),
        missing_cones=missing,
        witnesses=tuple(witness_ideal(model, c) for c in missing),
        notes=model.warnings + (MONOMIAL_CHART_NOTE,) + (
            ("Pic has rank 0: every monomial is relevant",) if model.pic_rank == 0 else ()),
        pic_basis=model.pic.free_projection,
        degrees=model.degrees,
    )


def compare_fan(fan: Fan, **kwargs) -> ComparisonReport:
    """:func:`compare` on a fan; reports ``"assumption violated"`` instead of raising."""
    try:
        model = cox_model(fan, **kwargs)
    except AssumptionViolation as exc:
        rep = fan_report(fan)
        return ComparisonReport(
            fan_summary=_fan_summary(fan),
            assumptions={"support_spans": rep.support_spans, "simplicial": rep.simplicial,
                         "pic_free": None, "enough_cartier": None, "violations": exc.violations},
            verdict="assumption violated",
            is_isomorphism=None,
            notes=tuple(exc.violations),
        )
    return compare(model)


# ---------------------------------------------------------------------------
# surfaces


@dataclass(frozen=True)
class SurfaceClassification:
    is_isomorphism: bool
    n_rays: int
    pic_rank: int
    known_type: Optional[str]
    reasons: tuple[str, ...]
    missing_cones: tuple[Cone, ...]

    def to_dict(self) -> dict:
        return {"is_isomorphism": self.is_isomorphism, "n_rays": self.n_rays, "pic_rank": self.pic_rank,
                "known_type": self.known_type, "reasons": list(self.reasons),
                "missing_cones": [list(c) for c in self.missing_cones]}


def _equivalent_fans(a: Fan, b: Fan) -> bool:
    """Same fan up to a change of basis of N and reordering of rays."""
    if a.lattice_rank != b.lattice_rank or a.n_rays != b.n_rays or len(a.cones) != len(b.cones):
        return False
    for perm in permutations(range(a.n_rays)):
        G = intlin.unimodular_transform(a.rays, [b.rays[perm[i]] for i in range(a.n_rays)])
        if G is None:
            continue
        if {tuple(sorted(perm[i] for i in c)) for c in a.cones} == b.cone_set:
            return True
    return False


@lru_cache(maxsize=None)
def _reference_fan(name: str) -> Fan:
    return projective_space(2) if name == "P2" else hirzebruch(0)


def classify_surface(fan: Fan) -> SurfaceClassification:
    if fan.lattice_rank != 2 or not fan.is_smooth or is_complete(fan) is not True:
        raise ValueError("classify_surface needs a complete smooth fan in a rank-2 lattice")
    model = cox_model(fan)
    rep = compare(model)
    reasons = []
    known = None
    if fan.n_rays == 3 and _equivalent_fans(fan, _reference_fan("P2")):
        known = "P2"
    elif fan.n_rays == 4 and _equivalent_fans(fan, _reference_fan("P1xP1")):
        known = "P1xP1"
    elif fan.n_rays == 4:
        known = "H_r (r >= 1)"
    if known in ("P2", "P1xP1"):
        reasons.append(f"fan is {known} up to change of basis: simplicially complete")
        if not rep.is_isomorphism:
            raise AssertionError("P2 / P1xP1 fan reported as non-isomorphic")
    if model.pic_rank >= 3:
        reasons.append(f"rank Pic = {model.pic_rank} >= 3 ({fan.n_rays} rays): three rays lie in an open half-plane")
        if rep.is_isomorphism:
            raise AssertionError("rank Pic >= 3 but the atlases agree")
    if rep.missing_cones:
        reasons.append(f"simplicial cones missing from the fan: {[list(c) for c in rep.missing_cones]}")
    else:
        reasons.append("fan is simplicially complete")
    return SurfaceClassification(bool(rep.is_isomorphism), fan.n_rays, model.pic_rank, known,
                                 tuple(reasons), rep.missing_cones)
