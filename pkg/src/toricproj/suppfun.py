"""Support functions of a fan and the sequence ``0 -> M -> SF -> Pic -> 0``.

A support function is identified with its vector of values on the
primitive ray generators (this identification is injective because every
cone is generated by its rays). ``SF`` is therefore stored as a sublattice
of ``Z^{rays}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from math import lcm
from typing import Optional, Sequence

from . import intlin
from .fan import Cone, Fan


class AssumptionViolation(ValueError):
    """A standing hypothesis (spanning support, free Pic, simplicial, ...) fails."""

    def __init__(self, violations: Sequence[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class NoCartierFunction(ValueError):
    """No support function vanishes exactly on the rays of the given cone."""


@dataclass(frozen=True)
class SFLattice:
    fan: Fan
    lattice: intlin.IntLattice
    # maximal cone -> one integral functional per basis element
    cone_functionals: dict = field(repr=False)

    @property
    def basis(self) -> intlin.IntMatrix:
        """Basis vectors (values on rays), one per row."""
        return self.lattice.basis

    @property
    def basis_matrix(self) -> intlin.IntMatrix:
        """Values on rays as columns: ``n_rays x rank``."""
        return intlin.from_columns(self.basis, self.fan.n_rays)

    @property
    def rank(self) -> int:
        return self.lattice.rank

    def coordinates(self, values: Sequence[int]) -> Optional[tuple[int, ...]]:
        return self.lattice.coordinates(values)

    def __contains__(self, values) -> bool:
        return values in self.lattice

    def values(self, coords: Sequence[int]) -> tuple[int, ...]:
        return self.lattice.combination(coords)

    def functional(self, cone: Cone, coords: Sequence[int]) -> tuple[int, ...]:
        """The element ``m in M`` that agrees with the support function on ``cone``."""
        ms = self.cone_functionals[cone]
        n = self.fan.lattice_rank
        return tuple(sum(c * m[t] for c, m in zip(coords, ms)) for t in range(n))


def _saturation(vecs: Sequence[Sequence[int]], n: int):
    """Coefficients ``C`` of ``vecs`` in a basis of their saturated span, and an extension map."""
    snf = intlin.smith_decompose(vecs)
    r = snf.rank
    C = tuple(tuple(snf.U_inv[i][j] * snf.invariant_factors[j] for j in range(r)) for i in range(len(vecs)))
    return C, snf.V, r


def support_function_lattice(fan: Fan, require_spanning: bool = True) -> SFLattice:
    """Lattice of integral piecewise-linear functions on the fan, in ray-value coordinates.

    For each maximal cone the ray values must come from a functional that is
    integral on the lattice points of the cone's linear span; gluing along
    common faces is automatic in ray-value coordinates.
    """
    if require_spanning and not fan.support_spans:
        raise AssumptionViolation(["support of the fan does not span N_R"])
    k, n = fan.n_rays, fan.lattice_rank
    blocks = []
    for cone in fan.maximal_cones:
        C, V, r = _saturation(fan.ray_vectors(cone), n)
        blocks.append((cone, C, V, r))
    ncols = k + sum(b[3] for b in blocks)
    rows = []
    offset = k
    for cone, C, V, r in blocks:
        for pos, rho in enumerate(cone):
            row = [0] * ncols
            row[rho] = 1
            for j in range(r):
                row[offset + j] = -C[pos][j]
            rows.append(row)
        offset += r
    kernel = intlin.integer_kernel(rows, ncols)
    lattice = intlin.IntLattice([v[:k] for v in kernel], k)

    functionals = {}
    for cone, C, V, r in blocks:
        ms = []
        for b in lattice.basis:
            y = intlin.lattice_membership(C, [b[i] for i in cone]) if cone else ()
            m = intlin.matvec(V, list(y) + [0] * (n - r))
            ms.append(m)
        functionals[cone] = tuple(ms)
    return SFLattice(fan, lattice, functionals)


# ---------------------------------------------------------------------------
# ray functions


@dataclass(frozen=True)
class RayFunction:
    ray: int
    dilation: int
    coordinates: tuple[int, ...]
    values: tuple[int, ...]


def ray_function(sf: SFLattice, rho: int) -> RayFunction:
    """The primitive support function vanishing on every ray except ``rho``."""
    e = tuple(int(i == rho) for i in range(sf.fan.n_rays))
    try:
        lam = intlin.minimal_dilation(sf.basis_matrix, e)
    except ValueError as exc:
        raise ValueError(f"ray {rho}: indicator direction not in the span of SF") from exc
    values = tuple(lam * x for x in e)
    return RayFunction(rho, lam, sf.coordinates(values), values)


def ray_functions(sf: SFLattice) -> tuple[RayFunction, ...]:
    return tuple(ray_function(sf, rho) for rho in range(sf.fan.n_rays))


# ---------------------------------------------------------------------------
# Picard group


@dataclass(frozen=True)
class PicData:
    sf: SFLattice
    div_matrix: intlin.IntMatrix  # SF coordinates of Div(e_j), one column per j
    cokernel: intlin.Cokernel
    free_projection: intlin.IntMatrix  # SF coordinates -> Z^rank, rows are the printed basis

    @property
    def free_rank(self) -> int:
        return self.cokernel.free_rank

    @property
    def torsion(self) -> tuple[int, ...]:
        return self.cokernel.torsion

    @property
    def is_free(self) -> bool:
        return not self.torsion

    def div(self, m: Sequence[int]) -> tuple[int, ...]:
        """Ray values of the globally linear function ``m``."""
        return tuple(intlin.dot(m, r) for r in self.sf.fan.rays)

    def degree_of_coordinates(self, coords: Sequence[int]) -> tuple[int, ...]:
        return intlin.matvec(self.free_projection, coords)

    def degree(self, values: Sequence[int]) -> tuple[int, ...]:
        coords = self.sf.coordinates(values)
        if coords is None:
            raise ValueError(f"{list(values)} is not a support function")
        return self.degree_of_coordinates(coords)

    def torsion_class(self, values: Sequence[int]) -> tuple[int, ...]:
        return self.cokernel.apply(self.sf.coordinates(values))[0]

    def rebased(self, G: Sequence[Sequence[int]]) -> "PicData":
        """Same data with the Pic basis changed by the unimodular matrix ``G``."""
        if abs(intlin.determinant(G)) != 1:
            raise ValueError("Pic basis change must be unimodular")
        return PicData(self.sf, self.div_matrix, self.cokernel, intlin.matmul(G, self.free_projection))


def picard(sf: SFLattice) -> PicData:
    """Cokernel of ``Div: M -> SF``.

    When the fan is simplicial and Pic is free, the basis is normalised so
    that the degrees of the ray functions off the first suitable maximal cone
    become the standard basis vectors.
    """
    fan = sf.fan
    cols = []
    for j in range(fan.lattice_rank):
        e = [int(i == j) for i in range(fan.lattice_rank)]
        values = tuple(intlin.dot(e, r) for r in fan.rays)
        c = sf.coordinates(values)
        assert c is not None, "globally linear function outside SF"
        cols.append(c)
    div = intlin.from_columns(cols, sf.rank)
    coker = intlin.cokernel(div, nrows=sf.rank)
    proj = coker.free_projection
    if not coker.torsion and fan.is_simplicial and coker.free_rank:
        proj = _normalised_projection(sf, proj)
    return PicData(sf, div, coker, proj)


def _normalised_projection(sf: SFLattice, proj):
    fan = sf.fan
    p = len(proj)
    try:
        degs = [intlin.matvec(proj, rf.coordinates) for rf in ray_functions(sf)]
    except ValueError:
        return proj
    for cone in fan.maximal_cones:
        rest = [i for i in range(fan.n_rays) if i not in cone]
        if len(rest) != p:
            continue
        M = intlin.from_columns([degs[i] for i in rest], p)
        if abs(intlin.determinant(M)) == 1:
            return intlin.matmul(intlin.inverse_unimodular(M), proj)
    return proj


# ---------------------------------------------------------------------------
# Cartier data


def cone_support_function(sf: SFLattice, cone: Sequence[int], method: str = "auto") -> tuple[int, ...]:
    """Ray values of a support function vanishing exactly on the rays of ``cone``.

    ``method`` is ``"rays"`` (sum of ray functions, simplicial fans),
    ``"fm"`` (exact Fourier-Motzkin search) or ``"auto"``.
    """
    fan = sf.fan
    cone = tuple(sorted(cone))
    if cone not in fan.cone_set:
        raise ValueError(f"{list(cone)} is not a cone of the fan")
    if method == "auto":
        method = "rays" if fan.is_simplicial else "fm"
    if method == "rays":
        out = [0] * fan.n_rays
        for rho in range(fan.n_rays):
            if rho not in cone:
                out[rho] = ray_function(sf, rho).dilation
        return tuple(out)
    if method != "fm":
        raise ValueError(f"unknown method {method!r}")
    B = sf.basis_matrix
    zero = [B[rho] for rho in cone]
    strict = [rho for rho in range(fan.n_rays) if rho not in cone]
    pt = intlin.strict_cone_feasibility(zero, B, strict, nvars=sf.rank)
    if pt is None:
        raise NoCartierFunction(f"no support function has support exactly off cone {list(cone)}")
    den = 1
    for x in pt:
        den = lcm(den, x.denominator)
    coords = [int(x * den) for x in pt]
    g = intlin.vector_gcd(coords) or 1
    return sf.values([c // g for c in coords])


@dataclass(frozen=True)
class EnoughCartier:
    flags: dict
    holds: bool


def enough_cartier(sf: SFLattice, method: str = "auto") -> EnoughCartier:
    flags = {}
    for cone in sf.fan.cones:
        try:
            cone_support_function(sf, cone, method=method)
            flags[cone] = True
        except NoCartierFunction:
            flags[cone] = False
    return EnoughCartier(flags, all(flags.values()))


def weight_cone(pic: PicData, rayfns: Sequence[RayFunction]) -> intlin.RationalCone:
    """Cone in ``Pic_R`` spanned by the degrees of the ray functions."""
    gens = [pic.degree_of_coordinates(rf.coordinates) for rf in rayfns]
    return intlin.RationalCone.from_generators(gens, pic.free_rank)


def monoid_irreducibles_box(sf: SFLattice, bound: int) -> list[tuple[int, ...]]:
    """Irreducible elements of ``{v in SF : v >= 0}`` with all ray values at most ``bound``.

    Brute force over the box; any decomposition of a box element stays in the box.
    """
    if bound < 1:
        return []
    k = sf.fan.n_rays
    members = [v for v in iproduct(range(bound + 1), repeat=k) if any(v) and v in sf]
    member_set = set(members)
    out: list[tuple[int, ...]] = []
    # a reducible element has an irreducible summand, and summands have smaller total
    for v in sorted(members, key=sum):
        if not any(
            a != v and all(x <= y for x, y in zip(a, v)) and tuple(y - x for x, y in zip(a, v)) in member_set
            for a in out
        ):
            out.append(v)
    return sorted(out)


def dual_cone_contains(fan: Fan, cone: Sequence[int], m: Sequence[int]) -> bool:
    return all(intlin.dot(m, fan.rays[i]) >= 0 for i in cone)


def chart_coordinates(rayfns: Sequence[RayFunction], fan: Fan, m: Sequence[int]) -> tuple[Fraction, ...]:
    """``u_rho = <m, n_rho> / lambda_rho``."""
    return tuple(intlin.qdiv(intlin.dot(m, fan.rays[rf.ray]), rf.dilation) for rf in rayfns)
