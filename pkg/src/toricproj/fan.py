"""Rational fans: validation, builtin families, star subdivision, simplicial completeness.

A cone is stored as the sorted tuple of indices of its rays; the zero cone
is the empty tuple and is always present.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property, cmp_to_key
from itertools import combinations
from typing import Iterator, Mapping, NamedTuple, Optional, Sequence

from . import intlin

Cone = tuple[int, ...]


class FanValidationError(ValueError):
    """Raised by :func:`validate_fan`; ``errors`` lists every violated axiom."""

    def __init__(self, errors: Sequence[str]):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


@dataclass(frozen=True)
class Fan:
    lattice_rank: int
    rays: tuple[tuple[int, ...], ...]
    cones: tuple[Cone, ...]
    name: Optional[str] = field(default=None, compare=False)

    @property
    def n_rays(self) -> int:
        return len(self.rays)

    @cached_property
    def cone_set(self) -> frozenset[Cone]:
        return frozenset(self.cones)

    @cached_property
    def maximal_cones(self) -> tuple[Cone, ...]:
        cs = [set(c) for c in self.cones]
        return tuple(c for c, s in zip(self.cones, cs) if not any(s < t for t in cs))

    def ray_vectors(self, cone: Sequence[int]) -> list[tuple[int, ...]]:
        return [self.rays[i] for i in cone]

    def cone_dim(self, cone: Sequence[int]) -> int:
        return intlin.rank(self.ray_vectors(cone))

    def is_cone_simplicial(self, cone: Sequence[int]) -> bool:
        return intlin.vectors_independent(self.ray_vectors(cone))

    def is_cone_smooth(self, cone: Sequence[int]) -> bool:
        vecs = self.ray_vectors(cone)
        if not vecs:
            return True
        if not intlin.vectors_independent(vecs):
            return False
        return all(d == 1 for d in intlin.smith_decompose(vecs).invariant_factors)

    @cached_property
    def support_spans(self) -> bool:
        return intlin.rank(self.rays) == self.lattice_rank

    @cached_property
    def is_simplicial(self) -> bool:
        return all(self.is_cone_simplicial(c) for c in self.maximal_cones)

    @cached_property
    def is_smooth(self) -> bool:
        return all(self.is_cone_smooth(c) for c in self.maximal_cones)

    def to_dict(self) -> dict:
        d = {
            "lattice_rank": self.lattice_rank,
            "rays": [list(r) for r in self.rays],
            "cones": [list(c) for c in self.maximal_cones],
        }
        if self.name:
            d["name"] = self.name
        return d

    def transformed(self, G: Sequence[Sequence[int]]) -> "Fan":
        """Apply an invertible integer matrix to every ray (a change of basis of N)."""
        if abs(intlin.determinant(G)) != 1:
            raise ValueError("change of basis must be unimodular")
        rays = [intlin.matvec(G, r) for r in self.rays]
        return validate_fan({"lattice_rank": self.lattice_rank, "rays": rays, "cones": self.maximal_cones})

    def permuted(self, perm: Sequence[int]) -> "Fan":
        """Reorder rays so that new ray ``perm[i]`` is old ray ``i``."""
        rays = [None] * self.n_rays
        for old, new in enumerate(perm):
            rays[new] = self.rays[old]
        cones = [[perm[i] for i in c] for c in self.maximal_cones]
        return validate_fan({"lattice_rank": self.lattice_rank, "rays": rays, "cones": cones})


# ---------------------------------------------------------------------------
# validation


def _cone_faces(rays: Sequence[Sequence[int]], cone: Cone, dim: int) -> list[Cone]:
    vecs = [rays[i] for i in cone]
    if intlin.vectors_independent(vecs):
        return [c for k in range(len(cone) + 1) for c in combinations(cone, k)]
    faces = []
    for k in range(len(cone) + 1):
        for sub in combinations(range(len(cone)), k):
            rest = [i for i in range(len(cone)) if i not in sub]
            pt = intlin.strict_cone_feasibility([vecs[i] for i in sub], [vecs[i] for i in rest],
                                                range(len(rest)), nvars=dim)
            if pt is not None:
                faces.append(tuple(cone[i] for i in sub))
    return faces


def _separated(rays, a: Cone, b: Cone, dim: int) -> bool:
    common = sorted(set(a) & set(b))
    only_a = [rays[i] for i in a if i not in common]
    only_b = [[-x for x in rays[i]] for i in b if i not in common]
    rows = only_a + only_b
    return intlin.strict_cone_feasibility([rays[i] for i in common], rows, range(len(rows)), nvars=dim) is not None


def validate_fan(candidate) -> Fan:
    """Check the fan axioms and return a face-closed :class:`Fan`.

    ``candidate`` is a :class:`Fan` or a mapping with ``lattice_rank``,
    ``rays`` and ``cones`` (maximal cones suffice). Raises
    :class:`FanValidationError` listing every problem found.
    """
    if isinstance(candidate, Fan):
        name = candidate.name
        candidate = candidate.to_dict()
    else:
        name = candidate.get("name") if isinstance(candidate, Mapping) else None
    errors: list[str] = []
    try:
        dim = candidate["lattice_rank"]
        raw_rays = candidate["rays"]
        raw_cones = candidate["cones"]
    except (KeyError, TypeError) as exc:
        raise FanValidationError([f"missing field {exc}"]) from None
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise FanValidationError([f"lattice_rank must be a positive integer, got {dim!r}"])

    rays: list[tuple[int, ...]] = []
    for i, r in enumerate(raw_rays):
        try:
            v = intlin.as_matrix([r], ncols=dim)[0]
        except (TypeError, ValueError):
            errors.append(f"ray {i}: expected {dim} integers, got {r!r}")
            rays.append(tuple([0] * dim))
            continue
        if not any(v):
            errors.append(f"ray {i}: zero vector")
        elif not intlin.is_primitive(v):
            errors.append(f"ray {i} not primitive: {list(v)}")
        rays.append(v)
    seen: dict = {}
    for i, v in enumerate(rays):
        if any(v) and v in seen:
            errors.append(f"ray {i} duplicates ray {seen[v]}")
        seen.setdefault(v, i)

    cones: list[Cone] = []
    for k, c in enumerate(raw_cones):
        try:
            idx = [int(i) for i in c]
        except (TypeError, ValueError):
            errors.append(f"cone {k}: expected a list of ray indices, got {c!r}")
            continue
        if any(isinstance(i, bool) or not isinstance(i, int) for i in c) or any(i < 0 or i >= len(rays) for i in idx):
            errors.append(f"cone {k}: ray index out of range in {list(c)}")
            continue
        if len(set(idx)) != len(idx):
            errors.append(f"cone {k}: repeated ray index in {list(c)}")
            continue
        cones.append(tuple(sorted(idx)))
    if errors:
        raise FanValidationError(errors)

    cones = sorted(set(cones))
    faces: set[Cone] = {()}
    good: list[Cone] = []
    for c in cones:
        vecs = [rays[i] for i in c]
        if c and intlin.strict_cone_feasibility([], vecs, range(len(vecs)), nvars=dim) is None:
            errors.append(f"cone {list(c)} not strongly convex")
            continue
        fs = _cone_faces(rays, c, dim)
        bad = [i for i in c if (i,) not in fs]
        if bad:
            errors.append(f"cone {list(c)}: rays {bad} are not extremal")
            continue
        faces.update(fs)
        good.append(c)
    for a, b in combinations(good, 2):
        if not _separated(rays, a, b, dim):
            errors.append(f"cones {list(a)} and {list(b)} do not meet in a common face")
    if errors:
        raise FanValidationError(errors)
    faces.update((i,) for i in range(len(rays)))
    return Fan(dim, tuple(rays), tuple(sorted(faces, key=lambda c: (len(c), c))), name)


# ---------------------------------------------------------------------------
# reports


def _angle_cmp(u, v) -> int:
    hu = 0 if (u[1] > 0 or (u[1] == 0 and u[0] > 0)) else 1
    hv = 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1
    if hu != hv:
        return hu - hv
    cross = u[0] * v[1] - u[1] * v[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def angular_order(fan: Fan) -> list[int]:
    """Ray indices of a rank-2 fan sorted counterclockwise from the positive x axis."""
    if fan.lattice_rank != 2:
        raise ValueError("angular order needs a rank-2 lattice")
    return sorted(range(fan.n_rays), key=cmp_to_key(lambda i, j: _angle_cmp(fan.rays[i], fan.rays[j])))


def is_complete(fan: Fan) -> Optional[bool]:
    """``True``/``False`` when decidable, ``None`` for "unknown" in rank >= 3."""
    n = fan.lattice_rank
    maxc = fan.maximal_cones
    if any(fan.cone_dim(c) < n for c in maxc):
        return False
    if n == 1:
        return {(1,), (-1,)} <= set(fan.rays)
    if n == 2:
        order = angular_order(fan)
        if len(order) < 3:
            return False
        cs = fan.cone_set
        for a, b in zip(order, order[1:] + order[:1]):
            u, v = fan.rays[a], fan.rays[b]
            if u[0] * v[1] - u[1] * v[0] <= 0 or tuple(sorted((a, b))) not in cs:
                return False
        return True
    count: dict[Cone, int] = {}
    for c in fan.cones:
        if fan.cone_dim(c) == n - 1:
            count[c] = 0
    for m in maxc:
        for f in count:
            if set(f) <= set(m):
                count[f] += 1
    if any(v == 1 for v in count.values()):
        return False
    if count and all(v == 2 for v in count.values()):
        return True
    return None


@dataclass(frozen=True)
class FanReport:
    support_spans: bool
    simplicial: bool
    smooth: bool
    complete: Optional[bool]
    n_rays: int
    n_maximal_cones: int
    n_cones: int
    violations: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "support_spans": self.support_spans, "simplicial": self.simplicial,
            "smooth": self.smooth, "complete": self.complete, "n_rays": self.n_rays,
            "n_maximal_cones": self.n_maximal_cones, "n_cones": self.n_cones,
            "violations": list(self.violations),
        }


def fan_report(fan: Fan) -> FanReport:
    violations = []
    if not fan.support_spans:
        violations.append("support of the fan does not span N_R")
    return FanReport(
        support_spans=fan.support_spans, simplicial=fan.is_simplicial, smooth=fan.is_smooth,
        complete=is_complete(fan), n_rays=fan.n_rays, n_maximal_cones=len(fan.maximal_cones),
        n_cones=len(fan.cones), violations=tuple(violations),
    )


# ---------------------------------------------------------------------------
# builtin fans


def projective_space(n: int) -> Fan:
    if n < 1:
        raise ValueError("projective space needs n >= 1")
    rays = [tuple(int(i == j) for j in range(n)) for i in range(n)] + [tuple([-1] * n)]
    cones = list(combinations(range(n + 1), n))
    return validate_fan({"lattice_rank": n, "rays": rays, "cones": cones, "name": f"P^{n}"})


def hirzebruch(r: int) -> Fan:
    if r < 0:
        raise ValueError("Hirzebruch index must be >= 0")
    rays = [(1, 0), (0, 1), (-1, r), (0, -1)]
    cones = [(0, 1), (1, 2), (2, 3), (0, 3)]
    return validate_fan({"lattice_rank": 2, "rays": rays, "cones": cones, "name": f"H_{r}"})


def weighted_projective_space(*weights: int) -> Fan:
    """Fan of P(q_0, ..., q_n); rays are ordered ``n_1, ..., n_n, n_0`` with ``sum q_i n_i = 0``."""
    q = list(weights)
    n = len(q) - 1
    if n < 1 or any(isinstance(x, bool) or not isinstance(x, int) or x < 1 for x in q):
        raise ValueError(f"invalid weights {weights!r}")
    if intlin.vector_gcd(q) != 1:
        raise ValueError(f"weights {weights!r} are not coprime")
    for sub in combinations(q, n):
        if intlin.vector_gcd(sub) != 1:
            raise ValueError(f"weights {weights!r} are not well formed")
    if q[0] == 1:
        basis = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        n0 = tuple(-x for x in q[1:])
        rays = basis + [n0]
    else:
        # N = Z^{n+1} / Z q; snf gives U with U q = (1, 0, ..., 0)^T
        snf = intlin.smith_decompose([[x] for x in q])
        proj = snf.U[1:]
        images = [tuple(row[i] for row in proj) for i in range(n + 1)]
        rays = images[1:] + images[:1]
    cones = list(combinations(range(n + 1), n))
    name = "P(" + ",".join(map(str, q)) + ")"
    return validate_fan({"lattice_rank": n, "rays": rays, "cones": cones, "name": name})


def product(a: Fan, b: Fan) -> Fan:
    ra, rb = a.lattice_rank, b.lattice_rank
    rays = [tuple(r) + (0,) * rb for r in a.rays] + [(0,) * ra + tuple(r) for r in b.rays]
    cones = [tuple(ca) + tuple(a.n_rays + i for i in cb) for ca in a.maximal_cones for cb in b.maximal_cones]
    name = f"{a.name}x{b.name}" if a.name and b.name else None
    return validate_fan({"lattice_rank": ra + rb, "rays": rays, "cones": cones, "name": name})


def displaced_cube() -> Fan:
    """Complete non-simplicial 3-D fan over the faces of a cube, with vertex (1,1,1) moved to (1,2,3)."""
    verts = [(x, y, z) for x in (1, -1) for y in (1, -1) for z in (1, -1)]
    rays = [(1, 2, 3) if v == (1, 1, 1) else v for v in verts]
    cones = []
    for axis in range(3):
        for s in (1, -1):
            cones.append([i for i, v in enumerate(verts) if v[axis] == s])
    return validate_fan({"lattice_rank": 3, "rays": rays, "cones": cones, "name": "displaced-cube"})


def builtin_fan(name: str, *params: int) -> Fan:
    """Named fans: ``p`` (P^n), ``hirzebruch`` (H_r), ``wps`` (weighted), ``displaced-cube``."""
    key = name.lower()
    if key in ("p", "projective"):
        if len(params) != 1:
            raise ValueError("p takes exactly one parameter n")
        return projective_space(params[0])
    if key in ("hirzebruch", "h"):
        if len(params) != 1:
            raise ValueError("hirzebruch takes exactly one parameter r")
        return hirzebruch(params[0])
    if key in ("wps", "weighted"):
        return weighted_projective_space(*params)
    if key in ("displaced-cube", "cube"):
        return displaced_cube()
    raise ValueError(f"unknown builtin fan {name!r}")


# ---------------------------------------------------------------------------
# operations


def star_subdivision(fan: Fan, cone: Sequence[int]) -> Fan:
    """Blow up the torus-fixed point of a smooth 2-dimensional cone of a rank-2 fan."""
    c = tuple(sorted(cone))
    if fan.lattice_rank != 2 or len(c) != 2:
        raise ValueError("star subdivision is implemented for 2-dimensional cones of rank-2 fans")
    if c not in fan.cone_set:
        raise ValueError(f"cone {list(c)} is not in the fan")
    if not fan.is_cone_smooth(c):
        raise ValueError(f"cone {list(c)} is not smooth")
    i, j = c
    new = tuple(a + b for a, b in zip(fan.rays[i], fan.rays[j]))
    k = fan.n_rays
    # subdividing a smooth cone keeps every fan axiom, so skip re-validation
    cones = set(fan.cones) - {c}
    cones |= {(k,), (i, k), (j, k)}
    return Fan(2, fan.rays + (new,), tuple(sorted(cones, key=lambda x: (len(x), x))))


def independent_subsets(fan: Fan) -> Iterator[Cone]:
    """Linearly independent ray subsets, empty set included, in lexicographic order."""

    def walk(current: list[int]):
        yield tuple(current)
        for nxt in range((current[-1] + 1) if current else 0, fan.n_rays):
            cand = current + [nxt]
            if intlin.vectors_independent(fan.ray_vectors(cand)):
                yield from walk(cand)

    yield from walk([])


class SimplicialCompleteness(NamedTuple):
    complete: bool
    missing: list[Cone]


def is_simplicially_complete(fan: Fan) -> SimplicialCompleteness:
    if not fan.is_simplicial:
        raise ValueError("simplicial completeness is defined for simplicial fans only")
    cs = fan.cone_set
    missing = [s for s in independent_subsets(fan) if s not in cs]
    return SimplicialCompleteness(not missing, missing)


def random_smooth_surface(rng: random.Random, max_rays: int = 10) -> Fan:
    """Blow up P^2 or some H_r (r <= 3) at random torus-fixed points."""
    start = rng.choice(["p2", 0, 1, 2, 3])
    fan = projective_space(2) if start == "p2" else hirzebruch(start)
    target = rng.randint(fan.n_rays, max_rays)
    while fan.n_rays < target:
        two_cones = [c for c in fan.maximal_cones if len(c) == 2]
        fan = star_subdivision(fan, rng.choice(two_cones))
    return fan
