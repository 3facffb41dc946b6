"""Exact integer and rational linear algebra.

Matrices are tuples of row tuples of Python ints (arbitrary precision).
Rational work uses :class:`fractions.Fraction`. Nothing here touches
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, NamedTuple, Optional, Sequence

IntMatrix = tuple[tuple[int, ...], ...]
IntVector = tuple[int, ...]


def qdiv(a, b) -> Fraction:
    """Exact quotient ``a / b`` as a Fraction."""
    return Fraction(a) / Fraction(b)


def as_matrix(A: Iterable[Iterable[int]], ncols: Optional[int] = None) -> IntMatrix:
    """Normalise ``A`` to a rectangular tuple-of-tuples of ints."""
    rows = tuple(map(tuple, A))
    for row in rows:
        for x in row:
            if type(x) is not int:
                rows = tuple(tuple(_as_int(x) for x in row) for row in rows)
                break
        else:
            continue
        break
    if rows:
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("matrix is not rectangular")
        if ncols is not None and width != ncols:
            raise ValueError(f"expected {ncols} columns, got {width}")
    return rows


def _as_int(x) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        if isinstance(x, Fraction) and x.denominator == 1:
            return int(x)
        raise TypeError(f"expected an integer entry, got {x!r}")
    return x


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(A: Sequence[Sequence], ncols: Optional[int] = None) -> tuple:
    if not A:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*A))


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> tuple:
    Bt = transpose(B)
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


def matvec(A: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def columns(A: Sequence[Sequence], ncols: int) -> list[tuple]:
    """Columns of ``A``; ``ncols`` disambiguates matrices with no rows."""
    if not A:
        return [() for _ in range(ncols)]
    return [tuple(row[j] for row in A) for j in range(ncols)]


def from_columns(cols: Sequence[Sequence[int]], nrows: int) -> IntMatrix:
    return tuple(tuple(c[i] for c in cols) for i in range(nrows))


def vector_gcd(v: Iterable[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def is_primitive(v: Sequence[int]) -> bool:
    return vector_gcd(v) == 1


# ---------------------------------------------------------------------------
# Rational elimination


def _rref(A: Sequence[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    M = [[Fraction(x) for x in row] for row in A]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(A: Sequence[Sequence]) -> int:
    """Rank over the rationals."""
    if not A or not A[0]:
        return 0
    if not all(type(x) is int for row in A for x in row):
        return len(_rref(A, len(A[0]))[1])
    # fraction-free elimination on integer rows
    M = [list(row) for row in A]
    r = 0
    for c in range(len(M[0])):
        p = next((i for i in range(r, len(M)) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        pr = M[r]
        for i in range(r + 1, len(M)):
            a = M[i][c]
            if a:
                b = pr[c]
                row = [b * x - a * y for x, y in zip(M[i], pr)]
                g = vector_gcd(row)
                M[i] = [x // g for x in row] if g > 1 else row
        r += 1
        if r == len(M):
            break
    return r


def vectors_independent(vectors: Sequence[Sequence[int]]) -> bool:
    return rank(vectors) == len(vectors)


def determinant(A: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss, fraction free)."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(row) for row in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            p = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if p is None:
                return 0
            M[k], M[p] = M[p], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def rational_kernel(A: Sequence[Sequence], ncols: int) -> list[tuple[int, ...]]:
    """Basis of the rational null space of ``A``, scaled to primitive integer vectors."""
    R, pivots = _rref(A, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(_primitive_integer(v))
    return basis


def _primitive_integer(v: Sequence[Fraction]) -> tuple[int, ...]:
    den = 1
    for x in v:
        den = lcm(den, Fraction(x).denominator)
    w = [int(x * den) for x in v]
    g = vector_gcd(w) or 1
    return tuple(x // g for x in w)


def solve_rational(A: Sequence[Sequence], b: Sequence) -> Optional[tuple[Fraction, ...]]:
    """One rational solution of ``A x = b`` or ``None``."""
    ncols = len(A[0]) if A else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = _rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(R, pivots):
        x[p] = row[ncols]
    return tuple(x)


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == S`` with ``S`` diagonal and ``d_1 | d_2 | ...``."""

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix
    rank: int
    invariant_factors: tuple[int, ...]
    U_inv: IntMatrix = field(repr=False)
    V_inv: IntMatrix = field(repr=False)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d > 1)


def smith_decompose(A: Sequence[Sequence[int]], ncols: Optional[int] = None) -> SmithDecomposition:
    A = as_matrix(A)
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    S = [list(r) for r in A]
    U = [list(r) for r in identity(m)]
    Ui = [list(r) for r in identity(m)]
    V = [list(r) for r in identity(n)]
    Vi = [list(r) for r in identity(n)]

    def row_addmul(i, t, q):  # R_i += q R_t
        S[i] = [a + q * b for a, b in zip(S[i], S[t])]
        U[i] = [a + q * b for a, b in zip(U[i], U[t])]
        for row in Ui:
            row[t] -= q * row[i]

    def col_addmul(j, t, q):  # C_j += q C_t
        for row in S:
            row[j] += q * row[t]
        for row in V:
            row[j] += q * row[t]
        Vi[t] = [a - q * b for a, b in zip(Vi[t], Vi[j])]

    def row_swap(i, t):
        S[i], S[t] = S[t], S[i]
        U[i], U[t] = U[t], U[i]
        for row in Ui:
            row[i], row[t] = row[t], row[i]

    def col_swap(j, t):
        for M in (S, V):
            for row in M:
                row[j], row[t] = row[t], row[j]
        Vi[j], Vi[t] = Vi[t], Vi[j]

    def row_negate(t):
        S[t] = [-a for a in S[t]]
        U[t] = [-a for a in U[t]]
        for row in Ui:
            row[t] = -row[t]

    invariants: list[int] = []
    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if S[i][j] != 0 and (best is None or abs(S[i][j]) < abs(S[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            if best[0] != t:
                row_swap(best[0], t)
            if best[1] != t:
                col_swap(best[1], t)
            p = S[t][t]
            clean = True
            for i in range(t + 1, m):
                if S[i][t]:
                    row_addmul(i, t, -(S[i][t] // p))
                    clean = clean and S[i][t] == 0
            for j in range(t + 1, n):
                if S[t][j]:
                    col_addmul(j, t, -(S[t][j] // p))
                    clean = clean and S[t][j] == 0
            if not clean:
                continue
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n) if S[i][j] % p), None)
            if bad is None:
                break
            row_addmul(t, bad, 1)
        if S[t][t] == 0:
            break
        if S[t][t] < 0:
            row_negate(t)
        invariants.append(S[t][t])

    return SmithDecomposition(
        U=as_matrix(U), S=as_matrix(S), V=as_matrix(V), rank=len(invariants),
        invariant_factors=tuple(invariants), U_inv=as_matrix(Ui), V_inv=as_matrix(Vi),
    )


def integer_kernel(A: Sequence[Sequence[int]], ncols: int) -> list[tuple[int, ...]]:
    """A basis of ``{x in Z^ncols : A x = 0}``."""
    if not A:
        return [tuple(row) for row in identity(ncols)]
    snf = smith_decompose(A)
    return columns(snf.V, ncols)[snf.rank:]


# ---------------------------------------------------------------------------
# Lattices


def hermite_rows(rows: Iterable[Sequence[int]], ncols: int) -> IntMatrix:
    """Row-style Hermite normal form; returns the nonzero rows only."""
    A = [list(r) for r in rows]
    r = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, len(A)) if A[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(A[i][c]))
            A[r], A[p] = A[p], A[r]
            done = True
            for i in range(r + 1, len(A)):
                if A[i][c]:
                    q = A[i][c] // A[r][c]
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
                    done = done and A[i][c] == 0
            if done:
                break
        if r < len(A) and A[r][c] != 0:
            if A[r][c] < 0:
                A[r] = [-a for a in A[r]]
            for i in range(r):
                q = A[i][c] // A[r][c]
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
            r += 1
    return as_matrix(A[:r])


class IntLattice:
    """A sublattice of ``Z^dim`` held in Hermite normal form."""

    def __init__(self, generators: Iterable[Sequence[int]], dim: int):
        gens = as_matrix(generators)
        if any(len(g) != dim for g in gens):
            raise ValueError("generator has wrong dimension")
        self.dim = dim
        self.basis: IntMatrix = hermite_rows(gens, dim)
        self._pivots = [next(c for c, x in enumerate(row) if x) for row in self.basis]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def rational_coordinates(self, v: Sequence) -> Optional[tuple[Fraction, ...]]:
        if len(v) != self.dim:
            raise ValueError(f"vector of length {len(v)} in ambient dimension {self.dim}")
        w = [Fraction(x) for x in v]
        coords = []
        for row, c in zip(self.basis, self._pivots):
            q = w[c] / row[c]
            coords.append(q)
            if q:
                w = [a - q * b for a, b in zip(w, row)]
        if any(w):
            return None
        return tuple(coords)

    def coordinates(self, v: Sequence[int]) -> Optional[IntVector]:
        q = self.rational_coordinates(v)
        if q is None or any(x.denominator != 1 for x in q):
            return None
        return tuple(int(x) for x in q)

    def __contains__(self, v) -> bool:
        return self.coordinates(v) is not None

    def combination(self, coords: Sequence[int]) -> IntVector:
        out = [0] * self.dim
        for c, row in zip(coords, self.basis):
            if c:
                out = [a + c * b for a, b in zip(out, row)]
        return tuple(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntLattice) and self.dim == other.dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.dim, self.basis))

    def __repr__(self):
        return f"IntLattice(basis={self.basis!r}, dim={self.dim})"


def lattice_membership(L: Sequence[Sequence[int]], v: Sequence[int]) -> Optional[IntVector]:
    """Integer coordinates ``c`` with ``L c = v`` for basis columns ``L``, else ``None``."""
    L = as_matrix(L)
    if len(L) != len(v):
        raise ValueError(f"basis has {len(L)} rows but vector has length {len(v)}")
    ncols = len(L[0]) if L else 0
    if ncols == 0:
        return () if not any(v) else None
    snf = smith_decompose(L)
    w = matvec(snf.U, v)
    y = []
    for i, wi in enumerate(w):
        if i < snf.rank:
            d = snf.invariant_factors[i]
            if wi % d:
                return None
            y.append(wi // d)
        elif wi:
            return None
    y += [0] * (ncols - snf.rank)
    return matvec(snf.V, y)


def minimal_dilation(L: Sequence[Sequence[int]], v: Sequence[int]) -> int:
    """Smallest ``lam > 0`` with ``lam * v`` in the lattice generated by the columns of ``L``."""
    L = as_matrix(L)
    if len(L) != len(v):
        raise ValueError("dimension mismatch")
    if not any(v):
        raise ValueError("minimal dilation of the zero vector is undefined")
    ncols = len(L[0]) if L else 0
    lat = IntLattice(columns(L, ncols), len(v))
    q = lat.rational_coordinates(v)
    if q is None:
        raise ValueError("no positive multiple of the vector lies in the lattice")
    out = 1
    for x in q:
        out = lcm(out, x.denominator)
    return out


class SubgroupIndex(NamedTuple):
    finite: bool
    index: Optional[int]  # None encodes infinite index


def subgroup_index(vectors: Sequence[Sequence[int]], ambient_rank: int) -> SubgroupIndex:
    vectors = as_matrix(vectors)
    if any(len(v) != ambient_rank for v in vectors):
        raise ValueError("vector has wrong dimension")
    if ambient_rank == 0:
        return SubgroupIndex(True, 1)
    if not vectors:
        return SubgroupIndex(False, None)
    if len(vectors) == ambient_rank:
        det = abs(determinant(vectors))
        return SubgroupIndex(det != 0, det or None)
    snf = smith_decompose(from_columns(vectors, ambient_rank))
    if snf.rank < ambient_rank:
        return SubgroupIndex(False, None)
    idx = 1
    for d in snf.invariant_factors:
        idx *= d
    return SubgroupIndex(True, idx)


@dataclass(frozen=True)
class Cokernel:
    """``Z^m / A Z^n ~ (+) Z/d_i  (+)  Z^free_rank``.

    ``projection`` has one row per torsion factor (read modulo that factor)
    followed by ``free_rank`` rows for the free part.
    """

    free_rank: int
    torsion: tuple[int, ...]
    projection: IntMatrix

    @property
    def free_projection(self) -> IntMatrix:
        return self.projection[len(self.torsion):]

    @property
    def torsion_projection(self) -> IntMatrix:
        return self.projection[:len(self.torsion)]

    def apply(self, v: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Class of ``v`` as (torsion residues, free coordinates)."""
        tors = tuple(x % d for x, d in zip(matvec(self.torsion_projection, v), self.torsion))
        return tors, matvec(self.free_projection, v)


def cokernel(A: Sequence[Sequence[int]], nrows: Optional[int] = None) -> Cokernel:
    A = as_matrix(A)
    m = len(A) if A else (nrows or 0)
    if not A or not A[0]:
        return Cokernel(m, (), identity(m))
    snf = smith_decompose(A)
    tors_rows = [snf.U[i] for i, d in enumerate(snf.invariant_factors) if d > 1]
    free_rows = list(snf.U[snf.rank:])
    return Cokernel(m - snf.rank, snf.torsion, as_matrix(tors_rows + free_rows))


def unimodular_transform(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Optional[IntMatrix]:
    """Unimodular ``G`` with ``G a_i = b_i`` for paired vectors, else ``None``.

    ``A`` and ``B`` are lists of vectors in ``Z^p``; the ``a_i`` must span ``Q^p``
    for ``G`` to be determined.
    """
    A, B = as_matrix(A), as_matrix(B)
    if len(A) != len(B):
        return None
    if not A:
        return ()
    p = len(A[0])
    if len(B[0]) != p:
        return None
    if p == 0:
        return ()
    idx = None
    for cand in combinations(range(len(A)), p):
        if determinant([A[i] for i in cand]) != 0:
            idx = cand
            break
    if idx is None:
        return None
    # G Acols = Bcols  <=>  Acols^T G^T = Bcols^T: solve column by column.
    Asub = [A[i] for i in idx]
    Gt_cols = []
    for k in range(p):
        sol = solve_rational(Asub, [B[i][k] for i in idx])
        if sol is None or any(x.denominator != 1 for x in sol):
            return None
        Gt_cols.append(tuple(int(x) for x in sol))
    G = as_matrix(Gt_cols)  # row k of G is column k of G^T
    if abs(determinant(G)) != 1:
        return None
    if any(matvec(G, a) != b for a, b in zip(A, B)):
        return None
    return G


def inverse_unimodular(G: Sequence[Sequence[int]]) -> IntMatrix:
    n = len(G)
    aug = [list(row) + list(e) for row, e in zip(G, identity(n))]
    R, pivots = _rref(aug, 2 * n)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    inv = [row[n:] for row in R]
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("matrix is not unimodular")
    return as_matrix([[int(x) for x in row] for row in inv])


# ---------------------------------------------------------------------------
# Polyhedral feasibility (Fourier-Motzkin)


def _normalise(coeffs: Sequence[Fraction], rhs: Fraction):
    lead = next((c for c in coeffs if c != 0), None)
    if lead is None:
        return tuple(coeffs), rhs
    s = abs(lead)
    return tuple(c / s for c in coeffs), rhs / s


def _fm_point(rows: list[tuple[tuple[Fraction, ...], Fraction]], nvars: int) -> Optional[list[Fraction]]:
    """A point with ``a . y >= b`` for every ``(a, b)`` in ``rows``, or ``None``."""

    def tidy(system):
        best: dict = {}
        for a, b in system:
            a, b = _normalise(a, b)
            if a in best:
                best[a] = max(best[a], b)
            else:
                best[a] = b
        return list(best.items())

    current = tidy(rows)
    stages = []
    for j in reversed(range(nvars)):
        stages.append(current)
        pos = [(a, b) for a, b in current if a[j] > 0]
        neg = [(a, b) for a, b in current if a[j] < 0]
        new = [(a, b) for a, b in current if a[j] == 0]
        for ap, bp in pos:
            for an, bn in neg:
                sp, sn = 1 / ap[j], -1 / an[j]
                new.append((tuple(x * sp + y * sn for x, y in zip(ap, an)), bp * sp + bn * sn))
        current = tidy(new)
        if any(b > 0 for a, b in current if not any(a)):
            return None
    if any(b > 0 for a, b in current):
        return None

    values: list[Fraction] = []
    for j in range(nvars):
        lo = hi = None
        for a, b in stages[nvars - 1 - j]:
            if a[j] == 0:
                continue
            bound = (b - sum(a[i] * values[i] for i in range(j))) / a[j]
            if a[j] > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is not None and hi is not None:
            c = Fraction(-((-lo.numerator) // lo.denominator))
            x = c if c <= hi else (lo + hi) / 2
        elif lo is not None:
            x = Fraction(-((-lo.numerator) // lo.denominator))
        elif hi is not None:
            x = Fraction(hi.numerator // hi.denominator)
        else:
            x = Fraction(0)
        values.append(x)
    return values


def strict_cone_feasibility(
    equalities: Sequence[Sequence[int]],
    nonneg: Sequence[Sequence[int]],
    strict_rows: Iterable[int],
    nvars: Optional[int] = None,
) -> Optional[tuple[Fraction, ...]]:
    """Find ``x`` with ``E x = 0``, ``N x >= 0`` and ``(N x)_i > 0`` for ``i`` in ``strict_rows``.

    Each strict row is handled on its own (positive there, nonnegative
    elsewhere) and the partial solutions are summed, which keeps the
    elimination small. Returns ``None`` when no such point exists.
    """
    E = [tuple(Fraction(x) for x in r) for r in equalities]
    N = [tuple(Fraction(x) for x in r) for r in nonneg]
    widths = {len(r) for r in E} | {len(r) for r in N}
    if nvars is None:
        if len(widths) != 1:
            raise ValueError("cannot infer the number of variables")
        nvars = widths.pop()
    elif widths - {nvars}:
        raise ValueError("constraint rows have the wrong length")
    strict = sorted(set(strict_rows))
    if any(i < 0 or i >= len(N) for i in strict):
        raise ValueError("strict row index out of range")

    K = rational_kernel(E, nvars) if E else [tuple(int(i == j) for j in range(nvars)) for i in range(nvars)]
    k = len(K)
    G = [tuple(sum(r[t] * K[c][t] for t in range(nvars)) for c in range(k)) for r in N]

    y = [Fraction(0)] * k
    for i in strict:
        if not any(G[i]):
            return None
        rows = [(g, Fraction(0)) for g in G]
        rows.append((G[i], Fraction(1)))
        part = _fm_point(rows, k)
        if part is None:
            return None
        y = [a + b for a, b in zip(y, part)]

    x = tuple(sum((y[c] * K[c][t] for c in range(k)), Fraction(0)) for t in range(nvars))
    assert all(dot(r, x) == 0 for r in E)
    assert all(dot(r, x) >= 0 for r in N)
    assert all(dot(N[i], x) > 0 for i in strict)
    return x


@dataclass(frozen=True)
class RationalCone:
    """A cone ``{sum c_i g_i : c_i >= 0}`` in ``Q^dim``."""

    dim: int
    generators: tuple[tuple[Fraction, ...], ...]
    inequalities: Optional[tuple[tuple[int, ...], ...]] = None

    @classmethod
    def from_generators(cls, generators: Iterable[Sequence], dim: int) -> "RationalCone":
        gens = tuple(tuple(Fraction(x) for x in g) for g in generators)
        if any(len(g) != dim for g in gens):
            raise ValueError("generator has wrong dimension")
        cone = cls(dim, gens)
        if cone.is_full_dimensional and cone.is_pointed:
            return cls(dim, gens, _facet_normals(gens, dim))
        return cone

    @property
    def is_full_dimensional(self) -> bool:
        return rank(self.generators) == self.dim

    @property
    def is_pointed(self) -> bool:
        nonzero = [g for g in self.generators if any(g)]
        if not nonzero:
            return True
        return strict_cone_feasibility([], nonzero, range(len(nonzero)), nvars=self.dim) is not None

    def contains(self, v: Sequence) -> bool:
        if self.inequalities is not None:
            return all(dot(a, v) >= 0 for a in self.inequalities)
        # v in cone(G)  <=>  the system G^T c = v, c >= 0 is feasible
        n = len(self.generators)
        rows = [(tuple(Fraction(int(i == j)) for j in range(n)), Fraction(0)) for i in range(n)]
        for t in range(self.dim):
            a = tuple(g[t] for g in self.generators)
            rows.append((a, Fraction(v[t])))
            rows.append((tuple(-x for x in a), -Fraction(v[t])))
        return _fm_point(rows, n) is not None


def _facet_normals(gens, dim) -> tuple[tuple[int, ...], ...]:
    if dim == 0:
        return ()
    if dim == 1:
        return ((1,),) if any(g[0] > 0 for g in gens) else ((-1,),)
    normals = set()
    for sub in combinations(gens, dim - 1):
        if rank(sub) != dim - 1:
            continue
        (a,) = rational_kernel(sub, dim)
        vals = [dot(a, g) for g in gens]
        if all(x >= 0 for x in vals):
            normals.add(a)
        elif all(x <= 0 for x in vals):
            normals.add(tuple(-x for x in a))
    return tuple(sorted(normals))
