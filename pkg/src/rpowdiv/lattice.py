"""LLL reduction with exact integer arithmetic.

Two reducers sit behind :func:`lll_reduce`:

* ``"exact"``: an all-integer LLL (fraction-free Gram-Schmidt, Lovasz
  constant 3/4, size reduction to 1/2). Slow but self-contained.
* ``"fplll"``: fpylll's floating-point-guided reduction, which only ever
  applies exact integer unimodular operations to the basis.

Whatever the reducer, the first output vector is certified with exact
integer comparisons against ``||w||^(2d) <= 2^(d(d-1)/2) det(L)^2``
before being returned, and a failed certificate falls back to the
exact reducer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import InputError, InvariantError

try:  # pragma: no cover - depends on the environment
    from fpylll import LLL as _FPLLL, IntegerMatrix as _IntegerMatrix

    HAVE_FPLLL = True
except ImportError:  # pragma: no cover
    HAVE_FPLLL = False

Matrix = tuple[tuple[int, ...], ...]


class LinearDependenceError(InvariantError):
    """Basis rows are linearly dependent."""


def _as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(a) for a in row) for row in rows)


@dataclass(frozen=True)
class LatticeBasis:
    rows: Matrix

    def __init__(self, rows: Sequence[Sequence[int]]):
        m = _as_matrix(rows)
        if not m or any(len(r) != len(m) for r in m):
            raise InputError("lattice basis must be a nonempty square matrix")
        object.__setattr__(self, "rows", m)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def is_lower_triangular(self) -> bool:
        return all(
            self.rows[i][j] == 0 for i in range(self.dim) for j in range(i + 1, self.dim)
        ) and all(self.rows[i][i] != 0 for i in range(self.dim))

    def determinant(self) -> int:
        if self.is_lower_triangular():
            det = 1
            for i in range(self.dim):
                det *= self.rows[i][i]
            return det
        return integer_det(self.rows)


@dataclass(frozen=True)
class ReducedBasis:
    rows: Matrix
    transform: Matrix | None = None
    backend: str = field(default="exact", compare=False)

    @property
    def first(self) -> tuple[int, ...]:
        return self.rows[0]


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def integer_det(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (akk * row_i[j] - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1] if n else 1


def first_vector_bound_holds(w: Sequence[int], det: int) -> bool:
    """Exact form of ||w|| <= 2^((d-1)/4) |det|^(1/d), raised to power 2d."""
    d = len(w)
    return dot(w, w) ** d <= (1 << (d * (d - 1) // 2)) * det * det


def _lll_exact(rows: Matrix) -> tuple[list[list[int]], list[list[int]]]:
    n = len(rows)
    b = [list(r) for r in rows]
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    D = [0] * (n + 1)
    D[0] = 1
    lam = [[0] * n for _ in range(n)]

    def redi(k: int, l: int) -> None:
        dl = D[l + 1]
        if 2 * abs(lam[k][l]) > dl:
            q = (2 * lam[k][l] + dl) // (2 * dl)
            bk, bl = b[k], b[l]
            for j in range(len(bk)):
                bk[j] -= q * bl[j]
            Uk, Ul = U[k], U[l]
            for j in range(n):
                Uk[j] -= q * Ul[j]
            lam[k][l] -= q * dl
            lk, ll = lam[k], lam[l]
            for i in range(l):
                lk[i] -= q * ll[i]

    def swapi(k: int, kmax: int) -> None:
        b[k], b[k - 1] = b[k - 1], b[k]
        U[k], U[k - 1] = U[k - 1], U[k]
        for j in range(k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        mu = lam[k][k - 1]
        B = (D[k - 1] * D[k + 1] + mu * mu) // D[k]
        for i in range(k + 1, kmax + 1):
            t = lam[i][k]
            lam[i][k] = (D[k + 1] * lam[i][k - 1] - mu * t) // D[k]
            lam[i][k - 1] = (B * t + mu * lam[i][k]) // D[k + 1]
        D[k] = B

    D[1] = dot(b[0], b[0])
    if D[1] == 0:
        raise LinearDependenceError("basis row 0 is zero")
    k, kmax = 1, 0
    while k < n:
        if k > kmax:
            kmax = k
            for j in range(k + 1):
                u = dot(b[k], b[j])
                for i in range(j):
                    u = (D[i + 1] * u - lam[k][i] * lam[j][i]) // D[i]
                if j < k:
                    lam[k][j] = u
                else:
                    if u == 0:
                        raise LinearDependenceError(f"basis row {k} depends on earlier rows")
                    D[k + 1] = u
        redi(k, k - 1)
        if 4 * D[k + 1] * D[k - 1] < 3 * D[k] * D[k] - 4 * lam[k][k - 1] ** 2:
            swapi(k, kmax)
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                redi(k, l)
            k += 1
    return b, U


def _lll_fplll(rows: Matrix, with_transform: bool) -> tuple[list[list[int]], list[list[int]] | None]:
    n = len(rows)
    A = _IntegerMatrix.from_matrix([list(r) for r in rows])
    out = [[0] * n for _ in range(n)]
    tr = None
    if with_transform:
        U = _IntegerMatrix.identity(n)
        _FPLLL.reduction(A, U, delta=0.75)
        tr = [[0] * n for _ in range(n)]
        U.to_matrix(tr)
    else:
        _FPLLL.reduction(A, delta=0.75)
    A.to_matrix(out)
    if any(not any(r) for r in out):
        raise LinearDependenceError("reduction produced a zero row")
    return out, tr


def lll_reduce(basis: LatticeBasis, backend: str = "auto", with_transform: bool = False) -> ReducedBasis:
    """LLL-reduce ``basis`` and certify the first vector's length bound.

    ``backend`` is ``"exact"``, ``"fplll"`` or ``"auto"`` (fplll when
    importable). The exact reducer always records the unimodular
    transform; fplll only when ``with_transform`` is set.
    """
    if backend == "auto":
        backend = "fplll" if HAVE_FPLLL else "exact"
    if backend not in ("exact", "fplll"):
        raise InputError(f"unknown LLL backend {backend!r}")
    if backend == "fplll" and not HAVE_FPLLL:
        raise InputError("fpylll is not installed")

    det = basis.determinant()
    if det == 0:
        raise LinearDependenceError("basis rows are linearly dependent")

    if backend == "fplll":
        rows, U = _lll_fplll(basis.rows, with_transform)
        if first_vector_bound_holds(rows[0], det):
            return ReducedBasis(_as_matrix(rows), U and _as_matrix(U), "fplll")
        backend = "exact"

    rows, U = _lll_exact(basis.rows)
    if not any(rows[0]) or not first_vector_bound_holds(rows[0], det):
        raise InvariantError("exact LLL output violates the first-vector bound")
    return ReducedBasis(_as_matrix(rows), _as_matrix(U), "exact")


def solve_row_combination(basis: Matrix, vector: Sequence[int]) -> list[Fraction]:
    """Rational coefficients c with sum_i c_i * basis[i] == vector."""
    n = len(basis)
    # Gauss-Jordan on basis^T | vector.
    a = [[Fraction(basis[j][i]) for j in range(n)] + [Fraction(vector[i])] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise LinearDependenceError("singular basis")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


def triangular_coordinates(basis: Matrix, vector: Sequence[int]) -> list[int] | None:
    """Integer coordinates of ``vector`` in a lower-triangular basis, or None."""
    n = len(basis)
    w = list(vector)
    coords = [0] * n
    for i in range(n - 1, -1, -1):
        q, rem = divmod(w[i], basis[i][i])
        if rem:
            return None
        coords[i] = q
        if q:
            row = basis[i]
            for j in range(i + 1):
                w[j] -= q * row[j]
    return coords


def verify_reduction(inp: LatticeBasis, out: ReducedBasis) -> bool:
    """Check that ``out`` spans the same lattice and its first vector is short.

    The transform is recomputed from scratch rather than trusted from
    ``out.transform``.
    """
    n = inp.dim
    if len(out.rows) != n or any(len(r) != n for r in out.rows):
        return False
    X: list[list[int]] = []
    tri = inp.is_lower_triangular()
    for row in out.rows:
        if tri:
            coords = triangular_coordinates(inp.rows, row)
            if coords is None:
                return False
        else:
            frac = solve_row_combination(inp.rows, row)
            if any(c.denominator != 1 for c in frac):
                return False
            coords = [int(c) for c in frac]
        X.append(coords)
    if abs(integer_det(X)) != 1:
        return False
    w = out.rows[0]
    return any(w) and first_vector_bound_holds(w, inp.determinant())
