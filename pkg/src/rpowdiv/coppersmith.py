"""Search one interval [P - H, P + H] for all p with p^r | N.

The lattice is spanned by the coefficient vectors of f_i(H*y), where

    f_i(x) = N^(m - floor(i/r)) * (P + x)^i    for 0 <= i < r*m
    f_i(x) = (P + x)^i                         for r*m <= i < d.

Every real-valued hypothesis is checked by raising both sides to a common
integer power and comparing exact integers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, InvariantError
from .lattice import LatticeBasis, lll_reduce, triangular_coordinates
from .poly import IntPoly
from .rootfind import integer_roots


@dataclass(frozen=True)
class SearchParams:
    N: int
    r: int
    m: int
    d: int
    P: int
    H: int

    def check_shape(self) -> None:
        """Hypotheses needed to build the lattice: r <= lg N, m <= d/r, H < P <= N^(1/r)."""
        N, r, m, d, P, H = self.N, self.r, self.m, self.d, self.P, self.H
        if N < 2:
            raise InputError(f"N must be >= 2, got {N}")
        if min(r, m, d) < 1:
            raise InputError(f"r, m, d must be positive, got r={r}, m={m}, d={d}")
        if H < 1:
            raise InputError(f"H must be >= 1, got {H}")
        if (1 << r) > N:
            raise InputError(f"need 2^r <= N (r={r})")
        if m * r > d:
            raise InputError(f"need m*r <= d (m={m}, r={r}, d={d})")
        if not H < P:
            raise InputError(f"need H < P (H={H}, P={P})")
        if P ** r > N:
            raise InputError(f"need P^r <= N (P={P}, r={r})")

    def window_bound_holds(self) -> bool:
        """Small-H condition, as
        H^(2d(d-1)) d^(2d) 2^(d(d-1)) N^(2rm(m+1)) < (P-H)^(4drm)."""
        N, r, m, d, P, H = self.N, self.r, self.m, self.d, self.P, self.H
        lhs = H ** (2 * d * (d - 1)) * d ** (2 * d) * N ** (2 * r * m * (m + 1)) << (d * (d - 1))
        return lhs < (P - H) ** (4 * d * r * m)

    def validate(self) -> None:
        self.check_shape()
        if not self.window_bound_holds():
            raise InputError(f"H={self.H} too large for window at P={self.P}")

    @property
    def lattice_det(self) -> int:
        """Closed form H^(d(d-1)/2) * N^(r m (m+1)/2)."""
        d, r, m = self.d, self.r, self.m
        return self.H ** (d * (d - 1) // 2) * self.N ** (r * m * (m + 1) // 2)


@dataclass(frozen=True)
class WindowResult:
    params: SearchParams
    h: IntPoly
    det: int
    divisors: tuple[int, ...]


def build_shift_polynomials(N: int, r: int, m: int, d: int, P: int) -> list[IntPoly]:
    if N < 2 or min(r, m, d, P) < 1 or (1 << r) > N or m * r > d or P ** r > N:
        raise InputError(f"invalid shift parameters N={N}, r={r}, m={m}, d={d}, P={P}")
    shift = IntPoly((P, 1))
    out = []
    power = IntPoly((1,))
    for i in range(d):
        e = m - i // r if i < r * m else 0
        out.append(power * N ** e)
        power = power * shift
    return out


def build_scaled_basis(shift_polys: list[IntPoly], H: int) -> LatticeBasis:
    """Rows are the coefficient vectors of f_i(H*y)."""
    d = len(shift_polys)
    rows = []
    for f in shift_polys:
        row = [a * H ** j for j, a in enumerate(f.coeffs)]
        rows.append(row + [0] * (d - len(row)))
    return LatticeBasis(rows)


def scaled_basis(params: SearchParams) -> LatticeBasis:
    """Same lattice as build_scaled_basis, built by repeated multiplication
    by (P + H*y) with an exact division by N every r steps."""
    N, r, m, d, P, H = params.N, params.r, params.m, params.d, params.P, params.H
    t = [N ** m]
    rows = []
    for i in range(d):
        rows.append(t + [0] * (d - len(t)))
        nxt = [0] * (len(t) + 1)
        for j, a in enumerate(t):
            nxt[j] += a * P
            nxt[j + 1] += a * H
        if (i + 1) % r == 0 and i + 1 <= r * m:
            q = []
            for a in nxt:
                qa, rem = divmod(a, N)
                if rem:
                    raise InvariantError("shift polynomial not divisible by N")
                q.append(qa)
            nxt = q
        t = nxt
    return LatticeBasis(rows)


def _small_polynomial(params: SearchParams, backend: str = "auto") -> tuple[IntPoly, int]:
    params.check_shape()
    N, r, m, d, H = params.N, params.r, params.m, params.d, params.H
    basis = scaled_basis(params)
    if not basis.is_lower_triangular():
        raise InvariantError("scaled basis is not lower-triangular")
    det = basis.determinant()
    if det != params.lattice_det:
        raise InvariantError("lattice determinant disagrees with closed form")

    w = lll_reduce(basis, backend).first
    if triangular_coordinates(basis.rows, w) is None:
        raise InvariantError("reduced vector is not in the lattice")

    coeffs = []
    for j, wj in enumerate(w):
        hj, rem = divmod(wj, H ** j)
        if rem:
            raise InvariantError(f"coefficient {j} not divisible by H^{j}")
        coeffs.append(hj)

    s = sum(abs(a) for a in w)
    rhs = d ** (2 * d) * H ** (2 * d * (d - 1)) * N ** (2 * r * m * (m + 1)) << (d * (d - 1))
    if not s ** (4 * d) < rhs:
        raise InvariantError("short polynomial violates the coefficient-sum bound")
    return IntPoly(coeffs), det


def find_small_polynomial(params: SearchParams, backend: str = "auto") -> IntPoly:
    """Nonzero h of degree < d in the span of the f_i, with
    sum |h_j| H^j < d^(1/2) 2^((d-1)/4) H^((d-1)/2) N^(rm(m+1)/2d)."""
    return _small_polynomial(params, backend)[0]


def search_window(params: SearchParams, backend: str = "auto") -> WindowResult:
    params.validate()
    h, det = _small_polynomial(params, backend)
    N, r, P, H = params.N, params.r, params.P, params.H
    found = []
    if h.degree >= 1:
        for x0 in integer_roots(h):
            p = P + x0
            if p >= 2 and P - H <= p <= P + H and N % p ** r == 0:
                found.append(p)
    return WindowResult(params, h, det, tuple(sorted(found)))


def search_one_interval(params: SearchParams, backend: str = "auto") -> tuple[int, ...]:
    """All p in [P - H, P + H] with p >= 2 and p^r | N, ascending."""
    return search_window(params, backend).divisors
