"""Brute-force reference implementations for cross-checking.

Nothing here is used by the search pipeline, and nothing here calls into
it: these routines share only the IntPoly container with production code.
All of them refuse inputs that would make brute force impractical.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd, isqrt

from sympy import factorint

from .errors import InputError
from .poly import IntPoly

MAX_TRIAL_STEPS = 1 << 26
MAX_TRAILING = 1 << 52
MAX_ENUM_POINTS = 10**7


def _root_floor(N: int, r: int) -> int:
    lo, hi = 0, 1 << (N.bit_length() // r + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**r <= N:
            lo = mid
        else:
            hi = mid - 1
    return lo


def trial_divisors(N: int, r: int, bound: int) -> set[int]:
    """{p in [2, bound] : p^r | N} by trial division.

    For r = 1 divisors are found in pairs (q, N/q) with q <= sqrt(N); for
    r >= 2 every p <= min(bound, N^(1/r)) is tried. Either way the loop
    is capped at 2^26 steps.
    """
    if N < 1 or r < 1:
        raise InputError("need N >= 1 and r >= 1")
    if r == 1:
        steps = isqrt(N)
        if steps > MAX_TRIAL_STEPS:
            raise InputError(f"sqrt(N) = {steps} exceeds the trial-division cap")
        out = set()
        for q in range(1, steps + 1):
            if N % q == 0:
                out.update((q, N // q))
        return {p for p in out if 2 <= p <= bound}
    top = min(bound, _root_floor(N, r))
    if top > MAX_TRIAL_STEPS:
        raise InputError(f"bound {top} exceeds the trial-division cap")
    return {p for p in range(2, top + 1) if N % p**r == 0}


def _divisors(a: int) -> list[int]:
    out = [1]
    for prime, e in factorint(a).items():
        out = [x * prime**k for x in out for k in range(e + 1)]
    return out


def integer_roots_naive(f: IntPoly) -> set[int]:
    """Integer roots via the divisors of the trailing nonzero coefficient."""
    if f.is_zero():
        raise InputError("zero polynomial")
    s = next(i for i, a in enumerate(f.coeffs) if a)
    a = abs(f.coeffs[s])
    if a > MAX_TRAILING:
        raise InputError("trailing coefficient too large to factor")
    rest = IntPoly(f.coeffs[s:])
    roots = {0} if s else set()
    for q in _divisors(a):
        for x in (q, -q):
            acc = 0
            for c in reversed(rest.coeffs):
                acc = acc * x + c
            if acc == 0:
                roots.add(x)
    return roots


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    a = a[:]
    lb = b[-1]
    while len(a) >= len(b) and a:
        la = a[-1]
        shift = len(a) - len(b)
        a = [x * lb for x in a]
        for i, y in enumerate(b):
            a[shift + i] -= la * y
        while a and a[-1] == 0:
            a.pop()
    return a


def _prim(a: list[int]) -> list[int]:
    g = 0
    for x in a:
        g = gcd(g, x)
    return [x // g for x in a]


def gcd_classical(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive polynomial remainder sequence; positive leading coefficient."""
    if f.is_zero() or g.is_zero():
        raise InputError("gcd_classical needs nonzero inputs")
    a, b = _prim(list(f.coeffs)), _prim(list(g.coeffs))
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _prim(_pseudo_rem(a, b)) if len(b) > 1 else []
        if len(a) == 1:
            return IntPoly((1,))
    a = _prim(a)
    if a[-1] < 0:
        a = [-x for x in a]
    return IntPoly(a)


def _det_fraction(M: list[list[int]]) -> int:
    n = len(M)
    a = [[Fraction(x) for x in row] for row in M]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return int(det)


def sylvester_matrix(f: IntPoly, g: IntPoly) -> list[list[int]]:
    """deg g rows of f's coefficients, then deg f rows of g's (descending)."""
    n, m = f.degree, g.degree
    size = n + m
    fd, gd = list(reversed(f.coeffs)), list(reversed(g.coeffs))
    rows = []
    for i in range(m):
        rows.append([0] * i + fd + [0] * (size - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + gd + [0] * (size - m - 1 - i))
    return rows


def resultant_naive(f: IntPoly, g: IntPoly) -> int:
    if f.is_zero() or g.is_zero():
        raise InputError("resultant of the zero polynomial")
    if f.degree + g.degree > 16:
        raise InputError("degree sum above 16")
    if f.degree + g.degree == 0:
        return 1
    return _det_fraction(sylvester_matrix(f, g))


def shortest_vector_enum(basis: list[list[int]], radius: int) -> tuple[int, ...]:
    """Shortest nonzero sum_i c_i basis[i] with every |c_i| <= radius.

    Ties are broken by the smallest vector tuple after flipping sign so
    the first nonzero entry is positive.
    """
    d = len(basis)
    if d > 5:
        raise InputError("enumeration limited to dimension 5")
    if (2 * radius + 1) ** d > MAX_ENUM_POINTS:
        raise InputError("enumeration box too large")
    best = None
    for cs in itertools.product(range(-radius, radius + 1), repeat=d):
        if not any(cs):
            continue
        v = [sum(c * basis[i][j] for i, c in enumerate(cs)) for j in range(d)]
        if not any(v):
            continue
        first = next(x for x in v if x)
        if first < 0:
            v = [-x for x in v]
        key = (sum(x * x for x in v), tuple(v))
        if best is None or key < best:
            best = key
    if best is None:
        raise InputError("no nonzero vector in the box")
    return best[1]
