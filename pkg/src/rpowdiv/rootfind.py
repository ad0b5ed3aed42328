"""Deterministic integer root finding for integer polynomials.

Pipeline for a general f:

1. remove the content;
2. divide out gcd(f, f') with an evaluation-point GCD whose point 2^c is
   large enough that the answer is always correct;
3. for the squarefree part, pick the least prime p for which the
   reduction stays squarefree, find roots mod p by brute force, Hensel
   lift them to p^k, and accept a lift r* only if (x - r*) g* == f for
   the symmetric lift g* of the cofactor.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import gmpy2

from .errors import InputError, InvariantError
from .poly import (
    IntPoly,
    ModPoly,
    ceil_log2,
    content,
    derivative,
    poly_divmod_monic_linear,
    primitive_part,
    reduce_mod,
    signed_residue,
)


@dataclass(frozen=True)
class PrimeSearchResult:
    p: int
    sieve_bound: int


@dataclass(frozen=True)
class GcdTriple:
    h: IntPoly
    f_cofactor: IntPoly
    g_cofactor: IntPoly
    c: int


# ---------------------------------------------------------------- primes


@lru_cache(maxsize=8)
def _sieve(limit: int) -> tuple[int, ...]:
    flags = bytearray([1]) * (limit + 1)
    flags[:2] = b"\x00\x00"
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = bytes(len(range(i * i, limit + 1, i)))
    return tuple(i for i, v in enumerate(flags) if v)


def primes_up_to(Y: int) -> list[int]:
    if Y < 2:
        return []
    # Round the sieve size up so nearby bounds share one cached sieve.
    limit = 1 << max(10, ceil_log2(Y))
    ps = _sieve(limit)
    lo, hi = 0, len(ps)
    while lo < hi:
        mid = (lo + hi) // 2
        if ps[mid] <= Y:
            lo = mid + 1
        else:
            hi = mid
    return list(ps[:lo])


def _modp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    """Monic gcd in (Z/pZ)[x]; inputs ascending and trimmed."""
    a, b = a[:], b[:]
    while b:
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b):
            if a[-1]:
                q = a[-1] * inv % p
                shift = len(a) - len(b)
                for i, bc in enumerate(b):
                    a[shift + i] = (a[shift + i] - q * bc) % p
            a.pop()
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [x * inv % p for x in a]


def _squarefree_mod(f: IntPoly, p: int) -> bool:
    fp = reduce_mod(f, p)
    if fp.is_zero():
        return False
    g = _modp_gcd(list(fp.coeffs), list(fp.derivative().coeffs), p)
    return len(g) == 1


def find_good_prime(f: IntPoly, n: int, b: int) -> PrimeSearchResult:
    """Least prime p <= 6nb + 6n*ceil(lg n) with f mod p nonzero and squarefree."""
    if not b >= n >= 1:
        raise InputError(f"need b >= n >= 1, got b={b}, n={n}")
    if f.sup_norm() > 1 << b:
        raise InputError("coefficients exceed 2^b")
    Y = 6 * n * b + 6 * n * ceil_log2(n)
    for p in primes_up_to(Y):
        if _squarefree_mod(f, p):
            return PrimeSearchResult(p, Y)
    raise InvariantError(f"no prime <= {Y} keeps f squarefree; f is not squarefree")


def roots_mod_p(fp: ModPoly, p: int) -> list[int]:
    if fp.modulus != p:
        raise InputError(f"polynomial modulus {fp.modulus} is not {p}")
    return [u for u in range(p) if fp(u) == 0]


# --------------------------------------------------------------- lifting


def hensel_lift(f: ModPoly, u: int, p: int, k: int) -> int:
    """Unique v in [0, p^k) with v = u (mod p) and f(v) = 0 (mod p^k)."""
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    if f.modulus != p**k:
        raise InputError(f"polynomial modulus {f.modulus} is not {p}^{k}")
    if not 0 <= u < p:
        raise InputError(f"u={u} not in [0, {p})")
    if f(u) % p:
        raise InputError(f"f({u}) is not 0 mod {p}")
    df = f.derivative()
    if df(u) % p == 0:
        raise InputError(f"f'({u}) is 0 mod {p}; root is not simple")

    def lift(kk: int) -> int:
        if kk == 1:
            return u
        ell = (kk + 1) // 2
        w = lift(ell)
        pl = p**ell
        mod_hi = p ** (kk - ell)
        fw = f(w) % p**kk
        if fw % pl:
            raise InvariantError("lift invariant broken")
        t = (-(fw // pl) * pow(df(w), -1, mod_hi)) % mod_hi
        return w + pl * t

    return lift(k)


# ------------------------------------------------------------ squarefree


def _check_bounds(f: IntPoly, n: int, b: int) -> None:
    if not b >= n >= 1:
        raise InputError(f"need b >= n >= 1, got b={b}, n={n}")
    if f.degree != n:
        raise InputError(f"degree of f is {f.degree}, expected {n}")
    if f.sup_norm() > 1 << b:
        raise InputError("coefficients exceed 2^b")


def integer_roots_squarefree(f: IntPoly, n: int, b: int) -> tuple[int, ...]:
    _check_bounds(f, n, b)
    if content(f) != 1:
        raise InputError("f must be primitive")
    p = find_good_prime(f, n, b).p
    mod_roots = roots_mod_p(reduce_mod(f, p), p)

    # smallest k with p^k > (n+1)^(1/2) 2^(n+b+1), squared to stay integral
    target = (n + 1) << (2 * (n + b + 1))
    k, pk = 1, p
    while pk * pk <= target:
        k += 1
        pk *= p

    fbar = reduce_mod(f, pk)
    roots = []
    for u in mod_roots:
        v = hensel_lift(fbar, u, p, k)
        r_star = signed_residue(v, pk)
        q, rem = poly_divmod_monic_linear(fbar.coeffs, v, pk)
        if rem:
            raise InvariantError("lifted residue is not a root mod p^k")
        g_star = IntPoly(signed_residue(a, pk) for a in q)
        if IntPoly((-r_star, 1)) * g_star == f:
            roots.append(r_star)
    return tuple(sorted(roots))


# ------------------------------------------------------------------- gcd


def _pack(f: IntPoly, c: int):
    acc = gmpy2.mpz(0)
    for a in reversed(f.coeffs):
        acc = (acc << c) + a
    return acc


def _unpack(X, c: int, count: int) -> IntPoly:
    """Read off signed base-2^c digits in [-2^(c-1), 2^(c-1))."""
    half = gmpy2.mpz(1) << (c - 1)
    full = half << 1
    digits = []
    X = gmpy2.mpz(X)
    while X:
        dgt = gmpy2.f_mod_2exp(X, c)
        if dgt >= half:
            dgt -= full
        digits.append(int(dgt))
        X = (X - dgt) >> c
        if len(digits) > count:
            raise InvariantError("packed value has more digits than expected")
    return IntPoly(digits)


def gcd_evaluation_exponent(n: int, b: int) -> int:
    return (2 * n + 1) * ceil_log2(n + 1) + 2 * n * n + 2 * n * b + n + b + 2


def heuristic_gcd(f: IntPoly, g: IntPoly, n: int, b: int) -> GcdTriple:
    """gcd(f, g) with positive leading coefficient, and the two cofactors.

    At least one of f, g must be primitive. The evaluation point 2^c is
    large enough that the integer gcd always decodes to the true one.
    """
    if f.is_zero() or g.is_zero():
        raise InputError("heuristic_gcd needs nonzero polynomials")
    if not b >= n >= 1:
        raise InputError(f"need b >= n >= 1, got b={b}, n={n}")
    if max(f.degree, g.degree) > n:
        raise InputError(f"degree exceeds n={n}")
    if max(f.sup_norm(), g.sup_norm()) > 1 << b:
        raise InputError("coefficients exceed 2^b")
    if content(f) != 1 and content(g) != 1:
        raise InputError("at least one of f, g must be primitive")

    c = gcd_evaluation_exponent(n, b)
    F, G = _pack(f, c), _pack(g, c)
    scaled = _unpack(gmpy2.gcd(F, G), c, n + 1)
    delta = content(scaled)
    h = IntPoly(a // delta for a in scaled.coeffs)
    if h.lc < 0:
        h = -h
    Hv = _pack(h, c)
    out = []
    for P, poly in ((F, f), (G, g)):
        q, rem = gmpy2.f_divmod(P, Hv)
        if rem:
            raise InvariantError("gcd does not divide the packed input")
        cof = _unpack(q, c, n + 1)
        if h * cof != poly:
            raise InvariantError("gcd cofactor identity failed")
        out.append(cof)
    return GcdTriple(h, out[0], out[1], c)


# --------------------------------------------------------------- general


def integer_roots(f: IntPoly) -> tuple[int, ...]:
    """All integer roots of a nonzero integer polynomial, ascending."""
    if f.is_zero():
        raise InputError("every integer is a root of the zero polynomial")
    if f.degree == 0:
        return ()
    _, f = primitive_part(f)
    n = f.degree
    b = max(n, ceil_log2(f.sup_norm()), 1)
    b1 = b + ceil_log2(n)
    sqf = heuristic_gcd(f, derivative(f), n, b1).f_cofactor
    b2 = n + b1 + ceil_log2(n + 1)
    if sqf.lc < 0:
        sqf = -sqf
    return integer_roots_squarefree(sqf, sqf.degree, b2)
