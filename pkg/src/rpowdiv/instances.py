"""Planted test instances N = p^r * q."""

from __future__ import annotations

import gmpy2

from .errors import InputError
from .poly import integer_kth_root


def next_prime(n: int) -> int:
    return int(gmpy2.next_prime(n))


def is_prime(n: int) -> bool:
    return bool(gmpy2.is_prime(n))


def worst_shape_instance(bits: int, r: int) -> tuple[int, int, int]:
    """(N, p, q) with N of exactly ``bits`` bits, p ~ N^(1/2r), q ~ N^(1/2).

    Deterministic: p and q are the next primes above the ideal sizes for
    N ~ 2^(bits - 1/2).
    """
    if r < 1 or bits < 2 * r + 4:
        raise InputError(f"bits={bits} too small for r={r}")
    p = next_prime(integer_kth_root(1 << (2 * bits - 1), 4 * r))
    q = next_prime(integer_kth_root(1 << (2 * bits - 1), 2) // p**r)
    if q == p:
        q = next_prime(q)
    while (p**r * q).bit_length() > bits:
        q = int(gmpy2.prev_prime(q))
    while (p**r * q).bit_length() < bits:
        q = next_prime(q)
    N = p**r * q
    if N.bit_length() != bits:
        raise InputError(f"no planted instance with exactly {bits} bits for r={r}")
    return N, p, q


def planted_instance(p: int, r: int, q: int) -> int:
    return p**r * q
