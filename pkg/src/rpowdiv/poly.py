"""Dense integer polynomials and small exact-integer helpers.

Coefficients are stored in ascending degree order. The zero polynomial
has an empty coefficient tuple, and otherwise the last coefficient is
nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .errors import InputError


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(a) for a in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True, slots=True)
class IntPoly:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def sup_norm(self) -> int:
        return max((abs(a) for a in self.coeffs), default=0)

    def __call__(self, x: int) -> int:
        return eval_poly(self, x)

    def __neg__(self) -> IntPoly:
        return IntPoly(-a for a in self.coeffs)

    def __add__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPoly(out)

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(other * a for a in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    out[i + j] += u * v
        return IntPoly(out)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"


@dataclass(frozen=True, slots=True)
class ModPoly:
    """Polynomial over Z/MZ with coefficients in [0, M)."""

    modulus: int
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int], modulus: int):
        if modulus < 2:
            raise InputError(f"modulus must be >= 2, got {modulus}")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "coeffs", _trim(a % modulus for a in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: int) -> int:
        M = self.modulus
        acc = 0
        for a in reversed(self.coeffs):
            acc = (acc * x + a) % M
        return acc

    def derivative(self) -> ModPoly:
        return ModPoly((i * a for i, a in enumerate(self.coeffs) if i), self.modulus)

    def lift_signed(self) -> IntPoly:
        """Lift each coefficient to the representative in [-M/2, M/2)."""
        return IntPoly(signed_residue(a, self.modulus) for a in self.coeffs)


def eval_poly(f: IntPoly, x: int) -> int:
    acc = 0
    for a in reversed(f.coeffs):
        acc = acc * x + a
    return acc


def derivative(f: IntPoly) -> IntPoly:
    return IntPoly(i * a for i, a in enumerate(f.coeffs) if i)


def content(f: IntPoly) -> int:
    g = 0
    for a in f.coeffs:
        g = gcd(g, a)
    return g


def primitive_part(f: IntPoly) -> tuple[int, IntPoly]:
    """Split f into (content, primitive part); the part keeps f's sign."""
    if f.is_zero():
        raise InputError("primitive part of the zero polynomial is undefined")
    c = content(f)
    return c, IntPoly(a // c for a in f.coeffs)


def reduce_mod(f: IntPoly, M: int) -> ModPoly:
    return ModPoly(f.coeffs, M)


def signed_residue(a: int, M: int) -> int:
    """Representative of a mod M in [-M/2, M/2)."""
    a %= M
    return a - M if 2 * a >= M else a


def poly_divmod_monic_linear(coeffs: Sequence[int], root: int, M: int) -> tuple[list[int], int]:
    """Synthetic division of a polynomial by (x - root) over Z/MZ.

    Returns the quotient coefficients (ascending) and the remainder.
    """
    n = len(coeffs) - 1
    if n < 1:
        return [], coeffs[0] % M if coeffs else 0
    q = [0] * n
    acc = coeffs[n] % M
    for i in range(n - 1, -1, -1):
        q[i] = acc
        acc = (coeffs[i] + acc * root) % M
    return q, acc


def ceil_log2(x: int) -> int:
    """Exact ceil(lg x) for x >= 1."""
    if x < 1:
        raise InputError(f"ceil_log2 needs x >= 1, got {x}")
    return (x - 1).bit_length()


def integer_kth_root(A: int, k: int) -> int:
    """Floor of the real k-th root of A >= 0."""
    if A < 0:
        raise InputError(f"k-th root of negative integer {A}")
    if k < 1:
        raise InputError(f"root index must be >= 1, got {k}")
    if A < 2 or k == 1:
        return A
    # Newton from above; the start 2^ceil(bits/k) is >= the root.
    x = 1 << -(-A.bit_length() // k)
    while True:
        y = ((k - 1) * x + A // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > A:
        x -= 1
    while (x + 1) ** k <= A:
        x += 1
    return x
