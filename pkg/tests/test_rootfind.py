import random

import pytest
from hypothesis import given, strategies as st

from rpowdiv import oracle
from rpowdiv.errors import InputError, InvariantError
from rpowdiv.poly import IntPoly, ModPoly, ceil_log2, content, primitive_part, reduce_mod
from rpowdiv.rootfind import (
    find_good_prime,
    gcd_evaluation_exponent,
    hensel_lift,
    heuristic_gcd,
    integer_roots,
    integer_roots_squarefree,
    primes_up_to,
    roots_mod_p,
)


def P(*c):
    return IntPoly(c)


def from_roots(roots, lead=1):
    f = P(lead)
    for x in roots:
        f = f * P(-x, 1)
    return f


# ----------------------------------------------------------------- hensel


def test_hensel_mod_9():
    assert hensel_lift(ModPoly((2, 0, 1), 9), 1, 3, 2) == 4


def test_hensel_k1_is_identity():
    assert hensel_lift(ModPoly((2, 0, 1), 3), 2, 3, 1) == 2


def test_hensel_mod_125():
    # 16^2 = 256 = 2*125 + 6; the only v = 1 (mod 5) with v^2 = 6 (mod 125)
    v = hensel_lift(ModPoly((-6, 0, 1), 125), 1, 5, 3)
    assert v == 16
    assert [w for w in range(1, 125, 5) if (w * w - 6) % 125 == 0] == [16]


def test_hensel_preconditions():
    f = ModPoly((2, 0, 1), 9)
    with pytest.raises(InputError):
        hensel_lift(f, 0, 3, 2)  # not a root
    with pytest.raises(InputError):
        hensel_lift(f, 1, 3, 3)  # modulus mismatch
    with pytest.raises(InputError):
        hensel_lift(ModPoly((0, 0, 1), 9), 0, 3, 2)  # double root


def test_hensel_uniqueness_exhaustive():
    """200 random cases, p < 20, k <= 4: enumeration finds exactly one lift."""
    rng = random.Random(7)
    primes = [2, 3, 5, 7, 11, 13, 17, 19]
    done = 0
    while done < 200:
        p = rng.choice(primes)
        k = rng.randrange(1, 5)
        pk = p**k
        coeffs = [rng.randrange(pk) for _ in range(rng.randrange(2, 7))]
        f = ModPoly(coeffs, pk)
        df = f.derivative()
        simple = [u for u in range(p) if f(u) % p == 0 and df(u) % p]
        if not simple:
            continue
        u = rng.choice(simple)
        v = hensel_lift(f, u, p, k)
        lifts = [w for w in range(u, pk, p) if f(w) == 0]
        assert lifts == [v]
        done += 1


# ------------------------------------------------------------ good prime


@pytest.mark.parametrize(
    "f, n, b, p",
    [(P(-1, 0, 1), 2, 2, 3), (P(0, -1, 1), 2, 2, 2), (P(0, 1), 1, 1, 2)],
)
def test_find_good_prime_examples(f, n, b, p):
    res = find_good_prime(f, n, b)
    assert res.p == p
    assert res.sieve_bound == 6 * n * b + 6 * n * ceil_log2(n)


def test_find_good_prime_rejects_non_squarefree():
    with pytest.raises(InvariantError):
        find_good_prime(P(1, 2, 1), 2, 2)


def _gf_gcd_degree(a, b, q):
    """Degree of gcd(a, b) in GF(q)[x]; coefficient lists ascending."""

    def trim(v):
        v = [x % q for x in v]
        while v and v[-1] == 0:
            v.pop()
        return v

    a, b = trim(a), trim(b)
    while b:
        inv = pow(b[-1], -1, q)
        while len(a) >= len(b):
            t = a[-1] * inv % q
            s = len(a) - len(b)
            for i, y in enumerate(b):
                a[s + i] = (a[s + i] - t * y) % q
            a = trim(a)
            if not a:
                break
        a, b = b, a
    return len(a) - 1


def _good_mod(f, q):
    c = [x % q for x in f.coeffs]
    if not any(c):
        return False
    dc = [i * x for i, x in enumerate(c)][1:]
    return _gf_gcd_degree(c, dc, q) == 0


@given(st.lists(st.integers(-(2**20), 2**20), min_size=2, max_size=9).filter(lambda c: c[-1] != 0))
def test_good_prime_is_least_and_bounded(c):
    f = IntPoly(c)
    df = IntPoly([i * a for i, a in enumerate(c)][1:])
    if oracle.gcd_classical(f, df).degree > 0:
        return
    n = f.degree
    b = max(n, ceil_log2(f.sup_norm()))
    res = find_good_prime(f, n, b)
    assert res.p <= 6 * n * b + 6 * n * ceil_log2(n)
    assert _good_mod(f, res.p)
    assert not any(_good_mod(f, q) for q in primes_up_to(res.p - 1))


def test_primes_up_to():
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert primes_up_to(1) == []


# ---------------------------------------------------------------- roots mod p


@pytest.mark.parametrize(
    "coeffs, p, want",
    [((2, 0, 1), 3, [1, 2]), ((1, 0, 1), 3, []), ((0, 1), 5, [0])],
)
def test_roots_mod_p(coeffs, p, want):
    assert sorted(roots_mod_p(ModPoly(coeffs, p), p)) == want


# ------------------------------------------------------------ squarefree roots


@pytest.mark.parametrize(
    "f, want",
    [(P(-6, -1, 1), (-2, 3)), (P(1, 0, 1), ()), (P(2, -3, -3, 2), (-1, 2))],
)
def test_squarefree_examples(f, want):
    n = f.degree
    b = max(n, ceil_log2(f.sup_norm()))
    assert integer_roots_squarefree(f, n, b) == want


def test_squarefree_preconditions():
    with pytest.raises(InputError):
        integer_roots_squarefree(P(2, 4), 1, 3)  # not primitive
    with pytest.raises(InputError):
        integer_roots_squarefree(P(1, 1), 2, 2)  # wrong degree
    with pytest.raises(InputError):
        integer_roots_squarefree(P(100, 1), 1, 1)  # norm above 2^b


# ------------------------------------------------------------------- gcd


@pytest.mark.parametrize(
    "f, g, h, ft, gt",
    [
        (P(2, -3, 1), P(3, -4, 1), P(-1, 1), P(-2, 1), P(-3, 1)),
        (P(-1, 1), P(-1, 1), P(-1, 1), P(1), P(1)),
        (P(0, 1), P(1, 1), P(1), P(0, 1), P(1, 1)),
    ],
)
def test_gcd_examples(f, g, h, ft, gt):
    t = heuristic_gcd(f, g, 2, 2)
    assert (t.h, t.f_cofactor, t.g_cofactor) == (h, ft, gt)
    assert t.c == gcd_evaluation_exponent(2, 2)


def test_gcd_evaluation_exponent_formula():
    # (2n+1) ceil(lg(n+1)) + 2n^2 + 2nb + n + b + 2 at n=2, b=2
    assert gcd_evaluation_exponent(2, 2) == 5 * 2 + 8 + 8 + 2 + 2 + 2


def test_gcd_rejects_two_imprimitive_inputs():
    with pytest.raises(InputError):
        heuristic_gcd(P(2, 2), P(4, 2), 1, 3)


def test_gcd_negative_leading_coefficient_normalized():
    t = heuristic_gcd(P(1, -1), P(-1, 0, 1), 2, 2)
    assert t.h == P(-1, 1)
    assert t.h * t.f_cofactor == P(1, -1)


def _random_poly(rng, deg, bits):
    c = [rng.randrange(-(1 << bits), (1 << bits) + 1) for _ in range(deg + 1)]
    while c[-1] == 0:
        c[-1] = rng.randrange(-(1 << bits), (1 << bits) + 1)
    return IntPoly(c)


def test_gcd_identities_500_pairs():
    rng = random.Random(11)
    for _ in range(500):
        common = _random_poly(rng, rng.randrange(0, 5), 6)
        a = _random_poly(rng, rng.randrange(0, 5), 8)
        b = _random_poly(rng, rng.randrange(0, 5), 8)
        f, g = common * a, common * b
        _, f = primitive_part(f)
        n = max(f.degree, g.degree, 1)
        b_ = max(n, ceil_log2(max(f.sup_norm(), g.sup_norm())))
        t = heuristic_gcd(f, g, n, b_)
        assert t.h * t.f_cofactor == f
        assert t.h * t.g_cofactor == g
        assert content(t.h) == 1 and t.h.lc > 0
        assert t.h == oracle.gcd_classical(f, g)
        # cofactor sizes stay within (n+1)^(1/2) 2^(n+b)
        for q in (t.h, t.f_cofactor, t.g_cofactor):
            assert q.sup_norm() ** 2 <= (n + 1) << (2 * (n + b_))


# ----------------------------------------------------------- integer roots


@pytest.mark.parametrize(
    "f, want",
    [(P(4, 0, -3, 1), (-1, 2)), (P(0, 0, 1), (0,)), (P(6, -5, 1), (2, 3)), (P(7), ()), (P(0, 3), (0,))],
)
def test_integer_roots_examples(f, want):
    assert integer_roots(f) == want


def test_integer_roots_rejects_zero():
    with pytest.raises(InputError):
        integer_roots(IntPoly())


def test_rational_root_excluded():
    assert integer_roots(P(-1, 2) * P(-3, 1)) == (3,)


@given(
    st.lists(st.integers(-(2**20), 2**20), min_size=1, max_size=6),
    st.integers(-50, 50).filter(bool),
    st.lists(st.integers(-(2**10), 2**10), max_size=4),
)
def test_planted_roots_found(roots, lead, extra):
    f = from_roots(roots, lead) * IntPoly(extra + [1])
    if f.is_zero():
        return
    got = set(integer_roots(f))
    assert set(roots) <= got
    assert all(f(x) == 0 for x in got)


@given(st.lists(st.integers(-(2**64), 2**64), min_size=2, max_size=12))
def test_roots_match_evaluation_on_random(c):
    f = IntPoly(c)
    if f.degree < 1:
        return
    got = integer_roots(f)
    assert list(got) == sorted(set(got))
    assert all(f(x) == 0 for x in got)
    t = next(a for a in f.coeffs if a)
    if abs(t) <= 2**52:
        assert set(got) == oracle.integer_roots_naive(f)
