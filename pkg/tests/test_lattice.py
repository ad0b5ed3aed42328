import random

import pytest
from hypothesis import given, strategies as st

from rpowdiv.errors import InputError, InvariantError
from rpowdiv.lattice import (
    HAVE_FPLLL,
    LatticeBasis,
    LinearDependenceError,
    ReducedBasis,
    dot,
    first_vector_bound_holds,
    integer_det,
    lll_reduce,
    verify_reduction,
)
from rpowdiv.oracle import shortest_vector_enum

BACKENDS = ["exact"] + (["fplll"] if HAVE_FPLLL else [])


def random_lower_triangular(rng, d, bits=64):
    rows = []
    for i in range(d):
        row = [rng.randrange(-(1 << bits), 1 << bits) for _ in range(i)]
        diag = 0
        while diag == 0:
            diag = rng.randrange(-(1 << bits), 1 << bits)
        rows.append(row + [diag] + [0] * (d - i - 1))
    return LatticeBasis(rows)


@pytest.mark.parametrize("backend", BACKENDS)
def test_dimension_one(backend):
    out = lll_reduce(LatticeBasis([[5]]), backend)
    assert out.first in ((5,), (-5,))


@pytest.mark.parametrize("backend", BACKENDS)
def test_identity(backend):
    out = lll_reduce(LatticeBasis([[1, 0], [0, 1]]), backend)
    assert dot(out.first, out.first) == 1


@pytest.mark.parametrize("backend", BACKENDS)
def test_small_example_meets_bound(backend):
    B = LatticeBasis([[12, 2], [13, 4]])
    assert B.determinant() == 22
    out = lll_reduce(B, backend, with_transform=True)
    w = out.first
    # ||w||^2 <= sqrt(2) * 22, squared to stay in integers
    assert dot(w, w) ** 2 <= 2 * 22**2
    assert shortest_vector_enum([[12, 2], [13, 4]], 6) == (1, 2)
    assert dot(w, w) == 5
    assert verify_reduction(B, out)


def test_verify_reduction_identity():
    I = LatticeBasis([[1, 0], [0, 1]])
    assert verify_reduction(I, ReducedBasis(I.rows))


def test_verify_reduction_rejects_doubled_row():
    B = LatticeBasis([[3, 0, 0], [1, 5, 0], [2, 7, 11]])
    doubled = ReducedBasis(((6, 0, 0), (1, 5, 0), (2, 7, 11)))
    assert not verify_reduction(B, doubled)
    # same check through the non-triangular path
    B2 = LatticeBasis([[1, 2], [3, 4]])
    assert not verify_reduction(B2, ReducedBasis(((2, 4), (3, 4))))
    assert verify_reduction(B2, ReducedBasis(((1, 0), (1, 2))))


def test_dependent_rows_rejected():
    with pytest.raises(LinearDependenceError):
        lll_reduce(LatticeBasis([[1, 2], [2, 4]]), "exact")
    with pytest.raises(InvariantError):
        lll_reduce(LatticeBasis([[0, 0], [0, 1]]))


def test_bad_shapes_rejected():
    with pytest.raises(InputError):
        LatticeBasis([[1, 2]])
    with pytest.raises(InputError):
        LatticeBasis([])
    with pytest.raises(InputError):
        lll_reduce(LatticeBasis([[1]]), "nope")


def test_lower_triangular_detection():
    assert LatticeBasis([[2, 0], [5, 3]]).is_lower_triangular()
    assert not LatticeBasis([[2, 1], [5, 3]]).is_lower_triangular()
    assert not LatticeBasis([[2, 0], [5, 0]]).is_lower_triangular()


def test_bareiss_against_cofactor_expansion():
    def cofactor(m):
        if len(m) == 1:
            return m[0][0]
        return sum(
            (-1) ** j * m[0][j] * cofactor([row[:j] + row[j + 1 :] for row in m[1:]])
            for j in range(len(m))
        )

    rng = random.Random(5)
    for _ in range(200):
        d = rng.randrange(1, 6)
        m = [[rng.randrange(-9, 10) for _ in range(d)] for _ in range(d)]
        assert integer_det(m) == cofactor(m)


@pytest.mark.parametrize("backend", BACKENDS)
def test_random_triangular_bases(backend):
    """500 random lower-triangular bases, d <= 25, 64-bit entries."""
    rng = random.Random(2024 + len(backend))
    for trial in range(500):
        d = rng.randrange(1, 26)
        B = random_lower_triangular(rng, d)
        out = lll_reduce(B, backend, with_transform=True)
        w = out.first
        assert any(w)
        assert dot(w, w) ** d <= (1 << (d * (d - 1) // 2)) * B.determinant() ** 2
        assert verify_reduction(B, out), trial
        assert abs(integer_det(out.transform)) == 1
        for i in range(d):
            row = [sum(out.transform[i][k] * B.rows[k][j] for k in range(d)) for j in range(d)]
            assert tuple(row) == out.rows[i]


@given(st.integers(1, 8), st.integers(0, 2**32))
def test_determinant_invariant_small_dim(d, seed):
    B = random_lower_triangular(random.Random(seed), d, bits=40)
    out = lll_reduce(B, "exact")
    assert abs(integer_det(out.rows)) == abs(B.determinant())


@given(st.integers(2, 5), st.integers(0, 2**32))
def test_first_vector_within_bound_of_shortest(d, seed):
    rng = random.Random(seed)
    rows = [[rng.randrange(-20, 21) for _ in range(d)] for _ in range(d)]
    if integer_det(rows) == 0:
        return
    B = LatticeBasis(rows)
    out = lll_reduce(B, "exact")
    assert verify_reduction(B, out)
    # LLL also guarantees ||w||^2 <= 2^(d-1) * lambda_1^2
    radius = 2 if d > 3 else 4
    s = shortest_vector_enum(rows, radius)
    assert dot(out.first, out.first) <= (1 << (d - 1)) * dot(s, s)


def test_bound_helper_is_exact():
    # d=2: ||w||^4 <= 2 det^2; w=(1,2), det=22 -> 25 <= 968
    assert first_vector_bound_holds((1, 2), 22)
    assert not first_vector_bound_holds((10, 10), 22)
