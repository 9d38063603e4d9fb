"""Ring and matrix arithmetic mod n."""

import random

import pytest

from gl2tors.modmat import (GMat, ModInt, TorVec, code_det, code_mul,
                            det_trace, element_order, least_nonresidue,
                            mat_inverse, mat_mul, vector_exact_order)


def test_modint_arithmetic():
    a = ModInt(7, 9)
    b = ModInt(5, 9)
    assert (a + b).value == 3
    assert (a - b).value == 2
    assert (a * b).value == 8
    assert (-a).value == 2
    assert (a + 4).value == 2
    assert a.inverse().value == 4  # 7*4 = 28 = 1 mod 9


def test_modint_errors():
    with pytest.raises(ValueError):
        ModInt(1, 9) + ModInt(1, 3)
    with pytest.raises(ValueError):
        ModInt(3, 9).inverse()
    with pytest.raises(ValueError):
        ModInt(0, 1)


def test_swap_times_diagonal():
    # (0,1;1,0) * diag(2,5) = (0,5;2,0) mod 9
    prod = mat_mul(GMat.swap(9), GMat.diagonal(2, 5, 9))
    assert prod.entries() == (0, 5, 2, 0)


def test_det_trace():
    d, t = det_trace(GMat(2, 2, 3, 8, 9))
    assert d.value == 1  # 16 - 6 = 10 = 1 mod 9
    assert t.value == 1


def test_inverse_values():
    assert mat_inverse(GMat(1, 1, 0, 1, 9)).entries() == (1, 8, 0, 1)
    assert mat_inverse(GMat.diagonal(1, 2, 3)).entries() == (1, 0, 0, 2)
    M = GMat(2, 2, 3, 8, 9)
    assert mat_mul(M, mat_inverse(M)) == GMat.identity(9)


def test_inverse_error_reports_det():
    with pytest.raises(ValueError, match="det = 3"):
        mat_inverse(GMat.diagonal(1, 3, 9))


def test_element_orders():
    assert element_order(GMat.reflect(9)) == 2
    assert element_order(GMat(1, 1, 0, 1, 3)) == 3
    assert element_order(GMat(1, 1, 0, 1, 9)) == 9
    assert element_order(GMat.identity(7)) == 1
    with pytest.raises(ValueError):
        element_order(GMat.diagonal(0, 1, 9))


def test_least_nonresidue():
    assert least_nonresidue(3).value == 2
    assert least_nonresidue(5).value == 2
    assert least_nonresidue(7).value == 3
    with pytest.raises(ValueError):
        least_nonresidue(2)
    with pytest.raises(ValueError):
        least_nonresidue(9)


def test_vector_exact_order():
    assert vector_exact_order(TorVec(3, 6, 9)) == 3
    assert vector_exact_order(TorVec(1, 0, 9)) == 9
    assert vector_exact_order(TorVec(0, 0, 9)) == 1
    full = [1 for x in range(9) for y in range(9)
            if vector_exact_order(TorVec(x, y, 9)) == 9]
    assert len(full) == 72


def test_row_action():
    # v*M with v a row vector: (1,0)*(a,b;c,d) = (a,b)
    M = GMat(4, 5, 6, 7, 9)
    assert TorVec(1, 0, 9).apply(M) == TorVec(4, 5, 9)
    assert TorVec(0, 1, 9).apply(M) == TorVec(6, 7, 9)
    with pytest.raises(ValueError):
        TorVec(1, 0, 3).apply(M)


def test_code_roundtrip_and_mul():
    rng = random.Random(101)
    for _ in range(1000):
        n = rng.choice((3, 9, 27))
        A = GMat(rng.randrange(n), rng.randrange(n), rng.randrange(n),
                 rng.randrange(n), n)
        B = GMat(rng.randrange(n), rng.randrange(n), rng.randrange(n),
                 rng.randrange(n), n)
        assert GMat.from_code(A.code(), n) == A
        assert code_mul(A.code(), B.code(), n) == mat_mul(A, B).code()
        assert code_det(A.code(), n) == A.det()


def test_det_multiplicative_random():
    rng = random.Random(7)
    for _ in range(1000):
        n = rng.choice((9, 27))
        A = GMat(rng.randrange(n), rng.randrange(n), rng.randrange(n),
                 rng.randrange(n), n)
        B = GMat(rng.randrange(n), rng.randrange(n), rng.randrange(n),
                 rng.randrange(n), n)
        assert mat_mul(A, B).det() == A.det() * B.det() % n


def test_random_inverses():
    rng = random.Random(13)
    done = 0
    while done < 500:
        n = rng.choice((9, 27))
        A = GMat(rng.randrange(n), rng.randrange(n), rng.randrange(n),
                 rng.randrange(n), n)
        if not A.is_invertible():
            continue
        assert mat_mul(A, mat_inverse(A)) == GMat.identity(n)
        done += 1
