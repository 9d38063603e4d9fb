"""Polynomial arithmetic, parsing, root finding, and resultants."""

from fractions import Fraction

import pytest

from gl2tors.polynomial import (BiPoly, PolyParseError, UniPoly,
                                farey_fractions, parse_bipoly, parse_poly,
                                poly_gcd, rational_roots, resultant)

X = UniPoly.x()


def test_unipoly_basics():
    P = UniPoly.from_coeffs([1, -2, 0, 1])  # 1 - 2x + x^3
    assert P.degree == 3
    assert P.coeff(1) == -2
    assert P(2) == 5
    assert P(Fraction(1, 2)) == Fraction(1, 8)
    assert P.derivative() == UniPoly.from_coeffs([-2, 0, 3])
    assert UniPoly().degree == -1
    assert UniPoly().is_zero()
    with pytest.raises(ValueError):
        UniPoly().leading()


def test_unipoly_arithmetic():
    assert (X + 1) * (X - 1) == X ** 2 - 1
    assert (X + 1) ** 3 == X ** 3 + 3 * X ** 2 + 3 * X + 1
    assert 2 * X - X == X
    q, r = (X ** 3 + 1).divmod(X + 1)
    assert q == X ** 2 - X + 1 and r.is_zero()
    q, r = (X ** 2 + 1).divmod(X - 1)
    assert q == X + 1 and r == 2
    assert (X ** 2 - 1).exact_div(X - 1) == X + 1
    with pytest.raises(ValueError, match="not exact"):
        (X ** 2 + 1).exact_div(X - 1)
    with pytest.raises(ZeroDivisionError):
        X.divmod(UniPoly())


def test_integer_coeffs():
    P = parse_poly("1/2*x^2 - 1/3")
    assert P.integer_coeffs() == [-2, 0, 3]
    assert parse_poly("-x + 1").integer_coeffs() == [1, -1]
    assert parse_poly("4*x^2 - 8").integer_coeffs() == [-2, 0, 1]
    with pytest.raises(ValueError):
        UniPoly().integer_coeffs()


def test_parse_poly_values():
    P = parse_poly("x^3 - 2*x + 1")
    assert P == X ** 3 - 2 * X + 1
    assert parse_poly("(1 - x)^2") == 1 - 2 * X + X ** 2
    assert parse_poly("2/3*x").coeff(1) == Fraction(2, 3)
    assert parse_poly("-x^2")(2) == -4
    assert parse_poly("2 - -3")(0) == 5
    assert parse_poly("t^2 + 1", var="t") == X ** 2 + 1


def test_parse_poly_errors():
    with pytest.raises(PolyParseError, match="unexpected token"):
        parse_poly("x**2")
    with pytest.raises(PolyParseError, match="trailing"):
        parse_poly("2x")
    with pytest.raises(PolyParseError, match="expected 'num'"):
        parse_poly("x^-1")
    with pytest.raises(PolyParseError, match="zero denominator"):
        parse_poly("1/0")
    with pytest.raises(PolyParseError, match="unknown variable"):
        parse_poly("y")
    with pytest.raises(PolyParseError, match="unexpected end"):
        parse_poly("x + ")
    with pytest.raises(PolyParseError, match="unexpected character"):
        parse_poly("x $")


def test_parse_bipoly():
    F = parse_bipoly("s^2*t - 3*s + t^2")
    assert F(1, 2) == 3
    assert F.degree(0) == 2 and F.degree(1) == 2
    assert parse_bipoly("s*t^2 - 1")(2, 3) == 17
    G = parse_bipoly("u - v", vars=("u", "v"))
    assert G(5, 3) == 2


def test_bipoly_helpers():
    F = parse_bipoly("2/3*s + 4/3*t")
    assert F.primitive() == parse_bipoly("s + 2*t")
    assert (X ** 2 + 1).to_bipoly(1) == parse_bipoly("t^2 + 1")
    assert parse_bipoly("s^2*t").derivative(0) == parse_bipoly("2*s*t")
    cs = parse_bipoly("s^2*t + s + t^3").coeffs_in(0)
    assert cs[0] == X ** 3 and cs[1] == 1 and cs[2] == X


def test_farey_fractions():
    grid = farey_fractions(2)
    assert grid == [Fraction(v) for v in
                    (-2, -1, Fraction(-1, 2), 0, Fraction(1, 2), 1, 2)]
    assert farey_fractions(1) == [-1, 0, 1]
    with pytest.raises(ValueError):
        farey_fractions(0)


def test_poly_gcd():
    g = poly_gcd(X ** 2 - 1, (X - 1) * (X + 2))
    assert g == X - 1
    assert poly_gcd(X ** 2 - 1, UniPoly()) == X ** 2 - 1
    assert poly_gcd(2 * X + 2, 4 * X + 4) == X + 1


def test_rational_roots_small():
    assert rational_roots(X ** 2 - 1) == [-1, 1]
    assert rational_roots(X ** 2 + 3) == []
    assert rational_roots(X ** 3 - 27) == [3]
    assert rational_roots(parse_poly(
        "3*x^4 + 19*x^3 + 3*x^2 + 22*x + 19")) == [Fraction(-19, 3)]
    assert rational_roots(3 * X ** 4 - 24 * X) == [0, 2]
    assert rational_roots(parse_poly("3*x^4 - 6*x^2 + 3*x - 1")) == []
    assert rational_roots((X - 1) ** 2) == [1]
    assert rational_roots(X) == [0]
    assert rational_roots(UniPoly.constant(5)) == []
    with pytest.raises(ValueError):
        rational_roots(UniPoly())


def test_rational_roots_large_coefficients():
    # Outer coefficients far beyond the factoring cutoff force the
    # modular reconstruction path.
    K = 2 ** 305 + 7
    P = (X - 1) * (3 * X + 2) * (K * X ** 2 + (K + 1) * X + K)
    assert P.leading().numerator.bit_length() > 300
    assert rational_roots(P) == [Fraction(-2, 3), 1]


def test_resultant_linear():
    F = parse_bipoly("s - t")
    G = parse_bipoly("s + t")
    assert resultant(F, G, 0) == UniPoly.from_coeffs([0, 2])
    assert resultant(F, G, 1) == UniPoly.from_coeffs([0, -2])


def test_resultant_common_factor_vanishes():
    F = parse_bipoly("s - t")
    assert resultant(F, parse_bipoly("2*s - 2*t"), 0).is_zero()


def test_resultant_interpolated():
    # Sylvester size 7 exceeds the direct-expansion cutoff, so this path
    # is evaluated at nodes and interpolated.
    F = parse_bipoly("(s - t)^4")
    G = parse_bipoly("(s + t)^3")
    R = resultant(F, G, 0)
    assert R == 4096 * X ** 12


def test_resultant_degree_guard():
    with pytest.raises(ValueError, match="positive degree"):
        resultant(parse_bipoly("t + 1"), parse_bipoly("s"), 0)
