"""Named j-maps, fiber-product curves, and exact bounded-height searches.

Heights are measured on p/q in lowest terms as max(|p|, q); a height-H
search sweeps the full grid of such rationals. Searches are exhaustive
within the grid and are reported as evidence, never as completeness
proofs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .polynomial import BiPoly, UniPoly, farey_fractions, poly_gcd


class _Pole:
    """Sentinel for evaluation at a zero of the denominator."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "pole"


POLE = _Pole()


@dataclass(frozen=True)
class JMap:
    """A rational function num/den in one variable, in lowest terms."""

    label: str
    num: UniPoly
    den: UniPoly

    def __post_init__(self) -> None:
        if self.den.is_zero():
            raise ValueError("zero denominator")
        g = poly_gcd(self.num, self.den)
        if g.degree > 0:
            raise ValueError(
                f"num and den share the factor {g!r}; reduce first")

    def __call__(self, x):
        return jmap_eval(self, x)


def jmap_eval(m: JMap, x) -> Fraction | _Pole:
    """Value of the map at x; POLE when the denominator vanishes there."""
    d = m.den(x)
    if d == 0:
        return POLE
    return m.num(x) / d


def _u(*low_to_high) -> UniPoly:
    return UniPoly.from_coeffs(low_to_high)


X = UniPoly.x()

# Each map is assembled from its factored form; construction arithmetic
# is the only source of the expanded coefficients.
_JMAPS = {
    "2B": JMap("2B", 256 * (X + 1) ** 3, X),
    "3Cs.1.1": JMap(
        "3Cs.1.1",
        27 * (X + 1) ** 3 * (X + 3) ** 3 * (X ** 2 + 3) ** 3,
        X ** 3 * (X ** 2 + 3 * X + 3) ** 3),
    "9B0-9a": JMap(
        "9B0-9a",
        (X + 3) ** 3 * (X ** 3 + 9 * X ** 2 + 27 * X + 3) ** 3,
        X * (X ** 2 + 9 * X + 27)),
    "9H0-9b": JMap(
        "9H0-9b",
        (X ** 3 - 3 * X ** 2 - 9 * X + 3) ** 3
        * (X ** 3 + 9 * X ** 2 - 9 * X - 9) ** 3
        * (X ** 6 - 18 * X ** 5 + 171 * X ** 4 + 180 * X ** 3
           - 297 * X ** 2 - 162 * X + 189) ** 3,
        8 * (X ** 2 - 1) ** 3 * (X ** 2 + 3) ** 9
        * (X ** 3 - 9 * X ** 2 - 9 * X + 9) ** 3),
    "no-9-isogeny": JMap(
        "no-9-isogeny",
        (X + 3) * (X ** 2 - 3 * X + 9) * (X ** 3 + 3) ** 3,
        X ** 3),
    "Et": JMap("Et", X ** 3 * (X ** 3 - 24) ** 3, X ** 3 - 27),
}

JMAP_LABELS = tuple(sorted(_JMAPS))


def named_jmap(label: str) -> JMap:
    """One of the six built-in maps; see JMAP_LABELS."""
    if label not in _JMAPS:
        raise ValueError(f"unknown j-map {label!r}; expected one of "
                         f"{', '.join(JMAP_LABELS)}")
    return _JMAPS[label]


@dataclass(frozen=True)
class PlaneCurve:
    """An affine plane curve F(s, t) = 0, with optional fiber provenance.

    When the curve came from equating two j-maps, jmap_s and jmap_t hold
    them and the pole loci (denominator zero sets) are part of the curve.
    """

    F: BiPoly
    jmap_s: JMap | None = None
    jmap_t: JMap | None = None

    @property
    def label(self) -> str:
        if self.jmap_s is not None and self.jmap_t is not None:
            return f"fiber({self.jmap_s.label},{self.jmap_t.label})"
        return "plane-curve"


def fiber_curve(a: JMap, b: JMap) -> PlaneCurve:
    """The curve num_a(s)*den_b(t) - num_b(t)*den_a(s) = 0 whose points
    off the pole loci are pairs with equal j-value."""
    F = (a.num.to_bipoly(0) * b.den.to_bipoly(1)
         - b.num.to_bipoly(1) * a.den.to_bipoly(0))
    return PlaneCurve(F.primitive(), a, b)


@dataclass(frozen=True)
class FiberPoint:
    """A rational point on a fiber curve, classified."""

    s: Fraction
    t: Fraction
    kind: str  # "finite" or "pole"
    j: Fraction | None


def search_plane(curve: PlaneCurve, height: int) -> list[tuple]:
    """All grid points (s, t) with F(s, t) = 0, sorted.

    Fiber curves are searched by j-value matching: evaluate both maps on
    the grid, intersect by value, and pair up pole parameters; this is
    exactly the zero set of F on the grid. Other curves are swept
    directly."""
    grid = farey_fractions(height)
    if curve.jmap_s is not None and curve.jmap_t is not None:
        by_j: dict[Fraction, list[Fraction]] = {}
        s_poles = []
        for s in grid:
            v = jmap_eval(curve.jmap_s, s)
            if v is POLE:
                s_poles.append(s)
            else:
                by_j.setdefault(v, []).append(s)
        out = []
        t_poles = []
        for t in grid:
            v = jmap_eval(curve.jmap_t, t)
            if v is POLE:
                t_poles.append(t)
            elif v in by_j:
                out.extend((s, t) for s in by_j[v])
        out.extend((s, t) for s in s_poles for t in t_poles)
        return sorted(out)
    return sorted((s, t) for s in grid for t in grid
                  if curve.F(s, t) == 0)


def classify_fiber_point(curve: PlaneCurve, s, t) -> FiberPoint:
    """Tag a point of a fiber curve as a pole pair or a finite j-match."""
    if curve.jmap_s is None or curve.jmap_t is None:
        raise ValueError("curve has no fiber provenance")
    vs = jmap_eval(curve.jmap_s, s)
    vt = jmap_eval(curve.jmap_t, t)
    if vs is POLE or vt is POLE:
        return FiberPoint(Fraction(s), Fraction(t), "pole", None)
    if vs != vt:
        raise ValueError(f"({s},{t}) is not on the fiber curve")
    return FiberPoint(Fraction(s), Fraction(t), "finite", vs)


def _sqrt_exact(v: Fraction) -> Fraction | None:
    if v < 0:
        return None
    pn, qd = v.numerator, v.denominator
    rp, rq = isqrt(pn), isqrt(qd)
    if rp * rp == pn and rq * rq == qd:
        return Fraction(rp, rq)
    return None


def search_hyperelliptic(h: UniPoly, f: UniPoly,
                         height: int) -> list[tuple]:
    """Rational points (x, y) with y^2 + h(x)*y = f(x), x on the height
    grid, found by exact square testing of the completed square."""
    out = []
    for x in farey_fractions(height):
        hv, fv = h(x), f(x)
        disc = hv * hv + 4 * fv
        r = _sqrt_exact(disc)
        if r is None:
            continue
        ys = {(-hv + r) / 2, (-hv - r) / 2}
        out.extend((x, y) for y in sorted(ys))
    return sorted(out)


@dataclass(frozen=True)
class DescentHit:
    """A parameter found by one of the two square conditions, flagged."""

    t: Fraction
    case: str  # "b=0" or "a=0"
    flag: str  # "", "cm", or "excluded-singular"


_CUBIC = X ** 3 - 27


def zeta3_descent_search(height: int) -> list[DescentHit]:
    """Parameters t where y^2 = t^3 - 27 forces y into Q(zeta_3) with
    2ab = 0: either y = a rational (t^3 - 27 square) or y = b*sqrt(-3)
    ((27 - t^3)/3 square). Singular t = 3 is flagged, as are the CM
    parameters t = 0 and t = -6."""
    hits = []
    for t in farey_fractions(height):
        v = _CUBIC(t)
        if _sqrt_exact(v) is not None:
            hits.append(_flag_hit(t, "b=0"))
        if _sqrt_exact(-v / 3) is not None:
            hits.append(_flag_hit(t, "a=0"))
    return sorted(hits, key=lambda h: (h.t, h.case))


def _flag_hit(t: Fraction, case: str) -> DescentHit:
    if t == 3:
        return DescentHit(t, case, "excluded-singular")
    if t in (0, -6):
        return DescentHit(t, case, "cm")
    return DescentHit(t, case, "")
