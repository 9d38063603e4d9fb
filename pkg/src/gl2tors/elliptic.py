"""Elliptic curves over Q: invariants, point counts, mod-n image evidence,
and rational torsion.

Curves are long Weierstrass models [a1, a2, a3, a4, a6] with rational
coefficients. Point counts use quadratic character sums on an integral
model; torsion uses the integral short model and divisor bounds on y.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

import numpy as np

from .arith import is_probable_prime, square_divisor_roots
from .groups import GenGroup, closure
from .modmat import GMat
from .polynomial import UniPoly, rational_roots


@dataclass(frozen=True)
class CurveQ:
    """A nonsingular long Weierstrass model over Q."""

    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a6: Fraction

    def __post_init__(self) -> None:
        for name in ("a1", "a2", "a3", "a4", "a6"):
            v = getattr(self, name)
            if isinstance(v, int):
                object.__setattr__(self, name, Fraction(v))
            elif not isinstance(v, Fraction):
                raise TypeError(f"{name} must be rational")
        if curve_invariants(self).disc == 0:
            raise ValueError("singular model: discriminant is zero")

    @classmethod
    def from_list(cls, a) -> "CurveQ":
        if len(a) != 5:
            raise ValueError(f"expected [a1,a2,a3,a4,a6], got {len(a)} values")
        return cls(*a)

    def coefficients(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def __repr__(self) -> str:
        return "[" + ",".join(str(c) for c in self.coefficients()) + "]"


def parse_curve(text: str) -> CurveQ:
    """Parse '[a1,a2,a3,a4,a6]' with integer or p/q entries."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"expected [a1,a2,a3,a4,a6], got {text!r}")
    parts = s[1:-1].split(",")
    if len(parts) != 5:
        raise ValueError(f"expected 5 coefficients, got {len(parts)}")
    return CurveQ(*(Fraction(p.strip()) for p in parts))


@dataclass(frozen=True)
class Invariants:
    b2: Fraction
    b4: Fraction
    b6: Fraction
    b8: Fraction
    c4: Fraction
    c6: Fraction
    disc: Fraction
    j: Fraction | None  # None when c4^3 and disc share the zero (impossible
    # on nonsingular models, so in practice always a Fraction)


def curve_invariants(E: CurveQ) -> Invariants:
    """Standard b, c invariants, discriminant, and j."""
    a1, a2, a3, a4, a6 = E.coefficients()
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = (a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3
          - a4 * a4)
    c4 = b2 * b2 - 24 * b4
    c6 = -b2 ** 3 + 36 * b2 * b4 - 216 * b6
    disc = (-b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6)
    j = c4 ** 3 / disc if disc != 0 else None
    return Invariants(b2, b4, b6, b8, c4, c6, disc, j)


def curve_Et(t) -> CurveQ:
    """The one-parameter family y^2 = x^3 - 3t(t^3-24)x + 2(t^6-36t^3+216),
    nonsingular away from t = 3 (where it degenerates)."""
    t = Fraction(t)
    if t == 3:
        raise ValueError("t = 3 gives a singular fiber")
    return CurveQ(0, 0, 0, -3 * t * (t ** 3 - 24),
                  2 * (t ** 6 - 36 * t ** 3 + 216))


def _integral_model(E: CurveQ) -> tuple[tuple[int, int, int, int, int], int]:
    """(u^i * a_i) integral model and the scaling u (lcm of denominators)."""
    u = 1
    for c in E.coefficients():
        u = u * c.denominator // gcd(u, c.denominator)
    a1, a2, a3, a4, a6 = E.coefficients()
    return (int(a1 * u), int(a2 * u ** 2), int(a3 * u ** 3),
            int(a4 * u ** 4), int(a6 * u ** 6)), u


def _bad_primes_guard(E: CurveQ, p: int) -> tuple[int, int, int, int, int]:
    if not is_probable_prime(p):
        raise ValueError(f"{p} is not prime")
    ai, u = _integral_model(E)
    if u % p == 0:
        raise ValueError(f"p = {p} divides the scaling denominator")
    Ei = CurveQ(*ai)
    disc = curve_invariants(Ei).disc
    if disc.numerator % p == 0:
        raise ValueError(f"bad reduction at p = {p}")
    return ai


def count_points(E: CurveQ, p: int) -> tuple[int, int]:
    """(#E(F_p) including the point at infinity, a_p = p + 1 - #E)."""
    ai = _bad_primes_guard(E, p)
    a1, a2, a3, a4, a6 = ai
    if p == 2:
        n = 1
        for x in range(2):
            for y in range(2):
                lhs = (y * y + a1 * x * y + a3 * y) % 2
                rhs = (x ** 3 + a2 * x * x + a4 * x + a6) % 2
                if lhs == rhs:
                    n += 1
        return n, p + 1 - n
    Ei = CurveQ(*ai)
    inv = curve_invariants(Ei)
    b2, b4, b6 = int(inv.b2) % p, int(inv.b4) % p, int(inv.b6) % p
    x = np.arange(p, dtype=np.int64)
    g = (4 * x % p * x % p * x + b2 * x % p * x + 2 * b4 * x + b6) % p
    chi = np.full(p, -1, dtype=np.int64)
    chi[(x * x) % p] = 1
    chi[0] = 0
    s = int(chi[g].sum())
    n = p + 1 + s
    return n, -s


def count_points_naive(E: CurveQ, p: int) -> tuple[int, int]:
    """Direct double loop over the long model; test oracle for small p."""
    ai = _bad_primes_guard(E, p)
    a1, a2, a3, a4, a6 = (v % p for v in ai)
    n = 1
    for x in range(p):
        rhs = (x ** 3 + a2 * x * x + a4 * x + a6) % p
        for y in range(p):
            if (y * y + a1 * x * y + a3 * y) % p == rhs:
                n += 1
    return n, p + 1 - n


def _prime_range(bound: int) -> list[int]:
    if bound < 2:
        return []
    sieve = np.ones(bound + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, int(bound ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i:: i] = False
    return [int(p) for p in np.nonzero(sieve)[0]]


@dataclass(frozen=True)
class FrobSignature:
    """Observed (trace, det) classes mod ell over good primes up to a
    bound, with multiplicities and the first prime realizing each."""

    ell: int
    bound: int
    counts: dict
    first_prime: dict

    @property
    def classes(self) -> frozenset:
        return frozenset(self.counts)


def frobenius_signature(E: CurveQ, ell: int, bound: int) -> FrobSignature:
    """Sample (a_p mod ell, p mod ell) over good primes p <= bound."""
    if ell not in (2, 3, 9):
        raise ValueError(f"level must be 2, 3 or 9, got {ell}")
    if bound < 20:
        raise ValueError(f"prime bound must be >= 20, got {bound}")
    ai, u = _integral_model(E)
    disc_num = curve_invariants(CurveQ(*ai)).disc.numerator
    counts: dict[tuple[int, int], int] = {}
    first: dict[tuple[int, int], int] = {}
    for p in _prime_range(bound):
        if ell % p == 0 or u % p == 0 or disc_num % p == 0:
            continue
        _, a_p = count_points(E, p)
        cls = (a_p % ell, p % ell)
        counts[cls] = counts.get(cls, 0) + 1
        first.setdefault(cls, p)
    return FrobSignature(ell, bound, dict(sorted(counts.items())),
                         dict(sorted(first.items())))


def group_class_set(H: GenGroup) -> frozenset:
    """(trace, det) classes of <H, -I>, the coarsest Frobenius-visible
    invariant of H up to the quadratic twist ambiguity."""
    n = H.modulus
    gens = list(H.generators) + [GMat(-1, 0, 0, -1, n)]
    G = closure(gens, n)
    return frozenset((M.trace(), M.det()) for M in G.elements())


@dataclass(frozen=True)
class IdentifyResult:
    """Containment filtering of candidate images against observed classes.

    A candidate is eliminated when some observed class falls outside its
    class set (rigorous, up to twist); survivors are merely consistent
    with the data. uncovered maps each survivor to the classes it allows
    that were never observed."""

    ell: int
    bound: int
    observed: frozenset
    survivors: tuple[str, ...]
    eliminated: tuple[tuple[str, int, tuple], ...]
    uncovered: dict


def identify_image(E: CurveQ, ell: int, candidates,
                   bound: int) -> IdentifyResult:
    """Filter candidate mod-ell images by Frobenius class containment."""
    cands = list(candidates)
    if not cands:
        raise ValueError("empty candidate list")
    for H in cands:
        if H.modulus != ell:
            raise ValueError(
                f"candidate {H.label!r} has level {H.modulus}, not {ell}")
    sig = frobenius_signature(E, ell, bound)
    survivors = []
    eliminated = []
    uncovered = {}
    for H in cands:
        allowed = group_class_set(H)
        bad = sorted(c for c in sig.classes if c not in allowed)
        if bad:
            c = min(bad, key=lambda c: sig.first_prime[c])
            eliminated.append((H.label, sig.first_prime[c], c))
        else:
            survivors.append(H.label)
            uncovered[H.label] = tuple(sorted(allowed - sig.classes))
    return IdentifyResult(ell, bound, sig.classes, tuple(survivors),
                          tuple(eliminated), uncovered)


def two_torsion_cubic(E: CurveQ) -> UniPoly:
    """The 2-division cubic 4x^3 + b2 x^2 + 2 b4 x + b6."""
    inv = curve_invariants(E)
    return UniPoly.from_coeffs([inv.b6, 2 * inv.b4, inv.b2, Fraction(4)])


def two_torsion_image(E: CurveQ) -> str:
    """Galois image on E[2] by factoring the 2-division cubic:
    '2Cs' (split), '2B' (one root), '2Cn' (irreducible, square
    discriminant), or 'GL2(F2)'."""
    cubic = two_torsion_cubic(E)
    nroots = len(rational_roots(cubic))
    if nroots == 3:
        return "2Cs"
    if nroots == 1:
        return "2B"
    a, b = cubic.coeff(3), cubic.coeff(2)
    c, d = cubic.coeff(1), cubic.coeff(0)
    disc = (18 * a * b * c * d - 4 * b ** 3 * d + b * b * c * c
            - 4 * a * c ** 3 - 27 * a * a * d * d)
    if disc > 0:
        num, den = disc.numerator, disc.denominator
        if isqrt(num) ** 2 == num and isqrt(den) ** 2 == den:
            return "2Cn"
    return "GL2(F2)"


def rational_3isogeny_kernel(E: CurveQ) -> list[Fraction]:
    """x-coordinates of rational order-3 points: rational roots of the
    3-division polynomial 3x^4 + b2 x^3 + 3 b4 x^2 + 3 b6 x + b8."""
    inv = curve_invariants(E)
    psi3 = UniPoly.from_coeffs([inv.b8, 3 * inv.b6, 3 * inv.b4, inv.b2,
                                Fraction(3)])
    return rational_roots(psi3)


# The thirteen j-invariants of CM curves over Q.
CM_J = frozenset(Fraction(v) for v in (
    0, 54000, -12288000, 1728, 287496, -3375, 16581375, 8000, -32768,
    -884736, -884736000, -147197952000, -262537412640768000))


def is_cm_j(j) -> bool:
    """Whether j is one of the thirteen rational CM j-invariants."""
    return Fraction(j) in CM_J


def _short_model(E: CurveQ) -> tuple[int, int]:
    """Integral A, B with E isomorphic over Q to y^2 = x^3 + Ax + B."""
    inv = curve_invariants(E)
    c4, c6 = inv.c4, inv.c6
    u = 1
    for c in (c4, c6):
        u = u * c.denominator // gcd(u, c.denominator)
    return int(-27 * c4 * u ** 4), int(-54 * c6 * u ** 6)


def _ec_add(P, Q, A):
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if y1 == -y2:
            return None
        lam = (3 * x1 * x1 + A) / (2 * y1)
    else:
        lam = (y2 - y1) / (x2 - x1)
    x3 = lam * lam - x1 - x2
    return (x3, lam * (x1 - x3) - y1)


def _point_order(P, A, cap: int = 12) -> int | None:
    """Order of P if at most cap, else None."""
    mult = None
    for k in range(1, cap + 1):
        mult = _ec_add(mult, P, A)
        if mult is None:
            return k
    return None


def torsion_over_Q(E: CurveQ):
    """Torsion structure of E(Q): (m,) for cyclic C_m, (2, 2k) for
    C2 x C2k. Integral points on the short model with y = 0 or
    y^2 dividing 4A^3 + 27B^2 cover all torsion; each candidate is kept
    only when its order is at most 12."""
    A, B = _short_model(E)
    D = 4 * A ** 3 + 27 * B ** 2
    cubic = UniPoly.from_coeffs([Fraction(B), Fraction(A), Fraction(0),
                                 Fraction(1)])
    x_roots = rational_roots(cubic)
    two_tor = [(r, Fraction(0)) for r in x_roots if r.denominator == 1]
    points = set(two_tor)
    for y in square_divisor_roots(D):
        shifted = UniPoly.from_coeffs([Fraction(B - y * y), Fraction(A),
                                       Fraction(0), Fraction(1)])
        for r in rational_roots(shifted):
            if r.denominator == 1:
                points.add((r, Fraction(y)))
                points.add((r, Fraction(-y)))
    torsion = set()
    for P in points:
        if _point_order(P, Fraction(A)) is not None:
            torsion.add(P)
    n = len(torsion) + 1
    full_two = sum(1 for (x, y) in torsion if y == 0) == 3
    if full_two:
        assert n % 4 == 0
        structure = (2, n // 2)
    else:
        structure = (n,)
    allowed = {(1,), (2,), (3,), (4,), (5,), (6,), (7,), (8,), (9,), (10,),
               (12,), (2, 2), (2, 4), (2, 6), (2, 8)}
    assert structure in allowed, f"impossible torsion {structure}"
    return structure
