"""Subgroups of GL2(Z/nZ): closure, standard constructions, classification.

Groups are stored as generator lists plus a lazily computed element set
(packed integer codes, see modmat.code_mul). All iteration is in sorted
code order so results are deterministic.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from math import gcd

from .modmat import (GMat, ModInt, code_det, code_mul, code_trace,
                     element_order, least_nonresidue, mat_inverse)


def gl2_order(n: int) -> int:
    """|GL2(Z/nZ)| = n^4 * prod_{p|n} (1 - 1/p)(1 - 1/p^2)."""
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    out = n ** 4
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out = out // p * (p - 1)
            out = out // (p * p) * (p * p - 1)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        p = m
        out = out // p * (p - 1)
        out = out // (p * p) * (p * p - 1)
    return out


def closure_codes(gen_codes, n: int) -> frozenset[int]:
    """Set of all products of the given packed generators (BFS closure)."""
    ident = GMat.identity(n).code()
    gens = sorted(set(gen_codes))
    for g in gens:
        if gcd(code_det(g, n), n) != 1:
            raise ValueError(
                f"generator not invertible mod {n}: det = {code_det(g, n)}")
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = code_mul(x, g, n)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


@dataclass(frozen=True)
class GenGroup:
    """A subgroup of GL2(Z/nZ) given by generators, elements on demand."""

    modulus: int
    generators: tuple[GMat, ...]
    label: str = ""
    _codes: frozenset[int] | None = field(default=None, repr=False,
                                          compare=False)

    @classmethod
    def from_generators(cls, gens, n: int, label: str = "") -> "GenGroup":
        mats = tuple(g if isinstance(g, GMat) else GMat.from_tuple(g, n)
                     for g in gens)
        for g in mats:
            if g.modulus != n:
                raise ValueError(
                    f"generator modulus {g.modulus} does not match {n}")
            if not g.is_invertible():
                raise ValueError(
                    f"generator not invertible mod {n}: det = {g.det()}")
        return cls(n, mats, label)

    @classmethod
    def from_codes(cls, codes, n: int, label: str = "") -> "GenGroup":
        """Wrap an already closed element set, picking greedy generators."""
        codes = frozenset(codes)
        gens = greedy_generators(codes, n)
        mats = tuple(GMat.from_code(g, n) for g in gens)
        return cls(n, mats, label, codes)

    @property
    def element_codes(self) -> frozenset[int]:
        if self._codes is None:
            codes = closure_codes((g.code() for g in self.generators),
                                  self.modulus)
            object.__setattr__(self, "_codes", codes)
        return self._codes

    def elements(self):
        n = self.modulus
        for c in sorted(self.element_codes):
            yield GMat.from_code(c, n)

    @property
    def order(self) -> int:
        return len(self.element_codes)

    @property
    def index(self) -> int:
        return gl2_order(self.modulus) // self.order

    def __contains__(self, M: GMat) -> bool:
        if M.modulus != self.modulus:
            return False
        return M.code() in self.element_codes

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        name = self.label or "subgroup"
        return (f"<{name} mod {self.modulus}, "
                f"{len(self.generators)} generators>")


def greedy_generators(codes: frozenset[int], n: int) -> list[int]:
    """Small generating set: sweep elements, add any not yet generated."""
    ident = GMat.identity(n).code()
    gens: list[int] = []
    have = {ident}
    for c in sorted(codes):
        if c not in have:
            gens.append(c)
            have = set(closure_codes(gens, n))
            if len(have) == len(codes):
                break
    return gens


def closure(gens, n: int, label: str = "") -> GenGroup:
    """Group generated by the given matrices (elements computed eagerly)."""
    G = GenGroup.from_generators(gens, n, label)
    G.element_codes
    return G


def _euler_phi(n: int) -> int:
    out = n
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            out = out // p * (p - 1)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out = out // m * (m - 1)
    return out


def _prime_power(n: int) -> tuple[int, int]:
    """(p, k) with n = p^k, or raises."""
    p = 2
    m = n
    while p * p <= m:
        if m % p == 0:
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            if m != 1:
                raise ValueError(f"{n} is not a prime power")
            return p, k
        p += 1
    return n, 1


def _primitive_root(n: int) -> int:
    """Smallest primitive root mod an odd prime power, checked by order."""
    p, _ = _prime_power(n)
    target = n // p * (p - 1)
    for g in range(2, n):
        if gcd(g, n) != 1:
            continue
        k, acc = 1, g % n
        while acc != 1:
            acc = acc * g % n
            k += 1
        if k == target:
            return g
    raise AssertionError(f"no primitive root mod {n}")


STANDARD_KINDS = ("full", "sl2", "borel", "split-cartan",
                  "split-cartan-normalizer", "nonsplit-cartan",
                  "nonsplit-cartan-normalizer")


def standard_order(kind: str, n: int) -> int:
    """Textbook order of a standard subgroup at an odd prime level n = p."""
    p = n
    return {
        "full": gl2_order(p),
        "sl2": gl2_order(p) // (p - 1),
        "borel": p * (p - 1) ** 2,
        "split-cartan": (p - 1) ** 2,
        "split-cartan-normalizer": 2 * (p - 1) ** 2,
        "nonsplit-cartan": p * p - 1,
        "nonsplit-cartan-normalizer": 2 * (p * p - 1),
    }[kind]


@functools.lru_cache(maxsize=None)
def standard_subgroup(kind: str, n: int, phi: int | None = None) -> GenGroup:
    """One of the named subgroups of GL2(Z/nZ), with explicit elements.

    Cartan kinds require n to be an odd prime power; nonsplit kinds
    additionally require a quadratic non-residue phi.
    """
    if kind not in STANDARD_KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of "
                         f"{', '.join(STANDARD_KINDS)}")
    if kind == "full":
        g = 1 if n == 2 else _primitive_root_or_unit(n)
        G = GenGroup.from_generators(
            [(1, 1, 0, 1), (1, 0, 1, 1), (g, 0, 0, 1)], n, _full_label(n))
        if G.order != gl2_order(n):
            raise AssertionError("full GL2 generators failed to generate")
        return G
    if kind == "sl2":
        G = GenGroup.from_generators([(1, 1, 0, 1), (1, 0, 1, 1)], n,
                                     f"SL2(Z/{n})")
        if G.order != gl2_order(n) // _euler_phi(n):
            raise AssertionError("SL2 generators failed to generate")
        return G
    p, _ = _prime_power(n)
    if p == 2:
        raise ValueError(f"cartan kinds need an odd prime power, got {n}")
    units = [u for u in range(1, n) if gcd(u, n) == 1]
    if kind in ("nonsplit-cartan", "nonsplit-cartan-normalizer"):
        if phi is None:
            raise ValueError(f"kind {kind!r} requires a non-residue phi")
        if pow_is_square(phi, n):
            raise ValueError(f"phi = {phi} is a square mod {n}")
        codes = set()
        for a in range(n):
            for b in range(n):
                if gcd((a * a - b * b * phi) % n, n) == 1:
                    codes.add(GMat(a, b * phi, b, a, n).code())
        if kind == "nonsplit-cartan-normalizer":
            j = GMat.reflect(n)
            codes |= {code_mul(j.code(), c, n) for c in set(codes)}
        return GenGroup.from_codes(codes, n, f"{kind}({n})")
    if kind == "borel":
        codes = {GMat(a, b, 0, d, n).code()
                 for a in units for d in units for b in range(n)}
        g = _primitive_root(n)
        mats = (GMat.diagonal(g, 1, n), GMat.diagonal(1, g, n),
                GMat(1, 1, 0, 1, n))
        return GenGroup(n, mats, f"borel({n})", frozenset(codes))
    g = _primitive_root(n)
    codes = {GMat.diagonal(a, d, n).code() for a in units for d in units}
    mats = [GMat.diagonal(g, 1, n), GMat.diagonal(1, g, n)]
    if kind == "split-cartan-normalizer":
        t = GMat.swap(n)
        codes |= {code_mul(t.code(), c, n) for c in set(codes)}
        mats.append(t)
    return GenGroup(n, tuple(mats), f"{kind}({n})", frozenset(codes))


def _full_label(n: int) -> str:
    p, k = 0, 0
    try:
        p, k = _prime_power(n)
    except ValueError:
        pass
    if k == 1:
        return f"GL2(F{n})"
    return f"GL2(Z/{n})"


def _is_odd_prime_power(n: int) -> bool:
    try:
        p, _ = _prime_power(n)
    except ValueError:
        return False
    return p != 2


def _primitive_root_or_unit(n: int) -> int:
    if _is_odd_prime_power(n):
        return _primitive_root(n)
    if n == 2:
        return 1
    # Composite or even moduli: any unit generating (Z/n)* may not exist;
    # fall back to adjoining one diagonal per unit class.
    raise ValueError(f"full GL2 construction needs a prime power, got {n}")


def pow_is_square(v: int, n: int) -> bool:
    v %= n
    return any((x * x) % n == v for x in range(n))


def contains_minus_identity(G: GenGroup) -> bool:
    n = G.modulus
    return GMat(-1, 0, 0, -1, n).code() in G.element_codes


def det_image(G: GenGroup) -> frozenset[int]:
    """Set of determinants attained, as reduced residues."""
    n = G.modulus
    return frozenset(code_det(c, n) for c in G.element_codes)


def det_surjective(G: GenGroup) -> bool:
    n = G.modulus
    units = sum(1 for u in range(1, n) if gcd(u, n) == 1)
    return len(det_image(G)) == units


def exact_order_vectors(n: int) -> list:
    """All vectors in (Z/n)^2 of exact additive order n, sorted."""
    from .modmat import TorVec, vector_exact_order
    out = []
    for x in range(n):
        for y in range(n):
            v = TorVec(x, y, n)
            if vector_exact_order(v) == n:
                out.append(v)
    return out


def fixed_vectors(M: GMat) -> list:
    """Vectors v with v*M = v, by direct scan."""
    from .modmat import TorVec
    n = M.modulus
    return [TorVec(x, y, n) for x in range(n) for y in range(n)
            if TorVec(x, y, n).apply(M) == TorVec(x, y, n)]


@dataclass(frozen=True)
class Applicability:
    """Outcome of the applicability test, with the first failing reason."""

    ok: bool
    reason: str


def is_applicable(G: GenGroup) -> Applicability:
    """Proper subgroup, -I in G, det onto, and some element with trace 0
    and det -1 fixing a vector of exact order n."""
    n = G.modulus
    if G.order == gl2_order(n):
        return Applicability(False, "not proper")
    if not contains_minus_identity(G):
        return Applicability(False, "-I not in subgroup")
    if not det_surjective(G):
        return Applicability(False, "det not surjective")
    from .modmat import vector_exact_order
    minus_one = (n - 1) % n
    for c in sorted(G.element_codes):
        if code_trace(c, n) != 0 or code_det(c, n) != minus_one:
            continue
        M = GMat.from_code(c, n)
        for v in fixed_vectors(M):
            if vector_exact_order(v) == n:
                return Applicability(True, "applicable")
    return Applicability(False,
                         "no trace-0 det--1 element fixes a full-order vector")


def _conjugate_gen_codes(G: GenGroup, x: GMat) -> list[int]:
    xi = mat_inverse(x)
    n = G.modulus
    return [code_mul(code_mul(xi.code(), g.code(), n), x.code(), n)
            for g in G.generators]


@functools.lru_cache(maxsize=None)
def _full_codes(n: int) -> tuple[int, ...]:
    return tuple(sorted(standard_subgroup("full", n).element_codes))


def is_conjugate_subgroup(G: GenGroup, H: GenGroup) -> bool:
    """True iff some x in GL2(Z/nZ) has x^-1 G x contained in H."""
    if G.modulus != H.modulus:
        raise ValueError(
            f"modulus mismatch: {G.modulus} vs {H.modulus}")
    n = G.modulus
    if G.order > H.order or H.order % G.order != 0:
        return False
    if not det_image(G) <= det_image(H):
        return False
    hc = H.element_codes
    for xc in _full_codes(n):
        x = GMat.from_code(xc, n)
        if all(c in hc for c in _conjugate_gen_codes(G, x)):
            return True
    return False


def is_conjugate(G: GenGroup, H: GenGroup) -> bool:
    """True iff G and H are conjugate in GL2(Z/nZ)."""
    if G.modulus != H.modulus:
        raise ValueError(
            f"modulus mismatch: {G.modulus} vs {H.modulus}")
    if G.order != H.order:
        return False
    if det_image(G) != det_image(H):
        return False
    n = G.modulus
    if sorted(code_trace(c, n) for c in G.element_codes) != \
            sorted(code_trace(c, n) for c in H.element_codes):
        return False
    return is_conjugate_subgroup(G, H)


def reduce_level(G: GenGroup, m: int) -> GenGroup:
    """Image of G under entrywise reduction mod m (m must divide n)."""
    if G.modulus % m != 0:
        raise ValueError(f"{m} does not divide level {G.modulus}")
    if m < 2:
        raise ValueError(f"target level must be >= 2, got {m}")
    gens = [g.reduce(m) for g in G.generators]
    label = f"{G.label} mod {m}" if G.label else ""
    return closure(gens, m, label)


def stable_lines(G: GenGroup) -> int:
    """Number of free rank-1 submodules of (Z/n)^2 fixed setwise by G."""
    from .modmat import TorVec
    n = G.modulus
    lines = {}
    for v in exact_order_vectors(n):
        key = frozenset((k * v.x % n, k * v.y % n) for k in range(n))
        lines.setdefault(key, v)
    count = 0
    gens = [g for g in G.generators]
    for key, v in sorted(lines.items(), key=lambda kv: (kv[1].x, kv[1].y)):
        if all((v.apply(g).x, v.apply(g).y) in key for g in gens):
            # v generates the line, so v*g in the line for each generator
            # means the line maps into itself; invertibility gives equality.
            count += 1
    return count


@dataclass(frozen=True)
class SubgroupClass:
    """A conjugacy-class tag from the coarse classification."""

    tag: str
    projective_order: int


DICKSON_TAGS = ("borel-contained", "contains-SL2", "split-cartan-normalizer",
                "nonsplit-cartan-normalizer", "exceptional-A4",
                "exceptional-S4", "exceptional-A5", "other")


def _projective_order(G: GenGroup) -> int:
    n = G.modulus
    units = [u for u in range(1, n) if gcd(u, n) == 1]
    scalars = {GMat.diagonal(u, u, n).code() for u in units}
    reps = set()
    for c in G.element_codes:
        reps.add(min(code_mul(s, c, n) for s in scalars))
    return len(reps)


def dickson_classify(G: GenGroup) -> SubgroupClass:
    """Coarse class of a subgroup of GL2(F_p), p an odd prime.

    Ties break toward borel-contained: a group stabilizing a line is
    reported as such even when it also sits in a Cartan normalizer.
    """
    p = G.modulus
    if not _is_odd_prime_power(p) or _prime_power(p)[1] != 1:
        raise ValueError(f"classification needs an odd prime level, got {p}")
    if stable_lines(G) > 0:
        return SubgroupClass("borel-contained", _projective_order(G))
    sl2 = standard_subgroup("sl2", p).element_codes
    if sl2 <= G.element_codes:
        return SubgroupClass("contains-SL2", _projective_order(G))
    phi = least_nonresidue(p).value
    for kind in ("split-cartan-normalizer", "nonsplit-cartan-normalizer"):
        N = standard_subgroup(kind, p,
                              phi if kind.startswith("nonsplit") else None)
        if is_conjugate_subgroup(G, N):
            return SubgroupClass(kind, _projective_order(G))
    po = _projective_order(G)
    if G.order % p != 0:
        if po == 12:
            return SubgroupClass("exceptional-A4", po)
        if po == 24:
            return SubgroupClass("exceptional-S4", po)
        if po == 60:
            return SubgroupClass("exceptional-A5", po)
    return SubgroupClass("other", po)
