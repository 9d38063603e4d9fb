"""Exact polynomial arithmetic over Q in one and two variables.

UniPoly and BiPoly are immutable sparse coefficient maps with Fraction
coefficients. Rational root extraction uses the rational root theorem
when the outer coefficients factor comfortably, and falls back to root
finding modulo a large prime with rational reconstruction for polynomials
with oversized coefficients (every returned root is verified exactly).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from .arith import factorint, is_probable_prime

BigRat = Fraction


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"expected int or Fraction, got {type(v).__name__}")


class UniPoly:
    """A univariate polynomial over Q, stored as {exponent: coefficient}."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: dict[int, Fraction] | None = None):
        c = {}
        for e, v in (coeffs or {}).items():
            v = _frac(v)
            if v != 0:
                if e < 0:
                    raise ValueError(f"negative exponent {e}")
                c[e] = v
        self._c = c

    @classmethod
    def from_coeffs(cls, low_to_high) -> "UniPoly":
        return cls({e: _frac(v) for e, v in enumerate(low_to_high)})

    @classmethod
    def x(cls) -> "UniPoly":
        return cls({1: Fraction(1)})

    @classmethod
    def constant(cls, v) -> "UniPoly":
        return cls({0: _frac(v)})

    def coeff(self, e: int) -> Fraction:
        return self._c.get(e, Fraction(0))

    def items(self):
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial reported as -1."""
        return max(self._c) if self._c else -1

    def leading(self) -> Fraction:
        if not self._c:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._c[max(self._c)]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._c.items())))

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly.constant(other)
        if isinstance(other, UniPoly):
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c = dict(self._c)
        for e, v in o._c.items():
            c[e] = c.get(e, Fraction(0)) + v
        return UniPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c: dict[int, Fraction] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in o._c.items():
                e = e1 + e2
                c[e] = c.get(e, Fraction(0)) + v1 * v2
        return UniPoly(c)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = UniPoly.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, x) -> Fraction:
        x = _frac(x)
        d = self.degree
        if d < 0:
            return Fraction(0)
        acc = Fraction(0)
        for e in range(d, -1, -1):
            acc = acc * x + self._c.get(e, Fraction(0))
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly({e - 1: v * e for e, v in self._c.items() if e > 0})

    def integer_coeffs(self) -> list[int]:
        """Primitive integer coefficient list, low to high, after clearing
        denominators and content. Sign of the leading term is preserved."""
        if self.is_zero():
            raise ValueError("zero polynomial")
        d = self.degree
        den = 1
        for v in self._c.values():
            den = den * v.denominator // gcd(den, v.denominator)
        ints = [int(self._c.get(e, Fraction(0)) * den) for e in range(d + 1)]
        g = 0
        for v in ints:
            g = gcd(g, v)
        return [v // g for v in ints]

    def divmod(self, other: "UniPoly"):
        """Quotient and remainder over Q."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        q = UniPoly()
        r = self
        dlead = other.leading()
        dd = other.degree
        while not r.is_zero() and r.degree >= dd:
            e = r.degree - dd
            c = r.leading() / dlead
            term = UniPoly({e: c})
            q = q + term
            r = r - term * other
        return q, r

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def to_bipoly(self, axis: int) -> "BiPoly":
        """Embed as a BiPoly depending only on variable 0 (s) or 1 (t)."""
        if axis == 0:
            return BiPoly({(e, 0): v for e, v in self._c.items()})
        return BiPoly({(0, e): v for e, v in self._c.items()})

    def __repr__(self) -> str:
        if self.is_zero():
            return "UniPoly(0)"
        parts = []
        for e, v in sorted(self._c.items(), reverse=True):
            parts.append(f"{v}*x^{e}" if e else f"{v}")
        return "UniPoly(" + " + ".join(parts) + ")"


class BiPoly:
    """A polynomial in two variables s, t over Q: {(i, j): coefficient}."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: dict[tuple[int, int], Fraction] | None = None):
        c = {}
        for (i, j), v in (coeffs or {}).items():
            v = _frac(v)
            if v != 0:
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent ({i},{j})")
                c[(i, j)] = v
        self._c = c

    @classmethod
    def variable(cls, axis: int) -> "BiPoly":
        return cls({(1, 0) if axis == 0 else (0, 1): Fraction(1)})

    @classmethod
    def constant(cls, v) -> "BiPoly":
        return cls({(0, 0): _frac(v)})

    def items(self):
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def degree(self, axis: int) -> int:
        if not self._c:
            return -1
        return max(k[axis] for k in self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._c.items())))

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return BiPoly.constant(other)
        if isinstance(other, BiPoly):
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c = dict(self._c)
        for k, v in o._c.items():
            c[k] = c.get(k, Fraction(0)) + v
        return BiPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), v1 in self._c.items():
            for (i2, j2), v2 in o._c.items():
                k = (i1 + i2, j1 + j2)
                c[k] = c.get(k, Fraction(0)) + v1 * v2
        return BiPoly(c)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = BiPoly.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, s, t) -> Fraction:
        s, t = _frac(s), _frac(t)
        acc = Fraction(0)
        for (i, j), v in self._c.items():
            acc += v * s ** i * t ** j
        return acc

    def derivative(self, axis: int) -> "BiPoly":
        c = {}
        for (i, j), v in self._c.items():
            e = (i, j)[axis]
            if e == 0:
                continue
            k = (i - 1, j) if axis == 0 else (i, j - 1)
            c[k] = c.get(k, Fraction(0)) + v * e
        return BiPoly(c)

    def coeffs_in(self, axis: int) -> list[UniPoly]:
        """Coefficients as polynomials in the other variable, low to high
        in the chosen axis."""
        d = self.degree(axis)
        out = [dict() for _ in range(d + 1)]
        for (i, j), v in self._c.items():
            e, o = (i, j) if axis == 0 else (j, i)
            out[e][o] = v
        return [UniPoly(c) for c in out]

    def primitive(self) -> "BiPoly":
        """Scale by a positive rational so coefficients are coprime
        integers; sign of the lexicographically leading term preserved."""
        if self.is_zero():
            return self
        den = 1
        for v in self._c.values():
            den = den * v.denominator // gcd(den, v.denominator)
        g = 0
        for v in self._c.values():
            g = gcd(g, int(v * den))
        scale = Fraction(den, g)
        return BiPoly({k: v * scale for k, v in self._c.items()})

    def __repr__(self) -> str:
        if self.is_zero():
            return "BiPoly(0)"
        parts = []
        for (i, j), v in sorted(self._c.items(), reverse=True):
            parts.append(f"{v}*s^{i}*t^{j}")
        return "BiPoly(" + " + ".join(parts) + ")"


class PolyParseError(ValueError):
    pass


def _tokenize(text: str):
    toks = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(("num", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(("name", text[i:j], i))
            i = j
            continue
        if ch in "+-*^()/":
            toks.append((ch, ch, i))
            i += 1
            continue
        raise PolyParseError(f"unexpected character {ch!r} at position {i}")
    return toks


class _Parser:
    """Recursive descent over +, -, *, ^ and rational literals a/b.

    '/' is only allowed between two integer literals; exponents are
    nonnegative integers. Multiplication is always explicit."""

    def __init__(self, toks, varmap):
        self.toks = toks
        self.pos = 0
        self.varmap = varmap

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self, kind=None):
        tok = self.peek()
        if tok is None:
            raise PolyParseError("unexpected end of input")
        if kind is not None and tok[0] != kind:
            raise PolyParseError(
                f"expected {kind!r}, got {tok[1]!r} at position {tok[2]}")
        self.pos += 1
        return tok

    def parse(self):
        out = self.expr()
        if self.peek() is not None:
            tok = self.peek()
            raise PolyParseError(
                f"trailing input {tok[1]!r} at position {tok[2]}")
        return out

    def expr(self):
        neg = False
        if self.peek() and self.peek()[0] == "-":
            self.take()
            neg = True
        out = self.term()
        if neg:
            out = -out
        while self.peek() and self.peek()[0] in "+-":
            op = self.take()[0]
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self):
        out = self.factor()
        while self.peek() and self.peek()[0] == "*":
            self.take()
            out = out * self.factor()
        return out

    def factor(self):
        base = self.atom()
        if self.peek() and self.peek()[0] == "^":
            self.take()
            e = self.take("num")[1]
            base = base ** e
        return base

    def atom(self):
        tok = self.peek()
        if tok is None:
            raise PolyParseError("unexpected end of input")
        if tok[0] == "-":
            self.take()
            return -self.factor()
        if tok[0] == "num":
            self.take()
            num = tok[1]
            if self.peek() and self.peek()[0] == "/":
                self.take()
                den = self.take("num")[1]
                if den == 0:
                    raise PolyParseError("zero denominator in literal")
                return self.const(Fraction(num, den))
            return self.const(Fraction(num))
        if tok[0] == "name":
            self.take()
            if tok[1] not in self.varmap:
                raise PolyParseError(
                    f"unknown variable {tok[1]!r} at position {tok[2]}")
            return self.varmap[tok[1]]
        if tok[0] == "(":
            self.take()
            out = self.expr()
            self.take(")")
            return out
        raise PolyParseError(
            f"unexpected token {tok[1]!r} at position {tok[2]}")

    def const(self, v):
        sample = next(iter(self.varmap.values()))
        if isinstance(sample, BiPoly):
            return BiPoly.constant(v)
        return UniPoly.constant(v)


def parse_poly(text: str, var: str = "x") -> UniPoly:
    """Parse a univariate polynomial literal in the named variable."""
    return _Parser(_tokenize(text), {var: UniPoly.x()}).parse()


def parse_bipoly(text: str, vars: tuple[str, str] = ("s", "t")) -> BiPoly:
    """Parse a polynomial literal in two named variables."""
    varmap = {vars[0]: BiPoly.variable(0), vars[1]: BiPoly.variable(1)}
    return _Parser(_tokenize(text), varmap).parse()


def poly_gcd(A: UniPoly, B: UniPoly) -> UniPoly:
    """Monic gcd over Q by the Euclidean algorithm."""
    while not B.is_zero():
        A, B = B, A.divmod(B)[1]
    if A.is_zero():
        return A
    return A * (1 / A.leading())


def farey_fractions(height: int) -> list[Fraction]:
    """All rationals p/q in lowest terms with |p| <= height and
    1 <= q <= height, sorted ascending."""
    if height < 1:
        raise ValueError(f"height must be >= 1, got {height}")
    out = []
    for q in range(1, height + 1):
        for p in range(-height, height + 1):
            if gcd(p, q) == 1:
                out.append(Fraction(p, q))
    return sorted(set(out))


_FACTOR_BIT_LIMIT = 76


def _factorable(n: int) -> bool:
    return n != 0 and abs(n).bit_length() <= _FACTOR_BIT_LIMIT


def _divisors_abs(n: int) -> list[int]:
    out = [1]
    for p, e in factorint(n).items():
        out = [d * p ** k for d in out for k in range(e + 1)]
    return sorted(out)


def rational_roots(P: UniPoly) -> list[Fraction]:
    """All rational roots of P, sorted, without multiplicity.

    The primitive integer model is scanned with the rational root theorem
    when its outer coefficients are small enough to factor. Otherwise
    roots are found modulo a large prime and lifted by rational
    reconstruction, which certifies every root of height below about
    10^9; each candidate is verified exactly before being returned.
    """
    if P.is_zero():
        raise ValueError("zero polynomial has every rational root")
    coeffs = P.integer_coeffs()
    roots: set[Fraction] = set()
    # Deflate powers of x.
    k = 0
    while coeffs[k] == 0:
        k += 1
    if k > 0:
        roots.add(Fraction(0))
        coeffs = coeffs[k:]
    if len(coeffs) == 1:
        return sorted(roots)
    a0, lead = coeffs[0], coeffs[-1]
    if _factorable(a0) and _factorable(lead):
        for q in _divisors_abs(lead):
            for p in _divisors_abs(a0):
                if gcd(p, q) != 1:
                    continue
                for sp in (p, -p):
                    if _eval_int_at(coeffs, sp, q) == 0:
                        roots.add(Fraction(sp, q))
        return sorted(roots)
    for r in _roots_by_reconstruction(coeffs):
        roots.add(r)
    return sorted(roots)


def _eval_int_at(coeffs: list[int], p: int, q: int) -> int:
    """q^deg * P(p/q), an integer (homogenized Horner)."""
    d = len(coeffs) - 1
    acc = coeffs[d]
    qpow = 1
    for i in range(d - 1, -1, -1):
        qpow *= q
        acc = acc * p + coeffs[i] * qpow
    return acc


def _next_prime(n: int) -> int:
    n += 1 + (n % 2)
    while not is_probable_prime(n):
        n += 2
    return n


def _pstrip(c: list[int], p: int) -> list[int]:
    c = [x % p for x in c]
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pstrip(out, p)


def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    a = list(a)
    inv = pow(m[-1], -1, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1] * inv % p
        off = len(a) - 1 - dm
        for i, y in enumerate(m):
            a[off + i] = (a[off + i] - c * y) % p
        a.pop()
    return _pstrip(a, p)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _pstrip(a, p), _pstrip(b, p)
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [x * inv % p for x in a]
    return a


def _ppow_xplusa(a: int, e: int, m: list[int], p: int) -> list[int]:
    base = _pmod([a % p, 1], m, p)
    out = [1]
    while e:
        if e & 1:
            out = _pmod(_pmul(out, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return out

def _psub(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] = x
    for i, y in enumerate(b):
        out[i] = (out[i] - y) % p
    return _pstrip(out, p)


def _split_linears(g: list[int], p: int, out: list[int]) -> None:
    """Extract roots from a monic product of distinct linear factors."""
    d = len(g) - 1
    if d <= 0:
        return
    if d == 1:
        out.append(-g[0] % p)
        return
    shift = 0
    while True:
        h = _ppow_xplusa(shift, (p - 1) // 2, g, p)
        h = _psub(h, [1], p)
        d1 = _pgcd(h, g, p)
        if 0 < len(d1) - 1 < d:
            d2 = _pexact_div(g, d1, p)
            _split_linears(d1, p, out)
            _split_linears(d2, p, out)
            return
        shift += 1


def _pexact_div(a: list[int], b: list[int], p: int) -> list[int]:
    a = list(a)
    inv = pow(b[-1], -1, p)
    q = [0] * (len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1] * inv % p
        q[len(a) - len(b)] = c
        off = len(a) - len(b)
        for i, y in enumerate(b):
            a[off + i] = (a[off + i] - c * y) % p
        a.pop()
    return _pstrip(q, p)


def _roots_mod(coeffs: list[int], p: int) -> list[int]:
    c = _pstrip(coeffs, p)
    if len(c) <= 1:
        return []
    inv = pow(c[-1], -1, p)
    c = [x * inv % p for x in c]
    # gcd(x^p - x, c) collects exactly the roots in F_p.
    xp = _ppow_xplusa(0, p, c, p)
    g = _pgcd(_psub(xp, [0, 1], p), c, p)
    roots: list[int] = []
    _split_linears(g, p, roots)
    return sorted(roots)


def _rational_reconstruct(r: int, m: int) -> Fraction | None:
    bound = isqrt(m // 2)
    r0, t0 = m, 0
    r1, t1 = r % m, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > bound or gcd(r1, t1) != 1:
        return None
    return Fraction(r1, t1)


def _roots_by_reconstruction(coeffs: list[int]) -> list[Fraction]:
    out = set()
    p = 2 ** 61
    tried = 0
    while tried < 2:
        p = _next_prime(p)
        if coeffs[-1] % p == 0:
            continue
        tried += 1
        for r in _roots_mod(coeffs, p):
            cand = _rational_reconstruct(r, p)
            if cand is None:
                continue
            if _eval_int_at(coeffs, cand.numerator, cand.denominator) == 0:
                out.add(cand)
    return sorted(out)


def _bareiss_det(rows: list[list[Fraction]]) -> Fraction:
    """Fraction-free Gaussian determinant with pivoting."""
    n = len(rows)
    m = [row[:] for row in rows]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
            m[i][k] = Fraction(0)
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _sylvester(fc: list, gc: list, zero, df: int, dg: int):
    """Sylvester matrix rows; fc, gc are low-to-high coefficient lists."""
    size = df + dg
    frow = list(reversed(fc))
    grow = list(reversed(gc))
    rows = []
    for i in range(dg):
        rows.append([zero] * i + frow + [zero] * (size - i - len(frow)))
    for i in range(df):
        rows.append([zero] * i + grow + [zero] * (size - i - len(grow)))
    return rows


def resultant(F: BiPoly, G: BiPoly, axis: int = 0) -> UniPoly:
    """Resultant of F and G with respect to the eliminated axis
    (0 for s, 1 for t), as a polynomial in the other variable.

    Small Sylvester matrices are expanded by fraction-free elimination
    over Q[kept]; larger ones are evaluated at integer nodes and
    reassembled by Newton interpolation.
    """
    df, dg = F.degree(axis), G.degree(axis)
    if df < 1 or dg < 1:
        raise ValueError("both inputs must have positive degree in the "
                         "eliminated variable")
    fco = F.coeffs_in(axis)
    gco = G.coeffs_in(axis)
    kept_df = max(c.degree for c in fco)
    kept_dg = max(c.degree for c in gco)
    bound = dg * max(kept_df, 0) + df * max(kept_dg, 0)
    size = df + dg
    if size <= 6 and bound <= 24:
        rows = _sylvester(fco, gco, UniPoly(), df, dg)
        return _bareiss_det_poly(rows)
    nodes = []
    vals = []
    k = 0
    while len(nodes) < bound + 1:
        x = Fraction(k)
        fnum = [c(x) for c in fco]
        gnum = [c(x) for c in gco]
        rows = _sylvester(fnum, gnum, Fraction(0), df, dg)
        nodes.append(x)
        vals.append(_bareiss_det(rows))
        k = -k if k > 0 else -k + 1
    return _newton_interpolate(nodes, vals)


def _bareiss_det_poly(rows: list[list[UniPoly]]) -> UniPoly:
    n = len(rows)
    m = [row[:] for row in rows]
    sign = 1
    prev = UniPoly.constant(1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return UniPoly()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k]
                           - m[i][k] * m[k][j]).exact_div(prev)
            m[i][k] = UniPoly()
        prev = m[k][k]
    out = m[n - 1][n - 1]
    return out if sign > 0 else -out


def _newton_interpolate(nodes: list[Fraction],
                        vals: list[Fraction]) -> UniPoly:
    n = len(nodes)
    dd = list(vals)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - j])
    poly = UniPoly.constant(dd[0])
    basis = UniPoly.constant(1)
    for i in range(1, n):
        basis = basis * (UniPoly.x() - nodes[i - 1])
        poly = poly + dd[i] * basis
    return poly
