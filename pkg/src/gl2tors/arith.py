"""Integer factorization helpers: deterministic Miller-Rabin for word-size
inputs, Brent's variant of Pollard rho, and divisor enumeration."""

from __future__ import annotations

from math import gcd, isqrt

# Deterministic witness set for n < 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """A nontrivial factor of composite odd n."""
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        x = y = 2
        d = 1
        q = 1
        m = 128
        while d == 1:
            xs = x
            for _ in range(m):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            d = gcd(q, n)
            x = y
            if d == 1:
                continue
            if d == n:
                # Backtrack one step at a time from the saved point.
                y = xs
                d = 1
                while d == 1:
                    y = (y * y + c) % n
                    d = gcd(abs(x - y), n)
                break
        if 1 < d < n:
            return d
        c += 1


def factorint(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}; 0 and +-1 give {}."""
    n = abs(n)
    if n <= 1:
        return {}
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = isqrt(m)
        if r * r == m:
            stack.extend((r, r))
            continue
        d = _pollard_brent(m)
        stack.extend((d, m // d))
    return dict(sorted(out.items()))


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of |n| (n != 0)."""
    if n == 0:
        raise ValueError("0 has infinitely many divisors")
    out = [1]
    for p, e in factorint(n).items():
        out = [d * p ** k for d in out for k in range(e + 1)]
    return sorted(out)


def square_divisor_roots(n: int) -> list[int]:
    """Sorted y >= 1 with y^2 dividing |n| (n != 0)."""
    if n == 0:
        raise ValueError("0 has infinitely many square divisors")
    out = [1]
    for p, e in factorint(n).items():
        out = [d * p ** k for d in out for k in range(e // 2 + 1)]
    return sorted(out)


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n
