"""Exact non-negative integer utilities.

Everything here works on Python ints and never touches floating point:
valuations, square detection, bounded-effort factorization, divisor
enumeration and comparisons against ``base**exponent * num/den``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, isqrt, prod
from typing import Iterator

__all__ = [
    "DEFAULT_EFFORT",
    "TRIAL_LIMIT",
    "Factorization",
    "IncompleteFactorizationError",
    "cmp_scaled_power",
    "divisors",
    "factorize",
    "is_perfect_square",
    "is_prime",
    "p_valuation",
]

TRIAL_LIMIT = 1 << 12
DEFAULT_EFFORT = 2_000_000

# Miller-Rabin with these bases is deterministic below this bound.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_BELOW = 3_317_044_064_679_887_385_961_981


def _small_primes(limit: int) -> tuple[int, ...]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return tuple(i for i, f in enumerate(flags) if f)


_TRIAL_PRIMES = _small_primes(TRIAL_LIMIT)


class IncompleteFactorizationError(ValueError):
    """Raised when an operation needs every prime factor but some are missing."""


def _miller_rabin(n: int, bases) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in bases:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Primality test; deterministic for n < 3.3e24, strong probable prime above."""
    if n < 2:
        return False
    for p in _TRIAL_PRIMES[:60]:
        if n % p == 0:
            return n == p
    return _miller_rabin(n, _MR_BASES)


def _certified(p: int) -> bool:
    return p < _MR_DETERMINISTIC_BELOW


def p_valuation(p: int, n: int) -> int:
    """Largest e with p**e dividing n."""
    if n <= 0:
        raise ValueError(f"valuation undefined for n={n}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def is_perfect_square(n: int) -> tuple[bool, int]:
    """Return ``(n is a square, isqrt(n))``."""
    if n < 0:
        return False, 0
    r = isqrt(n)
    return r * r == n, r


@dataclass(frozen=True)
class Factorization:
    """Prime-power factorization of ``n``, possibly with an unsplit cofactor.

    ``factors`` lists ``(prime, exponent)`` with strictly increasing primes.
    ``cofactor`` is 1 when the factorization is complete; otherwise it is the
    part of ``n`` the effort budget could not split (it shares no listed
    prime). ``probable`` names listed primes above the deterministic
    primality range.
    """

    n: int
    factors: tuple[tuple[int, int], ...] = ()
    cofactor: int = 1
    probable: tuple[int, ...] = field(default=())

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    def value(self) -> int:
        return prod(p**e for p, e in self.factors) * self.cofactor

    def num_divisors(self) -> int:
        return prod(e + 1 for _, e in self.factors)

    def as_dict(self) -> dict:
        return {
            "factors": [[str(p), e] for p, e in self.factors],
            "cofactor": str(self.cofactor),
            "probable_primes": [str(p) for p in self.probable],
        }


def _brent(n: int, c: int, budget: int) -> tuple[int, int]:
    """Brent's variant of Pollard rho. Returns (factor or 0, iterations used)."""
    y, r, q, g = 2, 1, 1, 1
    m = 128
    used = 0
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            step = min(m, r - k)
            for _ in range(step):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            used += step
            g = gcd(q, n)
            k += m
            if used >= budget and g == 1:
                return 0, used
        r *= 2
    if g == n:
        # backtrack one step at a time
        while True:
            ys = (ys * ys + c) % n
            g = gcd(abs(x - ys), n)
            used += 1
            if g > 1:
                break
    return (g if g != n else 0), used


def factorize(n: int, effort: int = DEFAULT_EFFORT) -> Factorization:
    """Factor ``n`` by trial division then Pollard-Brent rho.

    ``effort`` caps the total number of rho iterations. Composites left over
    when the budget runs out end up in ``cofactor``. Deterministic for fixed
    ``(n, effort)``.
    """
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    found: dict[int, int] = {}
    m = n
    for p in _TRIAL_PRIMES:
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            found[p] = e
    if m > 1 and m < TRIAL_LIMIT * TRIAL_LIMIT:
        found[m] = found.get(m, 0) + 1
        m = 1

    pending = [m] if m > 1 else []
    stuck: list[int] = []
    budget = effort
    while pending:
        c = pending.pop()
        for p in found:
            while c % p == 0:
                c //= p
                found[p] += 1
        if c == 1:
            continue
        if is_prime(c):
            found[c] = found.get(c, 0) + 1
            continue
        ok, r = is_perfect_square(c)
        if ok:
            pending.extend((r, r))
            continue
        d = 0
        seed = 1
        while d == 0 and budget > 0 and seed < 64:
            d, used = _brent(c, seed, budget)
            budget -= used
            seed += 1
        if d == 0:
            stuck.append(c)
            continue
        pending.extend((d, c // d))

    cofactor = 1
    for c in stuck:
        for p in found:
            while c % p == 0:
                c //= p
                found[p] += 1
        cofactor *= c
    factors = tuple(sorted(found.items()))
    probable = tuple(p for p, _ in factors if not _certified(p))
    return Factorization(n=n, factors=factors, cofactor=cofactor, probable=probable)


def divisors(f: Factorization, limit: int | None = None) -> Iterator[int]:
    """Yield the divisors of a complete factorization in ascending order."""
    if not f.complete:
        raise IncompleteFactorizationError(
            f"factorization of {f.n} has unsplit cofactor {f.cofactor}"
        )
    divs = [1]
    for p, e in f.factors:
        grown = []
        for d in divs:
            x = d
            for _ in range(e):
                x *= p
                if limit is not None and x > limit:
                    break
                grown.append(x)
        divs.extend(grown)
    divs.sort()
    if limit is None:
        return iter(divs)
    return (d for d in divs if d <= limit)


def cmp_scaled_power(n: int, base: int, exponent: int, num: int, den: int) -> int:
    """Sign of ``n - base**exponent * num / den`` via cross-multiplication."""
    if den <= 0:
        raise ValueError("den must be positive")
    lhs = n * den
    rhs = num * base**exponent
    return (lhs > rhs) - (lhs < rhs)
