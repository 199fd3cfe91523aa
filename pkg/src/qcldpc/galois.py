"""Modular-arithmetic and cyclotomic-coset primitives.

No polynomial field representation is built anywhere in this package: every
construction below depends only on integer exponents, so all arithmetic stays
in plain modular integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# cap on code length n: coset enumeration uses O(n) marking memory
MAX_N = 1 << 24


def _validate_n(n: int) -> None:
    if n > MAX_N:
        raise ValueError(f"n={n} exceeds the configured cap MAX_N={MAX_N}")


def is_prime_power(q: int) -> bool:
    """True iff q = p^e for a prime p and e >= 1 (trial factorization)."""
    if q < 2:
        return False
    for p in range(2, math.isqrt(q) + 1):
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
    return True  # q itself is prime


def multiplicative_order(q: int, n: int) -> int:
    """Smallest m >= 1 with q^m = 1 (mod n)."""
    if q < 2 or n < 2:
        raise ValueError("require q >= 2 and n >= 2")
    if math.gcd(q, n) != 1:
        raise ValueError(f"gcd(q, n) must be 1, got gcd({q}, {n}) = {math.gcd(q, n)}")
    _validate_n(n)
    m = 1
    t = q % n
    while t != 1:
        t = (t * q) % n
        m += 1
    return m


@dataclass(frozen=True)
class CyclotomicCoset:
    """Orbit of `leader` under multiplication by q modulo n."""

    leader: int
    elements: tuple
    modulus: int

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements


def cyclotomic_coset(x: int, n: int, q: int) -> CyclotomicCoset:
    """Full orbit {x * q^i mod n}, normalized to its smallest element."""
    if math.gcd(q, n) != 1:
        raise ValueError(f"gcd(q, n) must be 1, got gcd({q}, {n})")
    if not 0 <= x < n:
        raise ValueError(f"x must lie in [0, {n}), got {x}")
    _validate_n(n)
    orbit = []
    t = x
    while True:
        orbit.append(t)
        t = (t * q) % n
        if t == x:
            break
    elements = tuple(sorted(orbit))
    return CyclotomicCoset(leader=elements[0], elements=elements, modulus=n)


def coset_leaders(n: int, q: int) -> list:
    """All distinct cosets mod n, sorted by leader; elements partition [0, n)."""
    if math.gcd(q, n) != 1:
        raise ValueError(f"gcd(q, n) must be 1, got gcd({q}, {n})")
    _validate_n(n)
    seen = np.zeros(n, dtype=bool)
    out = []
    for x in range(n):
        if seen[x]:
            continue
        orbit = []
        t = x
        while not seen[t]:
            seen[t] = True
            orbit.append(t)
            t = (t * q) % n
        out.append(CyclotomicCoset(leader=x, elements=tuple(sorted(orbit)), modulus=n))
    return out


def coset_size_bound_holds(x: int, n: int, q: int, m: int) -> bool:
    """True iff 1 <= x <= n*q^ceil(m/2) / (q^m - 1), compared exactly.

    Cosets of x in this range always have exactly m elements; outside it
    they may collapse.
    """
    if x < 1:
        return False
    mu = q**m - 1
    return x * mu <= n * q ** ((m + 1) // 2)


def find_prime_lengths(q: int, m: int) -> list:
    """Primes n in (q^floor(m/2), q^m - 1] with ord_n(q) = m, ascending."""
    if m < 2:
        raise ValueError("require m >= 2")
    lo = q ** (m // 2)
    hi = q**m - 1
    _validate_n(hi)
    if hi <= lo:
        return []
    sieve = np.ones(hi + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(hi) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    proper_divisors = [d for d in range(1, m) if m % d == 0]
    out = []
    for n in np.nonzero(sieve)[0]:
        n = int(n)
        if n <= lo:
            continue
        if n % q == 0:  # shares a factor with q; order undefined
            continue
        # ord_n(q) = m iff q^m = 1 and q^d != 1 for every proper divisor d
        if pow(q, m, n) != 1:
            continue
        if all(pow(q, d, n) != 1 for d in proper_divisors):
            out.append(n)
    return out


@dataclass(frozen=True)
class CodeFieldParams:
    """Parameters (q, n, m, mu) of a nonprimitive narrow-sense setting.

    Invariants: gcd(n, q) = 1; m = ord_n(q); mu = q^m - 1; and the
    nonprimitive window q^floor(m/2) < n <= mu.
    """

    q: int
    n: int
    m: int
    mu: int


def field_params(q: int, n: int) -> CodeFieldParams:
    if not is_prime_power(q):
        raise ValueError(f"q must be a prime power >= 2, got {q}")
    m = multiplicative_order(q, n)  # validates gcd and ranges
    mu = q**m - 1
    if not q ** (m // 2) < n <= mu:
        raise ValueError(
            f"n={n} violates q^floor(m/2) < n <= q^m - 1 "
            f"(window ({q ** (m // 2)}, {mu}] for q={q}, m={m})"
        )
    return CodeFieldParams(q=q, n=n, m=m, mu=mu)
