"""Quartic cyclotomy over GF(p) for primes p = x^2 + 4y^2 = 4f + 1.

Fixes a generator alpha of the multiplicative group and partitions
Z_p \\ {0} into the four cyclotomic classes of order 4,
D_k = { alpha^(4s+k) : 0 <= s < f }, plus the six two-class unions C1..C6.
"""

import math
from dataclasses import dataclass

__all__ = [
    "CyclotomicSystem",
    "CSet",
    "is_prime",
    "quartic_decomposition",
    "smallest_primitive_root",
    "is_primitive_root",
    "build_system",
    "cset",
    "complement_cset_index",
]

# C-set index -> the pair of D-class indices it unites
CSET_PAIRS = {1: (0, 1), 2: (0, 2), 3: (0, 3), 4: (1, 2), 5: (1, 3), 6: (2, 3)}


def is_prime(n: int) -> bool:
    """Deterministic trial division; adequate for desk-scale p."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def _prime_factors(n: int) -> list[int]:
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append(n)
    return factors


def quartic_decomposition(p: int) -> tuple[int, int, int]:
    """The unique (x, y, f) with p = x^2 + 4y^2 = 4f + 1, x = 1 (mod 4), y >= 0.

    Raises ValueError unless p is a prime congruent to 1 mod 4.
    """
    if not is_prime(p) or p % 4 != 1:
        raise ValueError(f"p must be a prime with p = 1 (mod 4), got {p}")
    y = 0
    while 4 * y * y < p:
        r = p - 4 * y * y
        x = math.isqrt(r)
        if x * x == r:
            if x % 4 != 1:
                x = -x
            return x, y, (p - 1) // 4
        y += 1
    # unreachable: every prime = 1 (mod 4) is a sum of a square and 4*square
    raise ValueError(f"no decomposition p = x^2 + 4y^2 found for {p}")


def smallest_primitive_root(p: int) -> int:
    """Smallest g in [2, p) of multiplicative order p - 1 mod p."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be a prime >= 3, got {p}")
    cofactors = [(p - 1) // q for q in _prime_factors(p - 1)]
    for g in range(2, p):
        if all(pow(g, c, p) != 1 for c in cofactors):
            return g
    raise ValueError(f"no primitive root found for {p}")  # unreachable for prime p


def is_primitive_root(g: int, p: int) -> bool:
    if g % p == 0:
        return False
    return all(pow(g, (p - 1) // q, p) != 1 for q in _prime_factors(p - 1))


@dataclass(frozen=True)
class CyclotomicSystem:
    """Prime p with quartic decomposition, a fixed generator, and the four
    order-4 cyclotomic classes (which partition Z_p \\ {0})."""

    p: int
    x: int
    y: int
    f: int
    alpha: int
    classes: tuple[frozenset[int], ...]

    def class_of(self, a: int) -> int:
        """Index k with a in D_k."""
        a %= self.p
        for k, members in enumerate(self.classes):
            if a in members:
                return k
        raise ValueError(f"{a} is not in any class (is it 0 mod {self.p}?)")


@dataclass(frozen=True)
class CSet:
    """One of the six pairwise unions C1..C6 of the cyclotomic classes."""

    index: int
    members: frozenset[int]


def build_system(p: int, alpha: int | None = None) -> CyclotomicSystem:
    """Build the order-4 cyclotomic system for p; ``alpha`` defaults to the
    smallest primitive root and may be overridden by any other generator."""
    x, y, f = quartic_decomposition(p)
    if alpha is None:
        alpha = smallest_primitive_root(p)
    elif not is_primitive_root(alpha, p):
        raise ValueError(f"{alpha} is not a primitive root mod {p}")
    members: list[set[int]] = [set(), set(), set(), set()]
    val = 1
    for e in range(p - 1):
        members[e % 4].add(val)
        val = val * alpha % p
    return CyclotomicSystem(p, x, y, f, alpha % p, tuple(frozenset(m) for m in members))


def cset(system: CyclotomicSystem, index: int) -> CSet:
    if index not in CSET_PAIRS:
        raise ValueError(f"C-set index must be in [1, 6], got {index}")
    j, k = CSET_PAIRS[index]
    return CSet(index, system.classes[j] | system.classes[k])


def complement_cset_index(index: int) -> int:
    """C_i and C_(7-i) partition Z_p \\ {0}."""
    if index not in CSET_PAIRS:
        raise ValueError(f"C-set index must be in [1, 6], got {index}")
    return 7 - index
