"""Real primitive Dirichlet characters as Kronecker symbols, plus von Mangoldt.

A real primitive character mod q is exactly chi_d(n) = (d|n) for a fundamental
discriminant d with q = |d|.  The trivial character (d = 1) is excluded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np


def _squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 1 if p == 2 else 2
    return True


def is_fundamental_discriminant(d: int) -> bool:
    """True iff d parameterizes a (nontrivial) real primitive character."""
    if d == 0 or d == 1:
        return False
    if d % 4 == 1:
        return _squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and _squarefree(m)
    return False


def kronecker_symbol(d: int, n: int) -> int:
    """Kronecker symbol (d|n) for n >= 0, by the reciprocity recursion."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    a = d
    if n == 0:
        return 1 if abs(a) == 1 else 0
    result = 1
    # factor of 2 in n: (a|2) is 0 for even a, +-1 by a mod 8 otherwise
    if n % 2 == 0:
        if a % 2 == 0:
            return 0
        two = 1 if a % 8 in (1, 7) else -1
        while n % 2 == 0:
            n //= 2
            result *= two
    # now n odd positive: Jacobi symbol (a|n) by quadratic reciprocity
    a %= n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


@dataclass(frozen=True)
class RealPrimitiveCharacter:
    """chi_d realized as the Kronecker symbol of a fundamental discriminant."""

    d: int
    q: int = field(init=False)
    b: int = field(init=False)

    def __post_init__(self):
        if not is_fundamental_discriminant(self.d):
            raise ValueError(f"{self.d} is not a fundamental discriminant")
        object.__setattr__(self, "q", abs(self.d))
        object.__setattr__(self, "b", 1 if self.d < 0 else 0)

    def __call__(self, n: int) -> int:
        return kronecker_symbol(self.d, n % self.q if n >= 0 else n % self.q)

    @property
    def period_table(self) -> tuple[int, ...]:
        return _period_table(self.d, self.q)

    def values(self, n: np.ndarray) -> np.ndarray:
        """chi on an integer array, via the cached period table."""
        table = np.asarray(self.period_table, dtype=np.int8)
        return table[np.asarray(n) % self.q]


@lru_cache(maxsize=None)
def _period_table(d: int, q: int) -> tuple[int, ...]:
    return tuple(kronecker_symbol(d, n) for n in range(q))


def parity(chi: RealPrimitiveCharacter) -> int:
    """b = 1 iff chi(-1) = -1.  Computed from chi(q-1), not from sign(d)."""
    return 1 if kronecker_symbol(chi.d, chi.q - 1) == -1 else 0


def von_mangoldt(n: int) -> float:
    """log p if n = p^m (m >= 1), else 0.  Trial factorization up to sqrt(n)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return 0.0
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return math.log(p) if n == 1 else 0.0
        p += 1 if p == 2 else 2
    return math.log(n)  # n itself prime


def primes_up_to(limit: int) -> np.ndarray:
    """Linear-memory numpy sieve, primes <= limit."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.nonzero(sieve)[0].astype(np.int64)


def prime_powers(limit: int) -> tuple[np.ndarray, np.ndarray]:
    """All prime powers p^m <= limit with their Lambda values (log p).

    Returns (n, lam) sorted by n; backbone of the bulk von Mangoldt sieve.
    """
    primes = primes_up_to(limit)
    ns = [primes]
    lams = [np.log(primes.astype(np.float64))]
    for p in primes[primes.astype(np.float64) <= limit**0.5 + 1]:
        pk = int(p) * int(p)
        lp = math.log(int(p))
        while pk <= limit:
            ns.append(np.array([pk], dtype=np.int64))
            lams.append(np.array([lp]))
            pk *= int(p)
    n = np.concatenate(ns)
    lam = np.concatenate(lams)
    order = np.argsort(n)
    return n[order], lam[order]


def von_mangoldt_range(lo: int, hi: int) -> np.ndarray:
    """Lambda(n) for n in [lo, hi], sieved (use for ranges longer than 1e3)."""
    if lo < 1 or hi < lo:
        raise ValueError("need 1 <= lo <= hi")
    out = np.zeros(hi - lo + 1)
    n, lam = prime_powers(hi)
    mask = n >= lo
    out[n[mask] - lo] = lam[mask]
    return out
