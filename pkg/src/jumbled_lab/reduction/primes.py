"""Prime bases for the residue decomposition of ``x_i - x_j == x_L``."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from sympy import isprime, nextprime, primerange

from jumbled_lab.errors import UsageError


def required_product(u: int) -> int:
    """Smallest admissible product of the basis.

    ``x_i - x_j - x_L`` ranges over ``[-3u, 3u]``, so a product of at
    least ``3u + 1`` leaves zero as its only multiple in that range.
    """
    return 3 * u + 1


@dataclass(frozen=True)
class PrimeBasis:
    primes: tuple
    u: int
    variant: str = "strong"

    @property
    def k(self) -> int:
        return len(self.primes)

    @property
    def D(self) -> int:
        return max(self.primes)

    @property
    def product(self) -> int:
        return math.prod(self.primes)

    def residues(self, x: int) -> tuple:
        return tuple(x % p for p in self.primes)


def _int_root_ceil(x: int, k: int) -> int:
    r = max(1, int(round(x ** (1.0 / k))))
    while r ** k < x:
        r += 1
    while r > 1 and (r - 1) ** k >= x:
        r -= 1
    return r


def choose_primes(u: int, k: int, variant: str = "strong") -> PrimeBasis:
    """k distinct primes with product >= 3u+1, minimising the largest prime.

    Among bases sharing the smallest feasible maximum prime, the one with
    the smallest product wins; ties on product cannot occur (unique
    factorisation).
    """
    if k < 1 or u < 1:
        raise UsageError(f"need k >= 1 and u >= 1, got k={k}, u={u}")
    target = required_product(u)
    D = nextprime(_int_root_ceil(target, k) - 1)
    while True:
        smaller = list(primerange(2, D))
        if len(smaller) >= k - 1:
            best = None
            for rest in itertools.combinations(smaller, k - 1):
                prod = D * math.prod(rest)
                if prod >= target and (best is None or prod < best[0]):
                    best = (prod, rest)
            if best is not None:
                return PrimeBasis(tuple(sorted(best[1] + (D,))), u, variant)
        D = nextprime(D)


def validate_basis(primes, u: int):
    primes = tuple(primes)
    if len(set(primes)) != len(primes):
        raise UsageError(f"primes {primes} are not distinct")
    if not all(isprime(p) for p in primes):
        raise UsageError(f"{primes} contains a non-prime")
    if math.prod(primes) < required_product(u):
        raise UsageError(f"product of {primes} is below 3u+1 = {required_product(u)}")


def crt_membership(xi: int, xj: int, xL: int, basis: PrimeBasis) -> bool:
    """Per-prime test: residue difference lands on ``xL mod p`` or ``xL mod p - p``."""
    for p in basis.primes:
        d = xi % p - xj % p
        r = xL % p
        if d != r and d != r - p:
            return False
    return True
