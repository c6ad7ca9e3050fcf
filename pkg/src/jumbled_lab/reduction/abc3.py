"""Two-prime construction over the three-letter alphabet ``{a, b, #}``.

Segments are ``S_i = (a#)^{e_p(i)} (b#)^{e_q(i)}`` and every segment is
framed by the separator ``#^D a^{2D} #^D``, so ``a`` doubles as part of
the separator. An aligned window starts at the trailing ``#^D`` of one
separator and stops after the leading ``#^D`` of a later one.

Segments and full separators are balanced (as many ``#`` as non-``#``);
the two half-separators at the ends add ``2D`` surplus hashes. Running
surplus never leaves ``[-D, D]``, so a surplus of exactly ``2D`` pins a
window to the aligned form.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from jumbled_lab.conv3sum import Conv3SumInstance
from jumbled_lab.errors import GuardError, UsageError
from jumbled_lab.parikh import HASH, PRIME, Alphabet, JIText, ParikhVector
from jumbled_lab.reduction.driver import SolveResult, solve_construction
from jumbled_lab.reduction.general import DEFAULT_MAX_SYMBOLS
from jumbled_lab.reduction.primes import validate_basis

ABC3 = Alphabet(3, (PRIME, PRIME, HASH))
A, B, HASH_SYM = 0, 1, 2
DELTA_FACTOR = 2


def _check_pair(inst, j, i):
    if not 1 <= j < i <= inst.n:
        raise UsageError(f"need 1 <= j < i <= n, got j={j}, i={i}")


def analytic_counts_abc3(inst: Conv3SumInstance, p: int, q: int, j: int, i: int,
                         delta_factor: int = DELTA_FACTOR) -> tuple:
    """Predicted ``(a, b, #)`` counts of the aligned window for ``(j, i)``."""
    _check_pair(inst, j, i)
    D = max(p, q)
    g = i - j
    a = inst.x(i) % p - inst.x(j) % p + D * g + 2 * D * (g - 1)
    b = inst.x(i) % q - inst.x(j) % q + D * g
    return a, b, a + b + delta_factor * D


@dataclass(frozen=True)
class Abc3QuerySpec:
    L: int
    mask: int
    n1: int
    n2: int
    hashes: int
    psi: ParikhVector


@dataclass(frozen=True, eq=False)
class Abc3ReductionText:
    text: JIText
    instance: Conv3SumInstance
    p: int
    q: int
    separator_starts: tuple
    delta_factor: int = DELTA_FACTOR

    @property
    def D(self) -> int:
        return max(self.p, self.q)

    @property
    def alphabet(self) -> Alphabet:
        return ABC3

    def r_range(self, j: int, i: int) -> tuple:
        _check_pair(self.instance, j, i)
        D = self.D
        return self.separator_starts[j - 1] + 3 * D, self.separator_starts[i - 1] + D - 1

    def pair_at(self, lo: int, hi: int) -> Optional[tuple]:
        D = self.D
        starts = self._start_index
        j = starts.get(lo - 3 * D)
        i = starts.get(hi - D + 1)
        if j is None or i is None or j >= i:
            return None
        return j, i

    @property
    def _start_index(self):
        cached = self.__dict__.get("_start_cache")
        if cached is None:
            cached = {pos: h for h, pos in enumerate(self.separator_starts, start=1)}
            object.__setattr__(self, "_start_cache", cached)
        return cached

    def queries(self, L: int) -> list:
        return build_queries_abc3(self.instance, self.p, self.q, L, self.delta_factor)


def abc3_length(inst: Conv3SumInstance, p: int, q: int) -> int:
    n, D = inst.n, max(p, q)
    runs = (inst.x(n) % p - inst.x(1) % p) + (inst.x(n) % q - inst.x(1) % q) + 2 * D * (n - 1)
    return 2 * runs + 4 * D * n


def build_string_abc3(inst: Conv3SumInstance, p: int, q: int,
                      max_symbols: int = DEFAULT_MAX_SYMBOLS,
                      delta_factor: int = DELTA_FACTOR) -> Abc3ReductionText:
    if inst.n < 2:
        raise UsageError("construction needs n >= 2")
    validate_basis((p, q), inst.u)
    s = abc3_length(inst, p, q)
    if s > max_symbols:
        raise GuardError(f"text would have {s} symbols (cap {max_symbols})")
    D = max(p, q)
    x = np.asarray(inst.values, dtype=np.int64)
    ep = (x[1:] % p) - (x[:-1] % p) + D
    eq = (x[1:] % q) - (x[:-1] % q) + D

    sep = np.repeat(np.array([HASH_SYM, A, HASH_SYM], dtype=np.int32), [D, 2 * D, D])
    a_pair = np.array([A, HASH_SYM], dtype=np.int32)
    b_pair = np.array([B, HASH_SYM], dtype=np.int32)
    pieces, starts, pos = [], [], 1
    for i in range(inst.n - 1):
        starts.append(pos)
        pieces.append(sep)
        seg = np.concatenate([np.tile(a_pair, int(ep[i])), np.tile(b_pair, int(eq[i]))])
        pieces.append(seg)
        pos += sep.size + seg.size
    starts.append(pos)
    pieces.append(sep)
    seq = np.concatenate(pieces)
    assert seq.size == s, (seq.size, s)
    return Abc3ReductionText(JIText(seq, ABC3), inst, p, q, tuple(starts), delta_factor)


def build_queries_abc3(inst: Conv3SumInstance, p: int, q: int, L: int,
                       delta_factor: int = DELTA_FACTOR) -> list:
    """Four vectors for gap ``L``; mask bit 0 subtracts ``p``, bit 1 subtracts ``q``."""
    if not 1 <= L <= inst.n - 1:
        raise UsageError(f"L={L} outside 1..{inst.n - 1}")
    D = max(p, q)
    xL = inst.x(L)
    out = []
    for mask in range(4):
        n1 = xL % p + D * (3 * L - 2) - (p if mask & 1 else 0)
        n2 = xL % q + D * L - (q if mask & 2 else 0)
        hashes = n1 + n2 + delta_factor * D
        out.append(Abc3QuerySpec(L, mask, n1, n2, hashes, ParikhVector((n1, n2, hashes), ABC3)))
    return out


def gap_from_a_count(n1: int, D: int) -> int:
    """The gap ``L`` implied by an ``a`` count of ``n1``."""
    return n1 // (3 * D) + 1


def solve_via_ji_abc3(inst: Conv3SumInstance, p: int, q: int, backend="sliding",
                      mode: str = "decide", construction: Abc3ReductionText = None,
                      max_symbols: int = DEFAULT_MAX_SYMBOLS,
                      **backend_options) -> SolveResult:
    if construction is None:
        construction = build_string_abc3(inst, p, q, max_symbols=max_symbols)
    return solve_construction(construction, backend, mode, **backend_options)
