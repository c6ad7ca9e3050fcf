"""k-prime construction over the alphabet ``{a_1..a_k, #, $}``.

The text is ``$# S_1 #$# S_2 #$# ... #$# S_{n-1} #$`` where segment
``S_i = a_1^{e(i,1)} ... a_k^{e(i,k)}`` and
``e(i,l) = (x_{i+1} mod p_l) - (x_i mod p_l) + D``. The window running
from the dollar before ``S_j`` to the dollar after ``S_{i-1}`` holds
``(x_i mod p_l) - (x_j mod p_l) + D(i-j)`` copies of ``a_l``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from jumbled_lab.conv3sum import Conv3SumInstance
from jumbled_lab.errors import GuardError, UsageError
from jumbled_lab.parikh import DOLLAR, HASH, PRIME, Alphabet, JIText, ParikhVector
from jumbled_lab.reduction.driver import SolveResult, solve_construction
from jumbled_lab.reduction.primes import PrimeBasis

DEFAULT_MAX_SYMBOLS = 2 ** 28


def general_alphabet(k: int) -> Alphabet:
    """Symbols ``0..k-1`` are the prime characters, then ``#`` and ``$``."""
    return Alphabet(k + 2, (PRIME,) * k + (HASH, DOLLAR))


def _check_gap_range(inst, L):
    if not 1 <= L <= inst.n - 1:
        raise UsageError(f"L={L} outside 1..{inst.n - 1}")


def exp_count(inst: Conv3SumInstance, basis: PrimeBasis, i: int, ell: int) -> int:
    if not 1 <= i <= inst.n - 1:
        raise UsageError(f"segment {i} outside 1..{inst.n - 1}")
    if not 1 <= ell <= basis.k:
        raise UsageError(f"prime index {ell} outside 1..{basis.k}")
    p = basis.primes[ell - 1]
    return inst.x(i + 1) % p - inst.x(i) % p + basis.D


def analytic_count_general(inst: Conv3SumInstance, basis: PrimeBasis,
                           j: int, i: int, ell: int) -> int:
    if not 1 <= j < i <= inst.n:
        raise UsageError(f"need 1 <= j < i <= n, got j={j}, i={i}")
    p = basis.primes[ell - 1]
    return inst.x(i) % p - inst.x(j) % p + basis.D * (i - j)


@dataclass(frozen=True)
class QuerySpec:
    L: int
    mask: int
    psi: ParikhVector


@dataclass(frozen=True, eq=False)
class GeneralReductionText:
    text: JIText
    instance: Conv3SumInstance
    basis: PrimeBasis
    dollar_positions: tuple
    segment_spans: tuple

    @property
    def alphabet(self) -> Alphabet:
        return self.text.alphabet

    def r_range(self, j: int, i: int) -> tuple:
        """Inclusive 1-based span of the window covering ``S_j..S_{i-1}``."""
        if not 1 <= j < i <= self.instance.n:
            raise UsageError(f"need 1 <= j < i <= n, got j={j}, i={i}")
        return self.dollar_positions[j - 1], self.dollar_positions[i - 1]

    def pair_at(self, lo: int, hi: int) -> Optional[tuple]:
        """``(j, i)`` if ``[lo, hi]`` is exactly an aligned window, else None."""
        index = self._dollar_index
        j, i = index.get(lo), index.get(hi)
        if j is None or i is None or j >= i:
            return None
        return j, i

    @property
    def _dollar_index(self):
        cached = self.__dict__.get("_dollar_index_cache")
        if cached is None:
            cached = {pos: h for h, pos in enumerate(self.dollar_positions, start=1)}
            object.__setattr__(self, "_dollar_index_cache", cached)
        return cached

    def queries(self, L: int) -> list:
        return build_queries_general(self.instance, self.basis, L)


def general_length(inst: Conv3SumInstance, basis: PrimeBasis) -> int:
    """Text length without building it: exponent sums telescope."""
    n = inst.n
    body = sum(inst.x(n) % p - inst.x(1) % p for p in basis.primes) + basis.k * basis.D * (n - 1)
    return body + 3 * (n - 2) + 4


def build_string_general(inst: Conv3SumInstance, basis: PrimeBasis,
                         max_symbols: int = DEFAULT_MAX_SYMBOLS) -> GeneralReductionText:
    n, k = inst.n, basis.k
    if n < 2:
        raise UsageError("construction needs n >= 2")
    s = general_length(inst, basis)
    if s > max_symbols:
        raise GuardError(f"text would have {s} symbols (cap {max_symbols})")
    hash_, dollar = k, k + 1
    x = np.asarray(inst.values, dtype=np.int64)
    primes = np.asarray(basis.primes, dtype=np.int64)
    res = x[:, None] % primes[None, :]
    exps = res[1:] - res[:-1] + basis.D          # row i-1 holds e(i, .)

    run_sym, run_len = [dollar, hash_], [1, 1]
    for i in range(n - 1):
        run_sym.extend(range(k))
        run_len.extend(exps[i].tolist())
        if i < n - 2:
            run_sym.extend((hash_, dollar, hash_))
            run_len.extend((1, 1, 1))
    run_sym.extend((hash_, dollar))
    run_len.extend((1, 1))
    seq = np.repeat(np.asarray(run_sym, dtype=np.int32), run_len)
    assert seq.size == s, (seq.size, s)

    dollars = tuple((np.flatnonzero(seq == dollar) + 1).tolist())
    spans = tuple((d + 2, nxt - 2) for d, nxt in zip(dollars[:-1], dollars[1:]))
    return GeneralReductionText(JIText(seq, general_alphabet(k)), inst, basis, dollars, spans)


def build_queries_general(inst: Conv3SumInstance, basis: PrimeBasis, L: int) -> list:
    """The ``2^k`` vectors for gap ``L``; bit ``l-1`` of the mask subtracts ``p_l``."""
    _check_gap_range(inst, L)
    k, D = basis.k, basis.D
    alphabet = general_alphabet(k)
    xL = inst.x(L)
    base = [xL % p + D * L for p in basis.primes]
    out = []
    for mask in range(1 << k):
        counts = [c - p if mask >> b & 1 else c
                  for b, (c, p) in enumerate(zip(base, basis.primes))]
        counts += [2 * L, L + 1]
        out.append(QuerySpec(L, mask, ParikhVector(tuple(counts), alphabet)))
    return out


def solve_via_ji_general(inst: Conv3SumInstance, basis: PrimeBasis, backend="sliding",
                         mode: str = "decide", construction: GeneralReductionText = None,
                         max_symbols: int = DEFAULT_MAX_SYMBOLS,
                         **backend_options) -> SolveResult:
    if construction is None:
        construction = build_string_general(inst, basis, max_symbols=max_symbols)
    return solve_construction(construction, backend, mode, **backend_options)
