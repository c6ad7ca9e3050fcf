"""Jumbled indexing backends.

Three points on the preprocessing/query tradeoff:

* ``naive``   -- every substring's Parikh vector precomputed, O(1)-ish lookups.
* ``sliding`` -- no preprocessing, one linear scan per query.
* ``binary``  -- min/max count of symbol 1 per window length, binary texts only.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from jumbled_lab.errors import GuardError, UsageError
from jumbled_lab.parikh import JIText, ParikhVector, parikh_of, sliding_scan

DEFAULT_MAX_ENTRIES = 2 ** 26
_INT64_LIMIT = 2 ** 62


class NaiveIndex:
    """Distinct Parikh vectors of all substrings, one witness each.

    Vectors are keyed per window length. When the mixed-radix integer
    encoding fits in int64 each length holds a sorted key array plus the
    start of the first window with that key; otherwise a tuple dict.
    """

    def __init__(self, text: JIText, tables: dict, radix: Optional[np.ndarray]):
        self.text = text
        self._tables = tables
        self._radix = radix
        self._radix_list = None if radix is None else radix.tolist()

    def __len__(self):
        return sum(len(t[0]) if self._radix is not None else len(t)
                   for t in self._tables.values())

    def _key(self, counts) -> int:
        return sum(c * r for c, r in zip(counts, self._radix_list))

    def witness(self, psi: ParikhVector) -> Optional[tuple]:
        if psi.alphabet != self.text.alphabet:
            raise UsageError("query alphabet differs from index alphabet")
        m = psi.length
        table = self._tables.get(m)
        if table is None:
            return None
        if self._radix is None:
            start = table.get(psi.counts)
            return None if start is None else (start, m)
        keys, starts = table
        key = self._key(psi.counts)
        if key >= _INT64_LIMIT:
            return None
        at = int(np.searchsorted(keys, key))
        if at < keys.size and keys[at] == key:
            return int(starts[at]), m
        return None

    def vectors(self):
        """Yield ``(counts, (start, length))`` for every stored vector."""
        sigma = self.text.alphabet.size
        for m, table in sorted(self._tables.items()):
            if self._radix is None:
                for counts, start in table.items():
                    yield counts, (start, m)
                continue
            keys, starts = table
            base = len(self.text) + 1
            for key, start in zip(keys.tolist(), starts.tolist()):
                counts = []
                for _ in range(sigma):
                    key, c = divmod(key, base)
                    counts.append(c)
                yield tuple(counts), (start, m)


def build_naive(text: JIText, max_entries: int = DEFAULT_MAX_ENTRIES) -> NaiveIndex:
    n = len(text)
    sigma = text.alphabet.size
    bound = n * (n + 1) // 2 * sigma
    if bound > max_entries:
        raise GuardError(f"naive index needs up to {bound} entries (cap {max_entries})")
    tables = {}
    base = n + 1
    if base ** sigma < _INT64_LIMIT:
        radix = np.array([base ** e for e in range(sigma)], dtype=np.int64)
        # prefix key at t encodes the Parikh vector of text[1..t]
        pk = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(radix[text.symbols], out=pk[1:])
        for m in range(1, n + 1):
            keys, first = np.unique(pk[m:] - pk[:-m], return_index=True)
            tables[m] = (keys, first + 1)
        return NaiveIndex(text, tables, radix)
    prefix = text.prefix_counts
    for m in range(1, n + 1):
        table = {}
        windows = prefix[m:] - prefix[:-m]
        for start, row in enumerate(map(tuple, windows.tolist()), start=1):
            table.setdefault(row, start)
        tables[m] = table
    return NaiveIndex(text, tables, None)


def query_naive(index: NaiveIndex, psi: ParikhVector) -> Optional[tuple]:
    """Witness ``(start, length)`` of a matching substring, or None."""
    return index.witness(psi)


@dataclass(frozen=True)
class BinaryMinMaxIndex:
    """``min_ones[m]``/``max_ones[m]`` over all length-m windows (index 0 unused)."""

    n: int
    min_ones: np.ndarray = field(repr=False)
    max_ones: np.ndarray = field(repr=False)


def build_binary_minmax(text: JIText) -> BinaryMinMaxIndex:
    if text.alphabet.size != 2:
        raise UsageError(f"binary index needs a 2-symbol alphabet, got {text.alphabet.size}")
    n = len(text)
    ones = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(text.symbols == 1, out=ones[1:])
    lo = np.zeros(n + 1, dtype=np.int64)
    hi = np.zeros(n + 1, dtype=np.int64)
    for m in range(1, n + 1):
        w = ones[m:] - ones[:-m]
        lo[m] = w.min()
        hi[m] = w.max()
    lo.setflags(write=False)
    hi.setflags(write=False)
    return BinaryMinMaxIndex(n, lo, hi)


def query_binary(index: BinaryMinMaxIndex, psi: Union[ParikhVector, tuple]) -> bool:
    if isinstance(psi, ParikhVector):
        if psi.alphabet.size != 2:
            raise UsageError("binary index queried with a non-binary vector")
        psi = psi.counts
    c0, c1 = psi
    if c0 < 0 or c1 < 0:
        raise UsageError("counts must be non-negative")
    m = c0 + c1
    if m == 0 or m > index.n:
        return False
    return bool(index.min_ones[m] <= c1 <= index.max_ones[m])


def query_unindexed(text: JIText, psi: ParikhVector) -> bool:
    return sliding_scan(text, psi) is not None


class Backend:
    """A built index over one text; ``preprocess_ns`` is the build wall time."""

    name = ""
    positional = True

    def __init__(self, text: JIText, **options):
        self.text = text
        t0 = time.perf_counter_ns()
        self._build(**options)
        self.preprocess_ns = time.perf_counter_ns() - t0

    def _build(self, **options):
        pass

    def locate(self, psi: ParikhVector) -> Optional[int]:
        """Start of some matching window, or None."""
        raise NotImplementedError

    def contains(self, psi: ParikhVector) -> bool:
        return self.locate(psi) is not None


class NaiveBackend(Backend):
    name = "naive"

    def _build(self, max_entries=DEFAULT_MAX_ENTRIES, **_):
        self.index = build_naive(self.text, max_entries=max_entries)

    def locate(self, psi):
        hit = query_naive(self.index, psi)
        return None if hit is None else hit[0]


class SlidingBackend(Backend):
    name = "sliding"

    def locate(self, psi):
        return sliding_scan(self.text, psi)


class BinaryBackend(Backend):
    name = "binary"
    positional = False

    def _build(self, **_):
        self.index = build_binary_minmax(self.text)

    def locate(self, psi):
        raise UsageError("the binary min/max index answers yes/no only")

    def contains(self, psi):
        return query_binary(self.index, psi)


BACKENDS = {cls.name: cls for cls in (NaiveBackend, SlidingBackend, BinaryBackend)}


def make_backend(name: str, text: JIText, **options) -> Backend:
    try:
        cls = BACKENDS[name]
    except KeyError:
        raise UsageError(f"unknown backend {name!r}; choose from {sorted(BACKENDS)}") from None
    return cls(text, **options)


def rescan(text: JIText, witness: tuple) -> ParikhVector:
    start, length = witness
    return parikh_of(text, start, start + length - 1)
