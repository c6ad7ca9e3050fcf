"""Alphabets, Parikh vectors and brute-force jumbled matching.

Positions are 1-based and ranges are inclusive, so ``text[lo..hi]`` has
``hi - lo + 1`` symbols. An empty range is written ``hi == lo - 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from jumbled_lab import _kernels
from jumbled_lab.errors import RangeError, UsageError

PRIME = "prime"
HASH = "hash"
DOLLAR = "dollar"
_SEPARATOR_ROLES = (HASH, DOLLAR)


@dataclass(frozen=True)
class Alphabet:
    """Symbols ``0..size-1`` with an optional role tag per symbol."""

    size: int
    roles: tuple = ()

    def __post_init__(self):
        if self.size < 1:
            raise UsageError("alphabet needs at least one symbol")
        roles = tuple(self.roles) if self.roles else (None,) * self.size
        if len(roles) != self.size:
            raise UsageError("one role per symbol expected")
        for role in _SEPARATOR_ROLES:
            if roles.count(role) > 1:
                raise UsageError(f"more than one symbol tagged {role!r}")
        object.__setattr__(self, "roles", roles)

    @property
    def symbols(self) -> range:
        return range(self.size)

    def symbol_with_role(self, role: str) -> Optional[int]:
        try:
            return self.roles.index(role)
        except ValueError:
            return None


BINARY = Alphabet(2)


@dataclass(frozen=True)
class ParikhVector:
    counts: tuple
    alphabet: Alphabet

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        if len(counts) != self.alphabet.size:
            raise UsageError(
                f"{len(counts)} counts for an alphabet of size {self.alphabet.size}")
        if any(c < 0 for c in counts):
            raise UsageError("Parikh counts must be non-negative")
        object.__setattr__(self, "counts", counts)

    @property
    def length(self) -> int:
        """|psi|, the total number of symbols described."""
        return sum(self.counts)

    def __getitem__(self, symbol: int) -> int:
        return self.counts[symbol]

    def __add__(self, other: "ParikhVector") -> "ParikhVector":
        _same_alphabet(self, other)
        return ParikhVector(tuple(a + b for a, b in zip(self.counts, other.counts)),
                            self.alphabet)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.counts, dtype=np.int64)

    @classmethod
    def zeros(cls, alphabet: Alphabet) -> "ParikhVector":
        return cls((0,) * alphabet.size, alphabet)


class JIText:
    """An immutable symbol sequence over an integer alphabet."""

    __slots__ = ("_seq", "alphabet", "_prefix")

    def __init__(self, symbols: Iterable[int], alphabet: Alphabet):
        seq = np.array(list(symbols) if not isinstance(symbols, np.ndarray) else symbols,
                       dtype=np.int32)
        if seq.ndim != 1:
            raise UsageError("text must be one-dimensional")
        if seq.size and (seq.min() < 0 or seq.max() >= alphabet.size):
            raise UsageError("text contains symbols outside the alphabet")
        seq.setflags(write=False)
        self._seq = seq
        self.alphabet = alphabet
        self._prefix = None

    @classmethod
    def from_string(cls, s: str, letters: Sequence[str],
                    alphabet: Optional[Alphabet] = None) -> "JIText":
        """Map each character of ``s`` to its index in ``letters``."""
        lookup = {ch: i for i, ch in enumerate(letters)}
        try:
            return cls([lookup[ch] for ch in s], alphabet or Alphabet(len(letters)))
        except KeyError as exc:
            raise UsageError(f"character {exc.args[0]!r} not in alphabet") from None

    @property
    def symbols(self) -> np.ndarray:
        return self._seq

    def __len__(self) -> int:
        return int(self._seq.size)

    def __getitem__(self, pos: int) -> int:
        if not 1 <= pos <= len(self):
            raise RangeError(f"position {pos} outside 1..{len(self)}")
        return int(self._seq[pos - 1])

    def __eq__(self, other):
        if not isinstance(other, JIText):
            return NotImplemented
        return self.alphabet == other.alphabet and np.array_equal(self._seq, other._seq)

    def __repr__(self):
        return f"JIText(len={len(self)}, sigma={self.alphabet.size})"

    @property
    def prefix_counts(self) -> np.ndarray:
        """Row ``t`` holds the Parikh vector of ``text[1..t]``; built on first use."""
        if self._prefix is None:
            onehot = np.zeros((len(self) + 1, self.alphabet.size), dtype=np.int64)
            onehot[np.arange(1, len(self) + 1), self._seq] = 1
            prefix = np.cumsum(onehot, axis=0)
            prefix.setflags(write=False)
            self._prefix = prefix
        return self._prefix


def _same_alphabet(a, b):
    if a.alphabet != b.alphabet:
        raise UsageError("alphabet mismatch")


def parikh_of(text: JIText, lo: int = 1, hi: Optional[int] = None) -> ParikhVector:
    """Per-symbol counts of ``text[lo..hi]``; defaults to the whole text."""
    n = len(text)
    if hi is None:
        hi = n
    if not (1 <= lo <= n + 1 and lo - 1 <= hi <= n):
        raise RangeError(f"range [{lo}, {hi}] outside text of length {n}")
    prefix = text.prefix_counts
    return ParikhVector(tuple((prefix[hi] - prefix[lo - 1]).tolist()), text.alphabet)


def jumble_match(psi: ParikhVector, phi: ParikhVector) -> bool:
    _same_alphabet(psi, phi)
    return psi.counts == phi.counts


def _check_query(text: JIText, psi: ParikhVector):
    if psi.alphabet != text.alphabet:
        raise UsageError("query alphabet differs from text alphabet")


def sliding_scan(text: JIText, psi: ParikhVector) -> Optional[int]:
    """Smallest start of a window jumble-matching ``psi``, or None.

    One left-to-right pass keeps the per-symbol difference between the window
    and ``psi`` plus the number of non-zero coordinates.
    """
    _check_query(text, psi)
    m = psi.length
    if m == 0 or m > len(text):
        return None
    hits = _kernels.scan(text.symbols, psi.as_array(), m, True)
    return int(hits[0]) if hits.size else None


def enumerate_matches(text: JIText, psi: ParikhVector) -> list:
    """All jumble-match start positions, ascending. Empty for ``|psi| == 0``."""
    _check_query(text, psi)
    m = psi.length
    if m == 0 or m > len(text):
        return []
    return _kernels.scan(text.symbols, psi.as_array(), m, False).tolist()
