"""Convolution-3SUM instances (subtraction form), oracle and generators.

An instance ``x_1..x_n`` is solvable when some ``i > j`` has
``x_i - x_j == x_{i-j}``. Indices are 1-based throughout.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Optional

import numpy as np

from jumbled_lab.errors import RetryBudgetExhausted, UsageError

VARIANTS = ("standard", "strong", "abc3")


def default_universe(n: int, variant: str) -> int:
    """u = n^2 for the standard assumption, u = n otherwise."""
    if variant not in VARIANTS:
        raise UsageError(f"unknown variant {variant!r}")
    return n * n if variant == "standard" else n


@dataclass(frozen=True)
class Witness:
    i: int
    j: int

    @property
    def gap(self) -> int:
        return self.i - self.j

    def as_list(self):
        return [self.i, self.j]


@dataclass(frozen=True)
class Conv3SumInstance:
    values: tuple
    u: int

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if self.u < 0:
            raise UsageError("universe bound must be non-negative")
        bad = [v for v in values if abs(v) > self.u]
        if bad:
            raise UsageError(f"value {bad[0]} outside [-{self.u}, {self.u}]")
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return len(self.values)

    def x(self, i: int) -> int:
        """1-based access to ``x_i``."""
        if not 1 <= i <= self.n:
            raise UsageError(f"index {i} outside 1..{self.n}")
        return self.values[i - 1]

    def holds(self, w: Witness) -> bool:
        return 1 <= w.j < w.i <= self.n and self.x(w.i) - self.x(w.j) == self.x(w.i - w.j)

    def conforms(self, variant: str) -> bool:
        return self.u <= default_universe(self.n, variant)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "u": self.u, "values": list(self.values)},
                          sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, data) -> "Conv3SumInstance":
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        try:
            values, u, n = data["values"], data["u"], data["n"]
        except (KeyError, TypeError) as exc:
            raise UsageError(f"malformed instance JSON: missing {exc}") from None
        if len(values) != n:
            raise UsageError(f"instance says n={n} but lists {len(values)} values")
        return cls(tuple(values), int(u))

    def digest(self) -> str:
        return hashlib.sha256(self.to_json().encode()).hexdigest()[:16]


def brute_force_solve(inst: Conv3SumInstance) -> Optional[Witness]:
    """Lexicographically smallest witness ``(i, j)``, scanning i then j ascending."""
    x = np.asarray(inst.values, dtype=np.int64)
    for i in range(2, inst.n + 1):
        # j = 1..i-1 pairs with x_{i-j} = x[i-2], ..., x[0]
        hit = np.flatnonzero(x[i - 1] - x[: i - 1] == x[i - 2::-1])
        if hit.size:
            return Witness(i, int(hit[0]) + 1)
    return None


def all_witnesses(inst: Conv3SumInstance) -> list:
    x = inst.values
    return [Witness(i, j)
            for i in range(2, inst.n + 1)
            for j in range(1, i)
            if x[i - 1] - x[j - 1] == x[i - j - 1]]


def _rng(seed):
    return np.random.default_rng(seed)


def gen_random(n: int, u: int, seed) -> Conv3SumInstance:
    if n < 2 or u < 1:
        raise UsageError(f"need n >= 2 and u >= 1, got n={n}, u={u}")
    values = _rng(seed).integers(-u, u + 1, size=n)
    return Conv3SumInstance(tuple(values.tolist()), u)


def gen_planted(n: int, u: int, seed, want_solution: bool,
                max_retries: int = 1000) -> Conv3SumInstance:
    """Random instance forced to be solvable or, by rejection, unsolvable.

    Planting picks ``i > j`` with ``i - j != j`` and overwrites
    ``x_{i-j}``; ``x_i, x_j`` are redrawn until their difference fits in
    ``[-u, u]``. Rejection gives up after ``max_retries`` draws.
    """
    if u < 1:
        raise UsageError("u must be >= 1")
    rng = _rng(seed)
    if want_solution:
        if n < 3:
            raise UsageError("planting needs n >= 3")
        x = rng.integers(-u, u + 1, size=n).tolist()
        pairs = [(i, j) for i in range(2, n + 1) for j in range(1, i) if i != 2 * j]
        i, j = pairs[rng.integers(len(pairs))]
        while abs(x[i - 1] - x[j - 1]) > u:
            x[i - 1], x[j - 1] = rng.integers(-u, u + 1, size=2).tolist()
        x[i - j - 1] = x[i - 1] - x[j - 1]
        return Conv3SumInstance(tuple(x), u)
    if n < 2:
        raise UsageError("need n >= 2")
    for _ in range(max_retries):
        inst = Conv3SumInstance(tuple(rng.integers(-u, u + 1, size=n).tolist()), u)
        if brute_force_solve(inst) is None:
            return inst
    raise RetryBudgetExhausted(
        f"no unsolvable instance with n={n}, u={u} after {max_retries} draws")
