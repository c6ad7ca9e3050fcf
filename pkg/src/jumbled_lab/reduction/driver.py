"""Answer a Convolution-3SUM instance by querying a jumbled index."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional, Union

from jumbled_lab.conv3sum import Witness
from jumbled_lab.errors import UsageError, VerificationError
from jumbled_lab.index import Backend, make_backend

MODES = ("decide", "stats", "verify")


@dataclass
class MatchStats:
    s: int
    queries: int = 0
    matches: int = 0
    matched_gaps: set = field(default_factory=set)
    preprocess_ns: int = 0
    query_ns: int = 0

    def as_dict(self):
        return {"s": self.s, "queries": self.queries, "matches": self.matches,
                "matched_gaps": sorted(self.matched_gaps),
                "preprocess_ns": self.preprocess_ns, "query_ns": self.query_ns}


@dataclass
class SolveResult:
    witness: Optional[Witness]
    stats: MatchStats

    @property
    def answer(self) -> bool:
        return self.stats.matches > 0


def solve_construction(construction, backend: Union[str, Backend] = "sliding",
                       mode: str = "decide", **backend_options) -> SolveResult:
    """Issue every query of ``construction`` against ``backend``.

    ``decide`` stops at the first match; ``stats`` and ``verify`` issue all
    queries. A positional hit is mapped back to ``(j, i)`` through the
    construction's segment bookkeeping.
    """
    if mode not in MODES:
        raise UsageError(f"mode must be one of {MODES}")
    if isinstance(backend, str):
        backend = make_backend(backend, construction.text, **backend_options)
    elif backend.text is not construction.text and backend.text != construction.text:
        raise UsageError("backend was built over a different text")
    stats = MatchStats(s=len(construction.text), preprocess_ns=backend.preprocess_ns)
    witness = None
    families = [construction.queries(L) for L in range(1, construction.instance.n)]
    t0 = time.perf_counter_ns()
    done = False
    for L, family in enumerate(families, start=1):
        for q in family:
            stats.queries += 1
            if backend.positional:
                start = backend.locate(q.psi)
                hit = start is not None
            else:
                start, hit = None, backend.contains(q.psi)
            if not hit:
                continue
            stats.matches += 1
            stats.matched_gaps.add(L)
            if start is not None and witness is None:
                pair = construction.pair_at(start, start + q.psi.length - 1)
                if pair is None or pair[1] - pair[0] != L:
                    raise VerificationError(
                        "shape_forcing",
                        f"query L={L} mask={q.mask} matched a non-aligned window at {start}",
                        {"L": L, "mask": q.mask, "start": start})
                witness = Witness(pair[1], pair[0])
            if mode == "decide":
                done = True
                break
        if done:
            break
    stats.query_ns = time.perf_counter_ns() - t0
    return SolveResult(witness, stats)
