"""Exhaustive empirical checks of a built construction against brute force.

Four checks, each recorded by name:

``telescoping``
    analytic prime-character counts equal the counted ones on every
    aligned window ``(j, i)``.
``hash_balance``
    (three-letter text only) hash count of every aligned window equals
    ``a + b + delta_factor * D``.
``shape_forcing``
    every window matching any query is aligned and spans ``L`` segments.
``match_set``
    the aligned windows hit by queries are exactly the brute-force
    witnesses, hence the matched gaps equal the witness gaps.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from jumbled_lab.conv3sum import Conv3SumInstance, all_witnesses
from jumbled_lab.errors import GuardError, VerificationError
from jumbled_lab.parikh import enumerate_matches, parikh_of
from jumbled_lab.reduction.abc3 import (DELTA_FACTOR, Abc3ReductionText, analytic_counts_abc3,
                                        build_string_abc3, gap_from_a_count)
from jumbled_lab.reduction.general import (GeneralReductionText, analytic_count_general,
                                           build_string_general)
from jumbled_lab.reduction.primes import PrimeBasis

DEFAULT_MAX_N = 128


@dataclass
class CheckResult:
    passed: bool = True
    checked: int = 0
    detail: str = ""
    counterexample: Optional[dict] = None

    def fail(self, detail, counterexample):
        if self.passed:
            self.passed = False
            self.detail = detail
            self.counterexample = counterexample


@dataclass
class VerificationReport:
    kind: str
    n: int
    checks: dict = field(default_factory=dict)
    matched_gaps: list = field(default_factory=list)
    witness_gaps: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def failures(self) -> list:
        return [name for name, c in self.checks.items() if not c.passed]

    def require(self):
        for name, c in self.checks.items():
            if not c.passed:
                raise VerificationError(name, c.detail, c.counterexample)
        return self

    def as_dict(self):
        return {
            "kind": self.kind, "n": self.n, "ok": self.ok,
            "matched_gaps": self.matched_gaps, "witness_gaps": self.witness_gaps,
            "checks": {name: {"passed": c.passed, "checked": c.checked, "detail": c.detail,
                              "counterexample": c.counterexample}
                       for name, c in self.checks.items()},
        }


def verify_construction(inst: Conv3SumInstance, basis: Union[PrimeBasis, tuple],
                        delta_factor: int = DELTA_FACTOR, max_n: int = DEFAULT_MAX_N,
                        construction=None) -> VerificationReport:
    """Run every check; ``basis`` is a PrimeBasis (k-prime text) or ``(p, q)``."""
    if inst.n > max_n:
        raise GuardError(f"verification is exhaustive; n={inst.n} exceeds cap {max_n}")
    if construction is None:
        if isinstance(basis, PrimeBasis):
            construction = build_string_general(inst, basis)
        else:
            p, q = basis
            construction = build_string_abc3(inst, p, q, delta_factor=delta_factor)
    abc3 = isinstance(construction, Abc3ReductionText)
    report = VerificationReport("abc3" if abc3 else "general", inst.n)
    text = construction.text
    n = inst.n

    tele = report.checks.setdefault("telescoping", CheckResult())
    if abc3:
        balance = report.checks.setdefault("hash_balance", CheckResult())
        p, q, D = construction.p, construction.q, construction.D
    for j in range(1, n):
        for i in range(j + 1, n + 1):
            lo, hi = construction.r_range(j, i)
            counted = parikh_of(text, lo, hi).counts
            if abc3:
                a, b, h = analytic_counts_abc3(inst, p, q, j, i, delta_factor)
                tele.checked += 1
                if (a, b) != counted[:2]:
                    tele.fail(f"window ({j},{i}) counts {counted[:2]}, predicted {(a, b)}",
                              {"j": j, "i": i, "counted": list(counted[:2]),
                               "predicted": [a, b]})
                balance.checked += 1
                if h != counted[2]:
                    balance.fail(f"window ({j},{i}) has {counted[2]} hashes, predicted {h}",
                                 {"j": j, "i": i, "counted": counted[2], "predicted": h})
            else:
                for ell in range(1, construction.basis.k + 1):
                    tele.checked += 1
                    want = analytic_count_general(inst, construction.basis, j, i, ell)
                    if want != counted[ell - 1]:
                        tele.fail(f"window ({j},{i}) symbol {ell}: {counted[ell - 1]} != {want}",
                                  {"j": j, "i": i, "ell": ell,
                                   "counted": counted[ell - 1], "predicted": want})

    shape = report.checks.setdefault("shape_forcing", CheckResult())
    hit_pairs = set()
    for L in range(1, n):
        for qs in construction.queries(L):
            if abc3 and gap_from_a_count(qs.n1, D) != L:
                shape.fail(f"query L={L} mask={qs.mask} a-count {qs.n1} implies another gap",
                           {"L": L, "mask": qs.mask, "n1": qs.n1})
            m = qs.psi.length
            for start in enumerate_matches(text, qs.psi):
                shape.checked += 1
                pair = construction.pair_at(start, start + m - 1)
                if pair is None or pair[1] - pair[0] != L:
                    shape.fail(f"query L={L} mask={qs.mask} matched window "
                               f"[{start},{start + m - 1}] which is not aligned with gap {L}",
                               {"L": L, "mask": qs.mask, "start": start, "length": m})
                    continue
                hit_pairs.add(pair)

    match = report.checks.setdefault("match_set", CheckResult())
    witnesses = {(w.j, w.i) for w in all_witnesses(inst)}
    report.matched_gaps = sorted({i - j for j, i in hit_pairs})
    report.witness_gaps = sorted({i - j for j, i in witnesses})
    match.checked = len(witnesses | hit_pairs)
    if hit_pairs != witnesses:
        extra = sorted(hit_pairs - witnesses)
        missing = sorted(witnesses - hit_pairs)
        match.fail(f"matched windows differ from witnesses (extra {extra[:3]}, "
                   f"missing {missing[:3]})",
                   {"extra": [list(x) for x in extra], "missing": [list(x) for x in missing]})
    return report
