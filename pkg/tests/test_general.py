import itertools
import string
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jumbled_lab import (Conv3SumInstance, GuardError, UsageError, Witness, brute_force_solve,
                         enumerate_matches, gen_random, make_backend, parikh_of)
from jumbled_lab.reduction import (PrimeBasis, analytic_count_general, build_queries_general,
                                   build_string_general, choose_primes, exp_count,
                                   solve_via_ji_general)
from jumbled_lab.serialize import render_text

BASIS = PrimeBasis((3, 5), 4)


def reference_string(values, primes):
    """String-level construction, written out independently of the numpy builder."""
    D = max(primes)
    segs = []
    for i in range(len(values) - 1):
        seg = ""
        for letter, p in zip(string.ascii_lowercase, primes):
            seg += letter * ((values[i + 1] % p) - (values[i] % p) + D)
        segs.append(seg)
    return "$#" + "#$#".join(segs) + "#$"


def instances(max_n=12, max_k=3):
    @st.composite
    def build(draw):
        n = draw(st.integers(2, max_n))
        u = draw(st.integers(1, n * n))
        k = draw(st.integers(1, max_k))
        values = draw(st.lists(st.integers(-u, u), min_size=n, max_size=n))
        return Conv3SumInstance(tuple(values), u), choose_primes(u, k)
    return build()


def test_exp_count_examples(worked):
    assert exp_count(worked, BASIS, 1, 1) == 4
    assert exp_count(worked, BASIS, 2, 2) == 6
    flat = Conv3SumInstance((2, 5), 5)
    assert exp_count(flat, BASIS, 1, 1) == BASIS.D
    with pytest.raises(UsageError):
        exp_count(worked, BASIS, 4, 1)
    with pytest.raises(UsageError):
        exp_count(worked, BASIS, 1, 3)


def test_worked_example_text(worked):
    g = build_string_general(worked, BASIS)
    rendered = render_text(g.text)
    assert rendered == "$#" + "a" * 4 + "b" * 7 + "#$#" + "a" * 6 + "b" * 6 + "#$#" \
        + "a" * 6 + "b" * 3 + "#$"
    assert len(g.text) == 42
    assert rendered.count("$") == 4
    assert all(hi >= lo for lo, hi in g.segment_spans)


def test_analytic_counts_examples(worked):
    g = build_string_general(worked, BASIS)
    assert analytic_count_general(worked, BASIS, 2, 3, 1) == 6
    assert parikh_of(g.text, *g.r_range(2, 3))[0] == 6
    assert analytic_count_general(worked, BASIS, 1, 3, 2) == 13
    for ell in (1, 2):
        for j in (1, 2, 3):
            assert analytic_count_general(worked, BASIS, j, j + 1, ell) == exp_count(worked, BASIS, j, ell)


def test_query_examples(worked):
    q1 = build_queries_general(worked, BASIS, 1)
    assert [q.psi.counts for q in q1] == [(6, 6, 2, 2), (3, 6, 2, 2), (6, 1, 2, 2), (3, 1, 2, 2)]
    q2 = build_queries_general(worked, BASIS, 2)
    assert {q.psi[0] for q in q2} == {10, 7}
    assert {q.psi[1] for q in q2} == {13, 8}
    assert {(q.psi[2], q.psi[3]) for q in q2} == {(4, 3)}
    with pytest.raises(UsageError):
        build_queries_general(worked, BASIS, 4)


def test_worked_solve(worked, worked_no):
    g = build_string_general(worked, BASIS)
    psi = build_queries_general(worked, BASIS, 1)[0].psi
    assert enumerate_matches(g.text, psi) == [g.r_range(2, 3)[0]]
    psi2 = build_queries_general(worked, BASIS, 2)[0].psi
    assert enumerate_matches(g.text, psi2) == [g.r_range(1, 3)[0]]
    for backend in ("naive", "sliding"):
        res = solve_via_ji_general(worked, BASIS, backend, "stats")
        assert res.answer and worked.holds(res.witness)
        assert res.stats.matched_gaps == {1, 2}
        res = solve_via_ji_general(worked_no, BASIS, backend, "stats")
        assert not res.answer and res.witness is None and res.stats.matches == 0


def test_decide_mode_stops_early(worked):
    res = solve_via_ji_general(worked, BASIS, "sliding", "decide")
    assert res.stats.queries == 1 and res.witness.as_list() == [3, 2]


def test_prebuilt_backend(worked):
    g = build_string_general(worked, BASIS)
    backend = make_backend("naive", g.text)
    res = solve_via_ji_general(worked, BASIS, backend, "stats", construction=g)
    assert res.answer


def test_guard_and_bad_args(worked):
    with pytest.raises(GuardError):
        build_string_general(worked, BASIS, max_symbols=10)
    with pytest.raises(UsageError):
        solve_via_ji_general(worked, BASIS, "sliding", "fast")
    with pytest.raises(UsageError):
        build_string_general(Conv3SumInstance((1,), 4), BASIS)


@settings(max_examples=80, deadline=None)
@given(instances())
def test_text_matches_reference(case):
    inst, basis = case
    g = build_string_general(inst, basis)
    assert render_text(g.text) == reference_string(inst.values, basis.primes)
    assert min(exp_count(inst, basis, i, l) for i in range(1, inst.n)
               for l in range(1, basis.k + 1)) >= 1


@settings(max_examples=80, deadline=None)
@given(instances())
def test_telescoping(case):
    inst, basis = case
    g = build_string_general(inst, basis)
    ref = reference_string(inst.values, basis.primes)
    for j, i in itertools.combinations(range(1, inst.n + 1), 2):
        lo, hi = g.r_range(j, i)
        window = Counter(ref[lo - 1:hi])
        assert window["$"] == i - j + 1 and window["#"] == 2 * (i - j)
        assert ref[lo - 1] == "$" and ref[hi - 1] == "$"
        for ell in range(1, basis.k + 1):
            want = analytic_count_general(inst, basis, j, i, ell)
            assert want == sum(exp_count(inst, basis, d, ell) for d in range(j, i))
            assert want == window[string.ascii_lowercase[ell - 1]]


@settings(max_examples=60, deadline=None)
@given(instances(max_n=16))
def test_queries_nonnegative_distinct_and_shape_forcing(case):
    inst, basis = case
    g = build_string_general(inst, basis)
    for L in range(1, inst.n):
        family = build_queries_general(inst, basis, L)
        assert len(family) == 2 ** basis.k
        assert len({q.psi.counts for q in family}) == len(family)
        for q in family:
            assert min(q.psi.counts) >= 0
            assert q.psi.counts[-2:] == (2 * L, L + 1)
            for start in enumerate_matches(g.text, q.psi):
                pair = g.pair_at(start, start + q.psi.length - 1)
                assert pair is not None and pair[1] - pair[0] == L
                assert inst.holds(Witness(pair[1], pair[0]))


@pytest.mark.parametrize("seed", range(40))
def test_end_to_end_and_query_count(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 20))
    inst = gen_random(n, n, seed)
    basis = choose_primes(n, 2)
    oracle = brute_force_solve(inst)
    for backend in ("naive", "sliding"):
        res = solve_via_ji_general(inst, basis, backend, "stats")
        assert res.stats.queries == 2 ** basis.k * (n - 1)
        assert res.answer == (oracle is not None)
        if res.witness:
            assert inst.holds(res.witness)
