"""
A three-letter encoding
=======================

With two primes the residues can be written with only ``a``, ``b`` and a
separator. Long separator runs keep windows aligned to segment boundaries,
and the number of ``a`` symbols in a query tells which gap it targets.
"""

# %%
from jumbled_lab import Conv3SumInstance, gen_planted, parikh_of
from jumbled_lab.reduction import (analytic_counts_abc3, build_queries_abc3,
                                   build_string_abc3, gap_from_a_count, solve_via_ji_abc3)

inst = Conv3SumInstance((1, 3, 4, 2), 4)
a = build_string_abc3(inst, 3, 5)
print("length", len(a.text), "D =", a.D)

# %%
# Window counts agree with the closed form for every pair.
for j, i in [(1, 2), (2, 3), (1, 3)]:
    print((j, i), parikh_of(a.text, *a.r_range(j, i)).counts,
          analytic_counts_abc3(inst, 3, 5, j, i))

# %%
# The gap is recoverable from the ``a`` count alone.
for q in build_queries_abc3(inst, 3, 5, 2):
    print("L=2 mask", q.mask, q.psi.counts, "-> gap", gap_from_a_count(q.n1, a.D))

# %%
# A planted instance of moderate size, solved through the encoding.
big = gen_planted(48, 48, seed=7, want_solution=True)
res = solve_via_ji_abc3(big, 53, 59, "sliding", "decide")
print("n=48 text length", res.stats.s, "witness", res.witness, "valid", big.holds(res.witness))
