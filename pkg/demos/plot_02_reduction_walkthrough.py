"""
From a Convolution-3SUM instance to jumbled queries
===================================================

An instance ``x_1..x_n`` is solvable when some ``i > j`` has
``x_i - x_j = x_{i-j}``. This walk-through encodes the residues of the
values into a text so that each candidate pair ``(j, i)`` corresponds to one
window, then asks an index whether any window has the counts a solution
would produce.
"""

# %%
from jumbled_lab import Conv3SumInstance, brute_force_solve
from jumbled_lab.reduction import (build_queries_general, build_string_general,
                                   choose_primes, solve_via_ji_general)
from jumbled_lab.serialize import render_text

inst = Conv3SumInstance((1, 3, 4, 2), 4)
print("brute force witness:", brute_force_solve(inst))

# %%
# The primes must multiply to more than the largest possible residue gap,
# here ``3u + 1 = 13``. The search keeps the largest prime as small as it can.
basis = choose_primes(inst.u, 2)
print("primes", basis.primes, "D =", basis.D)

# %%
# One segment per consecutive pair of values, separated by ``#$#``.
g = build_string_general(inst, basis)
print(render_text(g.text))
print("length", len(g.text), "dollars at", g.dollar_positions)

# %%
# For a gap ``L`` there are ``2^k`` queries, one per choice of borrowing a
# prime in each residue difference.
for q in build_queries_general(inst, basis, 1):
    print("L=1 mask", q.mask, "counts", q.psi.counts)

# %%
# The sliding backend finds the match for gap 1 and maps it back to a pair.
res = solve_via_ji_general(inst, basis, "sliding", "stats")
print("answer", res.answer, "witness", res.witness, "gaps hit", sorted(res.stats.matched_gaps))
