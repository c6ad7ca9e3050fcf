"""
Checking constructions and measuring their size
===============================================

``verify_construction`` recomputes every invariant of an encoding against
brute force. ``size_report`` compares the text length with its predicted
growth rate. Together they give a quick health check over random inputs.
"""

# %%
import numpy as np

from jumbled_lab import gen_random
from jumbled_lab.reduction import (build_string_abc3, build_string_general, choose_primes,
                                   size_report, verify_construction)

rng = np.random.default_rng(0)
for trial in range(5):
    n = int(rng.integers(4, 20))
    inst = gen_random(n, n, seed=trial)
    rep = verify_construction(inst, choose_primes(n, 2))
    print(f"n={n:2d} ok={rep.ok} checks={ {k: c.checked for k, c in rep.checks.items()} }")

# %%
# The same checks for the three-letter encoding take a prime pair.
inst = gen_random(12, 12, seed=99)
p, q = choose_primes(12, 2).primes
for name, c in verify_construction(inst, (p, q)).checks.items():
    print(f"{name:14s} passed={c.passed} checked={c.checked}")

# %%
# Length divided by its predicted growth term stays roughly constant.
for n in (16, 64, 256, 1024):
    inst = gen_random(n, n, seed=n)
    basis = choose_primes(n, 2)
    gen = size_report(build_string_general(inst, basis), "strong")
    abc = size_report(build_string_abc3(inst, *basis.primes), "abc3")
    print(f"n={n:5d}  general s={gen.s:8d} c={gen.ratio:.2f}   "
          f"three-letter s={abc.s:9d} c={abc.ratio:.2f}")
