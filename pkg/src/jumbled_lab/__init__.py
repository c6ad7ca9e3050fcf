"""Jumbled indexing backends and Convolution-3SUM reductions to them."""
from jumbled_lab.conv3sum import (Conv3SumInstance, Witness, brute_force_solve, gen_planted,
                                  gen_random)
from jumbled_lab.errors import (GuardError, JumbledLabError, RangeError, RetryBudgetExhausted,
                                UsageError, VerificationError)
from jumbled_lab.index import (BinaryMinMaxIndex, NaiveIndex, build_binary_minmax, build_naive,
                               make_backend, query_binary, query_naive, query_unindexed)
from jumbled_lab.parikh import (Alphabet, JIText, ParikhVector, enumerate_matches, jumble_match,
                                parikh_of, sliding_scan)

__version__ = "0.1.0"
