from jumbled_lab.reduction.abc3 import (Abc3QuerySpec, Abc3ReductionText, analytic_counts_abc3,
                                        build_queries_abc3, build_string_abc3, gap_from_a_count,
                                        solve_via_ji_abc3)
from jumbled_lab.reduction.driver import MatchStats, SolveResult, solve_construction
from jumbled_lab.reduction.general import (GeneralReductionText, QuerySpec,
                                           analytic_count_general, build_queries_general,
                                           build_string_general, exp_count, general_alphabet,
                                           solve_via_ji_general)
from jumbled_lab.reduction.primes import PrimeBasis, choose_primes, crt_membership
from jumbled_lab.reduction.sizes import SizeReport, size_report
from jumbled_lab.reduction.verify import VerificationReport, verify_construction
