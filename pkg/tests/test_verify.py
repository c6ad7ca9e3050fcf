import pytest

from jumbled_lab import Conv3SumInstance, GuardError, VerificationError, gen_random
from jumbled_lab.reduction import (PrimeBasis, build_string_abc3, build_string_general,
                                   choose_primes, size_report, verify_construction)
from jumbled_lab.reduction.sizes import predicted_length

BASIS = PrimeBasis((3, 5), 4)


@pytest.mark.parametrize("basis", [BASIS, (3, 5)])
def test_worked_yes(worked, basis):
    r = verify_construction(worked, basis)
    assert r.ok and r.matched_gaps == [1, 2] == r.witness_gaps
    assert r.require() is r


@pytest.mark.parametrize("basis", [BASIS, (3, 5)])
def test_worked_no(worked_no, basis):
    r = verify_construction(worked_no, basis)
    assert r.ok and r.matched_gaps == [] == r.witness_gaps


@pytest.mark.parametrize("basis", [PrimeBasis((5,), 1), (2, 3)])
def test_single_segment(basis):
    r = verify_construction(Conv3SumInstance((1, 0), 1), basis)
    assert r.ok


def test_four_d_surplus_is_caught(worked):
    r = verify_construction(worked, (3, 5), delta_factor=4)
    assert "hash_balance" in r.failures()
    assert not r.checks["hash_balance"].passed
    cx = r.checks["hash_balance"].counterexample
    assert cx["counted"] - cx["predicted"] == -10      # off by 2D, D = 5
    with pytest.raises(VerificationError) as err:
        r.require()
    assert err.value.check == "telescoping" or err.value.check == "hash_balance"


def test_undersized_basis_is_caught():
    # product 6 < 3u+1 = 13: residue agreement no longer implies equality
    found = False
    for seed in range(200):
        inst = gen_random(8, 4, seed)
        r = verify_construction(inst, PrimeBasis((2, 3), 4))
        if not r.ok:
            assert r.failures() == ["match_set"]
            assert r.checks["match_set"].counterexample["extra"]
            found = True
            break
    assert found


def test_guard():
    inst = gen_random(200, 200, 0)
    with pytest.raises(GuardError):
        verify_construction(inst, choose_primes(200, 2))


def test_report_dict(worked):
    d = verify_construction(worked, BASIS).as_dict()
    assert d["ok"] and set(d["checks"]) == {"telescoping", "shape_forcing", "match_set"}


def test_size_report(worked):
    r = size_report(build_string_abc3(worked, 3, 5))
    assert r.variant == "abc3" and r.s == 144 and r.predicted == 8.0 and r.ratio == 18.0
    g = size_report(build_string_general(worked, BASIS))
    assert g.variant == "strong" and g.s == 42 and g.predicted == pytest.approx(2 * 4 ** 1.5)
    assert predicted_length(8, 3, "standard") == pytest.approx(3 * 8 ** (1 + 2 / 3))


def test_strong_size_ratio_bounded_and_scaling():
    reports = []
    for n in (16, 32, 64, 128, 256, 512, 1024):
        inst = gen_random(n, n, n)
        reports.append(size_report(build_string_general(inst, choose_primes(n, 2, "strong"))))
    assert all(r.ratio <= 8 for r in reports)
    # doubling n multiplies s by roughly 2^(3/2)
    factors = [b.s / a.s for a, b in zip(reports, reports[1:])]
    assert all(2 ** 1.5 / 1.6 < f < 2 ** 1.5 * 1.6 for f in factors)
