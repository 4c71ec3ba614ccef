import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fockshuffle.exact import RatFun2, SampledField, parse_ratfun
from fockshuffle.fockrep import (
    FockVector,
    apply_e,
    apply_f,
    commutator_ef,
    cubic_annihilation,
    e_coeff,
    e_coeff_alt,
    e_operator,
    f_coeff,
    f_coeff_alt,
    gamma,
    psi_eigenvalue,
    verify_coefficient_oracles,
    verify_relation,
)
from fockshuffle.partitions import Partition, addable_rows, character_sum, partitions_of, removable_rows

P = Partition
T1 = RatFun2.mono(1, 0)
T2 = RatFun2.mono(0, 1)
D = (1 - T1) * (1 - T2)

small_partitions = st.integers(0, 5).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def test_e_coeff_examples():
    assert e_coeff(P(), 1, 0) == 1 / D
    # frozen from the alternate product formula
    assert e_coeff(P((1,)), 1, 0) == 1 / ((1 - T1) * (1 - T2 / T1))
    assert e_coeff(P((1,)), 2, 1) == parse_ratfun("(t2^2) / (t1*t2 - t2^2 - t1 + t2)")
    assert e_coeff(P((1,)), 2, 1) == e_coeff_alt(P((1, 1)), 2, 1)


def test_f_coeff_examples():
    assert f_coeff(P((1,)), 1, 1) == 1
    assert f_coeff(P((1,)), 1, 0) == 1
    assert f_coeff(P((2, 1)), 2, 2) == parse_ratfun("(-t2^3 + t1*t2) / (t1 - t2)")
    assert f_coeff(P((2, 1)), 2, 2) == f_coeff_alt(P((2,)), 2, 2)


def test_alt_examples():
    assert e_coeff_alt(P((1,)), 1, 0) == e_coeff(P(), 1, 0)
    assert f_coeff_alt(P(), 1, 1) == 1


def test_bad_rows():
    with pytest.raises(ValueError):
        e_coeff(P((1,)), 3, 0)
    with pytest.raises(ValueError):
        f_coeff(P((2,)), 2, 0)


def test_apply_examples():
    vac = FockVector.basis(P())
    assert apply_e(0, vac) == FockVector({P((1,)): 1 / D})
    assert apply_f(1, FockVector.basis(P((1,)))) == vac
    assert apply_f(0, vac).is_zero()


def test_psi_vacuum():
    assert psi_eigenvalue(P(), "+", 0).coeffs == (RatFun2.const(-1),)
    assert psi_eigenvalue(P(), "-", 0).coeffs == (-1 / (T1 * T2),)


def test_psi_one_box():
    # the first coefficient at infinity, frozen from the box-ratio recursion
    plus = psi_eigenvalue(P((1,)), "+", 1)
    assert plus[1] == parse_ratfun("t1*t2 - t1 - t2 - 1 + t2^-1 + t1^-1")


def test_gamma_examples():
    for lam in [P(), P((1,)), P((2, 1)), P((3, 2, 1))]:
        assert gamma(lam, 0) == -1 / D
    assert gamma(P((1,)), 1) == -1 / D + 1


def test_commutator_character_sum():
    check, eig = commutator_ef(0, 1, 4)
    assert check.passed
    for lam, v in eig.items():
        assert v == -1 / D + RatFun2.from_laurent(character_sum(lam))


def test_cubic():
    assert cubic_annihilation() == (True, True)


@pytest.mark.parametrize("which", [1, 2])
def test_relation_small(which):
    assert all(c.passed for c in verify_relation(which, range(0, 1), range(0, 1), nmax=3))


def test_relation4_edge_small():
    checks = verify_relation(4, nmax=2, order=8)
    assert checks and all(c.passed for c in checks)


def test_oracles_small():
    assert all(c.passed for c in verify_coefficient_oracles(4))


def test_sampled_mode_agrees():
    fld = SampledField.from_seed(11)
    for lam in partitions_of(3):
        for k in addable_rows(lam):
            assert e_coeff(lam, k, 1, fld) == e_coeff(lam, k, 1).evaluate(fld.t1, fld.t2)
        for k in removable_rows(lam):
            assert f_coeff(lam, k, -1, fld) == f_coeff(lam, k, -1).evaluate(fld.t1, fld.t2)


@given(small_partitions, st.integers(-2, 2))
@settings(max_examples=40)
def test_coefficients_match_alt(lam, r):
    for k in addable_rows(lam):
        assert e_coeff(lam, k, r) == e_coeff_alt(lam.add_box(k), k, r)
    for k in removable_rows(lam):
        assert f_coeff(lam, k, r) == f_coeff_alt(lam.remove_box(k), k, r)


@given(small_partitions)
@settings(max_examples=30)
def test_e_raises_degree(lam):
    v = apply_e(0, FockVector.basis(lam))
    assert all(mu.size == lam.size + 1 for mu in v.coeffs)
    assert e_operator(0, 5).column(lam) == v.coeffs
