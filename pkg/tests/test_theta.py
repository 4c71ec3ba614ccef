import pytest

from fockshuffle.exact import ExactField, RatFun2, SampledField
from fockshuffle.partitions import Partition
from fockshuffle.shufflealg import k_element, shuffle_matrix_element
from fockshuffle.symfun import pieri_single
from fockshuffle.theta import (
    c_norm,
    c_ratio_check,
    d_factor,
    heisenberg_plus,
    k_tilde_matrix,
    specialize_qt,
    verify_c_ratio,
    verify_heisenberg_commute,
    verify_intertwining,
    verify_single_box_edges,
    verify_theta,
)

P = Partition
T1 = RatFun2.mono(1, 0)
T2 = RatFun2.mono(0, 1)
QT = ExactField().qt_field()
q = RatFun2.mono(1, 0, names=("q", "t"))
t = RatFun2.mono(0, 1, names=("q", "t"))


def test_c_norm_examples():
    assert c_norm(P()) == 1
    assert c_norm(P((1,))) == 1
    assert c_norm(P((2,))) == -T1 * (1 - T2) / (T2 - T1)


@pytest.mark.parametrize("lam,j", [((), 1), ((1,), 1), ((2, 1), 2), ((3, 1), 3)])
def test_c_ratio_examples(lam, j):
    assert c_ratio_check(P(lam), j).passed


def test_specialize():
    assert specialize_qt((1 - q) / (1 - t)) == -T2 * (1 - T1) / (1 - T2)
    assert specialize_qt(RatFun2.const(1, ("q", "t"))) == 1


def test_single_box_edge():
    # psi_{(1,1)/(1)} specialized equals (1-t1)(1-t2) times the normalized K_1 entry
    lhs = specialize_qt(pieri_single(P((1,)), 2, QT))
    raw = shuffle_matrix_element(k_element(1), P((1,)), P((1, 1)))
    normalized = raw * c_norm(P((1,))) / c_norm(P((1, 1)))
    assert lhs == (1 - T1) * (1 - T2) * normalized


def test_d_factor():
    assert d_factor(1) == 1 / ((1 - T1) * (1 - T2))
    assert d_factor(2) == -T1 / ((1 - T1) * (1 - T2))
    with pytest.raises(ValueError):
        d_factor(0)


def test_k_tilde_one_is_normalized_k1():
    op = k_tilde_matrix(1, 3)
    assert op.entry(P(), P((1,))) == 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_theta_small(n):
    assert verify_theta(n, 4).passed


def test_single_box_and_ratio_small():
    assert verify_single_box_edges(4).passed
    assert verify_c_ratio(5).passed


def test_heisenberg_small():
    assert verify_heisenberg_commute(3, 4).passed
    check = verify_intertwining(3, 4)
    assert check.passed
    assert check.info["scalar"] == {"1": "1", "2": "1", "3": "1"}


def test_h1_is_k_tilde_1():
    h1, k1 = heisenberg_plus(1, 4), k_tilde_matrix(1, 4)
    assert h1.first_difference(k1) is None


def test_sampled_mode():
    fld = SampledField.from_seed(9)
    assert verify_theta(2, 4, fld).passed
    assert verify_intertwining(2, 4, fld).passed
    assert c_norm(P((2, 1)), fld) == c_norm(P((2, 1))).evaluate(fld.t1, fld.t2)
