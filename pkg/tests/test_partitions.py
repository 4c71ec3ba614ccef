import pytest
from hypothesis import given
from hypothesis import strategies as st

from fockshuffle.exact import LaurentPoly
from fockshuffle.partitions import (
    Partition,
    addable_rows,
    arm,
    chi,
    dominance_order,
    dominates,
    is_vertical_strip,
    leg,
    parse_partition,
    partitions_of,
    removable_rows,
    sigma_boxes,
)

partitions = st.integers(0, 8).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def test_counts():
    assert partitions_of(0) == (Partition(),)
    assert [len(partitions_of(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_arm_leg():
    assert (leg(Partition((1,)), (1, 1)), arm(Partition((1,)), (1, 1))) == (0, 0)
    assert (leg(Partition((3, 1)), (1, 1)), arm(Partition((3, 1)), (1, 1))) == (2, 1)
    assert (leg(Partition((3, 1)), (1, 3)), arm(Partition((3, 1)), (1, 3))) == (0, 0)


def test_addable_removable():
    assert (addable_rows(Partition()), removable_rows(Partition())) == ([1], [])
    assert (addable_rows(Partition((2, 2))), removable_rows(Partition((2, 2)))) == ([1, 3], [2])
    assert (addable_rows(Partition((3, 1))), removable_rows(Partition((3, 1)))) == ([1, 2, 3], [1, 2])


def test_chi():
    assert chi((1, 1)) == LaurentPoly.constant(1, 2)
    assert chi((1, 2)) == LaurentPoly.monomial((1, 0))
    assert chi((3, 1)) == LaurentPoly.monomial((0, 2))


def test_sigma_boxes():
    assert sigma_boxes(Partition((1,)), (1, 2), 1) == [(1, 1)]
    assert sigma_boxes(Partition((1,)), (1, 2), 2) == []
    assert sigma_boxes(Partition((2, 2)), (3, 1), 1) == []
    assert sigma_boxes(Partition((2, 2)), (3, 1), 2) == [(1, 1), (2, 1)]
    assert sigma_boxes(Partition(), (1, 1), 1) == sigma_boxes(Partition(), (1, 1), 2) == []


def test_text_format():
    assert Partition((3, 1, 1)).to_text() == "[3,1,1]"
    assert Partition().to_text() == "[]"
    assert parse_partition("[3,1,1]") == Partition((3, 1, 1))
    assert parse_partition("[]") == Partition()
    with pytest.raises(ValueError):
        parse_partition("3,1")


def test_invalid_partition():
    with pytest.raises(ValueError):
        Partition((1, 2))


@given(partitions)
def test_conjugate_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().size == lam.size


@given(partitions)
def test_hook_lengths(lam):
    # arm + leg + 1 over all boxes: the hook lengths of lam and its conjugate agree as multisets
    hooks = sorted(arm(lam, b) + leg(lam, b) + 1 for b in lam.boxes())
    conj = lam.conjugate()
    assert hooks == sorted(arm(conj, b) + leg(conj, b) + 1 for b in conj.boxes())


@given(partitions)
def test_add_remove_inverse(lam):
    assert len(addable_rows(lam)) == len(removable_rows(lam)) + 1
    for k in addable_rows(lam):
        big = lam.add_box(k)
        assert big.size == lam.size + 1
        assert big.remove_box(k) == lam
        assert is_vertical_strip(big, lam)


@given(st.integers(1, 8))
def test_dominance_order_extends_dominance(n):
    for tiebreak in ("revlex", "conjugate"):
        order = dominance_order(n, tiebreak)
        assert sorted(order) == sorted(partitions_of(n))
        for i, a in enumerate(order):
            for b in order[:i]:
                assert not dominates(b, a) or a == b
