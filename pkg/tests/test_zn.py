import pytest

from core.zn import (CyclicSubgroup, Residue, cosets, divisors, element_order, is_union_of_cosets, subgroup,
                     units)


def test_divisors_ascending():
    assert divisors(12) == (1, 2, 3, 4, 6, 12)
    assert divisors(1) == (1,)
    assert divisors(49) == (1, 7, 49)


def test_subgroup_generated_by_gcd():
    sub = subgroup(12, 8)
    assert sub.elements == (0, 4, 8)
    assert sub.order == 3
    assert sub.index == 4
    assert 8 in sub
    assert 6 not in sub


def test_subgroup_rejects_bad_arguments():
    with pytest.raises(ValueError):
        subgroup(12, 12)
    with pytest.raises(ValueError):
        subgroup(0, 0)


def test_cosets_ordered_by_minimum():
    assert cosets(subgroup(12, 4)) == [(0, 4, 8), (1, 5, 9), (2, 6, 10), (3, 7, 11)]
    assert cosets(subgroup(6, 0)) == [(0,), (1,), (2,), (3,), (4,), (5,)]


def test_element_order():
    assert element_order(8, 12) == 3
    assert element_order(0, 5) == 1
    assert element_order(5, 10) == 2


def test_units():
    assert units(8) == frozenset({1, 3, 5, 7})
    assert units(1) == frozenset({0})


def test_union_of_cosets():
    sub = subgroup(12, 4)
    assert is_union_of_cosets({1, 5, 9}, sub, include_trivial=False)
    assert is_union_of_cosets({1, 5, 9, 3, 7, 11}, sub, include_trivial=False)
    assert not is_union_of_cosets({1, 5}, sub, include_trivial=False)
    assert not is_union_of_cosets({0, 4, 8}, sub, include_trivial=False)
    assert is_union_of_cosets({0, 4, 8}, sub, include_trivial=True)


def test_residue_arithmetic():
    assert Residue(-1, 5).value == 4
    assert (Residue(3, 5) + 4).value == 2
    assert (-Residue(2, 7)).value == 5
    assert (Residue(3, 8) * 3).value == 1
    assert Residue(2, 6).order == 3
    with pytest.raises(ValueError):
        Residue(1, 0)


def test_coset_of_is_sorted():
    sub = CyclicSubgroup(10, 5, (0, 5))
    assert sub.coset_of(7) == (2, 7)
