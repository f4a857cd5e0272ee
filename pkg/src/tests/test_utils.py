from fractions import Fraction

import pytest

from genusonedivisors.utils import (
    boundary_masks,
    format_rational,
    full_mask,
    labels_to_mask,
    mask_to_labels,
    popcount,
    subset_sort_key,
    to_fraction,
)


def test_labels_to_mask():
    assert labels_to_mask((1, 3)) == 0b101
    assert labels_to_mask([]) == 0


def test_mask_to_labels():
    assert mask_to_labels(0b1101) == (1, 3, 4)
    assert mask_to_labels(0) == ()


def test_full_mask_and_popcount():
    assert full_mask(4) == 0b1111
    assert popcount(full_mask(6)) == 6


def test_boundary_masks_order():
    masks = boundary_masks(3)
    assert [mask_to_labels(mask) for mask in masks] == [(1, 2), (1, 3), (2, 3), (1, 2, 3)]


def test_boundary_masks_count():
    # 2^n - n - 1 subsets of size at least two
    assert len(boundary_masks(6)) == 57


def test_subset_sort_key():
    masks = [labels_to_mask((2, 3)), labels_to_mask((1, 2, 3)), labels_to_mask((1, 4))]
    assert sorted(masks, key=subset_sort_key) == [
        labels_to_mask((1, 4)),
        labels_to_mask((2, 3)),
        labels_to_mask((1, 2, 3)),
    ]


def test_to_fraction():
    assert to_fraction("-7/12") == Fraction(-7, 12)
    assert to_fraction(3) == Fraction(3)
    assert to_fraction(Fraction(2, 4)) == Fraction(1, 2)


def test_to_fraction_rejects_floats():
    with pytest.raises(ValueError):
        to_fraction(0.5)
    with pytest.raises(ValueError):
        to_fraction("half")


def test_format_rational():
    assert format_rational(Fraction(-2, 4)) == "-1/2"
    assert format_rational(Fraction(0)) == "0/1"
    assert format_rational(Fraction(5)) == "5/1"
