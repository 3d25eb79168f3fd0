from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ohl.errors import NegativeGenerator
from ohl.exact_linear import (
    ZERO,
    IntSeries,
    LinComb,
    TensorBasis,
    bilinear_extend,
    free_generator_series,
    kernel_dimension,
    lc_add,
    lc_tensor,
    linear_extend,
    rank,
    relation_dimension,
    series_from_generators,
)

combinations = st.dictionaries(st.sampled_from("abcde"), st.integers(-5, 5)).map(LinComb)


def test_zero_coefficients_are_dropped():
    value = LinComb({"a": 0, "b": 2})
    assert value.support() == ["b"]
    assert value.coefficient("a") == 0
    assert LinComb.of("a") - LinComb.of("a") == ZERO
    assert not ZERO


def test_text_is_sorted_by_basis():
    assert str(LinComb({"b": 1, "a": Fraction(3, 2)})) == "3/2*a + 1*b"
    assert str(ZERO) == "0"


@given(combinations, combinations)
def test_addition_commutes(a, b):
    assert lc_add(a, b) == lc_add(b, a) == a + b
    assert lc_add(a, ZERO) == a


@given(combinations, combinations, st.integers(-3, 3))
def test_scaling_distributes(a, b, k):
    assert (a + b) * k == a * k + b * k
    assert k * a == a * k


@given(combinations)
def test_negation_cancels(a):
    assert a + (-a) == ZERO
    assert a - a == ZERO


def test_linear_and_bilinear_extension():
    double = lambda x: LinComb({x + x: 1})
    assert linear_extend(double, LinComb({"a": 2, "b": 1})) == LinComb({"aa": 2, "bb": 1})

    concat = lambda x, y: LinComb.of(x + y)
    value = bilinear_extend(concat, LinComb({"a": 1, "b": 1}), LinComb({"c": 3}))
    assert value == LinComb({"ac": 3, "bc": 3})


def test_tensor_text_and_tags():
    assert str(TensorBasis("x", "y")) == "x ⊗ y"
    assert str(TensorBasis("x", "y", ((1, 3), (2,)))) == "x ⊗ y ⊗ ({1,3},{2})"
    assert TensorBasis("x", "y", ((1,), (2,))).swapped() == TensorBasis("y", "x", ((2,), (1,)))
    assert TensorBasis("x", "y", ((1,), (2,))).untagged() == TensorBasis("x", "y")


def test_tags_must_decompose_an_interval():
    with pytest.raises(ValueError):
        TensorBasis("x", "y", ((1,), (3,)))
    with pytest.raises(ValueError):
        TensorBasis("x", "y", ((2, 1), (3,)))


def test_lc_tensor():
    value = lc_tensor(LinComb({"a": 2}), LinComb({"b": 1, "c": -1}))
    assert value.coefficient(TensorBasis("a", "b")) == 2
    assert value.coefficient(TensorBasis("a", "c")) == -2


def test_rank_over_rationals():
    a, b = LinComb.of("a"), LinComb.of("b")
    assert rank([a + b, a - b, a * 2]) == 2
    assert rank([a * Fraction(1, 3), a]) == 1
    assert rank([]) == 0
    assert relation_dimension([a + b, a + b, ZERO]) == 2
    assert kernel_dimension([a, a], ["x", "y"]) == 1


def test_kernel_dimension_of_rows():
    x, y, z = LinComb.of("x"), LinComb.of("y"), LinComb.of("z")
    assert kernel_dimension([x - y], ["x", "y"]) == 1
    assert kernel_dimension([x, y, z], ["x", "y", "z"]) == 0
    assert kernel_dimension([ZERO, ZERO, ZERO], ["x", "y", "z"]) == 3
    assert kernel_dimension([], ["x", "y"]) == 2


@pytest.mark.parametrize("dims, generators", [
    ((1, 2, 6, 24, 120), (1, 1, 3, 13, 71)),
    ((1, 3, 13, 75), (1, 2, 8, 48)),
    ((1, 3, 11, 45), (1, 2, 6, 22)),
    ((1, 2, 5, 14, 42), (1, 1, 2, 5, 14)),
])
def test_free_generator_series(dims, generators):
    assert free_generator_series(IntSeries.of(dims)) == IntSeries.of(generators)
    assert series_from_generators(IntSeries.of(generators)) == IntSeries.of(dims)


def test_negative_generator_count_is_reported():
    with pytest.raises(NegativeGenerator) as error:
        free_generator_series(IntSeries.of([2, 1]))
    assert error.value.degree == 2
    assert error.value.value == -3


@given(st.lists(st.integers(0, 20), max_size=8))
def test_generator_series_inverts(generators):
    series = IntSeries.of(generators)
    assert free_generator_series(series_from_generators(series)) == series


def test_series_rejects_negative_entries():
    with pytest.raises(ValueError):
        IntSeries.of([1, -1])
    assert str(IntSeries.of([1, 1, 3])) == "1,1,3"
