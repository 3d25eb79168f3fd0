import math

import pytest
from hypothesis import given, strategies as st

from ohl.errors import ArityMismatch, DegreeMismatch, DomainMismatch, DuplicateEntry, OutOfRange
from ohl.exact_linear import LinComb, TensorBasis
from ohl.symmetric_combinatorics import (
    EMPTY_PERMUTATION,
    Permutation,
    Shuffle,
    Word,
    alpha,
    as_compose,
    com_hat_product,
    coset_factorize,
    direct_sum,
    is_connected,
    mr_bar_coproduct,
    mr_hat_coproduct,
    mr_product,
    permutations,
    restrict,
    shuffle_tensor_action,
    shuffle_to_perm,
    shuffles,
    standardize,
    word_deconcat,
    word_shuffle,
    word_unshuffle,
)

perms = st.integers(0, 6).flatmap(lambda n: st.permutations(list(range(1, n + 1)))).map(
    lambda word: Permutation(tuple(word))
)


def p(*word: int) -> Permutation:
    return Permutation(word)


def test_permutation_validation():
    with pytest.raises(DuplicateEntry):
        p(1, 1)
    with pytest.raises(OutOfRange):
        p(1, 3)
    assert str(p(3, 1, 2)) == "[3,1,2]"
    assert str(EMPTY_PERMUTATION) == "[]"


def test_composition_applies_right_factor_first():
    assert p(3, 1, 2) * p(2, 3, 1) == Permutation.identity(3)
    assert p(2, 1, 3) * p(1, 3, 2) == p(2, 3, 1)
    with pytest.raises(DegreeMismatch):
        p(1, 2) * p(1)


@given(perms)
def test_inverse(sigma):
    assert sigma * sigma.inverse() == Permutation.identity(sigma.size)
    assert sigma.inverse().inverse() == sigma


def test_standardize_and_restrict():
    assert standardize([5, 2, 9]) == p(2, 1, 3)
    assert restrict(p(3, 1, 2), [1, 3]) == p(2, 1)
    with pytest.raises(OutOfRange):
        restrict(p(1, 2), [3])
    with pytest.raises(DuplicateEntry):
        standardize([1, 1])


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2))
def test_shuffle_counts_are_multinomial(a, b, c):
    expected = math.factorial(a + b + c) // (math.factorial(a) * math.factorial(b) * math.factorial(c))
    assert len(shuffles(a, b, c)) == expected


def test_shuffle_to_perm_inverts_the_block_word():
    assert shuffle_to_perm(Shuffle(((2,), (1, 3)))) == p(2, 1, 3)
    assert shuffle_to_perm(Shuffle(((1, 3), (2,)))) == p(1, 3, 2)
    assert shuffle_to_perm(Shuffle(((3,), (1, 2)))) == p(2, 3, 1)


def test_shuffle_blocks_must_partition():
    with pytest.raises(ValueError):
        Shuffle(((2, 1), (3,)))
    with pytest.raises(ValueError):
        Shuffle(((1,), (3,)))
    with pytest.raises(OutOfRange):
        shuffles(-1, 2)


@given(perms, st.data())
def test_coset_factorization_rebuilds(sigma, data):
    split = data.draw(st.integers(0, sigma.size))
    rho, tau, xi = coset_factorize(sigma, split)
    assert rho.size == split
    assert direct_sum(rho, tau) * shuffle_to_perm(xi) == sigma


def test_as_composition_example():
    value = as_compose(p(3, 2, 1, 4), [p(2, 1), p(1, 3, 2), p(1), p(2, 3, 1)])
    assert value == p(6, 5, 2, 4, 3, 1, 8, 9, 7)


def test_as_composition_needs_matching_arity():
    with pytest.raises(ArityMismatch):
        as_compose(p(2, 1), [p(1)])


@pytest.mark.parametrize("n, m", [(0, 0), (1, 1), (2, 3), (4, 6), (5, 5)])
def test_commutative_product_is_binomial(n, m):
    assert com_hat_product(n, m) == (math.comb(n + m, n), n + m)
    assert com_hat_product(n, m, trivial_action=True) == (1, n + m)


def test_shifted_shuffle_product():
    value = mr_product(LinComb.of(p(1)), LinComb.of(p(2, 1)))
    assert str(value) == "1*[1,3,2] + 1*[3,1,2] + 1*[3,2,1]"
    assert len(mr_product(LinComb.of(p(1, 2)), LinComb.of(p(2, 1)))) == 6


def test_coproducts_of_a_transposition():
    bar = mr_bar_coproduct(p(2, 1))
    assert len(bar) == 3
    assert bar.coefficient(TensorBasis(p(1), p(1))) == 1

    hat = mr_hat_coproduct(p(2, 1))
    assert hat.coefficient(TensorBasis(p(1), p(1))) == 2
    assert hat.coefficient(TensorBasis(EMPTY_PERMUTATION, p(2, 1))) == 1


def test_connected_permutations():
    assert is_connected(p(2, 1))
    assert is_connected(p(3, 1, 2))
    assert not is_connected(p(2, 1, 3))
    assert [sum(1 for sigma in permutations(n) if is_connected(sigma)) for n in range(1, 6)] == [1, 1, 3, 13, 71]
    with pytest.raises(OutOfRange):
        is_connected(EMPTY_PERMUTATION)


def test_alpha():
    assert alpha(p(1, 2)) == p(2, 1)
    assert len({alpha(sigma) for sigma in permutations(4)}) == 24


def test_shuffle_action_needs_tags():
    with pytest.raises(DomainMismatch):
        shuffle_tensor_action(TensorBasis(p(1), p(1)), p(2, 1))
    with pytest.raises(DegreeMismatch):
        shuffle_tensor_action(TensorBasis(p(1), p(1), ((1,), (2,))), p(1))


def test_shuffle_action_moves_tags():
    tensor = TensorBasis(p(1), p(1), ((1,), (2,)))
    assert shuffle_tensor_action(tensor, p(2, 1)) == TensorBasis(p(1), p(1), ((2,), (1,)))


def test_words():
    assert word_shuffle(Word(("a",)), Word(("b",))) == LinComb({Word(("a", "b")): 1, Word(("b", "a")): 1})
    assert word_shuffle(Word(("a",)), Word(("a",))) == LinComb({Word(("a", "a")): 2})
    assert len(word_deconcat(Word(("a", "b", "a")))) == 4
    assert sum(coeff for _, coeff in word_unshuffle(Word(("a", "b", "a")))) == 8
    assert str(Word(())) == "ε"
