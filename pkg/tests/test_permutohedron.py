import pytest
from hypothesis import given, strategies as st

from ohl.errors import DegreeMismatch, NotDegreeZero, OutOfRange
from ohl.exact_linear import LinComb, TensorBasis
from ohl.permutohedron import (
    EMPTY_COMPOSITION,
    SetComposition,
    ctd_compose,
    degree0_projection,
    is_reduced,
    perm_to_sc0,
    pi_compose,
    pi_ctd,
    ps_coproduct,
    sc0_to_perm,
    sc_action,
    sc_concat,
    sc_coproduct,
    sc_coproduct_recursive,
    sc_restrict,
    set_compositions,
    total_product,
    zin_bar_coproduct,
    zin_coproduct,
    zin_hat_coproduct,
    zin_product,
)
from ohl.symmetric_combinatorics import Permutation, permutations

compositions = st.integers(0, 4).flatmap(lambda n: st.sampled_from(set_compositions(n)))


def sc(*blocks: list[int]) -> SetComposition:
    return SetComposition.of(*blocks)


def test_validation_and_text():
    with pytest.raises(ValueError):
        sc([1], [1])
    with pytest.raises(ValueError):
        sc([1], [])
    with pytest.raises(ValueError):
        sc([1, 3])

    assert str(sc([3, 4], [1], [2])) == "{3,4}|{1}|{2}"
    assert str(EMPTY_COMPOSITION) == "{}"
    assert sc([1, 2], [3]).degree == 1
    assert sc([2], [1]).degree == 0


def test_ordered_bell_numbers():
    assert [len(set_compositions(n)) for n in range(5)] == [1, 1, 3, 13, 75]


def test_action_and_restriction():
    assert sc_action(sc([1], [2]), Permutation((2, 1))) == sc([2], [1])
    assert sc_restrict(sc([3, 4], [1], [2]), [2, 3]) == sc([2], [1])
    assert sc_concat(sc([1]), sc([1, 2])) == sc([1], [2, 3])
    with pytest.raises(DegreeMismatch):
        sc_action(sc([1]), Permutation((2, 1)))
    with pytest.raises(OutOfRange):
        sc_restrict(sc([1]), [2])


@given(compositions)
def test_identity_acts_trivially(composition):
    assert sc_action(composition, Permutation.identity(composition.size)) == composition


def test_generators_on_singletons():
    one = sc([1])
    assert ctd_compose("prec", one, one) == LinComb.of(sc([1], [2]))
    assert ctd_compose("succ", one, one) == LinComb.of(sc([2], [1]))
    assert ctd_compose("dot", one, one) == LinComb.of(sc([1, 2]))
    assert pi_compose("dot", one, one) == LinComb.of(sc([1, 2]))


def test_total_products_by_family():
    one = sc([1])
    assert total_product(one, one, "f") == LinComb.from_terms([(sc([1], [2]), 1), (sc([2], [1]), 1), (sc([1, 2]), 1)])
    assert total_product(one, one, "g") == LinComb.from_terms([(sc([1], [2]), 1), (sc([2], [1]), 1)])
    assert total_product(EMPTY_COMPOSITION, one) == LinComb.of(one)


def test_quasi_shuffle_of_two_blocks_with_one():
    value = total_product(sc([1], [2]), sc([1]), "f")
    # {1}|{2}|{3}, {1}|{3}|{2}, {3}|{1}|{2}, {1,3}|{2}, {1}|{2,3}
    assert len(value) == 5
    assert value.coefficient(sc([1, 3], [2])) == 1


def test_deconcatenation_is_tagged():
    value = sc_coproduct(sc([2], [1]))
    assert value.coefficient(TensorBasis(sc([1]), sc([1]), ((2,), (1,)))) == 1
    assert len(value) == 3


@pytest.mark.parametrize("n", range(5))
def test_closed_coproduct_matches_recursion(n):
    for composition in set_compositions(n):
        assert sc_coproduct(composition) == sc_coproduct_recursive(composition)


def test_restriction_coproduct_sums_over_subsets():
    assert sum(coeff for _, coeff in ps_coproduct(sc([1, 3], [2]))) == 8


def test_reduced_compositions():
    assert [sum(1 for c in set_compositions(n) if is_reduced(c)) for n in range(1, 5)] == [1, 2, 8, 48]
    assert not is_reduced(sc([1], [2]))
    assert is_reduced(sc([2], [1]))
    with pytest.raises(OutOfRange):
        is_reduced(EMPTY_COMPOSITION)


def test_degree_zero_compositions_are_permutations():
    for sigma in permutations(3):
        assert sc0_to_perm(perm_to_sc0(sigma)) == sigma
    with pytest.raises(NotDegreeZero):
        sc0_to_perm(sc([1, 2]))

    value = LinComb.from_terms([(sc([1, 2]), 1), (sc([2], [1]), 3)])
    assert pi_ctd(value) == LinComb.of(Permutation((2, 1)), 3)


def test_degree_zero_projection_keeps_only_degree_zero():
    assert degree0_projection(sc([2], [1], [3])) == LinComb.of(sc([2], [1], [3]))
    assert degree0_projection(sc([1, 2])) == LinComb()
    assert degree0_projection(sc([3], [1, 2])) == LinComb()
    assert degree0_projection(EMPTY_COMPOSITION) == LinComb.of(EMPTY_COMPOSITION)


def test_zinbiel_operations():
    one = Permutation((1,))
    assert zin_product(one, one) == LinComb.from_terms([(Permutation((1, 2)), 1), (Permutation((2, 1)), 1)])
    assert zin_product(sc([1]), sc([1])) == zin_product(one, one)

    sigma = Permutation((2, 1))
    assert len(zin_bar_coproduct(sigma)) == 2
    assert zin_coproduct(sigma).coefficient(TensorBasis(one, one, ((2,), (1,)))) == 1
    assert zin_hat_coproduct(sigma).coefficient(TensorBasis(one, one)) == 1
