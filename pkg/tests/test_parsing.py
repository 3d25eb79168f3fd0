from fractions import Fraction

import pytest

from ohl.associahedron import GENERATOR_TREES, LEAF
from ohl.errors import ParseError
from ohl.exact_linear import LinComb
from ohl.parsing import parse_com, parse_element, parse_lincomb, parse_permutation, parse_set_composition, parse_tree, parse_word
from ohl.permutohedron import EMPTY_COMPOSITION, SetComposition
from ohl.symmetric_combinatorics import ComMonomial, Permutation, Word


def test_permutations():
    assert parse_permutation("[3, 1,2]") == Permutation((3, 1, 2))
    assert parse_permutation("[]") == Permutation(())
    for text in ("[1,1]", "[1,3]", "[1,2", "3,1,2"):
        with pytest.raises(ParseError):
            parse_permutation(text)


def test_set_compositions():
    expected = SetComposition.of([3, 4], [1], [5, 6], [2])
    assert parse_set_composition("{3,4}|{1}|{5,6}|{2}") == expected
    assert parse_set_composition("(34,1,56,2)") == expected
    assert parse_set_composition("{}") == EMPTY_COMPOSITION
    for text in ("{1}|{1}", "{1,1}|{2}", "{2}", "{1}|"):
        with pytest.raises(ParseError):
            parse_set_composition(text)


def test_trees():
    assert parse_tree("|") == LEAF
    assert parse_tree("(| (| |))") == GENERATOR_TREES["prec"]
    assert parse_tree("(|||)") == GENERATOR_TREES["dot"]
    for text in ("(|)", "(| |", "| |", "(| x)", ""):
        with pytest.raises(ParseError):
            parse_tree(text)


def test_words_and_monomials():
    assert parse_word("ab") == Word(("a", "b"))
    assert parse_word("ε") == Word(())
    assert parse_com("X^3") == ComMonomial(3)
    with pytest.raises(ParseError):
        parse_word("a1")
    with pytest.raises(ParseError):
        parse_com("Y^2")
    with pytest.raises(ParseError):
        parse_element("[1]", "nope")


def test_linear_combinations():
    value = parse_lincomb("2*[1,2] + -1/3*[2,1]", "perms")
    assert value.coefficient(Permutation((1, 2))) == 2
    assert value.coefficient(Permutation((2, 1))) == Fraction(-1, 3)

    assert parse_lincomb("[1] + [1]", "perms") == LinComb.of(Permutation((1,)), 2)
    assert parse_lincomb("-[1]", "perms") == LinComb.of(Permutation((1,)), -1)
    assert parse_lincomb("0", "perms") == LinComb()
    assert parse_lincomb("1*(| |) + 1*(| (| |))", "trees") == LinComb.from_terms(
        [(GENERATOR_TREES["prec"], 1), (parse_tree("(| |)"), 1)]
    )


def test_printed_combinations_parse_back():
    value = LinComb.from_terms([(Permutation((2, 1)), Fraction(3, 2)), (Permutation((1, 2)), -4)])
    assert parse_lincomb(str(value), "perms") == value

    value = LinComb.from_terms([(SetComposition.of([2], [1, 3]), 1), (SetComposition.of([1, 2, 3]), 5)])
    assert parse_lincomb(str(value), "setcomps") == value


def test_bad_coefficients():
    with pytest.raises(ParseError):
        parse_lincomb("1/0*[1]", "perms")
    with pytest.raises(ParseError):
        parse_lincomb("2*[1,1]", "perms")
