from collections import Counter

import pytest

from ohl import bialgebra_lab, permutohedron
from ohl.associahedron import backslash_product, graft, planar_trees, tree_bar_coproduct
from ohl.bialgebra_lab import (
    bar_basis_coproduct,
    check_2as,
    check_associative,
    check_coassociative,
    check_counit,
    check_duality,
    check_hopf_compat,
    check_uiP,
    dims_of,
    freeness_report,
    hat_basis_coproduct,
    hat_product,
    hopf_law,
    primitive_dims,
    run_law,
)
from ohl.errors import InhomogeneousInput, UnknownStructure
from ohl.exact_linear import IntSeries, LinComb, free_generator_series
from ohl.permutohedron import set_compositions
from ohl.structures import STRUCTURE_NAMES, family_dims, get_structure
from ohl.suites import build_suite
from ohl.symmetric_combinatorics import Permutation, mr_product, permutations


def test_every_structure_is_registered():
    for name in STRUCTURE_NAMES:
        structure = get_structure(name)
        assert structure.name == name
        assert len(structure.products) > 0
        assert len(structure.coproducts) > 0


def test_unknown_names():
    with pytest.raises(UnknownStructure):
        get_structure("nope")
    with pytest.raises(UnknownStructure):
        get_structure("mr-hat").product("nope")
    with pytest.raises(UnknownStructure):
        get_structure("mr-hat").coproduct("nope")
    with pytest.raises(UnknownStructure):
        family_dims("nope", 3)


def test_word_dimensions_follow_the_alphabet():
    assert family_dims("words", 3) == [1, 2, 4, 8]
    assert family_dims("words", 2, "xyz") == [1, 3, 9]


def test_symmetrized_product_is_the_shifted_shuffle():
    structure = get_structure("mr-hat")
    for sigma in permutations(2):
        for tau in permutations(2):
            a, b = LinComb.of(sigma), LinComb.of(tau)
            assert structure.multiply(a, b) == mr_product(a, b)


def test_symmetrized_product_needs_homogeneous_input():
    twisted = get_structure("mr-hat").twisted
    mixed = LinComb.from_terms([(Permutation((1,)), 1), (Permutation((1, 2)), 1)])
    with pytest.raises(InhomogeneousInput):
        hat_product(twisted, "m", mixed, LinComb.of(Permutation((1,))))


def test_malvenuto_reutenauer_checks():
    hat, bar, hatco, barco = (get_structure(name) for name in ("mr-hat", "mr-bar", "mr-hatco", "mr-barco"))
    assert check_associative(hat, max_degree=4).passed
    assert check_coassociative(hat, "bar", max_degree=4).passed
    assert check_hopf_compat(hat, "m", "bar", max_degree=4).passed
    assert check_hopf_compat(hatco, "m", "hat", max_degree=4).passed
    assert check_uiP(bar, "m", "bar", max_degree=4).passed
    assert check_2as(barco, "m", "bar", "bar", max_degree=3).passed


def test_composition_checks():
    ncqsym = get_structure("ncqsym")
    assert check_associative(ncqsym, "w", max_degree=3).passed
    assert check_hopf_compat(ncqsym, "w", "hat", max_degree=3).passed
    assert check_uiP(ncqsym, "w", "bar", max_degree=4).passed


def test_tree_checks():
    td = get_structure("td")
    assert check_associative(td, "star", max_degree=4).passed
    assert check_hopf_compat(td, "star", "delta", max_degree=4).passed
    assert check_uiP(td, "star", "bar", max_degree=4).passed


def test_tree_dual_is_two_associative():
    dual = get_structure("td-dual")
    result = check_2as(dual, "cut", "backslash", "star", max_degree=3)
    assert result.passed
    assert result.axiom == "td-dual:cut+backslash:2-associative"


def test_backslash_is_dual_to_the_rightmost_cut():
    assert check_duality("td-bar", planar_trees, backslash_product, tree_bar_coproduct, max_degree=4).passed

    def graft_on_first_leaf(t, s):
        if t.is_leaf:
            return LinComb.of(s)
        first = graft_on_first_leaf(t.children[0], s).support()[0]
        return LinComb.of(graft(first, *t.children[1:]))

    result = check_duality("td-bar", planar_trees, graft_on_first_leaf, tree_bar_coproduct, max_degree=3)
    assert not result.passed
    assert result.witness is not None


def test_shuffle_with_deconcatenation_is_not_infinitesimal():
    result = check_uiP(get_structure("words"), "shuffle", "deconcat", max_degree=2)
    assert not result.passed
    assert result.witness is not None


@pytest.mark.parametrize("name, cop, max_degree, expected", [
    ("mr-hat", "bar", 5, (1, 1, 3, 13, 71)),
    ("ctd", "bar", 4, (1, 2, 8, 48)),
    ("td", "bar", 4, (1, 2, 6, 22)),
])
def test_primitives_are_free_generators(name, cop, max_degree, expected):
    structure = get_structure(name)
    prim = primitive_dims(structure, cop, max_degree)
    assert prim == IntSeries.of(expected)
    assert free_generator_series(dims_of(structure, max_degree)) == prim
    assert freeness_report(dims_of(structure, max_degree), prim).passed


def test_freeness_report_witness():
    report = freeness_report(IntSeries.of([2, 1]), IntSeries.of([2, 0]))
    assert not report.passed
    assert "cannot be free" in report.witness.rhs

    report = freeness_report(IntSeries.of([1, 2]), IntSeries.of([1, 2]))
    assert not report.passed
    assert report.witness.rhs == "1,1"


def test_duality_pairs():
    ctd, ps, ncqsym = get_structure("ctd"), get_structure("ps-twisted"), get_structure("ncqsym")
    assert check_duality("hat", set_compositions, ps.product("m"), ctd.coproduct("hat")).passed
    assert check_duality("bar", set_compositions, ncqsym.product("w"), ps.coproduct("bar")).passed


def test_unsymmetrized_quasi_shuffle_is_not_dual_to_full_restriction():
    ncqsym, ps = get_structure("ncqsym"), get_structure("ps-twisted")
    result = check_duality("mixed", set_compositions, ncqsym.product("w"), ps.coproduct("hat"), max_degree=2)
    assert not result.passed
    assert result.witness.rhs == "2"


def failures(suite: str, max_degree: int) -> list[str]:
    return [
        law.axiom
        for law in build_suite(suite)
        if run_law(law, max_degree).failure_index is not None
    ]


def test_dropping_a_shuffle_term_is_detected(monkeypatch):
    original = bialgebra_lab.shuffle_permutations
    monkeypatch.setattr(bialgebra_lab, "shuffle_permutations", lambda *sizes: original(*sizes)[:-1])

    failed = failures("mr", 3)
    assert "mr-hat:matches-shifted-shuffle" in failed
    assert len(failed) > 1


@pytest.mark.parametrize("dropped", ["dot", "prec", "succ"])
def test_dropping_a_generator_branch_is_detected(monkeypatch, dropped):
    original = permutohedron.labelled_compose

    def mutated(generator, first, second, family):
        if generator == dropped:
            return Counter()
        return original(generator, first, second, family)

    monkeypatch.setattr(permutohedron, "labelled_compose", mutated)
    assert "ncqsym:coproduct-closed-form-matches-recursion" in failures("permutohedron", 3)


def test_mutations_fail_with_a_printed_witness(monkeypatch):
    original = bialgebra_lab.shuffle_permutations
    monkeypatch.setattr(bialgebra_lab, "shuffle_permutations", lambda *sizes: original(*sizes)[1:])

    result = check_associative(get_structure("mr-hat"), max_degree=3)
    assert not result.passed
    assert str(result).startswith("FAIL mr-hat/")
    assert "lhs:" in str(result)


def test_concatenation_is_infinitesimal_but_not_hopf():
    bar = get_structure("mr-bar")
    result = check_hopf_compat(bar, "m", "bar", max_degree=2)
    assert not result.passed
    assert result.witness.case == "[1], [1]"
    assert check_uiP(bar, "m", "bar", max_degree=2).passed


def test_counit_and_vacuous_ranges():
    assert check_counit(get_structure("td"), "delta", max_degree=3).passed
    result = check_associative(get_structure("mr-hat"), max_degree=0)
    assert result.passed
    assert result.cases == 0


def test_degree_one_elements_are_primitive():
    assert primitive_dims(get_structure("mr-hat"), "hat", 1) == IntSeries.of([1])
    assert primitive_dims(get_structure("ncqsym"), "hat", 1) == IntSeries.of([1])


def test_bar_terms_are_among_hat_terms():
    twisted = get_structure("ncqsym").twisted
    for n in range(4):
        for composition in set_compositions(n):
            hat = hat_basis_coproduct(twisted, composition)
            for tensor, _ in bar_basis_coproduct(twisted, composition):
                assert hat.coefficient(tensor) > 0


def test_unsymmetrized_quasi_shuffle_of_singletons():
    one = set_compositions(1)[0]
    assert len(get_structure("ncqsym").product("w")(one, one)) == 3


def test_report_names_the_tensor_square_rule():
    assert hopf_law(get_structure("td"), "prec", "delta").axiom == "td:prec:delta:hopf[generator-rule]"
    assert hopf_law(get_structure("mr-hat"), "m", "bar").axiom == "mr-hat:m:bar:hopf[componentwise]"
