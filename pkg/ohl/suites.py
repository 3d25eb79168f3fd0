import itertools
import logging
from dataclasses import replace
from functools import lru_cache
from ohl import associahedron, permutohedron
from ohl.associahedron import GENERATOR_TREES, Y, binary_trees, planar_trees
from ohl.bialgebra_lab import (
    GradedStructure,
    Law,
    associativity_law,
    basis_pairs,
    coassociativity_law,
    cocommutativity_law,
    counit_law,
    duality_law,
    equality_law,
    freeness_law,
    hopf_law,
    primitive_dims,
    ui_law,
    unit_law,
)
from ohl.errors import UnknownStructure
from ohl.exact_linear import IntSeries, LinComb, TensorBasis, bilinear_extend, linear_extend
from ohl.models import Witness
from ohl.permutohedron import SetComposition, perm_to_sc0, sc0_to_perm, set_compositions
from ohl.structures import get_structure
from ohl.symmetric_combinatorics import (
    Permutation,
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
    shuffle_tensor_action,
    shuffle_to_perm,
    shuffles,
    word_deconcat,
    word_shuffle,
    word_unshuffle,
)
from typing import Any, Callable, Optional

logger = logging.getLogger(__name__)

SCHRODER = (1, 1, 3, 11, 45, 197, 903, 4279, 20793)
CATALAN = (1, 1, 2, 5, 14, 42, 132, 429, 1430)

def _upto(basis: Callable[[int], list], start: int = 1) -> Callable[[int], list]:
    return lambda d: [element for n in range(start, d + 1) for element in basis(n)]

def tridendriform_laws(structure: GradedStructure, cases: Callable[[int], list]) -> list[Law]:
    """The seven tridendriform relations, with x * y the sum of the three products."""
    prec, succ, dot = (structure.product(op) for op in ("prec", "succ", "dot"))
    total = structure.product(structure.total or "w")

    def apply(fn: Callable, a: Any, b: Any) -> LinComb:
        left = a if isinstance(a, LinComb) else LinComb.of(a)
        right = b if isinstance(b, LinComb) else LinComb.of(b)
        return bilinear_extend(fn, left, right)

    relations = {
        "prec-prec": (lambda x, y, z: apply(prec, prec(x, y), z), lambda x, y, z: apply(prec, x, total(y, z))),
        "succ-prec": (lambda x, y, z: apply(prec, succ(x, y), z), lambda x, y, z: apply(succ, x, prec(y, z))),
        "total-succ": (lambda x, y, z: apply(succ, total(x, y), z), lambda x, y, z: apply(succ, x, succ(y, z))),
        "dot-prec": (lambda x, y, z: apply(prec, dot(x, y), z), lambda x, y, z: apply(dot, x, prec(y, z))),
        "prec-dot": (lambda x, y, z: apply(dot, prec(x, y), z), lambda x, y, z: apply(dot, x, succ(y, z))),
        "succ-dot": (lambda x, y, z: apply(dot, succ(x, y), z), lambda x, y, z: apply(succ, x, dot(y, z))),
        "dot-dot": (lambda x, y, z: apply(dot, dot(x, y), z), lambda x, y, z: apply(dot, x, dot(y, z))),
    }
    return [
        equality_law(f"{structure.name}:tridendriform:{name}", cases, lhs, rhs)
        for name, (lhs, rhs) in relations.items()
    ]

def symmetric_suite() -> list[Law]:
    def shuffle_cases(d: int) -> list[tuple[int, int, int]]:
        return [(p, q, r) for p in range(d + 1) for q in range(d + 1 - p) for r in range(d + 1 - p - q)]

    def factorized(p: int, q: int, r: int) -> list[str]:
        identity = Permutation.identity(r)
        products = [
            direct_sum(shuffle_to_perm(xi), identity) * shuffle_to_perm(eta)
            for xi in shuffles(p, q)
            for eta in shuffles(p + q, r)
        ]
        return sorted(str(sigma) for sigma in products)

    def direct(p: int, q: int, r: int) -> list[str]:
        return sorted(str(shuffle_to_perm(shuffle)) for shuffle in shuffles(p, q, r))

    def coset_round_trip(sigma: Permutation) -> Optional[Witness]:
        for p in range(sigma.size + 1):
            rho, tau, xi = coset_factorize(sigma, p)
            rebuilt = direct_sum(rho, tau) * shuffle_to_perm(xi)
            if rebuilt != sigma:
                return Witness(f"{sigma} at p = {p}", str(rebuilt), str(sigma))
        return None

    def operad_cases(d: int) -> list[tuple]:
        cases = []
        for k in range(1, d + 1):
            for sigma in permutations(k):
                for inner in _arity_lists(k, d):
                    for taus in itertools.product(*(permutations(a) for a in inner)):
                        for outer in _arity_lists(sum(inner), d):
                            for rhos in itertools.product(*(permutations(b) for b in outer)):
                                cases.append((sigma, taus, rhos))
        return cases

    def operad_lhs(sigma: Permutation, taus: tuple, rhos: tuple) -> Permutation:
        return as_compose(as_compose(sigma, taus), rhos)

    def operad_rhs(sigma: Permutation, taus: tuple, rhos: tuple) -> Permutation:
        nested = []
        offset = 0
        for tau in taus:
            nested.append(as_compose(tau, rhos[offset:offset + tau.size]))
            offset += tau.size
        return as_compose(sigma, nested)

    def action_cases(d: int) -> list[tuple]:
        twisted = get_structure("mr-hat").twisted
        return [
            (tensor, sigma, tau)
            for n in range(d + 1)
            for x in permutations(n)
            for tensor, _ in twisted.twisted_coproduct(x)
            for sigma in permutations(n)
            for tau in permutations(n)
        ]

    return [
        equality_law("shuffle-factorization", shuffle_cases, factorized, direct),
        Law("coset-factorization", _upto(permutations, 0), coset_round_trip),
        equality_law("as-operad-associative", operad_cases, operad_lhs, operad_rhs, cap=4),
        equality_law(
            "shuffle-action-is-right-action",
            action_cases,
            lambda t, s, u: shuffle_tensor_action(shuffle_tensor_action(t, s), u),
            lambda t, s, u: shuffle_tensor_action(t, s * u),
            cap=3,
        ),
        equality_law(
            "alpha-bijective",
            lambda d: list(range(d + 1)),
            lambda n: len({alpha(sigma) for sigma in permutations(n)}),
            lambda n: len(permutations(n)),
        ),
    ]

def _arity_lists(k: int, bound: int) -> list[tuple[int, ...]]:
    """Tuples of k positive arities summing to at most bound."""
    return [
        arities
        for total in range(k, bound + 1)
        for arities in itertools.product(range(1, total + 1), repeat=k)
        if sum(arities) == total
    ]

def mr_suite() -> list[Law]:
    hat, bar, hatco, barco = (get_structure(name) for name in ("mr-hat", "mr-bar", "mr-hatco", "mr-barco"))

    def connected_counts(d: int) -> IntSeries:
        return IntSeries.of(sum(1 for sigma in permutations(n) if is_connected(sigma)) for n in range(1, d + 1))

    return [
        unit_law(hat),
        associativity_law(hat),
        counit_law(hat, "bar"),
        coassociativity_law(hat, "bar"),
        hopf_law(hat, "m", "bar"),
        equality_law(
            "mr-hat:matches-shifted-shuffle",
            lambda d: basis_pairs(hat, d),
            hat.product("m"),
            lambda x, y: mr_product(LinComb.of(x), LinComb.of(y)),
        ),
        equality_law("mr-hat:bar-coproduct-matches-deconcatenation", _upto(permutations, 0), hat.coproduct("bar"), mr_bar_coproduct),
        equality_law("mr-hat:hat-coproduct-matches-restriction", _upto(permutations, 0), hat.coproduct("hat"), mr_hat_coproduct),
        unit_law(bar),
        associativity_law(bar),
        ui_law(bar, "m", "bar"),
        associativity_law(hatco),
        coassociativity_law(hatco, "hat"),
        counit_law(hatco, "hat"),
        cocommutativity_law(hatco, "hat"),
        hopf_law(hatco, "m", "hat"),
        hopf_law(barco, "m", "bar"),
        ui_law(barco, "bar", "bar"),
        freeness_law(hat, "bar", cap=5),
        equality_law(
            "mr-hat:primitives-count-connected",
            lambda d: [d],
            lambda d: primitive_dims(hat, "bar", d),
            connected_counts,
            cap=5,
        ),
    ]

def _nonempty_compositions(d: int) -> list[tuple]:
    return [
        (x, y, z)
        for p in range(1, d + 1)
        for q in range(1, d - p + 1)
        for r in range(1, d - p - q + 1)
        for x in set_compositions(p)
        for y in set_compositions(q)
        for z in set_compositions(r)
    ]

def permutohedron_suite() -> list[Law]:
    ncqsym, chapoton, ctd, pi, ps = (
        get_structure(name) for name in ("ncqsym", "chapoton-g", "ctd", "pi", "ps-twisted")
    )

    def reduced_counts(d: int) -> IntSeries:
        return IntSeries.of(
            sum(1 for composition in set_compositions(n) if permutohedron.is_reduced(composition))
            for n in range(1, d + 1)
        )

    def pi_degrees(x: SetComposition, y: SetComposition) -> Optional[Witness]:
        for generator, extra in (("dot", 1), ("prec", 0), ("succ", 0)):
            expected = x.degree + y.degree + extra
            for term, _ in permutohedron.pi_compose(generator, x, y):
                if term.degree != expected:
                    return Witness(f"{generator}({x}, {y})", f"{term} of degree {term.degree}", f"degree {expected}")
        return None

    def action_cases(d: int) -> list[tuple]:
        return [
            (composition, sigma, tau)
            for n in range(d + 1)
            for composition in set_compositions(n)
            for sigma in permutations(n)
            for tau in permutations(n)
        ]

    laws = [
        equality_law(
            "ncqsym:coproduct-closed-form-matches-recursion",
            _upto(set_compositions, 0),
            permutohedron.sc_coproduct,
            permutohedron.sc_coproduct_recursive,
        ),
        equality_law(
            "set-composition-action-is-right-action",
            action_cases,
            lambda c, s, t: permutohedron.sc_action(permutohedron.sc_action(c, s), t),
            lambda c, s, t: permutohedron.sc_action(c, s * t),
            cap=3,
        ),
    ]
    laws += tridendriform_laws(ctd, _nonempty_compositions)
    laws += tridendriform_laws(ncqsym, _nonempty_compositions)
    laws += [
        equality_law(
            "ctd:dot-commutative",
            lambda d: basis_pairs(ctd, d),
            ctd.product("dot"),
            lambda x, y: ctd.product("dot")(y, x),
        ),
        equality_law(
            "ctd:prec-mirrors-succ",
            lambda d: basis_pairs(ctd, d),
            ctd.product("prec"),
            lambda x, y: ctd.product("succ")(y, x),
        ),
        unit_law(ncqsym, "w"),
        associativity_law(ncqsym, "w"),
        hopf_law(ncqsym, "w", "hat"),
        ui_law(ncqsym, "w", "bar"),
        ui_law(ncqsym, "dot", "bar"),
        ui_law(ncqsym, "prec", "bar"),
        ui_law(ncqsym, "succ", "bar"),
        unit_law(chapoton, "w"),
        associativity_law(chapoton, "w"),
        hopf_law(chapoton, "w", "hat"),
        coassociativity_law(ctd, "bar"),
        counit_law(ctd, "bar"),
        coassociativity_law(ctd, "hat"),
        associativity_law(ctd, "w"),
        hopf_law(ctd, "w", "bar"),
        ui_law(ctd, "bar-w", "bar"),
        associativity_law(pi, "w"),
        hopf_law(pi, "w", "bar"),
        ui_law(pi, "bar-w", "bar"),
        Law("pi:degree-additive", lambda d: basis_pairs(pi, d), lambda case: pi_degrees(*case)),
        coassociativity_law(ps, "bar"),
        associativity_law(ps, "m"),
        replace(hopf_law(ps, "m", "bar"), cap=3),
        freeness_law(ctd, "bar", cap=4),
        equality_law(
            "ctd:primitives-count-reduced",
            lambda d: [d],
            lambda d: primitive_dims(ctd, "bar", d),
            reduced_counts,
            cap=4,
        ),
    ]
    return laws

def _tensor_to_perms(tensor: TensorBasis) -> TensorBasis:
    return TensorBasis(sc0_to_perm(tensor.left), sc0_to_perm(tensor.right), tensor.tag)

def zinbiel_suite() -> list[Law]:
    zin, ncqsym, ctd = (get_structure(name) for name in ("zin", "ncqsym", "ctd"))

    def perm_pairs(d: int) -> list[tuple]:
        return basis_pairs(zin, d)

    def swap(p: int, q: int) -> Permutation:
        return Permutation(tuple(range(p + 1, p + q + 1)) + tuple(range(1, p + 1)))

    def commuted(x: Permutation, y: Permutation) -> LinComb:
        block_swap = swap(x.size, y.size)
        return zin.product("m")(x, y).map_basis(lambda term: permutohedron.zin_action(term, block_swap))

    return [
        equality_law(
            "zin:projects-quasi-shuffle",
            perm_pairs,
            lambda x, y: permutohedron.pi_ctd(ncqsym.product("w")(perm_to_sc0(x), perm_to_sc0(y))),
            lambda x, y: permutohedron.zin_product(x, y),
        ),
        equality_law(
            "zin:projects-symmetrized-quasi-shuffle",
            perm_pairs,
            lambda x, y: permutohedron.pi_ctd(ctd.product("w")(perm_to_sc0(x), perm_to_sc0(y))),
            lambda x, y: permutohedron.zin_hat_product(x, y),
        ),
        equality_law(
            "zin:projects-coproduct",
            _upto(permutations, 0),
            permutohedron.zin_coproduct,
            lambda x: permutohedron.sc_coproduct(perm_to_sc0(x)).map_basis(_tensor_to_perms),
        ),
        equality_law(
            "zin:twisted-commutative",
            perm_pairs,
            lambda x, y: zin.product("m")(y, x),
            commuted,
        ),
        equality_law(
            "zin:matches-shifted-shuffle",
            perm_pairs,
            permutohedron.zin_product,
            lambda x, y: mr_product(LinComb.of(x), LinComb.of(y)),
        ),
        associativity_law(zin, "m"),
        coassociativity_law(zin, "hat"),
        coassociativity_law(zin, "bar"),
        hopf_law(zin, "m", "hat"),
    ]

def duality_suite() -> list[Law]:
    ctd, ps, words, com = (get_structure(name) for name in ("ctd", "ps-twisted", "words", "com"))
    ncqsym = get_structure("ncqsym")

    return [
        duality_law("concat-vs-deconcat:hat", set_compositions, ps.product("m"), ctd.coproduct("hat"), cap=3),
        duality_law("concat-vs-deconcat:bar", set_compositions, ps.product("bar"), ctd.coproduct("bar"), cap=3),
        duality_law("quasi-shuffle-vs-restrict:hat", set_compositions, ctd.product("w"), ps.coproduct("hat"), cap=3),
        duality_law("quasi-shuffle-vs-restrict:bar", set_compositions, ncqsym.product("w"), ps.coproduct("bar"), cap=3),
        duality_law("words:shuffle-vs-unshuffle", words.basis, words.product("shuffle"), words.coproduct("unshuffle"), cap=4),
        duality_law("words:concat-vs-deconcat", words.basis, words.product("concat"), words.coproduct("deconcat"), cap=4),
        duality_law("com:hat-vs-hat", com.basis, com.product("hat"), com.coproduct("hat")),
        duality_law("com:bar-vs-bar", com.basis, com.product("bar"), com.coproduct("bar")),
    ]

def _nonleaf_trees(d: int) -> list[tuple]:
    return [
        (x, y, z)
        for p in range(1, d + 1)
        for q in range(1, d - p + 1)
        for r in range(1, d - p - q + 1)
        for x in planar_trees(p)
        for y in planar_trees(q)
        for z in planar_trees(r)
    ]

def associahedron_suite() -> list[Law]:
    td, dend = get_structure("td"), get_structure("dend")

    def right_leaf_counts(d: int) -> IntSeries:
        return IntSeries.of(
            sum(1 for tree in planar_trees(n) if tree.children[-1].is_leaf) for n in range(1, d + 1)
        )

    laws = tridendriform_laws(td, _nonleaf_trees)
    laws += [
        unit_law(td, "star"),
        associativity_law(td, "star"),
        counit_law(td, "delta"),
        coassociativity_law(td, "delta"),
        hopf_law(td, "star", "delta"),
        counit_law(td, "bar"),
        coassociativity_law(td, "bar"),
        ui_law(td, "star", "bar"),
        ui_law(td, "prec", "bar"),
        ui_law(td, "succ", "bar"),
        ui_law(td, "dot", "bar"),
        freeness_law(td, "bar", cap=4),
        equality_law(
            "td:primitives-count-right-leaf-trees",
            lambda d: [d],
            lambda d: primitive_dims(td, "bar", d),
            right_leaf_counts,
            cap=4,
        ),
        equality_law(
            "td:counts",
            lambda d: list(range(d + 1)),
            lambda n: (len(planar_trees(n)), len(binary_trees(n))),
            lambda n: (SCHRODER[n], CATALAN[n]),
            cap=8,
        ),
        equality_law(
            "backslash-associative",
            lambda d: [
                (x, y, z)
                for p in range(d + 1)
                for q in range(d + 1 - p)
                for r in range(d + 1 - p - q)
                for x in planar_trees(p)
                for y in planar_trees(q)
                for z in planar_trees(r)
            ],
            lambda x, y, z: associahedron.backslash(associahedron.backslash(x, y), z),
            lambda x, y, z: associahedron.backslash(x, associahedron.backslash(y, z)),
        ),
        unit_law(dend, "star"),
        associativity_law(dend, "star"),
        coassociativity_law(dend, "delta"),
        hopf_law(dend, "star", "delta"),
        duality_law("td:bar-backslash", planar_trees, associahedron.backslash_product, associahedron.tree_bar_coproduct),
    ]
    laws += [replace(law, cap=3) for law in tree_dual_laws(get_structure("td-dual"))]
    return laws

def tree_dual_laws(dual: GradedStructure) -> list[Law]:
    return [
        equality_law(
            "td-dual:backslash-is-transposed-bar",
            lambda d: basis_pairs(dual, d),
            associahedron.backslash_product,
            associahedron.transposed_bar,
        ),
        unit_law(dual, "cut"),
        associativity_law(dual, "cut"),
        unit_law(dual, "backslash"),
        associativity_law(dual, "backslash"),
        counit_law(dual, "star"),
        coassociativity_law(dual, "star"),
        hopf_law(dual, "cut", "star"),
        ui_law(dual, "backslash", "star"),
    ]

def sector_suite() -> list[Law]:
    def generator_cases(d: int) -> list[tuple]:
        return [
            (generator, i, y)
            for generator in GENERATOR_TREES
            for i in (1, 2)
            for n in range(1, d)
            for y in planar_trees(n)
        ]

    def by_insertion(generator: str, i: int, y: Any) -> LinComb:
        return associahedron.sector_insert(GENERATOR_TREES[generator], i, y)

    def by_composition(generator: str, i: int, y: Any) -> LinComb:
        if i == 1:
            return associahedron.td_compose(generator, y, Y)
        return associahedron.td_compose(generator, Y, y)

    def unit_cases(d: int) -> list[tuple]:
        return [(x, i) for n in range(1, d + 1) for x in planar_trees(n) for i in range(1, n + 1)]

    def sequential_cases(d: int) -> list[tuple]:
        return [
            (x, i, y, j, z)
            for n in range(1, d + 1)
            for m in range(1, d + 2 - n)
            for l in range(1, d + 3 - n - m)
            for x in planar_trees(n)
            for y in planar_trees(m)
            for z in planar_trees(l)
            for i in range(1, n + 1)
            for j in range(1, m + 1)
        ]

    def nested(x: Any, i: int, y: Any, j: int, z: Any) -> LinComb:
        inner = associahedron.sector_insert(y, j, z)
        return LinComb.from_terms(
            (term, c * ct) for tree, c in inner for term, ct in associahedron.sector_insert(x, i, tree)
        )

    def sequential(x: Any, i: int, y: Any, j: int, z: Any) -> LinComb:
        outer = associahedron.sector_insert(x, i, y)
        return LinComb.from_terms(
            (term, c * ct) for tree, c in outer for term, ct in associahedron.sector_insert(tree, i + j - 1, z)
        )

    return [
        equality_law("sector:generators-match-composition", generator_cases, by_insertion, by_composition),
        equality_law("sector:corolla-unit", unit_cases, lambda x, i: associahedron.sector_insert(x, i, Y), lambda x, i: LinComb.of(x)),
        equality_law("sector:sequential-associative", sequential_cases, nested, sequential, cap=3),
    ]

def maps_suite() -> list[Law]:
    mr_hat, ncqsym, dend = get_structure("mr-hat"), get_structure("ncqsym"), get_structure("dend")

    def psi_tensor(tensor: TensorBasis, fn: Callable[[Any], LinComb]) -> LinComb:
        return LinComb.from_terms(
            (TensorBasis(x, y), cx * cy) for x, cx in fn(tensor.left) for y, cy in fn(tensor.right)
        )

    def tensor_image(value: LinComb, fn: Callable[[Any], LinComb]) -> LinComb:
        return linear_extend(lambda tensor: psi_tensor(tensor, fn), value)

    def binary_pairs(d: int) -> list[tuple]:
        return basis_pairs(dend, d)

    def tree_pairs(d: int) -> list[tuple]:
        return basis_pairs(get_structure("td"), d)

    return [
        equality_law(
            "phi:worked-example",
            lambda d: [SetComposition.of([3, 4], [1], [5, 6], [2])],
            lambda p: str(associahedron.phi(p)),
            lambda p: "((| (| |)) | (| | |))",
        ),
        equality_law(
            "theta-is-phi-of-reverse",
            _upto(set_compositions, 0),
            associahedron.theta,
            lambda p: associahedron.phi(SetComposition(tuple(reversed(p.blocks)))),
        ),
        equality_law(
            "phi-surjective",
            lambda d: list(range(d + 1)),
            lambda n: sorted({str(associahedron.phi(p)) for p in set_compositions(n)}),
            lambda n: sorted(str(t) for t in planar_trees(n)),
        ),
        equality_law(
            "psi0-fibers-partition",
            lambda d: list(range(d + 1)),
            lambda n: sum(len(associahedron.psi0(t)) for t in binary_trees(n)),
            lambda n: len(permutations(n)),
        ),
        equality_law(
            "projections-commute-with-psi",
            _upto(planar_trees, 0),
            lambda t: permutohedron.pi_ctd(associahedron.psi(t)),
            lambda t: linear_extend(associahedron.psi0, associahedron.dend_projection(t)),
        ),
        equality_law(
            "psi0-multiplicative",
            binary_pairs,
            lambda s, t: linear_extend(associahedron.psi0, associahedron.binary_star(s, t)),
            lambda s, t: mr_product(associahedron.psi0(s), associahedron.psi0(t)),
        ),
        equality_law(
            "psi0-comultiplicative",
            _upto(binary_trees, 0),
            lambda t: tensor_image(associahedron.binary_coproduct(t), associahedron.psi0),
            lambda t: linear_extend(mr_hat.coproduct("bar"), associahedron.psi0(t)),
        ),
        equality_law(
            "psi-multiplicative",
            tree_pairs,
            lambda s, t: linear_extend(associahedron.psi, associahedron.star(s, t)),
            lambda s, t: bilinear_extend(ncqsym.product("w"), associahedron.psi(s), associahedron.psi(t)),
            cap=3,
        ),
        equality_law(
            "psi-comultiplicative",
            _upto(planar_trees, 0),
            lambda t: tensor_image(associahedron.tree_coproduct(t), associahedron.psi),
            lambda t: linear_extend(ncqsym.coproduct("hat"), associahedron.psi(t)),
            cap=3,
        ),
    ]

def words_suite() -> list[Law]:
    words = get_structure("words")
    return [
        associativity_law(words, "shuffle"),
        associativity_law(words, "concat"),
        coassociativity_law(words, "deconcat"),
        coassociativity_law(words, "unshuffle"),
        cocommutativity_law(words, "unshuffle"),
        hopf_law(words, "shuffle", "deconcat"),
        hopf_law(words, "concat", "unshuffle"),
        equality_law("words:symmetrized-concat-is-shuffle", lambda d: basis_pairs(words, d), words.product("shuffle"), word_shuffle),
        equality_law("words:bar-coproduct-is-deconcat", _upto(words.basis, 0), words.coproduct("deconcat"), word_deconcat),
        equality_law("words:hat-coproduct-is-unshuffle", _upto(words.basis, 0), words.coproduct("unshuffle"), word_unshuffle),
    ]

def com_suite() -> list[Law]:
    com = get_structure("com")

    def binomial_cases(d: int) -> list[tuple[int, int]]:
        bound = max(d, 10)
        return [(n, m) for n in range(bound + 1) for m in range(bound + 1 - n)]

    def generic(n: int, m: int) -> tuple:
        value = com.product("hat")(com.basis(n)[0], com.basis(m)[0])
        (monomial, coeff), = value.items()
        return int(coeff), monomial.degree

    return [
        equality_law("com:binomial", binomial_cases, com_hat_product, generic),
        equality_law(
            "com:trivial-action",
            binomial_cases,
            lambda n, m: com_hat_product(n, m, trivial_action=True),
            lambda n, m: (1, n + m),
        ),
        associativity_law(com, "hat"),
        associativity_law(com, "bar"),
        hopf_law(com, "hat", "bar"),
        hopf_law(com, "bar", "hat"),
        coassociativity_law(com, "bar"),
        coassociativity_law(com, "hat"),
    ]

SUITE_BUILDERS: dict[str, Callable[[], list[Law]]] = {
    "symmetric": symmetric_suite,
    "mr": mr_suite,
    "permutohedron": permutohedron_suite,
    "zinbiel": zinbiel_suite,
    "duality": duality_suite,
    "associahedron": associahedron_suite,
    "sector": sector_suite,
    "maps": maps_suite,
    "words": words_suite,
    "com": com_suite,
}

def suite_names(name: str) -> list[str]:
    if name == "all":
        return list(SUITE_BUILDERS)
    if name not in SUITE_BUILDERS:
        raise UnknownStructure(f"unknown suite '{name}', expected 'all' or one of {', '.join(SUITE_BUILDERS)}")
    return [name]

@lru_cache(maxsize=None)
def build_suite(name: str) -> tuple[Law, ...]:
    laws = tuple(SUITE_BUILDERS[name]())
    logger.debug("suite %s has %d laws", name, len(laws))
    return laws
