import logging
from functools import lru_cache, partial
from ohl import associahedron, permutohedron
from ohl.associahedron import LEAF, binary_trees, planar_trees
from ohl.bialgebra_lab import (
    GradedStructure,
    TwistedStructure,
    bar_basis_coproduct,
    bar_basis_product,
    hat_basis_coproduct,
    hat_basis_product,
)
from ohl.errors import UnknownStructure
from ohl.exact_linear import LinComb, TensorBasis
from ohl.permutohedron import EMPTY_COMPOSITION, SetComposition, set_compositions
from ohl.symmetric_combinatorics import (
    EMPTY_PERMUTATION,
    EMPTY_WORD,
    ComMonomial,
    Permutation,
    Word,
    complement,
    direct_sum,
    permutations,
    restrict,
    subsets,
    word_action,
    word_concat,
    word_restrict,
    words,
)
from typing import Any, Sequence

logger = logging.getLogger(__name__)

DEFAULT_ALPHABET = ("a", "b")

class PermutationTwisted(TwistedStructure):
    """The associative operad as a twisted bialgebra: concatenation x and restriction to complementary subsets."""

    name = "as"
    products = ("m",)

    def basis(self, n: int) -> Sequence[Permutation]:
        return permutations(n)

    def degree(self, element: Permutation) -> int:
        return element.size

    def act(self, element: Permutation, sigma: Permutation) -> Permutation:
        return element * sigma

    def unit(self) -> Permutation:
        return EMPTY_PERMUTATION

    def twisted_product(self, op: str, x: Permutation, y: Permutation) -> LinComb:
        return LinComb.of(direct_sum(x, y))

    def twisted_coproduct(self, x: Permutation) -> LinComb:
        n = x.size
        return LinComb.from_terms(
            (TensorBasis(restrict(x, subset), restrict(x, complement(n, subset)), (subset, complement(n, subset))), 1)
            for subset in subsets(n)
        )

class ComTwisted(TwistedStructure):
    name = "com"
    products = ("m",)

    def basis(self, n: int) -> Sequence[ComMonomial]:
        return [ComMonomial(n)]

    def degree(self, element: ComMonomial) -> int:
        return element.degree

    def act(self, element: ComMonomial, sigma: Permutation) -> ComMonomial:
        return element

    def unit(self) -> ComMonomial:
        return ComMonomial(0)

    def twisted_product(self, op: str, x: ComMonomial, y: ComMonomial) -> LinComb:
        return LinComb.of(ComMonomial(x.degree + y.degree))

    def twisted_coproduct(self, x: ComMonomial) -> LinComb:
        n = x.degree
        return LinComb.from_terms(
            (TensorBasis(ComMonomial(len(subset)), ComMonomial(n - len(subset)), (subset, complement(n, subset))), 1)
            for subset in subsets(n)
        )

class WordTwisted(TwistedStructure):
    name = "words"
    products = ("concat",)

    def __init__(self, alphabet: Sequence[str] = DEFAULT_ALPHABET) -> None:
        self.alphabet = tuple(sorted(alphabet))

    def basis(self, n: int) -> Sequence[Word]:
        return words(n, self.alphabet)

    def degree(self, element: Word) -> int:
        return len(element)

    def act(self, element: Word, sigma: Permutation) -> Word:
        return word_action(element, sigma)

    def unit(self) -> Word:
        return EMPTY_WORD

    def twisted_product(self, op: str, x: Word, y: Word) -> LinComb:
        return word_concat(x, y)

    def twisted_coproduct(self, x: Word) -> LinComb:
        n = len(x)
        return LinComb.from_terms(
            (TensorBasis(word_restrict(x, subset), word_restrict(x, complement(n, subset)), (subset, complement(n, subset))), 1)
            for subset in subsets(n)
        )

class SetCompositionTwisted(TwistedStructure):
    """Set compositions with the tridendriform generators of one family and either deconcatenation
    or restriction to complementary subsets as coproduct."""

    products = ("w", "dot", "prec", "succ", "concat")

    def __init__(self, family: str = "f", coproduct: str = "deconcat") -> None:
        if family not in permutohedron.FAMILY_GENERATORS:
            raise UnknownStructure(f"unknown generator family '{family}'")
        if coproduct not in ("deconcat", "restrict"):
            raise UnknownStructure(f"unknown set composition coproduct '{coproduct}'")

        self.family = family
        self.coproduct_kind = coproduct
        self.name = f"comp-{family}-{coproduct}"

    def basis(self, n: int) -> Sequence[SetComposition]:
        return set_compositions(n)

    def degree(self, element: SetComposition) -> int:
        return element.size

    def act(self, element: SetComposition, sigma: Permutation) -> SetComposition:
        return permutohedron.sc_action(element, sigma)

    def unit(self) -> SetComposition:
        return EMPTY_COMPOSITION

    def twisted_product(self, op: str, x: SetComposition, y: SetComposition) -> LinComb:
        if op == "concat":
            return LinComb.of(permutohedron.sc_concat(x, y))
        if op == "w":
            return permutohedron.total_product(x, y, self.family)
        if self.family == "f":
            return permutohedron.ctd_compose(op, x, y)
        return permutohedron.pi_compose(op, x, y)

    def twisted_coproduct(self, x: SetComposition) -> LinComb:
        if self.coproduct_kind == "deconcat":
            return permutohedron.sc_coproduct(x)
        return permutohedron.ps_coproduct(x)

class ZinbielTwisted(TwistedStructure):
    """Degree-0 set compositions read as words, acted on by relabelling their values."""

    name = "zinbiel"
    products = ("m",)

    def basis(self, n: int) -> Sequence[Permutation]:
        return permutations(n)

    def degree(self, element: Permutation) -> int:
        return element.size

    def act(self, element: Permutation, sigma: Permutation) -> Permutation:
        return permutohedron.zin_action(element, sigma)

    def unit(self) -> Permutation:
        return EMPTY_PERMUTATION

    def twisted_product(self, op: str, x: Permutation, y: Permutation) -> LinComb:
        return permutohedron.zin_product(x, y)

    def twisted_coproduct(self, x: Permutation) -> LinComb:
        return permutohedron.zin_coproduct(x)

def _hat(twisted: TwistedStructure, op: str = "m") -> Any:
    return partial(hat_basis_product, twisted, op)

def _bar(twisted: TwistedStructure, op: str = "m") -> Any:
    return partial(bar_basis_product, twisted, op)

def _from_twisted(
    name: str,
    family: str,
    twisted: TwistedStructure,
    products: dict[str, Any],
    coproducts: dict[str, str],
    description: str,
    generators: tuple[str, ...] = (),
    total: Any = None,
) -> GradedStructure:
    coproduct_fns = {
        key: partial(hat_basis_coproduct if mode == "hat" else bar_basis_coproduct, twisted)
        for key, mode in coproducts.items()
    }
    return GradedStructure(
        name,
        family,
        twisted.basis,
        twisted.unit(),
        products,
        coproduct_fns,
        generators,
        total,
        twisted,
        description,
    )

def _permutation_structures() -> dict[str, GradedStructure]:
    twisted = PermutationTwisted()
    return {
        "mr-hat": _from_twisted(
            "mr-hat", "perms", twisted,
            {"m": _hat(twisted)},
            {"bar": "bar", "hat": "hat"},
            "shifted shuffle product with deconcatenation of standardized prefixes",
        ),
        "mr-bar": _from_twisted(
            "mr-bar", "perms", twisted,
            {"m": _bar(twisted)},
            {"bar": "bar"},
            "concatenation with standardized deconcatenation, unital infinitesimal",
        ),
        "mr-hatco": _from_twisted(
            "mr-hatco", "perms", twisted,
            {"m": _bar(twisted)},
            {"hat": "hat"},
            "concatenation with restriction to every subset, cocommutative",
        ),
        "mr-barco": _from_twisted(
            "mr-barco", "perms", twisted,
            {"m": _hat(twisted), "bar": _bar(twisted)},
            {"bar": "bar"},
            "shifted shuffle and concatenation over one coproduct, 2-associative",
        ),
    }

def _composition_structures() -> dict[str, GradedStructure]:
    structures = {}
    for name, family, description in (
        ("ncqsym", "f", "quasi-shuffle of blocks with block deconcatenation"),
        ("chapoton-g", "g", "shuffle of blocks with block deconcatenation"),
    ):
        twisted = SetCompositionTwisted(family)
        structures[name] = _from_twisted(
            name, "setcomps", twisted,
            {op: _bar(twisted, op) for op in ("w", "dot", "prec", "succ")},
            {"hat": "hat", "bar": "bar"},
            description,
            ("dot", "prec", "succ"),
            "w",
        )

    for name, family, description in (
        ("ctd", "f", "symmetrized commutative tridendriform products over standardized prefixes"),
        ("pi", "g", "symmetrized products of the shuffle family over standardized prefixes"),
    ):
        twisted = SetCompositionTwisted(family)
        products = {op: _hat(twisted, op) for op in ("w", "dot", "prec", "succ")}
        products["bar-w"] = _bar(twisted, "w")
        structures[name] = _from_twisted(
            name, "setcomps", twisted,
            products,
            {"bar": "bar", "hat": "hat"},
            description,
        )

    twisted = SetCompositionTwisted("f", "restrict")
    structures["ps-twisted"] = _from_twisted(
        "ps-twisted", "setcomps", twisted,
        {"m": _hat(twisted, "concat"), "bar": _bar(twisted, "concat")},
        {"bar": "bar", "hat": "hat"},
        "symmetrized concatenation with restriction to the standardized prefix labels",
    )
    return structures

def _zinbiel_structure() -> GradedStructure:
    twisted = ZinbielTwisted()
    return _from_twisted(
        "zin", "perms", twisted,
        {"m": _bar(twisted), "hat": _hat(twisted)},
        {"hat": "hat", "bar": "bar"},
        "degree-0 compositions: shifted shuffle of words with deconcatenation",
    )

def _tree_structures() -> dict[str, GradedStructure]:
    td = GradedStructure(
        "td",
        "trees",
        planar_trees,
        LEAF,
        {
            "star": associahedron.star,
            "prec": partial(associahedron.td_compose, "prec"),
            "succ": partial(associahedron.td_compose, "succ"),
            "dot": partial(associahedron.td_compose, "dot"),
        },
        {"delta": associahedron.tree_coproduct, "bar": associahedron.tree_bar_coproduct},
        ("prec", "succ", "dot"),
        "star",
        description="planar trees with the tridendriform products and admissible cuts",
    )
    dend = GradedStructure(
        "dend",
        "trees",
        binary_trees,
        LEAF,
        {
            "star": associahedron.binary_star,
            "prec": partial(associahedron.binary_compose, "prec"),
            "succ": partial(associahedron.binary_compose, "succ"),
        },
        {"delta": associahedron.binary_coproduct},
        ("prec", "succ"),
        "star",
        description="binary trees, the dendriform projection of the tree structure",
    )
    dual = GradedStructure(
        "td-dual",
        "trees",
        planar_trees,
        LEAF,
        {"cut": associahedron.transposed_delta, "backslash": associahedron.backslash_product},
        {"star": associahedron.transposed_star},
        description="graded dual of the tree structure: transposed cuts and grafting on the rightmost leaf against the transposed star",
    )
    return {"td": td, "dend": dend, "td-dual": dual}

def _word_structure(alphabet: Sequence[str]) -> GradedStructure:
    twisted = WordTwisted(alphabet)
    return _from_twisted(
        "words", "words", twisted,
        {"shuffle": _hat(twisted, "concat"), "concat": _bar(twisted, "concat")},
        {"deconcat": "bar", "unshuffle": "hat"},
        "tensor algebra: shuffle or concatenation against deconcatenation or unshuffle",
    )

def _com_structure() -> GradedStructure:
    twisted = ComTwisted()
    return _from_twisted(
        "com", "com", twisted,
        {"hat": _hat(twisted), "bar": _bar(twisted)},
        {"bar": "bar", "hat": "hat"},
        "one monomial per degree: binomial or trivial product against the two coproducts",
    )

@lru_cache(maxsize=None)
def _catalog(alphabet: tuple[str, ...]) -> dict[str, GradedStructure]:
    catalog = {}
    catalog.update(_permutation_structures())
    catalog.update(_composition_structures())
    catalog["zin"] = _zinbiel_structure()
    catalog.update(_tree_structures())
    catalog["words"] = _word_structure(alphabet)
    catalog["com"] = _com_structure()
    logger.debug("built %d structures", len(catalog))
    return catalog

STRUCTURE_NAMES = (
    "mr-hat", "mr-bar", "mr-hatco", "mr-barco",
    "ncqsym", "ps-twisted", "chapoton-g", "ctd", "pi", "zin",
    "td", "dend", "td-dual", "words", "com",
)

def get_structure(name: str, alphabet: Sequence[str] = DEFAULT_ALPHABET) -> GradedStructure:
    catalog = _catalog(tuple(sorted(alphabet)))
    if name not in catalog:
        raise UnknownStructure(f"unknown structure '{name}', expected one of {', '.join(STRUCTURE_NAMES)}")
    return catalog[name]

FAMILY_BASES = {
    "perms": permutations,
    "setcomps": set_compositions,
    "trees": planar_trees,
    "binary-trees": binary_trees,
    "words": words,
}

def family_dims(family: str, max_degree: int, alphabet: Sequence[str] = DEFAULT_ALPHABET) -> list[int]:
    if family not in FAMILY_BASES:
        raise UnknownStructure(f"unknown family '{family}', expected one of {', '.join(FAMILY_BASES)}")

    basis = FAMILY_BASES[family]
    if family == "words":
        basis = partial(words, alphabet=tuple(sorted(set(alphabet))))
    return [len(basis(n)) for n in range(max_degree + 1)]
