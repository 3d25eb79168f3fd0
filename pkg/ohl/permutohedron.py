import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from ohl.errors import DegreeMismatch, NotDegreeZero, OutOfRange
from ohl.exact_linear import LinComb, TensorBasis, linear_extend
from ohl.symmetric_combinatorics import (
    Permutation,
    complement,
    direct_sum,
    restrict,
    shuffle_permutations,
    subsets,
)
from typing import Iterable, Union

logger = logging.getLogger(__name__)

# Labelled compositions: blocks over an arbitrary finite set of integer labels.
Blocks = tuple[frozenset[int], ...]

GENERATORS = ("dot", "prec", "succ")

# Generators summed into the total product of each family: the quasi-shuffle of blocks for "f" and the
# plain shuffle of blocks for "g".
FAMILY_GENERATORS = {
    "f": ("dot", "prec", "succ"),
    "g": ("prec", "succ"),
}

@dataclass(frozen=True, repr=False)
class SetComposition:
    blocks: Blocks

    def __post_init__(self) -> None:
        labels = []
        for block in self.blocks:
            if len(block) == 0:
                raise ValueError("set composition blocks must be nonempty")
            labels.extend(block)

        if sorted(labels) != list(range(1, len(labels) + 1)):
            raise ValueError(f"blocks {self} do not form a set composition of [{len(labels)}]")

    @classmethod
    def of(cls, *blocks: Iterable[int]) -> "SetComposition":
        return cls(tuple(frozenset(block) for block in blocks))

    @property
    def size(self) -> int:
        return sum(len(block) for block in self.blocks)

    @property
    def degree(self) -> int:
        return self.size - len(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __str__(self) -> str:
        return format_blocks(self.blocks)

    def __repr__(self) -> str:
        return str(self)

EMPTY_COMPOSITION = SetComposition(())

def format_blocks(blocks: Blocks) -> str:
    if len(blocks) == 0:
        return "{}"
    return "|".join("{" + ",".join(str(i) for i in sorted(block)) + "}" for block in blocks)

def set_compositions(n: int) -> list[SetComposition]:
    return [SetComposition(blocks) for blocks in _ordered_partitions(tuple(range(1, n + 1)))]

def _ordered_partitions(labels: tuple[int, ...]) -> Iterable[Blocks]:
    if len(labels) == 0:
        yield ()
        return

    for size in range(1, len(labels) + 1):
        for first in itertools.combinations(labels, size):
            remaining = tuple(label for label in labels if label not in first)
            for rest in _ordered_partitions(remaining):
                yield (frozenset(first),) + rest

def standardize_blocks(blocks: Blocks) -> SetComposition:
    labels = sorted(label for block in blocks for label in block)
    ranks = {label: rank for rank, label in enumerate(labels, start=1)}
    return SetComposition(tuple(frozenset(ranks[label] for label in block) for block in blocks))

def shift_blocks(blocks: Blocks, offset: int) -> Blocks:
    return tuple(frozenset(label + offset for label in block) for block in blocks)

def labels_of(blocks: Blocks) -> tuple[int, ...]:
    return tuple(sorted(label for block in blocks for label in block))

def sc_action(composition: SetComposition, sigma: Permutation) -> SetComposition:
    """Right action P * sigma = (sigma^-1(P_1), ..., sigma^-1(P_k))."""
    if composition.size != sigma.size:
        raise DegreeMismatch(f"composition of [{composition.size}] cannot be acted on by S_{sigma.size}")

    inverse = sigma.inverse()
    return SetComposition(tuple(frozenset(inverse(i) for i in block) for block in composition.blocks))

def sc_intersect(composition: SetComposition, subset: Iterable[int]) -> Blocks:
    chosen = set(subset)
    for label in chosen:
        if label < 1 or label > composition.size:
            raise OutOfRange(f"label {label} is outside [1, {composition.size}]")

    return tuple(block & chosen for block in composition.blocks if len(block & chosen) > 0)

def sc_restrict(composition: SetComposition, subset: Iterable[int]) -> SetComposition:
    return standardize_blocks(sc_intersect(composition, subset))

def sc_concat(first: SetComposition, second: SetComposition) -> SetComposition:
    return SetComposition(first.blocks + shift_blocks(second.blocks, first.size))

def _prefixed(block: frozenset[int], terms: Counter) -> Counter:
    return Counter({(block,) + rest: coeff for rest, coeff in terms.items()})

def labelled_total(first: Blocks, second: Blocks, family: str) -> Counter:
    """Total product of two labelled compositions with disjoint labels; the empty pair gives the empty one."""
    if len(first) == 0 and len(second) == 0:
        return Counter({(): 1})

    result = Counter()
    for generator in FAMILY_GENERATORS[family]:
        result.update(labelled_compose(generator, first, second, family))
    return result

def labelled_compose(generator: str, first: Blocks, second: Blocks, family: str) -> Counter:
    if generator == "prec":
        if len(first) == 0:
            return Counter()
        return _prefixed(first[0], labelled_total(first[1:], second, family))

    if generator == "succ":
        if len(second) == 0:
            return Counter()
        return _prefixed(second[0], labelled_total(first, second[1:], family))

    if generator == "dot":
        if len(first) == 0 or len(second) == 0:
            return Counter()
        return _prefixed(first[0] | second[0], labelled_total(first[1:], second[1:], family))

    raise ValueError(f"unknown generator '{generator}'")

def _to_lincomb(terms: Counter) -> LinComb:
    return LinComb.from_terms((standardize_blocks(blocks), coeff) for blocks, coeff in terms.items())

def ctd_compose(generator: str, first: SetComposition, second: SetComposition) -> LinComb:
    """Commutative tridendriform generator applied to P and Q shifted past P."""
    shifted = shift_blocks(second.blocks, first.size)
    return _to_lincomb(labelled_compose(generator, first.blocks, shifted, "f"))

def pi_compose(generator: str, first: SetComposition, second: SetComposition) -> LinComb:
    shifted = shift_blocks(second.blocks, first.size)
    return _to_lincomb(labelled_compose(generator, first.blocks, shifted, "g"))

def total_product(first: SetComposition, second: SetComposition, family: str = "f") -> LinComb:
    shifted = shift_blocks(second.blocks, first.size)
    return _to_lincomb(labelled_total(first.blocks, shifted, family))

def sc_coproduct(composition: SetComposition) -> LinComb:
    """Sum over deconcatenations P = P' P'' of st(P') ⊗ st(P'') tagged by the label sets of the two parts."""
    terms = []
    for cut in range(len(composition) + 1):
        head, tail = composition.blocks[:cut], composition.blocks[cut:]
        terms.append((TensorBasis(standardize_blocks(head), standardize_blocks(tail), (labels_of(head), labels_of(tail))), 1))
    return LinComb.from_terms(terms)

def _labelled_coproduct(blocks: Blocks) -> Counter:
    if len(blocks) == 0:
        return Counter({((), ()): 1})

    if len(blocks) == 1 and len(blocks[0]) == 1:
        return Counter({(blocks, ()): 1, ((), blocks): 1})

    if len(blocks) == 1:
        least = min(blocks[0])
        head = (frozenset([least]),)
        tail = (blocks[0] - {least},)
        return _tensor_square("dot", _labelled_coproduct(head), _labelled_coproduct(tail))

    return _tensor_square("prec", _labelled_coproduct(blocks[:1]), _labelled_coproduct(blocks[1:]))

def _tensor_square(generator: str, left: Counter, right: Counter) -> Counter:
    result = Counter()
    for (a1, a2), ca in left.items():
        for (b1, b2), cb in right.items():
            if len(a1) == 0 and len(b1) == 0:
                for term, coeff in labelled_compose(generator, a2, b2, "f").items():
                    result[((), term)] += ca * cb * coeff
                continue

            heads = labelled_compose(generator, a1, b1, "f")
            if len(heads) == 0:
                continue
            tails = labelled_total(a2, b2, "f")
            for head, ch in heads.items():
                for tail, ct in tails.items():
                    result[(head, tail)] += ca * cb * ch * ct
    return result

def sc_coproduct_recursive(composition: SetComposition) -> LinComb:
    """The same coproduct, computed by writing P through the generators and using the compatibility rule

    x(a1 ⊗ a2, b1 ⊗ b2) = ∅ ⊗ x(a2, b2) when a1 = b1 = ∅, and x(a1, b1) ⊗ w(a2, b2) otherwise."""
    terms = _labelled_coproduct(composition.blocks)
    return LinComb.from_terms(
        (TensorBasis(standardize_blocks(head), standardize_blocks(tail), (labels_of(head), labels_of(tail))), coeff)
        for (head, tail), coeff in terms.items()
    )

def ps_coproduct(composition: SetComposition) -> LinComb:
    n = composition.size
    return LinComb.from_terms(
        (TensorBasis(sc_restrict(composition, subset), sc_restrict(composition, complement(n, subset)), (subset, complement(n, subset))), 1)
        for subset in subsets(n)
    )

def is_reduced(composition: SetComposition) -> bool:
    """False when some proper prefix of blocks covers exactly [i]."""
    if composition.size < 1:
        raise OutOfRange("reducedness is only defined for nonempty compositions")

    covered = 0
    running_max = 0
    for block in composition.blocks[:-1]:
        covered += len(block)
        running_max = max(running_max, max(block))
        if running_max == covered:
            return False
    return True

def perm_to_sc0(sigma: Permutation) -> SetComposition:
    return SetComposition(tuple(frozenset([value]) for value in sigma.word))

def sc0_to_perm(composition: SetComposition) -> Permutation:
    if composition.degree != 0:
        raise NotDegreeZero(f"{composition} has degree {composition.degree}")
    return Permutation(tuple(next(iter(block)) for block in composition.blocks))

def degree0_projection(composition: SetComposition) -> LinComb:
    if composition.degree != 0:
        return LinComb()
    return LinComb.of(composition)

def pi_ctd(value: LinComb) -> LinComb:
    """Projection of a combination of set compositions onto permutations, dropping positive degrees."""
    return linear_extend(degree0_projection, value).map_basis(sc0_to_perm)

ZinbielElement = Union[Permutation, SetComposition]

def as_zinbiel(element: ZinbielElement) -> Permutation:
    if isinstance(element, SetComposition):
        return sc0_to_perm(element)
    return element

def zin_action(sigma: ZinbielElement, tau: Permutation) -> Permutation:
    """Twisted action sigma * tau = tau^-1 sigma, the action of degree-0 compositions read as words."""
    return tau.inverse() * as_zinbiel(sigma)

def zin_product(first: ZinbielElement, second: ZinbielElement) -> LinComb:
    sigma, tau = as_zinbiel(first), as_zinbiel(second)
    base = direct_sum(sigma, tau)
    return LinComb.from_terms((base * xi, 1) for xi in shuffle_permutations(sigma.size, tau.size))

def zin_hat_product(first: ZinbielElement, second: ZinbielElement) -> LinComb:
    sigma, tau = as_zinbiel(first), as_zinbiel(second)
    base = zin_product(sigma, tau)
    return LinComb.from_terms(
        (zin_action(term, xi), coeff)
        for term, coeff in base
        for xi in shuffle_permutations(sigma.size, tau.size)
    )

def zin_coproduct(element: ZinbielElement) -> LinComb:
    """Deconcatenation of the word, tagged by the values each part carries."""
    sigma = as_zinbiel(element)
    n = sigma.size
    return LinComb.from_terms(
        (
            TensorBasis(
                restrict(sigma, range(1, i + 1)),
                restrict(sigma, range(i + 1, n + 1)),
                (tuple(sorted(sigma.word[:i])), tuple(sorted(sigma.word[i:]))),
            ),
            1,
        )
        for i in range(n + 1)
    )

def zin_bar_coproduct(element: ZinbielElement) -> LinComb:
    """Sum of rho ⊗ tau over the factorizations sigma = rho x tau."""
    sigma = as_zinbiel(element)
    n = sigma.size
    terms = []
    for i in range(n + 1):
        if set(sigma.word[:i]) == set(range(1, i + 1)):
            terms.append((TensorBasis(restrict(sigma, range(1, i + 1)), restrict(sigma, range(i + 1, n + 1))), 1))
    return LinComb.from_terms(terms)

def zin_hat_coproduct(element: ZinbielElement) -> LinComb:
    return LinComb.from_terms((tensor.untagged(), coeff) for tensor, coeff in zin_coproduct(element))
