import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from ohl.errors import BadArity, BadSector, DomainMismatch, NotBinary
from ohl.exact_linear import LinComb, TensorBasis
from ohl.permutohedron import Blocks, SetComposition, perm_to_sc0, set_compositions
from ohl.symmetric_combinatorics import Permutation, alpha, permutations
from typing import Iterable

logger = logging.getLogger(__name__)

@dataclass(frozen=True, repr=False)
class PlanarTree:
    children: tuple["PlanarTree", ...] = ()
    leaves: int = field(init=False, compare=False)
    text: str = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.children) == 1:
            raise BadArity("planar tree vertices need at least two children")

        if self.is_leaf:
            object.__setattr__(self, "leaves", 1)
            object.__setattr__(self, "text", "|")
        else:
            object.__setattr__(self, "leaves", sum(child.leaves for child in self.children))
            object.__setattr__(self, "text", "(" + " ".join(child.text for child in self.children) + ")")

    @property
    def is_leaf(self) -> bool:
        return len(self.children) == 0

    @property
    def degree(self) -> int:
        return self.leaves - 1

    @property
    def is_binary(self) -> bool:
        return self.is_leaf or (len(self.children) == 2 and all(child.is_binary for child in self.children))

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        return self.text

LEAF = PlanarTree()

def graft(*trees: PlanarTree) -> PlanarTree:
    if len(trees) < 2:
        raise BadArity(f"grafting needs at least two trees, got {len(trees)}")
    return PlanarTree(tuple(trees))

Y = graft(LEAF, LEAF)

GENERATOR_TREES = {
    "prec": graft(LEAF, Y),
    "succ": graft(Y, LEAF),
    "dot": graft(LEAF, LEAF, LEAF),
}

@lru_cache(maxsize=None)
def _trees_with_leaves(leaves: int) -> tuple[PlanarTree, ...]:
    if leaves == 1:
        return (LEAF,)

    trees = []
    for arity in range(2, leaves + 1):
        for sizes in _compositions(leaves, arity):
            for children in itertools.product(*(_trees_with_leaves(size) for size in sizes)):
                trees.append(PlanarTree(children))
    return tuple(trees)

def _compositions(total: int, parts: int) -> Iterable[tuple[int, ...]]:
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))

def planar_trees(n: int) -> list[PlanarTree]:
    """All planar trees of degree n, i.e. with n + 1 leaves."""
    return list(_trees_with_leaves(n + 1))

def binary_trees(n: int) -> list[PlanarTree]:
    return [tree for tree in planar_trees(n) if tree.is_binary]

def _star(x: PlanarTree, y: PlanarTree) -> Counter:
    if x.is_leaf:
        return Counter({y: 1})
    if y.is_leaf:
        return Counter({x: 1})

    result = Counter()
    for generator in GENERATOR_TREES:
        result.update(_compose(generator, x, y))
    return result

def _compose(generator: str, x: PlanarTree, y: PlanarTree) -> Counter:
    # At the leaf, x prec | = x and | succ y = y; every other boundary value is zero.
    if x.is_leaf and y.is_leaf:
        return Counter()

    if generator == "prec":
        if x.is_leaf:
            return Counter()
        if y.is_leaf:
            return Counter({x: 1})
        head = x.children[:-1]
        return Counter({PlanarTree(head + (tree,)): coeff for tree, coeff in _star(x.children[-1], y).items()})

    if generator == "succ":
        if y.is_leaf:
            return Counter()
        if x.is_leaf:
            return Counter({y: 1})
        tail = y.children[1:]
        return Counter({PlanarTree((tree,) + tail): coeff for tree, coeff in _star(x, y.children[0]).items()})

    if generator == "dot":
        if x.is_leaf or y.is_leaf:
            return Counter()
        head, tail = x.children[:-1], y.children[1:]
        return Counter(
            {PlanarTree(head + (tree,) + tail): coeff for tree, coeff in _star(x.children[-1], y.children[0]).items()}
        )

    raise ValueError(f"unknown generator '{generator}'")

def _star_many(trees: Iterable[PlanarTree]) -> Counter:
    result = Counter({LEAF: 1})
    for tree in trees:
        product = Counter()
        for left, cl in result.items():
            for term, ct in _star(left, tree).items():
                product[term] += cl * ct
        result = product
    return result

def td_compose(generator: str, x: PlanarTree, y: PlanarTree) -> LinComb:
    return LinComb(_compose(generator, x, y))

def star(x: PlanarTree, y: PlanarTree) -> LinComb:
    """Sum of the three tridendriform products; the leaf is its unit."""
    return LinComb(_star(x, y))

def backslash(t: PlanarTree, s: PlanarTree) -> PlanarTree:
    """Grafts the root of s onto the rightmost leaf of t."""
    if t.is_leaf:
        return s
    return PlanarTree(t.children[:-1] + (backslash(t.children[-1], s),))

def _coproduct(tree: PlanarTree) -> Counter:
    if tree.is_leaf:
        return Counter({(LEAF, LEAF): 1})

    result = Counter({(LEAF, tree): 1})
    child_terms = [list(_coproduct(child).items()) for child in tree.children]
    for combination in itertools.product(*child_terms):
        left = PlanarTree(tuple(pair[0] for pair, _ in combination))
        coeff = math.prod(c for _, c in combination)
        for right, cr in _star_many(pair[1] for pair, _ in combination).items():
            result[(left, right)] += coeff * cr
    return result

def tree_coproduct(tree: PlanarTree) -> LinComb:
    """Cuts the tree along every admissible cut; lower pieces go left, upper pieces multiply on the right."""
    return LinComb.from_terms((TensorBasis(left, right), coeff) for (left, right), coeff in _coproduct(tree).items())

def _bar_coproduct(tree: PlanarTree) -> Counter:
    if tree.is_leaf:
        return Counter({(LEAF, LEAF): 1})

    result = Counter({(LEAF, tree): 1})
    head = tree.children[:-1]
    for (left, right), coeff in _bar_coproduct(tree.children[-1]).items():
        result[(PlanarTree(head + (left,)), right)] += coeff
    return result

def tree_bar_coproduct(tree: PlanarTree) -> LinComb:
    """Cuts along the rightmost path only."""
    return LinComb.from_terms((TensorBasis(left, right), coeff) for (left, right), coeff in _bar_coproduct(tree).items())

def backslash_product(t: PlanarTree, s: PlanarTree) -> LinComb:
    return LinComb.of(backslash(t, s))

@lru_cache(maxsize=None)
def _cut_table(cuts: str, n: int) -> dict[tuple[PlanarTree, PlanarTree], Counter]:
    coproduct = _coproduct if cuts == "delta" else _bar_coproduct
    table = {}
    for tree in planar_trees(n):
        for pair, coeff in coproduct(tree).items():
            table.setdefault(pair, Counter())[tree] += coeff
    return table

@lru_cache(maxsize=None)
def _star_table(n: int) -> dict[PlanarTree, Counter]:
    table = {}
    for p in range(n + 1):
        for x in planar_trees(p):
            for y in planar_trees(n - p):
                for tree, coeff in _star(x, y).items():
                    table.setdefault(tree, Counter())[(x, y)] += coeff
    return table

def transposed_delta(x: PlanarTree, y: PlanarTree) -> LinComb:
    """Product of the graded dual: z appears with the coefficient of x ⊗ y in the admissible-cut coproduct of z."""
    return LinComb(_cut_table("delta", x.degree + y.degree).get((x, y), Counter()))

def transposed_bar(x: PlanarTree, y: PlanarTree) -> LinComb:
    return LinComb(_cut_table("bar", x.degree + y.degree).get((x, y), Counter()))

def transposed_star(tree: PlanarTree) -> LinComb:
    """Coproduct of the graded dual: x ⊗ y appears with the coefficient of the tree in x * y."""
    pairs = _star_table(tree.degree).get(tree, Counter())
    return LinComb.from_terms((TensorBasis(x, y), coeff) for (x, y), coeff in pairs.items())

def _sector_insert(x: PlanarTree, i: int, y: PlanarTree) -> Counter:
    offset = 0
    last = len(x.children) - 1
    for j, child in enumerate(x.children):
        if i <= offset + child.degree:
            head, tail = x.children[:j], x.children[j + 1:]
            return Counter(
                {PlanarTree(head + (tree,) + tail): coeff for tree, coeff in _sector_insert(child, i - offset, y).items()}
            )
        offset += child.degree

        if j < last:
            offset += 1
            if i == offset:
                # The root of y lands on the root of x; its outer edges merge with the boundaries of the sector.
                head, tail = x.children[:j], x.children[j + 2:]
                middle = y.children[1:-1]
                result = Counter()
                for left, cl in _star(child, y.children[0]).items():
                    for right, cr in _star(y.children[-1], x.children[j + 1]).items():
                        result[PlanarTree(head + (left,) + middle + (right,) + tail)] += cl * cr
                return result

    raise BadSector(f"sector {i} is outside [1, {x.degree}]")

def sector_insert(x: PlanarTree, i: int, y: PlanarTree) -> LinComb:
    """Inserts y into the i-th sector of x.

    The vertices on the outer edges of y are distributed along the two boundary paths of the sector in every
    order-preserving way, either between or onto the vertices already there."""
    if x.is_leaf or i < 1 or i > x.degree:
        raise BadSector(f"sector {i} is outside [1, {x.degree}]")
    if y.is_leaf:
        raise DomainMismatch("only trees with at least two leaves can be inserted into a sector")
    return LinComb(_sector_insert(x, i, y))

def _phi(blocks: Blocks) -> PlanarTree:
    if len(blocks) == 0:
        return LEAF

    labels = sorted(label for block in blocks for label in block)
    cuts = sorted(blocks[0])
    intervals = []
    previous = None
    for cut in cuts + [None]:
        interval = {
            label
            for label in labels
            if (previous is None or label > previous) and (cut is None or label < cut)
        }
        intervals.append(interval)
        previous = cut

    rest = blocks[1:]
    children = []
    for interval in intervals:
        children.append(_phi(tuple(block & interval for block in rest if len(block & interval) > 0)))
    return PlanarTree(tuple(children))

def phi(composition: SetComposition) -> PlanarTree:
    """The first block cuts [n] into intervals; each interval carries the image of the rest of P restricted to it."""
    return _phi(composition.blocks)

def theta(composition: SetComposition) -> PlanarTree:
    return _phi(tuple(reversed(composition.blocks)))

def phi0(sigma: Permutation) -> PlanarTree:
    return phi(perm_to_sc0(sigma))

def loday_ronco(sigma: Permutation) -> PlanarTree:
    return phi0(alpha(sigma))

@lru_cache(maxsize=None)
def _phi_fibers(n: int) -> dict[PlanarTree, tuple[SetComposition, ...]]:
    fibers: dict[PlanarTree, list[SetComposition]] = {}
    for composition in set_compositions(n):
        fibers.setdefault(phi(composition), []).append(composition)
    return {tree: tuple(members) for tree, members in fibers.items()}

@lru_cache(maxsize=None)
def _phi0_fibers(n: int) -> dict[PlanarTree, tuple[Permutation, ...]]:
    fibers: dict[PlanarTree, list[Permutation]] = {}
    for sigma in permutations(n):
        fibers.setdefault(phi0(sigma), []).append(sigma)
    return {tree: tuple(members) for tree, members in fibers.items()}

def psi(tree: PlanarTree) -> LinComb:
    return LinComb.from_terms((composition, 1) for composition in _phi_fibers(tree.degree).get(tree, ()))

def psi0(tree: PlanarTree) -> LinComb:
    if not tree.is_binary:
        raise NotBinary(f"{tree} is not a binary tree")
    return LinComb.from_terms((sigma, 1) for sigma in _phi0_fibers(tree.degree).get(tree, ()))

def dend_projection(tree: PlanarTree) -> LinComb:
    return LinComb.of(tree) if tree.is_binary else LinComb()

def pi_td(value: LinComb) -> LinComb:
    return value.filter(lambda tree: tree.is_binary)

def binary_compose(generator: str, x: PlanarTree, y: PlanarTree) -> LinComb:
    if not x.is_binary or not y.is_binary:
        raise NotBinary(f"{x} and {y} must both be binary trees")
    return pi_td(td_compose(generator, x, y))

def binary_star(x: PlanarTree, y: PlanarTree) -> LinComb:
    if not x.is_binary or not y.is_binary:
        raise NotBinary(f"{x} and {y} must both be binary trees")
    return pi_td(star(x, y))

def binary_coproduct(tree: PlanarTree) -> LinComb:
    if not tree.is_binary:
        raise NotBinary(f"{tree} is not a binary tree")
    return tree_coproduct(tree).filter(lambda tensor: tensor.left.is_binary and tensor.right.is_binary)
