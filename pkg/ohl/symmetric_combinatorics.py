import itertools
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from ohl.errors import ArityMismatch, DegreeMismatch, DomainMismatch, DuplicateEntry, OutOfRange
from ohl.exact_linear import LinComb, TensorBasis, bilinear_extend
from typing import Any, Callable, Iterable, Sequence

logger = logging.getLogger(__name__)

@dataclass(frozen=True, repr=False)
class Permutation:
    word: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(set(self.word)) != len(self.word):
            raise DuplicateEntry(f"permutation word {self.word} repeats an entry")
        for value in self.word:
            if value < 1 or value > len(self.word):
                raise OutOfRange(f"permutation entry {value} is outside [1, {len(self.word)}]")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def size(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """(self * other)(i) = self(other(i))."""
        if self.size != other.size:
            raise DegreeMismatch(f"cannot compose permutations of sizes {self.size} and {other.size}")
        return Permutation(tuple(self.word[j - 1] for j in other.word))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return self.compose(other)

    def inverse(self) -> "Permutation":
        word = [0] * self.size
        for i, value in enumerate(self.word, start=1):
            word[value - 1] = i
        return Permutation(tuple(word))

    def __str__(self) -> str:
        return "[" + ",".join(str(i) for i in self.word) + "]"

    def __repr__(self) -> str:
        return str(self)

EMPTY_PERMUTATION = Permutation(())

@dataclass(frozen=True, repr=False)
class Shuffle:
    """An ordered decomposition (A_1, ..., A_r) of [n]; blocks may be empty."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        labels = []
        for block in self.blocks:
            if list(block) != sorted(set(block)):
                raise ValueError(f"shuffle block {block} is not strictly increasing")
            labels.extend(block)

        if sorted(labels) != list(range(1, len(labels) + 1)):
            raise ValueError(f"shuffle blocks {self.blocks} do not decompose [{len(labels)}]")

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(block) for block in self.blocks)

    def __str__(self) -> str:
        return "(" + ",".join("{" + ",".join(str(i) for i in block) + "}" for block in self.blocks) + ")"

    def __repr__(self) -> str:
        return str(self)

@dataclass(frozen=True, repr=False)
class Word:
    letters: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "".join(self.letters) if self.letters else "ε"

    def __repr__(self) -> str:
        return str(self)

EMPTY_WORD = Word(())

@dataclass(frozen=True, repr=False)
class ComMonomial:
    degree: int

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise OutOfRange(f"monomial degree must be nonnegative, got {self.degree}")

    def __str__(self) -> str:
        return f"X^{self.degree}"

    def __repr__(self) -> str:
        return str(self)

def permutations(n: int) -> list[Permutation]:
    return [Permutation(word) for word in itertools.permutations(range(1, n + 1))]

def words(n: int, alphabet: Sequence[str]) -> list[Word]:
    return [Word(letters) for letters in itertools.product(sorted(alphabet), repeat=n)]

def subsets(n: int) -> list[tuple[int, ...]]:
    return [combination for size in range(n + 1) for combination in itertools.combinations(range(1, n + 1), size)]

def complement(n: int, subset: Iterable[int]) -> tuple[int, ...]:
    chosen = set(subset)
    return tuple(i for i in range(1, n + 1) if i not in chosen)

def standardize(values: Sequence[int]) -> Permutation:
    if len(set(values)) != len(values):
        raise DuplicateEntry(f"cannot standardize {tuple(values)}, it repeats an entry")
    ranks = {value: rank for rank, value in enumerate(sorted(values), start=1)}
    return Permutation(tuple(ranks[value] for value in values))

def restrict(sigma: Permutation, subset: Iterable[int]) -> Permutation:
    positions = sorted(subset)
    for position in positions:
        if position < 1 or position > sigma.size:
            raise OutOfRange(f"position {position} is outside [1, {sigma.size}]")
    return standardize([sigma(position) for position in positions])

def direct_sum(sigma: Permutation, tau: Permutation) -> Permutation:
    return Permutation(sigma.word + tuple(value + sigma.size for value in tau.word))

def shuffles(*sizes: int) -> list[Shuffle]:
    for size in sizes:
        if size < 0:
            raise OutOfRange(f"shuffle block sizes must be nonnegative, got {size}")
    return [Shuffle(blocks) for blocks in _shuffle_blocks(tuple(range(1, sum(sizes) + 1)), sizes)]

def _shuffle_blocks(labels: tuple[int, ...], sizes: Sequence[int]) -> Iterable[tuple[tuple[int, ...], ...]]:
    if len(sizes) == 0:
        yield ()
        return

    for first in itertools.combinations(labels, sizes[0]):
        remaining = tuple(label for label in labels if label not in first)
        for rest in _shuffle_blocks(remaining, sizes[1:]):
            yield (first,) + rest

def shuffle_to_perm(shuffle: Shuffle) -> Permutation:
    """The permutation whose inverse lists the blocks of the shuffle one after another.

    It sends A_1 increasingly onto [|A_1|], A_2 onto the next |A_2| values and so on."""
    return Permutation(tuple(label for block in shuffle.blocks for label in block)).inverse()

@lru_cache(maxsize=None)
def shuffle_permutations(*sizes: int) -> tuple[Permutation, ...]:
    return tuple(shuffle_to_perm(shuffle) for shuffle in shuffles(*sizes))

def coset_factorize(sigma: Permutation, p: int) -> tuple[Permutation, Permutation, Shuffle]:
    """Writes sigma as (rho x tau) * xi for the (p, n - p)-shuffle xi."""
    if p < 0 or p > sigma.size:
        raise OutOfRange(f"split point {p} is outside [0, {sigma.size}]")

    low = tuple(i for i in range(1, sigma.size + 1) if sigma(i) <= p)
    high = tuple(i for i in range(1, sigma.size + 1) if sigma(i) > p)
    return restrict(sigma, low), restrict(sigma, high), Shuffle((low, high))

def as_compose(sigma: Permutation, taus: Sequence[Permutation]) -> Permutation:
    """Substitutes tau_i into the i-th slot of sigma, keeping the blocks in the order sigma gives them."""
    if len(taus) != sigma.size:
        raise ArityMismatch(f"permutation of size {sigma.size} needs {sigma.size} arguments, got {len(taus)}")

    word = []
    for i, tau in enumerate(taus, start=1):
        shift = sum(taus[j - 1].size for j in range(1, sigma.size + 1) if sigma(j) < sigma(i))
        word.extend(value + shift for value in tau.word)
    return Permutation(tuple(word))

def com_hat_product(n: int, m: int, trivial_action: bool = False) -> tuple[int, int]:
    """Coefficient and degree of X^n * X^m in the symmetrized commutative structure."""
    if n < 0 or m < 0:
        raise OutOfRange(f"degrees must be nonnegative, got {n} and {m}")
    if trivial_action:
        return 1, n + m
    return math.comb(n + m, n), n + m

def _mr_basis_product(sigma: Permutation, tau: Permutation) -> LinComb:
    base = direct_sum(sigma, tau)
    return LinComb.from_terms((base * xi, 1) for xi in shuffle_permutations(sigma.size, tau.size))

def mr_product(a: LinComb, b: LinComb) -> LinComb:
    """Shifted shuffle product of permutations, summing (sigma x tau) * xi over all shuffles xi."""
    return bilinear_extend(_mr_basis_product, a, b)

def _concat_basis_product(sigma: Permutation, tau: Permutation) -> LinComb:
    return LinComb.of(direct_sum(sigma, tau))

def concat_product(a: LinComb, b: LinComb) -> LinComb:
    return bilinear_extend(_concat_basis_product, a, b)

def mr_bar_coproduct(sigma: Permutation) -> LinComb:
    n = sigma.size
    return LinComb.from_terms(
        (TensorBasis(restrict(sigma, range(1, i + 1)), restrict(sigma, range(i + 1, n + 1))), 1)
        for i in range(n + 1)
    )

def mr_hat_coproduct(sigma: Permutation) -> LinComb:
    n = sigma.size
    return LinComb.from_terms(
        (TensorBasis(restrict(sigma, subset), restrict(sigma, complement(n, subset))), 1) for subset in subsets(n)
    )

def is_connected(sigma: Permutation) -> bool:
    """False when some proper prefix of sigma is itself a permutation of [i]."""
    if sigma.size < 1:
        raise OutOfRange("connectedness is only defined for nonempty permutations")

    running_max = 0
    for i in range(1, sigma.size):
        running_max = max(running_max, sigma(i))
        if running_max == i:
            return False
    return True

def alpha(sigma: Permutation) -> Permutation:
    return Permutation(tuple(reversed(sigma.word))).inverse()

def permutation_action(sigma: Permutation, tau: Permutation) -> Permutation:
    return sigma * tau

def shuffle_tensor_action(
    tensor: TensorBasis,
    sigma: Permutation,
    act: Callable[[Any, Permutation], Any] = permutation_action,
) -> TensorBasis:
    """Right action of S_n on a tagged tensor m ⊗ n ⊗ (I, J)."""
    if tensor.tag is None:
        raise DomainMismatch("the shuffle action needs a tagged tensor")

    first, second = tensor.tag
    if sigma.size != len(first) + len(second):
        raise DegreeMismatch(f"tensor of degree {len(first) + len(second)} cannot be acted on by S_{sigma.size}")

    inverse = sigma.inverse()
    new_first = tuple(sorted(inverse(i) for i in first))
    new_second = tuple(sorted(inverse(i) for i in second))
    return TensorBasis(
        act(tensor.left, restrict(sigma, new_first)),
        act(tensor.right, restrict(sigma, new_second)),
        (new_first, new_second),
    )

def word_action(word: Word, sigma: Permutation) -> Word:
    if len(word) != sigma.size:
        raise DegreeMismatch(f"word of length {len(word)} cannot be acted on by S_{sigma.size}")
    return Word(tuple(word.letters[sigma(i) - 1] for i in range(1, sigma.size + 1)))

def word_restrict(word: Word, positions: Iterable[int]) -> Word:
    return Word(tuple(word.letters[i - 1] for i in sorted(positions)))

def word_concat(u: Word, v: Word) -> LinComb:
    return LinComb.of(Word(u.letters + v.letters))

def word_shuffle(u: Word, v: Word) -> LinComb:
    joined = Word(u.letters + v.letters)
    return LinComb.from_terms((word_action(joined, xi), 1) for xi in shuffle_permutations(len(u), len(v)))

def word_deconcat(word: Word) -> LinComb:
    return LinComb.from_terms(
        (TensorBasis(Word(word.letters[:i]), Word(word.letters[i:])), 1) for i in range(len(word) + 1)
    )

def word_unshuffle(word: Word) -> LinComb:
    n = len(word)
    return LinComb.from_terms(
        (TensorBasis(word_restrict(word, subset), word_restrict(word, complement(n, subset))), 1)
        for subset in subsets(n)
    )
