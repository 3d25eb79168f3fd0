import logging
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from ohl.errors import NegativeGenerator
from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping, Optional, Sequence, Union

logger = logging.getLogger(__name__)

Rational = Fraction
Scalar = Union[int, Fraction]
Tag = tuple[tuple[int, ...], tuple[int, ...]]

def format_subset(subset: Iterable[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(subset)) + "}"

class LinComb:
    """Finite formal sum of hashable basis objects with rational coefficients.

    Zero coefficients are never stored and terms are kept sorted by the text of their basis object,
    so two equal combinations always print identically."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Any, Scalar]] = None) -> None:
        cleaned = {}
        if terms is not None:
            for basis, coeff in terms.items():
                value = Fraction(coeff)
                if value != 0:
                    cleaned[basis] = value

        self._terms = dict(sorted(cleaned.items(), key=lambda item: str(item[0])))

    @classmethod
    def of(cls, basis: Hashable, coeff: Scalar = 1) -> "LinComb":
        return cls({basis: coeff})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Hashable, Scalar]]) -> "LinComb":
        totals = defaultdict(Fraction)
        for basis, coeff in terms:
            totals[basis] += coeff
        return cls(totals)

    @classmethod
    def sum(cls, combinations: Iterable["LinComb"]) -> "LinComb":
        return cls.from_terms(term for combination in combinations for term in combination)

    def coefficient(self, basis: Hashable) -> Fraction:
        return self._terms.get(basis, Fraction(0))

    def support(self) -> list[Any]:
        return list(self._terms.keys())

    def items(self) -> list[tuple[Any, Fraction]]:
        return list(self._terms.items())

    def map_basis(self, fn: Callable[[Any], Any]) -> "LinComb":
        return LinComb.from_terms((fn(basis), coeff) for basis, coeff in self)

    def filter(self, predicate: Callable[[Any], bool]) -> "LinComb":
        return LinComb({basis: coeff for basis, coeff in self if predicate(basis)})

    def __iter__(self) -> Iterator[tuple[Any, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return len(self._terms) > 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "LinComb") -> "LinComb":
        return LinComb.from_terms([*self, *other])

    def __neg__(self) -> "LinComb":
        return LinComb({basis: -coeff for basis, coeff in self})

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def __mul__(self, scalar: Scalar) -> "LinComb":
        return LinComb({basis: coeff * scalar for basis, coeff in self})

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{coeff}*{basis}" for basis, coeff in self._terms.items())

    def __repr__(self) -> str:
        return f"LinComb({self})"

ZERO = LinComb()

@dataclass(frozen=True, repr=False)
class TensorBasis:
    left: Any
    right: Any
    tag: Optional[Tag] = None

    def __post_init__(self) -> None:
        if self.tag is None:
            return

        first, second = self.tag
        labels = sorted(first + second)
        if list(first) != sorted(first) or list(second) != sorted(second):
            raise ValueError(f"tag blocks must be sorted: {self.tag}")
        if labels != list(range(1, len(labels) + 1)):
            raise ValueError(f"tag is not a decomposition of [{len(labels)}]: {self.tag}")

    def untagged(self) -> "TensorBasis":
        return TensorBasis(self.left, self.right)

    def swapped(self) -> "TensorBasis":
        tag = None if self.tag is None else (self.tag[1], self.tag[0])
        return TensorBasis(self.right, self.left, tag)

    def __str__(self) -> str:
        text = f"{self.left} ⊗ {self.right}"
        if self.tag is not None:
            text += f" ⊗ ({format_subset(self.tag[0])},{format_subset(self.tag[1])})"
        return text

    def __repr__(self) -> str:
        return str(self)

def lc_add(a: LinComb, b: LinComb) -> LinComb:
    return a + b

def linear_extend(fn: Callable[[Any], LinComb], a: LinComb) -> LinComb:
    return LinComb.from_terms(
        (image, coeff * image_coeff) for basis, coeff in a for image, image_coeff in fn(basis)
    )

def bilinear_extend(fn: Callable[[Any, Any], LinComb], a: LinComb, b: LinComb) -> LinComb:
    return LinComb.from_terms(
        (image, coeff_a * coeff_b * image_coeff)
        for basis_a, coeff_a in a
        for basis_b, coeff_b in b
        for image, image_coeff in fn(basis_a, basis_b)
    )

def lc_tensor(a: LinComb, b: LinComb) -> LinComb:
    return LinComb.from_terms(
        (TensorBasis(basis_a, basis_b), coeff_a * coeff_b) for basis_a, coeff_a in a for basis_b, coeff_b in b
    )

def rank(vectors: Iterable[LinComb]) -> int:
    """Rank of the span of the given vectors, by sparse exact elimination.

    Every vector is reduced against the pivot rows found so far; a nonzero remainder becomes a new pivot row
    keyed by its smallest column."""
    columns: dict[Any, int] = {}
    pivots: dict[int, dict[int, Fraction]] = {}

    for vector in vectors:
        row = {}
        for basis, coeff in vector:
            if basis not in columns:
                columns[basis] = len(columns)
            row[columns[basis]] = coeff

        while row:
            lead = min(row)
            pivot = pivots.get(lead)
            if pivot is None:
                pivots[lead] = row
                break

            factor = row[lead] / pivot[lead]
            for column, value in pivot.items():
                updated = row.get(column, Fraction(0)) - factor * value
                if updated == 0:
                    row.pop(column, None)
                else:
                    row[column] = updated

    return len(pivots)

def kernel_dimension(vectors: Sequence[LinComb], basis: Sequence[Any]) -> int:
    """Kernel dimension of the matrix whose rows are `vectors`, as columns indexed by `basis`."""
    return len(basis) - rank(vectors)

def relation_dimension(vectors: Sequence[LinComb]) -> int:
    return len(vectors) - rank(vectors)

@dataclass(frozen=True)
class IntSeries:
    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        for value in self.dims:
            if value < 0:
                raise ValueError(f"series entries must be nonnegative, got {value}")

    @classmethod
    def of(cls, values: Iterable[int]) -> "IntSeries":
        return cls(tuple(values))

    def __len__(self) -> int:
        return len(self.dims)

    def __getitem__(self, index: int) -> int:
        return self.dims[index]

    def __str__(self) -> str:
        return ",".join(str(value) for value in self.dims)

def free_generator_series(dims: IntSeries) -> IntSeries:
    """Generator counts g_1, g_2, ... of a free connected graded algebra with dimensions f_1, f_2, ...

    Inverts 1 + f(t) = 1 / (1 - g(t)) degree by degree and raises NegativeGenerator as soon as some g_n < 0."""
    generators = []
    for n in range(1, len(dims) + 1):
        value = dims[n - 1] - sum(generators[k - 1] * dims[n - k - 1] for k in range(1, n))
        if value < 0:
            raise NegativeGenerator(n, value)
        generators.append(value)

    logger.debug("free generator series of %s is %s", dims, generators)
    return IntSeries.of(generators)

def series_from_generators(generators: IntSeries) -> IntSeries:
    dims = []
    for n in range(1, len(generators) + 1):
        dims.append(generators[n - 1] + sum(generators[k - 1] * dims[n - k - 1] for k in range(1, n)))
    return IntSeries.of(dims)
