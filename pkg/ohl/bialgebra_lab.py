import logging
from abc import abstractmethod
from dataclasses import dataclass, field
from ohl.errors import InhomogeneousInput, NegativeGenerator, UnknownStructure
from ohl.exact_linear import IntSeries, LinComb, TensorBasis, bilinear_extend, free_generator_series, linear_extend, relation_dimension
from ohl.models import CheckResult, LawOutcome, Witness
from ohl.symmetric_combinatorics import Permutation, shuffle_permutations
from typing import Any, Callable, Mapping, Optional, Sequence

logger = logging.getLogger(__name__)

BasisProduct = Callable[[Any, Any], LinComb]
BasisCoproduct = Callable[[Any], LinComb]

class TwistedStructure:
    """A species-level algebra: graded pieces carrying a right action of the symmetric groups, a twisted product
    from degrees (p, q) to p + q and a twisted coproduct whose terms are tagged by the decomposition of [n]."""

    name = ""
    products: tuple[str, ...] = ()

    @abstractmethod
    def basis(self, n: int) -> Sequence[Any]:
        raise NotImplementedError()

    @abstractmethod
    def degree(self, element: Any) -> int:
        raise NotImplementedError()

    @abstractmethod
    def act(self, element: Any, sigma: Permutation) -> Any:
        raise NotImplementedError()

    @abstractmethod
    def unit(self) -> Any:
        raise NotImplementedError()

    @abstractmethod
    def twisted_product(self, op: str, x: Any, y: Any) -> LinComb:
        raise NotImplementedError()

    @abstractmethod
    def twisted_coproduct(self, x: Any) -> LinComb:
        raise NotImplementedError()

def homogeneous_degree(twisted: TwistedStructure, value: LinComb) -> Optional[int]:
    degrees = {twisted.degree(basis) for basis, _ in value}
    if len(degrees) > 1:
        raise InhomogeneousInput(f"{value} mixes degrees {sorted(degrees)}")
    return next(iter(degrees), None)

def hat_basis_product(twisted: TwistedStructure, op: str, x: Any, y: Any) -> LinComb:
    """Symmetrized product: the twisted product acted on by every (p, q)-shuffle and summed."""
    p, q = twisted.degree(x), twisted.degree(y)
    value = twisted.twisted_product(op, x, y)
    return LinComb.from_terms(
        (twisted.act(basis, xi), coeff) for basis, coeff in value for xi in shuffle_permutations(p, q)
    )

def bar_basis_product(twisted: TwistedStructure, op: str, x: Any, y: Any) -> LinComb:
    return twisted.twisted_product(op, x, y)

def hat_product(twisted: TwistedStructure, op: str, a: LinComb, b: LinComb) -> LinComb:
    homogeneous_degree(twisted, a)
    homogeneous_degree(twisted, b)
    return bilinear_extend(lambda x, y: hat_basis_product(twisted, op, x, y), a, b)

def bar_product(twisted: TwistedStructure, op: str, a: LinComb, b: LinComb) -> LinComb:
    homogeneous_degree(twisted, a)
    homogeneous_degree(twisted, b)
    return bilinear_extend(lambda x, y: bar_basis_product(twisted, op, x, y), a, b)

def hat_basis_coproduct(twisted: TwistedStructure, x: Any) -> LinComb:
    return LinComb.from_terms((tensor.untagged(), coeff) for tensor, coeff in twisted.twisted_coproduct(x))

def bar_basis_coproduct(twisted: TwistedStructure, x: Any) -> LinComb:
    """Keeps the terms tagged ([i], i + [n - i])."""
    return LinComb.from_terms(
        (tensor.untagged(), coeff)
        for tensor, coeff in twisted.twisted_coproduct(x)
        if tensor.tag[0] == tuple(range(1, len(tensor.tag[0]) + 1))
    )

def hat_coproduct(twisted: TwistedStructure, a: LinComb) -> LinComb:
    homogeneous_degree(twisted, a)
    return linear_extend(lambda x: hat_basis_coproduct(twisted, x), a)

def bar_coproduct(twisted: TwistedStructure, a: LinComb) -> LinComb:
    homogeneous_degree(twisted, a)
    return linear_extend(lambda x: bar_basis_coproduct(twisted, x), a)

@dataclass(frozen=True)
class GradedStructure:
    name: str
    family: str
    basis: Callable[[int], Sequence[Any]]
    unit: Any
    products: Mapping[str, BasisProduct]
    coproducts: Mapping[str, BasisCoproduct]
    # Products satisfying the generator rule x(a1 ⊗ a2, b1 ⊗ b2) = x(a1, b1) ⊗ total(a2, b2).
    generators: tuple[str, ...] = ()
    total: Optional[str] = None
    twisted: Optional[TwistedStructure] = field(default=None, compare=False)
    description: str = ""

    def product(self, name: Optional[str] = None) -> BasisProduct:
        if name is None:
            name = next(iter(self.products))
        if name not in self.products:
            raise UnknownStructure(f"{self.name} has no product '{name}', expected one of {', '.join(self.products)}")
        return self.products[name]

    def coproduct(self, name: Optional[str] = None) -> BasisCoproduct:
        if name is None:
            name = next(iter(self.coproducts))
        if name not in self.coproducts:
            raise UnknownStructure(f"{self.name} has no coproduct '{name}', expected one of {', '.join(self.coproducts)}")
        return self.coproducts[name]

    def multiply(self, a: LinComb, b: LinComb, name: Optional[str] = None) -> LinComb:
        return bilinear_extend(self.product(name), a, b)

    def comultiply(self, a: LinComb, name: Optional[str] = None) -> LinComb:
        return linear_extend(self.coproduct(name), a)

def tensor_square_product(structure: GradedStructure, op: str, left: LinComb, right: LinComb) -> LinComb:
    multiply = structure.product(op)
    generator = op in structure.generators
    total = structure.product(structure.total) if generator else multiply

    terms = []
    for t1, c1 in left:
        for t2, c2 in right:
            if generator and t1.left == structure.unit and t2.left == structure.unit:
                for z, cz in multiply(t1.right, t2.right):
                    terms.append((TensorBasis(structure.unit, z), c1 * c2 * cz))
                continue

            heads = multiply(t1.left, t2.left)
            if not heads:
                continue
            tails = total(t1.right, t2.right)
            for x, cx in heads:
                for y, cy in tails:
                    terms.append((TensorBasis(x, y), c1 * c2 * cx * cy))
    return LinComb.from_terms(terms)

def square_rule(structure: GradedStructure, op: str) -> str:
    return "generator-rule" if op in structure.generators else "componentwise"

@dataclass(frozen=True)
class Law:
    axiom: str
    cases: Callable[[int], Sequence[Any]]
    evaluate: Callable[[Any], Optional[Witness]]
    cap: Optional[int] = None

    def bound(self, max_degree: int) -> int:
        return max_degree if self.cap is None else min(max_degree, self.cap)

def format_case(case: Any) -> str:
    if isinstance(case, tuple):
        return ", ".join(str(item) for item in case)
    return str(case)

def compare(case: Any, lhs: Any, rhs: Any) -> Optional[Witness]:
    if lhs == rhs:
        return None
    return Witness(format_case(case), str(lhs), str(rhs))

def run_law(law: Law, max_degree: int, shard: int = 0, shard_count: int = 1) -> LawOutcome:
    cases = law.cases(law.bound(max_degree))
    for index in range(shard, len(cases), shard_count):
        witness = law.evaluate(cases[index])
        if witness is not None:
            return LawOutcome(len(cases), index, witness)
    return LawOutcome(len(cases))

def check_law(suite: str, law: Law, max_degree: int) -> CheckResult:
    outcome = run_law(law, max_degree)
    return CheckResult(suite, law.axiom, law.bound(max_degree), outcome.cases, outcome.witness)

def basis_upto(structure: GradedStructure, max_degree: int, start: int = 1) -> list[Any]:
    return [element for n in range(start, max_degree + 1) for element in structure.basis(n)]

def basis_pairs(structure: GradedStructure, max_degree: int) -> list[tuple[Any, Any]]:
    return [
        (x, y)
        for p in range(1, max_degree + 1)
        for q in range(1, max_degree - p + 1)
        for x in structure.basis(p)
        for y in structure.basis(q)
    ]

def basis_triples(structure: GradedStructure, max_degree: int) -> list[tuple[Any, Any, Any]]:
    return [
        (x, y, z)
        for p in range(1, max_degree + 1)
        for q in range(1, max_degree - p + 1)
        for r in range(1, max_degree - p - q + 1)
        for x in structure.basis(p)
        for y in structure.basis(q)
        for z in structure.basis(r)
    ]

def associativity_law(structure: GradedStructure, op: Optional[str] = None) -> Law:
    multiply = structure.product(op)

    def evaluate(case: tuple[Any, Any, Any]) -> Optional[Witness]:
        x, y, z = case
        lhs = bilinear_extend(multiply, multiply(x, y), LinComb.of(z))
        rhs = bilinear_extend(multiply, LinComb.of(x), multiply(y, z))
        return compare(case, lhs, rhs)

    return Law(f"{structure.name}:{op or 'default'}:associative", lambda d: basis_triples(structure, d), evaluate)

def unit_law(structure: GradedStructure, op: Optional[str] = None) -> Law:
    multiply = structure.product(op)

    def evaluate(x: Any) -> Optional[Witness]:
        witness = compare((structure.unit, x), multiply(structure.unit, x), LinComb.of(x))
        if witness is not None:
            return witness
        return compare((x, structure.unit), multiply(x, structure.unit), LinComb.of(x))

    return Law(f"{structure.name}:{op or 'default'}:unit", lambda d: basis_upto(structure, d), evaluate)

def _iterate_left(coproduct: BasisCoproduct, value: LinComb) -> LinComb:
    return LinComb.from_terms(
        ((inner.left, inner.right, tensor.right), coeff * inner_coeff)
        for tensor, coeff in value
        for inner, inner_coeff in coproduct(tensor.left)
    )

def _iterate_right(coproduct: BasisCoproduct, value: LinComb) -> LinComb:
    return LinComb.from_terms(
        ((tensor.left, inner.left, inner.right), coeff * inner_coeff)
        for tensor, coeff in value
        for inner, inner_coeff in coproduct(tensor.right)
    )

def coassociativity_law(structure: GradedStructure, cop: Optional[str] = None) -> Law:
    coproduct = structure.coproduct(cop)

    def evaluate(x: Any) -> Optional[Witness]:
        value = coproduct(x)
        return compare(x, _iterate_left(coproduct, value), _iterate_right(coproduct, value))

    return Law(f"{structure.name}:{cop or 'default'}:coassociative", lambda d: basis_upto(structure, d, 0), evaluate)

def counit_law(structure: GradedStructure, cop: Optional[str] = None) -> Law:
    coproduct = structure.coproduct(cop)

    def evaluate(x: Any) -> Optional[Witness]:
        value = coproduct(x)
        left = LinComb.from_terms((tensor.right, coeff) for tensor, coeff in value if tensor.left == structure.unit)
        witness = compare(x, left, LinComb.of(x))
        if witness is not None:
            return witness
        right = LinComb.from_terms((tensor.left, coeff) for tensor, coeff in value if tensor.right == structure.unit)
        return compare(x, right, LinComb.of(x))

    return Law(f"{structure.name}:{cop or 'default'}:counit", lambda d: basis_upto(structure, d, 0), evaluate)

def cocommutativity_law(structure: GradedStructure, cop: Optional[str] = None) -> Law:
    coproduct = structure.coproduct(cop)

    def evaluate(x: Any) -> Optional[Witness]:
        value = coproduct(x)
        return compare(x, value, value.map_basis(lambda tensor: tensor.swapped()))

    return Law(f"{structure.name}:{cop or 'default'}:cocommutative", lambda d: basis_upto(structure, d), evaluate)

def hopf_law(structure: GradedStructure, op: Optional[str] = None, cop: Optional[str] = None) -> Law:
    multiply = structure.product(op)
    coproduct = structure.coproduct(cop)
    op_name = op or next(iter(structure.products))

    def evaluate(case: tuple[Any, Any]) -> Optional[Witness]:
        x, y = case
        lhs = linear_extend(coproduct, multiply(x, y))
        rhs = tensor_square_product(structure, op_name, coproduct(x), coproduct(y))
        return compare(case, lhs, rhs)

    axiom = f"{structure.name}:{op_name}:{cop or 'default'}:hopf[{square_rule(structure, op_name)}]"
    return Law(axiom, lambda d: basis_pairs(structure, d), evaluate)

def ui_law(structure: GradedStructure, op: Optional[str] = None, cop: Optional[str] = None) -> Law:
    """Delta(a b) = Delta(a) * (1 ⊗ b) + (a ⊗ 1) * Delta(b) - (a ⊗ 1) * (1 ⊗ b)."""
    multiply = structure.product(op)
    coproduct = structure.coproduct(cop)
    op_name = op or next(iter(structure.products))
    unit = structure.unit

    def evaluate(case: tuple[Any, Any]) -> Optional[Witness]:
        x, y = case
        lhs = linear_extend(coproduct, multiply(x, y))
        left_unit = LinComb.of(TensorBasis(x, unit))
        right_unit = LinComb.of(TensorBasis(unit, y))
        rhs = (
            tensor_square_product(structure, op_name, coproduct(x), right_unit)
            + tensor_square_product(structure, op_name, left_unit, coproduct(y))
            - tensor_square_product(structure, op_name, left_unit, right_unit)
        )
        return compare(case, lhs, rhs)

    axiom = f"{structure.name}:{op_name}:{cop or 'default'}:unital-infinitesimal[{square_rule(structure, op_name)}]"
    return Law(axiom, lambda d: basis_pairs(structure, d), evaluate)

def duality_law(
    name: str,
    basis: Callable[[int], Sequence[Any]],
    product: BasisProduct,
    coproduct: BasisCoproduct,
    cap: Optional[int] = None,
) -> Law:
    """The structure constants of the product and of the coproduct agree: <x y, z> = <x ⊗ y, Delta z>."""

    def cases(max_degree: int) -> list[tuple[int, int]]:
        return [(p, q) for p in range(1, max_degree + 1) for q in range(1, max_degree - p + 1)]

    def evaluate(case: tuple[int, int]) -> Optional[Witness]:
        p, q = case
        left_basis = set(basis(p))
        products = LinComb.from_terms(
            ((x, y, z), coeff) for x in basis(p) for y in basis(q) for z, coeff in product(x, y)
        )
        coproducts = LinComb.from_terms(
            ((tensor.left, tensor.right, z), coeff)
            for z in basis(p + q)
            for tensor, coeff in coproduct(z)
            if tensor.left in left_basis
        )
        if products == coproducts:
            return None

        difference = products - coproducts
        key = difference.support()[0]
        return Witness(
            f"degrees ({p}, {q}) at {format_case(key)}",
            str(products.coefficient(key)),
            str(coproducts.coefficient(key)),
        )

    return Law(f"{name}:duality", cases, evaluate, cap)

def equality_law(
    axiom: str,
    cases: Callable[[int], Sequence[Any]],
    lhs: Callable[..., Any],
    rhs: Callable[..., Any],
    cap: Optional[int] = None,
) -> Law:
    """A law comparing two computations on every case; tuple cases are unpacked into the arguments."""

    def evaluate(case: Any) -> Optional[Witness]:
        args = case if isinstance(case, tuple) else (case,)
        return compare(case, lhs(*args), rhs(*args))

    return Law(axiom, cases, evaluate, cap)

def check_associative(structure: GradedStructure, op: Optional[str] = None, max_degree: int = 4) -> CheckResult:
    unit = check_law(structure.name, unit_law(structure, op), max_degree)
    if not unit.passed:
        return unit
    return check_law(structure.name, associativity_law(structure, op), max_degree)

def check_counit(structure: GradedStructure, cop: Optional[str] = None, max_degree: int = 4) -> CheckResult:
    return check_law(structure.name, counit_law(structure, cop), max_degree)

def check_coassociative(structure: GradedStructure, cop: Optional[str] = None, max_degree: int = 4) -> CheckResult:
    counit = check_counit(structure, cop, max_degree)
    if not counit.passed:
        return counit
    return check_law(structure.name, coassociativity_law(structure, cop), max_degree)

def check_hopf_compat(
    structure: GradedStructure,
    op: Optional[str] = None,
    cop: Optional[str] = None,
    max_degree: int = 4,
) -> CheckResult:
    return check_law(structure.name, hopf_law(structure, op, cop), max_degree)

def check_uiP(
    structure: GradedStructure,
    op: Optional[str] = None,
    cop: Optional[str] = None,
    max_degree: int = 4,
) -> CheckResult:
    return check_law(structure.name, ui_law(structure, op, cop), max_degree)

def check_2as(
    structure: GradedStructure,
    hat_op: str,
    bar_op: str,
    cop: Optional[str] = None,
    max_degree: int = 4,
) -> CheckResult:
    """(hat, Delta) is a bialgebra and (bar, Delta) is unital infinitesimal over the same coproduct."""
    hopf = check_hopf_compat(structure, hat_op, cop, max_degree)
    if not hopf.passed:
        return hopf

    infinitesimal = check_uiP(structure, bar_op, cop, max_degree)
    return CheckResult(
        structure.name,
        f"{structure.name}:{hat_op}+{bar_op}:2-associative",
        max_degree,
        hopf.cases + infinitesimal.cases,
        infinitesimal.witness,
    )

def check_duality(
    name: str,
    basis: Callable[[int], Sequence[Any]],
    product: BasisProduct,
    coproduct: BasisCoproduct,
    max_degree: int = 3,
) -> CheckResult:
    return check_law(name, duality_law(name, basis, product, coproduct), max_degree)

def primitive_dims(structure: GradedStructure, cop: Optional[str] = None, max_degree: int = 4) -> IntSeries:
    """Dimension of the primitive part in degrees 1..max_degree."""
    coproduct = structure.coproduct(cop)
    unit = structure.unit

    dims = []
    for n in range(1, max_degree + 1):
        vectors = [
            coproduct(x) - LinComb.of(TensorBasis(unit, x)) - LinComb.of(TensorBasis(x, unit))
            for x in structure.basis(n)
        ]
        dims.append(relation_dimension(vectors))
        logger.debug("%s has %d primitives in degree %d", structure.name, dims[-1], n)

    return IntSeries.of(dims)

def freeness_report(
    dims: IntSeries,
    prim_dims: IntSeries,
    suite: str = "freeness",
    axiom: str = "free-generators",
) -> CheckResult:
    """Passes when the primitive dimensions are exactly the generator counts of a free algebra with these dimensions."""
    try:
        expected = free_generator_series(dims)
    except NegativeGenerator as e:
        return CheckResult(suite, axiom, len(dims), 1, Witness(str(dims), str(prim_dims), str(e)))

    if expected == prim_dims:
        return CheckResult(suite, axiom, len(dims), 1)
    return CheckResult(suite, axiom, len(dims), 1, Witness(str(dims), str(prim_dims), str(expected)))

def dims_of(structure: GradedStructure, max_degree: int) -> IntSeries:
    return IntSeries.of(len(structure.basis(n)) for n in range(1, max_degree + 1))

def freeness_law(structure: GradedStructure, cop: Optional[str] = None, cap: Optional[int] = None) -> Law:
    def evaluate(max_degree: int) -> Optional[Witness]:
        return freeness_report(dims_of(structure, max_degree), primitive_dims(structure, cop, max_degree)).witness

    return Law(f"{structure.name}:{cop or 'default'}:free-on-primitives", lambda d: [d], evaluate, cap)
