import logging
import sys
from argparse import ArgumentParser
from importlib import metadata
from ohl import associahedron, permutohedron
from ohl.bialgebra_lab import dims_of, freeness_report, homogeneous_degree, primitive_dims
from ohl.errors import DomainMismatch, NegativeGenerator, OhlError, ParseError, UnknownStructure
from ohl.exact_linear import IntSeries, LinComb, free_generator_series, series_from_generators
from ohl.models import CheckResult, TermRow
from ohl.parsing import parse_element, parse_lincomb
from ohl.runner import run_suites
from ohl.structures import DEFAULT_ALPHABET, STRUCTURE_NAMES, family_dims, get_structure
from ohl.suites import SUITE_BUILDERS
from ohl.symmetric_combinatorics import alpha, as_compose
from typing import Any, Callable, Optional

DEGREE_CAP = 8

OPERAD_FAMILIES = {
    "as": "perms",
    "ctd": "setcomps",
    "pi": "setcomps",
    "td": "trees",
}

# name -> (input family, reads a linear combination, function)
MAPS: dict[str, tuple[str, bool, Callable[[Any], Any]]] = {
    "phi": ("setcomps", False, associahedron.phi),
    "theta": ("setcomps", False, associahedron.theta),
    "phi0": ("perms", False, associahedron.phi0),
    "alpha": ("perms", False, alpha),
    "loday-ronco": ("perms", False, associahedron.loday_ronco),
    "psi": ("trees", False, associahedron.psi),
    "psi0": ("trees", False, associahedron.psi0),
    "pi-td": ("trees", True, associahedron.pi_td),
    "pi-ctd": ("setcomps", True, permutohedron.pi_ctd),
}

def parse_degree(value: Optional[int], default: int, unsafe: bool) -> int:
    degree = default if value is None else value
    if degree < 0:
        raise ParseError(f"degree bound must be nonnegative, got {degree}")
    if degree > DEGREE_CAP and not unsafe:
        raise ParseError(f"degree bound {degree} is above {DEGREE_CAP}, pass --unsafe-degree to allow it")
    return degree

def parse_series(text: str) -> IntSeries:
    try:
        values = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise ParseError(f"'{text}' is not a comma-separated list of integers")

    try:
        return IntSeries.of(values)
    except ValueError as e:
        raise ParseError(str(e))

def print_value(value: Any, as_json: bool) -> None:
    if isinstance(value, LinComb):
        if as_json:
            for basis, coeff in value:
                sys.stdout.write(str(TermRow(coeff, basis)))
        else:
            print(value)
    elif as_json:
        sys.stdout.write(str(TermRow(1, value)))
    else:
        print(value)

def print_reports(reports: list[CheckResult], as_json: bool) -> None:
    for report in reports:
        if as_json:
            sys.stdout.write(report.to_json())
        else:
            print(report)

    if not as_json:
        failed = sum(1 for report in reports if not report.passed)
        print(f"{len(reports) - failed} passed, {failed} failed")

def command_mul(args: Any) -> int:
    structure = get_structure(args.structure, args.alphabet)
    a = parse_lincomb(args.a, structure.family)
    b = parse_lincomb(args.b, structure.family)
    if structure.twisted is not None:
        homogeneous_degree(structure.twisted, a)
        homogeneous_degree(structure.twisted, b)

    print_value(structure.multiply(a, b, args.product), args.json)
    return 0

def command_comul(args: Any) -> int:
    structure = get_structure(args.structure, args.alphabet)
    a = parse_lincomb(args.a, structure.family)

    if args.tagged:
        if structure.twisted is None:
            raise DomainMismatch(f"{structure.name} has no twisted coproduct")
        homogeneous_degree(structure.twisted, a)
        value = LinComb.from_terms(
            (tensor, coeff * inner)
            for basis, coeff in a
            for tensor, inner in structure.twisted.twisted_coproduct(basis)
        )
    else:
        value = structure.comultiply(a, args.coproduct)

    print_value(value, args.json)
    return 0

def command_compose(args: Any) -> int:
    family = OPERAD_FAMILIES[args.operad]
    elements = [parse_element(text, family) for text in args.elements]

    if args.operad == "as":
        if len(elements) == 0:
            raise ParseError("compose needs a permutation followed by its arguments")
        value = as_compose(elements[0], elements[1:])
    elif args.sector is not None:
        if args.operad != "td" or len(elements) != 2:
            raise ParseError("--sector takes exactly two trees with --operad td")
        value = associahedron.sector_insert(elements[0], args.sector, elements[1])
    else:
        if len(elements) != 2:
            raise ParseError(f"--operad {args.operad} composes exactly two elements")
        if args.name not in ("dot", "prec", "succ"):
            raise ParseError(f"--name must be one of dot, prec, succ, got '{args.name}'")

        compose = {
            "ctd": permutohedron.ctd_compose,
            "pi": permutohedron.pi_compose,
            "td": associahedron.td_compose,
        }[args.operad]
        value = compose(args.name, elements[0], elements[1])

    print_value(value, args.json)
    return 0

def command_map(args: Any) -> int:
    if args.name not in MAPS:
        raise UnknownStructure(f"unknown map '{args.name}', expected one of {', '.join(MAPS)}")

    family, reads_lincomb, fn = MAPS[args.name]
    if reads_lincomb:
        value = fn(parse_lincomb(args.element, family))
    else:
        value = fn(parse_element(args.element, family))

    print_value(value, args.json)
    return 0

def command_dims(args: Any) -> int:
    if args.degree is not None:
        degree = parse_degree(args.degree, 6, args.unsafe_degree)
        print(family_dims(args.family, degree, args.alphabet)[-1])
        return 0

    max_degree = parse_degree(args.max_degree, 6, args.unsafe_degree)
    print(",".join(str(value) for value in family_dims(args.family, max_degree, args.alphabet)))
    return 0

def command_primitives(args: Any) -> int:
    structure = get_structure(args.structure, args.alphabet)
    max_degree = parse_degree(args.max_degree, 6, args.unsafe_degree)

    prim_dims = primitive_dims(structure, args.coproduct, max_degree)
    report = freeness_report(dims_of(structure, max_degree), prim_dims, structure.name, "free-on-primitives")

    if args.json:
        sys.stdout.write(report.to_json())
    else:
        print(prim_dims)
        print(report)

    return 0 if report.passed else 1

def command_verify(args: Any) -> int:
    max_degree = parse_degree(args.max_degree, 4, args.unsafe_degree)
    if args.jobs < 1:
        raise ParseError(f"--jobs must be at least 1, got {args.jobs}")

    reports = run_suites(args.suite, max_degree, args.jobs, not args.no_progress and not args.json)
    print_reports(reports, args.json)
    return 0 if all(report.passed for report in reports) else 1

def command_series(args: Any) -> int:
    dims = parse_series(args.dims)
    if args.inverse:
        print(series_from_generators(dims))
        return 0

    try:
        print(free_generator_series(dims))
    except NegativeGenerator as e:
        print(f"Not free: {e}")
        return 1
    return 0

def package_version() -> str:
    try:
        return metadata.version(__package__ or "ohl")
    except metadata.PackageNotFoundError:
        return "unknown"

def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="ohl", description="Compute in and verify combinatorial Hopf algebras built from operads.")
    parser.add_argument("--verbose", action="store_true", help="log debug output to stderr")
    parser.add_argument("-v", "--version", action="version", version=f"%(prog)s {package_version()}")

    common = ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print JSON lines instead of text")
    common.add_argument("--unsafe-degree", action="store_true", help=f"allow degree bounds above {DEGREE_CAP}")
    common.add_argument("--alphabet", type=str, default="".join(DEFAULT_ALPHABET), help="letters of the word structure")

    subparsers = parser.add_subparsers(dest="command", required=True)

    mul = subparsers.add_parser("mul", parents=[common], help="multiply two elements")
    mul.add_argument("--structure", type=str, required=True, help=f"one of {', '.join(STRUCTURE_NAMES)}")
    mul.add_argument("--product", type=str, help="product to use when the structure has several")
    mul.add_argument("a", type=str)
    mul.add_argument("b", type=str)
    mul.set_defaults(handler=command_mul)

    comul = subparsers.add_parser("comul", parents=[common], help="apply a coproduct")
    comul.add_argument("--structure", type=str, required=True, help=f"one of {', '.join(STRUCTURE_NAMES)}")
    comul.add_argument("--coproduct", type=str, help="coproduct to use when the structure has several")
    comul.add_argument("--tagged", action="store_true", help="print the twisted coproduct with its (S,T) tags")
    comul.add_argument("a", type=str)
    comul.set_defaults(handler=command_comul)

    compose = subparsers.add_parser("compose", parents=[common], help="compose in an operad")
    compose.add_argument("--operad", type=str, required=True, choices=list(OPERAD_FAMILIES))
    compose.add_argument("--name", type=str, help="generator for ctd, pi and td: dot, prec or succ")
    compose.add_argument("--sector", type=int, help="insert the second tree into this sector of the first (td only)")
    compose.add_argument("elements", type=str, nargs="+")
    compose.set_defaults(handler=command_compose)

    map_parser = subparsers.add_parser("map", parents=[common], help="apply a map between structures")
    map_parser.add_argument("--name", type=str, required=True, help=f"one of {', '.join(MAPS)}")
    map_parser.add_argument("element", type=str)
    map_parser.set_defaults(handler=command_map)

    dims = subparsers.add_parser("dims", parents=[common], help="print dimensions of a family from degree 0")
    dims.add_argument("--family", type=str, required=True, help="perms, setcomps, trees, binary-trees or words")
    dims.add_argument("--max-degree", type=int)
    dims.add_argument("--degree", type=int, help="print the count in this degree only")
    dims.set_defaults(handler=command_dims)

    primitives = subparsers.add_parser("primitives", parents=[common], help="primitive dimensions and freeness")
    primitives.add_argument("--structure", type=str, required=True, help=f"one of {', '.join(STRUCTURE_NAMES)}")
    primitives.add_argument("--coproduct", type=str, help="coproduct to use when the structure has several")
    primitives.add_argument("--max-degree", type=int)
    primitives.set_defaults(handler=command_primitives)

    verify = subparsers.add_parser("verify", parents=[common], help="check axioms exhaustively up to a degree")
    verify.add_argument("--suite", type=str, default="all", help=f"all or one of {', '.join(SUITE_BUILDERS)}")
    verify.add_argument("--max-degree", type=int)
    verify.add_argument("--jobs", type=int, default=1, help="number of worker processes")
    verify.add_argument("--no-progress", action="store_true", help="don't show progress bars")
    verify.set_defaults(handler=command_verify)

    series = subparsers.add_parser("series", parents=[common], help="generator counts of a free algebra with these dimensions")
    series.add_argument("dims", type=str, help="comma-separated dimensions from degree 1")
    series.add_argument("--inverse", action="store_true", help="read generator counts and print dimensions")
    series.set_defaults(handler=command_series)

    return parser

def run(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
    )

    try:
        return args.handler(args)
    except OhlError as e:
        print(f"Error: {e}")
        return 2

def main() -> None:
    sys.exit(run())

if __name__ == "__main__":
    main()
