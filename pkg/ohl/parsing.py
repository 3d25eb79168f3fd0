import re
from fractions import Fraction
from ohl.associahedron import PlanarTree
from ohl.errors import OhlError, ParseError
from ohl.exact_linear import LinComb
from ohl.permutohedron import EMPTY_COMPOSITION, SetComposition
from ohl.symmetric_combinatorics import ComMonomial, Permutation, Word
from typing import Any, Callable

PERMUTATION_PATTERN = re.compile(r"^\[\s*(\d+(\s*,\s*\d+)*)?\s*\]$")
BLOCK_PATTERN = re.compile(r"^\{\s*(\d+(\s*,\s*\d+)*)\s*\}$")
COMPACT_PATTERN = re.compile(r"^\(\s*(\d+(\s*,\s*\d+)*)\s*\)$")
COM_PATTERN = re.compile(r"^X\^(\d+)$")
TERM_PATTERN = re.compile(r"^(-?\d+(?:/\d+)?)\s*\*\s*(.+)$")

def parse_permutation(text: str) -> Permutation:
    match = PERMUTATION_PATTERN.match(text.strip())
    if match is None:
        raise ParseError(f"'{text}' is not a permutation like [3,1,2]")

    body = match.group(1)
    word = () if body is None else tuple(int(part) for part in body.split(","))
    try:
        return Permutation(word)
    except OhlError as e:
        raise ParseError(str(e)) from e

def parse_set_composition(text: str) -> SetComposition:
    """Accepts {3,4}|{1}|{5,6}|{2}, the compact (34,1,56,2) with one digit per label, and {} for the empty one."""
    text = text.strip()
    if text == "{}":
        return EMPTY_COMPOSITION

    compact = COMPACT_PATTERN.match(text)
    if compact is not None:
        blocks = [[int(digit) for digit in part.strip()] for part in text[1:-1].split(",")]
    else:
        blocks = []
        for part in text.split("|"):
            match = BLOCK_PATTERN.match(part.strip())
            if match is None:
                raise ParseError(f"'{part}' is not a block like {{3,4}}")
            blocks.append([int(label) for label in match.group(1).split(",")])

    for block in blocks:
        if len(set(block)) != len(block):
            raise ParseError(f"block {block} repeats a label")

    try:
        return SetComposition.of(*blocks)
    except ValueError as e:
        raise ParseError(str(e)) from e

def parse_tree(text: str) -> PlanarTree:
    tokens = re.findall(r"\(|\)|\|", text)
    if re.sub(r"[()|\s]", "", text) != "" or len(tokens) == 0:
        raise ParseError(f"'{text}' is not a planar tree like (| (| |))")

    def parse_at(position: int) -> tuple[PlanarTree, int]:
        if tokens[position] == "|":
            return PlanarTree(), position + 1
        if tokens[position] == ")":
            raise ParseError(f"unexpected ')' in '{text}'")

        children = []
        position += 1
        while position < len(tokens) and tokens[position] != ")":
            child, position = parse_at(position)
            children.append(child)

        if position >= len(tokens):
            raise ParseError(f"unbalanced parentheses in '{text}'")
        if len(children) < 2:
            raise ParseError(f"vertices need at least two children in '{text}'")
        return PlanarTree(tuple(children)), position + 1

    tree, end = parse_at(0)
    if end != len(tokens):
        raise ParseError(f"trailing input after the tree in '{text}'")
    return tree

def parse_word(text: str) -> Word:
    text = text.strip()
    if text in ("", "ε"):
        return Word(())
    if not text.isalpha():
        raise ParseError(f"'{text}' is not a word of letters")
    return Word(tuple(text))

def parse_com(text: str) -> ComMonomial:
    match = COM_PATTERN.match(text.strip())
    if match is None:
        raise ParseError(f"'{text}' is not a monomial like X^3")
    return ComMonomial(int(match.group(1)))

FAMILY_PARSERS: dict[str, Callable[[str], Any]] = {
    "perms": parse_permutation,
    "setcomps": parse_set_composition,
    "trees": parse_tree,
    "words": parse_word,
    "com": parse_com,
}

def parse_element(text: str, family: str) -> Any:
    if family not in FAMILY_PARSERS:
        raise ParseError(f"unknown family '{family}'")
    return FAMILY_PARSERS[family](text)

def parse_lincomb(text: str, family: str) -> LinComb:
    """Parses 2*[1,2] + -1/3*[2,1]; a bare basis element has coefficient 1 and 0 is the zero combination."""
    text = text.strip()
    if text == "0":
        return LinComb()

    terms = []
    for part in text.split("+"):
        part = part.strip()
        match = TERM_PATTERN.match(part)
        if match is not None:
            try:
                coeff, body = Fraction(match.group(1)), match.group(2)
            except ZeroDivisionError:
                raise ParseError(f"coefficient in '{part}' has a zero denominator")
        elif part.startswith("-") and family != "words":
            coeff, body = Fraction(-1), part[1:]
        else:
            coeff, body = Fraction(1), part
        terms.append((parse_element(body, family), coeff))

    return LinComb.from_terms(terms)
