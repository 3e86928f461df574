#!/usr/bin/env python3
"""
Curvature-like tensor polynomials from Young tableaux
The vertical group of a paired tableau is reduced to multiset permutations
of each column; every signed assignment contributes one product of
4-index factors, collected under the pair symmetries.
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .core import MultisetSpec, Permutation, Transposition, check_cap
from .errors import InvalidArgs, UnpairableShape
from .multiperm import generate_all

logger = logging.getLogger(__name__)

Labels = Tuple[int, int, int, int]
TermKey = Tuple[Labels, ...]


@dataclass(frozen=True)
class YoungTableau:
    """
    A diagram filled band by band.

    Rows come in pairs of equal length (bands). Each band is filled column by
    column with the pair 2j-1, 2j stacked vertically, bands from top to
    bottom. rows[r] lists the numbers of row r + 1 from left to right.

    Example:
        >>> build_tableau([2, 2, 2, 2]).columns
        ((1, 2, 5, 6), (3, 4, 7, 8))
    """

    partition: Tuple[int, ...]
    rows: Tuple[Tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return sum(self.partition)

    @property
    def columns(self) -> Tuple[Tuple[int, ...], ...]:
        width = self.partition[0]
        return tuple(
            tuple(row[c] for row in self.rows if c < len(row))
            for c in range(width)
        )

    @property
    def row_of(self) -> Dict[int, int]:
        """Number -> 1-based row."""
        return {number: r for r, row in enumerate(self.rows, start=1) for number in row}

    @property
    def pair_map(self) -> Dict[int, int]:
        """The involution 2j-1 <-> 2j."""
        pairs = {}
        for number in range(1, self.size + 1, 2):
            pairs[number] = number + 1
            pairs[number + 1] = number
        return pairs

    def __str__(self) -> str:
        return "\n".join(" ".join(f"{number:>2}" for number in row) for row in self.rows)


def build_tableau(partition: Sequence[int]) -> YoungTableau:
    """
    Fill a partition whose rows come in equal-length pairs.

    Raises:
        UnpairableShape: If the partition is empty, not non-increasing,
            holds a non-positive row or its rows do not pair up
    """
    shape = tuple(partition)
    if not shape or any(not isinstance(r, int) or r < 1 for r in shape):
        raise UnpairableShape(f"partition needs positive row lengths, got {list(shape)}")
    if any(a < b for a, b in zip(shape, shape[1:])):
        raise UnpairableShape(f"partition must be non-increasing, got {list(shape)}")
    if len(shape) % 2 or any(shape[r] != shape[r + 1] for r in range(0, len(shape), 2)):
        raise UnpairableShape(f"rows of {list(shape)} do not come in equal-length pairs")

    rows: List[List[int]] = [[] for _ in shape]
    number = 1
    for top in range(0, len(shape), 2):
        for _ in range(shape[top]):
            rows[top].append(number)
            rows[top + 1].append(number + 1)
            number += 2
    return YoungTableau(shape, tuple(tuple(row) for row in rows))


def parse_partition(text: str) -> List[int]:
    """Parse "2,2,2,2" into row lengths."""
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise InvalidArgs(f"partition must look like 2,2,2,2 - got {text!r}")


def vertical_group_order(t: YoungTableau) -> int:
    """Product of h! over the column heights h."""
    return math.prod(math.factorial(len(col)) for col in t.columns)


def stream_cardinality(t: YoungTableau) -> int:
    """
    Length of the reduced assignment stream, h! / 2^(h/2) per column.

    Example:
        >>> stream_cardinality(build_tableau([5, 5, 5, 5, 4, 4]))
        393660000
    """
    return math.prod(math.factorial(len(col)) // 2 ** (len(col) // 2) for col in t.columns)


def diagram_word(t: YoungTableau, assignment: Optional[Permutation] = None) -> str:
    """
    Numbers read column by column, top to bottom (the identity filling when
    assignment is None).
    """
    word = assignment if assignment is not None else tuple(n for col in t.columns for n in col)
    return "".join(str(n) for n in word) if t.size <= 9 else ",".join(str(n) for n in word)


@dataclass(frozen=True)
class SignedAssignment:
    """Numbers in column-major cell order, with the parity of the step count."""

    word: Permutation
    sign: int


def _column_moves(column: Tuple[int, ...]) -> List[Transposition]:
    spec = MultisetSpec((2,) * (len(column) // 2))
    return [step for step in generate_all(spec).steps]


def reduced_vertical_enumerate(t: YoungTableau, cap: Optional[int] = None) -> Iterator[SignedAssignment]:
    """
    Stream one assignment per class of the vertical group modulo pair swaps.

    Each column runs the multiset generator on its pairs. The columns are
    combined as a reflected product: the leftmost column varies fastest and
    every column reverses direction when a column to its right steps. The
    sign flips on every transposition.

    Raises:
        CapExceeded: If the stream is longer than cap
    """
    check_cap(f"reduced vertical stream of {list(t.partition)}", stream_cardinality(t), cap)

    columns = t.columns
    offsets = []
    position = 0
    for col in columns:
        offsets.append(position)
        position += len(col)

    moves = [_column_moves(col) for col in columns]
    index = [0] * len(columns)
    direction = [1] * len(columns)
    word = [n for col in columns for n in col]
    sign = 1
    yield SignedAssignment(tuple(word), sign)

    while True:
        c = 0
        while c < len(columns) and not 0 <= index[c] + direction[c] <= len(moves[c]):
            c += 1
        if c == len(columns):
            return

        move = moves[c][index[c]] if direction[c] == 1 else moves[c][index[c] - 1]
        index[c] += direction[c]
        for lower in range(c):
            direction[lower] = -direction[lower]

        i = offsets[c] + move.i - 1
        j = offsets[c] + move.j - 1
        word[i], word[j] = word[j], word[i]
        sign = -sign
        yield SignedAssignment(tuple(word), sign)


def assignment_signature(t: YoungTableau, word: Permutation) -> int:
    """Sign of the permutation taking the identity filling to word, by cycles."""
    identity = [n for col in t.columns for n in col]
    where = {number: pos for pos, number in enumerate(identity)}
    image = [where[number] for number in word]

    seen = [False] * len(image)
    cycles = 0
    for start in range(len(image)):
        if seen[start]:
            continue
        cycles += 1
        pos = start
        while not seen[pos]:
            seen[pos] = True
            pos = image[pos]
    return -1 if (len(image) - cycles) % 2 else 1


@dataclass(frozen=True)
class TensorFactor:
    indices: Labels
    canonical: bool = True

    def __str__(self) -> str:
        if all(label <= 9 for label in self.indices):
            return "R_" + "".join(str(label) for label in self.indices)
        return "R_{" + ",".join(str(label) for label in self.indices) + "}"


def canonicalize_factor(indices: Sequence[int]) -> Tuple[Optional[TensorFactor], int]:
    """
    Canonical form under the pair symmetries.

    Sorting inside a pair costs a sign, swapping the two pairs is free.
    A label repeated inside one pair makes the factor vanish: the result is
    (None, 0).

    Example:
        >>> factor, sign = canonicalize_factor((2, 1, 3, 4))
        >>> str(factor), sign
        ('R_1234', -1)
    """
    a, b, c, d = indices
    if a == b or c == d:
        return None, 0
    sign = 1
    if a > b:
        a, b = b, a
        sign = -sign
    if c > d:
        c, d = d, c
        sign = -sign
    if (c, d) < (a, b):
        a, b, c, d = c, d, a, b
    return TensorFactor((a, b, c, d)), sign


@dataclass(frozen=True)
class TensorTerm:
    factors: Tuple[TensorFactor, ...]
    coefficient: int

    @property
    def key(self) -> TermKey:
        return tuple(f.indices for f in self.factors)


def _format_coefficient(coefficient: int) -> str:
    sign = "+" if coefficient > 0 else "-"
    magnitude = abs(coefficient)
    return sign if magnitude == 1 else f"{sign}{magnitude}*"


def _format_key(key: TermKey) -> str:
    return "*".join(str(TensorFactor(labels)) for labels in key)


@dataclass
class TensorPolynomial:
    """Coefficient per term key; zero coefficients are never stored."""

    terms: Dict[TermKey, int]

    def __post_init__(self):
        self.terms = {key: c for key, c in sorted(self.terms.items()) if c != 0}

    def add(self, key: TermKey, coefficient: int):
        total = self.terms.get(key, 0) + coefficient
        if total:
            self.terms[key] = total
        else:
            self.terms.pop(key, None)

    def __len__(self) -> int:
        return len(self.terms)

    def sorted_terms(self) -> List[TensorTerm]:
        return [
            TensorTerm(tuple(TensorFactor(labels) for labels in key), coefficient)
            for key, coefficient in sorted(self.terms.items())
        ]

    def format_human(self) -> str:
        """
        Example:
            >>> TensorPolynomial({((1, 2, 1, 4), (2, 3, 3, 4)): 2}).format_human()
            '+2*R_1214*R_2334'
        """
        return " ".join(
            _format_coefficient(coefficient) + _format_key(key)
            for key, coefficient in sorted(self.terms.items())
        )

    def format_machine(self) -> List[str]:
        """One line per term: coefficient, then each factor as four labels."""
        return [
            "\t".join([str(coefficient)] + [" ".join(str(label) for label in labels) for labels in key])
            for key, coefficient in sorted(self.terms.items())
        ]

    def to_dict(self) -> Dict:
        return {
            "term_count": len(self.terms),
            "terms": [
                {"coefficient": coefficient, "factors": [list(labels) for labels in key]}
                for key, coefficient in sorted(self.terms.items())
            ],
        }


def _slot_labels(t: YoungTableau, word: Permutation, rows_by_cell: Sequence[int]) -> List[int]:
    # slot i reads the row of the cell now holding number i
    labels = [0] * t.size
    for cell, number in enumerate(word):
        labels[number - 1] = rows_by_cell[cell]
    return labels


def _cell_rows(t: YoungTableau) -> List[int]:
    row_of = t.row_of
    return [row_of[n] for col in t.columns for n in col]


def _check_factorable(t: YoungTableau):
    if t.size % 4:
        raise InvalidArgs(f"{t.size} numbers do not split into 4-index factors")


def raw_terms(t: YoungTableau, cap: Optional[int] = None) -> Iterator[TensorTerm]:
    """
    One uncollected term per signed assignment, in stream order. Factor f
    reads slots 4f-3 .. 4f; nothing is canonicalized.
    """
    _check_factorable(t)
    rows_by_cell = _cell_rows(t)
    for assignment in reduced_vertical_enumerate(t, cap):
        labels = _slot_labels(t, assignment.word, rows_by_cell)
        factors = tuple(
            TensorFactor(tuple(labels[s:s + 4]), canonical=False)
            for s in range(0, t.size, 4)
        )
        yield TensorTerm(factors, assignment.sign)


def build_polynomial(
    t: YoungTableau,
    identify_equal_factors: bool = True,
    cap: Optional[int] = None,
) -> TensorPolynomial:
    """
    Sum the signed terms of every reduced assignment.

    With identify_equal_factors each factor is canonicalized (its sign
    multiplies the term) and the factors are sorted, so terms equal under
    the pair symmetries and factor interchange collect. Without it the raw
    terms are summed as they come.

    Raises:
        InvalidArgs: If the size is not a multiple of 4
        CapExceeded: If the assignment stream is longer than cap
    """
    poly = TensorPolynomial({})
    for term in raw_terms(t, cap):
        if not identify_equal_factors:
            poly.add(term.key, term.coefficient)
            continue

        sign = term.coefficient
        canonical = []
        for factor in term.factors:
            normal, factor_sign = canonicalize_factor(factor.indices)
            if normal is None:
                sign = 0
                break
            sign *= factor_sign
            canonical.append(normal.indices)
        if sign:
            poly.add(tuple(sorted(canonical)), sign)

    logger.debug(f"Polynomial of {list(t.partition)}: {len(poly)} terms")
    return poly


# Reference invariant of the 2,2,2,2 tableau (twice the published half-polynomial)
AGAOKA_B2222: Dict[TermKey, int] = {
    ((1, 2, 3, 4), (1, 2, 3, 4)): 2,
    ((1, 4, 2, 3), (1, 4, 2, 3)): 2,
    ((1, 3, 2, 4), (1, 3, 2, 4)): 2,
    ((1, 2, 1, 2), (3, 4, 3, 4)): 2,
    ((1, 3, 1, 3), (2, 4, 2, 4)): 2,
    ((1, 4, 1, 4), (2, 3, 2, 3)): 2,
    ((1, 2, 1, 4), (2, 3, 3, 4)): 4,
    ((1, 2, 2, 3), (1, 4, 3, 4)): 4,
    ((1, 2, 1, 3), (2, 4, 3, 4)): -4,
    ((1, 2, 2, 4), (1, 3, 3, 4)): -4,
    ((1, 3, 1, 4), (2, 3, 2, 4)): -4,
    ((1, 3, 2, 3), (1, 4, 2, 4)): -4,
}


def compare_polynomials(computed: TensorPolynomial, reference: Dict[TermKey, int]) -> List[str]:
    """Differences as readable lines; an empty list means the two agree."""
    expected = TensorPolynomial(dict(reference))
    differences = []
    for key in sorted(set(computed.terms) | set(expected.terms)):
        got = computed.terms.get(key, 0)
        want = expected.terms.get(key, 0)
        if got != want:
            differences.append(f"{_format_key(key)}: computed {got}, expected {want}")
    return differences


if __name__ == "__main__":
    tableau = build_tableau([2, 2, 2, 2])
    print(tableau)
    poly = build_polynomial(tableau)
    print(poly.format_human())
    diff = compare_polynomials(poly, AGAOKA_B2222)
    print("✓ matches reference" if not diff else f"✗ {len(diff)} differences")
