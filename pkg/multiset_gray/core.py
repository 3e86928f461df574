#!/usr/bin/env python3
"""
Core multiset types for multiset_gray
Multiset specs, transpositions, traces, counting and the lexicographic oracle
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from . import config
from .errors import CapExceeded, IndexOutOfRange, InvalidSpec

logger = logging.getLogger(__name__)

Permutation = Tuple[int, ...]


@dataclass(frozen=True)
class MultisetSpec:
    """
    Multiplicities m_1..m_k of the element types 1..k.

    Example:
        >>> spec = MultisetSpec((2, 2, 2))
        >>> spec.n, spec.k
        (6, 3)
    """

    multiplicities: Tuple[int, ...]

    def __post_init__(self):
        mults = tuple(self.multiplicities)
        if not mults:
            raise InvalidSpec("multiset needs at least one element type")
        for t, m in enumerate(mults, start=1):
            if not isinstance(m, int) or isinstance(m, bool) or m < 1:
                raise InvalidSpec(f"multiplicity of type {t} must be a positive integer, got {m!r}")
        object.__setattr__(self, "multiplicities", mults)

    @classmethod
    def from_mapping(cls, counts: Mapping[int, int]) -> "MultisetSpec":
        """Build from {type: multiplicity}; types must be exactly 1..k."""
        types = sorted(counts)
        if types != list(range(1, len(types) + 1)):
            raise InvalidSpec(f"element types must be 1..k, got {types}")
        return cls(tuple(counts[t] for t in types))

    @property
    def k(self) -> int:
        return len(self.multiplicities)

    @property
    def n(self) -> int:
        return sum(self.multiplicities)

    def sorted_start(self) -> Permutation:
        """The non-decreasing arrangement 1^{m_1} 2^{m_2} ... k^{m_k}."""
        return tuple(t for t, m in enumerate(self.multiplicities, start=1) for _ in range(m))

    def __str__(self) -> str:
        return ",".join(str(m) for m in self.multiplicities)


@dataclass(frozen=True, order=True)
class Transposition:
    """Exchange of positions i < j (1-based)."""

    i: int
    j: int

    def __post_init__(self):
        if self.i < 1 or self.j <= self.i:
            raise IndexOutOfRange(f"transposition needs 1 <= i < j, got ({self.i},{self.j})")

    @property
    def width(self) -> int:
        return self.j - self.i

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


@dataclass
class GrayTrace:
    """
    Ordered states with the transposition that produced each one.

    steps[t] turns states[t] into states[t + 1]; a step is None when the two
    states are not related by a single transposition. rules optionally holds
    the per-state rule annotation (oriented runs).
    """

    states: List[Sequence]
    steps: List[Optional[Transposition]] = field(default_factory=list)
    rules: Optional[List[Tuple[int, ...]]] = None

    @classmethod
    def from_states(cls, states: Sequence[Sequence]) -> "GrayTrace":
        states = list(states)
        steps = [transposition_between(a, b) for a, b in zip(states, states[1:])]
        return cls(states=states, steps=steps)

    @property
    def signs(self) -> List[int]:
        return [1 if t % 2 == 0 else -1 for t in range(len(self.states))]

    @property
    def first(self):
        return self.states[0]

    @property
    def last(self):
        return self.states[-1]

    def __len__(self) -> int:
        return len(self.states)


def multinomial_count(spec: MultisetSpec) -> int:
    """
    Number of distinct permutations n! / (m_1! ... m_k!), exact.

    Example:
        >>> multinomial_count(MultisetSpec((2, 2, 1, 1)))
        180
    """
    count = 1
    placed = 0
    for m in spec.multiplicities:
        placed += m
        count *= math.comb(placed, m)
    return count


def check_cap(what: str, size: int, cap: Optional[int]) -> int:
    """Raise CapExceeded when size > cap; returns the effective cap."""
    cap = config.DEFAULT_CAP if cap is None else cap
    if size > cap:
        raise CapExceeded(what, size, cap)
    return cap


def iter_lex(spec: MultisetSpec) -> Iterator[Permutation]:
    """Distinct permutations in lexicographic order (next-permutation sweep)."""
    seq = list(spec.sorted_start())
    last = len(seq)
    yield tuple(seq)

    while True:
        pivot = last - 2
        while pivot >= 0 and seq[pivot] >= seq[pivot + 1]:
            pivot -= 1
        if pivot < 0:
            return
        succ = last - 1
        while seq[succ] <= seq[pivot]:
            succ -= 1
        seq[pivot], seq[succ] = seq[succ], seq[pivot]
        seq[pivot + 1:] = reversed(seq[pivot + 1:])
        yield tuple(seq)


def enumerate_lex(spec: MultisetSpec, cap: Optional[int] = None) -> List[Permutation]:
    """
    All distinct permutations of the multiset, strictly increasing.

    Args:
        spec: Multiset to enumerate
        cap: Largest accepted count (default: config.DEFAULT_CAP)

    Returns:
        List of permutation tuples, length multinomial_count(spec)

    Raises:
        CapExceeded: If the count exceeds the cap

    Example:
        >>> enumerate_lex(MultisetSpec((2, 1)))
        [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    """
    count = multinomial_count(spec)
    check_cap(f"lexicographic listing of {spec}", count, cap)
    logger.debug(f"Enumerating {count} permutations of {spec} lexicographically")
    return list(iter_lex(spec))


def apply_transposition(p: Sequence, t: Union[Transposition, Tuple[int, int]]):
    """
    Copy of p with the symbols at positions t.i and t.j exchanged.

    Strings stay strings, everything else comes back as a tuple.

    Raises:
        IndexOutOfRange: If t is degenerate or reaches past len(p)
    """
    if not isinstance(t, Transposition):
        t = Transposition(*t)
    if t.j > len(p):
        raise IndexOutOfRange(f"transposition {t} outside 1..{len(p)}")

    cells = list(p)
    cells[t.i - 1], cells[t.j - 1] = cells[t.j - 1], cells[t.i - 1]
    if isinstance(p, str):
        return "".join(cells)
    return tuple(cells)


def transposition_between(a: Sequence, b: Sequence) -> Optional[Transposition]:
    """The transposition turning a into b, or None if there is none."""
    if len(a) != len(b):
        return None
    diff = [pos for pos, (x, y) in enumerate(zip(a, b)) if x != y]
    if len(diff) != 2:
        return None
    i, j = diff
    if a[i] == b[j] and a[j] == b[i]:
        return Transposition(i + 1, j + 1)
    return None


def format_permutation(p: Sequence[int]) -> str:
    """Digits when every symbol is at most 9 ("112233"), otherwise "1,10,2"."""
    if all(0 <= s <= 9 for s in p):
        return "".join(str(s) for s in p)
    return ",".join(str(s) for s in p)


def parse_permutation(text: str) -> Permutation:
    text = text.strip()
    if "," in text:
        return tuple(int(tok) for tok in text.split(","))
    return tuple(int(ch) for ch in text)


def parse_multiset(text: str) -> MultisetSpec:
    """
    Parse "m1,m2,..." into a MultisetSpec.

    Raises:
        InvalidSpec: On anything but a comma-separated list of positive integers
    """
    try:
        mults = tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise InvalidSpec(f"multiset must look like 2,2,1 - got {text!r}")
    return MultisetSpec(mults)
