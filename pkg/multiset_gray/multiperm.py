#!/usr/bin/env python3
"""
Multiset permutation generator
Emits every permutation of a multiset exactly once; consecutive permutations
differ by one transposition whose in-between elements all equal the smaller
of the two exchanged values.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional

from .core import (
    GrayTrace,
    MultisetSpec,
    Permutation,
    Transposition,
    check_cap,
    multinomial_count,
)
from .errors import Exhausted

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StepRecord:
    """One emission; move and active_type are None for the first one."""

    permutation: Permutation
    move: Optional[Transposition]
    active_type: Optional[int]


class MultisetGenerator:
    """
    Constant-storage generator state.

    Holds the arrangement P, one direction per position in V (+1 faces right,
    -1 faces left; a direction travels with its element), and T, the type of
    the last element that moved. T is None before the first emission and
    k + 1 once the generator is exhausted.

    Example:
        >>> gen = MultisetGenerator(MultisetSpec((2, 2, 2)))
        >>> gen.advance().permutation
        (1, 1, 2, 2, 3, 3)
        >>> str(gen.advance().move)
        '(2,3)'
    """

    __slots__ = ("spec", "P", "V", "T")

    def __init__(self, spec: MultisetSpec):
        self.spec = spec
        self.P: List[int] = list(spec.sorted_start())
        self.V: List[int] = [1] * spec.n
        self.T: Optional[int] = None

    @property
    def exhausted(self) -> bool:
        return self.T is not None and self.T > self.spec.k

    def advance(self) -> StepRecord:
        """
        Emit the next permutation.

        Scans types from 1 upwards. For the current type the elements are
        visited right to left; each looks for the nearest larger element in
        the direction it faces and exchanges with it when every element in
        between faces the same way (those then turn right). An element that
        cannot move turns around. A type whose elements all turned hands over
        to the next type. The largest type never moves.

        Returns:
            StepRecord for the new permutation

        Raises:
            Exhausted: Once every permutation has been emitted
        """
        if self.T is None:
            self.T = 1
            return StepRecord(tuple(self.P), None, None)
        if self.exhausted:
            raise Exhausted(f"all permutations of {self.spec} emitted")

        P, V = self.P, self.V
        n, k = self.spec.n, self.spec.k

        kind = 1
        while kind < k:
            bound = n
            while True:
                m = bound - 1
                while m >= 0 and P[m] != kind:
                    m -= 1
                if m < 0:
                    break
                bound = m

                facing = V[m]
                other = m + facing
                while 0 <= other < n and P[other] <= kind:
                    other += facing

                if 0 <= other < n:
                    lo, hi = (m, other) if m < other else (other, m)
                    if all(V[c] == facing for c in range(lo + 1, hi)):
                        P[m], P[other] = P[other], P[m]
                        V[m], V[other] = V[other], V[m]
                        for c in range(lo + 1, hi):
                            V[c] = 1
                        self.T = kind
                        return StepRecord(tuple(P), Transposition(lo + 1, hi + 1), kind)

                V[m] = -facing
            kind += 1

        self.T = k + 1
        raise Exhausted(f"all permutations of {self.spec} emitted")

    def __iter__(self) -> "MultisetGenerator":
        return self

    def __next__(self) -> StepRecord:
        try:
            return self.advance()
        except Exhausted:
            raise StopIteration

    def oriented_view(self, active_type: int = 1) -> str:
        """
        Render P with the active type's directions.

        Elements of active_type show as '>' or '<'. For a two-type multiset
        the other type shows as 'o' (">o>oo<"); otherwise the remaining
        elements keep their digits (">>2233").
        """
        two_types = self.spec.k == 2
        cells = []
        for value, facing in zip(self.P, self.V):
            if value == active_type:
                cells.append(">" if facing == 1 else "<")
            elif two_types:
                cells.append("o")
            else:
                cells.append(str(value))
        return "".join(cells)


def new_generator(spec: MultisetSpec) -> MultisetGenerator:
    """Fresh generator at 1^{m_1} ... k^{m_k}, all directions +1."""
    return MultisetGenerator(spec)


def iter_steps(spec: MultisetSpec, limit: Optional[int] = None) -> Iterator[StepRecord]:
    """Stream StepRecords; memory stays O(n) whatever the number emitted."""
    gen = MultisetGenerator(spec)
    emitted = 0
    for record in gen:
        if limit is not None and emitted >= limit:
            return
        yield record
        emitted += 1


def generate_all(spec: MultisetSpec, cap: Optional[int] = None) -> GrayTrace:
    """
    Drain a generator into a GrayTrace.

    Args:
        spec: Multiset to permute
        cap: Largest accepted count (default: config.DEFAULT_CAP)

    Returns:
        GrayTrace of multinomial_count(spec) permutations

    Raises:
        CapExceeded: If the count exceeds the cap
    """
    count = multinomial_count(spec)
    check_cap(f"generation of {spec}", count, cap)

    states: List[Permutation] = []
    steps: List[Optional[Transposition]] = []
    for record in MultisetGenerator(spec):
        states.append(record.permutation)
        if record.move is not None:
            steps.append(record.move)

    logger.debug(f"Generated {len(states)} permutations of {spec}")
    return GrayTrace(states=states, steps=steps)
