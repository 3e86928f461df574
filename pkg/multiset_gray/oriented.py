#!/usr/bin/env python3
"""
Oriented combination runs
Strings over {o, <, >}: k oriented elements walk over n cells by
transpositions, one iteration at a time.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .core import GrayTrace, Transposition
from .errors import InvalidArgs, NoOrientedSymbol

logger = logging.getLogger(__name__)

EMPTY = "o"
LEFT = "<"
RIGHT = ">"

# Rule numbers as the run tables print them
RULE_FLIP = 6
RULE_ADJACENT = 2
RULE_LEFT_JUMP = 3
RULE_RIGHT_JUMP = 4

_NEGATION = str.maketrans({LEFT: RIGHT, RIGHT: LEFT})


@dataclass(frozen=True)
class IterationOutcome:
    """Result of one iteration; move is None exactly for the terminal iteration."""

    next: str
    move: Optional[Transposition]
    rules_fired: Tuple[int, ...]


def _validate(s: str) -> None:
    bad = set(s) - {EMPTY, LEFT, RIGHT}
    if bad:
        raise InvalidArgs(f"oriented state may only hold 'o', '<', '>': {s!r}")
    if LEFT not in s and RIGHT not in s:
        raise NoOrientedSymbol(f"state {s!r} has no oriented element")


def negate(s: str) -> str:
    """
    Exchange '<' and '>' position-wise, keeping 'o'.

    Example:
        >>> negate("o<oo<>")
        'o>oo><'
    """
    return s.translate(_NEGATION)


def reduce(s: str) -> str:
    """
    Delete the rightmost oriented symbol.

    Example:
        >>> reduce(">oo>>o")
        '>oo>o'
    """
    _validate(s)
    pos = max(s.rfind(LEFT), s.rfind(RIGHT))
    return s[:pos] + s[pos + 1:]


def project(s: str) -> str:
    """Forget orientations: every oriented cell becomes 'x'."""
    return s.replace(LEFT, "x").replace(RIGHT, "x")


def iterate(s: str) -> IterationOutcome:
    """
    Run one iteration on an oriented state.

    The active element starts as the rightmost oriented cell. It looks for the
    nearest empty cell in the direction it faces; if every cell in between
    faces the same way it jumps there (crossed cells turn '>'). Otherwise it
    turns around and activity passes to the next oriented cell on its left.
    When no element can move, every element has turned: the result is
    negate(s) and move is None.

    Args:
        s: State over {o, <, >} with at least one oriented cell

    Returns:
        IterationOutcome with the new state, the move and the rules fired

    Raises:
        NoOrientedSymbol: If s holds no '<' or '>'
    """
    _validate(s)
    cells = list(s)
    n = len(cells)
    rules: List[int] = []

    active = n - 1
    while cells[active] == EMPTY:
        active -= 1

    while active >= 0:
        facing = cells[active]
        step = 1 if facing == RIGHT else -1

        target = active + step
        while 0 <= target < n and cells[target] != EMPTY:
            target += step

        if 0 <= target < n and all(cells[c] == facing for c in range(min(active, target) + 1, max(active, target))):
            lo, hi = min(active, target), max(active, target)
            cells[target] = facing
            cells[active] = EMPTY
            for c in range(lo + 1, hi):
                cells[c] = RIGHT

            if hi - lo == 1:
                rules.append(RULE_ADJACENT)
            elif facing == LEFT:
                rules.append(RULE_LEFT_JUMP)
            else:
                rules.append(RULE_RIGHT_JUMP)
            return IterationOutcome("".join(cells), Transposition(lo + 1, hi + 1), tuple(rules))

        cells[active] = LEFT if facing == RIGHT else RIGHT
        rules.append(RULE_FLIP)

        active -= 1
        while active >= 0 and cells[active] == EMPTY:
            active -= 1

    return IterationOutcome("".join(cells), None, tuple(rules))


def run(initial: str) -> GrayTrace:
    """
    Iterate from initial until the terminal iteration.

    The trace holds every emitted state and, in trace.rules, the rules that
    produced each one (empty for the initial state). From part_a_initial(n, k)
    and part_b_initial(...) every placement is emitted exactly once.
    """
    _validate(initial)
    states = [initial]
    steps: List[Optional[Transposition]] = []
    rules: List[Tuple[int, ...]] = [()]

    current = initial
    while True:
        outcome = iterate(current)
        if outcome.move is None:
            break
        current = outcome.next
        states.append(current)
        steps.append(outcome.move)
        rules.append(outcome.rules_fired)

    logger.debug(f"Oriented run from {initial} emitted {len(states)} states")
    return GrayTrace(states=states, steps=steps, rules=rules)


def part_a_initial(n: int, k: int) -> str:
    """'>' * k followed by 'o' * (n - k)."""
    if not 1 <= k <= n:
        raise InvalidArgs(f"part a needs 1 <= k <= n, got n={n}, k={k}")
    return RIGHT * k + EMPTY * (n - k)


def part_b_initial(final_state: str) -> str:
    """The negation of a finished part-a run's last state."""
    return negate(final_state)


def format_run(trace: GrayTrace) -> List[str]:
    """Numbered rows "index<TAB>state<TAB>rules" in the run tables' layout."""
    rules = trace.rules or [()] * len(trace.states)
    return [
        f"{index}\t{state}\t{','.join(str(r) for r in fired)}"
        for index, (state, fired) in enumerate(zip(trace.states, rules), start=1)
    ]


if __name__ == "__main__":
    # Demo: the three-in-six run and its mirror
    part_a = run(part_a_initial(6, 3))
    for row in format_run(part_a):
        print(row)
    print()
    part_b = run(part_b_initial(part_a.last))
    print(f"Part b from {part_b.first}: {len(part_b)} states, ends {part_b.last}")
