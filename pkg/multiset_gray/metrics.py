#!/usr/bin/env python3
"""
Width and total-motion accounting
Total motion of a Gray list is the sum of its transposition widths; the
comparison sweep sets the multiset generator against the Eades-McKay list.
"""

import csv
import io
import logging
import math
from collections import Counter
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from multiprocessing import Pool
from typing import Dict, Iterable, List, Optional, Tuple

from .core import GrayTrace, MultisetSpec, check_cap, transposition_between
from .errors import InvalidArgs, MultisetGrayError
from .multiperm import iter_steps
from .refgens import BitString, bitstring_trace, check_nk, eades_mckay, ruskey_c

logger = logging.getLogger(__name__)

ALGORITHMS = ("ours", "eades", "ruskey")
CSV_HEADER = ["n", "k", "W_B", "W_E", "W_E_complement", "exp_a", "exp_b", "exp_c"]


@dataclass
class MotionStats:
    """
    Widths of every step of a list.

    Example:
        >>> motion_from_widths([1, 1, 2])
        MotionStats(total_motion=4, width_histogram={1: 2, 2: 1}, step_count=3)
    """

    total_motion: int = 0
    width_histogram: Dict[int, int] = field(default_factory=dict)
    step_count: int = 0

    def to_dict(self) -> Dict:
        return asdict(self)

    def to_lines(self) -> List[str]:
        lines = [f"W={self.total_motion}", f"steps={self.step_count}"]
        lines.extend(f"width {w}: {c}" for w, c in sorted(self.width_histogram.items()))
        return lines


def motion_from_widths(widths: Iterable[int]) -> MotionStats:
    histogram = Counter(widths)
    return MotionStats(
        total_motion=sum(w * c for w, c in histogram.items()),
        width_histogram=dict(sorted(histogram.items())),
        step_count=sum(histogram.values()),
    )


def motion_stats(trace: GrayTrace) -> MotionStats:
    """
    Histogram over every step of trace; the wrap-around step is not counted.

    Raises:
        MultisetGrayError: If a step is not a transposition
    """
    widths = []
    for index, step in enumerate(trace.steps, start=1):
        if step is None:
            raise MultisetGrayError(f"step {index} of the trace is not a transposition")
        widths.append(step.width)
    return motion_from_widths(widths)


def _ours_widths(n: int, k: int) -> Iterable[int]:
    for record in iter_steps(MultisetSpec((k, n - k))):
        if record.move is not None:
            yield record.move.width


def motion_for_algorithm(n: int, k: int, algo: str = "ours", cap: Optional[int] = None) -> MotionStats:
    """
    Motion of the k-out-of-n list produced by one algorithm.

    "ours" streams the multiset generator on k ones and n - k twos, so
    nothing is materialized. "eades" and "ruskey" build their lists.

    Raises:
        InvalidArgs: On an unknown algorithm or k outside 0 < k < n for "ours"
        CapExceeded: If the list is larger than cap
    """
    check_nk(n, k)
    if algo == "ours":
        if not 0 < k < n:
            raise InvalidArgs(f"the multiset generator needs 0 < k < n, got n={n}, k={k}")
        return motion_from_widths(_ours_widths(n, k))
    if algo == "eades":
        return motion_stats(eades_mckay(n, k, cap))
    if algo == "ruskey":
        return motion_stats(bitstring_trace(ruskey_c(n, k, cap)))
    raise InvalidArgs(f"unknown algorithm {algo!r}; choose from {', '.join(ALGORITHMS)}")


def _junction_width(a: BitString, b: BitString) -> int:
    move = transposition_between(a, b)
    if move is None:
        raise MultisetGrayError(f"junction {a} -> {b} is not a transposition")
    return move.width


@lru_cache(maxsize=None)
def _eades_summary(n: int, k: int) -> Tuple[BitString, BitString, int]:
    if k == 0 or k == n:
        s = (1 if k else 0,) * n
        return s, s, 0
    if k == 1:
        return (1,) + (0,) * (n - 1), (0,) * (n - 1) + (1,), n - 1

    a_first, a_last, a_w = _eades_summary(n - 1, k)
    b_first, b_last, b_w = _eades_summary(n - 2, k - 1)
    c_first, c_last, c_w = _eades_summary(n - 2, k - 2)
    total = (
        a_w + b_w + c_w
        + _junction_width(a_last + (0,), b_last + (0, 1))
        + _junction_width(b_first + (0, 1), c_first + (1, 1))
    )
    return a_first + (0,), c_last + (1, 1), total


def eades_mckay_motion(n: int, k: int) -> int:
    """
    Total motion of E(n,k) without building the list.

    Each block keeps only its end points and its own motion; the junctions
    between blocks add one width each.
    """
    check_nk(n, k)
    return _eades_summary(n, k)[2]


@dataclass
class ComparisonRow:
    """
    W_B against W_E for one (n, k).

    exp_a: W_B equals the motion of E(n, n-k).
    exp_b: W_E > W_B, checked for 1 < k < n/2 (None otherwise).
    exp_c: W_E < W_B, checked for n/2 < k < n - 1 (None otherwise).
    At k = 1 and k = n - 1 both lists are the staircase with W = n - 1,
    so no strict relation can hold there.
    """

    n: int
    k: int
    W_B: int
    W_E: int
    W_E_complement: int
    exp_a: bool
    exp_b: Optional[bool]
    exp_c: Optional[bool]

    @property
    def holds(self) -> bool:
        return self.exp_a and self.exp_b is not False and self.exp_c is not False

    def to_dict(self) -> Dict:
        return asdict(self)


def comparison_row(n: int, k: int, w_b: int, w_e: int, w_e_complement: int) -> ComparisonRow:
    return ComparisonRow(
        n=n,
        k=k,
        W_B=w_b,
        W_E=w_e,
        W_E_complement=w_e_complement,
        exp_a=w_e_complement == w_b,
        exp_b=(w_e > w_b) if 1 < k and 2 * k < n else None,
        exp_c=(w_e < w_b) if 2 * k > n and k < n - 1 else None,
    )


def _rows_for_n(n: int) -> List[ComparisonRow]:
    w_e = {k: eades_mckay_motion(n, k) for k in range(1, n)}
    rows = []
    for k in range(1, n):
        w_b = motion_from_widths(_ours_widths(n, k)).total_motion
        rows.append(comparison_row(n, k, w_b, w_e[k], w_e[n - k]))
    return rows


def compare_motion(
    n_max: int,
    cap: Optional[int] = None,
    workers: int = 1,
    n_min: int = 2,
) -> List[ComparisonRow]:
    """
    Motion comparison for every 2 <= n <= n_max and 0 < k < n.

    Args:
        n_max: Largest n
        cap: Largest accepted binomial(n_max, n_max // 2)
            (default: config.DEFAULT_CAP)
        workers: Processes evaluating the per-n cells; 1 runs inline
        n_min: Smallest n (resumed sweeps start above stored sizes)

    Returns:
        Rows ordered by (n, k)

    Raises:
        InvalidArgs: If n_max < 2
        CapExceeded: If the largest list exceeds the cap
    """
    if n_max < 2:
        raise InvalidArgs(f"compare needs n_max >= 2, got {n_max}")
    check_cap(f"motion comparison up to n={n_max}", math.comb(n_max, n_max // 2), cap)
    sizes = range(max(2, n_min), n_max + 1)

    if workers > 1:
        with Pool(workers) as pool:
            per_n = list(pool.map(_rows_for_n, sizes))
    else:
        per_n = [_rows_for_n(n) for n in sizes]

    rows = [row for chunk in per_n for row in chunk]
    broken = [row for row in rows if not row.holds]
    if broken:
        logger.warning(f"{len(broken)} comparison rows break the expected relations, first {broken[0]}")
    logger.info(f"Compared motion for {len(rows)} (n, k) cells up to n={n_max}")
    return rows


def rows_to_csv(rows: Iterable[ComparisonRow]) -> str:
    """CSV text with the header n,k,W_B,W_E,W_E_complement,exp_a,exp_b,exp_c."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow([
            row.n, row.k, row.W_B, row.W_E, row.W_E_complement,
            row.exp_a,
            "" if row.exp_b is None else row.exp_b,
            "" if row.exp_c is None else row.exp_c,
        ])
    return buffer.getvalue()
