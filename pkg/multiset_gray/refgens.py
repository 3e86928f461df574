#!/usr/bin/env python3
"""
Reference Gray codes
Steinhaus-Johnson-Trotter, the recursive combination lists C(n,k) and their
marked-zero variant, and the Eades-McKay chord list E(n,k).
"""

import logging
import math
from functools import lru_cache
from typing import List, Optional, Tuple

from . import config
from .core import GrayTrace, Permutation, check_cap
from .errors import CapExceeded, InvalidArgs

logger = logging.getLogger(__name__)

BitString = Tuple[int, ...]

# A marked string holds ONE for a one and the index i >= 0 for the zero 0_i
MarkedString = Tuple[int, ...]
ONE = -1

SJT_CONVENTIONS = ("smallest", "largest")


def check_nk(n: int, k: int) -> None:
    if n < 0 or k < 0 or k > n:
        raise InvalidArgs(f"need 0 <= k <= n, got n={n}, k={k}")


def sjt_generate(n: int, convention: str = "smallest", max_n: Optional[int] = None) -> GrayTrace:
    """
    All permutations of 1..n by adjacent transpositions (directed elements).

    With convention "smallest" every element starts facing right, the
    smallest mobile element moves (mobile: it faces a larger neighbour) and
    all smaller elements turn around afterwards: 1234, 2134, 2314, 2341, ...
    With "largest" it is the textbook mirror image: elements face left, the
    largest mobile element moves and larger ones turn: 1234, 1243, 1423, ...

    Args:
        n: Number of distinct elements, n >= 1
        convention: "smallest" or "largest"
        max_n: Upper bound on n (default: config.SJT_MAX_N)

    Raises:
        InvalidArgs: If n < 1 or the convention is unknown
        CapExceeded: If n exceeds max_n
    """
    if n < 1:
        raise InvalidArgs(f"n must be at least 1, got {n}")
    if convention not in SJT_CONVENTIONS:
        raise InvalidArgs(f"unknown convention {convention!r}")
    max_n = config.SJT_MAX_N if max_n is None else max_n
    if n > max_n:
        raise CapExceeded("SJT listing size n", n, max_n)

    smallest = convention == "smallest"
    perm = list(range(1, n + 1))
    facing = {value: (1 if smallest else -1) for value in perm}
    states: List[Permutation] = [tuple(perm)]

    while True:
        chosen = None
        for pos, value in enumerate(perm):
            neighbour = pos + facing[value]
            if not 0 <= neighbour < n:
                continue
            beats = perm[neighbour] > value if smallest else perm[neighbour] < value
            if not beats:
                continue
            if chosen is None or (value < perm[chosen] if smallest else value > perm[chosen]):
                chosen = pos
        if chosen is None:
            break

        value = perm[chosen]
        neighbour = chosen + facing[value]
        perm[chosen], perm[neighbour] = perm[neighbour], perm[chosen]
        for other in facing:
            if (other < value) if smallest else (other > value):
                facing[other] = -facing[other]
        states.append(tuple(perm))

    return GrayTrace.from_states(states)


@lru_cache(maxsize=None)
def _ruskey(n: int, k: int) -> Tuple[BitString, ...]:
    if k == 0:
        return ((0,) * n,)
    if k == n:
        return ((1,) * n,)
    head = tuple(s + (0,) for s in _ruskey(n - 1, k))
    tail = tuple(s + (1,) for s in reversed(_ruskey(n - 1, k - 1)))
    return head + tail


def ruskey_c(n: int, k: int, cap: Optional[int] = None) -> List[BitString]:
    """
    The recursive combination list C(n,k).

    C(n,0) = 0^n, C(n,n) = 1^n, otherwise C(n-1,k)·0 followed by the
    reversed C(n-1,k-1)·1.

    Example:
        >>> ["".join(map(str, s)) for s in ruskey_c(4, 2)]
        ['1100', '0110', '1010', '0011', '0101', '1001']
    """
    check_nk(n, k)
    check_cap(f"C({n},{k})", math.comb(n, k), cap)
    return list(_ruskey(n, k))


@lru_cache(maxsize=None)
def _ruskey_marked(n: int, k: int) -> Tuple[MarkedString, ...]:
    if k == 0:
        return (tuple(range(n)),)
    if k == n:
        return ((ONE,) * n,)
    zeros = n - k
    head = tuple(s + (zeros - 1,) for s in _ruskey_marked(n - 1, k))
    tail = tuple(
        tuple(ONE if c == ONE else (c - 1) % zeros for c in s) + (ONE,)
        for s in reversed(_ruskey_marked(n - 1, k - 1))
    )
    return head + tail


def ruskey_c_marked(n: int, k: int, cap: Optional[int] = None) -> List[MarkedString]:
    """
    C(n,k) with the zeros marked 0_0 .. 0_{n-k-1}.

    The reversed branch subtracts one from every zero index modulo n - k.
    """
    check_nk(n, k)
    check_cap(f"C'({n},{k})", math.comb(n, k), cap)
    return list(_ruskey_marked(n, k))


def erase_marks(s: MarkedString) -> BitString:
    return tuple(1 if c == ONE else 0 for c in s)


def format_marked(s: MarkedString) -> str:
    """Tokens "1" and "0_i" separated by spaces."""
    return " ".join("1" if c == ONE else f"0_{c}" for c in s)


@lru_cache(maxsize=None)
def _eades_mckay(n: int, k: int) -> Tuple[BitString, ...]:
    if k == 0:
        return ((0,) * n,)
    if k == n:
        return ((1,) * n,)
    if k == 1:
        return tuple(tuple(1 if pos == one else 0 for pos in range(n)) for one in range(n))
    first = tuple(s + (0,) for s in _eades_mckay(n - 1, k))
    middle = tuple(s + (0, 1) for s in reversed(_eades_mckay(n - 2, k - 1)))
    last = tuple(s + (1, 1) for s in _eades_mckay(n - 2, k - 2))
    return first + middle + last


def eades_mckay(n: int, k: int, cap: Optional[int] = None) -> GrayTrace:
    """
    The chord list E(n,k) as a trace.

    E(n,0) = 0^n, E(n,1) = 10..0, 010..0, .., 0..01, E(n,n) = 1^n and
    otherwise E(n-1,k)·0, reversed E(n-2,k-1)·01, E(n-2,k-2)·11.
    """
    check_nk(n, k)
    check_cap(f"E({n},{k})", math.comb(n, k), cap)
    return GrayTrace.from_states(_eades_mckay(n, k))


def bitstring_trace(strings: List[BitString]) -> GrayTrace:
    return GrayTrace.from_states(strings)


def format_bits(s: BitString) -> str:
    return "".join(str(b) for b in s)
