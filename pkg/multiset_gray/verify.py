#!/usr/bin/env python3
"""
Correctness oracles for multiset_gray
Per-step Gray checks, exactly-once checks against the lexicographic listing,
circularity, the marked-zero combination lemma and small transposition graphs.
"""

import logging
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional, Sequence

import networkx as nx

from . import config
from .core import (
    GrayTrace,
    MultisetSpec,
    Transposition,
    enumerate_lex,
    format_permutation,
    multinomial_count,
    transposition_between,
)
from .errors import CapExceeded, LengthMismatch
from .oriented import EMPTY
from .refgens import ONE, check_nk, erase_marks, format_marked, ruskey_c_marked

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StepReport:
    """
    Outcome of comparing two consecutive states.

    width is 0 when the states are not related by a single transposition.
    """

    is_transposition: bool
    move: Optional[Transposition]
    width: int
    strong_homogeneous: bool
    adjacent: bool

    def to_dict(self) -> Dict:
        return {
            "is_transposition": self.is_transposition,
            "move": str(self.move) if self.move else None,
            "width": self.width,
            "strong_homogeneous": self.strong_homogeneous,
            "adjacent": self.adjacent,
        }


def check_gray_step(prev: Sequence, nxt: Sequence) -> StepReport:
    """
    Check that nxt follows prev by one transposition, and whether every
    element strictly between the exchanged positions equals the smaller of
    the two exchanged values.

    Example:
        >>> r = check_gray_step((1, 1, 2, 2, 3, 3), (1, 2, 1, 2, 3, 3))
        >>> str(r.move), r.strong_homogeneous
        ('(2,3)', True)

    Raises:
        LengthMismatch: If the states differ in length
    """
    if len(prev) != len(nxt):
        raise LengthMismatch(f"cannot compare states of length {len(prev)} and {len(nxt)}")

    move = transposition_between(prev, nxt)
    if move is None:
        return StepReport(False, None, 0, False, False)

    smaller = min(prev[move.i - 1], prev[move.j - 1])
    strong = all(prev[c] == smaller for c in range(move.i, move.j - 1))
    return StepReport(True, move, move.width, strong, move.width == 1)


@dataclass
class ExactlyOnceReport:
    spec: MultisetSpec
    count: int
    expected_count: int
    all_members: bool
    no_duplicates: bool
    covers_all: bool
    all_steps_strong: bool
    failures: List[str] = field(default_factory=list)

    @property
    def count_matches(self) -> bool:
        return self.count == self.expected_count

    @property
    def passed(self) -> bool:
        return (
            self.all_members
            and self.no_duplicates
            and self.covers_all
            and self.count_matches
            and self.all_steps_strong
        )

    def to_dict(self) -> Dict:
        record = asdict(self)
        record["spec"] = str(self.spec)
        record["count_matches"] = self.count_matches
        record["passed"] = self.passed
        return record

    def to_lines(self) -> List[str]:
        lines = [
            f"multiset: {self.spec}",
            f"count: {self.count}",
            f"expected_count: {self.expected_count}",
            f"all_members: {self.all_members}",
            f"no_duplicates: {self.no_duplicates}",
            f"covers_all: {self.covers_all}",
            f"all_steps_strong: {self.all_steps_strong}",
        ]
        lines.extend(f"failure: {message}" for message in self.failures)
        lines.append(f"passed: {self.passed}")
        return lines


def check_exactly_once(trace: GrayTrace, spec: MultisetSpec, cap: Optional[int] = None) -> ExactlyOnceReport:
    """
    Compare a trace with the lexicographic listing of spec.

    A sorted copy of the states is compared element-wise with enumerate_lex,
    so no hashing is involved. Failed checks are recorded in the report;
    nothing is raised for them.

    Args:
        trace: States to check (tuples of element types)
        spec: Multiset the trace should list
        cap: Largest accepted listing (default: config.DEFAULT_CAP)

    Returns:
        ExactlyOnceReport
    """
    expected = enumerate_lex(spec, cap)
    start = sorted(spec.sorted_start())
    states = [tuple(s) for s in trace.states]
    failures: List[str] = []

    all_members = True
    for index, state in enumerate(states):
        if sorted(state) != start:
            all_members = False
            failures.append(f"state {index + 1} {format_permutation(state)} is not a permutation of {spec}")
            break

    ordered = sorted(states)
    no_duplicates = True
    for a, b in zip(ordered, ordered[1:]):
        if a == b:
            no_duplicates = False
            failures.append(f"{format_permutation(a)} emitted more than once")
            break

    covers_all = ordered == expected
    if not covers_all and all_members and no_duplicates:
        missing = len(expected) - len(ordered)
        failures.append(f"{missing} permutations never emitted")

    all_strong = True
    for index, (prev, nxt) in enumerate(zip(states, states[1:]), start=1):
        if len(prev) != len(nxt):
            all_strong = False
            failures.append(f"step {index} changes the length")
            break
        report = check_gray_step(prev, nxt)
        if not (report.is_transposition and report.strong_homogeneous):
            all_strong = False
            failures.append(
                f"step {index} {format_permutation(prev)} -> {format_permutation(nxt)} "
                f"is not a strong homogeneous transposition"
            )
            break

    result = ExactlyOnceReport(
        spec=spec,
        count=len(states),
        expected_count=multinomial_count(spec),
        all_members=all_members,
        no_duplicates=no_duplicates,
        covers_all=covers_all,
        all_steps_strong=all_strong,
        failures=failures,
    )
    if not result.passed:
        logger.warning(f"Exactly-once check failed for {spec}: {failures}")
    return result


def check_circular(trace: GrayTrace) -> StepReport:
    """The step from the last state back to the first."""
    return check_gray_step(trace.last, trace.first)


def project_oriented_trace(trace: GrayTrace) -> GrayTrace:
    """
    Map an oriented run to two-type permutations: oriented cells become 1,
    empty cells 2. The moves carry over unchanged.
    """
    states = [tuple(2 if c == EMPTY else 1 for c in s) for s in trace.states]
    return GrayTrace(states=states, steps=list(trace.steps))


@dataclass
class LemmaReport:
    n: int
    k: int
    length: int
    first_ok: bool
    last_ok: Optional[bool]  # None when k is 0 or n
    steps_ok: bool
    marked_steps: int = 0  # steps that swap one marked zero with a one, marks kept
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.first_ok and self.last_ok is not False and self.steps_ok

    def to_dict(self) -> Dict:
        record = asdict(self)
        record["passed"] = self.passed
        return record

    def to_lines(self) -> List[str]:
        lines = [
            f"n: {self.n}",
            f"k: {self.k}",
            f"length: {self.length}",
            f"first_element: {self.first_ok}",
            f"last_element: {'vacuous' if self.last_ok is None else self.last_ok}",
            f"steps: {self.steps_ok}",
            f"marked_steps: {self.marked_steps}/{max(self.length - 1, 0)}",
        ]
        lines.extend(f"failure: {message}" for message in self.failures)
        lines.append(f"passed: {self.passed}")
        return lines


def _swaps_zero_and_one(a: Sequence, b: Sequence, one) -> bool:
    diff = [pos for pos in range(len(a)) if a[pos] != b[pos]]
    if len(diff) != 2:
        return False
    i, j = diff
    if a[i] != b[j] or a[j] != b[i]:
        return False
    return (a[i] == one) != (a[j] == one)


def verify_marked_lemma(n: int, k: int) -> LemmaReport:
    """
    Check the marked combination list C'(n,k).

    1. The first element is 1^k 0_0 0_1 .. 0_{n-k-1}.
    2. For 0 < k < n the last element is 1^{k-1} 0_{n-k-1} 0_0 .. 0_{n-k-2} 1.
    3. Consecutive elements differ by exchanging a zero and a one.

    Point 3 is checked on the elements with their marks erased. At the
    junction of the two recursive blocks the marks are relabelled, e.g.
    1 0_0 1 0_1 -> 0_0 0_1 1 1 in C'(4,2), so the steps that keep every
    mark in place are only counted in marked_steps.

    Example:
        >>> verify_marked_lemma(4, 2).marked_steps
        3
    """
    check_nk(n, k)
    marked = ruskey_c_marked(n, k)
    zeros = n - k
    failures: List[str] = []

    first_expected = (ONE,) * k + tuple(range(zeros))
    first_ok = marked[0] == first_expected
    if not first_ok:
        failures.append(f"first element {format_marked(marked[0])}")

    last_ok: Optional[bool] = None
    if 0 < k < n:
        last_expected = (ONE,) * (k - 1) + (zeros - 1,) + tuple(range(zeros - 1)) + (ONE,)
        last_ok = marked[-1] == last_expected
        if not last_ok:
            failures.append(f"last element {format_marked(marked[-1])}")

    steps_ok = True
    marked_steps = 0
    for index, (a, b) in enumerate(zip(marked, marked[1:]), start=1):
        if _swaps_zero_and_one(a, b, ONE):
            marked_steps += 1
        elif steps_ok and not _swaps_zero_and_one(erase_marks(a), erase_marks(b), 1):
            steps_ok = False
            failures.append(f"step {index}: {format_marked(a)} -> {format_marked(b)}")

    report = LemmaReport(n, k, len(marked), first_ok, last_ok, steps_ok, marked_steps, failures)
    if not report.passed:
        logger.warning(f"Marked combination lemma fails for n={n}, k={k}: {failures}")
    return report


@dataclass
class GraphReport:
    vertex_count: int
    edge_count: int
    has_hamilton_path: Optional[bool]  # None when the search was skipped
    graph: nx.Graph = field(repr=False, compare=False)

    def to_dict(self) -> Dict:
        return {
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "has_hamilton_path": self.has_hamilton_path,
        }

    def to_lines(self) -> List[str]:
        found = "skipped" if self.has_hamilton_path is None else self.has_hamilton_path
        return [
            f"vertices: {self.vertex_count}",
            f"edges: {self.edge_count}",
            f"hamilton_path: {found}",
        ]


def _hamilton_from(graph: nx.Graph, start) -> bool:
    total = graph.number_of_nodes()
    path = [start]
    visited = {start}
    stack = [iter(sorted(graph[start], key=graph.degree))]

    while stack:
        if len(path) == total:
            return True
        advanced = False
        for node in stack[-1]:
            if node not in visited:
                path.append(node)
                visited.add(node)
                stack.append(iter(sorted(graph[node], key=graph.degree)))
                advanced = True
                break
        if not advanced:
            stack.pop()
            visited.discard(path.pop())
    return False


def find_hamilton_path(graph: nx.Graph) -> bool:
    """
    Exhaustive backtracking search for a Hamilton path.

    A disconnected graph or one with more than two degree-one vertices has
    none. When degree-one vertices exist the path must start at one of them.
    """
    total = graph.number_of_nodes()
    if total <= 1:
        return True
    if not nx.is_connected(graph):
        return False

    leaves = [node for node, degree in graph.degree if degree == 1]
    if len(leaves) > 2:
        return False
    starts = leaves[:1] if leaves else sorted(graph.nodes)
    return any(_hamilton_from(graph, start) for start in starts)


def transposition_graph(
    spec: MultisetSpec,
    max_width: int = 1,
    hamilton: bool = True,
    cap: Optional[int] = None,
) -> GraphReport:
    """
    Graph on all permutations of spec; edges join permutations that differ
    by a transposition of width at most max_width.

    Example:
        >>> report = transposition_graph(MultisetSpec((2, 2)))
        >>> report.vertex_count, report.edge_count, report.has_hamilton_path
        (6, 6, False)

    Args:
        spec: Multiset whose permutations are the vertices
        max_width: Widest transposition that makes an edge
        hamilton: Run the Hamilton path search
        cap: Largest vertex count for the search (default:
            config.HAMILTON_MAX_VERTICES)

    Raises:
        CapExceeded: If the search is requested above the cap
    """
    vertices = enumerate_lex(spec)
    cap = config.HAMILTON_MAX_VERTICES if cap is None else cap
    if hamilton and len(vertices) > cap:
        raise CapExceeded(f"Hamilton search on {spec}", len(vertices), cap)

    graph = nx.Graph()
    for p in vertices:
        graph.add_node(p, label=format_permutation(p))
    n = spec.n
    for p in vertices:
        for i in range(n):
            for j in range(i + 1, min(i + max_width, n - 1) + 1):
                if p[i] == p[j]:
                    continue
                q = list(p)
                q[i], q[j] = q[j], q[i]
                graph.add_edge(p, tuple(q), label=str(Transposition(i + 1, j + 1)))

    found = find_hamilton_path(graph) if hamilton else None
    logger.debug(
        f"Transposition graph of {spec}: {graph.number_of_nodes()} vertices, "
        f"{graph.number_of_edges()} edges, hamilton={found}"
    )
    return GraphReport(graph.number_of_nodes(), graph.number_of_edges(), found, graph)


def graph_to_dot(report: GraphReport) -> str:
    """
    DOT text: vertices named by their permutations, edges labelled "(i,j)".

    Vertices and edges are written in lexicographic order, so equal graphs
    give identical text.
    """
    graph = report.graph
    lines = ["graph transpositions {"]
    for p in sorted(graph.nodes):
        lines.append(f'  "{format_permutation(p)}";')
    for p, q in sorted(tuple(sorted(edge)) for edge in graph.edges):
        label = graph.edges[p, q]["label"]
        lines.append(f'  "{format_permutation(p)}" -- "{format_permutation(q)}" [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

