"""Interval-with-ends (IWE) diagrams: symbolic route templates on CCC_n.

A walk from the base vertex 00..0:1 to x = x_1..x_n:k is summarised on the
loop of cycle digits 1..n.  Circle every position whose cube bit must flip;
pick an arc (the interval) that covers all circles and has circled endpoints;
attach a directed initial end from 1 to the interval entry and a terminal end
from the interval exit to k.  The diagram length

    edges(initial end) + edges(terminal end) + edges(interval) + #circles

is the length of the best walk the diagram supports, and graph distance is
the minimum length over all diagrams for the pair.  Arbitrary vertex pairs
reduce to the base case through ``canonicalize`` (digit rotation + cube-word
translation, both adjacency-preserving).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator

import numpy as np

from .core import (
    Vertex,
    base_vertex,
    require_dimension,
    validate_vertex,
    vertex_count,
)


class Direction(Enum):
    INCREASING = "increasing"  # cycle digit steps +1 (..., n, 1, 2, ...)
    DECREASING = "decreasing"


_DIRS = (Direction.INCREASING, Direction.DECREASING)


@dataclass(frozen=True, slots=True)
class LoopArc:
    """Directed arc on the loop 1..n; edge count is always in 0..n-1."""

    start: int
    stop: int
    direction: Direction

    def edge_count(self, n: int) -> int:
        if self.direction is Direction.INCREASING:
            return (self.stop - self.start) % n
        return (self.start - self.stop) % n

    def positions(self, n: int) -> tuple[int, ...]:
        """Loop positions visited from start to stop, inclusive."""
        step = 1 if self.direction is Direction.INCREASING else -1
        p = self.start
        out = [p]
        for _ in range(self.edge_count(n)):
            p = (p - 1 + step) % n + 1
            out.append(p)
        return tuple(out)


@dataclass(frozen=True, slots=True)
class IweDiagram:
    """One diagram: circles, covering interval (absent when no circles), two ends.

    For an empty circled set the diagram degenerates to the single initial end
    running from 1 to the target cycle digit; interval and terminal end are None.
    """

    n: int
    circled: frozenset[int]
    interval: LoopArc | None
    initial_end: LoopArc
    terminal_end: LoopArc | None
    target_cycle_digit: int


def circled_set(x: Vertex, n: int) -> frozenset[int]:
    """Positions whose cube bit must change from 0 to 1 en route from the base."""
    validate_vertex(x, n)
    return frozenset(i for i in range(1, n + 1) if x.bit(i))


def _loop_dist(p: int, q: int, n: int) -> int:
    """Edge count of the shorter arc between loop positions p and q."""
    d = (q - p) % n
    return min(d, n - d)


def _gap_arcs(positions: list[int], n: int) -> list[tuple[int, int, int]]:
    """Interval candidates for a sorted circled set, one per deleted cyclic gap.

    Deleting the gap that runs increasing from positions[j] to its cyclic
    successor leaves the arc running increasing from that successor back to
    positions[j].  Returns (a, b, edges) with the arc spanning b..a increasing.
    """
    m = len(positions)
    out = []
    for j in range(m):
        a = positions[j]
        b = positions[(j + 1) % m]
        out.append((a, b, (a - b) % n))
    return out


def _candidates(
    positions: list[int], k: int, n: int
) -> Iterator[tuple[int, int, Direction, Direction, Direction, int]]:
    """All diagram candidates (entry, exit, interval dir, init dir, term dir, length).

    Enumeration order is the tie-break order: deleted gap by ascending lower
    position, entry endpoint lower-first, then Increasing before Decreasing
    for the initial and terminal ends.  Zero-length duplicates are retained.
    """
    m = len(positions)
    if m == 0:
        for d in _DIRS:
            length = (k - 1) % n if d is Direction.INCREASING else (1 - k) % n
            yield (1, k, d, d, d, length)
        return
    for a, b, interval_edges in _gap_arcs(positions, n):
        entries = (a,) if a == b else tuple(sorted((a, b)))
        for entry in entries:
            # the arc spans b..a increasing; entering at b walks it forward
            exit_ = a if entry == b else b
            interval_dir = (
                Direction.INCREASING if entry == b else Direction.DECREASING
            )
            for d1 in _DIRS:
                init = (entry - 1) % n if d1 is Direction.INCREASING else (1 - entry) % n
                for d2 in _DIRS:
                    term = (k - exit_) % n if d2 is Direction.INCREASING else (exit_ - k) % n
                    yield (entry, exit_, interval_dir, d1, d2, init + interval_edges + term + m)


def enumerate_diagrams(x: Vertex, n: int) -> list[IweDiagram]:
    """All IWE diagram candidates for the pair (base vertex, x).

    8m candidates for m >= 2 circled digits (m intervals x 2 entry endpoints
    x 2 x 2 end directions), 4 for m = 1, and the 2 single-end diagrams for
    m = 0.
    """
    validate_vertex(x, n)
    circles = circled_set(x, n)
    positions = sorted(circles)
    k = x.cycle_digit
    out = []
    if not positions:
        for d in _DIRS:
            out.append(
                IweDiagram(
                    n=n,
                    circled=circles,
                    interval=None,
                    initial_end=LoopArc(1, k, d),
                    terminal_end=None,
                    target_cycle_digit=k,
                )
            )
        return out
    for entry, exit_, interval_dir, d1, d2, _ in _candidates(positions, k, n):
        out.append(
            IweDiagram(
                n=n,
                circled=circles,
                interval=LoopArc(entry, exit_, interval_dir),
                initial_end=LoopArc(1, entry, d1),
                terminal_end=LoopArc(exit_, k, d2),
                target_cycle_digit=k,
            )
        )
    return out


def diagram_length(d: IweDiagram) -> int:
    """End edges + interval edges + one cube edge per circled digit."""
    total = d.initial_end.edge_count(d.n) + len(d.circled)
    if d.interval is not None:
        total += d.interval.edge_count(d.n)
    if d.terminal_end is not None:
        total += d.terminal_end.edge_count(d.n)
    return total


def _min_length(word: int, k: int, n: int) -> int:
    """Minimum diagram length from the base vertex to (word, k).

    Closed form of the candidate minimum: end directions minimise to loop
    distances independently, so only the m gap choices and 2 entry choices
    remain.  Exhaustively tested equal to min(diagram_length) over
    enumerate_diagrams.
    """
    positions = [i for i in range(1, n + 1) if (word >> (i - 1)) & 1]
    if not positions:
        return _loop_dist(1, k, n)
    best = None
    for a, b, interval_edges in _gap_arcs(positions, n):
        via_b = _loop_dist(1, b, n) + _loop_dist(a, k, n)
        via_a = _loop_dist(1, a, n) + _loop_dist(b, k, n)
        cand = interval_edges + min(via_a, via_b)
        if best is None or cand < best:
            best = cand
    return best + len(positions)


def distance_from_base(x: Vertex, n: int) -> int:
    """Graph distance from the base vertex 00..0:1 to x."""
    validate_vertex(x, n)
    return _min_length(x.cube_word, x.cycle_digit, n)


def _rotate_right(w: int, r: int, n: int) -> int:
    return ((w >> r) | (w << (n - r))) & ((1 << n) - 1)


def canonicalize(a: Vertex, b: Vertex, n: int) -> Vertex:
    """Image of b under the automorphism sending a to the base vertex.

    Digit positions rotate so a's cycle digit lands on 1 (applied to cube
    words and cycle digits alike), then cube words are XOR-translated by a's
    rotated word.  Both steps preserve adjacency, so d(a, b) equals
    distance_from_base of the result.
    """
    validate_vertex(a, n)
    validate_vertex(b, n)
    r = a.cycle_digit - 1
    word = _rotate_right(b.cube_word, r, n) ^ _rotate_right(a.cube_word, r, n)
    return Vertex(word, (b.cycle_digit - a.cycle_digit) % n + 1)


def distance(a: Vertex, b: Vertex, n: int) -> int:
    """Graph distance between arbitrary vertices of CCC_n."""
    return distance_from_base(canonicalize(a, b, n), n)


def _first_minimal(
    positions: list[int], k: int, n: int
) -> tuple[int, int, Direction, Direction, Direction, int]:
    """First candidate of minimum length in the canonical tie-break order."""
    best = None
    for cand in _candidates(positions, k, n):
        if best is None or cand[5] < best[5]:
            best = cand
    return best


def _walk_from_base(word: int, k: int, n: int) -> list[Vertex]:
    """Minimal walk from the base to (word, k) following the chosen diagram."""
    positions = [i for i in range(1, n + 1) if (word >> (i - 1)) & 1]
    entry, exit_, interval_dir, d1, d2, _ = _first_minimal(positions, k, n)
    circles = set(positions)
    cur_w, cur_k = 0, 1
    trace = [Vertex(0, 1)]

    def cycle_steps(count: int, direction: Direction) -> None:
        nonlocal cur_k
        step = 1 if direction is Direction.INCREASING else -1
        for _ in range(count):
            cur_k = (cur_k - 1 + step) % n + 1
            trace.append(Vertex(cur_w, cur_k))

    def flip() -> None:
        nonlocal cur_w
        cur_w ^= 1 << (cur_k - 1)
        trace.append(Vertex(cur_w, cur_k))

    if not positions:
        cycle_steps((k - 1) % n if d1 is Direction.INCREASING else (1 - k) % n, d1)
    else:
        cycle_steps((entry - 1) % n if d1 is Direction.INCREASING else (1 - entry) % n, d1)
        flip()
        step = 1 if interval_dir is Direction.INCREASING else -1
        interval_edges = (
            (exit_ - entry) % n if interval_dir is Direction.INCREASING else (entry - exit_) % n
        )
        for _ in range(interval_edges):
            cur_k = (cur_k - 1 + step) % n + 1
            trace.append(Vertex(cur_w, cur_k))
            if cur_k in circles:
                flip()
        cycle_steps((k - exit_) % n if d2 is Direction.INCREASING else (exit_ - k) % n, d2)

    assert cur_w == word and cur_k == k
    return trace


def shortest_path(a: Vertex, b: Vertex, n: int) -> list[Vertex]:
    """One shortest path from a to b, deterministic under the tie-break order.

    The walk is built from the first minimal diagram for the canonicalised
    pair and mapped back through the inverse of the canonicalising
    automorphism.
    """
    x = canonicalize(a, b, n)
    r = a.cycle_digit - 1
    shift = _rotate_right(a.cube_word, r, n)

    def back(y: Vertex) -> Vertex:
        word = _rotate_right(y.cube_word ^ shift, (n - r) % n, n)
        return Vertex(word, (y.cycle_digit - 1 + r) % n + 1)

    return [back(y) for y in _walk_from_base(x.cube_word, x.cycle_digit, n)]


@lru_cache(maxsize=16)
def base_distance_table(n: int) -> np.ndarray:
    """distance_from_base for every vertex, indexed by vertex_index; uint16.

    The per-vertex classification of whole-graph analyses reads distances
    from this table through canonical_index_table views.
    """
    require_dimension(n)
    loop = [[_loop_dist(p, q, n) for q in range(n + 1)] for p in range(n + 1)]
    out = np.empty(vertex_count(n), dtype=np.uint16)
    for word in range(1 << n):
        positions = [i for i in range(1, n + 1) if (word >> (i - 1)) & 1]
        row = word * n
        if not positions:
            for k in range(1, n + 1):
                out[row + k - 1] = loop[1][k]
            continue
        m = len(positions)
        arcs = _gap_arcs(positions, n)
        from_one = loop[1]
        for k in range(1, n + 1):
            best = None
            for a, b, interval_edges in arcs:
                cand = interval_edges + min(
                    from_one[a] + loop[b][k], from_one[b] + loop[a][k]
                )
                if best is None or cand < best:
                    best = cand
            out[row + k - 1] = best + m
    return out


def canonical_index_table(source: Vertex, n: int) -> np.ndarray:
    """vertex_index of canonicalize(source, x) for every x, as one int64 array.

    base_distance_table(n)[canonical_index_table(u, n)] is the distance field
    d(u, .) over all vertices.
    """
    validate_vertex(source, n)
    count = vertex_count(n)
    idx = np.arange(count, dtype=np.int64)
    w = idx // n
    kk = idx % n
    r = source.cycle_digit - 1
    mask = (1 << n) - 1
    rot_w = ((w >> r) | (w << (n - r))) & mask
    rot_src = _rotate_right(source.cube_word, r, n)
    return (rot_w ^ rot_src) * n + (kk - r) % n


def distance_field(source: Vertex, n: int) -> np.ndarray:
    """d(source, x) for every vertex x, indexed by vertex_index."""
    return base_distance_table(n)[canonical_index_table(source, n)]
