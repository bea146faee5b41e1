"""Cube-connected cycles CCC_n as an implicit graph over bit-encoded vertices.

A vertex carries an n-bit cube word (bit i-1 of the integer holds cube digit
x_i) and a cycle digit k in 1..n.  Adjacency is O(1): two cycle neighbours
(cycle digit +/-1, cyclically) and one cube neighbour (bit k flipped).  No
adjacency structure is ever stored; exhaustive analyses index per-run arrays
by ``vertex_index``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

MIN_DIMENSION = 3
MAX_DIMENSION = 30


class CCCError(Exception):
    """Base class for errors raised by this package."""


class DimensionError(CCCError, ValueError):
    """Dimension n outside the supported range 3..30."""


class GateError(CCCError, ValueError):
    """Operation-specific resource gate exceeded (exhaustive/brute-force caps)."""


class InvalidVertexError(CCCError, ValueError):
    """Vertex fields violate the CCC_n invariants."""


class VertexParseError(CCCError, ValueError):
    """Vertex text did not match the '<bits>:<k>' wire format."""


class NotAdjacentError(CCCError, ValueError):
    """The given vertex pair is not an edge of CCC_n."""


def require_dimension(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise DimensionError(f"dimension must be an integer, got {n!r}")
    if not MIN_DIMENSION <= n <= MAX_DIMENSION:
        raise DimensionError(
            f"dimension n={n} outside supported range "
            f"{MIN_DIMENSION}..{MAX_DIMENSION}"
        )
    return n


@dataclass(frozen=True, slots=True)
class Vertex:
    """A CCC_n vertex: cube word x_1..x_n (bit i-1 holds x_i) plus cycle digit k."""

    cube_word: int
    cycle_digit: int

    def bit(self, i: int) -> int:
        """Cube digit x_i, for i in 1..n."""
        return (self.cube_word >> (i - 1)) & 1


def validate_vertex(v: Vertex, n: int) -> Vertex:
    require_dimension(n)
    if not 1 <= v.cycle_digit <= n:
        raise InvalidVertexError(f"cycle digit {v.cycle_digit} outside 1..{n}")
    if not 0 <= v.cube_word < (1 << n):
        raise InvalidVertexError(f"cube word {v.cube_word:#x} has bits above position {n}")
    return v


def base_vertex() -> Vertex:
    """The canonical source 00...0 with cycle digit 1."""
    return Vertex(0, 1)


def vertex_index(v: Vertex, n: int) -> int:
    """Dense index cube_word*n + (k-1), the layout of every per-run array."""
    return v.cube_word * n + (v.cycle_digit - 1)


def vertex_from_index(i: int, n: int) -> Vertex:
    return Vertex(i // n, i % n + 1)


def vertex_count(n: int) -> int:
    """Number of vertices of CCC_n: n * 2^n."""
    require_dimension(n)
    return n << n


def vertices(n: int) -> Iterator[Vertex]:
    """All vertices, ascending by (cube_word, cycle_digit)."""
    require_dimension(n)
    for w in range(1 << n):
        for k in range(1, n + 1):
            yield Vertex(w, k)


def format_vertex(v: Vertex, n: int) -> str:
    """Wire format '<bits x_1..x_n>:<k>' with bit 1 leftmost, e.g. '0101100:6'."""
    validate_vertex(v, n)
    bits = "".join("1" if v.bit(i) else "0" for i in range(1, n + 1))
    return f"{bits}:{v.cycle_digit}"


def parse_vertex(text: str, n: int) -> Vertex:
    """Inverse of format_vertex; rejects wrong length, non-binary bits, bad k."""
    require_dimension(n)
    bits, sep, digit = text.partition(":")
    if not sep:
        raise VertexParseError(f"{text!r}: missing ':' separator")
    if len(bits) != n:
        raise VertexParseError(f"{text!r}: expected {n} cube digits, got {len(bits)}")
    word = 0
    for i, ch in enumerate(bits):
        if ch == "1":
            word |= 1 << i
        elif ch != "0":
            raise VertexParseError(f"{text!r}: cube digits must be 0/1")
    try:
        k = int(digit)
    except ValueError:
        raise VertexParseError(f"{text!r}: cycle digit is not an integer") from None
    if not 1 <= k <= n:
        raise VertexParseError(f"{text!r}: cycle digit {k} outside 1..{n}")
    return Vertex(word, k)


class EdgeKind(Enum):
    CYCLE = "cycle"
    CUBE = "cube"


@dataclass(frozen=True, slots=True)
class Edge:
    u: Vertex
    v: Vertex
    kind: EdgeKind


def cycle_pred(v: Vertex, n: int) -> Vertex:
    return Vertex(v.cube_word, (v.cycle_digit - 2) % n + 1)


def cycle_succ(v: Vertex, n: int) -> Vertex:
    return Vertex(v.cube_word, v.cycle_digit % n + 1)


def cube_neighbor(v: Vertex, n: int) -> Vertex:
    return Vertex(v.cube_word ^ (1 << (v.cycle_digit - 1)), v.cycle_digit)


def neighbors(v: Vertex, n: int) -> tuple[Vertex, Vertex, Vertex]:
    """The three neighbours in fixed order: cycle predecessor, successor, cube."""
    validate_vertex(v, n)
    return (cycle_pred(v, n), cycle_succ(v, n), cube_neighbor(v, n))


def classify_edge(u: Vertex, v: Vertex, n: int) -> EdgeKind:
    """Decide cycle edge vs cube edge; raise NotAdjacentError otherwise."""
    validate_vertex(u, n)
    validate_vertex(v, n)
    if u == v:
        raise NotAdjacentError("identical vertices do not form an edge")
    if u.cube_word == v.cube_word:
        if (u.cycle_digit - v.cycle_digit) % n in (1, n - 1):
            return EdgeKind.CYCLE
    elif u.cycle_digit == v.cycle_digit:
        if u.cube_word ^ v.cube_word == 1 << (u.cycle_digit - 1):
            return EdgeKind.CUBE
    raise NotAdjacentError(
        f"vertices {format_vertex(u, n)} and {format_vertex(v, n)} are not adjacent"
    )


def edges(n: int) -> Iterator[Edge]:
    """Each undirected edge exactly once, in deterministic order.

    Vertices are visited ascending by (cube_word, cycle_digit); per vertex the
    cycle-successor edge is emitted, then the cube edge when bit k is 0 (so
    the lexicographically smaller cube word owns it).
    """
    require_dimension(n)
    for w in range(1 << n):
        for k in range(1, n + 1):
            u = Vertex(w, k)
            yield Edge(u, cycle_succ(u, n), EdgeKind.CYCLE)
            if not (w >> (k - 1)) & 1:
                yield Edge(u, cube_neighbor(u, n), EdgeKind.CUBE)


def hypercube_neighbors(w: int, n: int) -> list[int]:
    """The n single-bit flips of an n-bit word (Q_n adjacency)."""
    require_dimension(n)
    if not 0 <= w < (1 << n):
        raise InvalidVertexError(f"word {w:#x} has bits above position {n}")
    return [w ^ (1 << i) for i in range(n)]
