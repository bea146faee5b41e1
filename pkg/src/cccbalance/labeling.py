"""Automorphisms of CCC_n built from vertex relabelings.

Choosing which vertex gets the label 00..0:1 (the anchor) and a direction for
its cycle determines a relabeling of the whole graph: the anchor cycle gets
digits 1..n in the chosen direction, cube words then spread across cycles
through the cube-edge relation, and finally every vertex reads its cycle
digit off the position where its cube edge flips a bit.  Each such relabeling
is an automorphism, there are exactly n * 2^(n+1) of them, and they act
transitively on cube edges and on cycle edges.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import (
    CCCError,
    Edge,
    EdgeKind,
    Vertex,
    classify_edge,
    cycle_pred,
    require_dimension,
    validate_vertex,
    vertex_count,
    vertex_from_index,
    vertex_index,
)

# Full vertex-map arrays are kept up to here; larger n applies the rule lazily.
MATERIALIZE_MAX = 16


class PermutationError(CCCError, ValueError):
    """Digit permutation is not a permutation of 1..n."""


class Orientation(Enum):
    FORWARD = "forward"
    REVERSE = "reverse"


def _apply_digit_perm_to_word(word: int, perm: tuple[int, ...]) -> int:
    """Move bit t of the word to bit perm[t] (digits 1-based, bits 0-based)."""
    out = 0
    for t, image in enumerate(perm):
        if (word >> t) & 1:
            out |= 1 << (image - 1)
    return out


def _check_permutation(perm: tuple[int, ...], n: int) -> tuple[int, ...]:
    if sorted(perm) != list(range(1, n + 1)):
        raise PermutationError(f"{perm!r} is not a permutation of 1..{n}")
    return tuple(perm)


@dataclass(frozen=True, slots=True)
class HypercubeAutomorphism:
    """Q_n automorphism: permute digits first, then XOR the translation word."""

    n: int
    translation: int
    digit_permutation: tuple[int, ...]

    def apply(self, word: int) -> int:
        return _apply_digit_perm_to_word(word, self.digit_permutation) ^ self.translation


def hypercube_automorphism_from(
    translation: int, digit_permutation: tuple[int, ...], n: int
) -> HypercubeAutomorphism:
    """Adjacency-preserving bijection of Q_n from a translation and digit permutation."""
    require_dimension(n)
    if not 0 <= translation < (1 << n):
        raise PermutationError(f"translation {translation:#x} has bits above position {n}")
    return HypercubeAutomorphism(n, translation, _check_permutation(digit_permutation, n))


@dataclass(frozen=True, eq=False)
class Automorphism:
    """CCC_n automorphism determined by (anchor, orientation).

    Sends the base vertex to the anchor and the base cycle's forward
    direction to the chosen orientation.  ``digit_map`` carries label digit
    j to host digit digit_map[j-1]; the action is: permute cube-word bits by
    digit_map, XOR the anchor's cube word, map the cycle digit by digit_map.
    ``table`` is the materialized vertex-index map for n <= MATERIALIZE_MAX.
    """

    n: int
    anchor: Vertex
    orientation: Orientation
    digit_map: tuple[int, ...]
    translation: int
    table: np.ndarray | None


def _sigma(anchor: Vertex, orientation: Orientation, n: int) -> tuple[int, ...]:
    """Label digit t+1 -> host digit at offset t from the anchor, signed by orientation."""
    k0 = anchor.cycle_digit
    if orientation is Orientation.FORWARD:
        return tuple((k0 - 1 + t) % n + 1 for t in range(n))
    return tuple((k0 - 1 - t) % n + 1 for t in range(n))


def _invert_perm(perm: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for j, image in enumerate(perm):
        inv[image - 1] = j + 1
    return tuple(inv)


def _propagate_table(anchor: Vertex, orientation: Orientation, n: int) -> np.ndarray:
    """Materialize the vertex map by the relabeling sweep.

    Stage 1 relabels the anchor cycle, fixing where each host digit lands.
    Stage 2 sweeps cube words breadth-first from the anchor's cycle: crossing
    the cube edge at host digit j flips the label bit the anchor cycle
    assigned to j.  Revisits assert consistency.  Stage 3 reads each vertex's
    label digit off the bit where its own cube edge changes the label word,
    and the inverse of the finished relabeling is the automorphism table.
    """
    pi = _invert_perm(_sigma(anchor, orientation, n))  # host digit -> label digit
    words = 1 << n
    label_word = [-1] * words
    label_word[anchor.cube_word] = 0
    queue = deque([anchor.cube_word])
    while queue:
        w = queue.popleft()
        lw = label_word[w]
        for j in range(1, n + 1):
            w2 = w ^ (1 << (j - 1))
            lw2 = lw ^ (1 << (pi[j - 1] - 1))
            if label_word[w2] < 0:
                label_word[w2] = lw2
                queue.append(w2)
            elif label_word[w2] != lw2:
                raise AssertionError("inconsistent cube-word sweep")

    table = np.empty(vertex_count(n), dtype=np.int64)
    for w in range(words):
        lw = label_word[w]
        for j in range(1, n + 1):
            diff = lw ^ label_word[w ^ (1 << (j - 1))]
            label_digit = diff.bit_length()  # single set bit, 1-based position
            table[lw * n + (label_digit - 1)] = w * n + (j - 1)
    return table


def labeling_from(anchor: Vertex, orientation: Orientation, n: int) -> Automorphism:
    """The unique automorphism sending the base vertex to the anchor."""
    validate_vertex(anchor, n)
    table = _propagate_table(anchor, orientation, n) if n <= MATERIALIZE_MAX else None
    return Automorphism(
        n=n,
        anchor=anchor,
        orientation=orientation,
        digit_map=_sigma(anchor, orientation, n),
        translation=anchor.cube_word,
        table=table,
    )


def _apply_rule(a: Automorphism, v: Vertex) -> Vertex:
    word = _apply_digit_perm_to_word(v.cube_word, a.digit_map) ^ a.translation
    return Vertex(word, a.digit_map[v.cycle_digit - 1])


def apply(a: Automorphism, v: Vertex) -> Vertex:
    """Image of v under the automorphism."""
    validate_vertex(v, a.n)
    if a.table is not None:
        return vertex_from_index(int(a.table[vertex_index(v, a.n)]), a.n)
    return _apply_rule(a, v)


def automorphism_group_size(n: int) -> int:
    """Order of the automorphism group of CCC_n: n * 2^(n+1)."""
    require_dimension(n)
    return n << (n + 1)


def _compose_params(
    g: tuple[tuple[int, ...], int], f: tuple[tuple[int, ...], int]
) -> tuple[tuple[int, ...], int]:
    """Parameters of g after f, in (digit_map, translation) form."""
    sig_g, w_g = g
    sig_f, w_f = f
    sig = tuple(sig_g[j - 1] for j in sig_f)
    return sig, _apply_digit_perm_to_word(w_f, sig_g) ^ w_g


def _invert_params(f: tuple[tuple[int, ...], int]) -> tuple[tuple[int, ...], int]:
    sig_f, w_f = f
    inv = _invert_perm(sig_f)
    return inv, _apply_digit_perm_to_word(w_f, inv)


def _from_params(params: tuple[tuple[int, ...], int], n: int) -> Automorphism:
    """Recover the (anchor, orientation) realization of a composed map."""
    sig, w0 = params
    anchor = Vertex(w0, sig[0])
    orientation = (
        Orientation.FORWARD if sig[1] == sig[0] % n + 1 else Orientation.REVERSE
    )
    out = labeling_from(anchor, orientation, n)
    assert out.digit_map == sig, "composed map is not labeling-determined"
    return out


def swap_automorphism(u: Vertex, v: Vertex, n: int) -> Automorphism:
    """An automorphism exchanging the endpoints of the edge uv.

    Cube edge: compose the labeling anchored at v with the inverse of the one
    anchored at u, orientations matching.  Cycle edge: anchor at u with the
    orientation that labels v as 00..0:n, anchor at v with the orientation
    that labels u as 00..0:n, and compose likewise.
    """
    kind = classify_edge(u, v, n)
    if kind is EdgeKind.CUBE:
        o_u = o_v = Orientation.FORWARD
    else:
        # FORWARD walks the cycle away from its predecessor, putting it at digit n
        o_u = Orientation.FORWARD if v == cycle_pred(u, n) else Orientation.REVERSE
        o_v = Orientation.FORWARD if u == cycle_pred(v, n) else Orientation.REVERSE
    f = (_sigma(u, o_u, n), u.cube_word)
    g = (_sigma(v, o_v, n), v.cube_word)
    out = _from_params(_compose_params(g, _invert_params(f)), n)
    assert apply(out, u) == v and apply(out, v) == u
    return out


def all_labelings(n: int) -> list[Automorphism]:
    """Every (anchor, orientation) labeling, anchors ascending, Forward first."""
    require_dimension(n)
    out = []
    for i in range(vertex_count(n)):
        anchor = vertex_from_index(i, n)
        for orientation in (Orientation.FORWARD, Orientation.REVERSE):
            out.append(labeling_from(anchor, orientation, n))
    return out


def swap_edge(e: Edge, n: int) -> Automorphism:
    return swap_automorphism(e.u, e.v, n)
