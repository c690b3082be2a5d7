"""Constructions relating Hex and Y boards.

``extend_y_from_hex`` turns a Hex board into a Y position by adding two
pre-colored apex vertices. ``double_y_to_hex`` glues a Y board to a mirror copy
of itself along ``l1``; the fold map sends the result back onto the original.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .board import HEX_LABELS, Y_LABELS, Board, Side, build, edge, require_valid
from .rules import (BLUE, RED, Chain, Coloring, Outcome, TheoremViolation, is_chain,
                    is_full, winner)


@dataclass(frozen=True)
class VertexMap:
    source: Board
    target: Board
    image: tuple[int, ...]

    def __post_init__(self):
        if len(self.image) != self.source.vertex_count:
            raise ValueError("vertex map must be total on the source")
        if any(not 0 <= v < self.target.vertex_count for v in self.image):
            raise ValueError("vertex map image out of range")

    def __call__(self, v: int) -> int:
        return self.image[v]

    def apply(self, vertices: Iterable[int]) -> frozenset[int]:
        return frozenset(self.image[v] for v in vertices)

    def non_simplicial_edges(self) -> list[tuple[int, int]]:
        """Source edges whose image is neither a target edge nor a single vertex."""
        bad = []
        for u, v in sorted(self.source.edges):
            a, b = self.image[u], self.image[v]
            if a != b and edge(a, b) not in self.target.edges:
                bad.append((u, v))
        return bad

    def non_simplicial_triangles(self) -> list[tuple[int, int, int]]:
        bad = []
        for t in self.source.triangles:
            img = sorted({self.image[v] for v in t})
            if len(img) == 3 and tuple(img) not in set(self.target.triangles):
                bad.append(t)
            elif len(img) == 2 and edge(*img) not in self.target.edges:
                bad.append(t)
        return bad

    def is_simplicial(self) -> bool:
        return not self.non_simplicial_edges() and not self.non_simplicial_triangles()

    def preserves_colors(self, source_coloring: Coloring, target_coloring: Coloring) -> bool:
        return all(target_coloring[self.image[v]] is c for v, c in enumerate(source_coloring))


@dataclass(frozen=True)
class Extension:
    hex_board: Board
    y_board: Board
    pre_coloring: Coloring
    embed: VertexMap
    apex_r0: int
    apex_b0: int

    def lift(self, hex_coloring: Coloring) -> Coloring:
        """Copy a Hex coloring through ``embed``; apexes keep their pre-coloring."""
        col = list(self.pre_coloring)
        for v, c in enumerate(hex_coloring):
            col[self.embed(v)] = c
        return tuple(col)


def extend_y_from_hex(hex_board: Board) -> Extension:
    require_valid(hex_board, HEX_LABELS)
    r1, b1, r2, b2 = (s.path for s in hex_board.sides)
    n = hex_board.vertex_count
    r0, b0 = n, n + 1
    tris = list(hex_board.triangles)
    tris += [(r0, u, v) for u, v in zip(r2, r2[1:])]
    tris += [(b0, u, v) for u, v in zip(b1, b1[1:])]
    corner = b1[-1]  # == r2[0]
    sides = [
        Side("l1", (b0, corner, r0)),
        Side("l2", (r0,) + b2),
        Side("l3", r1 + (b0,)),
    ]
    y_board = build(n + 2, tris, sides)
    pre = [None] * (n + 2)
    pre[r0], pre[b0] = RED, BLUE
    embed = VertexMap(hex_board, y_board, tuple(range(n)))
    return Extension(hex_board, y_board, tuple(pre), embed, r0, b0)


def check_extension_equivalence(hex_board: Board, full_coloring: Coloring,
                                extension: Extension | None = None) -> bool:
    if not is_full(full_coloring):
        raise ValueError("coloring is not full")
    ext = extension or extend_y_from_hex(hex_board)
    return winner(ext.y_board, ext.lift(full_coloring)).color is winner(hex_board, full_coloring).color


@dataclass(frozen=True)
class Doubling:
    y_board: Board
    hex_board: Board
    embed: VertexMap
    reflect: VertexMap
    fold: VertexMap

    @property
    def l1(self) -> frozenset[int]:
        return frozenset(self.y_board.side("l1").path)

    def is_reflection_invariant(self, coloring: Coloring) -> bool:
        return all(coloring[self.reflect(v)] is c for v, c in enumerate(coloring))


def l1_chords(y_board: Board) -> list[tuple[int, int]]:
    """Edges joining two ``l1`` vertices that are not edges of the ``l1`` path.

    When any exist the doubled complex is not simplicial: the chord and its
    mirror image coincide.
    """
    l1 = y_board.side("l1")
    on = set(l1.path)
    path_edges = set(l1.edges)
    return sorted(e for e in y_board.edges if e[0] in on and e[1] in on and e not in path_edges)


def double_y_to_hex(y_board: Board) -> Doubling:
    """Glue ``y_board`` to its mirror copy along ``l1``.

    Vertices on ``l1`` keep their id; the mirror of the k-th vertex off ``l1``
    (ascending order) gets id ``V + k``.
    """
    require_valid(y_board, Y_LABELS)
    n = y_board.vertex_count
    l1, l2, l3 = (s.path for s in y_board.sides)
    on_l1 = set(l1)
    off = [v for v in range(n) if v not in on_l1]
    prime = list(range(n))
    for k, v in enumerate(off):
        prime[v] = n + k
    total = n + len(off)
    tris = list(y_board.triangles)
    seen = set(tris)
    for t in y_board.triangles:
        m = tuple(sorted(prime[v] for v in t))
        if m not in seen:  # a triangle lying entirely on l1 is its own mirror
            seen.add(m)
            tris.append(m)
    mirror = lambda path: tuple(prime[v] for v in reversed(path))
    sides = [
        Side("R1", l3),
        Side("B1", mirror(l3)),
        Side("R2", mirror(l2)),
        Side("B2", l2),
    ]
    hex_board = build(total, tris, sides)
    refl = list(range(total))
    fold = list(range(total))
    for v in off:
        refl[v], refl[prime[v]] = prime[v], v
        fold[prime[v]] = v
    return Doubling(
        y_board=y_board,
        hex_board=hex_board,
        embed=VertexMap(y_board, hex_board, tuple(range(n))),
        reflect=VertexMap(hex_board, hex_board, tuple(refl)),
        fold=VertexMap(hex_board, y_board, tuple(fold)),
    )


@lru_cache(maxsize=64)
def _cached_doubling(y_board: Board) -> Doubling:
    return double_y_to_hex(y_board)


def mirror_coloring(doubling: Doubling, y_coloring: Coloring) -> Coloring:
    if len(y_coloring) != doubling.y_board.vertex_count:
        raise ValueError("coloring does not match the Y board")
    return tuple(y_coloring[doubling.fold(v)] for v in range(doubling.hex_board.vertex_count))


def _check_invariant(doubling: Doubling, coloring: Coloring) -> None:
    if len(coloring) != doubling.hex_board.vertex_count:
        raise ValueError("coloring does not match the doubled board")
    if not doubling.is_reflection_invariant(coloring):
        raise ValueError("coloring is not invariant under the reflection")


def fold_chain(doubling: Doubling, chain: Chain, coloring: Coloring) -> Chain:
    """Image of a chain of the doubled board under the fold map."""
    _check_invariant(doubling, coloring)
    return Chain(chain.color, doubling.fold.apply(chain.vertices))


def reflect_chain(doubling: Doubling, chain: Chain, coloring: Coloring) -> Chain:
    _check_invariant(doubling, coloring)
    return Chain(chain.color, doubling.reflect.apply(chain.vertices))


def y_winner_via_hex(y_board: Board, full_coloring: Coloring,
                     doubling: Doubling | None = None) -> Outcome:
    """Decide a full Y position by playing Hex on the doubled board and folding back."""
    if len(full_coloring) != y_board.vertex_count or not is_full(full_coloring):
        raise ValueError("coloring is not full")
    d = doubling or _cached_doubling(y_board)
    mirrored = mirror_coloring(d, full_coloring)
    hex_outcome = winner(d.hex_board, mirrored)
    if not hex_outcome.decided:
        raise TheoremViolation("no Hex winner on the doubled board")
    c_double = hex_outcome.witness
    if not c_double.vertices & d.l1:
        raise TheoremViolation(f"Hex witness {sorted(c_double.vertices)} misses l1")
    folded = fold_chain(d, c_double, mirrored)
    if not is_chain(y_board, full_coloring, folded):
        raise TheoremViolation(f"folded witness {sorted(folded.vertices)} is not a chain")
    if not all(folded.vertices & set(s.path) for s in y_board.sides):
        raise TheoremViolation(f"folded witness {sorted(folded.vertices)} misses a side")
    direct = winner(y_board, full_coloring)
    if direct.color is not hex_outcome.color:
        raise TheoremViolation(f"via-Hex winner {hex_outcome} differs from direct winner {direct}")
    return Outcome(hex_outcome.color, folded)
