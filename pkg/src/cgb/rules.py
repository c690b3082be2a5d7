"""Colorings, monochromatic chains and winner detection."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .board import Board, side_vertices


class Color(enum.Enum):
    RED = "R"
    BLUE = "B"

    @property
    def other(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED

    def __str__(self):
        return self.name.lower()


RED, BLUE = Color.RED, Color.BLUE

# one entry per vertex; None is an empty vertex
Coloring = tuple[Optional[Color], ...]


class TheoremViolation(RuntimeError):
    """Both players reached their goal, or no player did on a full board."""


def empty_coloring(n: int) -> Coloring:
    return (None,) * n


def make_coloring(n: int, red: Iterable[int] = (), blue: Iterable[int] = ()) -> Coloring:
    col: list[Optional[Color]] = [None] * n
    for v in red:
        col[v] = RED
    for v in blue:
        if col[v] is RED:
            raise ValueError(f"vertex {v} colored twice")
        col[v] = BLUE
    return tuple(col)


def is_full(coloring: Sequence[Optional[Color]]) -> bool:
    return all(c is not None for c in coloring)


def swap_colors(coloring: Coloring) -> Coloring:
    return tuple(None if c is None else c.other for c in coloring)


@dataclass(frozen=True)
class Chain:
    color: Color
    vertices: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self.vertices


@dataclass(frozen=True)
class Outcome:
    """``color`` is None when nobody has won (yet)."""

    color: Optional[Color] = None
    witness: Optional[Chain] = None

    @property
    def decided(self) -> bool:
        return self.color is not None

    def __str__(self):
        return "undecided" if self.color is None else str(self.color)


UNDECIDED = Outcome()


def _check_length(board: Board, coloring: Sequence) -> None:
    if len(coloring) != board.vertex_count:
        raise ValueError(f"coloring has {len(coloring)} entries, board has {board.vertex_count} vertices")


def _component(board: Board, coloring: Sequence, start: int) -> set[int]:
    color = coloring[start]
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in board.adjacency[u]:
            if w not in seen and coloring[w] is color:
                seen.add(w)
                queue.append(w)
    return seen


def monochrome_components(board: Board, coloring: Coloring, color: Color) -> list[Chain]:
    """Maximal chains of ``color``, ordered by smallest vertex."""
    _check_length(board, coloring)
    seen: set[int] = set()
    out = []
    for v in range(board.vertex_count):
        if coloring[v] is color and v not in seen:
            comp = _component(board, coloring, v)
            seen |= comp
            out.append(Chain(color, frozenset(comp)))
    return out


def goal_sides(board: Board, color: Color) -> list[frozenset[int]]:
    """Vertex sets a chain of ``color`` must touch to win."""
    if board.kind == "hex":
        labels = ("R1", "R2") if color is RED else ("B1", "B2")
    else:
        labels = ("l1", "l2", "l3")
    return [side_vertices(board, lab) for lab in labels]


def goal_chain(board: Board, coloring: Coloring, color: Color) -> Optional[Chain]:
    """A maximal chain of ``color`` meeting every goal side, or None."""
    _check_length(board, coloring)
    first, *rest = goal_sides(board, color)
    seen: set[int] = set()
    for v in sorted(first):
        if coloring[v] is not color or v in seen:
            continue
        comp = _component(board, coloring, v)
        seen |= comp
        if all(comp & s for s in rest):
            return Chain(color, frozenset(comp))
    return None


def goal_chains(board: Board, coloring: Coloring) -> tuple[Optional[Chain], Optional[Chain]]:
    """Evaluate both players' goals independently: ``(red_chain, blue_chain)``."""
    return goal_chain(board, coloring, RED), goal_chain(board, coloring, BLUE)


def winner(board: Board, coloring: Coloring) -> Outcome:
    red, blue = goal_chains(board, coloring)
    if red is not None and blue is not None:
        raise TheoremViolation(
            f"both players win: red chain {sorted(red.vertices)}, blue chain {sorted(blue.vertices)}")
    if red is not None:
        return Outcome(RED, red)
    if blue is not None:
        return Outcome(BLUE, blue)
    return UNDECIDED


def witness_path(board: Board, coloring: Coloring, chain: Chain,
                 side_a: str, side_b: str) -> tuple[int, ...]:
    """Shortest path inside ``chain`` from ``side_a`` to ``side_b``."""
    a = side_vertices(board, side_a) & chain.vertices
    b = side_vertices(board, side_b) & chain.vertices
    if not a or not b:
        raise ValueError(f"chain does not meet both {side_a} and {side_b}")
    if any(coloring[v] is not chain.color for v in chain.vertices):
        raise ValueError("chain vertices do not all carry the chain color")
    parent: dict[int, Optional[int]] = {v: None for v in sorted(a)}
    queue = deque(sorted(a))
    while queue:
        u = queue.popleft()
        if u in b:
            path = [u]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return tuple(reversed(path))
        for w in sorted(board.adjacency[u]):
            if w in chain.vertices and w not in parent:
                parent[w] = u
                queue.append(w)
    raise ValueError(f"chain is not connected between {side_a} and {side_b}")


def is_chain(board: Board, coloring: Coloring, chain: Chain) -> bool:
    """True if ``chain`` is non-empty, monochromatic under ``coloring`` and connected."""
    verts = chain.vertices
    if not verts or any(coloring[v] is not chain.color for v in verts):
        return False
    start = next(iter(verts))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in board.adjacency[u]:
            if w in verts and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == verts
