"""Boards: simplicial triangulations of a 2-disk whose boundary is cut into sides."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

HEX_LABELS = ("R1", "B1", "R2", "B2")
Y_LABELS = ("l1", "l2", "l3")


class BoardError(ValueError):
    """Raised by :func:`build` on malformed input."""


def edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Side:
    label: str
    path: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "path", tuple(int(v) for v in self.path))

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [edge(a, b) for a, b in zip(self.path, self.path[1:])]


@dataclass(frozen=True)
class Violation:
    rule: str
    message: str
    simplices: tuple = ()


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def rules(self) -> set[str]:
        return {v.rule for v in self.violations}

    def __str__(self):
        if self.ok:
            return "ok"
        return "\n".join(f"violation {v.rule}: {v.message}" for v in self.violations)


@dataclass(frozen=True, eq=False)
class Board:
    """Immutable board. Use :func:`build` rather than calling this directly."""

    vertex_count: int
    triangles: tuple[tuple[int, int, int], ...]
    sides: tuple[Side, ...]
    edges: frozenset = field(init=False, repr=False)
    adjacency: tuple[frozenset, ...] = field(init=False, repr=False)
    edge_triangle_count: dict = field(init=False, repr=False)
    boundary_edges: frozenset = field(init=False, repr=False)
    boundary_cycle: tuple[int, ...] | None = field(init=False, repr=False)

    def __post_init__(self):
        counts: dict[tuple[int, int], int] = defaultdict(int)
        for a, b, c in self.triangles:
            for e in (edge(a, b), edge(b, c), edge(a, c)):
                counts[e] += 1
        adjacency = [set() for _ in range(self.vertex_count)]
        for u, v in counts:
            adjacency[u].add(v)
            adjacency[v].add(u)
        boundary = frozenset(e for e, n in counts.items() if n == 1)
        set_ = object.__setattr__
        set_(self, "edge_triangle_count", dict(counts))
        set_(self, "edges", frozenset(counts))
        set_(self, "adjacency", tuple(frozenset(a) for a in adjacency))
        set_(self, "boundary_edges", boundary)
        set_(self, "boundary_cycle", _trace_cycle(boundary))

    @property
    def kind(self) -> str:
        return "hex" if len(self.sides) == 4 else "y"

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(s.label for s in self.sides)

    def side(self, label: str) -> Side:
        for s in self.sides:
            if s.label == label:
                return s
        raise KeyError(f"board has no side {label!r}")

    def euler_characteristic(self) -> int:
        return self.vertex_count - len(self.edges) + len(self.triangles)

    def key(self):
        return (self.vertex_count, tuple(sorted(self.triangles)), self.sides)

    def __eq__(self, other):
        return isinstance(other, Board) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def _trace_cycle(edges: Iterable[tuple[int, int]]) -> tuple[int, ...] | None:
    """Return the vertices of ``edges`` in cyclic order if they form one simple cycle.

    The walk starts at the smallest vertex and heads to its smaller neighbour.
    """
    nbrs: dict[int, list[int]] = defaultdict(list)
    n_edges = 0
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
        n_edges += 1
    if n_edges < 3 or any(len(vs) != 2 for vs in nbrs.values()):
        return None
    start = min(nbrs)
    cycle = [start]
    prev, cur = start, min(nbrs[start])
    while cur != start:
        cycle.append(cur)
        a, b = nbrs[cur]
        prev, cur = cur, (b if a == prev else a)
    if len(cycle) != len(nbrs):
        return None
    return tuple(cycle)


def build(vertex_count: int, triangles: Iterable[Sequence[int]],
          sides: Iterable[Side | tuple[str, Sequence[int]]]) -> Board:
    """Build a board and its derived data. Disk and side conditions are not checked here."""
    vertex_count = int(vertex_count)
    if vertex_count < 1:
        raise BoardError("vertex_count must be positive")
    tris = []
    seen = set()
    for t in triangles:
        t = tuple(int(v) for v in t)
        if len(t) != 3:
            raise BoardError(f"triangle {t} does not have 3 vertices")
        for v in t:
            if not 0 <= v < vertex_count:
                raise BoardError(f"vertex id {v} out of range in triangle {t}")
        if len(set(t)) != 3:
            raise BoardError(f"degenerate triangle {t}")
        key = tuple(sorted(t))
        if key in seen:
            raise BoardError(f"duplicate triangle {key}")
        seen.add(key)
        tris.append(key)
    side_objs = []
    for s in sides:
        if not isinstance(s, Side):
            s = Side(*s)
        for v in s.path:
            if not 0 <= v < vertex_count:
                raise BoardError(f"vertex id {v} out of range on side {s.label}")
        side_objs.append(s)
    return Board(vertex_count, tuple(tris), tuple(side_objs))


def side_vertices(board: Board, label: str) -> frozenset[int]:
    try:
        return frozenset(board.side(label).path)
    except KeyError:
        raise KeyError(f"unknown side label {label!r}") from None


def corners(board: Board) -> list[int]:
    """Corner vertices in side order: corner i is the start of side i."""
    return [s.path[0] for s in board.sides]


def require_valid(board: Board, labels: tuple[str, ...]) -> None:
    """Raise :class:`BoardError` unless ``board`` validates with exactly ``labels``."""
    report = validate(board)
    if not report.ok or board.labels != labels:
        want = "4-sided Hex" if len(labels) == 4 else "3-sided Y"
        raise BoardError(f"input is not a valid {want} board: {report}")


def _link_edges(board: Board, v: int) -> list[tuple[int, int]]:
    out = []
    for t in board.triangles:
        if v in t:
            a, b = (u for u in t if u != v)
            out.append((a, b))
    return out


def _link_shape(link: list[tuple[int, int]]) -> str:
    """Classify a vertex link as 'cycle', 'path', or 'bad'."""
    if not link:
        return "bad"
    deg: dict[int, int] = defaultdict(int)
    nbrs: dict[int, set[int]] = defaultdict(set)
    for a, b in link:
        deg[a] += 1
        deg[b] += 1
        nbrs[a].add(b)
        nbrs[b].add(a)
    # connectivity of the link graph
    start = next(iter(nbrs))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in nbrs[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != len(nbrs) or max(deg.values()) > 2:
        return "bad"
    ends = sum(1 for d in deg.values() if d == 1)
    if ends == 0 and len(link) == len(nbrs):
        return "cycle"
    if ends == 2 and len(link) == len(nbrs) - 1:
        return "path"
    return "bad"


def validate(board: Board) -> ValidationReport:
    """Check every disk and side condition; failures are collected, never raised."""
    out: list[Violation] = []
    add = lambda rule, msg, simp=(): out.append(Violation(rule, msg, tuple(simp)))

    if not board.triangles:
        add("empty", "board has no triangles")
        return ValidationReport(tuple(out))

    over = sorted(e for e, n in board.edge_triangle_count.items() if n > 2)
    if over:
        add("edge-multiplicity", f"{len(over)} edge(s) lie in more than 2 triangles", over)

    isolated = [v for v in range(board.vertex_count) if not board.adjacency[v]]
    if isolated:
        add("isolated-vertex", f"vertices {isolated} lie in no triangle", [(v,) for v in isolated])

    # connectivity
    seen = {0} if board.adjacency[0] else set()
    stack = list(seen)
    while stack:
        u = stack.pop()
        for w in board.adjacency[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != board.vertex_count:
        add("connected", f"complex is disconnected ({len(seen)} of {board.vertex_count} vertices reachable from 0)")

    chi = board.euler_characteristic()
    if chi != 1:
        add("euler", f"V - E + T = {board.vertex_count} - {len(board.edges)} - {len(board.triangles)} = {chi}, expected 1")

    cycle = board.boundary_cycle
    if cycle is None:
        add("boundary-cycle", "edges lying in exactly one triangle do not form a single simple cycle",
            sorted(board.boundary_edges))

    on_boundary = {v for e in board.boundary_edges for v in e}
    bad_links = []
    for v in range(board.vertex_count):
        if not board.adjacency[v]:
            continue
        shape = _link_shape(_link_edges(board, v))
        want = "path" if v in on_boundary else "cycle"
        if shape != want:
            bad_links.append((v,))
    if bad_links:
        add("vertex-link", f"vertices {[v for v, in bad_links]} do not have a disk-like link", bad_links)

    _validate_sides(board, cycle, add)
    return ValidationReport(tuple(out))


def _validate_sides(board: Board, cycle, add) -> None:
    labels = board.labels
    if labels not in (HEX_LABELS, Y_LABELS):
        add("side-labels", f"sides must be {' '.join(HEX_LABELS)} or {' '.join(Y_LABELS)} in cyclic order, got {' '.join(labels)}")
        return
    ok = True
    for s in board.sides:
        if len(s.path) < 2:
            add("side-length", f"side {s.label} has no edge", [tuple(s.path)])
            ok = False
        if len(set(s.path)) != len(s.path):
            add("side-path", f"side {s.label} repeats a vertex", [tuple(s.path)])
            ok = False
        off = [e for e in s.edges if e not in board.boundary_edges]
        if off:
            add("side-path", f"side {s.label} uses non-boundary edges {off}", off)
            ok = False
    if not ok:
        return
    k = len(board.sides)
    for i, s in enumerate(board.sides):
        nxt = board.sides[(i + 1) % k]
        if s.path[-1] != nxt.path[0]:
            add("side-decomposition", f"side {s.label} ends at {s.path[-1]} but {nxt.label} starts at {nxt.path[0]}")
            ok = False
    used: dict[tuple[int, int], int] = defaultdict(int)
    for s in board.sides:
        for e in s.edges:
            used[e] += 1
    twice = sorted(e for e, n in used.items() if n > 1)
    missed = sorted(board.boundary_edges - set(used))
    if twice:
        add("side-decomposition", f"boundary edges {twice} are covered by more than one side", twice)
        ok = False
    if missed:
        add("side-decomposition", f"boundary edges {missed} are not covered by any side", missed)
        ok = False
    if ok and cycle is not None:
        walk = [v for s in board.sides for v in s.path[:-1]]
        if len(walk) != len(cycle) or len(set(walk)) != len(walk):
            add("side-decomposition", "sides do not traverse the boundary cycle exactly once")
