"""Gale's augmented board and the would-be retraction onto its boundary 4-cycle.

Four apexes r-, b-, r+, b+ are fanned onto R1, B1, R2, B2 and joined into a
square S, which becomes the boundary of the augmented disk D. Red vertices
split by red-connectivity to r+ (V+ / V-), blue ones by blue-connectivity to
b+ (W+ / W-). Sending each block to its apex is a simplicial map D -> S; if it
fixed S pointwise it would retract the disk onto its boundary, so on every
full coloring r- lands in V+ or b- lands in W+.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .board import HEX_LABELS, Board, Side, build, edge, require_valid
from .reductions import VertexMap
from .rules import BLUE, RED, UNDECIDED, Chain, Coloring, Outcome, TheoremViolation, is_full


@dataclass(frozen=True)
class GaleBoard:
    hex_board: Board
    d_board: Board
    r_minus: int
    r_plus: int
    b_minus: int
    b_plus: int
    embed: VertexMap
    pre_coloring: Coloring

    @property
    def apexes(self) -> tuple[int, int, int, int]:
        return self.r_minus, self.r_plus, self.b_minus, self.b_plus

    @property
    def square(self) -> tuple[int, int, int, int]:
        """The boundary cycle S in order (r-, b-, r+, b+)."""
        return self.r_minus, self.b_minus, self.r_plus, self.b_plus

    def lift(self, hex_coloring: Coloring) -> Coloring:
        col = list(self.pre_coloring)
        for v, c in enumerate(hex_coloring):
            col[self.embed(v)] = c
        return tuple(col)


@dataclass(frozen=True)
class GalePartition:
    v_plus: frozenset[int]
    v_minus: frozenset[int]
    w_plus: frozenset[int]
    w_minus: frozenset[int]
    r_minus: int
    r_plus: int
    b_minus: int
    b_plus: int

    def blocks(self):
        return self.v_plus, self.v_minus, self.w_plus, self.w_minus


@dataclass(frozen=True)
class RetractionReport:
    simplicial: bool
    identity_on_s: bool
    cross_edges: tuple[tuple[int, int], ...]
    bad_triangles: tuple[tuple[int, int, int], ...] = field(default=())


def augment(hex_board: Board) -> GaleBoard:
    require_valid(hex_board, HEX_LABELS)
    n = hex_board.vertex_count
    rm, rp, bm, bp = n, n + 1, n + 2, n + 3
    r1, b1, r2, b2 = (s.path for s in hex_board.sides)
    tris = list(hex_board.triangles)
    for apex, path in ((rm, r1), (bm, b1), (rp, r2), (bp, b2)):
        tris += [(apex, u, v) for u, v in zip(path, path[1:])]
    # corner i sits between consecutive apexes around S
    tris += [(rm, bm, r1[-1]), (bm, rp, b1[-1]), (rp, bp, r2[-1]), (bp, rm, b2[-1])]
    sides = [Side("R1", (bp, rm)), Side("B1", (rm, bm)), Side("R2", (bm, rp)), Side("B2", (rp, bp))]
    d_board = build(n + 4, tris, sides)
    pre = [None] * (n + 4)
    pre[rm] = pre[rp] = RED
    pre[bm] = pre[bp] = BLUE
    embed = VertexMap(hex_board, d_board, tuple(range(n)))
    return GaleBoard(hex_board, d_board, rm, rp, bm, bp, embed, tuple(pre))


def _reach(board: Board, coloring: Coloring, start: int) -> frozenset[int]:
    color = coloring[start]
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in board.adjacency[u]:
            if w not in seen and coloring[w] is color:
                seen.add(w)
                queue.append(w)
    return frozenset(seen)


def classify(gale: GaleBoard, full_coloring: Coloring) -> GalePartition:
    d = gale.d_board
    if len(full_coloring) != d.vertex_count or not is_full(full_coloring):
        raise ValueError("coloring is not full on the augmented board")
    for v in gale.apexes:
        if full_coloring[v] is not gale.pre_coloring[v]:
            raise ValueError(f"apex {v} must stay {gale.pre_coloring[v]}")
    red = frozenset(v for v, c in enumerate(full_coloring) if c is RED)
    blue = frozenset(range(d.vertex_count)) - red
    v_plus = _reach(d, full_coloring, gale.r_plus)
    w_plus = _reach(d, full_coloring, gale.b_plus)
    return GalePartition(v_plus, red - v_plus, w_plus, blue - w_plus, *gale.apexes)


def retraction_map(partition: GalePartition) -> dict[int, int]:
    p = partition
    target = {}
    for block, apex in ((p.v_minus, p.r_minus), (p.v_plus, p.r_plus),
                        (p.w_minus, p.b_minus), (p.w_plus, p.b_plus)):
        for v in block:
            target[v] = apex
    return target


def retraction_check(gale: GaleBoard, partition: GalePartition) -> RetractionReport:
    f = retraction_map(partition)
    s = gale.square
    s_edges = {edge(s[i], s[(i + 1) % 4]) for i in range(4)}
    bad = []
    for t in gale.d_board.triangles:
        img = {f[v] for v in t}
        if len(img) == 3 or (len(img) == 2 and edge(*img) not in s_edges):
            bad.append(t)
    identity = partition.r_minus in partition.v_minus and partition.b_minus in partition.w_minus
    cross = []
    p = partition
    for u, v in sorted(gale.d_board.edges):
        for plus, minus in ((p.v_plus, p.v_minus), (p.w_plus, p.w_minus)):
            if (u in plus and v in minus) or (u in minus and v in plus):
                cross.append((u, v))
    return RetractionReport(not bad, identity, tuple(cross), tuple(bad))


def winner_from_classification(partition: GalePartition) -> Outcome:
    p = partition
    red = p.r_minus in p.v_plus
    blue = p.b_minus in p.w_plus
    if red and blue:
        raise TheoremViolation("r- is red-connected to r+ and b- is blue-connected to b+")
    if red:
        return Outcome(RED, Chain(RED, p.v_plus))
    if blue:
        return Outcome(BLUE, Chain(BLUE, p.w_plus))
    return UNDECIDED

