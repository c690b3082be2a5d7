"""Exhaustive and sampled enumeration of colorings, cross-construction suites, self-play.

Colorings of the free (not pre-colored) vertices are indexed by integers: bit
``i`` of the index is the color of the ``i``-th free vertex in ascending id
order, 0 for Red and 1 for Blue.

The default evaluator checks a whole batch of colorings at once: each player's
reachable set is grown from the first goal side by repeated multiplication with
the adjacency matrix, restricted to that player's vertices. Passing a
``predicate`` switches to a per-coloring loop over an arbitrary goal function
(by default :func:`cgb.rules.goal_chains`).
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from . import gale as gale_mod
from .board import Board, edge, validate
from .reductions import (double_y_to_hex, extend_y_from_hex, l1_chords,
                         mirror_coloring, y_winner_via_hex)
from .rules import BLUE, RED, Coloring, TheoremViolation, goal_chains, goal_sides, winner

log = logging.getLogger(__name__)

DEFAULT_GUARD = 24
_CHUNK = 1 << 15

Predicate = Callable[[Board, Coloring], tuple[bool, bool]]


class GuardExceeded(ValueError):
    pass


def rules_predicate(board: Board, coloring: Coloring) -> tuple[bool, bool]:
    red, blue = goal_chains(board, coloring)
    return red is not None, blue is not None


@dataclass
class Tally:
    red_wins: int = 0
    blue_wins: int = 0
    draws: int = 0
    double_wins: int = 0

    @property
    def total(self) -> int:
        return self.red_wins + self.blue_wins + self.draws + self.double_wins

    @property
    def compliant(self) -> bool:
        return self.draws == 0 and self.double_wins == 0

    def __add__(self, other: "Tally") -> "Tally":
        return Tally(self.red_wins + other.red_wins, self.blue_wins + other.blue_wins,
                     self.draws + other.draws, self.double_wins + other.double_wins)

    def add(self, red: bool, blue: bool) -> None:
        if red and blue:
            self.double_wins += 1
        elif red:
            self.red_wins += 1
        elif blue:
            self.blue_wins += 1
        else:
            self.draws += 1

    @classmethod
    def from_arrays(cls, red_ok: np.ndarray, blue_ok: np.ndarray) -> "Tally":
        return cls(int(np.count_nonzero(red_ok & ~blue_ok)), int(np.count_nonzero(blue_ok & ~red_ok)),
                   int(np.count_nonzero(~red_ok & ~blue_ok)), int(np.count_nonzero(red_ok & blue_ok)))

    def line(self) -> str:
        return (f"total={self.total} red={self.red_wins} blue={self.blue_wins} "
                f"draw={self.draws} both={self.double_wins}")

    def __str__(self):
        return self.line()


def free_vertices(board: Board, pre_coloring: Optional[Coloring] = None) -> list[int]:
    if pre_coloring is None:
        return list(range(board.vertex_count))
    if len(pre_coloring) != board.vertex_count:
        raise ValueError("pre-coloring does not match the board")
    return [v for v, c in enumerate(pre_coloring) if c is None]


def coloring_from_bits(board: Board, free: Sequence[int], bits: Sequence[int],
                       pre_coloring: Optional[Coloring] = None) -> Coloring:
    col = list(pre_coloring) if pre_coloring is not None else [None] * board.vertex_count
    for v, b in zip(free, bits):
        col[v] = BLUE if b else RED
    return tuple(col)


def coloring_from_index(board: Board, index: int, pre_coloring: Optional[Coloring] = None) -> Coloring:
    free = free_vertices(board, pre_coloring)
    return coloring_from_bits(board, free, [(index >> i) & 1 for i in range(len(free))], pre_coloring)


class BatchEvaluator:
    """Evaluates both goals for many full colorings of one board at once."""

    def __init__(self, board: Board, pre_coloring: Optional[Coloring] = None):
        n = board.vertex_count
        self.board = board
        self.free = np.array(free_vertices(board, pre_coloring), dtype=np.intp)
        self.fixed_red = np.zeros(n, dtype=bool)
        if pre_coloring is not None:
            self.fixed_red[[v for v, c in enumerate(pre_coloring) if c is RED]] = True
        adj = np.zeros((n, n), dtype=np.float32)
        for u, v in board.edges:
            adj[u, v] = adj[v, u] = 1.0
        self.adj = adj
        self.goals = {}
        for color in (RED, BLUE):
            masks = []
            for side in goal_sides(board, color):
                m = np.zeros(n, dtype=bool)
                m[list(side)] = True
                masks.append(m)
            self.goals[color] = masks

    def red_masks(self, bits: np.ndarray) -> np.ndarray:
        """Boolean (m, n) matrix of red vertices from an (m, free) 0/1 matrix."""
        red = np.broadcast_to(self.fixed_red, (bits.shape[0], self.board.vertex_count)).copy()
        red[:, self.free] = bits == 0
        return red

    def _flood(self, own: np.ndarray, seed: np.ndarray) -> np.ndarray:
        reach = own & seed
        while True:
            grown = own & (reach | ((reach.astype(np.float32) @ self.adj) > 0))
            if np.array_equal(grown, reach):
                return reach
            reach = grown

    def _goal(self, own: np.ndarray, color) -> np.ndarray:
        first, *rest = self.goals[color]
        if len(rest) == 1:
            reach = self._flood(own, first)
            return (reach & rest[0]).any(axis=1)
        # Y: the chain through one l1 vertex must also meet l2 and l3
        ok = np.zeros(own.shape[0], dtype=bool)
        for v in np.flatnonzero(first):
            seed = np.zeros(self.board.vertex_count, dtype=bool)
            seed[v] = True
            reach = self._flood(own, seed)
            ok |= np.logical_and.reduce([(reach & m).any(axis=1) for m in rest])
        return ok

    def evaluate(self, bits: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        red = self.red_masks(bits)
        return self._goal(red, RED), self._goal(~red, BLUE)


def _index_bits(start: int, stop: int, k: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    return ((idx[:, None] >> np.arange(k, dtype=np.int64)) & 1).astype(np.uint8)


def tally_range(board: Board, start: int, stop: int, pre_coloring: Optional[Coloring] = None,
                predicate: Optional[Predicate] = None) -> Tally:
    """Tally coloring indices ``start <= i < stop``."""
    free = free_vertices(board, pre_coloring)
    k = len(free)
    tally = Tally()
    if predicate is not None:
        for i in range(start, stop):
            bits = [(i >> j) & 1 for j in range(k)]
            tally.add(*predicate(board, coloring_from_bits(board, free, bits, pre_coloring)))
        return tally
    ev = BatchEvaluator(board, pre_coloring)
    for lo in range(start, stop, _CHUNK):
        hi = min(stop, lo + _CHUNK)
        tally = tally + Tally.from_arrays(*ev.evaluate(_index_bits(lo, hi, k)))
    return tally


def _tally_range_args(args):
    return tally_range(*args)


def enumerate_exhaustive(board: Board, max_vertices_guard: int = DEFAULT_GUARD, *,
                         pre_coloring: Optional[Coloring] = None,
                         predicate: Optional[Predicate] = None, workers: int = 1) -> Tally:
    """Tally every full coloring of the free vertices."""
    k = len(free_vertices(board, pre_coloring))
    if k > max_vertices_guard:
        raise GuardExceeded(f"{k} free vertices exceed the guard of {max_vertices_guard}; "
                            "use sample_random instead")
    total = 1 << k
    log.debug("enumerating %d colorings of %d free vertices", total, k)
    if workers <= 1 or total <= _CHUNK:
        return tally_range(board, 0, total, pre_coloring, predicate)
    step = -(-total // workers)
    jobs = [(board, lo, min(total, lo + step), pre_coloring, predicate) for lo in range(0, total, step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_tally_range_args, jobs), Tally())


def sample_random(board: Board, trials: int, seed: int, *,
                  pre_coloring: Optional[Coloring] = None,
                  predicate: Optional[Predicate] = None) -> Tally:
    """Tally ``trials`` uniformly random full colorings (numpy PCG64 seeded with ``seed``)."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = np.random.default_rng(seed)
    free = free_vertices(board, pre_coloring)
    bits = rng.integers(0, 2, size=(trials, len(free)), dtype=np.uint8)
    if predicate is not None:
        tally = Tally()
        for row in bits:
            tally.add(*predicate(board, coloring_from_bits(board, free, row, pre_coloring)))
        return tally
    ev = BatchEvaluator(board, pre_coloring)
    tally = Tally()
    for lo in range(0, trials, _CHUNK):
        tally = tally + Tally.from_arrays(*ev.evaluate(bits[lo:lo + _CHUNK]))
    return tally


# --------------------------------------------------------------------------- suites


@dataclass
class CheckResult:
    name: str
    status: str  # "pass", "fail" or "skip"
    detail: str = ""
    board: Optional[Board] = None
    coloring: Optional[Coloring] = None

    @property
    def passed(self) -> bool:
        return self.status != "fail"


@dataclass
class SuiteReport:
    checks: list[CheckResult] = field(default_factory=list)
    tally: Optional[Tally] = None

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def theorem_violated(self) -> bool:
        return self.tally is not None and not self.tally.compliant

    def get(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def record(self, name, passed, detail="", board=None, coloring=None):
        self.checks.append(CheckResult(name, "pass" if passed else "fail", detail, board, coloring))

    def skip(self, name, detail):
        self.checks.append(CheckResult(name, "skip", detail))


def _all_colorings(board: Board, pre_coloring: Optional[Coloring] = None):
    free = free_vertices(board, pre_coloring)
    for i in range(1 << len(free)):
        yield coloring_from_bits(board, free, [(i >> j) & 1 for j in range(len(free))], pre_coloring)


def _first_failure(colorings, check):
    """Run ``check`` on each coloring; return (count, first failing coloring, message)."""
    count, first, msg = 0, None, ""
    for col in colorings:
        try:
            err = check(col)
        except TheoremViolation as exc:
            err = str(exc)
        if err:
            count += 1
            if first is None:
                first, msg = col, err
    return count, first, msg


def invariant_suite(board: Board, max_vertices_guard: int = 16,
                    predicate: Optional[Predicate] = None) -> SuiteReport:
    """Run every applicable cross-check on ``board``.

    The per-coloring cross-checks loop over all colorings with the reference
    rules, so the guard here is tighter than for plain enumeration.
    """
    report = SuiteReport()
    vr = validate(board)
    report.record("validate", vr.ok, str(vr), board)
    if not vr.ok:
        return report

    n = board.vertex_count
    if n > max_vertices_guard:
        report.skip("exhaustive", f"{n} vertices exceed the guard of {max_vertices_guard}")
        return report
    tally = enumerate_exhaustive(board, max_vertices_guard, predicate=predicate)
    report.tally = tally
    first = None
    if not tally.compliant:
        pred = predicate or rules_predicate
        first = next(col for col in _all_colorings(board) if len(set(pred(board, col))) == 1)
    report.record("exhaustive", tally.compliant, tally.line(), board, first)

    if board.kind == "y":
        _y_checks(board, report)
    else:
        _hex_checks(board, report)
    return report


def _y_checks(board: Board, report: SuiteReport) -> None:
    d = double_y_to_hex(board)
    chords = l1_chords(board)
    if chords:
        report.skip("doubling-valid", f"l1 has chords {chords}; the double is not a simplicial complex")
    else:
        vr = validate(d.hex_board)
        report.record("doubling-valid", vr.ok, str(vr), d.hex_board)
    bad = {name: m.non_simplicial_edges() + m.non_simplicial_triangles()
           for name, m in (("embed", d.embed), ("reflect", d.reflect), ("fold", d.fold))}
    report.record("doubling-simplicial", not any(bad.values()),
                  "; ".join(f"{k}: {v}" for k, v in bad.items() if v) or "embed, reflect, fold simplicial")
    total = d.hex_board.vertex_count
    s, p = d.reflect, d.fold
    involution = all(s(s(v)) == v for v in range(total))
    fixed = {v for v in range(total) if s(v) == v}
    report.record("reflection-involution", involution and fixed == set(d.l1),
                  f"involution={involution} fixed={sorted(fixed)} l1={sorted(d.l1)}")
    sides = {lab: set(d.hex_board.side(lab).path) for lab in ("R1", "B1", "R2", "B2")}
    swaps = (s.apply(sides["R1"]) == sides["B1"] and s.apply(sides["B1"]) == sides["R1"]
             and s.apply(sides["R2"]) == sides["B2"] and s.apply(sides["B2"]) == sides["R2"])
    report.record("reflection-sides", swaps, "s swaps R1<->B1 and R2<->B2")
    fold_ok = (all(p(d.embed(v)) == v for v in range(board.vertex_count))
               and all(p(s(v)) == p(v) for v in range(total)))
    report.record("fold-identities", fold_ok, "p o embed = id, p o s = p")

    def via_hex(col):
        out = y_winner_via_hex(board, col, d)
        if out.color is not winner(board, col).color:
            return f"via-hex {out} differs from direct"
        if not all(out.witness.vertices & set(side.path) for side in board.sides):
            return "folded witness misses a side"
        return ""

    count, first, msg = _first_failure(_all_colorings(board), via_hex)
    report.record("via-hex-agreement", count == 0, msg or f"{1 << board.vertex_count} colorings agree",
                  board, first)

    def hex_meets_l1(col):
        mirrored = mirror_coloring(d, col)
        for chain in goal_chains(d.hex_board, mirrored):
            if chain is not None and not chain.vertices & d.l1:
                return f"Hex chain {sorted(chain.vertices)} misses l1"
        return ""

    count, first, msg = _first_failure(_all_colorings(board), hex_meets_l1)
    report.record("hex-chain-meets-l1", count == 0, msg or "every Hex chain on the double meets l1",
                  board, first)


def _hex_checks(board: Board, report: SuiteReport) -> None:
    ext = extend_y_from_hex(board)
    vr = validate(ext.y_board)
    report.record("extension-valid", vr.ok, str(vr), ext.y_board)

    def equivalent(col):
        a = winner(ext.y_board, ext.lift(col)).color
        b = winner(board, col).color
        return "" if a is b else f"extension winner {a} != hex winner {b}"

    count, first, msg = _first_failure(_all_colorings(board), equivalent)
    report.record("extension-equivalence", count == 0, msg or "extension agrees on every coloring",
                  board, first)

    g = gale_mod.augment(board)
    d = g.d_board
    vr = validate(d)
    cyc = d.boundary_cycle or ()
    square_ok = _same_cycle(cyc, g.square)
    report.record("gale-valid", vr.ok and square_ok and d.euler_characteristic() == 1,
                  f"{vr}; boundary={cyc}; square={g.square}", d)

    stats = {"cross": 0, "nonsimplicial": 0, "identity": 0, "disagree": 0}
    firsts: dict[str, Coloring] = {}
    for col in _all_colorings(board):
        lifted = g.lift(col)
        part = gale_mod.classify(g, lifted)
        rr = gale_mod.retraction_check(g, part)
        try:
            agree = gale_mod.winner_from_classification(part).color is winner(board, col).color
        except TheoremViolation:
            agree = False
        for key, bad in (("cross", bool(rr.cross_edges)), ("nonsimplicial", not rr.simplicial),
                         ("identity", rr.identity_on_s), ("disagree", not agree)):
            if bad:
                stats[key] += 1
                firsts.setdefault(key, col)
    for key, name in (("cross", "gale-cross-edges"), ("nonsimplicial", "gale-simplicial"),
                      ("identity", "gale-identity-on-S-fails"), ("disagree", "gale-winner-agreement")):
        report.record(name, stats[key] == 0, f"{stats[key]} failing colorings", board, firsts.get(key))


def _same_cycle(cycle: Sequence[int], target: Sequence[int]) -> bool:
    if len(cycle) != len(target):
        return False
    edges = {edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))}
    return edges == {edge(target[i], target[(i + 1) % len(target)]) for i in range(len(target))}


# --------------------------------------------------------------------------- self-play


@dataclass(frozen=True)
class GameRecord:
    moves: tuple[int, ...]
    winner: Optional[str]  # "red", "blue", "draw" or "both"
    decided_at: Optional[int]  # number of moves after which the winner was fixed


def play_random_game(board: Board, rng: np.random.Generator,
                     predicate: Predicate = rules_predicate) -> GameRecord:
    """Red and Blue alternately color a uniformly random empty vertex, Red first."""
    order = [int(v) for v in rng.permutation(board.vertex_count)]
    col: list = [None] * board.vertex_count
    decided_at = None
    for k, v in enumerate(order):
        col[v] = RED if k % 2 == 0 else BLUE
        if decided_at is None:
            red, blue = predicate(board, tuple(col))
            if red or blue:
                decided_at = k + 1
    red, blue = predicate(board, tuple(col))
    result = {(True, False): "red", (False, True): "blue", (False, False): "draw", (True, True): "both"}
    return GameRecord(tuple(order), result[red, blue], decided_at)


def selfplay_records(board: Board, games: int, seed: int,
                     predicate: Predicate = rules_predicate) -> list[GameRecord]:
    if games < 1:
        raise ValueError("games must be at least 1")
    rng = np.random.default_rng(seed)
    return [play_random_game(board, rng, predicate) for _ in range(games)]


def tally_records(records: Sequence[GameRecord]) -> Tally:
    t = Tally()
    for r in records:
        t.add(r.winner in ("red", "both"), r.winner in ("blue", "both"))
    return t


def selfplay(board: Board, games: int, seed: int, predicate: Predicate = rules_predicate) -> Tally:
    return tally_records(selfplay_records(board, games, seed, predicate))
