"""Acceptance criteria 1-10, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v``; the PASS/FAIL lines are
written to the terminal even when output capture is on.
"""

import time
from pathlib import Path

import pytest

from cgb import gale
from cgb.board import build, validate
from cgb.cli import run
from cgb.export import export_dot
from cgb.fileformat import parse_board_file, render_board_file
from cgb.generators import gen_hex_dual, gen_random, gen_y_dual
from cgb.reductions import double_y_to_hex, extend_y_from_hex, mirror_coloring, y_winner_via_hex
from cgb.rules import RED, Chain, empty_coloring, make_coloring, winner
from cgb.verify import enumerate_exhaustive, rules_predicate, selfplay_records, tally_records

from conftest import all_full_colorings

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\nCRITERION {number}: {'PASS' if ok else 'FAIL'} {detail}")
        assert ok, detail
    return emit


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_criterion_1_minimal_y(report):
    board = gen_y_dual(2)
    t, dt = _timed(lambda: enumerate_exhaustive(board))
    ok = (t.total, t.red_wins, t.blue_wins, t.draws, t.double_wins) == (8, 4, 4, 0, 0) and dt < 0.1
    report(1, ok, f"{t.line()} time={dt:.4f}s")


def test_criterion_2_minimal_hex(report, minimal_hex):
    t, dt = _timed(lambda: enumerate_exhaustive(minimal_hex))
    ok = (t.total, t.red_wins, t.blue_wins, t.draws, t.double_wins) == (16, 8, 8, 0, 0) and dt < 0.1
    report(2, ok, f"{t.line()} time={dt:.4f}s")


def test_criterion_3_hex_3x3(report):
    board = gen_hex_dual(3, 3)
    t, dt = _timed(lambda: enumerate_exhaustive(board))
    ok = t.total == 512 and t.draws == 0 and t.double_wins == 0 and dt < 1.0
    report(3, ok, f"{t.line()} time={dt:.4f}s")


def test_criterion_4_y_4(report):
    board = gen_y_dual(4)
    t, dt = _timed(lambda: enumerate_exhaustive(board))
    ok = t.total == 1024 and t.draws == 0 and t.double_wins == 0 and dt < 1.0
    report(4, ok, f"{t.line()} time={dt:.4f}s")


def test_criterion_5_doubling(report):
    y = gen_y_dual(3)
    d = double_y_to_hex(y)
    l1 = set(y.side("l1").path)
    total = d.hex_board.vertex_count
    failures = []
    if not (d.fold.is_simplicial() and d.reflect.is_simplicial()):
        failures.append("fold/reflect not simplicial")
    if not all(d.reflect(d.reflect(v)) == v for v in range(total)):
        failures.append("reflection not an involution")
    if {v for v in range(total) if d.reflect(v) == v} != l1:
        failures.append("reflection fixed set differs from l1")
    count = 0
    for col in all_full_colorings(y.vertex_count):
        count += 1
        if y_winner_via_hex(y, col, d).color is not winner(y, col).color:
            failures.append(f"via-hex disagreement at {col}")
        if not winner(d.hex_board, mirror_coloring(d, col)).witness.vertices & l1:
            failures.append(f"hex witness misses l1 at {col}")
    report(5, count == 64 and not failures, f"colorings={count} failures={len(failures)}")


def test_criterion_6_extension(report):
    h = gen_hex_dual(3, 3)
    ext = extend_y_from_hex(h)
    count = failures = 0
    for col in all_full_colorings(h.vertex_count):
        count += 1
        failures += winner(ext.y_board, ext.lift(col)).color is not winner(h, col).color
    report(6, count == 512 and failures == 0, f"colorings={count} failures={failures}")


def test_criterion_7_gale(report):
    h = gen_hex_dual(3, 3)
    g = gale.augment(h)
    d = g.d_board
    valid = validate(d).ok and d.euler_characteristic() == 1
    count = 0
    bad = {"cross": 0, "nonsimplicial": 0, "identity": 0, "disagree": 0}
    for col in all_full_colorings(h.vertex_count):
        count += 1
        p = gale.classify(g, g.lift(col))
        rr = gale.retraction_check(g, p)
        bad["cross"] += bool(rr.cross_edges)
        bad["nonsimplicial"] += not rr.simplicial
        bad["identity"] += rr.identity_on_s
        bad["disagree"] += gale.winner_from_classification(p).color is not winner(h, col).color
    ok = valid and count == 512 and not any(bad.values())
    report(7, ok, f"valid={valid} euler={d.euler_characteristic()} colorings={count} "
                  + " ".join(f"{k}={v}" for k, v in bad.items()))


def test_criterion_8_fuzz(report):
    t0 = time.perf_counter()
    invalid = draws = doubles = sides3 = sides4 = 0
    max_n = 0
    for seed in range(500):
        n_sides = 3 + seed % 2
        board = gen_random(4 + seed % 11, n_sides, seed)
        max_n = max(max_n, board.vertex_count)
        sides3 += n_sides == 3
        sides4 += n_sides == 4
        if not validate(board).ok:
            invalid += 1
            continue
        t = enumerate_exhaustive(board)
        draws += t.draws
        doubles += t.double_wins
    dt = time.perf_counter() - t0
    ok = invalid == draws == doubles == 0 and max_n <= 14 and dt < 60
    report(8, ok, f"boards=500 (3-sided {sides3}, 4-sided {sides4}, max vertices {max_n}) "
                  f"invalid={invalid} draws={draws} double={doubles} time={dt:.2f}s")


def test_criterion_9_selfplay(report):
    parts = []
    ok = True
    for name, board in (("hex(4,4)", gen_hex_dual(4, 4)), ("y(5)", gen_y_dual(5))):
        recs = selfplay_records(board, 1000, seed=9)
        again = selfplay_records(board, 1000, seed=9)
        t = tally_records(recs)
        same = recs == again
        ok &= t.total == 1000 and t.draws == 0 and t.double_wins == 0 and same
        parts.append(f"{name}: {t.line()} reproducible={same}")
    report(9, ok, "; ".join(parts))


def test_criterion_10_cli_contract(report, tmp_path, minimal_y, minimal_hex):
    checks = {}
    y_text = (GOLDEN / "minimal_y.cgb").read_text()
    h_text = (GOLDEN / "minimal_hex_colored.cgb").read_text()
    col = make_coloring(4, red=[0, 2], blue=[1, 3])
    checks["render-golden"] = (render_board_file(minimal_y) == y_text
                               and render_board_file(minimal_hex, col) == h_text)
    checks["round-trip"] = all(render_board_file(*parse_board_file(t)) == t for t in (y_text, h_text))
    checks["dot-golden"] = (
        export_dot(minimal_y, empty_coloring(3)).encode() == (GOLDEN / "minimal_y.dot").read_bytes()
        and export_dot(minimal_hex, col, Chain(RED, {0, 2})).encode()
        == (GOLDEN / "minimal_hex_chain.dot").read_bytes())
    out = tmp_path / "out.dot"
    checks["cli-dot"] = (run(["export", str(GOLDEN / "minimal_hex_colored.cgb"), "--dot", str(out)]) == 0
                         and out.read_bytes() == (GOLDEN / "minimal_hex_chain.dot").read_bytes())

    # exit 2 if and only if a draw or double win is tallied
    f = tmp_path / "h.cgb"
    f.write_text(render_board_file(minimal_hex))
    bad = tmp_path / "bad.cgb"
    holed = gen_hex_dual(4, 4)
    bad.write_text(render_board_file(build(16, [t for t in holed.triangles if t != (6, 9, 10)], holed.sides)))
    predicates = {
        "correct": (rules_predicate, False),
        "never": (lambda b, c: (False, False), True),
        "always": (lambda b, c: (True, True), True),
        "red-only": (lambda b, c: (True, False), False),
    }
    iff = True
    for cmd in (["enumerate"], ["sample", "--trials", "64", "--seed", "1"],
                ["selfplay", "--games", "8", "--seed", "1"], ["suite"]):
        for pred, violates in predicates.values():
            iff &= (run([cmd[0], str(f)] + cmd[1:], predicate=pred) == 2) == violates
        iff &= run([cmd[0], str(bad)] + cmd[1:]) == 1
    iff &= run(["bogus"]) == 3
    checks["exit-2-iff"] = iff
    report(10, all(checks.values()), " ".join(f"{k}={v}" for k, v in checks.items()))
