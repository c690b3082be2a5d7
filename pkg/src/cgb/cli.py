"""``cgb`` command line.

Exit codes: 0 success, 1 invalid input or board, 2 theorem violation (a draw
or a double win was observed), 3 usage error.
"""

from __future__ import annotations

import argparse
import csv
import logging
import sys
from typing import Optional, Sequence

from . import gale as gale_mod
from .board import BoardError, validate
from .export import draw_board, export_dot, plot_tally
from .fileformat import BoardFileError, InvalidBoard, read_board, write_board
from .generators import gen_hex_dual, gen_random, gen_y_dual
from .reductions import double_y_to_hex, extend_y_from_hex, mirror_coloring
from .rules import BLUE, RED, TheoremViolation, goal_chains, is_full, winner, witness_path
from .verify import (DEFAULT_GUARD, GuardExceeded, Predicate, Tally, coloring_from_bits,
                     enumerate_exhaustive, free_vertices, invariant_suite, sample_random,
                     selfplay_records, tally_records)

EXIT_OK, EXIT_INVALID, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cgb", description="Generalized Hex and Y on triangulated disks.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("validate", help="check disk and side conditions").add_argument("file")

    sub.add_parser("winner", help="report the winner of the file's coloring").add_argument("file")

    def add_report_opts(sp):
        sp.add_argument("--csv", metavar="OUT", help="also write the tally as CSV")
        sp.add_argument("--figure", metavar="OUT", help="also render the tally as an image")

    sp = sub.add_parser("enumerate", help="tally every full coloring")
    sp.add_argument("file")
    sp.add_argument("--guard", type=int, default=DEFAULT_GUARD)
    sp.add_argument("--workers", type=int, default=1)
    add_report_opts(sp)

    sp = sub.add_parser("sample", help="tally random full colorings")
    sp.add_argument("file")
    sp.add_argument("--trials", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    add_report_opts(sp)

    sp = sub.add_parser("suite", help="run every cross-construction check")
    sp.add_argument("file")
    sp.add_argument("--guard", type=int, default=16)

    sp = sub.add_parser("reduce", help="apex extension (--to-y) or doubling (--to-hex)")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--to-y", action="store_true")
    g.add_argument("--to-hex", action="store_true")
    sp.add_argument("file")
    sp.add_argument("-o", "--output", required=True)

    sp = sub.add_parser("gale", help="augmented-board classification")
    sp.add_argument("file")
    sp.add_argument("--guard", type=int, default=16)

    sp = sub.add_parser("selfplay", help="random games to a full board")
    sp.add_argument("file")
    sp.add_argument("--games", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--records", action="store_true", help="print one line per game")
    add_report_opts(sp)

    sp = sub.add_parser("gen", help="generate a board file")
    sp.add_argument("kind", choices=["hex", "y", "random"])
    sp.add_argument("params", nargs="+", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("-o", "--output", required=True)

    sp = sub.add_parser("export", help="DOT text (stdout or --dot) and optional PNG")
    sp.add_argument("file")
    sp.add_argument("--dot", metavar="OUT")
    sp.add_argument("--png", metavar="OUT")
    return p


def _emit_tally(tally: Tally, args, title: str) -> int:
    print(tally.line())
    if getattr(args, "csv", None):
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["total", "red", "blue", "draw", "both"])
            w.writerow([tally.total, tally.red_wins, tally.blue_wins, tally.draws, tally.double_wins])
    if getattr(args, "figure", None):
        plot_tally(tally, args.figure, title)
    return EXIT_OK if tally.compliant else EXIT_VIOLATION


def _cmd_validate(args, predicate):
    board, _ = read_board(args.file, check=False)
    report = validate(board)
    print(report)
    if report.ok:
        print(f"kind={board.kind} vertices={board.vertex_count} edges={len(board.edges)} "
              f"triangles={len(board.triangles)} euler={board.euler_characteristic()}")
    return EXIT_OK if report.ok else EXIT_INVALID


def _cmd_winner(args, predicate):
    board, col = read_board(args.file)
    out = winner(board, col)
    print(out)
    if out.decided:
        print("witness " + " ".join(map(str, sorted(out.witness.vertices))))
        if board.kind == "hex":
            a, b = ("R1", "R2") if out.color is RED else ("B1", "B2")
            print("path " + " ".join(map(str, witness_path(board, col, out.witness, a, b))))
    elif is_full(col):
        raise TheoremViolation("full coloring has no winner")
    return EXIT_OK


def _cmd_enumerate(args, predicate):
    board, _ = read_board(args.file)
    tally = enumerate_exhaustive(board, args.guard, predicate=predicate, workers=args.workers)
    return _emit_tally(tally, args, f"{board.kind} board, {board.vertex_count} vertices, exhaustive")


def _cmd_sample(args, predicate):
    board, _ = read_board(args.file)
    tally = sample_random(board, args.trials, args.seed, predicate=predicate)
    return _emit_tally(tally, args, f"{board.kind} board, {args.trials} random colorings")


def _cmd_suite(args, predicate):
    board, _ = read_board(args.file, check=False)
    report = invariant_suite(board, args.guard, predicate=predicate)
    for c in report.checks:
        line = f"{c.status.upper()} {c.name}"
        if c.detail and c.detail != "ok":
            line += " " + c.detail.replace("\n", "; ")
        print(line)
        if c.status == "fail" and c.coloring is not None:
            print("  counterexample " + "".join("." if x is None else x.value for x in c.coloring))
    if report.theorem_violated:
        return EXIT_VIOLATION
    return EXIT_OK if report.ok else EXIT_INVALID


def _cmd_reduce(args, predicate):
    board, col = read_board(args.file)
    if args.to_y:
        ext = extend_y_from_hex(board)
        out_col = ext.lift(col)
        write_board(args.output, ext.y_board, out_col)
        print(f"y board: vertices={ext.y_board.vertex_count} r0={ext.apex_r0} b0={ext.apex_b0}")
    else:
        d = double_y_to_hex(board)
        if not validate(d.hex_board).ok:
            print("cgb: warning: l1 has chords, the doubled board is not a simplicial disk", file=sys.stderr)
        write_board(args.output, d.hex_board, mirror_coloring(d, col))
        print(f"hex board: vertices={d.hex_board.vertex_count} "
              f"fold={' '.join(map(str, d.fold.image))}")
    return EXIT_OK


def _cmd_gale(args, predicate):
    board, col = read_board(args.file)
    g = gale_mod.augment(board)
    d = g.d_board
    print(f"vertices={d.vertex_count} edges={len(d.edges)} triangles={len(d.triangles)} "
          f"euler={d.euler_characteristic()}")
    print("square r-={} b-={} r+={} b+={}".format(*g.square))
    free = free_vertices(board, col)
    if len(free) > args.guard:
        raise GuardExceeded(f"{len(free)} uncolored vertices exceed the guard of {args.guard}")
    tally = Tally()
    counts = {"cross": 0, "nonsimplicial": 0, "identity": 0, "disagree": 0}
    for i in range(1 << len(free)):
        full = coloring_from_bits(board, free, [(i >> j) & 1 for j in range(len(free))], col)
        part = gale_mod.classify(g, g.lift(full))
        rr = gale_mod.retraction_check(g, part)
        red = part.r_minus in part.v_plus
        blue = part.b_minus in part.w_plus
        tally.add(red, blue)
        direct = winner(board, full).color
        counts["cross"] += bool(rr.cross_edges)
        counts["nonsimplicial"] += not rr.simplicial
        counts["identity"] += rr.identity_on_s
        counts["disagree"] += (RED if red and not blue else BLUE if blue and not red else None) is not direct
        if not free:
            for name, block in zip(("V+", "V-", "W+", "W-"), part.blocks()):
                print(f"{name} " + " ".join(map(str, sorted(block))))
            print(f"simplicial={rr.simplicial} identity_on_S={rr.identity_on_s} "
                  f"cross_edges={len(rr.cross_edges)}")
    print(f"colorings={tally.total} cross_edges={counts['cross']} non_simplicial={counts['nonsimplicial']} "
          f"identity_on_S={counts['identity']} disagreements={counts['disagree']}")
    print(tally.line())
    if not tally.compliant:
        return EXIT_VIOLATION
    return EXIT_OK if not any(counts.values()) else EXIT_INVALID


def _cmd_selfplay(args, predicate):
    board, _ = read_board(args.file)
    kwargs = {"predicate": predicate} if predicate is not None else {}
    records = selfplay_records(board, args.games, args.seed, **kwargs)
    if args.records:
        for k, r in enumerate(records):
            print(f"game {k} winner={r.winner} decided_at={r.decided_at} moves={' '.join(map(str, r.moves))}")
    return _emit_tally(tally_records(records), args, f"{board.kind} board, {args.games} random games")


def _cmd_gen(args, predicate):
    p = args.params
    want = {"hex": 2, "y": 1, "random": 2}[args.kind]
    if len(p) != want:
        raise UsageError(f"gen {args.kind} takes {want} integer parameter(s)")
    if args.kind == "hex":
        board = gen_hex_dual(*p)
    elif args.kind == "y":
        board = gen_y_dual(*p)
    else:
        board = gen_random(p[0], p[1], args.seed)
    write_board(args.output, board)
    print(f"wrote {args.output}: kind={board.kind} vertices={board.vertex_count} triangles={len(board.triangles)}")
    return EXIT_OK


def _cmd_export(args, predicate):
    board, col = read_board(args.file)
    red, blue = goal_chains(board, col)
    chain = red or blue
    text = export_dot(board, col, chain)
    if args.dot:
        with open(args.dot, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.png:
        draw_board(board, args.png, col, chain, title=f"{board.kind} board")
    return EXIT_OK


_COMMANDS = {
    "validate": _cmd_validate, "winner": _cmd_winner, "enumerate": _cmd_enumerate,
    "sample": _cmd_sample, "suite": _cmd_suite, "reduce": _cmd_reduce, "gale": _cmd_gale,
    "selfplay": _cmd_selfplay, "gen": _cmd_gen, "export": _cmd_export,
}


def run(argv: Optional[Sequence[str]] = None, predicate: Optional[Predicate] = None) -> int:
    """Run one subcommand and return its exit code.

    ``predicate`` replaces the goal test used by enumerate, sample, suite and
    selfplay; it exists so tests can inject a broken winner rule.
    """
    try:
        args = _parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return exc.code or EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return _COMMANDS[args.command](args, predicate)
    except UsageError as exc:
        print(f"cgb: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except InvalidBoard as exc:
        print(f"invalid board:\n{exc}", file=sys.stderr)
        return EXIT_INVALID
    except (BoardFileError, BoardError, GuardExceeded, ValueError, OSError) as exc:
        print(f"cgb: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())
