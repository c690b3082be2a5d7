"""The line-oriented ``cgb`` board file format.

::

    cgb 1
    vertices <N>
    triangles <T>
    t <i> <j> <k>             # T lines
    sides <S>                 # 3 or 4
    s <label> <v0> ... <vk>   # S lines, in cyclic order
    coloring <M>              # optional
    c <v> <R|B>               # M lines
"""

from __future__ import annotations

from .board import Board, BoardError, Side, ValidationReport, build, validate
from .rules import BLUE, RED, Coloring, empty_coloring

MAGIC = "cgb 1"


class BoardFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class InvalidBoard(ValueError):
    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__(str(report))


def _lines(text: str):
    for no, raw in enumerate(text.split("\n"), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield no, body.split()


def _int(tok: str, no: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise BoardFileError(f"expected an integer, got {tok!r}", no) from None


def _expect(it, keyword: str, last_no: int):
    try:
        no, toks = next(it)
    except StopIteration:
        raise BoardFileError(f"unexpected end of file, expected {keyword!r}", last_no) from None
    if toks[0] != keyword:
        raise BoardFileError(f"expected {keyword!r}, got {toks[0]!r}", no)
    return no, toks


def parse_board_file(text: str, check: bool = True) -> tuple[Board, Coloring]:
    """Parse a board file. With ``check`` the board must also validate."""
    it = iter(_lines(text))
    no, toks = _expect(it, "cgb", 0)
    if toks != ["cgb", "1"]:
        raise BoardFileError("unsupported header, expected 'cgb 1'", no)
    no, toks = _expect(it, "vertices", no)
    if len(toks) != 2:
        raise BoardFileError("expected 'vertices <N>'", no)
    n = _int(toks[1], no)
    no, toks = _expect(it, "triangles", no)
    if len(toks) != 2:
        raise BoardFileError("expected 'triangles <T>'", no)
    tris = []
    for _ in range(_int(toks[1], no)):
        no, toks = _expect(it, "t", no)
        if len(toks) != 4:
            raise BoardFileError("expected 't <i> <j> <k>'", no)
        tris.append(tuple(_int(t, no) for t in toks[1:]))
    no, toks = _expect(it, "sides", no)
    if len(toks) != 2:
        raise BoardFileError("expected 'sides <S>'", no)
    sides = []
    for _ in range(_int(toks[1], no)):
        no, toks = _expect(it, "s", no)
        if len(toks) < 3:
            raise BoardFileError("expected 's <label> <v0> ...'", no)
        sides.append(Side(toks[1], tuple(_int(t, no) for t in toks[2:])))
    try:
        board = build(n, tris, sides)
    except BoardError as exc:
        raise BoardFileError(str(exc), no) from None
    coloring = list(empty_coloring(n))
    rest = list(it)
    if rest:
        no, toks = rest[0]
        if toks[0] != "coloring" or len(toks) != 2:
            raise BoardFileError(f"expected 'coloring <M>', got {' '.join(toks)!r}", no)
        m = _int(toks[1], no)
        entries = rest[1:]
        if len(entries) != m:
            raise BoardFileError(f"coloring declares {m} entries, found {len(entries)}", no)
        for no, toks in entries:
            if len(toks) != 3 or toks[0] != "c" or toks[2] not in ("R", "B"):
                raise BoardFileError("expected 'c <v> <R|B>'", no)
            v = _int(toks[1], no)
            if not 0 <= v < n:
                raise BoardFileError(f"vertex {v} out of range", no)
            coloring[v] = RED if toks[2] == "R" else BLUE
    if check:
        report = validate(board)
        if not report.ok:
            raise InvalidBoard(report)
    return board, tuple(coloring)


def render_board_file(board: Board, coloring: Coloring | None = None) -> str:
    out = [MAGIC, f"vertices {board.vertex_count}", f"triangles {len(board.triangles)}"]
    out += [f"t {a} {b} {c}" for a, b, c in board.triangles]
    out.append(f"sides {len(board.sides)}")
    out += [f"s {s.label} " + " ".join(map(str, s.path)) for s in board.sides]
    if coloring is not None:
        entries = [(v, c) for v, c in enumerate(coloring) if c is not None]
        if entries:
            out.append(f"coloring {len(entries)}")
            out += [f"c {v} {c.value}" for v, c in entries]
    return "\n".join(out) + "\n"


def read_board(path, check: bool = True) -> tuple[Board, Coloring]:
    with open(path, encoding="utf-8") as fh:
        return parse_board_file(fh.read(), check)


def write_board(path, board: Board, coloring: Coloring | None = None) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(render_board_file(board, coloring))
