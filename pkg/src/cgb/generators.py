"""Standard dual lattice boards and seeded random disk triangulations."""

from __future__ import annotations

import numpy as np

from .board import HEX_LABELS, Y_LABELS, Board, BoardError, Side, build


def gen_hex_dual(rows: int, cols: int) -> Board:
    """Parallelogram Hex board with ``rows * cols`` cells.

    Vertex ``(i, j)`` (column ``i``, row ``j``) has id ``j * cols + i``. Red owns
    the first and last rows, Blue the first and last columns.
    """
    if rows < 2 or cols < 2:
        raise BoardError("hex board needs rows >= 2 and cols >= 2")
    vid = lambda i, j: j * cols + i
    tris = []
    for j in range(rows - 1):
        for i in range(cols - 1):
            tris.append((vid(i, j), vid(i + 1, j), vid(i, j + 1)))
            tris.append((vid(i + 1, j), vid(i, j + 1), vid(i + 1, j + 1)))
    r1 = [vid(i, 0) for i in reversed(range(cols))]
    b1 = [vid(0, j) for j in range(rows)]
    r2 = [vid(i, rows - 1) for i in range(cols)]
    b2 = [vid(cols - 1, j) for j in reversed(range(rows))]
    return build(rows * cols, tris, [Side(lab, p) for lab, p in zip(HEX_LABELS, (r1, b1, r2, b2))])


def gen_y_dual(n: int) -> Board:
    """Triangular Y board with ``n`` vertices per side.

    Vertices ``(i, j)`` with ``i + j < n``, numbered row by row (``j`` outer).
    """
    if n < 2:
        raise BoardError("Y board needs n >= 2")
    ids = {}
    for j in range(n):
        for i in range(n - j):
            ids[i, j] = len(ids)
    tris = []
    for j in range(n - 1):
        for i in range(n - 1 - j):
            tris.append((ids[i, j], ids[i + 1, j], ids[i, j + 1]))
            if i + j + 2 < n:
                tris.append((ids[i + 1, j], ids[i, j + 1], ids[i + 1, j + 1]))
    l1 = [ids[i, 0] for i in range(n)]
    l2 = [ids[n - 1 - j, j] for j in range(n)]
    l3 = [ids[0, j] for j in reversed(range(n))]
    return build(len(ids), tris, [Side(lab, p) for lab, p in zip(Y_LABELS, (l1, l2, l3))])


def random_growth(n_vertices: int, n_sides: int, rng: np.random.Generator):
    """Yield ``(vertex_count, triangles, boundary_cycle)`` after each growth move.

    A move either star-subdivides a random triangle (new interior vertex) or
    glues a new triangle onto a random boundary edge (new boundary vertex).
    Growth is forced while the boundary is too short for ``n_sides`` sides.
    """
    tris: list[tuple[int, int, int]] = [(0, 1, 2)]
    boundary = [0, 1, 2]
    yield 3, tris, boundary
    for v in range(3, n_vertices):
        deficit = n_sides - len(boundary)
        remaining = n_vertices - v
        if deficit >= remaining or rng.random() < 0.5:
            k = int(rng.integers(len(boundary)))
            a, b = boundary[k], boundary[(k + 1) % len(boundary)]
            tris.append((a, b, v))
            boundary.insert(k + 1, v)
        else:
            k = int(rng.integers(len(tris)))
            a, b, c = tris[k]
            tris[k] = (a, b, v)
            tris.extend([(b, c, v), (a, c, v)])
        yield v + 1, tris, boundary


def gen_random(n_vertices: int, n_sides: int, seed: int) -> Board:
    """Random disk triangulation with ``n_sides`` sides, grown from one triangle.

    Corners are distinct random boundary positions. Uses numpy's PCG64 seeded
    with ``seed``, so a seed always gives the same board.
    """
    if n_vertices < 3:
        raise BoardError("random board needs at least 3 vertices")
    if n_sides not in (3, 4):
        raise BoardError("n_sides must be 3 or 4")
    if n_vertices < n_sides:
        raise BoardError(f"{n_vertices} vertices cannot carry a boundary with {n_sides} sides")
    rng = np.random.default_rng(seed)
    for _, tris, boundary in random_growth(n_vertices, n_sides, rng):
        pass
    cut = sorted(int(x) for x in rng.choice(len(boundary), size=n_sides, replace=False))
    labels = HEX_LABELS if n_sides == 4 else Y_LABELS
    sides = []
    for i, lab in enumerate(labels):
        start, stop = cut[i], cut[(i + 1) % n_sides]
        if stop <= start:
            stop += len(boundary)
        sides.append(Side(lab, [boundary[k % len(boundary)] for k in range(start, stop + 1)]))
    return build(n_vertices, tris, sides)
