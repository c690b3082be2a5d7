"""DOT export and matplotlib rendering of boards and tallies."""

from __future__ import annotations

from typing import Optional

import numpy as np

from .board import Board
from .rules import BLUE, RED, Chain, Coloring

_FILL = {RED: "#e41a1c", BLUE: "#377eb8", None: "#ffffff"}


def export_dot(board: Board, coloring: Optional[Coloring] = None,
               highlight_chain: Optional[Chain] = None) -> str:
    """Undirected DOT graph; vertices ascending, edges in lexicographic order."""
    coloring = coloring if coloring is not None else (None,) * board.vertex_count
    membership: dict[int, list[str]] = {v: [] for v in range(board.vertex_count)}
    for s in board.sides:
        for v in s.path:
            if s.label not in membership[v]:
                membership[v].append(s.label)
    hl = highlight_chain.vertices if highlight_chain is not None else frozenset()
    out = ["graph cgb {", "  node [shape=circle, style=filled, fontname=\"Helvetica\"];"]
    for v in range(board.vertex_count):
        label = str(v) if not membership[v] else f"{v}\\n{','.join(membership[v])}"
        attrs = [f'label="{label}"', f'fillcolor="{_FILL[coloring[v]]}"']
        if v in hl:
            attrs.append("penwidth=3")
        out.append(f"  {v} [{', '.join(attrs)}];")
    for u, v in sorted(board.edges):
        if u in hl and v in hl:
            out.append(f"  {u} -- {v} [penwidth=4, color=\"{_FILL[highlight_chain.color]}\"];")
        else:
            out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"


def tutte_layout(board: Board) -> np.ndarray:
    """Planar positions: boundary on the unit circle, interior vertices at neighbour barycentres."""
    n = board.vertex_count
    pos = np.zeros((n, 2))
    cycle = board.boundary_cycle
    if cycle is None:
        raise ValueError("board has no simple boundary cycle to pin")
    angles = -2 * np.pi * np.arange(len(cycle)) / len(cycle) + np.pi / 2
    pos[list(cycle)] = np.column_stack([np.cos(angles), np.sin(angles)])
    on = set(cycle)
    inner = [v for v in range(n) if v not in on]
    if inner:
        idx = {v: k for k, v in enumerate(inner)}
        lap = np.zeros((len(inner), len(inner)))
        rhs = np.zeros((len(inner), 2))
        for v in inner:
            i = idx[v]
            lap[i, i] = len(board.adjacency[v])
            for w in board.adjacency[v]:
                if w in idx:
                    lap[i, idx[w]] -= 1
                else:
                    rhs[i] += pos[w]
        pos[inner] = np.linalg.solve(lap, rhs)
    return pos


def draw_board(board: Board, path, coloring: Optional[Coloring] = None,
               highlight_chain: Optional[Chain] = None, title: str = "") -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from matplotlib.collections import LineCollection, PolyCollection

    coloring = coloring if coloring is not None else (None,) * board.vertex_count
    pos = tutte_layout(board)
    fig, ax = plt.subplots(figsize=(5, 5))
    ax.add_collection(PolyCollection([pos[list(t)] for t in board.triangles],
                                     facecolors="#f2f2f2", edgecolors="none"))
    hl = highlight_chain.vertices if highlight_chain is not None else frozenset()
    plain = [pos[[u, v]] for u, v in sorted(board.edges) if not (u in hl and v in hl)]
    ax.add_collection(LineCollection(plain, colors="#999999", linewidths=0.8))
    for s in board.sides:
        color = "#e41a1c" if s.label.startswith("R") else "#377eb8" if s.label.startswith("B") else "#4daf4a"
        ax.plot(*pos[list(s.path)].T, color=color, linewidth=3, alpha=0.35, solid_capstyle="round")
        mid = pos[list(s.path)].mean(axis=0)
        ax.annotate(s.label, mid * 1.12, ha="center", va="center", fontsize=9)
    if hl:
        strong = [pos[[u, v]] for u, v in sorted(board.edges) if u in hl and v in hl]
        ax.add_collection(LineCollection(strong, colors=_FILL[highlight_chain.color], linewidths=3))
    ax.scatter(*pos.T, s=120, c=[_FILL[c] for c in coloring], edgecolors="black", zorder=3)
    for v, (x, y) in enumerate(pos):
        ax.annotate(str(v), (x, y), ha="center", va="center", fontsize=7, zorder=4)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=10)
    fig.savefig(path, bbox_inches="tight", dpi=120)
    plt.close(fig)


def plot_tally(tally, path, title: str = "") -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    names = ["red", "blue", "draw", "both"]
    counts = [tally.red_wins, tally.blue_wins, tally.draws, tally.double_wins]
    fig, ax = plt.subplots(figsize=(4, 3))
    ax.bar(names, counts, color=["#e41a1c", "#377eb8", "#999999", "#984ea3"])
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    ax.set_ylabel("colorings")
    ax.set_title(title or f"total = {tally.total}", fontsize=10)
    for x, c in enumerate(counts):
        ax.annotate(str(c), (x, c), ha="center", va="bottom", fontsize=8)
    fig.savefig(path, bbox_inches="tight", dpi=120)
    plt.close(fig)

