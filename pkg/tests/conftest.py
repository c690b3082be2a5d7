import itertools

import networkx as nx
import pytest

from cgb.board import build
from cgb.generators import gen_y_dual
from cgb.rules import BLUE, RED


@pytest.fixture
def minimal_y():
    return gen_y_dual(2)


@pytest.fixture
def minimal_hex():
    return build(4, [(0, 1, 2), (0, 2, 3)],
                 [("R1", (0, 1)), ("B1", (1, 2)), ("R2", (2, 3)), ("B2", (3, 0))])


def all_full_colorings(n):
    for bits in itertools.product((RED, BLUE), repeat=n):
        yield tuple(bits)


def brute_force_goals(board, coloring):
    """Reference goal test: try every vertex subset of each color.

    A player reached the goal iff some connected subset of their vertices
    touches all of their goal sides. Exponential; for tiny boards only.
    """
    g = nx.Graph()
    g.add_nodes_from(range(board.vertex_count))
    g.add_edges_from(board.edges)
    sides = {s.label: set(s.path) for s in board.sides}
    if board.kind == "hex":
        goals = {RED: [sides["R1"], sides["R2"]], BLUE: [sides["B1"], sides["B2"]]}
    else:
        goals = {c: [sides["l1"], sides["l2"], sides["l3"]] for c in (RED, BLUE)}
    result = {}
    for color in (RED, BLUE):
        own = [v for v in range(board.vertex_count) if coloring[v] is color]
        found = False
        for r in range(1, len(own) + 1):
            for sub in itertools.combinations(own, r):
                s = set(sub)
                if all(s & side for side in goals[color]) and nx.is_connected(g.subgraph(sub)):
                    found = True
                    break
            if found:
                break
        result[color] = found
    return result[RED], result[BLUE]
