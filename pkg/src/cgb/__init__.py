"""Generalized Hex and Y on triangulated disks, with the reductions between them."""

from .board import Board, BoardError, Side, ValidationReport, build, side_vertices, validate
from .generators import gen_hex_dual, gen_random, gen_y_dual
from .rules import (BLUE, RED, Chain, Color, Coloring, Outcome, TheoremViolation,
                    make_coloring, monochrome_components, winner, witness_path)
from .verify import Tally, enumerate_exhaustive, invariant_suite, sample_random, selfplay

__version__ = "0.1.0"

__all__ = [
    "Board", "BoardError", "Side", "ValidationReport", "build", "side_vertices", "validate",
    "gen_hex_dual", "gen_random", "gen_y_dual",
    "BLUE", "RED", "Chain", "Color", "Coloring", "Outcome", "TheoremViolation",
    "make_coloring", "monochrome_components", "winner", "witness_path",
    "Tally", "enumerate_exhaustive", "invariant_suite", "sample_random", "selfplay",
]
