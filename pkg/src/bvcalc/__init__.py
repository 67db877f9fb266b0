"""Exact arithmetic in the braided Thompson groups BV and BV-hat."""

from .braids import BraidWord, braid_equal, cable, crossing_stats, delete_strand, garside_delta
from .diagrams import (
    Diagram,
    diagram_equal,
    expand,
    identity_diagram,
    in_bv_hat,
    invert,
    multiply,
    reduce,
)
from .metrics import Metrics, check_bounds, metrics, xtau_counts
from .trees import Tree, all_right, common_refinement, graft, parse_tree
from .words import (
    GeneratorLetter,
    GeneratorWord,
    delta_word,
    evaluate,
    generator_diagram,
    parse,
    rewrite_to_finite,
    synthesize_word,
    tree_to_positive_word,
)

__version__ = "0.1.0"
