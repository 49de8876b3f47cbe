"""Monotone Boolean functions as antichain covers.

Exact immediate parents and children in the pointwise-implication order,
brute-force ground truth, seeded random walks, a CLI and a JSON HTTP
service. `BACKEND` reports whether the compiled kernels are active.
"""

__version__ = "0.1.0"

from ._backend import BACKEND
from .core import (MAX_DIMENSION, Clause, FunctionRep, SignStructure, TruthTable,
                   from_truth_table, infimum, is_antichain, is_cover,
                   maximal_dominated, maximal_independent, precedes, supremum,
                   to_truth_table, true_set_size)
from .errors import (BoolhoodError, CapabilityError, DimensionMismatchError,
                     IntegrityError, ParseError, ValidationError)
from .neighbors import (Direction, NeighborResult, Rule, immediate_children,
                        immediate_parents, rule_delta)
from .oracle import (CountRow, check_monotone_nondegenerate, count_table,
                     enumerate_all, hasse_edges)
from .textio import parse_function, render_function
from .walker import (SplitMix64, WalkDirection, WalkStats, WalkTrace, random_walk,
                     run_experiment, summarize)

__all__ = [
    "BACKEND", "MAX_DIMENSION", "__version__",
    "Clause", "FunctionRep", "SignStructure", "TruthTable",
    "BoolhoodError", "CapabilityError", "DimensionMismatchError",
    "IntegrityError", "ParseError", "ValidationError",
    "Direction", "NeighborResult", "Rule",
    "CountRow", "WalkDirection", "WalkStats", "WalkTrace", "SplitMix64",
    "check_monotone_nondegenerate", "count_table", "enumerate_all",
    "from_truth_table", "hasse_edges", "immediate_children", "immediate_parents",
    "infimum", "is_antichain", "is_cover", "maximal_dominated",
    "maximal_independent", "parse_function", "precedes", "random_walk",
    "render_function", "rule_delta", "run_experiment", "summarize", "supremum",
    "to_truth_table", "true_set_size",
]
