"""Immediate parents and children in the pointwise-implication order.

Each neighbour is tagged with the rule that produced it. The true-set delta
of an edge is fully determined by the (rule, direction) pair: adjoining a
maximal independent set or swapping in a maximal dominated set adds exactly
one true state; splitting a clause into two adds exactly two. Downward moves
mirror those counts with the opposite sign.
"""

from dataclasses import dataclass
from enum import Enum

from . import _backend
from .core import FunctionRep


class Rule(Enum):
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"


class Direction(Enum):
    PARENT = "parent"
    CHILD = "child"


_RULE_OF = {1: Rule.R1, 2: Rule.R2, 3: Rule.R3}

_DELTA = {
    (Direction.PARENT, Rule.R1): 1,
    (Direction.PARENT, Rule.R2): 1,
    (Direction.PARENT, Rule.R3): 2,
    (Direction.CHILD, Rule.R1): -1,
    (Direction.CHILD, Rule.R2): -1,
    (Direction.CHILD, Rule.R3): -2,
}


@dataclass(frozen=True)
class NeighborResult:
    neighbor: FunctionRep
    rule: Rule
    direction: Direction

    @property
    def true_set_delta(self):
        return _DELTA[(self.direction, self.rule)]


def rule_delta(result):
    """Exact true-set change along the edge, from its rule and direction."""
    return result.true_set_delta


def _wrap(raw, p, direction):
    items = [(FunctionRep._from_canonical(masks, p), _RULE_OF[r]) for masks, r in raw]
    items.sort(key=lambda pair: (pair[0].sort_key, pair[1].value))
    return tuple(NeighborResult(f, r, direction) for f, r in items)


def immediate_parents(rep):
    """Every function directly above rep, in canonical order with rule tags."""
    return _wrap(_backend.parents_of(rep.masks, rep.p), rep.p, Direction.PARENT)


def immediate_children(rep):
    """Every function directly below rep, in canonical order with rule tags."""
    return _wrap(_backend.children_of(rep.masks, rep.p), rep.p, Direction.CHILD)
