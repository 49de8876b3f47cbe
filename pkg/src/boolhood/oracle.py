"""Brute-force ground truth, kept independent of the rule engine.

Everything here works from first principles: exhaustive enumeration of
antichain covers, truth-table comparisons for the order, and a closed-form
recurrence for the counts. The neighbour rules are never consulted, so this
module can referee them.
"""

import csv
import io
import math
from dataclasses import dataclass

import numpy as np

from . import _backend
from .core import FunctionRep, to_truth_table
from .errors import CapabilityError, IntegrityError

# Dedekind-style antichain totals for the powerset of {1..p}, including the
# empty antichain and the one containing only the empty set.
M_KNOWN = {
    1: 3,
    2: 6,
    3: 20,
    4: 168,
    5: 7581,
    6: 7828354,
    7: 2414682040998,
    8: 56130437228687557907788,
    9: 286386577668298411128469151667598498812366,
}

ENUM_CAP, ENUM_CAP_LONG = 5, 6
HASSE_CAP, HASSE_CAP_LONG = 4, 5


def enumerate_all(p, long=False):
    """Yield every antichain cover of {1..p} exactly once, canonically.

    Lazy on purpose: at p=6 there are 7,785,062 of them. Capped at p=5
    unless `long` is set.
    """
    cap = ENUM_CAP_LONG if long else ENUM_CAP
    if not 1 <= p <= cap:
        raise CapabilityError(f"enumeration supports 1 <= p <= {cap} (long={long}), got {p}")
    for masks in _backend.iter_antichain_covers(p):
        yield FunctionRep._from_canonical(masks, p)


@dataclass(frozen=True)
class CountRow:
    p: int
    m: int
    n: int
    enumerated: int | None


def count_table(max_p, m_values=None, long=False):
    """CountRows for p = 1..max_p.

    N(p) falls out of the antichain totals: subtract the two degenerate
    antichains and every cover living on a proper subset of the variables,
        N(p) = M(p) - 2 - sum_{k<p} C(p,k) N(k),
    and is cross-checked against direct enumeration up to the cap. A
    mismatch raises IntegrityError carrying both values.
    """
    m_values = dict(M_KNOWN) if m_values is None else dict(m_values)
    if max_p < 1:
        raise CapabilityError(f"max_p must be >= 1, got {max_p}")
    missing = [p for p in range(1, max_p + 1) if p not in m_values]
    if missing:
        raise CapabilityError(f"no antichain totals known for p={missing}; supply m_values")
    enum_cap = ENUM_CAP_LONG if long else ENUM_CAP
    n = {}
    rows = []
    for p in range(1, max_p + 1):
        acc = m_values[p] - 2
        for k in range(1, p):
            acc -= math.comb(p, k) * n[k]
        n[p] = acc
        enumerated = None
        if p <= enum_cap:
            enumerated = _backend.count_antichain_covers(p)
            if enumerated != acc:
                raise IntegrityError(
                    f"p={p}: recurrence gives {acc} covers but enumeration found {enumerated}"
                )
        rows.append(CountRow(p=p, m=m_values[p], n=acc, enumerated=enumerated))
    return rows


def counts_to_csv(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["p", "M", "N", "enumerated"])
    for r in rows:
        writer.writerow([r.p, r.m, r.n, "" if r.enumerated is None else r.enumerated])
    return buf.getvalue()


@dataclass(frozen=True)
class VariableCheck:
    variable: int
    increasing: bool
    essential: bool
    witness: tuple | None


@dataclass(frozen=True)
class TableReport:
    passed: bool
    variables: tuple

    def failures(self):
        return tuple(v for v in self.variables if not (v.increasing and v.essential))


def check_monotone_nondegenerate(table):
    """Plain quadratic scan over all state pairs differing in one variable.

    Deliberately the slow, obviously-correct route: it must stay independent
    of the bit-parallel check used by the conversion code.
    """
    p = table.p
    rows = []
    for i in range(p):
        bit = 1 << i
        increasing = True
        essential = False
        witness = None
        for x in range(1 << p):
            if x & bit:
                continue
            lo, hi = table.value(x), table.value(x | bit)
            if lo and not hi:
                increasing = False
                essential = True  # a decreasing pair is still a change
                witness = (x, x | bit)
                break
            if lo != hi and not essential:
                essential = True
                if witness is None:
                    witness = (x, x | bit)
        rows.append(
            VariableCheck(variable=i + 1, increasing=increasing, essential=essential,
                          witness=witness)
        )
    passed = all(v.increasing and v.essential for v in rows)
    return TableReport(passed=passed, variables=tuple(rows))


def _inclusion_matrix(tables):
    """incl[i, j] iff true set i is a subset of true set j, via uint64 bitmaps."""
    t = np.asarray(tables, dtype=np.uint64)
    n = len(t)
    incl = np.zeros((n, n), dtype=bool)
    step = 1024
    for lo in range(0, n, step):
        hi = min(lo + step, n)
        incl[lo:hi] = (t[lo:hi, None] & ~t[None, :]) == 0
    return incl


def hasse_edges(p, long=False):
    """All covering pairs (below, above), straight from truth tables.

    Inclusion between true sets gives the order; an inclusion is a covering
    edge iff no third function sits strictly between, which the float32
    product counts exactly (path counts stay far below 2^24).
    """
    cap = HASSE_CAP_LONG if long else HASSE_CAP
    if not 1 <= p <= cap:
        raise CapabilityError(f"Hasse extraction supports 1 <= p <= {cap} (long={long}), got {p}")
    if p > 6:
        raise CapabilityError("truth bitmaps above p=6 do not fit one machine word")
    reps = list(enumerate_all(p, long=long))
    tables = [to_truth_table(r).bits for r in reps]
    strict = _inclusion_matrix(tables)
    np.fill_diagonal(strict, False)
    paths = strict.astype(np.float32) @ strict.astype(np.float32)
    cover = strict & (paths == 0)
    below, above = np.nonzero(cover)
    return frozenset((reps[i], reps[j]) for i, j in zip(below.tolist(), above.tolist()))
