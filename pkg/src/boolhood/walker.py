"""Seeded random walks over the cover order, plus the stats harness.

Walks go monotonically in one direction: Up starts at the infimum and picks
a uniformly random immediate parent until none exist (the supremum); Down
mirrors this from the supremum. At every node stepped from, the walk records
how many neighbours each rule produced, not just the chosen one. Timing uses
the monotonic clock and never participates in equality or goldens.
"""

import json
import statistics
import time
from dataclasses import dataclass
from enum import Enum

from .core import infimum, supremum
from .errors import CapabilityError
from .neighbors import Rule, immediate_children, immediate_parents

_MASK64 = (1 << 64) - 1
DEFAULT_DIMENSION_CAP = 11


class SplitMix64:
    """Reference SplitMix64: same 64-bit stream on every platform."""

    __slots__ = ("_state",)

    def __init__(self, seed):
        self._state = seed & _MASK64

    def next_u64(self):
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n):
        """Uniform draw from [0, n), bias-free by rejection."""
        if n <= 0:
            raise ValueError(f"need a positive bound, got {n}")
        limit = (_MASK64 + 1) - (_MASK64 + 1) % n
        while True:
            r = self.next_u64()
            if r < limit:
                return r % n


class WalkDirection(Enum):
    UP = "up"
    DOWN = "down"


@dataclass(frozen=True)
class WalkStep:
    node: object  # FunctionRep stepped from
    rule_counts: tuple  # (r1, r2, r3) neighbours generated at node
    chosen: object  # NeighborResult actually taken


@dataclass(frozen=True)
class WalkTrace:
    p: int
    direction: WalkDirection
    seed: int
    start: object
    steps: tuple
    duration_s: float

    @property
    def length(self):
        return len(self.steps)

    @property
    def path(self):
        nodes = [self.start]
        nodes.extend(step.chosen.neighbor for step in self.steps)
        return nodes

    @property
    def end(self):
        return self.steps[-1].chosen.neighbor if self.steps else self.start

    def rule_totals(self):
        r1 = sum(s.rule_counts[0] for s in self.steps)
        r2 = sum(s.rule_counts[1] for s in self.steps)
        r3 = sum(s.rule_counts[2] for s in self.steps)
        return (r1, r2, r3)


def random_walk(p, direction=WalkDirection.UP, seed=0, dimension_cap=DEFAULT_DIMENSION_CAP):
    """One seeded walk; identical seeds replay identical traces."""
    if not 1 <= p <= dimension_cap:
        raise CapabilityError(f"walks support 1 <= p <= {dimension_cap}, got {p}")
    direction = WalkDirection(direction)
    if direction is WalkDirection.UP:
        node, generate = infimum(p), immediate_parents
    else:
        node, generate = supremum(p), immediate_children
    rng = SplitMix64(seed)
    start = node
    steps = []
    began = time.perf_counter()
    while True:
        neighbours = generate(node)
        if not neighbours:
            break
        counts = [0, 0, 0]
        for nb in neighbours:
            counts[int(nb.rule.value[1]) - 1] += 1
        chosen = neighbours[rng.below(len(neighbours))]
        steps.append(WalkStep(node=node, rule_counts=tuple(counts), chosen=chosen))
        node = chosen.neighbor
    duration = time.perf_counter() - began
    return WalkTrace(p=p, direction=direction, seed=seed, start=start,
                     steps=tuple(steps), duration_s=duration)


@dataclass(frozen=True)
class WalkStats:
    p: int
    direction: WalkDirection
    traces: int
    mean_len: float
    std_len: float
    cum_r1: float
    cum_r2: float
    cum_r3: float
    per_step_r1: float
    per_step_r2: float
    per_step_r3: float
    mean_ms: float
    q1_ms: float
    q3_ms: float


def summarize(traces, p, direction):
    """Aggregate one dimension's traces; order of traces does not matter.

    cum_rX is the mean over traces of the per-trace totals; per_step_rX
    divides that by the mean length. std is the population deviation;
    quartiles fall back to the mean when fewer than two traces exist.
    """
    direction = WalkDirection(direction)
    count = len(traces)
    if count == 0:
        return WalkStats(p, direction, 0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
                         0.0, 0.0, 0.0)
    lens = [t.length for t in traces]
    totals = [t.rule_totals() for t in traces]
    times = [t.duration_s * 1000.0 for t in traces]
    mean_len = statistics.fmean(lens)
    cum = [statistics.fmean(col) for col in zip(*totals)]
    per_step = [c / mean_len if mean_len else 0.0 for c in cum]
    if count >= 2:
        q1, _, q3 = statistics.quantiles(times, n=4)
    else:
        q1 = q3 = times[0]
    return WalkStats(
        p=p, direction=direction, traces=count,
        mean_len=mean_len, std_len=statistics.pstdev(lens),
        cum_r1=cum[0], cum_r2=cum[1], cum_r3=cum[2],
        per_step_r1=per_step[0], per_step_r2=per_step[1], per_step_r3=per_step[2],
        mean_ms=statistics.fmean(times), q1_ms=q1, q3_ms=q3,
    )


def run_experiment(p_values, traces_per_p, direction=WalkDirection.UP, base_seed=0,
                   dimension_cap=DEFAULT_DIMENSION_CAP):
    """Walk `traces_per_p` times per dimension; trace i uses base_seed + i."""
    out = []
    for p in p_values:
        traces = [
            random_walk(p, direction=direction, seed=base_seed + i,
                        dimension_cap=dimension_cap)
            for i in range(traces_per_p)
        ]
        out.append(summarize(traces, p, direction))
    return out


_CSV_COLUMNS = [
    "p", "direction", "traces", "mean_len", "std_len",
    "cum_r1", "cum_r2", "cum_r3",
    "per_step_r1", "per_step_r2", "per_step_r3",
    "mean_ms", "q1_ms", "q3_ms",
]


def _fmt(v):
    return f"{v:.6g}" if isinstance(v, float) else str(v)


def stats_to_csv(stats):
    lines = [",".join(_CSV_COLUMNS)]
    for s in stats:
        lines.append(",".join([
            str(s.p), s.direction.value, str(s.traces),
            _fmt(s.mean_len), _fmt(s.std_len),
            _fmt(s.cum_r1), _fmt(s.cum_r2), _fmt(s.cum_r3),
            _fmt(s.per_step_r1), _fmt(s.per_step_r2), _fmt(s.per_step_r3),
            _fmt(s.mean_ms), _fmt(s.q1_ms), _fmt(s.q3_ms),
        ]))
    return "\n".join(lines) + "\n"


def stats_to_dicts(stats):
    out = []
    for s in stats:
        d = {"p": s.p, "direction": s.direction.value, "traces": s.traces}
        for field in _CSV_COLUMNS[3:]:
            d[field] = getattr(s, field)
        out.append(d)
    return out


def stats_to_json(stats):
    return json.dumps(stats_to_dicts(stats), indent=2) + "\n"
