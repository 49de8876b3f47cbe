"""Core types and order operations for antichain-cover functions.

A monotone non-degenerate positive Boolean function over variables x1..xp is
stored as the antichain of its minimal true points (one Clause per point).
The partial order used throughout is pointwise implication: S precedes S2
iff the true set of S is contained in that of S2.
"""

from . import _backend
from .errors import CapabilityError, DimensionMismatchError, ValidationError

MAX_DIMENSION = 64
ENUM_CAP = 24  # direct truth-table work stops here (2^24-bit bitmaps)
IE_CLAUSE_CAP = 24  # inclusion-exclusion stops at 2^24 clause subsets


def _mask_indices(mask):
    out = []
    while mask:
        b = mask & -mask
        mask ^= b
        out.append(b.bit_length())
    return tuple(out)


def _mask_str(mask):
    return "{" + ",".join(str(i) for i in _mask_indices(mask)) + "}"


def _check_dimension(p):
    if not isinstance(p, int) or isinstance(p, bool):
        raise ValidationError("bad_index", f"dimension must be an int, got {p!r}")
    if not 1 <= p <= MAX_DIMENSION:
        raise CapabilityError(f"dimension must be in 1..{MAX_DIMENSION}, got {p}")


class Clause:
    """A non-empty subset of {1..p}, stored as a bitmask (bit i-1 <-> index i)."""

    __slots__ = ("mask", "p")

    def __init__(self, mask, p):
        _check_dimension(p)
        if mask == 0:
            raise ValidationError("empty_clause", "a clause needs at least one index")
        if mask < 0 or mask >> p:
            raise ValidationError(
                "bad_index",
                f"clause {_mask_str(mask & ((1 << MAX_DIMENSION) - 1))} uses indices outside 1..{p}",
                p=p,
            )
        self.mask = mask
        self.p = p

    @classmethod
    def from_indices(cls, indices, p):
        mask = 0
        for i in indices:
            if not isinstance(i, int) or isinstance(i, bool) or not 1 <= i <= p:
                raise ValidationError("bad_index", f"index {i!r} outside 1..{p}", index=i, p=p)
            mask |= 1 << (i - 1)
        return cls(mask, p)

    @property
    def indices(self):
        return _mask_indices(self.mask)

    def issubset(self, other):
        self._same_space(other)
        return self.mask & ~other.mask == 0

    def issuperset(self, other):
        return other.issubset(self)

    def _same_space(self, other):
        if self.p != other.p:
            raise DimensionMismatchError(f"clauses over p={self.p} and p={other.p}")

    def __len__(self):
        return self.mask.bit_count()

    def __contains__(self, index):
        return 1 <= index <= self.p and self.mask >> (index - 1) & 1 == 1

    def __eq__(self, other):
        if not isinstance(other, Clause):
            return NotImplemented
        return self.mask == other.mask and self.p == other.p

    def __hash__(self):
        return hash((self.mask, self.p))

    def __lt__(self, other):
        self._same_space(other)
        return (len(self), self.mask) < (len(other), other.mask)

    def __repr__(self):
        return f"Clause({_mask_str(self.mask)}, p={self.p})"


class SignStructure:
    """Per-variable polarity for rendering; never changes the order structure."""

    __slots__ = ("signs",)

    def __init__(self, signs):
        signs = tuple(signs)
        if not signs or any(s not in (1, -1) for s in signs):
            raise ValidationError("mixed_sign", f"signs must be +1/-1 per variable, got {signs!r}")
        if len(signs) > MAX_DIMENSION:
            raise CapabilityError(f"at most {MAX_DIMENSION} variables")
        self.signs = signs

    @classmethod
    def all_positive(cls, p):
        _check_dimension(p)
        return cls((1,) * p)

    @classmethod
    def from_string(cls, text):
        table = {"+": 1, "-": -1}
        try:
            return cls(tuple(table[ch] for ch in text))
        except KeyError:
            raise ValidationError(
                "mixed_sign", f"sign string may only contain + and -, got {text!r}"
            ) from None

    def sign(self, index):
        return self.signs[index - 1]

    def to_string(self):
        return "".join("+" if s == 1 else "-" for s in self.signs)

    def __len__(self):
        return len(self.signs)

    def __eq__(self, other):
        if not isinstance(other, SignStructure):
            return NotImplemented
        return self.signs == other.signs

    def __hash__(self):
        return hash(self.signs)

    def __repr__(self):
        return f"SignStructure({self.to_string()!r})"


def _validate_family(masks, p):
    """Antichain + cover checks over canonical masks; raises with witnesses."""
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            a, b = masks[i], masks[j]
            if a & ~b == 0 or b & ~a == 0:
                raise ValidationError(
                    "non_antichain",
                    f"clauses {_mask_str(a)} and {_mask_str(b)} are comparable",
                    pair=[_mask_indices(a), _mask_indices(b)],
                )
    union = 0
    for m in masks:
        union |= m
    full = (1 << p) - 1
    if union != full:
        missing = _mask_indices(full & ~union)
        raise ValidationError(
            "non_cover",
            f"indices {missing} appear in no clause",
            missing=list(missing),
        )


class FunctionRep:
    """An antichain cover of {1..p}: the minimal true points of the function.

    Clause masks are kept deduped and sorted by (cardinality, value), so two
    equal functions are structurally identical. Construction through the
    public entry points enforces the antichain and cover invariants.
    """

    __slots__ = ("masks", "p")

    def __init__(self, clauses):
        clauses = tuple(clauses)
        if not clauses:
            raise ValidationError("empty_function", "a function needs at least one clause")
        p = clauses[0].p
        for c in clauses:
            if not isinstance(c, Clause):
                raise ValidationError("bad_index", f"expected Clause, got {c!r}")
            if c.p != p:
                raise DimensionMismatchError(f"clauses over p={p} and p={c.p}")
        masks = _backend_canon(tuple(c.mask for c in clauses))
        _validate_family(masks, p)
        self.masks = masks
        self.p = p

    @classmethod
    def from_masks(cls, masks, p):
        return cls(tuple(Clause(m, p) for m in masks))

    @classmethod
    def from_indices(cls, p, index_sets):
        return cls(tuple(Clause.from_indices(s, p) for s in index_sets))

    @classmethod
    def _from_canonical(cls, masks, p):
        """Trusted path for kernel output: skips the quadratic re-validation."""
        self = object.__new__(cls)
        self.masks = masks
        self.p = p
        return self

    @property
    def clauses(self):
        return tuple(Clause(m, self.p) for m in self.masks)

    @property
    def index_sets(self):
        return tuple(_mask_indices(m) for m in self.masks)

    @property
    def sort_key(self):
        return tuple((m.bit_count(), m) for m in self.masks)

    def __len__(self):
        return len(self.masks)

    def __eq__(self, other):
        if not isinstance(other, FunctionRep):
            return NotImplemented
        return self.p == other.p and self.masks == other.masks

    def __hash__(self):
        return hash((self.p, self.masks))

    def __lt__(self, other):
        if not isinstance(other, FunctionRep):
            return NotImplemented
        if self.p != other.p:
            raise DimensionMismatchError(f"functions over p={self.p} and p={other.p}")
        return self.sort_key < other.sort_key

    def __repr__(self):
        body = ",".join(_mask_str(m) for m in self.masks)
        return f"FunctionRep(p={self.p}, {body})"


def _backend_canon(masks):
    return tuple(sorted(set(masks), key=lambda m: (m.bit_count(), m)))


def is_antichain(clauses):
    """True iff the clauses are pairwise incomparable under inclusion."""
    clauses = tuple(clauses)
    for i in range(len(clauses)):
        for j in range(i + 1, len(clauses)):
            clauses[i]._same_space(clauses[j])
            a, b = clauses[i].mask, clauses[j].mask
            if a & ~b == 0 or b & ~a == 0:
                return False
    return True


def is_cover(clauses):
    """True iff every index 1..p appears in at least one clause."""
    clauses = tuple(clauses)
    if not clauses:
        return False
    p = clauses[0].p
    union = 0
    for c in clauses:
        c._same_space(clauses[0])
        union |= c.mask
    return union == (1 << p) - 1


def precedes(a, b):
    """True iff a's function implies b's pointwise (a's true set inside b's).

    Witness form: every clause of a must contain some clause of b.
    """
    if a.p != b.p:
        raise DimensionMismatchError(f"functions over p={a.p} and p={b.p}")
    return all(any(t & ~s == 0 for t in b.masks) for s in a.masks)


def maximal_independent(rep):
    """Maximal sets incomparable to every clause of rep, as Clause objects."""
    return tuple(Clause(m, rep.p) for m in _backend.max_independent(rep.masks, rep.p))


def maximal_dominated(rep):
    """Maximal sets strictly inside some clause of rep, as Clause objects."""
    return tuple(Clause(m, rep.p) for m in _backend.max_dominated(rep.masks))


def infimum(p):
    """The least function: true only when every variable is on."""
    _check_dimension(p)
    return FunctionRep._from_canonical(((1 << p) - 1,), p)


def supremum(p):
    """The greatest function: true whenever any variable is on."""
    _check_dimension(p)
    return FunctionRep._from_canonical(tuple(1 << i for i in range(p)), p)


class TruthTable:
    """f as a 2^p-bit bitmap: bit x holds f at the state whose ones-set is x."""

    __slots__ = ("p", "bits")

    def __init__(self, p, bits):
        _check_dimension(p)
        if p > ENUM_CAP:
            raise CapabilityError(f"truth tables materialize up to p={ENUM_CAP}")
        if bits < 0 or bits >> (1 << p):
            raise ValidationError(
                "bad_truth_table", f"bitmap does not fit 2^{p} states"
            )
        self.p = p
        self.bits = bits

    def value(self, state):
        if state < 0 or state >> self.p:
            raise ValidationError("bad_index", f"state {state} outside 0..2^{self.p}-1")
        return self.bits >> state & 1 == 1

    @property
    def true_count(self):
        return self.bits.bit_count()

    def __eq__(self, other):
        if not isinstance(other, TruthTable):
            return NotImplemented
        return self.p == other.p and self.bits == other.bits

    def __hash__(self):
        return hash((self.p, self.bits))

    def __repr__(self):
        return f"TruthTable(p={self.p}, true_count={self.true_count})"


def _upper_cone_bitmap(mask, p):
    """Bitmap of all states whose ones-set contains `mask`."""
    v = 1
    for i in range(p):
        shift = 1 << i
        if mask >> i & 1:
            v <<= shift
        else:
            v |= v << shift
    return v


def to_truth_table(rep, cap=ENUM_CAP):
    """Materialize the full table; capped because it costs 2^p bits."""
    if rep.p > cap:
        raise CapabilityError(f"truth table for p={rep.p} exceeds the cap of {cap}")
    bits = 0
    for m in rep.masks:
        bits |= _upper_cone_bitmap(m, rep.p)
    return TruthTable(rep.p, bits)


def _low_half_mask(i, p):
    """Bitmap with ones at the state positions whose variable-i bit is 0."""
    block = (1 << (1 << i)) - 1
    span = 1 << (i + 1)
    total = 1 << p
    m = block
    while span < total:
        m |= m << span
        span <<= 1
    return m


def variable_profile(table):
    """Per-variable (increasing, essential, witness) triples, bit-parallel.

    `witness` is a state pair: for a monotonicity break, (x, x+i) with the
    function decreasing along it; for an essential variable, some (x, x+i)
    where the value changes; None for an inessential variable.
    """
    p, bits = table.p, table.bits
    out = []
    for i in range(p):
        half = _low_half_mask(i, p)
        low = bits & half
        high = (bits >> (1 << i)) & half
        decreasing = low & ~high
        changing = low ^ high
        if decreasing:
            x = (decreasing & -decreasing).bit_length() - 1
            out.append((False, True, (x, x | (1 << i))))
        elif changing:
            x = (changing & -changing).bit_length() - 1
            out.append((True, True, (x, x | (1 << i))))
        else:
            out.append((True, False, None))
    return out


def from_truth_table(table):
    """Recover the antichain of minimal true points.

    Rejects tables that are not monotone increasing in every variable or
    that have an inessential variable, naming the variable and (for a
    monotonicity break) the offending state pair.
    """
    for i, (increasing, essential, witness) in enumerate(variable_profile(table)):
        if not increasing:
            raise ValidationError(
                "not_positive",
                f"not monotone increasing in x{i + 1}: "
                f"f({witness[0]:0{table.p}b}) > f({witness[1]:0{table.p}b})",
                variable=i + 1,
                witness=list(witness),
            )
        if not essential:
            raise ValidationError(
                "degenerate", f"variable x{i + 1} is not essential", variable=i + 1
            )
    bits = table.bits
    minimal = []
    rem = bits
    while rem:
        b = rem & -rem
        rem ^= b
        state = b.bit_length() - 1
        sub = state
        while sub:
            low = sub & -sub
            sub ^= low
            if bits >> (state ^ low) & 1:
                break
        else:
            minimal.append(state)
    return FunctionRep.from_masks(minimal, table.p)


def true_set_size(rep, enum_cap=ENUM_CAP, ie_clause_cap=IE_CLAUSE_CAP):
    """|T(S)|: how many of the 2^p states the function maps to true.

    Counts directly on the truth bitmap up to `enum_cap` variables; beyond
    that, inclusion-exclusion over clause subsets (each subset K contributes
    (-1)^(|K|+1) * 2^(p - |union K|)), gated at `ie_clause_cap` clauses.
    """
    if rep.p <= enum_cap:
        return to_truth_table(rep, cap=enum_cap).true_count
    masks = rep.masks
    if len(masks) > ie_clause_cap:
        raise CapabilityError(
            f"true set size at p={rep.p} needs <= {ie_clause_cap} clauses, got {len(masks)}"
        )
    total = 0
    n = len(masks)
    p = rep.p

    def descend(idx, union, size):
        nonlocal total
        for j in range(idx, n):
            u = union | masks[j]
            k = size + 1
            term = 1 << (p - u.bit_count())
            total += term if k % 2 else -term
            descend(j + 1, u, k)

    descend(0, 0, 0)
    return total
