"""Pure-Python kernels over clause bitmasks.

A clause is an int with bit i-1 set iff variable index i is present; a
function is a tuple of such masks sorted by (cardinality, value). Every
kernel assumes its input is already a valid antichain cover over p
variables. `boolhood._kernels` is the compiled mirror of this module; the
two must stay byte-for-byte interchangeable in behaviour.
"""

R1, R2, R3 = 1, 2, 3


def _key(m):
    return (m.bit_count(), m)


def canon(masks):
    """Canonical tuple form: deduped, sorted by cardinality then value."""
    return tuple(sorted(set(masks), key=_key))


def minimal_transversals(masks):
    """Inclusion-minimal hitting sets of the clause family, as masks.

    Branches on the first clause not hit yet; each sibling branch bans the
    elements tried before it. A banned element is never part of the minimal
    transversal a branch is heading for, so every minimal transversal shows
    up exactly once. Leaves can still be non-minimal and are filtered at the
    end (an element is needed iff it hits some clause alone).
    """
    if not masks:
        return [0]
    masks = sorted(masks, key=int.bit_count)
    found = []

    def descend(chosen, banned):
        target = 0
        for m in masks:
            if not m & chosen:
                target = m
                break
        else:
            found.append(chosen)
            return
        avail = target & ~banned
        while avail:
            bit = avail & -avail
            avail ^= bit
            descend(chosen | bit, banned)
            banned |= bit

    descend(0, 0)
    out = []
    for t in found:
        bits = t
        while bits:
            b = bits & -bits
            bits ^= b
            if not any(m & t == b for m in masks):
                break
        else:
            out.append(t)
    return out


def max_independent(masks, p):
    """Maximal sets incomparable to every member of the family.

    A set contains no member iff its complement hits every member, so the
    candidates are complements of minimal transversals; those lying inside
    some member are dropped. Filtering maximal elements of the weaker family
    this way is exact: any proper independent superset would itself contain
    no member, contradicting transversal minimality.
    """
    full = (1 << p) - 1
    out = []
    for t in minimal_transversals(masks):
        sigma = full & ~t
        if sigma and not any(sigma & ~m == 0 for m in masks):
            out.append(sigma)
    return canon(out)


def max_dominated(masks):
    """Maximal sets strictly contained in some member.

    Candidates are the facets s minus one element. A candidate fails
    maximality iff some member contains it with two or more elements to
    spare. The empty set (facet of a singleton member) is never included.
    """
    cands = set()
    for m in masks:
        bits = m
        while bits:
            b = bits & -bits
            bits ^= b
            if m ^ b:
                cands.add(m ^ b)
    out = []
    for c in cands:
        limit = c.bit_count() + 1
        if all(c & ~m or m.bit_count() == limit for m in masks):
            out.append(c)
    return canon(out)


def _unions_without(masks):
    """unions_without[i] = OR of every mask except masks[i]."""
    n = len(masks)
    out = [0] * n
    acc = 0
    for i in range(n):
        out[i] = acc
        acc |= masks[i]
    acc = 0
    for i in range(n - 1, -1, -1):
        out[i] |= acc
        acc |= masks[i]
    return out


def parents_of(masks, p):
    """Immediate parents as (canonical mask tuple, rule) pairs.

    Rule 1 adjoins one maximal independent set. Rule 2 swaps every member
    containing a maximal dominated set d for d itself, provided the others
    still cover. Rule 3 replaces a single member s by a pair of its maximal
    dominated subsets, each of which fails to restore the cover alone; that
    failure forces both to sit only inside s, so the result is an antichain
    by construction.
    """
    full = (1 << p) - 1
    n = len(masks)
    results = []
    indep = max_independent(masks, p)
    for c in indep:
        results.append((canon(masks + (c,)), R1))
    union_wo = _unions_without(masks)
    split_pool = {}
    for d in max_dominated(masks):
        if any(d & ~c == 0 for c in indep):
            continue
        rest_union = 0
        containing = []
        for i in range(n):
            if d & ~masks[i] == 0:
                containing.append(i)
            else:
                rest_union |= masks[i]
        if rest_union | d == full:
            kept = [masks[i] for i in range(n) if i not in containing]
            kept.append(d)
            results.append((canon(kept), R2))
        else:
            for i in containing:
                if union_wo[i] | d != full:
                    split_pool.setdefault(i, []).append(d)
    for i, ds in split_pool.items():
        kept = list(masks[:i] + masks[i + 1:])
        for a in range(len(ds)):
            for b in range(a + 1, len(ds)):
                results.append((canon(kept + [ds[a], ds[b]]), R3))
    return results


def children_of(masks, p):
    """Immediate children as (canonical mask tuple, rule) pairs.

    A member s is extendable when some one-element extension contains no
    other member; Rule 2 replaces s by all such extensions at once.
    Otherwise s either drops out alone when the rest still covers (Rule 1),
    or merges with a same-size member differing in exactly one element when
    neither of the pair is droppable (Rule 3). No third member can sit
    inside such a union, so scanning same-size pairs finds each merge once.
    """
    full = (1 << p) - 1
    n = len(masks)
    results = []
    union_wo = _unions_without(masks)
    merge_pool = {}
    for i in range(n):
        s = masks[i]
        exts = []
        can_merge = False
        bits = full & ~s
        while bits:
            b = bits & -bits
            bits ^= b
            grown = s | b
            inside = 0
            for t in masks:
                if t & ~grown == 0:
                    inside += 1
                    if inside > 2:
                        break
            if inside == 1:
                exts.append(grown)
            elif inside == 2:
                can_merge = True
        if exts:
            kept = list(masks[:i] + masks[i + 1:])
            results.append((canon(kept + exts), R2))
        elif union_wo[i] == full:
            results.append((canon(masks[:i] + masks[i + 1:]), R1))
        elif can_merge:
            merge_pool.setdefault(s.bit_count(), []).append(i)
    for size, group in merge_pool.items():
        for a in range(len(group)):
            i = group[a]
            for b in range(a + 1, len(group)):
                j = group[b]
                merged = masks[i] | masks[j]
                if merged.bit_count() == size + 1:
                    kept = [masks[k] for k in range(n) if k != i and k != j]
                    results.append((canon(kept + [merged]), R3))
    return results


def count_antichain_covers(p):
    """Number of antichain covers of {1..p}, by ordered extension.

    Candidate clauses are scanned in canonical order, so every antichain is
    built exactly once; it is counted when its union covers. Subtrees whose
    remaining candidates cannot complete the cover are pruned.
    """
    full = (1 << p) - 1
    cands = sorted(range(1, 1 << p), key=_key)

    def descend(pool, union):
        total = 0
        for idx, c in enumerate(pool):
            u = union | c
            if u == full:
                total += 1
            nxt = [d for d in pool[idx + 1:] if d & ~c and c & ~d]
            if nxt:
                rem = 0
                for d in nxt:
                    rem |= d
                if u | rem == full:
                    total += descend(nxt, u)
        return total

    return descend(cands, 0)


def iter_antichain_covers(p):
    """Yield each antichain cover of {1..p} exactly once, canonically sorted.

    Same traversal as count_antichain_covers, kept lazy so callers can stream
    multi-million-row enumerations without materializing them.
    """
    full = (1 << p) - 1
    cands = sorted(range(1, 1 << p), key=_key)

    def descend(chosen, pool, union):
        for idx, c in enumerate(pool):
            u = union | c
            chosen.append(c)
            if u == full:
                yield tuple(chosen)
            nxt = [d for d in pool[idx + 1:] if d & ~c and c & ~d]
            if nxt:
                rem = 0
                for d in nxt:
                    rem |= d
                if u | rem == full:
                    yield from descend(chosen, nxt, u)
            chosen.pop()

    yield from descend([], cands, 0)
