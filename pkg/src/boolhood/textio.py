"""Two text forms for functions, with strict parsing.

Set syntax lists clauses: `{1,2},{3,4}`. Expression syntax is a DNF over
literals with `!` binding tighter than `&`, which binds tighter than `|`:
`x1 | x2 & !x3`. The expression must already be a disjunction of
conjunctions of distinct literals, and every variable must keep one sign
across the whole input. `parse_function(render_function(rep, signs, style))`
is the identity for both styles.
"""

from .core import FunctionRep, SignStructure, _check_dimension
from .errors import DimensionMismatchError, ParseError, ValidationError


def parse_function(text, p):
    """Parse either syntax; returns (FunctionRep, SignStructure)."""
    _check_dimension(p)
    if not isinstance(text, str) or not text.strip():
        raise ParseError("empty input", 0)
    i = 0
    while text[i].isspace():
        i += 1
    if text[i] == "{":
        return _parse_sets(text, p)
    return _parse_expr(text, p)


def render_function(rep, signs=None, style="sets"):
    """Canonical text for rep: ascending indices, clauses in canonical order."""
    if style == "sets":
        return ",".join("{" + ",".join(map(str, idxs)) + "}" for idxs in rep.index_sets)
    if style == "expr":
        signs = SignStructure.all_positive(rep.p) if signs is None else signs
        if len(signs) != rep.p:
            raise DimensionMismatchError(f"{len(signs)} signs for p={rep.p}")
        parts = []
        for idxs in rep.index_sets:
            lits = (f"x{i}" if signs.sign(i) == 1 else f"!x{i}" for i in idxs)
            parts.append(" & ".join(lits))
        return " | ".join(parts)
    raise ValueError(f"unknown style {style!r}")


def _parse_sets(text, p):
    n = len(text)
    i = 0
    sets = []

    def skip_ws(k):
        while k < n and text[k].isspace():
            k += 1
        return k

    i = skip_ws(i)
    while True:
        if i >= n or text[i] != "{":
            raise ParseError("expected '{'", i)
        i = skip_ws(i + 1)
        if i < n and text[i] == "}":
            raise ValidationError("empty_clause", "a clause needs at least one index",
                                  position=i)
        indices = []
        while True:
            i = skip_ws(i)
            start = i
            while i < n and text[i].isdigit():
                i += 1
            if start == i:
                raise ParseError("expected an index", i)
            idx = int(text[start:i])
            if not 1 <= idx <= p:
                raise ValidationError("bad_index", f"index {idx} outside 1..{p}",
                                      index=idx, p=p, position=start)
            if idx in indices:
                raise ValidationError("duplicate_literal",
                                      f"index {idx} repeats inside one clause",
                                      index=idx, position=start)
            indices.append(idx)
            i = skip_ws(i)
            if i < n and text[i] == ",":
                i += 1
                continue
            if i < n and text[i] == "}":
                i += 1
                break
            raise ParseError("expected ',' or '}'", i)
        sets.append(indices)
        i = skip_ws(i)
        if i >= n:
            break
        if text[i] != ",":
            raise ParseError("expected ',' between clauses", i)
        i = skip_ws(i + 1)
    return FunctionRep.from_indices(p, sets), SignStructure.all_positive(p)


def _tokenize(text):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "&|!()":
            toks.append((ch, i, None))
            i += 1
        elif ch == "x":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ParseError("expected digits after 'x'", i + 1)
            toks.append(("var", i, int(text[i + 1:j])))
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    toks.append(("end", n, None))
    return toks


class _ExprParser:
    """Recursive descent for `or := and ('|' and)*`, `and := factor ('&' factor)*`,
    `factor := '!' var | var | '(' or ')'`."""

    def __init__(self, toks):
        self.toks = toks
        self.k = 0

    def peek(self):
        return self.toks[self.k]

    def take(self):
        tok = self.toks[self.k]
        self.k += 1
        return tok

    def parse(self):
        node = self.parse_or()
        kind, pos, _ = self.peek()
        if kind != "end":
            raise ParseError("unexpected trailing input", pos)
        return node

    def parse_or(self):
        _, pos, _ = self.peek()
        items = [self.parse_and()]
        while self.peek()[0] == "|":
            self.take()
            items.append(self.parse_and())
        return items[0] if len(items) == 1 else ("or", items, pos)

    def parse_and(self):
        _, pos, _ = self.peek()
        items = [self.parse_factor()]
        while self.peek()[0] == "&":
            self.take()
            items.append(self.parse_factor())
        return items[0] if len(items) == 1 else ("and", items, pos)

    def parse_factor(self):
        kind, pos, value = self.peek()
        if kind == "!":
            self.take()
            kind2, pos2, value2 = self.peek()
            if kind2 != "var":
                raise ParseError("negation applies to a single variable", pos2)
            self.take()
            return ("lit", value2, False, pos2)
        if kind == "var":
            self.take()
            return ("lit", value, True, pos)
        if kind == "(":
            self.take()
            node = self.parse_or()
            kind2, pos2, _ = self.peek()
            if kind2 != ")":
                raise ParseError("expected ')'", pos2)
            self.take()
            return node
        raise ParseError("expected a variable, '!' or '('", pos)


def _dnf_terms(node):
    if node[0] == "or":
        terms = []
        for child in node[1]:
            terms.extend(_dnf_terms(child))
        return terms
    return [_conj_literals(node)]


def _conj_literals(node):
    if node[0] == "lit":
        return [node]
    if node[0] == "and":
        out = []
        for child in node[1]:
            out.extend(_conj_literals(child))
        return out
    raise ValidationError("not_dnf",
                          "expression must be a disjunction of conjunctions of literals",
                          position=node[2])


def _parse_expr(text, p):
    node = _ExprParser(_tokenize(text)).parse()
    signs = {}
    sets = []
    for term in _dnf_terms(node):
        seen = set()
        for _, var, positive, pos in term:
            if not 1 <= var <= p:
                raise ValidationError("bad_index", f"x{var} outside x1..x{p}",
                                      index=var, p=p, position=pos)
            if var in seen:
                raise ValidationError("duplicate_literal",
                                      f"x{var} repeats inside one conjunction",
                                      index=var, position=pos)
            seen.add(var)
            want = 1 if positive else -1
            if signs.setdefault(var, want) != want:
                raise ValidationError("mixed_sign",
                                      f"x{var} appears both plain and negated",
                                      variable=var, position=pos)
        sets.append(sorted(seen))
    rep = FunctionRep.from_indices(p, sets)
    return rep, SignStructure(tuple(signs.get(v, 1) for v in range(1, p + 1)))


def function_payload(rep, signs=None):
    """JSON-ready dict used by both the CLI and the HTTP service."""
    signs = SignStructure.all_positive(rep.p) if signs is None else signs
    return {
        "p": rep.p,
        "clauses": [list(idxs) for idxs in rep.index_sets],
        "sets": render_function(rep, style="sets"),
        "expr": render_function(rep, signs, style="expr"),
    }
