"""Named extremal graph families.

Every constructor uses a fixed labelling: the join block (if any) comes
first, then the remaining blocks in the order they are written in the
family's formula.  Golden tests and graph6 output depend on this.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .errors import ParameterError
from .graph import Graph, complete, copies, empty_graph, join, union


class Family(enum.Enum):
    COMPLETE = "complete"
    #: K_{n-4}^{+3}: K_{n-4} plus three pendant vertices attached by a matching
    COMPLETE_PLUS_MATCHING = "matching3"
    #: K_1 joined with K_{n-4}^{+3}
    M_GRAPH = "mgraph"
    #: K_d \/ (K_{n-2d} u dK_1)
    ONE_TOUGH_EXTREMAL = "extremal1"
    #: K_{2t-1} \/ (K_{n-2t} u K_1)
    T_TOUGH_EXTREMAL = "extremalt"
    #: K_{tc-1} \/ (K_{n-(t+1)c+2} u (c-1)K_1)
    NOT_T_TOUGH = "nottough"
    #: K_s \/ (K_{n_1} u ... u K_{n_k})
    SPLIT = "split"
    #: K_3 \/ (K_{n-5} u 2K_2), which has n + 2 vertices
    DOUBLE_EDGE_JOIN = "doubleedge"
    #: K_3 \/ (K_{n-5} u 2K_1)
    ISOLATED_PAIR_JOIN = "isolatedpair"


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: int | None = None
    delta: int | None = None
    t: int | None = None
    c: int | None = None
    s: int | None = None
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))


def _need(cond: bool, family: Family, constraint: str):
    if not cond:
        raise ParameterError(f"{family.value}: parameter constraint violated: {constraint}")


def _require(spec: FamilySpec, *names):
    for name in names:
        if getattr(spec, name) is None:
            raise ParameterError(f"{spec.family.value}: missing parameter {name!r}")


def split_graph(s: int, parts) -> Graph:
    """K_s joined with the disjoint union of cliques of the given orders."""
    parts = tuple(parts)
    _need(s >= 0, Family.SPLIT, "s >= 0")
    _need(all(p >= 1 for p in parts), Family.SPLIT, "all part sizes >= 1")
    return join(complete(s), union(*(complete(p) for p in parts)))


def complete_plus_matching(n: int) -> Graph:
    """K_{n-4}^{+3} on n-1 vertices.

    Labels: the three pendant vertices are 0, 1, 2; the clique is 3..n-2.
    Pendant ``i`` is matched to clique vertex ``3 + i``.
    """
    _need(n >= 8, Family.COMPLETE_PLUS_MATCHING, "n >= 8")
    g = union(empty_graph(3), complete(n - 4))
    return g.add_edges([(i, 3 + i) for i in range(3)])


def m_graph(n: int) -> Graph:
    _need(n >= 8, Family.M_GRAPH, "n >= 8")
    return join(complete(1), complete_plus_matching(n))


def one_tough_extremal(n: int, delta: int) -> Graph:
    _need(delta >= 1, Family.ONE_TOUGH_EXTREMAL, "delta >= 1")
    _need(n >= 2 * delta + 1, Family.ONE_TOUGH_EXTREMAL, "n >= 2*delta + 1")
    return join(complete(delta), union(complete(n - 2 * delta), empty_graph(delta)))


def t_tough_extremal(n: int, t: int) -> Graph:
    _need(t >= 1, Family.T_TOUGH_EXTREMAL, "t >= 1")
    _need(n >= 2 * t + 1, Family.T_TOUGH_EXTREMAL, "n >= 2*t + 1")
    return join(complete(2 * t - 1), union(complete(n - 2 * t), complete(1)))


def not_t_tough(n: int, t: int, c: int) -> Graph:
    _need(t >= 1, Family.NOT_T_TOUGH, "t >= 1")
    _need(c >= 2, Family.NOT_T_TOUGH, "c >= 2")
    _need(n >= (t + 1) * c - 1, Family.NOT_T_TOUGH, "n >= (t+1)*c - 1")
    return join(complete(t * c - 1), union(complete(n - (t + 1) * c + 2), empty_graph(c - 1)))


def double_edge_join(n: int) -> Graph:
    """K_3 \\/ (K_{n-5} u 2K_2).  The formula is kept as written, so the
    result has n + 2 vertices and C(n-5, 2) + 3n + 2 edges."""
    _need(n >= 6, Family.DOUBLE_EDGE_JOIN, "n >= 6")
    return join(complete(3), union(complete(n - 5), copies(2, complete(2))))


def isolated_pair_join(n: int) -> Graph:
    """K_3 \\/ (K_{n-5} u 2K_1) on n vertices: minimum degree 3, exactly
    C(n-2, 2) + 6 edges, and no Hamiltonian path between two of the three
    join vertices."""
    _need(n >= 6, Family.ISOLATED_PAIR_JOIN, "n >= 6")
    return join(complete(3), union(complete(n - 5), empty_graph(2)))


def construct(spec: FamilySpec) -> Graph:
    """Build the graph named by ``spec``; raises :class:`ParameterError`."""
    f = spec.family
    if f is Family.COMPLETE:
        _require(spec, "n")
        _need(spec.n >= 0, f, "n >= 0")
        return complete(spec.n)
    if f is Family.COMPLETE_PLUS_MATCHING:
        _require(spec, "n")
        return complete_plus_matching(spec.n)
    if f is Family.M_GRAPH:
        _require(spec, "n")
        return m_graph(spec.n)
    if f is Family.ONE_TOUGH_EXTREMAL:
        _require(spec, "n", "delta")
        return one_tough_extremal(spec.n, spec.delta)
    if f is Family.T_TOUGH_EXTREMAL:
        _require(spec, "n", "t")
        return t_tough_extremal(spec.n, spec.t)
    if f is Family.NOT_T_TOUGH:
        _require(spec, "n", "t", "c")
        return not_t_tough(spec.n, spec.t, spec.c)
    if f is Family.SPLIT:
        _require(spec, "s")
        g = split_graph(spec.s, spec.parts)
        if spec.n is not None and spec.n != g.n:
            raise ParameterError(f"split: n={spec.n} but s + sum(parts) = {g.n}")
        return g
    if f is Family.DOUBLE_EDGE_JOIN:
        _require(spec, "n")
        return double_edge_join(spec.n)
    if f is Family.ISOLATED_PAIR_JOIN:
        _require(spec, "n")
        return isolated_pair_join(spec.n)
    raise ParameterError(f"unknown family {f!r}")


# -- inline expressions --------------------------------------------------------

_TOKEN = re.compile(r"\s*(join|union|\d*K\d+|[:,()]|[^\s:,()]+)")


def _tokenize(text: str):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        out.append((m.group(1), m.start(1)))
        pos = m.end()
    return out


def parse_expression(text: str) -> Graph:
    """Build a graph from the inline mini-language.

    ``K<n>`` is a clique, ``<k>K<n>`` is k disjoint copies of it.
    ``join:A,B,...`` and ``union:A,B,...`` combine every following term;
    ``join(A, union(B, C))`` nests explicitly.  So ``join:K17,3K1`` is
    K_17 joined with three isolated vertices.
    """
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos][0] if pos < len(tokens) else None

    def fail(msg):
        if pos < len(tokens):
            tok, at = tokens[pos]
            raise ParameterError(f"{msg}: unexpected token {tok!r} at column {at + 1} in {text!r}")
        raise ParameterError(f"{msg}: unexpected end of expression {text!r}")

    def take(expected=None):
        nonlocal pos
        tok = peek()
        if tok is None or (expected is not None and tok != expected):
            fail(f"expected {expected!r}" if expected else "expected a term")
        pos += 1
        return tok

    def terms(stop):
        out = [expr()]
        while peek() == ",":
            take(",")
            out.append(expr())
        if peek() != stop:
            fail("expected ',' or " + ("')'" if stop else "end of expression"))
        return out

    def expr():
        tok = peek()
        if tok in ("join", "union"):
            take()
            if peek() == ":":
                take(":")
                args = terms(None if not depth else ")")
            else:
                take("(")
                depth.append(1)
                args = terms(")")
                depth.pop()
                take(")")
            g = args[0]
            for h in args[1:]:
                g = join(g, h) if tok == "join" else union(g, h)
            return g
        if tok is not None and re.fullmatch(r"\d*K\d+", tok):
            take()
            k, n = tok.split("K")
            return copies(int(k) if k else 1, complete(int(n)))
        fail("expected join, union or K<n>")

    depth: list[int] = []
    if not tokens:
        raise ParameterError("empty family expression")
    g = expr()
    if pos != len(tokens):
        fail("trailing input")
    return g
