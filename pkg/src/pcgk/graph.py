"""Commutation graphs, orthogonal complements and the lattice of closed sets.

A :class:`CommutationGraph` fixes the generating set ``X`` of a partially
commutative group together with a total order on ``X``.  Two generators
commute exactly when they are adjacent.  Vertex sets are passed around as
``frozenset`` of vertex names; functions returning several sets order them
by the graph's vertex order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import DomainError, GraphLoadError

VertexSet = FrozenSet[str]

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class CommutationGraph:
    """A finite simple graph whose vertex order drives every ShortLex choice.

    Parameters
    ----------
    vertices : sequence of str
        Distinct generator names, in the order used for ShortLex.
    edges : iterable of pairs of str
        Commuting pairs.  Loops and unknown endpoints are rejected.
    """

    def __init__(self, vertices: Sequence[str], edges: Iterable[Tuple[str, str]] = ()):
        vertices = tuple(vertices)
        if len(set(vertices)) != len(vertices):
            raise DomainError("duplicate vertex")
        for v in vertices:
            if not isinstance(v, str) or not _NAME.match(v):
                raise DomainError(f"invalid vertex name {v!r}")
        self.vertices = vertices
        self.index = {v: i for i, v in enumerate(vertices)}
        n = len(vertices)
        adj = [[False] * n for _ in range(n)]
        for x, y in edges:
            if x not in self.index or y not in self.index:
                raise DomainError(f"edge {x}-{y} has an unknown endpoint")
            if x == y:
                raise DomainError(f"loop at {x}")
            i, j = self.index[x], self.index[y]
            adj[i][j] = adj[j][i] = True
        # commute[i][j]: distinct adjacent generators; irreflexive by construction
        self.commute = tuple(tuple(row) for row in adj)
        self._perp = tuple(
            frozenset(vertices[j] for j in range(n) if j == i or adj[i][j]) for i in range(n)
        )
        self._key = (vertices, frozenset(self.edges))

    @property
    def edges(self) -> List[Tuple[str, str]]:
        vs = self.vertices
        return [
            (vs[i], vs[j])
            for i, j in combinations(range(len(vs)), 2)
            if self.commute[i][j]
        ]

    @property
    def X(self) -> VertexSet:
        return frozenset(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __eq__(self, other):
        return isinstance(other, CommutationGraph) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        es = " ".join(f"{x}-{y}" for x, y in self.edges)
        return f"CommutationGraph(vertices: {' '.join(self.vertices)}; edges: {es})"

    # -- vertex sets ------------------------------------------------------

    def vertex_set(self, names: Iterable[str]) -> VertexSet:
        """Validate ``names`` against the vertex set and freeze them."""
        s = frozenset(names)
        bad = s - self.X
        if bad:
            raise DomainError(f"unknown vertex {sorted(bad)[0]!r}")
        return s

    def sort_key(self, S: Iterable[str]) -> Tuple[int, ...]:
        return tuple(sorted(self.index[v] for v in S))

    def sorted(self, S: Iterable[str]) -> List[str]:
        return sorted(S, key=self.index.__getitem__)

    def format_set(self, S: Iterable[str]) -> str:
        return "{" + ",".join(self.sorted(S)) + "}"

    def commutes(self, x: str, y: str) -> bool:
        """True when ``x`` and ``y`` are at distance at most one."""
        return x == y or self.commute[self.index[x]][self.index[y]]

    def perp(self, x: str) -> VertexSet:
        """``x^⊥``; always contains ``x``."""
        return self._perp[self.index[x]]

    def orthogonal_complement(self, Y: Iterable[str], Z: Optional[Iterable[str]] = None) -> VertexSet:
        """Vertices of ``Z`` at distance at most one from every vertex of ``Y``.

        ``Z`` defaults to the whole vertex set; an empty ``Y`` yields ``Z``.
        """
        Y = self.vertex_set(Y)
        result = self.X if Z is None else self.vertex_set(Z)
        for y in Y:
            result = result & self._perp[self.index[y]]
        return result

    def closure(self, Y: Iterable[str], Z: Optional[Iterable[str]] = None) -> VertexSet:
        """Double complement ``O^Z(O^Z(Y))``, the closure of ``Y`` relative to ``Z``."""
        Y = self.vertex_set(Y)
        Zs = self.X if Z is None else self.vertex_set(Z)
        if not Y <= Zs:
            raise DomainError("closure needs Y to be a subset of Z")
        return self.orthogonal_complement(self.orthogonal_complement(Y, Zs), Zs)

    def is_closed(self, Y: Iterable[str], Z: Optional[Iterable[str]] = None) -> bool:
        Y = self.vertex_set(Y)
        if Z is not None and not Y <= self.vertex_set(Z):
            return False
        return self.closure(Y, Z) == Y

    def closed_join(self, Y: Iterable[str], Z: Iterable[str]) -> VertexSet:
        """Least closed set containing both closed sets ``Y`` and ``Z``."""
        Y, Z = self.vertex_set(Y), self.vertex_set(Z)
        for S in (Y, Z):
            if not self.is_closed(S):
                raise DomainError(f"{self.format_set(S)} is not closed")
        return self.closure(Y | Z)

    def delta_components(self, S: Iterable[str]) -> List[VertexSet]:
        """Connected components of the non-commutation graph on ``S``.

        Components are listed by their least vertex.
        """
        todo = self.sorted(self.vertex_set(S))
        seen = set()
        components = []
        for start in todo:
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in todo:
                    if y not in comp and not self.commutes(x, y):
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            components.append(frozenset(comp))
        return components

    def induced(self, S: Iterable[str]) -> "CommutationGraph":
        """Full subgraph on ``S`` (vertex order inherited)."""
        S = self.vertex_set(S)
        return CommutationGraph(self.sorted(S), [(x, y) for x, y in self.edges if x in S and y in S])

    @cached_property
    def closed_sets(self) -> "ClosedSetLattice":
        return enumerate_closed_sets(self)

    # -- words ------------------------------------------------------------

    def element(self, text="1"):
        """Parse ``text`` in the word grammar and return its canonical element."""
        from .words import parse_word

        return parse_word(self, text)

    @cached_property
    def identity(self):
        from .words import GroupElement

        return GroupElement(self, ())


# -- closed-set lattice ---------------------------------------------------


@dataclass(frozen=True)
class ClosedSetLattice:
    """The closed sets of a graph, ordered by inclusion."""

    graph: CommutationGraph
    elements: FrozenSet[VertexSet]
    _chain: Tuple[VertexSet, ...] = field(default=(), compare=False, repr=False)

    def __contains__(self, S):
        return frozenset(S) in self.elements

    def __iter__(self):
        return iter(self.sorted())

    def __len__(self):
        return len(self.elements)

    def sorted(self) -> List[VertexSet]:
        """Elements by decreasing size, then by sorted vertex indices."""
        key = self.graph.sort_key
        return sorted(self.elements, key=lambda S: (-len(S), key(S)))

    @property
    def top(self) -> VertexSet:
        return self.graph.X

    @property
    def bottom(self) -> VertexSet:
        return self.graph.orthogonal_complement(self.graph.X)

    @property
    def height(self) -> int:
        return len(self.maximal_chain()) - 1

    def maximal_chain(self) -> Tuple[VertexSet, ...]:
        """A longest strictly descending chain, lexicographically least.

        Chains are compared element by element on sorted vertex-index lists.
        """
        if self._chain:
            return self._chain
        key = self.graph.sort_key
        by_size = sorted(self.elements, key=len)
        below = {}
        for S in by_size:
            below[S] = max((below[T] + 1 for T in by_size if T < S), default=0)
        chain = [self.top]
        while below[chain[-1]]:
            cur = chain[-1]
            chain.append(min((T for T in self.elements if T < cur and below[T] == below[cur] - 1), key=key))
        object.__setattr__(self, "_chain", tuple(chain))
        return self._chain


def enumerate_closed_sets(graph: CommutationGraph) -> ClosedSetLattice:
    """All sets of the form ``Y^⊥``, by intersection-closure of the ``x^⊥``."""
    sets = {graph.X}
    for x in graph.vertices:
        xp = graph.perp(x)
        sets |= {S & xp for S in sets}
    return ClosedSetLattice(graph, frozenset(sets))


def lattice_height(L: ClosedSetLattice) -> int:
    """Number of strict inclusions in a longest chain of ``L``."""
    return L.height


# -- construction helpers -------------------------------------------------


def parse_graph(text: str) -> CommutationGraph:
    """Parse the ``vertices:`` / ``edges:`` text format."""
    vertices = None
    edges = []
    seen_edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        head = head.strip()
        if not sep or head not in ("vertices", "edges"):
            raise GraphLoadError(f"expected 'vertices:' or 'edges:', got {line!r}", lineno)
        tokens = rest.split()
        if head == "vertices":
            if vertices is not None:
                raise GraphLoadError("duplicate 'vertices:' line", lineno)
            vertices = []
            for tok in tokens:
                if not _NAME.match(tok):
                    raise GraphLoadError(f"invalid vertex name {tok!r}", lineno)
                if tok in vertices:
                    raise GraphLoadError(f"duplicate vertex {tok!r}", lineno)
                vertices.append(tok)
        else:
            if vertices is None:
                raise GraphLoadError("'edges:' before 'vertices:'", lineno)
            for tok in tokens:
                x, dash, y = tok.partition("-")
                if not dash or not x or not y:
                    raise GraphLoadError(f"malformed edge {tok!r}", lineno)
                for v in (x, y):
                    if v not in vertices:
                        raise GraphLoadError(f"edge {tok!r} has unknown endpoint {v!r}", lineno)
                if x == y:
                    raise GraphLoadError(f"loop {tok!r}", lineno)
                e = frozenset((x, y))
                if e in seen_edges:
                    raise GraphLoadError(f"duplicate edge {tok!r}", lineno)
                seen_edges.add(e)
                edges.append((x, y))
    if vertices is None:
        raise GraphLoadError("missing 'vertices:' line")
    return CommutationGraph(vertices, edges)


def load_graph(path) -> CommutationGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def format_graph(graph: CommutationGraph) -> str:
    lines = ["vertices: " + " ".join(graph.vertices)]
    if graph.edges:
        lines.append("edges: " + " ".join(f"{x}-{y}" for x, y in graph.edges))
    return "\n".join(lines) + "\n"


def _names(n):
    letters = "abcdefghijklmnopqrstuvwxyz"
    return [letters[i] for i in range(n)] if n <= 26 else [f"x{i}" for i in range(n)]


def path_graph(n: int) -> CommutationGraph:
    vs = _names(n)
    return CommutationGraph(vs, zip(vs, vs[1:]))


def cycle_graph(n: int) -> CommutationGraph:
    vs = _names(n)
    return CommutationGraph(vs, list(zip(vs, vs[1:])) + ([(vs[-1], vs[0])] if n > 2 else []))


def complete_graph(n: int) -> CommutationGraph:
    vs = _names(n)
    return CommutationGraph(vs, combinations(vs, 2))


def random_graph(n: int, rng, p: float = 0.5) -> CommutationGraph:
    """Erdős–Rényi graph on ``n`` named vertices drawn with ``rng`` (a ``random.Random``)."""
    vs = _names(n)
    return CommutationGraph(vs, [e for e in combinations(vs, 2) if rng.random() < p])
