"""Deliberately naive ground truth.

Nothing here calls the word engine's reduction code.  Words are explored by
exhaustive closure under two moves, swapping adjacent commuting letters and
deleting an adjacent ``x x^-1`` pair; the ShortLex-least shortest word
reached is taken as the normal form.  Only the graph type and the
``GroupElement`` container are shared with the engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import FrozenSet, Iterable, List, Set, Tuple

from .graph import CommutationGraph, VertexSet
from .words import GroupElement, Raw, Word, raw_codes

__all__ = [
    "Ball",
    "ball",
    "brute_nf",
    "brute_equal",
    "brute_length",
    "brute_commute",
    "brute_centraliser",
    "brute_closed_sets",
    "brute_complement",
    "brute_root",
    "brute_divisors",
    "brute_divisors_by_length",
    "brute_greatest_divisor",
    "brute_in_parabolic",
]


def _key(word):
    return (len(word), tuple(2 * abs(c) + (c < 0) for c in word))


def _closure_nf(graph: CommutationGraph, word: Word) -> Word:
    commute = graph.commute
    seen = {word}
    stack = [word]
    while stack:
        w = stack.pop()
        for i in range(len(w) - 1):
            x, y = w[i], w[i + 1]
            if x == -y:
                nxt = w[:i] + w[i + 2:]
            elif abs(x) != abs(y) and commute[abs(x) - 1][abs(y) - 1]:
                nxt = w[:i] + (y, x) + w[i + 2:]
            else:
                continue
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return min(seen, key=_key)


@lru_cache(maxsize=None)
def _nf_append(graph: CommutationGraph, prefix: Word, c: int) -> Word:
    return _closure_nf(graph, prefix + (c,))


def brute_nf(graph: CommutationGraph, raw: Raw) -> Word:
    """Normal form of ``raw`` computed letter by letter by exhaustive closure."""
    w: Word = ()
    for c in raw_codes(graph, raw):
        w = _nf_append(graph, w, c)
    return w


def brute_length(graph: CommutationGraph, raw: Raw) -> int:
    return len(brute_nf(graph, raw))


def brute_equal(graph: CommutationGraph, u_raw: Raw, w_raw: Raw) -> bool:
    return brute_nf(graph, u_raw) == brute_nf(graph, w_raw)


def _inv(word):
    return tuple(-c for c in reversed(word))


def brute_commute(graph: CommutationGraph, x: Raw, s: Raw) -> bool:
    x, s = tuple(raw_codes(graph, x)), tuple(raw_codes(graph, s))
    return brute_nf(graph, x + s) == brute_nf(graph, s + x)


def _support(graph, word) -> VertexSet:
    return frozenset(graph.vertices[abs(c) - 1] for c in word)


# -- balls ----------------------------------------------------------------


@dataclass(frozen=True)
class Ball:
    """All elements of length at most ``radius``, in ShortLex order."""

    graph: CommutationGraph
    radius: int
    words: Tuple[Word, ...]

    @property
    def elements(self) -> Tuple[GroupElement, ...]:
        return tuple(GroupElement(self.graph, w) for w in self.words)

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        w = x.word if isinstance(x, GroupElement) else brute_nf(self.graph, x)
        return w in set(self.words)


@lru_cache(maxsize=None)
def _ball_words(graph: CommutationGraph, r: int) -> Tuple[Word, ...]:
    letters = [s * (i + 1) for i in range(len(graph)) for s in (1, -1)]
    found = {(): 0}
    frontier = [()]
    for step in range(1, r + 1):
        nxt = []
        for w in frontier:
            for c in letters:
                v = _nf_append(graph, w, c)
                if v not in found:
                    found[v] = step
                    nxt.append(v)
        frontier = nxt
    return tuple(sorted(found, key=_key))


def ball(graph: CommutationGraph, r: int) -> Ball:
    """Breadth-first search of the Cayley graph up to radius ``r``."""
    return Ball(graph, r, _ball_words(graph, r))


# -- centralisers, divisors, roots ----------------------------------------


def brute_centraliser(graph: CommutationGraph, S: Iterable[Raw], r: int) -> Set[GroupElement]:
    """``{x in ball(r) : xs = sx for all s in S}``."""
    S = [tuple(raw_codes(graph, s)) for s in S]
    out = set()
    for w in _ball_words(graph, r):
        if all(brute_nf(graph, w + s) == brute_nf(graph, s + w) for s in S):
            out.add(GroupElement(graph, w))
    return out


def brute_in_parabolic(graph: CommutationGraph, x: Raw, Y: Iterable[str], g: Raw = ()) -> bool:
    """Whether ``x`` lies in ``G(Y)^g``, i.e. ``g x g^-1`` is supported on ``Y``."""
    g = tuple(raw_codes(graph, g))
    x = tuple(raw_codes(graph, x))
    return _support(graph, brute_nf(graph, g + x + _inv(g))) <= frozenset(Y)


def _rewrites(graph: CommutationGraph, word: Word) -> Set[Word]:
    """Every word reachable from ``word`` by swapping adjacent commuting letters."""
    commute = graph.commute
    seen = {word}
    stack = [word]
    while stack:
        w = stack.pop()
        for i in range(len(w) - 1):
            x, y = w[i], w[i + 1]
            if abs(x) != abs(y) and commute[abs(x) - 1][abs(y) - 1]:
                nxt = w[:i] + (y, x) + w[i + 2:]
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return seen


def brute_divisors(graph: CommutationGraph, w: Raw, side: str = "left") -> Set[GroupElement]:
    """Prefixes (suffixes) of every geodesic spelling of ``w``."""
    w = brute_nf(graph, w)
    left = side in ("l", "left")
    out = set()
    for v in _rewrites(graph, w):
        for k in range(len(v) + 1):
            out.add(GroupElement(graph, brute_nf(graph, v[:k] if left else v[k:])))
    return out


def brute_divisors_by_length(graph: CommutationGraph, w: Raw, side: str = "left") -> Set[GroupElement]:
    """Elements ``u`` of the ball of radius ``lg(w)`` with ``lg(u^-1 w) = lg(w) - lg(u)``."""
    w = brute_nf(graph, w)
    out = set()
    for u in _ball_words(graph, len(w)):
        q = _inv(u) + w if side in ("l", "left") else w + _inv(u)
        if len(brute_nf(graph, q)) == len(w) - len(u):
            out.add(GroupElement(graph, u))
    return out


def brute_greatest_divisor(graph: CommutationGraph, w: Raw, Y: Iterable[str], side: str = "left") -> GroupElement:
    """The divisor in ``G(Y)`` that every other such divisor divides."""
    Y = frozenset(Y)
    left = side in ("l", "left")
    divs = [d.word for d in brute_divisors(graph, w, side) if d.alpha <= Y]

    def divides(e, d):
        q = _inv(e) + d if left else d + _inv(e)
        return len(brute_nf(graph, q)) == len(d) - len(e)

    best = [d for d in divs if all(divides(e, d) for e in divs)]
    assert len(best) == 1
    return GroupElement(graph, best[0])


@lru_cache(maxsize=None)
def _ball_words_over(graph: CommutationGraph, r: int, gens: Tuple[int, ...]) -> Tuple[Word, ...]:
    """Ball of radius ``r`` in the subgroup generated by the generator codes ``gens``."""
    letters = [s * c for c in gens for s in (1, -1)]
    found = {()}
    frontier = [()]
    for _ in range(r):
        nxt = []
        for w in frontier:
            for c in letters:
                v = _nf_append(graph, w, c)
                if v not in found:
                    found.add(v)
                    nxt.append(v)
        frontier = nxt
    return tuple(sorted(found, key=_key))


def _power_candidates(graph, w: Word, n: int):
    # s^n = w forces supp(s) = supp(w), and lg(w) >= lg(s) + (n - 1)
    gens = tuple(sorted({abs(c) for c in w}))
    return [s for s in _ball_words_over(graph, len(w) - n + 1, gens) if s]


def brute_root(graph: CommutationGraph, w: Raw) -> Tuple[GroupElement, int]:
    """Largest ``n`` and some ``s`` with ``s^n = w``, by search over short elements."""
    w = brute_nf(graph, w)
    if not w:
        raise ValueError("the identity has no root")
    for n in range(len(w), 0, -1):
        for s in _power_candidates(graph, w, n):
            if brute_nf(graph, s * n) == w:
                return GroupElement(graph, s), n
    raise AssertionError("unreachable: w = w^1")


def brute_is_proper_power(graph: CommutationGraph, w: Raw) -> bool:
    w = brute_nf(graph, w)
    return any(brute_nf(graph, s * n) == w for n in range(2, len(w) + 1) for s in _power_candidates(graph, w, n))


# -- closed sets ----------------------------------------------------------


def brute_complement(graph: CommutationGraph, Y: Iterable[str], Z: Iterable[str] = None) -> VertexSet:
    """``O^Z(Y)`` by scanning the definition ``d(u, y) <= 1``."""
    Y = list(Y)
    Z = graph.vertices if Z is None else list(Z)
    if not Y:
        return frozenset(Z)
    edges = {frozenset(e) for e in graph.edges}

    def dist_le_1(u, y):
        return u == y or frozenset((u, y)) in edges

    return frozenset(u for u in Z if all(dist_le_1(u, y) for y in Y))


def brute_closed_sets(graph: CommutationGraph) -> FrozenSet[VertexSet]:
    """``{Y^⊥ : Y ⊆ X}`` over all subsets."""
    X = graph.vertices
    return frozenset(
        brute_complement(graph, Y) for r in range(len(X) + 1) for Y in combinations(X, r)
    )


def brute_chains(sets: Iterable[VertexSet]) -> int:
    """Longest strict inclusion chain among ``sets`` by exhaustive recursion."""
    sets = list(sets)

    def longest_from(S):
        return max((1 + longest_from(T) for T in sets if T < S), default=0)

    return max((longest_from(S) for S in sets), default=0)


def all_words(graph: CommutationGraph, n: int) -> List[Word]:
    """Every raw word of length at most ``n``."""
    letters = [s * (i + 1) for i in range(len(graph)) for s in (1, -1)]
    out: List[Word] = [()]
    layer: List[Word] = [()]
    for _ in range(n):
        layer = [w + (c,) for w in layer for c in letters]
        out.extend(layer)
    return out
