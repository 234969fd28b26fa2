"""Elements of a partially commutative group as canonical geodesic words.

Letters are stored as nonzero integers: generator ``i`` (0-based position in
the graph's vertex order) is ``i + 1`` and its inverse is ``-(i + 1)``.  The
canonical form of an element is its ShortLex-least geodesic word, where
letters are ordered by generator and then ``x`` before ``x^-1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce as _fold
from math import gcd
from typing import Iterable, List, NamedTuple, Sequence, Set, Tuple, Union

from .errors import DomainError
from .graph import CommutationGraph, VertexSet

Word = Tuple[int, ...]

_TOKEN = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?\Z")


class Letter(NamedTuple):
    generator: str
    sign: int


def letter_key(c: int) -> int:
    return 2 * abs(c) + (c < 0)


def shortlex_key(word: Sequence[int]):
    return (len(word), tuple(2 * abs(c) + (c < 0) for c in word))


# -- raw word machinery ---------------------------------------------------


def _free_reduce(commute, codes: Iterable[int]) -> List[int]:
    """Cancel letter pairs ``x^e ... x^-e`` separated by letters commuting with ``x``.

    Each incoming letter is matched against the geodesic prefix built so far,
    which keeps every prefix geodesic.
    """
    out: List[int] = []
    for c in codes:
        row = commute[abs(c) - 1]
        j = len(out) - 1
        while j >= 0:
            d = out[j]
            if d == -c:
                break
            if not row[abs(d) - 1]:
                j = -1
                break
            j -= 1
        if j >= 0:
            del out[j]
        else:
            out.append(c)
    return out


def _front_pullable(commute, word: Sequence[int]) -> List[int]:
    """Positions of letters that can be moved to the front of ``word``."""
    seen: List[int] = []
    pos = []
    for i, c in enumerate(word):
        g = abs(c) - 1
        row = commute[g]
        if all(row[h] for h in seen):
            pos.append(i)
        seen.append(g)
    return pos


def _back_pullable(commute, word: Sequence[int]) -> List[int]:
    n = len(word)
    return sorted(n - 1 - i for i in _front_pullable(commute, word[::-1]))


def _shortlex(commute, word: Sequence[int]) -> Word:
    """ShortLex-least rearrangement of a geodesic word."""
    rest = list(word)
    out = []
    while rest:
        i = min(_front_pullable(commute, rest), key=lambda p: letter_key(rest[p]))
        out.append(rest.pop(i))
    return tuple(out)


def _canonical(graph: CommutationGraph, codes: Iterable[int]) -> Word:
    return _shortlex(graph.commute, _free_reduce(graph.commute, codes))


def _inverse(word: Sequence[int]) -> List[int]:
    return [-c for c in reversed(word)]


# -- the element type ---------------------------------------------------


class GroupElement:
    """An immutable group element held in canonical form.

    Construct elements with :func:`reduce`, :func:`parse_word` or
    ``graph.element(text)``; the constructor trusts its input.
    """

    __slots__ = ("graph", "word", "_hash")

    def __init__(self, graph: CommutationGraph, word: Word):
        self.graph = graph
        self.word = tuple(word)
        self._hash = hash(self.word)

    def _check(self, other):
        if not isinstance(other, GroupElement):
            raise TypeError(f"expected GroupElement, got {type(other).__name__}")
        if other.graph is not self.graph and other.graph != self.graph:
            raise DomainError("elements belong to different graphs")

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.word == other.word and (self.graph is other.graph or self.graph == other.graph)

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.word)

    def __mul__(self, other):
        self._check(other)
        return GroupElement(self.graph, _canonical(self.graph, self.word + other.word))

    def __invert__(self):
        return GroupElement(self.graph, _shortlex(self.graph.commute, _inverse(self.word)))

    def __pow__(self, n: int):
        if n < 0:
            return (~self) ** -n
        return GroupElement(self.graph, _canonical(self.graph, self.word * n))

    def conjugate(self, g: "GroupElement") -> "GroupElement":
        """``g^-1 · self · g``."""
        self._check(g)
        return GroupElement(self.graph, _canonical(self.graph, _inverse(g.word) + list(self.word) + list(g.word)))

    def commutes_with(self, other: "GroupElement") -> bool:
        return self * other == other * self

    @property
    def is_identity(self) -> bool:
        return not self.word

    @property
    def alpha(self) -> VertexSet:
        vs = self.graph.vertices
        return frozenset(vs[abs(c) - 1] for c in self.word)

    def letters(self) -> List[Letter]:
        vs = self.graph.vertices
        return [Letter(vs[abs(c) - 1], 1 if c > 0 else -1) for c in self.word]

    def shortlex_key(self):
        return shortlex_key(self.word)

    def __lt__(self, other):
        return self.shortlex_key() < other.shortlex_key()

    def __str__(self):
        return format_word(self.graph, self.word)

    def __repr__(self):
        return f"<{self}>"


Raw = Union[str, GroupElement, Iterable]


def format_word(graph: CommutationGraph, word: Sequence[int]) -> str:
    if not word:
        return "1"
    vs = graph.vertices
    return " ".join(vs[c - 1] if c > 0 else vs[-c - 1] + "^-1" for c in word)


def parse_codes(graph: CommutationGraph, text: str) -> List[int]:
    """Tokenise ``text`` into raw letter codes (no reduction)."""
    codes: List[int] = []
    for tok in text.split():
        if tok == "1":
            continue
        m = _TOKEN.match(tok)
        if not m:
            raise DomainError(f"malformed token {tok!r}")
        name, power = m.group(1), m.group(2)
        if name not in graph.index:
            raise DomainError(f"unknown generator {name!r}")
        k = 1 if power is None else int(power)
        if k == 0:
            raise DomainError(f"zero exponent in {tok!r}")
        c = graph.index[name] + 1
        codes.extend([c if k > 0 else -c] * abs(k))
    return codes


def raw_codes(graph: CommutationGraph, raw: Raw) -> List[int]:
    """Letter codes from a string, an element, or (generator, sign) pairs."""
    if isinstance(raw, str):
        return parse_codes(graph, raw)
    if isinstance(raw, GroupElement):
        return list(raw.word)
    codes = []
    for item in raw:
        if isinstance(item, int):
            if item == 0 or abs(item) > len(graph):
                raise DomainError(f"bad letter code {item}")
            codes.append(item)
            continue
        name, sign = item
        if name not in graph.index:
            raise DomainError(f"unknown generator {name!r}")
        if sign not in (1, -1):
            raise DomainError(f"bad sign {sign!r}")
        codes.append(sign * (graph.index[name] + 1))
    return codes


def reduce(graph: CommutationGraph, raw: Raw) -> GroupElement:
    """Canonical form of the product of ``raw``."""
    return GroupElement(graph, _canonical(graph, raw_codes(graph, raw)))


def parse_word(graph: CommutationGraph, text: str) -> GroupElement:
    return reduce(graph, text)


def multiply(u: GroupElement, w: GroupElement) -> GroupElement:
    return u * w


def invert(w: GroupElement) -> GroupElement:
    return ~w


def conjugate(w: GroupElement, g: GroupElement) -> GroupElement:
    """``w^g = g^-1 w g``."""
    return w.conjugate(g)


def equal(u: GroupElement, w: GroupElement) -> bool:
    u._check(w)
    return u.word == w.word


def alpha(w: GroupElement) -> VertexSet:
    return w.alpha


def length(w: GroupElement) -> int:
    return len(w.word)


def project(w: GroupElement, S: Iterable[str]) -> GroupElement:
    """Image of ``w`` under the retraction onto ``G(S)`` (delete other letters)."""
    idx = {w.graph.index[x] + 1 for x in S}
    return GroupElement(w.graph, _canonical(w.graph, [c for c in w.word if abs(c) in idx]))


# -- divisors -------------------------------------------------------------


def _split_divisor(commute, word, gens) -> Tuple[List[int], List[int]]:
    d, rest = [], []
    for c in word:
        g = abs(c) - 1
        if g in gens and all(commute[g][abs(r) - 1] for r in rest):
            d.append(c)
        else:
            rest.append(c)
    return d, rest


def greatest_divisor(w: GroupElement, Y: Iterable[str], side: str = "left") -> Tuple[GroupElement, GroupElement]:
    """Greatest left (right) divisor of ``w`` lying in ``G(Y)``.

    Returns ``(d, rest)`` with ``w = d∘rest`` for ``side='left'`` and
    ``w = rest∘d`` for ``side='right'``.
    """
    graph = w.graph
    gens = {graph.index[y] for y in graph.vertex_set(Y)}
    side = _side(side)
    word = w.word if side == "left" else w.word[::-1]
    d, rest = _split_divisor(graph.commute, word, gens)
    if side == "right":
        d, rest = d[::-1], rest[::-1]
    return GroupElement(graph, _shortlex(graph.commute, d)), GroupElement(graph, _shortlex(graph.commute, rest))


def _side(side):
    if side in ("l", "left"):
        return "left"
    if side in ("r", "right"):
        return "right"
    raise DomainError(f"side must be 'left' or 'right', got {side!r}")


def divides(u: GroupElement, w: GroupElement, side: str = "left") -> bool:
    """True iff ``w = u∘v`` (left) or ``w = v∘u`` (right) for some ``v``."""
    q = (~u) * w if _side(side) == "left" else w * ~u
    return len(q) == len(w) - len(u)


def _ideals(commute, word: Sequence[int], max_size=None):
    """Yield sets of positions that form left divisors, smallest first."""
    n = len(word)
    limit = n if max_size is None else min(n, max_size)
    layer = {frozenset()}
    yield frozenset()
    for _ in range(limit):
        nxt = set()
        for ideal in layer:
            rest = [i for i in range(n) if i not in ideal]
            for p in _front_pullable(commute, [word[i] for i in rest]):
                nxt.add(ideal | {rest[p]})
        layer = nxt
        yield from sorted(layer, key=sorted)


def left_divisors(w: GroupElement) -> Set[GroupElement]:
    """Every left divisor of ``w``."""
    graph = w.graph
    return {
        GroupElement(graph, _shortlex(graph.commute, [w.word[i] for i in sorted(ideal)]))
        for ideal in _ideals(graph.commute, w.word)
    }


# -- cyclic reduction -----------------------------------------------------


def cyclic_reduce(w: GroupElement) -> Tuple[GroupElement, GroupElement]:
    """Write ``w = u^-1∘v∘u`` with ``v`` cyclically minimal.

    Strips the ShortLex-least letter ``y^e`` that left-divides while
    ``y^-e`` right-divides, until none remains.
    """
    graph = w.graph
    commute = graph.commute
    cur = list(w.word)
    u: List[int] = []
    while True:
        front = {cur[i]: i for i in reversed(_front_pullable(commute, cur))}
        back = {cur[i]: i for i in _back_pullable(commute, cur)}
        cands = [c for c in front if -c in back]
        if not cands:
            break
        c = min(cands, key=letter_key)
        i, j = front[c], back[-c]
        cur = [x for k, x in enumerate(cur) if k not in (i, j)]
        u.insert(0, -c)
    return GroupElement(graph, _canonical(graph, u)), GroupElement(graph, _shortlex(commute, cur))


def is_cyclically_minimal(w: GroupElement) -> bool:
    return cyclic_reduce(w)[0].is_identity


def cyclic_shifts(v: GroupElement) -> Set[GroupElement]:
    """``{v2 v1 : v = v1∘v2}`` for cyclically minimal ``v``."""
    if not is_cyclically_minimal(v):
        raise DomainError(f"{v} is not cyclically minimal")
    graph = v.graph
    out = set()
    for ideal in _ideals(graph.commute, v.word):
        v1 = [v.word[i] for i in sorted(ideal)]
        v2 = [v.word[i] for i in range(len(v.word)) if i not in ideal]
        out.add(GroupElement(graph, _canonical(graph, v2 + v1)))
    return out


def cyclic_permutations(v: GroupElement) -> Set[GroupElement]:
    """Closure of ``{v}`` under :func:`cyclic_shifts`.

    A single shift is not transitive in general: with ``a``, ``d`` commuting
    and ``c`` commuting with neither, ``a^-1 c^-1 d`` reaches ``d c^-1 a^-1``
    only in two steps.
    """
    seen = {v}
    todo = [v]
    while todo:
        for s in cyclic_shifts(todo.pop()):
            if s not in seen:
                seen.add(s)
                todo.append(s)
    return seen


def block_decomposition(w: GroupElement) -> Tuple[GroupElement, List[GroupElement]]:
    """``(u, blocks)`` where ``w = u^-1 (∏ blocks) u`` and the blocks of ``w`` are ``block^u``."""
    u, v = cyclic_reduce(w)
    blocks = [project(v, comp) for comp in v.graph.delta_components(v.alpha)]
    return u, blocks


def blocks_of(w: GroupElement) -> List[GroupElement]:
    """The blocks of ``w`` itself, each conjugated by ``u``."""
    u, blocks = block_decomposition(w)
    return [b.conjugate(u) for b in blocks]


# -- roots ----------------------------------------------------------------


def _divisors(n):
    return [q for q in range(1, n + 1) if n % q == 0]


def _block_root(v: GroupElement) -> Tuple[GroupElement, int]:
    graph = v.graph
    n = len(v.word)
    for q in _divisors(n):
        if q == n:
            break
        m = n // q
        for ideal in _ideals(graph.commute, v.word, max_size=q):
            if len(ideal) != q:
                continue
            p = GroupElement(graph, _shortlex(graph.commute, [v.word[i] for i in sorted(ideal)]))
            if p ** m == v:
                return p, m
    return v, 1


def root(w: GroupElement) -> Tuple[GroupElement, int]:
    """The unique root ``r`` and exponent ``n >= 1`` with ``w = r^n``."""
    if w.is_identity:
        raise DomainError("the identity has no root")
    u, blocks = block_decomposition(w)
    parts = [_block_root(b) for b in blocks]
    n = _fold(gcd, (m for _, m in parts))
    r = w.graph.identity
    for ri, mi in parts:
        r = r * ri ** (mi // n)
    return r.conjugate(u), n


def is_root_element(w: GroupElement) -> bool:
    return not w.is_identity and root(w)[1] == 1


# -- conjugation decomposition -------------------------------------------


@dataclass(frozen=True)
class ConjDecomposition:
    """Witness ``(a, b, c, d1, d2, e)`` for the conjugate ``w^g``.

    ``g = a∘b∘c∘d2``, ``u = d1∘a^-1`` where ``w = u^-1∘v∘u``, and
    ``w^g = d^-1∘e∘d`` with ``d = d1∘d2`` and ``e = v^b``.
    """

    head: GroupElement
    rotor: GroupElement
    commuter: GroupElement
    tail1: GroupElement
    tail2: GroupElement
    core: GroupElement
    u: GroupElement
    v: GroupElement

    @property
    def d(self) -> GroupElement:
        return self.tail1 * self.tail2

    def as_dict(self):
        return {
            "head": self.head,
            "rotor": self.rotor,
            "commuter": self.commuter,
            "tail1": self.tail1,
            "tail2": self.tail2,
            "core": self.core,
        }


def conjugate_decompose(w: GroupElement, g: GroupElement) -> ConjDecomposition:
    """Decompose ``w^g`` by replaying greedy divisor extraction.

    1. ``a`` is the greatest common left divisor of ``u^-1`` and ``g``.
    2. Letters of the remainder that commute past ``d1`` are absorbed into
       ``c`` when they commute with ``v``, or into ``b`` when they rotate the
       current core by one letter.
    3. Whatever is left is ``d2``.
    """
    w._check(g)
    graph = w.graph
    commute = graph.commute
    u, v = cyclic_reduce(w)

    p, q = _inverse(u.word), list(g.word)
    a: List[int] = []
    while True:
        fp = {p[i]: i for i in reversed(_front_pullable(commute, p))}
        fq = {q[i]: i for i in reversed(_front_pullable(commute, q))}
        common = [c for c in fp if c in fq]
        if not common:
            break
        c = min(common, key=letter_key)
        del p[fp[c]]
        del q[fq[c]]
        a.append(c)
    d1 = _inverse(p)

    d1_gens = {abs(c) - 1 for c in d1}
    v_gens = {abs(c) - 1 for c in v.word}

    def commutes_all(g0, gens):
        return all(g0 == h or commute[g0][h] for h in gens)

    e = list(v.word)
    b: List[int] = []
    cc: List[int] = []
    while True:
        taken = False
        for i in sorted(_front_pullable(commute, q), key=lambda i: letter_key(q[i])):
            x = q[i]
            gx = abs(x) - 1
            if not commutes_all(gx, d1_gens):
                continue
            if commutes_all(gx, v_gens):
                cc.append(x)
            else:
                front = {e[k]: k for k in reversed(_front_pullable(commute, e))}
                back = {e[k]: k for k in _back_pullable(commute, e)}
                if x in front:
                    k = front[x]
                    e = e[:k] + e[k + 1:] + [x]
                elif -x in back:
                    k = back[-x]
                    e = [-x] + e[:k] + e[k + 1:]
                else:
                    continue
                b.append(x)
            del q[i]
            taken = True
            break
        if not taken:
            break

    def el(codes):
        return GroupElement(graph, _shortlex(commute, codes))

    return ConjDecomposition(
        head=el(a), rotor=el(b), commuter=el(cc), tail1=el(d1), tail2=el(q), core=el(e), u=u, v=v
    )


def check_conj_decomposition(w: GroupElement, g: GroupElement, dec: ConjDecomposition) -> List[str]:
    """Names of the decomposition identities that fail (empty when all hold)."""
    a, b, c, d1, d2, e = dec.head, dec.rotor, dec.commuter, dec.tail1, dec.tail2, dec.core
    graph = w.graph
    u, v = cyclic_reduce(w)
    d = d1 * d2
    failures = []

    def composed(*parts):
        prod = graph.identity
        for x in parts:
            prod = prod * x
        return prod, len(prod) == sum(len(x) for x in parts)

    prod, geo = composed(a, b, c, d2)
    if prod != g or not geo:
        failures.append("g = a∘b∘c∘d2")
    prod, geo = composed(d1, ~a)
    if prod != u or not geo:
        failures.append("u = d1∘a^-1")
    if len(d) != len(d1) + len(d2):
        failures.append("d = d1∘d2")
    prod, geo = composed(~d, e, d)
    if prod != w.conjugate(g) or not geo:
        failures.append("w^g = d^-1∘e∘d")
    if e != v.conjugate(b):
        failures.append("e = v^b")
    if e not in cyclic_shifts(v):
        failures.append("e in shifts(v)")
    if e not in cyclic_permutations(v):
        failures.append("e in permutations(v)")
    if not b.alpha <= v.alpha:
        failures.append("alpha(b) <= alpha(v)")
    if not all(graph.commutes(x, y) for x in (b * c).alpha for y in d1.alpha):
        failures.append("[alpha(b∘c), alpha(d1)] = 1")
    if not all(graph.commutes(x, y) for x in c.alpha for y in v.alpha):
        failures.append("[alpha(c), alpha(v)] = 1")
    return failures
