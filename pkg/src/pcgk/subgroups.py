"""Parabolic and quasiparabolic subgroups, their intersections and centralisers.

A quasiparabolic subgroup ``(⟨w_1⟩ × ... × ⟨w_k⟩ × G(Z))^g`` is held in
standard form: every block ``w_i`` is a cyclically minimal root element on
at least two generators, the block supports are distinct components of the
non-commutation graph, and ``Z ⊆ α(w)^⊥ ∖ α(w)``.  Conjugation follows the
right-action convention ``H^g = g^-1 H g``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from .errors import DomainError, NotACentraliserError, UnsupportedError
from .graph import CommutationGraph, VertexSet
from .words import (
    GroupElement,
    block_decomposition,
    cyclic_reduce,
    divides,
    greatest_divisor,
    is_cyclically_minimal,
    project,
    root,
)


class Rank(NamedTuple):
    """``(|Z|, k)``, compared left-lexicographically."""

    zsize: int
    kblocks: int


def rank_less(r1: Rank, r2: Rank) -> bool:
    return tuple(r1) < tuple(r2)


@dataclass(frozen=True)
class ParabolicSubgroup:
    """``G(Y)^conj``."""

    Y: VertexSet
    conj: GroupElement

    @property
    def graph(self) -> CommutationGraph:
        return self.conj.graph

    @property
    def rank(self) -> int:
        return len(self.Y)

    @property
    def is_canonical(self) -> bool:
        return self.conj.is_identity

    def as_quasiparabolic(self) -> "QuasiparabolicSubgroup":
        return standardize([], self.Y, self.conj)

    def generators(self) -> List[GroupElement]:
        return self.as_quasiparabolic().generators()

    def __contains__(self, x):
        return contains(self, x)

    def __str__(self):
        return f"P{{Y={self.graph.format_set(self.Y)}; conj={self.conj}}}"


@dataclass(frozen=True)
class QuasiparabolicSubgroup:
    """``(⟨w_1⟩ × ... × ⟨w_k⟩ × G(Z))^conj`` in standard form.

    Build instances with :func:`standardize`; the constructor does not
    validate.
    """

    blocks: Tuple[GroupElement, ...]
    Z: VertexSet
    conj: GroupElement

    @property
    def graph(self) -> CommutationGraph:
        return self.conj.graph

    @property
    def w(self) -> GroupElement:
        prod = self.graph.identity
        for b in self.blocks:
            prod = prod * b
        return prod

    @property
    def support(self) -> VertexSet:
        """Generators occurring in the canonical part (before conjugation)."""
        s = self.Z
        for b in self.blocks:
            s = s | b.alpha
        return s

    @property
    def is_parabolic(self) -> bool:
        return not self.blocks

    @property
    def is_canonical(self) -> bool:
        return self.conj.is_identity

    def canonical_part(self) -> "QuasiparabolicSubgroup":
        return QuasiparabolicSubgroup(self.blocks, self.Z, self.graph.identity)

    def as_parabolic(self) -> ParabolicSubgroup:
        if self.blocks:
            raise DomainError(f"{self} is not parabolic")
        return ParabolicSubgroup(self.Z, self.conj)

    def generators(self) -> List[GroupElement]:
        """Each block and each generator of ``Z``, conjugated by ``conj``."""
        g = self.conj
        gens = list(self.blocks) + [self.graph.element(z) for z in self.graph.sorted(self.Z)]
        return [x.conjugate(g) for x in gens]

    def conjugate(self, g: GroupElement) -> "QuasiparabolicSubgroup":
        return standardize(self.blocks, self.Z, self.conj * g)

    def __contains__(self, x):
        return contains(self, x)

    def __str__(self):
        blocks = ", ".join(map(str, self.blocks))
        return f"Q{{blocks=[{blocks}]; Z={self.graph.format_set(self.Z)}; conj={self.conj}}}"


Subgroup = Union[ParabolicSubgroup, QuasiparabolicSubgroup]


def _qp(H: Subgroup) -> QuasiparabolicSubgroup:
    if isinstance(H, ParabolicSubgroup):
        return H.as_quasiparabolic()
    if isinstance(H, QuasiparabolicSubgroup):
        return H
    raise TypeError(f"expected a subgroup, got {type(H).__name__}")


def _block_rep(b: GroupElement) -> GroupElement:
    return min(b, ~b)


# -- standard form --------------------------------------------------------


def _normalize_conj(blocks, Z, g: GroupElement) -> GroupElement:
    """Strip left divisors of ``g`` lying in the canonical part."""
    changed = True
    while changed and not g.is_identity:
        changed = False
        d, rest = greatest_divisor(g, Z, "left")
        if not d.is_identity:
            g, changed = rest, True
        for b in blocks:
            for p in (b, ~b):
                while not g.is_identity and divides(p, g, "left"):
                    g, changed = (~p) * g, True
    return g


def standardize(
    blocks_or_word: Union[GroupElement, Sequence[GroupElement]],
    Z: Iterable[str],
    conj: Optional[GroupElement] = None,
    graph: Optional[CommutationGraph] = None,
) -> QuasiparabolicSubgroup:
    """Standard form of ``(⟨w_1⟩ × ... × ⟨w_k⟩ × G(Z))^conj``.

    ``blocks_or_word`` is either a cyclically minimal element (split into its
    blocks) or a list of such elements.  Every resulting block must be a root
    element; blocks on a single generator are folded into ``Z`` and each
    block is replaced by the ShortLex-least of itself and its inverse.

    Raises
    ------
    DomainError
        If a block is not a cyclically minimal root, if two blocks overlap or
        fail to commute, or if ``Z`` is not contained in ``α(w)^⊥``.
    """
    elems = [blocks_or_word] if isinstance(blocks_or_word, GroupElement) else list(blocks_or_word)
    if graph is None:
        if conj is not None:
            graph = conj.graph
        elif elems:
            graph = elems[0].graph
        else:
            raise DomainError("cannot infer the graph of an empty subgroup description")
    conj = graph.identity if conj is None else conj
    Z = graph.vertex_set(Z)

    found: List[GroupElement] = []
    for x in elems:
        if x.is_identity:
            continue
        if not is_cyclically_minimal(x):
            raise DomainError(f"block {x} is not cyclically minimal")
        for b in block_decomposition(x)[1]:
            if root(b)[1] != 1:
                raise DomainError(f"block {b} is not a root element")
            found.append(b)
    for b1, b2 in combinations(found, 2):
        if b1.alpha & b2.alpha or not all(graph.commutes(x, y) for x in b1.alpha for y in b2.alpha):
            raise DomainError(f"blocks {b1} and {b2} are not independent")
    supp = frozenset().union(*(b.alpha for b in found))
    if not Z <= graph.orthogonal_complement(supp):
        raise DomainError(f"Z={graph.format_set(Z)} is not contained in α(w)^⊥")

    kept = []
    for b in found:
        if len(b.alpha) == 1:
            Z = Z | b.alpha
        else:
            kept.append(_block_rep(b))
    kept.sort()
    return QuasiparabolicSubgroup(tuple(kept), Z, _normalize_conj(kept, Z, conj))


def parabolic(graph: CommutationGraph, Y: Iterable[str], conj: Optional[GroupElement] = None) -> ParabolicSubgroup:
    Y = graph.vertex_set(Y)
    conj = graph.identity if conj is None else conj
    return ParabolicSubgroup(Y, _normalize_conj((), Y, conj))


def whole_group(graph: CommutationGraph) -> QuasiparabolicSubgroup:
    return QuasiparabolicSubgroup((), graph.X, graph.identity)


# -- membership -----------------------------------------------------------


def _exponent_sums(w: GroupElement):
    sums = {}
    for c in w.word:
        sums[abs(c)] = sums.get(abs(c), 0) + (1 if c > 0 else -1)
    return sums


def _block_power(b: GroupElement, x: GroupElement) -> Optional[int]:
    """Exponent ``a`` with ``b^a`` matching ``x`` on ``α(b)``, or ``None``."""
    target = project(x, b.alpha)
    sums = _exponent_sums(b)
    nonzero = [g for g, s in sums.items() if s]
    if nonzero:
        g = nonzero[0]
        got = _exponent_sums(target).get(g, 0)
        if got % sums[g]:
            return None
        a = got // sums[g]
        return a if b ** a == target else None
    bound = len(x) // len(b)
    for a in sorted(range(-bound, bound + 1), key=abs):
        if b ** a == target:
            return a
    return None


def contains(H: Subgroup, x: GroupElement) -> bool:
    """Membership of ``x`` in ``H``."""
    H = _qp(H)
    y = x.conjugate(~H.conj)
    residual = y
    for b in H.blocks:
        a = _block_power(b, y)
        if a is None:
            return False
        residual = residual * b ** (-a)
    return residual.alpha <= H.Z


def contains_subgroup(H: Subgroup, K: Subgroup) -> bool:
    """``K ⊆ H``, decided on the generators of ``K``."""
    H = _qp(H)
    return all(contains(H, k) for k in _qp(K).generators())


def subgroup_equal(H: Subgroup, K: Subgroup) -> bool:
    return contains_subgroup(H, K) and contains_subgroup(K, H)


# -- centralisers ---------------------------------------------------------


def centraliser_of_element(w: GroupElement) -> QuasiparabolicSubgroup:
    """``C(w) = (⟨r(v_1)⟩ × ... × ⟨r(v_k)⟩ × G(α(v)^⊥ ∖ α(v)))^u`` for ``w = u^-1∘v∘u``."""
    graph = w.graph
    if w.is_identity:
        return whole_group(graph)
    u, v = cyclic_reduce(w)
    _, blocks = block_decomposition(v)
    roots = [root(b)[0] for b in blocks]
    A = graph.orthogonal_complement(v.alpha) - v.alpha
    return standardize(roots, A, u)


def intersect_parabolic(P1: Subgroup, P2: Subgroup) -> ParabolicSubgroup:
    """``G(Y)^f ∩ G(Z)^h`` as a parabolic subgroup.

    With ``g = h f^-1 = g1∘d∘g2``, ``g1 = gd^l_Z(g)`` and ``g2 = gd^r_Y(d∘g2)``,
    the intersection is ``G(Y ∩ Z ∩ α(d)^⊥)^(g2 f)``.
    """
    A, B = _qp(P1), _qp(P2)
    if A.blocks or B.blocks:
        raise DomainError("intersect_parabolic needs parabolic subgroups")
    graph = A.graph
    Y, Z, f = A.Z, B.Z, A.conj
    g = B.conj * ~f
    _, rest = greatest_divisor(g, Z, "left")
    g2, d = greatest_divisor(rest, Y, "right")
    T = graph.orthogonal_complement(d.alpha)
    return parabolic(graph, Y & Z & T, g2 * f)


def intersect_quasiparabolic(H1: Subgroup, H2: Subgroup) -> QuasiparabolicSubgroup:
    """``H1 ∩ H2`` by factorwise classification of the blocks.

    Reduce to ``Q1 ∩ Q2^d`` where ``gd^l_Z(d) = gd^r_Y(d) = 1``; then
    a block ``v`` of ``Q2`` survives when ``v^d`` is a block of ``Q1`` (up to
    inversion) or lies in ``G(Y)``, a block ``u`` of ``Q1`` survives when it
    lies in ``G(Z)^d``, and the parabolic parts meet in ``G(Y ∩ Z ∩ α(d)^⊥)``.
    """
    A, B = _qp(H1), _qp(H2)
    graph = A.graph
    Y, Z, f = A.Z, B.Z, A.conj
    g = B.conj * ~f
    _, g = greatest_divisor(g, Z, "left")
    h, d = greatest_divisor(g, Y, "right")
    dinv = ~d

    new_blocks: List[GroupElement] = []
    matched = set()
    for v in B.blocks:
        vd = v.conjugate(d)
        hit = [u for u in A.blocks if u == vd or u == ~vd]
        if hit:
            matched.add(hit[0])
            new_blocks.append(hit[0])
        elif vd.alpha <= Y:
            if not is_cyclically_minimal(vd):
                raise AssertionError(f"conjugated block {vd} is not cyclically minimal")
            new_blocks.append(vd)
    for u in A.blocks:
        if u not in matched and u.conjugate(dinv).alpha <= Z:
            new_blocks.append(u)
    P = Y & Z & graph.orthogonal_complement(d.alpha)
    return standardize(new_blocks, P, h * f, graph=graph)


def meet(H1: Subgroup, H2: Subgroup) -> Subgroup:
    """Intersection, parabolic when both inputs are."""
    A, B = _qp(H1), _qp(H2)
    if A.is_parabolic and B.is_parabolic:
        return intersect_parabolic(A, B)
    return intersect_quasiparabolic(A, B)


def centraliser_of_set(S: Iterable[GroupElement], graph: Optional[CommutationGraph] = None) -> QuasiparabolicSubgroup:
    """``C(S)`` as the intersection of the centralisers of the blocks of each ``s``."""
    S = list(S)
    if graph is None:
        if not S:
            raise DomainError("graph required for the empty set")
        graph = S[0].graph
    H = whole_group(graph)
    for s in S:
        if s.is_identity:
            continue
        u, blocks = block_decomposition(s)
        for b in blocks:
            H = intersect_quasiparabolic(H, centraliser_of_element(b.conjugate(u)))
    return H


def _centraliser_sets(H: QuasiparabolicSubgroup):
    graph = H.graph
    Zw = graph.orthogonal_complement(H.w.alpha) - H.w.alpha
    return graph, Zw


def is_centraliser(H: Subgroup) -> bool:
    """``Z ∈ CS(Γ)`` and ``Z ∈ CS(Γ(α(w)^⊥ ∖ α(w)))`` for the standard form."""
    H = _qp(H)
    graph, Zw = _centraliser_sets(H)
    return graph.is_closed(H.Z) and graph.is_closed(H.Z, Zw)


def present_as_centraliser(H: Subgroup) -> List[GroupElement]:
    """A finite set ``S`` with ``C(S) = H``: ``({w} ∪ O^{Z'}(Z))^conj``.

    Raises
    ------
    NotACentraliserError
        If ``H`` fails :func:`is_centraliser`.
    """
    H = _qp(H)
    if not is_centraliser(H):
        raise NotACentraliserError(f"{H} is not a centraliser")
    graph, Zw = _centraliser_sets(H)
    S = [] if H.w.is_identity else [H.w]
    S += [graph.element(z) for z in graph.sorted(graph.orthogonal_complement(H.Z, Zw))]
    return [s.conjugate(H.conj) for s in S]


def rank(H: Subgroup) -> Rank:
    H = _qp(H)
    return Rank(len(H.Z), len(H.blocks))


def parabolic_join(P1: Subgroup, P2: Subgroup) -> ParabolicSubgroup:
    """``G(Y) ∨ G(Z) = G(cl(Y ∪ Z))`` for canonical parabolic centralisers."""
    A, B = _qp(P1), _qp(P2)
    if A.blocks or B.blocks:
        raise DomainError("join needs parabolic subgroups")
    if not (A.is_canonical and B.is_canonical):
        raise UnsupportedError("unsupported: conjugated join")
    return parabolic(A.graph, A.graph.closed_join(A.Z, B.Z))


# -- block set / parabolic part ------------------------------------------


def _require_canonical(*Hs):
    for H in Hs:
        if not H.is_canonical:
            raise DomainError(f"{H} is not canonical")


def block_set(Q: Subgroup) -> frozenset:
    Q = _qp(Q)
    _require_canonical(Q)
    return frozenset(Q.blocks)


def parabolic_part(Q: Subgroup) -> ParabolicSubgroup:
    Q = _qp(Q)
    _require_canonical(Q)
    return ParabolicSubgroup(Q.Z, Q.graph.identity)


def differences(Q: Subgroup, Qp: Subgroup) -> Tuple[int, int]:
    """Block difference ``|B(Q) ∖ B(Q')|`` and parabolic difference ``|Z_Q ∖ Z_Q'|``."""
    Q, Qp = _qp(Q), _qp(Qp)
    return len(block_set(Q) - block_set(Qp)), len(Q.Z - Qp.Z)


# -- JSON -----------------------------------------------------------------

_FIELDS = {"blocks", "Z", "conj"}


def to_json(H: Subgroup) -> dict:
    H = _qp(H)
    return {
        "blocks": [str(b) for b in H.blocks],
        "Z": H.graph.sorted(H.Z),
        "conj": str(H.conj),
    }


def from_json(graph: CommutationGraph, data: Union[str, dict]) -> QuasiparabolicSubgroup:
    """Parse ``{"blocks": [...], "Z": [...], "conj": "..."}`` into standard form."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise DomainError(f"invalid subgroup JSON: {exc}") from None
    if not isinstance(data, dict):
        raise DomainError("subgroup JSON must be an object")
    unknown = set(data) - _FIELDS
    if unknown:
        raise DomainError(f"unknown subgroup field {sorted(unknown)[0]!r}")
    if "Z" not in data:
        raise DomainError("subgroup JSON needs a 'Z' field")
    blocks, Z, conj = data.get("blocks", []), data["Z"], data.get("conj", "1")
    if not isinstance(blocks, list) or not all(isinstance(b, str) for b in blocks):
        raise DomainError("'blocks' must be a list of words")
    if not isinstance(Z, list) or not all(isinstance(z, str) for z in Z):
        raise DomainError("'Z' must be a list of vertex names")
    if not isinstance(conj, str):
        raise DomainError("'conj' must be a word")
    return standardize([graph.element(b) for b in blocks], Z, graph.element(conj), graph=graph)
