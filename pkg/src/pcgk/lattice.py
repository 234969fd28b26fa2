"""Chains of centralisers and the height of the centraliser lattice.

Chain lengths count strict inclusions, so ``[G]`` has length 0.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import DomainError
from .graph import CommutationGraph, enumerate_closed_sets
from .oracle import ball
from .subgroups import (
    ParabolicSubgroup,
    QuasiparabolicSubgroup,
    Subgroup,
    _qp,
    block_set,
    centraliser_of_element,
    contains_subgroup,
    differences,
    from_json,
    intersect_quasiparabolic,
    is_centraliser,
    parabolic,
    to_json,
    whole_group,
)


@dataclass(frozen=True)
class CentraliserChain:
    """A strictly descending sequence of centralisers."""

    entries: Tuple[QuasiparabolicSubgroup, ...]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def length(self) -> int:
        return len(self.entries) - 1

    def to_json(self) -> list:
        return [to_json(H) for H in self.entries]

    @classmethod
    def from_json(cls, graph: CommutationGraph, data) -> "CentraliserChain":
        if not isinstance(data, list):
            raise DomainError("a chain must be a JSON array")
        return cls(tuple(from_json(graph, H) for H in data))


def _chain(entries: Iterable[Subgroup]) -> List[QuasiparabolicSubgroup]:
    return [_qp(H) for H in entries]


def _strictly_below(H: QuasiparabolicSubgroup, K: QuasiparabolicSubgroup) -> bool:
    """``K < H``."""
    return contains_subgroup(H, K) and not contains_subgroup(K, H)


def verify_chain(chain: Iterable[Subgroup]) -> bool:
    """Every entry is a centraliser and every step is a strict inclusion."""
    entries = _chain(chain)
    if not all(is_centraliser(H) for H in entries):
        return False
    return all(_strictly_below(a, b) for a, b in zip(entries, entries[1:]))


def _check_canonical_centraliser(H: QuasiparabolicSubgroup):
    if not H.is_canonical:
        raise DomainError(f"{H} is not canonical")
    if not is_centraliser(H):
        raise DomainError(f"{H} is not a centraliser")


def cpad_chain(C: Subgroup, D: Subgroup) -> List[ParabolicSubgroup]:
    """Parabolic chain ``P(C) > C_b > ... > C_1 > P(D)`` of length ``b(D, C) + 1``.

    ``C_i = G(cl(Z_D ∪ {t_1, ..., t_i}))`` where ``t_i`` is the least
    generator of the ``i``-th block of ``D`` missing from ``C``.
    """
    C, D = _qp(C), _qp(D)
    for H in (C, D):
        _check_canonical_centraliser(H)
    if not _strictly_below(C, D):
        raise DomainError("cpad_chain needs C > D")
    b, _ = differences(D, C)
    if b == 0:
        raise DomainError("cpad_chain needs b(D, C) > 0")
    _, p = differences(C, D)
    if p == 0:
        raise AssertionError("p(C, D) = 0 although b(D, C) > 0")
    graph = C.graph
    new = [v for v in D.blocks if v not in block_set(C)]
    ts = [graph.sorted(v.alpha)[0] for v in new]
    steps = [graph.closure(D.Z | set(ts[:i])) for i in range(1, b + 1)]
    sets = [C.Z] + steps[::-1] + [D.Z]
    for big, small in zip(sets, sets[1:]):
        if not small < big:
            raise AssertionError(f"cpad chain is not strict at {graph.format_set(small)}")
    return [parabolic(graph, S) for S in sets]


def parabolicize_chain(chain: Iterable[Subgroup]) -> List[ParabolicSubgroup]:
    """Replace a chain of canonical quasiparabolic centralisers by a parabolic one.

    Each step ``C_i > C_{i+1}`` becomes a cpad segment when ``b(C_{i+1}, C_i) > 0``,
    a single step ``P(C_i) > P(C_{i+1})`` when the parabolic parts differ, and
    nothing otherwise.  The result is at least as long as the input.
    """
    entries = _chain(chain)
    if not entries:
        raise DomainError("empty chain")
    for H in (entries[0], entries[-1]):
        if not H.is_parabolic:
            raise DomainError(f"chain endpoint {H} is not parabolic")
    for H in entries:
        _check_canonical_centraliser(H)
    graph = entries[0].graph
    out = [parabolic(graph, entries[0].Z)]
    for Ci, Cn in zip(entries, entries[1:]):
        if not _strictly_below(Ci, Cn):
            raise DomainError("chain is not strictly descending")
        b, _ = differences(Cn, Ci)
        _, p = differences(Ci, Cn)
        if b > 0:
            out.extend(cpad_chain(Ci, Cn)[1:])
        elif p > 0:
            out.append(parabolic(graph, Cn.Z))
    return out


def witness_chain(graph: CommutationGraph) -> CentraliserChain:
    """``G(S_0) > ... > G(S_h)`` from a longest chain of closed sets."""
    L = enumerate_closed_sets(graph)
    sets = L.maximal_chain()
    if sets[-1] != graph.orthogonal_complement(graph.X):
        raise AssertionError("longest closed-set chain does not end at X^⊥")
    return CentraliserChain(tuple(parabolic(graph, S).as_quasiparabolic() for S in sets))


def centre(graph: CommutationGraph) -> QuasiparabolicSubgroup:
    """``Z(G) = G(X^⊥)``."""
    return parabolic(graph, graph.orthogonal_complement(graph.X)).as_quasiparabolic()


def centraliser_lattice_height(graph: CommutationGraph) -> int:
    """Height of the centraliser lattice, computed as the height of the closed-set lattice."""
    return enumerate_closed_sets(graph).height


@dataclass(frozen=True)
class ChainSearchResult:
    longest: CentraliserChain
    sampled: int

    @property
    def length(self) -> int:
        return self.longest.length


def random_centraliser_chain(
    graph: CommutationGraph, pool: Sequence, rng: random.Random, max_tries: int = 30, cache: Optional[dict] = None
) -> CentraliserChain:
    """One chain from ``G`` to ``Z(G)`` by intersecting with ``C(w)`` for random ``w``.

    A candidate ``w`` is used only when some generator of the current
    centraliser fails to commute with it, so each step is strict.
    """
    H = whole_group(graph)
    Zg = centre(graph)
    entries = [H]
    misses = 0
    while misses < max_tries and not contains_subgroup(Zg, H):
        w = rng.choice(pool)
        if all(x.commutes_with(w) for x in H.generators()):
            misses += 1
            continue
        if cache is None:
            Cw = centraliser_of_element(w)
        else:
            Cw = cache.get(w)
            if Cw is None:
                Cw = cache[w] = centraliser_of_element(w)
        H = intersect_quasiparabolic(H, Cw)
        entries.append(H)
        misses = 0
    if not contains_subgroup(H, Zg):
        raise AssertionError("chain lost the centre")
    if not contains_subgroup(Zg, H):
        entries.append(Zg)
    return CentraliserChain(tuple(entries))


def search_longer_chain(
    graph: CommutationGraph, max_chains: int = 10_000, seed: int = 0, radius: int = 3
) -> ChainSearchResult:
    """Sample chains of centralisers of elements of ``ball(radius)``; keep the longest.

    A falsification attempt: the height theorem says no sample exceeds
    :func:`centraliser_lattice_height`.
    """
    rng = random.Random(seed)
    pool = [w for w in ball(graph, radius).elements if not w.is_identity]
    best = CentraliserChain((whole_group(graph),))
    if not pool:
        return ChainSearchResult(best, 0)
    cache: dict = {}
    for _ in range(max_chains):
        chain = random_centraliser_chain(graph, pool, rng, cache=cache)
        if chain.length > best.length:
            best = chain
    return ChainSearchResult(best, max_chains)
