import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from pcgk import (
    DomainError,
    GraphLoadError,
    enumerate_closed_sets,
    format_graph,
    lattice_height,
    load_graph,
    parse_graph,
    random_graph,
)
from pcgk.oracle import brute_chains, brute_closed_sets, brute_complement


def subsets(S):
    S = sorted(S)
    return [frozenset(c) for n in range(len(S) + 1) for c in itertools.combinations(S, n)]


graphs = st.builds(
    lambda n, seed: random_graph(n, random.Random(seed)),
    st.integers(1, 5),
    st.integers(0, 10_000),
)


class TestParsing:
    def test_order_and_edges(self, p3):
        assert p3.vertices == ("a", "b", "c")
        assert p3.commutes("a", "b") and p3.commutes("b", "a")
        assert not p3.commutes("a", "c")
        assert p3.commutes("a", "a")
        assert all(x != y for x, y in p3.edges)

    def test_comments_and_blank_lines(self):
        g = parse_graph("# square\n\nvertices: x y\n# none yet\nedges: x-y\n")
        assert g.vertices == ("x", "y") and g.commutes("x", "y")

    @pytest.mark.parametrize(
        "text, line",
        [
            ("vertices: a a\nedges:\n", 1),
            ("vertices: a b\nedges: a-b b-a\n", 2),
            ("vertices: a b\nedges: a-q\n", 2),
            ("vertices: a b\nedges: a-a\n", 2),
            ("vertices: a b\nnonsense\n", 2),
        ],
    )
    def test_load_errors_carry_line_numbers(self, text, line):
        with pytest.raises(GraphLoadError) as info:
            parse_graph(text)
        assert info.value.lineno == line
        assert f"line {line}" in str(info.value)

    def test_round_trip(self, c4, tmp_path):
        path = tmp_path / "c4.txt"
        path.write_text(format_graph(c4), encoding="utf-8")
        assert load_graph(path) == c4

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            load_graph(tmp_path / "nope.txt")


class TestComplement:
    def test_examples(self, p3):
        assert p3.orthogonal_complement(set()) == {"a", "b", "c"}
        assert p3.orthogonal_complement({"a", "c"}) == {"b"}
        assert p3.orthogonal_complement({"b"}) == {"a", "b", "c"}

    def test_relative(self, p3):
        assert p3.orthogonal_complement(set(), {"a"}) == {"a"}
        assert p3.orthogonal_complement({"a"}, {"b", "c"}) == {"b"}

    def test_foreign_vertex(self, p3):
        with pytest.raises(DomainError):
            p3.orthogonal_complement({"q"})

    def test_vertex_in_own_perp(self, c4):
        assert all(x in c4.perp(x) for x in c4.vertices)

    @settings(max_examples=60, deadline=None)
    @given(graphs)
    def test_matches_definition_scan(self, g):
        for Z in subsets(g.X):
            for Y in subsets(Z):
                assert g.orthogonal_complement(Y, Z) == brute_complement(g, Y, Z)

    @settings(max_examples=60, deadline=None)
    @given(graphs)
    def test_galois_laws(self, g):
        perp = g.orthogonal_complement
        for Y in subsets(g.X):
            assert Y <= perp(perp(Y))
            assert perp(Y) == perp(perp(perp(Y)))
            for x in g.X - Y:
                assert perp(Y | {x}) <= perp(Y)


class TestClosure:
    def test_examples(self, p3):
        assert p3.closure({"a"}) == {"a", "b"}
        assert p3.closure(p3.X) == p3.X
        assert p3.closure(set()) == {"b"}

    def test_relative_requires_subset(self, p3):
        with pytest.raises(DomainError):
            p3.closure({"a"}, {"b"})

    @settings(max_examples=40, deadline=None)
    @given(graphs)
    def test_closure_operator(self, g):
        for Y in subsets(g.X):
            c = g.closure(Y)
            assert Y <= c and g.closure(c) == c
            for x in g.X - Y:
                assert c <= g.closure(Y | {x})

    def test_closed_join(self, p3, c4):
        assert p3.closed_join({"a", "b"}, {"b", "c"}) == p3.X
        assert c4.closed_join({"a"}, {"c"}) == {"a", "c"}
        assert p3.closed_join({"a", "b"}, {"a", "b"}) == {"a", "b"}
        with pytest.raises(DomainError):
            p3.closed_join({"a"}, {"b"})


class TestDeltaComponents:
    def test_examples(self, p3):
        assert p3.delta_components({"a", "b"}) == [{"a"}, {"b"}]
        assert p3.delta_components({"a", "c"}) == [{"a", "c"}]
        assert p3.delta_components(set()) == []

    def test_ordered_by_least_vertex(self, c4):
        assert c4.delta_components(c4.X) == [{"a", "c"}, {"b", "d"}]


class TestClosedSets:
    def test_p3(self, p3):
        L = enumerate_closed_sets(p3)
        assert set(L.elements) == {frozenset("b"), frozenset("ab"), frozenset("bc"), frozenset("abc")}
        assert lattice_height(L) == 2
        assert L.maximal_chain() == (frozenset("abc"), frozenset("ab"), frozenset("b"))

    def test_c4_is_powerset(self, c4):
        L = enumerate_closed_sets(c4)
        assert set(L.elements) == set(subsets(c4.X))
        assert L.height == 4

    def test_k3(self, k3):
        L = enumerate_closed_sets(k3)
        assert list(L.elements) == [k3.X]
        assert L.height == 0 and L.maximal_chain() == (k3.X,)

    def test_empty_set_only_when_centre_trivial(self, p3, c4):
        assert frozenset() not in enumerate_closed_sets(p3).elements
        assert frozenset() in enumerate_closed_sets(c4).elements

    @settings(max_examples=60, deadline=None)
    @given(graphs)
    def test_agrees_with_brute_force(self, g):
        L = enumerate_closed_sets(g)
        assert set(L.elements) == brute_closed_sets(g)
        assert set(L.elements) == {g.closure(Y) for Y in subsets(g.X)}
        assert L.height == brute_chains(L.elements)
        chain = L.maximal_chain()
        assert len(chain) == L.height + 1
        assert all(S in L.elements for S in chain)
        assert all(b < a for a, b in zip(chain, chain[1:]))
        assert L.bottom == g.orthogonal_complement(g.X)
