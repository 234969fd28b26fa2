import random

import pytest

from pcgk import (
    CentraliserChain,
    DomainError,
    centraliser_lattice_height,
    centraliser_of_element,
    centre,
    contains_subgroup,
    cpad_chain,
    differences,
    is_centraliser,
    is_cyclically_minimal,
    parabolic,
    parabolicize_chain,
    random_centraliser_chain,
    search_longer_chain,
    standardize,
    verify_chain,
    whole_group,
    witness_chain,
)
from pcgk.oracle import ball, brute_chains, brute_closed_sets


def names(chain):
    return [str(H) for H in chain]


def canonical_chain(graph, rng, radius=3):
    pool = [w for w in ball(graph, radius).elements if not w.is_identity and is_cyclically_minimal(w)]
    return random_centraliser_chain(graph, pool, rng)


class TestCpad:
    def test_examples(self, c4):
        e = c4.element
        C = standardize([e("a c")], {"b", "d"})
        D = standardize([e("a c"), e("b d")], set())
        assert names(cpad_chain(C, D)) == ["P{Y={b,d}; conj=1}", "P{Y={b}; conj=1}", "P{Y={}; conj=1}"]
        assert names(cpad_chain(whole_group(c4), C)) == [
            "P{Y={a,b,c,d}; conj=1}",
            "P{Y={a,b,d}; conj=1}",
            "P{Y={b,d}; conj=1}",
        ]

    def test_needs_new_blocks(self, c4):
        with pytest.raises(DomainError):
            cpad_chain(whole_group(c4), parabolic(c4, "ab"))

    def test_needs_strict_containment(self, c4):
        C = standardize([c4.element("a c")], {"b", "d"})
        with pytest.raises(DomainError):
            cpad_chain(C, whole_group(c4))

    def test_needs_centralisers(self, p3):
        with pytest.raises(DomainError):
            cpad_chain(whole_group(p3), standardize([p3.element("a c")], set()))


class TestParabolicize:
    def test_examples(self, c4, p3):
        e = c4.element
        chain = [whole_group(c4), centraliser_of_element(e("a c")), centraliser_of_element(e("a c b d")), parabolic(c4, "")]
        out = parabolicize_chain(chain)
        assert names(out) == [
            "P{Y={a,b,c,d}; conj=1}",
            "P{Y={a,b,d}; conj=1}",
            "P{Y={b,d}; conj=1}",
            "P{Y={b}; conj=1}",
            "P{Y={}; conj=1}",
        ]
        chain = [whole_group(p3), parabolic(p3, "ab"), parabolic(p3, "b")]
        assert parabolicize_chain(chain) == [H.as_parabolic() if hasattr(H, "as_parabolic") else H for H in chain]
        assert parabolicize_chain([whole_group(p3)]) == [parabolic(p3, "abc")]

    def test_endpoints_must_be_parabolic(self, c4):
        with pytest.raises(DomainError):
            parabolicize_chain([whole_group(c4), centraliser_of_element(c4.element("a c"))])

    @pytest.mark.parametrize("name", ["c4", "p4", "c5"])
    def test_random_chains(self, name, request):
        g = request.getfixturevalue(name)
        rng = random.Random(3)
        for _ in range(40):
            chain = canonical_chain(g, rng)
            assert verify_chain(chain)
            out = parabolicize_chain(chain)
            assert verify_chain(out)
            assert len(out) >= len(chain)
            assert out[0] == parabolic(g, g.X) and out[-1] == parabolic(g, g.orthogonal_complement(g.X))


class TestVerify:
    def test_examples(self, p3):
        assert verify_chain([whole_group(p3), parabolic(p3, "ab"), parabolic(p3, "b")])
        assert not verify_chain([whole_group(p3), parabolic(p3, "a")])
        assert verify_chain([whole_group(p3)])
        assert not verify_chain([parabolic(p3, "b"), parabolic(p3, "ab")])

    def test_json_round_trip(self, c4):
        chain = witness_chain(c4)
        assert CentraliserChain.from_json(c4, chain.to_json()) == chain
        with pytest.raises(DomainError):
            CentraliserChain.from_json(c4, {"Z": []})


class TestHeight:
    @pytest.mark.parametrize("name, h", [("p3", 2), ("c4", 4), ("p4", 4), ("k3", 0)])
    def test_values(self, name, h, request):
        g = request.getfixturevalue(name)
        assert centraliser_lattice_height(g) == h == brute_chains(brute_closed_sets(g))
        chain = witness_chain(g)
        assert chain.length == h and verify_chain(chain)
        assert chain[-1] == centre(g)

    def test_witness_examples(self, p3, k3):
        assert names(witness_chain(p3)) == [
            "Q{blocks=[]; Z={a,b,c}; conj=1}",
            "Q{blocks=[]; Z={a,b}; conj=1}",
            "Q{blocks=[]; Z={b}; conj=1}",
        ]
        assert witness_chain(k3).length == 0

    def test_search_is_seeded(self, p3):
        a = search_longer_chain(p3, max_chains=200, seed=5)
        b = search_longer_chain(p3, max_chains=200, seed=5)
        assert a == b and a.sampled == 200
        assert a.length <= centraliser_lattice_height(p3)

    def test_random_chain_ends_at_centre(self, c5):
        rng = random.Random(0)
        for _ in range(20):
            chain = canonical_chain(c5, rng, radius=2)
            assert chain[0] == whole_group(c5)
            assert contains_subgroup(chain[-1], centre(c5)) and contains_subgroup(centre(c5), chain[-1])
            assert all(is_centraliser(H) for H in chain)
            assert chain.length <= centraliser_lattice_height(c5)

    def test_cpad_lengths_on_random_steps(self, c4):
        rng = random.Random(1)
        for _ in range(40):
            chain = canonical_chain(c4, rng)
            for C, D in zip(chain, chain[1:]):
                b, _ = differences(D, C)
                if b:
                    seg = cpad_chain(C, D)
                    assert len(seg) - 1 == b + 1
                    assert verify_chain(seg)
