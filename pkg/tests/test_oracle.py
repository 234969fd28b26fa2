import pytest

from pcgk import parse_word
from pcgk.oracle import (
    all_words,
    ball,
    brute_centraliser,
    brute_closed_sets,
    brute_commute,
    brute_divisors,
    brute_equal,
    brute_greatest_divisor,
    brute_in_parabolic,
    brute_length,
    brute_nf,
    brute_root,
)


def strs(elements):
    return sorted(str(x) for x in elements)


class TestBall:
    @pytest.mark.parametrize("name, r, size", [("p3", 0, 1), ("p3", 1, 7), ("p3", 2, 29), ("p3", 3, 99), ("c4", 3, 217)])
    def test_sizes(self, name, r, size, request):
        assert len(ball(request.getfixturevalue(name), r)) == size

    def test_closed_under_inverse(self, c4):
        B = set(ball(c4, 3).elements)
        assert c4.identity in B
        assert all(~x in B for x in B)
        assert all(len(x.word) <= 3 for x in B)

    def test_monotone(self, p3):
        for r in range(3):
            assert set(ball(p3, r).elements) < set(ball(p3, r + 1).elements)

    def test_membership(self, p3):
        B = ball(p3, 1)
        assert parse_word(p3, "a^-1") in B
        assert parse_word(p3, "a c") not in B


class TestWordProblem:
    def test_examples(self, p3):
        assert brute_equal(p3, "a b", "b a")
        assert not brute_equal(p3, "a c", "c a")
        assert brute_equal(p3, "c a b", "c a b")

    def test_normal_forms(self, p3):
        assert brute_nf(p3, "a b a^-1") == (2,)
        assert brute_nf(p3, "a a^-1") == ()
        assert brute_length(p3, "c b a b^-1") == 2

    def test_commute(self, p3):
        assert brute_commute(p3, "a", "b")
        assert not brute_commute(p3, "a", "c")

    def test_all_words(self, p3):
        assert len(all_words(p3, 2)) == 1 + 6 + 36


class TestCentraliser:
    def test_examples(self, p3):
        assert strs(brute_centraliser(p3, ["a"], 1)) == ["1", "a", "a^-1", "b", "b^-1"]
        assert set(brute_centraliser(p3, [], 2)) == set(ball(p3, 2).elements)
        got = strs(brute_centraliser(p3, ["a c"], 2))
        assert got == ["1", "a c", "b", "b b", "b^-1", "b^-1 b^-1", "c^-1 a^-1"]

    def test_in_parabolic(self, c4):
        assert brute_in_parabolic(c4, "a b", {"a", "b"})
        assert not brute_in_parabolic(c4, "a", {"c"}, "b")
        # b^-1 a b = a
        assert brute_in_parabolic(c4, "a", {"a"}, "b")


class TestOthers:
    def test_closed_set_counts(self, p3, c4, k3):
        assert len(brute_closed_sets(p3)) == 4
        assert len(brute_closed_sets(c4)) == 16
        assert len(brute_closed_sets(k3)) == 1

    def test_roots(self, p3):
        r, n = brute_root(p3, "a c a c")
        assert (str(r), n) == ("a c", 2)
        r, n = brute_root(p3, "a")
        assert (str(r), n) == ("a", 1)
        with pytest.raises(ValueError):
            brute_root(p3, "1")

    def test_divisors(self, p3):
        divs = strs(brute_divisors(p3, "b a c", "left"))
        assert {"1", "a", "b", "a b"} <= set(divs)
        assert divs == ["1", "a", "a b", "a b c", "a c", "b"]
        assert str(brute_greatest_divisor(p3, "b a c", {"a"}, "left")) == "a"
