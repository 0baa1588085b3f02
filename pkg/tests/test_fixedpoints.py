import pytest

from subsemigroup.errors import PreconditionError, ValidationError
from subsemigroup.fixedpoints import (
    Anchor,
    PrefixLanguage,
    find_anchors,
    fix_language,
    fixed_point_prefix,
    image_closure_language,
)
from subsemigroup.flgraph import build
from subsemigroup.limitset import limit_language
from subsemigroup.semigroup import GeneratorSet, realize, word_image_prefix
from subsemigroup.substitution import apply
from subsemigroup.words import Alphabet


class TestPrefixLanguage:
    def test_dedupes_and_orders(self):
        lang = PrefixLanguage(2, ["ba", "ab", "ba"])
        assert lang.words == ("ab", "ba")
        assert "ab" in lang and "bb" not in lang

    def test_rejects_wrong_length(self):
        with pytest.raises(ValidationError):
            PrefixLanguage(3, ["ab"])

    def test_subset_and_union(self):
        small = PrefixLanguage(2, ["ab"])
        big = PrefixLanguage(2, ["ab", "ba"])
        assert small <= big
        assert small.union(big).words == big.words


class TestFindAnchors:
    def test_thue_morse_depth_one(self, thue_morse):
        assert find_anchors(thue_morse, 1) == [
            Anchor(("f",), "a"),
            Anchor(("f",), "b"),
        ]

    def test_sturmian_pair_includes_expected(self, sturmian_pair):
        anchors = find_anchors(sturmian_pair, 2)
        assert Anchor(("k",), "a") in anchors
        assert Anchor(("g", "g"), "a") in anchors
        assert anchors[0] == Anchor(("k",), "a")

    def test_single_fibonacci_generator(self, fibonacci):
        single = GeneratorSet(
            fibonacci.alphabet, [fibonacci.generator("f")]
        )
        assert find_anchors(single, 1) == [Anchor(("f",), "a")]

    def test_requires_fixed_letter_freeness(self, sturmian):
        with pytest.raises(PreconditionError):
            find_anchors(sturmian, 2)

    def test_count_matches_closed_walks(self, five_letter):
        # anchors at exact depth d correspond to labeled closed walks of
        # length d in the first-letter graph: count via adjacency powers
        graph = build(five_letter)
        letters = graph.letters
        n = len(letters)
        idx = {ch: i for i, ch in enumerate(letters)}
        adj = [[0] * n for _ in range(n)]
        for a, b, _ in graph.edges:
            adj[idx[a]][idx[b]] += 1

        def matmul(x, y):
            return [
                [sum(x[i][t] * y[t][j] for t in range(n)) for j in range(n)]
                for i in range(n)
            ]

        power = adj
        cumulative = 0
        for depth in range(1, 5):
            cumulative += sum(power[i][i] for i in range(n))
            anchors = find_anchors(five_letter, depth)
            assert len(anchors) == cumulative
            power = matmul(power, adj)


class TestFixedPointPrefix:
    def test_thue_morse(self, thue_morse):
        assert fixed_point_prefix(thue_morse, Anchor(("f",), "a"), 7) == "abbabaa"

    def test_fibonacci(self, fibonacci):
        assert (
            fixed_point_prefix(fibonacci, Anchor(("f",), "a"), 8) == "abaababa"
        )

    def test_resolution_one(self, thue_morse):
        assert fixed_point_prefix(thue_morse, Anchor(("f",), "b"), 1) == "b"

    def test_rejects_non_anchor(self, thue_morse):
        with pytest.raises(PreconditionError):
            fixed_point_prefix(thue_morse, Anchor(("g",), "a"), 4)

    def test_prefix_stability(self, sturmian_pair):
        for anchor in find_anchors(sturmian_pair, 2):
            long = fixed_point_prefix(sturmian_pair, anchor, 24)
            for k in (1, 5, 12, 23):
                assert long.startswith(
                    fixed_point_prefix(sturmian_pair, anchor, k)
                )

    def test_fixed_at_resolution(self, sturmian_pair):
        # applying the anchor word reproduces the prefix
        for anchor in find_anchors(sturmian_pair, 2):
            for k in (4, 9, 16):
                p = fixed_point_prefix(sturmian_pair, anchor, k)
                image = apply(realize(sturmian_pair, anchor.word), p)
                assert image[:k] == p


class TestFixLanguage:
    def test_thue_morse_two_points(self, thue_morse):
        lang = fix_language(thue_morse, 2, 7)
        assert set(lang) == {"abbabaa", "baababb"}

    def test_sturmian_pair_shares_first_letter(self, sturmian_pair):
        lang = fix_language(sturmian_pair, 2, 8)
        assert "aabaabab" in lang and "ababaaba" in lang

    def test_contained_in_limit_language(self, thue_morse):
        for depth in (3, 4, 5):
            fixes = fix_language(thue_morse, 2, 8)
            limits = limit_language(thue_morse, "ab", depth, 8)
            assert set(fixes) <= set(limits)

    def test_fix_containment_sturmian_pair(self, sturmian_pair):
        fixes = fix_language(sturmian_pair, 2, 6)
        limits = limit_language(sturmian_pair, "ab", 4, 6)
        assert set(fixes) <= set(limits)


class TestImageClosure:
    def test_thue_morse_matches_limit_language(self, thue_morse):
        closure = image_closure_language(thue_morse, 2, 2, 16)
        limits = limit_language(thue_morse, "ab", 4, 16)
        assert set(closure) == set(limits)

    def test_zero_image_depth_is_fix_language(self, sturmian_pair):
        closure = image_closure_language(sturmian_pair, 2, 0, 8)
        fixes = fix_language(sturmian_pair, 2, 8)
        assert closure.words == fixes.words

    def test_countable_pair_contains_orbit_of_a_point(self, countable_pair):
        # the limit set of this system is the orbit of the a-anchored fixed
        # point under the second generator, plus one more point
        k = 10
        closure = image_closure_language(countable_pair, 1, 3, k)
        y = fixed_point_prefix(countable_pair, Anchor(("f",), "a"), k)
        assert y in closure
        for m in (1, 2, 3):
            moved = y
            for _ in range(m):
                moved = apply(countable_pair.generator("g"), moved)[:k]
            assert moved in closure
