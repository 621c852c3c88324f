from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tmbinomial.binomial import equivalent_k
from tmbinomial.factorization import (
    MalformedPair,
    NotAFactor,
    PSPair,
    SigmaFactorization,
    TooShort,
    count_pair_classes,
    enumerate_factorizations,
    equiv_k_pairs,
    factorization_summary,
    image_prefix,
    image_suffix,
    pair_classes,
    pair_population,
    ps_pair,
    unique_factorization,
)
from tmbinomial.factors import factor_set, is_factor, kbinomial_complexity
from tmbinomial.formulas import main_equiv_count
from tmbinomial.words import Word, sigma_image, sigma_power

EXAMPLE = "1200121202011202010122010121"


def W(text: str, m: int) -> Word:
    return Word.parse(text, m)


def sigma(m: int, text: str) -> Word:
    return sigma_power(m, 1, W(text, m))


class TestEnumerate:
    def test_long_example(self):
        (f,) = enumerate_factorizations(3, 2, EXAMPLE)
        assert f.x == sigma(3, "1")
        assert f.u == W("01", 3)
        assert f.y == sigma(3, "20") + W("1", 3)
        assert f.reassemble() == W(EXAMPLE, 3)

    @pytest.mark.parametrize("m", [2, 3, 4, 5])
    def test_square_of_an_image(self, m):
        U = sigma_image(m, 0) + sigma_image(m, 0)
        found = enumerate_factorizations(m, 1, U)
        assert [(str(f.x), f.u, str(f.y)) for f in found] == [("", Word(m, (0, 0)), "")]

    @pytest.mark.parametrize("m", [2, 3, 4, 5])
    def test_image_followed_by_partial_image(self, m):
        U = sigma_image(m, 0) + sigma_image(m, 0)[: m - 1]
        found = enumerate_factorizations(m, 1, U)
        assert len(found) == 2
        assert found[0].u == Word(m, (0,)) and found[0].y == sigma_image(m, 0)[: m - 1]
        assert found[1].u == Word(m, (m - 1,)) and found[1].x == sigma_image(m, m - 1)[1:]

    def test_empty_word(self):
        (f,) = enumerate_factorizations(3, 2, "")
        assert f.a is None and f.b is None and len(f.u) == 0

    def test_short_factor_inside_one_image(self):
        # every cut of a short run gives an empty-core factorization
        found = enumerate_factorizations(4, 1, "12")
        assert len(found) == 3
        assert all(len(f.u) == 0 for f in found)

    def test_not_a_factor(self):
        with pytest.raises(NotAFactor):
            enumerate_factorizations(3, 1, "000")

    @pytest.mark.parametrize("m,k,n", [(2, 1, 7), (2, 2, 9), (3, 1, 5), (3, 2, 11), (4, 1, 6)])
    def test_every_factor_has_a_valid_factorization(self, m, k, n):
        for U in factor_set(m, n):
            found = enumerate_factorizations(m, k, U)
            assert found
            for f in found:
                assert f.reassemble() == U
                assert len(f.x) < m**k and len(f.y) < m**k
                assert (f.a is None) == (len(f.x) == 0)
                assert (f.b is None) == (len(f.y) == 0)
                assert is_factor(m, f.context())

    @pytest.mark.parametrize("m,k", [(2, 1), (2, 2), (3, 1), (3, 2), (4, 1)])
    def test_unique_above_threshold(self, m, k):
        for n in (2 * m**k, 2 * m**k + 1, 2 * m**k + m**k - 1):
            for U in factor_set(m, n):
                assert len(enumerate_factorizations(m, k, U)) == 1

    def test_json_round_trip(self):
        (f,) = enumerate_factorizations(3, 2, EXAMPLE)
        assert SigmaFactorization.from_json(f.to_json(), 3) == f
        assert f.as_dict() == {"x": "120", "u": "01", "y": "2010121", "a": 2, "b": 2, "k": 2}


class TestUnique:
    def test_long_example(self):
        f = unique_factorization(3, 2, EXAMPLE)
        assert (str(f.x), str(f.u), str(f.y)) == ("120", "01", "2010121")

    def test_binary_prefix(self):
        f = unique_factorization(2, 1, "0110100110")
        assert (str(f.x), str(f.u), str(f.y)) == ("", "01101", "")

    def test_too_short(self):
        with pytest.raises(TooShort):
            unique_factorization(3, 1, "01212")

    def test_not_a_factor(self):
        with pytest.raises(NotAFactor):
            unique_factorization(2, 1, "0000")


class TestDumontThomas:
    def test_prefix_example(self):
        word, dt = image_prefix(4, 4, 0, 226)
        assert [str(v) for v in dt.parts] == ["012", "30", "", "12"]
        assert dt.digits == (3, 2, 0, 2)
        assert word == sigma_power(4, 3, "012") + sigma_power(4, 2, "30") + W("12", 4)
        assert word == sigma_power(4, 4, "0")[:226]

    def test_suffix_example(self):
        word, dt = image_suffix(4, 4, 0, 226)
        assert [str(v) for v in dt.parts] == ["23", "", "23", "123"]
        assert word == W("23", 4) + sigma_power(4, 2, "23") + sigma_power(4, 3, "123")
        assert word == sigma_power(4, 4, "0")[-226:]

    def test_small_examples(self):
        word, dt = image_prefix(3, 2, 1, 4)
        assert str(word) == "1202"
        assert [str(v) for v in dt.parts] == ["1", "2"]
        word, dt = image_suffix(3, 2, 0, 4)
        assert str(word) == "0201"
        assert [str(v) for v in dt.parts] == ["0", "2"]
        assert word == W("0", 3) + sigma(3, "2")

    def test_empty(self):
        for fn in (image_prefix, image_suffix):
            word, dt = fn(3, 3, 2, 0)
            assert len(word) == 0 and all(len(v) == 0 for v in dt.parts)

    def test_length_out_of_range(self):
        with pytest.raises(ValueError):
            image_prefix(3, 2, 0, 9)

    @given(st.integers(2, 4), st.integers(1, 4), st.integers(0, 3), st.data())
    def test_round_trips(self, m, k, j, data):
        L = data.draw(st.integers(0, m**k - 1))
        for fn in (image_prefix, image_suffix):
            word, dt = fn(m, k, j, L)
            assert dt.reassemble() == word
            assert dt.length() == L
            assert all(len(v) == c for v, c in zip(dt.parts, dt.digits))
        word, dt = image_prefix(m, k, j, L)
        run = [a for v in dt.parts for a in v.letters]
        assert run == [(j + i) % m for i in range(len(run))]


class TestPairs:
    def test_example_pair(self):
        pair = ps_pair(3, 2, EXAMPLE)
        assert (str(pair.p), str(pair.s)) == ("120", "2010121")
        assert pair.p_decomposition().reassemble() == pair.p
        assert pair.s_decomposition().reassemble() == pair.s

    def test_pure_image(self):
        U = sigma_power(2, 2, "0110")
        pair = ps_pair(2, 2, U)
        assert len(pair.p) == len(pair.s) == 0

    @pytest.mark.parametrize("m,k,n", [(2, 2, 9), (3, 2, 20), (2, 3, 17)])
    def test_length_arithmetic(self, m, k, n):
        for U in factor_set(m, n):
            pair = ps_pair(m, k, U)
            assert (len(pair.p) + len(pair.s) - n) % m**k == 0

    def test_rejects_long_blocks(self):
        with pytest.raises(MalformedPair):
            PSPair(2, 1, W("01", 2), W("", 2))


class TestPairRelation:
    def test_reflexive(self):
        pair = ps_pair(3, 2, EXAMPLE)
        assert equiv_k_pairs(3, 2, pair, pair)

    def test_shuffled_blocks(self):
        p1 = PSPair(3, 2, sigma(3, "1"), sigma(3, "2") + W("2", 3))
        p2 = PSPair(3, 2, sigma(3, "2"), sigma(3, "1") + W("2", 3))
        assert equiv_k_pairs(3, 2, p1, p2)

    def test_shifted_by_one_image(self):
        empty = PSPair(3, 2, W("", 3), W("", 3))
        full = PSPair(3, 2, sigma(3, "01"), sigma(3, "2"))
        assert equiv_k_pairs(3, 2, full, empty)
        assert equiv_k_pairs(3, 2, empty, full)
        partial = PSPair(3, 2, sigma(3, "01"), W("", 3))
        assert not equiv_k_pairs(3, 2, partial, empty)

    def test_different_outer_letters(self):
        p1 = PSPair(3, 2, W("0", 3), W("", 3))
        p2 = PSPair(3, 2, W("1", 3), W("", 3))
        assert not equiv_k_pairs(3, 2, p1, p2)

    def test_malformed(self):
        bad = PSPair(3, 2, W("0000", 3), W("", 3))
        with pytest.raises(MalformedPair):
            equiv_k_pairs(3, 2, bad, bad)

    @pytest.mark.parametrize("m,k,n", [(2, 2, 8), (2, 2, 11), (3, 2, 18), (3, 2, 22), (2, 3, 16)])
    def test_matches_binomial_equivalence(self, m, k, n):
        population = pair_population(m, k, n)
        factors = sorted(population)
        for i, U in enumerate(factors):
            for V in factors[i:]:
                assert equiv_k_pairs(m, k, population[U], population[V]) == equivalent_k(U, V, k)

    @pytest.mark.parametrize("m,k,n", [(2, 2, 9), (3, 2, 19)])
    def test_components_are_cliques(self, m, k, n):
        for cls in pair_classes(m, k, pair_population(m, k, n).values()):
            assert all(equiv_k_pairs(m, k, p, q) for p in cls for q in cls)

    def test_counts(self):
        assert count_pair_classes(3, 2, 18) == 49
        assert count_pair_classes(3, 2, 19) == 45
        assert count_pair_classes(2, 2, 8) == 9
        for n in range(18, 28):
            assert count_pair_classes(3, 2, n) == main_equiv_count(3, 2, n) == kbinomial_complexity(3, 2, n)

    def test_count_too_short(self):
        with pytest.raises(TooShort):
            count_pair_classes(3, 2, 17)


def test_summary_shape():
    summary = factorization_summary(3, 2, EXAMPLE)
    assert summary["p"] == "120" and summary["s"] == "2010121"
    assert summary["s_decomposition"]["parts"] == ["20", "1"]
    assert "unique" not in factorization_summary(3, 2, "0121")
