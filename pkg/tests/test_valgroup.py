import random

import pytest

from ramlab.errors import NotIsolated, ValidationError
from ramlab.valgroup import (
    EQ,
    GT,
    LT,
    FiniteIndexSubgroup,
    IsolatedSubgroup,
    compare,
    height,
    initial_index,
    isolated_subgroups,
    lex_z,
    major_subsets_window_count,
    quotient_order,
    real_embedded,
    subgroup,
)


class TestCompare:
    def test_lex_order(self):
        G = lex_z(2)
        assert compare(G, (1, -5), (0, 100)) == GT
        assert compare(G, (0, 1), (0, 2)) == LT

    def test_real_embedded(self):
        G = real_embedded(2)
        assert compare(G, (1, 0), (0, 1)) == LT  # 1 < sqrt(2)
        assert compare(G, (3, 0), (0, 2)) == GT  # 3 > 2*sqrt(2)

    def test_equal(self):
        assert compare(lex_z(1), (3,), (3,)) == EQ

    @pytest.mark.parametrize("G", [lex_z(3), real_embedded(2), real_embedded(5)])
    def test_total_order_properties(self, G):
        rng = random.Random(23)
        pts = [tuple(rng.randint(-9, 9) for _ in range(G.n)) for _ in range(30)]
        for a in pts[:10]:
            for b in pts[:10]:
                ab = compare(G, a, b)
                ba = compare(G, b, a)
                assert ab == -ba  # antisymmetry
                if ab == EQ:
                    assert a == b or G.kind == "real"
        # transitivity on random triples
        for _ in range(200):
            a, b, c = rng.sample(pts, 3)
            if compare(G, a, b) != GT and compare(G, b, c) != GT:
                assert compare(G, a, c) != GT

    def test_translation_invariance(self):
        G = lex_z(3)
        rng = random.Random(29)
        for _ in range(100):
            a = tuple(rng.randint(-9, 9) for _ in range(3))
            b = tuple(rng.randint(-9, 9) for _ in range(3))
            k = tuple(rng.randint(-9, 9) for _ in range(3))
            ak = tuple(x + y for x, y in zip(a, k))
            bk = tuple(x + y for x, y in zip(b, k))
            assert compare(G, a, b) == compare(G, ak, bk)

    def test_real_embedded_validation(self):
        with pytest.raises(ValidationError):
            real_embedded(4)  # square
        with pytest.raises(ValidationError):
            real_embedded(0)


class TestHeight:
    def test_values(self):
        assert height(lex_z(1)) == 1
        assert height(lex_z(2)) == 2
        assert height(real_embedded(2)) == 1

    def test_chain_lengths(self):
        assert len(isolated_subgroups(lex_z(1))) == 2
        assert len(isolated_subgroups(lex_z(2))) == 3
        assert len(isolated_subgroups(lex_z(3))) == 4

    def test_chain_is_increasing_suffixes(self):
        chain = isolated_subgroups(lex_z(3))
        ranks = [sub.rank for sub in chain]
        assert ranks == [0, 1, 2, 3]

    def test_convexity_by_definition_window(self):
        # 0 <= y <= x in H forces y in H, checked over a small window
        G = lex_z(2)
        for sub in isolated_subgroups(G):
            for x0 in range(-2, 3):
                for x1 in range(-2, 3):
                    x = (x0, x1)
                    if compare(G, x, (0, 0)) == LT or not sub.contains(x):
                        continue
                    for y0 in range(-2, 3):
                        for y1 in range(-2, 3):
                            y = (y0, y1)
                            if (
                                compare(G, y, (0, 0)) != LT
                                and compare(G, y, x) != GT
                            ):
                                assert sub.contains(y)

    def test_non_suffix_subgroup_is_not_convex(self):
        # 2Z x 0 contains (2, 0) but not (1, 0) although 0 <= (1,0) <= (2,0)
        G = lex_z(2)
        H = IsolatedSubgroup(G, 0)
        assert H.contains((1, 0))  # whole group, sanity
        with pytest.raises(NotIsolated):
            quotient_order(G, [[2], [0]])


class TestQuotient:
    def test_drop_last_coordinate(self):
        assert quotient_order(lex_z(2), [[0], [1]]) == lex_z(1)

    def test_height_additivity(self):
        G = lex_z(3)
        H = IsolatedSubgroup(G, 2)  # {0}^2 x Z
        Q = quotient_order(G, H)
        assert Q == lex_z(2)
        assert height(G) == height(H.as_group()) + height(Q)

    def test_height_additivity_full_chain(self):
        for n in (2, 3, 4):
            G = lex_z(n)
            for sub in isolated_subgroups(G):
                if sub.rank in (0, n):
                    continue
                assert height(G) == height(sub.as_group()) + height(
                    quotient_order(G, sub)
                )


class TestInitialIndex:
    def test_z_mod_m(self):
        for m in (1, 2, 3, 7, 12):
            res = initial_index(lex_z(1), subgroup(lex_z(1), [[m]]))
            assert res.epsilon == m
            assert res.index == m
            assert res.least_positive == (1,)

    def test_lex2_mixed(self):
        res = initial_index(lex_z(2), subgroup(lex_z(2), [[2, 0], [0, 3]]))
        assert res.epsilon == 3
        assert res.index == 6
        assert res.least_positive == (0, 1)

    def test_real_embedded_no_least_element(self):
        G = real_embedded(2)
        res = initial_index(G, subgroup(G, [[2, 0], [0, 2]]))
        assert res.epsilon == 1
        assert res.least_positive is None
        assert res.index == 4

    def test_divisibility_300_random(self):
        rng = random.Random(31)
        checked = 0
        while checked < 300:
            n = rng.randint(1, 4)
            G = lex_z(n)
            rows = [[rng.randint(-10, 10) for _ in range(n)] for _ in range(n)]
            try:
                H = subgroup(G, rows)
            except ValidationError:
                continue
            res = initial_index(G, H)
            assert res.index % res.epsilon == 0
            checked += 1

    def test_epsilon_membership_definition(self):
        # epsilon is the least k > 0 with k*e_n in H
        rng = random.Random(37)
        for _ in range(60):
            n = rng.randint(1, 3)
            G = lex_z(n)
            rows = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
            try:
                H = subgroup(G, rows)
            except ValidationError:
                continue
            res = initial_index(G, H)
            e_n = tuple(0 if i < n - 1 else 1 for i in range(n))
            for k in range(1, res.epsilon):
                assert not H.contains(tuple(k * x for x in e_n))
            assert H.contains(tuple(res.epsilon * x for x in e_n))


class TestMajorSetOracle:
    def test_window_count_equals_m(self):
        for m in (1, 2, 3, 5, 8):
            assert major_subsets_window_count(m) == m

    def test_exhaustive_agrees_small(self):
        for m in (1, 2, 3, 4):
            assert major_subsets_window_count(m, exhaustive=True) == m

    def test_oracle_matches_initial_index_upto_50(self):
        for m in range(1, 51):
            eps = initial_index(lex_z(1), subgroup(lex_z(1), [[m]])).epsilon
            assert eps == m == major_subsets_window_count(m)
