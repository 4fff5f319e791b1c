import random
from fractions import Fraction

import pytest

from genturan.counting import (
    BudgetExceeded,
    CountResult,
    automorphism_count,
    compositions,
    count_copies,
    count_embeddings_naive,
    count_from_profile,
    count_in_blowup,
    count_in_complete_multipartite,
    falling_factorial,
    load_profile,
    twin_classes,
)
from genturan.extremal import H_endvertices, build_G, build_H, build_Q, build_S_spec
from genturan.graphcore import (
    Graph,
    PatternWithDemands,
    WeightedGraph,
    blowup,
    complete,
    cycle,
    join,
    path,
)
from oracles import automorphisms_bruteforce, automorphisms_networkx, embeddings_bruteforce, random_graph

K23 = blowup(complete(2), (2, 3))


def test_helpers():
    assert falling_factorial(5, 2) == 20
    assert falling_factorial(3, 4) == 0
    assert falling_factorial(0, 0) == 1
    assert list(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert len(list(compositions(4, 3))) == 15


class TestNaive:
    def test_examples(self):
        assert count_embeddings_naive(complete(2), complete(3)) == 6
        assert count_embeddings_naive(path(3), K23) == 18
        assert count_embeddings_naive(complete(3), cycle(5)) == 0

    def test_P3_in_K23_by_enumeration(self):
        # 5*4*3 injections filtered by edge preservation
        assert embeddings_bruteforce(path(3), K23) == 18

    def test_against_permutation_bruteforce(self):
        rng = random.Random(5)
        for _ in range(60):
            p = random_graph(rng, rng.randint(1, 4))
            g = random_graph(rng, rng.randint(1, 6))
            assert count_embeddings_naive(p, g) == embeddings_bruteforce(p, g)

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            count_embeddings_naive(Graph(6), Graph(12), node_limit=100)

    def test_zero_laws(self):
        assert count_embeddings_naive(path(5), path(4)) == 0
        assert count_embeddings_naive(complete(4), build_Q(4)) == 0

    def test_edge_monotonicity(self):
        rng = random.Random(9)
        for _ in range(40):
            p = random_graph(rng, rng.randint(1, 4))
            g = random_graph(rng, rng.randint(2, 7))
            non_edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
            if not non_edges:
                continue
            g2 = Graph(g.n, g.edges + (rng.choice(non_edges),))
            assert count_embeddings_naive(p, g2) >= count_embeddings_naive(p, g)


class TestAutomorphisms:
    def test_examples(self):
        assert automorphism_count(path(6)) == 2
        assert automorphism_count(cycle(5)) == 10
        h = build_H(4)
        x, y = H_endvertices(4)
        d = [1] * 7
        d[x] = d[y] = 2
        g = PatternWithDemands(h, tuple(d)).expand()
        assert automorphisms_bruteforce(g) == 8
        assert automorphism_count(g) == 8

    def test_twin_heavy(self):
        g = build_G(4, 6).expand()
        assert automorphism_count(g) == 2 * 720 * 720
        assert automorphism_count(complete(7)) == 5040
        assert automorphism_count(Graph(6)) == 720

    def test_against_bruteforce(self):
        rng = random.Random(13)
        for _ in range(80):
            g = random_graph(rng, rng.randint(1, 7))
            assert automorphism_count(g) == automorphisms_bruteforce(g)

    def test_against_networkx_on_blowups(self):
        rng = random.Random(17)
        for _ in range(30):
            n = rng.randint(1, 4)
            g = blowup(random_graph(rng, n), [rng.randint(1, 2) for _ in range(n)])
            assert automorphism_count(g) == automorphisms_networkx(g)


class TestCountCopies:
    def test_examples(self):
        assert count_copies(complete(2), complete(3)) == CountResult(6, 2, 3)
        assert count_copies(path(3), K23).unlabelled == 9
        assert count_copies(cycle(5), cycle(5)).unlabelled == 1

    def test_divisibility_is_enforced(self):
        with pytest.raises(ArithmeticError):
            CountResult(7, 2, 3)

    def test_weighted_route_agrees(self):
        w = WeightedGraph(complete(2), (2, 3))
        assert count_copies(path(3), w) == count_copies(path(3), K23)


class TestBlowupCounter:
    def test_examples(self):
        assert count_in_blowup(PatternWithDemands(complete(2)), WeightedGraph(complete(2), (2, 3))) == 12
        assert count_in_blowup(PatternWithDemands(complete(3)), WeightedGraph(complete(3), (2, 2, 2))) == 48
        assert count_in_complete_multipartite(PatternWithDemands(complete(2)), (3, 3)) == 18
        assert count_in_complete_multipartite(PatternWithDemands(complete(3)), (2, 2, 2)) == 48

    def test_K3_in_K222_is_homs_times_choices(self):
        # 6 homomorphisms K_3 -> K_3, each with 2*2*2 vertex choices
        assert 6 * 2 * 2 * 2 == count_embeddings_naive(complete(3), blowup(complete(3), (2, 2, 2)))

    def test_G_in_S_small_against_naive(self):
        h = build_H(4)
        x, y = H_endvertices(4)
        d = [1] * 7
        d[x] = d[y] = 2
        p = PatternWithDemands(h, tuple(d))
        s = build_S_spec(4, 12, Fraction(1, 12))
        assert s.weights == (1, 7, 1, 1, 1, 1)
        assert count_in_blowup(p, s) == count_embeddings_naive(p.expand(), s.expand())

    def test_G_in_S_24_against_naive(self):
        p = build_G(4, 2)
        s = build_S_spec(4, 24, Fraction(1, 12))
        assert count_in_blowup(p, s) == count_embeddings_naive(p.expand(), s.expand())

    def test_G_in_K444_against_naive(self):
        p = build_G(4, 1)
        assert count_in_complete_multipartite(p, (4, 4, 4)) == count_embeddings_naive(
            p.expand(), blowup(complete(3), (4, 4, 4))
        )

    def test_twin_classes_merge_base_twins(self):
        # K_{1,3}: the three leaves are false twins in the base
        star = Graph(4, ((0, 1), (0, 2), (0, 3)))
        sizes, cadj = twin_classes(PatternWithDemands(star, (1, 2, 1, 3)))
        assert sorted(sizes) == [1, 6]
        assert all(len(a) == 1 for a in cadj)

    def test_profile_caps_do_not_change_counts(self):
        p = build_G(4, 2)
        q = build_Q(4)
        w = (2, 6, 1, 0, 3, 2)
        full = load_profile(p, q)
        assert count_from_profile(full, w) == count_in_blowup(p, WeightedGraph(q, w))

    def test_zero_laws(self):
        assert count_in_blowup(PatternWithDemands(complete(4)), WeightedGraph(build_Q(4), (3,) * 6)) == 0
        assert count_in_blowup(PatternWithDemands(path(3), (2, 2, 2)), WeightedGraph(complete(3), (1, 1, 1))) == 0

    def test_part_permutation_symmetry(self):
        rng = random.Random(23)
        for _ in range(20):
            n = rng.randint(1, 4)
            p = PatternWithDemands(random_graph(rng, n), tuple(rng.randint(1, 2) for _ in range(n)))
            parts = [rng.randint(0, 5) for _ in range(rng.randint(1, 4))]
            base = count_in_complete_multipartite(p, parts)
            shuffled = parts[:]
            rng.shuffle(shuffled)
            assert count_in_complete_multipartite(p, shuffled) == base

    def test_divisibility_on_random_blowups(self):
        rng = random.Random(29)
        for _ in range(60):
            n = rng.randint(1, 5)
            p = PatternWithDemands(random_graph(rng, n), tuple(rng.randint(1, 3) for _ in range(n)))
            m = rng.randint(1, 5)
            w = WeightedGraph(random_graph(rng, m), tuple(rng.randint(0, 4) for _ in range(m)))
            labelled = count_in_blowup(p, w)
            assert labelled % automorphism_count(p.expand()) == 0

    def test_join_pattern(self):
        p = PatternWithDemands(join(complete(1), Graph(2)), (1, 2, 2))
        w = WeightedGraph(complete(2), (3, 4))
        assert count_in_blowup(p, w) == count_embeddings_naive(p.expand(), w.expand())
