import random
from fractions import Fraction

import pytest

from madcycle.density import degeneracy, densest_decision, mad_with_witness
from madcycle.errors import PreconditionError
from madcycle.graph import avg_degree, build_graph, induced_subgraph
from madcycle.oracles import all_subsets_density, oracle_mad

from conftest import bowtie, cycle_graph, random_graph


def brute_best_density(g):
    return max(d for d, _ in all_subsets_density(g))


class TestDensestDecision:
    def test_bowtie_above_one(self):
        g = bowtie()
        assert brute_best_density(g) == Fraction(6, 5)
        found = densest_decision(g, Fraction(1))
        assert found is not None
        sub, _ = induced_subgraph(g, found)
        assert Fraction(sub.m, sub.n) > 1

    def test_bowtie_at_optimum(self):
        assert densest_decision(bowtie(), Fraction(6, 5)) is None

    def test_single_edge(self):
        g = build_graph([(0, 1)], 2)
        assert densest_decision(g, Fraction(0)) == frozenset({0, 1})

    def test_monotone_in_guess(self):
        rng = random.Random(3)
        for _ in range(20):
            g = random_graph(rng, rng.randint(2, 9), rng.uniform(0.2, 0.8))
            if g.m == 0:
                continue
            guesses = sorted(
                {Fraction(p, q) for q in range(1, g.n + 1) for p in range(0, 2 * g.n)}
            )
            absent_seen = False
            for guess in guesses:
                res = densest_decision(g, guess)
                if res is None:
                    absent_seen = True
                else:
                    assert not absent_seen, "decision not monotone in the guess"


class TestMadWithWitness:
    def test_c5(self):
        w = mad_with_witness(cycle_graph(5))
        assert w.mad == 2 and w.vertices == frozenset(range(5))

    def test_k5_plus_pendant(self):
        g = build_graph(
            [(i, j) for i in range(5) for j in range(i + 1, 5)] + [(0, 5)], 6
        )
        w = mad_with_witness(g)
        assert w.mad == 4
        assert w.vertices == frozenset(range(5))
        assert oracle_mad(g) == 4

    def test_bowtie_whole_graph(self):
        w = mad_with_witness(bowtie())
        assert w.mad == Fraction(12, 5)
        assert w.vertices == frozenset(range(5))

    def test_edgeless_rejected(self):
        with pytest.raises(PreconditionError):
            mad_with_witness(build_graph([], 3))

    def test_witness_density_recounts(self):
        rng = random.Random(17)
        for _ in range(30)            :
            g = random_graph(rng, rng.randint(2, 10), rng.uniform(0.2, 0.8))
            if g.m == 0:
                continue
            w = mad_with_witness(g)
            sub, _ = induced_subgraph(g, w.vertices)
            assert Fraction(sub.m, sub.n) == w.density
            assert w.mad == 2 * w.density

    def test_matches_oracle_random(self):
        rng = random.Random(29)
        for _ in range(60):
            g = random_graph(rng, rng.randint(2, 11), rng.choice([0.3, 0.5, 0.8]))
            if g.m == 0:
                continue
            assert mad_with_witness(g).mad == oracle_mad(g)


class TestOrderings:
    def test_mad_ad_degeneracy_chain(self):
        rng = random.Random(41)
        for _ in range(40):
            g = random_graph(rng, rng.randint(2, 11), rng.uniform(0.2, 0.8))
            if g.m == 0:
                continue
            mad = mad_with_witness(g).mad
            assert mad >= avg_degree(g)
            assert mad >= degeneracy(g)
