import json
import random
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from genturan.asymptotics import (
    DensityPolynomial,
    TheoremParams,
    density_polynomial,
    eps_limit,
    evaluate,
    feasibility,
    fraction_from_json,
    fraction_to_json,
    minimal_a,
    paper_lower_bound,
    paper_upper_bound,
    parse_fraction,
)
from genturan.counting import count_in_blowup, count_in_complete_multipartite
from genturan.extremal import S_alpha, build_G, build_Q, build_S_spec, partitions_into
from genturan.graphcore import PatternWithDemands, WeightedGraph, complete
from oracles import random_graph


def minimal_a_by_logs(r, delta, eps):
    with mpmath.workdps(60):
        eps_m = mpmath.mpf(eps.numerator) / eps.denominator
        delta_m = mpmath.mpf(delta.numerator) / delta.denominator
        need = mpmath.log(2 / (delta_m * eps_m ** (r + 1)))
        per_a = 2 * mpmath.log(2 * (1 - (r + 1) * eps_m))
        return max(1, int(mpmath.ceil(need / per_a)))


def leading_coefficient(values):
    """Exact leading coefficient of the polynomial through (n, value) points, via divided differences."""
    xs = [Fraction(x) for x, _ in values]
    table = [Fraction(y) for _, y in values]
    for level in range(1, len(xs)):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(len(table) - 1)]
    return table[0]


class TestDensityPolynomial:
    def test_examples(self):
        k2 = density_polynomial(PatternWithDemands(complete(2)), complete(2))
        assert evaluate(k2, [Fraction(1, 2), Fraction(1, 2)]) == Fraction(1, 2)
        k3 = density_polynomial(PatternWithDemands(complete(3)), complete(3))
        assert evaluate(k3, [Fraction(1, 3)] * 3) == Fraction(2, 9)
        assert k3.degree == 3
        assert all(c > 0 for c in k3.terms.values())

    def test_G_in_K3_two_point_convergence(self):
        p = build_G(4, 2)
        poly = density_polynomial(p, complete(3))
        assert poly.degree == 9
        alpha = [Fraction(1, 3)] * 3
        value = evaluate(poly, alpha)
        gaps = []
        for n in (30, 60):
            count = count_in_complete_multipartite(p, [n // 3] * 3)
            gaps.append(abs(Fraction(count, n**9) - value) / value)
        assert gaps[1] < gaps[0]

    def test_leading_coefficient_is_exact(self):
        # the labelled count with part sizes alpha_b * n is a polynomial in n of degree |P|;
        # its top coefficient must be the density value
        rng = random.Random(3)
        for _ in range(15):
            k = rng.randint(1, 3)
            p = PatternWithDemands(random_graph(rng, k), tuple(rng.randint(1, 2) for _ in range(k)))
            m = rng.randint(1, 4)
            host = random_graph(rng, m, p=0.7)
            raw = [rng.randint(1, 3) for _ in range(m)]
            alpha = [Fraction(x, sum(raw)) for x in raw]
            poly = density_polynomial(p, host)
            d = p.order
            points = []
            for t in range(1, d + 2):
                n = sum(raw) * t
                points.append((n, count_in_blowup(p, WeightedGraph(host, tuple(x * t for x in raw)))))
            assert leading_coefficient(points) == evaluate(poly, alpha)

    def test_random_gap_shrinks(self):
        rng = random.Random(8)
        for _ in range(10):
            k = rng.randint(2, 3)
            p = PatternWithDemands(random_graph(rng, k, p=1.0), tuple(rng.randint(1, 2) for _ in range(k)))
            m = rng.randint(2, 4)
            host = complete(m)
            raw = [rng.randint(1, 3) for _ in range(m)]
            alpha = [Fraction(x, sum(raw)) for x in raw]
            value = evaluate(density_polynomial(p, host), alpha)
            gaps = []
            for t in (5, 40):
                n = sum(raw) * t
                count = count_in_blowup(p, WeightedGraph(host, tuple(x * t for x in raw)))
                gaps.append(abs(Fraction(count, n**p.order) - value))
            # exact zero gap happens when every falling factorial is a plain power
            assert gaps[1] < gaps[0] or gaps == [0, 0]

    def test_evaluate_edge_cases(self):
        k2 = density_polynomial(PatternWithDemands(complete(2)), complete(3))
        assert evaluate(k2, [0, 0, 0]) == 0
        assert evaluate(k2, [1, 0, 0]) == 0
        with pytest.raises(ValueError):
            evaluate(k2, [1, 0])
        with pytest.raises(ValueError):
            evaluate(k2, [Fraction(-1), 1, 1])
        assert evaluate(density_polynomial(build_G(4, 1), build_Q(4)), S_alpha(4, Fraction(1, 1000))) > 0

    def test_json_round_trip(self):
        poly = density_polynomial(build_G(4, 2), build_Q(4))
        data = json.loads(json.dumps(poly.to_json()))
        assert data["vars"] == 6
        assert DensityPolynomial.from_json(data) == poly

    def test_float_evaluation_matches_exact(self):
        poly = density_polynomial(build_G(4, 3), complete(3))
        alpha = [Fraction(1, 5), Fraction(2, 5), Fraction(2, 5)]
        assert poly.value_float(np.array([float(a) for a in alpha])) == pytest.approx(float(evaluate(poly, alpha)), rel=1e-12)


class TestBounds:
    def test_upper_examples(self):
        assert paper_upper_bound(2, 4, 1) == 32
        assert paper_upper_bound(10, 4, 1) == 2_500_000
        assert paper_upper_bound(3, 4, 1) == Fraction(3**5 * 9, 4)

    def test_upper_dominates_small(self):
        p = build_G(4, 1)
        for n in range(6, 13):
            bound = paper_upper_bound(n, 4, 1)
            for comp in partitions_into(n, 3):
                assert count_in_complete_multipartite(p, comp) <= bound

    def test_lower_examples(self):
        assert paper_lower_bound(60, 4, 1, Fraction(1, 12)) == 3125 * 1225
        assert paper_lower_bound(100, 4, 2, Fraction(1, 100)) == 95**4
        with pytest.raises(ValueError):
            paper_lower_bound(10, 4, 1, Fraction(1, 100))

    def test_lower_below_exact(self):
        p = build_G(4, 1)
        for n in (24, 36, 60):
            assert paper_lower_bound(n, 4, 1, Fraction(1, 12)) <= count_in_blowup(p, build_S_spec(4, n, Fraction(1, 12)))


class TestFeasibility:
    def test_examples(self):
        eps = Fraction(1, 1000)
        assert not feasibility(TheoremParams(4, 1, eps, 1))
        a = minimal_a(4, Fraction(1), eps)
        assert a == 26
        assert a == minimal_a_by_logs(4, Fraction(1), eps)
        assert feasibility(TheoremParams(4, 1, eps, a))
        assert not feasibility(TheoremParams(4, 1, eps, a - 1))

    @pytest.mark.parametrize("r", [4, 5, 6, 8])
    @pytest.mark.parametrize("delta", [Fraction(1), Fraction(1, 3), Fraction(1, 1000)])
    def test_against_log_oracle(self, r, delta):
        for eps in (Fraction(1, 1000), Fraction(1, 137) * eps_limit(r) * 100, Fraction(1, 10**6)):
            assert minimal_a(r, delta, eps) == minimal_a_by_logs(r, delta, eps)

    def test_monotone_in_eps(self):
        for r in (4, 6):
            grid = sorted(eps_limit(r) * Fraction(k, 50) for k in range(1, 50))
            values = [minimal_a(r, Fraction(1, 2), e) for e in grid]
            assert all(x >= y for x, y in zip(values, values[1:]))

    def test_preconditions(self):
        with pytest.raises(ValueError):
            minimal_a(4, Fraction(1), Fraction(1, 400))
        with pytest.raises(ValueError):
            feasibility(TheoremParams(4, 1, Fraction(1, 10), 3))
        with pytest.raises(ValueError):
            TheoremParams(3, 1, Fraction(1, 1000), 3)
        with pytest.raises(ValueError):
            TheoremParams(4, 2, Fraction(1, 1000), 3)
        assert TheoremParams(4, 1, Fraction(1, 400), 26).violations()
        assert not TheoremParams(4, 1, Fraction(1, 1000), 26).violations()


def test_fraction_helpers():
    assert parse_fraction("3/9") == Fraction(1, 3)
    assert parse_fraction("7") == 7
    with pytest.raises(ValueError):
        parse_fraction("0.25")
    x = Fraction(-5, 7)
    assert fraction_from_json(json.loads(json.dumps(fraction_to_json(x)))) == x
