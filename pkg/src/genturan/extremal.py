"""Counterexample constructions, complete multipartite maximisation, and the
end-to-end certificate that a K_r-free blow-up beats every (r-1)-partite graph."""
from __future__ import annotations

import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from . import props
from .asymptotics import (
    DensityPolynomial,
    TheoremParams,
    density_polynomial,
    evaluate,
    fraction_to_json,
)
from .counting import count_from_profile, count_in_blowup, load_profile
from .graphcore import (
    Graph,
    PatternWithDemands,
    WeightedGraph,
    complete,
    cycle,
    join,
    path,
    power,
)

__all__ = [
    "CounterexampleReport",
    "InfeasibleParameters",
    "build_H",
    "H_endvertices",
    "build_G",
    "build_Q",
    "Q_contracted_vertex",
    "build_S_spec",
    "S_alpha",
    "build_power_path_base",
    "power_path_endvertices",
    "partitions_into",
    "max_partite_exact",
    "project_to_simplex",
    "max_partite_density",
    "finite_n_comparison",
    "verify_counterexample",
]


class InfeasibleParameters(ValueError):
    """The (r, delta, eps, a) choice violates one of the parameter inequalities."""


# -- constructions ------------------------------------------------------------


def _check_r(r: int) -> None:
    if r < 4:
        raise ValueError(f"r must be >= 4, got {r}")


def build_H(r: int) -> Graph:
    """K_{r-3} joined to P_6.  Clique vertices come first, then the path in order."""
    _check_r(r)
    return join(complete(r - 3), path(6))


def H_endvertices(r: int) -> tuple[int, int]:
    """Labels of the two path endpoints x, y inside ``build_H(r)``."""
    _check_r(r)
    return r - 3, r + 2


def build_G(r: int, a: int) -> PatternWithDemands:
    """``build_H(r)`` with both path endpoints blown up by ``a``."""
    if a < 1:
        raise ValueError(f"a must be >= 1, got {a}")
    h = build_H(r)
    x, y = H_endvertices(r)
    demands = [1] * h.n
    demands[x] = demands[y] = a
    return PatternWithDemands(h, tuple(demands))


def build_Q(r: int) -> Graph:
    """K_{r-3} joined to C_5; equal (not just isomorphic) to contracting x, y in ``build_H(r)``."""
    _check_r(r)
    return join(complete(r - 3), cycle(5))


def Q_contracted_vertex(r: int) -> int:
    _check_r(r)
    return r - 3


def build_S_spec(r: int, n: int, eps: Fraction) -> WeightedGraph:
    """Blow-up of ``build_Q(r)``: z gets ``n - (r+1) floor(eps n)``, the rest ``floor(eps n)``."""
    q = build_Q(r)
    m = int(Fraction(eps) * n)
    big = n - (r + 1) * m
    if m < 1 or big < 1:
        raise ValueError(f"degenerate S for r={r}, n={n}, eps={eps}: part sizes {m} and {big}")
    weights = [m] * q.n
    weights[Q_contracted_vertex(r)] = big
    return WeightedGraph(q, tuple(weights))


def S_alpha(r: int, eps: Fraction) -> list[Fraction]:
    """Limiting part fractions of S: ``1 - (r+1) eps`` on z, ``eps`` elsewhere."""
    eps = Fraction(eps)
    alpha = [eps] * (r + 2)
    alpha[Q_contracted_vertex(r)] = 1 - (r + 1) * eps
    return alpha


def build_power_path_base(r: int) -> Graph:
    """``P_{2r}`` raised to the power ``r-2``; see :func:`power_path_endvertices`.

    Blowing up both endvertices gives the earlier counterexample family; the
    factor is left to the caller.
    """
    if r < 3:
        raise ValueError(f"r must be >= 3, got {r}")
    return power(path(2 * r), r - 2)


def power_path_endvertices(r: int) -> tuple[int, int]:
    if r < 3:
        raise ValueError(f"r must be >= 3, got {r}")
    return 0, 2 * r - 1


# -- exact maximisation over complete multipartite hosts ----------------------


def partitions_into(n: int, k: int, largest: Optional[int] = None):
    """Nonincreasing k-tuples of nonnegative integers summing to n."""
    if largest is None:
        largest = n
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(min(n, largest), -1, -1):
        if first * k < n:
            break
        for rest in partitions_into(n - first, k - 1, first):
            yield (first,) + rest


def max_partite_exact(pattern: PatternWithDemands, parts_count: int, n: int) -> tuple[int, tuple[int, ...]]:
    """Largest labelled count of ``pattern`` over complete ``parts_count``-partite graphs on ``n`` vertices.

    Arbitrary k-partite hosts need not be searched: adding edges never
    decreases an embedding count, so some complete multipartite host is optimal.
    Ties keep the first composition in descending lexicographic order.
    """
    if parts_count < 1 or n < 1:
        raise ValueError("need parts_count >= 1 and n >= 1")
    profile = load_profile(pattern, complete(parts_count))
    best, arg = -1, ()
    for comp in partitions_into(n, parts_count):
        value = count_from_profile(profile, comp)
        if value > best:
            best, arg = value, comp
    return best, arg


# -- continuous maximisation over the simplex ---------------------------------


def project_to_simplex(v: np.ndarray) -> np.ndarray:
    """Euclidean projection onto ``{x >= 0, sum x = 1}`` (sort-and-threshold)."""
    u = np.sort(v)[::-1]
    css = np.cumsum(u) - 1.0
    idx = np.arange(1, len(v) + 1)
    rho = np.nonzero(u - css / idx > 0)[0][-1]
    theta = css[rho] / (rho + 1.0)
    return np.maximum(v - theta, 0.0)


def _ascend(poly: DensityPolynomial, x: np.ndarray, max_iter: int, tol: float) -> np.ndarray:
    # ascent on log f where f > 0, so the tiny values of high-degree densities stay well scaled
    f = poly.value_float(x)
    step = 1.0
    for _ in range(max_iter):
        g = poly.gradient_float(x)
        if f > 0:
            g = g / f
        if np.linalg.norm(project_to_simplex(x + g) - x) < tol:
            break
        while step > 1e-16:
            y = project_to_simplex(x + step * g)
            fy = poly.value_float(y)
            if fy > f:
                x, f = y, fy
                step *= 2.0
                break
            step /= 2.0
        else:
            break
    return x


def _round_to_simplex(x: np.ndarray, max_den: int) -> list[Fraction]:
    q = [Fraction(float(v)).limit_denominator(max_den) for v in x]
    q = [max(v, Fraction(0)) for v in q]
    top = max(range(len(q)), key=lambda i: (q[i], -i))
    q[top] += 1 - sum(q)
    if q[top] < 0:
        s = sum(q) - q[top]
        q = [v / s for v in q]
        q[top] = Fraction(0)
    return q


def max_partite_density(
    pattern: PatternWithDemands,
    parts_count: int,
    starts: int = 12,
    seed: int = 0,
    max_iter: int = 10_000,
    tol: float = 1e-10,
    max_den: int = 10_000,
) -> tuple[Fraction, list[Fraction]]:
    """Best density of ``pattern`` in a complete ``parts_count``-partite blow-up.

    Floats only locate candidates (multi-start projected gradient ascent);
    each candidate is rounded to a rational point and evaluated exactly, so the
    returned value is attained and hence a lower bound on the true maximum.
    """
    if parts_count < 1:
        raise ValueError("parts_count must be >= 1")
    poly = density_polynomial(pattern, complete(parts_count))
    rng = np.random.default_rng(seed)
    inits = [np.full(parts_count, 1.0 / parts_count)]
    inits += [rng.dirichlet(np.ones(parts_count)) for _ in range(starts)]
    best_val, best_alpha = Fraction(-1), []
    for x0 in inits:
        x = _ascend(poly, x0, max_iter, tol)
        alpha = _round_to_simplex(x, max_den)
        val = evaluate(poly, alpha)
        if val > best_val:
            best_val, best_alpha = val, alpha
    return best_val, best_alpha


# -- certificate --------------------------------------------------------------


@dataclass
class CounterexampleReport:
    params: TheoremParams
    structural: dict[str, bool]
    density_S: Fraction
    density_partite_upper: Optional[Fraction]
    density_partite_best_found: Fraction
    best_alpha: list[Fraction]
    finite_n_wins: list[dict] = field(default_factory=list)
    verdict: bool = False

    def to_json(self) -> dict:
        upper = self.density_partite_upper
        return {
            "params": self.params.to_json(),
            "structural": dict(sorted(self.structural.items())),
            "density_S": fraction_to_json(self.density_S),
            "density_partite_upper": None if upper is None else fraction_to_json(upper),
            "density_partite_best_found": fraction_to_json(self.density_partite_best_found),
            "best_alpha": [fraction_to_json(x) for x in self.best_alpha],
            "finite_n_wins": self.finite_n_wins,
            "verdict": self.verdict,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    def summary(self) -> str:
        p = self.params
        lines = [f"r={p.r} delta={p.delta} eps={p.eps} a={p.a}"]
        lines += [f"  {name}: {'ok' if ok else 'FAILED'}" for name, ok in sorted(self.structural.items())]
        lines.append(f"  delta*density_S           ~ {float(p.delta * self.density_S):.6e}")
        if self.density_partite_upper is not None:
            lines.append(f"  partite upper (1/2)^(2a)  ~ {float(self.density_partite_upper):.6e}")
        lines.append(f"  partite best found        ~ {float(self.density_partite_best_found):.6e}")
        lines.append(f"  verdict: {'counterexample certified' if self.verdict else 'NOT certified'}")
        return "\n".join(lines)


def _structural_checks(r: int, a: int, eps: Fraction) -> dict[str, bool]:
    g = build_G(r, a).expand()
    x, y = H_endvertices(r)
    # clones of x occupy labels x..x+a-1 and clones of y the last a labels
    xs = set(range(x, x + a))
    ys = set(range(g.n - a, g.n))
    checks = {
        "diameter_is_2": props.diameter(g) == 2,
        "chromatic_is_r_minus_1": props.chromatic_number(g) == r - 1,
    }
    summary = props.count_proper_colorings_as_partitions(g, r - 1, limit=2)
    checks["unique_coloring"] = summary.count_partitions == 1
    separated = False
    if summary.witness is not None:
        cls_of = {v: i for i, cls in enumerate(summary.witness) for v in cls}
        cx, cy = {cls_of[v] for v in xs}, {cls_of[v] for v in ys}
        separated = len(cx) == 1 and len(cy) == 1 and cx != cy
    checks["X_Y_monochromatic_distinct"] = separated
    q = build_Q(r)
    checks["Q_clique_is_r_minus_1"] = props.clique_number(q) == r - 1
    n0 = math.ceil(1 / Fraction(eps)) if eps > 0 else 0
    try:
        checks["S_is_Kr_free"] = props.is_Kr_free_blowup(build_S_spec(r, n0, eps), r)
    except ValueError:
        checks["S_is_Kr_free"] = props.is_Kr_free_blowup(WeightedGraph(q, (1,) * q.n), r)
    return checks


def finite_n_comparison(r: int, a: int, eps: Fraction, ns: Sequence[int], threads: Optional[int] = None) -> list[dict]:
    """Exact count of G in S versus the best complete (r-1)-partite count, per n.

    Entries where S degenerates (``floor(eps n) = 0``) record ``s_count = None``.
    The direction of the comparison is recorded, not asserted.
    """
    pattern = build_G(r, a)
    profile = load_profile(pattern, complete(r - 1))

    def one(n: int) -> dict:
        try:
            s = build_S_spec(r, n, eps)
            s_count: Optional[int] = count_in_blowup(pattern, s)
        except ValueError:
            s_count = None
        best, arg = -1, ()
        for comp in partitions_into(n, r - 1):
            value = count_from_profile(profile, comp)
            if value > best:
                best, arg = value, comp
        return {
            "n": n,
            "s_count": None if s_count is None else str(s_count),
            "partite_max": str(best),
            "partite_argmax": list(arg),
            "s_wins": None if s_count is None else s_count > best,
        }

    if threads is None:
        threads = int(os.environ.get("GENTURAN_THREADS", "1"))
    if threads > 1 and len(ns) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(one, ns))
    return [one(n) for n in ns]


def verify_counterexample(
    params: TheoremParams, finite_ns: Sequence[int] = (), threads: Optional[int] = None
) -> CounterexampleReport:
    """Certify at leading-coefficient level that S beats every (r-1)-partite host.

    Raises :class:`InfeasibleParameters` when (eps, a, delta) violate the
    parameter inequalities.
    """
    bad = params.violations()
    if bad:
        raise InfeasibleParameters("; ".join(bad))
    r, a, eps, delta = params.r, params.a, params.eps, params.delta
    structural = _structural_checks(r, a, eps)
    pattern = build_G(r, a)
    density_S = evaluate(density_polynomial(pattern, build_Q(r)), S_alpha(r, eps))
    # the (1/2)^(2a) bound rests on the colouring being unique
    upper = Fraction(1, 2 ** (2 * a)) if structural["unique_coloring"] else None
    best, alpha = max_partite_density(pattern, r - 1)
    finite = finite_n_comparison(r, a, eps, list(finite_ns), threads=threads)
    verdict = (
        all(structural.values())
        and upper is not None
        and delta * density_S > upper
        and delta * density_S > best
    )
    return CounterexampleReport(params, structural, density_S, upper, best, alpha, finite, verdict)
