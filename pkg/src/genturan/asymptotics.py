"""Leading-coefficient polynomials of labelled counts in blow-ups, and the
closed-form bounds and parameter condition of the counterexample."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import numpy as np

from .counting import load_profile
from .graphcore import Graph, PatternWithDemands

__all__ = [
    "DensityPolynomial",
    "TheoremParams",
    "density_polynomial",
    "evaluate",
    "paper_upper_bound",
    "paper_lower_bound",
    "eps_limit",
    "eps_constraint_holds",
    "feasibility",
    "minimal_a",
    "fraction_to_json",
    "fraction_from_json",
    "parse_fraction",
]


def parse_fraction(text: str | int | Fraction) -> Fraction:
    """Parse ``"p/q"`` or an integer.  Decimal strings are refused to keep inputs exact."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    s = text.strip()
    if "." in s or "e" in s.lower():
        raise ValueError(f"rational expected as 'p/q', got {text!r}")
    return Fraction(s)


def fraction_to_json(x: Fraction | int) -> dict[str, str]:
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def fraction_from_json(d: dict) -> Fraction:
    return Fraction(int(d["num"]), int(d["den"]))


@dataclass(frozen=True)
class DensityPolynomial:
    """Polynomial in one variable per host vertex with exact rational coefficients."""

    nvars: int
    terms: dict[tuple[int, ...], Fraction]

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def __call__(self, alpha: Sequence[Fraction | int]) -> Fraction:
        return evaluate(self, alpha)

    @cached_property
    def _arrays(self) -> tuple[np.ndarray, np.ndarray]:
        keys = sorted(self.terms)
        exps = np.array(keys, dtype=float).reshape(len(keys), self.nvars)
        coeffs = np.array([float(self.terms[k]) for k in keys])
        return exps, coeffs

    def value_float(self, alpha: np.ndarray) -> float:
        exps, coeffs = self._arrays
        return float(coeffs @ np.prod(np.power(alpha, exps), axis=1))

    def gradient_float(self, alpha: np.ndarray) -> np.ndarray:
        exps, coeffs = self._arrays
        grad = np.empty(self.nvars)
        for j in range(self.nvars):
            lowered = exps.copy()
            lowered[:, j] = np.maximum(lowered[:, j] - 1, 0)
            grad[j] = (coeffs * exps[:, j]) @ np.prod(np.power(alpha, lowered), axis=1)
        return grad

    def to_json(self) -> dict:
        return {
            "vars": self.nvars,
            "terms": [
                {"exp": list(e), "num": str(c.numerator), "den": str(c.denominator)}
                for e, c in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> DensityPolynomial:
        terms = {
            tuple(int(x) for x in t["exp"]): Fraction(int(t["num"]), int(t["den"])) for t in data["terms"]
        }
        return cls(int(data["vars"]), terms)


def density_polynomial(pattern: PatternWithDemands, host: Graph) -> DensityPolynomial:
    """Coefficient of ``n^|pattern|`` in the labelled count when part ``b`` has ``alpha_b * n`` vertices."""
    profile = load_profile(pattern, host)
    return DensityPolynomial(host.n, {load: Fraction(mult) for load, mult in profile.items()})


def evaluate(poly: DensityPolynomial, alpha: Sequence[Fraction | int]) -> Fraction:
    if len(alpha) != poly.nvars:
        raise ValueError(f"alpha has length {len(alpha)}, polynomial has {poly.nvars} variables")
    alpha = [Fraction(a) for a in alpha]
    if any(a < 0 for a in alpha):
        raise ValueError("alpha entries must be nonnegative")
    total = Fraction(0)
    for exps, coeff in poly.terms.items():
        term = coeff
        for a, e in zip(alpha, exps):
            if e:
                term *= a**e
                if not term:
                    break
        total += term
    return total


def paper_upper_bound(n: int, r: int, a: int) -> Fraction:
    """``n^(r+1) (n/2)^(2a)``: labelled copies of G in any complete (r-1)-partite graph."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Fraction(n) ** (r + 1) * Fraction(n, 2) ** (2 * a)


def paper_lower_bound(n: int, r: int, a: int, eps: Fraction) -> int:
    """``floor(eps n)^(r+1) (n - (r+1) floor(eps n))^(2a)``: copies of G guaranteed in S."""
    m = int(Fraction(eps) * n)
    if m < 1:
        raise ValueError(f"floor(eps*n) = 0 for eps={eps}, n={n}")
    return m ** (r + 1) * (n - (r + 1) * m) ** (2 * a)


def eps_limit(r: int) -> Fraction:
    return Fraction(1, 100 * (r + 1))


def eps_constraint_holds(r: int, eps: Fraction) -> bool:
    return 0 < eps < eps_limit(r)


def _condition(r: int, delta: Fraction, eps: Fraction, a: int) -> bool:
    lhs = Fraction(1, 2) * delta * eps ** (r + 1) * (1 - eps * (r + 1)) ** (2 * a)
    return lhs >= Fraction(1, 2 ** (2 * a))


@dataclass(frozen=True)
class TheoremParams:
    r: int
    delta: Fraction
    eps: Fraction
    a: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "delta", Fraction(self.delta))
        object.__setattr__(self, "eps", Fraction(self.eps))
        if self.r < 4:
            raise ValueError(f"r must be >= 4, got {self.r}")
        if not 0 < self.delta <= 1:
            raise ValueError(f"delta must lie in (0, 1], got {self.delta}")
        if self.eps <= 0:
            raise ValueError(f"eps must be positive, got {self.eps}")
        if self.a < 1:
            raise ValueError(f"a must be >= 1, got {self.a}")

    def violations(self) -> list[str]:
        """Human-readable list of the parameter inequalities that fail."""
        out = []
        if not eps_constraint_holds(self.r, self.eps):
            out.append(f"eps < 1/(100(r+1)) fails: {self.eps} >= {eps_limit(self.r)}")
        elif not _condition(self.r, self.delta, self.eps, self.a):
            out.append(
                "(1/2) delta eps^(r+1) (1 - eps(r+1))^(2a) >= 2^(-2a) fails "
                f"for r={self.r}, delta={self.delta}, eps={self.eps}, a={self.a}"
            )
        return out

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "delta": fraction_to_json(self.delta),
            "eps": fraction_to_json(self.eps),
            "a": self.a,
        }


def feasibility(params: TheoremParams) -> bool:
    """Exact check of ``(1/2) delta eps^(r+1) (1-eps(r+1))^(2a) >= 2^(-2a)`` under the eps constraint."""
    if not eps_constraint_holds(params.r, params.eps):
        raise ValueError(f"eps must be below {eps_limit(params.r)}")
    return _condition(params.r, params.delta, params.eps, params.a)


def minimal_a(r: int, delta: Fraction, eps: Fraction) -> int:
    """Least ``a >= 1`` meeting the condition, by linear scan."""
    delta, eps = Fraction(delta), Fraction(eps)
    if not eps_constraint_holds(r, eps):
        raise ValueError(f"eps must be below {eps_limit(r)}")
    if not 0 < delta <= 1:
        raise ValueError("delta must lie in (0, 1]")
    a = 1
    while not _condition(r, delta, eps, a):
        a += 1
    return a
