"""Truncated formal power series in x with YPoly coefficients.

Two coefficient conventions are used side by side:

* ``EgfSeries`` reads stored coefficient n as f_n(y) / n!.
* ``GradedSeries`` reads stored coefficient n as
  f_n(y) / (n! * (1+y)^C(n,b)).

The graded convention keeps every pipeline inside integer polynomials:
the (1+y)^C(n,b) denominator is never materialized.  Converting between
the two conventions is therefore a pure re-interpretation of the stored
coefficients, and the graded product picks up an explicit
(1+y)^mix_exponent factor per convolution term so that it agrees with
the ordinary product of the underlying x-series.

Truncation order N and uniformity b are explicit on every series and all
binary operations require both to match.
"""
from __future__ import annotations

from dataclasses import dataclass

from .polynomials import ONE, ZERO, YPoly, binomial, mix_exponent, one_plus_y_pow

__all__ = [
    "EgfSeries",
    "GradedSeries",
    "alternating_series",
    "egf_exp",
    "egf_log",
    "egf_to_graded",
    "graded_mul",
    "graded_one",
    "graded_reciprocal",
    "graded_to_egf",
    "hadamard",
    "ones_series",
]


def _check_coeffs(coeffs: tuple[YPoly, ...], b: int) -> None:
    if b < 2:
        raise ValueError(f"uniformity b must be >= 2, got {b}")
    if not coeffs:
        raise ValueError("a truncated series needs at least the order-0 coefficient")
    if not all(isinstance(p, YPoly) for p in coeffs):
        raise TypeError("series coefficients must be YPoly instances")


def _require_compatible(f: "EgfSeries | GradedSeries", g: "EgfSeries | GradedSeries") -> None:
    if f.b != g.b or f.order != g.order:
        raise ValueError(
            f"series mismatch: (b={f.b}, N={f.order}) vs (b={g.b}, N={g.order})"
        )


@dataclass(frozen=True, slots=True)
class EgfSeries:
    """Sum of coeffs[n] * x^n / n!, truncated at order N = len(coeffs)-1."""

    b: int
    coeffs: tuple[YPoly, ...]

    def __post_init__(self) -> None:
        _check_coeffs(self.coeffs, self.b)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "EgfSeries") -> "EgfSeries":
        _require_compatible(self, other)
        return EgfSeries(self.b, tuple(p + q for p, q in zip(self.coeffs, other.coeffs)))

    def negate(self) -> "EgfSeries":
        return EgfSeries(self.b, tuple(-p for p in self.coeffs))


@dataclass(frozen=True, slots=True)
class GradedSeries:
    """Sum of coeffs[n] * x^n / (n! * (1+y)^C(n,b)), truncated at order N."""

    b: int
    coeffs: tuple[YPoly, ...]

    def __post_init__(self) -> None:
        _check_coeffs(self.coeffs, self.b)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "GradedSeries") -> "GradedSeries":
        _require_compatible(self, other)
        return GradedSeries(self.b, tuple(p + q for p, q in zip(self.coeffs, other.coeffs)))


def egf_to_graded(f: EgfSeries) -> GradedSeries:
    """Divide coefficient n by (1+y)^C(n,b).

    In the graded representation the denominator stays implicit, so this
    is a re-tagging of the same stored coefficients.
    """
    return GradedSeries(f.b, f.coeffs)


def graded_to_egf(F: GradedSeries) -> EgfSeries:
    """Inverse re-tagging; ``graded_to_egf(egf_to_graded(f)) == f``."""
    return EgfSeries(F.b, F.coeffs)


def hadamard(f: EgfSeries, g: EgfSeries) -> EgfSeries:
    """Coefficientwise product of the two coefficient sequences."""
    _require_compatible(f, g)
    return EgfSeries(f.b, tuple(p * q for p, q in zip(f.coeffs, g.coeffs)))


def graded_mul(F: GradedSeries, G: GradedSeries) -> GradedSeries:
    """Ordinary x-series product, expressed in stored graded coordinates.

    c_n = sum_k C(n,k) * (1+y)^mix_exponent(n,k,b) * f_k * g_{n-k}.
    """
    _require_compatible(F, G)
    b = F.b
    out: list[YPoly] = []
    for n in range(F.order + 1):
        acc = ZERO
        for k in range(n + 1):
            fk = F.coeffs[k]
            gk = G.coeffs[n - k]
            if not fk or not gk:
                continue
            term = one_plus_y_pow(mix_exponent(n, k, b)) * fk * gk
            acc = acc + term.scale(binomial(n, k))
        out.append(acc)
    return GradedSeries(b, tuple(out))


def graded_one(b: int, order: int) -> GradedSeries:
    """The multiplicative identity (1, 0, 0, ...)."""
    return GradedSeries(b, (ONE,) + (ZERO,) * order)


def graded_reciprocal(F: GradedSeries) -> GradedSeries:
    """G with graded_mul(F, G) == graded_one, by the triangular recurrence
    g_n = -sum_{k=1..n} C(n,k) (1+y)^mix_exponent(n,k,b) f_k g_{n-k}."""
    if F.coeffs[0] != ONE:
        raise ValueError("graded reciprocal needs constant coefficient exactly 1")
    b = F.b
    g: list[YPoly] = [ONE]
    for n in range(1, F.order + 1):
        acc = ZERO
        for k in range(1, n + 1):
            fk = F.coeffs[k]
            if not fk:
                continue
            term = one_plus_y_pow(mix_exponent(n, k, b)) * fk * g[n - k]
            acc = acc + term.scale(binomial(n, k))
        g.append(-acc)
    return GradedSeries(b, tuple(g))


def egf_exp(f: EgfSeries) -> EgfSeries:
    """exp(f) for f with zero constant term:
    e_0 = 1, e_n = sum_{k=1..n} C(n-1,k-1) f_k e_{n-k}."""
    if f.coeffs[0] != ZERO:
        raise ValueError("egf_exp needs zero constant term")
    e: list[YPoly] = [ONE]
    for n in range(1, f.order + 1):
        acc = ZERO
        for k in range(1, n + 1):
            fk = f.coeffs[k]
            if not fk:
                continue
            acc = acc + (fk * e[n - k]).scale(binomial(n - 1, k - 1))
        e.append(acc)
    return EgfSeries(f.b, tuple(e))


def egf_log(e: EgfSeries) -> EgfSeries:
    """Inverse of egf_exp on series with constant term 1:
    f_n = e_n - sum_{k=1..n-1} C(n-1,k-1) f_k e_{n-k}."""
    if e.coeffs[0] != ONE:
        raise ValueError("egf_log needs constant term exactly 1")
    f: list[YPoly] = [ZERO]
    for n in range(1, e.order + 1):
        acc = e.coeffs[n]
        for k in range(1, n):
            fk = f[k]
            if not fk:
                continue
            acc = acc - (fk * e.coeffs[n - k]).scale(binomial(n - 1, k - 1))
        f.append(acc)
    return EgfSeries(e.b, tuple(f))


def ones_series(b: int, order: int) -> GradedSeries:
    """Graded series with every stored coefficient 1 (the graded form of
    the all-ones coefficient sequence, i.e. of the EGF of e^x)."""
    return GradedSeries(b, (ONE,) * (order + 1))


def alternating_series(b: int, order: int) -> GradedSeries:
    """Graded series with stored coefficients (-1)^n (graded form of the
    EGF of e^(-x)).  Its reciprocal generates the acyclic counts."""
    return GradedSeries(
        b, tuple(YPoly.constant(-1 if n % 2 else 1) for n in range(order + 1))
    )
