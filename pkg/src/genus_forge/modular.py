"""Eisenstein series of level N and the elliptic-genus power series.

Two independent computations live here.  G_{k,N} comes straight from its
Fourier expansion (a divisor sum over Q(zeta_N)); the coefficients a_k(q)
of the normalized power series

    Q_N(x) = x * (1 - e^{-x} z) / ((1 - e^{-x})(1 - z))
             * prod_{r>=1} (1 - e^{-x} z q^r)(1 - e^x z^{-1} q^r)(1 - q^r)^2
                         / ((1 - e^{-x} q^r)(1 - e^x q^r)(1 - z q^r)(1 - z^{-1} q^r))

(z = zeta_N) come from expanding that product with nested truncated series,
x outside and q inside.  The identity a_k = G_{k,N} is checked, never
assumed; `verify_lemma_eisenstein` compares the two routes coefficient by
coefficient.

Precision T for a q-series always means: coefficients of q^0 .. q^{T-1}
are trusted.  The simple zero of (1 - e^{-x}) at x = 0 is cancelled
exactly by writing 1 - e^{-x} = x * u(x) with u(0) = 1 and inverting u.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import NamedTuple

from .cyclotomic import CyclotomicNumber
from .series import TruncSeries, bernoulli
from .symfunc import GenusSpec, Partition, f_lambda_values


class EisensteinKey(NamedTuple):
    weight: int
    level: int
    precision: int

    def validate(self) -> None:
        if self.weight < 1:
            raise ValueError("Eisenstein weight must be positive")
        if self.level < 2:
            raise ValueError("Eisenstein level must be at least 2")
        if self.precision < 1:
            raise ValueError("q-precision must be positive")


@lru_cache(maxsize=None)
def eisenstein_qexp(k: int, N: int, precision: int) -> TruncSeries:
    """G_{k,N} as a q-series over Q(zeta_N), trusted through q^(precision-1).

    Constant term (1+z)/(2(1-z)) for k = 1 and B_k/k! for k > 1; for n >= 1
    the q^n coefficient is -sum_{d|n} (n/d)^(k-1) (z^-d + (-1)^k z^d)/(k-1)!.
    """
    EisensteinKey(k, N, precision).validate()
    zeta = CyclotomicNumber.zeta(N)
    if k == 1:
        const = (1 + zeta) / (2 * (1 - zeta))
    else:
        const = CyclotomicNumber.from_rational(N, bernoulli(k) / factorial(k))
    sign = -1 if k % 2 else 1
    coeffs = {0: const}
    for n in range(1, precision):
        acc = CyclotomicNumber.from_rational(N, 0)
        for d in range(1, n + 1):
            if n % d:
                continue
            root = CyclotomicNumber.zeta(N, -d) + sign * CyclotomicNumber.zeta(N, d)
            acc = acc + (n // d) ** (k - 1) * root
        coeffs[n] = -acc * Fraction(1, factorial(k - 1))
    return TruncSeries("q", coeffs, order=precision)


def _q_const(N: int, precision: int, value) -> TruncSeries:
    if not isinstance(value, CyclotomicNumber):
        value = CyclotomicNumber.from_rational(N, value)
    return TruncSeries("q", {0: value}, order=precision)


def _exp_x_factor(sign: int, scale: TruncSeries, x_cutoff: int,
                  one: TruncSeries) -> TruncSeries:
    """1 - scale * e^{sign*x} as an x-series with q-series coefficients."""
    coeffs = {}
    for j in range(x_cutoff):
        c = scale * Fraction(-(sign ** j), factorial(j))
        if j == 0:
            c = one + c
        coeffs[j] = c
    return TruncSeries("x", coeffs, cutoff=x_cutoff)


def _one_minus_exp_unit(x_cutoff: int, qconst) -> TruncSeries:
    """u(x) with 1 - e^{-x} = x*u(x): u_j = (-1)^j / (j+1)!."""
    coeffs = {j: qconst(Fraction((-1) ** j, factorial(j + 1)))
              for j in range(x_cutoff)}
    return TruncSeries("x", coeffs, cutoff=x_cutoff)


class QnExpansion:
    """The x-coefficients of Q_N(x), each a q-series over Q(zeta_N)."""

    __slots__ = ("level", "x_order", "q_precision", "coeffs")

    def __init__(self, level: int, x_order: int, q_precision: int, coeffs) -> None:
        coeffs = list(coeffs)
        if len(coeffs) != x_order:
            raise ValueError("coefficient list does not match x_order")
        if coeffs and coeffs[0] != 1:
            raise ArithmeticError("Q_N lost its normalization: a_0 != 1")
        self.level = level
        self.x_order = x_order
        self.q_precision = q_precision
        self.coeffs = coeffs

    def coefficient(self, j: int) -> TruncSeries:
        return self.coeffs[j]

    def __repr__(self) -> str:
        return (f"<QnExpansion N={self.level} a_0..a_{self.x_order - 1} "
                f"through q^{self.q_precision - 1}>")


def qn_expansion_via_product(N: int, x_order: int, q_precision: int) -> QnExpansion:
    """Expand the defining infinite product of Q_N(x).

    Only factors with r < q_precision differ from 1 at this precision.  The
    numerator and denominator x-series are accumulated separately (one
    series inversion at the end), and the purely scalar factors
    (1-q^r)^2 / ((1-z q^r)(1-z^{-1} q^r)) are collected in a single q-series.
    """
    if N < 2:
        raise ValueError("the level-N genus needs N >= 2")
    if x_order < 1 or q_precision < 1:
        raise ValueError("need at least one x-coefficient and q-coefficient")
    K = x_order
    zeta = CyclotomicNumber.zeta(N)

    def qconst(v):
        return _q_const(N, q_precision, v)

    one_q = qconst(1)

    def qmono(v, r):
        if not isinstance(v, CyclotomicNumber):
            v = CyclotomicNumber.from_rational(N, v)
        return TruncSeries("q", {r: v}, order=q_precision)

    # prefactor x(1 - e^{-x} z)/((1 - e^{-x})(1 - z)), the x cancelled exactly
    u = _one_minus_exp_unit(K, qconst)
    prefactor = (_exp_x_factor(-1, qconst(zeta), K, one_q)
                 * u.inverse()
                 * qconst((1 - zeta).inverse()))

    numerator = TruncSeries("x", {0: one_q}, cutoff=K)
    denominator = TruncSeries("x", {0: one_q}, cutoff=K)
    scalar = one_q
    for r in range(1, q_precision):
        numerator = numerator * _exp_x_factor(-1, qmono(zeta, r), K, one_q)
        numerator = numerator * _exp_x_factor(+1, qmono(zeta.inverse(), r), K, one_q)
        denominator = denominator * _exp_x_factor(-1, qmono(1, r), K, one_q)
        denominator = denominator * _exp_x_factor(+1, qmono(1, r), K, one_q)
        scalar = scalar * (one_q - qmono(1, r)) ** 2
        scalar = scalar * ((one_q - qmono(zeta, r))
                           * (one_q - qmono(zeta.inverse(), r))).inverse()

    qn = prefactor * numerator * denominator.inverse() * scalar
    coeffs = []
    for j in range(K):
        c = qn.coeff(j)
        if not isinstance(c, TruncSeries):
            # identically-zero inner series are pruned inside the nest
            c = TruncSeries("q", {}, order=q_precision)
        elif c.cutoff > q_precision:
            c = c.truncate(order=q_precision)
        coeffs.append(c)
    return QnExpansion(N, K, q_precision, coeffs)


def classical_x_series(N: int, x_order: int) -> TruncSeries:
    """x(1 - e^{-x} z)/((1 - e^{-x})(1 - z)): the q -> 0 limit of Q_N(x),
    an x-series with plain cyclotomic coefficients."""
    if N < 2:
        raise ValueError("the level-N genus needs N >= 2")
    zeta = CyclotomicNumber.zeta(N)
    one = CyclotomicNumber.from_rational(N, 1)
    u = TruncSeries("x", {j: one * Fraction((-1) ** j, factorial(j + 1))
                          for j in range(x_order)}, cutoff=x_order)
    top = TruncSeries("x", {j: (one if j == 0 else one * 0)
                            - zeta * Fraction((-1) ** j, factorial(j))
                            for j in range(x_order)}, cutoff=x_order)
    return top * u.inverse() * (1 - zeta).inverse()


def verify_lemma_eisenstein(N: int, k_max: int, q_precision: int) -> dict:
    """Compare both routes to a_k for k <= k_max; report the first mismatch.

    Returns {"ok": True, ...} on success, otherwise the offending weight and
    exponent together with both coefficient values rendered as strings.
    """
    qn = qn_expansion_via_product(N, k_max + 1, q_precision)
    report = {"level": N, "k_max": k_max, "q_precision": q_precision, "ok": True}
    for k in range(1, k_max + 1):
        lhs = qn.coefficient(k)
        rhs = eisenstein_qexp(k, N, q_precision)
        for n in range(q_precision):
            a, b = lhs.coeff(n), rhs.coeff(n)
            if a != b:
                report.update(ok=False, weight=k, exponent=n,
                              product=str(a), fourier=str(b))
                return report
    return report


def f_lambda_table(N: int, n: int, q_precision: int) -> dict[Partition, TruncSeries]:
    """f_lambda for partitions of n, with a_k = G_{k,N}: q-series over Q(zeta_N)."""
    one = _q_const(N, q_precision, 1)
    spec = GenusSpec([one] + [eisenstein_qexp(k, N, q_precision)
                              for k in range(1, n + 1)])
    return f_lambda_values(spec, n)


# -- JSON shape shared with the command line ------------------------------------------


def series_to_json(series: TruncSeries, level: int) -> dict:
    if series.denom != 1:
        raise ValueError("only integer-exponent series are serialized")
    coeffs = []
    for k in sorted(series.coeffs):
        c = series.coeffs[k]
        if not isinstance(c, CyclotomicNumber):
            c = CyclotomicNumber.from_rational(level, c)
        coeffs.append([k, str(c)])
    return {"variable": series.var, "level": level,
            "precision": series.cutoff, "coeffs": coeffs}


def series_from_json(data: dict) -> TruncSeries:
    coeffs = {int(k): CyclotomicNumber.parse(s) for k, s in data["coeffs"]}
    return TruncSeries(data["variable"], coeffs, cutoff=int(data["precision"]),
                       laurent=any(int(k) < 0 for k, _ in data["coeffs"]))
