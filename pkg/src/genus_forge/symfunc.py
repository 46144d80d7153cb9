"""Multiplicative genera via symmetric functions.

A genus is encoded by a power series Q(x) = a_0 + a_1*x + a_2*x^2 + ...
For a manifold of complex dimension n one expands Q(x_1)...Q(x_n), keeps
the part of weight n, and rewrites it in the elementary symmetric
polynomials sigma_1, ..., sigma_n of the x_i.  Substituting Chern classes
for the sigma_j and integrating turns the weight-n part into the number

    sum over partitions lambda of n  of  f_lambda * C_lambda,

where C_lambda are the Chern numbers and the f_lambda are universal
polynomials in the a_k.  Everything here is exact: coefficients may be
rationals, polynomials (e.g. in y for the Hirzebruch chi_y genus), or
truncated q-series.

The expansion never touches individual monomials of the n-fold product:
the coefficient of the monomial symmetric function m_I in Q(x_1)...Q(x_n)
is a_0^(n-len(I)) * a_{I_1} * ... * a_{I_l}, read off directly, and m_I is
converted to the elementary basis by triangular elimination.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

from .sparsepoly import SparsePoly

Partition = tuple[int, ...]


def check_partition(parts: Iterable[int]) -> Partition:
    p = tuple(int(x) for x in parts)
    if any(x <= 0 for x in p):
        raise ValueError("partition parts must be positive")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError("partition parts must be non-increasing")
    return p


def partition_sort_key(parts: Sequence[int]):
    """Graded reverse-lexicographic: by length, then reverse-lex on parts."""
    return (len(parts), tuple(-x for x in parts))


def partitions_at_most(k: int, n: int) -> list[Partition]:
    """All partitions of k with at most n parts, in display order:
    [6], [5,1], [4,2], [3,3], [4,1,1], [3,2,1], [2,2,2] for (6, 3)."""
    if k < 0 or n < 1:
        raise ValueError("need k >= 0 and n >= 1")
    out: list[Partition] = []

    def rec(remaining: int, max_part: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if len(prefix) == n:
            return
        for part in range(min(remaining, max_part), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(k, k, [])
    out.sort(key=partition_sort_key)
    return out


def all_partitions(k: int) -> list[Partition]:
    return partitions_at_most(k, max(k, 1))


def partition_str(parts: Sequence[int]) -> str:
    return "[" + ",".join(str(x) for x in parts) + "]"


def _distinct_permutations(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Permutations of a multiset, each arrangement exactly once."""
    counts: dict[int, int] = {}
    for x in items:
        counts[x] = counts.get(x, 0) + 1
    keys = sorted(counts)
    slot = [0] * len(items)

    def rec(depth: int):
        if depth == len(items):
            yield tuple(slot)
            return
        for x in keys:
            if counts[x]:
                counts[x] -= 1
                slot[depth] = x
                yield from rec(depth + 1)
                counts[x] += 1

    yield from rec(0)


def monomial_sym_eval(I: Sequence[int], values: Sequence):
    """m_I at concrete values: the exponent vector I (padded with zeros) is
    summed over all of its distinct rearrangements."""
    I = check_partition(I) if I else ()
    if len(values) < len(I):
        raise ValueError("monomial symmetric function needs at least "
                         f"{len(I)} values, got {len(values)}")
    padded = tuple(I) + (0,) * (len(values) - len(I))
    total = 0
    for perm in _distinct_permutations(padded):
        term = 1
        for v, e in zip(values, perm):
            if e:
                term = term * v ** e
        total = total + term
    if isinstance(total, int):
        return Fraction(total)
    return total


def monomial_sym_poly(I: Sequence[int], variables: Sequence[str]) -> SparsePoly:
    """m_I as an explicit polynomial in the given variables."""
    I = check_partition(I) if I else ()
    vs = tuple(variables)
    if len(vs) < len(I):
        raise ValueError("not enough variables for the partition")
    padded = tuple(I) + (0,) * (len(vs) - len(I))
    terms = {perm: Fraction(1) for perm in _distinct_permutations(padded)}
    return SparsePoly(vs, terms)


def elementary_sym_poly(m: int, variables: Sequence[str]) -> SparsePoly:
    vs = tuple(variables)
    if not 0 <= m <= len(vs):
        raise ValueError("elementary symmetric index out of range")
    terms: dict[tuple[int, ...], Fraction] = {}
    for subset in combinations(range(len(vs)), m):
        exp = [0] * len(vs)
        for i in subset:
            exp[i] = 1
        terms[tuple(exp)] = Fraction(1)
    return SparsePoly(vs, terms)


def elementary_values(values: Sequence) -> list:
    """e_0, e_1, ..., e_n at concrete values, by running product of (1 + v*t)."""
    elem = [Fraction(1)]
    for v in values:
        nxt = [elem[0]]
        for j in range(1, len(elem)):
            nxt.append(elem[j] + v * elem[j - 1])
        nxt.append(v * elem[-1])
        elem = nxt
    return elem


@lru_cache(maxsize=None)
def monomial_to_elementary(I: Partition, n: int) -> SparsePoly:
    """The unique polynomial expressing m_I(x_1..x_n) in e_1..e_n.

    Triangular elimination: under graded lex the leading monomial of the
    symmetric remainder always has a weakly decreasing exponent vector
    alpha, and the product of e's indexed by the conjugate of alpha has
    leading monomial exactly x^alpha.  Subtracting matches term by term
    until the remainder vanishes, which simultaneously proves the identity.
    """
    I = check_partition(I) if I else ()
    if n < len(I):
        raise ValueError("need at least as many variables as parts")
    xvars = tuple(f"x{i}" for i in range(1, n + 1))
    evars = tuple(f"e{i}" for i in range(1, n + 1))
    elem = [elementary_sym_poly(m, xvars) for m in range(n + 1)]
    remainder = monomial_sym_poly(I, xvars)
    result = SparsePoly.zero(evars)
    while remainder:
        alpha, c = remainder.leading_term()
        parts = tuple(x for x in alpha if x)
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ArithmeticError("remainder lost symmetry during elimination")
        conj = [sum(1 for x in parts if x >= j) for j in range(1, (parts[0] if parts else 0) + 1)]
        e_prod = SparsePoly.constant(xvars, 1)
        e_exp = [0] * n
        for m in conj:
            e_prod = e_prod * elem[m]
            e_exp[m - 1] += 1
        remainder = remainder - c * e_prod
        result = result + SparsePoly.monomial(evars, e_exp, c)
    return result


# -- genus specifications ------------------------------------------------------------


class GenusSpec:
    """The coefficient list a_0..a_n of Q(x), over any exact domain."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Sequence) -> None:
        coeffs = tuple(coefficients)
        if not coeffs:
            raise ValueError("a genus needs at least the constant coefficient")
        object.__setattr__(self, "coefficients", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("GenusSpec is immutable")

    @property
    def normalized(self) -> bool:
        return self.coefficients[0] == 1

    @property
    def order(self) -> int:
        """Largest index with a stored coefficient."""
        return len(self.coefficients) - 1

    def one(self):
        """Multiplicative identity of the coefficient domain."""
        return self.coefficients[0] * 0 + 1

    @classmethod
    def symbolic(cls, n: int, normalized: bool = False) -> "GenusSpec":
        """Coefficients as indeterminates a_0..a_n (a_0 = 1 when normalized)."""
        avars = tuple(f"a{k}" for k in range(n + 1))
        coeffs = [SparsePoly.variable(v, avars) for v in avars]
        if normalized:
            coeffs[0] = SparsePoly.constant(avars, 1)
        return cls(coeffs)


def _genus_spec_vars(spec: GenusSpec) -> tuple[str, ...]:
    seen: list[str] = []
    for c in spec.coefficients:
        if isinstance(c, SparsePoly):
            for v in c.vars:
                if v not in seen:
                    seen.append(v)
    return tuple(seen)


@lru_cache(maxsize=None)
def _universal_genus_polys(n: int) -> tuple[SparsePoly, ...]:
    """Q_1..Q_n over indeterminate a_0..a_n, with y_j standing for sigma_j.

    The weight-k part of Q(x_1)...Q(x_n) equals
        sum over partitions I of k:  a_0^(n - len(I)) prod a_{I_i} * m_I,
    and each m_I is pushed through the elementary basis.
    """
    avars = tuple(f"a{k}" for k in range(n + 1))
    yvars = tuple(f"y{j}" for j in range(1, n + 1))
    allvars = avars + yvars
    out = []
    for k in range(1, n + 1):
        qk = SparsePoly.zero(allvars)
        for I in partitions_at_most(k, n):
            a_exp = [0] * (n + 1) + [0] * n
            a_exp[0] = n - len(I)
            for part in I:
                a_exp[part] += 1
            a_mon = SparsePoly.monomial(allvars, a_exp)
            conv = monomial_to_elementary(I, k)
            for e_exp, c in conv.terms.items():
                y_exp = [0] * (n + 1) + list(e_exp) + [0] * (n - k)
                qk = qk + c * a_mon * SparsePoly.monomial(allvars, y_exp)
        out.append(qk)
    return tuple(out)


def genus_polynomials(spec: GenusSpec, n: int) -> list[SparsePoly]:
    """Q_1..Q_n with the a_k evaluated at the spec's coefficients; Q_k applied
    to sigma_1..sigma_k reproduces the weight-k part of Q(x_1)...Q(x_n).

    The coefficient domain must be polynomial (Fraction or SparsePoly); for
    q-series coefficients use f_lambda_values/genus_value instead.
    """
    if spec.order < n:
        raise ValueError(f"genus spec stops at a_{spec.order}, need a_{n}")
    extra = _genus_spec_vars(spec)
    yvars = tuple(f"y{j}" for j in range(1, n + 1))
    allvars = extra + yvars
    values = []
    for c in spec.coefficients[: n + 1]:
        if isinstance(c, SparsePoly):
            values.append(c.with_vars(allvars))
        else:
            values.append(SparsePoly.constant(allvars, c))
    for v in yvars:
        values.append(SparsePoly.variable(v, allvars))
    one = SparsePoly.constant(allvars, 1)
    return [u.evaluate(values, one=one) for u in _universal_genus_polys(n)]


def f_lambda_symbolic(n: int) -> dict[Partition, SparsePoly]:
    """f_lambda for all partitions of n, as polynomials in a_0..a_n."""
    avars = tuple(f"a{k}" for k in range(n + 1))
    qn = _universal_genus_polys(n)[n - 1]
    out: dict[Partition, SparsePoly] = {lam: SparsePoly.zero(avars)
                                        for lam in all_partitions(n)}
    for exp, c in qn.terms.items():
        a_part, y_part = exp[: n + 1], exp[n + 1:]
        lam = []
        for j in range(n, 0, -1):
            lam.extend([j] * y_part[j - 1])
        out[tuple(lam)] = out[tuple(lam)] + SparsePoly.monomial(avars, a_part, c)
    return out


def f_lambda_values(spec: GenusSpec, n: int) -> dict[Partition, object]:
    """f_lambda specialized at the spec's coefficients (any exact domain)."""
    if spec.order < n:
        raise ValueError(f"genus spec stops at a_{spec.order}, need a_{n}")
    one = spec.one()
    values = list(spec.coefficients[: n + 1])
    return {lam: poly.evaluate(values, one=one)
            for lam, poly in f_lambda_symbolic(n).items()}


def genus_value(spec: GenusSpec, chern: Mapping[Partition, int], n: int):
    """sum of f_lambda * C_lambda over partitions lambda of n."""
    flam = f_lambda_values(spec, n)
    total = None
    for lam, f in flam.items():
        if lam not in chern:
            raise ValueError(f"missing Chern number for partition {partition_str(lam)}")
        term = f * chern[lam]
        total = term if total is None else total + term
    assert total is not None
    return total


def chi_y_power_series(k_max: int) -> GenusSpec:
    """The chi_y genus: Q(x) = x(1 + y e^{-x})/(1 - e^{-x}), so
    a_k = sum_{m<=k} B_m/(m! (k-m)!) + y * B_k/k!."""
    from .series import bernoulli  # local import: series pulls in no symfunc
    from math import factorial

    yvar = ("y",)
    coeffs = []
    for k in range(k_max + 1):
        const = sum(bernoulli(m) / (factorial(m) * factorial(k - m))
                    for m in range(k + 1))
        poly = {(0,): const, (1,): bernoulli(k) / factorial(k)}
        coeffs.append(SparsePoly(yvar, poly))
    return GenusSpec(coeffs)
