"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element is stored in canonical form: a vector of phi(N) Fraction
coefficients with respect to the power basis 1, zeta, ..., zeta^(phi(N)-1),
reduced modulo the N-th cyclotomic polynomial Phi_N.  Equality is exact
equality of coefficient vectors, so values coming from different computation
routes can be compared directly.

All values are immutable; the module-level caches are populated lazily and
are safe for concurrent read-through use (entries are only ever added, never
mutated).
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Union

Scalar = Union[int, Fraction]

_TERM_RE = re.compile(
    r"^(-?\d+(?:/\d+)?)$"            # plain rational
    r"|^(-?)(?:(\d+(?:/\d+)?)\*)?z(?:\^(\d+))?$"  # [c*]z[^k] with optional sign
)
_WRAP_RE = re.compile(r"^\(\s*(.*?)\s*\)\s*@\s*Q\(zeta_(\d+)\)$")


def _poly_trim(coeffs: list[Fraction]) -> list[Fraction]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _poly_trim(out)


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv_lead = 1 / b[-1]
    while len(a) >= len(b) and _poly_trim(a):
        shift = len(a) - len(b)
        c = a[-1] * inv_lead
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] -= c * y
        _poly_trim(a)
    return _poly_trim(q), a


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[Fraction, ...]:
    """Ascending coefficients of Phi_n, by exact division of x^n - 1."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod(num, list(cyclotomic_polynomial(d)))
            if rem:
                raise AssertionError("cyclotomic division left a remainder")
    return tuple(num)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _power_vector(level: int, e: int) -> tuple[Fraction, ...]:
    """zeta_level^e in the canonical basis."""
    e %= level
    phi = euler_phi(level)
    poly = [Fraction(0)] * e + [Fraction(1)]
    _, rem = _poly_divmod(poly, list(cyclotomic_polynomial(level)))
    rem = rem + [Fraction(0)] * (phi - len(rem))
    return tuple(rem)


class CyclotomicNumber:
    """An element of Q(zeta_N) in canonical reduced form."""

    __slots__ = ("level", "coeffs")

    def __init__(self, level: int, coeffs) -> None:
        if level < 1:
            raise ValueError("cyclotomic level must be positive")
        phi = euler_phi(level)
        vec = [Fraction(c) for c in coeffs]
        if len(vec) != phi:
            raise ValueError(f"expected {phi} coefficients for level {level}, got {len(vec)}")
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "coeffs", tuple(vec))

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicNumber is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_rational(cls, level: int, value: Scalar) -> "CyclotomicNumber":
        phi = euler_phi(level)
        vec = [Fraction(value)] + [Fraction(0)] * (phi - 1)
        return cls(level, vec)

    @classmethod
    def zeta(cls, level: int, power: int = 1) -> "CyclotomicNumber":
        return cls(level, _power_vector(level, power))

    # -- helpers ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.level != self.level:
                raise ValueError("incompatible cyclotomic levels")
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(self.level, other)
        return None

    def _from_power_sum(self, pairs) -> "CyclotomicNumber":
        """Sum of c * zeta^e terms, reduced."""
        phi = euler_phi(self.level)
        acc = [Fraction(0)] * phi
        for e, c in pairs:
            if c:
                vec = _power_vector(self.level, e)
                for i in range(phi):
                    acc[i] += c * vec[i]
        return CyclotomicNumber(self.level, acc)

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicNumber(self.level, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicNumber(self.level, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return CyclotomicNumber(self.level, [-a for a in self.coeffs])

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        conv = _poly_mul(list(self.coeffs), list(o.coeffs))
        return self._from_power_sum((i, c) for i, c in enumerate(conv))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        if not self:
            raise ZeroDivisionError(f"division by zero in Q(zeta_{self.level})")
        phi_poly = list(cyclotomic_polynomial(self.level))
        a = _poly_trim(list(self.coeffs))
        # extended euclid in Q[x]: s*a + t*Phi = g, g a nonzero constant
        # since Phi is irreducible and a is nonzero of lower degree.
        r0, r1 = phi_poly, a
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        if len(r0) != 1:
            raise AssertionError("cyclotomic polynomial was not coprime to the element")
        g = r0[0]
        return self._from_power_sum((i, c / g) for i, c in enumerate(s0))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        out = CyclotomicNumber.from_rational(self.level, 1)
        for _ in range(abs(k)):
            out = out * base
        return out

    # -- field automorphisms ----------------------------------------------

    def galois(self, m: int) -> "CyclotomicNumber":
        """The automorphism zeta -> zeta^m; requires gcd(m, N) = 1."""
        if gcd(m, self.level) != 1:
            raise ValueError(f"zeta -> zeta^{m} is not an automorphism at level {self.level}")
        return self._from_power_sum((i * m, c) for i, c in enumerate(self.coeffs))

    def conjugate(self) -> "CyclotomicNumber":
        return self.galois(-1)

    # -- predicates and conversions ----------------------------------------

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational element")
        return self.coeffs[0]

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        try:
            o = self._coerce(other)
        except ValueError:
            return False
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.level, self.coeffs))

    # -- text form ----------------------------------------------------------

    def __str__(self) -> str:
        terms = [(i, c) for i, c in enumerate(self.coeffs) if c]
        if not terms:
            body = "0"
        else:
            parts = []
            for i, c in terms:
                if i == 0:
                    t = str(c)
                else:
                    z = "z" if i == 1 else f"z^{i}"
                    if c == 1:
                        t = z
                    elif c == -1:
                        t = "-" + z
                    else:
                        t = f"{c}*{z}"
                parts.append(t)
            body = parts[0]
            for t in parts[1:]:
                body += " - " + t[1:] if t.startswith("-") else " + " + t
        return f"({body}) @ Q(zeta_{self.level})"

    def __repr__(self) -> str:
        return f"CyclotomicNumber({self.level}, {[str(c) for c in self.coeffs]})"

    @classmethod
    def parse(cls, text: str) -> "CyclotomicNumber":
        m = _WRAP_RE.match(text.strip())
        if not m:
            raise ValueError(f"cannot parse cyclotomic literal: {text!r}")
        body, level = m.group(1), int(m.group(2))
        out = cls.from_rational(level, 0)
        if body == "0":
            return out
        for token in body.replace(" - ", " + -").split(" + "):
            token = token.strip()
            tm = _TERM_RE.match(token)
            if not tm:
                raise ValueError(f"cannot parse cyclotomic term: {token!r}")
            if tm.group(1) is not None:
                out = out + Fraction(tm.group(1))
            else:
                sign = -1 if tm.group(2) == "-" else 1
                coeff = Fraction(tm.group(3)) if tm.group(3) else Fraction(1)
                power = int(tm.group(4)) if tm.group(4) else 1
                out = out + sign * coeff * cls.zeta(level, power)
        return out
