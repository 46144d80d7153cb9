import random
from fractions import Fraction

import pytest

from genus_forge.sparsepoly import SparsePoly
from genus_forge.symfunc import (GenusSpec, all_partitions, check_partition,
                                 chi_y_power_series, elementary_sym_poly,
                                 elementary_values, f_lambda_symbolic,
                                 f_lambda_values, genus_polynomials, genus_value,
                                 monomial_sym_eval, monomial_sym_poly,
                                 monomial_to_elementary, partition_sort_key,
                                 partition_str, partitions_at_most)


def test_check_partition():
    assert check_partition([3, 1]) == (3, 1)
    assert check_partition((2, 2, 1)) == (2, 2, 1)
    for bad in ([1, 2], [0], [-1], [2, 0]):
        with pytest.raises(ValueError):
            check_partition(bad)


def test_partition_enumeration_order():
    # graded reverse-lex: by length, then larger parts first
    assert partitions_at_most(6, 3) == [(6,), (5, 1), (4, 2), (3, 3),
                                        (4, 1, 1), (3, 2, 1), (2, 2, 2)]
    assert all_partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert partitions_at_most(4, 2) == [(4,), (3, 1), (2, 2)]
    assert sorted(all_partitions(4), key=partition_sort_key) == all_partitions(4)


def test_partition_str():
    assert partition_str((2, 1)) == "[2,1]"
    assert partition_str(()) == "[]"


def test_monomial_sym_eval_bruteforce_value():
    # orbit sum of x^2 y over three values
    assert monomial_sym_eval((2, 1), (1, 2, 3)) == 48
    assert monomial_sym_eval((1, 1), (1, 2, 3)) == 11
    assert monomial_sym_eval((2,), (1, 2, 3)) == 14
    # more parts than values is rejected, not silently zero
    with pytest.raises(ValueError):
        monomial_sym_eval((1, 1), (5,))
    assert monomial_sym_eval((), (1, 2)) == 1


def test_monomial_sym_eval_repeated_parts_no_double_count():
    # m_[1,1](a, b) = ab exactly once
    assert monomial_sym_eval((1, 1), (3, 4)) == 12
    assert monomial_sym_eval((2, 2), (3, 4)) == 144


def test_monomial_and_elementary_polys_agree_with_eval():
    values = (Fraction(2), Fraction(-1), Fraction(3))
    vs = ("a", "b", "c")
    for I in [(1,), (2,), (1, 1), (2, 1), (3, 2, 1)]:
        poly = monomial_sym_poly(I, vs)
        assert poly.evaluate(list(values)) == monomial_sym_eval(I, values)
    for m in range(4):
        poly = elementary_sym_poly(m, vs)
        assert poly.evaluate(list(values)) == elementary_values(values)[m]


def test_elementary_values_running_product():
    vals = elementary_values((1, 2, 3))
    assert vals == [1, 6, 11, 6]  # (1+x)(1+2x)(1+3x)


def test_monomial_to_elementary_roundtrip():
    rng = random.Random(11)
    for n in range(1, 5):
        for I in partitions_at_most(4, n):
            if len(I) > n:
                continue
            expr = monomial_to_elementary(I, n)
            values = [Fraction(rng.randint(-6, 6)) for _ in range(n)]
            e_vals = elementary_values(values)[1:]  # e_1..e_n
            assert expr.evaluate(e_vals) == monomial_sym_eval(I, values)


def test_genus_spec_basics():
    spec = GenusSpec([Fraction(1), Fraction(0), Fraction(1, 12)])
    assert spec.normalized
    assert spec.one() == 1
    sym = GenusSpec.symbolic(3)
    assert not sym.normalized
    assert sym.one() == 1  # SparsePoly one


def test_genus_polynomials_low_degrees():
    # universal: Q_1 = a0*y1, and the quadratic coefficients
    spec = GenusSpec.symbolic(2)
    f = f_lambda_values(spec, 2)
    a = spec.coefficients
    assert f[(1, 1)] == a[0] * a[2]
    assert f[(2,)] == a[1] * a[1] - a[0] * a[2] * 2


def test_f_lambda_symbolic_matches_values():
    n = 3
    table = f_lambda_symbolic(n)
    spec = GenusSpec.symbolic(n)
    values = f_lambda_values(spec, n)
    assert set(table) == set(values)
    # the symbolic table uses variables a0..an; evaluating them at the
    # symbolic spec's own coefficients must reproduce values
    for I, poly in table.items():
        evaluated = poly.evaluate(list(spec.coefficients),
                                  one=spec.coefficients[0] * 0 + 1)
        assert evaluated == values[I]


def test_genus_value_and_missing_chern():
    spec = chi_y_power_series(4)
    chern = {(1, 1): 9, (2,): 3}
    chi = genus_value(spec, chern, 2)
    y = SparsePoly.variable("y", ("y",))
    assert chi == y ** 2 - y + 1
    with pytest.raises(ValueError, match=r"\[1,1\]"):
        genus_value(spec, {(2,): 3}, 2)


def test_chi_y_euler_and_signature_specials():
    # chi_y of projective space: at y = -1 the Euler number n+1
    spec = chi_y_power_series(6)
    # CP^3 chern numbers
    chern = {(1, 1, 1): 64, (2, 1): 24, (3,): 4}
    chi = genus_value(spec, chern, 3)
    assert chi.evaluate([Fraction(-1)]) == 4
    # CP^3: chi_y = -y^3 + y^2 - y + 1
    y = SparsePoly.variable("y", ("y",))
    assert chi == -y ** 3 + y ** 2 - y + 1


def test_chi_y_degree_bound():
    spec = chi_y_power_series(5)
    for k, coeff in enumerate(spec.coefficients):
        assert coeff.degree() <= 1  # a_k is linear in y
        assert k == 0 or coeff.coefficient((0,)) is not None


def test_genus_spec_immutable():
    spec = GenusSpec.symbolic(2)
    with pytest.raises(AttributeError):
        spec.coefficients = ()
