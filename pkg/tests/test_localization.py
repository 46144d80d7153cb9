import json
import random
from fractions import Fraction

import pytest

from genus_forge.localization import (FixedPointData, Relation, action_type,
                                      build_relation, chern_number,
                                      chi_y_from_counts, cpn_fixed_points,
                                      cpn_hilbert_closed_form, divides_chi_y,
                                      eisenstein_product, equivariant_index_limit,
                                      general_relation_cpn, genus_qexp,
                                      genus_via_chern, hilbert_polynomial,
                                      lagrange_interpolate, product_fixed_points,
                                      random_product_of_projective_spaces,
                                      relation_coefficient, verify_relation)
from genus_forge.sparsepoly import SparsePoly
from genus_forge.symfunc import partitions_at_most


def test_cpn_fixed_points_shape():
    fpd = cpn_fixed_points(2, (1, 2))
    assert fpd.points == [(1, 2), (-1, 1), (-1, -2)]
    assert fpd.asserted_index == 3
    assert fpd.labels == ["P0", "P1", "P2"]


def test_fixed_point_validation():
    with pytest.raises(ValueError):
        cpn_fixed_points(2, (1, 1))       # repeated weight
    with pytest.raises(ValueError):
        cpn_fixed_points(2, (0, 1))       # zero weight
    with pytest.raises(ValueError):
        FixedPointData(2, [(1,)], ["P"]).validate()  # wrong arity
    with pytest.raises(ValueError):
        FixedPointData(1, [(1,), (2,)], ["P"]).validate()  # label count


def test_zero_sum_constraint_flag():
    with pytest.raises(ValueError):
        cpn_fixed_points(2, (1, 2), require_zero_sum=True)
    fpd = cpn_fixed_points(2, (1, -1), require_zero_sum=False)
    assert fpd.points[0] == (1, -1)


def test_action_type_balanced_and_witnesses():
    fpd = cpn_fixed_points(2, (1, 2))
    report = action_type(fpd, 3)
    assert report == {"balanced": True, "type": 0}
    hand_made = FixedPointData(1, [(1,), (2,)], ["A", "B"])
    report = action_type(hand_made, 2)
    assert not report["balanced"]
    assert len(report["witnesses"]) == 2


def test_cp2_chern_numbers():
    fpd = cpn_fixed_points(2, (1, 2))
    assert chern_number(fpd, (1, 1)) == 9
    assert chern_number(fpd, (2,)) == 3
    # weight-independence of genuine Chern numbers
    for ws in ((1, 3), (2, 5), (-1, 4)):
        other = cpn_fixed_points(2, ws)
        assert chern_number(other, (1, 1)) == 9
        assert chern_number(other, (2,)) == 3


def test_cp3_chern_numbers():
    fpd = cpn_fixed_points(3, (1, 2, 4))
    assert chern_number(fpd, (1, 1, 1)) == 64
    assert chern_number(fpd, (2, 1)) == 24
    assert chern_number(fpd, (3,)) == 4


def test_chern_number_integrality_guard():
    bad = FixedPointData(2, [(1, 2)], ["pt"])
    with pytest.raises(ArithmeticError, match="integrality"):
        chern_number(bad, (1, 1))


def test_chi_y_from_counts():
    fpd = cpn_fixed_points(2, (1, 2))
    y = SparsePoly.variable("y", ("y",))
    assert chi_y_from_counts(fpd) == y ** 2 - y + 1
    fpd3 = cpn_fixed_points(3, (1, 2, 4))
    assert chi_y_from_counts(fpd3) == -y ** 3 + y ** 2 - y + 1


def test_degree_vanishing_on_manifold_models():
    rng = random.Random(5)
    for _ in range(10):
        n = rng.randint(1, 4)
        fpd = random_product_of_projective_spaces(rng, n)
        for k in range(n):
            for I in partitions_at_most(k, n):
                assert relation_coefficient(fpd, I) == 0


def test_degree_vanishing_fails_on_non_manifold_data():
    # single fixed point: not a closed manifold; the sum is honestly nonzero
    data = FixedPointData(2, [(1, 2)], ["pt"])
    assert relation_coefficient(data, (1,)) == Fraction(3, 2)


def test_top_degree_weight_independence():
    for ws in ((1, 2), (1, 3), (2, 7)):
        fpd = cpn_fixed_points(2, ws)
        assert relation_coefficient(fpd, (2,)) == 3
        assert relation_coefficient(fpd, (1, 1)) == 3


def test_relation_above_top_degree_depends_on_weights():
    a = relation_coefficient(cpn_fixed_points(2, (1, 2)), (2, 2))
    b = relation_coefficient(cpn_fixed_points(2, (1, 3)), (2, 2))
    assert a == 3 and b == 7   # only the primitive relation is invariant


def test_build_relation_guards():
    fpd = cpn_fixed_points(2, (1, 2))
    with pytest.raises(ValueError, match="below localization degree"):
        build_relation(fpd, 3, 1)
    with pytest.raises(ValueError, match="does not divide"):
        build_relation(fpd, 2, 4)


def test_cp2_relation_displays_and_verification():
    fpd = cpn_fixed_points(2, (1, 3))
    displays = {
        4: "4*G[1,3]*G[3,3] + G[2,3]^2 + 5*G[4,3] = 0",
        5: "-G[2,3]*G[3,3] + G[5,3] = 0",
        6: "4*G[1,3]*G[5,3] + 2*G[2,3]*G[4,3] + G[3,3]^2 + 7*G[6,3] = 0",
        7: "-G[2,3]*G[5,3] - G[3,3]*G[4,3] + 2*G[7,3] = 0",
    }
    for k, display in displays.items():
        rel = build_relation(fpd, 3, k).primitive()
        assert rel.render() == display
        assert verify_relation(rel, 12)["ok"]


def test_cp1_relation():
    fpd = cpn_fixed_points(1, (5,))
    rel = build_relation(fpd, 2, 3).primitive()
    assert rel.render() == "G[3,2] = 0"
    assert verify_relation(rel, 12)["ok"]


def test_primitive_normalization():
    rel = Relation(2, 4, 3, [((4,), Fraction(-10)), ((3, 1), Fraction(-5))],
                   provenance="test")
    prim = rel.primitive()
    assert prim.coefficient((3, 1)) == 1 and prim.coefficient((4,)) == 2
    with pytest.raises(KeyError):
        prim.coefficient((2, 2))


def test_perturbed_relation_fails_verification():
    fpd = cpn_fixed_points(2, (1, 3))
    rel = build_relation(fpd, 3, 4).primitive()
    broken = Relation(rel.n, rel.k, rel.N,
                      [(I, c + (1 if I == (4,) else 0)) for I, c in rel.terms],
                      provenance=rel.provenance)
    report = verify_relation(broken, 8)
    assert not report["ok"]
    assert report["residual"] != 0


def test_eisenstein_product_degree():
    # product of G over the parts, as a q-series
    series = eisenstein_product((2, 1), 3, 6)
    single = eisenstein_product((3,), 3, 6)
    assert series.cutoff == single.cutoff == 6


def test_genus_two_routes_agree_nonvanishing():
    # level 2 on CP^2 (2 does not divide 3): nonzero genus, two routes
    fpd = cpn_fixed_points(2, (1, 2))
    a = genus_qexp(fpd, 2, 10)
    b = genus_via_chern(fpd, 2, 10)
    for k in range(10):
        assert a.coeff(k) == b.coeff(k)
    assert a.coeff(0) == Fraction(1, 4)


def test_genus_vanishes_at_dividing_level():
    for n, N in ((1, 2), (2, 3), (3, 2), (3, 4)):
        fpd = cpn_fixed_points(n, tuple(range(1, n + 1)))
        series = genus_qexp(fpd, N, 10)
        assert all(series.coeff(k) == 0 for k in range(10))


def test_equivariant_index_limit_counts_sections():
    # CP^1 degree-k line bundle: k+1 sections
    fpd = cpn_fixed_points(1, (1,))
    for k in (1, 2, 5):
        # ind(O(k)) localizes to t^0/(1-t^-w) + t^-k/(1-t^w); limit t->1 is k+1
        value = equivariant_index_limit(fpd, [[(Fraction(0), Fraction(1))],
                                              [(Fraction(-k), Fraction(1))]])
        assert value == k + 1


def test_equivariant_index_limit_pole_detection():
    data = FixedPointData(1, [(1,)], ["pt"])
    with pytest.raises(ArithmeticError, match="pole at t=1"):
        equivariant_index_limit(data, [[(Fraction(0), Fraction(1))]])


def test_lagrange_interpolation():
    samples = [(Fraction(0), Fraction(1)), (Fraction(1), Fraction(2)),
               (Fraction(2), Fraction(5))]
    poly = lagrange_interpolate(samples)
    assert poly == SparsePoly(("x",), {(2,): 1, (0,): 1})
    with pytest.raises(ValueError):
        lagrange_interpolate([(Fraction(0), Fraction(1)), (Fraction(0), Fraction(2))])


def test_hilbert_polynomials_match_closed_forms():
    for n in (1, 2, 3):
        fpd = cpn_fixed_points(n, tuple(range(1, n + 1)))
        for m in range(n + 1):
            h = hilbert_polynomial(fpd, n + 1, m)
            assert h.polynomial == cpn_hilbert_closed_form(n, m)
            assert h(0) == (-1) ** m


def test_hilbert_closed_form_samples():
    # CP^2: H_0(x) = (x^2 - 3x + 2)/2, H_1 = x^2 - 1
    h0 = cpn_hilbert_closed_form(2, 0)
    assert h0.evaluate([Fraction(3)]) == 1  # O(3) twisted: (3-1)(3-2)/2
    h1 = cpn_hilbert_closed_form(2, 1)
    assert h1 == SparsePoly(("x",), {(2,): 1, (0,): -1})


def test_divides_chi_y():
    y = SparsePoly.variable("y", ("y",))
    chi = y ** 2 - y + 1
    report = divides_chi_y(chi, 3)
    assert report["divisible"] and report["quotient"] == 1
    report = divides_chi_y(chi + 1, 3)
    assert not report["divisible"]


def test_general_relation_report():
    report = general_relation_cpn(2, 3, 4, 10)
    assert report["ok"] and report["zero_index_convention"] == "G_0 = 1"


def test_product_fixed_points():
    a = cpn_fixed_points(1, (1,))
    b = cpn_fixed_points(1, (2,))
    prod = product_fixed_points(a, b)
    assert prod.n == 2
    assert len(prod.points) == 4
    assert prod.asserted_index == 2  # gcd(2, 2)
    assert sorted(prod.points) == sorted([(1, 2), (1, -2), (-1, 2), (-1, -2)])


def test_random_products_are_valid():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(1, 4)
        fpd = random_product_of_projective_spaces(rng, n)
        fpd.validate()
        assert fpd.n == n
        # factor weights are drawn in [-9, 9]; point weights are differences
        assert all(isinstance(w, int) and w and abs(w) <= 18
                   for p in fpd.points for w in p)


def test_fixed_point_json_roundtrip():
    fpd = cpn_fixed_points(2, (1, 3))
    back = FixedPointData.from_json(json.loads(json.dumps(fpd.to_json())))
    assert back.points == fpd.points
    assert back.labels == fpd.labels
    assert back.asserted_index == fpd.asserted_index


def test_relation_json_roundtrip():
    rel = build_relation(cpn_fixed_points(2, (1, 3)), 3, 5).primitive()
    back = Relation.from_json(json.loads(json.dumps(rel.to_json())))
    assert back.terms == rel.terms
    assert back.n == rel.n and back.k == rel.k and back.N == rel.N
