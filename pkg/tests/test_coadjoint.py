import json
from fractions import Fraction

import pytest

from genus_forge.coadjoint import (OrbitSpec, RootSystem, WeylElement,
                                   cpn_orbit, crosscheck_qI, divided_difference,
                                   divided_difference_word, grassmannian_orbit,
                                   orbit_fixed_points, q_I_via_divided_diff,
                                   weyl_group)
from genus_forge.localization import cpn_fixed_points, relation_coefficient
from genus_forge.sparsepoly import SparsePoly
from genus_forge.symfunc import monomial_sym_eval


def _poly_degree(poly):
    return max((sum(exp) for exp in poly.terms), default=0)


def test_group_orders():
    assert len(weyl_group(RootSystem("A", 1))) == 2
    assert len(weyl_group(RootSystem("A", 2))) == 6
    assert len(weyl_group(RootSystem("A", 3))) == 24
    assert len(weyl_group(RootSystem("B", 2))) == 8
    assert len(weyl_group(RootSystem("B", 3))) == 48


def test_root_counts():
    assert len(RootSystem("A", 2).positive_roots()) == 3
    assert len(RootSystem("B", 2).positive_roots()) == 4
    assert len(RootSystem("B", 3).positive_roots()) == 9


def test_root_system_validation():
    with pytest.raises(ValueError):
        RootSystem("C", 2)
    with pytest.raises(ValueError):
        RootSystem("A", 0)


def test_action_is_homomorphism():
    rs = RootSystem("B", 2)
    P = (SparsePoly.variable("x1", rs.variables()) ** 2
         + 3 * SparsePoly.variable("x2", rs.variables()))
    group = weyl_group(rs)
    for v in group[:4]:
        for w in group[:4]:
            assert v.compose(w).act(P) == v.act(w.act(P))


def test_word_recovery_roundtrip():
    rs = RootSystem("B", 2)
    for el in weyl_group(rs):
        rebuilt = WeylElement(rs, el.images)   # forces word recovery
        assert len(rebuilt.word) == el.length()
        acc = WeylElement.identity(rs)
        for j in rebuilt.word:
            acc = acc.compose(WeylElement.simple(rs, j))
        assert acc == el


def test_divided_difference_squares_to_zero():
    rs = RootSystem("A", 2)
    P = SparsePoly.variable("x1", rs.variables()) ** 3
    once = divided_difference(rs, 1, P)
    assert divided_difference(rs, 1, once) == SparsePoly.zero(rs.variables())


def test_divided_difference_braid_independence():
    # s1 s2 s1 == s2 s1 s2 in A2, so the composite operators must agree
    rs = RootSystem("A", 2)
    a = WeylElement.simple(rs, 1).compose(
        WeylElement.simple(rs, 2)).compose(WeylElement.simple(rs, 1))
    b = WeylElement.simple(rs, 2).compose(
        WeylElement.simple(rs, 1)).compose(WeylElement.simple(rs, 2))
    assert a == b
    x1 = SparsePoly.variable("x1", rs.variables())
    x2 = SparsePoly.variable("x2", rs.variables())
    P = x1 ** 4 + x1 ** 2 * x2 ** 2
    assert (divided_difference_word(rs, (1, 2, 1), P)
            == divided_difference_word(rs, (2, 1, 2), P))


def test_divided_difference_nonreduced_word_annihilates():
    rs = RootSystem("A", 2)
    P = SparsePoly.variable("x1", rs.variables()) ** 5
    assert (divided_difference_word(rs, (1, 1), P)
            == SparsePoly.zero(rs.variables()))


def test_cpn_orbit_shape():
    orbit = cpn_orbit(3)
    assert orbit.rs == RootSystem("A", 3)
    assert orbit.J == (2, 3)
    assert orbit.n == 3
    assert len(orbit.cosets) == 4
    assert orbit.longest_rep.word == (3, 2, 1)


def test_grassmannian_orbit_shape():
    g2 = grassmannian_orbit(2)
    assert g2.rs == RootSystem("B", 2)
    assert g2.n == 3 and len(g2.cosets) == 4
    assert g2.longest_rep.word == (1, 2, 1)
    g3 = grassmannian_orbit(3)
    assert g3.n == 5 and len(g3.cosets) == 6
    assert g3.longest_rep.word == (1, 2, 3, 2, 1)


def test_orbit_J_validation():
    rs = RootSystem("A", 2)
    with pytest.raises(ValueError):
        OrbitSpec(rs, [0])
    with pytest.raises(ValueError):
        OrbitSpec(rs, [3])


def test_q_degree_law():
    orbit = cpn_orbit(2)
    # |I| < n: the divided-difference operator kills the polynomial
    assert q_I_via_divided_diff(orbit, (1,)) == SparsePoly.zero(
        orbit.rs.variables())
    # |I| = n: constants (Chern-number combinations)
    vs = orbit.rs.variables()
    assert q_I_via_divided_diff(orbit, (2,)) == SparsePoly.constant(vs, 3)
    assert q_I_via_divided_diff(orbit, (1, 1)) == SparsePoly.constant(vs, 3)
    # |I| > n: homogeneous of degree |I| - n
    q31 = q_I_via_divided_diff(orbit, (3, 1))
    assert _poly_degree(q31) == 2


def test_cp1_q_values():
    orbit = cpn_orbit(1)
    vs = orbit.rs.variables()
    x1 = SparsePoly.variable("x1", vs)
    x2 = SparsePoly.variable("x2", vs)
    assert q_I_via_divided_diff(orbit, (1,)) == SparsePoly.constant(vs, 2)
    assert q_I_via_divided_diff(orbit, (2,)) == SparsePoly.zero(vs)
    assert q_I_via_divided_diff(orbit, (3,)) == 2 * (x1 - x2) ** 2


def test_grassmannian_fixed_points_pinned():
    fpd = orbit_fixed_points(grassmannian_orbit(2), (5, 2))
    assert fpd.points == [(3, 7, 5), (-3, 7, 2), (-7, 3, -2), (-7, -3, -5)]


def test_cpn_orbit_matches_projective_space_model():
    for n, ws in ((1, (3,)), (2, (1, 4)), (3, (2, 3, 7))):
        orbit = cpn_orbit(n)
        xi = (0,) + tuple(-w for w in ws)
        from_orbit = orbit_fixed_points(orbit, xi)
        model = cpn_fixed_points(n, ws)
        assert (sorted(tuple(sorted(p)) for p in from_orbit.points)
                == sorted(tuple(sorted(p)) for p in model.points))


def test_crosscheck_grid():
    cases = [(cpn_orbit(1), (0, -3)), (cpn_orbit(2), (1, 5, -3)),
             (grassmannian_orbit(2), (5, 2))]
    for orbit, xi in cases:
        for k in range(orbit.n, orbit.n + 3):
            from genus_forge.symfunc import partitions_at_most
            for I in partitions_at_most(k, orbit.n):
                report = crosscheck_qI(orbit, I, xi)
                assert report["ok"], report


def test_wrong_composition_order_fails_crosscheck():
    # applying the divided differences leftmost-first is a genuine mutation:
    # it disagrees with localization
    orbit = cpn_orbit(2)
    xi = (1, 5, -3)
    I = (3, 1)
    values = [orbit.rs.root_polynomial(r) for r in orbit.complement_roots]
    poly = monomial_sym_eval(I, values)
    for j in orbit.longest_rep.word:               # forward, not reversed
        poly = divided_difference(orbit.rs, j, poly)
    algebraic = poly.evaluate([Fraction(x) for x in xi])
    localized = relation_coefficient(orbit_fixed_points(orbit, xi), I)
    assert algebraic != localized


def test_non_generic_direction_raises():
    with pytest.raises(ValueError, match="non-generic circle direction"):
        orbit_fixed_points(cpn_orbit(2), (1, 1, 5))
    with pytest.raises(ValueError, match="non-generic circle direction"):
        orbit_fixed_points(grassmannian_orbit(2), (1, 0))


def test_direction_arity_check():
    with pytest.raises(ValueError, match="coordinates"):
        orbit_fixed_points(cpn_orbit(2), (1, 2))


def test_orbit_json_roundtrip():
    for orbit in (cpn_orbit(2), grassmannian_orbit(3)):
        data = json.loads(json.dumps(orbit.to_json()))
        back = OrbitSpec.from_json(data)
        assert back.rs == orbit.rs
        assert back.J == orbit.J
        assert back.longest_rep == orbit.longest_rep


def test_b2_weights_are_integral():
    fpd = orbit_fixed_points(grassmannian_orbit(2), (3, 1))
    for I in ((3,), (2, 1), (1, 1, 1), (4,)):
        value = relation_coefficient(fpd, I)
        assert value.denominator == 1
