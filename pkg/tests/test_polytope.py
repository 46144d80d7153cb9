import random

import pytest

from genus_forge.polytope import (FHVectors, affine_length, betti_pattern,
                                  combinatorial_index, cube_edges,
                                  cube_f_vector, f_from_h, h_divisibility,
                                  h_from_f, product_f_vector, simplex_edges,
                                  simplex_f_vector)


def test_fh_transform_roundtrip():
    rng = random.Random(11)
    for _ in range(50):
        n = rng.randint(1, 7)
        f = [rng.randint(0, 40) for _ in range(n)] + [1]
        assert f_from_h(h_from_f(f, n), n) == f


def test_standard_h_vectors():
    assert FHVectors(3, simplex_f_vector(3)).h == [1, 1, 1, 1]
    assert FHVectors(3, cube_f_vector(3)).h == [1, 3, 3, 1]
    assert FHVectors(2, cube_f_vector(2)).h == [1, 2, 1]
    assert FHVectors(1, simplex_f_vector(1)).h == [1, 1]


def test_f_vector_validation():
    with pytest.raises(ValueError):
        FHVectors(2, (3, 3))          # wrong length
    with pytest.raises(ValueError):
        FHVectors(2, (3, 3, 2))       # top entry must be 1
    with pytest.raises(ValueError):
        FHVectors(2, (-1, 3, 1))


def test_product_kunneth():
    f = product_f_vector(simplex_f_vector(2), simplex_f_vector(2))
    assert f == [9, 18, 15, 6, 1]
    assert FHVectors(4, f).h == [1, 2, 3, 2, 1]  # convolution of (1,1,1) with itself


def test_palindromic_is_reported_not_assumed():
    fh = FHVectors(2, (5, 5, 1))
    assert fh.palindromic() == (fh.h == fh.h[::-1])
    desc = fh.describe()
    assert set(desc) == {"n", "f", "h", "palindromic"}


def test_affine_length():
    assert affine_length((0, 0), (3, 6)) == 3
    assert affine_length((1,), (3,)) == 2
    assert affine_length((2, 1, 7), (2, 1, 2)) == 5
    with pytest.raises(ValueError):
        affine_length((1, 1), (1, 1))
    with pytest.raises(ValueError):
        affine_length((1,), (1, 2))


def test_combinatorial_index():
    assert combinatorial_index([((0, 0), (3, 6)), ((0, 0), (9, 0))]) == 3
    with pytest.raises(ValueError):
        combinatorial_index([])


def test_dilated_simplex_index():
    assert len(simplex_edges(2)) == 3
    for n in (1, 2, 3):
        for k in (1, 2, 5):
            assert combinatorial_index(simplex_edges(n, dilation=k)) == k


def test_cube_edges_and_index():
    edges = cube_edges(2)
    assert len(edges) == 4
    assert combinatorial_index(edges) == 1
    assert combinatorial_index(cube_edges(3, dilation=4)) == 4


def test_h_divisibility():
    report = h_divisibility((1, 2, 2, 1), 2)
    assert report == {"divisible": True, "quotient": [1, 1, 1]}
    report = h_divisibility((1, 1, 1, 1), 4)
    assert report == {"divisible": True, "quotient": [1]}
    report = h_divisibility((1, 3, 1), 2)
    assert report == {"divisible": False, "remainder": [-1]}
    with pytest.raises(ValueError):
        h_divisibility((1, 1), 0)


def test_betti_pattern_cases():
    assert betti_pattern(4, 5, (1, 1, 1, 1, 1)) == {"ok": True, "case": 1,
                                                    "m": None}
    assert betti_pattern(4, 4, (1, 2, 2, 2, 1)) == {"ok": True, "case": 2,
                                                    "m": None}
    assert betti_pattern(4, 3, (1, 3, 4, 3, 1)) == {"ok": True, "case": 3,
                                                    "m": 2}
    assert betti_pattern(4, 2, (1, 3, 4, 3, 1)) == {"ok": True, "case": 4,
                                                    "m": 2}
    assert betti_pattern(5, 3, (1, 3, 5, 5, 3, 1)) == {"ok": True, "case": 4,
                                                       "m": 2}


def test_betti_pattern_short_quotient():
    # with k0 = 1 the all-ones factor is trivial and the template is the
    # whole answer
    assert betti_pattern(2, 1, (1, 5, 1)) == {"ok": True, "case": 3, "m": 5}


def test_betti_pattern_mismatch_witness():
    report = betti_pattern(4, 3, (1, 3, 5, 3, 1))
    assert report["ok"] is False and report["case"] == 3
    assert report["witness"]["expected"] == [1, 3, 4, 3, 1]
    assert report["witness"]["got"] == [1, 3, 5, 3, 1]


def test_betti_pattern_out_of_range_k0():
    report = betti_pattern(3, 5, (1, 1, 1, 1))
    assert report["ok"] is False and "exceeds" in report["witness"]
    report = betti_pattern(6, 2, (1, 1, 1, 1, 1, 1, 1))
    assert report["ok"] is None and "note" in report


def test_betti_pattern_preconditions():
    with pytest.raises(ValueError):
        betti_pattern(3, 2, (1, 1, 1))            # wrong length
    with pytest.raises(ValueError):
        betti_pattern(3, 2, (1, 1, 1, 2))          # must end in 1
    with pytest.raises(ValueError):
        betti_pattern(3, 2, (1, 2, 3, 1))          # must be palindromic
