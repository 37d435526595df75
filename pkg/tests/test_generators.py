"""Extremal plane constructions and the random/constant baselines."""
from __future__ import annotations

import pytest

from tristar.colouring import (colour_components, locality, max_component,
                               validate)
from tristar.generators import (affine_colouring, constant_colouring,
                                line_through, projective_local_colouring,
                                projective_points, random_colouring)
from tristar.stars import max_double_star, max_triple_star


# --- affine ------------------------------------------------------------------

def test_affine_q2_mult1_is_the_proper_k4():
    c = affine_colouring(2, 1)
    assert (c.n, c.m) == (4, 3)
    assert validate(c).ok
    assert max_double_star(c).order == 2
    assert max_triple_star(c) is None


def test_affine_q2_mult2_components():
    c = affine_colouring(2, 2)
    assert (c.n, c.m) == (8, 3)
    for colour in range(1, 4):
        sizes = [len(comp) for comp in colour_components(c, colour)]
        assert sizes == [4, 4]  # q components of mult*q vertices each
    assert max_component(c).size == 4
    assert max_triple_star(c).order == 4


def test_affine_q3_mult1_is_disjoint_triangles():
    c = affine_colouring(3, 1)
    assert (c.n, c.m) == (9, 4)
    for colour in range(1, 5):
        comps = colour_components(c, colour)
        assert [len(comp) for comp in comps] == [3, 3, 3]
        for comp in comps:  # three mutually joined vertices: a triangle
            a, b, d = comp
            assert c.colour_of(a, b) == c.colour_of(a, d) == c.colour_of(b, d) == colour
    assert max_component(c).size == 3
    assert max_triple_star(c).order == 3


def test_affine_components_scale_with_mult():
    for q, mult in ((2, 3), (3, 2), (5, 1)):
        c = affine_colouring(q, mult)
        assert (c.n, c.m) == (mult * q * q, q + 1)
        for colour in range(1, q + 2):
            sizes = [len(comp) for comp in colour_components(c, colour)]
            assert sizes == [mult * q] * q


def test_affine_rejects_bad_parameters():
    with pytest.raises(ValueError, match="must be prime, got 4 = 2 \\* 2"):
        affine_colouring(4, 1)
    with pytest.raises(ValueError, match="prime >= 2"):
        affine_colouring(1, 1)
    with pytest.raises(ValueError, match="mult must be >= 1"):
        affine_colouring(2, 0)
    with pytest.raises(ValueError, match="refusing to materialise"):
        affine_colouring(47, 1)  # 47^2 = 2209 vertices, over the dense-model cap


# --- projective --------------------------------------------------------------

def test_projective_points_are_distinct_normalised():
    for q in (2, 3, 5):
        pts = projective_points(q)
        assert len(pts) == q * q + q + 1
        assert len(set(pts)) == len(pts)
        for p in pts:
            first = next(x for x in p if x)
            assert first == 1


def test_line_through_contains_both_points():
    q = 3
    pts = projective_points(q)
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            line = line_through(pts[i], pts[j], q)
            for p in (pts[i], pts[j]):
                assert sum(a * b for a, b in zip(line, p)) % q == 0


def test_fano_colouring_shape():
    c = projective_local_colouring(2, 1)
    assert (c.n, c.m) == (7, 7)
    report = locality(c)
    assert report.locality == 3
    assert all(len(seen) == 3 for seen in report.incident)  # exactly q+1 everywhere
    for colour in range(1, 8):
        comps = colour_components(c, colour)
        assert [len(comp) for comp in comps] == [3]
    assert max_component(c).size == 3
    assert max_triple_star(c).order == 3


def test_fano_blowups_scale_components():
    for mult in (2, 3):
        c = projective_local_colouring(2, mult)
        assert c.n == 7 * mult
        assert locality(c).locality == 3
        for colour in range(1, 8):
            assert [len(x) for x in colour_components(c, colour)] == [3 * mult]
        assert max_component(c).size == 3 * mult


def test_projective_q3_components():
    c = projective_local_colouring(3, 1)
    assert (c.n, c.m) == (13, 13)
    assert locality(c).locality == 4
    for colour in range(1, 14):
        assert [len(x) for x in colour_components(c, colour)] == [4]
    assert max_component(c).size == 4


def test_projective_rejects_non_prime():
    with pytest.raises(ValueError, match="must be prime"):
        projective_local_colouring(6, 1)


# --- random and constant -----------------------------------------------------

def test_random_colouring_deterministic_per_seed():
    a = random_colouring(5, 3, seed=1)
    b = random_colouring(5, 3, seed=1)
    assert a == b
    assert random_colouring(5, 3, seed=2) != a
    assert validate(a).ok


def test_random_colouring_single_edge():
    c = random_colouring(2, 1, seed=9)
    assert c.colours == (1,)


def test_random_colouring_uses_whole_range():
    c = random_colouring(30, 4, seed=3)
    assert set(c.colours) == {1, 2, 3, 4}


def test_random_colouring_rejects_bad_sizes():
    with pytest.raises(ValueError, match="n >= 2"):
        random_colouring(1, 2, seed=0)
    with pytest.raises(ValueError, match="r >= 1"):
        random_colouring(4, 0, seed=0)
    with pytest.raises(ValueError, match="refusing to materialise"):
        random_colouring(2001, 2, seed=0)


def test_constant_colouring():
    c = constant_colouring(5, 3)
    assert (c.n, c.m) == (5, 3)
    assert set(c.colours) == {1}
    assert max_component(c).size == 5
    assert validate(c).ok
    assert constant_colouring(2, 1).colours == (1,)
