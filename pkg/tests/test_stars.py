"""Exact star finders: hand cases, witness invariants, mask/witness agreement."""
from __future__ import annotations

import random

import pytest

from tristar.colouring import EdgeColouring, edge_count, max_component
from tristar.stars import (double_star_order, max_double_star,
                           max_double_star_order, max_triple_star,
                           max_triple_star_order, triple_star_order)

K4_PROPER = EdgeColouring(4, 3, (1, 2, 3, 3, 2, 1))


def random_colours(rng: random.Random, n: int, m: int) -> EdgeColouring:
    return EdgeColouring(n, m, tuple(rng.randint(1, m) for _ in range(edge_count(n))))


def star_k5() -> EdgeColouring:
    """Colour 1 is the star at vertex 0; colour 2 fills K4 on the leaves."""
    colours = []
    for i in range(4):
        for j in range(i + 1, 5):
            colours.append(1 if i == 0 else 2)
    return EdgeColouring(5, 2, tuple(colours))


# --- single orders -----------------------------------------------------------

def test_double_star_order_counts_the_union():
    c = star_k5()
    assert double_star_order(c, 1, 0, 1) == 5  # N(0) covers everything
    assert double_star_order(c, 2, 1, 2) == 4


def test_double_star_order_rejects_bad_centres():
    c = star_k5()
    with pytest.raises(ValueError, match="centres must differ"):
        double_star_order(c, 1, 2, 2)
    with pytest.raises(ValueError, match="centre edge not in colour"):
        double_star_order(c, 1, 1, 2)


def test_triple_star_order_counts_the_union():
    c = star_k5()
    # path 1 - 0 - 2 in colour 1
    assert triple_star_order(c, 1, 1, 0, 2) == 5
    assert triple_star_order(c, 2, 1, 2, 3) == 4


def test_triple_star_order_rejects_bad_paths():
    c = star_k5()
    with pytest.raises(ValueError, match="outer centres must differ"):
        triple_star_order(c, 1, 1, 0, 1)
    with pytest.raises(ValueError, match="path edge not in colour"):
        triple_star_order(c, 1, 1, 2, 3)


# --- maxima on hand cases ----------------------------------------------------

def test_proper_k4_maxima():
    ds = max_double_star(K4_PROPER)
    assert ds.order == 2
    assert ds.colour == 1 and ds.centres == (0, 1)  # tie-break: first centre edge
    assert max_triple_star(K4_PROPER) is None


def test_constant_k6_maxima():
    c = EdgeColouring(6, 3, (1,) * 15)
    assert max_double_star(c).order == 6
    assert max_triple_star(c).order == 6


def test_star_k5_maxima():
    c = star_k5()
    ds = max_double_star(c)
    assert (ds.colour, ds.centres, ds.order) == (1, (0, 1), 5)
    assert ds.vertices == (0, 1, 2, 3, 4)
    ts = max_triple_star(c)
    assert (ts.colour, ts.centres, ts.order) == (1, (1, 0, 2), 5)


def test_single_edge_graph():
    c = EdgeColouring(2, 1, (1,))
    ds = max_double_star(c)
    assert (ds.order, ds.vertices) == (2, (0, 1))
    assert max_triple_star(c) is None


def test_tie_break_prefers_smaller_colour():
    # both colours are paths of 3 vertices: orders tie at 3
    c = EdgeColouring(4, 2, (1, 1, 2, 2, 1, 2))  # edges: 01->1 02->1 03->2 12->2 13->1 23->2
    ds = max_double_star(c)
    assert ds.colour == 1
    ts = max_triple_star(c)
    assert ts.colour == 1


# --- witness invariants and oracle-free recounts -----------------------------

def test_double_witness_invariants_on_randoms():
    rng = random.Random(2024)
    for _ in range(50):
        n = rng.randint(2, 10)
        m = rng.randint(1, 4)
        c = random_colours(rng, n, m)
        ds = max_double_star(c)
        x, y = ds.centres
        assert x < y
        assert c.colour_of(x, y) == ds.colour
        assert ds.vertices == tuple(sorted(ds.vertices))
        assert len(ds.vertices) == ds.order
        assert x in ds.vertices and y in ds.vertices
        # recount the union by definition
        members = {v for v in range(n)
                   if (v != x and c.colour_of(v, x) == ds.colour)
                   or (v != y and c.colour_of(v, y) == ds.colour)}
        assert members == set(ds.vertices)
        # no centre edge does better
        for i in range(n - 1):
            for j in range(i + 1, n):
                cc = c.colour_of(i, j)
                assert double_star_order(c, cc, i, j) <= ds.order


def test_triple_witness_invariants_on_randoms():
    rng = random.Random(2025)
    for _ in range(50):
        n = rng.randint(3, 10)
        m = rng.randint(1, 4)
        c = random_colours(rng, n, m)
        ts = max_triple_star(c)
        if ts is None:
            # then every colour class is a matching
            for cc in range(1, m + 1):
                assert all(row.bit_count() <= 1 for row in c.view.masks[cc])
            continue
        u, x, w = ts.centres
        assert u < w and x not in (u, w)
        assert c.colour_of(x, u) == ts.colour and c.colour_of(x, w) == ts.colour
        assert len(ts.vertices) == ts.order
        masks = c.view.masks[ts.colour]
        assert masks[u] | masks[x] | masks[w] == sum(1 << v for v in ts.vertices)
        # no other path does better
        for mid in range(n):
            hood = [v for v in range(n) if v != mid and c.colour_of(mid, v) == ts.colour]
            for a in range(len(hood) - 1):
                for b in range(a + 1, len(hood)):
                    assert triple_star_order(c, ts.colour, hood[a], mid, hood[b]) <= ts.order


def test_order_relations_on_randoms():
    rng = random.Random(77)
    for _ in range(60):
        n = rng.randint(3, 10)
        m = rng.randint(1, 4)
        c = random_colours(rng, n, m)
        ds = max_double_star(c)
        ts = max_triple_star(c)
        comp = max_component(c).size
        assert 2 <= ds.order <= n
        assert ds.order <= comp
        if ts is not None:
            assert ts.order <= comp
            assert ts.order >= ds.order or ds.order == 2
        if ds.order >= 3:
            assert ts is not None and ts.order >= ds.order


def test_mask_level_orders_match_witness_level():
    rng = random.Random(501)
    for _ in range(60):
        n = rng.randint(2, 9)
        m = rng.randint(1, 4)
        c = random_colours(rng, n, m)
        masks = c.view.masks
        assert max_double_star_order(masks, n, m) == max_double_star(c).order
        ts = max_triple_star(c)
        assert max_triple_star_order(masks, n, m) == (0 if ts is None else ts.order)
