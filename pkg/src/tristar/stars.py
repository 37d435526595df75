"""Exact maximum monochromatic stars, double stars and triple stars.

A double star is two stars whose centres x, y are joined by an edge of the
same colour; its vertex set is N_c(x) | N_c(y) (centres included, since each
centre is a neighbour of the other).  A triple star hangs a third star off a
two-edge path u - x - w, with vertex set N_c(u) | N_c(x) | N_c(w).

Orders count the neighbourhood union, not degree sums: in a complete-graph
colour class, common neighbours would be double-counted by d_c(x) + d_c(y).
The degree-sum shortcut is exact only in the bipartite setting and lives in
the bipartite module.

All finders scan every candidate and keep the first maximum under a fixed
tie-break, so results are deterministic and reproducible across runs.
"""
from __future__ import annotations

from dataclasses import dataclass

from .colouring import EdgeColouring, iter_bits


@dataclass(frozen=True)
class DoubleStarWitness:
    colour: int
    centres: tuple[int, int]  # centre edge (x, y), x < y
    order: int
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class TripleStarWitness:
    colour: int
    centres: tuple[int, int, int]  # path (u, x, w): x in the middle, u < w
    order: int
    vertices: tuple[int, ...]


def double_star_order(colouring: EdgeColouring, c: int, x: int, y: int) -> int:
    """|N_c(x) | N_c(y)| for a monochromatic centre edge {x, y}."""
    if x == y:
        raise ValueError(f"centres must differ, got {x} twice")
    if colouring.colour_of(x, y) != c:
        raise ValueError(f"centre edge not in colour: {{{x},{y}}} is not colour {c}")
    masks = colouring.view.masks[c]
    return (masks[x] | masks[y]).bit_count()


def triple_star_order(colouring: EdgeColouring, c: int, u: int, x: int, w: int) -> int:
    """|N_c(u) | N_c(x) | N_c(w)| for a monochromatic two-edge path u - x - w."""
    if u == w:
        raise ValueError(f"outer centres must differ, got {u} twice")
    if colouring.colour_of(x, u) != c:
        raise ValueError(f"path edge not in colour: {{{x},{u}}} is not colour {c}")
    if colouring.colour_of(x, w) != c:
        raise ValueError(f"path edge not in colour: {{{x},{w}}} is not colour {c}")
    masks = colouring.view.masks[c]
    return (masks[u] | masks[x] | masks[w]).bit_count()


def max_double_star(colouring: EdgeColouring) -> DoubleStarWitness:
    """Largest double star over all monochromatic centre edges.

    Ties break to the smallest colour, then lexicographically smallest (x, y).
    """
    masks = colouring.view.masks
    n = colouring.n
    best = -1
    best_c = best_x = best_y = 0
    best_set = 0
    for c in range(1, colouring.m + 1):
        row = masks[c]
        for x in range(n - 1):
            mx = row[x]
            high = mx >> (x + 1)
            while high:
                low = high & -high
                y = x + 1 + low.bit_length() - 1
                high ^= low
                union = mx | row[y]
                order = union.bit_count()
                if order > best:
                    best, best_c, best_x, best_y, best_set = order, c, x, y, union
    if best < 0:
        raise ValueError("colouring has no edges")
    return DoubleStarWitness(best_c, (best_x, best_y), best, tuple(iter_bits(best_set)))


def max_triple_star(colouring: EdgeColouring) -> TripleStarWitness | None:
    """Largest triple star over all monochromatic two-edge paths u - x - w.

    Returns None when no colour class contains a two-edge path (every class
    a matching); that is a legitimate outcome, not an error.  Ties break on
    the smallest (colour, u, x, w) with u < w.
    """
    masks = colouring.view.masks
    n = colouring.n
    best = -1
    best_key = (0, 0, 0, 0)
    best_set = 0
    for c in range(1, colouring.m + 1):
        row = masks[c]
        for x in range(n):
            nb = row[x]
            if nb.bit_count() < 2:
                continue
            hood = list(iter_bits(nb))
            for a in range(len(hood) - 1):
                u = hood[a]
                mu = row[u] | nb
                for b in range(a + 1, len(hood)):
                    w = hood[b]
                    union = mu | row[w]
                    order = union.bit_count()
                    key = (c, u, x, w)
                    if order > best or (order == best and key < best_key):
                        best, best_key, best_set = order, key, union
    if best < 0:
        return None
    c, u, x, w = best_key
    return TripleStarWitness(c, (u, x, w), best, tuple(iter_bits(best_set)))


def max_double_star_order(masks: list[list[int]], n: int, m: int) -> int:
    """Order-only double-star maximum straight from colour masks (hot path)."""
    best = 0
    for c in range(1, m + 1):
        row = masks[c]
        for x in range(n - 1):
            mx = row[x]
            high = mx >> (x + 1)
            while high:
                low = high & -high
                y = x + 1 + low.bit_length() - 1
                high ^= low
                order = (mx | row[y]).bit_count()
                if order > best:
                    best = order
    return best


def max_triple_star_order(masks: list[list[int]], n: int, m: int) -> int:
    """Order-only triple-star maximum straight from colour masks (hot path).

    Returns 0 when no colour admits a two-edge path, mirroring
    max_triple_star's None.
    """
    best = 0
    for c in range(1, m + 1):
        row = masks[c]
        for x in range(n):
            nb = row[x]
            if nb.bit_count() < 2:
                continue
            hood = list(iter_bits(nb))
            for a in range(len(hood) - 1):
                mu = row[hood[a]] | nb
                for b in range(a + 1, len(hood)):
                    order = (mu | row[hood[b]]).bit_count()
                    if order > best:
                        best = order
    return best
