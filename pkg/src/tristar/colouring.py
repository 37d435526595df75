"""Edge colourings of complete graphs and their per-colour structure.

Vertices are 0-indexed, colours 1-indexed (0 stays free as a sentinel).
Edge colours are stored in row-major upper-triangular order:
{0,1}, {0,2}, ..., {0,n-1}, {1,2}, ..., {n-2,n-1}.

Per-colour neighbourhoods are Python ints used as bit vectors, so unions
and order counts are word-parallel (`|` and `int.bit_count`).

The module also houses the registry of known guaranteed orders for
monochromatic structures; every bound is a fractions.Fraction so
comparisons never suffer float noise.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import ColouringFormatError

Q = Fraction


def edge_count(n: int) -> int:
    return n * (n - 1) // 2


def edge_index(n: int, i: int, j: int) -> int:
    """Position of edge {i,j} in row-major upper-triangular order."""
    if i > j:
        i, j = j, i
    if i == j or i < 0 or j >= n:
        raise ValueError(f"not an edge of K_{n}: ({i}, {j})")
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


def iter_bits(mask: int):
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class EdgeColouring:
    """A colour for every edge of K_n, with colour labels 1..m.

    Instances are plain immutable records: the constructor accepts malformed
    data so that `validate` can report problems instead of crashing.  All
    other operations assume a colouring that `validate` accepts.
    """

    n: int
    m: int
    colours: tuple[int, ...]

    def colour_of(self, i: int, j: int) -> int:
        return self.colours[edge_index(self.n, i, j)]

    @cached_property
    def view(self) -> "ColourClassView":
        return ColourClassView(self)


class ColourClassView:
    """Per-colour adjacency bit masks: bit v of masks[c][x] is set iff {x,v} has colour c."""

    def __init__(self, colouring: EdgeColouring):
        n, m = colouring.n, colouring.m
        masks = [[0] * n for _ in range(m + 1)]
        cols = colouring.colours
        k = 0
        for i in range(n - 1):
            one = 1 << i
            for j in range(i + 1, n):
                row = masks[cols[k]]
                row[i] |= 1 << j
                row[j] |= one
                k += 1
        self.n = n
        self.m = m
        self.masks = masks

    def neighbours(self, c: int, v: int) -> int:
        return self.masks[c][v]

    def colour_degree(self, c: int, v: int) -> int:
        return self.masks[c][v].bit_count()


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def validate(colouring: EdgeColouring) -> ValidationReport:
    """Collect every invariant violation; an empty report means the colouring is usable."""
    problems = []
    n, m = colouring.n, colouring.m
    if n < 2:
        problems.append("n >= 2 required")
    if m < 1:
        problems.append("m >= 1 required")
    want = edge_count(n) if n >= 2 else 0
    have = len(colouring.colours)
    if have != want:
        problems.append(f"missing or surplus edge colours: expected {want}, found {have}")
    for k, c in enumerate(colouring.colours[: min(have, want)]):
        if not isinstance(c, int) or not 1 <= c <= m:
            problems.append(f"label out of range at edge position {k}: {c!r}")
    return ValidationReport(tuple(problems))


@dataclass(frozen=True)
class LocalityReport:
    """Colours incident to each vertex, and the maximum count over vertices."""

    incident: tuple[frozenset[int], ...]
    locality: int

    def is_local(self, r: int) -> bool:
        return self.locality <= r

    def worst_vertex(self) -> int:
        """Smallest vertex attaining the maximum number of incident colours."""
        for v, seen in enumerate(self.incident):
            if len(seen) == self.locality:
                return v
        raise ValueError("empty report")


def locality(colouring: EdgeColouring) -> LocalityReport:
    n = colouring.n
    incident = [set() for _ in range(n)]
    k = 0
    cols = colouring.colours
    for i in range(n - 1):
        seen_i = incident[i]
        for j in range(i + 1, n):
            c = cols[k]
            k += 1
            seen_i.add(c)
            incident[j].add(c)
    return LocalityReport(tuple(frozenset(s) for s in incident),
                          max(len(s) for s in incident))


def colour_components(colouring: EdgeColouring, c: int) -> list[list[int]]:
    """Connected components of the colour-c subgraph, isolated vertices excluded.

    Components are listed by smallest member, each sorted ascending.
    """
    if not 1 <= c <= colouring.m:
        raise ValueError(f"colour out of range: {c}")
    masks = colouring.view.masks[c]
    unseen = 0
    for v in range(colouring.n):
        if masks[v]:
            unseen |= 1 << v
    components = []
    while unseen:
        frontier = unseen & -unseen
        comp = 0
        while frontier:
            comp |= frontier
            grow = 0
            for v in iter_bits(frontier):
                grow |= masks[v]
            frontier = grow & ~comp
        components.append(list(iter_bits(comp)))
        unseen &= ~comp
    return components


@dataclass(frozen=True)
class ComponentWitness:
    colour: int
    size: int
    vertices: tuple[int, ...]


def max_component(colouring: EdgeColouring) -> ComponentWitness:
    """Largest monochromatic component over all colours.

    Ties break to the smallest colour, then the smallest minimum vertex.
    """
    best = None
    for c in range(1, colouring.m + 1):
        for comp in colour_components(colouring, c):
            key = (-len(comp), c, comp[0])
            if best is None or key < best[0]:
                best = (key, c, comp)
    if best is None:
        raise ValueError("colouring has no edges")
    _, c, comp = best
    return ComponentWitness(c, len(comp), tuple(comp))


def subgraph_diameter(colouring: EdgeColouring, c: int, vertices) -> int | None:
    """Diameter of the colour-c subgraph induced on `vertices`; None when disconnected."""
    if not 1 <= c <= colouring.m:
        raise ValueError(f"colour out of range: {c}")
    verts = sorted(set(vertices))
    if not verts:
        raise ValueError("vertex set must be nonempty")
    if verts[0] < 0 or verts[-1] >= colouring.n:
        raise ValueError("vertex out of range")
    masks = colouring.view.masks[c]
    inside = 0
    for v in verts:
        inside |= 1 << v
    diameter = 0
    for v in verts:
        seen = 1 << v
        frontier = seen
        dist = 0
        while True:
            grow = 0
            for u in iter_bits(frontier):
                grow |= masks[u]
            frontier = grow & inside & ~seen
            if not frontier:
                break
            seen |= frontier
            dist += 1
        if seen != inside:
            return None
        if dist > diameter:
            diameter = dist
    return diameter


_TOKEN = re.compile(r"\S+")


def parse_colouring(text: str) -> EdgeColouring:
    """Parse the colouring text format.

    Lines starting with '#' (and blank lines) are ignored.  The first data
    line must be "n m"; the following tokens are the C(n,2) edge colours in
    row-major upper-triangular order, split across lines however convenient.
    Raises ColouringFormatError with 1-based line/column positions.
    """
    header = None
    values: list[int] = []
    need = 0
    lineno = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.lstrip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = list(_TOKEN.finditer(line))
        if header is None:
            if len(tokens) != 2:
                raise ColouringFormatError("header must be exactly 'n m'", lineno, tokens[0].start() + 1)
            pair = []
            for tok in tokens:
                try:
                    value = int(tok.group())
                except ValueError:
                    raise ColouringFormatError(f"header value {tok.group()!r} is not an integer",
                                               lineno, tok.start() + 1) from None
                if value < 0:
                    raise ColouringFormatError("header values must be nonnegative", lineno, tok.start() + 1)
                pair.append(value)
            header = (pair[0], pair[1])
            need = edge_count(header[0])
            continue
        for tok in tokens:
            if len(values) >= need:
                raise ColouringFormatError(f"surplus token {tok.group()!r}: expected only {need} edge colours",
                                           lineno, tok.start() + 1)
            try:
                values.append(int(tok.group()))
            except ValueError:
                raise ColouringFormatError(f"edge colour {tok.group()!r} is not an integer",
                                           lineno, tok.start() + 1) from None
    if header is None:
        raise ColouringFormatError("empty input: missing 'n m' header", max(lineno, 1), 1)
    if len(values) != need:
        raise ColouringFormatError(f"expected {need} edge colours, found {len(values)}", lineno, 1)
    return EdgeColouring(header[0], header[1], tuple(values))


def format_colouring(colouring: EdgeColouring, comments: tuple[str, ...] = ()) -> str:
    """Canonical writer: header line then one line per row of the upper triangle."""
    lines = [f"# {c}" if c else "#" for c in comments]
    lines.append(f"{colouring.n} {colouring.m}")
    k = 0
    for i in range(colouring.n - 1):
        width = colouring.n - 1 - i
        lines.append(" ".join(str(c) for c in colouring.colours[k:k + width]))
        k += width
    return "\n".join(lines) + "\n"


# --- known guaranteed orders -------------------------------------------------

def component_bound(n: int, r: int) -> Q:
    """Monochromatic component floor n/(r-1) for r-colourings, r >= 2."""
    _check_nr(n, r)
    if r < 2:
        raise ValueError(f"component floor needs r >= 2, got r={r}")
    return Q(n, r - 1)


def no_affine_component_bound(n: int, r: int) -> Q:
    """Improved component floor n/(r-1-1/(r-1)), r >= 3.

    Applies only when no affine plane of order r-1 exists; the registry
    carries that proviso in the entry note.
    """
    _check_nr(n, r)
    if r < 3:
        raise ValueError(f"this floor needs r >= 3, got r={r}")
    return Q(n) / (Q(r - 1) - Q(1, r - 1))


def triple_star_bound(n: int, r: int) -> Q:
    """Guaranteed triple-star order n/(r-1) in any r-colouring, r >= 3.

    False for r = 2, where the guaranteed value is 7n/8 instead.
    """
    _check_nr(n, r)
    if r < 3:
        raise ValueError(f"triple-star floor needs r >= 3, got r={r}")
    return Q(n, r - 1)


def triple_star_bound_local(n: int, r: int) -> Q:
    """Triple-star floor rn/(r^2-r+1) under a local r-colouring, r >= 3."""
    _check_nr(n, r)
    if r < 3:
        raise ValueError(f"local triple-star floor needs r >= 3, got r={r}")
    return Q(r * n, r * r - r + 1)


def double_star_bound(n: int, r: int) -> Q:
    """Best known double-star floor (n(r+1)+r-1)/r^2 for r >= 3.

    Whether n/(r-1) itself is attainable by a double star is open.
    """
    _check_nr(n, r)
    if r < 3:
        raise ValueError(f"double-star floor needs r >= 3, got r={r}")
    return Q(n * (r + 1) + r - 1, r * r)


def double_star_bound_local(n: int, r: int) -> Q:
    """Double-star floor ((r+1)n+r-1)/(r^2+1) under a local r-colouring, r >= 2."""
    _check_nr(n, r)
    if r < 2:
        raise ValueError(f"local double-star floor needs r >= 2, got r={r}")
    return Q((r + 1) * n + r - 1, r * r + 1)


def local_component_bound(n: int, r: int) -> Q:
    """Component floor rn/(r^2-r+1) under a local r-colouring, r >= 2."""
    _check_nr(n, r)
    if r < 2:
        raise ValueError(f"local component floor needs r >= 2, got r={r}")
    return Q(r * n, r * r - r + 1)


@dataclass(frozen=True)
class BoundEntry:
    name: str
    observable: str  # which analysis figure it constrains: component | double | triple
    value: Q
    note: str
    conditional: bool = False  # True: holds only under the side condition in the note


def known_bounds(n: int, r: int, local: bool = False) -> list[BoundEntry]:
    """Registry of known floors for (n, r), global or local colourings.

    Purely informational: analysis reports compare observed maxima against
    these, exact rationals throughout.  Conditional entries hold only under
    the side condition stated in their note and are never asserted.
    """
    _check_nr(n, r)
    entries: list[BoundEntry] = []
    if r == 1:
        entries.append(BoundEntry("component", "component", Q(n),
                                  "one colour covers every edge"))
        return entries
    if not local:
        entries.append(BoundEntry("component", "component", component_bound(n, r),
                                  "largest monochromatic component, any r-colouring"))
        if r >= 3:
            entries.append(BoundEntry("component-no-affine", "component",
                                      no_affine_component_bound(n, r),
                                      "holds only when no affine plane of order r-1 exists",
                                      conditional=True))
            entries.append(BoundEntry("double-star", "double", double_star_bound(n, r),
                                      "best known double-star floor for r >= 3"))
            entries.append(BoundEntry("triple-star", "triple", triple_star_bound(n, r),
                                      "triple star matching the component floor"))
        else:
            entries.append(BoundEntry("double-star", "double", Q(3 * n, 4),
                                      "two-colour double star"))
            entries.append(BoundEntry("triple-star", "triple", Q(7 * n, 8),
                                      "two-colour triple star"))
    else:
        entries.append(BoundEntry("component-local", "component", local_component_bound(n, r),
                                  "largest component when each vertex meets at most r colours"))
        entries.append(BoundEntry("double-star-local", "double", double_star_bound_local(n, r),
                                  "double star under the same locality limit"))
        if r == 2:
            entries.append(BoundEntry("double-star-local-two", "double", Q(2 * n, 3),
                                      "sharper two-colour local double star"))
        if r >= 3:
            entries.append(BoundEntry("triple-star-local", "triple", triple_star_bound_local(n, r),
                                      "triple star matching the local component floor"))
    return entries


def proven_floor(n: int, r: int, kind: str) -> Q | None:
    """The floor that exhaustive checks and searches may hard-assert, or None.

    Two-colour double/triple values are deliberately excluded: the cited
    formulas carry no small-n qualification, so small-scale runs report them
    without asserting.
    """
    _check_nr(n, r)
    if kind == "component":
        return component_bound(n, r) if r >= 2 else None
    if kind == "triple":
        return triple_star_bound(n, r) if r >= 3 else None
    if kind == "double":
        return double_star_bound(n, r) if r >= 3 else None
    raise ValueError(f"unknown objective kind: {kind!r}")


def _check_nr(n: int, r: int) -> None:
    if n < 2:
        raise ValueError(f"n >= 2 required, got n={n}")
    if r < 1:
        raise ValueError(f"r >= 1 required, got r={r}")
