"""Ground truth at desk scale.

Definition-chasing brute-force star finders (no shared scanning code with
the fast module), canonical enumeration of colourings up to colour
relabelling, and the exhaustive small-n theorem checks.

Canonical enumeration uses restricted-growth strings over the edge list in
row-major order: the first edge gets colour 1 and colour j+1 may first
appear only after colour j, so each colour-relabelling class shows up
exactly once.  Every star or component order is invariant under
relabelling, which is what makes the quotient sound for these checks.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from multiprocessing import Pool
from typing import Callable, Iterator

from .colouring import EdgeColouring, proven_floor
from .errors import BudgetExceededError, TheoremViolation
from .prover import prove_global, verify_certificate
from .stars import (DoubleStarWitness, TripleStarWitness,
                    max_double_star_order, max_triple_star_order)

Q = Fraction

_VIOLATION_SAMPLE_CAP = 5


def brute_max_double_star(colouring: EdgeColouring) -> DoubleStarWitness:
    """Definition-based maximum double star: scan every centre edge, recount members.

    Same tie-break as the fast finder (smallest colour, then centres), so
    results are comparable witness-for-witness, but the scan works purely
    by re-reading edge colours.
    """
    n = colouring.n
    best = None
    for c in range(1, colouring.m + 1):
        for x in range(n - 1):
            for y in range(x + 1, n):
                if colouring.colour_of(x, y) != c:
                    continue
                members = [v for v in range(n)
                           if (v != x and colouring.colour_of(v, x) == c)
                           or (v != y and colouring.colour_of(v, y) == c)]
                if best is None or len(members) > best.order:
                    best = DoubleStarWitness(c, (x, y), len(members), tuple(members))
    if best is None:
        raise ValueError("colouring has no edges")
    return best


def brute_max_triple_star(colouring: EdgeColouring) -> TripleStarWitness | None:
    """Definition-based maximum triple star; None when no class has a 2-edge path."""
    n = colouring.n
    best = None
    best_key = (0, 0, 0, 0)
    for c in range(1, colouring.m + 1):
        for x in range(n):
            for u in range(n):
                if u == x or colouring.colour_of(x, u) != c:
                    continue
                for w in range(u + 1, n):
                    if w == x or colouring.colour_of(x, w) != c:
                        continue
                    members = [v for v in range(n)
                               if (v != u and colouring.colour_of(v, u) == c)
                               or (v != x and colouring.colour_of(v, x) == c)
                               or (v != w and colouring.colour_of(v, w) == c)]
                    key = (c, u, x, w)
                    if (best is None or len(members) > best.order
                            or (len(members) == best.order and key < best_key)):
                        best = TripleStarWitness(c, (u, x, w), len(members), tuple(members))
                        best_key = key
    return best


# --- enumeration -------------------------------------------------------------

@dataclass(frozen=True)
class EnumerationSpec:
    n: int
    r: int
    canonical: bool = True
    budget: int | None = None
    threads: int = 1


def canonical_count(n: int, r: int) -> int:
    """Closed-form count of restricted-growth strings with at most r symbols.

    Sum over j of the Stirling partition numbers S(C(n,2), j), j = 1..r.
    """
    length = n * (n - 1) // 2
    if length < 1 or r < 1:
        raise ValueError("need n >= 2 and r >= 1")
    row = [1] + [0] * r  # S(0, j)
    for _ in range(length):
        nxt = [0] * (r + 1)
        for j in range(1, r + 1):
            nxt[j] = row[j - 1] + j * row[j]
        row = nxt
    return sum(row[1:])


def _iter_rgs(length: int, r: int, prefix: tuple[int, ...] = ()) -> Iterator[list[int]]:
    """All restricted-growth strings of the given length extending `prefix`.

    Yields one reused buffer in lexicographic order; callers must copy
    anything they keep.
    """
    if length < 1 or r < 1:
        raise ValueError("need length >= 1 and r >= 1")
    if len(prefix) > length:
        raise ValueError("prefix longer than the string")
    a = list(prefix) + [1] * (length - len(prefix))
    top = [0] * (length + 1)  # top[i] = max of a[:i]
    for i, v in enumerate(prefix):
        if not 1 <= v <= min(r, top[i] + 1):
            raise ValueError(f"prefix not restricted-growth at position {i}: {v}")
        top[i + 1] = v if v > top[i] else top[i]
    for i in range(len(prefix), length):
        top[i + 1] = top[i] if top[i] >= 1 else 1
    start = len(prefix)
    while True:
        yield a
        i = length - 1
        while i >= start:
            cap = top[i] + 1
            if cap > r:
                cap = r
            if a[i] < cap:
                a[i] += 1
                top[i + 1] = a[i] if a[i] > top[i] else top[i]
                for j in range(i + 1, length):
                    a[j] = 1
                    top[j + 1] = top[j]
                break
            i -= 1
        else:
            return


def enumerate_colourings(spec: EnumerationSpec) -> Iterator[EdgeColouring]:
    """Stream every r-colouring of K_n; canonical mode quotients colour relabelling.

    Raises BudgetExceededError after yielding `budget` colourings if more
    remain, so consumers can trust a clean finish to mean a complete pass.
    """
    if spec.n < 2 or spec.r < 1:
        raise ValueError("need n >= 2 and r >= 1")
    length = spec.n * (spec.n - 1) // 2
    if spec.canonical:
        stream: Iterator = _iter_rgs(length, spec.r)
    else:
        stream = _product_colours(length, spec.r)
    produced = 0
    for values in stream:
        if spec.budget is not None and produced >= spec.budget:
            raise BudgetExceededError(produced)
        produced += 1
        yield EdgeColouring(spec.n, spec.r, tuple(values))


def _product_colours(length: int, r: int) -> Iterator[list[int]]:
    values = [1] * length
    while True:
        yield values
        i = length - 1
        while i >= 0 and values[i] == r:
            values[i] = 1
            i -= 1
        if i < 0:
            return
        values[i] += 1


# --- exhaustive theorem checks ----------------------------------------------

@dataclass(frozen=True)
class ExhaustReport:
    n: int
    r: int
    mode: str  # triple | double | component
    colourings_checked: int
    minimum: int
    witness: EdgeColouring  # first colouring attaining the minimum, canonical order
    floor: Q | None  # proven guarantee, None when nothing is asserted at this r
    threshold: int | None  # ceil(floor)
    violation_count: int
    violations: tuple[EdgeColouring, ...]  # at most a few samples, smallest first
    proved: int  # certificates produced and verified (0 unless prove was on)
    complete: bool

    @property
    def ok(self) -> bool:
        return self.violation_count == 0


def _value_fn(mode: str) -> Callable[[list[list[int]], int, int], int]:
    if mode == "triple":
        return max_triple_star_order
    if mode == "double":
        return max_double_star_order
    if mode == "component":
        return _component_order
    raise ValueError(f"unknown mode: {mode!r}")


def _component_order(masks: list[list[int]], n: int, m: int) -> int:
    best = 0
    for c in range(1, m + 1):
        row = masks[c]
        unseen = 0
        for v in range(n):
            if row[v]:
                unseen |= 1 << v
        while unseen:
            frontier = unseen & -unseen
            comp = 0
            while frontier:
                comp |= frontier
                grow = 0
                rest = frontier
                while rest:
                    low = rest & -rest
                    grow |= row[low.bit_length() - 1]
                    rest ^= low
                frontier = grow & ~comp
            size = comp.bit_count()
            if size > best:
                best = size
            unseen &= ~comp
    return best


def exhaustive_theorem_check(n: int, r: int, mode: str = "triple", prove: bool = False,
                             threads: int = 1, budget: int | None = None,
                             progress: Callable[[int], None] | None = None,
                             progress_every: int = 200000) -> ExhaustReport:
    """Scan every canonical r-colouring of K_n and take the worst case.

    For each colouring the maximum order of the mode's structure is
    computed (triple stars fall back to the single-edge value 2 when no
    two-edge monochromatic path exists); the minimum over all colourings is
    reported with the first colouring attaining it.  When a proven floor
    applies, any colouring below its ceiling is recorded as a violation.
    With prove on, the proof engine runs on every colouring and each
    certificate is independently verified; failures count as violations.
    """
    if n < 2 or r < 2:
        raise ValueError("need n >= 2 and r >= 2")
    if prove and r < 3:
        raise ValueError("prove mode needs r >= 3")
    _value_fn(mode)  # validate mode early
    floor = proven_floor(n, r, mode)
    threshold = math.ceil(floor) if floor is not None else None
    if threads < 1:
        raise ValueError("threads must be >= 1")
    if budget is not None and budget < 1:
        raise ValueError("budget must be >= 1")
    if threads > 1 and budget is not None:
        raise ValueError("budget accounting is single-threaded; drop --threads or the budget")

    if threads == 1:
        part = _scan_chunk(n, r, mode, prove, threshold, (), budget, progress, progress_every)
        parts = [part]
    else:
        prefixes = _split_prefixes(n, r, threads)
        with Pool(processes=threads) as pool:
            parts = pool.map(_chunk_worker,
                             [(n, r, mode, prove, threshold, p) for p in prefixes])

    checked = sum(p[0] for p in parts)
    minimum, argmin = min(((p[1], p[2]) for p in parts), key=lambda t: (t[0], t[1]))
    samples = sorted(set(tuple(v) for p in parts for v in p[3]))[:_VIOLATION_SAMPLE_CAP]
    violation_count = sum(p[4] for p in parts)
    proved = sum(p[5] for p in parts)
    return ExhaustReport(n, r, mode, checked, minimum,
                         EdgeColouring(n, r, argmin), floor, threshold,
                         violation_count,
                         tuple(EdgeColouring(n, r, s) for s in samples),
                         proved, True)


def _split_prefixes(n: int, r: int, threads: int) -> list[tuple[int, ...]]:
    """Short restricted-growth prefixes that partition the full enumeration."""
    length = n * (n - 1) // 2
    depth = 1
    while depth < min(length, 12):
        count = sum(1 for _ in _iter_rgs(depth, r))
        if count >= 4 * threads:
            break
        depth += 1
    return [tuple(p) for p in _iter_rgs(min(depth, length), r)]


def _chunk_worker(args) -> tuple:
    n, r, mode, prove, threshold, prefix = args
    return _scan_chunk(n, r, mode, prove, threshold, prefix, None, None, 0)


def _scan_chunk(n: int, r: int, mode: str, prove: bool, threshold: int | None,
                prefix: tuple[int, ...], budget: int | None,
                progress: Callable[[int], None] | None, progress_every: int) -> tuple:
    """Scan all canonical colourings extending `prefix`.

    Returns (processed, min value, argmin colours, violation samples,
    violation count, certificates verified).  The returned minimum carries
    the lexicographically smallest attaining colouring, so merging chunk
    results stays deterministic whatever the schedule.
    """
    value_of = _value_fn(mode)
    degenerate_floor = 2 if mode == "triple" else 0
    pairs = [(i, j) for i in range(n - 1) for j in range(i + 1, n)]
    length = len(pairs)
    bit = [1 << v for v in range(n)]
    processed = 0
    best = n + 1
    best_colours: tuple[int, ...] = ()
    samples: list[tuple[int, ...]] = []
    violation_count = 0
    proved = 0
    for a in _iter_rgs(length, r, prefix):
        if budget is not None and processed >= budget:
            raise BudgetExceededError(
                processed,
                partial=ExhaustReport(n, r, mode, processed, best,
                                      EdgeColouring(n, r, best_colours),
                                      proven_floor(n, r, mode), threshold,
                                      violation_count,
                                      tuple(EdgeColouring(n, r, s) for s in samples),
                                      proved, False))
        masks = [[0] * n for _ in range(r + 1)]
        for k in range(length):
            row = masks[a[k]]
            i, j = pairs[k]
            row[i] |= bit[j]
            row[j] |= bit[i]
        value = value_of(masks, n, r)
        if value < degenerate_floor:
            value = degenerate_floor
        bad = threshold is not None and value < threshold
        if prove:
            colouring = EdgeColouring(n, r, tuple(a))
            try:
                cert = prove_global(colouring, r)
                report = verify_certificate(colouring, cert)
                if report.ok:
                    proved += 1
                else:
                    bad = True
            except TheoremViolation:
                bad = True
        if value < best:
            best = value
            best_colours = tuple(a)
        if bad:
            violation_count += 1
            if len(samples) < _VIOLATION_SAMPLE_CAP:
                samples.append(tuple(a))
        processed += 1
        if progress is not None and processed % progress_every == 0:
            progress(processed)
    return processed, best, best_colours, samples, violation_count, proved


