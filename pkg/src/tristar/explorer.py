"""Stochastic search for colourings with small monochromatic structures.

Probes the open question of how small the largest monochromatic double or
triple star can be made, relative to n/(r-1).  Simulated annealing over
single-edge recolourings; nothing here asserts anything about the open
problems, but a best value below a proven floor is escalated as a
TheoremViolation exactly like the prover would.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .colouring import EdgeColouring, max_component, proven_floor
from .errors import TheoremViolation
from .oracle import _component_order
from .rng import SplitMix64
from .stars import (max_double_star, max_double_star_order, max_triple_star,
                    max_triple_star_order)

Q = Fraction


def objective(colouring: EdgeColouring, kind: str) -> int:
    """The order being minimized: double or triple star, or largest component.

    A colouring without any monochromatic two-edge path scores 2 on the
    triple objective (the single-edge floor).
    """
    if kind == "double":
        return max_double_star(colouring).order
    if kind == "triple":
        witness = max_triple_star(colouring)
        return 2 if witness is None else witness.order
    if kind == "component":
        return max_component(colouring).size
    raise ValueError(f"unknown objective kind: {kind!r}")


@dataclass(frozen=True)
class SearchConfig:
    n: int
    r: int
    objective: str = "triple"
    iterations: int = 100000
    restarts: int = 8
    t_start: Q = Q(2)
    cooling: Q = Q(995, 1000)
    seed: int = 1

    def check(self) -> None:
        if self.n < 2:
            raise ValueError("n >= 2 required")
        if self.r < 2:
            raise ValueError("r >= 2 required: with one colour there is no move to make")
        if self.objective not in ("double", "triple", "component"):
            raise ValueError(f"unknown objective kind: {self.objective!r}")
        if self.iterations < 1:
            raise ValueError("iterations >= 1 required")
        if self.restarts < 1:
            raise ValueError("restarts >= 1 required")
        if not 0 < self.cooling < 1:
            raise ValueError("cooling factor must lie strictly between 0 and 1")
        if self.t_start <= 0:
            raise ValueError("starting temperature must be positive")


@dataclass(frozen=True)
class SearchEvent:
    restart: int
    iteration: int  # 0 marks a restart's initial state
    objective: int


@dataclass(frozen=True)
class SearchOutcome:
    config: SearchConfig
    best_colouring: EdgeColouring
    best_objective: int
    ratio: Q  # best * (r-1) / n, so 1 means the n/(r-1) level exactly
    floor: Q | None
    log: tuple[SearchEvent, ...]  # every improvement of the overall best
    evaluations: int


def anneal(config: SearchConfig) -> SearchOutcome:
    """Minimize the objective by single-edge recolouring with restarts.

    Deterministic for a given config: each restart derives its own
    generator state from the seed, restarts run in order, and ties keep the
    earliest restart.  Raises TheoremViolation immediately if the search
    ever dips below a proven floor.
    """
    config.check()
    n, r = config.n, config.r
    floor = proven_floor(n, r, config.objective)
    threshold = math.ceil(floor) if floor is not None else None
    value_of = _mask_objective(config.objective)
    pairs = [(i, j) for i in range(n - 1) for j in range(i + 1, n)]
    length = len(pairs)
    bit = [1 << v for v in range(n)]
    t0 = float(config.t_start)
    cool = float(config.cooling)

    master = SplitMix64(config.seed)
    restart_seeds = [master.next64() for _ in range(config.restarts)]
    best_value = n + 1
    best_colours: tuple[int, ...] = ()
    log: list[SearchEvent] = []
    evaluations = 0

    def record(restart: int, iteration: int, value: int, colours: list[int]) -> None:
        nonlocal best_value, best_colours
        best_value = value
        best_colours = tuple(colours)
        log.append(SearchEvent(restart, iteration, value))
        if threshold is not None and value < threshold:
            raise TheoremViolation(
                f"search found {config.objective} objective {value}, below the proven {threshold}",
                EdgeColouring(n, r, best_colours))

    for restart, restart_seed in enumerate(restart_seeds):
        rng = SplitMix64(restart_seed)
        colours = [rng.below(r) + 1 for _ in range(length)]
        masks = [[0] * n for _ in range(r + 1)]
        for k in range(length):
            i, j = pairs[k]
            masks[colours[k]][i] |= bit[j]
            masks[colours[k]][j] |= bit[i]
        value = value_of(masks, n, r)
        evaluations += 1
        if value < best_value:
            record(restart, 0, value, colours)
        temperature = t0
        for it in range(1, config.iterations + 1):
            k = rng.below(length)
            old = colours[k]
            new = rng.below(r - 1) + 1
            if new >= old:
                new += 1
            i, j = pairs[k]
            masks[old][i] &= ~bit[j]
            masks[old][j] &= ~bit[i]
            masks[new][i] |= bit[j]
            masks[new][j] |= bit[i]
            candidate = value_of(masks, n, r)
            evaluations += 1
            delta = candidate - value
            if delta <= 0 or math.exp(-delta / temperature) > rng.unit():
                colours[k] = new
                value = candidate
                if value < best_value:
                    record(restart, it, value, colours)
            else:
                masks[new][i] &= ~bit[j]
                masks[new][j] &= ~bit[i]
                masks[old][i] |= bit[j]
                masks[old][j] |= bit[i]
            temperature *= cool
    ratio = Q(best_value * (r - 1), n)
    return SearchOutcome(config, EdgeColouring(n, r, best_colours), best_value,
                         ratio, floor, tuple(log), evaluations)


def _mask_objective(kind: str):
    if kind == "double":
        return max_double_star_order
    if kind == "component":
        return _component_order
    def triple(masks, n, m):
        value = max_triple_star_order(masks, n, m)
        return value if value >= 2 else 2
    return triple
