"""Piecewise-linear path model for crystal graphs.

A path is a list of (direction, duration) segments starting at the origin;
directions are integer weight vectors and durations are exact rationals
summing to one.  Root operators cut the height profile of a path at exact
rational times, reflect the middle window, and translate the tail, so the
whole crystal of a dominant weight can be generated from the straight path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cartan import CartanDatum, Weight, is_dominant, is_reduced_word, validate_word
from .errors import EnumerationCapError, InvariantViolation, WeightError, WordError

DEFAULT_NODE_CAP = 20000


@dataclass(frozen=True)
class PiecewisePath:
    """Canonical piecewise-linear path: merged segments, positive durations."""

    segments: tuple[tuple[Weight, Fraction], ...]


def make_path(segments) -> PiecewisePath:
    """Canonicalize a segment list: drop zero durations, merge equal directions."""
    merged: list = []
    total = Fraction(0)
    for direction, duration in segments:
        if duration < 0:
            raise WeightError("negative segment duration")
        if duration == 0:
            continue
        direction = tuple(direction)
        total += duration
        if merged and merged[-1][0] == direction:
            merged[-1] = (direction, merged[-1][1] + duration)
        else:
            merged.append((direction, duration))
    if total != 1:
        raise WeightError("segment durations must sum to one")
    return PiecewisePath(tuple(merged))


def highest_path(datum: CartanDatum, lam) -> PiecewisePath:
    """Straight path to a dominant weight."""
    lam = tuple(lam)
    if len(lam) != datum.rank:
        raise WeightError(f"weight {lam} has wrong rank")
    if not is_dominant(lam):
        raise WeightError(f"weight {lam} is not dominant")
    return PiecewisePath(((lam, Fraction(1)),))


def path_weight(path: PiecewisePath) -> Weight:
    """Endpoint of the path; integral on crystal orbits."""
    rank = len(path.segments[0][0])
    end = [Fraction(0)] * rank
    for direction, duration in path.segments:
        for j in range(rank):
            end[j] += direction[j] * duration
    for c in end:
        if c.denominator != 1:
            raise InvariantViolation("path endpoint is not an integral weight")
    return tuple(int(c) for c in end)


def _breakpoints(path: PiecewisePath, i: int):
    """Times and heights of the pairing profile against the i-th coroot."""
    times = [Fraction(0)]
    heights = [Fraction(0)]
    for direction, duration in path.segments:
        times.append(times[-1] + duration)
        heights.append(heights[-1] + direction[i - 1] * duration)
    return times, heights


def _min_height(heights) -> Fraction:
    m = min(heights)
    if m.denominator != 1:
        raise InvariantViolation("height minimum is not integral")
    return m


def epsilon_phi(path: PiecewisePath, i: int) -> tuple[int, int]:
    """Raising and lowering string lengths read off the height profile."""
    _, heights = _breakpoints(path, i)
    m = _min_height(heights)
    end = heights[-1]
    if end.denominator != 1:
        raise InvariantViolation("height endpoint is not integral")
    return int(-m), int(end - m)


def _reflect_direction(datum: CartanDatum, i: int, direction) -> Weight:
    c = direction[i - 1]
    alpha = datum.simple_root(i)
    return tuple(v - c * a for v, a in zip(direction, alpha))


def _rebuild(datum: CartanDatum, path: PiecewisePath, i: int, lo: Fraction, hi: Fraction) -> PiecewisePath:
    """Reflect the directions of the window [lo, hi] and keep the rest."""
    segments = []
    t = Fraction(0)
    for direction, duration in path.segments:
        a, b = t, t + duration
        windows = (
            (a, min(b, lo), False),
            (max(a, lo), min(b, hi), True),
            (max(a, hi), b, False),
        )
        for wlo, whi, reflect in windows:
            if whi > wlo:
                d = _reflect_direction(datum, i, direction) if reflect else direction
                segments.append((d, whi - wlo))
        t = b
    return make_path(segments)


def lowering_operator(datum: CartanDatum, path: PiecewisePath, i: int):
    """Root operator pushing the path one step away from dominance.

    Returns None when the profile cannot drop, i.e. the endpoint sits at the
    minimum.  Otherwise the window between the last minimum and the first
    later time the profile gains one unit is reflected and the tail is
    translated, which only changes directions inside the window.
    """
    datum.check_index(i)
    times, heights = _breakpoints(path, i)
    m = _min_height(heights)
    if heights[-1] - m < 1:
        return None
    idx = max(k for k, h in enumerate(heights) if h == m)
    t1 = times[idx]
    target = m + 1
    t2 = None
    for k in range(idx, len(path.segments)):
        if heights[k + 1] >= target:
            span = times[k + 1] - times[k]
            rise = heights[k + 1] - heights[k]
            t2 = times[k] + (target - heights[k]) * span / rise
            break
    if t2 is None:
        raise InvariantViolation("profile never regains one unit after its minimum")
    return _rebuild(datum, path, i, t1, t2)


def raising_operator(datum: CartanDatum, path: PiecewisePath, i: int):
    """Inverse root operator; None when the profile never goes below zero."""
    datum.check_index(i)
    times, heights = _breakpoints(path, i)
    m = _min_height(heights)
    if -m < 1:
        return None
    idx = min(k for k, h in enumerate(heights) if h == m)
    t1 = times[idx]
    target = m + 1
    t0 = None
    for k in range(idx - 1, -1, -1):
        if heights[k] >= target:
            span = times[k + 1] - times[k]
            rise = heights[k + 1] - heights[k]
            t0 = times[k] + (target - heights[k]) * span / rise
            break
    if t0 is None:
        raise InvariantViolation("profile has no unit drop before its minimum")
    return _rebuild(datum, path, i, t0, t1)


@dataclass(eq=False)
class CrystalGraph:
    """Crystal of a dominant weight, nodes numbered in search order.

    ``f_edge[node][i-1]`` and ``e_edge[node][i-1]`` give the target node of
    the lowering/raising operator or -1; ``eps``/``phi`` cache the string
    statistics and ``weights`` the node weights.  Node 0 is the highest node.
    """

    datum: CartanDatum
    lam: Weight
    paths: tuple[PiecewisePath, ...]
    f_edge: tuple[tuple[int, ...], ...]
    e_edge: tuple[tuple[int, ...], ...]
    eps: tuple[tuple[int, ...], ...]
    phi: tuple[tuple[int, ...], ...]
    weights: tuple[Weight, ...]

    @property
    def size(self) -> int:
        return len(self.paths)

    highest = 0


def enumerate_crystal(datum: CartanDatum, lam, node_cap: int = DEFAULT_NODE_CAP) -> CrystalGraph:
    """Generate the full crystal below the straight dominant path.

    Breadth-first, expanding operator indices in increasing order, so node
    numbering is deterministic.
    """
    start = highest_path(datum, lam)
    index = {start: 0}
    paths = [start]
    f_rows = []
    k = 0
    while k < len(paths):
        path = paths[k]
        row = []
        for i in range(1, datum.rank + 1):
            nxt = lowering_operator(datum, path, i)
            if nxt is None:
                row.append(-1)
            else:
                if nxt not in index:
                    if len(paths) >= node_cap:
                        raise EnumerationCapError(
                            f"crystal for lambda={tuple(lam)} exceeded node cap {node_cap}"
                        )
                    index[nxt] = len(paths)
                    paths.append(nxt)
                row.append(index[nxt])
        f_rows.append(tuple(row))
        k += 1
    e_rows = [[-1] * datum.rank for _ in paths]
    for src, row in enumerate(f_rows):
        for pos, dst in enumerate(row):
            if dst != -1:
                e_rows[dst][pos] = src
    stats = [
        tuple(epsilon_phi(p, i) for i in range(1, datum.rank + 1)) for p in paths
    ]
    return CrystalGraph(
        datum=datum,
        lam=tuple(lam),
        paths=tuple(paths),
        f_edge=tuple(f_rows),
        e_edge=tuple(tuple(r) for r in e_rows),
        eps=tuple(tuple(s[0] for s in row) for row in stats),
        phi=tuple(tuple(s[1] for s in row) for row in stats),
        weights=tuple(path_weight(p) for p in paths),
    )


def demazure_crystal(graph: CrystalGraph, w_word) -> frozenset:
    """Node set swept out by lowering closures along a reduced word.

    The word ``(j1, ..., jp)`` closes under f_jp first and f_j1 last, so the
    last-applied letter is the word's first letter.
    """
    w_word = validate_word(graph.datum, w_word)
    if not is_reduced_word(graph.datum, w_word):
        raise WordError(f"word {w_word} is not reduced")
    nodes = {graph.highest}
    for letter in reversed(w_word):
        stack = list(nodes)
        while stack:
            node = stack.pop()
            dst = graph.f_edge[node][letter - 1]
            if dst != -1 and dst not in nodes:
                nodes.add(dst)
                stack.append(dst)
    return frozenset(nodes)


def edge_lines(graph: CrystalGraph) -> list[str]:
    """Adjacency dump, one line per lowering edge: ``src i dst``."""
    lines = []
    for src in range(graph.size):
        for i in range(1, graph.datum.rank + 1):
            dst = graph.f_edge[src][i - 1]
            if dst != -1:
                lines.append(f"{src} {i} {dst}")
    return lines
