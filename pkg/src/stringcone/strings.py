"""String parametrization of crystal nodes along reduced longest words.

Peeling walks maximal raising strings through the crystal graph: the first
letter of the supplied word peels first.  A word is adapted to a Weyl
element w when its length-l(w) prefix is a reduced word for w; the strings
of the Demazure subset then vanish beyond position l(w).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cartan import CartanDatum, Weight, WeylWord, is_reduced_word, validate_word
from .errors import InvariantViolation, WordError
from .pathcrystal import CrystalGraph, demazure_crystal, enumerate_crystal, DEFAULT_NODE_CAP


@dataclass(frozen=True, order=True)
class StringVector:
    """Peeling exponents of one crystal node along a fixed reduced word."""

    entries: tuple[int, ...]
    word: WeylWord


@dataclass(frozen=True, order=True)
class WeightedPoint:
    """A dominant weight together with one of its string vectors."""

    lam: Weight
    psi: tuple[int, ...]

    def vector(self) -> tuple[int, ...]:
        return self.lam + self.psi


def _validate_longest_word(datum: CartanDatum, word) -> WeylWord:
    word = validate_word(datum, word)
    if len(word) != datum.num_positive_roots or not is_reduced_word(datum, word):
        raise WordError(
            f"word {word} is not a reduced word of the longest element"
        )
    return word


def string_param(graph: CrystalGraph, node: int, word) -> StringVector:
    """Peel a node along the word, recording the maximal raising exponents."""
    word = _validate_longest_word(graph.datum, word)
    if not 0 <= node < graph.size:
        raise InvariantViolation(f"node {node} out of range")
    entries = []
    current = node
    for letter in word:
        t = graph.eps[current][letter - 1]
        for _ in range(t):
            current = graph.e_edge[current][letter - 1]
        entries.append(t)
    if current != graph.highest:
        raise InvariantViolation(
            f"peel along {word} did not end at the highest node"
        )
    return StringVector(entries=tuple(entries), word=word)


def string_image(datum: CartanDatum, lam, word, *, graph: CrystalGraph | None = None,
                 node_cap: int = DEFAULT_NODE_CAP) -> tuple[StringVector, ...]:
    """Sorted string vectors of the whole crystal; injectivity is enforced."""
    if graph is None:
        graph = enumerate_crystal(datum, lam, node_cap=node_cap)
    vectors = sorted(string_param(graph, node, word) for node in range(graph.size))
    if len(set(vectors)) != graph.size:
        raise InvariantViolation(
            f"string parametrization along {tuple(word)} is not injective"
        )
    return tuple(vectors)


def string_weight(datum: CartanDatum, lam, sv: StringVector) -> Weight:
    """Weight of the node a string vector encodes."""
    mu = list(lam)
    for letter, t in zip(sv.word, sv.entries):
        alpha = datum.simple_root(letter)
        for j in range(datum.rank):
            mu[j] -= t * alpha[j]
    return tuple(mu)


def dominant_weights(rank: int, level_bound: int):
    """Dominant integral weights with every coordinate at most the bound."""
    return tuple(itertools.product(range(level_bound + 1), repeat=rank))


def weighted_points(datum: CartanDatum, word, level_bound: int, *,
                    node_cap: int = DEFAULT_NODE_CAP,
                    graphs: dict | None = None) -> tuple[WeightedPoint, ...]:
    """All (lambda, string) points for dominant lambda up to the bound.

    ``graphs`` may carry previously enumerated crystals keyed by lambda and
    is filled in as a cache.
    """
    word = _validate_longest_word(datum, word)
    if level_bound < 0:
        raise WordError("level bound must be nonnegative")
    if graphs is None:
        graphs = {}
    points = []
    for lam in dominant_weights(datum.rank, level_bound):
        if lam not in graphs:
            graphs[lam] = enumerate_crystal(datum, lam, node_cap=node_cap)
        for sv in string_image(datum, lam, word, graph=graphs[lam]):
            points.append(WeightedPoint(lam=lam, psi=sv.entries))
    return tuple(sorted(points))


def demazure_strings(datum: CartanDatum, lam, w_word, w0_word, *,
                     graph: CrystalGraph | None = None,
                     node_cap: int = DEFAULT_NODE_CAP) -> tuple[StringVector, ...]:
    """Sorted string vectors of the Demazure subset for w along w0_word."""
    w_word = validate_word(datum, w_word)
    if not is_reduced_word(datum, w_word):
        raise WordError(f"word {w_word} is not reduced")
    w0_word = _validate_longest_word(datum, w0_word)
    if graph is None:
        graph = enumerate_crystal(datum, lam, node_cap=node_cap)
    nodes = demazure_crystal(graph, w_word)
    return tuple(sorted(string_param(graph, node, w0_word) for node in nodes))
