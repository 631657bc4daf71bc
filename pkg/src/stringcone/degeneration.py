"""Toric-degeneration certificates for weighted string cones.

The certificate packages the inferred cone, a Hilbert basis of its lattice
points, the binomial relation lattice, a linear form separating equal-weight
string pairs, and (optionally) the Demazure face data, together with the
outcome of every verification check.
"""

from __future__ import annotations

import itertools
import json
import math
import time
from dataclasses import dataclass
from fractions import Fraction

from .cartan import CartanDatum, apply_word, is_reduced_word, rho, validate_word
from .characters import demazure_character, dimension_of, weyl_dim
from .errors import DegenerationError, WordError
from .linalg import kernel_basis_int, vec_dot
from .pathcrystal import DEFAULT_NODE_CAP, enumerate_crystal
from .polyhedra import (
    RationalCone,
    conic_hull,
    hilbert_basis,
    is_face,
    saturation_check,
)
from .strings import (
    StringVector,
    WeightedPoint,
    demazure_strings,
    dominant_weights,
    string_image,
    string_weight,
    weighted_points,
)


@dataclass(frozen=True)
class SeparatingForm:
    """Positive integer linear form on string coordinates."""

    coefficients: tuple

    def value(self, entries) -> int:
        return vec_dot(self.coefficients, entries)


def _full_word(datum: CartanDatum, word):
    word = validate_word(datum, word)
    if len(word) != datum.num_positive_roots or not is_reduced_word(datum, word):
        raise WordError(f"word {word} is not a reduced word of the longest element")
    return word


def _fill_graph(datum, lam, graphs, node_cap):
    if graphs is None:
        return enumerate_crystal(datum, lam, node_cap=node_cap)
    if lam not in graphs:
        graphs[lam] = enumerate_crystal(datum, lam, node_cap=node_cap)
    return graphs[lam]


def build_pairs(datum: CartanDatum, word, level_bound: int, *,
                node_cap: int = DEFAULT_NODE_CAP, graphs: dict | None = None):
    """Equal-weight pairs (phi, psi, lambda) with phi lexicographically first.

    Within each string image the points are grouped by their weight; every
    two-element combination of a group yields one oriented pair.
    """
    word = _full_word(datum, word)
    pairs = []
    for lam in dominant_weights(datum.rank, level_bound):
        graph = _fill_graph(datum, lam, graphs, node_cap)
        groups: dict = {}
        for sv in string_image(datum, lam, word, graph=graph):
            groups.setdefault(string_weight(datum, lam, sv), []).append(sv)
        for mu in groups.values():
            for a, b in itertools.combinations(mu, 2):
                pairs.append((a, b, lam))
    return tuple(pairs)


def _pair_entries(pair):
    a, b = pair[0], pair[1]
    phi = a.entries if isinstance(a, StringVector) else tuple(a)
    psi = b.entries if isinstance(b, StringVector) else tuple(b)
    return phi, psi


def separating_form(pairs, n_coords: int) -> SeparatingForm:
    """Linear form with e(phi) < e(psi) on every pair, built right to left.

    Coordinate s contributes 1 plus an epsilon-scaled copy of the form on
    the later coordinates; epsilon is the largest power of two at most the
    strictest gap ratio among pairs first separated at s, halved once, and
    1 when no pair constrains the step.  Denominators are cleared at the
    end, so all coefficients are positive integers.
    """
    split = []
    for pair in pairs:
        phi, psi = _pair_entries(pair)
        if len(phi) != n_coords or len(psi) != n_coords:
            raise DegenerationError("pair length does not match coordinate count")
        s = next((k for k in range(n_coords) if phi[k] != psi[k]), None)
        if s is None:
            raise DegenerationError(f"pair has equal members {phi}")
        if phi[s] > psi[s]:
            raise DegenerationError(
                f"pair ({phi}, {psi}) is not oriented lexicographically"
            )
        split.append((s, phi, psi))
    coeffs = [Fraction(1)]
    for s in range(n_coords - 2, -1, -1):
        bounds = []
        for k, phi, psi in split:
            if k != s:
                continue
            tail = sum(c * phi[s + 1 + j] for j, c in enumerate(coeffs))
            if tail > 0:
                bounds.append(Fraction(psi[s] - phi[s]) / tail)
        if bounds:
            bound = min(bounds)
            k = 0
            while Fraction(1, 2 ** k) > bound:
                k += 1
            eps = Fraction(1, 2 ** (k + 1))
        else:
            eps = Fraction(1)
        coeffs = [Fraction(1)] + [eps * c for c in coeffs]
    scale = math.lcm(*(c.denominator for c in coeffs))
    form = SeparatingForm(tuple(int(c * scale) for c in coeffs))
    for _, phi, psi in split:
        if form.value(phi) >= form.value(psi):
            raise DegenerationError(f"form {form.coefficients} fails on ({phi}, {psi})")
    return form


def lattice_relations(generators):
    """Basis of integer vectors v with sum v_i * g_i = 0 over the generators."""
    gens = [tuple(g) for g in generators]
    if not gens:
        return ()
    dim = len(gens[0])
    rows = [[g[c] for g in gens] for c in range(dim)]
    return kernel_basis_int(rows, len(gens))


@dataclass(frozen=True)
class DemazureQuotient:
    """String-level image of one Demazure crystal against the full cone."""

    w_word: tuple
    adapted: bool
    zero_tail: bool
    face: bool
    normal: tuple | None
    sections: tuple


def demazure_quotient(datum: CartanDatum, w0_word, w_word, level_bound: int, *,
                      cone: RationalCone | None = None,
                      node_cap: int = DEFAULT_NODE_CAP,
                      graphs: dict | None = None) -> DemazureQuotient:
    """Demazure string sections, face test, and the tail-vanishing flag.

    A word is adapted when its length-l(w) prefix is itself a reduced word
    of w; only then is the image guaranteed to be a coordinate face.
    """
    w0_word = _full_word(datum, w0_word)
    w_word = validate_word(datum, w_word)
    if not is_reduced_word(datum, w_word):
        raise WordError(f"word {w_word} is not reduced")
    if graphs is None:
        graphs = {}
    if cone is None:
        pts = weighted_points(datum, w0_word, level_bound,
                              node_cap=node_cap, graphs=graphs)
        cone = conic_hull([p.lam + p.psi for p in pts])
    image = rho(datum)
    prefix = w0_word[: len(w_word)]
    adapted = apply_word(datum, prefix, image) == apply_word(datum, w_word, image)
    cut = len(w_word)
    sections = []
    weighted = []
    zero_tail = True
    for lam in dominant_weights(datum.rank, level_bound):
        graph = _fill_graph(datum, lam, graphs, node_cap)
        dem = demazure_strings(datum, lam, w_word, w0_word, graph=graph)
        sections.append((lam, dem))
        for sv in dem:
            if any(sv.entries[cut:]):
                zero_tail = False
            weighted.append(lam + sv.entries)
    face, normal = is_face(cone, weighted)
    return DemazureQuotient(
        w_word=w_word,
        adapted=adapted,
        zero_tail=zero_tail,
        face=face,
        normal=normal,
        sections=tuple(sections),
    )


@dataclass(frozen=True)
class SectionRecord:
    lam: tuple
    count: int
    dim: int
    match: bool
    demazure_count: int | None = None
    demazure_dim: int | None = None
    demazure_match: bool | None = None


@dataclass(frozen=True)
class DegenerationReport:
    """Everything the degeneration construction needs, with check outcomes."""

    datum: CartanDatum
    w0_word: tuple
    demazure_word: tuple | None
    cone: RationalCone
    certified_level: int
    hilbert_basis: tuple
    relations: tuple
    form: SeparatingForm
    pairs: tuple
    sections: tuple
    demazure: DemazureQuotient | None
    checks: tuple
    timings: dict

    @property
    def passing(self) -> bool:
        return all(flag for _, flag in self.checks)


def _decomposer(gens, facets):
    """Memoized test for membership in the semigroup generated by gens."""
    memo: dict = {}

    def rec(x):
        if not any(x):
            return True
        cached = memo.get(x)
        if cached is not None:
            return cached
        memo[x] = False
        for g in gens:
            y = tuple(a - b for a, b in zip(x, g))
            if all(vec_dot(u, y) >= 0 for u in facets) and rec(y):
                memo[x] = True
                break
        return memo[x]

    return rec


def degeneration_certificate(datum: CartanDatum, w0_word, w_word=None,
                             level_bound: int = 2, check_level: int | None = None,
                             *, node_cap: int = DEFAULT_NODE_CAP,
                             graphs: dict | None = None) -> DegenerationReport:
    """Run the full pipeline and record every check outcome.

    The cone is inferred from points with weight coordinates up to
    level_bound and audited against the enumeration at check_level
    (one level higher by default).  A data point falling outside the
    hull enlarges the build level and retries; a cone section point
    absent from the enumeration is a genuine failure and raises.
    """
    w0_word = _full_word(datum, w0_word)
    if w_word is not None:
        w_word = validate_word(datum, w_word)
        if not is_reduced_word(datum, w_word):
            raise WordError(f"word {w_word} is not reduced")
    if level_bound < 1:
        raise DegenerationError("level bound must be at least 1")
    if check_level is None:
        check_level = level_bound + 1
    if check_level < level_bound:
        raise DegenerationError("check level cannot be below the build level")
    timings: dict = {}
    if graphs is None:
        graphs = {}
    clock = time.perf_counter

    t = clock()
    data = weighted_points(datum, w0_word, check_level,
                           node_cap=node_cap, graphs=graphs)
    timings["enumerate"] = (clock() - t) * 1000.0

    t = clock()
    build_level = level_bound
    while True:
        hull_pts = [p.lam + p.psi for p in data
                    if all(c <= build_level for c in p.lam)]
        cone = conic_hull(hull_pts)
        report = saturation_check(cone, data, check_level)
        if report.data_points_outside_cone and build_level < check_level:
            build_level += 1
            continue
        if report.cone_points_missing_from_data:
            witness = report.cone_points_missing_from_data[0]
            raise DegenerationError(
                f"cone section point {witness} is absent from the enumeration"
            )
        if report.data_points_outside_cone:
            raise DegenerationError("hull failed to absorb enumerated points")
        break
    certified_level = check_level
    timings["cone"] = (clock() - t) * 1000.0

    t = clock()
    n = datum.rank
    ncoords = datum.num_positive_roots
    by_lam: dict = {}
    for p in data:
        by_lam.setdefault(p.lam, []).append(p.psi)
    quotient = None
    if w_word is not None:
        quotient = demazure_quotient(datum, w0_word, w_word, check_level,
                                     cone=cone, node_cap=node_cap, graphs=graphs)
    dem_sections = dict(quotient.sections) if quotient is not None else {}
    sections = []
    for lam in dominant_weights(n, check_level):
        count = len(by_lam.get(lam, ()))
        dim = weyl_dim(datum, lam)
        if quotient is not None:
            dem = dem_sections[lam]
            ddim = dimension_of(demazure_character(datum, lam, w_word))
            sections.append(SectionRecord(
                lam=lam, count=count, dim=dim, match=count == dim,
                demazure_count=len(dem), demazure_dim=ddim,
                demazure_match=len(dem) == ddim,
            ))
        else:
            sections.append(SectionRecord(lam=lam, count=count, dim=dim,
                                          match=count == dim))
    timings["sections"] = (clock() - t) * 1000.0

    t = clock()
    grading = (1,) * n + (0,) * ncoords
    basis_vecs = hilbert_basis(cone, grading)
    basis_points = tuple(WeightedPoint(lam=v[:n], psi=v[n:]) for v in basis_vecs)
    decomposes = _decomposer(basis_vecs, cone.facets)
    generates = all(decomposes(p.lam + p.psi) for p in data)
    minimal = True
    for h in basis_vecs:
        for g in basis_vecs:
            if g == h:
                continue
            y = tuple(a - b for a, b in zip(h, g))
            if all(vec_dot(u, y) >= 0 for u in cone.facets) and decomposes(y):
                minimal = False
                break
        if not minimal:
            break
    timings["hilbert"] = (clock() - t) * 1000.0

    t = clock()
    relations = lattice_relations(basis_vecs)
    balance = all(
        all(sum(v[i] * g[c] for i, g in enumerate(basis_vecs)) == 0
            for c in range(n + ncoords))
        for v in relations
    )
    timings["relations"] = (clock() - t) * 1000.0

    t = clock()
    pairs = build_pairs(datum, w0_word, level_bound,
                        node_cap=node_cap, graphs=graphs)
    form = separating_form(pairs, ncoords)
    strict = all(
        form.value(a.entries) < form.value(b.entries) for a, b, _ in pairs
    )
    timings["form"] = (clock() - t) * 1000.0

    checks = [
        ("saturation", report.clean),
        ("section_counts_match_weyl", all(s.match for s in sections)),
        ("hilbert_basis_generates", generates),
        ("hilbert_basis_minimal", minimal),
        ("relations_balance", balance),
        ("separating_form_strict", strict),
    ]
    if quotient is not None:
        checks.append(("demazure_counts_match",
                       all(s.demazure_match for s in sections)))
        if quotient.adapted:
            checks.append(("demazure_zero_tail", quotient.zero_tail))
            checks.append(("demazure_face", quotient.face))
    return DegenerationReport(
        datum=datum,
        w0_word=w0_word,
        demazure_word=w_word,
        cone=cone,
        certified_level=certified_level,
        hilbert_basis=basis_points,
        relations=relations,
        form=form,
        pairs=pairs,
        sections=tuple(sections),
        demazure=quotient,
        checks=tuple(checks),
        timings=timings,
    )


def report_to_json(report: DegenerationReport) -> str:
    """Serialize a report with a fixed key order and integer-only numerics.

    Timings are volatile and are serialized as an empty object so that
    identical configurations give byte-identical documents; the in-memory
    report keeps the measured values.
    """
    doc = {
        "type": report.datum.type_label,
        "rank": report.datum.rank,
        "word": list(report.w0_word),
        "demazure_word": list(report.demazure_word)
        if report.demazure_word is not None
        else None,
        "rays": [list(r) for r in report.cone.rays],
        "facets": [list(u) for u in report.cone.facets],
        "certified_level": report.certified_level,
        "hilbert_basis": [
            {"lambda": list(p.lam), "psi": list(p.psi)}
            for p in report.hilbert_basis
        ],
        "relations": [list(v) for v in report.relations],
        "weight_form": list(report.form.coefficients),
        "sections": [_section_doc(s) for s in report.sections],
        "checks": {name: bool(flag) for name, flag in report.checks},
        "timings_ms": {},
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"


def _section_doc(s: SectionRecord) -> dict:
    doc = {
        "lambda": list(s.lam),
        "count": s.count,
        "dim": s.dim,
        "match": s.match,
    }
    if s.demazure_count is not None:
        doc["demazure_count"] = s.demazure_count
        doc["demazure_dim"] = s.demazure_dim
        doc["demazure_match"] = s.demazure_match
    return doc
