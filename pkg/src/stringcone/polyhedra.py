"""Exact rational polyhedral cones.

Double description over exact integers gives minimal V- and H-
representations; sections, face tests, Hilbert bases, and saturation checks
ride on top.  Lineality is encoded as opposite ray pairs and equations as
opposite facet pairs, which makes dualization a plain swap.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import PolyhedralError, UnboundedSectionError
from .linalg import (
    det_int,
    hnf_rows,
    invert_fraction,
    lattice_span_basis,
    primitive,
    rank_int,
    snf_with_uinv,
    vec_dot,
)
from .strings import WeightedPoint, dominant_weights


@dataclass(frozen=True)
class RationalCone:
    """Cone with canonical sorted primitive integer rays and facet normals."""

    ambient_dim: int
    rays: tuple
    facets: tuple
    pointed: bool


def _neg(v):
    return tuple(-c for c in v)


def _canonical_constraints(vectors):
    out = {primitive(v) for v in vectors if any(v)}
    return sorted(out)


def _adjacent(r1, r2, processed, dim, lin_dim):
    common = [a for a in processed if vec_dot(a, r1) == 0 and vec_dot(a, r2) == 0]
    return rank_int(common) == dim - lin_dim - 2


def _dd_pair(constraints, dim):
    """Lineality basis and extreme rays of an intersection of halfspaces.

    Incremental insertion; rays stay primitive and the exact rank test on
    the processed constraints decides adjacency.  Constraints already
    satisfied by the current cone are redundant for the final cone and are
    skipped.
    """
    lineality = [tuple(1 if j == k else 0 for j in range(dim)) for k in range(dim)]
    rays: list = []
    processed: list = []
    for c in _canonical_constraints(constraints):
        lvals = [vec_dot(c, l) for l in lineality]
        if any(lvals):
            k = next(i for i, v in enumerate(lvals) if v)
            l0, p0 = lineality[k], lvals[k]
            if p0 < 0:
                l0, p0 = _neg(l0), -p0
            new_lin = []
            for pos, (l, pl) in enumerate(zip(lineality, lvals)):
                if pos == k:
                    continue
                new_lin.append(primitive(tuple(a * p0 - b * pl for a, b in zip(l, l0))))
            lineality = new_lin
            projected = []
            for r in rays:
                pr = vec_dot(c, r)
                cand = primitive(tuple(a * p0 - b * pr for a, b in zip(r, l0)))
                if any(cand):
                    projected.append(cand)
            projected.append(l0)
            rays = sorted(set(projected))
            processed.append(c)
            continue
        vals = [vec_dot(c, r) for r in rays]
        if all(v >= 0 for v in vals):
            continue
        keep = [r for r, v in zip(rays, vals) if v >= 0]
        plus = [(r, v) for r, v in zip(rays, vals) if v > 0]
        minus = [(r, v) for r, v in zip(rays, vals) if v < 0]
        fresh = []
        for rp, vp in plus:
            for rm, vm in minus:
                if _adjacent(rp, rm, processed, dim, len(lineality)):
                    fresh.append(
                        primitive(tuple(-vm * a + vp * b for a, b in zip(rp, rm)))
                    )
        rays = sorted(set(keep + fresh))
        processed.append(c)
    return tuple(hnf_rows(lineality)), tuple(sorted(set(rays)))


def _generators(lineality, rays):
    vecs = set(rays)
    for l in lineality:
        vecs.add(tuple(l))
        vecs.add(_neg(l))
    return tuple(sorted(vecs))


def conic_hull(points) -> RationalCone:
    """Cone generated by integer points, with minimal representations.

    The dual cone is computed first (the points act as constraints); its
    generators are the facets, and a second pass recovers the extreme rays.
    """
    pts = [tuple(int(c) for c in p) for p in points]
    if not pts:
        raise PolyhedralError("cannot take the conic hull of an empty set")
    dim = len(pts[0])
    if any(len(p) != dim for p in pts):
        raise PolyhedralError("points have inconsistent dimension")
    dual_lin, dual_rays = _dd_pair(pts, dim)
    facets = _generators(dual_lin, dual_rays)
    lin, rays = _dd_pair(facets, dim)
    return RationalCone(
        ambient_dim=dim,
        rays=_generators(lin, rays),
        facets=facets,
        pointed=not lin,
    )


def dualize(cone: RationalCone) -> RationalCone:
    """Swap the two descriptions; an involution up to canonical sorting."""
    return RationalCone(
        ambient_dim=cone.ambient_dim,
        rays=cone.facets,
        facets=cone.rays,
        pointed=rank_int(cone.rays) == cone.ambient_dim if cone.rays else cone.ambient_dim == 0,
    )


def contains(cone: RationalCone, point) -> bool:
    return all(vec_dot(u, point) >= 0 for u in cone.facets)


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def section_lattice_points(cone: RationalCone, lam):
    """Integer points of the cone section with the leading block fixed to lam.

    The section polytope is homogenized and its vertices bound an exact box;
    a depth-first scan with per-facet suffix bounds filters the box.
    Unbounded sections are rejected with a certifying recession ray.
    """
    lam = tuple(lam)
    n = len(lam)
    nfree = cone.ambient_dim - n
    if nfree <= 0:
        raise PolyhedralError("section leaves no free coordinates")
    rows = []
    for u in cone.facets:
        rows.append((vec_dot(u[:n], lam), u[n:]))
    homog = [(1,) + (0,) * nfree]
    homog += [(const,) + tuple(coeffs) for const, coeffs in rows]
    lin, rays = _dd_pair(homog, nfree + 1)
    for v in lin + rays:
        if v[0] == 0:
            raise UnboundedSectionError(
                f"section at lambda={lam} is unbounded", ray=v[1:]
            )
    if not rays:
        return ()
    verts = [[Fraction(c, r[0]) for c in r[1:]] for r in rays]
    lo = [math.ceil(min(v[k] for v in verts)) for k in range(nfree)]
    hi = [math.floor(max(v[k] for v in verts)) for k in range(nfree)]
    if any(l > h for l, h in zip(lo, hi)):
        return ()
    # suffix_max[f][k]: largest achievable tail sum of facet f from coordinate k on
    suffix_max = []
    for _, coeffs in rows:
        tail = [0] * (nfree + 1)
        for k in range(nfree - 1, -1, -1):
            c = coeffs[k]
            tail[k] = tail[k + 1] + (c * hi[k] if c > 0 else c * lo[k])
        suffix_max.append(tail)
    found = []
    prefix = [0] * nfree

    def scan(k, partials):
        if k == nfree:
            found.append(tuple(prefix))
            return
        lo_k, hi_k = lo[k], hi[k]
        for f, (_, coeffs) in enumerate(rows):
            c = coeffs[k]
            rest = suffix_max[f][k + 1]
            if c > 0:
                lo_k = max(lo_k, _ceil_div(-partials[f] - rest, c))
            elif c < 0:
                room = partials[f] + rest
                if room < 0:
                    return
                hi_k = min(hi_k, room // (-c))
            elif partials[f] + rest < 0:
                return
        for v in range(lo_k, hi_k + 1):
            prefix[k] = v
            scan(k + 1, [p + coeffs[k] * v for p, (_, coeffs) in zip(partials, rows)])

    scan(0, [const for const, _ in rows])
    return tuple(sorted(found))


def is_face(cone: RationalCone, points):
    """Decide whether the points span a face; return a supporting normal.

    The candidate face is the intersection of all facets vanishing on every
    point; the points span it exactly when their hull has the same extreme
    rays.  The sum of the vanishing facets is a valid inequality vanishing
    precisely on the face (the zero vector for the whole cone).
    """
    pts = [tuple(p) for p in points]
    if not pts:
        raise PolyhedralError("empty point set")
    for p in pts:
        if not contains(cone, p):
            raise PolyhedralError(f"point {p} lies outside the cone")
    active = [u for u in cone.facets if all(vec_dot(u, p) == 0 for p in pts)]
    face_rays = {
        r for r in cone.rays if all(vec_dot(u, r) == 0 for u in active)
    }
    nonzero = [p for p in pts if any(p)]
    span_rays = set(conic_hull(nonzero).rays) if nonzero else set()
    if span_rays != face_rays:
        return False, None
    if active:
        normal = primitive(tuple(sum(col) for col in zip(*active)))
    else:
        normal = (0,) * cone.ambient_dim
    return True, normal


def _triangulate(rays):
    """Pulling triangulation of a cone into simplicial ray subsets."""
    memo = {}

    def rec(ray_set):
        key = frozenset(ray_set)
        if key in memo:
            return memo[key]
        rk = rank_int(ray_set)
        if len(ray_set) == rk:
            memo[key] = (tuple(sorted(ray_set)),)
            return memo[key]
        hull = conic_hull(ray_set)
        apex = sorted(ray_set)[0]
        cells = []
        for u in hull.facets:
            if vec_dot(u, apex) > 0:
                sub = tuple(r for r in hull.rays if vec_dot(u, r) == 0)
                for cell in rec(sub):
                    cells.append(tuple(sorted(cell + (apex,))))
        memo[key] = tuple(cells)
        return memo[key]

    return rec(tuple(sorted(rays)))


def _parallelepiped_points(simplex):
    """Nonzero lattice points of the half-open parallelepiped of a simplex."""
    k = len(simplex)
    matrix = [[simplex[j][i] for j in range(k)] for i in range(k)]
    if abs(det_int(matrix)) == 1:
        return ()
    diag, uinv = snf_with_uinv(matrix)
    inv = invert_fraction(matrix)
    points = []
    for residue in itertools.product(*(range(d) for d in diag)):
        if not any(residue):
            continue
        x = [sum(uinv[i][j] * residue[j] for j in range(k)) for i in range(k)]
        coords = [sum(inv[i][j] * x[j] for j in range(k)) for i in range(k)]
        shift = [math.floor(c) for c in coords]
        pt = tuple(
            x[i] - sum(matrix[i][j] * shift[j] for j in range(k)) for i in range(k)
        )
        points.append(pt)
    return tuple(points)


def hilbert_basis(cone: RationalCone, grading):
    """Minimal generating set of the cone's lattice-point semigroup.

    Requires a pointed cone and a grading strictly positive on the rays.
    Candidates come from a pulling triangulation plus the lattice points of
    each simplicial parallelepiped; a candidate survives when it is not the
    sum of a lower-degree survivor and another cone point.
    """
    if not cone.pointed:
        raise PolyhedralError("Hilbert basis requires a pointed cone")
    grading = tuple(grading)
    if len(grading) != cone.ambient_dim:
        raise PolyhedralError("grading has wrong dimension")
    if not cone.rays:
        return ()
    for r in cone.rays:
        if vec_dot(grading, r) <= 0:
            raise PolyhedralError(f"grading is not positive on ray {r}")
    dim = cone.ambient_dim
    k = rank_int(cone.rays)
    if k == dim:
        to_full = None
        red_rays = list(cone.rays)
        red_facets = sorted({u for u in cone.facets})
        red_grading = grading
    else:
        span = lattice_span_basis(cone.rays, dim)
        gram = [[vec_dot(a, b) for b in span] for a in span]
        gram_inv = invert_fraction(gram)

        def to_reduced(x):
            proj = [vec_dot(x, b) for b in span]
            coords = [
                sum(gram_inv[i][j] * proj[j] for j in range(k)) for i in range(k)
            ]
            out = []
            for c in coords:
                if c.denominator != 1:
                    raise PolyhedralError("point outside the ray lattice")
                out.append(int(c))
            return tuple(out)

        to_full = span
        red_rays = [to_reduced(r) for r in cone.rays]
        red_facets = sorted(
            {
                primitive(tuple(vec_dot(u, b) for b in span))
                for u in cone.facets
            }
            - {(0,) * k}
        )
        red_grading = tuple(vec_dot(grading, b) for b in span)

    def lift(x):
        if to_full is None:
            return tuple(x)
        return tuple(
            sum(x[j] * to_full[j][i] for j in range(k)) for i in range(dim)
        )

    def in_cone(x):
        return all(vec_dot(u, x) >= 0 for u in red_facets)

    candidates = set(red_rays)
    for simplex in _triangulate(tuple(red_rays)):
        candidates.update(_parallelepiped_points(simplex))
    graded = sorted(candidates, key=lambda c: (vec_dot(red_grading, c), c))
    basis = []
    for h in graded:
        gh = vec_dot(red_grading, h)
        reducible = False
        for g in basis:
            if vec_dot(red_grading, g) >= gh:
                break
            if in_cone(tuple(a - b for a, b in zip(h, g))):
                reducible = True
                break
        if not reducible:
            basis.append(h)
    return tuple(sorted(lift(h) for h in basis))


@dataclass(frozen=True)
class SectionCount:
    lam: tuple
    cone_count: int
    data_count: int


@dataclass(frozen=True)
class SaturationReport:
    """Per-weight comparison of cone sections against enumerated strings."""

    level_bound: int
    sections: tuple
    cone_points_missing_from_data: tuple
    data_points_outside_cone: tuple

    @property
    def clean(self) -> bool:
        return not self.cone_points_missing_from_data and not self.data_points_outside_cone


def saturation_check(cone: RationalCone, enumerated, level_bound: int) -> SaturationReport:
    """Compare integral cone sections with enumerated weighted points."""
    enumerated = tuple(enumerated)
    if not enumerated:
        raise PolyhedralError("no enumerated points supplied")
    n = len(enumerated[0].lam)
    by_lam: dict = {}
    for p in enumerated:
        by_lam.setdefault(p.lam, set()).add(p.psi)
    sections = []
    missing = []
    outside = []
    for lam in dominant_weights(n, level_bound):
        sec = set(section_lattice_points(cone, lam))
        data = by_lam.get(lam, set())
        sections.append(SectionCount(lam=lam, cone_count=len(sec), data_count=len(data)))
        missing.extend(WeightedPoint(lam=lam, psi=p) for p in sorted(sec - data))
        outside.extend(WeightedPoint(lam=lam, psi=p) for p in sorted(data - sec))
    return SaturationReport(
        level_bound=level_bound,
        sections=tuple(sections),
        cone_points_missing_from_data=tuple(missing),
        data_points_outside_cone=tuple(outside),
    )


def format_h_rep(cone: RationalCone) -> str:
    """Canonical H-representation text: dim header, facet rows, ray rows."""
    lines = [f"dim {cone.ambient_dim}", f"facets {len(cone.facets)}"]
    lines += [" ".join(str(c) for c in u) for u in cone.facets]
    lines.append(f"rays {len(cone.rays)}")
    lines += [" ".join(str(c) for c in r) for r in cone.rays]
    return "\n".join(lines) + "\n"


def parse_h_rep(text: str) -> RationalCone:
    """Parse the H-representation text format back into a cone."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    try:
        if lines[0].split()[0] != "dim":
            raise ValueError
        dim = int(lines[0].split()[1])
        nfac = int(lines[1].split()[1])
        facets = tuple(
            tuple(int(c) for c in lines[2 + i].split()) for i in range(nfac)
        )
        ray_header = lines[2 + nfac].split()
        if ray_header[0] != "rays":
            raise ValueError
        nray = int(ray_header[1])
        rays = tuple(
            tuple(int(c) for c in lines[3 + nfac + i].split()) for i in range(nray)
        )
    except (IndexError, ValueError) as exc:
        raise PolyhedralError("malformed H-representation text") from exc
    for v in facets + rays:
        if len(v) != dim:
            raise PolyhedralError("vector dimension mismatch in H-representation")
    pointed = rank_int(facets) == dim if facets else dim == 0
    return RationalCone(ambient_dim=dim, rays=rays, facets=facets, pointed=pointed)
