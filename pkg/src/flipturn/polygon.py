"""Canonical polygon representation, pocket detection and classification.

A polygon is stored as a circular sequence of (direction, length) pairs
plus an anchor point; vertices are derived and cached.  Canonical form
has no two consecutive codirectional edges, so diagonal flipturns
really do drop the vertex count by two.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .errors import DegeneratePolygonError, SimplicityError
from .geom import (
    COLINEAR,
    LEFT,
    cross,
    direction,
    dot,
    is_simple_cycle,
    orient,
    point_on_segment,
    rat_str,
    shoelace2,
    sub,
    to_rational,
)


class Regime(str, Enum):
    STANDARD = "standard"
    EXTENDED = "extended"
    MODIFIED = "modified"


class Orientation(str, Enum):
    DIAGONAL = "diagonal"
    ORTHOGONAL = "orthogonal"


@dataclass(frozen=True)
class Pocket:
    """A pocket chain: vertices first..last (mod n), edges first..last-1."""

    first: int
    last: int
    lid: tuple
    regime: Regime
    orientation: Orientation
    degenerate: bool

    def chain_length(self, n):
        """Number of edges in the pocket chain."""
        return (self.last - self.first) % n


@dataclass
class FlipturnRecord:
    """Bookkeeping for one applied flipturn."""

    pocket: Pocket
    vertices_before: int
    vertices_after: int
    area2_before: object
    area2_after: object
    brackets_before: int = None
    brackets_after: int = None
    discrete_angle_before: int = None
    discrete_angle_after: int = None
    before: object = None  # Polygon, for exact undo
    after: object = None


class Polygon:
    """Immutable simple polygon in canonical counterclockwise form."""

    def __init__(self, dirs, lens, anchor, _trusted=False):
        if not _trusted:
            raise TypeError("use Polygon.from_vertices or generator constructors")
        self._dirs = tuple(dirs)
        self._lens = tuple(lens)
        self.anchor = anchor

    # ------------------------------------------------------------------
    # construction

    @staticmethod
    def from_vertices(points, validate=True):
        """Canonical polygon from a vertex cycle.

        Reverses clockwise input, merges codirectional runs, rejects
        self-intersecting (SimplicityError) and zero-area
        (DegeneratePolygonError) inputs.
        """
        pts = [(to_rational(p[0]), to_rational(p[1])) for p in points]
        if len(pts) < 3:
            raise DegeneratePolygonError("need at least 3 vertices")
        area2 = shoelace2(pts)
        if area2 == 0:
            raise DegeneratePolygonError("zero signed area")
        if area2 < 0:
            pts.reverse()
        pts = _merge_straight(pts)
        if len(pts) < 3:
            raise DegeneratePolygonError("degenerate after merging colinear runs")
        if validate and not is_simple_cycle(pts):
            raise SimplicityError("boundary self-intersects")
        return Polygon._from_clean(pts)

    @staticmethod
    def _from_clean(pts):
        """Build from an already canonical ccw vertex list (no checks)."""
        dirs = []
        lens = []
        n = len(pts)
        for i in range(n):
            vx = pts[(i + 1) % n][0] - pts[i][0]
            vy = pts[(i + 1) % n][1] - pts[i][1]
            d = direction((vx, vy))
            num, den = (vx, d[0]) if d[0] != 0 else (vy, d[1])
            if isinstance(num, int):
                t = num // den  # exact: d is the primitive vector of (vx, vy)
            else:
                t = to_rational(num / den)
            dirs.append(d)
            lens.append(t)
        p = Polygon(dirs, lens, pts[0], _trusted=True)
        p.__dict__["vertices"] = tuple(pts)
        return p

    # ------------------------------------------------------------------
    # derived data

    @property
    def n(self):
        return len(self._dirs)

    @property
    def edges(self):
        """Circular sequence of (direction, length) pairs."""
        return tuple(zip(self._dirs, self._lens))

    def edge_vector(self, i):
        d, t = self._dirs[i], self._lens[i]
        return (d[0] * t, d[1] * t)

    @cached_property
    def vertices(self):
        vs = [self.anchor]
        x, y = self.anchor
        for i in range(self.n - 1):
            d, t = self._dirs[i], self._lens[i]
            x, y = x + d[0] * t, y + d[1] * t
            vs.append((x, y))
        return tuple(vs)

    def vertex(self, i):
        return self.vertices[i % self.n]

    @cached_property
    def area2(self):
        """Twice the signed area (positive: counterclockwise)."""
        return shoelace2(self.vertices)

    @cached_property
    def bbox(self):
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        return (min(xs), min(ys), max(xs), max(ys))

    @cached_property
    def hull(self):
        """Convex hull corners, counterclockwise."""
        return _melkman(self.vertices)

    @cached_property
    def hull_contacts(self):
        """Indices of vertices on the hull boundary, in boundary order.

        Starts at the lexicographically smallest vertex (always a hull
        corner); follows the boundary once around.  Colinear boundary
        vertices are included.
        """
        return _contacts(self.vertices, self.hull)

    @cached_property
    def is_convex(self):
        return len(self.hull_contacts) == self.n

    @cached_property
    def is_orthogonal(self):
        return all(d[0] == 0 or d[1] == 0 for d in self._dirs)

    def vertex_is_convex(self, i):
        """Left turn at vertex i (canonical form has no straight vertices)."""
        vs = self.vertices
        n = self.n
        return orient(vs[(i - 1) % n], vs[i], vs[(i + 1) % n]) == LEFT

    def translate(self, off):
        p = Polygon(self._dirs, self._lens, (self.anchor[0] + off[0], self.anchor[1] + off[1]), _trusted=True)
        if "vertices" in self.__dict__:
            p.__dict__["vertices"] = tuple((v[0] + off[0], v[1] + off[1]) for v in self.vertices)
        return p

    # ------------------------------------------------------------------
    # identity

    @cached_property
    def _canonical_key(self):
        vs = self.vertices
        k = vs.index(min(vs))
        return vs[k:] + vs[:k]

    def __eq__(self, other):
        if not isinstance(other, Polygon):
            return NotImplemented
        return self._canonical_key == other._canonical_key

    def __hash__(self):
        return hash(self._canonical_key)

    def __repr__(self):
        return f"Polygon(n={self.n}, anchor={self.anchor})"

    # ------------------------------------------------------------------
    # serialization

    def to_json_obj(self, metadata=None):
        obj = {"vertices": [[rat_str(x), rat_str(y)] for x, y in self.vertices]}
        if metadata:
            obj["metadata"] = metadata
        return obj

    def to_json(self, metadata=None):
        return json.dumps(self.to_json_obj(metadata))

    @staticmethod
    def from_json_obj(obj, validate=True):
        return Polygon.from_vertices(obj["vertices"], validate=validate)

    @staticmethod
    def from_json(s, validate=True):
        return Polygon.from_json_obj(json.loads(s), validate=validate)


def _merge_straight(pts):
    """Drop vertices whose incident edges are codirectional."""
    out = []
    n = len(pts)
    for i in range(n):
        a, b, c = pts[(i - 1) % n], pts[i], pts[(i + 1) % n]
        if b == c:
            continue
        if orient(a, b, c) == COLINEAR and dot(sub(b, a), sub(c, b)) > 0:
            continue
        out.append(b)
    return out


def _melkman(vs):
    """Convex hull corners of a simple closed boundary, ccw, O(n)."""
    n = len(vs)
    if n < 3:
        raise DegeneratePolygonError("hull of fewer than 3 vertices")
    # Initialize with the first ccw triple.
    dq = None
    for k in range(2, n):
        o = orient(vs[0], vs[1], vs[k])
        if o != COLINEAR:
            start = k
            if o == LEFT:
                dq = [vs[k], vs[0], vs[1], vs[k]]
            else:
                dq = [vs[k], vs[1], vs[0], vs[k]]
            break
    if dq is None:
        raise DegeneratePolygonError("all vertices colinear")
    from collections import deque

    d = deque(dq)
    for k in range(start + 1, n):
        p = vs[k]
        if orient(d[-2], d[-1], p) == LEFT and orient(d[0], d[1], p) == LEFT:
            continue
        while orient(d[-2], d[-1], p) != LEFT:
            d.pop()
        d.append(p)
        while orient(d[0], d[1], p) != LEFT:
            d.popleft()
        d.appendleft(p)
    d.pop()  # first == last
    return list(d)


def _contacts(vs, hull):
    """Vertex indices on the hull boundary, boundary order from lex-min."""
    n = len(vs)
    h = len(hull)
    start = vs.index(min(vs))  # lex-min vertex is a hull corner
    hi = hull.index(vs[start])
    out = [start]
    pos = hi
    for step in range(1, n):
        i = (start + step) % n
        v = vs[i]
        nxt = hull[(pos + 1) % h]
        if v == nxt:
            pos = (pos + 1) % h
            out.append(i)
        elif point_on_segment(v, hull[pos], nxt):
            if v != hull[pos]:
                out.append(i)
        # else: strictly inside, not a contact
    return out


# ----------------------------------------------------------------------
# pockets


def find_pockets(poly, regime):
    """All pockets of the given regime, in boundary order.

    Empty for convex polygons.  Orientation is DIAGONAL unless the lid
    is horizontal or vertical.
    """
    regime = Regime(regime)
    n = poly.n
    vs = poly.vertices
    contacts = poly.hull_contacts
    pockets = []
    if regime in (Regime.STANDARD, Regime.MODIFIED):
        m = len(contacts)
        for k in range(m):
            i, j = contacts[k], contacts[(k + 1) % m]
            gap = (j - i) % n
            if gap < 2:
                continue
            if regime is Regime.MODIFIED:
                jj = (j + 1) % n
                if orient(vs[i], vs[j], vs[jj]) == COLINEAR:
                    j = jj
                pockets.append(_mk_pocket(poly, i, j, Regime.MODIFIED, False))
            else:
                pockets.append(
                    _mk_pocket(poly, i, j, Regime.STANDARD, _std_degen(poly, i, j))
                )
    else:
        corner_set = set(poly.hull)
        corners = [i for i in contacts if vs[i] in corner_set]
        m = len(corners)
        for k in range(m):
            i, j = corners[k], corners[(k + 1) % m]
            gap = (j - i) % n
            if gap < 2:
                continue
            pockets.append(
                _mk_pocket(poly, i, j, Regime.EXTENDED, _ext_degen(poly, i, j))
            )
    return pockets


def _mk_pocket(poly, i, j, regime, degen):
    vs = poly.vertices
    lid = (vs[i], vs[j % poly.n])
    horiz = lid[0][1] == lid[1][1]
    vert = lid[0][0] == lid[1][0]
    orn = Orientation.ORTHOGONAL if (horiz or vert) else Orientation.DIAGONAL
    return Pocket(i, j % poly.n, lid, regime, orn, degen)


def _std_degen(poly, i, j):
    """Standard degeneracy: the two edges just outside lie on one line."""
    vs, n = poly.vertices, poly.n
    a, b = vs[(i - 1) % n], vs[i]
    return (
        orient(a, b, vs[j]) == COLINEAR
        and orient(a, b, vs[(j + 1) % n]) == COLINEAR
    )


def _ext_degen(poly, i, j):
    """Extended degeneracy: the two edges just inside lie on one line."""
    vs, n = poly.vertices, poly.n
    a, b = vs[i], vs[(i + 1) % n]
    return (
        orient(a, b, vs[(j - 1) % n]) == COLINEAR
        and orient(a, b, vs[j]) == COLINEAR
    )


def classify_degenerate(pocket, poly):
    """Recompute the degeneracy flag of a pocket found in poly."""
    if pocket.regime is Regime.MODIFIED:
        return False
    if pocket.regime is Regime.STANDARD:
        return _std_degen(poly, pocket.first, pocket.last)
    return _ext_degen(poly, pocket.first, pocket.last)
