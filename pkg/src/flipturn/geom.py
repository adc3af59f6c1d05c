"""Exact arithmetic primitives and predicates.

Coordinates are ``int | Fraction``; every predicate is exact.  Integer
inputs stay integers through all downstream operations (a flipturn
reflects points as ``p -> (a + b) - p``, which is closed over the
integers), so orthogonal workloads never touch Fraction arithmetic.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from math import gcd

LEFT = 1
RIGHT = -1
COLINEAR = 0


class GeometryError(ValueError):
    pass


def to_rational(v):
    """Coerce ints, Fractions and "num/den" strings to an exact coordinate."""
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else v
    if isinstance(v, str):
        f = Fraction(v)
        return f.numerator if f.denominator == 1 else f
    raise GeometryError(f"cannot interpret {v!r} as an exact rational")


def rat_str(v):
    """Serialize a coordinate: bare int when integral, else "num/den"."""
    if isinstance(v, int):
        return v
    if v.denominator == 1:
        return v.numerator
    return f"{v.numerator}/{v.denominator}"


def cross(o, a, b):
    """Exact cross product (a - o) x (b - o)."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def cross2(u, v):
    return u[0] * v[1] - u[1] * v[0]


def orient(a, b, c):
    """Orientation of the ordered triple: LEFT, RIGHT or COLINEAR."""
    v = cross(a, b, c)
    if v > 0:
        return LEFT
    if v < 0:
        return RIGHT
    return COLINEAR


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1]


def sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def neg(u):
    return (-u[0], -u[1])


def perp(u):
    """Counterclockwise perpendicular."""
    return (-u[1], u[0])


def direction(vec):
    """Normalize a nonzero vector to its primitive integer representative.

    Opposite representatives are distinct directions; positive_rep picks
    the canonical sign for slope counting.
    """
    dx, dy = vec
    if dx == 0 and dy == 0:
        raise GeometryError("zero vector has no direction")
    if not isinstance(dx, int) or not isinstance(dy, int):
        fx, fy = Fraction(dx), Fraction(dy)
        d = fx.denominator * fy.denominator // gcd(fx.denominator, fy.denominator)
        dx, dy = int(fx * d), int(fy * d)
    g = gcd(abs(dx), abs(dy))
    return (dx // g, dy // g)


def positive_rep(d):
    """Canonical representative of the slope class of direction d."""
    if d[0] > 0 or (d[0] == 0 and d[1] > 0):
        return d
    return (-d[0], -d[1])


def _upper_half(v):
    """0 for angles in [0, pi), 1 for [pi, 2*pi), measured from +x."""
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def angle_less(a, b):
    """Exact ccw angular order from the +x axis; parallel ties are equal."""
    ha, hb = _upper_half(a), _upper_half(b)
    if ha != hb:
        return ha < hb
    return cross2(a, b) > 0


@functools.total_ordering
class AngleKey:
    """Sort key realizing angle_less for nonzero vectors."""

    __slots__ = ("d",)

    def __init__(self, d):
        self.d = d

    def __eq__(self, other):
        return not angle_less(self.d, other.d) and not angle_less(other.d, self.d)

    def __lt__(self, other):
        return angle_less(self.d, other.d)

    def __hash__(self):
        return hash(direction(self.d))


def ccw_pos_lt(ref, a, b):
    """Is a strictly before b, sweeping counterclockwise starting at ref?

    All vectors nonzero; vectors codirectional with ref get position 0.
    """
    ca, cb = cross2(ref, a), cross2(ref, b)
    ha = 0 if (ca > 0 or (ca == 0 and dot(ref, a) > 0)) else 1
    hb = 0 if (cb > 0 or (cb == 0 and dot(ref, b) > 0)) else 1
    if ha != hb:
        return ha < hb
    return cross2(a, b) > 0


def ccw_between_strict(d, lo, hi):
    """Is direction d strictly inside the ccw open arc from lo to hi?"""
    c_lo_hi = cross2(lo, hi)
    c_lo_d = cross2(lo, d)
    c_d_hi = cross2(d, hi)
    if c_lo_hi > 0:
        return c_lo_d > 0 and c_d_hi > 0
    if c_lo_hi < 0:
        return c_lo_d > 0 or c_d_hi > 0
    if dot(lo, hi) > 0:
        return False  # codirectional: empty arc
    return c_lo_d > 0  # opposite: arc is the open half-turn left of lo


def convex_hull(points):
    """Convex hull corners in counterclockwise order (monotone chain).

    No three consecutive output vertices are colinear.  All-colinear
    inputs collapse to the two extreme points; a single distinct point
    yields a one-element chain.  Empty input is an error.
    """
    pts = sorted(set((p[0], p[1]) for p in points))
    if not pts:
        raise GeometryError("convex hull of empty point set")
    if len(pts) == 1:
        return [pts[0]]
    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    if len(lower) == 2 and len(upper) == 2:
        return lower  # all points colinear: two extremes
    return lower[:-1] + upper[:-1]


def extreme_index(chain, d):
    """Index of a vertex of a closed convex ccw chain maximizing dot(v, d).

    O(log n): binary search on the cyclically sorted edge directions for
    the first edge at or past perp(d).  Straight (colinear) vertices in
    the chain are fine.  Returns the first vertex of the max plateau.
    """
    n = len(chain)
    if n <= 2:
        return 0 if n == 1 or dot(chain[0], d) >= dot(chain[1], d) else 1
    x = perp(d)
    e0 = sub(chain[1], chain[0])

    def past(i):
        # pos(e_i) >= pos(x), positions measured ccw from e0
        e = sub(chain[(i + 1) % n], chain[i % n])
        return not ccw_pos_lt(e0, e, x)

    if past(0):
        return 0
    lo, hi = 0, n  # past(lo) false; past(hi) treated true (wrap)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if past(mid):
            hi = mid
        else:
            lo = mid
    return hi % n


def wedge_contains(apex, ray1, ray2, chain):
    """Is every vertex of a convex ccw chain inside the closed wedge?

    The wedge sits at ``apex`` between rays in directions ray1 and ray2,
    ray1 -> ray2 counterclockwise, spanning less than a half turn.
    Boundary counts as inside.  Two extremal-vertex binary searches.
    """
    c = cross2(ray1, ray2)
    if c == 0 and dot(ray1, ray2) > 0:
        raise GeometryError("zero-angle wedge")
    if c < 0:
        raise GeometryError("reflex wedge (angle over 180 degrees)")
    n1 = perp(ray1)  # inside: dot(p - apex, n1) >= 0
    n2 = neg(perp(ray2))  # inside: dot(p - apex, n2) >= 0
    for nrm in (n1, n2):
        i = extreme_index(chain, neg(nrm))
        if dot(sub(chain[i], apex), nrm) < 0:
            return False
    return True


def shoelace2(vertices):
    """Twice the signed area of the vertex cycle."""
    s = 0
    n = len(vertices)
    for i in range(n):
        a = vertices[i]
        b = vertices[(i + 1) % n]
        s += a[0] * b[1] - a[1] * b[0]
    return s


def point_on_segment(p, a, b):
    """Is p on the closed segment ab?"""
    if orient(a, b, p) != COLINEAR:
        return False
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def segments_intersect(a, b, c, d):
    """Do closed segments ab and cd share any point?"""
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    if o1 != o2 and o3 != o4:
        return True
    if o1 == 0 and point_on_segment(c, a, b):
        return True
    if o2 == 0 and point_on_segment(d, a, b):
        return True
    if o3 == 0 and point_on_segment(a, c, d):
        return True
    if o4 == 0 and point_on_segment(b, c, d):
        return True
    return False


def is_simple_cycle(vertices):
    """Exact simplicity test for a closed polygon boundary.

    Consecutive edges may share exactly their common endpoint (doubling
    back is rejected); any contact between non-adjacent edges fails.
    x-interval sweep; near O(n log n) on realistic inputs.
    """
    n = len(vertices)
    if n < 3:
        return False
    if len(set(vertices)) != n:
        return False
    for i in range(n):
        a, b, c = vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]
        if orient(a, b, c) == COLINEAR and dot(sub(b, a), sub(c, b)) < 0:
            return False  # spur: edge doubles back over its predecessor
    edges = []
    for i in range(n):
        a, b = vertices[i], vertices[(i + 1) % n]
        lo, hi = (a, b) if a <= b else (b, a)
        edges.append((lo[0], hi[0], a, b, i))
    edges.sort(key=lambda e: e[0])
    active = []
    for lo_x, hi_x, a, b, i in edges:
        keep = []
        for ent in active:
            if ent[1] < lo_x:
                continue
            keep.append(ent)
            j = ent[4]
            if (i - j) % n == 1 or (j - i) % n == 1:
                continue  # adjacent: sharing the common endpoint is legal
            if segments_intersect(a, b, ent[2], ent[3]):
                return False
        active = keep
        active.append((lo_x, hi_x, a, b, i))
    return True
