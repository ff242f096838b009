"""Geometry kernel: node shapes, covers, containment and rotation math.

Coordinates are real-valued scene units, y-up. Angles are radians measured
counterclockwise from the positive x-axis; producing operations normalize
them to [-pi, pi). Boundary points count as inside for every containment
test (closed regions), so borders used as resize handles have no dead edge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Union

from .errors import InsufficientCover, InvalidGeometry

Vec = tuple[float, float]

TWO_PI = 2.0 * math.pi


def ensure_finite(*values: float) -> None:
    """Reject NaN and infinity; the engine admits neither anywhere."""
    for v in values:
        if not math.isfinite(v):
            raise InvalidGeometry(f"non-finite coordinate: {v!r}")


def add(a: Vec, b: Vec) -> Vec:
    return (a[0] + b[0], a[1] + b[1])


def sub(a: Vec, b: Vec) -> Vec:
    return (a[0] - b[0], a[1] - b[1])


def scale(v: Vec, s: float) -> Vec:
    return (v[0] * s, v[1] * s)


def dot(a: Vec, b: Vec) -> float:
    return a[0] * b[0] + a[1] * b[1]


def cross(a: Vec, b: Vec) -> float:
    return a[0] * b[1] - a[1] * b[0]


def norm(v: Vec) -> float:
    return math.hypot(v[0], v[1])


def dist(a: Vec, b: Vec) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def normalize_angle(a: float) -> float:
    """Wrap an angle into [-pi, pi)."""
    a = (a + math.pi) % TWO_PI - math.pi
    if a >= math.pi:  # float wrap of tiny negatives can land exactly on pi
        a -= TWO_PI
    return a


def rotate_about(pt: Vec, center: Vec, angle: float) -> Vec:
    """Rotate pt about center by angle, counterclockwise-positive."""
    c, s = math.cos(angle), math.sin(angle)
    dx, dy = pt[0] - center[0], pt[1] - center[1]
    return (center[0] + c * dx - s * dy, center[1] + s * dx + c * dy)


def segment_distance(pt: Vec, a: Vec, b: Vec) -> float:
    """Euclidean distance from pt to the closed segment ab."""
    ab = sub(b, a)
    ab2 = dot(ab, ab)
    if ab2 == 0.0:
        raise InvalidGeometry("degenerate segment: endpoints coincide")
    t = dot(sub(pt, a), ab) / ab2
    t = max(0.0, min(1.0, t))
    return dist(pt, add(a, scale(ab, t)))


def is_strictly_convex_ccw(vertices: Sequence[Vec]) -> bool:
    """True for a strictly convex, counterclockwise, non-self-intersecting ring.

    Every turn must be a strict left turn and the turns must add up to one
    full revolution (rules out multiply-wound rings).
    """
    n = len(vertices)
    if n < 3:
        return False
    total = 0.0
    for i in range(n):
        o, p, q = vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]
        u, v = sub(p, o), sub(q, p)
        if cross(u, v) <= 0.0:
            return False
        total += math.atan2(cross(u, v), dot(u, v))
    return abs(total - TWO_PI) < 1e-6


def point_in_convex(vertices: Sequence[Vec], pt: Vec) -> bool:
    """Closed containment in a counterclockwise convex polygon."""
    n = len(vertices)
    for i in range(n):
        a, b = vertices[i], vertices[(i + 1) % n]
        if cross(sub(b, a), sub(pt, a)) < 0.0:
            return False
    return True


def polygon_centroid(vertices: Sequence[Vec]) -> Vec:
    """Mean of the vertices (the rotation pivot convention for polygons)."""
    n = len(vertices)
    return (sum(p[0] for p in vertices) / n, sum(p[1] for p in vertices) / n)


# --- node shapes ------------------------------------------------------------


@dataclass(frozen=True)
class Disc:
    """Filled circle."""

    center: Vec
    radius: float

    def __post_init__(self):
        ensure_finite(*self.center, self.radius)
        if self.radius <= 0.0:
            raise InvalidGeometry(f"disc radius must be positive, got {self.radius}")


@dataclass(frozen=True)
class ConvexPoly:
    """Strictly convex counterclockwise polygon, at least 3 vertices."""

    vertices: tuple[Vec, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(tuple(p) for p in self.vertices))
        for p in self.vertices:
            ensure_finite(*p)
        if not is_strictly_convex_ccw(self.vertices):
            raise InvalidGeometry("polygon is not strictly convex counterclockwise")


@dataclass(frozen=True)
class Strip:
    """Stadium: all points within halfwidth of segment ab, rounded end-caps."""

    a: Vec
    b: Vec
    halfwidth: float

    def __post_init__(self):
        ensure_finite(*self.a, *self.b, self.halfwidth)
        if self.a == self.b:
            raise InvalidGeometry("strip endpoints must be distinct")
        if self.halfwidth <= 0.0:
            raise InvalidGeometry(f"strip halfwidth must be positive, got {self.halfwidth}")


NodeShape = Union[Disc, ConvexPoly, Strip]


class NodeBehavior(Enum):
    WHOLE_MOVE = "whole-move"
    NODE_MOVE = "node-move"
    FROZEN = "frozen"
    TRANSPARENT = "transparent"


class CursorHint(Enum):
    MOVE = "move"
    RESIZE_HORIZONTAL = "resize-horizontal"
    RESIZE_VERTICAL = "resize-vertical"
    RESIZE_DIAGONAL = "resize-diagonal"
    ROTATE = "rotate"
    DEFAULT = "default"


@dataclass(frozen=True)
class CoverNode:
    """One sensitive region of a cover. The cursor hint carries no semantics."""

    shape: NodeShape
    behavior: NodeBehavior
    cursor: CursorHint = CursorHint.DEFAULT


@dataclass(frozen=True)
class Cover:
    """Ordered node list; lowest index is checked first and wins overlaps."""

    nodes: tuple[CoverNode, ...]

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))

    def __len__(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class HitInfo:
    index: int
    behavior: NodeBehavior
    cursor: CursorHint


def shape_contains(shape: NodeShape, pt: Vec) -> bool:
    """Closed containment test for one node shape."""
    if isinstance(shape, Disc):
        return dist(pt, shape.center) <= shape.radius
    if isinstance(shape, ConvexPoly):
        return point_in_convex(shape.vertices, pt)
    return segment_distance(pt, shape.a, shape.b) <= shape.halfwidth


def contains(node: CoverNode | NodeShape, pt: Vec) -> bool:
    """True iff pt is inside or on the boundary of the node's shape."""
    shape = node.shape if isinstance(node, CoverNode) else node
    return shape_contains(shape, pt)


def hit(cover: Cover, pt: Vec) -> HitInfo | None:
    """First node containing pt, or None.

    Transparent nodes are reported as hits; the scene layer treats them as
    pass-through to whatever lies beneath the object.
    """
    for i, node in enumerate(cover.nodes):
        if contains(node, pt):
            return HitInfo(i, node.behavior, node.cursor)
    return None


def min_arc_nodes(radius: float, band: float, sweep: float = TWO_PI) -> int:
    """Smallest node count that covers the arc without gaps."""
    if sweep >= TWO_PI - 1e-12:
        return max(3, math.ceil(math.pi * radius / band))
    return max(3, math.ceil(sweep * radius / (2.0 * band)) + 1)


def arc_band_nodes(
    center: Vec,
    radius: float,
    band: float,
    n: int,
    behavior: NodeBehavior,
    cursor: CursorHint = CursorHint.RESIZE_DIAGONAL,
    start_angle: float = 0.0,
    sweep: float = TWO_PI,
) -> list[CoverNode]:
    """n disc nodes of radius band, centers equally spaced along a circular arc.

    A full-circle band spaces centers by 2*pi/n; a partial arc places nodes on
    both endpoints. Raises InsufficientCover when the spacing would leave arc
    points uncovered: the center spacing radius*step must not exceed 2*band
    (for a full circle that is the n >= pi*radius/band threshold).
    """
    if not (radius > band > 0.0):
        raise InvalidGeometry(f"need radius > band > 0, got radius={radius} band={band}")
    if n < 3:
        raise InvalidGeometry(f"need at least 3 band nodes, got {n}")
    if sweep <= 0.0:
        raise InvalidGeometry(f"arc sweep must be positive, got {sweep}")
    full = sweep >= TWO_PI - 1e-12
    step = TWO_PI / n if full else sweep / (n - 1)
    if radius * step > 2.0 * band + 1e-12:
        raise InsufficientCover(
            f"{n} nodes leave gaps on an arc of radius {radius}; "
            f"need at least {min_arc_nodes(radius, band, sweep)}"
        )
    nodes = []
    for i in range(n):
        a = start_angle + i * step
        c = (center[0] + radius * math.cos(a), center[1] + radius * math.sin(a))
        nodes.append(CoverNode(Disc(c, band), behavior, cursor))
    return nodes


# --- footprint intersection (strict interiors; boundary contact permitted) ---


def _segments_properly_cross(a: Vec, b: Vec, c: Vec, d: Vec) -> bool:
    d1 = cross(sub(b, a), sub(c, a))
    d2 = cross(sub(b, a), sub(d, a))
    d3 = cross(sub(d, c), sub(a, c))
    d4 = cross(sub(d, c), sub(b, c))
    return ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and (
        (d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)
    )


def seg_seg_distance(a: Vec, b: Vec, c: Vec, d: Vec) -> float:
    """Distance between two closed segments (0 when they cross)."""
    if _segments_properly_cross(a, b, c, d):
        return 0.0
    return min(
        segment_distance(a, c, d),
        segment_distance(b, c, d),
        segment_distance(c, a, b),
        segment_distance(d, a, b),
    )


def _disc_poly_distance(center: Vec, vertices: Sequence[Vec]) -> float:
    if point_in_convex(vertices, center):
        return 0.0
    n = len(vertices)
    return min(segment_distance(center, vertices[i], vertices[(i + 1) % n]) for i in range(n))


def _seg_poly_distance(a: Vec, b: Vec, vertices: Sequence[Vec]) -> float:
    if point_in_convex(vertices, a) or point_in_convex(vertices, b):
        return 0.0
    n = len(vertices)
    return min(seg_seg_distance(a, b, vertices[i], vertices[(i + 1) % n]) for i in range(n))


def _convex_interiors_overlap(p: Sequence[Vec], q: Sequence[Vec]) -> bool:
    # Separating-axis test over both edge normal sets; touching is separation.
    for poly in (p, q):
        n = len(poly)
        for i in range(n):
            ex = poly[(i + 1) % n][0] - poly[i][0]
            ey = poly[(i + 1) % n][1] - poly[i][1]
            ax, ay = -ey, ex
            p_lo = min(v[0] * ax + v[1] * ay for v in p)
            p_hi = max(v[0] * ax + v[1] * ay for v in p)
            q_lo = min(v[0] * ax + v[1] * ay for v in q)
            q_hi = max(v[0] * ax + v[1] * ay for v in q)
            if p_hi <= q_lo or q_hi <= p_lo:
                return False
    return True


def shapes_intersect(s1: NodeShape, s2: NodeShape) -> bool:
    """True iff the interiors of two footprint pieces overlap.

    Zero-tolerance boundary contact does not count as overlap, so objects may
    rest exactly against each other.
    """
    if isinstance(s1, Disc):
        if isinstance(s2, Disc):
            return dist(s1.center, s2.center) < s1.radius + s2.radius
        if isinstance(s2, ConvexPoly):
            return _disc_poly_distance(s1.center, s2.vertices) < s1.radius
        return segment_distance(s1.center, s2.a, s2.b) < s1.radius + s2.halfwidth
    if isinstance(s1, ConvexPoly):
        if isinstance(s2, Disc):
            return _disc_poly_distance(s2.center, s1.vertices) < s2.radius
        if isinstance(s2, ConvexPoly):
            return _convex_interiors_overlap(s1.vertices, s2.vertices)
        return _seg_poly_distance(s2.a, s2.b, s1.vertices) < s2.halfwidth
    # s1 is a Strip
    if isinstance(s2, Disc):
        return segment_distance(s2.center, s1.a, s1.b) < s1.halfwidth + s2.radius
    if isinstance(s2, ConvexPoly):
        return _seg_poly_distance(s1.a, s1.b, s2.vertices) < s1.halfwidth
    return seg_seg_distance(s1.a, s1.b, s2.a, s2.b) < s1.halfwidth + s2.halfwidth


def translate_shape(shape: NodeShape, delta: Vec) -> NodeShape:
    """Copy of the shape shifted by delta."""
    if isinstance(shape, Disc):
        return Disc(add(shape.center, delta), shape.radius)
    if isinstance(shape, Strip):
        return Strip(add(shape.a, delta), add(shape.b, delta), shape.halfwidth)
    return ConvexPoly(tuple(add(v, delta) for v in shape.vertices))


def shape_bbox(shape: NodeShape) -> tuple[float, float, float, float]:
    """Axis-aligned (x0, y0, x1, y1) bounds of one shape."""
    if isinstance(shape, Disc):
        cx, cy = shape.center
        r = shape.radius
        return (cx - r, cy - r, cx + r, cy + r)
    if isinstance(shape, ConvexPoly):
        xs = [p[0] for p in shape.vertices]
        ys = [p[1] for p in shape.vertices]
        return (min(xs), min(ys), max(xs), max(ys))
    hw = shape.halfwidth
    return (
        min(shape.a[0], shape.b[0]) - hw,
        min(shape.a[1], shape.b[1]) - hw,
        max(shape.a[0], shape.b[0]) + hw,
        max(shape.a[1], shape.b[1]) + hw,
    )


def union_bbox(boxes: Sequence[tuple[float, float, float, float]]) -> tuple[float, float, float, float]:
    x0 = min(b[0] for b in boxes)
    y0 = min(b[1] for b in boxes)
    x1 = max(b[2] for b in boxes)
    y1 = max(b[3] for b in boxes)
    return (x0, y0, x1, y1)
