"""Polygons: regular, always-convex, and chatoyant (freely reconfigurable).

All three share the cover recipe: vertex handles first, then a center
handle where one exists, then edge strips that scale the polygon, then the
interior.  What a vertex drag means differs: regular polygons stay regular
(the drag sets radius and orientation), always-convex polygons clamp the
drag to the convexity region, chatoyant polygons accept anything including
self-intersecting, inside-out configurations.
"""

from __future__ import annotations

import math
from typing import Any

from ..geometry import (
    ConvexPoly,
    CoverNode,
    CursorHint,
    Disc,
    NodeBehavior,
    NodeShape,
    Strip,
    Vec,
    add,
    cross,
    dist,
    is_strictly_convex_ccw,
    normalize_angle,
    polygon_centroid,
    rotate_about,
    scale,
    sub,
    TWO_PI,
)
from .base import (
    EDGE_HALFWIDTH,
    HANDLE_RADIUS,
    MIN_GAP,
    MovableObject,
    Role,
    fmt_f,
    fmt_pt,
    fmt_pts,
    parse_f,
    parse_pt,
    parse_pts,
    require_fields,
)

MIN_SCALE = 1e-6


def _vertex_nodes(points: list[Vec]):
    for k, p in enumerate(points):
        yield CoverNode(Disc(p, HANDLE_RADIUS), NodeBehavior.NODE_MOVE, CursorHint.MOVE), ("vertex", k)


def _edge_nodes(points: list[Vec]):
    n = len(points)
    for k in range(n):
        a, b = points[k], points[(k + 1) % n]
        if dist(a, b) < 1e-9:
            continue
        node = CoverNode(Strip(a, b, EDGE_HALFWIDTH), NodeBehavior.NODE_MOVE, CursorHint.RESIZE_DIAGONAL)
        yield node, ("edge", k)


class _ScalablePolygon(MovableObject):
    """Shared uniform-scale behavior; subclasses define the scale anchor."""

    def _scale_anchor(self) -> Vec:
        raise NotImplementedError

    def _apply_scale(self, factor: float) -> None:
        raise NotImplementedError

    def _scale_reach(self) -> float:
        raise NotImplementedError

    def scale_uniform(self, border_before: Vec, pointer: Vec, safe: bool = True) -> Vec:
        anchor = self._scale_anchor()
        base = dist(border_before, anchor)
        target = dist(pointer, anchor)
        if base < 1e-9 or target < 1e-9:
            return border_before
        factor = target / base
        if safe:
            reach = self._scale_reach()
            lo, hi = MIN_SCALE, math.inf
            if reach > 0:
                lo = max(lo, MIN_GAP / reach)
                if self.size_limits is not None:
                    lo = max(lo, self.size_limits.minimum[0] / reach)
                    hi = self.size_limits.maximum[0] / reach
            factor = min(max(factor, lo), hi)
        self._apply_scale(factor)
        return add(anchor, scale(sub(border_before, anchor), factor))


class RegularPolygon(_ScalablePolygon):
    """N equal sides; vertex drags keep it regular by setting the radius
    and orientation from the pointer."""

    kind = "regular-polygon"

    def __init__(
        self,
        object_id: str,
        center: Vec,
        radius: float,
        sides: int,
        orientation: float = 0.0,
        **common: Any,
    ):
        common.setdefault("rotatable", True)
        super().__init__(object_id, **common)
        if sides < 3:
            raise ValueError(f"{object_id}: a polygon needs at least 3 sides")
        if radius <= 0:
            raise ValueError(f"{object_id}: radius must be positive")
        self.center = center
        self.radius = radius
        self.sides = sides
        self.orientation = normalize_angle(orientation)

    def vertices(self) -> list[Vec]:
        step = TWO_PI / self.sides
        return [
            add(self.center, scale((math.cos(self.orientation + k * step), math.sin(self.orientation + k * step)), self.radius))
            for k in range(self.sides)
        ]

    def _layout(self):
        pts = self.vertices()
        out = list(_vertex_nodes(pts))
        out.append(
            (CoverNode(Disc(self.center, HANDLE_RADIUS), NodeBehavior.NODE_MOVE, CursorHint.MOVE), ("center",))
        )
        out.extend(_edge_nodes(pts))
        out.append((CoverNode(ConvexPoly(tuple(pts)), NodeBehavior.WHOLE_MOVE, CursorHint.MOVE), ("body",)))
        return out

    def _shift(self, delta: Vec) -> None:
        self.center = add(self.center, delta)

    def _min_radius(self) -> float:
        lo = MIN_GAP
        if self.size_limits is not None:
            lo = max(lo, self.size_limits.minimum[0])
        return lo

    def reconfigure_vertex(self, index: int, pointer: Vec, safe: bool = True) -> Vec:
        rel = sub(pointer, self.center)
        r = math.hypot(*rel)
        if r < 1e-12:
            return self.vertices()[index]
        if safe:
            hi = self.size_limits.maximum[0] if self.size_limits is not None else math.inf
            r = min(max(r, self._min_radius()), hi)
        step = TWO_PI / self.sides
        self.orientation = normalize_angle(math.atan2(rel[1], rel[0]) - index * step)
        self.radius = r
        return self.vertices()[index]

    def _scale_anchor(self) -> Vec:
        return self.center

    def _scale_reach(self) -> float:
        return self.radius

    def _apply_scale(self, factor: float) -> None:
        self.radius *= factor

    def _move_node(self, role: Role, pointer: Vec, last: Vec, safe: bool) -> Vec:
        tag = role[0]
        if tag == "vertex":
            return self.reconfigure_vertex(role[1], pointer, safe)
        if tag == "center":
            self.center = pointer
            return pointer
        if tag == "edge":
            return self.scale_uniform(last, pointer, safe)
        return super()._move_node(role, pointer, last, safe)

    def _rotate(self, pivot: Vec, dangle: float) -> None:
        self.center = rotate_about(self.center, pivot, dangle)
        self.orientation = normalize_angle(self.orientation + dangle)

    def rotation_center(self) -> Vec:
        return self.center

    def footprint(self) -> list[NodeShape]:
        return [ConvexPoly(tuple(self.vertices()))]

    def validate(self) -> list[str]:
        if self.radius <= 0:
            return [f"{self.id}: radius {self.radius} not positive"]
        return []

    def to_fields(self):
        return [
            ("center", fmt_pt(self.center)),
            ("radius", fmt_f(self.radius)),
            ("sides", str(self.sides)),
            ("orientation", fmt_f(self.orientation)),
        ]

    @classmethod
    def from_fields(cls, object_id, fields, **common):
        c, r, n, o = require_fields(fields, "center", "radius", "sides", "orientation")
        return cls(object_id, parse_pt(c), parse_f(r), int(n), parse_f(o), **common)


class ConvexPolygon(_ScalablePolygon):
    """Arbitrary polygon that is kept strictly convex: a vertex drag stops
    at the farthest point along the drag ray preserving convexity."""

    kind = "convex-polygon"

    def __init__(self, object_id: str, vertices: list[Vec], **common: Any):
        common.setdefault("rotatable", True)
        super().__init__(object_id, **common)
        if not is_strictly_convex_ccw(vertices):
            raise ValueError(f"{object_id}: vertices must be strictly convex counterclockwise")
        self.vertices = list(vertices)

    def _layout(self):
        out = list(_vertex_nodes(self.vertices))
        out.extend(_edge_nodes(self.vertices))
        out.append(
            (CoverNode(ConvexPoly(tuple(self.vertices)), NodeBehavior.WHOLE_MOVE, CursorHint.MOVE), ("body",))
        )
        return out

    def _shift(self, delta: Vec) -> None:
        self.vertices = [add(p, delta) for p in self.vertices]

    def reconfigure_vertex(self, index: int, pointer: Vec, safe: bool = True) -> Vec:
        if not safe:
            self.vertices[index] = pointer
            return pointer
        cur = self.vertices[index]

        def convex_with(q: Vec) -> bool:
            trial = list(self.vertices)
            trial[index] = q
            return is_strictly_convex_ccw(trial)

        if convex_with(pointer):
            self.vertices[index] = pointer
            return pointer
        length = dist(cur, pointer)
        if length < 1e-12:
            return cur
        # the convexity region for one vertex is an intersection of open
        # half-planes, so validity along the ray is a single interval
        lo, hi = 0.0, 1.0
        while (hi - lo) * length > 1e-6:
            mid = 0.5 * (lo + hi)
            if convex_with((cur[0] + (pointer[0] - cur[0]) * mid, cur[1] + (pointer[1] - cur[1]) * mid)):
                lo = mid
            else:
                hi = mid
        stop = (cur[0] + (pointer[0] - cur[0]) * lo, cur[1] + (pointer[1] - cur[1]) * lo)
        self.vertices[index] = stop
        return stop

    def _scale_anchor(self) -> Vec:
        return polygon_centroid(self.vertices)

    def _scale_reach(self) -> float:
        anchor = self._scale_anchor()
        return max(dist(p, anchor) for p in self.vertices)

    def _apply_scale(self, factor: float) -> None:
        anchor = self._scale_anchor()
        self.vertices = [add(anchor, scale(sub(p, anchor), factor)) for p in self.vertices]

    def _move_node(self, role: Role, pointer: Vec, last: Vec, safe: bool) -> Vec:
        tag = role[0]
        if tag == "vertex":
            return self.reconfigure_vertex(role[1], pointer, safe)
        if tag == "edge":
            return self.scale_uniform(last, pointer, safe)
        return super()._move_node(role, pointer, last, safe)

    def _rotate(self, pivot: Vec, dangle: float) -> None:
        self.vertices = [rotate_about(p, pivot, dangle) for p in self.vertices]

    def rotation_center(self) -> Vec:
        return polygon_centroid(self.vertices)

    def footprint(self) -> list[NodeShape]:
        return [ConvexPoly(tuple(self.vertices))]

    def validate(self) -> list[str]:
        if not is_strictly_convex_ccw(self.vertices):
            return [f"{self.id}: vertices are not strictly convex"]
        return []

    def to_fields(self):
        return [("vertices", fmt_pts(self.vertices))]

    @classmethod
    def from_fields(cls, object_id, fields, **common):
        (vs,) = require_fields(fields, "vertices")
        return cls(object_id, parse_pts(vs), **common)


class ChatoyantPolygon(_ScalablePolygon):
    """Freely reconfigurable polygon: vertices go wherever the pointer
    goes, self-intersection included, and the scale anchor is an explicit
    center point that can itself be moved."""

    kind = "chatoyant"

    def __init__(self, object_id: str, center: Vec, vertices: list[Vec], **common: Any):
        common.setdefault("rotatable", True)
        super().__init__(object_id, **common)
        if len(vertices) < 3:
            raise ValueError(f"{object_id}: a polygon needs at least 3 vertices")
        self.center = center
        self.vertices = list(vertices)

    def _fan(self) -> list[ConvexPoly]:
        # triangle fan about the center; degenerate slivers are skipped and
        # inverted triangles are flipped so each piece is a valid convex node
        tris = []
        n = len(self.vertices)
        for i in range(n):
            a, b = self.vertices[i], self.vertices[(i + 1) % n]
            cr = cross(sub(a, self.center), sub(b, self.center))
            if abs(cr) < 1e-9:
                continue
            order = (self.center, a, b) if cr > 0 else (self.center, b, a)
            tris.append(ConvexPoly(order))
        return tris

    def _layout(self):
        out = list(_vertex_nodes(self.vertices))
        out.append(
            (CoverNode(Disc(self.center, HANDLE_RADIUS), NodeBehavior.NODE_MOVE, CursorHint.MOVE), ("center",))
        )
        out.extend(_edge_nodes(self.vertices))
        for i, tri in enumerate(self._fan()):
            out.append((CoverNode(tri, NodeBehavior.WHOLE_MOVE, CursorHint.MOVE), ("body", i)))
        return out

    def _shift(self, delta: Vec) -> None:
        self.center = add(self.center, delta)
        self.vertices = [add(p, delta) for p in self.vertices]

    def reconfigure_vertex(self, index: int, pointer: Vec, safe: bool = True) -> Vec:
        self.vertices[index] = pointer
        return pointer

    def move_center(self, pointer: Vec) -> Vec:
        self.center = pointer
        return pointer

    def _scale_anchor(self) -> Vec:
        return self.center

    def _scale_reach(self) -> float:
        return max(dist(p, self.center) for p in self.vertices)

    def _apply_scale(self, factor: float) -> None:
        self.vertices = [add(self.center, scale(sub(p, self.center), factor)) for p in self.vertices]

    def _move_node(self, role: Role, pointer: Vec, last: Vec, safe: bool) -> Vec:
        tag = role[0]
        if tag == "vertex":
            return self.reconfigure_vertex(role[1], pointer, safe)
        if tag == "center":
            return self.move_center(pointer)
        if tag == "edge":
            return self.scale_uniform(last, pointer, safe)
        return super()._move_node(role, pointer, last, safe)

    def _rotate(self, pivot: Vec, dangle: float) -> None:
        self.center = rotate_about(self.center, pivot, dangle)
        self.vertices = [rotate_about(p, pivot, dangle) for p in self.vertices]

    def rotation_center(self) -> Vec:
        return self.center

    def footprint(self) -> list[NodeShape]:
        tris = self._fan()
        if not tris:
            return [Disc(self.center, MIN_GAP)]
        return list(tris)

    def validate(self) -> list[str]:
        if not self._fan():
            return [f"{self.id}: every fan triangle is degenerate"]
        return []

    def to_fields(self):
        return [("center", fmt_pt(self.center)), ("vertices", fmt_pts(self.vertices))]

    @classmethod
    def from_fields(cls, object_id, fields, **common):
        c, vs = require_fields(fields, "center", "vertices")
        return cls(object_id, parse_pt(c), parse_pts(vs), **common)
