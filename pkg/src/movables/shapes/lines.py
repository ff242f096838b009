"""Solitary and segmented lines.

End points and joints carry circular node-move handles; each segment body
is a strip that moves the whole line.  The drawn footprint is the segment
strip at half the stroke thickness, which is what overlap rules and the
labyrinth scenarios see.
"""

from __future__ import annotations

from typing import Any

from ..geometry import (
    CoverNode,
    CursorHint,
    Disc,
    NodeBehavior,
    NodeShape,
    Strip,
    Vec,
    dist,
    rotate_about,
)
from .base import (
    EDGE_HALFWIDTH,
    HANDLE_RADIUS,
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

MIN_SEGMENT = 1e-9


class SolitaryLine(MovableObject):
    kind = "line"

    def __init__(self, object_id: str, a: Vec, b: Vec, thickness: float = 2.0, **common: Any):
        common.setdefault("rotatable", True)
        super().__init__(object_id, **common)
        self.a = a
        self.b = b
        self.thickness = thickness

    def _layout(self):
        return [
            (CoverNode(Disc(self.a, HANDLE_RADIUS), NodeBehavior.NODE_MOVE, CursorHint.MOVE), ("end", 0)),
            (CoverNode(Disc(self.b, HANDLE_RADIUS), NodeBehavior.NODE_MOVE, CursorHint.MOVE), ("end", 1)),
            (CoverNode(Strip(self.a, self.b, EDGE_HALFWIDTH), NodeBehavior.WHOLE_MOVE, CursorHint.MOVE), ("body",)),
        ]

    def _shift(self, delta: Vec) -> None:
        self.a = (self.a[0] + delta[0], self.a[1] + delta[1])
        self.b = (self.b[0] + delta[0], self.b[1] + delta[1])

    def _move_node(self, role: Role, pointer: Vec, last: Vec, safe: bool) -> Vec:
        which = role[1]
        other = self.b if which == 0 else self.a
        if safe and dist(pointer, other) < MIN_SEGMENT:
            return last  # refuse to collapse the segment
        if which == 0:
            self.a = pointer
        else:
            self.b = pointer
        return pointer

    def _rotate(self, pivot: Vec, dangle: float) -> None:
        self.a = rotate_about(self.a, pivot, dangle)
        self.b = rotate_about(self.b, pivot, dangle)

    def rotation_center(self) -> Vec:
        return (0.5 * (self.a[0] + self.b[0]), 0.5 * (self.a[1] + self.b[1]))

    def footprint(self) -> list[NodeShape]:
        return [Strip(self.a, self.b, max(self.thickness / 2, 0.5))]

    def validate(self) -> list[str]:
        out = []
        if dist(self.a, self.b) < MIN_SEGMENT:
            out.append(f"{self.id}: line endpoints coincide")
        return out

    def to_fields(self):
        return [("a", fmt_pt(self.a)), ("b", fmt_pt(self.b)), ("thickness", fmt_f(self.thickness))]

    @classmethod
    def from_fields(cls, object_id, fields, **common):
        a, b, th = require_fields(fields, "a", "b", "thickness")
        return cls(object_id, parse_pt(a), parse_pt(b), parse_f(th), **common)


class SegmentedLine(MovableObject):
    """Polyline: every joint is reconfigurable, every segment moves the whole."""

    kind = "segmented-line"

    def __init__(self, object_id: str, points: list[Vec], thickness: float = 2.0, **common: Any):
        common.setdefault("rotatable", True)
        super().__init__(object_id, **common)
        if len(points) < 2:
            raise ValueError("segmented line needs at least two points")
        self.points = list(points)
        self.thickness = thickness

    def _layout(self):
        out = []
        for i, p in enumerate(self.points):
            node = CoverNode(Disc(p, HANDLE_RADIUS), NodeBehavior.NODE_MOVE, CursorHint.MOVE)
            out.append((node, ("joint", i)))
        for i in range(len(self.points) - 1):
            a, b = self.points[i], self.points[i + 1]
            if dist(a, b) < MIN_SEGMENT:
                continue
            node = CoverNode(Strip(a, b, EDGE_HALFWIDTH), NodeBehavior.WHOLE_MOVE, CursorHint.MOVE)
            out.append((node, ("segment", i)))
        return out

    def _shift(self, delta: Vec) -> None:
        self.points = [(p[0] + delta[0], p[1] + delta[1]) for p in self.points]

    def _move_node(self, role: Role, pointer: Vec, last: Vec, safe: bool) -> Vec:
        return self.reconfigure_vertex(role[1], pointer, safe, last)

    def reconfigure_vertex(self, index: int, pointer: Vec, safe: bool = True, last: Vec | None = None) -> Vec:
        if last is None:
            last = self.points[index]
        if safe:
            for j in (index - 1, index + 1):
                if 0 <= j < len(self.points) and dist(pointer, self.points[j]) < MIN_SEGMENT:
                    return last
        self.points[index] = pointer
        return pointer

    def _rotate(self, pivot: Vec, dangle: float) -> None:
        self.points = [rotate_about(p, pivot, dangle) for p in self.points]

    def rotation_center(self) -> Vec:
        n = len(self.points)
        return (sum(p[0] for p in self.points) / n, sum(p[1] for p in self.points) / n)

    def footprint(self) -> list[NodeShape]:
        hw = max(self.thickness / 2, 0.5)
        out: list[NodeShape] = []
        for a, b in zip(self.points, self.points[1:]):
            if dist(a, b) >= MIN_SEGMENT:
                out.append(Strip(a, b, hw))
        return out

    def validate(self) -> list[str]:
        out = []
        for i, (a, b) in enumerate(zip(self.points, self.points[1:])):
            if dist(a, b) < MIN_SEGMENT:
                out.append(f"{self.id}: segment {i} is degenerate")
        return out

    def to_fields(self):
        return [("points", fmt_pts(self.points)), ("thickness", fmt_f(self.thickness))]

    @classmethod
    def from_fields(cls, object_id, fields, **common):
        pts, th = require_fields(fields, "points", "thickness")
        return cls(object_id, parse_pts(pts), parse_f(th), **common)
