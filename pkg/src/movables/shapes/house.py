"""A simple house: an axis-aligned body rectangle plus a freely movable
roof apex that must stay above the body's top edge."""

from __future__ import annotations

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
)
from .base import (
    DEFAULT_MIN_SIZE,
    EDGE_HALFWIDTH,
    HANDLE_RADIUS,
    MIN_GAP,
    MovableObject,
    Role,
    fmt_f,
    fmt_pt,
    parse_f,
    parse_pt,
    require_fields,
)

CORNER_SIGNS = {"ne": (1, 1), "nw": (-1, 1), "sw": (-1, -1), "se": (1, -1)}
OPPOSITE = {"ne": "sw", "sw": "ne", "nw": "se", "se": "nw"}


class SimpleHouse(MovableObject):
    kind = "house"

    def __init__(self, object_id: str, center: Vec, w: float, h: float, apex: Vec, **common: Any):
        super().__init__(object_id, **common)
        if w <= 0 or h <= 0:
            raise ValueError(f"{object_id}: body sides must be positive")
        if apex[1] <= center[1] + h / 2:
            raise ValueError(f"{object_id}: apex must sit above the body top")
        self.center = center
        self.w = w
        self.h = h
        self.apex = apex

    # -- frame helpers -------------------------------------------------------

    def _top(self) -> float:
        return self.center[1] + self.h / 2

    def corner_pos(self, name: str) -> Vec:
        su, sv = CORNER_SIGNS[name]
        return (self.center[0] + su * self.w / 2, self.center[1] + sv * self.h / 2)

    def _body_poly(self) -> ConvexPoly:
        return ConvexPoly(tuple(self.corner_pos(n) for n in ("se", "ne", "nw", "sw")))

    def _roof_poly(self) -> ConvexPoly:
        return ConvexPoly((self.corner_pos("nw"), self.corner_pos("ne"), self.apex))

    # -- cover ----------------------------------------------------------------

    def _layout(self):
        out = [
            (CoverNode(Disc(self.apex, HANDLE_RADIUS), NodeBehavior.NODE_MOVE, CursorHint.MOVE), ("apex",))
        ]
        for name in ("nw", "ne", "se", "sw"):
            node = CoverNode(
                Disc(self.corner_pos(name), HANDLE_RADIUS),
                NodeBehavior.NODE_MOVE,
                CursorHint.RESIZE_DIAGONAL,
            )
            out.append((node, ("corner", name)))
        edges = {"n": ("nw", "ne"), "e": ("ne", "se"), "s": ("se", "sw"), "w": ("sw", "nw")}
        for name, (ca, cb) in edges.items():
            hint = CursorHint.RESIZE_VERTICAL if name in ("n", "s") else CursorHint.RESIZE_HORIZONTAL
            node = CoverNode(Strip(self.corner_pos(ca), self.corner_pos(cb), EDGE_HALFWIDTH), NodeBehavior.NODE_MOVE, hint)
            out.append((node, ("edge", name)))
        out.append((CoverNode(self._body_poly(), NodeBehavior.WHOLE_MOVE, CursorHint.MOVE), ("body", "rect")))
        out.append((CoverNode(self._roof_poly(), NodeBehavior.WHOLE_MOVE, CursorHint.MOVE), ("body", "roof")))
        return out

    # -- movement ---------------------------------------------------------------

    def _shift(self, delta: Vec) -> None:
        self.center = add(self.center, delta)
        self.apex = add(self.apex, delta)

    def move_apex(self, pointer: Vec, safe: bool = True) -> Vec:
        y = pointer[1]
        if safe:
            y = max(y, self._top() + MIN_GAP)
        self.apex = (pointer[0], y)
        return self.apex

    def reconfigure_vertex(self, index: int, pointer: Vec, safe: bool = True) -> Vec:
        # the apex is the house's only reconfigurable vertex
        return self.move_apex(pointer, safe)

    def _max_height(self, bottom: float) -> float:
        return self.apex[1] - MIN_GAP - bottom

    def _clamped(self, w: float, h: float) -> tuple[float, float]:
        lo_w, lo_h = DEFAULT_MIN_SIZE, DEFAULT_MIN_SIZE
        if self.size_limits is not None:
            lo_w = max(lo_w, self.size_limits.minimum[0])
            lo_h = max(lo_h, self.size_limits.minimum[1])
            w = min(w, self.size_limits.maximum[0])
            h = min(h, self.size_limits.maximum[1])
        return max(w, lo_w), max(h, lo_h)

    def _drag_corner(self, name: str, p: Vec, safe: bool) -> Vec:
        su, sv = CORNER_SIGNS[name]
        fx, fy = self.corner_pos(OPPOSITE[name])
        w_new = su * (p[0] - fx)
        h_new = sv * (p[1] - fy)
        if safe:
            w_new, h_new = self._clamped(w_new, h_new)
            if sv > 0:  # the top edge moves; keep it under the apex
                h_new = min(h_new, self._max_height(bottom=fy))
                h_new = max(h_new, DEFAULT_MIN_SIZE)
        self.w, self.h = w_new, h_new
        self.center = (fx + su * w_new / 2, fy + sv * h_new / 2)
        return self.corner_pos(name)

    def _drag_edge(self, name: str, p: Vec, last: Vec, safe: bool) -> Vec:
        horizontal = name in ("e", "w")
        sign = 1 if name in ("e", "n") else -1
        if horizontal:
            opp_x = self.center[0] - sign * self.w / 2
            w_new = sign * (p[0] - opp_x)
            if safe:
                w_new, _ = self._clamped(w_new, self.h)
            dx = (opp_x + sign * w_new) - (opp_x + sign * self.w)
            self.w = w_new
            self.center = (opp_x + sign * w_new / 2, self.center[1])
            return (last[0] + dx, last[1])
        opp_y = self.center[1] - sign * self.h / 2
        h_new = sign * (p[1] - opp_y)
        if safe:
            _, h_new = self._clamped(self.w, h_new)
            if sign > 0:  # north edge up against the apex
                h_new = min(h_new, self._max_height(bottom=opp_y))
                h_new = max(h_new, DEFAULT_MIN_SIZE)
        dy = (opp_y + sign * h_new) - (opp_y + sign * self.h)
        self.h = h_new
        self.center = (self.center[0], opp_y + sign * h_new / 2)
        return (last[0], last[1] + dy)

    def _move_node(self, role: Role, pointer: Vec, last: Vec, safe: bool) -> Vec:
        tag = role[0]
        if tag == "apex":
            return self.move_apex(pointer, safe)
        if tag == "corner":
            return self._drag_corner(role[1], pointer, safe)
        if tag == "edge":
            return self._drag_edge(role[1], pointer, last, safe)
        return super()._move_node(role, pointer, last, safe)

    # -- queries -------------------------------------------------------------

    def footprint(self) -> list[NodeShape]:
        return [self._body_poly(), self._roof_poly()]

    def validate(self) -> list[str]:
        out = []
        if self.w <= 0 or self.h <= 0:
            out.append(f"{self.id}: body degenerate")
        elif self.apex[1] <= self._top():
            out.append(f"{self.id}: apex not above the body top")
        return out

    def to_fields(self):
        return [
            ("center", fmt_pt(self.center)),
            ("width", fmt_f(self.w)),
            ("height", fmt_f(self.h)),
            ("apex", fmt_pt(self.apex)),
        ]

    @classmethod
    def from_fields(cls, object_id, fields, **common):
        c, w, h, a = require_fields(fields, "center", "width", "height", "apex")
        return cls(object_id, parse_pt(c), parse_f(w), parse_f(h), parse_pt(a), **common)
