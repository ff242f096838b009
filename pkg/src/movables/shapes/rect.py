"""Rectangles with independently moving borders.

A rect is center + width + height + angle.  Corner and edge handles resize
it under one of four policies (free, fixed ratio, symmetric, single
border); shrinking past the opposite side either clamps at a minimum size
or removes the object from the scene.  Optional partitions slide along the
width between their neighbors, never crossing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Any

from ..errors import DisabledHandle, VanishedObject
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
    dot,
    normalize_angle,
    rotate_about,
    scale,
    sub,
)
from ..restrictions import clamp_dimensions
from .base import (
    EDGE_HALFWIDTH,
    HANDLE_RADIUS,
    MIN_GAP,
    MovableObject,
    Role,
    fmt_f,
    fmt_floats,
    fmt_pt,
    parse_f,
    parse_floats,
    parse_pt,
    require_fields,
)


class RectPolicy(Enum):
    FREE = "free"
    FIXED_RATIO = "fixed-ratio"
    SYMMETRIC = "symmetric"
    SINGLE_BORDER = "single-border"


@dataclass(frozen=True)
class Clamp:
    """Shrinking stops at this minimum size."""

    min_w: float = 4.0
    min_h: float = 4.0


@dataclass(frozen=True)
class Vanish:
    """Shrinking past the opposite side removes the object."""


VanishRule = Clamp | Vanish

CORNER_SIGNS = {"ne": (1, 1), "nw": (-1, 1), "sw": (-1, -1), "se": (1, -1)}
OPPOSITE_CORNER = {"ne": "sw", "sw": "ne", "nw": "se", "se": "nw"}
EDGE_SIGNS = {"e": 1, "w": -1, "n": 1, "s": -1}
# edge strip endpoints, named by adjacent corners
EDGE_CORNERS = {"n": ("nw", "ne"), "e": ("ne", "se"), "s": ("se", "sw"), "w": ("sw", "nw")}
CORNER_ORDER = ("nw", "ne", "se", "sw")
EDGE_ORDER = ("n", "e", "s", "w")

TINY = 1e-9


class Rect(MovableObject):
    kind = "rect"

    def __init__(
        self,
        object_id: str,
        center: Vec,
        w: float,
        h: float,
        angle: float = 0.0,
        policy: RectPolicy = RectPolicy.FREE,
        side: str | None = None,
        vanish: VanishRule = Clamp(),
        partitions: list[float] | None = None,
        **common: Any,
    ):
        common.setdefault("rotatable", True)
        super().__init__(object_id, **common)
        if w <= 0 or h <= 0:
            raise ValueError(f"{object_id}: rectangle sides must be positive")
        if policy is RectPolicy.SINGLE_BORDER:
            if side not in EDGE_SIGNS:
                raise ValueError(f"{object_id}: single-border policy needs a side")
        elif side is not None:
            raise ValueError(f"{object_id}: side is only meaningful for single-border")
        self.center = center
        self.w = w
        self.h = h
        self.angle = normalize_angle(angle)
        self.policy = policy
        self.side = side
        self.vanish = vanish
        self.partitions = list(partitions or [])

    # -- frame helpers -----------------------------------------------------

    def _axes(self) -> tuple[Vec, Vec]:
        c, s = math.cos(self.angle), math.sin(self.angle)
        return (c, s), (-s, c)

    def corner_pos(self, name: str) -> Vec:
        su, sv = CORNER_SIGNS[name]
        u, v = self._axes()
        return add(self.center, add(scale(u, su * self.w / 2), scale(v, sv * self.h / 2)))

    def _body_poly(self) -> ConvexPoly:
        # counterclockwise in scene coordinates
        return ConvexPoly(tuple(self.corner_pos(n) for n in ("se", "ne", "nw", "sw")))

    def _enabled_edges(self) -> tuple[str, ...]:
        if self.policy is RectPolicy.SINGLE_BORDER:
            return (self.side,)
        if self.policy is RectPolicy.FIXED_RATIO:
            return ()
        return EDGE_ORDER

    def _corners_enabled(self) -> bool:
        return self.policy is not RectPolicy.SINGLE_BORDER

    # -- cover ---------------------------------------------------------------

    def _layout(self):
        out = []
        if self._corners_enabled():
            for name in CORNER_ORDER:
                node = CoverNode(
                    Disc(self.corner_pos(name), HANDLE_RADIUS),
                    NodeBehavior.NODE_MOVE,
                    CursorHint.RESIZE_DIAGONAL,
                )
                out.append((node, ("corner", name)))
        u, v = self._axes()
        for i, px in enumerate(self.partitions):
            foot = add(self.center, scale(u, px))
            node = CoverNode(
                Strip(add(foot, scale(v, -self.h / 2)), add(foot, scale(v, self.h / 2)), EDGE_HALFWIDTH),
                NodeBehavior.NODE_MOVE,
                CursorHint.RESIZE_HORIZONTAL,
            )
            out.append((node, ("partition", i)))
        for name in self._enabled_edges():
            a, b = (self.corner_pos(cn) for cn in EDGE_CORNERS[name])
            hint = CursorHint.RESIZE_VERTICAL if name in ("n", "s") else CursorHint.RESIZE_HORIZONTAL
            node = CoverNode(Strip(a, b, EDGE_HALFWIDTH), NodeBehavior.NODE_MOVE, hint)
            out.append((node, ("edge", name)))
        out.append(
            (CoverNode(self._body_poly(), NodeBehavior.WHOLE_MOVE, CursorHint.MOVE), ("body",))
        )
        return out

    # -- movement --------------------------------------------------------------

    def _shift(self, delta: Vec) -> None:
        self.center = add(self.center, delta)

    def _move_node(self, role: Role, pointer: Vec, last: Vec, safe: bool) -> Vec:
        tag = role[0]
        if tag == "corner":
            return self._drag_corner(role[1], pointer, safe)
        if tag == "edge":
            return self._drag_edge(role[1], pointer, last, safe)
        if tag == "partition":
            return self.slide_partition(role[1], pointer, safe)
        return super()._move_node(role, pointer, last, safe)

    def resize(self, handle: str, pointer: Vec, safe: bool = True) -> bool:
        """Drag a named corner or edge handle to the pointer; True when the
        geometry changed.  Disabled handles under the current policy raise."""
        before = (self.center, self.w, self.h)
        if handle in CORNER_SIGNS:
            if not self._corners_enabled():
                raise DisabledHandle(f"{self.id}: corners are fixed under {self.policy.value}")
            self._drag_corner(handle, pointer, safe)
        elif handle in EDGE_SIGNS:
            if handle not in self._enabled_edges():
                raise DisabledHandle(f"{self.id}: edge {handle} is fixed under {self.policy.value}")
            self._drag_edge(handle, pointer, pointer, safe)
        else:
            raise DisabledHandle(f"{self.id}: unknown handle {handle!r}")
        return (self.center, self.w, self.h) != before

    def _min_sizes(self) -> tuple[float, float]:
        if isinstance(self.vanish, Clamp):
            lo_w, lo_h = self.vanish.min_w, self.vanish.min_h
        else:
            lo_w = lo_h = TINY
        if self.size_limits is not None:
            lo_w = max(lo_w, self.size_limits.minimum[0])
            lo_h = max(lo_h, self.size_limits.minimum[1])
        return lo_w, lo_h

    def _clamp_wh(self, w: float, h: float) -> tuple[float, float]:
        if self.size_limits is not None:
            w, h = clamp_dimensions((w, h), self.size_limits)
        lo_w, lo_h = self._min_sizes()
        return max(w, lo_w), max(h, lo_h)

    def _check_vanish(self, w: float, h: float) -> None:
        if isinstance(self.vanish, Vanish) and (w <= 0 or h <= 0):
            raise VanishedObject(self.id)

    def _drag_corner(self, name: str, p: Vec, safe: bool) -> Vec:
        su, sv = CORNER_SIGNS[name]
        u, v = self._axes()
        old_center_u = dot(self.center, u)
        if self.policy is RectPolicy.SYMMETRIC:
            rel = sub(p, self.center)
            w_new, h_new = 2 * abs(dot(rel, u)), 2 * abs(dot(rel, v))
            self._check_vanish(w_new, h_new)
            if safe:
                w_new, h_new = self._clamp_wh(w_new, h_new)
            self.w, self.h = w_new, h_new
        else:
            fixed = self.corner_pos(OPPOSITE_CORNER[name])
            rel = sub(p, fixed)
            if self.policy is RectPolicy.FIXED_RATIO:
                ratio = self.w / self.h if self.h > TINY else 1.0
                # project onto the diagonal of ratio-preserving corners
                diag = add(scale(u, su * ratio), scale(v, sv))
                t = dot(rel, diag) / dot(diag, diag)
                self._check_vanish(t, t)
                if safe:
                    lo_w, lo_h = self._min_sizes()
                    lo_t = max(lo_h, lo_w / ratio)
                    hi_t = math.inf
                    if self.size_limits is not None:
                        hi_t = min(self.size_limits.maximum[1], self.size_limits.maximum[0] / ratio)
                    t = min(max(t, lo_t), hi_t)
                w_new, h_new = ratio * t, t
            else:
                w_new, h_new = su * dot(rel, u), sv * dot(rel, v)
                self._check_vanish(w_new, h_new)
                if safe:
                    w_new, h_new = self._clamp_wh(w_new, h_new)
            self.w, self.h = w_new, h_new
            self.center = add(fixed, add(scale(u, su * w_new / 2), scale(v, sv * h_new / 2)))
        self._offset_partitions(old_center_u - dot(self.center, u))
        self._confine_partitions()
        return self.corner_pos(name)

    def _drag_edge(self, name: str, p: Vec, last: Vec, safe: bool) -> Vec:
        along_u = name in ("e", "w")
        u, v = self._axes()
        axis = u if along_u else v
        sign = EDGE_SIGNS[name]
        full = self.w if along_u else self.h
        old_center_u = dot(self.center, u)
        edge_before = add(self.center, scale(axis, sign * full / 2))
        if self.policy is RectPolicy.SYMMETRIC:
            full_new = 2 * abs(dot(sub(p, self.center), axis))
            self._check_vanish(full_new, full_new)
            if safe:
                w_new = full_new if along_u else self.w
                h_new = self.h if along_u else full_new
                w_new, h_new = self._clamp_wh(w_new, h_new)
                full_new = w_new if along_u else h_new
        else:
            opposite = add(self.center, scale(axis, -sign * full / 2))
            full_new = sign * dot(sub(p, opposite), axis)
            if along_u:
                self._check_vanish(full_new, self.h)
            else:
                self._check_vanish(self.w, full_new)
            if safe:
                w_new = full_new if along_u else self.w
                h_new = self.h if along_u else full_new
                w_new, h_new = self._clamp_wh(w_new, h_new)
                full_new = w_new if along_u else h_new
            self.center = add(opposite, scale(axis, sign * full_new / 2))
        if along_u:
            self.w = full_new
        else:
            self.h = full_new
        self._offset_partitions(old_center_u - dot(self.center, u))
        self._confine_partitions()
        edge_after = add(self.center, scale(axis, sign * full_new / 2))
        return add(last, sub(edge_after, edge_before))

    # -- partitions ------------------------------------------------------------

    def slide_partition(self, index: int, pointer: Vec, safe: bool = True) -> Vec:
        u, v = self._axes()
        x = dot(sub(pointer, self.center), u)
        lo = self.partitions[index - 1] + MIN_GAP if index > 0 else -self.w / 2 + MIN_GAP
        hi = (
            self.partitions[index + 1] - MIN_GAP
            if index < len(self.partitions) - 1
            else self.w / 2 - MIN_GAP
        )
        if safe:
            if lo > hi:
                x = self.partitions[index]
            else:
                x = min(max(x, lo), hi)
        self.partitions[index] = x
        ty = min(max(dot(sub(pointer, self.center), v), -self.h / 2), self.h / 2)
        return add(self.center, add(scale(u, x), scale(v, ty)))

    def _offset_partitions(self, du: float) -> None:
        # the center moved along u; partitions are center-relative, so shift
        # them back to keep their absolute positions
        if du and self.partitions:
            self.partitions = [px + du for px in self.partitions]

    def _confine_partitions(self) -> None:
        if not self.partitions:
            return
        lo, hi = -self.w / 2 + MIN_GAP, self.w / 2 - MIN_GAP
        ps = [min(max(px, lo), hi) for px in self.partitions]
        for i in range(1, len(ps)):
            ps[i] = max(ps[i], ps[i - 1] + MIN_GAP)
        ps[-1] = min(ps[-1], hi)
        for i in range(len(ps) - 2, -1, -1):
            ps[i] = min(ps[i], ps[i + 1] - MIN_GAP)
        self.partitions = ps

    # -- rotation, queries ------------------------------------------------------

    def _rotate(self, pivot: Vec, dangle: float) -> None:
        self.center = rotate_about(self.center, pivot, dangle)
        self.angle = normalize_angle(self.angle + dangle)

    def rotation_center(self) -> Vec:
        return self.center

    def footprint(self) -> list[NodeShape]:
        return [self._body_poly()]

    def validate(self) -> list[str]:
        out = []
        if not self.w > 0:
            out.append(f"{self.id}: width {self.w} not positive")
        if not self.h > 0:
            out.append(f"{self.id}: height {self.h} not positive")
        walls = self.w / 2 - MIN_GAP + TINY
        prev = None
        for i, px in enumerate(self.partitions):
            if abs(px) > walls:
                out.append(f"{self.id}: partition {i} outside the walls")
            if prev is not None and px <= prev:
                out.append(f"{self.id}: partitions {i - 1} and {i} out of order")
            prev = px
        return out

    # -- serialization ------------------------------------------------------------

    def to_fields(self):
        out = [
            ("center", fmt_pt(self.center)),
            ("width", fmt_f(self.w)),
            ("height", fmt_f(self.h)),
            ("angle", fmt_f(self.angle)),
            ("policy", self.policy.value),
        ]
        if self.side is not None:
            out.append(("side", self.side))
        if isinstance(self.vanish, Clamp):
            out.append(("vanish", f"clamp {fmt_f(self.vanish.min_w)} {fmt_f(self.vanish.min_h)}"))
        else:
            out.append(("vanish", "vanish"))
        if self.partitions:
            out.append(("partitions", fmt_floats(self.partitions)))
        return out

    @classmethod
    def from_fields(cls, object_id, fields, **common):
        center, w, h, angle, policy, vanish = require_fields(
            fields, "center", "width", "height", "angle", "policy", "vanish"
        )
        parts = vanish.split()
        if parts[0] == "clamp" and len(parts) == 3:
            rule: VanishRule = Clamp(parse_f(parts[1]), parse_f(parts[2]))
        elif parts == ["vanish"]:
            rule = Vanish()
        else:
            raise ValueError(f"bad vanish rule {vanish!r}")
        return cls(
            object_id,
            parse_pt(center),
            parse_f(w),
            parse_f(h),
            parse_f(angle),
            RectPolicy(policy),
            fields.get("side"),
            rule,
            parse_floats(fields["partitions"]) if "partitions" in fields else None,
            **common,
        )
