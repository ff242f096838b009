"""Round objects: circles, rings with sliding partitions, sectors, crescents.

Curved borders are covered by N-node bands built with `arc_band_nodes`;
the node count is recomputed from the current radius on every cover build
so the gap-free condition always holds.  Holes and bites are transparent
nodes placed just before the body so presses inside them fall through to
whatever lies beneath.
"""

from __future__ import annotations

import math
from enum import Enum
from typing import Any

from ..errors import DisabledHandle
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
    arc_band_nodes,
    dist,
    min_arc_nodes,
    normalize_angle,
    rotate_about,
    scale,
    sub,
    TWO_PI,
)
from .base import (
    EDGE_HALFWIDTH,
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

DEFAULT_BAND = 5.0
# partitions and sector sides keep at least this angular separation
ANGLE_GAP = 0.05
SWEEP_EPS = 0.01


def _dir(angle: float) -> Vec:
    return (math.cos(angle), math.sin(angle))


def _unit_from(center: Vec, p: Vec) -> Vec | None:
    d = dist(p, center)
    if d < 1e-12:
        return None
    return ((p[0] - center[0]) / d, (p[1] - center[1]) / d)


class Circle(MovableObject):
    """Disc resized by any border point (uniform scale about the center)."""

    kind = "circle"

    def __init__(self, object_id: str, center: Vec, radius: float, band: float = DEFAULT_BAND, **common: Any):
        common.setdefault("rotatable", True)
        super().__init__(object_id, **common)
        if radius <= band:
            raise ValueError(f"{object_id}: radius must exceed the border band")
        self.center = center
        self.radius = radius
        self.band = band

    def _layout(self):
        n = min_arc_nodes(self.radius, self.band)
        band = arc_band_nodes(self.center, self.radius, self.band, n, NodeBehavior.NODE_MOVE)
        out = [(node, ("band", i)) for i, node in enumerate(band)]
        step = TWO_PI / n
        inner = ConvexPoly(
            tuple(add(self.center, scale(_dir(k * step), self.radius)) for k in range(n))
        )
        out.append((CoverNode(inner, NodeBehavior.WHOLE_MOVE, CursorHint.MOVE), ("body",)))
        return out

    def _shift(self, delta: Vec) -> None:
        self.center = add(self.center, delta)

    def _min_radius(self) -> float:
        lo = self.band + MIN_GAP
        if self.size_limits is not None:
            lo = max(lo, self.size_limits.minimum[0])
        return lo

    def _max_radius(self) -> float:
        return self.size_limits.maximum[0] if self.size_limits is not None else math.inf

    def scale_uniform(self, border_before: Vec, pointer: Vec, safe: bool = True) -> Vec:
        """Scale so the grabbed border point lands under the pointer; the
        factor is |pointer-center| / |grab-center|, clamped by limits.
        Returns the new position of the grabbed point."""
        base = dist(border_before, self.center)
        target = dist(pointer, self.center)
        if base < 1e-9 or target < 1e-9:
            return border_before  # degenerate grab or pointer at center
        factor = target / base
        new_r = self.radius * factor
        if safe:
            new_r = min(max(new_r, self._min_radius()), self._max_radius())
        applied = new_r / self.radius
        self.radius = new_r
        return add(self.center, scale(sub(border_before, self.center), applied))

    def _move_node(self, role: Role, pointer: Vec, last: Vec, safe: bool) -> Vec:
        if role[0] == "band":
            return self.scale_uniform(last, pointer, safe)
        return super()._move_node(role, pointer, last, safe)

    def _rotate(self, pivot: Vec, dangle: float) -> None:
        self.center = rotate_about(self.center, pivot, dangle)

    def rotation_center(self) -> Vec:
        return self.center

    def footprint(self) -> list[NodeShape]:
        return [Disc(self.center, self.radius)]

    def validate(self) -> list[str]:
        if self.radius <= self.band:
            return [f"{self.id}: radius {self.radius} not above band {self.band}"]
        return []

    def to_fields(self):
        return [
            ("center", fmt_pt(self.center)),
            ("radius", fmt_f(self.radius)),
            ("band", fmt_f(self.band)),
        ]

    @classmethod
    def from_fields(cls, object_id, fields, **common):
        c, r, b = require_fields(fields, "center", "radius", "band")
        return cls(object_id, parse_pt(c), parse_f(r), parse_f(b), **common)


class Ring(MovableObject):
    """Annulus resized by either circle; the hole is transparent.  Optional
    partitions slide angularly between their neighbors."""

    kind = "ring"

    def __init__(
        self,
        object_id: str,
        center: Vec,
        r_inner: float,
        r_outer: float,
        partitions: list[float] | None = None,
        band: float = DEFAULT_BAND,
        **common: Any,
    ):
        common.setdefault("rotatable", True)
        super().__init__(object_id, **common)
        if not band < r_inner < r_outer:
            raise ValueError(f"{object_id}: need band < r_inner < r_outer")
        self.center = center
        self.r_inner = r_inner
        self.r_outer = r_outer
        self.partitions = list(partitions or [])
        self.band = band

    def _layout(self):
        out = []
        for i, ang in enumerate(self.partitions):
            a = add(self.center, scale(_dir(ang), self.r_inner))
            b = add(self.center, scale(_dir(ang), self.r_outer))
            node = CoverNode(Strip(a, b, EDGE_HALFWIDTH), NodeBehavior.NODE_MOVE, CursorHint.MOVE)
            out.append((node, ("partition", i)))
        for tag, radius in (("outer", self.r_outer), ("inner", self.r_inner)):
            n = min_arc_nodes(radius, self.band)
            for i, node in enumerate(
                arc_band_nodes(self.center, radius, self.band, n, NodeBehavior.NODE_MOVE)
            ):
                out.append((node, (tag, i)))
        hole = Disc(self.center, self.r_inner - self.band)
        out.append((CoverNode(hole, NodeBehavior.TRANSPARENT, CursorHint.DEFAULT), ("hole",)))
        body = Disc(self.center, self.r_outer)
        out.append((CoverNode(body, NodeBehavior.WHOLE_MOVE, CursorHint.MOVE), ("body",)))
        return out

    def _shift(self, delta: Vec) -> None:
        self.center = add(self.center, delta)

    def resize(self, boundary: str, pointer: Vec, safe: bool = True) -> Vec:
        """Set the inner or outer radius to the pointer's distance from the
        center, keeping band < r_inner < r_outer with a unit gap."""
        unit = _unit_from(self.center, pointer)
        if unit is None:
            return pointer
        r = dist(pointer, self.center)
        if boundary == "outer":
            if safe:
                lo = self.r_inner + MIN_GAP
                hi = self.size_limits.maximum[0] if self.size_limits is not None else math.inf
                r = min(max(r, lo), hi)
            self.r_outer = r
        elif boundary == "inner":
            if safe:
                lo = self.band + MIN_GAP
                if self.size_limits is not None:
                    lo = max(lo, self.size_limits.minimum[0])
                r = min(max(r, lo), self.r_outer - MIN_GAP)
            self.r_inner = r
        else:
            raise DisabledHandle(f"{self.id}: unknown ring boundary {boundary!r}")
        return add(self.center, scale(unit, r))

    def slide_partition(self, index: int, pointer: Vec, safe: bool = True) -> Vec:
        theta = math.atan2(pointer[1] - self.center[1], pointer[0] - self.center[0])
        k = len(self.partitions)
        # lift the pointer angle to the branch nearest the current value, so
        # that a drag past a neighbor clamps there instead of wrapping around
        theta += TWO_PI * round((self.partitions[index] - theta) / TWO_PI)
        if safe and k > 1:
            prev = self.partitions[index - 1] if index > 0 else self.partitions[-1] - TWO_PI
            nxt = self.partitions[index + 1] if index < k - 1 else self.partitions[0] + TWO_PI
            theta = min(max(theta, prev + ANGLE_GAP), nxt - ANGLE_GAP)
        self.partitions[index] = theta
        r = min(max(dist(pointer, self.center), self.r_inner), self.r_outer)
        return add(self.center, scale(_dir(theta), r))

    def _move_node(self, role: Role, pointer: Vec, last: Vec, safe: bool) -> Vec:
        tag = role[0]
        if tag in ("outer", "inner"):
            if dist(pointer, self.center) < 1e-12:
                return last
            return self.resize(tag, pointer, safe)
        if tag == "partition":
            return self.slide_partition(role[1], pointer, safe)
        return super()._move_node(role, pointer, last, safe)

    def _rotate(self, pivot: Vec, dangle: float) -> None:
        self.center = rotate_about(self.center, pivot, dangle)
        self.partitions = [a + dangle for a in self.partitions]

    def rotation_center(self) -> Vec:
        return self.center

    def footprint(self) -> list[NodeShape]:
        # solid disc approximation: the hole is not usable by overlap rules
        return [Disc(self.center, self.r_outer)]

    def validate(self) -> list[str]:
        out = []
        if not self.band < self.r_inner < self.r_outer:
            out.append(
                f"{self.id}: radii out of order (band {self.band}, "
                f"inner {self.r_inner}, outer {self.r_outer})"
            )
        for i in range(1, len(self.partitions)):
            if self.partitions[i] <= self.partitions[i - 1]:
                out.append(f"{self.id}: partitions {i - 1} and {i} out of order")
        if self.partitions and self.partitions[-1] - self.partitions[0] >= TWO_PI:
            out.append(f"{self.id}: partitions span a full turn")
        return out

    def to_fields(self):
        out = [
            ("center", fmt_pt(self.center)),
            ("inner", fmt_f(self.r_inner)),
            ("outer", fmt_f(self.r_outer)),
            ("band", fmt_f(self.band)),
        ]
        if self.partitions:
            out.append(("partitions", fmt_floats(self.partitions)))
        return out

    @classmethod
    def from_fields(cls, object_id, fields, **common):
        c, ri, ro, b = require_fields(fields, "center", "inner", "outer", "band")
        parts = parse_floats(fields["partitions"]) if "partitions" in fields else None
        return cls(object_id, parse_pt(c), parse_f(ri), parse_f(ro), parts, parse_f(b), **common)


class SectorPolicy(Enum):
    FIXED = "fixed"
    ARC_ONLY = "arc-only"
    ONE_SIDE = "one-side"
    FULL = "full"


class Sector(MovableObject):
    """Circular sector; which parts resize it depends on the policy.
    Disabled parts still catch the pointer and move the whole object."""

    kind = "sector"

    def __init__(
        self,
        object_id: str,
        center: Vec,
        radius: float,
        start_angle: float,
        sweep: float,
        policy: SectorPolicy = SectorPolicy.FULL,
        band: float = DEFAULT_BAND,
        **common: Any,
    ):
        common.setdefault("rotatable", True)
        super().__init__(object_id, **common)
        if radius <= band:
            raise ValueError(f"{object_id}: radius must exceed the border band")
        if not 0 < sweep < TWO_PI:
            raise ValueError(f"{object_id}: sweep must stay in (0, 2*pi)")
        self.center = center
        self.radius = radius
        self.start_angle = normalize_angle(start_angle)
        self.sweep = sweep
        self.policy = policy
        self.band = band

    def _part_enabled(self, part: str) -> bool:
        if part == "arc":
            return self.policy is not SectorPolicy.FIXED
        if part == "side_end":
            return self.policy in (SectorPolicy.ONE_SIDE, SectorPolicy.FULL)
        if part == "side_start":
            return self.policy is SectorPolicy.FULL
        return False

    def _arc_angles(self) -> list[float]:
        n = min_arc_nodes(self.radius, self.band, self.sweep)
        step = self.sweep / (n - 1)
        return [self.start_angle + k * step for k in range(n)]

    def _layout(self):
        out = []

        def behavior(part: str) -> NodeBehavior:
            return NodeBehavior.NODE_MOVE if self._part_enabled(part) else NodeBehavior.WHOLE_MOVE

        n = min_arc_nodes(self.radius, self.band, self.sweep)
        arc = arc_band_nodes(
            self.center,
            self.radius,
            self.band,
            n,
            behavior("arc"),
            cursor=CursorHint.RESIZE_DIAGONAL if self._part_enabled("arc") else CursorHint.MOVE,
            start_angle=self.start_angle,
            sweep=self.sweep,
        )
        out.extend((node, ("arc", i)) for i, node in enumerate(arc))
        for part, ang in (("side_start", self.start_angle), ("side_end", self.start_angle + self.sweep)):
            tip = add(self.center, scale(_dir(ang), self.radius))
            node = CoverNode(
                Strip(self.center, tip, EDGE_HALFWIDTH),
                behavior(part),
                CursorHint.MOVE,
            )
            out.append((node, (part,)))
        angles = self._arc_angles()
        for k in range(len(angles) - 1):
            tri = ConvexPoly(
                (
                    self.center,
                    add(self.center, scale(_dir(angles[k]), self.radius)),
                    add(self.center, scale(_dir(angles[k + 1]), self.radius)),
                )
            )
            out.append((CoverNode(tri, NodeBehavior.WHOLE_MOVE, CursorHint.MOVE), ("body", k)))
        return out

    def _shift(self, delta: Vec) -> None:
        self.center = add(self.center, delta)

    def resize(self, part: str, pointer: Vec, safe: bool = True) -> Vec:
        if not self._part_enabled(part):
            raise DisabledHandle(f"{self.id}: {part} is fixed under {self.policy.value}")
        if part == "arc":
            unit = _unit_from(self.center, pointer)
            if unit is None:
                return pointer
            r = dist(pointer, self.center)
            if safe:
                lo = self.band + MIN_GAP
                hi = math.inf
                if self.size_limits is not None:
                    lo = max(lo, self.size_limits.minimum[0])
                    hi = self.size_limits.maximum[0]
                r = min(max(r, lo), hi)
            self.radius = r
            return add(self.center, scale(unit, r))
        theta = math.atan2(pointer[1] - self.center[1], pointer[0] - self.center[0])
        if part == "side_end":
            delta = normalize_angle(theta - (self.start_angle + self.sweep))
            sweep_new = self.sweep + delta
            if safe:
                sweep_new = min(max(sweep_new, SWEEP_EPS), TWO_PI - SWEEP_EPS)
            self.sweep = sweep_new
            side_angle = self.start_angle + self.sweep
        else:
            delta = normalize_angle(theta - self.start_angle)
            sweep_new = self.sweep - delta
            if safe:
                sweep_new = min(max(sweep_new, SWEEP_EPS), TWO_PI - SWEEP_EPS)
            end = self.start_angle + self.sweep
            self.start_angle = normalize_angle(end - sweep_new)
            self.sweep = sweep_new
            side_angle = self.start_angle
        r = min(max(dist(pointer, self.center), 0.0), self.radius)
        return add(self.center, scale(_dir(side_angle), r))

    def _move_node(self, role: Role, pointer: Vec, last: Vec, safe: bool) -> Vec:
        part = role[0]
        if part in ("arc", "side_start", "side_end") and self._part_enabled(part):
            if dist(pointer, self.center) < 1e-12:
                return last
            return self.resize(part, pointer, safe)
        return super()._move_node(role, pointer, last, safe)

    def _rotate(self, pivot: Vec, dangle: float) -> None:
        self.center = rotate_about(self.center, pivot, dangle)
        self.start_angle = normalize_angle(self.start_angle + dangle)

    def rotation_center(self) -> Vec:
        return self.center

    def footprint(self) -> list[NodeShape]:
        angles = self._arc_angles()
        out: list[NodeShape] = []
        for k in range(len(angles) - 1):
            out.append(
                ConvexPoly(
                    (
                        self.center,
                        add(self.center, scale(_dir(angles[k]), self.radius)),
                        add(self.center, scale(_dir(angles[k + 1]), self.radius)),
                    )
                )
            )
        return out

    def validate(self) -> list[str]:
        out = []
        if not 0 < self.sweep < TWO_PI:
            out.append(f"{self.id}: sweep {self.sweep} outside (0, 2*pi)")
        if self.radius <= self.band:
            out.append(f"{self.id}: radius {self.radius} not above band {self.band}")
        return out

    def to_fields(self):
        return [
            ("center", fmt_pt(self.center)),
            ("radius", fmt_f(self.radius)),
            ("start", fmt_f(self.start_angle)),
            ("sweep", fmt_f(self.sweep)),
            ("policy", self.policy.value),
            ("band", fmt_f(self.band)),
        ]

    @classmethod
    def from_fields(cls, object_id, fields, **common):
        c, r, st, sw, pol, b = require_fields(
            fields, "center", "radius", "start", "sweep", "policy", "band"
        )
        return cls(
            object_id, parse_pt(c), parse_f(r), parse_f(st), parse_f(sw),
            SectorPolicy(pol), parse_f(b), **common,
        )


class Crescent(MovableObject):
    """Disc with a circular bite taken out; the bite is transparent and
    both arcs carry resize bands."""

    kind = "crescent"

    def __init__(
        self,
        object_id: str,
        center: Vec,
        radius: float,
        bite_center: Vec,
        bite_radius: float,
        band: float = DEFAULT_BAND,
        **common: Any,
    ):
        common.setdefault("rotatable", True)
        super().__init__(object_id, **common)
        d = dist(center, bite_center)
        if not abs(radius - bite_radius) < d < radius + bite_radius:
            raise ValueError(f"{object_id}: bite circle must properly cross the border")
        if radius <= band or bite_radius <= band:
            raise ValueError(f"{object_id}: radii must exceed the border band")
        self.center = center
        self.radius = radius
        self.bite_center = bite_center
        self.bite_radius = bite_radius
        self.band = band

    def _layout(self):
        out = []
        # anchor both band grids to the center-to-bite axis so the cover is
        # a rigid function of the shape's pose (stable under rotation)
        axis = math.atan2(
            self.bite_center[1] - self.center[1], self.bite_center[0] - self.center[0]
        )
        n = min_arc_nodes(self.radius, self.band)
        outer = arc_band_nodes(
            self.center, self.radius, self.band, n, NodeBehavior.NODE_MOVE, start_angle=axis
        )
        for i, node in enumerate(outer):
            if dist(node.shape.center, self.bite_center) >= self.bite_radius:
                out.append((node, ("outer", i)))
        m = min_arc_nodes(self.bite_radius, self.band)
        bite = arc_band_nodes(
            self.bite_center, self.bite_radius, self.band, m, NodeBehavior.NODE_MOVE, start_angle=axis
        )
        for i, node in enumerate(bite):
            if dist(node.shape.center, self.center) <= self.radius:
                out.append((node, ("bite", i)))
        hole = CoverNode(Disc(self.bite_center, self.bite_radius), NodeBehavior.TRANSPARENT, CursorHint.DEFAULT)
        out.append((hole, ("hole",)))
        body = CoverNode(Disc(self.center, self.radius), NodeBehavior.WHOLE_MOVE, CursorHint.MOVE)
        out.append((body, ("body",)))
        return out

    def _shift(self, delta: Vec) -> None:
        self.center = add(self.center, delta)
        self.bite_center = add(self.bite_center, delta)

    def resize(self, boundary: str, pointer: Vec, safe: bool = True) -> Vec:
        d = dist(self.center, self.bite_center)
        if boundary == "outer":
            anchor = self.center
            lo = max(self.band + MIN_GAP, abs(d - self.bite_radius) + MIN_GAP)
            hi = d + self.bite_radius - MIN_GAP
        elif boundary == "bite":
            anchor = self.bite_center
            lo = max(self.band + MIN_GAP, abs(d - self.radius) + MIN_GAP)
            hi = d + self.radius - MIN_GAP
        else:
            raise DisabledHandle(f"{self.id}: unknown crescent boundary {boundary!r}")
        unit = _unit_from(anchor, pointer)
        current = self.radius if boundary == "outer" else self.bite_radius
        if unit is None:
            return pointer
        r = dist(pointer, anchor)
        if safe:
            if lo > hi:
                # geometry too tight to resize; keep the boundary where it is
                return add(anchor, scale(unit, current))
            r = min(max(r, lo), hi)
        if boundary == "outer":
            self.radius = r
        else:
            self.bite_radius = r
        return add(anchor, scale(unit, r))

    def _move_node(self, role: Role, pointer: Vec, last: Vec, safe: bool) -> Vec:
        if role[0] in ("outer", "bite"):
            anchor = self.center if role[0] == "outer" else self.bite_center
            if dist(pointer, anchor) < 1e-12:
                return last
            return self.resize(role[0], pointer, safe)
        return super()._move_node(role, pointer, last, safe)

    def _rotate(self, pivot: Vec, dangle: float) -> None:
        self.center = rotate_about(self.center, pivot, dangle)
        self.bite_center = rotate_about(self.bite_center, pivot, dangle)

    def rotation_center(self) -> Vec:
        return self.center

    def footprint(self) -> list[NodeShape]:
        # solid disc approximation, same trade-off as the ring
        return [Disc(self.center, self.radius)]

    def validate(self) -> list[str]:
        d = dist(self.center, self.bite_center)
        if not abs(self.radius - self.bite_radius) < d < self.radius + self.bite_radius:
            return [f"{self.id}: bite circle no longer crosses the border"]
        return []

    def to_fields(self):
        return [
            ("center", fmt_pt(self.center)),
            ("radius", fmt_f(self.radius)),
            ("bite-center", fmt_pt(self.bite_center)),
            ("bite-radius", fmt_f(self.bite_radius)),
            ("band", fmt_f(self.band)),
        ]

    @classmethod
    def from_fields(cls, object_id, fields, **common):
        c, r, bc, br, b = require_fields(
            fields, "center", "radius", "bite-center", "bite-radius", "band"
        )
        return cls(object_id, parse_pt(c), parse_f(r), parse_pt(bc), parse_f(br), parse_f(b), **common)
