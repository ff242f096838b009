"""Text labels: a string payload carried by a rectangular box.

TextM moves by any point of its box but never rotates; TextMR also
rotates.  The box is explicit geometry (a fixed-metric estimate by
default) so behavior does not depend on any font machinery.
"""

from __future__ import annotations

import math
from typing import Any

from ..geometry import ConvexPoly, CoverNode, CursorHint, NodeBehavior, NodeShape, Vec, add, normalize_angle, rotate_about, scale
from .base import MovableObject, fmt_f, fmt_pt, parse_f, parse_pt, require_fields

CHAR_WIDTH = 7.0
LINE_HEIGHT = 16.0


def estimate_box(text: str) -> tuple[float, float]:
    return (max(10.0, CHAR_WIDTH * len(text) + 6.0), LINE_HEIGHT)


class TextM(MovableObject):
    """Movable text: one whole-move node over the bounding box."""

    kind = "text-m"
    _rotatable_kind = False

    def __init__(
        self,
        object_id: str,
        text: str,
        center: Vec,
        w: float | None = None,
        h: float | None = None,
        angle: float = 0.0,
        **common: Any,
    ):
        common["rotatable"] = self._rotatable_kind
        super().__init__(object_id, **common)
        if "\n" in text or "\r" in text:
            raise ValueError(f"{object_id}: text must be a single line")
        est_w, est_h = estimate_box(text)
        self.text = text
        self.center = center
        self.w = est_w if w is None else w
        self.h = est_h if h is None else h
        self.angle = normalize_angle(angle)
        if self.w <= 0 or self.h <= 0:
            raise ValueError(f"{object_id}: text box must have positive size")

    def _box_poly(self) -> ConvexPoly:
        c, s = math.cos(self.angle), math.sin(self.angle)
        u, v = (c, s), (-s, c)
        corners = []
        for su, sv in ((1, -1), (1, 1), (-1, 1), (-1, -1)):
            corners.append(add(self.center, add(scale(u, su * self.w / 2), scale(v, sv * self.h / 2))))
        return ConvexPoly(tuple(corners))

    def _layout(self):
        return [(CoverNode(self._box_poly(), NodeBehavior.WHOLE_MOVE, CursorHint.MOVE), ("body",))]

    def _shift(self, delta: Vec) -> None:
        self.center = add(self.center, delta)

    def _rotate(self, pivot: Vec, dangle: float) -> None:
        self.center = rotate_about(self.center, pivot, dangle)
        self.angle = normalize_angle(self.angle + dangle)

    def rotation_center(self) -> Vec:
        return self.center

    def footprint(self) -> list[NodeShape]:
        return [self._box_poly()]

    def validate(self) -> list[str]:
        if self.w <= 0 or self.h <= 0:
            return [f"{self.id}: text box degenerate"]
        return []

    def to_fields(self):
        return [
            ("center", fmt_pt(self.center)),
            ("width", fmt_f(self.w)),
            ("height", fmt_f(self.h)),
            ("angle", fmt_f(self.angle)),
            ("text", self.text),
        ]

    @classmethod
    def from_fields(cls, object_id, fields, **common):
        c, w, h, a, t = require_fields(fields, "center", "width", "height", "angle", "text")
        common.pop("rotatable", None)
        return cls(object_id, t, parse_pt(c), parse_f(w), parse_f(h), parse_f(a), **common)


class TextMR(TextM):
    """Movable and rotatable text."""

    kind = "text-mr"
    _rotatable_kind = True
