"""The contract every movable object fulfills, plus shared defaults.

A shape is plain mutable data.  Its cover is a pure function of that data,
rebuilt on demand and never cached, so node indices are stable for a given
geometry and the mover can look up what a caught node means through
`node_role`.  Node order within a cover is most-specific-first: corner and
vertex handles before border strips before the body.
"""

from __future__ import annotations

import copy
import math
from abc import ABC, abstractmethod
from typing import Any

from ..errors import DisabledHandle, ImmovableObject, InvalidGeometry, NotRotatable
from ..geometry import (
    Cover,
    CoverNode,
    HitInfo,
    NodeShape,
    Vec,
    hit,
    shape_bbox,
    union_bbox,
)
from ..restrictions import SizeLimits, clamp_dimensions

# default node sensitivity; comfortable hit targets in scene units
HANDLE_RADIUS = 5.0
EDGE_HALFWIDTH = 3.0
# minimum separation kept between clamped radii, partitions and walls
MIN_GAP = 1.0
# rectangles under the Clamp vanish policy never shrink below this
DEFAULT_MIN_SIZE = 4.0

Role = tuple[Any, ...]


class MovableObject(ABC):
    """Base contract: build a cover, translate, move one node, rotate.

    Subclasses implement `_layout` (cover nodes paired with role tags),
    `_shift`, `footprint` and the serialization hooks.  Node-move and
    rotation are optional; the defaults reject them.
    """

    kind = "?"

    def __init__(
        self,
        object_id: str,
        *,
        movable: bool = True,
        rotatable: bool = False,
        color_class: str | None = None,
        size_limits: SizeLimits | None = None,
    ):
        self.id = object_id
        self.movable = movable
        self.rotatable = rotatable
        self.color_class = color_class
        self.size_limits = size_limits

    # -- cover -----------------------------------------------------------

    @abstractmethod
    def _layout(self) -> list[tuple[CoverNode, Role]]:
        """Cover nodes with their role tags, most specific first."""

    def build_cover(self) -> Cover:
        return Cover(tuple(node for node, _ in self._layout()))

    def node_role(self, index: int) -> Role:
        return self._layout()[index][1]

    def hit(self, pt: Vec) -> HitInfo | None:
        return hit(self.build_cover(), pt)

    # -- movement --------------------------------------------------------

    def translate(self, delta: Vec) -> None:
        if not self.movable:
            raise ImmovableObject(self.id)
        self._shift(delta)

    @abstractmethod
    def _shift(self, delta: Vec) -> None:
        """Shift every geometric datum by delta, no checks."""

    def move_node(self, index: int, pointer: Vec, last: Vec, safe: bool = True) -> Vec:
        """Apply the node-move semantics of the node at `index` for a drag
        whose tracked handle point sits at `last` and whose pointer is at
        `pointer`.  Returns the new tracked handle point (the adhered
        pointer position); equals `pointer` whenever nothing clamped.

        With safe true, proposals are clamped to keep the shape valid;
        with safe false they commit raw and `validate` reports afterwards.
        """
        if not self.movable:
            raise ImmovableObject(self.id)
        return self._move_node(self.node_role(index), pointer, last, safe)

    def _move_node(self, role: Role, pointer: Vec, last: Vec, safe: bool) -> Vec:
        raise DisabledHandle(f"{self.id}: node {role} is not a reconfiguring handle")

    def rotate(self, pivot: Vec, dangle: float) -> None:
        if not self.rotatable:
            raise NotRotatable(self.id)
        self._rotate(pivot, dangle)

    def _rotate(self, pivot: Vec, dangle: float) -> None:
        raise NotRotatable(self.id)

    def rotation_center(self) -> Vec:
        x0, y0, x1, y1 = self.bbox()
        return (0.5 * (x0 + x1), 0.5 * (y0 + y1))

    # -- queries ---------------------------------------------------------

    @abstractmethod
    def footprint(self) -> list[NodeShape]:
        """Convex decomposition of the drawn region, used by overlap rules."""

    def bbox(self) -> tuple[float, float, float, float]:
        return union_bbox([shape_bbox(s) for s in self.footprint()])

    def validate(self) -> list[str]:
        """Violation messages; empty when all shape invariants hold."""
        return []

    # -- trial moves -----------------------------------------------------

    def snapshot(self) -> dict:
        return copy.deepcopy(self.__dict__)

    def restore(self, snap: dict) -> None:
        self.__dict__.clear()
        self.__dict__.update(copy.deepcopy(snap))

    # -- serialization hooks ----------------------------------------------

    @abstractmethod
    def to_fields(self) -> list[tuple[str, str]]:
        """Shape-specific fields in canonical order, values pre-rendered."""

    @classmethod
    @abstractmethod
    def from_fields(cls, object_id: str, fields: dict[str, str], **common: Any) -> "MovableObject":
        """Rebuild from parsed field strings; raises ValueError on bad data."""

    # -- helpers ----------------------------------------------------------

    def clamp_dims(self, dims: tuple[float, ...]) -> tuple[float, ...]:
        return clamp_dimensions(dims, self.size_limits)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.id!r}>"


# canonical text rendering of field values; repr of a float is its shortest
# exact round-trip form, which keeps documents byte-stable across replays


def fmt_f(x: float) -> str:
    return repr(float(x))


def fmt_pt(p: Vec) -> str:
    return f"{fmt_f(p[0])} {fmt_f(p[1])}"


def fmt_floats(xs) -> str:
    return " ".join(fmt_f(x) for x in xs)


def fmt_pts(pts) -> str:
    return " ".join(fmt_pt(p) for p in pts)


def parse_f(s: str) -> float:
    x = float(s)
    if math.isnan(x) or math.isinf(x):
        raise ValueError(f"non-finite number {s!r}")
    return x


def parse_pt(s: str) -> Vec:
    parts = s.split()
    if len(parts) != 2:
        raise ValueError(f"expected two coordinates, got {s!r}")
    return (parse_f(parts[0]), parse_f(parts[1]))


def parse_floats(s: str) -> list[float]:
    return [parse_f(p) for p in s.split()]


def parse_pts(s: str) -> list[Vec]:
    xs = parse_floats(s)
    if len(xs) % 2:
        raise ValueError("odd coordinate count in point list")
    return [(xs[i], xs[i + 1]) for i in range(0, len(xs), 2)]


def require_fields(fields: dict[str, str], *names: str) -> list[str]:
    missing = [n for n in names if n not in fields]
    if missing:
        raise ValueError(f"missing fields: {', '.join(missing)}")
    return [fields[n] for n in names]
