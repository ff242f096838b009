"""The library of movable objects and the operations over them."""

from __future__ import annotations

from ..geometry import Vec
from .base import (
    DEFAULT_MIN_SIZE,
    EDGE_HALFWIDTH,
    HANDLE_RADIUS,
    MIN_GAP,
    MovableObject,
)
from .house import SimpleHouse
from .lines import SegmentedLine, SolitaryLine
from .polygons import ChatoyantPolygon, ConvexPolygon, RegularPolygon
from .rect import Clamp, Rect, RectPolicy, Vanish, VanishRule
from .round import Circle, Crescent, Ring, Sector, SectorPolicy
from .text import TextM, TextMR

SHAPE_KINDS: dict[str, type[MovableObject]] = {
    cls.kind: cls
    for cls in (
        SolitaryLine,
        SegmentedLine,
        Rect,
        Circle,
        Ring,
        Sector,
        Crescent,
        RegularPolygon,
        ConvexPolygon,
        ChatoyantPolygon,
        TextM,
        TextMR,
        SimpleHouse,
    )
}


def resize_rect(rect: Rect, handle: str, pointer: Vec, safe: bool = True) -> bool:
    """Drag a corner or edge handle of a rectangle to the pointer."""
    return rect.resize(handle, pointer, safe)


def scale_uniform(obj, border_point_before: Vec, pointer: Vec, safe: bool = True) -> Vec:
    """Uniform scale about the object's center so the grabbed border point
    tracks the pointer's distance."""
    return obj.scale_uniform(border_point_before, pointer, safe)


def reconfigure_vertex(obj, vertex_index: int, pointer: Vec, safe: bool = True) -> Vec:
    """Move one vertex (or joint, or the house apex) to the pointer, under
    the object's own clamping rules."""
    return obj.reconfigure_vertex(vertex_index, pointer, safe)


def rotate_object(obj: MovableObject, pivot: Vec, delta: float) -> None:
    """Rotate all defining points of the object about the pivot."""
    obj.rotate(pivot, delta)


def resize_ring(ring: Ring, boundary: str, pointer: Vec, safe: bool = True) -> Vec:
    """Set the ring's inner or outer radius from the pointer."""
    return ring.resize(boundary, pointer, safe)


def resize_sector(sector: Sector, part: str, pointer: Vec, safe: bool = True) -> Vec:
    """Drag the sector's arc or one of its sides, where the policy allows."""
    return sector.resize(part, pointer, safe)


def slide_partition(container, index: int, pointer: Vec, safe: bool = True) -> Vec:
    """Slide one partition of a rectangle or ring between its neighbors."""
    return container.slide_partition(index, pointer, safe)


__all__ = [
    "ChatoyantPolygon",
    "Circle",
    "Clamp",
    "ConvexPolygon",
    "Crescent",
    "DEFAULT_MIN_SIZE",
    "EDGE_HALFWIDTH",
    "HANDLE_RADIUS",
    "MIN_GAP",
    "MovableObject",
    "Rect",
    "RectPolicy",
    "RegularPolygon",
    "Ring",
    "SHAPE_KINDS",
    "Sector",
    "SectorPolicy",
    "SegmentedLine",
    "SimpleHouse",
    "SolitaryLine",
    "TextM",
    "TextMR",
    "Vanish",
    "VanishRule",
    "reconfigure_vertex",
    "resize_rect",
    "resize_ring",
    "resize_sector",
    "rotate_object",
    "scale_uniform",
    "slide_partition",
]
