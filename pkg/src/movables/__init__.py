"""Interaction engine for movable, resizable, reconfigurable and rotatable
2D screen objects.

The package separates *what an object looks like* from *how it reacts to the
pointer*.  Every object exposes a cover: an ordered list of sensitive nodes
(discs, convex polygons, strips) with per-node behavior.  A single mover owns
the pointer protocol (catch, drag, release) and routes each movement through
the object's node handlers and the scene's restrictions.
"""

from .errors import (
    DisabledHandle,
    DuplicateId,
    EngineError,
    ImmovableObject,
    InsufficientCover,
    InvalidGeometry,
    MalformedDocument,
    MalformedTrace,
    MissingMember,
    NotRotatable,
    ProtocolViolation,
    UnknownId,
    VanishedObject,
)
from .geometry import (
    ConvexPoly,
    Cover,
    CoverNode,
    CursorHint,
    Disc,
    HitInfo,
    NodeBehavior,
    NodeShape,
    Strip,
    Vec,
    arc_band_nodes,
    contains,
    hit,
    min_arc_nodes,
    shapes_intersect,
)
from .groups import (
    CommentedElement,
    CommentPolicy,
    ElasticGroup,
    Free,
    LimitedBox,
    LimitedRadius,
    comment_region,
    frame_of,
    move_comment,
    move_group,
    move_member,
    slide_title,
)
from .layout import (
    deserialize_scene,
    format_trace,
    parse_trace,
    serialize_scene,
)
from .mover import (
    CatchResult,
    CaughtInfo,
    MoveReport,
    Mover,
    PointerButton,
    ReleaseInfo,
)
from .restrictions import (
    AreaMode,
    AreaRestriction,
    OverlapMode,
    OverlapRule,
    SizeLimits,
    clamp_translation,
    constrained_slide,
    footprints_overlap,
    overlap_permitted,
    pair_forbidden,
)
from .scene import ReplayReport, Scene, TraceEvent, random_trace
from .shapes import (
    SHAPE_KINDS,
    ChatoyantPolygon,
    Circle,
    Clamp,
    ConvexPolygon,
    Crescent,
    MovableObject,
    Rect,
    RectPolicy,
    RegularPolygon,
    Ring,
    Sector,
    SectorPolicy,
    SegmentedLine,
    SimpleHouse,
    SolitaryLine,
    TextM,
    TextMR,
    Vanish,
    VanishRule,
    reconfigure_vertex,
    resize_rect,
    resize_ring,
    resize_sector,
    rotate_object,
    scale_uniform,
    slide_partition,
)
from .svgrender import render_svg

__all__ = [
    "AreaMode",
    "AreaRestriction",
    "CatchResult",
    "CaughtInfo",
    "ChatoyantPolygon",
    "Circle",
    "Clamp",
    "CommentPolicy",
    "CommentedElement",
    "ConvexPoly",
    "ConvexPolygon",
    "Cover",
    "CoverNode",
    "Crescent",
    "CursorHint",
    "Disc",
    "DisabledHandle",
    "DuplicateId",
    "ElasticGroup",
    "EngineError",
    "Free",
    "HitInfo",
    "ImmovableObject",
    "InsufficientCover",
    "InvalidGeometry",
    "LimitedBox",
    "LimitedRadius",
    "MalformedDocument",
    "MalformedTrace",
    "MissingMember",
    "MovableObject",
    "MoveReport",
    "Mover",
    "NodeBehavior",
    "NodeShape",
    "NotRotatable",
    "OverlapMode",
    "OverlapRule",
    "PointerButton",
    "ProtocolViolation",
    "Rect",
    "RectPolicy",
    "RegularPolygon",
    "ReleaseInfo",
    "ReplayReport",
    "Ring",
    "SHAPE_KINDS",
    "Scene",
    "Sector",
    "SectorPolicy",
    "SegmentedLine",
    "SimpleHouse",
    "SizeLimits",
    "SolitaryLine",
    "Strip",
    "TextM",
    "TextMR",
    "TraceEvent",
    "UnknownId",
    "Vanish",
    "VanishRule",
    "Vec",
    "VanishedObject",
    "arc_band_nodes",
    "clamp_translation",
    "comment_region",
    "constrained_slide",
    "contains",
    "deserialize_scene",
    "footprints_overlap",
    "format_trace",
    "frame_of",
    "hit",
    "min_arc_nodes",
    "move_comment",
    "move_group",
    "move_member",
    "overlap_permitted",
    "pair_forbidden",
    "parse_trace",
    "random_trace",
    "reconfigure_vertex",
    "render_svg",
    "resize_rect",
    "resize_ring",
    "resize_sector",
    "rotate_object",
    "scale_uniform",
    "serialize_scene",
    "shapes_intersect",
    "slide_partition",
    "slide_title",
]

__version__ = "0.1.0"
