"""Composite movement: elastic groups and element+comment pairs.

An elastic group owns no geometry of its own.  Its frame is derived from
the member bounding boxes plus per-side margins, recomputed whenever it is
asked for, so the frame "adjusts" after any member mutation without any
bookkeeping.  Groups hold member ids and resolve them through a callback
the scene installs, which makes aliased embedded copies impossible.

A commented element is a scene-level pairing: moving the body always
carries the comment by the exact same vector, while moving the comment
alone is clamped into a body-relative region under the Limited policy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Union

from .errors import MissingMember, UnknownId
from .geometry import (
    ConvexPoly,
    CoverNode,
    CursorHint,
    NodeBehavior,
    NodeShape,
    Strip,
    Vec,
    add,
    dist,
    scale,
    sub,
    union_bbox,
)
from .shapes.base import (
    EDGE_HALFWIDTH,
    MovableObject,
    Role,
    fmt_f,
    fmt_floats,
    parse_f,
    parse_floats,
    require_fields,
)
from .shapes.text import LINE_HEIGHT, estimate_box

Box = tuple[float, float, float, float]

Resolver = Callable[[str], MovableObject]


class ElasticGroup(MovableObject):
    """A frame around member objects that follows them elastically.

    margins are (left, bottom, right, top) expansions of the member union
    box.  The title sits on the top edge at a fractional offset and can be
    slid along it; everything else about the frame is derived state.
    """

    kind = "group"

    def __init__(
        self,
        object_id: str,
        members: list[str],
        *,
        margins: tuple[float, float, float, float] = (10.0, 10.0, 10.0, 10.0),
        title: str = "",
        title_offset: float = 0.5,
        **common,
    ):
        super().__init__(object_id, **common)
        if not members:
            raise ValueError("elastic group needs at least one member")
        if any(m < 0 for m in margins):
            raise ValueError("margins must be non-negative")
        if "\n" in title:
            raise ValueError("group title must be a single line")
        self.members = list(members)
        self.margins = tuple(margins)
        self.title = title
        self.title_offset = min(max(title_offset, 0.0), 1.0)
        self._resolve: Optional[Resolver] = None
        self._computing = False

    def attach(self, resolver: Resolver) -> None:
        self._resolve = resolver

    def _member(self, member_id: str) -> MovableObject:
        if self._resolve is None:
            raise MissingMember(f"group {self.id!r} is not attached to a scene")
        try:
            return self._resolve(member_id)
        except UnknownId:
            raise MissingMember(f"group {self.id!r}: unknown member {member_id!r}")

    def frame(self) -> Box:
        """Union bbox of the members expanded by the margins."""
        if self._computing:
            raise MissingMember(f"group {self.id!r}: cyclic membership")
        self._computing = True
        try:
            boxes = [self._member(m).bbox() for m in self.members]
        finally:
            self._computing = False
        x0, y0, x1, y1 = union_bbox(boxes)
        ml, mb, mr, mt = self.margins
        return (x0 - ml, y0 - mb, x1 + mr, y1 + mt)

    # -- cover: title handle then four border strips ----------------------

    def _title_anchor(self, box: Box) -> Vec:
        x0, _, x1, y1 = box
        return (x0 + self.title_offset * (x1 - x0), y1)

    def _layout(self) -> list[tuple[CoverNode, Role]]:
        box = self.frame()
        x0, y0, x1, y1 = box
        nodes: list[tuple[CoverNode, Role]] = []
        if self.title:
            tx, ty = self._title_anchor(box)
            half = estimate_box(self.title)[0] / 2
            a = (max(x0, tx - half), ty)
            b = (min(x1, tx + half), ty)
            if b[0] - a[0] < 1e-9:
                a, b = (tx - 1.0, ty), (tx + 1.0, ty)
            nodes.append(
                (
                    CoverNode(
                        Strip(a, b, LINE_HEIGHT / 2),
                        NodeBehavior.NODE_MOVE,
                        CursorHint.MOVE,
                    ),
                    ("title",),
                )
            )
        edges = (
            ((x0, y1), (x1, y1), "n"),
            ((x1, y1), (x1, y0), "e"),
            ((x1, y0), (x0, y0), "s"),
            ((x0, y0), (x0, y1), "w"),
        )
        for a, b, name in edges:
            nodes.append(
                (
                    CoverNode(Strip(a, b, EDGE_HALFWIDTH), NodeBehavior.WHOLE_MOVE, CursorHint.MOVE),
                    ("frame", name),
                )
            )
        return nodes

    # -- movement ----------------------------------------------------------

    def _shift(self, delta: Vec) -> None:
        # group movement is a geometry cascade; member movability gates
        # only individual grabs, not rides inside their group
        for member_id in self.members:
            self._member(member_id)._shift(delta)

    def slide_title(self, pointer_x: float) -> float:
        x0, _, x1, _ = self.frame()
        self.title_offset = min(max((pointer_x - x0) / (x1 - x0), 0.0), 1.0)
        return self.title_offset

    def _move_node(self, role: Role, pointer: Vec, last: Vec, safe: bool) -> Vec:
        if role[0] == "title":
            self.slide_title(pointer[0])
            return self._title_anchor(self.frame())
        return super()._move_node(role, pointer, last, safe)

    def footprint(self) -> list[NodeShape]:
        x0, y0, x1, y1 = self.frame()
        return [ConvexPoly(((x0, y0), (x1, y0), (x1, y1), (x0, y1)))]

    def validate(self) -> list[str]:
        issues = []
        for member_id in self.members:
            try:
                self._member(member_id)
            except MissingMember as err:
                issues.append(str(err))
        if not 0.0 <= self.title_offset <= 1.0:
            issues.append(f"group {self.id!r}: title offset outside [0, 1]")
        return issues

    # -- serialization -----------------------------------------------------

    def to_fields(self) -> list[tuple[str, str]]:
        fields = [
            ("members", " ".join(self.members)),
            ("margins", fmt_floats(self.margins)),
            ("title-offset", fmt_f(self.title_offset)),
        ]
        if self.title:
            fields.append(("title", self.title))
        return fields

    @classmethod
    def from_fields(cls, object_id, fields, **common):
        require_fields(fields, "members", "margins", "title-offset")
        margins = parse_floats(fields["margins"])
        if len(margins) != 4:
            raise ValueError("margins must have four values (left bottom right top)")
        return cls(
            object_id,
            fields["members"].split(),
            margins=tuple(margins),
            title=fields.get("title", ""),
            title_offset=parse_f(fields["title-offset"]),
            **common,
        )


# --- commented elements -------------------------------------------------------


@dataclass(frozen=True)
class Free:
    """The comment may be placed anywhere."""


@dataclass(frozen=True)
class LimitedBox:
    """Comment anchor confined to the body bbox inflated on every side."""

    inflate: float = 60.0


@dataclass(frozen=True)
class LimitedRadius:
    """Comment anchor confined to a disc around the body's box center."""

    radius: float


CommentPolicy = Union[Free, LimitedBox, LimitedRadius]


@dataclass
class CommentedElement:
    body_id: str
    comment_id: str
    policy: CommentPolicy = LimitedBox()


Region = Optional[tuple]  # ("box", Box) | ("disc", center, radius) | None


def comment_region(pair: CommentedElement, body: MovableObject) -> Region:
    """Scene-space region the comment anchor must stay in, None when free."""
    if isinstance(pair.policy, Free):
        return None
    x0, y0, x1, y1 = body.bbox()
    if isinstance(pair.policy, LimitedRadius):
        return ("disc", ((x0 + x1) / 2, (y0 + y1) / 2), pair.policy.radius)
    m = pair.policy.inflate
    return ("box", (x0 - m, y0 - m, x1 + m, y1 + m))


def clamp_into_region(region: Region, pt: Vec) -> Vec:
    """Project a point into the region (identity when inside or free)."""
    if region is None:
        return pt
    if region[0] == "box":
        x0, y0, x1, y1 = region[1]
        return (min(max(pt[0], x0), x1), min(max(pt[1], y0), y1))
    _, center, radius = region
    d = dist(pt, center)
    if d <= radius or d < 1e-12:
        return pt
    return add(center, scale(sub(pt, center), radius / d))


def region_contains(region: Region, pt: Vec, tol: float = 1e-9) -> bool:
    if region is None:
        return True
    if region[0] == "box":
        x0, y0, x1, y1 = region[1]
        return x0 - tol <= pt[0] <= x1 + tol and y0 - tol <= pt[1] <= y1 + tol
    _, center, radius = region
    return dist(pt, center) <= radius + tol


def policy_to_text(policy: CommentPolicy) -> str:
    if isinstance(policy, Free):
        return "free"
    if isinstance(policy, LimitedRadius):
        return f"limited-radius {fmt_f(policy.radius)}"
    return f"limited-box {fmt_f(policy.inflate)}"


def policy_from_text(text: str) -> CommentPolicy:
    parts = text.split()
    if parts == ["free"]:
        return Free()
    if len(parts) == 2 and parts[0] == "limited-radius":
        radius = parse_f(parts[1])
        if radius <= 0:
            raise ValueError("comment region radius must be positive")
        return LimitedRadius(radius)
    if len(parts) == 2 and parts[0] == "limited-box":
        inflate = parse_f(parts[1])
        if inflate < 0:
            raise ValueError("comment region inflation must be non-negative")
        return LimitedBox(inflate)
    raise ValueError(f"unknown comment policy {text!r}")


# --- scene-level operations ---------------------------------------------------


def frame_of(group: ElasticGroup, scene) -> Box:
    group.attach(scene.get)
    return group.frame()


def move_group(group: ElasticGroup, delta: Vec, scene) -> None:
    scene.apply_translate(group, delta)


def move_member(group: ElasticGroup, member_id: str, delta: Vec, scene) -> None:
    if member_id not in group.members:
        raise MissingMember(f"group {group.id!r}: {member_id!r} is not a member")
    scene.apply_translate(scene.get(member_id), delta)


def slide_title(group: ElasticGroup, pointer_x: float) -> float:
    return group.slide_title(pointer_x)


def move_comment(pair: CommentedElement, delta: Vec, scene) -> Vec:
    """Move the comment alone, clamped into its body-relative region.

    Returns the applied delta.
    """
    body = scene.get(pair.body_id)
    comment = scene.get(pair.comment_id)
    anchor = comment.rotation_center()
    target = clamp_into_region(comment_region(pair, body), add(anchor, delta))
    applied = sub(target, anchor)
    comment.translate(applied)
    return applied
