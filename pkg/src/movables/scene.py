"""Display-ordered object registry with replay plumbing.

The scene owns every object, the z-order, the active restrictions and the
single mover.  It is also the unit the mover talks to when it needs more
than one object: overlap obstacles, synchronous dependents (group members
and comments), and the work area.  Everything here is deterministic; the
only randomness in the package lives in `random_trace` and is explicitly
seeded.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import DuplicateId, UnknownId
from .geometry import Vec, add, norm, sub, translate_shape, union_bbox
from .groups import (
    CommentedElement,
    CommentPolicy,
    ElasticGroup,
    LimitedBox,
    clamp_into_region,
    comment_region,
    region_contains,
)
from .mover import Mover, PointerButton
from .restrictions import (
    AreaMode,
    AreaRestriction,
    OverlapMode,
    OverlapRule,
    footprints_overlap,
    overlap_permitted,
    pair_forbidden,
)
from .shapes.base import MovableObject
from .shapes.text import TextM

_ID_RE = re.compile(r"[A-Za-z0-9_.:-]+")

Box = tuple[float, float, float, float]


@dataclass(frozen=True)
class TraceEvent:
    """One pointer event; button is meaningful for presses only."""

    seq: int
    kind: str  # "press" | "move" | "release"
    button: Optional[PointerButton]
    pos: Vec


@dataclass
class ReplayReport:
    reports: list
    scene: "Scene"


class Scene:
    """Single-owner mutable unit holding objects, pairs and the mover."""

    def __init__(
        self,
        *,
        area: AreaRestriction | None = None,
        overlap_rule: OverlapRule | None = None,
        safe: bool = True,
        raise_on_catch: bool = True,
    ):
        self._order: list[MovableObject] = []
        self._index: dict[str, MovableObject] = {}
        self.pairs: list[CommentedElement] = []
        self.area = area
        self.overlap_rule = overlap_rule
        self.safe = safe
        self.mover = Mover(raise_on_catch=raise_on_catch)

    # -- registry --------------------------------------------------------

    @property
    def objects(self) -> tuple[MovableObject, ...]:
        """Display order; index 0 drawn first, last entry topmost."""
        return tuple(self._order)

    def ids(self) -> list[str]:
        return [obj.id for obj in self._order]

    def __contains__(self, object_id: str) -> bool:
        return object_id in self._index

    def get(self, object_id: str) -> MovableObject:
        try:
            return self._index[object_id]
        except KeyError:
            raise UnknownId(object_id) from None

    def add_object(self, obj: MovableObject) -> MovableObject:
        if not _ID_RE.fullmatch(obj.id):
            raise ValueError(f"object id {obj.id!r} is not a plain token")
        if obj.id in self._index:
            raise DuplicateId(obj.id)
        if isinstance(obj, ElasticGroup):
            obj.attach(self.get)
        self._order.append(obj)
        self._index[obj.id] = obj
        return obj

    def remove_object(self, object_id: str) -> None:
        obj = self.get(object_id)
        self._order.remove(obj)
        del self._index[object_id]
        self.mover.cancel(object_id)
        self.pairs = [
            p for p in self.pairs if object_id not in (p.body_id, p.comment_id)
        ]
        for other in list(self._order):
            if isinstance(other, ElasticGroup) and object_id in other.members:
                other.members = [m for m in other.members if m != object_id]
                if not other.members:  # a frame around nothing is undefined
                    self.remove_object(other.id)

    def pop_to_top(self, object_id: str) -> None:
        obj = self.get(object_id)
        self._order.remove(obj)
        self._order.append(obj)

    def add_pair(
        self,
        body_id: str,
        comment_id: str,
        policy: CommentPolicy = LimitedBox(),
        settle: bool = True,
    ) -> CommentedElement:
        """Pair a body with its comment.

        With settle, the comment is pulled into its region right away;
        loading a document must instead keep the stored placement and let
        `validate` report a comment that sits outside.
        """
        body = self.get(body_id)
        comment = self.get(comment_id)
        if body is comment:
            raise ValueError("an object cannot comment itself")
        if not isinstance(comment, TextM):
            raise ValueError("comments must be text objects")
        for p in self.pairs:
            if p.body_id == body_id:
                raise ValueError(f"object {body_id!r} already has a comment")
            if p.comment_id == comment_id:
                raise ValueError(f"object {comment_id!r} already is a comment")
            if p.body_id == comment_id or p.comment_id == body_id:
                raise ValueError("comment chains are not supported")
        pair = CommentedElement(body_id, comment_id, policy)
        self.pairs.append(pair)
        if settle:
            self._settle_comment(pair)
        return pair

    def pair_by_comment(self, comment_id: str) -> Optional[CommentedElement]:
        return next((p for p in self.pairs if p.comment_id == comment_id), None)

    def pair_by_body(self, body_id: str) -> Optional[CommentedElement]:
        return next((p for p in self.pairs if p.body_id == body_id), None)

    # -- synchronous movement ----------------------------------------------

    def _group_closure(self, obj: MovableObject) -> set[str]:
        """Ids shifted by obj.translate: itself plus group members, deep."""
        out: set[str] = set()
        stack = [obj.id]
        while stack:
            oid = stack.pop()
            if oid in out:
                continue
            out.add(oid)
            o = self._index.get(oid)
            if isinstance(o, ElasticGroup):
                stack.extend(o.members)
        return out

    def _moving_ids(self, obj: MovableObject) -> set[str]:
        shifted = self._group_closure(obj)
        out = set(shifted)
        for oid in shifted:
            pair = self.pair_by_body(oid)
            if pair is not None:
                out.add(pair.comment_id)
        return out

    def apply_translate(self, obj: MovableObject, delta: Vec) -> None:
        """Commit a translation plus its synchronous carries."""
        if norm(delta) == 0.0:
            return
        obj.translate(delta)
        shifted = self._group_closure(obj)
        for oid in sorted(shifted):
            pair = self.pair_by_body(oid)
            if pair is not None and pair.comment_id not in shifted:
                self._index[pair.comment_id]._shift(delta)

    def after_node_move(self, obj: MovableObject) -> None:
        """A resized or rotated body may leave its comment outside the
        region; pull the comment back in."""
        pair = self.pair_by_body(obj.id)
        if pair is not None:
            self._settle_comment(pair)

    def _settle_comment(self, pair: CommentedElement) -> None:
        body = self.get(pair.body_id)
        comment = self.get(pair.comment_id)
        anchor = comment.rotation_center()
        target = clamp_into_region(comment_region(pair, body), anchor)
        if target != anchor:
            comment._shift(sub(target, anchor))

    # -- restriction plumbing for the mover ---------------------------------

    def overlap_active(self, obj: MovableObject) -> bool:
        rule = self.overlap_rule
        return (
            rule is not None
            and rule.mode is not OverlapMode.OFF
            and len(self._order) > 1
        )

    def translation_permitted(self, obj: MovableObject, delta: Vec) -> bool:
        rule = self.overlap_rule
        if rule is None or rule.mode is OverlapMode.OFF:
            return True
        moving = self._moving_ids(obj)
        others = [
            (o.id, o.color_class, o.footprint())
            for o in self._order
            if o.id not in moving and not isinstance(o, ElasticGroup)
        ]
        if not others:
            return True
        for oid in sorted(moving):
            m = self._index.get(oid)
            if m is None or isinstance(m, ElasticGroup):
                continue
            fp = [translate_shape(s, delta) for s in m.footprint()]
            if not overlap_permitted(m.id, m.color_class, fp, others, rule):
                return False
        return True

    def moving_bbox(self, obj: MovableObject) -> Box:
        boxes = []
        for oid in sorted(self._moving_ids(obj)):
            o = self._index.get(oid)
            if o is not None:
                boxes.append(o.bbox())
        return union_bbox(boxes)

    def placement_ok(self, obj: MovableObject) -> bool:
        if self.area is not None and self.area.mode is AreaMode.WHOLE_OBJECT:
            x0, y0, x1, y1 = self.moving_bbox(obj)
            bx0, by0, bx1, by1 = self.area.bounds
            if x0 < bx0 - 1e-9 or y0 < by0 - 1e-9 or x1 > bx1 + 1e-9 or y1 > by1 + 1e-9:
                return False
        return self.translation_permitted(obj, (0.0, 0.0))

    def clamp_comment_translation(self, obj: MovableObject, proposed: Vec) -> Vec:
        pair = self.pair_by_comment(obj.id)
        if pair is None:
            return proposed
        region = comment_region(pair, self.get(pair.body_id))
        if region is None:
            return proposed
        anchor = obj.rotation_center()
        target = clamp_into_region(region, add(anchor, proposed))
        return sub(target, anchor)

    def comment_anchor_ok(self, obj: MovableObject, delta: Vec) -> bool:
        pair = self.pair_by_comment(obj.id)
        if pair is None:
            return True
        region = comment_region(pair, self.get(pair.body_id))
        anchor = obj.rotation_center()
        return region_contains(region, add(anchor, delta))

    # -- validation -----------------------------------------------------------

    def validate(self) -> list[str]:
        """All invariant violations, empty when the scene is sound."""
        issues: list[str] = []
        for obj in self._order:
            for msg in obj.validate():
                issues.append(f"object {obj.id}: {msg}")
        for pair in self.pairs:
            try:
                body = self.get(pair.body_id)
                comment = self.get(pair.comment_id)
            except UnknownId as err:
                issues.append(f"pair references unknown object {err}")
                continue
            region = comment_region(pair, body)
            if not region_contains(region, comment.rotation_center()):
                issues.append(
                    f"comment {pair.comment_id} outside its region near {pair.body_id}"
                )
        rule = self.overlap_rule
        if rule is not None and rule.mode is not OverlapMode.OFF:
            solids = [o for o in self._order if not isinstance(o, ElasticGroup)]
            prints = [o.footprint() for o in solids]
            for i, a in enumerate(solids):
                for j in range(i + 1, len(solids)):
                    b = solids[j]
                    if pair_forbidden(
                        rule, a.id, a.color_class, b.id, b.color_class
                    ) and footprints_overlap(prints[i], prints[j]):
                        issues.append(f"objects {a.id} and {b.id} overlap")
        return issues

    # -- events ---------------------------------------------------------------

    def apply_event(self, event: TraceEvent):
        if event.kind == "press":
            button = event.button or PointerButton.PRIMARY
            return self.mover.catch(self, event.pos, button)
        if event.kind == "move":
            return self.mover.move_to(self, event.pos)
        if event.kind == "release":
            return self.mover.release(self, event.pos)
        raise ValueError(f"unknown event kind {event.kind!r}")

    def replay(self, events: Iterable[TraceEvent]) -> ReplayReport:
        """Apply pointer events strictly in order; no clocks, no randomness."""
        return ReplayReport([self.apply_event(ev) for ev in events], self)

    # -- persistence and rendering ----------------------------------------------

    def serialize(self) -> str:
        from . import layout

        return layout.serialize_scene(self)

    @staticmethod
    def deserialize(text: str) -> "Scene":
        from . import layout

        return layout.deserialize_scene(text)

    def render_svg(self, show_covers: bool = False) -> str:
        from . import svgrender

        return svgrender.render_svg(self, show_covers=show_covers)


def random_trace(scene: Scene, n_events: int, seed: int) -> list[TraceEvent]:
    """A reproducible random pointer session over the scene.

    Presses aim mostly at object boxes so that catches actually happen;
    motion is a gaussian walk that is free to push against any walls.
    """
    rng = random.Random(seed)
    if scene.area is not None:
        region = scene.area.bounds
    elif scene.objects:
        region = union_bbox([obj.bbox() for obj in scene.objects])
        region = (region[0] - 60, region[1] - 60, region[2] + 60, region[3] + 60)
    else:
        region = (0.0, 0.0, 200.0, 200.0)

    def clamp(pt: Vec) -> Vec:
        if scene.area is None:
            return pt
        x0, y0, x1, y1 = scene.area.bounds
        return (min(max(pt[0], x0), x1), min(max(pt[1], y0), y1))

    events: list[TraceEvent] = []
    pos: Vec = ((region[0] + region[2]) / 2, (region[1] + region[3]) / 2)
    pressed = False
    for seq in range(1, n_events + 1):
        last = seq == n_events
        if pressed and (last or rng.random() < 0.18):
            events.append(TraceEvent(seq, "release", None, pos))
            pressed = False
        elif not pressed:
            if scene.objects and rng.random() < 0.8:
                target = rng.choice(scene.objects)
                x0, y0, x1, y1 = target.bbox()
                pos = clamp((rng.uniform(x0, x1), rng.uniform(y0, y1)))
            else:
                pos = (
                    rng.uniform(region[0], region[2]),
                    rng.uniform(region[1], region[3]),
                )
            button = (
                PointerButton.SECONDARY
                if rng.random() < 0.25
                else PointerButton.PRIMARY
            )
            events.append(TraceEvent(seq, "press", button, pos))
            pressed = True
        else:
            pos = (pos[0] + rng.gauss(0, 14), pos[1] + rng.gauss(0, 14))
            events.append(TraceEvent(seq, "move", None, pos))
    return events
