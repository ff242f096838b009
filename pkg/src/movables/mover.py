"""The interaction state machine: catch on press, route motion, release.

One mover serves one scene.  A press walks the display order from the top,
asks each object's cover for a hit, and either catches the object or falls
through transparent nodes to whatever lies beneath.  Subsequent motion is
routed by the caught node's behavior: whole moves translate, node moves
resize or reconfigure, secondary-button drags rotate.  All restriction
clamping happens here, between the proposed motion and its commit, so the
shapes themselves stay oblivious to scenes and walls.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .errors import ProtocolViolation, VanishedObject
from .geometry import (
    NodeBehavior,
    Vec,
    add,
    dist,
    ensure_finite,
    norm,
    normalize_angle,
    scale,
    sub,
)
from .restrictions import AreaMode, clamp_translation, constrained_slide
from .shapes.base import MovableObject

# pointer-to-handle distances above this report a corrected cursor
ADHESION_TOL = 1e-9
# guarded node moves and rotations stop within this arc/segment length
MOTION_TOL = 1e-6
# coarse march step (scene units) before bisection, prevents tunneling
MARCH_STEP = 1.0


class PointerButton(Enum):
    PRIMARY = "primary"
    SECONDARY = "secondary"


@dataclass
class CatchResult:
    caught: bool
    object_id: Optional[str] = None
    node_index: Optional[int] = None


@dataclass
class CaughtInfo:
    object_id: str
    node_index: int
    button: PointerButton


@dataclass
class MoveReport:
    """Outcome of one pointer motion event.

    corrected_cursor is the adhered position: where the pointer should sit
    so it stays glued to the grabbed handle after clamping.  It is absent
    whenever the motion was applied in full.
    """

    moved: bool
    corrected_cursor: Optional[Vec]
    applied_delta: Vec


@dataclass
class ReleaseInfo:
    object_id: str
    node_index: int
    total_displacement: Vec
    total_rotation: float


@dataclass
class _Caught:
    obj: MovableObject
    node_index: int
    behavior: NodeBehavior
    button: PointerButton
    grab_point: Vec
    grab_offset: Vec
    immobile: bool
    start_angle: float = 0.0
    last_pt: Vec = (0.0, 0.0)
    total_displacement: Vec = field(default=(0.0, 0.0))
    total_rotation: float = 0.0


def _lerp(a: Vec, b: Vec, t: float) -> Vec:
    return (a[0] + (b[0] - a[0]) * t, a[1] + (b[1] - a[1]) * t)


def _clamp_into(bounds: tuple[float, float, float, float], pt: Vec) -> Vec:
    x0, y0, x1, y1 = bounds
    return (min(max(pt[0], x0), x1), min(max(pt[1], y0), y1))


def _inside(bounds: tuple[float, float, float, float], pt: Vec) -> bool:
    x0, y0, x1, y1 = bounds
    return x0 <= pt[0] <= x1 and y0 <= pt[1] <= y1


class Mover:
    """Single-owner press/move/release automaton over a scene."""

    def __init__(self, raise_on_catch: bool = True):
        self.raise_on_catch = raise_on_catch
        self._state: Optional[_Caught] = None

    # --- state inspection ---------------------------------------------------

    def caught_info(self) -> Optional[CaughtInfo]:
        st = self._state
        if st is None:
            return None
        return CaughtInfo(st.obj.id, st.node_index, st.button)

    def adhered_point(self) -> Optional[Vec]:
        """Current adhered cursor position, or None when idle."""
        st = self._state
        return None if st is None else st.last_pt

    def cancel(self, object_id: str) -> None:
        """Drop the catch if it holds the given object (removal hook)."""
        if self._state is not None and self._state.obj.id == object_id:
            self._state = None

    # --- press --------------------------------------------------------------

    def catch(self, scene, pt: Vec, button: PointerButton) -> CatchResult:
        ensure_finite(*pt)
        if self._state is not None:
            raise ProtocolViolation("press while an object is already caught")
        if scene.area is not None and not _inside(scene.area.bounds, pt):
            return CatchResult(False)  # presses outside the work area grab nothing
        for obj in reversed(list(scene.objects)):
            info = obj.hit(pt)
            if info is None:
                continue
            if info.behavior is NodeBehavior.TRANSPARENT:
                continue  # the press falls through to the object beneath
            immobile = info.behavior is NodeBehavior.FROZEN
            if button is PointerButton.PRIMARY:
                immobile = immobile or not obj.movable
            else:
                immobile = immobile or not obj.rotatable
            center = obj.rotation_center()
            self._state = _Caught(
                obj=obj,
                node_index=info.index,
                behavior=info.behavior,
                button=button,
                grab_point=pt,
                grab_offset=sub(pt, center),
                immobile=immobile,
                start_angle=math.atan2(pt[1] - center[1], pt[0] - center[0]),
                last_pt=pt,
            )
            if self.raise_on_catch:
                scene.pop_to_top(obj.id)
            return CatchResult(True, obj.id, info.index)
        return CatchResult(False)

    # --- motion ---------------------------------------------------------------

    def move_to(self, scene, pt: Vec) -> MoveReport:
        ensure_finite(*pt)
        st = self._state
        if st is None or st.immobile:
            return MoveReport(False, None, (0.0, 0.0))
        if st.button is PointerButton.SECONDARY:
            return self._rotate_to(scene, st, pt)
        if st.behavior is NodeBehavior.WHOLE_MOVE:
            return self._translate_to(scene, st, pt)
        return self._node_move_to(scene, st, pt)

    def release(self, scene, pt: Vec) -> Optional[ReleaseInfo]:
        ensure_finite(*pt)
        st = self._state
        if st is None:
            return None
        # release reports totals; the object stays where the moves left it
        info = ReleaseInfo(
            st.obj.id, st.node_index, st.total_displacement, st.total_rotation
        )
        self._state = None
        return info

    # --- routing ------------------------------------------------------------

    def _translate_to(self, scene, st: _Caught, pt: Vec) -> MoveReport:
        proposed = sub(pt, st.last_pt)
        if norm(proposed) == 0.0:
            return MoveReport(False, None, (0.0, 0.0))
        obj = st.obj
        proposed = scene.clamp_comment_translation(obj, proposed)
        if scene.area is not None:
            proposed = clamp_translation(
                st.last_pt, scene.moving_bbox(obj), proposed, scene.area
            )
        if scene.overlap_active(obj):
            applied = constrained_slide(
                proposed, lambda d: scene.translation_permitted(obj, d)
            )
        else:
            applied = proposed
        if norm(applied) > 0.0 and not scene.comment_anchor_ok(obj, applied):
            applied = self._anchor_prefix(scene, obj, applied)
        if norm(applied) == 0.0:
            corrected = st.last_pt if dist(st.last_pt, pt) > ADHESION_TOL else None
            return MoveReport(False, corrected, (0.0, 0.0))
        scene.apply_translate(obj, applied)
        st.last_pt = add(st.last_pt, applied)
        st.total_displacement = add(st.total_displacement, applied)
        corrected = st.last_pt if dist(st.last_pt, pt) > ADHESION_TOL else None
        return MoveReport(True, corrected, applied)

    @staticmethod
    def _anchor_prefix(scene, obj: MovableObject, applied: Vec) -> Vec:
        # axis clamping can combine the two coordinates in a way a convex
        # comment region does not contain; fall back to the largest prefix
        lo, hi = 0.0, 1.0
        length = norm(applied)
        while (hi - lo) * length > MOTION_TOL:
            mid = 0.5 * (lo + hi)
            d = scale(applied, mid)
            if scene.comment_anchor_ok(obj, d) and scene.translation_permitted(obj, d):
                lo = mid
            else:
                hi = mid
        return scale(applied, lo)

    def _node_move_to(self, scene, st: _Caught, pt: Vec) -> MoveReport:
        obj = st.obj
        target = pt
        if scene.area is not None:
            target = _clamp_into(scene.area.bounds, pt)
        guarded = scene.overlap_active(obj) or (
            scene.area is not None and scene.area.mode is AreaMode.WHOLE_OBJECT
        )
        try:
            if guarded:
                tracked = self._guarded_node_move(scene, st, target)
            else:
                tracked = obj.move_node(st.node_index, target, st.last_pt, safe=scene.safe)
                scene.after_node_move(obj)
        except VanishedObject as gone:
            scene.remove_object(gone.object_id)  # also cancels this catch
            return MoveReport(True, None, (0.0, 0.0))
        if scene.area is not None:
            # the adhered cursor may not leave the work area either
            tracked = _clamp_into(scene.area.bounds, tracked)
        applied = sub(tracked, st.last_pt)
        st.last_pt = tracked
        st.total_displacement = add(st.total_displacement, applied)
        corrected = tracked if dist(tracked, pt) > ADHESION_TOL else None
        return MoveReport(norm(applied) > 0.0, corrected, applied)

    def _guarded_node_move(self, scene, st: _Caught, target: Vec) -> Vec:
        """Largest pointer prefix whose node move keeps the placement legal."""
        obj = st.obj
        length = dist(st.last_pt, target)
        if length == 0.0:
            return st.last_pt
        snap = obj.snapshot()

        def trial(t: float) -> Optional[Vec]:
            obj.restore(snap)
            p = _lerp(st.last_pt, target, t)
            try:
                tracked = obj.move_node(st.node_index, p, st.last_pt, safe=scene.safe)
            except VanishedObject:
                return None  # under guards, stop short instead of vanishing
            return tracked if scene.placement_ok(obj) else None

        tracked = trial(1.0)
        if tracked is None:
            lo, step = 0.0, min(1.0, MARCH_STEP / length)
            while lo + step < 1.0 and trial(lo + step) is not None:
                lo += step
            hi = min(lo + step, 1.0)
            while (hi - lo) * length > MOTION_TOL:
                mid = 0.5 * (lo + hi)
                if trial(mid) is not None:
                    lo = mid
                else:
                    hi = mid
            tracked = trial(lo)
            if tracked is None:  # even the zero-length move is blocked
                obj.restore(snap)
                tracked = st.last_pt
        scene.after_node_move(obj)
        return tracked

    def _rotate_to(self, scene, st: _Caught, pt: Vec) -> MoveReport:
        obj = st.obj
        target = pt
        if scene.area is not None:
            target = _clamp_into(scene.area.bounds, pt)
        center = obj.rotation_center()
        v_last = sub(st.last_pt, center)
        v_now = sub(target, center)
        if norm(v_last) < 1e-12 or norm(v_now) < 1e-12:
            return MoveReport(False, None, (0.0, 0.0))
        angle_last = math.atan2(v_last[1], v_last[0])
        dangle = normalize_angle(math.atan2(v_now[1], v_now[0]) - angle_last)
        guarded = scene.overlap_active(obj) or (
            scene.area is not None and scene.area.mode is AreaMode.WHOLE_OBJECT
        )
        applied_angle = dangle
        if guarded and dangle != 0.0:
            applied_angle = self._guarded_rotation(scene, obj, center, dangle)
        if applied_angle == 0.0:
            corrected = st.last_pt if dist(st.last_pt, pt) > ADHESION_TOL else None
            return MoveReport(False, corrected, (0.0, 0.0))
        obj.rotate(center, applied_angle)
        scene.after_node_move(obj)
        st.total_rotation += applied_angle
        if abs(applied_angle - dangle) > ADHESION_TOL:
            a = angle_last + applied_angle
            adhered = add(center, scale((math.cos(a), math.sin(a)), norm(v_now)))
            if scene.area is not None:
                adhered = _clamp_into(scene.area.bounds, adhered)
            st.last_pt = adhered
            return MoveReport(True, adhered, (0.0, 0.0))
        st.last_pt = target
        corrected = target if dist(target, pt) > ADHESION_TOL else None
        return MoveReport(True, corrected, (0.0, 0.0))

    @staticmethod
    def _guarded_rotation(scene, obj: MovableObject, center: Vec, dangle: float) -> float:
        x0, y0, x1, y1 = obj.bbox()
        reach = max(
            dist(center, c) for c in ((x0, y0), (x1, y0), (x1, y1), (x0, y1))
        )
        arc = abs(dangle) * max(reach, 1e-9)
        snap = obj.snapshot()

        def ok(f: float) -> bool:
            obj.restore(snap)
            obj.rotate(center, dangle * f)
            return scene.placement_ok(obj)

        result = 1.0
        if not ok(1.0):
            lo, step = 0.0, min(1.0, MARCH_STEP / arc)
            while lo + step < 1.0 and ok(lo + step):
                lo += step
            hi = min(lo + step, 1.0)
            while (hi - lo) * arc > MOTION_TOL:
                mid = 0.5 * (lo + hi)
                if ok(mid):
                    lo = mid
                else:
                    hi = mid
            result = lo
        obj.restore(snap)
        return dangle * result
