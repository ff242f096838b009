"""Movement constraints applied between a proposed motion and its commit.

Four independent mechanisms:

- area confinement clamps translations so a grab point or a whole object
  stays inside the scene work area,
- personal size limits clamp proposed dimensions componentwise,
- overlap rules forbid strict-interior intersection of object footprints
  (boundary contact is always permitted, walls are never sticky),
- constrained sliding finds the maximal prefix of a blocked motion and
  then applies the residual along the wall, one recursion level.

Everything here is a pure function over plain data.  The mover decides
when to call what; this module never touches a scene.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Sequence

from .errors import InvalidGeometry
from .geometry import NodeShape, Vec, add, ensure_finite, norm, scale, shapes_intersect

Box = tuple[float, float, float, float]

MOTION_TOL = 1e-6
# prefix validity is sampled at most this far apart so thin walls cannot
# be jumped by a single large proposal
MAX_PREFIX_STEP = 1.0


class AreaMode(Enum):
    GRAB_POINT = "grab-point"
    WHOLE_OBJECT = "whole-object"


@dataclass(frozen=True)
class AreaRestriction:
    """Scene work area with the confinement mode applied to every catch."""

    bounds: Box
    mode: AreaMode = AreaMode.GRAB_POINT

    def __post_init__(self) -> None:
        x0, y0, x1, y1 = self.bounds
        ensure_finite(x0, y0, x1, y1)
        if not (x0 < x1 and y0 < y1):
            raise InvalidGeometry(f"degenerate work area {self.bounds}")


@dataclass(frozen=True)
class SizeLimits:
    """Per-object min/max extents; meaning of components is shape-specific
    (width/height for boxes, radius for round shapes)."""

    minimum: tuple[float, ...]
    maximum: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.minimum) != len(self.maximum) or not self.minimum:
            raise InvalidGeometry("size limit components do not match")
        for lo, hi in zip(self.minimum, self.maximum):
            ensure_finite(lo)
            if math.isnan(hi):
                raise InvalidGeometry("size limit maximum is NaN")
            if not 0 < lo <= hi:
                raise InvalidGeometry(f"need 0 < min <= max, got {lo}..{hi}")

    @staticmethod
    def box(min_w: float, min_h: float, max_w: float = math.inf, max_h: float = math.inf) -> "SizeLimits":
        return SizeLimits((min_w, min_h), (max_w, max_h))

    @staticmethod
    def radial(min_r: float, max_r: float = math.inf) -> "SizeLimits":
        return SizeLimits((min_r,), (max_r,))


def clamp_dimensions(dims: Sequence[float], limits: SizeLimits | None) -> tuple[float, ...]:
    """Componentwise clamp of proposed dimensions into [min, max]."""
    if limits is None:
        return tuple(dims)
    if len(dims) != len(limits.minimum):
        raise InvalidGeometry(
            f"{len(dims)} dimensions against {len(limits.minimum)}-component limits"
        )
    return tuple(
        min(max(d, lo), hi) for d, lo, hi in zip(dims, limits.minimum, limits.maximum)
    )


def _axis_allowance(d: float, lo: float, hi: float, b_lo: float, b_hi: float) -> float:
    # One-sided clamp: never reverse direction, never exceed the proposal.
    # An entity already outside may move back in but not further out.
    if d > 0:
        return min(d, max(0.0, b_hi - hi))
    if d < 0:
        return max(d, min(0.0, b_lo - lo))
    return 0.0


def clamp_translation(
    grab: Vec, bbox: Box, proposed: Vec, area: AreaRestriction | None
) -> Vec:
    """Largest prefix of `proposed` keeping the area mode satisfied.

    Axis-separable for the axis-aligned work area: x and y clamp
    independently, so motion along a wall is never lost.
    """
    if area is None:
        return proposed
    if area.mode is AreaMode.GRAB_POINT:
        x0, y0, x1, y1 = grab[0], grab[1], grab[0], grab[1]
    else:
        x0, y0, x1, y1 = bbox
    bx0, by0, bx1, by1 = area.bounds
    return (
        _axis_allowance(proposed[0], x0, x1, bx0, bx1),
        _axis_allowance(proposed[1], y0, y1, by0, by1),
    )


class OverlapMode(Enum):
    OFF = "off"
    SAME_COLOR = "same-color"
    ALL = "all"


@dataclass(frozen=True)
class OverlapRule:
    """Which object pairs may not overlap; obstacle ids act as walls for
    everyone whenever the rule is active at all."""

    mode: OverlapMode = OverlapMode.OFF
    obstacles: frozenset[str] = frozenset()


def pair_forbidden(
    rule: OverlapRule, id_a: str, color_a: str | None, id_b: str, color_b: str | None
) -> bool:
    if rule.mode is OverlapMode.OFF:
        return False
    if rule.mode is OverlapMode.ALL:
        return True
    if id_a in rule.obstacles or id_b in rule.obstacles:
        return True
    return color_a is not None and color_a == color_b


def footprints_overlap(fp_a: Sequence[NodeShape], fp_b: Sequence[NodeShape]) -> bool:
    """Strict-interior intersection of two convex decompositions."""
    return any(shapes_intersect(a, b) for a in fp_a for b in fp_b)


def overlap_permitted(
    moving_id: str,
    moving_color: str | None,
    moving_footprint: Sequence[NodeShape],
    others: Iterable[tuple[str, str | None, Sequence[NodeShape]]],
    rule: OverlapRule,
) -> bool:
    """True iff the moving footprint violates no pair rule against `others`."""
    if rule.mode is OverlapMode.OFF:
        return True
    for other_id, other_color, other_fp in others:
        if other_id == moving_id:
            continue
        if not pair_forbidden(rule, moving_id, moving_color, other_id, other_color):
            continue
        if footprints_overlap(moving_footprint, other_fp):
            return False
    return True


def _prefix_allowance(
    base: Vec, vec: Vec, valid: Callable[[Vec], bool], tol: float, max_step: float
) -> float:
    """Largest t in [0,1] with valid(base + s*vec) for every sampled s <= t.

    Marches in steps no longer than max_step, then bisects inside the first
    failing step down to tol (measured in scene units along vec).
    """
    length = norm(vec)
    if length == 0.0:
        return 0.0
    steps = max(1, math.ceil(length / max_step))
    good = 0.0
    bad = None
    for k in range(1, steps + 1):
        t = k / steps
        if valid(add(base, scale(vec, t))):
            good = t
        else:
            bad = t
            break
    if bad is None:
        return 1.0
    while (bad - good) * length > tol:
        mid = 0.5 * (good + bad)
        if valid(add(base, scale(vec, mid))):
            good = mid
        else:
            bad = mid
    return good


def constrained_slide(
    proposed: Vec,
    valid: Callable[[Vec], bool],
    tol: float = MOTION_TOL,
    max_step: float = MAX_PREFIX_STEP,
) -> Vec:
    """Maximal prefix of `proposed` under the validity predicate, then one
    level of wall sliding with the residual.

    `valid(delta)` must report whether the placement displaced by `delta`
    from the current one is permitted; the current placement is assumed
    permitted.  The residual after stopping is retried one axis at a time,
    larger component first, which is exact tangential sliding for
    axis-aligned walls and a fair approximation otherwise.
    """
    t = _prefix_allowance((0.0, 0.0), proposed, valid, tol, max_step)
    applied = scale(proposed, t)
    if t >= 1.0:
        return applied
    residual = scale(proposed, 1.0 - t)
    candidates = [(residual[0], 0.0), (0.0, residual[1])]
    candidates.sort(key=lambda c: -max(abs(c[0]), abs(c[1])))
    for cand in candidates:
        if norm(cand) <= tol:
            continue
        s = _prefix_allowance(applied, cand, valid, tol, max_step)
        if s * norm(cand) > tol:
            return add(applied, scale(cand, s))
    return applied


def adhered_cursor(grab_point: Vec, applied_total: Vec) -> Vec:
    """Where the pointer should sit to stay glued to the original grab
    point after clamping: the grab point displaced by what was applied."""
    return add(grab_point, applied_total)
