"""SVG snapshots of a scene, optionally with the covers outlined.

Scene coordinates have y growing upward, SVG has it growing downward, so
every emitted y is negated (a pure mirror keeps circles circles and text
upright).  Objects are drawn in display order, bottom first, which is
exactly painter's order.  With covers enabled, every cover node becomes
exactly one extra element carrying class="cover-node": circles for disc
nodes, polygons for polygon nodes, stadium outlines for strips.
"""

from __future__ import annotations

import math

from .geometry import ConvexPoly, Disc, Strip, Vec, add, dist, scale, sub, union_bbox
from .groups import ElasticGroup
from .errors import MissingMember
from .scene import Scene
from .shapes.base import fmt_f

FILL = {
    "red": "#e8a19b",
    "green": "#a8cfa0",
    "blue": "#9fb8dc",
    "yellow": "#e3d48c",
    "gray": "#c9c9c9",
}
DEFAULT_FILL = "#d7e0ea"
STROKE = "#39414d"
COVER_STROKE = "#b3266e"


def _n(v: float) -> str:
    return fmt_f(v)


def _pt(p: Vec) -> str:
    return f"{_n(p[0])},{_n(-p[1])}"


def _points(pts) -> str:
    return " ".join(_pt(p) for p in pts)


def _arc_to(center: Vec, p_to: Vec, mid: Vec, radius: float, a_from: float) -> str:
    """SVG arc command from the current point to p_to around center.

    All points are scene coordinates; flags are chosen so the arc passes
    on the side of the given midpoint.  a_from is the scene angle of the
    current point about the center.
    """
    a_to = math.atan2(p_to[1] - center[1], p_to[0] - center[0])
    ccw = (a_to - a_from) % (2 * math.pi)
    half = a_from + ccw / 2
    mid_ccw = add(center, scale((math.cos(half), math.sin(half)), radius))
    mid_cw = (2 * center[0] - mid_ccw[0], 2 * center[1] - mid_ccw[1])
    if dist(mid_ccw, mid) <= dist(mid_cw, mid):
        # counterclockwise in scene space = sweep flag 0 after the y-mirror
        large = 1 if ccw > math.pi else 0
        sweep = 0
    else:
        large = 1 if (2 * math.pi - ccw) > math.pi else 0
        sweep = 1
    r = _n(radius)
    return f"A {r} {r} 0 {large} {sweep} {_pt(p_to)}"


def _circle_path(center: Vec, radius: float) -> str:
    east = add(center, (radius, 0.0))
    west = sub(center, (radius, 0.0))
    north = add(center, (0.0, radius))
    south = sub(center, (0.0, radius))
    return (
        f"M {_pt(east)} "
        + _arc_to(center, west, north, radius, 0.0)
        + " "
        + _arc_to(center, east, south, radius, math.pi)
    )


def _stadium_path(strip: Strip) -> str:
    a, b, h = strip.a, strip.b, strip.halfwidth
    u = scale(sub(b, a), 1.0 / dist(a, b))
    n = (-u[1], u[0])
    p1 = add(a, scale(n, h))
    p2 = add(b, scale(n, h))
    p3 = sub(b, scale(n, h))
    p4 = sub(a, scale(n, h))
    ang_b = math.atan2(p2[1] - b[1], p2[0] - b[0])
    ang_a = math.atan2(p4[1] - a[1], p4[0] - a[0])
    return (
        f"M {_pt(p1)} L {_pt(p2)} "
        + _arc_to(b, p3, add(b, scale(u, h)), h, ang_b)
        + f" L {_pt(p4)} "
        + _arc_to(a, p1, sub(a, scale(u, h)), h, ang_a)
        + " Z"
    )


def _fill_of(obj) -> str:
    return FILL.get(obj.color_class or "", DEFAULT_FILL)


def _style(obj) -> str:
    return f'fill="{_fill_of(obj)}" stroke="{STROKE}" stroke-width="1.5"'


def _text_element(pos: Vec, payload: str, angle: float = 0.0) -> str:
    x, y = _n(pos[0]), _n(-pos[1])
    transform = ""
    if angle != 0.0:
        deg = _n(-math.degrees(angle))
        transform = f' transform="rotate({deg} {x} {y})"'
    safe = (
        payload.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
    )
    return (
        f'<text x="{x}" y="{y}" font-family="sans-serif" font-size="13" '
        f'text-anchor="middle" dominant-baseline="central"{transform}>{safe}</text>'
    )


def _draw_object(obj) -> list[str]:
    kind = obj.kind
    out: list[str] = []
    if kind == "line":
        out.append(
            f'<line x1="{_n(obj.a[0])}" y1="{_n(-obj.a[1])}" x2="{_n(obj.b[0])}" '
            f'y2="{_n(-obj.b[1])}" stroke="{STROKE}" '
            f'stroke-width="{_n(obj.thickness)}" stroke-linecap="round"/>'
        )
    elif kind == "segmented-line":
        out.append(
            f'<polyline points="{_points(obj.points)}" fill="none" stroke="{STROKE}" '
            f'stroke-width="{_n(obj.thickness)}" stroke-linecap="round" '
            'stroke-linejoin="round"/>'
        )
    elif kind == "rect":
        corners = [obj.corner_pos(n) for n in ("nw", "ne", "se", "sw")]
        out.append(f'<polygon points="{_points(corners)}" {_style(obj)}/>')
        u, v = obj._axes()
        for off in obj.partitions:
            base = add(obj.center, scale(u, off))
            top = add(base, scale(v, obj.h / 2))
            bottom = sub(base, scale(v, obj.h / 2))
            out.append(
                f'<line x1="{_n(bottom[0])}" y1="{_n(-bottom[1])}" '
                f'x2="{_n(top[0])}" y2="{_n(-top[1])}" stroke="{STROKE}"/>'
            )
    elif kind == "circle":
        out.append(
            f'<circle cx="{_n(obj.center[0])}" cy="{_n(-obj.center[1])}" '
            f'r="{_n(obj.radius)}" {_style(obj)}/>'
        )
    elif kind == "ring":
        path = _circle_path(obj.center, obj.r_outer) + " Z " + _circle_path(
            obj.center, obj.r_inner
        ) + " Z"
        out.append(f'<path d="{path}" fill-rule="evenodd" {_style(obj)}/>')
        for angle in obj.partitions:
            u = (math.cos(angle), math.sin(angle))
            p0 = add(obj.center, scale(u, obj.r_inner))
            p1 = add(obj.center, scale(u, obj.r_outer))
            out.append(
                f'<line x1="{_n(p0[0])}" y1="{_n(-p0[1])}" '
                f'x2="{_n(p1[0])}" y2="{_n(-p1[1])}" stroke="{STROKE}"/>'
            )
    elif kind == "sector":
        a0 = obj.start_angle
        a1 = obj.start_angle + obj.sweep
        p0 = add(obj.center, scale((math.cos(a0), math.sin(a0)), obj.radius))
        p1 = add(obj.center, scale((math.cos(a1), math.sin(a1)), obj.radius))
        mid_angle = a0 + obj.sweep / 2
        mid = add(obj.center, scale((math.cos(mid_angle), math.sin(mid_angle)), obj.radius))
        path = (
            f"M {_pt(obj.center)} L {_pt(p0)} "
            + _arc_to(obj.center, p1, mid, obj.radius, a0)
            + " Z"
        )
        out.append(f'<path d="{path}" {_style(obj)}/>')
    elif kind == "crescent":
        c1, c2 = obj.center, obj.bite_center
        big, small = obj.radius, obj.bite_radius
        d = dist(c1, c2)
        u = scale(sub(c2, c1), 1.0 / d)
        along = (d * d + big * big - small * small) / (2 * d)
        rise = math.sqrt(max(big * big - along * along, 0.0))
        perp = (-u[1], u[0])
        p_plus = add(add(c1, scale(u, along)), scale(perp, rise))
        p_minus = sub(add(c1, scale(u, along)), scale(perp, rise))
        far = sub(c1, scale(u, big))
        inner = sub(c2, scale(u, small))
        a_plus = math.atan2(p_plus[1] - c1[1], p_plus[0] - c1[0])
        a_minus2 = math.atan2(p_minus[1] - c2[1], p_minus[0] - c2[0])
        path = (
            f"M {_pt(p_plus)} "
            + _arc_to(c1, p_minus, far, big, a_plus)
            + " "
            + _arc_to(c2, p_plus, inner, small, a_minus2)
            + " Z"
        )
        out.append(f'<path d="{path}" {_style(obj)}/>')
    elif kind in ("regular-polygon", "convex-polygon", "chatoyant"):
        pts = obj.vertices() if callable(getattr(obj, "vertices")) else obj.vertices
        out.append(f'<polygon points="{_points(pts)}" {_style(obj)}/>')
        if kind != "convex-polygon":
            c = obj.center
            out.append(
                f'<circle cx="{_n(c[0])}" cy="{_n(-c[1])}" r="2.5" fill="{STROKE}"/>'
            )
    elif kind in ("text-m", "text-mr"):
        x0, y0, x1, y1 = obj.bbox()
        if obj.angle == 0.0:
            corners = ((x0, y0), (x1, y0), (x1, y1), (x0, y1))
        else:
            corners = obj.footprint()[0].vertices
        out.append(
            f'<polygon points="{_points(corners)}" fill="none" '
            f'stroke="{STROKE}" stroke-dasharray="2 2"/>'
        )
        out.append(_text_element(obj.center, obj.text, obj.angle))
    elif kind == "house":
        top = obj.center[1] + obj.h / 2
        bottom = obj.center[1] - obj.h / 2
        left = obj.center[0] - obj.w / 2
        right = obj.center[0] + obj.w / 2
        pts = ((left, bottom), (right, bottom), (right, top), obj.apex, (left, top))
        out.append(f'<polygon points="{_points(pts)}" {_style(obj)}/>')
    elif kind == "group":
        try:
            x0, y0, x1, y1 = obj.frame()
        except MissingMember:
            return out
        corners = ((x0, y0), (x1, y0), (x1, y1), (x0, y1))
        out.append(
            f'<polygon points="{_points(corners)}" fill="none" stroke="{STROKE}" '
            'stroke-dasharray="6 3"/>'
        )
        if obj.title:
            out.append(_text_element(obj._title_anchor((x0, y0, x1, y1)), obj.title))
    else:  # unknown kinds still show up as their footprint boxes
        x0, y0, x1, y1 = obj.bbox()
        corners = ((x0, y0), (x1, y0), (x1, y1), (x0, y1))
        out.append(f'<polygon points="{_points(corners)}" {_style(obj)}/>')
    return out


def _cover_element(shape) -> str:
    attrs = (
        f'class="cover-node" fill="none" stroke="{COVER_STROKE}" '
        'stroke-width="1" stroke-dasharray="3 2"'
    )
    if isinstance(shape, Disc):
        return (
            f'<circle {attrs} cx="{_n(shape.center[0])}" '
            f'cy="{_n(-shape.center[1])}" r="{_n(shape.radius)}"/>'
        )
    if isinstance(shape, ConvexPoly):
        return f'<polygon {attrs} points="{_points(shape.vertices)}"/>'
    return f'<path {attrs} d="{_stadium_path(shape)}"/>'


def render_svg(scene: Scene, show_covers: bool = False) -> str:
    boxes = [obj.bbox() for obj in scene.objects]
    if scene.area is not None:
        boxes.append(scene.area.bounds)
    if boxes:
        x0, y0, x1, y1 = union_bbox(boxes)
    else:
        x0, y0, x1, y1 = 0.0, 0.0, 100.0, 100.0
    pad = 24.0
    view = (x0 - pad, -(y1 + pad), (x1 - x0) + 2 * pad, (y1 - y0) + 2 * pad)
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_n(view[0])} {_n(view[1])} {_n(view[2])} {_n(view[3])}">'
    ]
    if scene.area is not None:
        bx0, by0, bx1, by1 = scene.area.bounds
        lines.append(
            f'<rect x="{_n(bx0)}" y="{_n(-by1)}" width="{_n(bx1 - bx0)}" '
            f'height="{_n(by1 - by0)}" fill="none" stroke="#8a8f98" '
            'stroke-dasharray="8 4"/>'
        )
    for obj in scene.objects:
        if "--" not in obj.id:  # double hyphens may not appear in a comment
            lines.append(f"<!-- {obj.id} -->")
        lines.extend(_draw_object(obj))
    if show_covers:
        for obj in scene.objects:
            for node in obj.build_cover().nodes:
                lines.append(_cover_element(node.shape))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
