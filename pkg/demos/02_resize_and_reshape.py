"""Resizing and reshaping objects through their handle nodes.

Every object publishes a cover: an ordered list of sensitive nodes.
Nodes tagged node-move act as handles; dragging one reshapes a single
aspect of the object.  The script grabs handles by role and shows how
each policy constrains the result.
"""

import math
from pathlib import Path

from movables import (
    ChatoyantPolygon,
    Disc,
    PointerButton,
    Rect,
    RectPolicy,
    RegularPolygon,
    Ring,
    Scene,
    Sector,
    Strip,
    render_svg,
)

OUT = Path(__file__).parent / "out"


def handle_point(obj, *role):
    """A point inside the cover node whose role matches `role`."""
    for i, node in enumerate(obj.build_cover().nodes):
        if obj.node_role(i)[: len(role)] == role:
            s = node.shape
            if isinstance(s, Disc):
                return s.center
            if isinstance(s, Strip):
                return ((s.a[0] + s.b[0]) / 2, (s.a[1] + s.b[1]) / 2)
            vs = s.vertices
            return (
                sum(v[0] for v in vs) / len(vs),
                sum(v[1] for v in vs) / len(vs),
            )
    raise LookupError(role)


def drag(scene, obj, role, delta):
    start = handle_point(obj, *role)
    scene.mover.catch(scene, start, PointerButton.PRIMARY)
    scene.mover.move_to(scene, (start[0] + delta[0], start[1] + delta[1]))
    scene.mover.release(scene, (start[0] + delta[0], start[1] + delta[1]))


def main() -> None:
    OUT.mkdir(exist_ok=True)
    scene = Scene()

    free = scene.add_object(Rect("free", (100.0, 260.0), 80.0, 40.0))
    ratio = scene.add_object(
        Rect("ratio", (260.0, 260.0), 80.0, 40.0, policy=RectPolicy.FIXED_RATIO)
    )
    sym = scene.add_object(
        Rect("sym", (420.0, 260.0), 80.0, 40.0, policy=RectPolicy.SYMMETRIC)
    )
    shelf = scene.add_object(
        Rect("shelf", (100.0, 150.0), 100.0, 50.0, partitions=[-20.0, 10.0])
    )
    ring = scene.add_object(Ring("ring", (260.0, 150.0), 14.0, 34.0))
    wedge = scene.add_object(Sector("wedge", (420.0, 150.0), 40.0, 0.4, 1.5))
    blob = scene.add_object(
        ChatoyantPolygon(
            "blob", (100.0, 50.0), [(130, 50), (110, 80), (74, 66), (82, 28)]
        )
    )
    hexa = scene.add_object(RegularPolygon("hexa", (260.0, 50.0), 30.0, 6))

    (OUT / "reshape_before.svg").write_text(render_svg(scene, show_covers=True))

    # free rect: the east edge moves alone, the west face stays put
    drag(scene, free, ("edge", "e"), (30.0, 0.0))
    print(f"free rect:  {free.w} x {free.h}, west face at {free.center[0] - free.w / 2}")

    # fixed ratio: a corner drag scales both dimensions together
    drag(scene, ratio, ("corner", "ne"), (24.0, 60.0))
    print(f"ratio rect: {ratio.w} x {ratio.h}, w/h = {ratio.w / ratio.h}")

    # symmetric: one edge drag grows both sides, the center is pinned
    drag(scene, sym, ("edge", "e"), (15.0, 0.0))
    print(f"sym rect:   {sym.w} x {sym.h}, center still {sym.center}")

    # partitions slide inside the rect without resizing it
    before = list(shelf.partitions)
    drag(scene, shelf, ("partition", 0), (18.0, 0.0))
    print(f"shelf partitions: {before} -> {shelf.partitions}, w still {shelf.w}")

    # a ring's rims resize independently; the hole stays a hole
    drag(scene, ring, ("inner", 0), (-6.0, 0.0) if handle_point(ring, "inner", 0)[0] < 260 else (6.0, 0.0))
    drag(scene, ring, ("outer", 0), (6.0, 0.0) if handle_point(ring, "outer", 0)[0] > 260 else (-6.0, 0.0))
    print(f"ring radii: inner {ring.r_inner:.3f}, outer {ring.r_outer:.3f}")

    # sector sides sweep around the center
    a0, a1 = wedge.start_angle, wedge.start_angle + wedge.sweep
    tip = handle_point(wedge, "side_end")
    scene.mover.catch(scene, tip, PointerButton.PRIMARY)
    r = math.hypot(tip[0] - wedge.center[0], tip[1] - wedge.center[1])
    target = a1 + 0.5
    scene.mover.move_to(
        scene,
        (
            wedge.center[0] + r * math.cos(target),
            wedge.center[1] + r * math.sin(target),
        ),
    )
    scene.mover.release(scene, scene.mover.adhered_point())
    print(f"wedge sweep: {a1 - a0:.4f} -> {wedge.sweep:.4f} rad")

    # a reconfigurable polygon moves one vertex at a time ...
    v0 = blob.vertices[0]
    drag(scene, blob, ("vertex", 0), (14.0, 8.0))
    print(f"blob vertex 0: {v0} -> {blob.vertices[0]}, others untouched")

    # ... while a regular polygon only scales as a whole
    r0 = hexa.radius
    drag(scene, hexa, ("vertex", 0), (12.0, 0.0))
    print(f"hexa radius: {r0} -> {hexa.radius:.3f}, still regular")

    (OUT / "reshape_after.svg").write_text(render_svg(scene, show_covers=True))
    print(f"wrote {OUT / 'reshape_before.svg'} and {OUT / 'reshape_after.svg'}")


if __name__ == "__main__":
    main()
