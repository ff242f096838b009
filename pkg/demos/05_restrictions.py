"""Keeping motion legal: work areas and overlap rules.

Three short stories.  A work area either pins the grab point or the
whole silhouette inside a box.  An overlap rule lets dragged objects
slide along each other instead of tunnelling through.  Put both
together and a ball can be walked through a corridor maze but never
across a wall.
"""

from pathlib import Path

from movables import (
    AreaMode,
    AreaRestriction,
    Circle,
    OverlapMode,
    OverlapRule,
    PointerButton,
    Rect,
    Scene,
    render_svg,
)

OUT = Path(__file__).parent / "out"


def drag_path(scene, start, path):
    scene.mover.catch(scene, start, PointerButton.PRIMARY)
    for pt in path:
        scene.mover.move_to(scene, pt)
    scene.mover.release(scene, path[-1])


def main() -> None:
    OUT.mkdir(exist_ok=True)

    # grab-point mode: only the held point must stay inside, the body
    # may hang over the edge; whole-object mode stops at the wall early
    for mode in (AreaMode.GRAB_POINT, AreaMode.WHOLE_OBJECT):
        scene = Scene(area=AreaRestriction((0, 0, 200, 140), mode))
        scene.add_object(Circle("puck", (100.0, 70.0), 25.0))
        drag_path(scene, (100.0, 70.0), [(400.0, 70.0)])
        print(f"{mode.value:13} pushed east, center stops at "
              f"{scene.get('puck').center}")

    # same-color overlap: red may not cross red, blue slips through
    scene = Scene(overlap_rule=OverlapRule(OverlapMode.SAME_COLOR))
    scene.add_object(Rect("wall", (150.0, 100.0), 20.0, 120.0, color_class="red"))
    scene.add_object(Circle("redball", (60.0, 100.0), 18.0, color_class="red"))
    scene.add_object(Circle("blueball", (60.0, 40.0), 18.0, color_class="blue"))
    drag_path(scene, (60.0, 100.0), [(240.0, 100.0)])
    drag_path(scene, (60.0, 40.0), [(240.0, 100.0)])
    red, blue = scene.get("redball"), scene.get("blueball")
    print(f"red ball stops against the wall at {red.center[0]:.6f} "
          f"(wall face at {150 - 10}, radius 18)")
    print(f"blue ball sails through to {blue.center}")

    # the stop is not sticky: sliding along the wall still works
    drag_path(scene, red.center, [(red.center[0], 180.0)])
    print(f"red ball slides along the wall to {red.center}")

    # plus-shaped walls pen a ball into its quadrant: the openings at
    # the center are 18 wide, the ball is 24 across, so no amount of
    # shoving gets it out of the south-west cell
    scene = Scene(
        area=AreaRestriction((0, 0, 300, 300), AreaMode.WHOLE_OBJECT),
        overlap_rule=OverlapRule(OverlapMode.ALL),
    )
    for oid, c, w, h in (
        ("wall-s", (150.0, 70.5), 12.0, 141.0),
        ("wall-n", (150.0, 229.5), 12.0, 141.0),
        ("wall-w", (70.5, 150.0), 141.0, 12.0),
        ("wall-e", (229.5, 150.0), 141.0, 12.0),
    ):
        scene.add_object(Rect(oid, c, w, h, movable=False))
    scene.add_object(Circle("ball", (75.0, 75.0), 12.0))
    (OUT / "maze.svg").write_text(render_svg(scene))

    for target in [(150.0, 150.0), (225.0, 75.0), (75.0, 225.0), (250.0, 250.0)]:
        drag_path(scene, scene.get("ball").center, [target])
        c = scene.get("ball").center
        print(f"shoved toward {target}: ball at ({c[0]:.3f}, {c[1]:.3f})")
    c = scene.get("ball").center
    assert c[0] <= 132.0 + 1e-9 and c[1] <= 132.0 + 1e-9
    print("the ball never left its cell")
    (OUT / "maze_after.svg").write_text(render_svg(scene))

    # a straight corridor, 30 wide: the ball fits with room to spare
    # and rolls along whichever wall the pointer presses it against
    scene = Scene(overlap_rule=OverlapRule(OverlapMode.ALL))
    scene.add_object(Rect("ceiling", (150.0, 171.0), 280.0, 12.0, movable=False))
    scene.add_object(Rect("floor", (150.0, 129.0), 280.0, 12.0, movable=False))
    scene.add_object(Circle("ball", (30.0, 150.0), 12.0))
    scene.mover.catch(scene, (30.0, 150.0), PointerButton.PRIMARY)
    for pt in [(90.0, 190.0), (150.0, 110.0), (270.0, 150.0)]:
        scene.mover.move_to(scene, pt)
        c = scene.get("ball").center
        print(f"pointer at {pt}: ball rolls to ({c[0]:.3f}, {c[1]:.3f})")
    scene.mover.release(scene, (270.0, 150.0))
    print(f"wrote {OUT / 'maze.svg'} and {OUT / 'maze_after.svg'}")


if __name__ == "__main__":
    main()
