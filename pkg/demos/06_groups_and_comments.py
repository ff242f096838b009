"""Elastic groups and tethered text comments.

A group draws a frame around its members with fixed margins; the frame
stretches as members move and dragging the frame carries everyone.  A
comment is a text object leashed to a body: drag the body and the text
rides along, drag the text and the leash reins it in.
"""

import math
from pathlib import Path

from movables import (
    Circle,
    ElasticGroup,
    LimitedRadius,
    PointerButton,
    Rect,
    Scene,
    TextM,
    frame_of,
    render_svg,
)

OUT = Path(__file__).parent / "out"


def drag(scene, start, end, button=None):
    scene.mover.catch(scene, start, button or PointerButton.PRIMARY)
    scene.mover.move_to(scene, end)
    scene.mover.release(scene, end)


def main() -> None:
    OUT.mkdir(exist_ok=True)
    scene = Scene()
    pump = scene.add_object(Circle("pump", (80.0, 80.0), 24.0))
    tank = scene.add_object(Rect("tank", (190.0, 90.0), 60.0, 50.0))
    grp = scene.add_object(
        ElasticGroup(
            "rig", ["pump", "tank"],
            margins=(10.0, 10.0, 10.0, 18.0),
            title="rig A", title_offset=0.25,
        )
    )

    x0, y0, x1, y1 = frame_of(grp, scene)
    print(f"frame around pump and tank: ({x0}, {y0}) .. ({x1}, {y1})")

    # moving a member stretches the frame
    drag(scene, (80.0, 80.0), (50.0, 60.0))
    x0b, y0b, _, _ = frame_of(grp, scene)
    print(f"pump dragged away, frame corner follows: ({x0b}, {y0b})")

    # dragging the frame border carries every member rigidly
    before = (pump.center, tank.center)
    drag(scene, (x0b, (y0b + y1) / 2), (x0b + 40.0, (y0b + y1) / 2 + 25.0))
    print(f"frame dragged by (40, 25): pump {before[0]} -> {pump.center}, "
          f"tank {before[1]} -> {tank.center}")

    # the title rides the top edge and can be slid along it
    print(f"title sits at fraction {grp.title_offset} of the top edge")
    x0c, _, x1c, y1c = frame_of(grp, scene)
    tx = x0c + grp.title_offset * (x1c - x0c)
    drag(scene, (tx, y1c), (x0c + 0.8 * (x1c - x0c), y1c))
    print(f"after sliding: fraction {grp.title_offset:.3f}")

    # a comment on a leash: 70 units of slack around the pump
    scene.add_object(TextM("sign", "prime before use", (60.0, 30.0)))
    scene.add_pair("pump", "sign", LimitedRadius(70.0))
    sign = scene.get("sign")
    print(f"comment settled at {sign.center}")

    # the body tows its comment ...
    d0 = sign.center
    drag(scene, pump.center, (pump.center[0] + 90.0, pump.center[1]))
    print(f"pump moved 90 east, comment followed: {d0} -> {sign.center}")

    # ... and the comment strains against the leash when dragged away
    drag(scene, sign.center, (sign.center[0] - 300.0, sign.center[1]))
    slack = math.hypot(sign.center[0] - pump.center[0],
                       sign.center[1] - pump.center[1])
    print(f"comment yanked west, leash holds at distance {slack:.6f}")

    (OUT / "groups.svg").write_text(render_svg(scene))
    print(f"wrote {OUT / 'groups.svg'}")


if __name__ == "__main__":
    main()
