"""Rotating objects with the secondary pointer button.

A secondary-button catch turns the drag into a rotation around the
object's pivot: the caught point chases the pointer by angle only, so
the motion is rigid.  Upright text is the classic exception; it can be
caught but refuses to turn.
"""

import math
from pathlib import Path

from movables import PointerButton, Rect, Scene, SegmentedLine, TextM, render_svg

OUT = Path(__file__).parent / "out"


def main() -> None:
    OUT.mkdir(exist_ok=True)
    scene = Scene()
    card = scene.add_object(Rect("card", (120.0, 120.0), 90.0, 50.0))
    wire = scene.add_object(
        SegmentedLine("wire", [(260.0, 80.0), (320.0, 130.0), (380.0, 90.0)])
    )
    memo = scene.add_object(TextM("memo", "this side up", (320.0, 220.0)))

    (OUT / "rotate_before.svg").write_text(render_svg(scene))

    # swing the card by a quarter turn in small arc steps
    grab = (165.0, 120.0)  # east edge midpoint
    scene.mover.catch(scene, grab, PointerButton.SECONDARY)
    r = math.hypot(grab[0] - card.center[0], grab[1] - card.center[1])
    steps = 20
    for k in range(1, steps + 1):
        a = (math.pi / 2) * k / steps
        pt = (
            card.center[0] + r * math.cos(a),
            card.center[1] + r * math.sin(a),
        )
        scene.mover.move_to(scene, pt)
    done = scene.mover.release(scene, scene.mover.adhered_point())
    print(f"card turned by {done.total_rotation:.12f} rad "
          f"(quarter turn is {math.pi / 2:.12f})")
    print(f"card angle is now {card.angle:.12f}, size still {card.w} x {card.h}")

    # the pointer never has to stay on an arc; only its angle around
    # the pivot matters, so a wild pointer still turns the wire rigidly
    spans = [math.hypot(b[0] - a[0], b[1] - a[1])
             for a, b in zip(wire.points, wire.points[1:])]
    print(f"wire segment lengths: {', '.join(f'{s:.6f}' for s in spans)}")
    scene.mover.catch(scene, (380.0, 90.0), PointerButton.SECONDARY)
    scene.mover.move_to(scene, (500.0, 400.0))
    done = scene.mover.release(scene, scene.mover.adhered_point())
    spans = [math.hypot(b[0] - a[0], b[1] - a[1])
             for a, b in zip(wire.points, wire.points[1:])]
    print(f"after a {done.total_rotation:.4f} rad swing they are still: "
          f"{', '.join(f'{s:.6f}' for s in spans)}")

    # upright text can be caught with the secondary button but will
    # not budge; the catch still works for raising it
    got = scene.mover.catch(scene, memo.center, PointerButton.SECONDARY)
    rep = scene.mover.move_to(scene, (memo.center[0] + 40, memo.center[1] + 40))
    done = scene.mover.release(scene, (memo.center[0] + 40, memo.center[1] + 40))
    print(f"memo caught: {got.caught}, moved: {rep.moved}, "
          f"rotation reported: {done.total_rotation}")

    (OUT / "rotate_after.svg").write_text(render_svg(scene))
    print(f"wrote {OUT / 'rotate_before.svg'} and {OUT / 'rotate_after.svg'}")


if __name__ == "__main__":
    main()
