"""Catching and dragging objects with the pointer.

Walks through the basic interaction loop: press catches the topmost
object under the pointer, motion follows the pointer while it stays
legal, and release reports what the whole gesture amounted to.  Also
shows the corrected-cursor handshake at a work area wall.
"""

from pathlib import Path

from movables import (
    AreaMode,
    AreaRestriction,
    Circle,
    PointerButton,
    Rect,
    Scene,
    render_svg,
)

OUT = Path(__file__).parent / "out"


def main() -> None:
    OUT.mkdir(exist_ok=True)

    scene = Scene(
        area=AreaRestriction((0.0, 0.0, 360.0, 240.0), AreaMode.GRAB_POINT)
    )
    scene.add_object(Circle("ball", (80.0, 80.0), 20.0, color_class="red"))
    scene.add_object(Rect("crate", (200.0, 120.0), 80.0, 50.0))
    scene.add_object(Circle("sticker", (220.0, 130.0), 14.0))

    (OUT / "drag_before.svg").write_text(render_svg(scene))
    print("display order:", [o.id for o in scene.objects])

    # the sticker sits on the crate; a press on the shared spot takes
    # the topmost of the two and raises it (already on top here)
    got = scene.mover.catch(scene, (220.0, 130.0), PointerButton.PRIMARY)
    print(f"press at (220, 130) catches: {got.object_id}")
    scene.mover.release(scene, (220.0, 130.0))

    # whereas catching the crate pops it above the sticker
    got = scene.mover.catch(scene, (180.0, 110.0), PointerButton.PRIMARY)
    print(f"press at (180, 110) catches: {got.object_id}")
    print("display order after the catch:", [o.id for o in scene.objects])
    scene.mover.release(scene, (180.0, 110.0))

    # now drag the ball along a short path
    scene.mover.catch(scene, (80.0, 80.0), PointerButton.PRIMARY)
    path = [(120.0, 90.0), (170.0, 60.0), (240.0, 100.0)]
    for pt in path:
        rep = scene.mover.move_to(scene, pt)
        print(f"  move to {pt}: applied {rep.applied_delta}")

    # push past the east wall; the grab point is clamped to the area
    # and the engine hands back the cursor position it actually used
    rep = scene.mover.move_to(scene, (430.0, 100.0))
    print(f"  move to (430, 100): applied {rep.applied_delta},")
    print(f"    corrected cursor {rep.corrected_cursor}")

    done = scene.mover.release(scene, (430.0, 100.0))
    print(
        f"release: {done.object_id} travelled {done.total_displacement} "
        f"over the whole gesture"
    )
    print("ball now rests at", scene.get("ball").center)

    (OUT / "drag_after.svg").write_text(render_svg(scene))
    print(f"wrote {OUT / 'drag_before.svg'} and {OUT / 'drag_after.svg'}")


if __name__ == "__main__":
    main()
