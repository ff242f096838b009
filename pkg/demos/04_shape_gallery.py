"""Every object family rendered side by side.

Builds the showcase scene (one object of each kind, a titled group and
two tethered text comments), prints the cover layout per object and
renders the scene twice: a plain picture and one with the sensitive
nodes overlaid so you can see what each shape offers to the pointer.
"""

from collections import Counter
from pathlib import Path

from movables import render_svg
from movables.demo import build_demo_scene

OUT = Path(__file__).parent / "out"


def main() -> None:
    OUT.mkdir(exist_ok=True)
    scene = build_demo_scene()

    print(f"{'object':10} {'kind':18} nodes  behaviors")
    for obj in scene.objects:
        nodes = obj.build_cover().nodes
        mix = Counter(n.behavior.value for n in nodes)
        pretty = ", ".join(f"{k} x{v}" for k, v in sorted(mix.items()))
        print(f"{obj.id:10} {obj.kind:18} {len(nodes):5}  {pretty}")

    (OUT / "gallery.svg").write_text(render_svg(scene))
    (OUT / "gallery_covers.svg").write_text(render_svg(scene, show_covers=True))
    print(f"\nwrote {OUT / 'gallery.svg'} and {OUT / 'gallery_covers.svg'}")


if __name__ == "__main__":
    main()
