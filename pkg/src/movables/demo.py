"""A deterministic showcase scene touching every object family.

Used by the example scripts and as a convenient fixture: every kind of
object appears once, plus a titled group and two commented elements.
"""

from __future__ import annotations

from .groups import CommentedElement, ElasticGroup, LimitedBox, LimitedRadius
from .scene import Scene
from .shapes import (
    ChatoyantPolygon,
    Circle,
    ConvexPolygon,
    Crescent,
    Rect,
    RectPolicy,
    RegularPolygon,
    Ring,
    Sector,
    SectorPolicy,
    SegmentedLine,
    SimpleHouse,
    SolitaryLine,
    TextM,
    TextMR,
    Vanish,
)


def build_demo_scene() -> Scene:
    """One object per family, arranged on a 520 x 360 canvas."""
    scene = Scene()

    scene.add_object(SimpleHouse("house", (60, 60), 50, 40, (60, 110)))
    scene.add_object(
        Rect("panel", (170, 60), 70, 40, partitions=[-15.0, 5.0, 20.0])
    )
    scene.add_object(
        Rect(
            "poster",
            (280, 60),
            60,
            30,
            policy=RectPolicy.FIXED_RATIO,
            vanish=Vanish(),
            color_class="blue",
        )
    )
    scene.add_object(Circle("dot", (380, 60), 26, color_class="red"))
    scene.add_object(
        Ring("washer", (470, 60), 18, 34, partitions=[0.4, 2.0, 4.2])
    )

    scene.add_object(
        Sector("wedge", (60, 180), 38, 0.5, 1.8, policy=SectorPolicy.FULL)
    )
    scene.add_object(Crescent("moon", (170, 180), 30, (192, 180), 18))
    scene.add_object(RegularPolygon("penta", (280, 180), 32, 5))
    scene.add_object(
        ConvexPolygon(
            "hull",
            [(352, 160), (408, 164), (416, 196), (376, 212), (348, 192)],
        )
    )
    scene.add_object(
        ChatoyantPolygon(
            "star",
            (470, 180),
            [(500, 180), (478, 208), (442, 198), (446, 158), (484, 156)],
        )
    )

    scene.add_object(SolitaryLine("beam", (30, 280), (110, 300)))
    scene.add_object(
        SegmentedLine("wire", [(140, 270), (180, 300), (220, 280), (260, 305)])
    )
    scene.add_object(TextM("label", "pressure relief valve", (380, 300)))
    scene.add_object(TextMR("badge", "unit 7", (470, 260), angle=0.6))

    scene.add_object(
        ElasticGroup(
            "station",
            ["wedge", "moon"],
            margins=(12.0, 12.0, 12.0, 16.0),
            title="intake",
            title_offset=0.3,
        )
    )

    scene.add_pair("dot", "label", LimitedRadius(90.0))
    scene.add_object(TextM("note", "keep clear", (170, 120)))
    scene.add_pair("panel", "note", LimitedBox(50.0))
    return scene


__all__ = ["CommentedElement", "build_demo_scene"]
