"""Shared fixtures for the interaction tests: a one-per-family roster,
cover-signature helpers, and a seeded random scene generator."""

from __future__ import annotations

import math
import random

from movables import (
    ChatoyantPolygon,
    Circle,
    Clamp,
    ConvexPolygon,
    Crescent,
    ElasticGroup,
    LimitedBox,
    LimitedRadius,
    Rect,
    RectPolicy,
    RegularPolygon,
    Ring,
    Scene,
    Sector,
    SectorPolicy,
    SegmentedLine,
    SimpleHouse,
    SolitaryLine,
    TextM,
    TextMR,
    Vanish,
)
from movables.geometry import ConvexPoly, Disc, Strip


def object_roster():
    """Fresh instances, one per shape family, all movable."""
    return [
        SolitaryLine("line", (0, 0), (40, 10)),
        SegmentedLine("chain", [(0, 30), (20, 50), (40, 35), (60, 55)]),
        Rect("box", (100, 20), 40, 24),
        Rect("sym", (100, 80), 30, 20, policy=RectPolicy.SYMMETRIC),
        Circle("disc", (180, 30), 18),
        Ring("ring", (180, 100), 10, 22),
        Sector("slice", (260, 40), 26, 0.3, 2.1, policy=SectorPolicy.FULL),
        Crescent("bite", (260, 110), 20, (274, 110), 12),
        RegularPolygon("hex", (340, 40), 22, 6),
        ConvexPolygon("hull", [(320, 90), (360, 95), (368, 120), (335, 132), (315, 112)]),
        ChatoyantPolygon("cat", (430, 40), [(450, 40), (436, 60), (410, 52), (414, 26), (440, 24)]),
        TextM("memo", "see appendix", (430, 110)),
        TextMR("tag", "axle", (430, 150)),
        SimpleHouse("hut", (520, 40), 36, 28, (520, 76)),
    ]


def cover_signature(obj):
    """Cover geometry flattened to tagged rows plus the behavior list.

    Point coordinates are tagged so a translation check can add the delta
    to exactly those entries and nothing else.
    """
    rows = []
    behaviors = []
    for node in obj.build_cover().nodes:
        s = node.shape
        if isinstance(s, Disc):
            rows.append(("pt", s.center))
            rows.append(("scalar", s.radius))
        elif isinstance(s, Strip):
            rows.append(("pt", s.a))
            rows.append(("pt", s.b))
            rows.append(("scalar", s.halfwidth))
        else:
            assert isinstance(s, ConvexPoly)
            for v in s.vertices:
                rows.append(("pt", v))
        behaviors.append(node.behavior)
    return rows, behaviors


def _random_object(rng: random.Random, name: str):
    """One random valid object of a random family near a random anchor."""
    cx = rng.uniform(-200, 600)
    cy = rng.uniform(-200, 600)
    kind = rng.randrange(13)
    if kind == 0:
        return SolitaryLine(name, (cx, cy), (cx + rng.uniform(10, 80), cy + rng.uniform(-40, 40)))
    if kind == 1:
        pts = [(cx, cy)]
        for _ in range(rng.randrange(2, 6)):
            px, py = pts[-1]
            pts.append((px + rng.uniform(8, 40), py + rng.uniform(-30, 30)))
        return SegmentedLine(name, pts)
    if kind == 2:
        parts = sorted(rng.uniform(-15, 15) for _ in range(rng.randrange(0, 3)))
        ok = all(b - a > 3 for a, b in zip(parts, parts[1:]))
        policy = rng.choice(list(RectPolicy))
        return Rect(
            name,
            (cx, cy),
            rng.uniform(40, 90),
            rng.uniform(25, 60),
            angle=rng.uniform(0, 6.2),
            policy=policy,
            side=rng.choice(["n", "e", "s", "w"]) if policy is RectPolicy.SINGLE_BORDER else None,
            vanish=Vanish() if rng.random() < 0.3 else Clamp(),
            partitions=parts if ok else None,
        )
    if kind == 3:
        return Circle(name, (cx, cy), rng.uniform(8, 40))
    if kind == 4:
        inner = rng.uniform(7, 20)
        return Ring(
            name,
            (cx, cy),
            inner,
            inner + rng.uniform(6, 25),
            partitions=sorted(rng.uniform(0, 6.2) for _ in range(rng.randrange(0, 3))) or None,
        )
    if kind == 5:
        return Sector(
            name,
            (cx, cy),
            rng.uniform(12, 45),
            rng.uniform(0, 6.2),
            rng.uniform(0.4, 5.8),
            policy=rng.choice(list(SectorPolicy)),
        )
    if kind == 6:
        big = rng.uniform(15, 40)
        small = rng.uniform(8, big * 0.9)
        d = rng.uniform(abs(big - small) + 2, big + small - 2)
        a = rng.uniform(0, 6.2)
        return Crescent(name, (cx, cy), big, (cx + d * math.cos(a), cy + d * math.sin(a)), small)
    if kind == 7:
        return RegularPolygon(name, (cx, cy), rng.uniform(12, 40), rng.randrange(3, 9), rng.uniform(0, 6.2))
    if kind in (8, 9):
        n = rng.randrange(4, 8)
        base = rng.uniform(15, 40)
        verts = []
        for k in range(n):
            a = 2 * math.pi * k / n
            r = base * rng.uniform(0.92, 1.08)
            verts.append((cx + r * math.cos(a), cy + r * math.sin(a)))
        if kind == 8:
            return ConvexPolygon(name, verts)
        return ChatoyantPolygon(name, (cx, cy), verts)
    if kind == 10:
        return TextM(name, rng.choice(["inlet", "relief valve", "torque arm", "spare"]), (cx, cy))
    if kind == 11:
        return TextMR(name, rng.choice(["axis", "pump 3", "drain"]), (cx, cy), angle=rng.uniform(0, 6.2))
    w, h = rng.uniform(30, 70), rng.uniform(20, 50)
    return SimpleHouse(name, (cx, cy), w, h, (cx + rng.uniform(-w / 4, w / 4), cy + h / 2 + rng.uniform(5, 30)))


def random_scene(seed: int, min_objects: int = 3, max_objects: int = 10) -> Scene:
    """A seeded scene of random valid objects, sometimes grouped or paired."""
    rng = random.Random(seed)
    scene = Scene()
    body_ids = []
    for i in range(rng.randrange(min_objects, max_objects + 1)):
        name = f"obj{i}"
        for _ in range(50):
            obj = _random_object(rng, name)
            if not obj.validate():
                break
        if rng.random() < 0.25:
            obj.color_class = rng.choice(["red", "green", "blue"])
        scene.add_object(obj)
        body_ids.append(name)
    if len(body_ids) >= 2 and rng.random() < 0.4:
        members = rng.sample(body_ids, 2)
        scene.add_object(ElasticGroup("grp", members, title="set" if rng.random() < 0.5 else ""))
    if rng.random() < 0.4:
        host = rng.choice(body_ids)
        note = TextM("note", "label", (rng.uniform(0, 400), rng.uniform(0, 400)))
        scene.add_object(note)
        policy = LimitedRadius(rng.uniform(40, 120)) if rng.random() < 0.5 else LimitedBox(rng.uniform(20, 80))
        scene.add_pair(host, "note", policy)
    return scene


# mutations of the golden document that a strict parser must reject,
# labelled for parametrized tests
CORRUPTIONS = [
    ("no header", lambda d: d.replace("movables-layout 1", "movables-layout 2", 1)),
    ("missing end", lambda d: d.replace("\nend\n", "\n")),
    ("text after end", lambda d: d + "object late circle\n"),
    ("unknown kind", lambda d: d.replace("object dot circle", "object dot blob", 1)),
    ("duplicate id", lambda d: d.replace("object note text-m", "object dot text-m", 1)),
    ("bad indent", lambda d: d.replace("\n  radius 26.0", "\n radius 26.0", 1)),
    ("unknown field", lambda d: d.replace("\n  radius 26.0", "\n  radius 26.0\n  wobble 3.0", 1)),
    ("duplicate field", lambda d: d.replace("\n  radius 26.0", "\n  radius 26.0\n  radius 26.0", 1)),
    ("missing field", lambda d: d.replace("\n  radius 26.0", "", 1)),
    ("unparsable number", lambda d: d.replace("radius 26.0", "radius twenty", 1)),
    ("non-finite number", lambda d: d.replace("radius 26.0", "radius nan", 1)),
    ("inf coordinate", lambda d: d.replace("center 380.0 60.0", "center inf 60.0", 1)),
    ("negative radius", lambda d: d.replace("radius 26.0", "radius -26.0", 1)),
    ("radii out of order", lambda d: d.replace("inner 18.0\n  outer 34.0", "inner 34.0\n  outer 18.0", 1)),
    ("bad boolean", lambda d: d.replace("movable true", "movable yes", 1)),
    ("missing movable", lambda d: d.replace("  movable true\n  rotatable true\n  color red\n", "  rotatable true\n  color red\n", 1)),
    ("bad area", lambda d: d.replace("movables-layout 1\n", "movables-layout 1\narea 0.0 0.0 100.0\n", 1)),
    ("bad overlap mode", lambda d: d.replace("movables-layout 1\n", "movables-layout 1\noverlap sometimes\n", 1)),
    ("obstacles before overlap", lambda d: d.replace("movables-layout 1\n", "movables-layout 1\nobstacles dot\n", 1)),
    ("pair with unknown object", lambda d: d.replace("pair dot label", "pair dot nosuch", 1)),
    ("pair with bad policy", lambda d: d.replace("limited-radius 90.0", "limited-radius lots", 1)),
    ("odd vertex count", lambda d: d.replace(
        "vertices 352.0 160.0 408.0 164.0 416.0 196.0 376.0 212.0 348.0 192.0",
        "vertices 352.0 160.0 408.0 164.0 416.0 196.0 376.0 212.0 348.0", 1)),
]


def signature_shift_error(before, after, delta):
    """Largest deviation from 'after = before translated by delta'."""
    rows_b, beh_b = before
    rows_a, beh_a = after
    assert beh_b == beh_a
    assert len(rows_b) == len(rows_a)
    worst = 0.0
    for (tag_b, val_b), (tag_a, val_a) in zip(rows_b, rows_a):
        assert tag_b == tag_a
        if tag_b == "pt":
            worst = max(
                worst,
                abs(val_a[0] - (val_b[0] + delta[0])),
                abs(val_a[1] - (val_b[1] + delta[1])),
            )
        else:
            worst = max(worst, abs(val_a - val_b))
    return worst
