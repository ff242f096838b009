"""Shape library tests: covers, resizing policies, clamps, rotation."""

import math
import random

import numpy as np
import pytest

from movables.errors import DisabledHandle, ImmovableObject, NotRotatable, VanishedObject
from movables.geometry import (
    ConvexPoly,
    Disc,
    NodeBehavior,
    Strip,
    contains,
    dist,
    hit,
    is_strictly_convex_ccw,
    normalize_angle,
)
from movables.restrictions import SizeLimits
from movables.shapes import (
    ChatoyantPolygon,
    Circle,
    Clamp,
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
    reconfigure_vertex,
    resize_rect,
    resize_ring,
    resize_sector,
    scale_uniform,
    slide_partition,
)

TAU = 2 * math.pi


def shapes_close(s1, s2, tol):
    if type(s1) is not type(s2):
        return False
    if isinstance(s1, Disc):
        return dist(s1.center, s2.center) <= tol and abs(s1.radius - s2.radius) <= tol
    if isinstance(s1, Strip):
        return (
            dist(s1.a, s2.a) <= tol
            and dist(s1.b, s2.b) <= tol
            and abs(s1.halfwidth - s2.halfwidth) <= tol
        )
    return len(s1.vertices) == len(s2.vertices) and all(
        dist(a, b) <= tol for a, b in zip(s1.vertices, s2.vertices)
    )


def shifted(shape, d):
    if isinstance(shape, Disc):
        return Disc((shape.center[0] + d[0], shape.center[1] + d[1]), shape.radius)
    if isinstance(shape, Strip):
        return Strip(
            (shape.a[0] + d[0], shape.a[1] + d[1]),
            (shape.b[0] + d[0], shape.b[1] + d[1]),
            shape.halfwidth,
        )
    return ConvexPoly(tuple((v[0] + d[0], v[1] + d[1]) for v in shape.vertices))


def sample_objects():
    return [
        SolitaryLine("li", (0, 0), (40, 10)),
        SegmentedLine("sl", [(0, 0), (20, 30), (50, 10), (80, 40)]),
        Rect("re", (10, 20), 100, 50, angle=0.3),
        Rect("rp", (10, 20), 100, 50, partitions=[-20.0, 10.0]),
        Circle("ci", (5, -5), 60),
        Ring("ri", (0, 0), 20, 50, partitions=[0.2, 1.8, 3.6]),
        Sector("se", (0, 0), 80, 0.4, 2.0),
        Crescent("cr", (0, 0), 50, (40, 0), 30),
        RegularPolygon("rg", (0, 0), 45, 5, 0.1),
        ConvexPolygon("cv", [(0, 0), (50, 5), (60, 45), (20, 60), (-10, 30)]),
        ChatoyantPolygon("ch", (10, 10), [(0, 0), (50, 0), (55, 45), (10, 60), (-20, 30)]),
        TextM("tm", "hello info", (-30, 70)),
        TextMR("tr", "words across", (30, 40), angle=0.5),
        SimpleHouse("ho", (0, 0), 60, 40, (5, 50)),
    ]


# --- cover construction -------------------------------------------------------


def test_free_rect_cover_is_corners_edges_body():
    cover = Rect("r", (0, 0), 100, 50).build_cover()
    assert len(cover.nodes) == 9
    assert all(isinstance(n.shape, Disc) for n in cover.nodes[:4])
    assert all(isinstance(n.shape, Strip) for n in cover.nodes[4:8])
    assert isinstance(cover.nodes[8].shape, ConvexPoly)
    assert cover.nodes[8].behavior is NodeBehavior.WHOLE_MOVE
    assert all(n.behavior is NodeBehavior.NODE_MOVE for n in cover.nodes[:8])


def test_ring_hole_hit_is_transparent():
    ring = Ring("r", (0, 0), 20, 50)
    info = hit(ring.build_cover(), (10, 0))
    assert info is not None
    assert info.behavior is NodeBehavior.TRANSPARENT


def test_circle_border_fully_inside_band_nodes():
    circle = Circle("c", (0, 0), 100)
    band = [n for n, role in circle._layout() if role[0] == "band"]
    for k in range(10_000):
        a = TAU * k / 10_000
        p = (100 * math.cos(a), 100 * math.sin(a))
        assert any(contains(n, p) for n in band)


def test_single_border_cover_has_one_edge():
    r = Rect("r", (0, 0), 100, 50, policy=RectPolicy.SINGLE_BORDER, side="e")
    roles = [role for _, role in r._layout()]
    assert ("edge", "e") in roles
    assert not any(role[0] == "corner" for role in roles)
    assert sum(role[0] == "edge" for role in roles) == 1


def test_fixed_ratio_cover_has_no_edges():
    r = Rect("r", (0, 0), 100, 50, policy=RectPolicy.FIXED_RATIO)
    roles = [role for _, role in r._layout()]
    assert not any(role[0] == "edge" for role in roles)
    assert sum(role[0] == "corner" for role in roles) == 4


def test_cover_translates_with_object():
    rng = random.Random(3)
    for obj in sample_objects():
        d = (rng.uniform(-50, 50), rng.uniform(-50, 50))
        before = obj.build_cover()
        obj.translate(d)
        after = obj.build_cover()
        assert len(before.nodes) == len(after.nodes)
        for n0, n1 in zip(before.nodes, after.nodes):
            assert n0.behavior is n1.behavior
            assert shapes_close(shifted(n0.shape, d), n1.shape, 1e-12)


def test_immovable_object_rejects_translate_but_cover_catches():
    r = Rect("r", (0, 0), 100, 50, movable=False)
    with pytest.raises(ImmovableObject):
        r.translate((1, 0))
    with pytest.raises(ImmovableObject):
        r.move_node(8, (1, 0), (0, 0))
    assert hit(r.build_cover(), (0, 0)) is not None


# --- rect resizing ------------------------------------------------------------


def test_free_rect_edge_drag():
    r = Rect("r", (0, 0), 100, 50)
    resize_rect(r, "e", (70, 0))
    assert r.w == pytest.approx(120)
    assert r.h == 50
    # left edge unmoved
    assert r.center[0] - r.w / 2 == pytest.approx(-50)


def test_fixed_ratio_corner_matches_brute_force_oracle():
    # 100x50 rect, fixed corner at the origin, pointer at (130, 90): the
    # oracle minimizes |corner - pointer| over ratio-preserving corners
    s = np.linspace(0.0, 200.0, 2_000_001)
    d2 = (2 * s - 130.0) ** 2 + (s - 90.0) ** 2
    s_best = s[int(np.argmin(d2))]
    assert s_best == pytest.approx(70.0, abs=1e-4)

    r = Rect("r", (50, 25), 100, 50, policy=RectPolicy.FIXED_RATIO)
    assert r.corner_pos("sw") == (0.0, 0.0)
    resize_rect(r, "ne", (130.0, 90.0))
    assert r.w == pytest.approx(140.0, abs=1e-9)
    assert r.h == pytest.approx(70.0, abs=1e-9)
    assert r.corner_pos("sw") == pytest.approx((0.0, 0.0), abs=1e-9)


def test_fixed_ratio_keeps_ratio_under_random_drags():
    rng = random.Random(8)
    r = Rect("r", (0, 0), 100, 50, policy=RectPolicy.FIXED_RATIO)
    for _ in range(500):
        name = rng.choice(["ne", "nw", "se", "sw"])
        resize_rect(r, name, (rng.uniform(-300, 300), rng.uniform(-300, 300)))
        assert r.w / r.h == pytest.approx(2.0, abs=1e-9)


def test_fixed_ratio_edges_disabled():
    r = Rect("r", (0, 0), 100, 50, policy=RectPolicy.FIXED_RATIO)
    with pytest.raises(DisabledHandle):
        resize_rect(r, "e", (70, 0))


def test_symmetric_rect_keeps_center():
    r = Rect("r", (0, 0), 100, 50, policy=RectPolicy.SYMMETRIC)
    resize_rect(r, "e", (60, 0))
    assert r.w == pytest.approx(120)
    assert r.center == (0, 0)
    resize_rect(r, "ne", (70, 40))
    assert (r.w, r.h) == pytest.approx((140, 80))
    assert r.center == (0, 0)


def test_single_border_only_designated_edge_responds():
    r = Rect("r", (0, 0), 100, 50, policy=RectPolicy.SINGLE_BORDER, side="e")
    resize_rect(r, "e", (80, 0))
    assert r.w == pytest.approx(130)
    for other in ("n", "s", "w", "ne"):
        with pytest.raises(DisabledHandle):
            resize_rect(r, other, (0, 0))


def test_clamp_policy_stops_at_min_size():
    r = Rect("r", (0, 0), 100, 50, vanish=Clamp())
    resize_rect(r, "e", (-200, 0))  # drag right edge far past the left
    assert r.w == 4.0
    assert r.center[0] - r.w / 2 == pytest.approx(-50)  # left edge pinned


def test_vanish_policy_raises_on_crossing():
    r = Rect("r", (0, 0), 100, 50, vanish=Vanish())
    with pytest.raises(VanishedObject) as err:
        resize_rect(r, "e", (-60, 0))
    assert err.value.object_id == "r"


def test_vanish_policy_allows_small_sizes():
    r = Rect("r", (0, 0), 100, 50, vanish=Vanish())
    resize_rect(r, "e", (-49.5, 0))
    assert r.w == pytest.approx(0.5)


def test_rotated_rect_edge_drag_works_in_local_frame():
    r = Rect("r", (0, 0), 100, 50, angle=math.pi / 2)
    # the "east" edge now points along +y
    resize_rect(r, "e", (0, 70))
    assert r.w == pytest.approx(120)
    assert r.h == pytest.approx(50)


def test_size_limits_clamp_rect():
    r = Rect("r", (0, 0), 100, 50, size_limits=SizeLimits.box(20, 20, 150, 150))
    resize_rect(r, "e", (500, 0))
    assert r.w == 150
    resize_rect(r, "n", (0, -500))
    assert r.h == 20


# --- rect partitions ----------------------------------------------------------


def test_partition_slides_to_pointer():
    # walls at 0 and 100 in scene x, partitions at 30 and 60
    r = Rect("r", (50, 0), 100, 40, partitions=[-20.0, 10.0])
    slide_partition(r, 0, (50.0, 0.0))
    assert [p + 50 for p in r.partitions] == pytest.approx([50.0, 60.0])


def test_partition_clamps_at_neighbor():
    r = Rect("r", (50, 0), 100, 40, partitions=[-20.0, 10.0])
    slide_partition(r, 0, (90.0, 0.0))
    assert r.partitions[0] == pytest.approx(10.0 - 1.0)  # neighbor minus gap
    slide_partition(r, 1, (-40.0, 0.0))
    assert r.partitions[1] == pytest.approx(r.partitions[0] + 1.0)


def test_partition_clamps_at_walls():
    r = Rect("r", (50, 0), 100, 40, partitions=[0.0])
    slide_partition(r, 0, (-500.0, 0.0))
    assert r.partitions[0] == pytest.approx(-49.0)
    slide_partition(r, 0, (500.0, 0.0))
    assert r.partitions[0] == pytest.approx(49.0)


def test_partitions_follow_wall_when_rect_shrinks():
    r = Rect("r", (50, 0), 100, 40, partitions=[-45.0, 45.0])
    resize_rect(r, "e", (20.0, 0.0))  # width 70, left wall still at 0
    assert r.validate() == []
    lo, hi = -r.w / 2 + 1.0, r.w / 2 - 1.0
    assert lo <= r.partitions[0] < r.partitions[1] <= hi
    # the left partition kept its absolute position; only the right clamped
    assert r.partitions[0] + r.center[0] == pytest.approx(5.0)


# --- round shapes ---------------------------------------------------------------


def test_circle_scale_factor():
    c = Circle("c", (0, 0), 50)
    scale_uniform(c, (50, 0), (75, 0))
    assert c.radius == pytest.approx(75)


def test_circle_scale_rejects_pointer_at_center():
    c = Circle("c", (0, 0), 50)
    got = scale_uniform(c, (50, 0), (0, 0))
    assert c.radius == 50
    assert got == (50, 0)


def test_ring_resize_examples():
    ring = Ring("r", (0, 0), 20, 50)
    resize_ring(ring, "outer", (80, 0))
    assert (ring.r_inner, ring.r_outer) == (20, 80)

    ring = Ring("r", (0, 0), 20, 50)
    resize_ring(ring, "inner", (60, 0))
    assert ring.r_inner == pytest.approx(49.0)  # outer minus unit gap

    ring = Ring("r", (0, 0), 20, 50)
    resize_ring(ring, "outer", (5, 0))
    assert ring.r_outer == pytest.approx(21.0)  # inner plus unit gap


def test_ring_order_survives_adversarial_drags():
    rng = random.Random(12)
    ring = Ring("r", (0, 0), 20, 50)
    for _ in range(2000):
        which = rng.choice(["inner", "outer"])
        p = (rng.uniform(-100, 100), rng.uniform(-100, 100))
        resize_ring(ring, which, p)
        assert ring.band < ring.r_inner < ring.r_outer


def test_ring_unsafe_commit_then_validate_reports():
    ring = Ring("r", (0, 0), 20, 50)
    resize_ring(ring, "inner", (60, 0), safe=False)
    assert ring.r_inner == pytest.approx(60)
    assert any("radii out of order" in v for v in ring.validate())


def test_ring_partition_slide_and_clamp():
    ring = Ring("r", (0, 0), 20, 50, partitions=[0.0, math.pi / 2])
    slide_partition(ring, 0, (50 * math.cos(0.3), 50 * math.sin(0.3)))
    assert ring.partitions[0] == pytest.approx(0.3)
    slide_partition(ring, 0, (50 * math.cos(1.6), 50 * math.sin(1.6)))
    assert ring.partitions[0] == pytest.approx(math.pi / 2 - 0.05)
    assert ring.validate() == []


def test_sector_policies():
    s = Sector("s", (0, 0), 80, 0.0, math.pi / 2, SectorPolicy.ARC_ONLY)
    with pytest.raises(DisabledHandle):
        resize_sector(s, "side_end", (10, 10))
    resize_sector(s, "arc", (100, 0))
    assert s.radius == pytest.approx(100)

    s = Sector("s", (0, 0), 80, 0.0, math.pi / 2, SectorPolicy.FULL)
    ang = 3 * math.pi / 4
    resize_sector(s, "side_end", (80 * math.cos(ang), 80 * math.sin(ang)))
    assert s.sweep == pytest.approx(3 * math.pi / 4)

    s = Sector("s", (0, 0), 80, 0.0, math.pi / 2, SectorPolicy.FULL)
    resize_sector(s, "side_start", (80 * math.cos(1.7), 80 * math.sin(1.7)))
    assert s.sweep == pytest.approx(0.01)  # clamped at the minimum sweep
    assert normalize_angle(s.start_angle + s.sweep) == pytest.approx(math.pi / 2)


def test_sector_sweep_bounds_survive_adversarial_drags():
    rng = random.Random(21)
    s = Sector("s", (0, 0), 80, 0.0, math.pi / 2, SectorPolicy.FULL)
    for _ in range(2000):
        part = rng.choice(["arc", "side_start", "side_end"])
        resize_sector(s, part, (rng.uniform(-150, 150), rng.uniform(-150, 150)))
        assert 0 < s.sweep < TAU
        assert s.radius > s.band


def test_fixed_sector_catches_but_has_no_handles():
    s = Sector("s", (0, 0), 80, 0.0, math.pi / 2, SectorPolicy.FIXED)
    cover = s.build_cover()
    assert all(n.behavior is NodeBehavior.WHOLE_MOVE for n in cover.nodes)
    with pytest.raises(DisabledHandle):
        resize_sector(s, "arc", (100, 0))


def test_crescent_bite_is_transparent_and_resizes():
    c = Crescent("c", (0, 0), 50, (40, 0), 30)
    info = hit(c.build_cover(), (40, 0))  # deep inside the bite
    assert info is not None and info.behavior is NodeBehavior.TRANSPARENT
    # flesh point on the far side of the bite still moves the whole
    info = hit(c.build_cover(), (-25, 0))
    assert info is not None and info.behavior is not NodeBehavior.TRANSPARENT

    c.resize("bite", (40 + 35, 0))
    assert c.bite_radius == pytest.approx(35)
    assert c.validate() == []


def test_crescent_invariant_survives_adversarial_drags():
    rng = random.Random(31)
    c = Crescent("c", (0, 0), 50, (40, 0), 30)
    for _ in range(2000):
        which = rng.choice(["outer", "bite"])
        c.resize(which, (rng.uniform(-120, 120), rng.uniform(-120, 120)))
        d = dist(c.center, c.bite_center)
        assert abs(c.radius - c.bite_radius) < d < c.radius + c.bite_radius


# --- polygons -------------------------------------------------------------------


def test_regular_polygon_vertex_drag_stays_regular():
    p = RegularPolygon("p", (0, 0), 40, 5)
    reconfigure_vertex(p, 2, (30, 40))  # pointer at distance 50
    assert p.radius == pytest.approx(50)
    vs = p.vertices()
    assert vs[2] == pytest.approx((30, 40))
    for a, b in zip(vs, vs[1:] + vs[:1]):
        assert dist(a, b) == pytest.approx(dist(vs[0], vs[1]))


def test_pentagon_uniform_scale_polar_decomposition():
    p = RegularPolygon("p", (3, -2), 40, 5, 0.2)
    before = p.vertices()
    scale_uniform(p, before[0], (3 + (before[0][0] - 3) * 2, -2 + (before[0][1] + 2) * 2))
    after = p.vertices()
    for v0, v1 in zip(before, after):
        r0, a0 = dist(v0, (3, -2)), math.atan2(v0[1] + 2, v0[0] - 3)
        r1, a1 = dist(v1, (3, -2)), math.atan2(v1[1] + 2, v1[0] - 3)
        assert r1 == pytest.approx(2 * r0, rel=1e-9)
        assert normalize_angle(a1 - a0) == pytest.approx(0, abs=1e-9)


def test_chatoyant_accepts_self_intersection():
    p = ChatoyantPolygon("p", (5, 5), [(0, 0), (10, 0), (10, 10), (0, 10)])
    reconfigure_vertex(p, 0, (15, 15))  # drag across the opposite diagonal
    assert p.vertices[0] == (15, 15)
    assert p.validate() == []


def test_chatoyant_center_moves_alone():
    p = ChatoyantPolygon("p", (5, 5), [(0, 0), (10, 0), (10, 10), (0, 10)])
    p.move_center((7, 3))
    assert p.center == (7, 3)
    assert p.vertices == [(0, 0), (10, 0), (10, 10), (0, 10)]


def test_always_convex_clamps_on_convexity_boundary():
    square = [(0.0, 0.0), (10.0, 0.0), (10.0, 10.0), (0.0, 10.0)]
    p = ConvexPolygon("p", square)
    pointer = (15.0, 15.0)
    cur = (0.0, 0.0)  # dragging vertex 0 across the opposite diagonal

    # oracle: walk the drag ray and keep the last strictly convex point
    best = cur
    for k in range(200_001):
        t = k / 200_000
        q = (cur[0] + (pointer[0] - cur[0]) * t, cur[1] + (pointer[1] - cur[1]) * t)
        trial = [q] + square[1:]
        if is_strictly_convex_ccw(trial):
            best = q
        else:
            break

    got = reconfigure_vertex(p, 0, pointer)
    assert dist(got, best) <= 2e-4  # oracle grid resolution dominates
    assert is_strictly_convex_ccw(p.vertices)


def test_always_convex_survives_random_drags():
    rng = random.Random(77)
    p = ConvexPolygon("p", [(0, 0), (50, 5), (60, 45), (20, 60), (-10, 30)])
    for _ in range(500):
        k = rng.randrange(5)
        reconfigure_vertex(p, k, (rng.uniform(-80, 120), rng.uniform(-80, 120)))
        assert is_strictly_convex_ccw(p.vertices)


def test_convex_unsafe_commit_reports_violation():
    p = ConvexPolygon("p", [(0.0, 0.0), (10.0, 0.0), (10.0, 10.0), (0.0, 10.0)])
    reconfigure_vertex(p, 0, (15.0, 15.0), safe=False)
    assert p.vertices[0] == (15.0, 15.0)
    assert any("not strictly convex" in v for v in p.validate())


# --- lines, text, house -----------------------------------------------------------


def test_line_translate_example():
    li = SolitaryLine("l", (0, 0), (10, 0))
    li.translate((5, 5))
    assert li.a == (5, 5) and li.b == (15, 5)


def test_segmented_line_rotation_round_trip():
    sl = SegmentedLine("s", [(0, 0), (20, 30), (50, 10)])
    before = list(sl.points)
    pivot = sl.rotation_center()
    sl.rotate(pivot, 1.1)
    sl.rotate(pivot, -1.1)
    for p, q in zip(before, sl.points):
        assert dist(p, q) <= 1e-9


def test_text_m_rejects_rotation():
    t = TextM("t", "info", (0, 0))
    with pytest.raises(NotRotatable):
        t.rotate((0, 0), 0.5)


def test_text_mr_rotates_about_center():
    t = TextMR("t", "words", (10, 20))
    t.rotate(t.rotation_center(), math.pi / 2)
    assert t.angle == pytest.approx(math.pi / 2)
    assert t.center == pytest.approx((10, 20))


def test_rect_quarter_turn_swaps_extents():
    r = Rect("r", (5, 5), 100, 50)
    r.rotate(r.rotation_center(), math.pi / 2)
    x0, y0, x1, y1 = r.bbox()
    assert x1 - x0 == pytest.approx(50)
    assert y1 - y0 == pytest.approx(100)
    assert r.center == pytest.approx((5, 5))


def test_house_apex_moves_sideways_freely():
    h = SimpleHouse("h", (0, 0), 60, 40, (5, 50))
    h.move_apex((35, 50))
    assert h.apex == (35, 50)
    assert (h.center, h.w, h.h) == ((0, 0), 60, 40)


def test_house_apex_clamped_above_top():
    h = SimpleHouse("h", (0, 0), 60, 40, (5, 50))
    h.move_apex((5, -100))
    assert h.apex[1] == pytest.approx(21.0)  # top edge plus unit gap


def test_house_top_edge_stops_under_apex():
    h = SimpleHouse("h", (0, 0), 60, 40, (5, 26))
    h._drag_edge("n", (0, 200), (0, 20), True)
    assert h.center[1] + h.h / 2 == pytest.approx(25.0)
    assert h.validate() == []


def test_house_translate_moves_body_and_apex_equally():
    h = SimpleHouse("h", (0, 0), 60, 40, (5, 50))
    h.translate((7, -3))
    assert h.center == (7, -3)
    assert h.apex == (12, 47)


# --- rotation rigidity across families ----------------------------------------


def test_rotation_round_trip_all_rotatable_shapes():
    rng = random.Random(9)
    for obj in sample_objects():
        if not obj.rotatable:
            continue
        before = obj.build_cover()
        pivot = (rng.uniform(-30, 30), rng.uniform(-30, 30))
        ang = rng.uniform(-math.pi, math.pi)
        obj.rotate(pivot, ang)
        obj.rotate(pivot, -ang)
        after = obj.build_cover()
        for n0, n1 in zip(before.nodes, after.nodes):
            assert shapes_close(n0.shape, n1.shape, 1e-9)


# --- serialization fields round trip --------------------------------------------


def test_shape_fields_round_trip():
    for obj in sample_objects():
        fields = dict(obj.to_fields())
        clone = type(obj).from_fields(
            obj.id,
            fields,
            movable=obj.movable,
            rotatable=obj.rotatable,
            color_class=obj.color_class,
            size_limits=obj.size_limits,
        )
        assert clone.to_fields() == obj.to_fields()
        assert clone.build_cover() == obj.build_cover()
