"""Scene registry semantics plus the canonical document and trace formats."""

from pathlib import Path

import pytest

from movables import (
    AreaMode,
    AreaRestriction,
    Circle,
    DuplicateId,
    MalformedDocument,
    MalformedTrace,
    OverlapMode,
    OverlapRule,
    PointerButton,
    Rect,
    Scene,
    SizeLimits,
    TextM,
    UnknownId,
    deserialize_scene,
    format_trace,
    parse_trace,
    serialize_scene,
)
from movables.demo import build_demo_scene
from movables.scene import TraceEvent, random_trace

DATA = Path(__file__).parent / "data"
GOLDEN = (DATA / "golden.layout").read_text(encoding="utf-8")


# -- registry ---------------------------------------------------------------


def test_ids_are_plain_tokens():
    scene = Scene()
    scene.add_object(Circle("a.b:c-d_e", (0, 0), 8))
    with pytest.raises(ValueError):
        scene.add_object(Circle("no spaces", (0, 0), 8))
    with pytest.raises(ValueError):
        scene.add_object(Circle("", (0, 0), 8))


def test_duplicate_and_unknown_ids():
    scene = Scene()
    scene.add_object(Circle("a", (0, 0), 8))
    with pytest.raises(DuplicateId):
        scene.add_object(Rect("a", (50, 50), 10, 10))
    with pytest.raises(UnknownId):
        scene.get("missing")
    with pytest.raises(UnknownId):
        scene.remove_object("missing")


def test_pop_to_top_reorders_only():
    scene = Scene()
    for name in ("a", "b", "c"):
        scene.add_object(Circle(name, (0, 0), 8))
    scene.pop_to_top("a")
    assert scene.ids() == ["b", "c", "a"]


def test_remove_cancels_catch_and_pairs():
    scene = Scene()
    scene.add_object(Circle("body", (0, 0), 8))
    scene.add_object(TextM("note", "x", (0, 20)))
    scene.add_pair("body", "note")
    scene.mover.catch(scene, (0, 0), PointerButton.PRIMARY)
    scene.remove_object("body")
    assert scene.mover.caught_info() is None
    assert scene.pairs == []
    assert "note" in scene  # the comment survives as a plain object


# -- canonical document -------------------------------------------------------


def test_golden_document_round_trip_is_byte_identical():
    assert serialize_scene(deserialize_scene(GOLDEN)) == GOLDEN


def test_demo_scene_matches_the_golden_document():
    assert serialize_scene(build_demo_scene()) == GOLDEN


def test_serialization_keeps_display_order_and_settings():
    scene = Scene(
        area=AreaRestriction((0.0, 0.0, 300.0, 200.0), AreaMode.WHOLE_OBJECT),
        overlap_rule=OverlapRule(OverlapMode.SAME_COLOR, frozenset({"b", "a"})),
        safe=False,
        raise_on_catch=False,
    )
    scene.add_object(Circle("b", (40, 40), 9, color_class="red"))
    scene.add_object(
        Rect("a", (100, 100), 20, 10, size_limits=SizeLimits((5.0, 5.0), (80.0, 40.0)))
    )
    doc = serialize_scene(scene)
    back = deserialize_scene(doc)
    assert back.ids() == ["b", "a"]
    assert back.safe is False
    assert back.mover.raise_on_catch is False
    assert back.area == AreaRestriction((0.0, 0.0, 300.0, 200.0), AreaMode.WHOLE_OBJECT)
    assert back.overlap_rule.mode is OverlapMode.SAME_COLOR
    assert back.overlap_rule.obstacles == frozenset({"a", "b"})
    assert back.get("a").size_limits == SizeLimits((5.0, 5.0), (80.0, 40.0))
    assert serialize_scene(back) == doc


def test_unbounded_size_limits_round_trip():
    scene = Scene()
    scene.add_object(
        Circle("c", (0, 0), 9, size_limits=SizeLimits((6.0, 6.0), (float("inf"), float("inf"))))
    )
    doc = serialize_scene(scene)
    assert "inf" in doc
    assert serialize_scene(deserialize_scene(doc)) == doc


from helpers import CORRUPTIONS


@pytest.mark.parametrize("label,mutate", CORRUPTIONS, ids=[c[0] for c in CORRUPTIONS])
def test_corrupted_documents_are_rejected(label, mutate):
    bad = mutate(GOLDEN)
    assert bad != GOLDEN, label
    with pytest.raises(MalformedDocument):
        deserialize_scene(bad)


def test_rejection_reports_the_line_number():
    bad = GOLDEN.replace("radius 26.0", "radius -26.0", 1)
    with pytest.raises(MalformedDocument) as err:
        deserialize_scene(bad)
    wanted = GOLDEN.splitlines().index("object dot circle") + 1
    assert err.value.line == wanted


# -- traces -------------------------------------------------------------------


def test_trace_round_trip():
    events = [
        TraceEvent(1, "press", PointerButton.PRIMARY, (10.0, 20.0)),
        TraceEvent(2, "move", None, (15.5, 20.0)),
        TraceEvent(3, "release", None, (15.5, 20.0)),
        TraceEvent(4, "press", PointerButton.SECONDARY, (1.25, -3.5)),
        TraceEvent(5, "release", None, (1.25, -3.5)),
    ]
    text = format_trace(events)
    assert parse_trace(text) == events
    assert text.splitlines()[0] == "1 press primary 10.0 20.0"
    assert text.splitlines()[1] == "2 move - 15.5 20.0"


TRACE_REJECTS = [
    ("token count", "1 press primary 10.0\n"),
    ("bad kind", "1 poke primary 10.0 20.0\n"),
    ("bad button", "1 press middle 10.0 20.0\n"),
    ("button on move", "1 press primary 0.0 0.0\n2 move primary 1.0 1.0\n"),
    ("seq not increasing", "2 press primary 0.0 0.0\n1 move - 1.0 1.0\n"),
    ("seq not integer", "one press primary 0.0 0.0\n"),
    ("non-finite coord", "1 press primary nan 0.0\n"),
    ("press while pressed", "1 press primary 0.0 0.0\n2 press primary 1.0 1.0\n"),
    ("release without press", "1 release - 0.0 0.0\n"),
]


@pytest.mark.parametrize("label,text", TRACE_REJECTS, ids=[t[0] for t in TRACE_REJECTS])
def test_malformed_traces_are_rejected(label, text):
    with pytest.raises(MalformedTrace):
        parse_trace(text)


def test_blank_lines_and_hover_moves_are_tolerated():
    text = "\n1 move - 5.0 5.0\n\n2 press primary 0.0 0.0\n\n3 release - 0.0 0.0\n"
    assert len(parse_trace(text)) == 3  # hovering before a press is fine


# -- replay -------------------------------------------------------------------


def test_golden_trace_replays_to_the_frozen_layout():
    trace = parse_trace((DATA / "golden.trace").read_text(encoding="utf-8"))
    scene = deserialize_scene(GOLDEN)
    scene.replay(trace)
    assert serialize_scene(scene) == (DATA / "golden-after.layout").read_text(encoding="utf-8")


def test_replay_is_repeatable():
    trace = random_trace(build_demo_scene(), 300, seed=5)
    outs = []
    for _ in range(2):
        scene = deserialize_scene(GOLDEN)
        scene.replay(trace)
        outs.append(serialize_scene(scene))
    assert outs[0] == outs[1]


def test_random_trace_is_seed_stable():
    a = random_trace(build_demo_scene(), 100, seed=9)
    b = random_trace(build_demo_scene(), 100, seed=9)
    c = random_trace(build_demo_scene(), 100, seed=10)
    assert a == b
    assert a != c
    assert [e.seq for e in a] == list(range(1, 101))
