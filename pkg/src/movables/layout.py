"""Canonical text persistence for scenes and pointer traces.

The layout document is line-oriented and strictly canonical: fixed field
order, reals rendered with shortest round-trip precision, a version header
first and an `end` sentinel last so truncation is always detectable.  The
trace format is `seq kind button x y` per line, nothing else; time plays
no role anywhere, so there are no timestamps.
"""

from __future__ import annotations

import math
from typing import Iterable, Optional

from .errors import (
    DuplicateId,
    InvalidGeometry,
    MalformedDocument,
    MalformedTrace,
    UnknownId,
)
from .groups import ElasticGroup, policy_from_text, policy_to_text
from .mover import PointerButton
from .restrictions import AreaMode, AreaRestriction, OverlapMode, OverlapRule, SizeLimits
from .scene import Scene, TraceEvent
from .shapes import SHAPE_KINDS
from .shapes.base import fmt_f

VERSION_LINE = "movables-layout 1"

_KINDS: dict[str, type] = dict(SHAPE_KINDS)
_KINDS[ElasticGroup.kind] = ElasticGroup

_COMMON_FIELDS = {"movable", "rotatable", "color", "limits"}


def _bool_text(value: bool) -> str:
    return "true" if value else "false"


def _limits_text(limits: SizeLimits) -> str:
    return " ".join(fmt_f(x) for x in (*limits.minimum, *limits.maximum))


def serialize_scene(scene: Scene) -> str:
    lines = [VERSION_LINE]
    lines.append(f"safe {_bool_text(scene.safe)}")
    lines.append(f"raise-on-catch {_bool_text(scene.mover.raise_on_catch)}")
    if scene.area is not None:
        x0, y0, x1, y1 = scene.area.bounds
        coords = " ".join(fmt_f(v) for v in (x0, y0, x1, y1))
        lines.append(f"area {coords} {scene.area.mode.value}")
    if scene.overlap_rule is not None:
        lines.append(f"overlap {scene.overlap_rule.mode.value}")
        if scene.overlap_rule.obstacles:
            lines.append("obstacles " + " ".join(sorted(scene.overlap_rule.obstacles)))
    for obj in scene.objects:
        lines.append(f"object {obj.id} {obj.kind}")
        lines.append(f"  movable {_bool_text(obj.movable)}")
        lines.append(f"  rotatable {_bool_text(obj.rotatable)}")
        if obj.color_class is not None:
            lines.append(f"  color {obj.color_class}")
        if obj.size_limits is not None:
            lines.append(f"  limits {_limits_text(obj.size_limits)}")
        for key, value in obj.to_fields():
            lines.append(f"  {key} {value}")
    for pair in scene.pairs:
        lines.append(
            f"pair {pair.body_id} {pair.comment_id} {policy_to_text(pair.policy)}"
        )
    lines.append("end")
    return "\n".join(lines) + "\n"


def _parse_bool(value: str, line_no: int) -> bool:
    if value == "true":
        return True
    if value == "false":
        return False
    raise MalformedDocument(f"expected true or false, got {value!r}", line_no)


def _parse_real(token: str, line_no: int, allow_inf: bool = False) -> float:
    try:
        value = float(token)
    except ValueError:
        raise MalformedDocument(f"bad number {token!r}", line_no) from None
    if math.isnan(value):
        raise MalformedDocument("numbers may not be NaN", line_no)
    if not allow_inf and math.isinf(value):
        raise MalformedDocument("number out of range", line_no)
    return value


def _parse_limits(value: str, line_no: int) -> SizeLimits:
    tokens = value.split()
    if len(tokens) not in (2, 4):
        raise MalformedDocument("limits need 2 or 4 values", line_no)
    half = len(tokens) // 2
    minimum = tuple(_parse_real(t, line_no) for t in tokens[:half])
    maximum = tuple(_parse_real(t, line_no, allow_inf=True) for t in tokens[half:])
    try:
        return SizeLimits(minimum, maximum)
    except (ValueError, InvalidGeometry) as err:
        raise MalformedDocument(f"bad limits: {err}", line_no) from None


def _parse_area(value: str, line_no: int) -> AreaRestriction:
    tokens = value.split()
    if len(tokens) != 5:
        raise MalformedDocument("area needs 'x0 y0 x1 y1 mode'", line_no)
    coords = tuple(_parse_real(t, line_no) for t in tokens[:4])
    try:
        mode = AreaMode(tokens[4])
    except ValueError:
        raise MalformedDocument(f"unknown area mode {tokens[4]!r}", line_no) from None
    try:
        return AreaRestriction(coords, mode)
    except (ValueError, InvalidGeometry) as err:
        raise MalformedDocument(f"bad area: {err}", line_no) from None


def deserialize_scene(text: str) -> Scene:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != VERSION_LINE:
        raise MalformedDocument(f"expected header {VERSION_LINE!r}", 1)

    safe = True
    raise_on_catch = True
    area: Optional[AreaRestriction] = None
    overlap_mode: Optional[OverlapMode] = None
    obstacles: list[str] = []
    seen: set[str] = set()

    idx = 1
    while idx < len(lines):
        line = lines[idx]
        if line == "end" or line.startswith(("object ", "pair ")):
            break
        key, _, value = line.partition(" ")
        if key in seen:
            raise MalformedDocument(f"duplicate header line {key!r}", idx + 1)
        seen.add(key)
        if key == "safe":
            safe = _parse_bool(value, idx + 1)
        elif key == "raise-on-catch":
            raise_on_catch = _parse_bool(value, idx + 1)
        elif key == "area":
            area = _parse_area(value, idx + 1)
        elif key == "overlap":
            try:
                overlap_mode = OverlapMode(value)
            except ValueError:
                raise MalformedDocument(
                    f"unknown overlap mode {value!r}", idx + 1
                ) from None
        elif key == "obstacles":
            if overlap_mode is None:
                raise MalformedDocument("obstacles come after an overlap line", idx + 1)
            obstacles = value.split()
            if not obstacles:
                raise MalformedDocument("empty obstacles line", idx + 1)
        else:
            raise MalformedDocument(f"unknown header line {key!r}", idx + 1)
        idx += 1

    rule = None
    if overlap_mode is not None:
        rule = OverlapRule(overlap_mode, frozenset(obstacles))
    scene = Scene(
        area=area, overlap_rule=rule, safe=safe, raise_on_catch=raise_on_catch
    )

    ended = False
    while idx < len(lines):
        line = lines[idx]
        if line == "end":
            idx += 1
            ended = True
            break
        if line.startswith("object "):
            idx = _parse_object(scene, lines, idx)
        elif line.startswith("pair "):
            _parse_pair(scene, line, idx + 1)
            idx += 1
        else:
            raise MalformedDocument(f"unexpected line {line!r}", idx + 1)
    if not ended:
        raise MalformedDocument("document truncated: missing 'end'", len(lines))
    if idx != len(lines):
        raise MalformedDocument("content after 'end'", idx + 1)
    return scene


def _parse_object(scene: Scene, lines: list[str], idx: int) -> int:
    header_no = idx + 1
    parts = lines[idx].split()
    if len(parts) != 3:
        raise MalformedDocument("object header needs 'object <id> <kind>'", header_no)
    _, object_id, kind = parts
    cls = _KINDS.get(kind)
    if cls is None:
        raise MalformedDocument(f"unknown object kind {kind!r}", header_no)
    idx += 1
    fields: dict[str, str] = {}
    while idx < len(lines) and lines[idx].startswith("  "):
        raw = lines[idx][2:]
        key, _, value = raw.partition(" ")
        if not key:
            raise MalformedDocument("empty field name", idx + 1)
        if key in fields:
            raise MalformedDocument(f"duplicate field {key!r}", idx + 1)
        fields[key] = value
        idx += 1
    for name in ("movable", "rotatable"):
        if name not in fields:
            raise MalformedDocument(
                f"object {object_id}: missing field {name!r}", header_no
            )
    common = {
        "movable": _parse_bool(fields["movable"], header_no),
        "rotatable": _parse_bool(fields["rotatable"], header_no),
        "color_class": fields.get("color"),
        "size_limits": (
            _parse_limits(fields["limits"], header_no) if "limits" in fields else None
        ),
    }
    shape_fields = {k: v for k, v in fields.items() if k not in _COMMON_FIELDS}
    try:
        obj = cls.from_fields(object_id, shape_fields, **common)
    except (ValueError, InvalidGeometry) as err:
        msg = str(err)
        if msg.startswith(f"{object_id}: "):  # shape errors name the object
            msg = msg[len(object_id) + 2 :]
        raise MalformedDocument(f"object {object_id}: {msg}", header_no) from None
    allowed = {key for key, _ in obj.to_fields()} | _COMMON_FIELDS
    extra = sorted(set(fields) - allowed)
    if extra:
        raise MalformedDocument(
            f"object {object_id}: unknown field {extra[0]!r}", header_no
        )
    try:
        scene.add_object(obj)
    except (DuplicateId, ValueError) as err:
        raise MalformedDocument(str(err), header_no) from None
    return idx


def _parse_pair(scene: Scene, line: str, line_no: int) -> None:
    parts = line.split(" ", 3)
    if len(parts) != 4:
        raise MalformedDocument("pair needs 'pair <body> <comment> <policy>'", line_no)
    _, body_id, comment_id, policy_text = parts
    try:
        policy = policy_from_text(policy_text)
    except ValueError as err:
        raise MalformedDocument(str(err), line_no) from None
    try:
        # keep the stored comment placement; validate() reports strays
        scene.add_pair(body_id, comment_id, policy, settle=False)
    except (UnknownId, ValueError) as err:
        raise MalformedDocument(f"pair: {err}", line_no) from None


# --- traces ---------------------------------------------------------------


def format_trace(events: Iterable[TraceEvent]) -> str:
    lines = []
    for ev in events:
        button = ev.button.value if ev.button is not None else "-"
        lines.append(
            f"{ev.seq} {ev.kind} {button} {fmt_f(ev.pos[0])} {fmt_f(ev.pos[1])}"
        )
    return "\n".join(lines) + "\n" if lines else ""


def parse_trace(text: str) -> list[TraceEvent]:
    events: list[TraceEvent] = []
    prev_seq: Optional[int] = None
    pressed = False
    for i, line in enumerate(text.split("\n")):
        line_no = i + 1
        if line == "":
            continue
        parts = line.split()
        if len(parts) != 5:
            raise MalformedTrace("expected 'seq kind button x y'", line_no)
        seq_text, kind, button_text, x_text, y_text = parts
        try:
            seq = int(seq_text)
        except ValueError:
            raise MalformedTrace(f"bad sequence number {seq_text!r}", line_no) from None
        if prev_seq is not None and seq <= prev_seq:
            raise MalformedTrace("sequence numbers must increase", line_no)
        prev_seq = seq
        if kind not in ("press", "move", "release"):
            raise MalformedTrace(f"unknown event kind {kind!r}", line_no)
        button: Optional[PointerButton] = None
        if kind == "press":
            if pressed:
                raise MalformedTrace("press while already pressed", line_no)
            pressed = True
            try:
                button = PointerButton(button_text)
            except ValueError:
                raise MalformedTrace(
                    f"unknown button {button_text!r}", line_no
                ) from None
        else:
            if button_text != "-":
                raise MalformedTrace("move/release events take button '-'", line_no)
            if kind == "release":
                if not pressed:
                    raise MalformedTrace("release without a press", line_no)
                pressed = False
        pos = (
            _parse_trace_real(x_text, line_no),
            _parse_trace_real(y_text, line_no),
        )
        events.append(TraceEvent(seq, kind, button, pos))
    return events


def _parse_trace_real(token: str, line_no: int) -> float:
    try:
        value = float(token)
    except ValueError:
        raise MalformedTrace(f"bad number {token!r}", line_no) from None
    if not math.isfinite(value):
        raise MalformedTrace("coordinates must be finite", line_no)
    return value
