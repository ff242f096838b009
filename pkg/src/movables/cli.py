"""Command line front end: validate, replay, render and fuzz layouts."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import EngineError, MalformedDocument, MalformedTrace
from .layout import deserialize_scene, format_trace, parse_trace, serialize_scene
from .mover import PointerButton
from .restrictions import AreaMode
from .scene import Scene, random_trace
from .svgrender import render_svg


def _load_scene(path: str) -> Scene:
    return deserialize_scene(Path(path).read_text(encoding="utf-8"))


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")


def cmd_validate(args: argparse.Namespace) -> int:
    try:
        scene = _load_scene(args.layout)
    except MalformedDocument as err:
        print(f"{args.layout}:{err.line}: {err}", file=sys.stderr)
        return 1
    issues = scene.validate()
    for issue in issues:
        print(f"{args.layout}: {issue}", file=sys.stderr)
    return 1 if issues else 0


def cmd_replay(args: argparse.Namespace) -> int:
    scene = _load_scene(args.layout)
    events = parse_trace(Path(args.trace).read_text(encoding="utf-8"))
    scene.replay(events)
    _emit(serialize_scene(scene), args.output)
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    scene = _load_scene(args.layout)
    _emit(render_svg(scene, show_covers=args.covers), args.output)
    return 0


def cmd_fuzz(args: argparse.Namespace) -> int:
    scene = _load_scene(args.layout)
    initial = scene.validate()
    if initial:
        for issue in initial:
            print(f"initial layout invalid: {issue}", file=sys.stderr)
        return 1
    events = random_trace(scene, args.events, args.seed)
    if args.trace_out:
        Path(args.trace_out).write_text(format_trace(events), encoding="utf-8")
    grab_mode = (
        scene.area is not None and scene.area.mode is AreaMode.GRAB_POINT
    )
    for event in events:
        scene.apply_event(event)
        issues = scene.validate()
        if grab_mode:
            adhered = scene.mover.adhered_point()
            info = scene.mover.caught_info()
            if (
                adhered is not None
                and info is not None
                and info.button is PointerButton.PRIMARY
            ):
                x0, y0, x1, y1 = scene.area.bounds
                if not (
                    x0 - 1e-9 <= adhered[0] <= x1 + 1e-9
                    and y0 - 1e-9 <= adhered[1] <= y1 + 1e-9
                ):
                    issues.append(f"grab point {adhered} outside the work area")
        if issues:
            for issue in issues:
                print(f"after event {event.seq}: {issue}", file=sys.stderr)
            return 1
    print(f"fuzz ok: {len(events)} events, seed {args.seed}, no violations")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="movables",
        description="Validate, replay, render and fuzz movable-object layouts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a layout document")
    p.add_argument("layout")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("replay", help="apply a pointer trace to a layout")
    p.add_argument("layout")
    p.add_argument("trace")
    p.add_argument("-o", "--output", default=None, help="write the final layout here")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("render", help="render a layout to SVG")
    p.add_argument("layout")
    p.add_argument("--covers", action="store_true", help="outline every cover node")
    p.add_argument("-o", "--output", default=None, help="write the SVG here")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("fuzz", help="replay a seeded random trace, assert invariants")
    p.add_argument("layout")
    p.add_argument("--events", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trace-out", default=None, help="save the generated trace")
    p.set_defaults(func=cmd_fuzz)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (MalformedDocument, MalformedTrace) as err:
        line = getattr(err, "line", 0)
        print(f"error at line {line}: {err}", file=sys.stderr)
        return 1
    except (EngineError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
