"""Batch command-line entry point.

Subcommands:
  analyze   run the pipeline on one or more ROIs of an image, emitting one
            JSON report line per ROI (or a text block with --format text)
  synth     render a synthetic shape fixture described by a spec file
  selftest  replay the built-in reference rows through the classifier

Configuration comes from --config, else the ERYTHRO_CONFIG environment
variable, else defaults; individual flags override the file. Exit codes:
0 all ROIs analyzed, 1 input/IO errors, 2 at least one ROI held no cell.
"""
from __future__ import annotations

import argparse
import math
import os
import sys
from typing import Mapping, Sequence, TextIO

from .analysis import (AnalysisConfig, analyze_roi, format_report_text,
                       serialize_report)
from .classifier import ClassificationThresholds, classify
from .errors import ErythroError, NoCellFound
from .raster import Roi, load_image, save_image
from .reference import REFERENCE_ROWS
from .synth import ShapeSpec, render_shape

ENV_CONFIG = "ERYTHRO_CONFIG"

_THRESHOLD_KEYS = ("compactness_gate", "spacing_gate", "healthy_white_min",
                   "healthy_white_max", "annulocyte_white_min",
                   "sickle_red_min", "ncc_sickle")


def parse_keyvalue_file(path: str) -> dict[str, str]:
    """Read a file of KEY=VALUE lines; # starts a comment."""
    entries: dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected KEY=VALUE")
            key, value = line.split("=", 1)
            entries[key.strip()] = value.strip()
    return entries


def config_from_mapping(entries: Mapping[str, str]) -> AnalysisConfig:
    known = {"min_area", "format", *_THRESHOLD_KEYS}
    unknown = set(entries) - known
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    overrides = {k: float(entries[k]) for k in _THRESHOLD_KEYS if k in entries}
    thresholds = ClassificationThresholds().replaced(overrides)
    return AnalysisConfig(
        min_area=int(entries.get("min_area", AnalysisConfig().min_area)),
        thresholds=thresholds,
        output_format=entries.get("format", "json"),
    )


def load_config(path: str | None) -> AnalysisConfig:
    """Resolve configuration: explicit path, else ERYTHRO_CONFIG, else defaults."""
    if path is None:
        path = os.environ.get(ENV_CONFIG) or None
    if path is None:
        return AnalysisConfig()
    return config_from_mapping(parse_keyvalue_file(path))


def parse_roi(text: str) -> Roi:
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError(f"ROI must be X,Y,W,H, got {text!r}")
    x, y, w, h = (int(p.strip()) for p in parts)
    return Roi(x, y, w, h)


def _parse_color(text: str) -> tuple[int, int, int]:
    parts = [int(p.strip()) for p in text.split(",")]
    if len(parts) != 3 or not all(0 <= p <= 255 for p in parts):
        raise ValueError(f"color must be R,G,B in 0..255, got {text!r}")
    return parts[0], parts[1], parts[2]


def shape_from_spec_file(path: str) -> tuple[ShapeSpec, int, int]:
    """Build a ShapeSpec plus canvas size from a KEY=VALUE spec file."""
    entries = parse_keyvalue_file(path)
    if "kind" not in entries:
        raise ValueError(f"{path}: missing required key 'kind'")
    canvas = entries.pop("canvas", "120x120")
    try:
        w_txt, h_txt = canvas.lower().split("x")
        cw, ch = int(w_txt), int(h_txt)
    except ValueError as exc:
        raise ValueError(f"canvas must be WIDTHxHEIGHT, got {canvas!r}") from exc

    kwargs: dict = {"kind": entries.pop("kind")}
    for key in ("radius", "pallor_radius", "semi_major", "semi_minor",
                "bite_radius", "bite_offset", "tip_radius",
                "spike_halfwidth", "rotation_deg"):
        if key in entries:
            kwargs[key] = float(entries.pop(key))
    if "spikes" in entries:
        kwargs["spikes"] = int(entries.pop("spikes"))
    for key, attr in (("fill", "fill_color"), ("pallor", "pallor_color"),
                      ("background", "background")):
        if key in entries:
            kwargs[attr] = _parse_color(entries.pop(key))
    if entries:
        raise ValueError(f"unknown shape spec keys: {sorted(entries)}")
    return ShapeSpec(**kwargs), cw, ch


def cmd_analyze(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    try:
        config = load_config(args.config)
        if args.format:
            config = AnalysisConfig(min_area=config.min_area,
                                    thresholds=config.thresholds,
                                    output_format=args.format)
        if args.min_area is not None:
            config = AnalysisConfig(min_area=args.min_area,
                                    thresholds=config.thresholds,
                                    output_format=config.output_format)
        rois = [parse_roi(r) for r in args.roi]
        img = load_image(args.image)
        for roi in rois:
            roi.validate_within(img)
    except (ErythroError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return 1

    sink = out
    close_sink = False
    if args.out:
        try:
            sink = open(args.out, "w", encoding="utf-8")
        except OSError as exc:
            print(f"error: IoFailure: {exc}", file=err)
            return 1
        close_sink = True

    missing = 0
    try:
        for roi in rois:
            try:
                report = analyze_roi(img, roi, config)
            except NoCellFound as exc:
                missing += 1
                print(f"error: NoCellFound at ROI {roi.x0},{roi.y0},"
                      f"{roi.width},{roi.height}: {exc}", file=err)
                continue
            if config.output_format == "text":
                print(format_report_text(report), file=sink)
            else:
                print(serialize_report(report), file=sink)
    finally:
        if close_sink:
            sink.close()
    return 2 if missing else 0


def cmd_synth(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    try:
        spec, cw, ch = shape_from_spec_file(args.spec)
        img = render_shape(spec, cw, ch)
        save_image(img, args.out)
    except (ErythroError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return 1
    print(f"wrote {spec.kind} fixture {img.width}x{img.height} to {args.out}",
          file=out)
    return 0


def cmd_selftest(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    """Replay the reference rows plus the compactness identity on the two
    rows whose published area/boundary/compactness triples are arithmetically
    consistent (the remaining rows carry source rounding beyond 0.01)."""
    failures = 0
    for row in REFERENCE_ROWS:
        label, _ = classify(row.morpho, row.color)
        ok = label is row.expected
        failures += 0 if ok else 1
        status = "PASS" if ok else "FAIL"
        print(f"[{status}] {row.name}: expected {row.expected.value}, "
              f"got {label.value}", file=out)
    for name in ("healthy-1", "sickle-3"):
        row = next(r for r in REFERENCE_ROWS if r.name == name)
        computed = 4.0 * math.pi * row.morpho.area / row.morpho.perimeter ** 2
        ok = abs(computed - row.morpho.compactness) <= 0.01
        failures += 0 if ok else 1
        status = "PASS" if ok else "FAIL"
        print(f"[{status}] {row.name}: compactness identity "
              f"{computed:.4f} vs {row.morpho.compactness:.2f}", file=out)
    print(("selftest: all checks passed" if failures == 0
           else f"selftest: {failures} checks FAILED"), file=out)
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="erythro",
        description="Identify erythrocyte morphologies in blood smear images.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="analyze one or more ROIs")
    p_an.add_argument("--image", required=True, help="PNG or PPM input image")
    p_an.add_argument("--roi", action="append", required=True,
                      metavar="X,Y,W,H", help="region of interest; repeatable")
    p_an.add_argument("--config", default=None, help="KEY=VALUE config file")
    p_an.add_argument("--out", default=None, help="write reports here "
                      "instead of standard output")
    p_an.add_argument("--format", choices=("json", "text"), default=None)
    p_an.add_argument("--min-area", type=int, default=None, dest="min_area",
                      help="minimum candidate component area in pixels")

    p_sy = sub.add_parser("synth", help="render a synthetic shape fixture")
    p_sy.add_argument("--spec", required=True, help="KEY=VALUE shape spec file")
    p_sy.add_argument("--out", required=True, help="output PNG or PPM path")

    sub.add_parser("selftest", help="replay the built-in reference oracle")
    return parser


def main(argv: Sequence[str] | None = None,
         out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "analyze":
        return cmd_analyze(args, out, err)
    if args.command == "synth":
        return cmd_synth(args, out, err)
    return cmd_selftest(args, out, err)


if __name__ == "__main__":
    sys.exit(main())
