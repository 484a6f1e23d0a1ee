"""Command-line front end.

Load a mass function from a JSON file or generate one of the built-in
families, then compute spectra, dimensions, sweeps, reference tables, or the
quadratic envelope, emitting CSV (default), JSON, or a static SVG figure.

Usage sketches:

    massfractal spectrum --family max-deng --n 3
    massfractal spectrum --input masses.json --format svg --output fig.svg
    massfractal dimension --input example.json --alpha 1,2,3
    massfractal sweep --family uniform-powerset --n 10 --alpha-start 1 --alpha-stop 29 --alpha-step 4
    massfractal table T5 --output table5.csv
    massfractal family --family max-deng --n 4 --emit masses.json
    massfractal envelope --n 6 --samples 101

Figures that overlay several frame sizes are composed by looping in the
shell, one file per frame size:

    for n in 2 3 4 5 6; do
        massfractal spectrum --family max-deng --n $n --output "spectrum_n$n.csv"
    done

Exit codes: 0 success, 2 input or parse error, 3 mathematical degeneracy,
4 unknown command or table.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass, field
from decimal import Decimal, ROUND_HALF_UP

from .core import (
    FocalElement,
    FrameOfDiscernment,
    MassFunction,
    ProfileBand,
    SUM_TOLERANCE,
    max_deng_mass,
    max_deng_profile,
    uniform_powerset_mass,
    uniform_powerset_profile,
    uniform_singleton_mass,
    uniform_singleton_profile,
    vacuous_mass,
    vacuous_profile,
    validate_mass_function,
)
from .errors import (
    DegenerateFrame,
    DegenerateSupport,
    MassFractalError,
    UnknownTable,
    ZeroDenominator,
)
from .multifractal import (
    GROUPING_TOLERANCE,
    Spectrum,
    SweepEntry,
    asymptotic_anchor_points,
    dimension_sweep,
    dimension_sweep_from_profile,
    quadratic_envelope,
    spectrum,
    spectrum_from_profile,
)

COMMANDS = ("spectrum", "dimension", "sweep", "table", "family", "envelope")

FAMILIES = ("max-deng", "uniform-powerset", "vacuous", "uniform-singleton")

TABLE_IDS = ("T1", "T2", "T3", "T4", "T5", "T6")

OUTPUT_DIR_ENV = "MASSFRACTAL_OUTPUT_DIR"

_MATH_ERRORS = (ZeroDenominator, DegenerateFrame, DegenerateSupport)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_MATH = 3
EXIT_UNKNOWN = 4


@dataclass(frozen=True)
class RunConfig:
    """Everything one invocation resolved to."""

    command: str
    input_path: str | None = None
    family_name: str | None = None
    n: int | None = None
    alpha_list: tuple[float, ...] = ()
    output_format: str = "csv"
    output_path: str | None = None
    table_id: str | None = None
    samples: int = 101
    emit_path: str | None = None
    tolerance_grouping: float = GROUPING_TOLERANCE
    tolerance_sum: float = SUM_TOLERANCE


# --- input resolution ---

def _load_mass_function(path: str, sum_tolerance: float) -> MassFunction:
    with open(path, "r", encoding="utf-8") as handle:
        document = json.load(handle)
    if not isinstance(document, dict) or "frame" not in document or "assignments" not in document:
        raise ValueError("mass-function file must be an object with 'frame' and 'assignments'")
    labels = document["frame"]
    if not isinstance(labels, list) or not all(isinstance(lab, str) for lab in labels):
        raise ValueError("'frame' must be a list of label strings")
    frame = FrameOfDiscernment(len(labels), tuple(labels))
    index_of = {label: i for i, label in enumerate(labels)}
    raw = []
    for entry in document["assignments"]:
        if not isinstance(entry, dict) or "subset" not in entry or "mass" not in entry:
            raise ValueError("each assignment needs 'subset' and 'mass'")
        subset = []
        for label in entry["subset"]:
            if label not in index_of:
                raise ValueError(f"subset label {label!r} is not in the frame")
            subset.append(index_of[label])
        raw.append((subset, float(entry["mass"])))
    return validate_mass_function(frame, raw, sum_tolerance=sum_tolerance)


_FAMILY_MASS = {
    "max-deng": max_deng_mass,
    "uniform-powerset": uniform_powerset_mass,
    "vacuous": vacuous_mass,
    "uniform-singleton": uniform_singleton_mass,
}

_FAMILY_PROFILE = {
    "max-deng": max_deng_profile,
    "uniform-powerset": uniform_powerset_profile,
    "vacuous": vacuous_profile,
    "uniform-singleton": uniform_singleton_profile,
}


def _family_profile(cfg: RunConfig) -> tuple[list[ProfileBand], int]:
    return _FAMILY_PROFILE[cfg.family_name](cfg.n), cfg.n


# --- output plumbing ---

def _resolve_output_path(path: str) -> str:
    override = os.environ.get(OUTPUT_DIR_ENV)
    if override and not os.path.isabs(path):
        return os.path.join(override, path)
    return path


def _write_text(cfg: RunConfig, text: str) -> None:
    if cfg.output_path is None:
        sys.stdout.write(text)
    else:
        with open(_resolve_output_path(cfg.output_path), "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _json_text(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _format_full(value: float) -> str:
    return repr(float(value))


def _format4(value: float) -> str:
    quantized = Decimal(repr(float(value))).quantize(Decimal("0.0001"), rounding=ROUND_HALF_UP)
    return format(quantized, "f")


# --- SVG rendering (static geometry only) ---

def _svg_document(
    points: list[tuple[float, float]],
    x_range: tuple[float, float],
    y_range: tuple[float, float],
    x_label: str,
    y_label: str,
    polyline: list[tuple[float, float]] | None = None,
) -> str:
    width, height, margin = 640.0, 480.0, 60.0
    x_lo, x_hi = x_range
    y_lo, y_hi = y_range
    span_x = x_hi - x_lo or 1.0
    span_y = y_hi - y_lo or 1.0

    def to_px(x: float, y: float) -> tuple[float, float]:
        px = margin + (x - x_lo) / span_x * (width - 2 * margin)
        py = height - margin - (y - y_lo) / span_y * (height - 2 * margin)
        return px, py

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">',
        f'<rect width="{width:.0f}" height="{height:.0f}" fill="white"/>',
    ]
    x0, y0 = to_px(x_lo, y_lo)
    x1, y1 = to_px(x_hi, y_hi)
    parts.append(f'<line x1="{x0:.2f}" y1="{y0:.2f}" x2="{x1:.2f}" y2="{y0:.2f}" stroke="black"/>')
    parts.append(f'<line x1="{x0:.2f}" y1="{y0:.2f}" x2="{x0:.2f}" y2="{y1:.2f}" stroke="black"/>')
    for frac in (0.0, 0.25, 0.5, 0.75, 1.0):
        tx = x_lo + frac * span_x
        px, _ = to_px(tx, y_lo)
        parts.append(f'<line x1="{px:.2f}" y1="{y0:.2f}" x2="{px:.2f}" y2="{y0 + 5:.2f}" stroke="black"/>')
        parts.append(f'<text x="{px:.2f}" y="{y0 + 20:.2f}" font-size="11" text-anchor="middle">{tx:.3f}</text>')
        ty = y_lo + frac * span_y
        _, py = to_px(x_lo, ty)
        parts.append(f'<line x1="{x0 - 5:.2f}" y1="{py:.2f}" x2="{x0:.2f}" y2="{py:.2f}" stroke="black"/>')
        parts.append(f'<text x="{x0 - 8:.2f}" y="{py + 4:.2f}" font-size="11" text-anchor="end">{ty:.3f}</text>')
    parts.append(
        f'<text x="{width / 2:.2f}" y="{height - 15:.2f}" font-size="13" text-anchor="middle">{x_label}</text>'
    )
    parts.append(
        f'<text x="18" y="{height / 2:.2f}" font-size="13" text-anchor="middle" '
        f'transform="rotate(-90 18 {height / 2:.2f})">{y_label}</text>'
    )
    if polyline:
        coords = " ".join("{:.2f},{:.2f}".format(*to_px(x, y)) for x, y in polyline)
        parts.append(f'<polyline points="{coords}" fill="none" stroke="steelblue" stroke-width="1.5"/>')
    for x, y in points:
        px, py = to_px(x, y)
        parts.append(f'<circle cx="{px:.2f}" cy="{py:.2f}" r="3.5" fill="crimson"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


# --- commands ---

def cmd_spectrum(cfg: RunConfig) -> int:
    if cfg.input_path is not None:
        m = _load_mass_function(cfg.input_path, cfg.tolerance_sum)
        result = spectrum(m, grouping_tolerance=cfg.tolerance_grouping)
    else:
        bands, n = _family_profile(cfg)
        result = spectrum_from_profile(bands, n, grouping_tolerance=cfg.tolerance_grouping)
    return _emit_spectrum(cfg, result)


def _emit_spectrum(cfg: RunConfig, result: Spectrum) -> int:
    if cfg.output_format == "svg":
        coords = [(p.y, p.f) for p in result.points]
        x_hi = max(p.y for p in result.points) + 0.1
        _write_text(cfg, _svg_document(coords, (0.0, x_hi), (0.0, 1.05), "y", "f"))
        return EXIT_OK
    if cfg.output_format == "json":
        payload = {
            "frame_size": result.frame_size,
            "points": [
                {
                    "y": p.y,
                    "f": p.f,
                    "mass_value": p.mass_value,
                    "multiplicity": p.multiplicity,
                    "representative_cardinality": p.representative_cardinality,
                }
                for p in result.points
            ],
        }
        _write_text(cfg, _json_text(payload))
        return EXIT_OK
    rows = [
        [
            _format_full(p.y),
            _format_full(p.f),
            _format_full(p.mass_value),
            str(p.multiplicity),
            "" if p.representative_cardinality is None else str(p.representative_cardinality),
        ]
        for p in result.points
    ]
    _write_text(
        cfg,
        _csv_text(["y", "f", "mass_value", "multiplicity", "representative_cardinality"], rows),
    )
    return EXIT_OK


def _sweep_entries(cfg: RunConfig) -> list[SweepEntry]:
    if cfg.input_path is not None:
        m = _load_mass_function(cfg.input_path, cfg.tolerance_sum)
        return dimension_sweep(m, cfg.alpha_list)
    bands, _ = _family_profile(cfg)
    return dimension_sweep_from_profile(bands, cfg.alpha_list)


def _emit_dimension_rows(cfg: RunConfig, entries: list[SweepEntry]) -> int:
    rows = []
    json_rows = []
    for entry in entries:
        if entry.result is None:
            note = entry.error or ""
            rows.append([_format_full(entry.alpha), "", "", "", "", note])
            json_rows.append({"alpha": entry.alpha, "error": entry.error})
            continue
        r = entry.result
        note = "outside tabulated range" if entry.alpha < 0 else ""
        rows.append(
            [
                _format_full(r.alpha),
                _format_full(r.value),
                r.branch.value,
                _format_full(r.numerator_bits),
                _format_full(r.denominator_bits),
                note,
            ]
        )
        json_rows.append(
            {
                "alpha": r.alpha,
                "D_alpha": r.value,
                "branch": r.branch.value,
                "numerator_bits": r.numerator_bits,
                "denominator_bits": r.denominator_bits,
                "note": note or None,
            }
        )
    if cfg.output_format == "json":
        _write_text(cfg, _json_text({"rows": json_rows}))
    else:
        _write_text(
            cfg,
            _csv_text(
                ["alpha", "D_alpha", "branch", "numerator_bits", "denominator_bits", "note"],
                rows,
            ),
        )
    if entries and all(entry.result is None for entry in entries):
        return EXIT_MATH
    return EXIT_OK


def cmd_dimension(cfg: RunConfig) -> int:
    return _emit_dimension_rows(cfg, _sweep_entries(cfg))


def cmd_sweep(cfg: RunConfig) -> int:
    return _emit_dimension_rows(cfg, _sweep_entries(cfg))


_EXAMPLE_TWO_FOCAL = (((0,), 0.2), ((1, 2), 0.8))


def _table_t1_t2(which: str) -> tuple[list[str], list[list[str]]]:
    header = ["frame_size"] + [f"card_{k}" for k in range(1, 7)]
    rows = []
    for n in range(2, 7):
        sp = spectrum_from_profile(max_deng_profile(n), n)
        by_cardinality = {p.representative_cardinality: p for p in sp.points}
        row = [str(n)]
        for k in range(1, 7):
            if k in by_cardinality:
                point = by_cardinality[k]
                row.append(_format4(point.y if which == "T1" else point.f))
            else:
                row.append("")
        rows.append(row)
    return header, rows


def _table_profile_grid(
    profile_builder, frame_sizes: list[int], alphas: list[int]
) -> tuple[list[str], list[list[str]]]:
    header = ["frame_size"] + [f"alpha_{a}" for a in alphas]
    rows = []
    for n in frame_sizes:
        bands = profile_builder(n)
        row = [str(n)]
        for entry in dimension_sweep_from_profile(bands, alphas):
            row.append(_format4(entry.result.value))
        rows.append(row)
    return header, rows


def _table_single_row(
    entries: list[SweepEntry], alphas: list[int]
) -> tuple[list[str], list[list[str]]]:
    header = ["quantity"] + [f"alpha_{a}" for a in alphas]
    row = ["D_alpha"] + [_format4(entry.result.value) for entry in entries]
    return header, [row]


def cmd_table(cfg: RunConfig) -> int:
    table_id = cfg.table_id
    if table_id not in TABLE_IDS:
        raise UnknownTable(f"unknown table {table_id!r}; expected one of {', '.join(TABLE_IDS)}")
    if table_id in ("T1", "T2"):
        header, rows = _table_t1_t2(table_id)
    elif table_id == "T3":
        frame = FrameOfDiscernment(3)
        m = validate_mass_function(frame, list(_EXAMPLE_TWO_FOCAL))
        alphas = [3, 9, 15, 21, 27, 33]
        header, rows = _table_single_row(dimension_sweep(m, alphas), alphas)
    elif table_id == "T4":
        alphas = [1, 4, 7, 10, 13, 16, 19]
        entries = dimension_sweep_from_profile(vacuous_profile(5), alphas)
        header, rows = _table_single_row(entries, alphas)
    elif table_id == "T5":
        header, rows = _table_profile_grid(
            uniform_powerset_profile, list(range(2, 21, 2)), [1, 5, 9, 13, 17, 21, 25, 29]
        )
    else:
        header, rows = _table_profile_grid(
            max_deng_profile, list(range(2, 21, 2)), [1, 4, 7, 10, 13, 16, 19]
        )
    if cfg.output_format == "json":
        _write_text(cfg, _json_text({"table": table_id, "columns": header, "rows": rows}))
    else:
        _write_text(cfg, _csv_text(header, rows))
    return EXIT_OK


def cmd_family(cfg: RunConfig) -> int:
    m = _FAMILY_MASS[cfg.family_name](FrameOfDiscernment(cfg.n))
    labels = m.frame.effective_labels()
    payload = {
        "frame": list(labels),
        "assignments": [
            {"subset": [labels[i] for i in element.members], "mass": mass}
            for element, mass in m.assignments
        ],
    }
    target = cfg.emit_path or cfg.output_path
    emit_cfg = RunConfig(command="family", output_path=target)
    _write_text(emit_cfg, _json_text(payload))
    return EXIT_OK


def cmd_envelope(cfg: RunConfig) -> int:
    envelope = quadratic_envelope(cfg.n)
    anchors = asymptotic_anchor_points(cfg.n)
    count = cfg.samples
    if count < 2:
        raise ValueError(f"need at least 2 samples, got {count}")
    step = (envelope.root_high - envelope.root_low) / (count - 1)
    samples = []
    for i in range(count):
        x = envelope.root_low + i * step
        samples.append((x, envelope.evaluate(x)))
    if cfg.output_format == "svg":
        sp = spectrum_from_profile(max_deng_profile(cfg.n), cfg.n)
        scatter = [(p.y, p.f) for p in sp.points]
        x_hi = max([p.y for p in sp.points] + [envelope.root_high]) + 0.1
        _write_text(
            cfg,
            _svg_document(scatter, (0.0, x_hi), (0.0, 1.05), "y", "f", polyline=samples),
        )
        return EXIT_OK
    if cfg.output_format == "json":
        payload = {
            "n": envelope.n,
            "a": envelope.a,
            "anchors": [list(anchor) for anchor in anchors],
            "samples": [[x, value] for x, value in samples],
        }
        _write_text(cfg, _json_text(payload))
        return EXIT_OK
    rows = [[_format_full(x), _format_full(value), "anchor"] for x, value in anchors]
    rows += [[_format_full(x), _format_full(value), "sample"] for x, value in samples]
    _write_text(cfg, _csv_text(["x", "F", "kind"], rows))
    return EXIT_OK


# --- argument parsing and dispatch ---

def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _alpha_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"could not parse alpha list {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="massfractal",
        description="Multifractal spectrum and dimension of Dempster-Shafer mass functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_source(p: argparse.ArgumentParser) -> None:
        p.add_argument("--input", help="mass-function JSON file")
        p.add_argument("--family", choices=FAMILIES, help="built-in family name")
        p.add_argument("--n", type=_positive_int, help="frame size for --family")

    def add_output(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
        p.add_argument("--output", help="output file (default stdout)")

    def add_tolerances(p: argparse.ArgumentParser) -> None:
        p.add_argument("--tolerance-grouping", type=float, default=GROUPING_TOLERANCE)
        p.add_argument("--tolerance-sum", type=float, default=SUM_TOLERANCE)

    p = sub.add_parser("spectrum", help="multifractal spectrum points")
    add_source(p); add_output(p); add_tolerances(p)

    p = sub.add_parser("dimension", help="multifractal dimension at given orders")
    add_source(p); add_output(p); add_tolerances(p)
    p.add_argument("--alpha", type=_alpha_list, required=True, help="comma-separated orders")

    p = sub.add_parser("sweep", help="dimension over an arithmetic order grid")
    add_source(p); add_output(p); add_tolerances(p)
    p.add_argument("--alpha-start", type=float, required=True)
    p.add_argument("--alpha-stop", type=float, required=True)
    p.add_argument("--alpha-step", type=float, required=True)

    p = sub.add_parser("table", help="regenerate a reference table")
    p.add_argument("table_id", metavar="TABLE", help="one of T1..T6")
    add_output(p)

    p = sub.add_parser("family", help="emit a built-in family as a mass-function JSON file")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--emit", help="output file for the JSON document (default stdout)")
    p.add_argument("--output", help="alias for --emit")

    p = sub.add_parser("envelope", help="quadratic envelope of the max-Deng spectrum")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--samples", type=_positive_int, default=101)
    add_output(p)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    alphas: tuple[float, ...] = ()
    if args.command == "dimension":
        alphas = args.alpha
    elif args.command == "sweep":
        if args.alpha_step <= 0:
            raise ValueError("--alpha-step must be positive")
        if args.alpha_stop < args.alpha_start:
            raise ValueError("--alpha-stop must not precede --alpha-start")
        count = int(math.floor((args.alpha_stop - args.alpha_start) / args.alpha_step + 1e-9)) + 1
        alphas = tuple(args.alpha_start + i * args.alpha_step for i in range(count))
    if args.command in ("spectrum", "dimension", "sweep"):
        has_input = getattr(args, "input", None) is not None
        has_family = getattr(args, "family", None) is not None
        if has_input == has_family:
            raise ValueError("supply exactly one of --input or --family")
        if has_family and getattr(args, "n", None) is None:
            raise ValueError("--family needs --n")
    return RunConfig(
        command=args.command,
        input_path=getattr(args, "input", None),
        family_name=getattr(args, "family", None),
        n=getattr(args, "n", None),
        alpha_list=alphas,
        output_format=getattr(args, "format", "csv"),
        output_path=getattr(args, "output", None),
        table_id=getattr(args, "table_id", None),
        samples=getattr(args, "samples", 101),
        emit_path=getattr(args, "emit", None),
        tolerance_grouping=getattr(args, "tolerance_grouping", GROUPING_TOLERANCE),
        tolerance_sum=getattr(args, "tolerance_sum", SUM_TOLERANCE),
    )


_DISPATCH = {
    "spectrum": cmd_spectrum,
    "dimension": cmd_dimension,
    "sweep": cmd_sweep,
    "table": cmd_table,
    "family": cmd_family,
    "envelope": cmd_envelope,
}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and not argv[0].startswith("-") and argv[0] not in COMMANDS:
        sys.stderr.write(f"error: UnknownCommand: {argv[0]!r} is not a massfractal command\n")
        return EXIT_UNKNOWN
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
        return _DISPATCH[cfg.command](cfg)
    except UnknownTable as failure:
        sys.stderr.write(f"error: UnknownTable: {failure}\n")
        return EXIT_UNKNOWN
    except _MATH_ERRORS as failure:
        sys.stderr.write(f"error: {type(failure).__name__}: {failure}\n")
        return EXIT_MATH
    except MassFractalError as failure:
        sys.stderr.write(f"error: {type(failure).__name__}: {failure}\n")
        return EXIT_INPUT
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as failure:
        sys.stderr.write(f"error: {type(failure).__name__}: {failure}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
