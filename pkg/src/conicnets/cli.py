"""Batch command line: classify planes and nets, dump the orbit atlas, and
run the verification suites.

Exit codes: 0 success, 2 usage or input error, 3 plane outside the
classified family, 4 verification or internal-consistency failure, 5
resource budget exhausted.  Output is deterministic for a fixed
configuration: keys are sorted, there are no timestamps, and worker counts
never change the bytes.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import atlas
from .errors import (
    ClassificationError,
    ConfigurationError,
    OutOfFamilyError,
    ResourceBudgetError,
    VerificationError,
)
from .gf import GF, field
from .invariants import nucleus_meet_dim, plane_signature
from .projgeom import Subspace, meet, plane_from_pattern
from .veronese import form_from_str, form_to_str, nucleus_plane

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_OUT_OF_FAMILY = 3
EXIT_VERIFY = 4
EXIT_BUDGET = 5

SUITES = ("distributions", "double-lines", "line-orbits", "partition", "known-net")


class UsageError(ValueError):
    pass


def _field(args) -> GF:
    return field(args.q, args.modulus)


def _read_payload(args) -> dict:
    """Inline --data, --input file, or stdin; always a JSON object."""
    if getattr(args, "data", None):
        text = args.data
    elif getattr(args, "input", None):
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError("input is not valid JSON: %s" % exc) from exc
    if isinstance(payload, list):
        return {"rows": payload}
    if not isinstance(payload, dict):
        raise UsageError("input must be a JSON object or array")
    return payload


def _plane_from_payload(gf: GF, payload: dict) -> Subspace:
    if "rows" in payload:
        rows = payload["rows"]
        if (not isinstance(rows, list) or len(rows) != 3
                or any(not isinstance(r, list) or len(r) != 6 for r in rows)):
            raise UsageError("rows must be a 3x6 array of field elements")
        try:
            return plane_from_pattern(gf, rows)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    if "label" in payload:
        label = payload["label"]
        params = payload.get("parameters")
        try:
            rows, _ = atlas.representative_pattern(gf, label, params)
            return plane_from_pattern(gf, rows)
        except (ConfigurationError, ValueError) as exc:
            raise UsageError(str(exc)) from exc
    raise UsageError('plane input needs "rows" or "label"')


def _forms_from_payload(gf: GF, payload: dict):
    forms = payload.get("forms")
    if not isinstance(forms, list) or len(forms) != 3:
        raise UsageError('net input needs "forms": three coefficient vectors or strings')
    out = []
    for f in forms:
        if isinstance(f, str):
            try:
                out.append(form_from_str(f))
            except ValueError as exc:
                raise UsageError("bad form %r: %s" % (f, exc)) from exc
        elif isinstance(f, list) and len(f) == 6:
            out.append(tuple(int(v) for v in f))
        else:
            raise UsageError("each form must be a string or a 6-element array")
    return out


def _emit(args, obj: dict | str) -> None:
    if isinstance(obj, dict):
        text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    else:
        text = obj
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _atlas_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([
        "label", "size", "stabilizer_order", "od0", "od4", "cubic_type",
        "cubic_point_count", "representative_matrix", "parameters",
    ])
    for row in report["orbits"]:
        writer.writerow([
            row["label"],
            row["size"] if row["size"] is not None else "",
            row["stabilizer_order"] if row["stabilizer_order"] is not None else "",
            ";".join(map(str, row["od0"])),
            ";".join(map(str, row["od4"])),
            row["cubic_type"] or "",
            row["cubic_point_count"] if row["cubic_point_count"] is not None else "",
            " / ".join(",".join(map(str, r)) for r in row["representative_matrix"]),
            ";".join("%s=%d" % kv for kv in sorted(row["parameters"].items())),
        ])
    return buf.getvalue()


def cmd_classify_plane(args) -> int:
    gf = _field(args)
    plane = _plane_from_payload(gf, _read_payload(args))
    label = atlas.classify_plane(plane)
    sig = plane_signature(plane)
    cut = meet(plane, nucleus_plane(gf))
    record = {
        "schema": atlas.SCHEMA,
        "q": gf.q,
        "label": label,
        "signature": sig.to_json(),
        "od0": list(sig.point_counts),
        "od4": list(sig.hyperplane_counts),
        "cubic_type": sig.cubic_kind,
        "plane": [list(r) for r in plane.rows],
        "intersection_with_nucleus_plane": {
            "dimension": nucleus_meet_dim(plane),
            "basis": [list(r) for r in cut.rows] if cut is not None else [],
        },
    }
    _emit(args, record)
    return EXIT_OK


def cmd_classify_net(args) -> int:
    gf = _field(args)
    forms = _forms_from_payload(gf, _read_payload(args))
    try:
        plane = atlas.plane_of_net(gf, forms)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    label = atlas.classify_plane(plane)
    record = {
        "schema": atlas.SCHEMA,
        "q": gf.q,
        "label": label,
        "forms": [form_to_str(f) for f in forms],
        "form_vectors": [list(f) for f in forms],
        "plane": [list(r) for r in plane.rows],
        "base_points": [list(p) for p in atlas.net_base_points(gf, forms)],
        "double_line_count": atlas.net_double_line_count(gf, forms),
    }
    _emit(args, record)
    return EXIT_OK


def cmd_atlas(args) -> int:
    gf = _field(args)
    report = atlas.verify_partition(gf, exhaustive=args.exhaustive, workers=args.workers)
    if args.format == "csv":
        _emit(args, _atlas_csv(report))
    else:
        _emit(args, report)
    return EXIT_OK if all(c["pass"] for c in report["checks"]) else EXIT_VERIFY


def cmd_verify(args) -> int:
    gf = _field(args)
    if args.suite == "distributions":
        report = atlas.verify_distributions(gf)
    elif args.suite == "double-lines":
        report = atlas.verify_double_lines(
            gf, exhaustive=args.exhaustive, samples=args.samples,
            seed=args.seed, workers=args.workers,
        )
    elif args.suite == "line-orbits":
        report = atlas.verify_line_orbits(gf)
    elif args.suite == "partition":
        report = atlas.verify_partition(
            gf, exhaustive=args.exhaustive, workers=args.workers
        )
    else:
        report = atlas.verify_known_net(gf)
    _emit(args, report)
    return EXIT_OK if all(c["pass"] for c in report["checks"]) else EXIT_VERIFY


def _add_common(p: argparse.ArgumentParser, io_input: bool = False) -> None:
    p.add_argument("--q", type=int, required=True,
                   help="field size, a power of 2 between 2 and 16")
    p.add_argument("--modulus", type=int, default=None,
                   help="override the irreducible modulus polynomial (bit mask)")
    p.add_argument("--output", default=None, help="write the report here instead of stdout")
    if io_input:
        p.add_argument("--data", default=None, help="inline JSON input")
        p.add_argument("--input", default=None, help="read JSON input from this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conicnets",
        description="Classify planes of PG(5,q) meeting the nucleus plane of "
                    "the Veronese surface (equivalently, nets of conics "
                    "containing a double line), and verify the orbit atlas.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify-plane", help="label a plane given by basis rows or a pattern")
    _add_common(p, io_input=True)
    p.set_defaults(run=cmd_classify_plane)

    p = sub.add_parser("classify-net", help="label a net of conics given by three forms")
    _add_common(p, io_input=True)
    p.set_defaults(run=cmd_classify_net)

    p = sub.add_parser("atlas", help="build the orbit atlas and partition report")
    _add_common(p)
    p.add_argument("--workers", type=int, default=0, help="parallel sweep processes")
    p.add_argument("--exhaustive", action="store_true", default=None,
                   help="force the all-planes sweep (default: on for q <= 4)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(run=cmd_atlas)

    p = sub.add_parser("verify", help="run one verification suite")
    _add_common(p)
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--workers", type=int, default=0, help="parallel sweep processes")
    p.add_argument("--exhaustive", action="store_true", default=None,
                   help="force the all-planes sweep (default: on for q <= 4)")
    p.add_argument("--samples", type=int, default=100_000,
                   help="sample count for the sampled double-lines suite")
    p.add_argument("--seed", type=int, default=0, help="sampling seed")
    p.set_defaults(run=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except OutOfFamilyError as exc:
        print("out of family: %s" % exc, file=sys.stderr)
        return EXIT_OUT_OF_FAMILY
    except ResourceBudgetError as exc:
        print("resource budget exhausted: %s" % exc, file=sys.stderr)
        return EXIT_BUDGET
    except (VerificationError, ClassificationError) as exc:
        print("verification failure: %s" % exc, file=sys.stderr)
        return EXIT_VERIFY
    except (UsageError, ConfigurationError, ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
