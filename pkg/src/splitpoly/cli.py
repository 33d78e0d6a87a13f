"""Command-line front end.

Every verb reads schema-versioned JSON files, computes with exact
rationals and writes a JSON report to stdout (the ``width`` verb prints
the bare value). Errors become structured JSON on stderr with exit code
64 for malformed input, 65 for semantic violations, 69 for exceeded
budgets; the ``prove`` verb reserves 0 for a completed proof, 2 for an
honest failure to prove within the round limit, and 1 for crashes.

All verbs are deterministic. The --seed option exists for the
randomized experiment drivers built on this entry point and is echoed
into every report; the documented default is 271828.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Optional, Sequence

from .bodies import max_facet_width
from .closures import (
    closure_hrep,
    enumerate_split_sets,
    example_milp,
    make_body_family,
    prove_inequality,
    violated_faces,
    project_tight,
)
from .corpus import DEFAULT_SEED
from .cuts import classify_cut, dominance_certificate, dominates
from .errors import (
    BudgetExceeded,
    EmptyPolyhedron,
    InputFormatError,
    SemanticError,
    SplitPolyError,
)
from .io import (
    SCHEMA_VERSION,
    body_to_json,
    cut_to_json,
    dump_json,
    family_to_json,
    hrep_to_json,
    instance_to_json,
    load_json,
    parse_body,
    parse_cut,
    parse_cut_list,
    parse_family,
    parse_instance,
    vrep_to_json,
)
from .mip import POINT_BUDGET, Box, default_box, mixed_integer_hull
from .polyhedra import canonicalize_vrep, hrep_to_vrep, vrep_to_hrep
from .rationals import format_rat, format_vec
from .relax import boundary_crossings, relax_balas, relax_vertices

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NOT_PROVED = 2
EXIT_BAD_INPUT = 64
EXIT_SEMANTIC = 65
EXIT_BUDGET = 69


def _parse_box(text: Optional[str]) -> Optional[Box]:
    """Parse "lo:hi,lo:hi" into integer coordinate ranges."""
    if text is None:
        return None
    ranges = []
    for part in text.split(","):
        pieces = part.split(":")
        if len(pieces) != 2:
            raise InputFormatError(f"bad box range {part!r}: expected lo:hi")
        try:
            lo, hi = int(pieces[0]), int(pieces[1])
        except ValueError as exc:
            raise InputFormatError(f"bad box range {part!r}: {exc}") from exc
        if lo > hi:
            raise InputFormatError(f"bad box range {part!r}: lo exceeds hi")
        ranges.append((lo, hi))
    return tuple(ranges)


def _parse_index_list(text: str) -> tuple[int, ...]:
    out = []
    for part in text.split(","):
        try:
            out.append(int(part))
        except ValueError as exc:
            raise InputFormatError(f"bad index {part!r} in list") from exc
    if not out or any(i < 1 for i in out):
        raise InputFormatError("integer variable list needs 1-based indices")
    return tuple(sorted(set(i - 1 for i in out)))


def _emit_forms(emit: str, vrep=None, hrep=None, empty: bool = False) -> dict:
    """Package a polyhedron result under the requested emission forms."""
    if empty:
        return {"empty": True}
    doc: dict[str, Any] = {}
    if emit in ("vrep", "both"):
        if vrep is None:
            vrep = hrep_to_vrep(hrep)
        doc["vrep"] = vrep_to_json(vrep)
    if emit in ("hrep", "both"):
        if hrep is None:
            hrep = vrep_to_hrep(vrep)
        doc["hrep"] = hrep_to_json(hrep)
    return doc


def _crossing_json(crossing) -> dict:
    partner_key = "k" if crossing.kind == "segment" else "j"
    return {
        "kind": crossing.kind,
        "i": crossing.inside,
        partner_key: crossing.partner,
        "scalar": format_rat(crossing.scalar),
        "point": format_vec(crossing.point),
    }


def _run_relax(args) -> dict:
    p = canonicalize_vrep(parse_instance(load_json(args.instance)))
    body = parse_body(load_json(args.body))
    doc: dict[str, Any] = {
        "instance": instance_to_json(p),
        "body": body_to_json(body),
        "method": args.method,
        "crossings": [_crossing_json(c) for c in boundary_crossings(body, p)],
    }
    vertex_form = None
    balas_form = None
    if args.method in ("vertices", "both"):
        try:
            vertex_form = relax_vertices(body, p)
            doc["vertices_path"] = _emit_forms(args.emit, vrep=vertex_form)
        except EmptyPolyhedron:
            doc["vertices_path"] = _emit_forms(args.emit, empty=True)
    if args.method in ("balas", "both"):
        balas_form = relax_balas(body, p)
        doc["balas_path"] = _emit_forms(
            args.emit, hrep=balas_form, empty=balas_form.is_empty_marker
        )
    if args.method == "both":
        if vertex_form is None or balas_form.is_empty_marker:
            agree = vertex_form is None and balas_form.is_empty_marker
        else:
            agree = vrep_to_hrep(vertex_form) == balas_form
        doc["paths_agree"] = agree
    return doc


def _run_closure(args) -> dict:
    p = canonicalize_vrep(parse_instance(load_json(args.instance)))
    family = parse_family(load_json(args.family))
    doc: dict[str, Any] = {
        "instance": instance_to_json(p),
        "family": {"label": family.label, "size": len(family.bodies)},
        "family_width": format_rat(family.declared_width),
        "method": args.method,
    }
    try:
        h = closure_hrep(p, family, args.method)
    except EmptyPolyhedron:
        doc["closure"] = _emit_forms(args.emit, empty=True)
        return doc
    doc["closure"] = _emit_forms(args.emit, hrep=h, empty=h.is_empty_marker)
    return doc


def _run_dominate(args) -> dict:
    p = parse_instance(load_json(args.instance))
    first = parse_cut(load_json(args.first))
    second = parse_cut(load_json(args.second))
    return {
        "first": cut_to_json(first),
        "second": cut_to_json(second),
        "dominates": dominates(p, first, second),
    }


def _run_certify(args) -> dict:
    p = parse_instance(load_json(args.instance))
    family = parse_cut_list(load_json(args.cuts))
    candidate = parse_cut(load_json(args.candidate))
    cut_off = classify_cut(p, candidate).cut_off
    outcome = dominance_certificate(p, cut_off, family, candidate)
    doc: dict[str, Any] = {
        "candidate": cut_to_json(candidate),
        "cut_off": [i for i in cut_off],
    }
    if outcome.certificate is not None:
        doc["valid"] = True
        doc["weights"] = format_vec(outcome.certificate.weights)
        doc["combined"] = cut_to_json(outcome.certificate.combined)
    else:
        doc["valid"] = False
        doc["witness"] = format_vec(outcome.violation)
    return doc


def _run_width(args) -> dict:
    body = parse_body(load_json(args.body))
    return {"_text": format_rat(max_facet_width(body))}


def _face_json(record) -> dict:
    doc: dict[str, Any] = {
        "tight_rows": list(record.tight_rows),
        "face": hrep_to_json(record.face),
        "kind": record.kind,
    }
    if record.lattice_free is not None:
        doc["lattice_free"] = record.lattice_free
    if record.certificate is not None:
        doc["certificate"] = {
            str(row): format_rat(mult) for row, mult in record.certificate.items()
        }
    if record.witness is not None:
        doc["witness"] = format_vec(record.witness)
    return doc


def _run_faces(args) -> dict:
    p = canonicalize_vrep(parse_instance(load_json(args.instance)))
    cut = parse_cut(load_json(args.cut))
    box = _parse_box(args.box) or default_box(p)
    projection = project_tight(p, cut, box, args.budget)
    records = violated_faces(projection.px, p, cut, box, args.budget)
    return {
        "cut": cut_to_json(cut),
        "projection": hrep_to_json(projection.px),
        "rows_tight_on_slice": list(projection.tight_rows),
        "x_vars": [i + 1 for i in projection.x_vars],
        "description": hrep_to_json(projection.description),
        "faces": [_face_json(r) for r in records],
        "violated": sum(1 for r in records if r.kind == "violated"),
    }


def _prove_family(args, instance, builtin_body=None):
    if args.family == "simplex":
        if builtin_body is None:
            raise SemanticError(
                "--family simplex is only defined with --example-p"
            )
        return make_body_family([builtin_body], "simplex")
    if args.family == "splits":
        return enumerate_split_sets(
            instance.dim, instance.integer_vars, args.bound, p=instance
        )
    return parse_family(load_json(args.family))


def _run_prove(args) -> tuple[dict, int]:
    if args.example_p is not None:
        if args.instance or args.cut:
            raise InputFormatError(
                "--example-p replaces --instance and --cut; pass one or the other"
            )
        example = example_milp(args.example_p)
        instance, cut = example.instance, example.target_cut
        family = _prove_family(args, instance, example.body)
    else:
        if not args.instance or not args.cut:
            raise InputFormatError("prove needs --instance and --cut, or --example-p")
        instance = canonicalize_vrep(parse_instance(load_json(args.instance)))
        cut = parse_cut(load_json(args.cut))
        family = _prove_family(args, instance)
    box = _parse_box(args.box)
    trace = prove_inequality(
        instance,
        family,
        cut,
        max_rounds=args.rounds,
        box=box,
        budget=args.budget,
        analyze_faces=not args.skip_faces,
    )
    doc: dict[str, Any] = {
        "cut": cut_to_json(cut),
        "family": {"label": family.label, "size": len(family.bodies)},
        "family_width": format_rat(trace.family_width),
        "proved": trace.proved,
        "rounds_used": trace.rounds_used,
        "rounds": [
            {
                "optimum": None if r.optimum is None else format_rat(r.optimum),
                "hrep": hrep_to_json(r.hrep),
            }
            for r in trace.rounds
        ],
    }
    if not args.skip_faces:
        doc["violated_faces"] = [
            _face_json(r) for r in trace.violated_faces if r.kind == "violated"
        ]
        doc["safe_faces"] = sum(1 for r in trace.violated_faces if r.kind == "safe")
        doc["width_size_bound"] = format_rat(trace.width_size_bound)
    return doc, EXIT_OK if trace.proved else EXIT_NOT_PROVED


def _run_enumerate_splits(args) -> dict:
    if args.instance:
        p = canonicalize_vrep(parse_instance(load_json(args.instance)))
        family = enumerate_split_sets(
            p.dim, p.integer_vars, args.bound, p=p, max_bodies=args.max_bodies
        )
    else:
        if args.dim is None or args.integer_vars is None or args.offsets is None:
            raise InputFormatError(
                "enumerate-splits needs --instance, or --dim with "
                "--integer-vars and --offsets"
            )
        pieces = args.offsets.split(":")
        if len(pieces) != 2:
            raise InputFormatError("offsets must look like lo:hi")
        try:
            offsets = (int(pieces[0]), int(pieces[1]))
        except ValueError as exc:
            raise InputFormatError(f"bad offsets {args.offsets!r}") from exc
        family = enumerate_split_sets(
            args.dim,
            _parse_index_list(args.integer_vars),
            args.bound,
            offsets=offsets,
            max_bodies=args.max_bodies,
        )
    doc = family_to_json(family)
    doc["size"] = len(family.bodies)
    return doc


def _run_example(args) -> dict:
    example = example_milp(args.p)
    return {
        "p": args.p,
        "instance": instance_to_json(example.instance),
        "hrep": hrep_to_json(example.hrep),
        "target_cut": cut_to_json(example.target_cut),
        "body": body_to_json(example.body),
    }


def _run_oracle_hull(args) -> dict:
    p = canonicalize_vrep(parse_instance(load_json(args.instance)))
    box = _parse_box(args.box)
    try:
        hull = mixed_integer_hull(p, box, args.budget)
    except EmptyPolyhedron:
        return {"instance": instance_to_json(p), "empty": True}
    return {"instance": instance_to_json(p), "hull": vrep_to_json(hull)}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitpoly",
        description="Exact relaxations, closures and width analysis for "
        "mixed integer linear sets.",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=DEFAULT_SEED,
        help="seed echoed into reports and used by the randomized "
        f"experiment drivers (default {DEFAULT_SEED})",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name: str, **kwargs) -> argparse.ArgumentParser:
        return sub.add_parser(name, **kwargs)

    def emit_option(sp) -> None:
        sp.add_argument(
            "--emit", choices=("vrep", "hrep", "both"), default="both",
            help="which forms of result polyhedra to serialize",
        )

    def budget_option(sp) -> None:
        sp.add_argument(
            "--budget", type=int, default=POINT_BUDGET,
            help="cap on enumerated lattice points",
        )

    sp = add("relax", help="relaxation of P by one lattice point free body")
    sp.add_argument("--instance", required=True)
    sp.add_argument("--body", required=True)
    sp.add_argument(
        "--method", choices=("vertices", "balas", "both"), default="both"
    )
    emit_option(sp)

    sp = add("closure", help="intersection of relaxations over a body family")
    sp.add_argument("--instance", required=True)
    sp.add_argument("--family", required=True)
    sp.add_argument(
        "--method", choices=("vertices", "balas"), default="vertices"
    )
    emit_option(sp)

    sp = add("dominate", help="reciprocal-scalar dominance between two cuts")
    sp.add_argument("--instance", required=True)
    sp.add_argument("--first", required=True)
    sp.add_argument("--second", required=True)

    sp = add("certify", help="convex-combination dominance certificate")
    sp.add_argument("--instance", required=True)
    sp.add_argument("--cuts", required=True, help="JSON file with a cut family")
    sp.add_argument("--candidate", required=True)

    sp = add("width", help="max facet width of a body (prints the value)")
    sp.add_argument("--body", required=True)

    sp = add("faces", help="tight projection and face classification of a cut")
    sp.add_argument("--instance", required=True)
    sp.add_argument("--cut", required=True)
    sp.add_argument("--box", help="integer ranges lo:hi,lo:hi")
    budget_option(sp)

    sp = add("prove", help="iterated closure proof of an inequality")
    sp.add_argument("--instance")
    sp.add_argument("--cut")
    sp.add_argument(
        "--example-p", type=int, dest="example_p",
        help="use the built-in p-variable example instance and target",
    )
    sp.add_argument(
        "--family", required=True,
        help="family JSON path, or 'simplex' / 'splits' for built-ins",
    )
    sp.add_argument("--rounds", type=int, default=3)
    sp.add_argument(
        "--bound", type=int, default=2,
        help="coefficient bound when --family splits",
    )
    sp.add_argument("--box", help="integer ranges lo:hi,lo:hi")
    sp.add_argument(
        "--skip-faces", action="store_true",
        help="skip the face analysis and width bound",
    )
    budget_option(sp)

    sp = add("enumerate-splits", help="all bounded-coefficient split sets")
    sp.add_argument("--instance")
    sp.add_argument("--dim", type=int)
    sp.add_argument("--integer-vars", help="1-based indices, comma separated")
    sp.add_argument("--offsets", help="offset range lo:hi")
    sp.add_argument("--bound", type=int, required=True)
    sp.add_argument("--max-bodies", type=int, default=20_000)

    sp = add("example", help="emit the built-in p-variable example instance")
    sp.add_argument("--p", type=int, required=True)

    sp = add("oracle-hull", help="mixed integer hull by fiber enumeration")
    sp.add_argument("--instance", required=True)
    sp.add_argument("--box", help="integer ranges lo:hi,lo:hi")
    budget_option(sp)

    return parser


_HANDLERS = {
    "relax": _run_relax,
    "closure": _run_closure,
    "dominate": _run_dominate,
    "certify": _run_certify,
    "width": _run_width,
    "faces": _run_faces,
    "enumerate-splits": _run_enumerate_splits,
    "example": _run_example,
    "oracle-hull": _run_oracle_hull,
}


def _emit_error(exc: Exception) -> None:
    doc = {
        "v": SCHEMA_VERSION,
        "error": type(exc).__name__,
        "message": str(exc),
    }
    print(dump_json(doc), file=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.verb == "prove":
            doc, code = _run_prove(args)
        else:
            doc, code = _HANDLERS[args.verb](args), EXIT_OK
    except InputFormatError as exc:
        _emit_error(exc)
        return EXIT_BAD_INPUT
    except BudgetExceeded as exc:
        _emit_error(exc)
        return EXIT_BUDGET
    except SemanticError as exc:
        _emit_error(exc)
        return EXIT_SEMANTIC
    except SplitPolyError as exc:
        _emit_error(exc)
        return EXIT_SEMANTIC
    except Exception as exc:  # pragma: no cover - crash reporting
        _emit_error(exc)
        return EXIT_ERROR
    if "_text" in doc:
        print(doc["_text"])
        return code
    report = {"v": SCHEMA_VERSION, "verb": args.verb, "seed": args.seed}
    report.update(doc)
    print(dump_json(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
