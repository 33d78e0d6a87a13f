"""JSON serialization for instances, bodies, cuts, and results.

Every document carries a schema version field ``"v": 1`` and is refused
when the field is missing or different, so files stay self-describing.
Rationals travel as "p/q" or "p" strings ("inf" where extended values
are allowed) and integer variable indices are 1-based on disk, 0-based
in memory.
"""

from __future__ import annotations

import json
from typing import Any

from .bodies import SplitBody, make_body
from .closures import BodyFamily, make_body_family
from .cuts import Cut, make_cut
from .errors import InputFormatError, SemanticError
from .polyhedra import HRep, VRep, validate_vrep
from .rationals import format_rat, format_vec, parse_rat, parse_vec

SCHEMA_VERSION = 1


def check_version(data: Any, what: str) -> dict:
    if not isinstance(data, dict):
        raise InputFormatError(f"{what} document must be a JSON object")
    version = data.get("v")
    if version != SCHEMA_VERSION:
        raise InputFormatError(
            f"{what} document has schema version {version!r}, "
            f"this build reads version {SCHEMA_VERSION}"
        )
    return data


def _field(data: dict, key: str, what: str) -> Any:
    if key not in data:
        raise InputFormatError(f"{what} document is missing the {key!r} field")
    return data[key]


def _parse_dim(data: dict, what: str) -> int:
    dim = _field(data, "dim", what)
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise InputFormatError(f"{what} dim must be a positive integer")
    return dim


def _parse_integer_vars(data: dict, dim: int, what: str) -> tuple[int, ...]:
    raw = _field(data, "integer_vars", what)
    if not isinstance(raw, list) or not all(
        isinstance(i, int) and not isinstance(i, bool) for i in raw
    ):
        raise InputFormatError(f"{what} integer_vars must be a list of integers")
    for i in raw:
        if i < 1 or i > dim:
            raise InputFormatError(
                f"{what} integer variable index {i} out of the 1..{dim} range"
            )
    return tuple(sorted(set(i - 1 for i in raw)))


def _parse_points(raw: Any, dim: int, what: str) -> tuple:
    if not isinstance(raw, list):
        raise InputFormatError(f"{what} must be a list of vectors")
    out = []
    for item in raw:
        if not isinstance(item, list):
            raise InputFormatError(f"{what} entries must be lists of rationals")
        out.append(parse_vec(item, dim))
    return tuple(out)


def parse_instance(data: Any) -> VRep:
    data = check_version(data, "instance")
    dim = _parse_dim(data, "instance")
    integer_vars = _parse_integer_vars(data, dim, "instance")
    vertices = _parse_points(_field(data, "vertices", "instance"), dim, "vertices")
    rays = _parse_points(data.get("rays", []), dim, "rays")
    p = VRep(dim, integer_vars, vertices, rays)
    problems = validate_vrep(p)
    if problems:
        raise SemanticError("invalid instance: " + "; ".join(problems))
    return p


def instance_to_json(p: VRep) -> dict:
    return {
        "v": SCHEMA_VERSION,
        "dim": p.dim,
        "integer_vars": [i + 1 for i in p.integer_vars],
        "vertices": [format_vec(v) for v in p.vertices],
        "rays": [format_vec(r) for r in p.rays],
    }


def parse_body(data: Any) -> SplitBody:
    data = check_version(data, "body")
    return _parse_body_fields(data)


def _parse_body_fields(data: dict) -> SplitBody:
    dim = _parse_dim(data, "body")
    integer_vars = _parse_integer_vars(data, dim, "body")
    raw = _field(data, "facets", "body")
    if not isinstance(raw, list) or not raw:
        raise InputFormatError("body facets must be a nonempty list")
    facets = []
    for item in raw:
        if not isinstance(item, dict):
            raise InputFormatError("each facet must be an object with pi and pi0")
        pi = parse_vec(_field(item, "pi", "facet"), dim)
        pi0 = parse_rat(_field(item, "pi0", "facet"))
        facets.append((pi, pi0))
    return make_body(dim, integer_vars, facets)


def body_to_json(body: SplitBody) -> dict:
    return {
        "v": SCHEMA_VERSION,
        "dim": body.dim,
        "integer_vars": [i + 1 for i in body.integer_vars],
        "facets": [
            {"pi": format_vec(pi), "pi0": format_rat(pi0)}
            for pi, pi0 in body.facets
        ],
    }


def parse_cut(data: Any) -> Cut:
    data = check_version(data, "cut")
    delta = parse_vec(_field(data, "delta", "cut"))
    delta0 = parse_rat(_field(data, "delta0", "cut"))
    return make_cut(delta, delta0)


def cut_to_json(cut: Cut) -> dict:
    return {
        "v": SCHEMA_VERSION,
        "delta": format_vec(cut.delta),
        "delta0": format_rat(cut.delta0),
    }


def parse_cut_list(data: Any) -> tuple[Cut, ...]:
    data = check_version(data, "cut list")
    raw = _field(data, "cuts", "cut list")
    if not isinstance(raw, list) or not raw:
        raise InputFormatError("cut list must hold at least one cut")
    cuts = []
    for item in raw:
        if not isinstance(item, dict):
            raise InputFormatError("each cut must be a JSON object")
        cuts.append(
            make_cut(
                parse_vec(_field(item, "delta", "cut")),
                parse_rat(_field(item, "delta0", "cut")),
            )
        )
    return tuple(cuts)


def parse_family(data: Any) -> BodyFamily:
    data = check_version(data, "body family")
    raw = _field(data, "bodies", "body family")
    if not isinstance(raw, list):
        raise InputFormatError("body family bodies must be a list")
    label = data.get("label", "family from file")
    if not isinstance(label, str):
        raise InputFormatError("body family label must be a string")
    bodies = []
    for item in raw:
        if not isinstance(item, dict):
            raise InputFormatError("each body must be a JSON object")
        bodies.append(_parse_body_fields(item))
    return make_body_family(bodies, label)


def family_to_json(family: BodyFamily) -> dict:
    return {
        "v": SCHEMA_VERSION,
        "label": family.label,
        "declared_width": format_rat(family.declared_width),
        "bodies": [body_to_json(b) for b in family.bodies],
    }


def vrep_to_json(p: VRep) -> dict:
    return instance_to_json(p)


def hrep_to_json(h: HRep) -> dict:
    doc: dict[str, Any] = {
        "v": SCHEMA_VERSION,
        "dim": h.dim,
        "integer_vars": [i + 1 for i in h.integer_vars],
        "ineqs": [{"a": format_vec(a), "b": format_rat(b)} for a, b in h.ineqs],
        "eqs": [{"a": format_vec(a), "b": format_rat(b)} for a, b in h.eqs],
    }
    if h.is_empty_marker:
        doc["empty"] = True
    return doc


def parse_hrep(data: Any) -> HRep:
    data = check_version(data, "H-form")
    dim = _parse_dim(data, "H-form")
    integer_vars = _parse_integer_vars(data, dim, "H-form")

    def rows(key: str) -> tuple:
        raw = data.get(key, [])
        if not isinstance(raw, list):
            raise InputFormatError(f"H-form {key} must be a list")
        out = []
        for item in raw:
            if not isinstance(item, dict):
                raise InputFormatError(f"each {key} row must be an object")
            out.append(
                (parse_vec(_field(item, "a", key), dim), parse_rat(_field(item, "b", key)))
            )
        return tuple(out)

    return HRep(dim, integer_vars, rows("ineqs"), rows("eqs"))


def load_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path} is not valid JSON: {exc}") from exc


def dump_json(doc: Any) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False)
