"""Instance and report files: JSON-compatible, schema version 1, round-trip safe.

Pair lists in files name elements; identities are implied and never listed.
Report emission is deterministic: fixed key order, pair lists sorted by
element index, no environment-dependent content.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .classes import MorphClass
from .errors import InvalidInput
from .lattice import FiniteLattice, build_lattice
from .models import ModelStruct
from .relative import RelStruct, validate_relative

SCHEMA_VERSION = 1


@dataclass
class InstanceFile:
    """A (lattice, weak equivalences) instance; cof/fib present only for
    full-structure files."""

    elements: list[str]
    leq: list[tuple[str, str]]
    weq: list[tuple[str, str]]
    add_identities: bool = False
    cof: list[tuple[str, str]] | None = None
    fib: list[tuple[str, str]] | None = None
    version: int = SCHEMA_VERSION


def _pair_list(raw, name: str) -> list[tuple[str, str]]:
    if not isinstance(raw, list):
        raise InvalidInput(f"field {name!r} must be a list of two-element label arrays")
    out = []
    for k, item in enumerate(raw):
        if not isinstance(item, list) or len(item) != 2 or not all(isinstance(x, str) for x in item):
            raise InvalidInput(f"field {name}[{k}] must be a two-element label array")
        out.append((item[0], item[1]))
    return out


def instance_from_dict(data: dict) -> InstanceFile:
    if not isinstance(data, dict):
        raise InvalidInput("instance file must be a JSON object")
    version = data.get("version")
    if version != SCHEMA_VERSION:
        raise InvalidInput(f"field 'version' must be {SCHEMA_VERSION}, got {version!r}")
    elements = data.get("elements")
    if not isinstance(elements, list) or not all(isinstance(x, str) for x in elements):
        raise InvalidInput("field 'elements' must be a list of labels")
    options = data.get("options", {})
    if not isinstance(options, dict):
        raise InvalidInput("field 'options' must be an object")
    add_ids = options.get("addIdentities", False)
    if not isinstance(add_ids, bool):
        raise InvalidInput("field 'options.addIdentities' must be a boolean")
    inst = InstanceFile(
        elements=list(elements),
        leq=_pair_list(data.get("leq", []), "leq"),
        weq=_pair_list(data.get("weq", []), "weq"),
        add_identities=add_ids,
    )
    if "cof" in data:
        inst.cof = _pair_list(data["cof"], "cof")
    if "fib" in data:
        inst.fib = _pair_list(data["fib"], "fib")
    return inst


def instance_to_dict(inst: InstanceFile) -> dict:
    data = {
        "version": inst.version,
        "elements": list(inst.elements),
        "leq": [list(p) for p in inst.leq],
        "weq": [list(p) for p in inst.weq],
        "options": {"addIdentities": inst.add_identities},
    }
    if inst.cof is not None:
        data["cof"] = [list(p) for p in inst.cof]
    if inst.fib is not None:
        data["fib"] = [list(p) for p in inst.fib]
    return data


def parse_instance(text: str) -> InstanceFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInput(f"JSON parse error at line {e.lineno}, column {e.colno}: {e.msg}") from e
    return instance_from_dict(data)


def print_instance(inst: InstanceFile) -> str:
    return json.dumps(instance_to_dict(inst), indent=2) + "\n"


def build_relative(inst: InstanceFile, add_identities: bool | None = None) -> RelStruct:
    lattice = build_lattice(inst.elements, inst.leq)
    flag = inst.add_identities if add_identities is None else (add_identities or inst.add_identities)
    return validate_relative(lattice, inst.weq, add_identities=flag)


def build_structure(inst: InstanceFile, add_identities: bool | None = None) -> ModelStruct:
    """Build the (unverified) structure of a full-structure file.

    Identities are always implied for cof and fib; run verify_model on the
    result to obtain the report.
    """
    if inst.cof is None or inst.fib is None:
        raise InvalidInput("structure file requires 'cof' and 'fib' fields")
    rel = build_relative(inst, add_identities)
    lat = rel.lattice
    cof = MorphClass.from_pairs(lat, inst.cof, add_identities=True)
    fib = MorphClass.from_pairs(lat, inst.fib, add_identities=True)
    return ModelStruct(rel, cof, fib)


def class_name_pairs(s: MorphClass) -> list[list[str]]:
    """Non-identity members as name pairs, sorted by element index."""
    return [list(s.lattice.pair_names(p)) for p in s.nonidentity_pairs()]


def structure_to_dict(m: ModelStruct) -> dict:
    return {
        "we": class_name_pairs(m.we),
        "cof": class_name_pairs(m.cof),
        "fib": class_name_pairs(m.fib),
    }


def witness_to_names(lattice: FiniteLattice, witness) -> list:
    """Flatten a witness tuple of elements and pairs into labels."""
    if witness is None:
        return []
    out = []
    for item in witness:
        if isinstance(item, tuple):
            out.append([lattice.name(x) for x in item])
        else:
            out.append(lattice.name(item))
    return out


@dataclass
class ReportFile:
    command: list[str]
    decision: str
    witnesses: list[dict] = field(default_factory=list)
    structures: list[dict] = field(default_factory=list)
    centers: list[list[list[str]]] = field(default_factory=list)
    zigzag: dict | None = None
    timings: dict | None = None
    version: int = SCHEMA_VERSION


def report_to_dict(rep: ReportFile) -> dict:
    data = {
        "version": rep.version,
        "command": list(rep.command),
        "decision": rep.decision,
        "witnesses": rep.witnesses,
        "structures": rep.structures,
        "centers": rep.centers,
    }
    if rep.zigzag is not None:
        data["zigzag"] = rep.zigzag
    if rep.timings is not None:
        data["timings"] = rep.timings
    return data


def report_from_dict(data: dict) -> ReportFile:
    if not isinstance(data, dict):
        raise InvalidInput("report file must be a JSON object")
    if data.get("version") != SCHEMA_VERSION:
        raise InvalidInput(f"field 'version' must be {SCHEMA_VERSION}")
    return ReportFile(
        command=list(data.get("command", [])),
        decision=data.get("decision", ""),
        witnesses=list(data.get("witnesses", [])),
        structures=list(data.get("structures", [])),
        centers=list(data.get("centers", [])),
        zigzag=data.get("zigzag"),
        timings=data.get("timings"),
        version=data["version"],
    )


def parse_report(text: str) -> ReportFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInput(f"JSON parse error at line {e.lineno}, column {e.colno}: {e.msg}") from e
    return report_from_dict(data)


def print_report(rep: ReportFile) -> str:
    return json.dumps(report_to_dict(rep), indent=2) + "\n"


def center_map_names(rel: RelStruct, chi) -> list[list[str]]:
    lat = rel.lattice
    return [[lat.name(a), lat.name(chi.chi[a])] for a in range(lat.n)]
