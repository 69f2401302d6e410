"""Scenario files: parsing, execution and report rendering.

A scenario is one JSON document (see ``schemas/scenario.schema.json``).  Running
it yields a report dictionary; text output is rendered from that dictionary so
both formats carry the same content.
"""

from __future__ import annotations

import json
import re
import time
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Optional

import jsonschema

from procsm import __version__
from procsm.characteristic import (
    CompactificationDiagram,
    char_class_localization,
    compactification_compat,
    verify_main_identity,
    verify_silclaim_induction,
)
from procsm.chow_ring import (
    ChowClass,
    ProductAmbient,
    SurfaceAmbient,
    blow_up_surface,
    make_product_ambient,
    make_surface_ambient,
)
from procsm.errors import (
    ArithmeticOverflow,
    MalformedExpression,
    ParseError,
    ProcsmError,
    SchemaViolation,
)
from procsm.log_csm import (
    DivisorArrangement,
    additivity_check,
    csm_open,
    csm_zero,
    log_cotangent_chern,
    silred_rhs,
)
from procsm import motivic

ENGINE = f"procsm {__version__}"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

_NAMED_AMBIENT = re.compile(r"^P([1-9])((?:xP[1-9])*)$")

ARRANGEMENT_OUTPUTS = {
    "csm_open", "csm_zero", "silred_rhs", "char_class", "log_cotangent",
    "verify_main", "verify_induction", "additivity",
}
MODELING_NOTE = "homological value modeled as <-1>^smooth_dim times the compactly supported value"


@lru_cache(maxsize=None)
def _schema(name: str) -> dict:
    text = resources.files("procsm").joinpath("schemas", name).read_text(encoding="utf-8")
    return json.loads(text)


@dataclass
class Scenario:
    raw: dict
    outputs: list
    ambient: object = None
    chain: tuple = ()  # blow-downs from ``ambient`` to the chain's base
    arrangement: Optional[DivisorArrangement] = None
    scissor: Optional[motivic.Space] = None
    diagram: Optional[CompactificationDiagram] = None
    expect_compatible: bool = True
    name: str = ""


# --- parsing -----------------------------------------------------------------


def parse_ambient(spec):
    """Resolve an ambient description; returns ``(ambient, blow-down chain, base ambient)``."""
    if isinstance(spec, str):
        match = _NAMED_AMBIENT.match(spec)
        if not match:
            raise SchemaViolation(f"unknown ambient name {spec!r}")
        factors = [int(d) for d in re.findall(r"\d", spec)]
        ambient = make_product_ambient(factors)
        return ambient, (), ambient
    kind = spec["type"]
    if kind == "product":
        ambient = make_product_ambient(spec["factors"])
        return ambient, (), ambient
    if kind == "surface":
        ambient = make_surface_ambient(
            spec["basis"], spec["intersection_matrix"], spec["canonical_class"], spec["c2"]
        )
        return ambient, (), ambient
    base, base_chain, root = parse_ambient(spec["base"])
    current, maps = base, []
    for label in spec["labels"]:
        current, blowdown = blow_up_surface(current, label)
        maps.append(blowdown)
    # maps run upstairs -> downstairs
    return current, tuple(reversed(maps)) + base_chain, root


def parse_arrangement(spec: dict, ambient) -> DivisorArrangement:
    components = []
    for comp in spec["components"]:
        vector = comp["class"]
        if isinstance(vector, dict):
            if not isinstance(ambient, SurfaceAmbient):
                raise SchemaViolation("labelled divisor classes need a surface ambient")
            try:
                coords = [0] * ambient.rank
                for label, coeff in vector.items():
                    coords[ambient.label_index(label)] += coeff
            except KeyError as exc:
                raise SchemaViolation(str(exc.args[0])) from None
            vector = coords
        if isinstance(ambient, ProductAmbient) and len(vector) != len(ambient.factors):
            raise SchemaViolation(
                f"component {comp['name']!r}: multidegree {vector} needs {len(ambient.factors)} entries"
            )
        if isinstance(ambient, SurfaceAmbient) and len(vector) != ambient.rank:
            raise SchemaViolation(
                f"component {comp['name']!r}: divisor vector {vector} needs {ambient.rank} entries"
            )
        components.append((comp["name"], ambient.divisor(vector)))
    return DivisorArrangement(ambient, tuple(components), spec.get("snc", True))


def parse_space(spec: dict) -> motivic.Space:
    kind = spec["type"]
    extra = {"smooth_dim": spec["smooth_dim"]} if "smooth_dim" in spec else {}
    allowed = {
        "point": set(), "gm": set(), "affine": {"n"}, "proj": {"n"},
        "product": {"factors"}, "union": {"parts"}, "complement": {"whole", "closed"},
    }[kind]
    present = set(spec) - {"type", "smooth_dim"}
    if present != allowed:
        raise MalformedExpression(
            f"{kind!r} node takes fields {sorted(allowed)}, got {sorted(present)}"
        )
    if kind == "point":
        node = motivic.Point(**extra)
    elif kind == "gm":
        node = motivic.Gm(**extra)
    elif kind == "affine":
        node = motivic.Affine(n=spec["n"], **extra)
    elif kind == "proj":
        node = motivic.Proj(n=spec["n"], **extra)
    elif kind == "product":
        node = motivic.Product(factors=tuple(parse_space(s) for s in spec["factors"]), **extra)
    elif kind == "union":
        node = motivic.DisjointUnion(parts=tuple(parse_space(s) for s in spec["parts"]), **extra)
    else:
        node = motivic.Complement(
            whole=parse_space(spec["whole"]), closed=parse_space(spec["closed"]), **extra
        )
    motivic.chi_compact(node)  # validates the whole tree
    return node


def parse_scenario(data) -> Scenario:
    try:
        jsonschema.validate(data, _schema("scenario.schema.json"))
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise SchemaViolation(f"{where}: {exc.message}") from None
    try:
        return _build(data)
    except SchemaViolation:
        raise
    except ArithmeticOverflow:
        raise
    except (ProcsmError, KeyError, ValueError) as exc:
        raise SchemaViolation(f"{type(exc).__name__}: {exc}") from None


def _build(data: dict) -> Scenario:
    sc = Scenario(raw=data, outputs=list(data["outputs"]), name=data.get("name", ""))
    if "ambient" in data:
        sc.ambient, sc.chain, _ = parse_ambient(data["ambient"])
    if "arrangement" in data:
        if sc.ambient is None:
            raise SchemaViolation("an arrangement needs an ambient")
        sc.arrangement = parse_arrangement(data["arrangement"], sc.ambient)
    if "scissor" in data:
        sc.scissor = parse_space(data["scissor"])
    if "diagram" in data:
        diag = data["diagram"]
        up_amb, up_chain, _ = parse_ambient(diag["upstairs"]["ambient"])
        down_amb, _, _ = parse_ambient(diag["downstairs"]["ambient"])
        upstairs = parse_arrangement(diag["upstairs"]["arrangement"], up_amb)
        downstairs = parse_arrangement(diag["downstairs"]["arrangement"], down_amb)
        expect = diag.get("expect", "compatible")
        try:
            sc.diagram = CompactificationDiagram(
                upstairs, downstairs, up_chain, claim_same_complement=expect == "compatible"
            )
        except ProcsmError as exc:
            raise SchemaViolation(f"diagram: {exc}") from None
        sc.expect_compatible = expect == "compatible"
    for out in sc.outputs:
        if out in ARRANGEMENT_OUTPUTS and sc.arrangement is None:
            raise SchemaViolation(f"output {out!r} needs an ambient and an arrangement")
        if out in ("chi", "chi_quadratic", "chi_homological") and sc.scissor is None:
            raise SchemaViolation(f"output {out!r} needs a scissor expression")
        if out == "verify_induction" and sc.arrangement.m == 0:
            raise SchemaViolation("verify_induction needs at least one component")
        if out == "compat" and sc.diagram is None:
            raise SchemaViolation("output 'compat' needs a diagram")
    return sc


def load_scenario_text(text: str) -> Scenario:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return parse_scenario(data)


# --- execution -----------------------------------------------------------------


def class_table(x: ChowClass) -> dict:
    return {name: coeff for name, coeff in x.table()}


def gw_table(x: motivic.GWElement) -> dict:
    return {"1": x.a, "<-1>": x.b, "text": str(x), "rank": x.rank, "signature": x.signature}


def _run_output(sc: Scenario, out: str) -> dict:
    arr = sc.arrangement
    entry = {"output": out}
    if out in ("csm_open", "csm_zero", "silred_rhs", "char_class", "log_cotangent"):
        fn = {
            "csm_open": csm_open,
            "csm_zero": csm_zero,
            "silred_rhs": silred_rhs,
            "char_class": char_class_localization,
            "log_cotangent": lambda a: log_cotangent_chern(a).value,
        }[out]
        value = fn(arr)
        entry["class"] = class_table(value)
        entry["degree"] = value.degree()
    elif out == "verify_main":
        r = verify_main_identity(arr)
        entry.update(
            passed=r.passed,
            csm_zero=class_table(r.csm_zero),
            silred_rhs=class_table(r.silred_rhs),
            char_class=class_table(r.char_class),
        )
    elif out == "verify_induction":
        r = verify_silclaim_induction(arr)
        entry["passed"] = r.passed
        entry["levels"] = [
            {
                "m": level.m,
                "passed": level.passed,
                "lhs": class_table(level.lhs),
                "rhs": class_table(level.rhs),
                "closed_form": class_table(level.closed_form),
                "checks": dict(level.checks),
            }
            for level in r.levels
        ]
    elif out == "additivity":
        r = additivity_check(arr)
        entry["passed"] = r.passed
        entry["strata"] = [
            {"stratum": [arr.names[i] for i in subset], "class": class_table(cls)}
            for subset, cls in r.strata
        ]
        entry["total"] = class_table(r.total)
        entry["tangent"] = class_table(r.tangent)
    elif out == "chi":
        entry["value"] = motivic.chi_compact(sc.scissor)
        if arr is not None:
            entry["csm_zero_degree"] = csm_zero(arr).degree()
            entry["passed"] = entry["csm_zero_degree"] == entry["value"]
    elif out == "chi_quadratic":
        entry["value"] = gw_table(motivic.chi_compact_quadratic(sc.scissor))
    elif out == "chi_homological":
        entry["value"] = gw_table(motivic.chi_homological_quadratic(sc.scissor))
        entry["note"] = MODELING_NOTE
    elif out == "compat":
        r = compactification_compat(sc.diagram)
        entry.update(
            expected="compatible" if sc.expect_compatible else "incompatible",
            compatible=r.passed,
            passed=r.passed == sc.expect_compatible,
            csm={
                "upstairs": class_table(r.csm_upstairs),
                "pushed": class_table(r.csm_pushed),
                "downstairs": class_table(r.csm_downstairs),
            },
            char_class={
                "upstairs": class_table(r.char_upstairs),
                "pushed": class_table(r.char_pushed),
                "downstairs": class_table(r.char_downstairs),
            },
        )
    return entry


def run(sc: Scenario, timing: bool = False) -> dict:
    start = time.perf_counter()
    results = []
    for out in sc.outputs:
        try:
            results.append(_run_output(sc, out))
        except ArithmeticOverflow as exc:
            raise ArithmeticOverflow(f"{out}: {exc}") from None
    report = {
        "engine": ENGINE,
        "scenario": sc.raw,
        "results": results,
        "passed": all(r.get("passed", True) for r in results),
    }
    if timing:
        report["duration_s"] = round(time.perf_counter() - start, 6)
    return report


def exit_code(report: dict) -> int:
    return EXIT_OK if report["passed"] else EXIT_FAILED


# --- rendering -------------------------------------------------------------------


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def _table_lines(table: dict, indent: str = "  ") -> list:
    width = max([len("monomial")] + [len(k) for k in table])
    cw = max([len("coefficient")] + [len(str(v)) for v in table.values()])
    lines = [f"{indent}{'monomial':<{width}}  {'coefficient':>{cw}}"]
    lines += [f"{indent}{k:<{width}}  {v:>{cw}}" for k, v in table.items()]
    return lines


def _flag(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def render_text(report: dict) -> str:
    sc = report["scenario"]
    lines = [f"engine: {report['engine']}"]
    if sc.get("name"):
        lines.append(f"scenario: {sc['name']}")
    if sc.get("description"):
        lines.append(f"  {sc['description']}")
    for r in report["results"]:
        out = r["output"]
        lines.append("")
        if "class" in r:
            lines.append(f"{out}  (degree {r['degree']})")
            lines += _table_lines(r["class"])
        elif out == "verify_main":
            lines.append(f"verify_main: {_flag(r['passed'])}")
            for key in ("csm_zero", "silred_rhs", "char_class"):
                lines.append(f"  {key}:")
                lines += _table_lines(r[key], "    ")
        elif out == "verify_induction":
            lines.append(f"verify_induction: {_flag(r['passed'])}")
            for level in r["levels"]:
                failed = [k for k, ok in level["checks"].items() if not ok]
                status = _flag(level["passed"]) + (f" ({', '.join(failed)})" if failed else "")
                lines.append(f"  m'={level['m']}: {status}")
                if failed:
                    lines.append("    lhs:")
                    lines += _table_lines(level["lhs"], "      ")
                    lines.append("    rhs:")
                    lines += _table_lines(level["rhs"], "      ")
        elif out == "additivity":
            lines.append(f"additivity: {_flag(r['passed'])}")
            for s in r["strata"]:
                label = "{" + ", ".join(s["stratum"]) + "}"
                terms = ", ".join(f"{k}: {v}" for k, v in s["class"].items())
                lines.append(f"  {label:<20} {terms}")
            lines.append("  sum of strata:")
            lines += _table_lines(r["total"], "    ")
            lines.append("  c(T):")
            lines += _table_lines(r["tangent"], "    ")
        elif out == "chi":
            text = f"chi: {r['value']}"
            if "csm_zero_degree" in r:
                text += f"  (degree of csm_zero {r['csm_zero_degree']}: {_flag(r['passed'])})"
            lines.append(text)
        elif out in ("chi_quadratic", "chi_homological"):
            v = r["value"]
            lines.append(f"{out}: {v['text']}  (rank {v['rank']}, signature {v['signature']})")
            if "note" in r:
                lines.append(f"  note: {r['note']}")
        elif out == "compat":
            lines.append(
                f"compat: {_flag(r['passed'])}  (expected {r['expected']}, "
                f"found {'compatible' if r['compatible'] else 'incompatible'})"
            )
            for key in ("csm", "char_class"):
                for side in ("upstairs", "pushed", "downstairs"):
                    lines.append(f"  {key} {side}:")
                    lines += _table_lines(r[key][side], "    ")
    if "duration_s" in report:
        lines.append("")
        lines.append(f"duration: {report['duration_s']} s")
    lines.append("")
    lines.append(f"overall: {_flag(report['passed'])}")
    return "\n".join(lines) + "\n"
