"""Command-line front end.

Every command prints one report. JSON reports carry ``command``,
``input_digest`` (sha256 of the canonical fan JSON) and ``warnings`` next
to the command's own keys. Exit status: 0 success, 1 error, 2 when a
standing assumption of the comparison fails.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import re
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import intlin
from .coxring import MONOMIAL_CHART_NOTE, cox_model, relevant_squarefree_complements, twist_line_bundle_locus
from .fan import (
    Fan,
    FanValidationError,
    builtin_fan,
    fan_report,
    product,
    star_subdivision,
    validate_fan,
)
from .projcmp import classify_surface, compare_fan, projmh_atlas, tproj_atlas
from .suppfun import AssumptionViolation, enough_cartier, picard, ray_functions, support_function_lattice

EXIT_OK, EXIT_ERROR, EXIT_ASSUMPTION = 0, 1, 2
SCHEMA_PATH = Path(__file__).with_name("report.schema.json")


class CLIError(Exception):
    def __init__(self, message: str, errors: Sequence[str] = ()):
        super().__init__(message)
        self.errors = list(errors)


class AssumptionFailure(Exception):
    """Carries the partial payload of a report whose assumptions fail."""

    def __init__(self, payload: dict):
        super().__init__(payload.get("verdict", "assumption violated"))
        self.payload = payload


# ---------------------------------------------------------------------------
# fan input


def parse_builtin(text: str) -> Fan:
    """``p2``, ``p:3``, ``hirzebruch:2``, ``h:1``, ``wps:1,1,2``, ``displaced-cube``, ``A*B``."""
    text = text.strip()
    if "*" in text:
        parts = text.split("*")
        fan = parse_builtin(parts[0])
        for p in parts[1:]:
            fan = product(fan, parse_builtin(p))
        return fan
    m = re.fullmatch(r"p(\d+)", text, re.IGNORECASE)
    if m:
        return builtin_fan("p", int(m.group(1)))
    name, _, rest = text.partition(":")
    try:
        params = [int(x) for x in rest.split(",")] if rest else []
    except ValueError:
        raise CLIError(f"builtin {text!r}: parameters must be integers") from None
    try:
        return builtin_fan(name, *params)
    except ValueError as exc:
        raise CLIError(f"builtin {text!r}: {exc}") from None


def parse_fan_text(text: str, source: str = "<input>") -> Fan:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CLIError(f"{source}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise CLIError(f"{source}: top level must be an object")
    missing = [k for k in ("lattice_rank", "rays", "cones") if k not in data]
    if missing:
        raise CLIError(f"{source}: missing field(s) {', '.join(missing)}")
    for key in ("rays", "cones"):
        if not isinstance(data[key], list):
            raise CLIError(f"{source}: field '{key}' must be a list")
    if "name" in data and not isinstance(data["name"], (str, type(None))):
        raise CLIError(f"{source}: field 'name' must be a string")
    try:
        return validate_fan(data)
    except FanValidationError as exc:
        raise CLIError(f"{source}: invalid fan", [f"field {_field_of(e)}: {e}" for e in exc.errors]) from None


def _field_of(err: str) -> str:
    m = re.match(r"(ray|cone)s? (\d+)", err)
    if m:
        return f"'{m.group(1)}s[{m.group(2)}]'"
    if err.startswith("lattice_rank"):
        return "'lattice_rank'"
    return "'cones'"


def load_fan(args) -> Fan:
    if args.builtin and args.fan:
        raise CLIError("give either --builtin or --fan, not both")
    if args.builtin:
        return parse_builtin(args.builtin)
    if args.fan:
        try:
            text = Path(args.fan).read_text()
        except OSError as exc:
            raise CLIError(f"cannot read {args.fan}: {exc.strerror}") from None
        return parse_fan_text(text, args.fan)
    raise CLIError("no fan given: use --builtin NAME or --fan FILE")


def canonical_fan_json(fan: Fan) -> str:
    d = fan.to_dict()
    d.pop("name", None)
    return json.dumps(d, sort_keys=True, separators=(",", ":"))


def input_digest(fan: Fan) -> str:
    return hashlib.sha256(canonical_fan_json(fan).encode()).hexdigest()


def _int_list(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise CLIError(f"{what} must be a comma-separated list of integers, got {text!r}") from None


# ---------------------------------------------------------------------------
# payloads


def _model(fan: Fan, args):
    pic_basis = None
    if getattr(args, "pic_basis", None):
        try:
            pic_basis = json.loads(args.pic_basis)
        except json.JSONDecodeError as exc:
            raise CLIError(f"--pic-basis: invalid JSON at column {exc.colno}: {exc.msg}") from None
        if not (isinstance(pic_basis, list) and len(pic_basis) == fan.n_rays
                and all(isinstance(r, list) and all(isinstance(x, int) for x in r) for r in pic_basis)):
            raise CLIError(f"--pic-basis must list one integer degree vector per ray ({fan.n_rays})")
    try:
        return cox_model(fan, pic_basis=pic_basis)
    except AssumptionViolation as exc:
        raise AssumptionFailure({"verdict": "assumption violated", "violations": exc.violations}) from None
    except ValueError as exc:
        raise CLIError(str(exc)) from None


def _assumption_flags(fan: Fan) -> dict:
    flags = {"support_spans": fan.support_spans, "simplicial": fan.is_simplicial,
             "pic_free": None, "enough_cartier": None}
    if fan.support_spans:
        sf = support_function_lattice(fan)
        flags["pic_free"] = picard(sf).is_free
        flags["enough_cartier"] = enough_cartier(sf).holds
    return flags


def cmd_validate(fan, args):
    return {"valid": True, "fan": fan.to_dict(), "n_cones": len(fan.cones)}, []


def cmd_info(fan, args):
    rep = fan_report(fan).to_dict()
    rep["assumptions"] = _assumption_flags(fan)
    rep["fan"] = fan.to_dict()
    return rep, []


def cmd_picard(fan, args):
    if not fan.support_spans:
        raise AssumptionFailure({"verdict": "assumption violated",
                                 "violations": ["support of the fan does not span N_R"]})
    sf = support_function_lattice(fan)
    pic = picard(sf)
    out = {
        "sf_rank": sf.rank,
        "sf_basis": [list(r) for r in sf.basis],
        "pic_rank": pic.free_rank,
        "pic_torsion": list(pic.torsion),
        "pic_basis": [list(r) for r in pic.free_projection],
        "div_matrix": [list(r) for r in pic.div_matrix],
    }
    warnings = []
    if pic.is_free:
        try:
            rfs = ray_functions(sf)
            out["degrees"] = [list(pic.degree_of_coordinates(rf.coordinates)) for rf in rfs]
        except ValueError as exc:
            warnings.append(str(exc))
    return out, warnings


def cmd_coxring(fan, args):
    model = _model(fan, args)
    return {
        "n_vars": model.n_vars,
        "pic_rank": model.pic_rank,
        "pic_basis": [list(r) for r in model.pic.free_projection],
        "degrees": [list(d) for d in model.degrees],
        "dilations": list(model.dilations),
        "model_kind": model.model_kind,
        "extra_irreducibles": [list(v) for v in model.extra_irreducibles],
    }, list(model.warnings)


def cmd_charts(fan, args):
    model = _model(fan, args)
    t = tproj_atlas(model)
    p = projmh_atlas(model)
    n = model.n_vars
    return {
        "pic_basis": [list(r) for r in model.pic.free_projection],
        "degrees": [list(d) for d in model.degrees],
        "tproj_atlas": [t[k].to_dict(n) for k in t],
        "projmh_atlas": [dict(p[k].to_dict(n), in_tproj=k in t) for k in p],
    }, list(model.warnings) + [MONOMIAL_CHART_NOTE]


def _self_check(fan: Fan, seed: int, trials: int = 3) -> dict:
    """Recompute the verdict after random ray reorderings and changes of basis."""
    rng = random.Random(seed)
    base = compare_fan(fan).is_isomorphism
    agree = 0
    for _ in range(trials):
        perm = list(range(fan.n_rays))
        rng.shuffle(perm)
        G = _random_unimodular(rng, fan.lattice_rank)
        other = fan.permuted(perm).transformed(G)
        agree += compare_fan(other).is_isomorphism == base
    return {"seed": seed, "trials": trials, "agree": agree == trials}


def _random_unimodular(rng: random.Random, n: int):
    G = [list(r) for r in intlin.identity(n)]
    for _ in range(2 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            continue
        c = rng.randint(-2, 2)
        G[i] = [a + c * b for a, b in zip(G[i], G[j])]
    return G


def cmd_compare(fan, args):
    rep = compare_fan(fan)
    out = rep.to_dict()
    out["missing_cone_rays"] = [[list(fan.rays[i]) for i in c] for c in rep.missing_cones]
    if args.seed is not None:
        out["self_check"] = _self_check(fan, args.seed)
    if rep.is_isomorphism is None:
        raise AssumptionFailure(out)
    return out, [n for n in rep.notes if n != MONOMIAL_CHART_NOTE and "not smooth" in n]


def cmd_classify_surface(fan, args):
    if fan.lattice_rank != 2 or not fan.is_smooth:
        raise AssumptionFailure({"verdict": "assumption violated",
                                 "violations": ["classify-surface needs a complete smooth fan in a rank-2 lattice"]})
    try:
        cls = classify_surface(fan)
    except ValueError as exc:
        raise AssumptionFailure({"verdict": "assumption violated", "violations": [str(exc)]}) from None
    out = cls.to_dict()
    out["verdict"] = "isomorphism" if cls.is_isomorphism else "not an isomorphism"
    if args.seed is not None:
        out["self_check"] = _self_check(fan, args.seed)
    return out, []


def cmd_linebundle(fan, args):
    model = _model(fan, args)
    d = _int_list(args.twist, "--twist")
    if len(d) != model.pic_rank:
        raise CLIError(f"--twist needs {model.pic_rank} coordinates in the printed Pic basis, got {len(d)}")
    keys = relevant_squarefree_complements(model)
    if args.chart is not None:
        S = tuple(sorted(_int_list(args.chart, "--chart")))
        if S not in keys:
            raise CLIError(f"--chart {list(S)} is not the complement of a relevant square-free monomial")
        keys = [S]
    p = projmh_atlas(model)
    locus = twist_line_bundle_locus(model, d, charts=[p[k] for k in keys])
    n = model.n_vars
    rows = [dict(p[k].to_dict(n), in_tproj=k in model.fan.cone_set, line_bundle=locus.flags[k]) for k in keys]
    return {
        "twist": list(d),
        "pic_basis": [list(r) for r in model.pic.free_projection],
        "degrees": [list(x) for x in model.degrees],
        "charts": rows,
        "tproj_all": locus.tproj_all,
        "projmh_all": locus.projmh_all,
    }, list(model.warnings)


def cmd_blowup(fan, args):
    cone = _int_list(args.cone, "--cone")
    try:
        new = star_subdivision(fan, cone)
    except ValueError as exc:
        raise CLIError(str(exc)) from None
    new = validate_fan(new)
    text = json.dumps(new.to_dict(), sort_keys=True, indent=2) + "\n"
    try:
        Path(args.out).write_text(text)
    except OSError as exc:
        raise CLIError(f"cannot write {args.out}: {exc.strerror}") from None
    return {"cone": sorted(cone), "new_ray": list(new.rays[-1]), "out": str(args.out), "fan": new.to_dict()}, []


COMMANDS = {
    "validate": (cmd_validate, "check the fan axioms"),
    "info": (cmd_info, "fan report and assumption flags"),
    "picard": (cmd_picard, "support-function lattice and Pic"),
    "coxring": (cmd_coxring, "variable degrees, dilations and model kind"),
    "charts": (cmd_charts, "both chart atlases"),
    "compare": (cmd_compare, "decide whether the open embedding is an isomorphism"),
    "classify-surface": (cmd_classify_surface, "classification of a complete smooth surface fan"),
    "linebundle": (cmd_linebundle, "where a twist is a line bundle"),
    "blowup": (cmd_blowup, "star subdivision of a 2-cone, written to a file"),
}


# ---------------------------------------------------------------------------
# output


def render_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def _fmt(v) -> str:
    return json.dumps(v, sort_keys=True) if isinstance(v, (list, dict)) else (
        "null" if v is None else str(v).lower() if isinstance(v, bool) else str(v))


def render_text(report: dict) -> str:
    lines = []
    if "verdict" in report:
        lines.append(f"verdict: {report['verdict']}")
    for key in ("command", "input_digest"):
        lines.append(f"{key}: {_fmt(report[key])}")
    for key in sorted(report):
        if key in ("verdict", "command", "input_digest", "warnings", "charts", "errors"):
            continue
        val = report[key]
        if isinstance(val, list) and val and all(isinstance(x, dict) for x in val):
            lines.append(f"{key}:")
            lines.extend("  " + _fmt(x) for x in val)
        else:
            lines.append(f"{key}: {_fmt(val)}")
    if "charts" in report:
        lines.append("charts:")
        lines.append("  complement  monomial      index  in_tproj  line_bundle")
        for r in report["charts"]:
            lines.append(f"  {_fmt(r['complement']):<10}  {r['monomial']:<12}  {r['index']:<5}  "
                         f"{_fmt(r['in_tproj']):<8}  {_fmt(r['line_bundle'])}")
    for e in report.get("errors", []):
        lines.append(f"error: {e}")
    for w in report.get("warnings", []):
        lines.append(f"warning: {w}")
    return "\n".join(lines) + "\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("fan input")
    src.add_argument("--builtin", metavar="NAME",
                     help="p2, p3, p:N, hirzebruch:R, wps:1,1,2, displaced-cube, or products like p1*p1")
    src.add_argument("--fan", metavar="FILE", help="fan JSON file")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=None,
                        help="run randomized invariance checks (compare, classify-surface)")

    parser = _Parser(prog="toricproj", description="Compare the toric and multihomogeneous Proj of a fan.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True
    for name, (_, help_) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_, description=help_)
        if name in ("coxring", "charts", "linebundle"):
            p.add_argument("--pic-basis", metavar="JSON",
                           help="pin the Pic basis by giving each variable's degree, e.g. [[1,0],[-2,1],[1,0],[0,1]]")
        if name == "linebundle":
            p.add_argument("--twist", required=True, metavar="D", help="degree in the printed Pic basis, e.g. 1,0")
            p.add_argument("--chart", metavar="S", help="restrict to the chart with complement S, e.g. 0,2")
        if name == "blowup":
            p.add_argument("--cone", required=True, metavar="I,J")
            p.add_argument("--out", required=True, metavar="FILE")
    return parser


def run(argv: Optional[Sequence[str]] = None) -> tuple[int, str]:
    """Parse ``argv``, run the command and return ``(exit_code, rendered_report)``."""
    args = build_parser().parse_args(argv)
    report = {"command": args.command, "input_digest": None, "warnings": []}
    code = EXIT_OK
    try:
        fan = load_fan(args)
        report["input_digest"] = input_digest(fan)
        payload, warnings = COMMANDS[args.command][0](fan, args)
        report.update(payload)
        report["warnings"] = list(warnings)
    except AssumptionFailure as exc:
        report.update(exc.payload)
        code = EXIT_ASSUMPTION
    except CLIError as exc:
        report["error"] = str(exc)
        report["errors"] = exc.errors or [str(exc)]
        code = EXIT_ERROR
    render = render_json if args.format == "json" else render_text
    return code, render(report)


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, out = run(argv)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
