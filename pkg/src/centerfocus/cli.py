"""Command-line front end.

Input is a single JSON object::

    {"n": 2, "P1": {"p10": "1", "p01": "0"}, "Pn": {"2,0": "1", "0,2": "-1"}}

Rationals are integers or ``"num/den"`` strings; omitted coefficients are 0.
Exit codes: 0 success, 1 analysis or usage error, 2 self-test failure.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Any, Optional, Sequence

from .center_conditions import (
    SystemSpec,
    composition_factor,
    corollary_conditions,
    is_center,
    moments,
)
from .focal_values import default_order, focal_values
from .numeric_oracle import (
    OracleError,
    default_ladder,
    estimate_focal,
    return_map,
)
from .selftest import run_all
from .trig_algebra import HomogPoly, PiPolynomial

__all__ = [
    "ParseError",
    "ValidationError",
    "AnalysisRequest",
    "parse_input",
    "parse_text",
    "spec_to_json",
    "render",
    "run",
    "format_text",
    "report_schema",
    "main",
]

COMMANDS = ("analyze", "moments", "focal", "compose", "selftest")
NUMERIC_RADII = (0.02, 0.05, 0.1)
_RATIONAL = re.compile(r"\s*[+-]?\d+(\s*/\s*\d+)?\s*")
_EXPONENT = re.compile(r"\s*(\d+)\s*,\s*(\d+)\s*")


class ParseError(ValueError):
    """Input is not well-formed JSON of the expected shape."""


class ValidationError(ValueError):
    """Input is well-formed but describes an invalid system."""


def _rational(value: Any, where: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ValidationError(f"{where}: expected an integer or 'num/den' string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL.fullmatch(value):
        num, _, den = value.partition("/")
        if den and int(den) == 0:
            raise ValidationError(f"{where}: zero denominator in {value!r}")
        return Fraction(int(num), int(den) if den else 1)
    raise ValidationError(f"{where}: malformed rational {value!r}")


def _check_keys(obj: dict, allowed: set, where: str) -> None:
    extra = sorted(set(obj) - allowed)
    if extra:
        raise ValidationError(f"{where}: unknown key(s) {', '.join(map(repr, extra))}")


def parse_text(text: str, source: str = "<input>") -> SystemSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise ParseError(f"{source}: top level must be a JSON object")
    _check_keys(data, {"n", "P1", "Pn"}, source)
    if "n" not in data:
        raise ValidationError(f"{source}: missing field 'n'")
    n = data["n"]
    if isinstance(n, bool) or not isinstance(n, int):
        raise ValidationError(f"{source}: field 'n' must be an integer, got {n!r}")
    if n < 2:
        raise ValidationError(f"{source}: field 'n' must be >= 2, got {n}")

    p1 = data.get("P1", {})
    if not isinstance(p1, dict):
        raise ParseError(f"{source}: field 'P1' must be an object")
    _check_keys(p1, {"p10", "p01"}, f"{source}: P1")
    p10 = _rational(p1.get("p10", 0), f"{source}: P1.p10")
    p01 = _rational(p1.get("p01", 0), f"{source}: P1.p01")

    pn_raw = data.get("Pn", {})
    if not isinstance(pn_raw, dict):
        raise ParseError(f"{source}: field 'Pn' must be an object")
    pn: dict[tuple[int, int], Fraction] = {}
    for key, value in pn_raw.items():
        m = _EXPONENT.fullmatch(key)
        if not m:
            raise ValidationError(f"{source}: Pn key {key!r} is not of the form 'i,j'")
        i, j = int(m.group(1)), int(m.group(2))
        if i + j != n:
            raise ValidationError(f"{source}: Pn key {key!r} has degree {i + j}, expected n={n}")
        if (i, j) in pn:
            raise ValidationError(f"{source}: Pn key {key!r} repeats exponent ({i},{j})")
        pn[(i, j)] = _rational(value, f"{source}: Pn[{key!r}]")
    return SystemSpec(n, p10, p01, HomogPoly(n, pn))


def parse_input(path: str) -> SystemSpec:
    """Read a system from ``path``; ``"-"`` reads stdin."""
    if path == "-":
        return parse_text(sys.stdin.read(), "<stdin>")
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None
    return parse_text(text, path)


def spec_to_json(spec: SystemSpec) -> dict:
    return {
        "n": spec.n,
        "P1": {"p10": str(spec.p10), "p01": str(spec.p01)},
        "Pn": {f"{i},{j}": str(v) for (i, j), v in sorted(spec.Pn.coeffs.items(), reverse=True)},
    }


def render(spec: SystemSpec) -> str:
    """Serialize ``spec`` in the input format."""
    return json.dumps(spec_to_json(spec))


@dataclass
class AnalysisRequest:
    command: str
    input_path: Optional[str] = None
    order: Optional[int] = None
    numeric: bool = False
    tol: float = 1e-9
    format: str = "json"
    ladder: Optional[list[float]] = None
    seed: int = 0

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValidationError(f"unknown command {self.command!r}")
        if self.format not in ("json", "text"):
            raise ValidationError(f"unknown format {self.format!r}")
        if self.order is not None and self.order < 2:
            raise ValidationError("--order must be >= 2")
        if not self.tol > 0:
            raise ValidationError("--tol must be positive")


def _pi(p: PiPolynomial) -> list:
    return p.to_pairs()


def _numeric_section(spec: SystemSpec, req: AnalysisRequest, symbolic_center: bool, order: int) -> dict:
    samples = [return_map(spec, c) for c in NUMERIC_RADII]
    worst = max(abs(s.residual) for s in samples)
    ladder = req.ladder or default_ladder()
    max_order = max(2, min(order, len(ladder) - 2))
    est = estimate_focal(spec, max_order, ladder)
    numeric_center = worst <= req.tol
    return {
        "radii": list(NUMERIC_RADII),
        "residuals": [s.residual for s in samples],
        "max_abs_residual": worst,
        "tol": req.tol,
        "center_confirmed": numeric_center,
        "agrees_with_symbolic": numeric_center == symbolic_center,
        "ladder": list(ladder),
        "focal_estimates": {str(k): v for k, v in enumerate(est, start=2)},
    }


def _analysis(spec: SystemSpec, req: AnalysisRequest, timing: dict) -> dict:
    out: dict[str, Any] = {"system": spec_to_json(spec)}
    cmd = req.command
    order = req.order or default_order(spec.n)

    t = time.perf_counter()
    verdict = is_center(spec)
    out["verdict"] = {
        "kind": verdict.kind.value,
        "text": str(verdict),
        "first_nonzero_moment": verdict.first_nonzero_moment_index,
    }
    if cmd in ("analyze", "moments"):
        out["moments"] = [_pi(m) for m in moments(spec).moments]
        if 2 <= spec.n <= 6:
            out["corollary_conditions"] = [str(v) for v in corollary_conditions(spec)]
    timing["moments"] = time.perf_counter() - t

    if cmd in ("analyze", "focal"):
        t = time.perf_counter()
        fr = focal_values(spec, order)
        out["focal"] = {
            "order": order,
            "values": {str(k): _pi(v) for k, v in fr.values.items()},
            "first_nonzero": fr.first_nonzero,
        }
        timing["focal"] = time.perf_counter() - t

    if cmd in ("analyze", "compose"):
        t = time.perf_counter()
        if spec.degenerate:
            out["composition"] = {"available": False, "reason": "P1 = 0"}
        else:
            fac = composition_factor(spec)
            if fac is None:
                out["composition"] = {"available": False, "reason": "no factorization"}
            else:
                out["composition"] = {
                    "available": True,
                    "powers": list(fac.powers),
                    "coefficients": [str(c) for c in fac.coeffs],
                    "residual_zero": fac.residual.is_zero(),
                }
        timing["composition"] = time.perf_counter() - t

    if req.numeric and cmd in ("analyze", "focal"):
        t = time.perf_counter()
        out["numeric"] = _numeric_section(spec, req, verdict.is_center, order)
        timing["numeric"] = time.perf_counter() - t
    return out


def run(req: AnalysisRequest, spec: SystemSpec | None = None) -> tuple[dict, int]:
    """Execute ``req``; returns the report and the process exit code.

    ``spec`` overrides ``req.input_path`` when given.
    """
    start = time.perf_counter()
    timing: dict[str, float] = {}
    report: dict[str, Any] = {"command": req.command}
    code = 0
    try:
        if req.command == "selftest":
            suites = run_all(req.seed)
            report["selftest"] = {
                s.name: {"passed": s.passed, "failed": s.failed, "ok": s.ok} for s in suites
            }
            report["selftest_ok"] = all(s.ok for s in suites)
            code = 0 if report["selftest_ok"] else 2
        else:
            if spec is None:
                if req.input_path is None:
                    raise ValidationError("--input is required for this command")
                spec = parse_input(req.input_path)
            report.update(_analysis(spec, req, timing))
    except (ParseError, ValidationError, OracleError, ValueError, ArithmeticError) as exc:
        report["error"] = {"type": type(exc).__name__, "message": str(exc)}
        code = 1
    timing["total"] = time.perf_counter() - start
    report["timing"] = timing
    return report, code


def _pi_text(pairs: list) -> str:
    return str(PiPolynomial.from_pairs(pairs))


def format_text(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    if "error" in report:
        lines.append(f"error: {report['error']['type']}: {report['error']['message']}")
    if "system" in report:
        lines.append(f"system: {json.dumps(report['system'])}")
    if "verdict" in report:
        lines.append(f"verdict: {report['verdict']['text']}")
    for j, m in enumerate(report.get("moments", [])):
        lines.append(f"M_{j} = {_pi_text(m)}")
    if "corollary_conditions" in report:
        lines.append("corollary conditions: " + ", ".join(report["corollary_conditions"]))
    if "focal" in report:
        for k, v in report["focal"]["values"].items():
            lines.append(f"V_{k} = {_pi_text(v)}")
    comp = report.get("composition")
    if comp is not None:
        if comp["available"]:
            terms = ", ".join(f"Pbar^{p}: {c}" for p, c in zip(comp["powers"], comp["coefficients"]))
            lines.append(f"composition: Pn = P1 * ({terms}); residual zero: {comp['residual_zero']}")
        else:
            lines.append(f"composition: none ({comp['reason']})")
    num = report.get("numeric")
    if num is not None:
        res = ", ".join(f"c={c:g}: {r:.3e}" for c, r in zip(num["radii"], num["residuals"]))
        lines.append(f"numeric residuals: {res}")
        lines.append(
            f"numeric center: {num['center_confirmed']} (tol {num['tol']:g}); "
            f"agrees with symbolic: {num['agrees_with_symbolic']}"
        )
        for k, v in num["focal_estimates"].items():
            lines.append(f"~V_{k} = {v:.9g}")
    for name, s in report.get("selftest", {}).items():
        lines.append(f"{name}: {s['passed']} passed, {s['failed']} failed")
    if "selftest_ok" in report:
        lines.append("selftest: " + ("PASS" if report["selftest_ok"] else "FAIL"))
    lines.append(f"time: {report['timing']['total']:.3f} s")
    return "\n".join(lines)


def report_schema() -> dict:
    text = resources.files(__package__).joinpath("report_schema.json").read_text(encoding="utf-8")
    return json.loads(text)


class _Parser(argparse.ArgumentParser):
    # usage errors exit 1 so that 2 stays reserved for self-test failures
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _ladder(text: str) -> list[float]:
    try:
        values = [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed ladder {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty ladder")
    return values


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="centerfocus", description="Center/focus analysis of rigid planar systems.",
                allow_abbrev=False)
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", dest="input_path", metavar="PATH", help="system JSON, '-' for stdin")
    p.add_argument("--order", type=int, metavar="K", help="highest focal value (default 2n+2)")
    p.add_argument("--numeric", action="store_true", help="add a floating-point cross-check")
    p.add_argument("--tol", type=float, default=1e-9, help="numeric center tolerance")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--ladder", type=_ladder, metavar="c1,c2,...", help="radii for the focal fit")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        req = AnalysisRequest(
            command=args.command,
            input_path=args.input_path,
            order=args.order,
            numeric=args.numeric,
            tol=args.tol,
            format=args.format,
            ladder=args.ladder,
        )
    except ValidationError as exc:
        print(f"centerfocus: error: {exc}", file=sys.stderr)
        return 1
    report, code = run(req)
    if "error" in report:
        print(f"centerfocus: {report['error']['type']}: {report['error']['message']}", file=sys.stderr)
    if req.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print(format_text(report))
    return code


if __name__ == "__main__":
    raise SystemExit(main())
