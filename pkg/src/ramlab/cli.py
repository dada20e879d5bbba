"""Command-line laboratory: problem files, subcommands, corpus runner.

Problem files are flat key=value blocks (quoted strings or bare integers,
several pairs per line allowed, '#' comments and blank lines skipped):

    base="Z"
    poly="x^2+1"
    prime="5"
    precision=64
    mode="identity"

Function-field problems use base="Fq[t]" q=3 with t-polynomials in poly and
prime.  Exit codes: 0 all verdicts pass, 2 verdict failure, 3 computational
error, 4 parse/validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from . import valgroup
from .arith import (
    GF,
    Poly,
    parse_base_element,
    parse_poly,
    render_poly,
)
from .errors import ParseError, RamlabError, ValidationError
from .globalorder import (
    EquationOrder,
    FunctionFieldBase,
    IntegerBase,
    decompose_prime,
    round2_pmaximal,
)
from .identity import check_identity, problem_label
from .schmidt import build_model, strict_inequality_report

_KNOWN_KEYS = {"base", "q", "poly", "prime", "precision", "mode"}


@dataclass
class ProblemSpec:
    base_tag: str
    q: int | None
    poly_text: str
    prime_text: str
    precision: int = 64
    mode: str = "identity"

    def base(self):
        if self.base_tag == "Z":
            return IntegerBase()
        return FunctionFieldBase(self.q)

    def poly(self) -> Poly:
        base = self.base()
        if self.base_tag == "Z":
            f = parse_poly(self.poly_text, "Z")
            if f.ring.is_field:  # fractional coefficients survived parsing
                raise ValidationError("polynomial coefficients must be integral")
        else:
            f = parse_poly(self.poly_text, base.field)
        if not f.is_monic():
            raise ValidationError("polynomial must be monic")
        return f

    def prime(self):
        base = self.base()
        if self.base_tag == "Z":
            try:
                p = int(self.prime_text)
            except ValueError as exc:
                raise ValidationError(f"bad prime {self.prime_text!r}") from exc
        else:
            p = parse_base_element(self.prime_text, base.field)
        return base.validate_prime(p)


def _tokenize_problem(text: str):
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        col = 1
        for chunk in stripped.split():
            if "=" not in chunk:
                raise ParseError(f"expected key=value, got {chunk!r}",
                                 line=lineno, column=col)
            key, _, value = chunk.partition("=")
            yield key, value, lineno, col
            col += len(chunk) + 1


def parse_problem(text: str) -> ProblemSpec:
    """Parse and validate one problem block; unknown keys are rejected."""
    seen = {}
    for key, value, lineno, col in _tokenize_problem(text):
        if key not in _KNOWN_KEYS:
            raise ValidationError(f"unknown key {key!r} (line {lineno})")
        if key in seen:
            raise ValidationError(f"duplicate key {key!r} (line {lineno})")
        if value.startswith('"'):
            if not value.endswith('"') or len(value) < 2:
                raise ParseError("unterminated string", line=lineno, column=col)
            value = value[1:-1]
        seen[key] = value
    for required in ("base", "poly", "prime"):
        if required not in seen:
            raise ValidationError(f"missing required key {required!r}")
    base_tag = seen["base"]
    if base_tag not in ("Z", "Fq[t]"):
        raise ValidationError(f"unsupported base {base_tag!r}")
    q = None
    if base_tag == "Fq[t]":
        if "q" not in seen:
            raise ValidationError("base Fq[t] needs q")
        q = int(seen["q"])
        if q > 81:
            raise ValidationError("q must be a prime power <= 81")
        GF(q)  # validates that q is a supported prime power
    elif "q" in seen:
        raise ValidationError("q is only meaningful for base Fq[t]")
    precision = int(seen.get("precision", "64"))
    if precision < 4:
        raise ValidationError("precision must be at least 4")
    mode = seen.get("mode", "identity")
    if mode not in ("split", "identity"):
        raise ValidationError(f"unknown mode {mode!r}")
    spec = ProblemSpec(base_tag, q, seen["poly"], seen["prime"], precision, mode)
    spec.poly()
    spec.prime()
    return spec


def render_problem(spec: ProblemSpec) -> str:
    """Canonical rendering; parse(render(parse(text))) is stable."""
    lines = []
    if spec.base_tag == "Z":
        lines.append('base="Z"')
    else:
        lines.append(f'base="Fq[t]" q={spec.q}')
    lines.append(f'poly="{render_poly(spec.poly())}"')
    if spec.base_tag == "Z":
        lines.append(f'prime="{spec.prime()}"')
    else:
        lines.append(f'prime="{render_poly(spec.prime())}"')
    lines.append(f"precision={spec.precision}")
    lines.append(f'mode="{spec.mode}"')
    return "\n".join(lines) + "\n"


@dataclass
class SplitReport:
    problem: str
    degree: int
    lhs: int
    primes: list
    order_basis: list

    def to_json(self):
        return {
            "degree": self.degree,
            "lhs": self.lhs,
            "primes": [pr.to_json() for pr in self.primes],
            "order_basis": list(self.order_basis),
        }

    def to_text(self):
        lines = [f"problem: {self.problem}", f"[L:K] = {self.degree}"]
        lines.append("p-maximal order basis: " + ", ".join(self.order_basis))
        lines.append("primes:")
        for i, pr in enumerate(self.primes):
            lines.append("  " + pr.render(i))
        lines.append(f"sum e*f = {self.lhs}")
        return "\n".join(lines)

    def all_verdicts(self):
        return True


def run(spec: ProblemSpec, seed: int = 0):
    """Run one problem; returns an IdentityReport or SplitReport."""
    base = spec.base()
    f = spec.poly()
    p = spec.prime()
    if spec.mode == "identity":
        return check_identity(f, p, base, spec.precision)
    order = EquationOrder(base, f)
    maximal = round2_pmaximal(order, p)
    primes = decompose_prime(maximal)
    return SplitReport(
        problem=problem_label(f, p, base, spec.precision),
        degree=f.degree,
        lhs=sum(pr.e * pr.f for pr in primes),
        primes=primes,
        order_basis=maximal.basis_strings(),
    )


@dataclass
class CorpusResult:
    results: list  # (filename, status, report_or_message)
    passed: int
    failed: int
    errors: int
    wall_clock: float

    def to_json(self):
        out = []
        for name, status, payload in self.results:
            entry = {"file": name, "status": status}
            if status == "error":
                entry["error"] = payload
            else:
                entry["report"] = payload.to_json()
            out.append(entry)
        return {
            "problems": out,
            "passed": self.passed,
            "failed": self.failed,
            "errors": self.errors,
            "wall_clock_seconds": self.wall_clock,
        }


def run_corpus(directory, seed: int = 0) -> CorpusResult:
    """Run every *.problem file in the directory (sorted by name); per-problem
    errors are collected, never aborting the run."""
    import pathlib

    start = time.monotonic()
    results = []
    passed = failed = errors = 0
    for path in sorted(pathlib.Path(directory).glob("*.problem")):
        try:
            spec = parse_problem(path.read_text())
            report = run(spec, seed)
            if report.all_verdicts():
                passed += 1
                results.append((path.name, "pass", report))
            else:
                failed += 1
                results.append((path.name, "fail", report))
        except RamlabError as exc:
            errors += 1
            results.append((path.name, "error", f"{type(exc).__name__}: {exc}"))
    return CorpusResult(results, passed, failed, errors, time.monotonic() - start)


# ---------------------------------------------------------------------------
# argument handling
# ---------------------------------------------------------------------------


def _parse_group(text: str):
    text = text.strip().replace(" ", "")
    if text == "Z":
        return valgroup.lex_z(1)
    if text.startswith("Z^") and text.endswith("lex"):
        return valgroup.lex_z(int(text[2:-3]))
    if text.startswith("Z+Z*sqrt(") and text.endswith(")"):
        return valgroup.real_embedded(int(text[9:-1]))
    raise ValidationError(f"cannot parse group {text!r} (try Z^2lex or Z+Z*sqrt(2))")


def _parse_matrix(text: str):
    try:
        mat = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad matrix: {exc}") from exc
    if not (isinstance(mat, list) and all(isinstance(r, list) for r in mat)):
        raise ValidationError("matrix must be a list of rows")
    return mat


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="ramlab",
        description="ramification data of primes and completion-side verification",
    )
    ap.add_argument("--json", action="store_true", help="emit JSON instead of text")
    ap.add_argument("--seed", type=int, default=0, help="seed for randomized splitting")
    ap.add_argument("--precision", type=int, default=None,
                    help="override working precision")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("split", help="decompose a prime in the maximal order")
    sp.add_argument("file")
    sp = sub.add_parser("identity", help="check both sides of the identity")
    sp.add_argument("file")
    sp = sub.add_parser("eps", help="initial index of a finite-index subgroup")
    sp.add_argument("--group", required=True)
    sp.add_argument("--subgroup", required=True,
                    help="integer matrix, columns generate, e.g. [[2,0],[0,3]]")
    sp = sub.add_parser("height", help="height of an ordered group")
    sp.add_argument("--group", required=True)
    sp = sub.add_parser("schmidt", help="strict-inequality demonstration")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--precision", type=int, default=30)
    sp = sub.add_parser("corpus", help="run every *.problem file in a directory")
    sp.add_argument("directory")
    return ap


def _emit(args, payload_json, payload_text):
    if args.json:
        print(json.dumps(payload_json, indent=2, sort_keys=True))
    else:
        print(payload_text)


def _cmd_problem(args, mode):
    with open(args.file, encoding="utf-8") as handle:
        spec = parse_problem(handle.read())
    spec.mode = mode
    if args.precision is not None:
        spec.precision = args.precision
    report = run(spec, args.seed)
    _emit(args, report.to_json(), report.to_text())
    return 0 if report.all_verdicts() else 2


def _cmd_eps(args):
    group = _parse_group(args.group)
    sub = valgroup.subgroup(group, _parse_matrix(args.subgroup))
    res = valgroup.initial_index(group, sub)
    payload = {
        "epsilon": res.epsilon,
        "least_positive": list(res.least_positive) if res.least_positive else None,
        "index": res.index,
    }
    text = (
        f"epsilon = {res.epsilon}\n"
        f"least positive element: {res.least_positive}\n"
        f"index [G:H] = {res.index}"
    )
    _emit(args, payload, text)
    return 0


def _cmd_height(args):
    group = _parse_group(args.group)
    h = valgroup.height(group)
    _emit(args, {"group": repr(group), "height": h}, f"height({group!r}) = {h}")
    return 0


def _cmd_schmidt(args):
    precision = args.precision
    model = build_model(args.p, precision)
    report = strict_inequality_report(model)
    _emit(args, report.to_json(), report.to_text())
    expected = (
        report.eq11_holds
        and report.inequality_holds
        and not report.classical_holds
    )
    return 0 if expected else 2


def _cmd_corpus(args):
    result = run_corpus(args.directory, args.seed)
    if args.json:
        print(json.dumps(result.to_json(), indent=2, sort_keys=True))
    else:
        for name, status, payload in result.results:
            print(f"[{status.upper():5}] {name}")
            if status == "error":
                print(f"        {payload}")
        print(
            f"corpus: {result.passed} passed, {result.failed} failed, "
            f"{result.errors} errors in {result.wall_clock:.2f}s"
        )
    if result.errors:
        return 3
    if result.failed:
        return 2
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "split":
            return _cmd_problem(args, "split")
        if args.command == "identity":
            return _cmd_problem(args, "identity")
        if args.command == "eps":
            return _cmd_eps(args)
        if args.command == "height":
            return _cmd_height(args)
        if args.command == "schmidt":
            return _cmd_schmidt(args)
        if args.command == "corpus":
            return _cmd_corpus(args)
        raise ValidationError(f"unknown command {args.command!r}")
    except (ParseError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except RamlabError as exc:
        print(f"computational error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
