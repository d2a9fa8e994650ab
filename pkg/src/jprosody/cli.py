"""Command-line entry point: ``jprosody {annotate,contour,experiment,check}``.

Exit codes: 0 success, 1 usage, 2 parse/validation, 3 I/O, 4 pattern check
failed.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .annotate import Format, emit, emit_proposed, parse_proposed
from .errors import ParseError, ProsodyError
from .experiment import prosodic_structure, run_experiment
from .f0 import F0Params, synthesize
from .measure import rows_to_json
from .spmh import project
from .tree import parse_trees
from .wellformedness import ConstraintConfig, apply_all, phrase_status, satisfied

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_IO, EXIT_PATTERN = 0, 1, 2, 3, 4

_CONSTRAINT_KEYS = {"enable_boost_rephrasing", "boost_min_run"}


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    params: F0Params = field(default_factory=F0Params)
    constraints: ConstraintConfig = field(default_factory=ConstraintConfig)

    @classmethod
    def load(cls, path: str | None, no_boost: bool = False) -> "RunConfig":
        raw: dict = {}
        if path is not None:
            try:
                text = Path(path).read_text(encoding="utf-8")
            except OSError as exc:
                raise CliError(EXIT_IO, f"{path}: cannot read params file: {exc.strerror or exc}") from None
            try:
                raw = json.loads(text)
            except json.JSONDecodeError as exc:
                raise CliError(EXIT_INVALID, f"{path}:{exc.lineno}: invalid JSON: {exc.msg}") from None
            if not isinstance(raw, dict):
                raise CliError(EXIT_INVALID, f"{path}: params file must hold a JSON object")
            unknown = set(raw) - F0Params.field_names() - _CONSTRAINT_KEYS
            if unknown:
                raise CliError(EXIT_INVALID, f"{path}: unknown config keys: {', '.join(sorted(unknown))}")
        try:
            params = F0Params(**{k: v for k, v in raw.items() if k in F0Params.field_names()})
            cons = ConstraintConfig(**{k: v for k, v in raw.items() if k in _CONSTRAINT_KEYS})
        except (TypeError, ValueError) as exc:
            raise CliError(EXIT_INVALID, f"{path}: {exc}") from None
        if no_boost:
            cons = ConstraintConfig(False, cons.boost_min_run)
        return cls(params, cons)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(EXIT_IO, f"{path}: {exc.strerror or exc}") from None


def _diagnose(path: str, exc: ProsodyError, line: int | None = None) -> CliError:
    where = path
    if isinstance(exc, ParseError) and exc.line is not None:
        where = f"{path}:{exc.line}" + (f":{exc.col}" if exc.col else "")
        msg = exc.message
    else:
        if line is not None:
            where = f"{path}:{line}"
        msg = str(exc)
    return CliError(EXIT_INVALID, f"{where}: {type(exc).__name__}: {msg}")


def _load_trees(path: str):
    text = _read(path)
    try:
        return parse_trees(text)
    except ProsodyError as exc:
        raise _diagnose(path, exc) from None


def cmd_annotate(args) -> int:
    cfg = RunConfig.load(args.params, args.no_boost)
    for path in args.inputs:
        for line, tree in _load_trees(path):
            try:
                ptree = prosodic_structure(tree, cfg.constraints) if args.format == "proposed" else None
                print(emit(args.format, tree, ptree).text)
            except ProsodyError as exc:
                raise _diagnose(path, exc, line) from None
    return EXIT_OK


def _write(path: Path, text: str):
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise CliError(EXIT_IO, f"{path}: {exc.strerror or exc}") from None


def cmd_contour(args) -> int:
    cfg = RunConfig.load(args.params, args.no_boost)
    trees = _load_trees(args.input)
    contours = []
    for line, tree in trees:
        try:
            contours.append(synthesize(prosodic_structure(tree, cfg.constraints), cfg.params))
        except ProsodyError as exc:
            raise _diagnose(args.input, exc, line) from None
    if args.out is None:
        docs = [c.to_dict() for c in contours]
        print(json.dumps(docs[0] if len(docs) == 1 else docs, indent=1))
        return EXIT_OK
    out = Path(args.out)
    as_csv = out.suffix.lower() == ".csv"
    for k, c in enumerate(contours, 1):
        target = out if len(contours) == 1 else out.with_name(f"{out.stem}_{k}{out.suffix}")
        _write(target, c.to_csv() if as_csv else c.to_json() + "\n")
    return EXIT_OK


def cmd_experiment(args) -> int:
    cfg = RunConfig.load(args.params, args.no_boost)
    report = run_experiment(cfg.params, cfg.constraints,
                            model="proposed" if cfg.constraints.enable_boost_rephrasing else "proposed-noboost")
    if args.json:
        print(json.dumps({"initial_lowering": json.loads(rows_to_json(report.lowering)),
                          "rhythmic_boost": json.loads(rows_to_json(report.boost)),
                          "all_yes": report.all_yes}, indent=1))
    else:
        print(report.to_text())
    return EXIT_OK if report.all_yes else EXIT_PATTERN


def _status_line(ptree) -> str:
    parts = []
    for s in phrase_status(ptree):
        problems = [name for name, ok in (("culminativity", s.culminative), ("right-edge", s.right_edge)) if not ok]
        parts.append(f"[{s.pattern}] " + (f"violation({', '.join(problems)})" if problems else "ok"))
    return " ".join(parts)


def _check_inputs(path: str):
    """Tree files are projected first; proposed-format lines are checked as written."""
    text = _read(path)
    body = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith(";")]
    if body and body[0].lstrip().startswith("{"):
        out = []
        for no, ln in enumerate(text.splitlines(), 1):
            if ln.strip() and not ln.lstrip().startswith(";"):
                try:
                    out.append((no, parse_proposed(ln)))
                except ParseError as exc:
                    exc.line = no
                    raise _diagnose(path, exc) from None
        return out
    return [(line, project(tree)) for line, tree in _load_trees(path)]


def cmd_check(args) -> int:
    cfg = RunConfig.load(args.params, args.no_boost)
    ok = True
    for line, before in _check_inputs(args.input):
        after = apply_all(before, cfg.constraints)
        good_before, good_after = satisfied(before), satisfied(after)
        ok = ok and good_after
        print(f"{args.input}:{line}: before: {'ok' if good_before else 'violation'}; "
              f"after: {'ok' if good_after else 'violation'}")
        print(f"  before  {_status_line(before)}")
        print(f"  after   {_status_line(after)}")
        print(f"  output  {emit_proposed(after).text}")
    return EXIT_OK if ok else EXIT_PATTERN


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="jprosody", description="Prosodic phrasing and F0 rendering for Tokyo Japanese trees.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--params", help="JSON file with F0Params / ConstraintConfig overrides")
        sp.add_argument("--no-boost", action="store_true", help="disable rhythmic-boost re-phrasing")

    a = sub.add_parser("annotate", help="print one annotation line per sentence")
    a.add_argument("inputs", nargs="+")
    a.add_argument("--format", choices=[f.value for f in Format], default="proposed")
    common(a)
    a.set_defaults(func=cmd_annotate)

    c = sub.add_parser("contour", help="render F0 contours")
    c.add_argument("input")
    c.add_argument("--out", help="output file; .csv for CSV, JSON otherwise (default: JSON on stdout)")
    common(c)
    c.set_defaults(func=cmd_contour)

    e = sub.add_parser("experiment", help="run the initial-lowering and rhythmic-boost experiments")
    e.add_argument("--json", action="store_true", help="print the report as JSON")
    common(e)
    e.set_defaults(func=cmd_experiment)

    k = sub.add_parser("check", help="report constraint status before and after rewriting")
    k.add_argument("input")
    common(k)
    k.set_defaults(func=cmd_check)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"jprosody: {exc}", file=sys.stderr)
        return exc.code
    except ProsodyError as exc:
        print(f"jprosody: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
