"""Command-line interface.

Matroids are described by JSON documents with a ``kind`` tag::

    {"kind": "uniform", "r": 2, "n": 3}
    {"kind": "graph", "vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]]}
    {"kind": "bases", "n": 2, "bases": [[0], [1]]}
    {"kind": "bases", "n": 4, "labels": [1, 3], "bases": [[1], [3]]}
    {"kind": "direct_sum", "parts": [<spec>, <spec>, ...]}

Exit status is 0 on success, 1 when a verification fails and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import hopf, tutte, verify
from .matroid import (
    Matroid,
    MatroidError,
    SizeCapError,
    direct_sum,
    elements,
    from_bases,
    graphic,
    to_mask,
    uniform,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class SpecError(ValueError):
    pass


def _field(doc: dict, key: str, kind: type, where: str):
    if key not in doc:
        raise SpecError(f"{where}: missing field {key!r}")
    value = doc[key]
    if kind is int and (not isinstance(value, int) or isinstance(value, bool)):
        raise SpecError(f"{where}: field {key!r} must be an integer")
    if kind is list and not isinstance(value, list):
        raise SpecError(f"{where}: field {key!r} must be a list")
    return value


def build_matroid(doc: Any, where: str = "spec") -> Matroid:
    """Matroid from an already-decoded spec document."""
    if not isinstance(doc, dict):
        raise SpecError(f"{where}: expected an object with a 'kind' field")
    kind = doc.get("kind")
    try:
        if kind == "uniform":
            return uniform(_field(doc, "r", int, where), _field(doc, "n", int, where))
        if kind == "graph":
            edges = _field(doc, "edges", list, where)
            if not all(isinstance(e, list) and len(e) == 2 for e in edges):
                raise SpecError(f"{where}: every edge must be a [u, v] pair")
            return graphic(_field(doc, "vertices", int, where), [tuple(e) for e in edges])
        if kind == "bases":
            n = _field(doc, "n", int, where)
            bases = _field(doc, "bases", list, where)
            if not all(isinstance(b, list) for b in bases):
                raise SpecError(f"{where}: every basis must be a list of elements")
            labels = doc.get("labels")
            if labels is not None and not isinstance(labels, list):
                raise SpecError(f"{where}: field 'labels' must be a list")
            return from_bases(n, bases, labels)
        if kind == "direct_sum":
            parts = _field(doc, "parts", list, where)
            return direct_sum(*(build_matroid(p, f"{where}.parts[{i}]") for i, p in enumerate(parts)))
    except MatroidError as exc:
        raise SpecError(f"{where}: {exc}") from exc
    raise SpecError(f"{where}: unknown kind {kind!r}; expected uniform, graph, bases or direct_sum")


def parse_spec(text: str) -> Matroid:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return build_matroid(doc)


def render_spec(m: Matroid) -> dict:
    """Spec document that parses back to ``m`` (labels included when sparse)."""
    labels = list(m.labels)
    n = labels[-1] + 1 if labels else 0
    doc: dict[str, Any] = {"kind": "bases", "n": n}
    if labels != list(range(n)):
        doc["labels"] = labels
    doc["bases"] = sorted(elements(b) for b in m.bases)
    return doc


def render_matroid(m: Matroid) -> str:
    return f"labels={list(m.labels)} bases={sorted(elements(b) for b in m.bases)}"


def _parse_assignment(text: str, allowed: Sequence[str]) -> dict[str, Fraction]:
    values = {}
    for item in filter(None, (p.strip() for p in text.split(","))):
        name, sep, raw = item.partition("=")
        name = name.strip()
        if not sep:
            raise SpecError(f"--eval expects name=value pairs, got {item!r}")
        if name not in allowed:
            raise SpecError(f"unknown variable {name!r} in --eval; allowed: {', '.join(allowed)}")
        try:
            values[name] = Fraction(raw.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise SpecError(f"bad value for {name}: {raw!r}") from exc
    return values


def _parse_elements(text: str) -> int:
    try:
        return to_mask(int(t) for t in text.split(",") if t.strip())
    except ValueError as exc:
        raise SpecError(f"--elements expects comma-separated labels, got {text!r}") from exc


def _load_input(args) -> Matroid:
    if args.matroid is not None:
        text = sys.stdin.read() if args.matroid == "-" else args.matroid
    elif args.spec is not None:
        text = _read(args.spec)
    else:
        raise SpecError("no matroid given; pass a JSON spec argument or --spec FILE")
    return parse_spec(text)


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc.strerror}") from exc


def _emit(args, text: str, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# -- commands -----------------------------------------------------------------


def cmd_tutte(args) -> int:
    m = _load_input(args)
    t = tutte.tutte_rank_sum(m)
    payload = {"command": "tutte", "polynomial": str(t)}
    if args.eval:
        value = t.subs(_parse_assignment(args.eval, ("x", "y")))
        payload["value"] = str(value)
        _emit(args, str(value), payload)
    else:
        _emit(args, str(t), payload)
    return EXIT_OK


def cmd_q(args) -> int:
    m = _load_input(args)
    if args.check:
        ok = tutte.q_universal(m) == tutte.recipe_closed_form(m)
        _emit(args, "OK" if ok else "MISMATCH", {"command": "q", "agree": ok})
        return EXIT_OK if ok else EXIT_FAIL
    q = tutte.recipe_closed_form(m) if args.closed_form else tutte.q_universal(m)
    _emit(args, str(q), {"command": "q", "polynomial": str(q)})
    return EXIT_OK


def cmd_coproduct(args) -> int:
    m = _load_input(args)
    terms = hopf.coproduct(m).terms
    lines = [f"{c} | {render_matroid(l)} | {render_matroid(r)}" for c, l, r in terms]
    payload = {
        "command": "coproduct",
        "terms": [
            {"coefficient": str(c), "left": render_spec(l), "right": render_spec(r)}
            for c, l, r in terms
        ],
    }
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def _emit_matroid(args, name: str, m: Matroid) -> int:
    doc = render_spec(m)
    _emit(args, json.dumps(doc), {"command": name, "matroid": doc})
    return EXIT_OK


def cmd_dual(args) -> int:
    return _emit_matroid(args, "dual", _load_input(args).dual())


def _cmd_minor(args) -> int:
    m = _load_input(args)
    t = _parse_elements(args.elements)
    if t & ~m.ground:
        raise SpecError(f"elements {elements(t & ~m.ground)} are not in the ground set {list(m.labels)}")
    minor = m.delete(t) if args.command == "delete" else m.contract(t)
    return _emit_matroid(args, args.command, minor)


def _extra_cases(path: str | None) -> dict[str, Matroid]:
    if path is None:
        return {}
    try:
        doc = json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise SpecError(f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    docs = doc if isinstance(doc, list) else [doc]
    return {f"user[{i}]": build_matroid(d, f"spec[{i}]") for i, d in enumerate(docs)}


def cmd_verify(args) -> int:
    suites = list(verify.SUITES) if args.suite == "all" else [args.suite]
    max_n = 6 if args.max_n is None else args.max_n
    if max_n < 0:
        raise SpecError("--max-n must be non-negative")
    outcomes = verify.run(suites, max_n, _extra_cases(args.spec))
    failed = [o for o in outcomes if not o.passed]
    if args.json:
        print(json.dumps({
            "command": "verify",
            "suites": suites,
            "max_n": max_n,
            "identities": [
                {"identity": k, "passed": p, "failed": f} for k, p, f in verify.summarize(outcomes)
            ],
            "failures": [{"identity": o.identity, "case": o.case, "detail": o.detail} for o in failed],
        }, sort_keys=True))
    else:
        for identity, p, f in verify.summarize(outcomes):
            print(f"{'PASS' if not f else 'FAIL'}  {identity}: {p} passed, {f} failed")
        for o in failed:
            print(f"  failed: {o.identity} on {o.case}" + (f" ({o.detail})" if o.detail else ""))
        print(f"{len(outcomes) - len(failed)}/{len(outcomes)} checks passed")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec", metavar="FILE", default=argparse.SUPPRESS,
                        help="read the matroid (or extra verify cases) from FILE")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--max-n", type=int, default=argparse.SUPPRESS,
                        help="largest corpus ground set for verify (default 6)")

    parser = argparse.ArgumentParser(
        prog="matroidhopf", parents=[common],
        description="Tutte polynomials and matroid Hopf algebra characters, in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help: str, takes_matroid: bool = True):
        p = sub.add_parser(name, parents=[common], help=help)
        if takes_matroid:
            p.add_argument("matroid", nargs="?", help="JSON spec text, or - for stdin")
        p.set_defaults(func=fn)
        return p

    add("tutte", cmd_tutte, "Tutte polynomial T(x, y)").add_argument(
        "--eval", metavar="x=..,y=..", help="substitute exact rational values")
    q = add("q", cmd_q, "four-variable polynomial Q(x, y, a, b)")
    q.add_argument("--closed-form", action="store_true", help="use the closed form in T")
    q.add_argument("--check", action="store_true", help="print OK if both routes agree")
    add("coproduct", cmd_coproduct, "terms M|A (x) M/A of the coproduct")
    add("dual", cmd_dual, "dual matroid")
    add("delete", _cmd_minor, "delete elements").add_argument("--elements", required=True)
    add("contract", _cmd_minor, "contract elements").add_argument("--elements", required=True)
    v = add("verify", cmd_verify, "run identity suites over the built-in corpus", takes_matroid=False)
    v.add_argument("suite", choices=[*verify.SUITES, "all"])
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    for name, default in (("spec", None), ("json", False), ("max_n", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except (SpecError, MatroidError, SizeCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
