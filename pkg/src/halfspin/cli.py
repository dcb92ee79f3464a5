"""Command line front end.

Commands: enumerate, act, weight, clifford, verify, export-matrix.
Exit status: 0 on success, 1 when a verification suite fails, 2 on usage
errors.  --json switches every command to machine-readable output;
rationals are serialized as strings "p/q" so nothing is rounded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import oracle
from . import spinrep
from . import clifford as cliff
from .diagram import Sign, format_diagram, format_fock_index, parse_fock_index
from .quiver import RankContext, format_dim_vector, state_u, dim_vector, framing_vector
from .spinrep import (
    SpinVector,
    format_spin_vector,
    parse_spin_vector,
    format_basis_state,
    parse_basis_state,
)


class CliError(Exception):
    pass


_RATIONAL = {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"}
_CHECK = {
    "type": "object",
    "required": ["identity", "status", "witness"],
    "properties": {
        "identity": {"type": "string"},
        "status": {"enum": ["pass", "fail", "xfail", "xpass", "skip"]},
        "witness": {"type": ["string", "null"]},
    },
    "additionalProperties": False,
}
_REPORT = {
    "type": "object",
    "required": ["suite", "n", "status", "counts", "checks", "duration"],
    "properties": {
        "suite": {"type": "string"},
        "n": {"type": "integer", "minimum": 2},
        "status": {"enum": ["pass", "fail"]},
        "counts": {
            "type": "object",
            "required": ["pass", "fail", "xfail", "xpass", "skip"],
            "properties": {
                k: {"type": "integer", "minimum": 0}
                for k in ("pass", "fail", "xfail", "xpass", "skip")
            },
            "additionalProperties": False,
        },
        "checks": {"type": "array", "items": _CHECK},
        "duration": {"type": "number", "minimum": 0},
        "max_boxes": {"type": "integer", "minimum": 0},
        "mode": {"enum": ["bounded", "truncated"]},
    },
    "additionalProperties": False,
}

SCHEMAS = {
    "enumerate": {
        "type": "object",
        "required": ["command", "n", "mode", "rows"],
        "properties": {
            "command": {"const": "enumerate"},
            "n": {"type": "integer", "minimum": 2},
            "mode": {"enum": ["bounded", "truncated"]},
            "max_boxes": {"type": "integer", "minimum": 0},
            "rows": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["sign", "diagram", "v", "u", "weight", "fock_index"],
                    "properties": {
                        "sign": {"enum": ["plus", "minus"]},
                        "diagram": {"type": "string"},
                        "v": {"type": "array", "items": {"type": "integer"}},
                        "u": {"type": "array", "items": {"type": "integer"}},
                        "weight": {"type": "array", "items": _RATIONAL},
                        "fock_index": {"type": "string"},
                    },
                    "additionalProperties": False,
                },
            },
        },
        "additionalProperties": False,
    },
    "act": {
        "type": "object",
        "required": ["command", "n", "word", "input", "result"],
        "properties": {
            "command": {"const": "act"},
            "n": {"type": "integer", "minimum": 2},
            "word": {"type": "string"},
            "input": {"type": "string"},
            "result": {"type": "string"},
        },
        "additionalProperties": False,
    },
    "weight": {
        "type": "object",
        "required": ["command", "n", "state", "eps", "u", "fock_index"],
        "properties": {
            "command": {"const": "weight"},
            "n": {"type": "integer", "minimum": 2},
            "state": {"type": "string"},
            "eps": {"type": "array", "items": _RATIONAL},
            "u": {"type": "array", "items": {"type": "integer"}},
            "fock_index": {"type": "string"},
        },
        "additionalProperties": False,
    },
    "clifford": {
        "type": "object",
        "required": ["command", "n", "element"],
        "properties": {
            "command": {"const": "clifford"},
            "n": {"type": "integer", "minimum": 2},
            "element": {"type": "string"},
            "applied_to": {"type": "string"},
            "result": {"type": "string"},
        },
        "additionalProperties": False,
    },
    "verify": {
        "type": "object",
        "required": ["command", "ok", "reports"],
        "properties": {
            "command": {"const": "verify"},
            "ok": {"type": "boolean"},
            "reports": {"type": "array", "items": _REPORT},
        },
        "additionalProperties": False,
    },
    "export-matrix": {
        "type": "object",
        "required": ["command", "n", "operator", "basis", "rows", "cols", "entries"],
        "properties": {
            "command": {"const": "export-matrix"},
            "n": {"type": "integer", "minimum": 2},
            "operator": {"type": "string"},
            "basis": {"type": "array", "items": {"type": "string"}},
            "rows": {"type": "integer", "minimum": 0},
            "cols": {"type": "integer", "minimum": 0},
            "entries": {
                "type": "array",
                "items": {
                    "type": "array",
                    "prefixItems": [
                        {"type": "integer"},
                        {"type": "integer"},
                        _RATIONAL,
                    ],
                    "minItems": 3,
                    "maxItems": 3,
                },
            },
        },
        "additionalProperties": False,
    },
}


def _emit(text, out):
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


def _eps_strings(eps):
    return [str(c) for c in eps]


def _require_rank(args):
    if args.n is None:
        raise CliError("--n is required")
    if args.n < 2:
        raise CliError("rank must be at least 2, got %d" % args.n)
    return args.n


def _parse_rank_range(text):
    text = text.strip()
    lo, sep, hi = text.partition("..")
    try:
        if sep:
            ranks = list(range(int(lo), int(hi) + 1))
        else:
            ranks = [int(lo)]
    except ValueError:
        raise CliError("cannot parse rank range %r" % text) from None
    if not ranks or any(n < 2 for n in ranks):
        raise CliError("ranks must be at least 2, got %r" % text)
    return ranks


def cmd_enumerate(args, out):
    if args.dinfty:
        if args.max_boxes is None:
            raise CliError("--dinfty needs --max-boxes")
        if args.max_boxes < 0:
            raise CliError("--max-boxes must be non-negative")
        n = args.n if args.n is not None else max(args.max_boxes + 1, 2)
        if n < max(args.max_boxes + 1, 2):
            raise CliError(
                "rank %d too small for box cap %d (need at least %d)"
                % (n, args.max_boxes, max(args.max_boxes + 1, 2))
            )
        ctx = RankContext(n)
        basis = oracle.truncated_spin_basis(ctx, args.max_boxes)
        mode = "truncated"
    else:
        n = _require_rank(args)
        ctx = RankContext(n)
        basis = oracle.spin_basis(ctx)
        mode = "bounded"
    rows = []
    for sign, shape in basis.states:
        v = dim_vector(shape, sign, ctx)
        u = state_u(shape, sign, ctx)
        eps = spinrep.weight_eps((sign, shape), ctx)
        idx = cliff.phi_state((sign, shape), ctx)
        rows.append(
            {
                "sign": str(sign),
                "diagram": format_diagram(shape),
                "v": list(v),
                "u": list(u),
                "weight": _eps_strings(eps),
                "fock_index": format_fock_index(idx),
            }
        )
    if args.json:
        doc = {"command": "enumerate", "n": n, "mode": mode, "rows": rows}
        if mode == "truncated":
            doc["max_boxes"] = args.max_boxes
        _emit(json.dumps(doc, indent=2), out)
        return 0
    header = ["sign", "diagram", "v", "u", "weight", "fock_index"]
    flat = [
        [
            r["sign"],
            r["diagram"],
            format_dim_vector(r["v"]),
            format_dim_vector(r["u"]),
            "(%s)" % ",".join(r["weight"]),
            r["fock_index"],
        ]
        for r in rows
    ]
    if args.csv:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(header)
        writer.writerows(flat)
        _emit(buf.getvalue().rstrip("\n"), out)
    else:
        _emit("\t".join(header), out)
        for row in flat:
            _emit("\t".join(row), out)
    return 0


def _apply_word(word, vec, ctx):
    tokens = word.split()
    if not tokens:
        raise CliError("empty operator word")
    for token in reversed(tokens):
        try:
            name, k = oracle.parse_operator_token(token)
        except ValueError as exc:
            raise CliError(str(exc)) from None
        if name in ("create", "annihilate"):
            raise CliError("operator %r acts on the wedge side, not on shape vectors" % token)
        try:
            vec = oracle.apply_spin_operator(name, k, vec, ctx)
        except ValueError as exc:
            raise CliError(str(exc)) from None
    return vec


def cmd_act(args, out):
    n = _require_rank(args)
    ctx = RankContext(n)
    try:
        vec = parse_spin_vector(args.vector, ctx)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    result = _apply_word(args.word, vec, ctx)
    text = format_spin_vector(result)
    if args.json:
        doc = {
            "command": "act",
            "n": n,
            "word": args.word,
            "input": format_spin_vector(vec),
            "result": text,
        }
        _emit(json.dumps(doc, indent=2), out)
    else:
        _emit(text, out)
    return 0


def cmd_weight(args, out):
    n = _require_rank(args)
    ctx = RankContext(n)
    try:
        state = parse_basis_state(args.state, ctx)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    eps = spinrep.weight_eps(state, ctx)
    u = state_u(state[1], state[0], ctx)
    idx = cliff.phi_state(state, ctx)
    if args.json:
        doc = {
            "command": "weight",
            "n": n,
            "state": format_basis_state(state),
            "eps": _eps_strings(eps),
            "u": list(u),
            "fock_index": format_fock_index(idx),
        }
        _emit(json.dumps(doc, indent=2), out)
    else:
        _emit(
            "weight=(%s)\tu=%s\tfock_index=%s"
            % (",".join(_eps_strings(eps)), format_dim_vector(u), format_fock_index(idx)),
            out,
        )
    return 0


def cmd_clifford(args, out):
    n = _require_rank(args)
    ctx = RankContext(n)
    try:
        element = cliff.parse_clifford_expression(args.expression, ctx)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    element_text = cliff.format_clifford_element(element)
    applied_text = None
    applied_input = None
    if args.apply is not None:
        try:
            target = cliff.parse_fock_vector(args.apply, ctx)
        except ValueError as exc:
            raise CliError(str(exc)) from None
        applied_input = cliff.format_fock_vector(target)
        applied_text = cliff.format_fock_vector(cliff.act(element, target, ctx))
    if args.json:
        doc = {"command": "clifford", "n": n, "element": element_text}
        if applied_text is not None:
            doc["applied_to"] = applied_input
            doc["result"] = applied_text
        _emit(json.dumps(doc, indent=2), out)
    else:
        _emit(applied_text if applied_text is not None else element_text, out)
    return 0


def cmd_verify(args, out):
    if args.dinfty:
        max_boxes = args.max_boxes if args.max_boxes is not None else 6
        if max_boxes < 0:
            raise CliError("--max-boxes must be non-negative")
        if args.ranks is None:
            n = 12
        else:
            ranks = _parse_rank_range(args.ranks)
            if len(ranks) != 1:
                raise CliError("--dinfty takes a single ambient rank, got %r" % args.ranks)
            n = ranks[0]
        if n < max(max_boxes + 1, 2):
            raise CliError(
                "rank %d too small for box cap %d" % (n, max_boxes)
            )
        reports = [oracle.check_dinfty(max_boxes, n)]
    else:
        if args.ranks is None:
            raise CliError("--n is required (a rank or a range like 2..6)")
        ranks = _parse_rank_range(args.ranks)
        if args.all or not args.suite:
            names = list(oracle.SUITE_NAMES)
        else:
            names = []
            for chunk in args.suite:
                names.extend(s.strip() for s in chunk.split(",") if s.strip())
        try:
            reports = oracle.run_suites(names, ranks)
        except ValueError as exc:
            raise CliError(str(exc)) from None
    ok = oracle.all_pass(reports)
    if args.json:
        doc = {"command": "verify", "ok": ok, "reports": reports}
        _emit(json.dumps(doc, indent=2), out)
    else:
        for r in reports:
            c = r["counts"]
            extras = []
            for key in ("xfail", "xpass", "skip"):
                if c[key]:
                    extras.append("%d %s" % (c[key], key))
            suffix = (", " + ", ".join(extras)) if extras else ""
            scope = "max_boxes=%d, ambient n=%d" % (r["max_boxes"], r["n"]) if r.get("mode") == "truncated" else "n=%d" % r["n"]
            _emit(
                "%s %s: %s (%d identities%s) [%.3fs]"
                % (r["suite"], scope, r["status"], c["pass"] + c["fail"], suffix, r["duration"]),
                out,
            )
            if r["status"] != "pass":
                for e in r["checks"]:
                    if e["status"] in ("fail", "xpass"):
                        _emit("  %s: %s (%s)" % (e["status"], e["identity"], e["witness"]), out)
        _emit("overall: %s" % ("pass" if ok else "fail"), out)
    return 0 if ok else 1


def cmd_export_matrix(args, out):
    n = _require_rank(args)
    ctx = RankContext(n)
    tokens = args.operator.split()
    if not tokens:
        raise CliError("empty operator word")
    fock_side = args.basis == "fock"
    basis = oracle.fock_basis(ctx) if fock_side else oracle.spin_basis(ctx)
    matrix = None
    for token in tokens:
        try:
            name, _ = oracle.parse_operator_token(token)
        except ValueError as exc:
            raise CliError(str(exc)) from None
        if fock_side and name not in ("create", "annihilate", "identity"):
            raise CliError("wedge-side export supports create_k / annihilate_k, got %r" % token)
        if not fock_side and name in ("create", "annihilate"):
            raise CliError("operator %r lives on the wedge side; use --basis fock" % token)
        try:
            step = oracle.operator_matrix(token, basis, ctx)
        except ValueError as exc:
            raise CliError(str(exc)) from None
        matrix = step if matrix is None else matrix * step
    labels = [basis.label(s) for s in basis.states]
    triplets = sorted(matrix.entries.items())
    if args.json:
        doc = {
            "command": "export-matrix",
            "n": n,
            "operator": args.operator,
            "basis": labels,
            "rows": matrix.nrows,
            "cols": matrix.ncols,
            "entries": [[i, j, str(v)] for (i, j), v in triplets],
        }
        text = json.dumps(doc, indent=2)
    else:
        lines = [
            "# operator: %s" % args.operator,
            "# rank: n=%d  basis: %s  size: %dx%d"
            % (n, args.basis, matrix.nrows, matrix.ncols),
            "# basis order: %s" % ", ".join(labels),
            "# row col value",
        ]
        lines += ["%d %d %s" % (i, j, v) for (i, j), v in triplets]
        text = "\n".join(lines)
    if args.out_path:
        with open(args.out_path, "w") as fh:
            fh.write(text + "\n")
        _emit("wrote %d entries to %s" % (len(triplets), args.out_path), out)
    else:
        _emit(text, out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="halfspin",
        description="Exact combinatorial models of the half-spin modules of so(2n).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list all basis states with their invariants")
    p.add_argument("--n", type=int, default=None, help="rank (at least 2)")
    p.add_argument("--dinfty", action="store_true", help="rank-free mode: cap total boxes instead")
    p.add_argument("--max-boxes", type=int, default=None, help="box cap for --dinfty")
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("act", help="apply an operator word to a shape vector")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("word", help="e.g. \"F_2 F_4\" or \"kappa a_1\"; rightmost acts first")
    p.add_argument("vector", help="e.g. \"(plus,-)\" or \"(plus,3,1) - 2 * (minus,2)\"")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("weight", help="weight data of one basis state")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("state", help="e.g. \"(plus,3,1)\"")
    p.set_defaults(func=cmd_weight)

    p = sub.add_parser("clifford", help="normal-order an algebra expression")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--apply", default=None, metavar="VEC", help="apply the element to a wedge vector, e.g. \"{1,3}\"")
    p.add_argument("--json", action="store_true")
    p.add_argument("expression", help="e.g. \"a1*b1 + b1*a1\"")
    p.set_defaults(func=cmd_clifford)

    p = sub.add_parser("verify", help="run the exact verification suites")
    p.add_argument("--n", dest="ranks", default=None, help="rank or range, e.g. 4 or 2..6")
    p.add_argument("--suite", action="append", default=None, help="suite name(s), comma separated; repeatable")
    p.add_argument("--all", action="store_true", help="run every suite")
    p.add_argument("--dinfty", action="store_true", help="box-capped rank-free re-run")
    p.add_argument("--max-boxes", type=int, default=None, help="box cap for --dinfty (default 6)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-matrix", help="export an operator matrix as sparse triplets")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--basis", choices=("spin", "fock"), default="spin")
    p.add_argument("--out", dest="out_path", default=None, help="write to a file instead of stdout")
    p.add_argument("--json", action="store_true")
    p.add_argument("operator", help="operator word, e.g. \"F_4\" or \"b_2 a_1\"")
    p.set_defaults(func=cmd_export_matrix)

    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except CliError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
