"""Command-line entry point: ``bipconn <command> [options]``.

Every command prints one JSON document (or a short text report with
``--format text``) that embeds the resolved configuration. JSON keys are sorted
and wall-clock timings are omitted unless ``--timings`` is given, so a fixed
input, configuration and seed give byte-identical output.

Exit status: 0 on success, 1 when a construction command (``bipartition``,
``span2``, ``peel``) ends in anything other than a verified success, 2 on bad
input or parameters.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import warnings

from . import experiments as ex
from .connectivity import separator_witness, vertex_connectivity
from .errors import InternalConsistencyError, PreconditionViolation
from .generators import complete_graph
from .graph import BipartiteCertificate, Graph
from .io import GraphFormatError, format_graph, parse_digraph_file, parse_graph_file
from .oracle import MAX_ORACLE_N, best_bipartite_kappa, even_witness, odd_cycle_witness
from .peel import peel, peel_linear, peel_log
from .pipeline import OPPORTUNISTIC, STRICT, final_check, params_for, run
from .span2 import span2connected

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _witness_dict(w) -> dict | None:
    if w is None:
        return None
    return {"separator": sorted(w.vertices), "side_small": sorted(w.side_small), "reason": w.reason}


def _cert_dict(cert: BipartiteCertificate | None, n: int) -> dict | None:
    if cert is None:
        return None
    return {
        "coloring": [cert.coloring.color.get(v) for v in range(n)],
        "edges": [list(e) for e in sorted(cert.edges)],
    }


def _load_graph(args) -> Graph:
    if not args.input:
        raise InputError("--input is required")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            g = parse_graph_file(args.input)
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc.strerror}") from None
        except (GraphFormatError, ValueError) as exc:
            raise InputError(str(exc)) from None
    args._warnings = [str(w.message) for w in caught]
    for msg in args._warnings:
        print(f"warning: {msg}", file=sys.stderr)
    return g


def _config(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if not k.startswith("_") and k != "func"}


# --- commands -------------------------------------------------------------
# each returns (document, exit status)


def cmd_kappa(args):
    g = _load_graph(args)
    doc = {"input": {"n": g.n, "m": g.m}, "kappa": vertex_connectivity(g)}
    if args.k is not None:
        w = separator_witness(g, args.k)
        doc.update({"k": args.k, "outcome": w is None, "witness": _witness_dict(w)})
    return doc, EXIT_OK


def cmd_bipartition(args):
    g = _load_graph(args)
    try:
        params = params_for(
            args.k, g.n, args.regime, args.alpha if args.regime == "b" else args.c,
            mode=args.mode, seed=args.seed, retry_cap=args.retry_cap,
            verify_steps=not args.no_step_checks, verification=args.verification,
        )
    except ValueError as exc:
        raise InputError(str(exc)) from None
    res = run(g, params)
    stats = dict(res.stats)
    verification = stats.pop("verification", None)
    if not args.timings:
        stats.pop("timings", None)
    doc = {
        "input": {"n": g.n, "m": g.m},
        "params": params.as_dict(),
        "outcome": res.outcome,
        "certificate": _cert_dict(res.certificate, g.n),
        "verification": verification,
        "stats": stats,
        "diagnostic": res.diagnostic or None,
    }
    return doc, EXIT_OK if res.ok else EXIT_FAIL


def cmd_oracle(args):
    g = _load_graph(args)
    if g.n > MAX_ORACLE_N and not args.override:
        raise InputError(f"n={g.n} exceeds {MAX_ORACLE_N}; pass --override to enumerate anyway")
    verdict = best_bipartite_kappa(g, override=args.override)
    doc = {
        "input": {"n": g.n, "m": g.m},
        "best_kappa": verdict.best_kappa,
        "argmax_coloring": [verdict.argmax_coloring.color[v] for v in range(g.n)],
        "colorings_checked": verdict.colorings_checked,
    }
    if args.k is not None:
        doc["k"] = args.k
        doc["outcome"] = verdict.best_kappa >= args.k
    return doc, EXIT_OK


def cmd_witness(args):
    try:
        g = odd_cycle_witness(args.n) if args.n % 2 else even_witness(args.n)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    kind = "odd_cycle" if args.n % 2 else "cycle_plus_apex"
    doc = {"input": {"n": g.n, "m": g.m}, "kind": kind, "edges": [list(e) for e in g.edges()]}
    return doc, EXIT_OK


def cmd_span2(args):
    g = _load_graph(args)
    doc = {"input": {"n": g.n, "m": g.m}}
    try:
        cert, log = span2connected(g)
    except PreconditionViolation as exc:
        doc.update(outcome="precondition_violation",
                   diagnostic={"message": str(exc), "witness": _witness_dict(exc.witness)})
        return doc, EXIT_FAIL
    except InternalConsistencyError as exc:
        doc.update(outcome="internal_error", diagnostic={"message": str(exc), "dump": exc.dump})
        return doc, EXIT_FAIL
    check = final_check(g, cert, 2, args.verification, args.seed)
    ok = all(check[x] for x in ("spanning", "proper", "subgraph", "k_connected"))
    doc.update(outcome="success" if ok else "internal_error", certificate=_cert_dict(cert, g.n),
               verification=check, stats=log)
    return doc, EXIT_OK if ok else EXIT_FAIL


def cmd_peel(args):
    if not args.input:
        raise InputError("--input is required")
    try:
        d = parse_digraph_file(args.input)
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc.strerror}") from None
    except (GraphFormatError, ValueError) as exc:
        raise InputError(str(exc)) from None
    try:
        if args.rule == "log":
            if args.k is None:
                raise InputError("--rule log needs --k")
            res = peel_log(d, args.k)
        elif args.rule == "linear":
            if args.c is None:
                raise InputError("--rule linear needs --c")
            res = peel_linear(d, args.c)
        else:
            if args.k is None:
                raise InputError("peel needs --k")
            res = peel(d, args.k, args.budget)
    except PreconditionViolation as exc:
        doc = {"input": {"n": d.n, "m": len(d.arcs())}, "outcome": "precondition_violation",
               "diagnostic": {"message": str(exc), "guarantee": exc.guarantee}}
        return doc, EXIT_FAIL
    except ValueError as exc:
        raise InputError(str(exc)) from None
    doc = {
        "input": {"n": d.n, "m": len(d.arcs())},
        "outcome": "success" if res.success else "failure",
        "k": res.k,
        "survivors": res.survivors,
        "removed": [_witness_dict(w) for w in res.removed],
        "loss_bound": res.loss_bound,
        "loss_budget": res.loss_budget,
        "step_bound": res.step_bound,
        "max_out_degree_loss": max(res.out_degree_loss(d).values(), default=0),
        "diagnostic": res.failure,
        "notes": res.notes,
    }
    return doc, EXIT_OK if res.success else EXIT_FAIL


def cmd_experiment(args):
    if args.experiment == "fkn":
        alpha_or_c = args.alpha if args.regime == "b" else args.c
        rows, records = ex.fkn_scan(args.n, args.k, args.regime, args.trials, args.seed,
                                    alpha_or_c, include_time=args.timings)
        doc = {"rows": rows, "retry_stats": ex.retry_stats(records)}
        return doc, EXIT_OK
    if args.input:
        g = _load_graph(args)
    elif args.complete:
        g = complete_graph(args.complete)
    else:
        raise InputError("give --input or --complete N")
    records = []
    for i in range(args.trials):
        seed = ex.derive_seed(args.seed, i)
        if args.experiment == "rcolor":
            if args.c is None:
                raise InputError("rcolor needs --c")
            records.append(ex.rcolor_trial(g, args.r, args.c, seed))
        else:
            if args.k is None:
                raise InputError("maxcut needs --k")
            records.append(ex.maxcut_edge_conn(g, args.k, seed))
    trials = [r.to_dict(args.timings) for r in records]
    wins = sum(r.measured["success"] for r in records)
    doc = {"input": {"n": g.n, "m": g.m}, "trials": trials,
           "summary": {"trials": len(records), "successes": wins,
                       "success_rate": wins / len(records) if records else 0.0}}
    return doc, EXIT_OK


# --- text rendering ---------------------------------------------------------


def _text(command: str, doc: dict) -> str:
    if command == "witness":
        return format_graph(doc["input"]["n"], [tuple(e) for e in doc["edges"]], comment=doc["kind"])
    lines = []
    for key in ("outcome", "kappa", "best_kappa", "k"):
        if key in doc:
            lines.append(f"{key}: {doc[key]}")
    if "input" in doc:
        lines.append(f"input: n={doc['input']['n']} m={doc['input']['m']}")
    cert = doc.get("certificate")
    if cert:
        lines.append("coloring: " + " ".join(map(str, cert["coloring"])))
        lines.append(format_graph(doc["input"]["n"], [tuple(e) for e in cert["edges"]]).rstrip())
    if doc.get("diagnostic"):
        lines.append(f"diagnostic: {json.dumps(doc['diagnostic'], sort_keys=True)}")
    if "rows" in doc:
        lines.append(ex.to_csv(doc["rows"]).rstrip())
    if "summary" in doc:
        s = doc["summary"]
        lines.append(f"successes: {s['successes']}/{s['trials']}")
    return "\n".join(lines) + "\n"


# --- parser -----------------------------------------------------------------


def _common(p, graph_input: bool = True):
    if graph_input:
        p.add_argument("--input", help="graph file: '# comments', then 'n m', then 'u v' lines")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--timings", action="store_true", help="include wall-clock times (breaks byte determinism)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bipconn", description="Spanning bipartite k-connected subgraphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kappa", help="vertex connectivity of a graph")
    _common(p)
    p.add_argument("--k", type=int, help="also test k-connectivity and report a separator")
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("bipartition", help="run the construction pipeline")
    _common(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--regime", choices=("a", "b", "c"), default="a")
    p.add_argument("--alpha", type=float)
    p.add_argument("--c", type=float)
    p.add_argument("--retry-cap", type=int)
    p.add_argument("--mode", choices=(STRICT, OPPORTUNISTIC), default=STRICT)
    p.add_argument("--verification", choices=("full", "sampled"), default="full")
    p.add_argument("--no-step-checks", action="store_true", help="skip per-merge verification")
    p.set_defaults(func=cmd_bipartition)

    p = sub.add_parser("oracle", help="exhaustive best bipartite connectivity (small n)")
    _common(p)
    p.add_argument("--k", type=int)
    p.add_argument("--override", action="store_true", help=f"allow n > {MAX_ORACLE_N}")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("witness", help="2-connected graph with no spanning bipartite 2-connected subgraph")
    _common(p, graph_input=False)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("span2", help="spanning bipartite 2-connected subgraph of a 3-connected graph")
    _common(p)
    p.add_argument("--verification", choices=("full", "sampled"), default="full")
    p.set_defaults(func=cmd_span2)

    p = sub.add_parser("peel", help="peel a digraph to a k-connected part")
    _common(p)
    p.add_argument("--k", type=int)
    p.add_argument("--budget", type=int, help="loss budget for a plain peel (default: none)")
    p.add_argument("--rule", choices=("log", "linear"), help="use the log or linear budget")
    p.add_argument("--c", type=float)
    p.set_defaults(func=cmd_peel)

    p = sub.add_parser("experiment", help="seeded empirical studies")
    esub = p.add_subparsers(dest="experiment", required=True)
    for name in ("rcolor", "maxcut"):
        q = esub.add_parser(name)
        _common(q)
        q.add_argument("--complete", type=int, metavar="N", help="use K_N instead of --input")
        q.add_argument("--trials", type=int, default=100)
        q.add_argument("--k", type=int)
        q.add_argument("--c", type=float)
        if name == "rcolor":
            q.add_argument("--r", type=int, required=True)
        q.set_defaults(func=cmd_experiment)
    q = esub.add_parser("fkn")
    _common(q, graph_input=False)
    q.add_argument("--n", type=int, nargs="+", required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--regime", choices=("a", "b", "c"), default="a")
    q.add_argument("--alpha", type=float)
    q.add_argument("--c", type=float)
    q.add_argument("--trials", type=int, default=10)
    q.set_defaults(func=cmd_experiment)
    return ap


def _dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, default=_json_default) + "\n"


def _json_default(o):
    if isinstance(o, (set, frozenset)):
        return sorted(o)
    if isinstance(o, float) and not math.isfinite(o):
        return str(o)
    raise TypeError(f"not JSON serializable: {type(o).__name__}")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    command = args.command if args.command != "experiment" else f"experiment {args.experiment}"
    try:
        doc, status = args.func(args)
    except InputError as exc:
        doc, status = {"outcome": "input_error", "diagnostic": {"message": str(exc)}}, EXIT_INPUT
    doc["command"] = command
    doc["seed"] = args.seed
    doc["config"] = _config(args)
    if getattr(args, "_warnings", None):
        doc["warnings"] = args._warnings
    if args.format == "text" and status != EXIT_INPUT:
        sys.stdout.write(_text(args.command, doc))
    else:
        sys.stdout.write(_dumps(doc))
    return status


if __name__ == "__main__":
    sys.exit(main())
