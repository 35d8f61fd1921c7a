"""Command-line entry point.

Exit codes: 0 = success / property holds, 1 = property fails (a witness
is printed), 2 = input error (malformed record, bad flags).  Every run
ends with a manifest line (stderr in text mode, stdout in --json mode)
echoing the subcommand, configuration, input hashes, and outcome;
identical config + inputs give an identical manifest except for timing.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from typing import Dict, List, Optional

from . import closure as closure_mod
from . import conditions, hamilton, linegraph, patterns, search, textio, wagner
from .canon import canonical_form, canonical_hash, canonical_relabel, is_isomorphic
from .multigraph import Multigraph, MultigraphError


class Reporter:
    def __init__(self, as_json: bool):
        self.as_json = as_json

    def emit(self, text: str, **fields) -> None:
        if self.as_json:
            print(json.dumps(fields, sort_keys=True))
        else:
            print(text)

    def block(self, text: str, **fields) -> None:
        # multi-line payloads (graph records) go through unchanged in
        # text mode and as a single JSON object otherwise
        self.emit(text.rstrip("\n"), **fields)


def _file_hash(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()[:16]


def _manifest(rep: Reporter, sub: str, cfg: Dict, inputs: List[str],
              outcome: str, t0: float) -> None:
    entry = {
        "manifest": sub,
        "config": cfg,
        "inputs": {p: _file_hash(p) for p in inputs if os.path.exists(p)},
        "outcome": outcome,
        "elapsed_s": round(time.monotonic() - t0, 3),
    }
    if rep.as_json:
        print(json.dumps(entry, sort_keys=True))
    else:
        print(
            f"# manifest {sub} config={json.dumps(entry['config'], sort_keys=True)}"
            f" inputs={json.dumps(entry['inputs'], sort_keys=True)}"
            f" outcome={outcome} elapsed={entry['elapsed_s']}s",
            file=sys.stderr,
        )


def _read(path: str):
    return textio.read_graphs(path)


# -- subcommands ----------------------------------------------------------


def cmd_search(args, rep: Reporter) -> int:
    workers = args.workers
    if workers is None:
        workers = int(os.environ.get("GAMMA3_WORKERS", "1"))
    cfg = search.SearchConfig(
        policy=args.policy, seed=args.seed, budget=args.budget,
        workers=workers, trace=args.out is not None,
    )
    arch = search.run_search(cfg)
    named = [(f"F{idx}", g) for idx, g in enumerate(arch.sorted_members())]
    if args.out:
        textio.write_graphs(args.out, named)
        with open(args.out + ".trace", "w") as fh:
            fh.write("\n".join(arch.trace_lines) + "\n")
        rep.emit(f"archive {len(named)} members -> {args.out}",
                 event="archive", members=len(named), out=args.out)
    else:
        rep.block(textio.serialize_graphs(named),
                  event="archive", members=len(named),
                  records=[canonical_hash(g) for _n, g in named])
    rep.emit(
        f"complete={str(arch.complete).lower()} stats={arch.stats}",
        event="summary", complete=arch.complete, stats=arch.stats,
    )
    return 0 if arch.complete else 1


def cmd_check(args, rep: Reporter) -> int:
    ok_all = True
    for name, g in _read(args.file):
        report = conditions.check_all(g)
        gate_ok, gate_w = report.gate
        rep.emit(
            f"graph {name} gate {'pass' if gate_ok else 'fail'}"
            + ("" if gate_ok else f" {conditions.format_witness(gate_w)}"),
            event="gate", graph=name, ok=gate_ok,
            witness=conditions.format_witness(gate_w) if not gate_ok else None,
        )
        for k in sorted(report.conditions):
            ok, w = report.conditions[k]
            rep.emit(
                f"cond {k} {'pass' if ok else 'fail'}"
                + ("" if ok else f" {conditions.format_witness(w)}"),
                event="cond", graph=name, k=k, ok=ok,
                witness=conditions.format_witness(w) if not ok else None,
            )
        ok_all = ok_all and report.all_pass()
    return 0 if ok_all else 1


def cmd_hamcon(args, rep: Reporter) -> int:
    ok_all = True
    certs = []
    for name, g in _read(args.file):
        ok, cert, wit = hamilton.hamilton_connected(g, workers=args.workers)
        if ok:
            certs.append(cert)
            rep.emit(f"hamcon {name} true", event="hamcon", graph=name, ok=True)
        else:
            ok_all = False
            rep.emit(f"hamcon {name} false witness {wit[0]} {wit[1]}",
                     event="hamcon", graph=name, ok=False, witness=list(wit))
    if args.cert:
        with open(args.cert, "w") as fh:
            for c in certs:
                fh.write(c.serialize())
                fh.write("\n")
    return 0 if ok_all else 1


def cmd_verify(args, rep: Reporter) -> int:
    family = _read(args.family)
    with open(args.certs) as fh:
        certs = hamilton.parse_certificates(fh.read())
    by_hash = {c.graph_hash: c for c in certs}
    ok_all = True
    for name, g in family:
        h = canonical_hash(g)
        cert = by_hash.get(h)
        if cert is None:
            ok_all = False
            rep.emit(f"verify {name} fail no-certificate",
                     event="verify", graph=name, ok=False, detail="no certificate")
            continue
        ok, detail = hamilton.verify_certificate(g, cert)
        ok_all = ok_all and ok
        rep.emit(f"verify {name} {'pass' if ok else 'fail ' + detail}",
                 event="verify", graph=name, ok=ok, detail=None if ok else detail)
    return 0 if ok_all else 1


def cmd_wagner_claim(args, rep: Reporter) -> int:
    survivors, total, per_base = wagner.enumerate_claim2()
    rep.emit(f"cases {total} {per_base}", event="cases", total=total,
             per_base=per_base)
    named = [(f"survivor{idx}", canonical_relabel(g))
             for idx, g in enumerate(survivors)]
    rep.block(textio.serialize_graphs(named), event="survivors",
              count=len(named), hashes=[canonical_hash(g) for _n, g in named])
    w3 = patterns.wagner3().graph
    ok = len(survivors) == 1 and is_isomorphic(survivors[0], w3)
    rep.emit(f"survivors == {{W3}}: {str(ok).lower()}", event="result", ok=ok)
    return 0 if ok else 1


def cmd_linegraph(args, rep: Reporter) -> int:
    out = [(f"L({name})", linegraph.line_graph(g)) for name, g in _read(args.file)]
    rep.block(textio.serialize_graphs(out), event="linegraph",
              graphs=[n for n, _g in out])
    return 0


def cmd_preimage(args, rep: Reporter) -> int:
    code = 0
    for name, g in _read(args.file):
        is_lg, wit = linegraph.is_line_graph_of_multigraph(g)
        if not is_lg:
            code = 1
            rep.emit(f"preimage {name} fail obstruction {wit[0]}",
                     event="preimage", graph=name, ok=False, obstruction=wit[0])
            continue
        h = linegraph.preimage(g)
        rep.block(textio.serialize_graph(f"preimage({name})", h),
                  event="preimage", graph=name, ok=True)
    return code


def cmd_core(args, rep: Reporter) -> int:
    out = [(f"core({name})", g.core()) for name, g in _read(args.file)]
    rep.block(textio.serialize_graphs(out), event="core",
              graphs=[n for n, _g in out])
    return 0


def cmd_sst(args, rep: Reporter) -> int:
    ok_all = True
    for name, g in _read(args.file):
        ok, wit = hamilton.strongly_spanning_trailable(g)
        ok_all = ok_all and ok
        rep.emit(
            f"sst {name} {str(ok).lower()}" + ("" if ok else f" witness {wit}"),
            event="sst", graph=name, ok=ok, witness=None if ok else repr(wit),
        )
    return 0 if ok_all else 1


def cmd_closure(args, rep: Reporter) -> int:
    op = args.op
    code = 0
    for name, g in _read(args.file):
        if op == "cl":
            cl, trace = closure_mod.ryjacek_closure(g)
            rep.block(textio.serialize_graph(f"cl({name})", cl),
                      event="closure", graph=name, trace=trace)
        elif op == "eligible":
            vs = sorted(closure_mod.eligible_vertices(g))
            rep.emit(f"eligible {name}: " + " ".join(map(str, vs)),
                     event="eligible", graph=name, vertices=vs)
        elif op.startswith("local:"):
            x = int(op.split(":", 1)[1])
            rep.block(textio.serialize_graph(f"local({name},{x})",
                                             closure_mod.local_completion(g, x)),
                      event="local", graph=name, vertex=x)
        elif op.startswith("feasible:"):
            x = int(op.split(":", 1)[1])
            feas = closure_mod.is_feasible(g, x)
            rep.emit(f"feasible {name} {x}: {str(feas).lower()}",
                     event="feasible", graph=name, vertex=x, ok=feas)
            if not feas:
                code = 1
        else:
            raise MultigraphError(f"unknown closure op: {op}")
    return code


def cmd_pattern(args, rep: Reporter) -> int:
    if args.action == "list":
        for p in patterns.builder_catalog():
            g = p.graph
            rep.emit(f"{p.name} n={g.n} edges={g.num_edge_copies()}"
                     f" classes={len(g.edge_items())}",
                     event="pattern", name=p.name, n=g.n,
                     edges=g.num_edge_copies())
        return 0
    # show NAME
    for p in patterns.builder_catalog():
        if p.name == args.name:
            rep.block(textio.serialize_graph(p.name, p.graph),
                      event="pattern", name=p.name)
            return 0
    raise MultigraphError(f"unknown pattern: {args.name}")


# -- wiring -------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gamma3")
    ap.add_argument("--json", action="store_true",
                    help="line-delimited machine-readable output")
    sub = ap.add_subparsers(dest="sub", required=True)

    p = sub.add_parser("search")
    p.add_argument("--policy", choices=("lexmin", "random"), default="lexmin")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=float, default=None)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_search, inputs=lambda a: [])

    p = sub.add_parser("check")
    p.add_argument("file")
    p.set_defaults(fn=cmd_check, inputs=lambda a: [a.file])

    p = sub.add_parser("hamcon")
    p.add_argument("file")
    p.add_argument("--cert", default=None)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(fn=cmd_hamcon, inputs=lambda a: [a.file])

    p = sub.add_parser("verify")
    p.add_argument("family")
    p.add_argument("certs")
    p.set_defaults(fn=cmd_verify, inputs=lambda a: [a.family, a.certs])

    p = sub.add_parser("wagner-claim")
    p.set_defaults(fn=cmd_wagner_claim, inputs=lambda a: [])

    for verb, fn in (("linegraph", cmd_linegraph), ("preimage", cmd_preimage),
                     ("core", cmd_core), ("sst", cmd_sst)):
        p = sub.add_parser(verb)
        p.add_argument("file")
        p.set_defaults(fn=fn, inputs=lambda a: [a.file])

    p = sub.add_parser("closure")
    p.add_argument("file")
    p.add_argument("--op", required=True,
                   help="cl | local:<vertex> | eligible | feasible:<vertex>")
    p.set_defaults(fn=cmd_closure, inputs=lambda a: [a.file])

    p = sub.add_parser("pattern")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("name", nargs="?")
    p.set_defaults(fn=cmd_pattern, inputs=lambda a: [])
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    rep = Reporter(args.json)
    t0 = time.monotonic()
    cfg = {k: v for k, v in vars(args).items()
           if k not in ("fn", "inputs", "json") and not callable(v)}
    inputs = args.inputs(args)
    try:
        code = args.fn(args, rep)
    except (textio.ParseError, MultigraphError, hamilton.CertificateError,
            FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        _manifest(rep, args.sub, cfg, inputs, "input-error", t0)
        return 2
    _manifest(rep, args.sub, cfg, inputs,
              "success" if code == 0 else "property-fails", t0)
    return code


if __name__ == "__main__":
    sys.exit(main())
