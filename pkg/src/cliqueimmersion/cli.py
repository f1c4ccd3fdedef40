"""Command-line front end.  Every subcommand writes one JSON object (or a CSV
stream) to stdout.  Exit status: 0 success, 1 verification failure, 2 usage
or precondition error."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds
from .chromatic import chromatic_number, critical_core
from .experiments import (GeneratorConfig, maximize_claim3, median_ratios, plot_ratios,
                          run_trials, trials_to_csv)
from .formats import FORMATS, read_graph, to_graph6
from .gallai import gallai_decompose, verify_decomposition
from .immersion import WeakImmersion, construct_immersion_detailed, verify_weak_immersion

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class VerificationFailed(Exception):
    def __init__(self, payload: dict):
        super().__init__("verification failed")
        self.payload = payload


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _graph(args):
    return read_graph(args.file, args.format)


def cmd_chi(args) -> dict:
    g = _graph(args)
    k, col = chromatic_number(g, witness=True)
    return {"n": g.vertex_count, "m": g.edge_count, "chi": k, "coloring": col}


def cmd_critical(args) -> dict:
    g = _graph(args)
    core, keep = critical_core(g)
    return {"k": chromatic_number(core), "n": core.vertex_count, "m": core.edge_count,
            "vertices": keep, "edges": [[keep[u], keep[v]] for u, v in core.edge_list()],
            "graph6": to_graph6(core).decode()}


def cmd_gallai(args) -> dict:
    g = _graph(args)
    k = args.k if args.k is not None else chromatic_number(g)
    dec = gallai_decompose(g, k)
    rep = verify_decomposition(g, k, dec)
    out = {"k": k, "n": g.vertex_count, **dec.to_dict(), "verification": rep.to_dict()}
    if not rep.ok:
        raise VerificationFailed(out)
    return out


def cmd_immerse(args) -> dict:
    g = _graph(args)
    res = construct_immersion_detailed(g, args.k, args.strategy, args.seed, retries=args.retries)
    imm = res.immersion
    rep = verify_weak_immersion(g, imm)
    lengths = sorted(imm.path_lengths().values())
    out = {"k": args.k, "n": g.vertex_count, "strategy": args.strategy, "seed": args.seed,
           "parts": [list(p) for p in res.decomposition.sizes()], "attempts": res.attempts,
           "path_length_counts": {str(x): lengths.count(x) for x in sorted(set(lengths))},
           "verification": rep.to_dict()}
    if args.out:
        Path(args.out).write_text(imm.to_json() + "\n")
        out["certificate"] = str(args.out)
    else:
        out["certificate"] = imm.to_certificate()
    if not rep.ok:
        raise VerificationFailed(out)
    return out


def cmd_verify(args) -> dict:
    g = _graph(args)
    try:
        imm = WeakImmersion.from_json(Path(args.cert).read_text())
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise ValueError(f"malformed certificate: {exc}") from exc
    rep = verify_weak_immersion(g, imm, strong=args.strong)
    out = {"k": imm.k, "n": g.vertex_count, **rep.to_dict()}
    if not rep.ok:
        raise VerificationFailed(out)
    return out


def load_experiment_config(path) -> tuple[GeneratorConfig, list[int], int]:
    data = json.loads(Path(path).read_text())
    try:
        gen = GeneratorConfig.from_dict(data.get("generator", {}))
        return gen, [int(k) for k in data["k_list"]], int(data.get("trials_per_k", 1))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"bad experiment config: {exc}") from exc


def cmd_experiment(args):
    gen, ks, trials = load_experiment_config(args.config)
    rows = run_trials(gen, ks, trials, args.seed, jobs=args.jobs)
    text = trials_to_csv(rows, diagnostics=gen.diagnostics, record_timing=gen.record_timing)
    if args.plot:
        plot_ratios(rows, args.plot)
    if args.out:
        Path(args.out).write_text(text)
        return {"rows": len(rows), "out": str(args.out),
                "median_ratios": {str(k): v for k, v in median_ratios(rows).items()},
                "flagged": sum(r.flagged for r in rows)}
    sys.stdout.write(text)
    return None


def cmd_claim3(args) -> dict:
    return maximize_claim3(args.delta, args.resolution).to_dict()


def cmd_bounds(args):
    if args.kind == "hill":
        ks = args.k
        rows = [{"k": k, "H": bounds.hill_number(k)} for k in ks]
        if args.text:
            return "\n".join([f"{'k':>8} {'H(k)':>24}"] + [f"{r['k']:>8} {r['H']:>24}" for r in rows])
        return {"hill": rows}
    if args.kind == "lower":
        params = {k: v for k, v in (("k", args.k), ("a", args.a), ("b", args.b),
                                    ("n", args.n), ("m", args.m)) if v is not None}
        return _bound_call(bounds.lower_bounds, args.bound, params)
    if args.kind == "aux":
        params = {k: v for k, v in (("cr", args.cr), ("m", args.m), ("n", args.n),
                                    ("a", args.a), ("k", args.k)) if v is not None}
        return _bound_call(bounds.auxiliary_bounds, args.bound, params)
    parts = _parse_parts_arg(args.parts) + [(1, 1)] * args.singletons
    rep = bounds.albertson_case_report(args.k, args.n, parts)
    return rep.to_text() if args.text else rep.to_dict()


def _bound_call(fn, kind, params) -> dict:
    try:
        return fn(kind, **params).to_dict()
    except KeyError as exc:
        raise ValueError(f"bound {kind!r} needs parameter {exc}") from exc


def _parse_parts_arg(text: str | None) -> list[tuple[int, int]]:
    if not text:
        return []
    out = []
    for item in text.split(","):
        n_i, _, k_i = item.partition(":")
        out.append((int(n_i), int(k_i)))
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cliqueimmersion",
                                description="Weak clique immersions in critical graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file")
        sp.add_argument("--format", choices=FORMATS + ("dimacs",), default=None)
        return sp

    graph_cmd("chi", "exact chromatic number with a witness colouring").set_defaults(fn=cmd_chi)
    graph_cmd("critical", "extract a critical subgraph").set_defaults(fn=cmd_critical)
    sp = graph_cmd("gallai", "complete-join decomposition")
    sp.add_argument("--k", type=int)
    sp.set_defaults(fn=cmd_gallai)

    sp = graph_cmd("immerse", "build and self-check a weak immersion of K_k")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--strategy", choices=("arbitrary", "semirandom"), default="arbitrary")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--retries", type=int, default=16)
    sp.add_argument("--out")
    sp.set_defaults(fn=cmd_immerse)

    sp = graph_cmd("verify", "check a weak-immersion certificate")
    sp.add_argument("--cert", required=True)
    sp.add_argument("--strong", action="store_true")
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("experiment", help="seeded trials of the semi-random split")
    sp.add_argument("--config", required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out")
    sp.add_argument("--plot")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(fn=cmd_experiment)

    sp = sub.add_parser("claim3", help="maximise the degree bound of the semi-random split")
    sp.add_argument("--delta", type=float, default=1.125)
    sp.add_argument("--resolution", type=float, default=0.01)
    sp.set_defaults(fn=cmd_claim3)

    sp = sub.add_parser("bounds", help="crossing-number bounds")
    bsub = sp.add_subparsers(dest="kind", required=True)
    h = bsub.add_parser("hill")
    h.add_argument("--k", type=int, nargs="+", required=True)
    h.add_argument("--text", action="store_true")
    lo = bsub.add_parser("lower")
    lo.add_argument("bound", choices=("complete", "bipartite", "crossing-lemma"))
    au = bsub.add_parser("aux")
    au.add_argument("bound", choices=("add-edge", "sampled-edges", "immersion-overhead"))
    au.add_argument("--cr", type=int)
    for q in (lo, au):
        for name in ("k", "a", "b", "n", "m"):
            if q is au and name == "b":
                continue
            q.add_argument(f"--{name}", type=int)
    ca = bsub.add_parser("case")
    ca.add_argument("--k", type=int, required=True)
    ca.add_argument("--n", type=int, required=True)
    ca.add_argument("--parts", help="comma-separated n_i:k_i")
    ca.add_argument("--singletons", type=int, default=0)
    ca.add_argument("--text", action="store_true")
    sp.set_defaults(fn=cmd_bounds)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.fn(args)
    except VerificationFailed as exc:
        _emit(exc.payload)
        return EXIT_FAIL
    except AssertionError as exc:
        print(f"error: internal check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if isinstance(out, str):
        sys.stdout.write(out + "\n")
    elif out is not None:
        _emit(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
