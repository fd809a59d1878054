"""Command-line front end: every reproducible claim is one command.

Exit codes: 0 success / claim passed, 1 claim failed, 2 usage or
parameter error.  All commands are deterministic given their flags;
commands that write files also write a manifest with content digests so
a run can be replayed and byte-compared (the rerun subcommand).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import __version__
from . import constructions as cons
from .analysis import (
    BoundDomainError,
    check_rule5,
    check_rules_lemma,
    classify_low_degree,
    degree_four_vertices,
    evaluate_bound,
    list_bounds,
    partition_neighborhood,
)
from .claims import claim_ids, run_claim
from .graph import (
    count_cliques,
    from_graph6,
    is_clique_free,
    is_saturated,
    min_degree,
    to_dot,
    to_graph6,
)
from .search import SearchQuery, merge_reports, sat_value, split_work
from .support import SupportStructure, check_pre_support, check_support, complete_to_support

USAGE_ERROR = 2
CLAIM_FAIL = 1


class CliError(Exception):
    """Parameter problem surfaced as exit code 2 with a clean message."""


def _threads() -> int:
    raw = os.environ.get("SATFORGE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise CliError(f"SATFORGE_THREADS must be an integer, got {raw!r}")


def _digest(path: Path) -> str:
    return "sha256:" + hashlib.sha256(path.read_bytes()).hexdigest()


def _write_manifest(out_dir: Path, stem: str, subcommand: str, parameters: dict,
                    outputs: list[Path], started: float) -> Path:
    manifest = {
        "tool": "satforge",
        "version": __version__,
        "subcommand": subcommand,
        "parameters": parameters,
        "outputs": {p.name: _digest(p) for p in outputs},
        "wall_time_s": round(time.time() - started, 6),
    }
    path = out_dir / f"{stem}.manifest.json"
    path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    return path


def _load_graph(path: str):
    data = Path(path).read_bytes().split(b"\n", 1)[0].strip()
    return from_graph6(data)


def _json_out(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _labels_to_json(labels: dict[str, frozenset[int]]) -> dict[str, list[int]]:
    return {name: sorted(verts) for name, verts in sorted(labels.items())}


# -- construct ---------------------------------------------------------------


def _build_family(args) -> tuple[str, object, int | None]:
    """Returns (stem, LabeledGraph, clique order for the saturation line)."""
    fam = args.family

    def need(flag, value):
        if value is None:
            raise CliError(f"construct {fam} requires --{flag}")
        return value

    try:
        if fam == "ehm":
            s, n = need("s", args.s), need("n", args.n)
            return f"ehm_s{s}_n{n}", cons.ehm(s, n), s
        if fam == "w":
            s = need("s", args.s)
            m1, m3, m4 = need("m1", args.m1), need("m3", args.m3), need("m4", args.m4)
            return f"w_s{s}_{m1}_{m3}_{m4}", cons.w_graph(s, m1, m3, m4), s
        if fam == "h":
            t, n = need("t", args.t), need("n", args.n)
            return f"h_t{t}_n{n}", cons.h_graph(t, n), 4
        if fam == "f":
            s, t, n = need("s", args.s), need("t", args.t), need("n", args.n)
            return f"f_s{s}_t{t}_n{n}", cons.f_graph(s, t, n), s
        if fam == "r":
            t, n = need("t", args.t), need("n", args.n)
            return f"r_t{t}_n{n}", cons.r_graph(t, n), 5
        if fam == "appendix":
            gid = need("id", args.id)
            return f"appendix_{gid}", cons.appendix_graph(gid), None
    except ValueError as exc:
        raise CliError(str(exc))
    raise CliError(f"unknown family {fam!r}")


def cmd_construct(args) -> int:
    started = time.time()
    stem, built, s = _build_family(args)
    g = built.graph
    if s is None:
        print(f"triangles={count_cliques(g, 3)}")
    else:
        sat = is_saturated(g, s)
        print(
            f"triangles={count_cliques(g, 3)} delta={min_degree(g)} "
            f"saturated={'K%d' % s if sat else 'no'} k4={count_cliques(g, 4)}"
        )
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        outputs = []
        if args.format in ("graph6", "json"):
            p = out_dir / f"{stem}.g6"
            p.write_bytes(to_graph6(g) + b"\n")
            outputs.append(p)
        if args.format == "dot":
            p = out_dir / f"{stem}.dot"
            p.write_text(to_dot(g, built.labels))
            outputs.append(p)
        p = out_dir / f"{stem}.labels.json"
        p.write_text(json.dumps(_labels_to_json(built.labels), indent=2) + "\n")
        outputs.append(p)
        params = {
            k: getattr(args, k)
            for k in ("family", "s", "t", "n", "m1", "m3", "m4", "id", "format")
            if getattr(args, k, None) is not None
        }
        _write_manifest(out_dir, stem, "construct", params, outputs, started)
    return 0


def cmd_rerun(args) -> int:
    """Re-execute a construct manifest and verify byte-identical outputs."""
    manifest = json.loads(Path(args.manifest).read_text())
    if manifest.get("subcommand") != "construct":
        raise CliError("rerun currently supports construct manifests only")
    params = manifest["parameters"]
    ns = argparse.Namespace(
        family=params["family"],
        s=params.get("s"), t=params.get("t"), n=params.get("n"),
        m1=params.get("m1"), m3=params.get("m3"), m4=params.get("m4"),
        id=params.get("id"),
        format=params.get("format", "graph6"),
        out=args.out,
    )
    cmd_construct(ns)
    out_dir = Path(args.out)
    bad = []
    for name, want in manifest["outputs"].items():
        got = _digest(out_dir / name)
        if got != want:
            bad.append(f"{name}: {got} != {want}")
    if bad:
        print("rerun MISMATCH: " + "; ".join(bad))
        return CLAIM_FAIL
    print(f"rerun ok: {len(manifest['outputs'])} outputs byte-identical")
    return 0


# -- verification ------------------------------------------------------------


def cmd_verify(args) -> int:
    g = _load_graph(args.input)
    payload = {
        "n": g.n,
        "edges": g.edge_count(),
        "min_degree": min_degree(g),
        "k3": count_cliques(g, 3),
        "k4": count_cliques(g, 4),
    }
    if args.s is not None:
        payload["clique_free"] = is_clique_free(g, args.s)
        payload["saturated"] = is_saturated(g, args.s)
        payload["s"] = args.s
    _json_out(payload, args.out)
    return 0


def cmd_count(args) -> int:
    g = _load_graph(args.input)
    print(count_cliques(g, args.r))
    return 0


def cmd_verify_support(args) -> int:
    g = _load_graph(args.input)
    spec = json.loads(Path(args.sides).read_text())
    try:
        ss = SupportStructure(
            g, frozenset(spec["A"]), frozenset(spec["B"]), int(spec["s"])
        )
    except (KeyError, ValueError) as exc:
        raise CliError(f"bad side manifest: {exc}")
    if args.complete:
        ss = complete_to_support(ss)
    pre = check_pre_support(ss)
    full = check_support(ss)
    payload = {
        "s": ss.s,
        "pre_support": {
            "sides_clique_free": pre.sides_clique_free,
            "a_neighborhoods_ok": pre.a_neighborhoods_ok,
            "b_neighborhoods_ok": pre.b_neighborhoods_ok,
            "whole_clique_free": pre.whole_clique_free,
            "ok": pre.ok,
            "failures": list(pre.failures),
        },
        "support": {
            "a_side_saturated": full.a_side_saturated,
            "b_side_saturated": full.b_side_saturated,
            "cross_saturated": full.cross_saturated,
            "ok": full.ok,
            "failures": list(full.failures),
        },
    }
    if args.complete:
        payload["completed_graph6"] = to_graph6(ss.graph).decode("ascii")
    _json_out(payload, args.out)
    return 0


# -- analysis ----------------------------------------------------------------


def _cell_key(S) -> str:
    return "".join(str(i) for i in sorted(S))


def cmd_partition(args) -> int:
    g = _load_graph(args.input)
    try:
        part = partition_neighborhood(g, args.x)
    except ValueError as exc:
        raise CliError(str(exc))
    payload = {
        "x": part.x,
        "neighbors": list(part.neighbors),
        "nx_edges": sorted(_cell_key(p) for p in part.nx_edges),
        "cells": {_cell_key(S): sorted(v) for S, v in part.cells.items()},
    }
    _json_out(payload, args.out)
    return 0


def cmd_rules_check(args) -> int:
    g = _load_graph(args.input)
    xs = [args.x] if args.x is not None else degree_four_vertices(g)
    report = {}
    for x in xs:
        part = partition_neighborhood(g, x)
        violations = [
            {"y": y, "cell": _cell_key(S), "position": i}
            for y, S, i in check_rules_lemma(g, part)
        ]
        entry: dict = {"violations": violations}
        if len(part.nx_edges) == 4 and all(
            sum(1 for p in part.nx_edges if i in p) == 2 for i in (1, 2, 3, 4)
        ):
            entry["rule5"] = check_rule5(g, part)
        report[str(x)] = entry
    _json_out({"base_vertices": report}, args.out)
    return 0


def cmd_classify(args) -> int:
    g = _load_graph(args.input)
    try:
        c = classify_low_degree(g, args.s)
    except ValueError as exc:
        raise CliError(str(exc))
    payload = {"kind": c.kind, "min_degree": min_degree(g)}
    if c.m is not None:
        payload["m"] = list(c.m)
    _json_out(payload, args.out)
    return 0


def cmd_bound(args) -> int:
    params = {
        k: getattr(args, k) for k in ("n", "s", "r", "t") if getattr(args, k) is not None
    }
    try:
        print(evaluate_bound(args.name, **params))
    except (KeyError, BoundDomainError) as exc:
        raise CliError(str(exc))
    return 0


def cmd_bounds_list(args) -> int:
    for spec in list_bounds():
        print(f"{spec.name}({', '.join(spec.params)}): {spec.description}")
    return 0


# -- search ------------------------------------------------------------------


def cmd_search(args) -> int:
    try:
        query = SearchQuery(
            args.n,
            args.r,
            args.s,
            t=args.t,
            exact_degree=not args.at_least,
            budget=args.budget,
        )
    except ValueError as exc:
        raise CliError(str(exc))
    shards = args.shards or 1
    if shards == 1:
        report = sat_value(query)
    else:
        subqueries = split_work(query, shards)
        if args.shard_id is not None:
            report = sat_value(subqueries[args.shard_id])
        else:
            with ThreadPoolExecutor(max_workers=min(_threads(), shards)) as pool:
                report = merge_reports(list(pool.map(sat_value, subqueries)))
    payload = {
        "query": {
            "n": query.n,
            "r": query.r,
            "s": query.s,
            "t": query.t,
            "exact_degree": query.exact_degree,
            "shards": shards,
            "shard_id": args.shard_id,
        },
        # null minimum = the budget ran out before exhaustion
        "minimum": "infeasible" if report.infeasible else report.minimum,
        "extremal": [form.decode("ascii") for form in report.extremal],
        "explored": report.explored,
        "exhaustive": report.exhaustive,
    }
    _json_out(payload, args.out)
    return 0


# -- reproduce ---------------------------------------------------------------


def cmd_reproduce(args) -> int:
    ids = claim_ids() if args.all else [args.claim]
    if not args.all and args.claim is None:
        raise CliError("pass --claim ID or --all")
    failures = 0
    for cid in ids:
        try:
            ok, detail = run_claim(cid)
        except KeyError as exc:
            raise CliError(str(exc.args[0]))
        print(f"{'PASS' if ok else 'FAIL'} {cid}: {detail}")
        failures += 0 if ok else 1
    return CLAIM_FAIL if failures else 0


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="satforge",
        description="construct, verify, and search clique-saturated graphs",
    )
    parser.add_argument("--version", action="version", version=f"satforge {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a named family member")
    p.add_argument("--family", required=True,
                   choices=["ehm", "w", "h", "f", "r", "appendix"])
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--m1", type=int)
    p.add_argument("--m3", type=int)
    p.add_argument("--m4", type=int)
    p.add_argument("--id", help="gadget id G1..G12")
    p.add_argument("--format", choices=["graph6", "dot", "json"], default="graph6")
    p.add_argument("--out", help="output directory")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("rerun", help="replay a manifest and compare digests")
    p.add_argument("--manifest", required=True)
    p.add_argument("--out", required=True, help="directory for the replayed outputs")
    p.set_defaults(func=cmd_rerun)

    p = sub.add_parser("verify", help="invariants of a graph6 file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--s", type=int, help="clique order for freeness/saturation")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", help="count K_r subgraphs of a graph6 file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify-support", help="check the support-structure conditions")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--sides", required=True, help="JSON file with A, B, s")
    p.add_argument("--complete", action="store_true",
                   help="greedily complete before checking")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify_support)

    p = sub.add_parser("partition", help="trace partition around a degree-4 vertex")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("rules-check", help="adjacency-forcing rule violations")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--x", type=int, help="base vertex; default: all of degree 4")
    p.add_argument("--out")
    p.set_defaults(func=cmd_rules_check)

    p = sub.add_parser("classify", help="low-minimum-degree shape classification")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("bound", help="evaluate a registered closed form")
    p.add_argument("--name", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--t", type=int)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("bounds", help="list registered closed forms")
    p.set_defaults(func=cmd_bounds_list)

    p = sub.add_parser("search", help="exhaustive saturation minimum")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int)
    p.add_argument("--at-least", action="store_true",
                   help="treat --t as a lower bound instead of exact")
    p.add_argument("--shards", type=int)
    p.add_argument("--shard-id", type=int,
                   help="run a single shard (for resumable splits)")
    p.add_argument("--budget", type=int, help="max extension candidates")
    p.add_argument("--out")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("reproduce", help="re-check a registered claim")
    p.add_argument("--claim")
    p.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_reproduce)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
