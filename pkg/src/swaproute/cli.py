"""Command-line front end: file formats, solvers, reductions, generators.

Instance files are JSON: {"kind": "ts"|"rvm"|"crvm", "n": int,
"edges": [[u,v],...], "tokens": [...]} (or "colors" + "goal_colors"),
optional "labels" {vertex: name}, "budget", "seed".  Solution files are
{"steps": [[[u,v],...], ...]}; single-swap solutions use one-edge steps.
Exit codes: 0 ok/yes, 1 infeasible/no/violation, 2 input error, 3 budget.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path
from typing import Optional

from . import core, lollipop, oracle, pathroute, reductions, starpath, twostep
from .core import (
    Graph, Instance, ParallelSwapSequence, SwapSequence,
    detect_family, make_family, verify,
)

EXIT_OK = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def instance_to_dict(inst: Instance) -> dict:
    out = {
        "kind": inst.kind,
        "n": inst.graph.n,
        "edges": [list(e) for e in sorted(inst.graph.edges)],
    }
    if inst.tokens is not None:
        out["tokens"] = list(inst.tokens)
    if inst.colors is not None:
        out["colors"] = list(inst.colors)
        out["goal_colors"] = list(inst.goal_colors)
    if inst.graph.labels is not None:
        out["labels"] = {str(v): lab for v, lab in inst.graph.labels.items()}
    if inst.budget is not None:
        out["budget"] = inst.budget
    if inst.seed is not None:
        out["seed"] = inst.seed
    return out


def instance_from_dict(data: dict) -> Instance:
    labels = None
    if "labels" in data:
        labels = {int(v): lab for v, lab in data["labels"].items()}
    g = Graph(data["n"], [tuple(e) for e in data["edges"]], labels=labels)
    return Instance(
        kind=data["kind"],
        graph=g,
        tokens=tuple(data["tokens"]) if "tokens" in data else None,
        colors=tuple(data["colors"]) if "colors" in data else None,
        goal_colors=tuple(data["goal_colors"]) if "goal_colors" in data else None,
        budget=data.get("budget"),
        seed=data.get("seed"),
    )


def read_instance(path: str) -> Instance:
    return instance_from_dict(json.loads(Path(path).read_text()))


def write_instance(path: str, inst: Instance) -> None:
    Path(path).write_text(dumps_canonical(instance_to_dict(inst)))


def solution_to_dict(sol) -> dict:
    if isinstance(sol, SwapSequence):
        return {"steps": [[list(e)] for e in sol.steps]}
    return {"steps": [[list(e) for e in step] for step in sol.steps]}


def read_solution(path: str, kind: str):
    data = json.loads(Path(path).read_text())
    steps = data["steps"]
    if kind == "ts":
        if any(len(step) != 1 for step in steps):
            raise ValueError("ts solutions must have exactly one swap per step")
        return SwapSequence.of(e for (e,) in steps)
    return ParallelSwapSequence.of(steps)


def write_solution(path: str, sol) -> None:
    Path(path).write_text(dumps_canonical(solution_to_dict(sol)))


def emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(dumps_canonical(payload), end="")
    else:
        print(text)


# ---------------------------------------------------------------------------
# solve

def _dispatch_auto(inst: Instance) -> str:
    fam = detect_family(inst.graph)
    if inst.kind == "ts" and fam is not None and fam[0] in ("lollipop", "starpath"):
        return fam[0]
    if inst.kind == "rvm" and fam is not None and fam[0] == "path":
        return "path-oe"
    return "oracle"


def cmd_solve(args) -> int:
    inst = read_instance(args.instance)
    algo = args.algo if args.algo != "auto" else _dispatch_auto(inst)
    info: dict = {"algo": algo}
    if algo == "lollipop":
        if inst.kind != "ts":
            raise ValueError("lollipop solver applies to ts instances")
        sol = lollipop.solve_lollipop(inst.graph, inst.tokens)
        info["potential"] = lollipop.potential(inst.graph, inst.tokens)
    elif algo == "starpath":
        if inst.kind != "ts":
            raise ValueError("star-path solver applies to ts instances")
        sol = starpath.solve_starpath(inst.graph, inst.tokens)
        info["potential"] = starpath.potential(inst.graph, inst.tokens)
    elif algo == "path-oe":
        if inst.kind != "rvm":
            raise ValueError("odd-even path solver applies to rvm instances")
        sol = pathroute.ap_solve(inst.graph, inst.tokens)
    elif algo == "oracle":
        cap = args.node_cap
        if inst.kind == "ts":
            _, sol = oracle.ts_oracle(inst.graph, inst.tokens, node_cap=cap)
        elif inst.kind == "rvm":
            _, sol = oracle.rt_oracle(inst.graph, inst.tokens, node_cap=cap)
        else:
            _, sol = oracle.rt_colored_oracle(inst.graph, inst.colors,
                                              inst.goal_colors, node_cap=cap)
    else:
        raise ValueError(f"unknown algorithm {algo!r}")
    res = verify(inst, sol)
    assert res.ok, f"solver produced an invalid solution: {res}"
    info["length"] = len(sol)
    info["steps"] = solution_to_dict(sol)["steps"]
    if args.output:
        write_solution(args.output, sol)
    emit(args, info, f"algo={algo} length={len(sol)}"
         + (f" potential={info['potential']}" if "potential" in info else ""))
    return EXIT_OK


# ---------------------------------------------------------------------------
# decide2 / count2 / verify

def cmd_decide2(args) -> int:
    inst = read_instance(args.instance)
    if inst.kind in ("ts", "rvm"):
        yes, witness = twostep.decide_rt2(inst.graph, inst.tokens)
    else:
        yes, witness = twostep.decide_rt2_2colored(inst.graph, inst.colors,
                                                   inst.goal_colors)
    payload = {"answer": "yes" if yes else "no"}
    if yes:
        payload["witness"] = solution_to_dict(witness)["steps"]
        if args.output:
            write_solution(args.output, witness)
    emit(args, payload,
         "yes " + json.dumps(payload.get("witness")) if yes else "no")
    return EXIT_OK if yes else EXIT_NO


def cmd_count2(args) -> int:
    inst = read_instance(args.instance)
    if inst.kind == "crvm":
        raise ValueError("count2 applies to token instances, not colorings")
    count = oracle.count_two_step(inst.graph, inst.tokens)
    emit(args, {"count": count}, str(count))
    return EXIT_OK


def cmd_verify(args) -> int:
    inst = read_instance(args.instance)
    sol = read_solution(args.solution, inst.kind)
    res = verify(inst, sol)
    if res.ok:
        emit(args, {"ok": True}, "ok")
        return EXIT_OK
    payload = {"ok": False, "step": res.step, "reason": res.reason}
    emit(args, payload, f"violation at step {res.step}: {res.reason}")
    return EXIT_NO


# ---------------------------------------------------------------------------
# reduce / map-solution

def _read_sepsat(path: str) -> reductions.SepSatInstance:
    data = json.loads(Path(path).read_text())
    if "f1" in data:
        return reductions.SepSatInstance(
            data["num_vars"],
            tuple(frozenset(cl) for cl in data["f1"]),
            tuple(frozenset(cl) for cl in data["f2"]),
            tuple(frozenset(cl) for cl in data["f3"]),
        )
    clauses = [frozenset(cl) for cl in data["clauses"]]
    return reductions.find_separation(clauses, data["num_vars"])


def _sepsat_to_dict(inst: reductions.SepSatInstance) -> dict:
    return {
        "num_vars": inst.num_vars,
        "f1": [sorted(cl) for cl in inst.f1],
        "f2": [sorted(cl) for cl in inst.f2],
        "f3": [sorted(cl) for cl in inst.f3],
    }


def cmd_reduce(args) -> int:
    meta: dict = {"from": args.source, "to": args.target}
    if args.source == "3dm":
        data = json.loads(Path(args.instance).read_text())
        inst3 = reductions.ThreeDMInstance(data["n"],
                                           tuple(tuple(t) for t in data["triples"]))
        if args.target != "ts":
            raise ValueError("3dm reduces to ts only")
        out = reductions.reduce_3dm_ts(inst3)
        meta["source_instance"] = {"n": inst3.n, "triples": [list(t) for t in inst3.triples]}
    else:
        if args.source == "3sat":
            num_vars, clauses = reductions.parse_dimacs(Path(args.instance).read_text())
            sep_red = reductions.reduce_3sat_sepsat(clauses, num_vars)
            sep = sep_red.instance
            meta["source_instance"] = {"num_vars": num_vars,
                                       "clauses": [sorted(cl) for cl in clauses]}
            if args.target == "sepsat":
                Path(args.output).write_text(dumps_canonical(_sepsat_to_dict(sep)))
                if args.emit_map:
                    meta["sepsat"] = _sepsat_to_dict(sep)
                    Path(args.emit_map).write_text(dumps_canonical(meta))
                emit(args, {"num_vars": sep.num_vars},
                     f"wrote sep-sat instance with {sep.num_vars} variables")
                return EXIT_OK
        else:
            sep = _read_sepsat(args.instance)
            meta["source_instance"] = _sepsat_to_dict(sep)
        meta["sepsat"] = _sepsat_to_dict(sep)
        if args.target == "rvm":
            out = reductions.reduce_sepsat_rvm(sep, args.budget)
            meta["budget"] = args.budget
        elif args.target == "rvm3":
            out = reductions.reduce_sepsat_rvm_deg3(sep)
        elif args.target == "c2rvm":
            out = reductions.reduce_sepsat_2c3(sep)
        elif args.target == "c3rvm":
            out = reductions.reduce_sepsat_3c2(sep)
        else:
            raise ValueError(f"cannot reduce {args.source} to {args.target}")
    write_instance(args.output, out.instance())
    cert = {
        "bipartite": out.certificate.bipartite,
        "max_degree": out.certificate.max_degree,
        "expected_optimum": out.certificate.expected_optimum,
    }
    if args.emit_map:
        Path(args.emit_map).write_text(dumps_canonical(meta))
    emit(args, {"n": out.graph.n, "certificate": cert},
         f"n={out.graph.n} edges={len(out.graph.edges)} certificate={cert}")
    return EXIT_OK


def cmd_map_solution(args) -> int:
    meta = json.loads(Path(args.reduction).read_text())
    witness = json.loads(Path(args.witness).read_text())
    target = meta["to"]
    if meta["from"] == "3dm":
        inst3 = reductions.ThreeDMInstance(
            meta["source_instance"]["n"],
            tuple(tuple(t) for t in meta["source_instance"]["triples"]))
        sol = reductions.map_3dm_solution(inst3, witness["matching"])
        out = reductions.reduce_3dm_ts(inst3)
    else:
        sep = reductions.SepSatInstance(
            meta["sepsat"]["num_vars"],
            tuple(frozenset(cl) for cl in meta["sepsat"]["f1"]),
            tuple(frozenset(cl) for cl in meta["sepsat"]["f2"]),
            tuple(frozenset(cl) for cl in meta["sepsat"]["f3"]),
        )
        phi = {int(k): bool(v) for k, v in witness["assignment"].items()}
        if meta["from"] == "3sat":
            num_vars = meta["source_instance"]["num_vars"]
            clauses = [frozenset(cl) for cl in meta["source_instance"]["clauses"]]
            phi = reductions.reduce_3sat_sepsat(clauses, num_vars).forward(phi)
        if target == "rvm":
            sol = reductions.map_assignment_rvm(sep, phi, meta.get("budget", 3))
            out = reductions.reduce_sepsat_rvm(sep, meta.get("budget", 3))
        elif target == "rvm3":
            sol = reductions.map_assignment_rvm_deg3(sep, phi)
            out = reductions.reduce_sepsat_rvm_deg3(sep)
        elif target == "c2rvm":
            sol = reductions.map_assignment_2c3(sep, phi)
            out = reductions.reduce_sepsat_2c3(sep)
        elif target == "c3rvm":
            sol = reductions.map_assignment_3c2(sep, phi)
            out = reductions.reduce_sepsat_3c2(sep)
        else:
            raise ValueError(f"unknown reduction target {target!r}")
    res = verify(out.instance(), sol)
    assert res.ok, f"mapped solution failed verification: {res}"
    write_solution(args.output, sol)
    emit(args, {"length": len(sol)}, f"length={len(sol)} verified=ok")
    return EXIT_OK


# ---------------------------------------------------------------------------
# gen / bench

def _random_connected_graph(n: int, rng: random.Random) -> Graph:
    while True:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < 0.5]
        g = Graph(n, edges)
        if g.is_connected():
            return g


def cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    if args.family == "random":
        g = _random_connected_graph(args.n, rng)
    else:
        g = make_family(args.family, m=args.m, n=args.n)
    tokens = list(range(g.n))
    rng.shuffle(tokens)
    inst = Instance(kind=args.kind, graph=g, tokens=tuple(tokens), seed=args.seed)
    write_instance(args.output, inst)
    if args.dot:
        lines = ["graph g {"]
        for v in range(g.n):
            lab = g.labels[v] if g.labels else v
            lines.append(f'  {v} [label="{lab}"];')
        lines += [f"  {u} -- {v};" for u, v in sorted(g.edges)]
        lines.append("}")
        Path(args.dot).write_text("\n".join(lines) + "\n")
    emit(args, {"n": g.n, "edges": len(g.edges), "seed": args.seed},
         f"n={g.n} edges={len(g.edges)} seed={args.seed}")
    return EXIT_OK


def cmd_bench(args) -> int:
    rng = random.Random(args.seed)
    rows = []
    for size in range(2, args.max_size + 1):
        if args.suite == "lollipop":
            g = make_family("lollipop", m=max(1, size // 2), n=size - size // 2)
            solver, potential = lollipop.solve_lollipop, lollipop.potential
        elif args.suite == "starpath":
            g = make_family("starpath", m=max(1, size // 2), n=size - size // 2)
            solver, potential = starpath.solve_starpath, starpath.potential
        else:
            g = make_family("path", n=size)
            solver, potential = pathroute.ap_solve, None
        tokens = list(range(g.n))
        rng.shuffle(tokens)
        f = tuple(tokens)
        t0 = time.perf_counter()
        sol = solver(g, f)
        elapsed = time.perf_counter() - t0
        row = {"size": g.n, "length": len(sol), "seconds": round(elapsed, 6)}
        if potential is not None:
            row["potential"] = potential(g, f)
            assert row["potential"] == len(sol)
        rows.append(row)
        print("  ".join(f"{k}={v}" for k, v in row.items()))
    if args.json:
        print(dumps_canonical({"suite": args.suite, "rows": rows}), end="")
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="swaproute",
                                description="Token swapping and routing via matchings toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="solve an instance")
    sp.add_argument("-i", "--instance", required=True)
    sp.add_argument("--algo", default="auto",
                    choices=["auto", "oracle", "lollipop", "starpath", "path-oe"])
    sp.add_argument("-o", "--output")
    sp.add_argument("--node-cap", type=int, default=oracle.DEFAULT_NODE_CAP)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("decide2", help="decide 2-step solvability")
    sp.add_argument("-i", "--instance", required=True)
    sp.add_argument("-o", "--output")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_decide2)

    sp = sub.add_parser("count2", help="count ordered 2-step solutions")
    sp.add_argument("-i", "--instance", required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_count2)

    sp = sub.add_parser("verify", help="verify a solution file")
    sp.add_argument("-i", "--instance", required=True)
    sp.add_argument("-s", "--solution", required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("reduce", help="build a hardness instance")
    sp.add_argument("--from", dest="source", required=True,
                    choices=["3dm", "3sat", "sepsat"])
    sp.add_argument("--to", dest="target", required=True,
                    choices=["ts", "rvm", "rvm3", "c2rvm", "c3rvm", "sepsat"])
    sp.add_argument("-i", "--instance", required=True)
    sp.add_argument("-o", "--output", required=True)
    sp.add_argument("--budget", type=int, default=3)
    sp.add_argument("--emit-map", dest="emit_map")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("map-solution", help="map a source witness to a schedule")
    sp.add_argument("--reduction", required=True)
    sp.add_argument("--witness", required=True)
    sp.add_argument("-o", "--output", required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_map_solution)

    sp = sub.add_parser("gen", help="generate an instance")
    sp.add_argument("--family", required=True,
                    choices=["path", "cycle", "complete", "lollipop", "starpath", "random"])
    sp.add_argument("--m", type=int)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--kind", default="ts", choices=["ts", "rvm"])
    sp.add_argument("-o", "--output", required=True)
    sp.add_argument("--dot")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("bench", help="timing sweep for the polynomial solvers")
    sp.add_argument("--suite", required=True, choices=["lollipop", "starpath", "path-oe"])
    sp.add_argument("--max-size", type=int, default=30)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_bench)

    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except oracle.BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
