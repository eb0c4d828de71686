"""Command-line surface for the engine.

Exit codes: 0 success, 1 engine error, 2 usage error (including
malformed tree strings, which are reported with their offset).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import game as game_mod
from .algebras import (
    f2_bracket,
    f2_jacobiator,
    k_check_presentation,
    k_evaluate,
    k_solve,
)
from .magma import LABELS, label_to_json
from .sweep import MODES, SweepConfig, sweep
from .tamari import decompose, is_prime_interval, is_prime_meetjoin, join, leq, meet
from .trees import (
    ArityError,
    Tree,
    TreeSyntaxError,
    enumerate_trees,
    parse,
)
from .version import __version__

DEFAULT_PORT = int(os.environ.get("YYGAME_PORT", "8000"))

USAGE_ERROR = 2
ENGINE_ERROR = 1


class CliUsageError(Exception):
    pass


def _tree(text: str) -> Tree:
    try:
        return parse(text)
    except TreeSyntaxError as exc:
        raise CliUsageError(f"bad tree string {text!r}: {exc}")
    except ArityError as exc:
        raise CliUsageError(f"bad tree string {text!r}: {exc}")


def _pair(args) -> game_mod.YYGraph:
    s, t = _tree(args.s), _tree(args.t)
    if s.arity != t.arity:
        raise CliUsageError(f"arity mismatch: {s.arity} vs {t.arity}")
    return game_mod.make_graph(s, t)


def _emit(args, payload, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload))
    else:
        print(text)


def cmd_solve(args) -> int:
    g = _pair(args)
    sol = game_mod.solve(g, args.target)
    if sol is None:
        _emit(args, None, "no solution")
    else:
        _emit(
            args,
            sol.to_json(),
            f"leaves: {' '.join(map(str, sol.leaves))}\nvalue: {sol.value}",
        )
    return 0


def cmd_count(args) -> int:
    counts = game_mod.count_solutions(_pair(args))
    lines = [f"value {v}: {c}" for v, c in enumerate(counts.by_value)]
    lines.append(f"total: {counts.total}")
    _emit(args, counts.to_json(), "\n".join(lines))
    return 0


def cmd_classify(args) -> int:
    g = _pair(args)
    interval_prime = is_prime_interval(g.s, g.t)
    mj_prime = is_prime_meetjoin(g.s, g.t)
    word = "prime" if interval_prime else "decomposable"
    text = word
    if interval_prime != mj_prime:
        text += f"  (lattice-extremes criterion disagrees: {mj_prime})"
    _emit(
        args,
        {"prime": interval_prime, "interval_prime": interval_prime,
         "meetjoin_prime": mj_prime},
        text,
    )
    return 0


def cmd_decompose(args) -> int:
    g = _pair(args)
    dec = decompose(g.s, g.t)
    if getattr(args, "json", False):
        print(json.dumps(dec.to_json()))
    else:
        def show(d, indent=0):
            pad = "  " * indent
            if d.prime:
                print(f"{pad}prime: ({d.s}, {d.t})")
            else:
                print(f"{pad}split ({d.s}, {d.t}) at [{d.interval.lo}, {d.interval.hi}]")
                show(d.internal, indent + 1)
                show(d.quotient, indent + 1)

        show(dec)
    return 0


def cmd_tamari(args) -> int:
    a, b = _tree(args.a), _tree(args.b)
    if a.arity != b.arity:
        raise CliUsageError(f"arity mismatch: {a.arity} vs {b.arity}")
    if args.relation == "leq":
        value = leq(a, b)
        _emit(args, {"leq": value}, str(value).lower())
    else:
        op = meet if args.relation == "meet" else join
        result = op(a, b)
        _emit(args, {args.relation: result.canonical}, result.canonical)
    return 0


def cmd_enumerate(args) -> int:
    trees = enumerate_trees(args.n)
    strings = [t.canonical for t in trees]
    _emit(args, strings, "\n".join(strings))
    return 0


def cmd_sweep(args) -> int:
    cfg = SweepConfig(
        max_arity=args.max_arity,
        prime_only=args.prime_only,
        use_symmetry=not args.no_symmetry,
        mode=args.mode,
        worker_count=args.workers,
        output_path=args.output,
        histogram=args.histogram,
        force=args.force,
    )
    report = sweep(cfg)
    if getattr(args, "json", False):
        print(report.to_json_str(), end="")
        return 0
    for a in report.arities:
        parts = [
            f"arity {a.arity}:",
            f"{a.tree_count} trees,",
            f"{a.pairs_examined} pairs examined",
            f"({a.pairs_skipped_by_symmetry} skipped by symmetry),",
            f"{a.prime_pair_count} prime,",
        ]
        if a.magma is not None:
            parts.append(f"{a.magma['solvable_count']} solvable,")
        if a.kauffman is not None:
            parts.append(f"{a.kauffman['solvable_count']} signed-solvable,")
        parts.append(f"{len(a.counterexamples)} counterexamples")
        print(" ".join(parts))
    total = len(report.counterexamples)
    print(f"counterexamples: {total}")
    if total:
        for ce in report.counterexamples:
            print(f"  !! {ce['mode']}: ({ce['s']}, {ce['t']})")
    if cfg.output_path:
        print(f"report written to {cfg.output_path}")
    return 0


def cmd_algebra_check(args) -> int:
    f2_symmetric = all(
        f2_bracket(a, b) == f2_bracket(b, a) for a in range(8) for b in range(8)
    )
    f2_jacobi = all(
        f2_jacobiator(a, b, c) == 0
        for a in range(8)
        for b in range(8)
        for c in range(8)
    )
    pres = k_check_presentation()
    payload = {
        "f2_bracket_symmetric": f2_symmetric,
        "f2_jacobiator_zero": f2_jacobi,
        "signed_presentation": pres.to_json(),
    }
    ok = f2_symmetric and f2_jacobi and pres.ok
    text = "\n".join(
        [
            f"binary-field bracket symmetric: {f2_symmetric}",
            f"binary-field jacobiator vanishes (512 triples): {f2_jacobi}",
            f"signed relations [[i,j],i]=j, [[j,i],j]=i: "
            f"{pres.relation_iji and pres.relation_jij}",
            f"signed jacobiator vanishes (27 triples): {pres.jacobi_zero}",
            f"signed bracket antisymmetric: {pres.antisymmetric}",
        ]
    )
    _emit(args, payload, text)
    return 0 if ok else ENGINE_ERROR


def cmd_ksolve(args) -> int:
    s, t = _tree(args.s), _tree(args.t)
    if s.arity != t.arity:
        raise CliUsageError(f"arity mismatch: {s.arity} vs {t.arity}")
    gens = k_solve(s, t)
    if gens is None:
        _emit(args, None, "no signed solution")
    else:
        value = k_evaluate(s, gens)
        _emit(
            args,
            {"gens": list(gens), "value": str(value)},
            f"gens: {' '.join(gens)}\nvalue: {value}",
        )
    return 0


def cmd_export_dot(args) -> int:
    g = _pair(args)
    labeling = None
    if args.labels:
        raw = [piece.strip() for piece in args.labels.split(",")]
        try:
            xs = [int(piece) for piece in raw]
        except ValueError:
            raise CliUsageError(f"bad labels {args.labels!r}: expected ints 0..2")
        if any(v not in LABELS for v in xs):
            raise CliUsageError(f"bad labels {args.labels!r}: expected ints 0..2")
        if len(xs) != g.arity:
            raise CliUsageError(
                f"labels length {len(xs)} does not match arity {g.arity}"
            )
        labeling = game_mod.derive_edge_labeling(g, xs).labels
    print(game_mod.to_dot(g, labeling))
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="yygame",
        description="Edge-labeling games on spliced pairs of planar binary trees",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="machine output")

    p = sub.add_parser("solve", help="find a leaf assignment solving a game")
    p.add_argument("s")
    p.add_argument("t")
    p.add_argument("--target", type=int, choices=(0, 1, 2), default=None)
    add_json(p)
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("count", help="count solutions by common value")
    p.add_argument("s")
    p.add_argument("t")
    add_json(p)
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("classify", help="prime or decomposable")
    p.add_argument("s")
    p.add_argument("t")
    add_json(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("decompose", help="split a game into prime components")
    p.add_argument("s")
    p.add_argument("t")
    add_json(p)
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("tamari", help="rotation-order queries")
    p.add_argument("relation", choices=("meet", "join", "leq"))
    p.add_argument("a")
    p.add_argument("b")
    add_json(p)
    p.set_defaults(fn=cmd_tamari)

    p = sub.add_parser("enumerate", help="all trees of one arity")
    p.add_argument("n", type=int)
    add_json(p)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("sweep", help="exhaustive solvability check")
    p.add_argument("--max-arity", type=int, default=7)
    p.add_argument("--prime-only", action="store_true")
    p.add_argument("--no-symmetry", action="store_true")
    p.add_argument("--mode", choices=MODES, default="magma")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--output", default=None, help="write the JSON report here")
    p.add_argument("--histogram", action="store_true")
    p.add_argument("--force", action="store_true", help="ignore the budget guard")
    add_json(p)
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("algebra-check", help="bracket-table self checks")
    add_json(p)
    p.set_defaults(fn=cmd_algebra_check)

    p = sub.add_parser("k-solve", help="signed-generator solve")
    p.add_argument("s")
    p.add_argument("t")
    add_json(p)
    p.set_defaults(fn=cmd_ksolve)

    p = sub.add_parser("export-dot", help="Graphviz export of a game graph")
    p.add_argument("s")
    p.add_argument("t")
    p.add_argument("--labels", default=None, help="comma-separated leaf labels")
    p.set_defaults(fn=cmd_export_dot)

    p = sub.add_parser("serve", help="run the HTTP/JSON service")
    p.add_argument("--port", type=int, default=DEFAULT_PORT)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CliUsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ArityError, ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ENGINE_ERROR


if __name__ == "__main__":
    sys.exit(main())
