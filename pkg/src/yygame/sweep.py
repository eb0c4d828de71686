"""Exhaustive solvability sweeps over all same-arity tree pairs.

For every pair at each arity up to the configured maximum, the sweeper
certifies an explicit solution (or records a counterexample, which is a
first-class result: it is re-verified by the independent enumeration
oracle before being reported, never treated as an engine failure).

Symmetry reduction collapses the pair space under swapping the two
trees and mirroring both; the solver itself already exploits value
permutations. With symmetries off, every ordered pair is checked by a
reduction-free full scan, so the audit compares genuinely independent
paths.

For large arities a per-tree value table (one evaluation vector over
all 3^n assignments) turns the quadratic pair work into linear tree
work plus cheap vector comparisons.
"""

from __future__ import annotations

import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iter_product

import numpy as np

from .algebras import k_evaluate, k_solve
from .game import (
    BudgetError,
    Solution,
    count_solutions,
    derive_edge_labeling,
    make_graph,
    solve,
)
from .magma import INF, LABELS
from .tamari import is_prime_interval
from .trees import ArityError, Tree, enumerate_trees, mirror
from .version import __version__

SCHEMA_VERSION = 1
MODES = ("magma", "kauffman", "both")
GAP_WITNESS_CAP = 50


def catalan(k: int) -> int:
    return math.comb(2 * k, k) // (k + 1)


@dataclass(frozen=True)
class SweepConfig:
    max_arity: int
    prime_only: bool = False
    use_symmetry: bool = True
    mode: str = "magma"
    worker_count: int = 1
    output_path: str | None = None
    histogram: bool = False
    op_ceiling: int = 10**10
    force: bool = False
    fast_min_arity: int = 8  # value-table path kicks in at this arity

    def __post_init__(self):
        if self.max_arity < 2:
            raise ValueError("max_arity must be at least 2")
        if self.worker_count < 1:
            raise ValueError("worker_count must be at least 1")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")

    def to_json(self) -> dict:
        return {
            "max_arity": self.max_arity,
            "prime_only": self.prime_only,
            "use_symmetry": self.use_symmetry,
            "mode": self.mode,
            "worker_count": self.worker_count,
            "histogram": self.histogram,
            "op_ceiling": self.op_ceiling,
            "force": self.force,
            "fast_min_arity": self.fast_min_arity,
        }


@dataclass
class ArityResult:
    arity: int
    tree_count: int
    pair_count_total: int
    pairs_examined: int
    pairs_skipped_by_symmetry: int
    prime_pair_count: int
    magma: dict | None
    kauffman: dict | None
    counterexamples: list[dict]
    histogram: dict | None
    wall_time_s: float

    def to_json(self) -> dict:
        return {
            "arity": self.arity,
            "tree_count": self.tree_count,
            "pair_count_total": self.pair_count_total,
            "pairs_examined": self.pairs_examined,
            "pairs_skipped_by_symmetry": self.pairs_skipped_by_symmetry,
            "prime_pair_count": self.prime_pair_count,
            "magma": self.magma,
            "kauffman": self.kauffman,
            "counterexamples": self.counterexamples,
            "histogram": self.histogram,
            "wall_time_s": self.wall_time_s,
        }


@dataclass
class SweepReport:
    config: SweepConfig
    arities: list[ArityResult]
    total_wall_time_s: float

    @property
    def counterexamples(self) -> list[dict]:
        return [ce for a in self.arities for ce in a.counterexamples]

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "engine_version": __version__,
            "config": self.config.to_json(),
            "arities": [a.to_json() for a in self.arities],
            "total_wall_time_s": self.total_wall_time_s,
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"

    def write(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_json_str())


@lru_cache(maxsize=None)
def pair_orbit_reps(n: int) -> tuple[tuple[Tree, Tree], ...]:
    """Lexicographically least representatives of the orbits of ordered
    pairs under swap and mirror-both."""
    trees = enumerate_trees(n)
    mirrored = {t: mirror(t) for t in trees}
    reps = []
    for s in trees:
        for t in trees:
            ss, ts = s.canonical, t.canonical
            ms, mt = mirrored[s].canonical, mirrored[t].canonical
            key = min((ss, ts), (ts, ss), (ms, mt), (mt, ms))
            if key == (ss, ts):
                reps.append((s, t))
    return tuple(reps)


def orbit_key(s: Tree, t: Tree) -> tuple[str, str]:
    ss, ts = s.canonical, t.canonical
    ms, mt = mirror(s).canonical, mirror(t).canonical
    return min((ss, ts), (ts, ss), (ms, mt), (mt, ms))


# --- value tables (fast path) -------------------------------------------

_NP_TABLE = np.array(
    [[3, 2, 1, 3], [2, 3, 0, 3], [1, 0, 3, 3], [3, 3, 3, 3]], dtype=np.uint8
)


@lru_cache(maxsize=4)
def _digit_arrays(n: int) -> tuple[np.ndarray, ...]:
    idx = np.arange(3**n, dtype=np.int64)
    return tuple(
        (idx // 3 ** (n - 1 - i) % 3).astype(np.uint8) for i in range(n)
    )


def _value_table(t: Tree, digits: tuple[np.ndarray, ...]) -> np.ndarray:
    """Evaluations of ``t`` on every assignment, indexed in the solver's
    lexicographic order (first leaf most significant)."""

    def fold(st: Tree, base: int) -> np.ndarray:
        if st.is_leaf:
            return digits[base]
        a = fold(st.left, base)
        b = fold(st.right, base + st.left.arity)
        return _NP_TABLE[a, b]

    return fold(t, 0)


def _index_to_assignment(idx: int, n: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        idx, d = divmod(idx, 3)
        out.append(d)
    return tuple(reversed(out))


# --- solvability checks --------------------------------------------------


def _solve_fullscan(g) -> Solution | None:
    """Reduction-free scan of all 3^n assignments with plain full folds."""
    from .game import _plain_value

    for xs in iter_product(LABELS, repeat=g.arity):
        a = _plain_value(g.s, xs, 0)
        if a == INF:
            continue
        if _plain_value(g.t, xs, 0) == a:
            return Solution(xs, a)
    return None


def _k_solution_count(s: Tree, t: Tree) -> int:
    count = 0
    for gens in iter_product(("i", "j", "k"), repeat=s.arity):
        a = k_evaluate(s, gens)
        if not a.is_zero and k_evaluate(t, gens) == a:
            count += 1
    return count


def _certify(g, sol: Solution) -> None:
    labeling = derive_edge_labeling(g, sol.leaves)
    if not labeling.valid:
        raise RuntimeError(
            f"engine inconsistency: solver produced an invalid solution "
            f"for ({g.s}, {g.t}): {sol}"
        )


def _examine_chunk(
    n: int,
    lo: int,
    hi: int,
    mode: str,
    use_symmetry: bool,
    prime_only: bool,
    histogram: bool,
    use_tables: bool,
) -> dict:
    """Check pairs [lo, hi) of the deterministic pair list for one arity.

    Returns mergeable partial tallies; order within lists follows the
    pair list, so concatenating chunks in range order is deterministic.
    """
    trees = enumerate_trees(n)
    if use_symmetry:
        pairs = pair_orbit_reps(n)[lo:hi]
    else:
        k = len(trees)
        pairs = tuple(
            (trees[i // k], trees[i % k]) for i in range(lo, hi)
        )

    tables: dict[Tree, np.ndarray] = {}
    digits = _digit_arrays(n) if use_tables else None

    def table(t: Tree) -> np.ndarray:
        got = tables.get(t)
        if got is None:
            got = tables[t] = _value_table(t, digits)
        return got

    out = {
        "examined": 0,
        "prime": 0,
        "magma_solvable": 0,
        "kauffman_solvable": 0,
        "counterexamples": [],
        "magma_only": [],
        "histogram": {},
        "solvable_map": {},
    }

    for s, t in pairs:
        prime = is_prime_interval(s, t)
        if prime:
            out["prime"] += 1
        if prime_only and not prime:
            continue
        out["examined"] += 1
        g = make_graph(s, t)
        magma_ok: bool | None = None

        if mode in ("magma", "both"):
            if use_tables:
                ts_vals = table(s)
                mask = (ts_vals == table(t)) & (ts_vals != INF)
                if mask.any():
                    idx = int(np.flatnonzero(mask)[0])
                    sol = Solution(
                        _index_to_assignment(idx, n), int(ts_vals[idx])
                    )
                else:
                    sol = None
            elif use_symmetry:
                sol = solve(g)
            else:
                sol = _solve_fullscan(g)
            magma_ok = sol is not None
            if sol is not None:
                _certify(g, sol)
                out["magma_solvable"] += 1
            else:
                recheck = count_solutions(g)
                if recheck.total > 0:
                    raise RuntimeError(
                        f"engine inconsistency: solver found nothing for "
                        f"({s}, {t}) but the enumeration oracle counts "
                        f"{recheck.total}"
                    )
                out["counterexamples"].append(
                    {
                        "mode": "magma",
                        "s": s.canonical,
                        "t": t.canonical,
                        "recheck_total": recheck.total,
                    }
                )
            out["solvable_map"][(s.canonical, t.canonical)] = magma_ok

        if mode in ("kauffman", "both"):
            gens = k_solve(s, t)
            if gens is not None:
                a = k_evaluate(s, gens)
                if a.is_zero or k_evaluate(t, gens) != a:
                    raise RuntimeError(
                        f"engine inconsistency: bad signed solution for ({s}, {t})"
                    )
                out["kauffman_solvable"] += 1
            else:
                recheck = _k_solution_count(s, t)
                if recheck > 0:
                    raise RuntimeError(
                        f"engine inconsistency: signed solver found nothing "
                        f"for ({s}, {t}) but enumeration counts {recheck}"
                    )
                out["counterexamples"].append(
                    {
                        "mode": "kauffman",
                        "s": s.canonical,
                        "t": t.canonical,
                        "recheck_total": recheck,
                    }
                )
                if mode == "both" and magma_ok:
                    out["magma_only"].append(
                        {"s": s.canonical, "t": t.canonical}
                    )

        if histogram:
            total = count_solutions(g).total
            key = str(total)
            out["histogram"][key] = out["histogram"].get(key, 0) + 1

    return out


def _chunk_worker(args: tuple) -> dict:
    return _examine_chunk(*args)


def _examine_arity(n: int, cfg: SweepConfig) -> tuple[ArityResult, dict]:
    start = time.monotonic()
    trees = enumerate_trees(n)
    k = len(trees)
    pair_count_total = k * k
    if cfg.use_symmetry:
        pair_space = len(pair_orbit_reps(n))
    else:
        pair_space = pair_count_total
    use_tables = n >= cfg.fast_min_arity

    workers = min(cfg.worker_count, pair_space) or 1
    bounds = [
        (pair_space * i // workers, pair_space * (i + 1) // workers)
        for i in range(workers)
    ]
    args = [
        (n, lo, hi, cfg.mode, cfg.use_symmetry, cfg.prime_only,
         cfg.histogram, use_tables)
        for lo, hi in bounds
        if hi > lo
    ]
    if len(args) <= 1:
        chunks = [_examine_chunk(*a) for a in args]
    else:
        with ProcessPoolExecutor(max_workers=len(args)) as pool:
            chunks = list(pool.map(_chunk_worker, args))

    merged = {
        "examined": 0,
        "prime": 0,
        "magma_solvable": 0,
        "kauffman_solvable": 0,
        "counterexamples": [],
        "magma_only": [],
        "histogram": {},
        "solvable_map": {},
    }
    for ch in chunks:
        merged["examined"] += ch["examined"]
        merged["prime"] += ch["prime"]
        merged["magma_solvable"] += ch["magma_solvable"]
        merged["kauffman_solvable"] += ch["kauffman_solvable"]
        merged["counterexamples"].extend(ch["counterexamples"])
        merged["magma_only"].extend(ch["magma_only"])
        for key, count in ch["histogram"].items():
            merged["histogram"][key] = merged["histogram"].get(key, 0) + count
        merged["solvable_map"].update(ch["solvable_map"])

    magma_section = None
    if cfg.mode in ("magma", "both"):
        magma_section = {
            "solvable_count": merged["magma_solvable"],
            "certified_count": merged["magma_solvable"],
        }
    kauffman_section = None
    if cfg.mode in ("kauffman", "both"):
        kauffman_section = {"solvable_count": merged["kauffman_solvable"]}
        if cfg.mode == "both":
            gap = merged["magma_only"]
            kauffman_section["magma_only_count"] = len(gap)
            kauffman_section["magma_only_witnesses"] = gap[:GAP_WITNESS_CAP]

    result = ArityResult(
        arity=n,
        tree_count=k,
        pair_count_total=pair_count_total,
        pairs_examined=merged["examined"],
        pairs_skipped_by_symmetry=pair_count_total - pair_space,
        prime_pair_count=merged["prime"],
        magma=magma_section,
        kauffman=kauffman_section,
        counterexamples=merged["counterexamples"],
        histogram=dict(sorted(merged["histogram"].items(), key=lambda kv: int(kv[0])))
        if cfg.histogram
        else None,
        wall_time_s=round(time.monotonic() - start, 6),
    )
    return result, merged["solvable_map"]


def _check_budget(cfg: SweepConfig) -> None:
    for n in range(2, cfg.max_arity + 1):
        est = catalan(n - 1) ** 2 * 3**n
        if est > cfg.op_ceiling and not cfg.force:
            raise BudgetError(
                f"arity {n} needs ~{est:.2e} table lookups, over the ceiling "
                f"of {cfg.op_ceiling:.0e}; pass force to run anyway"
            )


def sweep(cfg: SweepConfig) -> SweepReport:
    """Check every pair (up to enabled symmetries) at arities 2..max.

    The report content is deterministic for a given config, wall-time
    fields aside. If an output path is configured the report is also
    persisted there as JSON.
    """
    _check_budget(cfg)
    start = time.monotonic()
    arities = []
    for n in range(2, cfg.max_arity + 1):
        result, _ = _examine_arity(n, cfg)
        arities.append(result)
    report = SweepReport(
        config=cfg,
        arities=arities,
        total_wall_time_s=round(time.monotonic() - start, 6),
    )
    if cfg.output_path:
        report.write(cfg.output_path)
    return report


@dataclass
class AuditVerdict:
    arity: int
    ok: bool
    mismatches: list[dict]
    counterexamples_match: bool

    def to_json(self) -> dict:
        return {
            "arity": self.arity,
            "ok": self.ok,
            "mismatches": self.mismatches,
            "counterexamples_match": self.counterexamples_match,
        }


def reduction_factor_audit(n: int, mode: str = "magma") -> AuditVerdict:
    """Cross-check symmetry-reduced and unreduced sweeps at one arity.

    Both paths must classify every orbit identically and find the same
    (expectedly empty) counterexample set.
    """
    if not 2 <= n <= 5:
        raise ArityError(f"audit supports arity 2..5, got {n}")
    base = dict(max_arity=max(n, 2), mode=mode, prime_only=False)
    sym_result, sym_map = _examine_arity(
        n, SweepConfig(use_symmetry=True, **base)
    )
    full_result, full_map = _examine_arity(
        n, SweepConfig(use_symmetry=False, **base)
    )

    trees = enumerate_trees(n)
    mismatches = []
    for s in trees:
        for t in trees:
            rep = orbit_key(s, t)
            if full_map[(s.canonical, t.canonical)] != sym_map[rep]:
                mismatches.append(
                    {"s": s.canonical, "t": t.canonical, "orbit_rep": list(rep)}
                )

    def expand(ces: list[dict]) -> set:
        return {
            orbit_key(_parse_cached(ce["s"]), _parse_cached(ce["t"]))
            for ce in ces
        }

    ces_match = expand(sym_result.counterexamples) == expand(
        full_result.counterexamples
    )
    return AuditVerdict(n, not mismatches and ces_match, mismatches, ces_match)


@lru_cache(maxsize=None)
def _parse_cached(text: str) -> Tree:
    from .trees import parse

    return parse(text)
