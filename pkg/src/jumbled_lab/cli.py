"""``jumbled-lab`` command line: gen, solve, verify, bench.

Exit codes: 0 agreement/verified, 2 usage, 3 size guard,
4 disagreement or verification failure.
"""
from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from jumbled_lab.conv3sum import (VARIANTS, brute_force_solve, default_universe, gen_planted,
                                  gen_random)
from jumbled_lab.errors import GuardError, RetryBudgetExhausted, UsageError
from jumbled_lab.index import BACKENDS
from jumbled_lab.reduction import (build_string_abc3, build_string_general, choose_primes,
                                   solve_construction, verify_construction)
from jumbled_lab.reduction.general import DEFAULT_MAX_SYMBOLS
from jumbled_lab.reduction.verify import DEFAULT_MAX_N
from jumbled_lab.serialize import SCHEMA, dumps, load_instance, write_artifacts

EXIT_OK, EXIT_USAGE, EXIT_GUARD, EXIT_FAIL = 0, 2, 3, 4
MIN_K = {"standard": 3, "strong": 2}
CSV_COLUMNS = ("backend", "n", "k", "s", "preprocess_ns", "query_ns_total", "queries")


def resolve_k(variant: str, k):
    if variant == "abc3":
        if k not in (None, 2):
            raise UsageError("the three-letter construction always uses two primes")
        return 2
    k = MIN_K[variant] if k is None else k
    if k < MIN_K[variant]:
        raise UsageError(f"variant {variant} needs k >= {MIN_K[variant]}, got {k}")
    return k


def construct(inst, variant: str, k=None, max_symbols=DEFAULT_MAX_SYMBOLS, delta_factor=2):
    """Choose primes for ``inst.u`` and build the variant's text."""
    k = resolve_k(variant, k)
    basis = choose_primes(inst.u, k, variant)
    if variant == "abc3":
        p, q = basis.primes
        return build_string_abc3(inst, p, q, max_symbols=max_symbols, delta_factor=delta_factor)
    return build_string_general(inst, basis, max_symbols=max_symbols)


def _basis_of(construction):
    if hasattr(construction, "basis"):
        return construction.basis
    return construction.p, construction.q


def _primes_of(construction):
    basis = _basis_of(construction)
    return list(basis.primes) if hasattr(basis, "primes") else list(basis)


def _emit(text: str, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    u = args.u if args.u is not None else default_universe(args.n, args.variant)
    if args.planted is None:
        inst = gen_random(args.n, u, args.seed)
    else:
        inst = gen_planted(args.n, u, args.seed, args.planted == "yes")
    _emit(inst.to_json(), args.out)
    return EXIT_OK


def run_solve(inst, variant, k, backend, mode, force=False, artifacts=None):
    """Build, query and cross-check one instance; returns the report dict."""
    build_guard = {"max_symbols": 2 ** 62} if force else {}
    index_guard = {"max_entries": 2 ** 62} if force else {}
    if not inst.conforms(variant):
        raise UsageError(f"instance has u={inst.u}, above the {variant} bound for n={inst.n}")
    construction = construct(inst, variant, k, **build_guard)
    if artifacts:
        write_artifacts(construction, artifacts)
    result = solve_construction(construction, backend, mode, **index_guard)
    oracle = brute_force_solve(inst)
    report = {
        "schema": SCHEMA,
        "command": "solve",
        "instance_digest": inst.digest(),
        "n": inst.n,
        "u": inst.u,
        "variant": variant,
        "k": resolve_k(variant, k),
        "primes": _primes_of(construction),
        "backend": backend,
        "mode": mode,
        "s": result.stats.s,
        "queries": result.stats.queries,
        "matches": result.stats.matches,
        "matched_gaps": sorted(result.stats.matched_gaps),
        "ji_answer": "yes" if result.answer else "no",
        "oracle_answer": "yes" if oracle else "no",
        "agreement": result.answer == (oracle is not None),
        "witness": result.witness.as_list() if result.witness else None,
        "witness_valid": inst.holds(result.witness) if result.witness else None,
        "oracle_witness": oracle.as_list() if oracle else None,
        "preprocess_ns": result.stats.preprocess_ns,
        "query_ns_total": result.stats.query_ns,
        "verification": None,
    }
    if mode == "verify":
        vr = verify_construction(inst, _basis_of(construction), construction=construction,
                                 max_n=2 ** 31 if force else DEFAULT_MAX_N)
        report["verification"] = vr.as_dict()
    return report


def cmd_solve(args) -> int:
    inst = load_instance(args.instance)
    report = run_solve(inst, args.variant, args.k, args.backend, args.mode, args.force,
                       args.artifacts)
    _emit(dumps(report), args.out)
    failed = (not report["agreement"] or report["witness_valid"] is False
              or (report["verification"] is not None and not report["verification"]["ok"]))
    if failed:
        sys.stderr.write("counterexample:\n" + inst.to_json())
        return EXIT_FAIL
    return EXIT_OK


def _trial_instance(n, variant, seed, trial):
    u = default_universe(n, variant)
    rng_seed = np.random.SeedSequence([seed, trial])
    kind = ("random", "planted-yes", "planted-no")[trial % 3]
    if kind == "planted-yes" and n >= 3:
        return kind, gen_planted(n, u, rng_seed, True)
    if kind == "planted-no":
        try:
            return kind, gen_planted(n, u, rng_seed, False, max_retries=200)
        except RetryBudgetExhausted:
            kind = "random"
    return "random", gen_random(n, u, rng_seed)


def _verify_trial(job):
    trial, n, variant, k, seed, delta_factor = job
    kind, inst = _trial_instance(n, variant, seed, trial)
    construction = construct(inst, variant, k, delta_factor=delta_factor)
    report = verify_construction(inst, _basis_of(construction), delta_factor=delta_factor,
                                 construction=construction, max_n=2 ** 31)
    return trial, kind, inst, report


def cmd_verify(args) -> int:
    n_max = args.n if args.n is not None else args.n_max
    if n_max > DEFAULT_MAX_N and not args.force:
        raise GuardError(f"sweep n up to {n_max} exceeds cap {DEFAULT_MAX_N} (use --force)")
    if n_max < 2:
        raise UsageError("need n >= 2")
    resolve_k(args.variant, args.k)
    rng = np.random.default_rng(args.seed)
    sizes = [args.n if args.n is not None else int(rng.integers(2, n_max + 1))
             for _ in range(args.trials)]
    jobs = [(t, sizes[t], args.variant, args.k, args.seed, args.delta_factor)
            for t in range(args.trials)]
    if args.parallel and args.parallel > 1:
        with ProcessPoolExecutor(args.parallel) as pool:
            results = list(pool.map(_verify_trial, jobs))
    else:
        results = [_verify_trial(job) for job in jobs]

    per_check, failures, kinds = {}, [], {}
    for trial, kind, inst, report in results:
        kinds[kind] = kinds.get(kind, 0) + 1
        for name, check in report.checks.items():
            tally = per_check.setdefault(name, {"passed": 0, "failed": 0})
            tally["passed" if check.passed else "failed"] += 1
            if not check.passed:
                failures.append({"trial": trial, "check": name, "detail": check.detail,
                                 "counterexample": check.counterexample,
                                 "instance": {"n": inst.n, "u": inst.u,
                                              "values": list(inst.values)}})
    summary = {"schema": SCHEMA, "command": "verify", "variant": args.variant,
               "k": resolve_k(args.variant, args.k), "trials": args.trials, "seed": args.seed,
               "delta_factor": args.delta_factor, "instance_kinds": kinds,
               "checks": per_check, "ok": not failures, "failures": failures[:20]}
    _emit(dumps(summary), args.out)
    return EXIT_OK if not failures else EXIT_FAIL


def bench_rows(ns, backends, variant, k, seed, force=False):
    """One row per (backend, n); rows blocked by a guard are reported and skipped."""
    rows, skipped = [], []
    kk = resolve_k(variant, k)
    for n in ns:
        inst = gen_random(n, default_universe(n, variant), np.random.SeedSequence([seed, n]))
        try:
            construction = construct(inst, variant, k,
                                     max_symbols=2 ** 62 if force else DEFAULT_MAX_SYMBOLS)
        except GuardError as exc:
            skipped.extend((b, n, str(exc)) for b in backends)
            continue
        for name in backends:
            opts = {"max_entries": 2 ** 62} if force and name == "naive" else {}
            try:
                result = solve_construction(construction, name, "stats", **opts)
            except GuardError as exc:
                skipped.append((name, n, str(exc)))
                continue
            st = result.stats
            rows.append({"backend": name, "n": n, "k": kk, "s": st.s,
                         "preprocess_ns": st.preprocess_ns, "query_ns_total": st.query_ns,
                         "queries": st.queries})
    return rows, skipped


def append_csv(path, rows):
    """Append rows with one write call; header only when the file is new."""
    lines = [",".join(str(r[c]) for c in CSV_COLUMNS) for r in rows]
    fd = os.open(path, os.O_WRONLY | os.O_APPEND | os.O_CREAT, 0o644)
    try:
        if os.fstat(fd).st_size == 0:
            lines.insert(0, ",".join(CSV_COLUMNS))
        os.write(fd, ("\n".join(lines) + "\n").encode())
    finally:
        os.close(fd)


def cmd_bench(args) -> int:
    ns = [int(v) for v in args.n.split(",")] if isinstance(args.n, str) else [args.n]
    backends = args.backend.split(",")
    for b in backends:
        if b not in BACKENDS:
            raise UsageError(f"unknown backend {b!r}")
    rows, skipped = bench_rows(ns, backends, args.variant, args.k, args.seed, args.force)
    for name, n, why in skipped:
        sys.stderr.write(f"skipped {name} n={n}: {why}\n")
    if args.out:
        if rows:
            append_csv(args.out, rows)
    else:
        sys.stdout.write(",".join(CSV_COLUMNS) + "\n")
        for r in rows:
            sys.stdout.write(",".join(str(r[c]) for c in CSV_COLUMNS) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jumbled-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--variant", choices=VARIANTS, default="strong")
        p.add_argument("--k", type=int, default=None, help="prime count (default 3 standard, 2 strong)")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", default=None)
        p.add_argument("--force", action="store_true", help="override size guards")
        p.add_argument("--parallel", type=int, default=1)

    g = sub.add_parser("gen", help="write a Convolution-3SUM instance as JSON")
    common(g)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--u", type=int, default=None)
    g.add_argument("--planted", choices=("yes", "no"), default=None)
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="answer an instance through a jumbled index")
    common(s)
    s.add_argument("instance", help="instance JSON path, or - for stdin")
    s.add_argument("--backend", choices=sorted(BACKENDS), default="sliding")
    s.add_argument("--mode", choices=("decide", "stats", "verify"), default="decide")
    s.add_argument("--artifacts", default=None, help="directory for text/queries dump")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="exhaustively check constructions on many instances")
    common(v)
    v.add_argument("--trials", type=int, default=20)
    v.add_argument("--n-max", type=int, default=32)
    v.add_argument("--n", type=int, default=None, help="fixed n for every trial")
    v.add_argument("--delta-factor", type=int, default=2,
                   help="hash surplus of three-letter queries in units of D")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="time backends on reduction texts, CSV output")
    common(b)
    b.add_argument("--n", default="16,32,64", help="comma-separated instance sizes")
    b.add_argument("--backend", default="naive,sliding", help="comma-separated backends")
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, RetryBudgetExhausted) as exc:
        sys.stderr.write(f"jumbled-lab: {exc}\n")
        return EXIT_USAGE
    except GuardError as exc:
        sys.stderr.write(f"jumbled-lab: {exc}\n")
        return EXIT_GUARD
    except OSError as exc:
        sys.stderr.write(f"jumbled-lab: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
