"""Command-line front end.

Exit codes: 0 all checks pass, 1 a residual check failed, 2 invalid input.
All results go to stdout as JSON; diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import logging
import sys
import time
import warnings
from dataclasses import dataclass

import numpy as np

from . import algebra as A
from . import fourier as F
from . import io
from . import lemmas
from . import representations as RP
from . import translation as T
from .group import GroupError, InvalidElementError, cyclic_product
from .sampling import random_element, random_unitary_rep, rng_from
from .weight import InvalidWeightError, is_symmetric, make_length_weight, verify_weight

log = logging.getLogger("beurling")

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2
NAIVE_LIMIT = 1 << 16
BENCH_TOL = 1e-9


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    group: str | None
    weight: str | None
    tolerance: float = A.DEFAULT_TOL
    seed: int = 0
    trials: int = 200
    compact: bool = False

    def __post_init__(self):
        if not self.tolerance > 0:
            raise InputError("tolerance must be positive")
        if self.trials < 0:
            raise InputError("trials must be >= 0")

    def load(self):
        if self.group is None:
            raise InputError("--group is required")
        G = io.load_group(self.group)
        return G, io.load_weight(G, self.weight)


def _emit(obj, cfg: RunConfig):
    sys.stdout.write(io.dump(obj, compact=cfg.compact) + "\n")


# -- commands --------------------------------------------------------------------

def cmd_check_lemmas(cfg: RunConfig, args) -> int:
    G, w = cfg.load()
    results = lemmas.run_all(w, seed=cfg.seed, trials=cfg.trials, tol=cfg.tolerance,
                             explore=args.explore)
    summary = lemmas.summarize(results)
    summary["group"] = G.to_json()
    summary["symmetric_weight"] = w.symmetric
    _emit(summary, cfg)
    for r in results:
        log.info("%-26s %-8s %s", r.name, r.status, r.max_residual)
    return EXIT_OK if summary["ok"] else EXIT_FAIL


def cmd_verify_weight(cfg: RunConfig, args) -> int:
    if cfg.group is None or cfg.weight is None:
        raise InputError("--group and --weight are required")
    G = io.load_group(cfg.group)
    values = io.parse_weight_values(io._load(cfg.weight))
    report = verify_weight(G, values)
    out = report.to_json()
    out["symmetric"] = is_symmetric(G, values)
    _emit(out, cfg)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_convolve(cfg: RunConfig, args) -> int:
    G, w = cfg.load()
    f = io.load_function(w, args.f)
    g = io.load_function(w, args.g)
    if args.classical:
        h = A.conv_classical(f, g)
    elif args.fast:
        h = A.conv_w_fast(f, g)
    else:
        h = A.conv_w_naive(f, g)
    _emit(h.to_json(), cfg)
    return EXIT_OK


def cmd_fourier(cfg: RunConfig, args) -> int:
    G, w = cfg.load()
    f = io.load_function(w, args.f)
    vals = F.fourier_w_fast(f) if args.fast else F.fourier_w(f)
    _emit({"characters": [list(c) for c in F.characters(G)], "values": io.complex_list(vals)}, cfg)
    return EXIT_OK


_TRANSLATIONS = {"gamma": T.gamma, "theta": T.theta, "L": T.L, "R": T.R}


def cmd_translate(cfg: RunConfig, args) -> int:
    G, w = cfg.load()
    f = io.load_function(w, args.f)
    _emit(_TRANSLATIONS[args.op](args.s, f).to_json(), cfg)
    return EXIT_OK


def cmd_rep(cfg: RunConfig, args) -> int:
    G, w = cfg.load()
    if args.rep_cmd == "regular":
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            rep = RP.regular_rep(G, w)
        for c in caught:
            log.warning("%s", c.message)
        _emit(rep.to_json(), cfg)
        return EXIT_OK
    # round-trip
    if G.kind != "cyclic_product":
        raise InputError("rep round-trip draws random representations on cyclic_product groups only")
    if not w.symmetric:
        raise InputError("rep round-trip requires a symmetric weight")
    rng = rng_from(cfg.seed)
    rows = []
    worst = 0.0
    for i in range(max(cfg.trials, 1)):
        rep = random_unitary_rep(G, args.dim, rng)
        back = RP.reconstruct(RP.integrated_form(rep, w), check=False)
        err = float(np.max(np.linalg.norm(back.matrices - rep.matrices, 2, axis=(1, 2))))
        res = back.residuals()
        f = random_element(w, rng)
        alg_err = RP.op_norm(RP.integrate(back, f) - RP.integrated_form(rep, w)(f))
        worst = max(worst, err, alg_err, *res.values())
        rows.append({"trial": i, "rep_error": err, "integrate_error": alg_err, **res})
    ok = worst < args.tol
    _emit({"dim": args.dim, "trials": len(rows), "max_error": worst, "tol": args.tol,
           "ok": ok, "rows": rows}, cfg)
    return EXIT_OK if ok else EXIT_FAIL


def bench_rows(sizes, seed: int = 0, repeat: int = 1):
    """Naive vs FFT weighted convolution on Z_n with a polynomial length weight."""
    rng = rng_from(seed)
    rows = []
    for n in sizes:
        G = cyclic_product([n])
        gens = {1 % n, (n - 1) % n}
        w = make_length_weight(G, gens, "polynomial", 2.0)
        f, g = random_element(w, rng), random_element(w, rng)
        row = {"n": n}
        t0 = time.perf_counter()
        for _ in range(repeat):
            fast = A.conv_w_fast(f, g)
        row["fast_s"] = (time.perf_counter() - t0) / repeat
        if n > NAIVE_LIMIT:
            row.update(naive_s=None, deviation=None, note="naive skipped: size above 2^16")
        else:
            t0 = time.perf_counter()
            for _ in range(repeat):
                naive = A.conv_w_naive(f, g)
            row["naive_s"] = (time.perf_counter() - t0) / repeat
            row["deviation"] = A.rel_err(fast, naive)
        rows.append(row)
    return rows


def cmd_bench(cfg: RunConfig, args) -> int:
    try:
        sizes = [int(x) for x in args.sizes.split(",") if x.strip()]
    except ValueError as exc:
        raise InputError(f"bad --sizes: {exc}") from exc
    if not sizes or any(n < 1 for n in sizes):
        raise InputError("sizes must be positive integers")
    rows = bench_rows(sizes, seed=cfg.seed, repeat=args.repeat)
    ok = all(r["deviation"] is None or r["deviation"] < BENCH_TOL for r in rows)
    _emit({"tol": BENCH_TOL, "ok": ok, "rows": rows}, cfg)
    return EXIT_OK if ok else EXIT_FAIL


# -- argument parsing ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", help="group JSON file")
    common.add_argument("--weight", help="weight JSON file (default: trivial weight)")
    common.add_argument("--tolerance", type=float, default=A.DEFAULT_TOL)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=200)
    common.add_argument("--json", action="store_true", help="compact single-line JSON")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="beurling", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check-lemmas", parents=[common], help="run every applicable identity suite")
    s.add_argument("--explore", action="store_true",
                   help="measure residuals of suites whose hypotheses fail instead of skipping")
    s.set_defaults(func=cmd_check_lemmas)

    s = sub.add_parser("verify-weight", parents=[common], help="check w(e)=1 and submultiplicativity")
    s.set_defaults(func=cmd_verify_weight)

    s = sub.add_parser("convolve", parents=[common], help="weighted convolution of two functions")
    s.add_argument("--f", required=True)
    s.add_argument("--g", required=True)
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--fast", action="store_true", help="FFT path (cyclic_product only)")
    mode.add_argument("--classical", action="store_true", help="unweighted convolution")
    s.set_defaults(func=cmd_convolve)

    s = sub.add_parser("fourier", parents=[common], help="weighted Fourier transform")
    s.add_argument("--f", required=True)
    s.add_argument("--fast", action="store_true")
    s.set_defaults(func=cmd_fourier)

    s = sub.add_parser("translate", parents=[common], help="apply a translation operator")
    s.add_argument("--op", choices=sorted(_TRANSLATIONS), required=True)
    s.add_argument("--s", type=int, required=True)
    s.add_argument("--f", required=True)
    s.set_defaults(func=cmd_translate)

    s = sub.add_parser("rep", help="representation tools")
    rsub = s.add_subparsers(dest="rep_cmd", required=True)
    r = rsub.add_parser("round-trip", parents=[common], help="reconstruct random reps from their integrated forms")
    r.add_argument("--dim", type=int, default=3)
    r.add_argument("--tol", type=float, default=1e-8)
    r.set_defaults(func=cmd_rep, trials=10)
    r = rsub.add_parser("regular", parents=[common], help="export the regular representation")
    r.set_defaults(func=cmd_rep)

    s = sub.add_parser("bench", parents=[common], help="naive vs FFT weighted convolution timings")
    s.add_argument("--sizes", default="256,1024,4096")
    s.add_argument("--repeat", type=int, default=1)
    s.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(message)s")
    try:
        cfg = RunConfig(args.group, args.weight, args.tolerance, args.seed, args.trials, args.json)
        return args.func(cfg, args)
    except InvalidWeightError as exc:
        msg = str(exc)
        print(msg if msg.startswith("invalid weight") else f"invalid weight: {msg}", file=sys.stderr)
        return EXIT_INVALID
    except (InputError, io.FormatError, GroupError, InvalidElementError, RP.RepresentationError,
            A.ContextMismatchError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
