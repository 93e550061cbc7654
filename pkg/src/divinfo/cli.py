"""Command-line interface.

Subcommands: ``construct`` (build a profile and export it), ``measure``
(measures of a stored distribution), ``ensemble`` (measures of a stored
ensemble), ``verify`` (bound checks, JSON reports), ``sweep`` (grid CSV),
``qsc`` (commitment trade-off calculator).

Exit codes: 0 success / all checks passed, 1 at least one check failed
(reports are still emitted), 2 usage or input error. Diagnostics go to
stderr, data to stdout or ``--out``.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import acceptance
from .errors import DomainError
from .extremal import ExtremalParams, bound_pair, build_profile
from .measures import (
    Distribution,
    Ensemble,
    divergence_information,
    divergence_uniform,
    ensemble_average,
    entropy,
    holevo_information,
    relative_entropy,
    uniform,
)
from .quantum import check_quantum_holevo_bound, conjugated_cyclic_qensemble
from .verify import (
    SWEEP_CSV_HEADER,
    QscQuery,
    check_extremal_distribution,
    check_extremal_ensemble,
    check_holevo_bound,
    check_majorization_extremality,
    qsc_min_binding,
    random_uniform_average_ensemble,
    sweep,
)


def load_distribution(path) -> Distribution:
    """Read ``{"n": int, "p": [floats]}``; floats round-trip bit-exactly."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(data, dict) or "n" not in data or "p" not in data:
        raise ValueError(f"{path}: expected an object with keys 'n' and 'p'")
    if not isinstance(data["n"], int) or len(data["p"]) != data["n"]:
        raise ValueError(f"{path}: 'n' does not match the length of 'p'")
    return Distribution(data["p"])


def save_distribution(P: Distribution, path) -> None:
    payload = {"n": P.n, "p": [float(x) for x in P.p]}
    Path(path).write_text(json.dumps(payload) + "\n", encoding="utf-8")


def load_ensemble(path) -> Ensemble:
    """Read ``{"weights": [floats], "components": [[floats], ...]}``."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(data, dict) or "weights" not in data or "components" not in data:
        raise ValueError(f"{path}: expected keys 'weights' and 'components'")
    return Ensemble(data["weights"], data["components"])


def save_ensemble(E: Ensemble, path) -> None:
    payload = {
        "weights": [float(w) for w in E.weights.p],
        "components": [[float(x) for x in c.p] for c in E.components],
    }
    Path(path).write_text(json.dumps(payload) + "\n", encoding="utf-8")


def sweep_rows_to_csv(rows) -> str:
    """Render sweep rows with the fixed header; byte-deterministic."""
    lines = [SWEEP_CSV_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                [
                    str(r.n),
                    repr(r.k),
                    repr(r.s1),
                    str(r.crossover),
                    repr(r.divergence),
                    repr(r.rel_entropy),
                    repr(r.f_lower),
                    repr(r.f_upper),
                    repr(r.theta_ratio),
                    "true" if r.theorem_regime else "false",
                ]
            )
        )
    return "\n".join(lines) + "\n"


def emit_sweep_csv(rows, path) -> None:
    Path(path).write_text(sweep_rows_to_csv(rows), encoding="utf-8", newline="")


def _emit(text: str, out_path) -> None:
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8", newline="")
    else:
        sys.stdout.write(text)


def _sidecar_path(out_path) -> Path:
    return Path(out_path).with_suffix(".sidecar.json")


def _profile_sidecar(profile) -> dict:
    params = profile.params
    try:
        bounds = bound_pair(params.k, params.n)
        f_lower, f_upper = bounds.f_lower, bounds.f_upper
    except DomainError:
        f_lower = f_upper = None
    return {
        "n": params.n,
        "k": params.k,
        "crossover": profile.crossover,
        "theorem_regime": params.theorem_regime,
        "f_lower": f_lower,
        "f_upper": f_upper,
    }


def _cmd_construct(args) -> int:
    profile = build_profile(ExtremalParams(args.n, args.k))
    sidecar = _profile_sidecar(profile)
    if args.out:
        save_distribution(profile.dist, args.out)
        _sidecar_path(args.out).write_text(json.dumps(sidecar) + "\n", encoding="utf-8")
    else:
        payload = {
            "distribution": {"n": profile.dist.n, "p": [float(x) for x in profile.dist.p]},
            "sidecar": sidecar,
        }
        sys.stdout.write(json.dumps(payload) + "\n")
    return 0


def _cmd_measure(args) -> int:
    dist = load_distribution(args.infile)
    result = {
        "n": dist.n,
        "entropy": entropy(dist),
        "rel_entropy_uniform": relative_entropy(dist, uniform(dist.n)),
        "divergence_uniform": divergence_uniform(dist),
    }
    _emit(json.dumps(result) + "\n", args.out)
    return 0


def _cmd_ensemble(args) -> int:
    ens = load_ensemble(args.infile)
    avg = ensemble_average(ens)
    result = {
        "m": ens.m,
        "n": ens.n,
        "average": [float(x) for x in avg.p],
        "holevo": holevo_information(ens),
        "divergence": divergence_information(ens, strategy=args.strategy),
        "strategy": args.strategy,
    }
    _emit(json.dumps(result) + "\n", args.out)
    return 0


def _random_distribution(n: int, seed: int) -> Distribution:
    rng = np.random.default_rng(seed)
    return Distribution(rng.exponential(1.0, n), normalize=True)


def _require(args, *names) -> None:
    missing = [name for name in names if getattr(args, name) is None]
    if missing:
        flags = ", ".join(f"--{m}" for m in missing)
        raise ValueError(f"--theorem {args.theorem} needs {flags}")


def _cmd_verify(args) -> int:
    tol = args.tol
    if args.theorem == "all":
        reports = []
        for cid, batch in acceptance.run_all():
            reports.extend(
                r.to_dict() | {"criterion": cid} for r in batch
            )
    else:
        if args.theorem == "distribution":
            _require(args, "n", "k")
            checks = check_extremal_distribution(args.n, args.k, **_tol_kw(tol))
        elif args.theorem == "ensemble":
            _require(args, "n", "k")
            checks = check_extremal_ensemble(args.n, args.k, **_tol_kw(tol))
        elif args.theorem == "ub":
            if not args.infile:
                _require(args, "n")
            ens = (
                load_ensemble(args.infile)
                if args.infile
                else random_uniform_average_ensemble(args.n, args.seed, args.mode)
            )
            checks = [check_holevo_bound(ens, **_tol_kw(tol))]
        elif args.theorem == "majorization":
            if not args.infile:
                _require(args, "n")
            dist = (
                load_distribution(args.infile)
                if args.infile
                else _random_distribution(args.n, args.seed)
            )
            checks = check_majorization_extremality(dist, **_tol_kw(tol))
        else:  # quantum
            _require(args, "n")
            if args.k is not None:
                base = build_profile(ExtremalParams(args.n, args.k)).dist
            else:
                base = _random_distribution(args.n, args.seed)
            qens = conjugated_cyclic_qensemble(base, args.seed)
            checks = [check_quantum_holevo_bound(qens, **_tol_kw(tol))]
        reports = [r.to_dict() for r in checks]
    _emit(json.dumps(reports, indent=2) + "\n", args.out)
    return 0 if all(r["pass"] for r in reports) else 1


def _tol_kw(tol) -> dict:
    return {} if tol is None else {"tol": tol}


def _parse_grid(text: str, cast):
    return [cast(part) for part in text.split(",") if part]


def _cmd_sweep(args) -> int:
    rows = sweep(_parse_grid(args.n, int), _parse_grid(args.k, float))
    if args.format == "csv":
        _emit(sweep_rows_to_csv(rows), args.out)
    else:
        payload = [
            {
                "n": r.n, "k": r.k, "s1": r.s1, "crossover": r.crossover,
                "divergence": r.divergence, "rel_entropy": r.rel_entropy,
                "f_lower": r.f_lower, "f_upper": r.f_upper,
                "theta_ratio": r.theta_ratio, "theorem_regime": r.theorem_regime,
            }
            for r in rows
        ]
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def _cmd_qsc(args) -> int:
    bounds = qsc_min_binding(QscQuery(args.n_bits, args.b))
    result = {
        "asymptotic": bounds.asymptotic,
        "divergence": bounds.divergence,
        "holevo": bounds.holevo,
    }
    _emit(json.dumps(result) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="divinfo",
        description="Information measures, extremal constructions, and bound checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build an extremal profile and export it")
    p.add_argument("--n", type=int, required=True, help="support size")
    p.add_argument("--k", type=float, required=True, help="divergence budget in bits")
    p.add_argument("--out", help="distribution JSON path; sidecar written next to it")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("measure", help="measures of a stored distribution")
    p.add_argument("--in", dest="infile", required=True, help="distribution JSON")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_measure)

    p = sub.add_parser("ensemble", help="measures of a stored ensemble")
    p.add_argument("--in", dest="infile", required=True, help="ensemble JSON")
    p.add_argument(
        "--strategy",
        choices=["auto", "exhaustive", "uniform-average"],
        default="auto",
    )
    p.add_argument("--out")
    p.set_defaults(func=_cmd_ensemble)

    p = sub.add_parser("verify", help="run bound checks; exit 1 on any failure")
    p.add_argument(
        "--theorem",
        choices=["distribution", "ensemble", "ub", "majorization", "quantum", "all"],
        required=True,
    )
    p.add_argument("--n", type=int, help="support size / dimension")
    p.add_argument("--k", type=float, help="divergence budget in bits")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=["cyclic", "complement-pair"], default="cyclic")
    p.add_argument("--in", dest="infile", help="distribution/ensemble JSON input")
    p.add_argument("--tol", type=float, help="override the default check tolerance")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sweep", help="evaluate the construction on a grid")
    p.add_argument("--n", required=True, help="comma-separated support sizes")
    p.add_argument("--k", required=True, help="comma-separated budgets")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("qsc", help="commitment trade-off calculator")
    p.add_argument("--n-bits", type=float, required=True, help="string length in bits")
    p.add_argument("--b", type=float, required=True, help="concealing parameter")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_qsc)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except (ValueError, RuntimeError, OSError, json.JSONDecodeError) as exc:
        print(f"divinfo: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
