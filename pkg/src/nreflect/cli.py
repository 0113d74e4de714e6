"""Command-line entry point.

Subcommands
-----------
catalog list                 enumerate cataloged reflection cases
verify <subject> ...         exact residual checks at seeded rational samples
gaudin <subcommand> ...      exact model-level identity checks / dumps
simulate ...                 RK4 flow with conservation monitoring (CSV out)

Exit codes: 0 pass, 1 verification failure, 2 configuration error,
3 runtime numeric failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import dynamics, gaudin, reporting
from .errors import NReflectError
from .reflection import (
    CATALOG,
    build_rbar,
    case_by_label,
    compact_form_residual,
    equivalence_excluded,
    equivalence_residual,
    n_unitarity,
    nre_excluded,
    nre_residual,
    symmetry_excluded,
    symmetry_relation_residual,
    tamper,
)
from .rmatrix import cybe_pole, cybe_residual, rational_r, trig_r
from .sampling import DEFAULT_SAMPLES, DEFAULT_SEED, SplitMix64, sample_tuples
from .scalars import scalar_from_str, scalar_to_str, zeta

VERIFY_SUBJECTS = ("cybe", "nre", "nunitarity", "compact", "symmetry", "equivalence", "rbar-cybe")
GAUDIN_SUBCOMMANDS = ("hamiltonians", "involution", "residue-equality", "rbb", "lax", "mk", "trbrackets")


def _parse_params(text):
    params = {}
    if not text:
        return params
    for piece in text.split(","):
        if "=" not in piece:
            raise ValueError(f"parameter {piece!r} is not of the form name=value")
        name, value = piece.split("=", 1)
        params[name.strip()] = scalar_from_str(value)
    return params


def _emit(report: dict, out_path) -> None:
    payload = reporting.dumps(report)
    if out_path:
        with open(out_path, "w") as handle:
            handle.write(payload)
    else:
        sys.stdout.write(payload)


def _exit_code(report: dict) -> int:
    return 0 if report.get("verdict") == "pass" else 1


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _resolve_r(args):
    if args.r == "trig":
        return trig_r()
    return rational_r(args.n)


def cmd_verify(args) -> int:
    rng = SplitMix64(args.seed)
    count = args.samples

    if args.subject == "cybe":
        r = _resolve_r(args)
        triples = sample_tuples(rng, count, 3, reject=lambda *pt: cybe_pole(r, *pt))
        entries = [reporting.residual_entry(pt, cybe_residual(r, *pt)) for pt in triples]
        report = reporting.build_report("cybe", r.label, args.seed, entries)
        _emit(report, args.out)
        return _exit_code(report)

    case = case_by_label(args.case, _parse_params(args.params))
    if args.tamper:
        case = tamper(case, args.tamper)

    if args.subject == "nre" or args.subject == "compact":
        residual = nre_residual if args.subject == "nre" else compact_form_residual
        pairs = sample_tuples(rng, count, 2, reject=lambda l, n: nre_excluded(case, l, n))
        entries = [reporting.residual_entry(pt, residual(case, *pt)) for pt in pairs]
        report = reporting.build_report(args.subject, case.label, args.seed, entries)
    elif args.subject == "nunitarity":
        points = sample_tuples(rng, count, 1, reject=lambda nu: case.b_point_excluded(nu))
        report = n_unitarity(case, [pt[0] for pt in points])
        report["seed"] = args.seed
    elif args.subject == "symmetry":
        omega = scalar_from_str(args.omega, order=case.N) if args.omega else zeta(case.N)
        pairs = sample_tuples(rng, count, 2, reject=lambda l, n: symmetry_excluded(case, l, n))
        entries = [reporting.residual_entry(pt, symmetry_relation_residual(case, omega, *pt))
                   for pt in pairs]
        report = reporting.build_report("symmetry", case.label, args.seed, entries,
                                        extra={"omega": scalar_to_str(omega)})
    elif args.subject == "equivalence":
        pairs = sample_tuples(rng, count, 2, reject=lambda l, m: equivalence_excluded(case, l, m))
        entries = [reporting.residual_entry(pt, equivalence_residual(case, *pt)) for pt in pairs]
        report = reporting.build_report("equivalence", case.label, args.seed, entries)
    elif args.subject == "rbar-cybe":
        rbar = build_rbar(case, spot_check=False)
        triples = sample_tuples(rng, count, 3, reject=lambda *pt: cybe_pole(rbar, *pt))
        entries = [reporting.residual_entry(pt, cybe_residual(rbar, *pt)) for pt in triples]
        report = reporting.build_report("rbar-cybe", case.label, args.seed, entries)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown subject {args.subject!r}")

    _emit(report, args.out)
    return _exit_code(report)


# ---------------------------------------------------------------------------
# gaudin
# ---------------------------------------------------------------------------

def _load_model(path):
    with open(path) as handle:
        config = json.load(handle)
    return gaudin.model_from_config(config)


def cmd_gaudin(args) -> int:
    model = _load_model(args.config)
    rng = SplitMix64(args.seed)
    sub = args.subcommand

    if sub == "hamiltonians":
        text = gaudin.hamiltonians_text(model)
        if args.out:
            with open(args.out, "w") as handle:
                handle.write(text + "\n")
        else:
            sys.stdout.write(text + "\n")
        return 0

    entries = []
    if sub == "involution":
        for i in range(1, model.L + 1):
            for k in range(i + 1, model.L + 1):
                residual = gaudin.involution_residual(model, i, k)
                entry = {"sample": [f"H_{i}", f"H_{k}"]}
                if residual.is_zero():
                    entry["status"] = "exact-zero"
                else:
                    entry.update(status="nonzero", witness={"value": str(residual)})
                entries.append(entry)
    elif sub == "residue-equality":
        for m in range(1, model.L + 1):
            diff = gaudin.hamiltonian_residue(model, m) - gaudin.hamiltonian_explicit(model, m)
            entry = {"sample": [f"H_{m}"]}
            if diff.is_zero():
                entry["status"] = "exact-zero"
            else:
                entry.update(status="nonzero", witness={"value": str(diff)})
            entries.append(entry)
    elif sub in ("rbb", "lax", "mk", "trbrackets"):
        pairs = sample_tuples(rng, args.samples, 2,
                              reject=lambda l, m: gaudin.structural_excluded(model, l, m))
        for lam, mu in pairs:
            if sub == "rbb":
                residual = gaudin.rbb_residual(model, lam, mu)
            elif sub == "lax":
                residual = gaudin.lax_residual(model, lam, mu, args.power)
            elif sub == "mk":
                residual = gaudin.mk_residual(model, lam, mu, args.power)
            else:
                residual = gaudin.trB_bracket_residual(model, args.power, args.power_q, lam, mu)
            entries.append(reporting.residual_entry((lam, mu), residual))
    else:  # pragma: no cover
        raise ValueError(f"unknown gaudin subcommand {sub!r}")

    report = reporting.build_report(f"gaudin-{sub}", model.case.label, args.seed, entries,
                                    extra={"sites": [scalar_to_str(z) for z in model.sites]})
    _emit(report, args.out)
    return _exit_code(report)


# ---------------------------------------------------------------------------
# simulate
# ---------------------------------------------------------------------------

def default_initial_state(model, seed: int) -> dynamics.PhaseState:
    """Deterministic state on the bounded slice s+ = Sx + i Sy,
    s- = -Sx + i Sy, sz = 2i Sz with seeded real spin vectors."""
    rng = SplitMix64(seed)
    values = []
    for _ in range(model.L):
        sx, sy, sz = (rng.randint(-20, 20) / 10 or 0.5 for _ in range(3))
        values += [complex(sx, sy), complex(-sx, sy), 2j * sz]
    return dynamics.PhaseState(tuple(values))


def _load_state(path) -> dynamics.PhaseState:
    with open(path) as handle:
        raw = json.load(handle)
    return dynamics.PhaseState(tuple(complex(re, im) for re, im in raw))


def cmd_simulate(args) -> int:
    if args.dt <= 0 or args.t <= 0:
        raise NReflectError("dt and t must be positive")
    model = _load_model(args.config)
    state = _load_state(args.state) if args.state else default_initial_state(model, args.seed)
    traj = dynamics.rk4_simulate(model, args.hamiltonian, state, t_end=args.t, dt=args.dt)
    dynamics.write_csv(traj, args.out, model, log_every=args.log_every)
    keys = sorted(traj.conserved)
    for key in keys:
        sys.stdout.write(f"drift {key}: {traj.drift(key):.3e}\n")
    if not traj.ok:
        sys.stderr.write(traj.message + "\n")
        sys.stdout.write(f"aborted at t = {traj.times[-1]!r}\n")
        return 3
    return 0


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

def cmd_catalog(args) -> int:
    if args.action != "list":  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown catalog action {args.action!r}")
    for label in sorted(CATALOG):
        case = case_by_label(label)
        descriptor = {
            "label": case.label,
            "family": case.family,
            "N": case.N,
            "n": case.n,
            "r": case.base_r.kind,
            "params": {key: scalar_to_str(val) for key, val in sorted(case.params.items())},
        }
        sys.stdout.write(json.dumps(descriptor, sort_keys=True) + "\n")
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nreflect",
        description="Exact checks for generalized reflection structures and the induced Gaudin models.")
    sub = parser.add_subparsers(dest="command", required=True)

    cat = sub.add_parser("catalog", help="catalog of reflection cases")
    cat.add_argument("action", choices=["list"])
    cat.set_defaults(func=cmd_catalog)

    ver = sub.add_parser("verify", help="run an exact residual check")
    ver.add_argument("subject", choices=VERIFY_SUBJECTS)
    ver.add_argument("--case", default="id-2refl", help="catalog label (see catalog list)")
    ver.add_argument("--params", default="", help="overrides, e.g. a=1,b=5/3,c=3")
    ver.add_argument("--r", default="rational", choices=["rational", "trig"],
                     help="base r-matrix for the cybe subject")
    ver.add_argument("--n", type=int, default=2, help="factor size for the rational r")
    ver.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    ver.add_argument("--seed", type=lambda s: int(s, 0), default=DEFAULT_SEED)
    ver.add_argument("--tamper", default=None, choices=["g1-sign"],
                     help="deliberately break the case (negative testing)")
    ver.add_argument("--omega", default=None, help="scalar for the symmetry check; defaults to zeta_N")
    ver.add_argument("--out", default=None, help="write the JSON report here instead of stdout")
    ver.set_defaults(func=cmd_verify)

    gau = sub.add_parser("gaudin", help="exact model-level checks")
    gau.add_argument("subcommand", choices=GAUDIN_SUBCOMMANDS)
    gau.add_argument("--config", required=True, help="model config JSON path")
    gau.add_argument("--samples", type=int, default=10)
    gau.add_argument("--seed", type=lambda s: int(s, 0), default=DEFAULT_SEED)
    gau.add_argument("--power", type=int, default=2, help="p for lax/mk/trbrackets")
    gau.add_argument("--power-q", dest="power_q", type=int, default=2, help="q for trbrackets")
    gau.add_argument("--out", default=None)
    gau.set_defaults(func=cmd_gaudin)

    sim = sub.add_parser("simulate", help="integrate a Hamiltonian flow")
    sim.add_argument("--config", required=True)
    sim.add_argument("--hamiltonian", type=int, default=1)
    sim.add_argument("--t", type=float, required=True)
    sim.add_argument("--dt", type=float, required=True)
    sim.add_argument("--out", required=True, help="trajectory CSV path")
    sim.add_argument("--log-every", dest="log_every", type=int, default=100)
    sim.add_argument("--state", default=None, help="JSON [[re, im], ...] initial state")
    sim.add_argument("--seed", type=lambda s: int(s, 0), default=DEFAULT_SEED)
    sim.set_defaults(func=cmd_simulate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (NReflectError, KeyError, ValueError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def entry() -> None:  # console-script hook
    sys.exit(main())


if __name__ == "__main__":
    entry()
