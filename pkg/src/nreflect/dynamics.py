"""Floating-point Hamiltonian flows generated by the Gaudin Hamiltonians.

The flow of a quadratic Hamiltonian H is x_dot = {x, H} for every spin
coordinate x; trajectories are integrated with fixed-step classical RK4 and
monitored through the conserved quantities: the other Hamiltonians, the
Casimirs, and tr/det of B(lam) at fixed probe points (isospectrality).

Spin coordinates are independent complex variables, matching the algebra
layer; no reality projection is applied.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .errors import ModelError
from .gaudin import GaudinModel, hamiltonian_explicit
from .scalars import Cyclotomic, as_scalar, to_complex
from .spinalg import KINDS, SpinPoly, casimir, poisson_bracket, var_index, var_name


@dataclass
class PhaseState:
    """Complex values for (s_1^+, s_1^-, s_1^z, s_2^+, ...) at time t."""

    values: tuple
    t: float = 0.0

    def __post_init__(self):
        self.values = tuple(complex(v) for v in self.values)
        if any(not (math.isfinite(v.real) and math.isfinite(v.imag)) for v in self.values):
            raise ValueError("phase-state entries must be finite")
        if len(self.values) % 3:
            raise ValueError("phase state length must be 3 L")

    @staticmethod
    def from_site_values(site_values) -> "PhaseState":
        """site_values: sequence of (s_plus, s_minus, s_z) per site."""
        flat = [component for site in site_values for component in site]
        return PhaseState(tuple(flat))

    @property
    def sites(self) -> int:
        return len(self.values) // 3

    def value(self, j: int, kind: str) -> complex:
        return self.values[var_index(j, kind)]


def compile_spinpoly(poly: SpinPoly):
    """Compile a spin polynomial to a fast numeric callable of the flat
    coordinate vector."""
    parts = []
    for expo, coeff in sorted(poly.terms.items()):
        factors = "".join(f"*v[{idx}]" * e for idx, e in enumerate(expo))
        parts.append(f"({to_complex(coeff)!r})" + factors)
    source = " + ".join(parts) if parts else "0j"
    return eval(f"lambda v: {source}", {}, {})  # noqa: S307 - source built from exact terms


def hamiltonian_for(model: GaudinModel, selection) -> SpinPoly:
    """An index picks H_i; a sequence of weights takes a combination;
    a SpinPoly passes through."""
    if isinstance(selection, SpinPoly):
        return selection
    if isinstance(selection, int):
        return hamiltonian_explicit(model, selection)
    total = SpinPoly.zero(model.L)
    for i, w in enumerate(selection, start=1):
        total = total + as_scalar(w) * hamiltonian_explicit(model, i)
    return total


def vector_field_callables(model: GaudinModel, hamiltonian: SpinPoly):
    """Compiled {x, H} for every coordinate x."""
    compiled = []
    for idx in range(3 * model.L):
        j, k = divmod(idx, 3)
        gen = SpinPoly.generator(model.L, j + 1, KINDS[k])
        compiled.append(compile_spinpoly(poisson_bracket(gen, hamiltonian)))
    return compiled

def vector_field(model: GaudinModel, selection, state: PhaseState):
    """Derivatives {x, H} evaluated at the state, one per coordinate."""
    h = hamiltonian_for(model, selection)
    fields = vector_field_callables(model, h)
    vals = list(state.values)
    return [f(vals) for f in fields]


# ---------------------------------------------------------------------------
# probes and conserved quantities
# ---------------------------------------------------------------------------

def default_probes(model: GaudinModel, offsets=(3, 5, 7)):
    """Rational probe points z_max + offset, bumped past any exact pole."""
    rational_sites = [z for z in model.sites if isinstance(z, Fraction)]
    base = max(rational_sites) if rational_sites else Fraction(0)
    probes = []
    for offset in offsets:
        candidate = base + Fraction(offset)
        while _probe_excluded(model, candidate) or candidate in probes:
            candidate += 1
        probes.append(candidate)
    return tuple(probes)


def _probe_excluded(model: GaudinModel, probe) -> bool:
    case = model.case
    try:
        if not case.weights.defined_at(probe):
            return True
        for point in case.orbit(probe):
            if any(point == z for z in model.sites):
                return True
    except Exception:
        return True
    return False


def _ratfun_complex(f, x: complex) -> complex:
    num = 0j
    for c in reversed(f.num.coeffs):
        num = num * x + to_complex(c)
    den = 1 + 0j
    for root, mult in f.roots:
        den *= (x - to_complex(root)) ** mult
    return num / den


def _site_coefficients(model: GaudinModel, lam) -> list:
    """Complex c_m with B(lam) = sum_m c_m [[s_m^z/2, s_m^+], [s_m^-, -s_m^z/2]].
    Exact probes are evaluated exactly and floated once; float/complex probes
    go through the numeric path."""
    case = model.case
    exact = isinstance(lam, (int, Fraction, Cyclotomic))
    if exact:
        lam = as_scalar(lam)
        coeffs = [as_scalar(0)] * model.L
        point = lam
        for j in range(case.N):
            g = case.weights(j, lam)
            for m, zm in enumerate(model.sites):
                coeffs[m] = coeffs[m] + g / (point - zm)
            if j < case.N - 1:
                point = case.tau(point)
        return [to_complex(c) for c in coeffs]
    lam = complex(lam)
    coeffs = [0j] * model.L
    point = lam
    for j in range(case.N):
        g = _ratfun_complex(case.weights.gs[j], lam)
        for m, zm in enumerate(model.sites):
            coeffs[m] = coeffs[m] + g / (point - to_complex(zm))
        if j < case.N - 1:
            point = _float_tau(case, point)
    return coeffs


def probe_evaluator(model: GaudinModel, probe):
    """callable(state values) -> (tr B, det B) at the probe."""
    coeffs = _site_coefficients(model, probe)

    def evaluate(vals):
        b00 = 0j
        b01 = 0j
        b10 = 0j
        for m, c in enumerate(coeffs):
            base = 3 * m
            b00 += c * 0.5 * vals[base + 2]
            b01 += c * vals[base]
            b10 += c * vals[base + 1]
        # B is traceless for the su(2) block structure: B11 = -B00
        return (0j, -b00 * b00 - b01 * b10)

    return evaluate


def _probe_near_pole(model: GaudinModel, probe: complex) -> bool:
    case = model.case
    point = probe
    for j in range(case.N):
        if any(abs(point - to_complex(zm)) < 1e-12 for zm in model.sites):
            return True
        if j < case.N - 1:
            den = to_complex(case.tau.c) * point + to_complex(case.tau.d)
            if abs(den) < 1e-12:
                return True
            point = _float_tau(case, point)
    return False


def spectral_scan(model: GaudinModel, state: PhaseState, probes) -> list:
    """(lam, tr B, det B, eigenvalues) at each probe; probes within 1e-12 of
    a pole are skipped with a warning entry."""
    results = []
    for probe in probes:
        lam = complex(to_complex(probe))
        if _probe_near_pole(model, lam):
            results.append({"lam": lam, "skipped": True,
                            "warning": "probe within 1e-12 of a pole"})
            continue
        tr, det = probe_evaluator(model, probe)(list(state.values))
        disc = (tr * tr - 4 * det) ** 0.5
        eigs = ((tr + disc) / 2, (tr - disc) / 2)
        results.append({"lam": lam, "trB": tr, "detB": det, "eigenvalues": eigs})
    return results


def _float_tau(case, point: complex) -> complex:
    a, b, c, d = (to_complex(x) for x in (case.tau.a, case.tau.b, case.tau.c, case.tau.d))
    return (a * point + b) / (c * point + d)


# ---------------------------------------------------------------------------
# RK4 integration
# ---------------------------------------------------------------------------

@dataclass
class Trajectory:
    times: list = field(default_factory=list)
    states: list = field(default_factory=list)
    conserved: dict = field(default_factory=dict)
    probes: tuple = ()
    ok: bool = True
    message: str = ""

    def drift(self, key: str) -> float:
        """Max relative drift of a logged quantity along the trajectory."""
        series = self.conserved[key]
        baseline = abs(series[0])
        top = max(abs(q - series[0]) for q in series)
        return top / baseline if baseline > 1e-300 else top

    def final_state(self) -> PhaseState:
        return PhaseState(self.states[-1], t=self.times[-1])


def rk4_simulate(model: GaudinModel, selection, initial: PhaseState, t_end: float,
                 dt: float, probes=None, log_every: int = 1) -> Trajectory:
    """Classical fixed-step RK4 for x_dot = {x, H}.

    Logs every ``log_every`` steps: each H_k, each Casimir, and tr/det of
    B at the probe points.  A non-finite state aborts the run, keeping the
    last good state.
    """
    if dt <= 0 or t_end <= 0:
        raise ModelError("dt and t_end must be positive")
    h = hamiltonian_for(model, selection)
    fields = vector_field_callables(model, h)
    dim = 3 * model.L
    if len(initial.values) != dim:
        raise ModelError(f"initial state has {len(initial.values)} values, model needs {dim}")
    probes = tuple(probes) if probes is not None else default_probes(model)

    monitors = {}
    for i in range(1, model.L + 1):
        monitors[f"H{i}"] = compile_spinpoly(hamiltonian_explicit(model, i))
    for j in range(1, model.L + 1):
        monitors[f"C{j}"] = compile_spinpoly(casimir(model.L, j))
    probe_fns = [probe_evaluator(model, probe) for probe in probes]

    steps = round(t_end / dt)
    traj = Trajectory(probes=probes, conserved={key: [] for key in monitors})
    for idx, probe in enumerate(probes):
        traj.conserved[f"trB@{idx}"] = []
        traj.conserved[f"detB@{idx}"] = []

    def log(t, vals):
        traj.times.append(t)
        traj.states.append(tuple(vals))
        for key, fn in monitors.items():
            traj.conserved[key].append(fn(vals))
        for idx, fn in enumerate(probe_fns):
            tr, det = fn(vals)
            traj.conserved[f"trB@{idx}"].append(tr)
            traj.conserved[f"detB@{idx}"].append(det)

    vals = list(initial.values)
    t = initial.t
    log(t, vals)
    for step in range(1, steps + 1):
        k1 = [f(vals) for f in fields]
        mid1 = [v + 0.5 * dt * d for v, d in zip(vals, k1)]
        k2 = [f(mid1) for f in fields]
        mid2 = [v + 0.5 * dt * d for v, d in zip(vals, k2)]
        k3 = [f(mid2) for f in fields]
        end = [v + dt * d for v, d in zip(vals, k3)]
        k4 = [f(end) for f in fields]
        new_vals = [v + dt / 6.0 * (a + 2 * b + 2 * c + d)
                    for v, a, b, c, d in zip(vals, k1, k2, k3, k4)]
        if any(not (math.isfinite(v.real) and math.isfinite(v.imag)) for v in new_vals):
            traj.ok = False
            traj.message = f"non-finite state at t = {t + dt:.6g}; keeping last good state"
            break
        vals = new_vals
        t = initial.t + step * dt
        if step % log_every == 0 or step == steps:
            log(t, vals)
    return traj


def convergence_order(model: GaudinModel, selection, initial: PhaseState, t_end: float,
                      dts: Sequence[float]) -> dict:
    """Richardson estimate of the global order from endpoint states at
    successively halved steps, plus per-run energy-drift figures."""
    if len(dts) < 3:
        raise ValueError("need at least three step sizes")
    finals = []
    drifts = []
    for dt in dts:
        traj = rk4_simulate(model, selection, initial, t_end, dt, log_every=100)
        finals.append(np.asarray(traj.final_state().values))
        keys = [key for key in traj.conserved if key.startswith("H")]
        drifts.append(max(traj.drift(key) for key in keys))
    orders = []
    for i in range(len(finals) - 2):
        d1 = float(np.max(np.abs(finals[i] - finals[i + 1])))
        d2 = float(np.max(np.abs(finals[i + 1] - finals[i + 2])))
        if d2 == 0:
            continue
        orders.append(math.log2(d1 / d2))
    return {"orders": orders, "order": min(orders) if orders else float("nan"),
            "drifts": drifts}


def _complex_str(value: complex) -> str:
    sign = "+" if value.imag >= 0 else "-"
    return f"{value.real!r}{sign}{abs(value.imag)!r}j"


def write_csv(traj: Trajectory, path, model: GaudinModel, log_every: int = 100) -> None:
    """CSV schema: t, H_1..H_L, C_1..C_L, then per-probe trB_re, trB_im,
    detB_re, detB_im.  H and C columns hold complex literals "re+imj";
    ``log_every`` downsamples the logged rows."""
    import csv

    L = model.L
    header = ["t"] + [f"H_{i}" for i in range(1, L + 1)] + [f"C_{j}" for j in range(1, L + 1)]
    for idx in range(len(traj.probes)):
        header += [f"probe{idx}_trB_re", f"probe{idx}_trB_im",
                   f"probe{idx}_detB_re", f"probe{idx}_detB_im"]
    rows = sorted(set(range(0, len(traj.times), log_every)) | {len(traj.times) - 1})
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(header)
        for row_idx in rows:
            row = [repr(traj.times[row_idx])]
            for i in range(1, L + 1):
                row.append(_complex_str(traj.conserved[f"H{i}"][row_idx]))
            for j in range(1, L + 1):
                row.append(_complex_str(traj.conserved[f"C{j}"][row_idx]))
            for idx in range(len(traj.probes)):
                tr = traj.conserved[f"trB@{idx}"][row_idx]
                det = traj.conserved[f"detB@{idx}"][row_idx]
                row += [repr(tr.real), repr(tr.imag), repr(det.real), repr(det.imag)]
            writer.writerow(row)
