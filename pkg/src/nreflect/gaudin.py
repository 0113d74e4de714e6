"""Gaudin-type models induced by identity-k reflection cases over the
rational r-matrix with the su(2) spin realization (n = 2).

The generating matrix is

    B(lam) = sum_m sum_j g^(j)(lam) ell(m, tau^j(lam) - z_m)

with local blocks ell(m, x) = (1/x) [[s_m^z/2, s_m^+], [s_m^-, -s_m^z/2]]
at mutually distinct sites z_m.  Hamiltonians are extracted two ways and
compared exactly: as residues of (1/2) tr B(lam)^2 at lam = z_m, and from
the closed quadratic expressions in the pair couplings
S_ik = s_i^z s_k^z / 2 + s_i^+ s_k^- + s_i^- s_k^+.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import ModelError, PoleError
from .linalg import Matrix, commutator, partial_trace, swap_pair, tensor_pair
from .ratfun import Poly, RatFun, residue_at_infinity
from .reflection import (
    KSolution,
    identity_k_three_reflection,
    identity_k_two_reflection,
    rbar_matrix,
    trivial_case,
)
from .scalars import ONE, ZERO, Scalar, as_scalar, scalar_from_str, scalar_to_str, zeta
from .spinalg import SpinPoly, casimir, poisson_bracket, s_minus, s_plus, s_z

HALF = Fraction(1, 2)

GAUDIN_FAMILIES = ("id-2refl", "id-3refl", "trivial")


@dataclass(frozen=True)
class GaudinModel:
    sites: tuple
    case: KSolution
    casimir_values: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "sites", tuple(as_scalar(z) for z in self.sites))
        values = self.casimir_values or tuple([ONE] * len(self.sites))
        object.__setattr__(self, "casimir_values", tuple(as_scalar(v) for v in values))
        _validate(self)

    @property
    def L(self) -> int:
        return len(self.sites)

    @property
    def N(self) -> int:
        return self.case.N


def _validate(model: GaudinModel) -> None:
    z = model.sites
    if not z:
        raise ModelError("model needs at least one site")
    for i in range(len(z)):
        for k in range(i + 1, len(z)):
            if z[i] == z[k]:
                raise ModelError("sites must be mutually distinct")
    if len(model.casimir_values) != len(z):
        raise ModelError("one Casimir value per site is required")
    case = model.case
    if case.family not in GAUDIN_FAMILIES:
        raise ModelError(f"case family {case.family!r} is not supported by the Gaudin layer")
    if case.n != 2:
        raise ModelError("the spin realization needs n = 2")
    orbits = []
    for zm in z:
        try:
            orbit = case.orbit(zm)
        except PoleError as exc:
            raise ModelError(f"site {scalar_to_str(zm)} hits a spectral-map pole: {exc}") from exc
        for point in orbit:
            if case.tau.is_pole(point):
                raise ModelError(f"orbit of site {scalar_to_str(zm)} hits a spectral-map pole")
            if not case.weights.defined_at(point):
                raise ModelError(f"orbit of site {scalar_to_str(zm)} hits a weight pole")
        orbits.append(orbit)
    # no site may collide with a nontrivial orbit point of any site
    for orbit in orbits:
        for point in orbit[1:]:
            for zm in z:
                if point == zm:
                    raise ModelError("sites must avoid each other's spectral-map orbits")


# ---------------------------------------------------------------------------
# the generating matrix B
# ---------------------------------------------------------------------------

def spin_site_matrix(L: int, m: int) -> Matrix:
    """[[s_m^z/2, s_m^+], [s_m^-, -s_m^z/2]] without the 1/x prefactor."""
    return Matrix([[HALF * s_z(L, m), s_plus(L, m)],
                   [s_minus(L, m), -HALF * s_z(L, m)]], legs=("single", 2))


def local_lax(model: GaudinModel, m: int, shifted_nu) -> Matrix:
    """ell(m, x) at the already-shifted argument x; pole at x = 0."""
    x = as_scalar(shifted_nu)
    if not x:
        raise PoleError(f"local block at site {m} evaluated at 0")
    return spin_site_matrix(model.L, m).scale(1 / x)


def big_B_at(model: GaudinModel, lam) -> Matrix:
    """B(lam) at a fixed exact spectral point, as a 2x2 spin-polynomial matrix."""
    lam = as_scalar(lam)
    case = model.case
    L = model.L
    entries = [[SpinPoly.zero(L), SpinPoly.zero(L)], [SpinPoly.zero(L), SpinPoly.zero(L)]]
    point = lam
    for j in range(case.N):
        g = case.weights(j, lam)
        for m, zm in enumerate(model.sites, start=1):
            shift = point - zm
            if not shift:
                raise PoleError(f"B(lam) pole: tau^{j}(lam) = z_{m} at lam = {scalar_to_str(lam)}")
            coeff = g / shift
            site = spin_site_matrix(L, m)
            for u in range(2):
                for v in range(2):
                    if site[u, v]:
                        entries[u][v] = entries[u][v] + coeff * site[u, v]
        if j < case.N - 1:
            point = case.tau(point)
    return Matrix(entries, legs=("single", 2))


def _inverse_shift(tau_j, z) -> RatFun:
    """1/(tau^j(lam) - z) as an exact rational function of lam."""
    a, b, c, d = tau_j.a, tau_j.b, tau_j.c, tau_j.d
    return RatFun.over_linears(Poly.linear(c, d), [(a - z * c, b - z * d)])


def big_B_symbolic(model: GaudinModel):
    """B(lam) with spin-polynomial-coefficient rational-function entries;
    denominators stay split-linear with exact scalar roots."""
    case = model.case
    L = model.L
    zero = RatFun(Poly())
    entries = [[zero, zero], [zero, zero]]
    for j in range(case.N):
        tau_j = case.tau.iterate(j)
        g = case.weights.gs[j]
        for m, zm in enumerate(model.sites, start=1):
            coeff = g * _inverse_shift(tau_j, zm)
            site = spin_site_matrix(L, m)
            for u in range(2):
                for v in range(2):
                    if site[u, v]:
                        entries[u][v] = entries[u][v] + coeff.scale(site[u, v])
    return entries


def tr_B_squared_symbolic(model: GaudinModel) -> RatFun:
    b = big_B_symbolic(model)
    return b[0][0] * b[0][0] + b[1][1] * b[1][1] + 2 * (b[0][1] * b[1][0])


def symbolic_root_set(model: GaudinModel):
    """Union of denominator roots over the entries of symbolic B."""
    roots = set()
    for row in big_B_symbolic(model):
        for entry in row:
            roots.update(root for root, _ in entry.roots)
    return roots


# ---------------------------------------------------------------------------
# Hamiltonians
# ---------------------------------------------------------------------------

def s_pair(L: int, i: int, k: int) -> SpinPoly:
    return HALF * s_z(L, i) * s_z(L, k) + s_plus(L, i) * s_minus(L, k) + s_minus(L, i) * s_plus(L, k)


def hamiltonian_residue(model: GaudinModel, m: int) -> SpinPoly:
    """H_m = (1/2) res at z_m of tr B(lam)^2, by exact residue extraction."""
    tr = tr_B_squared_symbolic(model)
    value = tr.residue(model.sites[m - 1])
    return SpinPoly.coerce(model.L, HALF * value)


def hamiltonian_explicit(model: GaudinModel, i: int, casimir_as: str = "poly") -> SpinPoly:
    """The closed quadratic form of H_i for the identity-k families."""
    case = model.case
    L = model.L
    z = model.sites
    zi = z[i - 1]
    params = case.params
    if casimir_as == "poly":
        cas_i = casimir(L, i)
    elif casimir_as == "value":
        cas_i = SpinPoly.const(L, model.casimir_values[i - 1])
    else:
        raise ValueError(f"casimir_as must be 'poly' or 'value', got {casimir_as!r}")

    try:
        if case.family == "trivial":
            total = SpinPoly.zero(L)
            for k, zk in enumerate(z, start=1):
                if k != i:
                    total = total + (1 / (zi - zk)) * s_pair(L, i, k)
            return total
        if case.family == "id-2refl":
            a, b, c = params["a"], params["b"], params["c"]
            kappa = a * a + b * c
            total = SpinPoly.zero(L)
            for k, zk in enumerate(z, start=1):
                if k == i:
                    continue
                coeff = 1 / (zi - zk) + kappa / ((a - c * zi) * (b + a * (zi + zk) - c * zi * zk))
                total = total + coeff * s_pair(L, i, k)
            cas_coeff = kappa / ((a - c * zi) * (b + 2 * a * zi - c * zi * zi))
            return total + cas_coeff * cas_i
        if case.family == "id-3refl":
            a, b, c, d = params["a"], params["b"], params["c"], params["d"]
            det = a * d - b * c
            total = SpinPoly.zero(L)
            for k, zk in enumerate(z, start=1):
                if k == i:
                    continue
                coeff = (1 / (zi - zk)
                         + det / ((d + c * zi) * (b + a * zi - d * zk - c * zi * zk))
                         - det / ((a - c * zi) * (b + a * zk - d * zi - c * zi * zk)))
                total = total + coeff * s_pair(L, i, k)
            cas_coeff = (det / (b + (a - d) * zi - c * zi * zi)) * (1 / (d + c * zi) - 1 / (a - c * zi))
            return total + cas_coeff * cas_i
    except ZeroDivisionError as exc:
        raise ModelError(f"displayed coefficient of H_{i} hits a pole: {exc}") from exc
    raise ModelError(f"no closed Hamiltonian for family {case.family!r}")


def involution_residual(model: GaudinModel, i: int, k: int) -> SpinPoly:
    """{H_i, H_k}; the zero polynomial certifies involution."""
    return poisson_bracket(hamiltonian_explicit(model, i), hamiltonian_explicit(model, k))


def residue_sum_check(model: GaudinModel) -> SpinPoly:
    """Sum of all residues of (1/2) tr B^2, finite poles plus infinity."""
    tr = tr_B_squared_symbolic(model)
    total = sum((tr.residue(root) for root, _ in tr.poles()), start=ZERO)
    total = total + residue_at_infinity(tr)
    return SpinPoly.coerce(model.L, HALF * total)


# ---------------------------------------------------------------------------
# structural identities at fixed spectral points
# ---------------------------------------------------------------------------

def _bracket_matrix(L: int, left: Matrix, right: Matrix) -> Matrix:
    """{left_a, right_b} on the tensor square: entrywise Poisson brackets."""
    n = left.nrows
    dim = n * n
    rows = [[SpinPoly.zero(L)] * dim for _ in range(dim)]
    for u1 in range(n):
        for v1 in range(n):
            f = SpinPoly.coerce(L, left[u1, v1])
            if f.is_zero():
                continue
            for u2 in range(n):
                for v2 in range(n):
                    g = SpinPoly.coerce(L, right[u2, v2])
                    if g.is_zero():
                        continue
                    rows[u1 * n + u2][v1 * n + v2] = poisson_bracket(f, g)
    return Matrix(rows, legs=("pair", n))


def rbb_residual(model: GaudinModel, lam, mu) -> Matrix:
    """{B_a(lam), B_b(mu)} - [rbar_ab(lam,mu), B_a(lam)] + [rbar_ba(mu,lam), B_b(mu)]."""
    lam, mu = as_scalar(lam), as_scalar(mu)
    case = model.case
    b_lam = big_B_at(model, lam)
    b_mu = big_B_at(model, mu)
    eye = Matrix.identity(2)
    b_a = tensor_pair(b_lam, eye)
    b_b = tensor_pair(eye, b_mu)
    rbar_ab = rbar_matrix(case, lam, mu)
    rbar_ba = swap_pair(rbar_matrix(case, mu, lam))
    bracket = _bracket_matrix(model.L, b_lam, b_mu)
    return bracket - commutator(rbar_ab, b_a) + commutator(rbar_ba, b_b)


def trB_bracket_residual(model: GaudinModel, p: int, q: int, lam, nu) -> SpinPoly:
    """{tr B(lam)^p, tr B(nu)^q} as an exact spin polynomial."""
    t1 = SpinPoly.coerce(model.L, (big_B_at(model, lam) ** p).trace())
    t2 = SpinPoly.coerce(model.L, (big_B_at(model, nu) ** q).trace())
    return poisson_bracket(t1, t2)


def m_matrix(model: GaudinModel, lam, nu, p: int) -> Matrix:
    """M(lam, nu) = p tr_a(B_a(lam)^(p-1) rbar_ba(nu, lam))."""
    lam, nu = as_scalar(lam), as_scalar(nu)
    b_pow = big_B_at(model, lam) ** (p - 1)
    b_a = tensor_pair(b_pow, Matrix.identity(2))
    rbar_ba = swap_pair(rbar_matrix(model.case, nu, lam))
    return partial_trace(b_a * rbar_ba, "a").scale(Fraction(p))


def lax_residual(model: GaudinModel, lam, nu, p: int) -> Matrix:
    """{tr B(lam)^p, B(nu)} - [B(nu), M(lam, nu)]."""
    lam, nu = as_scalar(lam), as_scalar(nu)
    h = SpinPoly.coerce(model.L, (big_B_at(model, lam) ** p).trace())
    b_nu = big_B_at(model, nu)
    flow = Matrix([[poisson_bracket(h, SpinPoly.coerce(model.L, entry)) for entry in row]
                   for row in b_nu.rows], legs=("single", 2))
    return flow - commutator(b_nu, m_matrix(model, lam, nu, p))


def mk_residual(model: GaudinModel, lam, nu, p: int) -> Matrix:
    """M(lam, nu) k(nu) - k(nu) M(lam, tau(nu))."""
    lam, nu = as_scalar(lam), as_scalar(nu)
    k_nu = model.case.k(nu)
    left = m_matrix(model, lam, nu, p) * k_nu
    right = k_nu * m_matrix(model, lam, model.case.tau(nu), p)
    return left - right


def structural_excluded(model: GaudinModel, lam, mu) -> bool:
    """Exact rejection predicate for the fixed-point identity checks."""
    try:
        lam, mu = as_scalar(lam), as_scalar(mu)
        for x in (lam, mu):
            big_B_at(model, x)
            big_B_at(model, model.case.tau(x))
        rbar_matrix(model.case, lam, mu)
        rbar_matrix(model.case, mu, lam)
    except (PoleError, ZeroDivisionError):
        return True
    return False


# ---------------------------------------------------------------------------
# configuration
# ---------------------------------------------------------------------------

MODEL_KINDS = ("two-reflection", "three-reflection", "bcl", "z3", "plain")


def case_for_config(kind: str, params: dict) -> KSolution:
    if kind == "two-reflection":
        return identity_k_two_reflection(params.get("a", 1), params.get("b", 2), params.get("c", 3))
    if kind == "three-reflection":
        return identity_k_three_reflection(params.get("a", 1), params.get("b", 3),
                                           params.get("c", -1), params.get("d", 1))
    if kind == "bcl":
        return identity_k_two_reflection(params.get("a", 1), 0, 0)
    if kind == "z3":
        return identity_k_three_reflection(zeta(3), 0, 0, 1)
    if kind == "plain":
        return trivial_case()
    raise ModelError(f"unknown model kind {kind!r}; expected one of {MODEL_KINDS}")


def model_from_config(config: dict) -> GaudinModel:
    """Build a model from a JSON-style dict:
    {"case": kind, "params": {...}, "L": int, "z": [...], "casimirs": [...]}.
    Scalars are exact strings like "5/3"."""
    if not isinstance(config, dict):
        raise ModelError("model config must be a JSON object")
    kind = config.get("case", "plain")
    raw_params = config.get("params", {})
    try:
        params = {key: scalar_from_str(str(val)) if isinstance(val, str) else as_scalar(val)
                  for key, val in raw_params.items()}
    except (ValueError, TypeError) as exc:
        raise ModelError(f"bad parameter value: {exc}") from exc
    case = case_for_config(kind, params)
    z_raw = config.get("z")
    if not z_raw:
        raise ModelError("model config needs a non-empty site list 'z'")
    try:
        z = [scalar_from_str(str(val)) if isinstance(val, str) else as_scalar(val) for val in z_raw]
    except (ValueError, TypeError) as exc:
        raise ModelError(f"bad site value: {exc}") from exc
    if "L" in config and int(config["L"]) != len(z):
        raise ModelError(f"L = {config['L']} does not match {len(z)} sites")
    cas_raw = config.get("casimirs")
    casimirs = tuple(scalar_from_str(str(val)) if isinstance(val, str) else as_scalar(val)
                     for val in cas_raw) if cas_raw else ()
    return GaudinModel(sites=tuple(z), case=case, casimir_values=casimirs)


def hamiltonians_text(model: GaudinModel, casimir_as: str = "poly") -> str:
    lines = []
    for i in range(1, model.L + 1):
        lines.append(f"H_{i} = {hamiltonian_explicit(model, i, casimir_as=casimir_as)}")
    return "\n".join(lines)
