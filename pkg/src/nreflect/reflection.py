"""Generalized (N-fold) reflection structures over a base r-matrix.

A case bundles a Mobius action tau on the spectral parameter, weight
functions g^(j) with g^(0) = 1, and a matrix function k(nu).  The defining
residual, for the base r-matrix r, is

    sum_j g^(j)(nu) k_b^(j)(nu) r_ab(lam, tau^j(nu)) k_b^(j)(nu)^-1 k_a(lam)
  - k_a(lam) sum_j g^(j)(nu) k_b^(j)(nu) r_ab(tau(lam), tau^j(nu)) k_b^(j)(nu)^-1

with the iterated products k^(j)(nu) = k^(j-1)(nu) k(tau^(j-1)(nu)) and
k^(0) = 1.  Cases with vanishing residual induce a (generally non
skew-symmetric) solution rbar of the classical Yang-Baxter equation, built
by :func:`build_rbar`.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Optional

from .errors import ConstraintError, PoleError, SingularMatrixError, UnsupportedCaseError
from .linalg import Matrix, tensor_pair
from .ratfun import Poly, RatFun
from .rmatrix import RMatrixFun, rational_r, trig_r
from .sampling import DEFAULT_SEED, SplitMix64, sample_tuple
from .scalars import ONE, ZERO, Scalar, as_scalar, zeta


# ---------------------------------------------------------------------------
# Mobius maps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MobiusMap:
    """nu -> (a nu + b) / (c nu + d) with ad - bc != 0."""

    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, as_scalar(getattr(self, name)))
        if not (self.a * self.d - self.b * self.c):
            raise ConstraintError("degenerate Mobius map: ad - bc = 0")

    @staticmethod
    def identity():
        return MobiusMap(ONE, ZERO, ZERO, ONE)

    @staticmethod
    def scaling(factor):
        return MobiusMap(as_scalar(factor), ZERO, ZERO, ONE)

    def is_pole(self, nu) -> bool:
        return not (self.c * nu + self.d)

    def __call__(self, nu):
        nu = as_scalar(nu)
        den = self.c * nu + self.d
        if not den:
            raise PoleError(f"Mobius map has a pole at nu = {nu}")
        return (self.a * nu + self.b) / den

    def compose(self, other: "MobiusMap") -> "MobiusMap":
        """self after other: (self.compose(other))(x) = self(other(x))."""
        return MobiusMap(self.a * other.a + self.b * other.c,
                         self.a * other.b + self.b * other.d,
                         self.c * other.a + self.d * other.c,
                         self.c * other.b + self.d * other.d)

    def iterate(self, j: int) -> "MobiusMap":
        if j < 0:
            raise ValueError("iterate needs j >= 0")
        out = MobiusMap.identity()
        for _ in range(j):
            out = self.compose(out)
        return out

    def is_identity(self) -> bool:
        """Identity as a projective map."""
        return not self.b and not self.c and self.a == self.d

    def order(self, max_order: int = 8) -> Optional[int]:
        """Smallest m <= max_order with tau^m = id projectively, else None."""
        power = self
        for m in range(1, max_order + 1):
            if power.is_identity():
                return m
            power = self.compose(power)
        return None


# ---------------------------------------------------------------------------
# weight families and k-matrix cases
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WeightFamily:
    """g^(0), ..., g^(N-1) as exact rational functions of nu; g^(0) = 1."""

    gs: tuple

    def __post_init__(self):
        if not self.gs or self.gs[0] != RatFun.const(ONE):
            raise ConstraintError("weight family must start with g^(0) = 1")

    @property
    def order(self) -> int:
        return len(self.gs)

    def __call__(self, j: int, nu) -> Scalar:
        return self.gs[j].eval_at(as_scalar(nu))

    def defined_at(self, nu) -> bool:
        nu = as_scalar(nu)
        return all(g.defined_at(nu) for g in self.gs)


@dataclass(frozen=True)
class KSolution:
    """A candidate solution of the N-fold reflection residual."""

    label: str
    family: str
    n: int
    N: int
    base_r: RMatrixFun
    tau: MobiusMap
    weights: WeightFamily
    k: Callable[[Scalar], Matrix]
    params: dict = field(default_factory=dict)
    expected_f: Optional[Callable] = None

    def orbit(self, nu, count: Optional[int] = None):
        """[nu, tau(nu), ..., tau^(count-1)(nu)]; raises PoleError on a tau pole."""
        count = self.N if count is None else count
        points = [as_scalar(nu)]
        for _ in range(count - 1):
            points.append(self.tau(points[-1]))
        return points

    def b_point_excluded(self, nu) -> bool:
        """Exact test: is nu outside the domain of every k^(j), g^(j), tau^j?"""
        try:
            points = self.orbit(nu)
            if not self.weights.defined_at(nu):
                return True
            for point in points[: self.N - 1]:
                if not self.k(point).det():
                    return True
        except (PoleError, ZeroDivisionError):
            return True
        return False


def identity_k(n: int) -> Callable[[Scalar], Matrix]:
    eye = Matrix.identity(n, legs=("single", n))
    return lambda nu: eye


def k_iter(case: KSolution, j: int, nu) -> Matrix:
    """k^(j)(nu) by the product recursion; k^(0) is the identity."""
    if not 0 <= j <= case.N:
        raise ValueError(f"iterate index must be in [0, {case.N}], got {j}")
    acc = Matrix.identity(case.n, legs=("single", case.n))
    point = as_scalar(nu)
    for step in range(j):
        try:
            acc = acc * case.k(point)
            point = case.tau(point) if step < j - 1 else point
        except (PoleError, ZeroDivisionError) as exc:
            raise PoleError(f"k^({step + 1}) hits an excluded point: {exc}") from exc
    return acc


def n_unitarity(case: KSolution, points) -> dict:
    """Check k^(N)(nu) = f(nu) 1 at each point; never raises on failure."""
    from .reporting import build_report, render_sample
    from .scalars import scalar_to_str

    entries = []
    for nu in points:
        nu = as_scalar(nu)
        entry = {"sample": render_sample([nu])}
        try:
            kn = k_iter(case, case.N, nu)
        except PoleError as exc:
            entry.update(status="fail", reason=str(exc))
            entries.append(entry)
            continue
        f = kn[0, 0]
        scalar_part = Matrix.identity(case.n).scale(f)
        if kn == scalar_part:
            entry["status"] = "pass"
            entry["f"] = scalar_to_str(f)
            if case.expected_f is not None and f != case.expected_f(nu):
                entry["status"] = "fail"
                entry["expected_f"] = scalar_to_str(case.expected_f(nu))
        else:
            entry["status"] = "fail"
            entry["reason"] = "k^(N) is not a scalar multiple of the identity"
        entries.append(entry)
    return build_report("nunitarity", case.label, 0, entries)


# ---------------------------------------------------------------------------
# residuals
# ---------------------------------------------------------------------------

def _conjugated_terms(case: KSolution, r: RMatrixFun, first_arg, nu):
    """Yield g^(j)(nu) k_b^(j) r_ab(first_arg, tau^j(nu)) k_b^(j)^-1 summed."""
    eye = Matrix.identity(case.n)
    total = None
    kj = Matrix.identity(case.n, legs=("single", case.n))
    point = as_scalar(nu)
    for j in range(case.N):
        g = case.weights(j, nu)
        r_val = r(first_arg, point)
        if j == 0:
            term = r_val.scale(g)
        else:
            kj_b = tensor_pair(eye, kj)
            kj_b_inv = tensor_pair(eye, kj.inverse(label=f"k^({j})(nu)"))
            term = (kj_b * r_val * kj_b_inv).scale(g)
        total = term if total is None else total + term
        if j < case.N - 1:
            kj = kj * case.k(point)
            point = case.tau(point)
    return total


def rbar_matrix(case: KSolution, lam, nu, r: Optional[RMatrixFun] = None) -> Matrix:
    """The induced matrix rbar_ab(lam, nu) = sum_j g^(j) k_b^(j) r_ab(lam, tau^j(nu)) k_b^(j)^-1."""
    r = r or case.base_r
    out = _conjugated_terms(case, r, as_scalar(lam), nu)
    return Matrix(out.rows, legs=("pair", case.n))


def nre_residual(case: KSolution, lam, nu, r: Optional[RMatrixFun] = None) -> Matrix:
    """LHS - RHS of the N-fold reflection residual at exact points."""
    r = r or case.base_r
    lam, nu = as_scalar(lam), as_scalar(nu)
    eye = Matrix.identity(case.n)
    k_a = tensor_pair(case.k(lam), eye)
    lhs = _conjugated_terms(case, r, lam, nu) * k_a
    rhs = k_a * _conjugated_terms(case, r, case.tau(lam), nu)
    return Matrix((lhs - rhs).rows, legs=("pair", case.n))


def compact_form_residual(case: KSolution, lam, nu, r: Optional[RMatrixFun] = None) -> Matrix:
    """rbar_ab(lam, nu) k_a(lam) - k_a(lam) rbar_ab(tau(lam), nu)."""
    r = r or case.base_r
    lam, nu = as_scalar(lam), as_scalar(nu)
    eye = Matrix.identity(case.n)
    k_a = tensor_pair(case.k(lam), eye)
    lhs = rbar_matrix(case, lam, nu, r) * k_a
    rhs = k_a * rbar_matrix(case, case.tau(lam), nu, r)
    return Matrix((lhs - rhs).rows, legs=("pair", case.n))


def symmetry_relation_residual(case: KSolution, omega, lam, nu, r: Optional[RMatrixFun] = None) -> Matrix:
    """r_ab(l, n) - omega k_a k_b r_ab(tau l, tau n) k_b^-1 k_a^-1 (needs omega^N = 1)."""
    r = r or case.base_r
    omega = as_scalar(omega)
    if omega**case.N != 1:
        raise ConstraintError(f"omega^{case.N} != 1 for omega = {omega}")
    lam, nu = as_scalar(lam), as_scalar(nu)
    ka, kb = case.k(lam), case.k(nu)
    k_ab = tensor_pair(ka, kb)
    k_ab_inv = tensor_pair(ka.inverse(label="k(lam)"), kb.inverse(label="k(nu)"))
    inner = r(case.tau(lam), case.tau(nu))
    return r(lam, nu) - (k_ab * inner * k_ab_inv).scale(omega)


def scalar_functional_residual(case: KSolution, lam, nu) -> Scalar:
    """For identity-k cases with the rational base r, the reflection residual
    collapses to sum_j g^(j)(nu) [1/(lam - tau^j(nu)) - 1/(tau(lam) - tau^j(nu))]."""
    lam, nu = as_scalar(lam), as_scalar(nu)
    total = ZERO
    tl = case.tau(lam)
    for j, point in enumerate(case.orbit(nu)):
        g = case.weights(j, nu)
        total = total + g * (1 / (lam - point) - 1 / (tl - point))
    return total


def nre_excluded(case: KSolution, lam, nu, r: Optional[RMatrixFun] = None) -> bool:
    """Exact rejection predicate for sampling the reflection residual."""
    r = r or case.base_r
    lam, nu = as_scalar(lam), as_scalar(nu)
    if case.b_point_excluded(nu):
        return True
    try:
        tl = case.tau(lam)
        case.k(lam)
        for point in case.orbit(nu):
            if r.pole_predicate(lam, point) or r.pole_predicate(tl, point):
                return True
    except (PoleError, ZeroDivisionError):
        return True
    return False


def build_rbar(case: KSolution, r: Optional[RMatrixFun] = None, spot_check: bool = True) -> RMatrixFun:
    """Evaluator for the induced Yang-Baxter solution rbar.

    The construction is meaningful only for cases whose reflection residual
    vanishes; on first evaluation a seeded spot check runs and a warning is
    emitted if the case fails it (the evaluator still works).
    """
    r = r or case.base_r
    checked = {"done": not spot_check}

    def evaluate(lam, mu):
        if not checked["done"]:
            checked["done"] = True
            rng = SplitMix64(DEFAULT_SEED)
            for _ in range(3):
                pt = sample_tuple(rng, 2, reject=lambda x, y: nre_excluded(case, x, y, r))
                if not nre_residual(case, *pt, r).is_zero():
                    warnings.warn(f"case {case.label} fails the reflection residual at {pt}; "
                                  "the constructed matrix need not satisfy the Yang-Baxter equation")
                    break
        return rbar_matrix(case, lam, mu, r)

    def pole_predicate(lam, mu):
        lam, mu = as_scalar(lam), as_scalar(mu)
        if case.b_point_excluded(mu):
            return True
        try:
            return any(r.pole_predicate(lam, point) for point in case.orbit(mu))
        except (PoleError, ZeroDivisionError):
            return True

    return RMatrixFun(n=case.n, kind="constructed", evaluate=evaluate,
                      pole_predicate=pole_predicate, label=f"rbar[{case.label}]")


def tamper(case: KSolution, mode: str) -> KSolution:
    """Deliberately broken variants, for negative tests and CLI demos."""
    if mode == "g1-sign":
        if case.N < 2:
            raise ValueError("g1-sign tamper needs N >= 2")
        gs = list(case.weights.gs)
        gs[1] = -gs[1]
        return replace(case, label=f"{case.label}[tampered:g1-sign]",
                       weights=WeightFamily(tuple(gs)), expected_f=None)
    raise ValueError(f"unknown tamper mode {mode!r}")


# ---------------------------------------------------------------------------
# equivalence transforms (identity-k rational families, c != 0)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EquivalenceTransform:
    """Reparametrization p and prefactor relating rbar to the rational r:
    rbar(lam, mu) = prefactor(mu) * r(p(lam) - p(mu)).  The prefactor equals
    p'(mu): matching the simple pole at lam = mu forces that normalization."""

    p: Callable[[Scalar], Scalar]
    prefactor: Callable[[Scalar], Scalar]


def equivalence_transform(case: KSolution) -> EquivalenceTransform:
    a = case.params.get("a")
    b = case.params.get("b")
    c = case.params.get("c")
    if case.family == "id-2refl":
        if not c:
            raise UnsupportedCaseError("reparametrization needs c != 0")

        def p(mu):
            mu = as_scalar(mu)
            return (b + c * mu**2) / (2 * c * (a - c * mu))

        def prefactor(mu):
            mu = as_scalar(mu)
            return (b + 2 * a * mu - c * mu**2) / (2 * (a - c * mu) ** 2)

        return EquivalenceTransform(p, prefactor)

    if case.family == "id-3refl":
        d = case.params.get("d")
        if not c:
            raise UnsupportedCaseError("reparametrization needs c != 0")

        def p(mu):
            mu = as_scalar(mu)
            num = (c**3 * mu**3 - (a - d) ** 2 * c**2 * mu**2
                   - c * (a + 2 * d) * (2 * a + d) * mu + (a - d) * (a + d) ** 2)
            return num / (c**3 * b**2 * (c * mu - a) * (c * mu + d))

        def prefactor(mu):
            mu = as_scalar(mu)
            return (c * mu**2 - (a - d) * mu - b) ** 2 / (b**2 * (c * mu - a) ** 2 * (c * mu + d) ** 2)

        return EquivalenceTransform(p, prefactor)

    raise UnsupportedCaseError(f"no equivalence transform for family {case.family!r}")


def equivalence_residual(case: KSolution, lam, mu) -> Matrix:
    """rbar(lam, mu) - prefactor(mu) r(p(lam) - p(mu)), exactly."""
    from .linalg import permutation_operator

    transform = equivalence_transform(case)
    lam, mu = as_scalar(lam), as_scalar(mu)
    lhs = rbar_matrix(case, lam, mu)
    diff = transform.p(lam) - transform.p(mu)
    if not diff:
        raise PoleError(f"p(lam) = p(mu) at ({lam}, {mu})")
    rhs = permutation_operator(case.n).scale(transform.prefactor(mu) / diff)
    return lhs - rhs


def equivalence_excluded(case: KSolution, lam, mu) -> bool:
    try:
        transform = equivalence_transform(case)
        if case.b_point_excluded(mu) or case.b_point_excluded(lam):
            return True
        for point in case.orbit(mu):
            if case.base_r.pole_predicate(as_scalar(lam), point):
                return True
        if transform.p(as_scalar(lam)) == transform.p(as_scalar(mu)):
            return True
        transform.prefactor(as_scalar(mu))
    except (PoleError, ZeroDivisionError):
        return True
    return False


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

def _const_weights(values) -> WeightFamily:
    return WeightFamily(tuple(RatFun.const(as_scalar(v)) for v in values))


def linear_k_case(N: int, theta, G: Matrix, g_label: str = "G", n: Optional[int] = None) -> KSolution:
    """k(nu) = theta 1 + nu G with G^N = 1, tau scaling by the primitive
    N-th root of unity, constant weights omega^j.  Satisfies the N-fold
    unitarity product with f(nu) = theta^N + (-1)^(N-1) nu^N."""
    theta = as_scalar(theta)
    n = n or G.nrows
    if G**N != Matrix.identity(n):
        raise ConstraintError(f"G^{N} != identity for the supplied G")
    omega = zeta(N)
    tau = MobiusMap.scaling(omega)
    weights = _const_weights([omega**j for j in range(N)])
    eye = Matrix.identity(n, legs=("single", n))

    def k(nu):
        return eye.scale(as_scalar(theta)) + G.scale(as_scalar(nu))

    sign = ONE if N % 2 else -ONE

    def expected_f(nu):
        return theta**N + sign * as_scalar(nu) ** N

    label = f"linear-k-N{N}-{g_label}-th{theta}"
    return KSolution(label=label, family="linear-k", n=n, N=N, base_r=rational_r(n),
                     tau=tau, weights=weights, k=k,
                     params={"theta": theta}, expected_f=expected_f)


def diag_roots_G(N: int) -> Matrix:
    """diag(1, omega, ..., omega^(N-1)) with omega = zeta_N; size N."""
    return Matrix.diagonal([zeta(N, j) for j in range(N)], legs=("single", N))


def cyclic_shift_G(N: int) -> Matrix:
    """The N x N cyclic shift; G^N = 1 over the rationals."""
    rows = [[ONE if j == (i + 1) % N else ZERO for j in range(N)] for i in range(N)]
    return Matrix(rows, legs=("single", N))


def identity_k_two_reflection(a=1, b=2, c=3, n: int = 2) -> KSolution:
    """k = 1 with tau(nu) = (a nu + b)/(c nu - a) and
    g^(1)(nu) = -(a^2 + bc)/(a - c nu)^2; tau is an involution."""
    a, b, c = as_scalar(a), as_scalar(b), as_scalar(c)
    if not (a * a + b * c):
        raise ConstraintError("degenerate parameters: a^2 + bc = 0")
    tau = MobiusMap(a, b, c, -a)
    g1 = RatFun.over_linears(Poly.const(-(a * a + b * c)), [(-c, a), (-c, a)])
    weights = WeightFamily((RatFun.const(ONE), g1))
    return KSolution(label="id-2refl", family="id-2refl", n=n, N=2,
                     base_r=rational_r(n), tau=tau, weights=weights,
                     k=identity_k(n), params={"a": a, "b": b, "c": c},
                     expected_f=lambda nu: ONE)


def identity_k_three_reflection(a=1, b=3, c=-1, d=1, n: int = 2) -> KSolution:
    """k = 1 with tau(nu) = (a nu + b)/(c nu + d) constrained by
    a^2 + ad + bc + d^2 = 0 (which makes tau of order three) and weights
    g^(1) = (ad - bc)/(d + c nu)^2, g^(2) = (ad - bc)/(a - c nu)^2."""
    a, b, c, d = (as_scalar(x) for x in (a, b, c, d))
    constraint = a * a + a * d + b * c + d * d
    if constraint:
        raise ConstraintError(f"a^2 + ad + bc + d^2 = {constraint} != 0")
    tau = MobiusMap(a, b, c, d)
    det = a * d - b * c
    g1 = RatFun.over_linears(Poly.const(det), [(c, d), (c, d)])
    g2 = RatFun.over_linears(Poly.const(det), [(-c, a), (-c, a)])
    weights = WeightFamily((RatFun.const(ONE), g1, g2))
    return KSolution(label="id-3refl", family="id-3refl", n=n, N=3,
                     base_r=rational_r(n), tau=tau, weights=weights,
                     k=identity_k(n), params={"a": a, "b": b, "c": c, "d": d},
                     expected_f=lambda nu: ONE)


def trig_two_reflection(a=1, b=2, c=3, which: str = "identity") -> KSolution:
    """Trigonometric base r with tau(nu) = (a nu + b)/(c nu - a) and
    g^(1)(nu) = -(a^2 + bc) nu / ((c nu - a)(a nu + b)).

    The weight numerator a^2 + bc (= -det tau) is forced by the a = 0, b = c
    specialization, where tau(nu) = 1/nu must reproduce g^(1) = -1.
    """
    a, b, c = as_scalar(a), as_scalar(b), as_scalar(c)
    if not (a * a + b * c):
        raise ConstraintError("degenerate parameters: a^2 + bc = 0")
    tau = MobiusMap(a, b, c, -a)
    g1 = RatFun.over_linears(Poly.linear(-(a * a + b * c), ZERO), [(c, -a), (a, b)])
    weights = WeightFamily((RatFun.const(ONE), g1))

    if which == "identity":
        k = identity_k(2)
    elif which == "tau":
        def k(nu):
            nu = as_scalar(nu)
            return Matrix.diagonal([tau(nu), nu], legs=("single", 2))
    else:
        raise ValueError(f"unknown trig 2-reflection solution {which!r}")
    return KSolution(label=f"trig-2refl-{'id' if which == 'identity' else 'tau'}",
                     family="trig-2refl", n=2, N=2, base_r=trig_r(), tau=tau,
                     weights=weights, k=k, params={"a": a, "b": b, "c": c})


TRIG3_KINDS = ("id", "tau-nu", "tau2-nu", "tau-tau2", "poly-1", "poly-2")


def trig_three_reflection(a=1, b=3, c=-1, d=1, which: str = "id") -> KSolution:
    """Trigonometric base r, tau of order three (a^2 + ad + bc + d^2 = 0),
    weights g^(1) = (a+d)^2 nu/((a nu + b)(c nu + d)) and
    g^(2) = (a+d)^2 nu/((d nu - b)(a - c nu)).

    Six diagonal candidates are cataloged; the residual checks report which
    of them actually solve the reflection identity.
    """
    a, b, c, d = (as_scalar(x) for x in (a, b, c, d))
    constraint = a * a + a * d + b * c + d * d
    if constraint:
        raise ConstraintError(f"a^2 + ad + bc + d^2 = {constraint} != 0")
    tau = MobiusMap(a, b, c, d)
    s2 = (a + d) ** 2
    g1 = RatFun.over_linears(Poly.linear(s2, ZERO), [(a, b), (c, d)])
    g2 = RatFun.over_linears(Poly.linear(s2, ZERO), [(d, -b), (-c, a)])
    weights = WeightFamily((RatFun.const(ONE), g1, g2))

    def diag(f1, f2):
        def k(nu):
            nu = as_scalar(nu)
            return Matrix.diagonal([f1(nu), f2(nu)], legs=("single", 2))
        return k

    tau2 = lambda nu: tau(tau(nu))
    builders = {
        "id": identity_k(2),
        "tau-nu": diag(tau, lambda nu: nu),
        "tau2-nu": diag(tau2, lambda nu: nu),
        "tau-tau2": diag(tau, tau2),
        "poly-1": diag(lambda nu: (a + d) * (a * nu + b), lambda nu: (c * nu - a) * (d * nu - b)),
        "poly-2": diag(lambda nu: (c * nu - a) * (d * nu - b), lambda nu: (a + d) * (c * nu + d)),
    }
    if which not in builders:
        raise ValueError(f"unknown trig 3-reflection candidate {which!r}")
    return KSolution(label=f"trig-3refl-{which}", family="trig-3refl", n=2, N=3,
                     base_r=trig_r(), tau=tau, weights=weights, k=builders[which],
                     params={"a": a, "b": b, "c": c, "d": d})


def trivial_case(n: int = 2) -> KSolution:
    """The empty structure: N = 1, tau = id, g = (1), k = 1; rbar = r."""
    return KSolution(label="trivial", family="trivial", n=n, N=1,
                     base_r=rational_r(n), tau=MobiusMap.identity(),
                     weights=WeightFamily((RatFun.const(ONE),)),
                     k=identity_k(n), params={},
                     expected_f=lambda nu: ONE)


def symmetry_excluded(case: KSolution, lam, nu, r: Optional[RMatrixFun] = None) -> bool:
    r = r or case.base_r
    try:
        lam, nu = as_scalar(lam), as_scalar(nu)
        tl, tn = case.tau(lam), case.tau(nu)
        if r.pole_predicate(lam, nu) or r.pole_predicate(tl, tn):
            return True
        if not case.k(lam).det() or not case.k(nu).det():
            return True
    except (PoleError, ZeroDivisionError):
        return True
    return False


def _linear_k_builder(N, g_kind, theta_default):
    def build(params):
        theta = params.get("theta", as_scalar(theta_default))
        G = diag_roots_G(N) if g_kind == "diag" else cyclic_shift_G(N)
        return linear_k_case(N, theta, G, g_label=g_kind)
    return build


CATALOG: dict = {}
for _N in (2, 3):
    for _g in ("diag", "shift"):
        for _th in (0, 2):
            CATALOG[f"linear-k-N{_N}-{_g}-th{_th}"] = _linear_k_builder(_N, _g, _th)
CATALOG["id-2refl"] = lambda params: identity_k_two_reflection(
    params.get("a", 1), params.get("b", 2), params.get("c", 3), n=int(params.get("n", 2)))
CATALOG["id-3refl"] = lambda params: identity_k_three_reflection(
    params.get("a", 1), params.get("b", 3), params.get("c", -1), params.get("d", 1),
    n=int(params.get("n", 2)))
CATALOG["trig-2refl-id"] = lambda params: trig_two_reflection(
    params.get("a", 1), params.get("b", 2), params.get("c", 3), which="identity")
CATALOG["trig-2refl-tau"] = lambda params: trig_two_reflection(
    params.get("a", 1), params.get("b", 2), params.get("c", 3), which="tau")
for _kind in TRIG3_KINDS:
    CATALOG[f"trig-3refl-{_kind}"] = (lambda kind: lambda params: trig_three_reflection(
        params.get("a", 1), params.get("b", 3), params.get("c", -1), params.get("d", 1),
        which=kind))(_kind)
CATALOG["trivial"] = lambda params: trivial_case(n=int(params.get("n", 2)))


def case_by_label(label: str, params: Optional[dict] = None) -> KSolution:
    if label not in CATALOG:
        raise KeyError(f"unknown catalog case {label!r}; see catalog list")
    return CATALOG[label](params or {})


def catalog() -> list:
    """Default instance of every cataloged case, in label order."""
    return [CATALOG[label]({}) for label in sorted(CATALOG)]
