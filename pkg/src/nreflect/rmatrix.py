"""Base r-matrices and the Yang-Baxter residual checker.

r-matrices are represented as exact evaluators together with an exact pole
predicate; identities about them are certified by evaluation at seeded
rational sample points (see :mod:`nreflect.sampling`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import PoleError
from .linalg import Matrix, commutator, embed_pair, permutation_operator, swap_pair
from .scalars import Scalar, as_scalar


@dataclass(frozen=True)
class RMatrixFun:
    """Matrix-valued function of two spectral parameters on C^n x C^n."""

    n: int
    kind: str  # "rational" | "trigonometric" | "constructed"
    evaluate: Callable[[Scalar, Scalar], Matrix]
    pole_predicate: Callable[[Scalar, Scalar], bool]
    label: str = ""

    def __call__(self, lam, mu) -> Matrix:
        lam, mu = as_scalar(lam), as_scalar(mu)
        if self.pole_predicate(lam, mu):
            raise PoleError(f"{self.label or self.kind} r-matrix has a pole at ({lam}, {mu})")
        return self.evaluate(lam, mu)


def rational_r(n: int) -> RMatrixFun:
    """P/(lam - mu) on C^n x C^n."""
    perm = permutation_operator(n)

    def evaluate(lam, mu):
        return perm.scale(1 / (lam - mu))

    return RMatrixFun(n=n, kind="rational", evaluate=evaluate,
                      pole_predicate=lambda lam, mu: lam == mu,
                      label=f"rational (n={n})")


def trig_r() -> RMatrixFun:
    """The standard 4x4 trigonometric solution (n = 2)."""

    def evaluate(lam, nu):
        pref = 1 / (2 * (lam - nu))
        s = lam + nu
        zero = as_scalar(0)
        rows = [[-s, zero, zero, zero],
                [zero, s, -4 * nu, zero],
                [zero, -4 * lam, s, zero],
                [zero, zero, zero, -s]]
        return Matrix(rows, legs=("pair", 2)).scale(pref)

    return RMatrixFun(n=2, kind="trigonometric", evaluate=evaluate,
                      pole_predicate=lambda lam, nu: lam == nu,
                      label="trigonometric")


def cybe_residual(r: RMatrixFun, lam, mu, nu) -> Matrix:
    """[r_ab(l,m), r_ac(l,n)] + [r_ab(l,m), r_bc(m,n)] - [r_ac(l,n), r_cb(n,m)].

    Exactly zero iff the classical Yang-Baxter equation holds at the sample.
    """
    n = r.n
    r_ab = embed_pair(r(lam, mu), "ab", n)
    r_ac = embed_pair(r(lam, nu), "ac", n)
    r_bc = embed_pair(r(mu, nu), "bc", n)
    r_cb = embed_pair(r(nu, mu), "cb", n)
    return commutator(r_ab, r_ac) + commutator(r_ab, r_bc) - commutator(r_ac, r_cb)


def cybe_pole(r: RMatrixFun, lam, mu, nu) -> bool:
    pairs = [(lam, mu), (lam, nu), (mu, nu), (nu, mu)]
    return any(r.pole_predicate(as_scalar(x), as_scalar(y)) for x, y in pairs)


def skew_residual(r: RMatrixFun, lam, mu) -> Matrix:
    """r_ab(lam, mu) + P r(mu, lam) P; zero iff r is skew-symmetric."""
    return r(lam, mu) + swap_pair(r(mu, lam))
