"""Exact scalar arithmetic: rationals and cyclotomic fields Q(zeta_N).

A "scalar" throughout the package is either a ``fractions.Fraction`` or a
:class:`Cyclotomic`.  Mixed arithmetic promotes rationals into Q(zeta_N);
cyclotomic results whose non-constant coordinates vanish demote back to
``Fraction``, so a stored ``Cyclotomic`` is never secretly rational.
"""

from __future__ import annotations

import cmath
import re
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import OrderMismatchError

Rational = Fraction
Scalar = Union[Fraction, "Cyclotomic"]

ZERO = Fraction(0)
ONE = Fraction(1)


# ---------------------------------------------------------------------------
# dense univariate polynomials over Fraction, lowest degree first
# ---------------------------------------------------------------------------

def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_mul(p, q):
    if not p or not q:
        return []
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] += a * b
    return _trim(out)


def _poly_divmod(p, q):
    """Exact division of p by q over Q; q must be nonzero."""
    p = list(p)
    out = [ZERO] * max(len(p) - len(q) + 1, 0)
    lead = q[-1]
    while len(p) >= len(q) and _trim(p):
        p = _trim(p)
        if len(p) < len(q):
            break
        shift = len(p) - len(q)
        factor = p[-1] / lead
        out[shift] = factor
        for i, b in enumerate(q):
            p[shift + i] -= factor * b
        p.pop()
    return _trim(out), _trim(p)


def _poly_mod(p, q):
    return _poly_divmod(p, q)[1]


def _poly_xgcd(p, q):
    """Extended Euclid over Q[x]: returns (g, u, v) with u*p + v*q = g."""
    r0, r1 = list(p), list(q)
    u0, u1 = [ONE], []
    v0, v1 = [], [ONE]
    while _trim(r1):
        quo, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem
        u0, u1 = u1, _trim([a - b for a, b in _pad(u0, _poly_mul(quo, u1))])
        v0, v1 = v1, _trim([a - b for a, b in _pad(v0, _poly_mul(quo, v1))])
    return r0, u0, v0


def _pad(p, q):
    n = max(len(p), len(q))
    return zip(p + [ZERO] * (n - len(p)), q + [ZERO] * (n - len(q)))


@lru_cache(maxsize=None)
def cyclotomic_polynomial(order: int) -> tuple:
    """Coefficients of Phi_N, lowest degree first, computed by dividing
    x^N - 1 by Phi_d over all proper divisors d of N."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    poly = [-ONE] + [ZERO] * (order - 1) + [ONE]  # x^N - 1
    for d in range(1, order):
        if order % d == 0:
            quo, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
            assert not rem
            poly = quo
    return tuple(poly)


def euler_phi(order: int) -> int:
    return len(cyclotomic_polynomial(order)) - 1


# ---------------------------------------------------------------------------
# cyclotomic field elements
# ---------------------------------------------------------------------------

class Cyclotomic:
    """Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi(N)-1).

    Do not call the constructor with unreduced data; use :func:`cyclotomic`
    or :meth:`zeta`, which reduce modulo Phi_N and demote rational values.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs):
        self.order = order
        self.coeffs = tuple(coeffs)

    @staticmethod
    def zeta(order: int, power: int = 1) -> Scalar:
        """Primitive N-th root of unity zeta_N raised to ``power``."""
        power %= order
        return cyclotomic(order, [ZERO] * power + [ONE])

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.order)
        return sum((complex(c) * z**k for k, c in enumerate(self.coeffs)), 0j)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise OrderMismatchError(
                    f"cannot mix Q(zeta_{self.order}) with Q(zeta_{other.order})")
            return list(other.coeffs)
        if isinstance(other, (int, Fraction)):
            return [Fraction(other)]
        return None

    def __add__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return cyclotomic(self.order, [a + b for a, b in _pad(list(self.coeffs), oc)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return cyclotomic(self.order, [a - b for a, b in _pad(list(self.coeffs), oc)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        return cyclotomic(self.order, _poly_mul(list(self.coeffs), oc))

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        """Multiplicative inverse via extended Euclid against Phi_N."""
        if not self:
            raise ZeroDivisionError("inversion of zero cyclotomic element")
        g, u, _ = _poly_xgcd(list(self.coeffs), list(cyclotomic_polynomial(self.order)))
        # g is a nonzero constant since Phi_N is irreducible over Q
        return cyclotomic(self.order, [c / g[0] for c in u])

    def __truediv__(self, other):
        oc = self._coerce(other)
        if oc is None:
            return NotImplemented
        inv = cyclotomic(self.order, oc)
        if isinstance(inv, Fraction):
            if inv == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / inv)
        return self * inv.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        acc: Scalar = ONE
        base: Scalar = self
        while exponent:
            if exponent & 1:
                acc = acc * base
            base = base * base
            exponent >>= 1
        return acc

    # -- comparisons / hashing ---------------------------------------------

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return False  # canonical form: rational values demote to Fraction
        return NotImplemented

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"Cyclotomic({self.order}, {scalar_to_str(self)!r})"

    def __str__(self):
        return scalar_to_str(self)


def cyclotomic(order: int, coeffs) -> Scalar:
    """Reduce a coefficient sequence mod Phi_N and demote rationals."""
    phi = euler_phi(order)
    reduced = _poly_mod([Fraction(c) for c in coeffs], list(cyclotomic_polynomial(order)))
    if len(reduced) <= 1:
        return reduced[0] if reduced else ZERO
    reduced = reduced + [ZERO] * (phi - len(reduced))
    return Cyclotomic(order, reduced)


def zeta(order: int, power: int = 1) -> Scalar:
    return Cyclotomic.zeta(order, power)


# ---------------------------------------------------------------------------
# generic helpers over Scalar
# ---------------------------------------------------------------------------

def as_scalar(x) -> Scalar:
    if isinstance(x, (Cyclotomic, Fraction)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def to_complex(x) -> complex:
    """Floating shadow of an exact scalar (also accepts ints/floats/complex)."""
    if isinstance(x, Cyclotomic):
        return x.to_complex()
    return complex(x)


def scalar_sort_key(x):
    """Canonical total order used to keep root lists deterministic."""
    if isinstance(x, Cyclotomic):
        return (1, x.order) + tuple(x.coeffs)
    x = Fraction(x)
    return (0, x)


def scalar_to_str(x) -> str:
    """Render "p/q" for rationals, "c0 + c1*z + ..." for cyclotomics."""
    if isinstance(x, Cyclotomic):
        parts = []
        for k, c in enumerate(x.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(scalar_to_str(c))
            else:
                mono = "z" if k == 1 else f"z^{k}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{scalar_to_str(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


_TERM_RE = re.compile(r"^(?:(?P<coeff>\d+(?:/\d+)?)\*?)?(?P<z>z(?:\^(?P<pow>\d+))?)?$")


def scalar_from_str(text: str, order: int | None = None) -> Scalar:
    """Parse the forms produced by :func:`scalar_to_str`.

    Plain "p/q" needs no order; any "z" term needs the cyclotomic order of
    the enclosing case.
    """
    text = text.strip().replace(" ", "")
    if not text:
        raise ValueError("empty scalar")
    total: Scalar = ZERO
    for term in re.findall(r"[+-]?[^+-]+", text):
        sign = 1
        if term[0] in "+-":
            sign = -1 if term[0] == "-" else 1
            term = term[1:]
        m = _TERM_RE.match(term)
        if not m or (m.group("coeff") is None and m.group("z") is None):
            raise ValueError(f"cannot parse scalar term {term!r} in {text!r}")
        coeff = sign * Fraction(m.group("coeff") or 1)
        if m.group("z"):
            if order is None:
                raise ValueError(f"scalar {text!r} uses z but no cyclotomic order was given")
            total = total + coeff * zeta(order, int(m.group("pow") or 1))
        else:
            total = total + coeff
    return total
