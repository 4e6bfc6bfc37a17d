"""Wilson rational functions: the terminating very-well-poised 10phi9 and its GEVPs."""
from __future__ import annotations

from dataclasses import dataclass

import mpmath

from .errors import GenericityError
from .qaskey import _ABC, qracah_lambda
from .qseries import very_well_poised_phi
from .scalar import coerce, is_rational, to_float

__all__ = [
    "WilsonParams",
    "trio_wilson_params",
    "wilson_eval",
    "wilson_gevp_coeffs",
    "wilson_gevp_residual",
    "wilson_difference_residual",
    "trio_wilson_gevp_coeffs",
    "trio_wilson_gevp_residual",
]


@dataclass(frozen=True)
class WilsonParams:
    """(a, b, c, e, f) with d = q^{N+1} and b c d e f = 1."""

    a: object
    b: object
    c: object
    e: object
    f: object
    q: object
    N: int

    def __post_init__(self):
        for k in ("a", "b", "c", "e", "f", "q"):
            object.__setattr__(self, k, coerce(getattr(self, k)))
        bal = self.b * self.c * self.d * self.e * self.f
        if is_rational(bal):
            ok = bal == 1
        else:
            ok = abs(to_float(bal) - 1) < mpmath.mpf(2) ** (-mpmath.mp.prec + 16)
        if not ok:
            raise GenericityError("b*c*d*e*f-1", "balancing condition violated")

    @property
    def d(self):
        return self.q ** (self.N + 1)

    def swap_bc(self) -> "WilsonParams":
        return WilsonParams(self.a, self.c, self.b, self.e, self.f, self.q, self.N)


def trio_wilson_params(ps) -> WilsonParams:
    """(a,b,c,d,e,f) = (alpha gamma s q, gamma delta, alpha gamma/(beta delta), 1/gamma, 1/alpha, beta/gamma)."""
    a, b, d, s, q, g = ps.alpha, ps.beta, ps.delta, ps.s, ps.q, ps.gamma
    return WilsonParams(a * g * s * q, g * d, a * g / (b * d), 1 / a, b / g, q, ps.N)


def _tail(p, n, x):
    a, b, c, d, e, f, q = p.a, p.b, p.c, p.d, p.e, p.f, p.q
    return [b * q ** (n + 1), q ** (-x), c * q ** (x + 1), a * d, a * e, a * f]


def wilson_eval(p: WilsonParams, n: int, x: int):
    if not (0 <= n <= p.N and 0 <= x <= p.N):
        raise IndexError(f"(n, x) = ({n}, {x}) outside 0..{p.N}")
    return very_well_poised_phi(p.a, _tail(p, n, x), p.q, n)


def wilson_gevp_coeffs(p: WilsonParams, n: int):
    """(Z_{n+1,n}, Z_{n,n}, Z_{n-1,n}, X_{n+1,n}, X_{n,n}, X_{n-1,n})."""
    a, b, c, d, e, f, q = p.a, p.b, p.c, p.d, p.e, p.f, p.q
    A, B, C = _ABC(1 / d, b * d, 1 / e, f / d, q, n)
    zero = 0 * q
    Zu = A * (a - b * q ** (n + 1)) * (f - q ** (n + 1)) / ((1 - a * q ** (n + 1)) * (1 - b * f * q ** (n + 1)))
    Xu = A * (a - b * q ** (n + 1)) * (f - q ** (n + 1)) * (c - a * q**n) / (a * q**n * (1 - b * f * q ** (n + 1)))
    if n == 0:
        Zd = Xd = zero
    else:
        Zd = C * (1 - a * q**n) * (1 - b * f * q**n) / ((a - b * q**n) * (f - q**n))
        Xd = C * (1 - a * q**n) * (1 - b * f * q**n) * (a - b * c * q ** (n + 1)) / (a * b * q**n * (f - q**n))
    Z0 = B - a * f - q * b * c * f / a
    return Zu, Z0, Zd, Xu, -Xu - Xd, Xd


def _three_term(coeffs, values):
    """sum of c_k * v_k, skipping terms whose value is out of range (None)."""
    total = 0
    for c, v in zip(coeffs, values):
        if v is None:
            continue
        total = total + c * v
    return total


def _check_edge(p, coeff, n):
    if n == p.N and is_rational(coeff) and coeff != 0:
        raise GenericityError("A_N", "edge coefficient does not vanish at n = N")


def wilson_gevp_residual(p: WilsonParams, n: int, x: int, values=None):
    """LHS - RHS of the recurrence GEVP with spectral factor lambda(x;c) - 1 - cq.

    ``values(n, x)`` overrides the function being tested (defaults to
    ``wilson_eval``); this is how limit processes are probed.
    """
    W = values or (lambda m, y: wilson_eval(p, m, y))
    Zu, Z0, Zd, Xu, X0, Xd = wilson_gevp_coeffs(p, n)
    _check_edge(p, Xu, n)
    _check_edge(p, Zu, n)
    vals = (W(n + 1, x) if n < p.N else None, W(n, x), W(n - 1, x) if n > 0 else None)
    spec = qracah_lambda(x, p.c, p.q) - 1 - p.c * p.q
    return _three_term((Xu, X0, Xd), vals) - spec * _three_term((Zu, Z0, Zd), vals)


def wilson_difference_residual(p: WilsonParams, n: int, x: int):
    """Difference GEVP in x, obtained by transporting the recurrence through b <-> c."""
    ps = p.swap_bc()
    Zu, Z0, Zd, Xu, X0, Xd = wilson_gevp_coeffs(ps, x)
    _check_edge(p, Xu, x)
    _check_edge(p, Zu, x)
    vals = (
        wilson_eval(p, n, x + 1) if x < p.N else None,
        wilson_eval(p, n, x),
        wilson_eval(p, n, x - 1) if x > 0 else None,
    )
    spec = qracah_lambda(n, p.b, p.q) - 1 - p.b * p.q
    return _three_term((Xu, X0, Xd), vals) - spec * _three_term((Zu, Z0, Zd), vals)


def trio_wilson_gevp_coeffs(ps, n: int):
    """Recurrence GEVP coefficients written in trio variables (same order as ``wilson_gevp_coeffs``)."""
    a, b, d, s, q, g = ps.alpha, ps.beta, ps.delta, ps.s, ps.q, ps.gamma
    A, B, C = _ABC(g, d, a, b, q, n)
    zero = 0 * q
    Zu = A * q * (a * s - d * q**n) * (b - g * q ** (n + 1)) / ((1 - a * g * s * q ** (n + 2)) * (1 - b * d * q ** (n + 1)))
    Xu = A * (a * s - d * q**n) * (b - g * q ** (n + 1)) * (1 - b * d * s * q ** (n + 1)) / (
        b * d * s * q**n * (1 - b * d * q ** (n + 1))
    )
    if n == 0:
        Zd = Xd = zero
    else:
        Zd = C * (1 - a * g * s * q ** (n + 1)) * (1 - b * d * q**n) / (q * (a * s - d * q ** (n - 1)) * (b - g * q**n))
        Xd = C * (1 - a * g * s * q ** (n + 1)) * (1 - b * d * q**n) * (b * s - g * q**n) / (b * d * s * q**n * (b - g * q**n))
    Z0 = B + ps.sigma
    return Zu, Z0, Zd, Xu, -Xu - Xd, Xd


def trio_wilson_gevp_residual(ps, n: int, x: int):
    """Residual of the trio-variable GEVP with factor (1 - q^x)(q^{-x} - alpha gamma q/(beta delta))."""
    p = trio_wilson_params(ps)
    Zu, Z0, Zd, Xu, X0, Xd = trio_wilson_gevp_coeffs(ps, n)
    _check_edge(p, Xu, n)
    vals = (
        wilson_eval(p, n + 1, x) if n < ps.N else None,
        wilson_eval(p, n, x),
        wilson_eval(p, n - 1, x) if n > 0 else None,
    )
    q = ps.q
    spec = (1 - q**x) * (q ** (-x) - ps.alpha * ps.gamma * q / (ps.beta * ps.delta))
    return _three_term((Xu, X0, Xd), vals) - spec * _three_term((Zu, Z0, Zd), vals)
