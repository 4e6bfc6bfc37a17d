"""q-Racah and dual q-Hahn families, their coefficients, weights and limits."""
from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import GenericityError
from .qseries import PhiSpec, phi, q_pochhammer, q_pochhammer_multi
from .scalar import coerce, is_rational

__all__ = [
    "QRacahParams",
    "EigenvalueMap",
    "qracah_lambda",
    "qracah_eval",
    "qracah_ABC",
    "qracah_weights",
    "qracah_omega",
    "qracah_M",
    "qracah_recurrence_residual",
    "qracah_difference_residual",
    "qracah_duality_check",
    "qracah_gram",
    "qracah_closure",
    "dual_qhahn_eval",
    "r_limit_eval",
    "r_limit_recurrence_residual",
    "r_limit_difference_residual",
]

TRUNCATIONS = ("alpha", "beta_delta", "gamma")


def _require(value, name, **where):
    if value == 0:
        detail = ", ".join(f"{k}={v}" for k, v in where.items())
        raise GenericityError(name, detail)
    return value


@dataclass(frozen=True)
class QRacahParams:
    """rho = (alpha, beta, gamma, delta) with one truncation condition at N.

    ``truncation`` is detected when omitted (exact mode).  In float mode pass
    it explicitly; detection relies on exact equality.
    """

    alpha: object
    beta: object
    gamma: object
    delta: object
    q: object
    N: int
    truncation: str | None = None
    check: bool = True

    def __post_init__(self):
        for f in ("alpha", "beta", "gamma", "delta", "q"):
            object.__setattr__(self, f, coerce(getattr(self, f)))
        if not isinstance(self.N, int) or self.N < 0:
            raise ValueError("N must be a non-negative integer")
        if self.truncation is None:
            t = self.q ** (-self.N - 1)
            hits = [
                name
                for name, v in zip(TRUNCATIONS, (self.alpha, self.beta * self.delta, self.gamma))
                if v == t
            ]
            if len(hits) != 1:
                raise GenericityError(
                    "truncation", f"expected exactly one truncation condition, found {hits or 'none'}"
                )
            object.__setattr__(self, "truncation", hits[0])
        elif self.truncation not in TRUNCATIONS:
            raise ValueError(f"unknown truncation {self.truncation!r}")
        if self.check and is_rational(self.q):
            self.check_generic()

    @property
    def rho(self):
        return (self.alpha, self.beta, self.gamma, self.delta)

    def dual(self) -> "QRacahParams":
        """rho' = (gamma, delta, alpha, beta)."""
        dual_trunc = {"alpha": "gamma", "gamma": "alpha", "beta_delta": "beta_delta"}[self.truncation]
        return QRacahParams(
            self.gamma, self.delta, self.alpha, self.beta, self.q, self.N, dual_trunc, self.check
        )

    def with_values(self, **kw) -> "QRacahParams":
        return replace(self, truncation=None, **kw)

    def check_generic(self):
        """Reject parameter sets on which any coefficient, weight or M has a pole."""
        a, b, g, d, q, N = self.alpha, self.beta, self.gamma, self.delta, self.q, self.N
        for name, v in (("q", q), ("q-1", q - 1), ("gamma", g), ("delta", d), ("gamma*delta*q", g * d * q)):
            _require(v, name)
        _require(1 - a * b * q, "1-alpha*beta*q")
        for n in range(N + 1):
            _require(1 - a * b * q ** (2 * n + 1), "1-alpha*beta*q^(2n+1)", n=n)
            _require(1 - a * b * q ** (2 * n + 2), "1-alpha*beta*q^(2n+2)", n=n)
            if n:
                _require(1 - a * b * q ** (2 * n), "1-alpha*beta*q^(2n)", n=n)
                _require(1 - q**n, "1-q^n", n=n)
        for base, name in (
            (a * b * q / g, "(alpha*beta*q/gamma;q)_N"),
            (a * q / d, "(alpha*q/delta;q)_N"),
            (b * q, "(beta*q;q)_N"),
            (a * q, "(alpha*q;q)_N"),
            (b * d * q, "(beta*delta*q;q)_N"),
            (g * q, "(gamma*q;q)_N"),
        ):
            _require(q_pochhammer(base, q, N), name)
        try:
            _require(qracah_M(self), "M_rho")
        except ZeroDivisionError:
            raise GenericityError("M_rho denominator", self.truncation) from None


@dataclass(frozen=True)
class EigenvalueMap:
    """lambda(x) = q^{-x} + a q^{x+1}."""

    a: object
    q: object

    def __call__(self, x: int):
        return self.q ** (-x) + self.a * self.q ** (x + 1)

    def check_injective(self, N: int):
        vals = [self(x) for x in range(N + 1)]
        for i in range(N + 1):
            for j in range(i):
                if vals[i] == vals[j]:
                    raise GenericityError("lambda(x)-lambda(y)", f"x={i}, y={j}")
        return vals


def qracah_lambda(x: int, a, q):
    return q ** (-x) + a * q ** (x + 1)


def _grid(p, *idx):
    for i in idx:
        if not 0 <= i <= p.N:
            raise IndexError(f"index {i} outside 0..{p.N}")


def qracah_eval(p: QRacahParams, n: int, x: int):
    """R_n(x; rho) as a terminating 4phi3 at z = q."""
    _grid(p, n, x)
    a, b, g, d, q = p.alpha, p.beta, p.gamma, p.delta, p.q
    return phi(
        PhiSpec(
            (q ** (-n), a * b * q ** (n + 1), q ** (-x), g * d * q ** (x + 1)),
            (a * q, b * d * q, g * q),
            q,
            q,
            n,
        )
    )


def _ABC(a, b, g, d, q, n):
    A = (
        (1 - a * q ** (n + 1))
        * (1 - a * b * q ** (n + 1))
        * (1 - b * d * q ** (n + 1))
        * (1 - g * q ** (n + 1))
        / ((1 - a * b * q ** (2 * n + 1)) * (1 - a * b * q ** (2 * n + 2)))
    )
    if n == 0:
        C = 0 * A
    else:
        C = (
            q
            * (1 - q**n)
            * (1 - b * q**n)
            * (g - a * b * q**n)
            * (d - a * q**n)
            / ((1 - a * b * q ** (2 * n)) * (1 - a * b * q ** (2 * n + 1)))
        )
    B = -A - C + 1 + g * d * q
    return A, B, C


def qracah_ABC(p: QRacahParams, n: int):
    """Recurrence coefficients (A_n, B_n, C_n); C_0 = 0 and A_N = 0."""
    return _ABC(p.alpha, p.beta, p.gamma, p.delta, p.q, n)


def qracah_omega(rho, q, n: int):
    a, b, g, d = rho
    return (
        q_pochhammer_multi((a * q, g * q, b * d * q, a * b * q), q, n)
        / q_pochhammer_multi((q, a * b * q / g, a * q / d, b * q), q, n)
        * (1 - a * b * q ** (2 * n + 1))
        / ((g * d * q) ** n * (1 - a * b * q))
    )


def qracah_M(p: QRacahParams):
    a, b, g, d, q, N = p.alpha, p.beta, p.gamma, p.delta, p.q, p.N
    if p.truncation == "alpha":
        return q_pochhammer_multi((g * q / b, d * q), q, N) / q_pochhammer_multi((1 / b, g * d * q * q), q, N)
    if p.truncation == "beta_delta":
        return q_pochhammer_multi((a * b * q / g, b * q), q, N) / q_pochhammer_multi((a * b * q * q, b / g), q, N)
    return q_pochhammer_multi((a * q / d, b * q), q, N) / q_pochhammer_multi((a * b * q * q, 1 / d), q, N)


def qracah_weights(p: QRacahParams, n: int):
    """(Omega_n(rho), M_rho)."""
    return qracah_omega(p.rho, p.q, n), qracah_M(p)


def _row(p, x):
    """[R_0(x), ..., R_N(x)]."""
    return [qracah_eval(p, n, x) for n in range(p.N + 1)]


def qracah_recurrence_residual(p: QRacahParams, n: int, x: int):
    """lambda(x; gamma delta) R_n(x) - (A_n R_{n+1} + B_n R_n + C_n R_{n-1}).

    R_{-1} and R_{N+1} are taken as 0; the second needs A_N = 0, which is
    checked rather than assumed.
    """
    _grid(p, n, x)
    A, B, C = qracah_ABC(p, n)
    if n == p.N:
        if is_rational(A) and A != 0:
            raise GenericityError("A_N", "truncation factor does not vanish")
        up = 0
    else:
        up = A * qracah_eval(p, n + 1, x)
    down = C * qracah_eval(p, n - 1, x) if n > 0 else 0
    lhs = qracah_lambda(x, p.gamma * p.delta, p.q) * qracah_eval(p, n, x)
    return lhs - (up + B * qracah_eval(p, n, x) + down)


def qracah_difference_residual(p: QRacahParams, n: int, x: int):
    """lambda(n; alpha beta) R_n(x) - (A_x(rho') R_n(x+1) + B_x(rho') R_n(x) + C_x(rho') R_n(x-1))."""
    _grid(p, n, x)
    A, B, C = _ABC(p.gamma, p.delta, p.alpha, p.beta, p.q, x)
    up = A * qracah_eval(p, n, x + 1) if x < p.N else 0
    down = C * qracah_eval(p, n, x - 1) if x > 0 else 0
    lhs = qracah_lambda(n, p.alpha * p.beta, p.q) * qracah_eval(p, n, x)
    return lhs - (up + B * qracah_eval(p, n, x) + down)


def qracah_duality_check(p: QRacahParams, n: int, x: int):
    """(R_n(x; rho), R_x(n; rho')); the two entries agree."""
    return qracah_eval(p, n, x), qracah_eval(p.dual(), x, n)


def qracah_gram(p: QRacahParams):
    """G[m][n] = M_rho Omega_n(rho) sum_x Omega_x(rho') R_m(x) R_n(x); equals the identity."""
    N, q = p.N, p.q
    pd = p.dual()
    M = qracah_M(p)
    wx = [qracah_omega(pd.rho, q, x) for x in range(N + 1)]
    R = [_row(p, x) for x in range(N + 1)]  # R[x][n]
    out = []
    for m in range(N + 1):
        row = []
        for n in range(N + 1):
            s = 0
            for x in range(N + 1):
                s = s + wx[x] * R[x][m] * R[x][n]
            row.append(M * qracah_omega(p.rho, q, n) * s)
        out.append(row)
    return out


def qracah_closure(p: QRacahParams):
    """K[x][y] = Omega_x(rho') sum_n M_rho Omega_n(rho) R_n(x) R_n(y); equals the identity."""
    N, q = p.N, p.q
    pd = p.dual()
    M = qracah_M(p)
    wn = [M * qracah_omega(p.rho, q, n) for n in range(N + 1)]
    R = [_row(p, x) for x in range(N + 1)]
    return [
        [qracah_omega(pd.rho, q, x) * sum((wn[n] * R[x][n] * R[y][n] for n in range(N + 1)), 0) for y in range(N + 1)]
        for x in range(N + 1)
    ]


def dual_qhahn_eval(alpha, beta, gamma, q, n: int, x: int):
    """3phi2(q^{-n}, q^{-x}, alpha beta q^{x+1}; alpha q, gamma q; q, q)."""
    return phi(PhiSpec((q ** (-n), q ** (-x), alpha * beta * q ** (x + 1)), (alpha * q, gamma * q), q, q, n))


def r_limit_eval(alpha, gamma, delta, q, n: int, x: int):
    """r_n(x) = (q^{-x};q)_n / (alpha q, gamma q, delta q;q)_n (gamma delta q^{x+1})^n."""
    den = q_pochhammer_multi((alpha * q, gamma * q, delta * q), q, n)
    if den == 0:
        raise GenericityError("(alpha q, gamma q, delta q;q)_n", f"n={n}")
    return q_pochhammer(q ** (-x), q, n) / den * (gamma * delta * q ** (x + 1)) ** n


def r_limit_recurrence_residual(alpha, gamma, delta, q, N: int, n: int, x: int):
    """gamma delta q^{x+1} r_n(x) - (1-alpha q^{n+1})(1-delta q^{n+1})(1-gamma q^{n+1}) r_{n+1}(x) - gamma delta q^{n+1} r_n(x)."""
    r = lambda k: r_limit_eval(alpha, gamma, delta, q, k, x)  # noqa: E731
    coef = (1 - alpha * q ** (n + 1)) * (1 - delta * q ** (n + 1)) * (1 - gamma * q ** (n + 1))
    up = coef * r(n + 1) if n < N else 0
    return gamma * delta * q ** (x + 1) * r(n) - up - gamma * delta * q ** (n + 1) * r(n)


def r_limit_difference_residual(alpha, gamma, delta, q, n: int, x: int):
    """q^{-n} r_n(x) - (1 - q^{-x}) r_n(x-1) - q^{-x} r_n(x)."""
    r = lambda y: r_limit_eval(alpha, gamma, delta, q, n, y)  # noqa: E731
    down = (1 - q ** (-x)) * r(x - 1) if x > 0 else 0
    return q ** (-n) * r(x) - down - q ** (-x) * r(x)
