"""Trio parameter sets, Heun constants and the genericity variety.

A ``ParameterSet`` fixes (q, alpha, beta, delta, s, N).  Everything else is
derived: gamma = q^{-N-1}, sigma = -1/s - q s alpha beta and the tilde data
(alpha, beta, alpha/(beta delta)).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GenericityError
from .qaskey import QRacahParams, _ABC, qracah_lambda
from .scalar import coerce, fmt, is_rational

__all__ = ["ParameterSet", "HeunConstants", "psi", "heun_constants", "heun_constants_general", "nu"]


def psi(a, b, g, d, q):
    return q * (a + g) * (1 + b * d) + q * (b + g) * (a + d)


def nu(ps, i):
    """Dressing factor of the tilde operator in the z-basis."""
    a, b, d, s, q = ps.alpha, ps.beta, ps.delta, ps.s, ps.q
    return b * (s - q**i) * (d - a * q**i) / ((1 - b * d * q**i) * (1 - a * b * s * q**i))


def _req(v, name, **where):
    if v == 0:
        raise GenericityError(name, ", ".join(f"{k}={w}" for k, w in where.items()))


@dataclass(frozen=True)
class ParameterSet:
    q: object
    alpha: object
    beta: object
    delta: object
    s: object
    N: int
    check: bool = field(default=True, compare=False)

    def __post_init__(self):
        for f in ("q", "alpha", "beta", "delta", "s"):
            object.__setattr__(self, f, coerce(getattr(self, f)))
        if not isinstance(self.N, int) or self.N < 1:
            raise ValueError("N must be a positive integer")
        if self.check and is_rational(self.q):
            self.check_generic()

    # derived quantities -------------------------------------------------
    @property
    def gamma(self):
        return self.q ** (-self.N - 1)

    @property
    def sigma(self):
        return -1 / self.s - self.q * self.s * self.alpha * self.beta

    @property
    def deltaT(self):
        return self.alpha / (self.beta * self.delta)

    @property
    def rho(self):
        return (self.alpha, self.beta, self.gamma, self.delta)

    @property
    def rhoT(self):
        return (self.alpha, self.beta, self.gamma, self.deltaT)

    def qracah(self, rho, check=None) -> QRacahParams:
        trunc = "alpha" if rho[0] is self.gamma or rho[0] == self.gamma else "gamma"
        return QRacahParams(*rho, self.q, self.N, trunc, self.check if check is None else check)

    def replace(self, **kw) -> "ParameterSet":
        vals = dict(q=self.q, alpha=self.alpha, beta=self.beta, delta=self.delta, s=self.s, N=self.N, check=self.check)
        vals.update(kw)
        return ParameterSet(**vals)

    def as_strings(self) -> dict:
        return {k: fmt(getattr(self, k)) for k in ("q", "alpha", "beta", "delta", "s")}

    def fingerprint(self) -> str:
        d = self.as_strings()
        return ",".join(f"{k}={d[k]}" for k in sorted(d)) + f",N={self.N}"

    # genericity ---------------------------------------------------------
    def check_generic(self):
        """Raise GenericityError naming the first vanishing factor."""
        a, b, d, s, q, N = self.alpha, self.beta, self.delta, self.s, self.q, self.N
        g, dt = self.gamma, None
        for name, v in (
            ("q", q), ("1-q", 1 - q), ("1+q", 1 + q), ("alpha", a), ("beta", b), ("delta", d), ("s", s),
        ):
            _req(v, name)
        dt = self.deltaT
        for i in range(N + 1):
            _req(1 - b * d * q**i, "1-beta*delta*q^i", i=i)
            _req(1 - a * b * s * q**i, "1-alpha*beta*s*q^i", i=i)
            if i:
                _req(s - q**i, "s-q^i", i=i)
                _req(d - a * q**i, "delta-alpha*q^i", i=i)
            _req(1 - a * b * s * q ** (i + 1), "1-alpha*beta*s*q^(i+1)", i=i)
        # every q-Racah family the realization and the overlap formulas touch
        for label, rho in (
            ("rho", self.rho),
            ("rhoT", self.rhoT),
            ("rho'", (g, d, a, b)),
            ("rhoT'", (g, dt, a, b)),
            ("rho[delta=alpha*s]", (a, b, g, a * s)),
            ("rho[gamma,alpha*s,alpha,beta]", (g, a * s, a, b)),
        ):
            try:
                self.qracah(rho, check=True)
            except GenericityError as e:
                raise GenericityError(f"{label}: {e.factor}", e.detail) from None
        for i in range(N + 1):
            for base, name in ((q / s, "(q/s;q)_i"), (q * a / d, "(q*alpha/delta;q)_i")):
                _req(1 - base * q**i, name, i=i + 1)
        # both spectra multiplicity-free
        lam = [qracah_lambda(n, g * d, q) for n in range(N + 1)]
        lamT = [qracah_lambda(x, a * g / (b * d), q) for x in range(N + 1)]
        zeta = [(q ** (-i) - 1 / s) * (1 - a * b * s * q ** (i + 1)) for i in range(N + 1)]
        for vals, name in ((lam, "lambda_n-lambda_m"), (lamT, "lambdaT_x-lambdaT_y"), (zeta, "zeta_i-zeta_j")):
            for i in range(N + 1):
                for j in range(i):
                    _req(vals[i] - vals[j], name, i=i, j=j)
        for i in range(N + 1):
            _req(zeta[i], "zeta_i", i=i)
        # prefactors of the Wilson-form identities and the closed-form GEVP
        _req(1 - a * g * s * q, "1-alpha*gamma*s*q")
        for k in range(N + 1):
            for v, name in (
                (1 - a * g * s * q ** (k + 2), "1-alpha*gamma*s*q^(k+2)"),
                (1 - a * g * s * q ** (k + 1), "1-alpha*gamma*s*q^(k+1)"),
                (1 - q**k / (b * d * s), "1-q^k/(beta*delta*s)"),
                (1 - d * q**k / (a * s), "1-delta*q^k/(alpha*s)"),
                (1 - g * q ** (k + 1) / b, "1-gamma*q^(k+1)/beta"),
                (a * s - d * q**k, "alpha*s-delta*q^k"),
                (a * s - d * q ** (k - 1), "alpha*s-delta*q^(k-1)"),
                (b - g * q**k, "beta-gamma*q^k"),
            ):
                _req(v, name, k=k)
        # recursion conditions on the closed-form GEVP coefficients
        hc = heun_constants(self)
        rp, rpt = (g, d, a, b), (g, dt, a, b)
        for n in range(N):
            A = _ABC(*rp, q, n)[0]
            for x in range(N + 1):
                _req(A * (hc.h3 * lam[n + 1] + hc.h4 * lam[n] - lamT[x]), "cond1", n=n, x=x)
        for x in range(N):
            C = _ABC(*rpt, q, x + 1)[2]
            for n in range(N + 1):
                _req(C * (d / (a * s) * qracah_lambda(x + 1, a * a * g * s * s / d, q) - lam[n]), "cond2", x=x, n=n)


@dataclass(frozen=True)
class HeunConstants:
    h0: object
    h1: object
    h2: object
    h3: object
    h4: object
    h5: object
    h6: object
    h7: object
    h8: object
    h9: object
    h0T: object
    h5T: object
    rho: object


def heun_constants(ps: ParameterSet) -> HeunConstants:
    """Closed-form constants of the four Heun relations."""
    a, b, d, s, q, g = ps.alpha, ps.beta, ps.delta, ps.s, ps.q, ps.gamma
    dt = ps.deltaT
    P, PT = psi(a, b, g, d, q), psi(a, b, g, dt, q)
    w = (1 - a * b * s * s) * (1 - a * b * q * q * s * s) / (s * s * (1 + q))
    zero = 0 * q
    return HeunConstants(
        h0=PT - (1 + q * s * s * a * b) / (b * d * s * (1 + q)) * P,
        h1=zero,
        h2=w / (b * d),
        h3=(-a * q * q * s / d + 1 / (b * d * s)) / (1 - q * q),
        h4=(a * q * s / d - q / (b * d * s)) / (1 - q * q),
        h5=P - d * (1 + q * s * s * a * b) / (a * s * (1 + q)) * PT,
        h6=zero,
        h7=d * w / a,
        h8=(-d * q / (s * a) + q * b * d * s) / (1 - q * q),
        h9=(d / (s * a) - q * q * b * d * s) / (1 - q * q),
        h0T=PT - (q + s * s * a * b) / (b * d * s * (1 + q)) * P,
        h5T=P - d * (q + s * s * a * b) / (a * s * (1 + q)) * PT,
        rho=(1 - q) * (1 / s - a * b * s),
    )


def heun_constants_general(ps: ParameterSet) -> dict:
    """Rebuild the h constants from the generic eigenvalue parametrisation.

    Uses mu_2 = s, mu_7 = 1/(alpha beta s), h_{3,4} = 1/(beta delta s) and the
    linked ratios h_{4,3}, h_{8,9}, h_{9,8}.
    """
    a, b, d, s, q, g = ps.alpha, ps.beta, ps.delta, ps.s, ps.q, ps.gamma
    dt, sig = ps.deltaT, ps.sigma
    mu2, mu7, h34 = s, 1 / (a * b * s), 1 / (b * d * s)
    h43 = dt * q / (d * h34)
    h89 = q / h34
    h98 = d * h34 / dt
    h3 = (h34 - q * h43) / (1 - q * q)
    h4 = (h43 - q * h34) / (1 - q * q)
    h8 = (h89 - q * h98) / (1 - q * q)
    h9 = (h98 - q * h89) / (1 - q * q)
    h2 = -h43 / mu2 - h34 * a * b * mu2 - sig * (h3 + h4)
    h7 = -h98 / mu7 - h89 * a * b * mu7 - sig * (h8 + h9)
    P, PT = psi(a, b, g, d, q), psi(a, b, g, dt, q)
    h0 = PT - (d * h34**2 + q * dt) / (d * h34 * (1 + q)) * P
    h5 = P - (d * h34**2 + q * dt) / (dt * h34 * (1 + q)) * PT
    return dict(
        mu2=mu2, mu7=mu7, h34=h34, h43=h43, h89=h89, h98=h98,
        h0=h0, h2=h2, h3=h3, h4=h4, h5=h5, h7=h7, h8=h8, h9=h9,
    )
