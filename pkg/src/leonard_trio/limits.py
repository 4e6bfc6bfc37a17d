"""Degenerations of the trio overlaps.

Exact identities for the limiting objects (Racah relation, R1, H1, R3, the
reduced Leonard pair) and float-mode ladders that watch the limit process
itself converge.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

import mpmath

from .errors import GenericityError
from .linalg import DenseMatrix, band_predicates
from .params import ParameterSet
from .qaskey import QRacahParams, dual_qhahn_eval, qracah_eval, r_limit_eval
from .qseries import PhiSpec, phi, q_pochhammer, q_pochhammer_multi
from .report import VerificationReport
from .scalar import coerce, float_precision, fmt, is_rational, to_float
from .wilson import trio_wilson_params, wilson_eval

__all__ = [
    "racah_relation_residual",
    "racah_relation_prefactor",
    "R1Params",
    "r1_eval",
    "r1_sum_eval",
    "r1_recurrence_coeffs",
    "r1_recurrence_residual",
    "r1_difference_coeffs",
    "r1_difference_residual",
    "h1_eval",
    "h1_eval_and_residuals",
    "h1_z_matrix",
    "h1_nondiagonalizability",
    "r3_eval",
    "ReducedSequences",
    "reduced_compatibility_check",
    "ReducedLP",
    "build_reduced_lp",
    "LadderResult",
    "run_ladder",
    "limit_ladders",
    "ladders_report",
]


def _gamma_index(gamma, q, limit=256):
    """N with gamma = q^{-N-1}."""
    for N in range(limit):
        if q ** (-N - 1) == gamma:
            return N
    raise GenericityError("gamma", "gamma is not of the form q^(-N-1)")


# ---------------------------------------------------------------- Racah relation


def _racah_rhos(ps):
    a, b, d, g = ps.alpha, ps.beta, ps.delta, ps.gamma
    return (g / b, b * d, g, a / (b * d)), ps.rhoT, ps.rho


def racah_relation_prefactor(ps: ParameterSet, n: int, x: int):
    a, b, d, q, N, g = ps.alpha, ps.beta, ps.delta, ps.q, ps.N, ps.gamma
    return (
        q_pochhammer(d * q ** (-x) / a, q, x) / q_pochhammer(g * q / b, q, x)
        * q_pochhammer(q ** (-n) / (b * d), q, n) / q_pochhammer(g * q / b, q, n)
        * q_pochhammer(b * q, q, N) * (a * q) ** N / q_pochhammer(a * b * q * q, q, N)
    )


def racah_relation_residual(ps: ParameterSet, n: int, x: int):
    """R_n(x; rho1) minus the prefactored sum of R_i(x; rho2) R_i(n; rho3)."""
    a, b, q, N, g = ps.alpha, ps.beta, ps.q, ps.N, ps.gamma
    r1, r2, r3 = _racah_rhos(ps)
    P = lambda rho: QRacahParams(*rho, q, N, "gamma", check=False)  # noqa: E731
    p1, p2, p3 = P(r1), P(r2), P(r3)
    total = 0 * q
    for i in range(N + 1):
        c = (
            q_pochhammer_multi((a * q, q ** (-i) / g, a * b * q), q, i)
            / q_pochhammer_multi((q, a * b * q / g, b * q), q, i)
            * (1 - a * b * q ** (2 * i + 1)) / ((1 - a * b * q) * (a * q) ** i)
        )
        total = total + c * qracah_eval(p2, i, x) * qracah_eval(p3, i, n)
    return qracah_eval(p1, n, x) - racah_relation_prefactor(ps, n, x) * total


# ---------------------------------------------------------------- R1


@dataclass(frozen=True)
class R1Params:
    """Parameters of R1_n(x); gamma = q^{-N-1}."""

    beta: object
    delta: object
    s: object
    q: object
    N: int
    check: bool = True

    def __post_init__(self):
        for f in ("beta", "delta", "s", "q"):
            object.__setattr__(self, f, coerce(getattr(self, f)))
        if self.check and is_rational(self.q):
            self.check_generic()

    @property
    def gamma(self):
        return self.q ** (-self.N - 1)

    @classmethod
    def from_trio(cls, ps: ParameterSet, check=True):
        return cls(ps.beta, ps.delta, ps.s, ps.q, ps.N, check)

    def check_generic(self):
        b, d, s, q, N, g = self.beta, self.delta, self.s, self.q, self.N, self.gamma
        for name, v in (("beta", b), ("delta", d), ("s", s), ("1-q", 1 - q)):
            if v == 0:
                raise GenericityError(name)
        # Pochhammer denominators (gamma q, gamma q/beta, beta delta q, 1/(beta delta s);q)_k, k <= N
        for k in range(N):
            for name, v in (
                ("1-gamma*q^(k+1)", 1 - g * q ** (k + 1)),
                ("1-gamma*q^(k+1)/beta", 1 - g * q ** (k + 1) / b),
                ("1-beta*delta*q^(k+1)", 1 - b * d * q ** (k + 1)),
                ("1-q^k/(beta*delta*s)", 1 - q**k / (b * d * s)),
            ):
                if v == 0:
                    raise GenericityError(name, f"k={k}")
        for x in range(N + 1):
            if b * d * s - q ** (x - 1) == 0:
                raise GenericityError("beta*delta*s-q^(x-1)", f"x={x}")
            for j in range(N):
                # lower parameter beta delta s q^{1-x} of the 4phi3
                if 1 - b * d * s * q ** (1 - x + j) == 0:
                    raise GenericityError("(beta*delta*s*q^(1-x);q)_n", f"x={x}, j={j}")
        for m in range(2 * N + 3):
            if 1 - g * d * q**m == 0:
                raise GenericityError("1-gamma*delta*q^m", f"m={m}")


def r1_eval(p: R1Params, n: int, x: int):
    """4phi3(q^{-n}, gamma delta q^{n+1}, q^{-x}, gamma s q; gamma q, gamma q/beta, beta delta s q^{1-x})."""
    b, d, s, q, g = p.beta, p.delta, p.s, p.q, p.gamma
    return phi(PhiSpec(
        (q ** (-n), g * d * q ** (n + 1), q ** (-x), g * s * q),
        (g * q, g * q / b, b * d * s * q ** (1 - x)),
        q, q, n,
    ))


def r1_sum_eval(p: R1Params, n: int, x: int):
    """Second route: a finite sum of dual q-Hahn polynomials in n."""
    b, d, s, q, N, g = p.beta, p.delta, p.s, p.q, p.N, p.gamma
    pre = q_pochhammer(q ** (-n) / (b * d), q, n) / (q_pochhammer(1 / (b * d * s), q, x) * q_pochhammer(g * q / b, q, n))
    total = 0 * q
    for i in range(N - x, N + 1):
        k = i + x - N
        total = total + (
            q_pochhammer(q ** (i + 1) / s, q, N - i)
            * q_pochhammer_multi((q ** (-x), b * d * q ** (N - x + 1)), q, k)
            / (q_pochhammer(q, q, k) * (b * d * s * q ** (-x)) ** k)
            * dual_qhahn_eval(b * d, g / b, q ** (-N - 1), q, i, n)
        )
    return pre * total


def _D(g, d, q, n, k):
    return 1 - g * d * q ** (2 * n + k)


def r1_recurrence_coeffs(p: R1Params, n: int):
    """(Z_{n+1,n}, Z_{n,n}, Z_{n-1,n}, X_{n+1,n}, X_{n,n}, X_{n-1,n})."""
    b, d, s, q, g = p.beta, p.delta, p.s, p.q, p.gamma
    D = lambda k: _D(g, d, q, n, k)  # noqa: E731
    Zu = -d * q ** (n + 1) * (b - g * q ** (n + 1)) * (1 - g * q ** (n + 1)) * (1 - g * d * q ** (n + 1)) / (D(1) * D(2))
    Zd = q * g * (1 - d * q**n) * (1 - q**n) * (1 - d * b * q**n) / (D(0) * D(1))
    Z0 = ((s - 1) / s
          - (1 - g * q ** (n + 1)) * (1 - g * d * q ** (n + 1)) * (1 - b * d * q ** (n + 1)) / (D(1) * D(2))
          + g * d * q ** (n + 1) * (1 - q**n) * (1 - d * q**n) * (b - g * q**n) / (D(0) * D(1)))
    Xu = -(b - g * q ** (n + 1)) * (1 - b * d * s * q ** (n + 1)) * (1 - g * q ** (n + 1)) * (1 - g * d * q ** (n + 1)) / (
        b * s * D(1) * D(2))
    Xd = q * g * (1 - d * b * q**n) * (g * q**n - b * s) * (1 - q**n) * (1 - d * q**n) / (b * s * D(0) * D(1))
    return Zu, Z0, Zd, Xu, -Xu - Xd, Xd


def _combo(coeffs, vals):
    total = 0
    for c, v in zip(coeffs, vals):
        if v is not None:
            total = total + c * v
    return total


def r1_recurrence_residual(p: R1Params, n: int, x: int, values=None):
    """X-combination minus (q^{-x} - 1) times the Z-combination, in the degree n."""
    f = values or (lambda m, y: r1_eval(p, m, y))
    Zu, Z0, Zd, Xu, X0, Xd = r1_recurrence_coeffs(p, n)
    vals = (f(n + 1, x) if n < p.N else None, f(n, x), f(n - 1, x) if n > 0 else None)
    return _combo((Xu, X0, Xd), vals) - (p.q ** (-x) - 1) * _combo((Zu, Z0, Zd), vals)


def r1_difference_coeffs(p: R1Params, x: int):
    """(Zt_{x,x}, Zt_{x-1,x}, Xt_{x+1,x}, Xt_{x,x}, Xt_{x-1,x}); there is no Zt_{x+1,x}."""
    b, d, s, q, g = p.beta, p.delta, p.s, p.q, p.gamma
    Zm = (1 - q**x) * (b * d - g * q**x) / (b * d * s - q ** (x - 1))
    Z0 = g * q ** (x + 1) - 1 / s
    Xu = (1 - g * q ** (x + 1)) * (b * d * s - q**x) * (b - g * q ** (x + 1)) / (b * s * q**x)
    Xd = (1 - q**x) * (b * d - g * q**x) * (b * s - g * q**x) / (b * s * q ** (x - 1))
    return Z0, Zm, Xu, -Xu - Xd, Xd


def r1_difference_residual(p: R1Params, n: int, x: int, values=None):
    """Difference relation whose spectral side has only the x and x-1 terms."""
    f = values or (lambda m, y: r1_eval(p, m, y))
    Z0, Zm, Xu, X0, Xd = r1_difference_coeffs(p, x)
    q = p.q
    up = f(n, x + 1) if x < p.N else None
    mid = f(n, x)
    down = f(n, x - 1) if x > 0 else None
    spec = (1 - q**n) * (q ** (-n) - p.gamma * p.delta * q)
    return _combo((Xu, X0, Xd), (up, mid, down)) - spec * _combo((Z0, Zm), (mid, down))


# ---------------------------------------------------------------- H1


def h1_eval(beta, gamma, delta, q, n: int, x: int):
    """3phi2(q^{-n}, gamma delta q^{n+1}, q^{-x}; gamma q, beta delta q^{1-x})."""
    return phi(PhiSpec(
        (q ** (-n), gamma * delta * q ** (n + 1), q ** (-x)),
        (gamma * q, beta * delta * q ** (1 - x)),
        q, q, n,
    ))


def _h1_rec(b, g, d, q, n):
    D = lambda k: _D(g, d, q, n, k)  # noqa: E731
    Zu = -(1 - g * d * q ** (n + 1)) * (1 - g * q ** (n + 1)) * b * d * q ** (n + 1) / (D(2) * D(1))
    Zd = -(1 - d * q**n) * (1 - q**n) * g * d * b * q ** (n + 1) / (D(1) * D(0))
    Xu = -(1 - g * d * q ** (n + 1)) * (1 - g * q ** (n + 1)) * (1 - b * d * q ** (n + 1)) / (D(2) * D(1))
    Xd = (1 - d * q**n) * (1 - q**n) * (b - g * q**n) * d * g * q ** (n + 1) / (D(1) * D(0))
    return Zu, -Zu - Zd - 1, Zd, Xu, -Xu - Xd, Xd


def _h1_diff(b, g, d, q, x):
    Zm = b * d * (1 - q**x) / (b * d - q ** (x - 1))
    Xu = (b * d - q**x) * (q ** (-x) - g * q)
    Xd = d * q * (b - g * q**x) * (q ** (-x) - 1)
    return -(q**0), Zm, Xu, -Xu - Xd, Xd


def h1_eval_and_residuals(beta, gamma, delta, q, n: int, x: int, N: int | None = None):
    """(H1_n(x), recurrence residual, difference residual)."""
    beta, gamma, delta, q = (coerce(v) for v in (beta, gamma, delta, q))
    N = _gamma_index(gamma, q) if N is None else N
    f = lambda m, y: h1_eval(beta, gamma, delta, q, m, y)  # noqa: E731
    Zu, Z0, Zd, Xu, X0, Xd = _h1_rec(beta, gamma, delta, q, n)
    vals = (f(n + 1, x) if n < N else None, f(n, x), f(n - 1, x) if n > 0 else None)
    rec = _combo((Xu, X0, Xd), vals) - (q ** (-x) - 1) * _combo((Zu, Z0, Zd), vals)
    Z0, Zm, Xu, X0, Xd = _h1_diff(beta, gamma, delta, q, x)
    up, mid, down = f(n, x + 1) if x < N else None, f(n, x), f(n, x - 1) if x > 0 else None
    spec = (1 - q**n) * (q ** (-n) - gamma * delta * q)
    dif = _combo((Xu, X0, Xd), (up, mid, down)) - spec * _combo((Z0, Zm), (mid, down))
    return f(n, x), rec, dif


def h1_z_matrix(beta, delta, q, N: int) -> DenseMatrix:
    """Spectral-side matrix of the H1 difference relation: -1 on the diagonal, Zt_{x,x-1} below it."""
    beta, delta, q = coerce(beta), coerce(delta), coerce(q)
    g = q ** (-N - 1)
    M = DenseMatrix.zeros(N + 1, zero=0 * q)
    for x in range(N + 1):
        Z0, Zm, *_ = _h1_diff(beta, g, delta, q, x)
        M.rows[x][x] = Z0
        if x > 0:
            M.rows[x][x - 1] = Zm
    return M


def h1_nondiagonalizability(beta, delta, q, N: int) -> dict:
    """Evidence that the H1 spectral matrix is not diagonalizable.

    A lower-triangular matrix has its diagonal as spectrum; here that is the
    single value -1.  Diagonalizable would force Z = -I, i.e. rank(Z + I) = 0.
    """
    Z = h1_z_matrix(beta, delta, q, N)
    bp = band_predicates(Z)
    spectrum = sorted({Z[i][i] for i in range(N + 1)})
    rank = Z.shift(coerce(q) ** 0).rank()
    return {
        "lower_bidiagonal": bp["lower_bidiagonal"],
        "irreducible_lower_bidiagonal": bp["irreducible_lower_bidiagonal"],
        "spectrum": spectrum,
        "rank_Z_plus_I": rank,
        "diagonalizable": rank == 0,
    }


# ---------------------------------------------------------------- R3


def r3_eval(sigma, delta, gamma, q, n: int, x: int):
    """R3_n(x): prefactor times a balanced 4phi3."""
    sigma, delta, gamma, q = (coerce(v) for v in (sigma, delta, gamma, q))
    pre = q_pochhammer_multi((gamma * sigma * q * q, q ** (-n) / delta), q, n) / q_pochhammer_multi(
        (sigma * q ** (1 - n) / delta, gamma * q), q, n)
    return pre * phi(PhiSpec(
        (q ** (-n), gamma * delta * q ** (n + 1), sigma * q, sigma * delta * q),
        (gamma * sigma * q ** (x + 2), sigma * delta * q ** (1 - x), delta * q),
        q, q, n,
    ))


# ---------------------------------------------------------------- reduced machinery


@dataclass(frozen=True)
class ReducedSequences:
    xi: tuple
    lam: tuple

    def __post_init__(self):
        object.__setattr__(self, "xi", tuple(coerce(v) for v in self.xi))
        object.__setattr__(self, "lam", tuple(coerce(v) for v in self.lam))
        if len(self.xi) != len(self.lam):
            raise ValueError("xi and lambda must have the same length")
        for name, seq in (("xi", self.xi), ("lambda", self.lam)):
            if len(set(seq)) != len(seq):
                raise ValueError(f"{name} entries must be pairwise distinct")

    @property
    def N(self):
        return len(self.xi) - 1


def _ratio_of_differences(seq):
    """Common ratio of consecutive first differences, or None."""
    d = [seq[i + 1] - seq[i] for i in range(len(seq) - 1)]
    if any(v == 0 for v in d) or len(d) < 2:
        return None
    r = {d[i + 1] / d[i] for i in range(len(d) - 1)}
    return r.pop() if len(r) == 1 else None


def _form(seqs):
    rx, rl = _ratio_of_differences(seqs.xi), _ratio_of_differences(seqs.lam)
    if rx is None or rl is None:
        return "other"
    if rx == 1 and rl == 1:
        return "l-red"
    if rx != 1 and rx * rl == 1:
        return "q-red"
    return "other"


def reduced_compatibility_check(seqs: ReducedSequences) -> dict:
    """Test (l_x - l_i)/(l_{x-1} - l_i) = (xi_x - xi_i)/(xi_x - xi_{i+1}) for 1 <= x <= N, i < x.

    The relation is checked cross-multiplied, so no denominator is formed.
    """
    xi, lam = seqs.xi, seqs.lam
    ok = True
    for x in range(1, seqs.N + 1):
        for i in range(x):
            if (lam[x] - lam[i]) * (xi[x] - xi[i + 1]) != (xi[x] - xi[i]) * (lam[x - 1] - lam[i]):
                ok = False
                break
        if not ok:
            break
    return {"compatible": ok, "form": _form(seqs) if seqs.N >= 2 else "other"}


@dataclass(frozen=True)
class ReducedLP:
    Z: DenseMatrix
    V: DenseMatrix
    P: DenseMatrix


def build_reduced_lp(alpha, gamma, delta, q, N: int):
    """Reduced Leonard pair from the beta -> 0 limit; returns (ReducedLP, VerificationReport).

    In the z-basis Z = diag(q^{-i}) and V z_i = (1-alpha q^i)(1-delta q^i)(1-gamma q^i) z_{i-1}
    + gamma delta q^{i+1} z_i, so V is upper bidiagonal in column convention.
    """
    alpha, gamma, delta, q = (coerce(v) for v in (alpha, gamma, delta, q))
    if gamma != q ** (-N - 1):
        raise GenericityError("gamma*q^(N+1)-1", "gamma must equal q^(-N-1)")
    n1 = N + 1
    zero = 0 * q
    Z = DenseMatrix.diag([q ** (-i) for i in range(n1)])
    V = DenseMatrix.zeros(n1, zero=zero)
    for i in range(n1):
        V.rows[i][i] = gamma * delta * q ** (i + 1)
        if i > 0:
            V.rows[i - 1][i] = (1 - alpha * q**i) * (1 - delta * q**i) * (1 - gamma * q**i)
    for i in range(1, n1):
        if V[i - 1][i] == 0:
            raise GenericityError("(1-alpha q^i)(1-delta q^i)(1-gamma q^i)", f"i={i}")
    P = DenseMatrix([[r_limit_eval(alpha, gamma, delta, q, i, n) for n in range(n1)] for i in range(n1)])
    lp = ReducedLP(Z, V, P)

    rep = VerificationReport()
    params = {"alpha": alpha, "gamma": gamma, "delta": delta, "q": q}
    params = {k: fmt(v) for k, v in params.items()}
    t0 = time.perf_counter()
    lam = [gamma * delta * q ** (n + 1) for n in range(n1)]
    rep.residual("reduced-lp-V-eigen", "V v_n = gamma delta q^{n+1} v_n", V @ P - P @ DenseMatrix.diag(lam),
                 params, N, t0)
    t0 = time.perf_counter()
    T = DenseMatrix.zeros(n1, zero=zero)
    for n in range(n1):
        T.rows[n][n] = q ** (-n)
        if n > 0:
            T.rows[n - 1][n] = 1 - q ** (-n)
    rep.residual("reduced-lp-Z-action", "Z v_n = (1 - q^{-n}) v_{n-1} + q^{-n} v_n", Z @ P - P @ T, params, N, t0)
    bp = band_predicates(V)
    rep.predicate("reduced-lp-V-bidiagonal", "V irreducible bidiagonal in the z-basis",
                  bp["irreducible_upper_bidiagonal"], params, N)
    t0 = time.perf_counter()
    res = []
    for x in range(n1):
        c = q**0
        for i in range(n1):
            res.append(P[i][x] - c)
            if i < N:
                c = c * (lam[x] - V[i][i]) / V[i][i + 1]
    rep.residual("reduced-lp-coordinates", "zeta(x, i) = prod_{j<i} (lambda_x - lambda_j)/A_j equals r_i(x)",
                 res, params, N, t0)
    t0 = time.perf_counter()
    ok = all(P[i][x] == 0 for x in range(n1) for i in range(x + 1, n1))
    rep.predicate("r-vanishes-above-diagonal", "r_n(x) = 0 for n > x", ok, params, N, t0)
    return lp, rep


# ---------------------------------------------------------------- float ladders

LADDER_TS = ("1e-4", "1e-5", "1e-6")


@dataclass
class LadderResult:
    name: str
    ts: list
    errors: list
    ratios: list
    min_ratio: float
    passed: bool


def run_ladder(name, error_fn, ts=LADDER_TS, factor=5, bits=256) -> LadderResult:
    """Evaluate ``error_fn(t)`` on each rung; pass iff the error drops by at least ``factor`` per rung."""
    with float_precision(bits):
        tt = [mpmath.mpf(t) for t in ts]
        errs = [error_fn(t) for t in tt]
        ratios = [errs[i] / errs[i + 1] if errs[i + 1] != 0 else mpmath.inf for i in range(len(errs) - 1)]
        mr = min(ratios)
        return LadderResult(
            name, [str(t) for t in ts], [mpmath.nstr(e, 6) for e in errs], [mpmath.nstr(r, 6) for r in ratios],
            float(mr), bool(mr >= factor and all(e < 1 for e in errs)),
        )


def _f(v):
    return to_float(coerce(v))


def _grid_max(N, fn):
    best = mpmath.mpf(0)
    for n in range(N + 1):
        for x in range(N + 1):
            e = abs(fn(n, x))
            if e > best:
                best = e
    return best


def _trio_float(q, a, b, d, s, N):
    return ParameterSet(q, a, b, d, s, N, check=False)


def limit_ladders(q="3/5", alpha="1/3", beta="1/7", delta="2", s="1/2", sigma="2/3", N=3, bits=256):
    """The four limit processes plus the R1 difference relation seen through Wilson values."""
    results = []
    with float_precision(bits):
        qf, af, bf, df, sf, sgf = (_f(v) for v in (q, alpha, beta, delta, s, sigma))
        gf = qf ** (-N - 1)

        def racah_err(t):
            ps = _trio_float(qf, af, bf, df, t, N)
            wp = trio_wilson_params(ps)
            p1 = QRacahParams(gf / bf, bf * df, gf, af / (bf * df), qf, N, "gamma", check=False)
            return _grid_max(N, lambda n, x: wilson_eval(wp, n, x) - qracah_eval(p1, n, x))

        r1p = R1Params(bf, df, sf, qf, N, check=False)

        def r1_err(t):
            wp = trio_wilson_params(_trio_float(qf, t, bf, df, sf, N))
            return _grid_max(N, lambda n, x: wilson_eval(wp, n, x) - r1_eval(r1p, n, x))

        def r1_diff_err(t):
            wp = trio_wilson_params(_trio_float(qf, t, bf, df, sf, N))
            cache = {}

            def vals(m, y):
                if (m, y) not in cache:
                    cache[m, y] = wilson_eval(wp, m, y)
                return cache[m, y]

            return _grid_max(N, lambda n, x: r1_difference_residual(r1p, n, x, values=vals))

        def r3_err(t):
            wp = trio_wilson_params(_trio_float(qf, t, t, df, sgf / t, N))
            return _grid_max(N, lambda n, x: wilson_eval(wp, n, x) - r3_eval(sgf, df, gf, qf, n, x))

        def beta_err(t):
            p = QRacahParams(af, t, gf, df / t, qf, N, "gamma", check=False)
            return _grid_max(N, lambda n, x: t**n * qracah_eval(p, n, x) - r_limit_eval(af, gf, df, qf, n, x))

        for name, fn in (
            ("limit-s-to-0-racah", racah_err),
            ("limit-alpha-to-0-r1", r1_err),
            ("limit-alpha-to-0-r1-difference", r1_diff_err),
            ("limit-alpha-to-0-r3", r3_err),
            ("limit-beta-to-0-r", beta_err),
        ):
            results.append(run_ladder(name, fn, bits=bits))
    return results


def ladders_report(results, params) -> VerificationReport:
    rep = VerificationReport()
    for r in results:
        rep.predicate(r.name, "error falls at least 5x per decade of the limit parameter", r.passed, params, None,
                      note="errors " + ", ".join(r.errors))
        rep.checks[-1].max_residual = mpmath.mpf(r.errors[-1])
    return rep

