"""Terminating basic hypergeometric series over an exact field.

All evaluators accept any field elements supporting + - * / and integer
powers: gmpy2 ``mpq``, ``Fraction``, or ``mpmath.mpf`` in float mode.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass

import mpmath

from . import kernels
from .errors import GenericityError, PoleError
from .scalar import is_rational, to_float

__all__ = [
    "PoleError",
    "PhiSpec",
    "PochhammerCache",
    "q_pochhammer",
    "q_pochhammer_multi",
    "phi",
    "phi_reference",
    "very_well_poised_phi",
    "vwp_term_ratio",
    "spec_to_float",
]


def q_pochhammer(a, q, k: int):
    """(a;q)_k = prod_{j<k} (1 - a q^j)."""
    if k < 0:
        raise ValueError("Pochhammer length must be non-negative")
    return kernels.pochhammer(a, q, k)


def q_pochhammer_multi(bases, q, k: int):
    r = 1
    for b in bases:
        r = r * q_pochhammer(b, q, k)
    return r


class PochhammerCache:
    """Memo of Pochhammer ladders keyed by (base, q).

    Lookups never mutate a published ladder; a longer ladder replaces the
    shorter one in a single dict assignment, so concurrent readers are safe.
    """

    def __init__(self):
        self._ladders = {}
        self._lock = threading.Lock()

    def __call__(self, a, q, k: int):
        key = (a, q)
        ladder = self._ladders.get(key)
        if ladder is None or len(ladder) <= k:
            ladder = kernels.pochhammer_ladder(a, q, max(k, 2 * len(ladder or ())))
            with self._lock:
                cur = self._ladders.get(key)
                if cur is None or len(cur) < len(ladder):
                    self._ladders[key] = ladder
        return ladder[k]

    def __len__(self):
        return len(self._ladders)


def _same(x, y) -> bool:
    if is_rational(x) and is_rational(y):
        return x == y
    x, y = mpmath.mpf(to_float(x)), mpmath.mpf(to_float(y))
    scale = max(abs(x), abs(y), 1)
    return abs(x - y) <= scale * mpmath.mpf(2) ** (-mpmath.mp.prec + 8)


@dataclass(frozen=True)
class PhiSpec:
    """Parameters of a terminating r+1 phi r.

    ``upper[0]`` must be q^{-n} with n = ``terminate_at``; ``lower`` excludes
    the implicit (q;q)_k.
    """

    upper: tuple
    lower: tuple
    q: object
    z: object
    terminate_at: int

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(self.upper))
        object.__setattr__(self, "lower", tuple(self.lower))
        n = self.terminate_at
        if not isinstance(n, int) or n < 0:
            raise ValueError("terminate_at must be a non-negative integer")
        if len(self.upper) != len(self.lower) + 1:
            raise ValueError(
                f"r+1 phi r shape violated: {len(self.upper)} upper vs {len(self.lower)} lower"
            )
        if not _same(self.upper[0], self.q ** (-n)):
            raise ValueError("first upper parameter must equal q^(-terminate_at)")

    def effective_length(self) -> int:
        """Index of the last possibly nonzero term."""
        hit = kernels.first_vanishing(self.upper, self.q, self.terminate_at)
        return self.terminate_at if hit is None else hit[1]

    def check_poles(self, m=None):
        m = self.effective_length() if m is None else m
        bases = list(self.lower) + [self.q]
        hit = kernels.first_vanishing(bases, self.q, m)
        if hit is not None:
            i, j = hit
            raise PoleError(i, j + 1, bases[i])
        return m


def phi(spec: PhiSpec):
    """Evaluate the terminating series by incremental term ratios.

    Summation stops at the first vanishing numerator factor, so a spec with
    some a_i = q^{-m}, m < n equals the same spec truncated at m.
    """
    m = spec.check_poles()
    return kernels.series_sum(spec.upper, list(spec.lower) + [spec.q], spec.q, spec.z, m)


def phi_reference(spec: PhiSpec):
    """Slow route: every term from freshly computed Pochhammer products."""
    m = spec.check_poles()
    q = spec.q
    total = 0
    for k in range(m + 1):
        total = total + (
            q_pochhammer_multi(spec.upper, q, k)
            / q_pochhammer_multi(list(spec.lower) + [q], q, k)
            * spec.z**k
        )
    return total


def _vwp_data(a, tail_upper, q, n):
    if a == 1:
        raise PoleError(-1, 0, a)
    upper = [q ** (-n)] + list(tail_upper)
    for i, u in enumerate(upper):
        if u == 0:
            raise GenericityError(f"tail_upper[{i - 1}]" if i else "q^-n", "zero upper parameter")
    lower = [a * q / u for u in upper]
    return [a] + upper, lower + [q]


def very_well_poised_phi(a, tail_upper, q, n: int):
    """Very-well-poised series with z = q.

    Upper parameters are a, q*sqrt(a), -q*sqrt(a), q^{-n}, *tail_upper and
    every lower parameter is aq divided by its upper partner.  The square-root
    pair is folded into the factor (1 - a q^{2k}) / (1 - a).
    """
    upper, lower = _vwp_data(a, tail_upper, q, n)
    hit = kernels.first_vanishing(upper, q, n)
    m = n if hit is None else hit[1]
    hit = kernels.first_vanishing(lower, q, m)
    if hit is not None:
        i, j = hit
        raise PoleError(i, j + 1, lower[i])
    return kernels.series_sum(upper, lower, q, q, m, vwp=a)


def vwp_term_ratio(a, tail_upper, q, n: int, k: int):
    """Closed-form ratio t_k / t_{k-1} of consecutive very-well-poised terms."""
    upper, lower = _vwp_data(a, tail_upper, q, n)
    r = q * (1 - a * q ** (2 * k)) / (1 - a * q ** (2 * k - 2))
    for u in upper:
        r = r * (1 - u * q ** (k - 1))
    for b in lower:
        r = r / (1 - b * q ** (k - 1))
    return r


def vwp_terms(a, tail_upper, q, n: int):
    """Individual terms t_0..t_n, each from scratch."""
    upper, lower = _vwp_data(a, tail_upper, q, n)
    return [
        q_pochhammer_multi(upper, q, k)
        / q_pochhammer_multi(lower, q, k)
        * (1 - a * q ** (2 * k))
        / (1 - a)
        * q**k
        for k in range(n + 1)
    ]


def spec_to_float(spec: PhiSpec) -> PhiSpec:
    return PhiSpec(
        tuple(to_float(u) for u in spec.upper),
        tuple(to_float(b) for b in spec.lower),
        to_float(spec.q),
        to_float(spec.z),
        spec.terminate_at,
    )
