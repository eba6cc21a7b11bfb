"""Trigonometric building blocks: A_n(t), the ratio phi_mn = A_n / A_m and B_mn.

All evaluations avoid the quotient sin(nt)/sin(t).  ``kernel_sum`` uses the
cosine expansion of the Dirichlet-type kernel, and ``eval_A`` uses the
equivalent half-angle form

    A_n(t) = 4 * sum_{j = n-1, n-3, ..., j > 0} sin^2(j t / 2),

a sum of nonnegative terms, so it keeps full relative accuracy as A_n -> 0
at t = 0 and (odd n) at t = pi.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ConfigError, DomainError, RangeError

PI = math.pi
TWO_PI = 2.0 * math.pi
INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def _check_pair(m, n):
    if not (isinstance(m, (int, np.integer)) and isinstance(n, (int, np.integer))):
        raise RangeError(f"indices must be integers, got m={m!r}, n={n!r}")
    if not 2 <= n < m:
        raise RangeError(f"need 2 <= n < m, got m={m}, n={n}")


def kernel_sum(n, t):
    """sin(nt)/sin(t) as sum_{k=0}^{n-1} cos((n-1-2k) t); defined for every real t."""
    if n < 1:
        raise DomainError(f"kernel_sum needs n >= 1, got {n}")
    freqs = np.arange(n - 1, -n, -2, dtype=float)
    t_arr = np.asarray(t, dtype=float)
    out = np.cos(np.multiply.outer(t_arr, freqs)).sum(axis=-1)
    return float(out) if out.ndim == 0 else out


def _fold(t):
    """Map t to [0, pi] using 2*pi periodicity and the reflection t -> 2*pi - t."""
    t = np.mod(np.asarray(t, dtype=float), TWO_PI)
    return np.where(t > PI, TWO_PI - t, t)


def eval_A(n, t):
    """A_n(t) = n - sin(nt)/sin(t), evaluated without cancellation."""
    if n < 2:
        raise DomainError(f"A_n needs n >= 2, got {n}")
    t = _fold(t)
    freqs = np.arange(n - 1, 0, -2, dtype=float)
    reflect = t > PI / 2
    s = np.where(reflect, PI - t, t)
    half = 0.5 * np.multiply.outer(s, freqs)
    sin2 = np.sin(half) ** 2
    if n % 2 == 0:
        # odd frequencies: sin^2(j(pi - s)/2) = cos^2(j s/2)
        terms = np.where(reflect[..., None], np.cos(half) ** 2, sin2)
    else:
        terms = sin2
    out = 4.0 * terms.sum(axis=-1)
    return float(out) if out.ndim == 0 else out


def normalized_A(n, t):
    """A_n(t) / (n^3 - n); non-increasing in n within a parity class."""
    return eval_A(n, t) / float(n**3 - n)


def endpoint_limits(m, n):
    """Limits of phi_mn at t -> 0 and t -> pi.

    The first is always the rational (n^3 - n)/(m^3 - m).  The second is a
    Fraction, or ``math.inf`` when m is odd and n is even.
    """
    _check_pair(m, n)
    limit0 = Fraction(n**3 - n, m**3 - m)
    if m % 2 == 1 and n % 2 == 1:
        limit_pi = limit0
    elif m % 2 == 0 and n % 2 == 0:
        limit_pi = Fraction(n, m)
    elif m % 2 == 1:
        limit_pi = math.inf
    else:
        limit_pi = Fraction(0)
    return limit0, limit_pi


@dataclass(frozen=True)
class RatioProfile:
    m: int
    n: int

    def __post_init__(self):
        _check_pair(self.m, self.n)

    @property
    def limit0(self) -> Fraction:
        return endpoint_limits(self.m, self.n)[0]

    @property
    def limit_pi(self):
        return endpoint_limits(self.m, self.n)[1]

    def __call__(self, t):
        return eval_A(self.n, t) / eval_A(self.m, t)


def eval_phi(profile: RatioProfile, t):
    """phi_mn(t) on the open interval (0, pi); endpoints go through endpoint_limits."""
    t_arr = np.asarray(t, dtype=float)
    if np.any(t_arr <= 0.0) or np.any(t_arr >= PI):
        raise DomainError("eval_phi is defined on (0, pi) only; use endpoint_limits")
    return profile(t)


@dataclass(frozen=True)
class MinimizeConfig:
    grid_mult: int = 64
    refine_tol: float = 1e-13

    def __post_init__(self):
        if not isinstance(self.grid_mult, (int, np.integer)) or self.grid_mult < 8:
            raise ConfigError(f"grid_mult must be an integer >= 8, got {self.grid_mult!r}")
        if not (self.refine_tol > 0 and math.isfinite(self.refine_tol)):
            raise ConfigError(f"refine_tol must be positive, got {self.refine_tol!r}")


@dataclass(frozen=True)
class MinResult:
    """Computed B_mn.

    ``endpoint`` is ``"0"`` or ``"pi"`` when the minimum is an endpoint limit,
    otherwise None and ``argmin`` is an interior angle.  ``margin`` is the gap
    from ``value`` to the best competing candidate that is not a tie (inf if
    there is none).
    """
    m: int
    n: int
    value: float
    argmin: float
    endpoint: str | None
    grid_points: int
    refine_tol: float
    margin: float

    @property
    def argmin_label(self) -> str:
        return self.endpoint if self.endpoint is not None else repr(self.argmin)


def golden_refine(f, lo, hi, tol):
    """Vectorized golden-section search on brackets [lo_i, hi_i].

    ``f`` must accept an array of abscissae.  Returns (x, f(x)) arrays.
    """
    a = np.array(lo, dtype=float)
    b = np.array(hi, dtype=float)
    x1 = b - INV_GOLDEN * (b - a)
    x2 = a + INV_GOLDEN * (b - a)
    f1, f2 = f(x1), f(x2)
    while np.max(b - a) > tol:
        left = f1 <= f2
        b = np.where(left, x2, b)
        a = np.where(left, a, x1)
        nx1 = np.where(left, b - INV_GOLDEN * (b - a), x2)
        nx2 = np.where(left, x1, a + INV_GOLDEN * (b - a))
        fp = f(np.where(left, nx1, nx2))
        f1, f2 = np.where(left, fp, f2), np.where(left, f1, fp)
        x1, x2 = nx1, nx2
    x = 0.5 * (a + b)
    return x, f(x)


def minimize_B(m, n, cfg: MinimizeConfig | None = None) -> MinResult:
    """Global minimum of phi_mn over [0, pi] (equivalently over the real line)."""
    _check_pair(m, n)
    cfg = cfg or MinimizeConfig()
    profile = RatioProfile(m, n)
    limit0, limit_pi = endpoint_limits(m, n)

    n_grid = max(1024, cfg.grid_mult * m)
    t_ext = np.arange(n_grid + 2) * (PI / (n_grid + 1))
    t_ext[-1] = PI
    v_ext = np.empty(n_grid + 2)
    v_ext[0] = float(limit0)
    v_ext[-1] = float(limit_pi)
    v_ext[1:-1] = profile(t_ext[1:-1])

    mid = v_ext[1:-1]
    is_min = (mid <= v_ext[:-2]) & (mid < v_ext[2:])
    idx = np.nonzero(is_min)[0] + 1

    candidates = [(float(limit0), 0.0, "0")]
    if math.isfinite(limit_pi):
        candidates.append((float(limit_pi), PI, "pi"))
    if idx.size:
        x, fx = golden_refine(profile, t_ext[idx - 1], t_ext[idx + 1], cfg.refine_tol)
        # never report worse than the grid sample that seeded the search
        worse = fx > v_ext[idx]
        x = np.where(worse, t_ext[idx], x)
        fx = np.where(worse, v_ext[idx], fx)
        candidates.extend((float(v), float(t), None) for v, t in zip(fx, x))

    best = min(c[0] for c in candidates)
    tie_tol = cfg.refine_tol
    tied = [c for c in candidates if c[0] <= best + tie_tol]
    value, argmin, tag = min(tied, key=lambda c: c[1])
    others = [c[0] for c in candidates if c[0] > best + tie_tol]
    margin = min(others) - value if others else math.inf
    return MinResult(m, n, value, argmin, tag, n_grid, cfg.refine_tol, margin)


def eval_Phi(N, t):
    """2(N^2-1) sin t - 3N sin(Nt) cos t + (N^2+2) cos(Nt) sin t."""
    if N < 3:
        raise DomainError(f"Phi needs N >= 3, got {N}")
    t = np.asarray(t, dtype=float)
    st, ct = np.sin(t), np.cos(t)
    out = 2.0 * (N * N - 1) * st - 3.0 * N * np.sin(N * t) * ct + (N * N + 2) * np.cos(N * t) * st
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class Lemma3Report:
    """Grid check of A_n/(n^3-n) >= A_{n+2}/((n+2)^3-(n+2)) and Phi >= 0."""
    n: int
    grid_points: int
    ratio_margin: float
    ratio_witness: float
    phi_margin: float
    phi_witness: float
    ratio_tol: float
    phi_tol: float

    @property
    def passed(self) -> bool:
        return self.ratio_margin >= -self.ratio_tol and self.phi_margin >= -self.phi_tol


def check_lemma3(n, grid_points=100_000, ratio_tol=1e-12, phi_tol=1e-10) -> Lemma3Report:
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    if grid_points < 1000:
        raise ConfigError(f"grid_points must be >= 1000, got {grid_points}")
    t = np.arange(1, grid_points + 1) * (PI / (grid_points + 1))
    diff = normalized_A(n, t) - normalized_A(n + 2, t)
    phi = eval_Phi(n + 1, t)
    i, j = int(np.argmin(diff)), int(np.argmin(phi))
    return Lemma3Report(
        n=n,
        grid_points=grid_points,
        ratio_margin=float(diff[i]),
        ratio_witness=float(t[i]),
        phi_margin=float(phi[j]),
        phi_witness=float(t[j]),
        ratio_tol=ratio_tol,
        phi_tol=phi_tol,
    )
