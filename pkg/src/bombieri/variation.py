"""Second variation of the Koebe function and the coefficient ratio bound.

Q(w) is computed two ways: by direct quadrature of the second-variation
double integral for a weight phi on [0, 1], and in closed form for
phi(u) = 1 - u.  The coefficients q_n of q(z) = Q(K(z)) are extracted
exactly with Fraction arithmetic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, RangeError
from .quadrature import QuadratureConfig, integrate

# Known value of the (3, 2) Bombieri number, kept for reference only.
SIGMA_32 = (math.e - 1) / (4 * math.e)

SMALL_W = 1e-4
SERIES_TERMS = 6


def _binom_half3(k):
    """Generalized binomial coefficient C(3/2, k) as a Fraction."""
    out = Fraction(1)
    for j in range(k):
        out *= (Fraction(3, 2) - j) / (j + 1)
    return out


# (1+4w)^{3/2} = sum_k C(3/2, k) 4^k w^k
_POW_COEFFS = [_binom_half3(k) * 4**k for k in range(SERIES_TERMS + 3)]


@dataclass(frozen=True)
class PhiWeight:
    """Weight phi on [0, 1].

    ``kind`` is ``"linear"`` for scale * (1 - u) or ``"table"`` for linear
    interpolation of ``table`` on a uniform grid of [0, 1] (times ``scale``).
    """
    kind: str = "linear"
    scale: float = 1.0
    table: tuple = ()

    def __post_init__(self):
        if self.kind not in ("linear", "table"):
            raise DomainError(f"unknown weight kind {self.kind!r}")
        if self.kind == "table" and len(self.table) < 2:
            raise DomainError("tabulated weight needs at least two samples")

    def scaled(self, c: float) -> PhiWeight:
        return PhiWeight(self.kind, self.scale * c, self.table)

    def __call__(self, u):
        u = np.asarray(u, dtype=float)
        if self.kind == "linear":
            return self.scale * (1.0 - u)
        grid = np.linspace(0.0, 1.0, len(self.table))
        return self.scale * np.interp(u, grid, self.table)

    def derivative(self, u):
        u = np.asarray(u, dtype=float)
        if self.kind == "linear":
            return np.full_like(u, -self.scale)
        tab = np.asarray(self.table, dtype=float)
        h = 1.0 / (len(tab) - 1)
        slopes = np.diff(tab) / h
        cell = np.clip((u / h).astype(int), 0, len(slopes) - 1)
        return self.scale * slopes[cell]

    @property
    def breakpoints(self) -> tuple:
        """Interior nodes where the weight has a kink."""
        if self.kind == "linear":
            return ()
        k = len(self.table) - 1
        return tuple(i / k for i in range(1, k))

    @property
    def at_zero(self) -> float:
        return self.scale * (1.0 if self.kind == "linear" else float(self.table[0]))


LINEAR = PhiWeight()


def _check_w(w, closed_at_boundary=False):
    if w < -0.25 or (w == -0.25 and not closed_at_boundary):
        raise DomainError(f"need w > -1/4, got {w}")


def _series(w, shift, denom):
    """sum_{k >= shift} c_k w^{k-shift} / denom for the (1+4w)^{3/2} expansion."""
    return sum(float(_POW_COEFFS[k]) * w ** (k - shift) for k in range(shift, shift + SERIES_TERMS)) / denom


def inner_integral_closed(w: float) -> float:
    """int_0^1 (1-u)/sqrt(1+4uw) du = ((1+4w)^{3/2} - 6w - 1)/(12 w^2)."""
    _check_w(w)
    if abs(w) < SMALL_W:
        return _series(w, 2, 12.0)
    return ((1 + 4 * w) ** 1.5 - 6 * w - 1) / (12 * w * w)


def double_integral_closed(w: float) -> float:
    """int_0^1 int_0^u (1-u)(-1)/sqrt((1+4uw)(1+4vw)) dv du = ((1+4w)^{3/2} - 6w^2 - 6w - 1)/(24 w^3)."""
    _check_w(w)
    if abs(w) < SMALL_W:
        return _series(w, 3, 24.0)
    return ((1 + 4 * w) ** 1.5 - 6 * w * w - 6 * w - 1) / (24 * w**3)


def Q_closed(w: float) -> float:
    """Q(w) = (1+4w)/6 (sqrt(1+4w) - 1 - 2w) for phi(u) = 1 - u."""
    _check_w(w, closed_at_boundary=True)
    return (1 + 4 * w) / 6 * (math.sqrt(1 + 4 * w) - 1 - 2 * w)


def Q_assembled(w: float, phi0: float = 1.0) -> float:
    """-w^2 [phi(0) J + 3w J^2 + D] from the two closed-form integrals."""
    J = inner_integral_closed(w)
    D = double_integral_closed(w)
    return -w * w * (phi0 * J + 3 * w * J * J + D)


def Q_numeric(w: float, phi: PhiWeight = LINEAR, cfg: QuadratureConfig | None = None) -> float:
    """Direct quadrature of

        -w^2 int_0^1 phi(u)^2/U du - 2 w^3 int_0^1 int_0^u (3 + 1/V) phi(u) phi(v)/sqrt(UV) dv du

    with U = 1 + 4uw, V = 1 + 4vw.
    """
    _check_w(w)
    cfg = cfg or QuadratureConfig()
    # scale so the tolerance applies to Q, not to the raw integrals
    outer = cfg.tighter(max(1.0, 2 * abs(w) ** 3))
    inner = outer.tighter(10.0)
    brk = phi.breakpoints

    def single(u):
        return phi(u) ** 2 / (1 + 4 * u * w)

    def inner_v(v):
        V = 1 + 4 * v * w
        return (3 + 1 / V) * phi(v) / np.sqrt(V)

    def outer_u(us):
        vals = np.array([_pieces(inner_v, 0.0, u, brk, inner) for u in np.atleast_1d(us)])
        return phi(us) / np.sqrt(1 + 4 * us * w) * vals

    i1 = _pieces(single, 0.0, 1.0, brk, outer)
    i2 = _pieces(outer_u, 0.0, 1.0, brk, outer)
    return -w * w * i1 - 2 * w**3 * i2


def _pieces(f, a, b, breaks, cfg):
    """Integrate over [a, b] split at the breakpoints inside it."""
    edges = [a, *(x for x in breaks if a < x < b), b]
    return math.fsum(integrate(f, lo, hi, cfg) for lo, hi in zip(edges, edges[1:]))


def inner_integral_numeric(w, phi: PhiWeight = LINEAR, cfg: QuadratureConfig | None = None) -> float:
    """int_0^1 phi(u)/sqrt(1+4uw) du by quadrature."""
    _check_w(w)
    return _pieces(lambda u: phi(u) / np.sqrt(1 + 4 * u * w), 0.0, 1.0, phi.breakpoints, cfg or QuadratureConfig())


def double_integral_numeric(w, phi: PhiWeight = LINEAR, cfg: QuadratureConfig | None = None) -> float:
    """int_0^1 int_0^u phi(u) phi'(v)/sqrt((1+4uw)(1+4vw)) dv du by nested quadrature."""
    _check_w(w)
    cfg = cfg or QuadratureConfig()
    inner = cfg.tighter(10.0)

    def outer_u(us):
        vals = np.array([
            _pieces(lambda v: phi.derivative(v) / np.sqrt(1 + 4 * v * w), 0.0, u, phi.breakpoints, inner)
            for u in np.atleast_1d(us)
        ])
        return phi(us) / np.sqrt(1 + 4 * us * w) * vals

    return _pieces(outer_u, 0.0, 1.0, phi.breakpoints, cfg)


# --- exact coefficients ---------------------------------------------------

def series_mul(a, b, n_terms):
    """Cauchy product of two coefficient lists, truncated to n_terms."""
    out = [Fraction(0)] * n_terms
    for i, x in enumerate(a[:n_terms]):
        if x:
            for j, y in enumerate(b[: n_terms - i]):
                out[i + j] += x * y
    return out


def inverse_fourth_power_coeffs(n_terms):
    """Coefficients of 1/(1-z)^4: (k+1)(k+2)(k+3)/6."""
    return [Fraction((k + 1) * (k + 2) * (k + 3), 6) for k in range(n_terms)]


def q_series_coefficients(N: int) -> list:
    """[q_2, ..., q_N] for q(z) = -z^2 (1+z)^2 / (3 (1-z)^4), exact."""
    if N < 2:
        raise DomainError(f"need N >= 2, got {N}")
    numer = [Fraction(0), Fraction(0), Fraction(-1, 3), Fraction(-2, 3), Fraction(-1, 3)]
    coeffs = series_mul(numer, inverse_fourth_power_coeffs(N + 1), N + 1)
    return coeffs[2:]


def q_n_closed(n: int) -> Fraction:
    """-(1/9)(n-1)(2n^2 - 4n + 3)."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    return Fraction(-(n - 1) * (2 * n * n - 4 * n + 3), 9)


def leung_qn(n: int) -> Fraction:
    """-(4/9)(n-1)(2n^2 - 4n + 3); four times q_n_closed."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    return Fraction(-4 * (n - 1) * (2 * n * n - 4 * n + 3), 9)


def sigma_ratio_bound(m: int, n: int):
    """(q_n/q_m, (n^3-n)/(m^3-m), q_n/q_m < (n^3-n)/(m^3-m)), all exact."""
    if not 2 <= n < m:
        raise RangeError(f"need 2 <= n < m, got m={m}, n={n}")
    ratio = q_n_closed(n) / q_n_closed(m)
    expected = Fraction(n**3 - n, m**3 - m)
    return ratio, expected, ratio < expected


def varphi_growth(x: float):
    """(2x^2-4x+3)/(x(x+1)) and its derivative 3(2x^2-2x-1)/(x^2 (x+1)^2)."""
    if not x > 0:
        raise DomainError(f"need x > 0, got {x}")
    value = (2 * x * x - 4 * x + 3) / (x * (x + 1))
    deriv = 3 * (2 * x * x - 2 * x - 1) / (x * x * (x + 1) ** 2)
    return value, deriv
