"""Polynomial univalence machinery.

Zero counting in the unit disk uses the Schur-Cohn (Cohn rule) reduction,
with Aberth-Ehrlich simultaneous iteration supplying root moduli and taking
over the count whenever a reduction step is degenerate.  Dieudonne's
criterion is applied by sampling the angle t on [0, pi].
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import reduce

import mpmath
import numpy as np

from .errors import ConfigError, DegenerateError, DomainError, NormalizationError, PoleError
from .trig_core import kernel_sum

PI = math.pi
SEPARATION_TOL = 1e-10
INSIDE_TOL = 1e-9


@dataclass(frozen=True)
class ComplexPolynomial:
    """Dense coefficients c_0..c_d, c_k multiplying z^k.

    Trailing zero coefficients are dropped so that c_d != 0 (the zero
    polynomial keeps a single 0 coefficient).
    """
    coeffs: tuple

    def __post_init__(self):
        c = [complex(x) for x in self.coeffs] or [0j]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.degree == 0 and self.coeffs[0] == 0

    def __call__(self, z):
        return polynomial_eval(self, z)

    def derivative(self) -> ComplexPolynomial:
        return ComplexPolynomial(tuple(k * c for k, c in enumerate(self.coeffs))[1:] or (0,))

    def shift_down(self) -> ComplexPolynomial:
        """P(z)/z for P with P(0) = 0."""
        if self.coeffs[0] != 0:
            raise DomainError("P(0) != 0, cannot divide by z")
        return ComplexPolynomial(self.coeffs[1:] or (0,))

    def as_array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=complex)


def polynomial_eval(P: ComplexPolynomial, z):
    """Horner evaluation; z may be a scalar or an array."""
    acc = np.zeros_like(np.asarray(z, dtype=complex))
    for c in reversed(P.coeffs):
        acc = acc * z + c
    return complex(acc) if acc.ndim == 0 else acc


class ZeroMethod(str, Enum):
    SCHUR_COHN = "SCHUR_COHN"
    ABERTH = "ABERTH"


@dataclass(frozen=True)
class DiskZeroReport:
    count_inside: int
    min_root_modulus: float
    method: ZeroMethod
    certified_margin: float
    roots: np.ndarray = field(repr=False, compare=False, default=None)
    converged: bool = True

    @property
    def separated(self) -> bool:
        return self.certified_margin > SEPARATION_TOL


def _trim(c, rel=1e-14):
    scale = np.max(np.abs(c)) if c.size else 0.0
    end = c.size
    while end > 1 and abs(c[end - 1]) <= rel * scale:
        end -= 1
    return c[:end]


def schur_cohn_count(coeffs, degen_tol=SEPARATION_TOL):
    """Number of zeros in |z| < 1 by the Cohn reduction, or None if degenerate.

    With p* (z) = z^d conj(p(1/conj z)):
      |c_d| > |c_0|:  Z(p) = 1 + Z((conj(c_d) p - c_0 p*) / z)
      |c_0| > |c_d|:  Z(p) = Z(conj(c_0) p - c_d p*), degree drops
    Near-equality of |c_0| and |c_d| (relative ``degen_tol``) means a zero on
    or near the circle and is reported as degenerate.
    """
    c = _trim(np.asarray(coeffs, dtype=complex))
    if not np.any(c):
        raise DomainError("zero polynomial has no well-defined zero count")
    count = 0
    while c.size > 1:
        c = c / np.max(np.abs(c))
        a0, ad = c[0], c[-1]
        r0, rd = abs(a0), abs(ad)
        if abs(r0 - rd) <= degen_tol * max(r0, rd):
            return None
        star = np.conj(c[::-1])
        if rd > r0:
            g = np.conj(ad) * c - a0 * star
            c = g[1:]
            count += 1
        else:
            g = np.conj(a0) * c - ad * star
            c = _trim(g[:-1])
    if abs(c[0]) == 0:
        return None
    return count


def aberth_roots(coeffs, max_iter=200, tol=1e-13):
    """All roots by Aberth-Ehrlich iteration.  Returns (roots, converged)."""
    c = _trim(np.asarray(coeffs, dtype=complex), rel=0.0)
    zeros_at_origin = 0
    while c.size > 1 and c[0] == 0:
        c = c[1:]
        zeros_at_origin += 1
    d = c.size - 1
    origin = np.zeros(zeros_at_origin, dtype=complex)
    if d <= 0:
        return origin, True
    if d == 1:
        return np.concatenate([origin, [-c[0] / c[1]]]), True

    poly = c[::-1]  # numpy.polyval order
    dpoly = np.polyder(poly)
    radius = 1.1 * abs(c[0] / c[-1]) ** (1.0 / d)
    z = radius * np.exp(1j * (2 * PI * np.arange(d) / d + 0.4))
    converged = False
    for _ in range(max_iter):
        pz = np.polyval(poly, z)
        dpz = np.polyval(dpoly, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        s = inv.sum(axis=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = pz / dpz
            w = ratio / (1.0 - ratio * s)
        w = np.where(np.isfinite(w), w, 0.0)
        z = z - w
        if np.all(np.abs(w) <= tol * np.maximum(1.0, np.abs(z))):
            converged = True
            break
    return np.concatenate([origin, z]), converged


def _lacunary(c):
    """Write p(z) = r(z^g) with g the gcd of the occupied exponents."""
    exps = [k for k in range(1, c.size) if c[k] != 0]
    g = reduce(math.gcd, exps, 0) or 1
    return g, c[::g]


def zeros_in_unit_disk(P: ComplexPolynomial, strict=False) -> DiskZeroReport:
    """Count zeros with |z| < 1 (multiplicity included).

    Roots within SEPARATION_TOL of the circle are not counted as inside;
    ``certified_margin`` reports the distance of the nearest root to the
    circle.  With ``strict=True`` a margin below SEPARATION_TOL raises
    DegenerateError.
    """
    if P.is_zero():
        raise DomainError("zero polynomial")
    c = P.as_array()
    g, r = _lacunary(c)
    roots_w, converged = aberth_roots(r)
    moduli = np.abs(roots_w) ** (1.0 / g)
    roots = roots_w  # in the variable w = z^g
    sc = schur_cohn_count(r)
    if sc is not None:
        count, method = g * sc, ZeroMethod.SCHUR_COHN
    else:
        count, method = g * int(np.sum(moduli < 1.0 - SEPARATION_TOL)), ZeroMethod.ABERTH
    if moduli.size:
        min_mod = float(np.min(moduli))
        margin = float(np.min(np.abs(moduli - 1.0)))
    else:
        min_mod, margin = math.inf, math.inf
    if g > 1:
        # expand w-roots to z-roots: all g-th roots of each w
        k = np.arange(g)
        roots = (roots_w[:, None] ** (1.0 / g) * np.exp(2j * PI * k / g)[None, :]).ravel()
    report = DiskZeroReport(count, min_mod, method, margin, roots, converged)
    if strict and not report.separated:
        raise DegenerateError(f"root within {margin:.3g} of the unit circle")
    return report


def _check_normalized(p: ComplexPolynomial, tol=1e-12):
    c = p.coeffs
    if len(c) < 2 or abs(c[0]) > tol or abs(c[1] - 1) > tol:
        raise NormalizationError("polynomial must be z + a_2 z^2 + ... (p(0)=0, p'(0)=1)")


def dieudonne_associated(p: ComplexPolynomial, t) -> ComplexPolynomial:
    """q(z; t) = 1 + sum_{k>=2} a_k sin(kt)/sin(t) z^{k-1}."""
    _check_normalized(p)
    return ComplexPolynomial(tuple(a * kernel_sum(k, t) for k, a in enumerate(p.coeffs) if k >= 1))


class UnivalenceStatus(str, Enum):
    UNIVALENT_SAMPLED = "UNIVALENT_SAMPLED"
    NOT_UNIVALENT = "NOT_UNIVALENT"
    UNCERTAIN = "UNCERTAIN"


@dataclass(frozen=True)
class UnivalenceVerdict:
    status: UnivalenceStatus
    witness_t: float | None
    worst_margin: float
    samples: int


def dieudonne_check(p: ComplexPolynomial, t_samples=None, margin_tol=INSIDE_TOL) -> UnivalenceVerdict:
    """Sampled Dieudonne criterion on t in [0, pi] (endpoints included).

    A sampled associated polynomial with a root of modulus < 1 - margin_tol
    makes the verdict NOT_UNIVALENT, with the smallest such t as witness.
    Roots on the circle are expected: at t = 0 the associated polynomial is
    p'(z), which vanishes on |z| = 1 for extremal polynomials.
    """
    _check_normalized(p)
    if margin_tol < INSIDE_TOL:
        raise ConfigError(f"margin_tol must be >= {INSIDE_TOL}")
    d = p.degree
    t_samples = 64 * d if t_samples is None else t_samples
    if t_samples < 64 * d or t_samples < 2:
        raise ConfigError(f"t_samples must be >= 64*degree = {64 * d}")
    ts = np.linspace(0.0, PI, t_samples)
    ks = np.array([kernel_sum(k, ts) for k in range(1, d + 1)])  # (d, samples)
    a = np.array(p.coeffs[1:], dtype=complex)
    worst, uncertain = math.inf, False
    for i, t in enumerate(ts):
        rep = zeros_in_unit_disk(ComplexPolynomial(tuple(a * ks[:, i])))
        worst = min(worst, rep.min_root_modulus - 1.0)
        if rep.min_root_modulus < 1.0 - margin_tol:
            if rep.count_inside > 0:
                return UnivalenceVerdict(UnivalenceStatus.NOT_UNIVALENT, float(t), worst, t_samples)
            uncertain = True
        elif not rep.converged and rep.method is ZeroMethod.ABERTH:
            uncertain = True
    status = UnivalenceStatus.UNCERTAIN if uncertain else UnivalenceStatus.UNIVALENT_SAMPLED
    return UnivalenceVerdict(status, None, worst, t_samples)


def family_coefficients(n) -> dict:
    """Exact nonzero coefficients {power: Fraction} of z - 4/(3n-1) z^n + (n+1)/((2n-1)(3n-1)) z^(2n-1)."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    return {
        1: Fraction(1),
        n: Fraction(-4, 3 * n - 1),
        2 * n - 1: Fraction(n + 1, (2 * n - 1) * (3 * n - 1)),
    }


def family_poly(n) -> ComplexPolynomial:
    exact = family_coefficients(n)
    coeffs = [0.0] * (2 * n)
    for k, v in exact.items():
        coeffs[k] = float(v)
    return ComplexPolynomial(tuple(coeffs))


def family_root_modulus(n) -> float:
    """Common modulus of the zeros of f(z)/z for the family polynomial."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    return ((2 * n - 1) * (3 * n * n + 2 * n - 1) / (n + 1) ** 2) ** (1.0 / (2 * n - 2))


def starlike_identity(n, theta):
    """Both sides of the trigonometric identity behind Re(z f'/f) >= 0 on |z| = 1.

    Evaluated with 40 significant digits: the left side has terms of size
    ~6 n^3, so double precision would leave ~1e-9 of rounding at n = 100.
    """
    with mpmath.workdps(40):
        th = mpmath.mpf(theta)
        c, s = mpmath.cos(th), mpmath.sin(th)
        lhs = 2 * n * (c - 1) * ((3 * n * n - 2 * n + 1) * c - 2 * (2 * n - 1)) + 3 * n * (n - 1) ** 2 * s * s
        rhs = n * (n + 1) * (3 * n - 1) * (c - 1) ** 2
        return float(lhs), float(rhs)


@dataclass(frozen=True)
class Verdict:
    passed: bool
    margin: float
    witness: float | None


def starlike_check(P: ComplexPolynomial, boundary_samples=None, tol=1e-10) -> Verdict:
    """Re(z P'(z)/P(z)) >= -tol at uniformly spaced points of |z| = 1.

    ``witness`` is the angle of the smallest real part.
    """
    if P.coeffs[0] != 0:
        raise NormalizationError("starlikeness is about 0: need P(0) = 0")
    quotient = P.shift_down()
    rep = zeros_in_unit_disk(quotient)
    if not rep.min_root_modulus > 1.0 + INSIDE_TOL:
        raise PoleError(f"P(z)/z has a zero of modulus {rep.min_root_modulus:.12g} <= 1")
    k = 4096 * P.degree if boundary_samples is None else boundary_samples
    theta = 2 * PI * np.arange(k) / k
    z = np.exp(1j * theta)
    # z P'(z)/P(z) = P'(z) / (P(z)/z)
    re = np.real(polynomial_eval(P.derivative(), z) / polynomial_eval(quotient, z))
    i = int(np.argmin(re))
    return Verdict(bool(re[i] >= -tol), float(re[i]), float(theta[i]))
