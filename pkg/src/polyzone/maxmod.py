"""Max modulus on circles and pointwise inequality margins.

Each margin is the bound side minus the operator side of one inequality
at a point z; a nonnegative margin certifies the inequality there. The
circle maximum M is always an attained sample (never an extrapolation),
so using it on the bound side makes every margin test conservative.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .operators import OperatorSpec, apply_N
from .poly import ComplexPoly, conj_inverse, effective_degree, evaluate, monomial

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_INV_PHI2 = (3.0 - math.sqrt(5.0)) / 2.0

REFINE_ANGLE_TOL = 1e-12


@dataclass(frozen=True)
class CircleMax:
    """An attained maximum of |p| on a circle: value = |p(r e^{i arg_angle})|."""

    value: float
    arg_angle: float
    samples: int
    refined: bool

    def to_json_dict(self) -> dict:
        return {"value": self.value, "arg_angle": self.arg_angle, "samples": self.samples}


def default_samples(degree: int) -> int:
    # adjacent-sample variation stays under value * degree * 2*pi / samples
    return max(4096, 64 * degree)


def _golden_max(fn, a: float, b: float, tol: float):
    """Golden-section maximization on [a, b]; returns the best attained (x, y)."""
    best_x, best_y = a, fn(a)
    yb = fn(b)
    if yb > best_y:
        best_x, best_y = b, yb
    h = b - a
    c = a + _INV_PHI2 * h
    d = a + _INV_PHI * h
    yc = fn(c)
    yd = fn(d)
    for x, y in ((c, yc), (d, yd)):
        if y > best_y:
            best_x, best_y = x, y
    for _ in range(256):
        if h <= tol:
            break
        if yc > yd:
            b, d, yd = d, c, yc
            h = b - a
            c = a + _INV_PHI2 * h
            yc = fn(c)
            if yc > best_y:
                best_x, best_y = c, yc
        else:
            a, c, yc = c, d, yd
            h = b - a
            d = a + _INV_PHI * h
            yd = fn(d)
            if yd > best_y:
                best_x, best_y = d, yd
    return best_x, best_y


def max_on_circle(p: ComplexPoly, radius: float = 1.0, samples: int | None = None) -> CircleMax:
    """Estimate max |p| on |z| = radius: dense equispaced sampling, then
    golden-section refinement around the best sample.

    The reported value is exactly |p| at the reported angle, so it is a
    certified lower bound on the true maximum.
    """
    if radius <= 0:
        raise ValueError("radius must be positive")
    if samples is None:
        samples = default_samples(effective_degree(p))
    if samples < 16:
        raise ValueError("need at least 16 samples")

    theta = np.linspace(0.0, 2.0 * np.pi, samples, endpoint=False)
    vals = np.abs(evaluate(p, radius * np.exp(1j * theta)))
    j = int(np.argmax(vals))
    coarse_angle, coarse_val = float(theta[j]), float(vals[j])

    def fn(t: float) -> float:
        t = t % (2.0 * math.pi)
        return abs(evaluate(p, radius * cmath.exp(1j * t)))

    step = 2.0 * math.pi / samples
    ref_angle, ref_val = _golden_max(fn, coarse_angle - step, coarse_angle + step, REFINE_ANGLE_TOL)
    if ref_val > coarse_val:
        return CircleMax(ref_val, ref_angle % (2.0 * math.pi), samples, True)
    return CircleMax(coarse_val, coarse_angle, samples, False)


# ----------------------------- margins --------------------------------


def _abs_N(P: ComplexPoly, spec: OperatorSpec, z: complex) -> float:
    return abs(evaluate(apply_N(P, spec), z))


def half_sum_bound(spec: OperatorSpec, z: complex, M: float) -> float:
    """(|N[z^n](z)| + |lambda_0|) * M / 2, the zero-free/self-inversive bound side."""
    return 0.5 * (_abs_N(monomial(spec.n), spec, z) + abs(spec.lambdas[0])) * M


def theorem2_margin(P: ComplexPoly, f: ComplexPoly, spec: OperatorSpec, z: complex) -> float:
    """|N[f](z)| - |N[P](z)| for P majorized by f on the unit circle.

    Nonnegative for |z| >= 1 when f has degree n with zeros in the closed
    unit disk, |P| <= |f| on |z| = 1, and the spec is admissible.
    """
    return _abs_N(f, spec, z) - _abs_N(P, spec, z)


def corollary1_margin(P: ComplexPoly, spec: OperatorSpec, z: complex, M: float) -> float:
    """|N[z^n](z)| * M - |N[P](z)| with M the circle maximum of |P|."""
    return _abs_N(monomial(spec.n), spec, z) * M - _abs_N(P, spec, z)


def theorem3_margin(P: ComplexPoly, spec: OperatorSpec, z: complex, M: float) -> float:
    """Half-sum bound minus |N[P](z)|; needs P zero-free in the open unit disk."""
    return half_sum_bound(spec, z, M) - _abs_N(P, spec, z)


def theorem4_margin(P: ComplexPoly, spec: OperatorSpec, z: complex, M: float) -> float:
    """Same bound expression as theorem3_margin; needs P self-inversive."""
    return half_sum_bound(spec, z, M) - _abs_N(P, spec, z)


def lemma3_margin(P: ComplexPoly, spec: OperatorSpec, z: complex) -> float:
    """|N[P*](z)| - |N[P](z)| for P zero-free in the open unit disk."""
    P = P.with_ambient(spec.n)
    return _abs_N(conj_inverse(P), spec, z) - _abs_N(P, spec, z)


def lemma4_margin(P: ComplexPoly, spec: OperatorSpec, z: complex, M: float) -> float:
    """(|N[z^n](z)| + |lambda_0|) * M - |N[P](z)| - |N[P*](z)| for any P."""
    P = P.with_ambient(spec.n)
    bound = (_abs_N(monomial(spec.n), spec, z) + abs(spec.lambdas[0])) * M
    return bound - _abs_N(P, spec, z) - _abs_N(conj_inverse(P), spec, z)
