"""Simultaneous root finding with backward-error certification.

All containment checks in the package go through `find_roots`, an
Aberth-Ehrlich iteration: every root is refined at once, each step being a
Newton correction damped by the repulsion of the other iterates. The
solver is deterministic (fixed initial configuration, no randomness), so
identical inputs give bit-identical outputs on one platform.

Convergence is certified per root by the scaled residual

    |p(w)| / sum_k |c_k| * max(1, |w|)**k

which bounds the backward error of accepting w as a zero. Tests of
clustered or multiple roots should assert on residuals, not on forward
root error, which necessarily degrades like tol**(1/multiplicity).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegreeZero, NonFiniteCoefficient, Unconverged
from .poly import ComplexPoly, effective_degree, has_finite_coeffs, negligible_threshold

# A root is certified when its scaled residual is at most this.
CERTIFICATION_THRESHOLD = 1e-8

# Initial iterates: circle of radius (|a0/ad|)**(1/d) scaled by this, with a
# fixed angular offset to break conjugate symmetry for real polynomials.
_INIT_RADIUS_FACTOR = 1.05
_INIT_ANGLE_OFFSET = 0.4


@dataclass(frozen=True)
class RootSet:
    """Roots of one polynomial plus per-root certification data."""

    roots: tuple[complex, ...]
    residuals: tuple[float, ...]
    converged: tuple[bool, ...]
    iterations: int

    def to_json_dict(self) -> dict:
        return {
            "roots": [[w.real, w.imag] for w in self.roots],
            "residuals": list(self.residuals),
            "converged": list(self.converged),
            "iterations": self.iterations,
        }


def scaled_residual(p: ComplexPoly, w: complex) -> float:
    """|p(w)| relative to the coefficient-magnitude scale at w."""
    c = np.asarray(p.coeffs, dtype=complex)
    mags = np.abs(c)
    b = max(1.0, abs(w))
    scale = 0.0
    for m in mags[::-1]:
        scale = scale * b + m
    val = c[-1]
    for k in range(len(c) - 2, -1, -1):
        val = val * w + c[k]
    return abs(val) / scale


def _horner_many(c: np.ndarray, z: np.ndarray) -> np.ndarray:
    acc = np.full_like(z, c[-1])
    for k in range(len(c) - 2, -1, -1):
        acc = acc * z + c[k]
    return acc


def _aberth(q: np.ndarray, tol: float, max_iter: int) -> tuple[np.ndarray, int]:
    """Iterate all roots of q (ascending coeffs, q[0] != 0) simultaneously."""
    d = len(q) - 1
    dq = np.arange(1, d + 1) * q[1:]
    r0 = _INIT_RADIUS_FACTOR * abs(q[0] / q[d]) ** (1.0 / d)
    angles = _INIT_ANGLE_OFFSET + 2.0 * np.pi * np.arange(d) / d
    z = r0 * np.exp(1j * angles)

    iterations = 0
    for _ in range(max_iter):
        iterations += 1
        pv = _horner_many(q, z)
        dv = _horner_many(dq, z) if d >= 1 else np.zeros_like(z)
        dv = np.where(dv == 0, 1e-300, dv)
        newton = pv / dv

        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        collided = np.abs(diff) == 0.0
        if collided.any():
            # nudge exact collisions apart deterministically
            bad = np.where(collided.any(axis=1))[0]
            z[bad] += 1e-12 * (1.0 + np.abs(z[bad])) * np.exp(1j * bad)
            continue
        repulsion = np.sum(1.0 / diff, axis=1) - 1.0  # subtract the diagonal 1/1

        denom = 1.0 - newton * repulsion
        denom = np.where(denom == 0, 1e-300, denom)
        corr = newton / denom
        corr = np.where(np.isfinite(corr), corr, 0.0)
        z = z - corr
        if np.all(np.abs(corr) <= tol * np.maximum(1.0, np.abs(z))):
            break
    return z, iterations


def find_roots(p: ComplexPoly, tol: float = 1e-12, max_iter: int = 100) -> RootSet:
    """All roots of p, one per unit of effective degree.

    Iteration stops when every correction magnitude is at most
    tol * max(1, |root|) or after max_iter sweeps; residuals are always
    populated so callers can reject uncertified results. Numerically-zero
    low-order coefficients are deflated exactly as roots at 0.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")
    if not has_finite_coeffs(p):
        raise NonFiniteCoefficient("root finding needs finite coefficients")
    d = effective_degree(p)
    if d == 0:
        raise DegreeZero("a constant polynomial has no roots")

    thr = negligible_threshold(p.coeffs)
    c = np.asarray(p.coeffs[: d + 1], dtype=complex)
    t = 0
    while t < d and abs(c[t]) <= thr:
        t += 1

    iterations = 0
    if t == d:
        inner: list[complex] = []
    elif d - t == 1:
        inner = [complex(-c[t] / c[t + 1])]
    else:
        q = c[t:]
        q = q / np.max(np.abs(q))
        z, iterations = _aberth(q, tol, max_iter)
        inner = [complex(w) for w in z]

    roots = tuple([0j] * t + inner)
    residuals = tuple(scaled_residual(p, w) for w in roots)
    converged = tuple(r <= CERTIFICATION_THRESHOLD for r in residuals)
    return RootSet(roots, residuals, converged, iterations)


def max_root_modulus(rs: RootSet) -> float:
    """Largest root modulus; requires every root to be certified."""
    if not all(rs.converged):
        raise Unconverged("max_root_modulus needs a fully certified RootSet")
    return max(abs(w) for w in rs.roots)


def contained_in_disk(rs: RootSet, r: float, tol: float = 0.0) -> tuple[bool, float]:
    """(all roots in |z| <= r within tol*max(1, r), worst margin max|w| - r)."""
    if not all(rs.converged):
        raise Unconverged("contained_in_disk needs a fully certified RootSet")
    worst = max(abs(w) for w in rs.roots) - r
    return worst <= tol * max(1.0, r), worst
