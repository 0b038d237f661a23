"""Complex polynomials with explicit degree-class semantics.

A polynomial is a nonempty coefficient vector in ascending powers
(coeffs[k] multiplies z**k). Besides its coefficients, a polynomial may
carry an ambient degree n: the degree class it is considered a member of.
The conjugate-inverse p*(z) = z**n * conj(p(1/conj(z))) depends on n, not
on the effective degree, so n is stored explicitly instead of inferred.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import MissingAmbientDegree, ZeroLeadingCoefficient

# A coefficient is negligible when its magnitude is at most this fraction of
# the largest coefficient magnitude (or of 1 if all coefficients are zero).
DEGREE_REL_THRESHOLD = 1e-12


@dataclass(frozen=True)
class ComplexPoly:
    """Immutable complex polynomial, coefficients in ascending powers.

    The zero polynomial is a single zero coefficient. ``ambient_degree``
    is optional; when set, the effective degree must not exceed it.
    """

    coeffs: tuple[complex, ...]
    ambient_degree: int | None = None

    def __post_init__(self) -> None:
        coeffs = tuple(complex(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("coefficient vector must be nonempty")
        object.__setattr__(self, "coeffs", coeffs)
        n = self.ambient_degree
        if n is not None:
            if n < 0:
                raise ValueError("ambient_degree must be nonnegative")
            if effective_degree(self) > n:
                raise ValueError(
                    f"effective degree {effective_degree(self)} exceeds ambient degree {n}"
                )

    def with_ambient(self, n: int | None) -> "ComplexPoly":
        return ComplexPoly(self.coeffs, n)

    def to_json_dict(self) -> dict:
        return {
            "coeffs": [[c.real, c.imag] for c in self.coeffs],
            "n": self.ambient_degree,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "ComplexPoly":
        coeffs = [complex(re, im) for re, im in d["coeffs"]]
        return cls(tuple(coeffs), d.get("n"))


def monomial(n: int, coeff: complex = 1.0) -> ComplexPoly:
    """c * z**n as a member of the degree class n."""
    return ComplexPoly((0.0,) * n + (complex(coeff),), n)


def negligible_threshold(coeffs: Sequence[complex]) -> float:
    top = max(abs(c) for c in coeffs)
    return DEGREE_REL_THRESHOLD * (top if top > 0.0 else 1.0)


def effective_degree(p: ComplexPoly) -> int:
    """Largest k whose coefficient is non-negligible; 0 for the zero polynomial."""
    thr = negligible_threshold(p.coeffs)
    for k in range(len(p.coeffs) - 1, -1, -1):
        if abs(p.coeffs[k]) > thr:
            return k
    return 0


def is_zero(p: ComplexPoly) -> bool:
    thr = negligible_threshold(p.coeffs)
    return all(abs(c) <= thr for c in p.coeffs)


def leading_coefficient(p: ComplexPoly) -> complex:
    return p.coeffs[effective_degree(p)]


def evaluate(p: ComplexPoly, z):
    """Evaluate by nested multiplication. Works on scalars and numpy arrays."""
    acc = p.coeffs[-1]
    if hasattr(z, "shape"):  # broadcast to array up front
        acc = acc + 0.0 * z
    for k in range(len(p.coeffs) - 2, -1, -1):
        acc = acc * z + p.coeffs[k]
    return acc


def derivative(p: ComplexPoly, k: int = 1) -> ComplexPoly:
    """k-th formal derivative; the zero polynomial when k exceeds the degree."""
    if k < 0:
        raise ValueError("derivative order must be nonnegative")
    ambient = p.ambient_degree
    if ambient is not None:
        ambient = max(ambient - k, 0)
    cur = list(p.coeffs)
    for _ in range(k):
        if len(cur) <= 1:
            cur = [0.0]
            break
        cur = [(j + 1) * cur[j + 1] for j in range(len(cur) - 1)]
    return ComplexPoly(tuple(cur), ambient)


def conj_inverse(p: ComplexPoly) -> ComplexPoly:
    """p*(z) = z**n * conj(p(1/conj(z))): reverse and conjugate within the class n."""
    n = p.ambient_degree
    if n is None:
        raise MissingAmbientDegree("conjugate-inverse needs the degree class n")
    padded = list(p.coeffs[: n + 1]) + [0.0] * (n + 1 - len(p.coeffs))
    rev = tuple(padded[n - k].conjugate() for k in range(n + 1))
    return ComplexPoly(rev, n)


def is_self_inversive(p: ComplexPoly, tol: float = 1e-10) -> bool:
    """True when the coefficient vector equals its reversed conjugate.

    The comparison is relative to the largest coefficient magnitude, so
    the zero polynomial is self-inversive by convention.
    """
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    n = p.ambient_degree
    if n is None:
        raise MissingAmbientDegree("self-inversive test needs the degree class n")
    padded = list(p.coeffs[: n + 1]) + [0.0] * (n + 1 - len(p.coeffs))
    top = max(abs(c) for c in padded)
    worst = max(abs(padded[k] - padded[n - k].conjugate()) for k in range(n + 1))
    return worst <= tol * top


def from_roots(roots: Iterable[complex], leading: complex = 1.0) -> ComplexPoly:
    """leading * prod(z - r) expanded by repeated linear multiplication."""
    lead = complex(leading)
    if lead == 0:
        raise ZeroLeadingCoefficient("leading coefficient must be nonzero")
    coeffs = [lead]
    count = 0
    for r in roots:
        r = complex(r)
        coeffs = [0.0] + coeffs
        for j in range(len(coeffs) - 1):
            coeffs[j] = coeffs[j] - r * coeffs[j + 1]
        count += 1
    return ComplexPoly(tuple(coeffs), count)


def multiply(a: ComplexPoly, b: ComplexPoly) -> ComplexPoly:
    """Coefficient convolution; the result carries no ambient degree."""
    out = [0.0 + 0.0j] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ca in enumerate(a.coeffs):
        for j, cb in enumerate(b.coeffs):
            out[i + j] += ca * cb
    return ComplexPoly(tuple(out))


def divide_linear(p: ComplexPoly, root: complex) -> tuple[ComplexPoly, complex]:
    """Synthetic division by (z - root); returns (quotient, remainder)."""
    d = effective_degree(p)
    if d == 0:
        raise ValueError("cannot divide a constant by a linear factor")
    c = p.coeffs
    q = [0.0 + 0.0j] * d
    q[d - 1] = c[d]
    for k in range(d - 1, 0, -1):
        q[k - 1] = c[k] + root * q[k]
    rem = c[0] + root * q[0]
    return ComplexPoly(tuple(q)), rem


def has_finite_coeffs(p: ComplexPoly) -> bool:
    return all(math.isfinite(c.real) and math.isfinite(c.imag) for c in p.coeffs)


def unit_circle_point(angle: float) -> complex:
    return cmath.exp(1j * angle)
