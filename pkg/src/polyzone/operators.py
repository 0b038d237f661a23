"""Composite-polynomial construction and the Bernstein-type operator.

Given shift sigma and weights lambda_0..lambda_m, the composite of f is

    h(z) = sum_{k=0}^{m} lambda_k * f^(k)(z) * (sigma*z)**k / k!

The weights correspond to a companion polynomial
g(z) = sum_k C(n,k) lambda_k z**k whose zero locations drive the
containment bound on h. The Bernstein-type operator N is the same series
with sigma pinned to n/2; its companion polynomial is called phi here,
and N's inequality theorems require phi's zeros to lie in the half plane
|z| <= |z - n/2|.

Binomial coefficients use exact integer arithmetic at every n (Python
integers are unbounded, so no floating-point switch point is needed).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import roots as _roots
from .errors import DegreeExceedsN, DegreeMismatch, RootFindingFailed, SigmaMismatch
from .poly import ComplexPoly, effective_degree, is_zero
from .regions import ApolloniusRegion, in_apollonius


@dataclass(frozen=True)
class OperatorSpec:
    """Ambient degree n, order m <= n, weights lambda_0..lambda_m, shift sigma."""

    n: int
    m: int
    lambdas: tuple[complex, ...]
    sigma: complex

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("ambient degree n must be positive")
        if not 0 <= self.m <= self.n:
            raise ValueError("order m must satisfy 0 <= m <= n")
        lambdas = tuple(complex(c) for c in self.lambdas)
        if len(lambdas) != self.m + 1:
            raise ValueError("need exactly m + 1 weights")
        if all(c == 0 for c in lambdas):
            raise ValueError("weights must not all be zero")
        object.__setattr__(self, "lambdas", lambdas)
        object.__setattr__(self, "sigma", complex(self.sigma))

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "lambdas": [[c.real, c.imag] for c in self.lambdas],
            "sigma": [self.sigma.real, self.sigma.imag],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "OperatorSpec":
        lambdas = tuple(complex(re, im) for re, im in d["lambdas"])
        return cls(d["n"], d["m"], lambdas, complex(d["sigma"][0], d["sigma"][1]))


def bernstein_spec(n: int, lambdas: Sequence[complex]) -> OperatorSpec:
    """Spec for the operator N: shift fixed at n/2."""
    return OperatorSpec(n, len(lambdas) - 1, tuple(lambdas), n / 2.0)


def lambdas_from_g(g: ComplexPoly, n: int) -> tuple[complex, ...]:
    """Weights lambda_k = g_k / C(n,k) recovered from the companion polynomial."""
    m = effective_degree(g)
    if m > n:
        raise DegreeExceedsN(f"companion degree {m} exceeds n = {n}")
    return tuple(g.coeffs[k] / math.comb(n, k) for k in range(m + 1))


def g_from_lambdas(lambdas: Sequence[complex], n: int) -> ComplexPoly:
    """Companion polynomial sum_k C(n,k) lambda_k z**k."""
    if len(lambdas) > n + 1:
        raise DegreeExceedsN(f"{len(lambdas)} weights do not fit degree class {n}")
    coeffs = tuple(math.comb(n, k) * complex(c) for k, c in enumerate(lambdas))
    return ComplexPoly(coeffs, n)


def compose_h(
    f: ComplexPoly, spec: OperatorSpec, require_exact_degree: bool = True
) -> ComplexPoly:
    """The composite sum_k lambda_k f^(k)(z) (sigma z)**k / k! in degree class n.

    The containment theorem needs deg f = n exactly, so that is validated
    by default; disable for exploratory use on shorter polynomials.
    """
    n = spec.n
    if require_exact_degree and effective_degree(f) != n:
        raise DegreeMismatch(
            f"operand degree {effective_degree(f)} != n = {n} (exact degree required)"
        )
    if effective_degree(f) > n:
        raise DegreeExceedsN(f"operand degree {effective_degree(f)} exceeds n = {n}")

    out = [0.0 + 0.0j] * (n + 1)
    cur = list(f.coeffs[: effective_degree(f) + 1])
    scale = 1.0 + 0.0j  # sigma**k / k!, folded into a running factor
    for k in range(spec.m + 1):
        if k > 0:
            if len(cur) <= 1:
                break  # higher derivatives vanish
            cur = [(j + 1) * cur[j + 1] for j in range(len(cur) - 1)]
            scale *= spec.sigma / k
        w = spec.lambdas[k] * scale
        if w == 0:
            continue
        for j, cj in enumerate(cur):
            out[k + j] += w * cj
    return ComplexPoly(tuple(out), n)


def apply_N(P: ComplexPoly, spec: OperatorSpec) -> ComplexPoly:
    """The Bernstein-type operator: the composite with shift n/2, linear in P."""
    if abs(spec.sigma - spec.n / 2.0) > 1e-12:
        raise SigmaMismatch(f"shift {spec.sigma} is not n/2 = {spec.n / 2.0}")
    if effective_degree(P) > spec.n:
        raise DegreeExceedsN(f"operand degree {effective_degree(P)} exceeds n = {spec.n}")
    return compose_h(P, spec, require_exact_degree=False)


def phi_of(spec: OperatorSpec) -> ComplexPoly:
    """Admissibility polynomial sum_i C(n,i) lambda_i z**i."""
    return g_from_lambdas(spec.lambdas, spec.n)


def check_N_admissible(spec: OperatorSpec, tol: float = 1e-9) -> bool:
    """True when every zero of phi lies in the half plane |z| <= |z - n/2|.

    A constant phi has no zeros and is vacuously admissible. The check is
    advisory: apply_N computes N[P] for any weights, but the theorem
    verifiers refuse inadmissible specs.
    """
    phi = phi_of(spec)
    if effective_degree(phi) == 0 or is_zero(phi):
        return True
    rs = _roots.find_roots(phi)
    if not all(rs.converged):
        raise RootFindingFailed("uncertified phi roots in admissibility check")
    region = ApolloniusRegion(1.0, spec.n / 2.0)
    return all(in_apollonius(w, region, tol) for w in rs.roots)
