"""Closed circular regions used by the containment theorems.

Two shapes appear in the hypotheses: origin-centered disks |z| <= r and
the Apollonius locus |z| <= s|z - sigma|. For s = 1 the locus is the
half plane of points at least as close to 0 as to sigma; for s < 1 it is
a disk, for s > 1 the closed exterior of a disk.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import roots as _roots
from .errors import EmptyPointSet, RootFindingFailed
from .poly import ComplexPoly

# Conventional positive floor returned when every point sits at the origin:
# any s > 0 satisfies the hypothesis there, and the theorems need s > 0.
MIN_S_FLOOR = 1e-12


@dataclass(frozen=True)
class ApolloniusRegion:
    """The locus |z| <= s * |z - sigma| with ratio s > 0."""

    s: float
    sigma: complex

    def __post_init__(self) -> None:
        if not self.s > 0:
            raise ValueError("ratio s must be positive")
        object.__setattr__(self, "s", float(self.s))
        object.__setattr__(self, "sigma", complex(self.sigma))

    def to_json_dict(self) -> dict:
        return {"s": self.s, "sigma": [self.sigma.real, self.sigma.imag]}

    @classmethod
    def from_json_dict(cls, d: dict) -> "ApolloniusRegion":
        return cls(d["s"], complex(d["sigma"][0], d["sigma"][1]))


@dataclass(frozen=True)
class Disk:
    """Origin-centered closed disk |z| <= r."""

    r: float

    def __post_init__(self) -> None:
        if self.r < 0:
            raise ValueError("radius must be nonnegative")
        object.__setattr__(self, "r", float(self.r))

    def to_json_dict(self) -> dict:
        return {"r": self.r}

    @classmethod
    def from_json_dict(cls, d: dict) -> "Disk":
        return cls(d["r"])


def in_apollonius(z: complex, region: ApolloniusRegion, tol: float = 0.0) -> bool:
    """Closed membership test with tolerance relative to max(1, |z|, |sigma|)."""
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    z = complex(z)
    scale = max(1.0, abs(z), abs(region.sigma))
    return abs(z) <= region.s * abs(z - region.sigma) + tol * scale


def in_half_plane(z: complex, sigma: complex) -> bool:
    """The s = 1 case expanded: |z|^2 <= |z - sigma|^2 iff 2 Re(z conj(sigma)) <= |sigma|^2."""
    z = complex(z)
    sigma = complex(sigma)
    return 2.0 * (z * sigma.conjugate()).real <= abs(sigma) ** 2


def min_s_for(points: Sequence[complex], sigma: complex) -> float:
    """Tightest ratio s so that every point lies in |z| <= s|z - sigma|.

    Returns math.inf when a point coincides with sigma (and is nonzero);
    returns the conventional floor when all points sit at the origin. The
    finite result is rounded up by two ulps so membership at the returned
    s holds even with zero tolerance.
    """
    pts = [complex(b) for b in points]
    if not pts:
        raise EmptyPointSet("min_s_for needs at least one point")
    sigma = complex(sigma)
    best = 0.0
    for b in pts:
        dist = abs(b - sigma)
        if dist == 0.0:
            if abs(b) == 0.0:
                continue  # 0 <= s*0 holds for every s
            return math.inf
        best = max(best, abs(b) / dist)
    if best == 0.0:
        return MIN_S_FLOOR
    return math.nextafter(math.nextafter(best, math.inf), math.inf)


def zeros_in_disk(p: ComplexPoly, r: float, tol: float = 1e-9) -> bool:
    """True when every zero of p has modulus at most r + tol*max(1, r)."""
    rs = _roots.find_roots(p)
    if not all(rs.converged):
        raise RootFindingFailed("uncertified roots in zeros_in_disk")
    return all(abs(w) <= r + tol * max(1.0, r) for w in rs.roots)
