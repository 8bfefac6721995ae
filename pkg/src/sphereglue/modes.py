"""Truncated boundary-value spaces on circles.

Functions on a circle gamma = {|z - c| = r} modulo constants are represented
by Fourier coefficients c_k of ((z - c)/r)^k for k in a finite window of
nonzero integers (symmetric [-N, N] unless stated otherwise; the constant
mode k = 0 is structurally excluded).  The squared norm is

    sum_k  pi |k| |c_k|^2,

the Dirichlet energy of the holomorphic extension of each mode to its side of
the circle.  Modes with k >= 1 extend into the round interior, modes with
k <= -1 into the round exterior (vanishing at infinity): the Hardy split.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .geometry import Disk


class TooFewSamples(ValueError):
    pass


@dataclass(frozen=True)
class CircleModeSpace:
    """Mode window [lo, hi] \\ {0} on the boundary circle of `circle`.

    The default constructor gives the symmetric window with n_modes = N on
    each side.  Asymmetric windows arise when a gluing carries a nonzero
    winding; use `windowed` for those.
    """

    circle: Disk
    n_modes: int
    lo: int = field(default=0)  # filled in __post_init__ when left at 0
    hi: int = field(default=0)

    def __post_init__(self):
        if self.lo == 0 and self.hi == 0:
            if self.n_modes < 1:
                raise ValueError("n_modes must be >= 1")
            object.__setattr__(self, "lo", -self.n_modes)
            object.__setattr__(self, "hi", self.n_modes)
        if not (self.lo <= -1 and self.hi >= 1):
            raise ValueError(f"mode window [{self.lo}, {self.hi}] must contain both signs")

    @classmethod
    def windowed(cls, circle: Disk, lo: int, hi: int) -> "CircleModeSpace":
        return cls(circle, max(-lo, hi), lo, hi)

    @property
    def ks(self) -> np.ndarray:
        k = np.arange(self.lo, self.hi + 1)
        return k[k != 0]

    @property
    def dim(self) -> int:
        return self.hi - self.lo

    @property
    def weights(self) -> np.ndarray:
        return np.pi * np.abs(self.ks)

    def index_of(self, k: int) -> int:
        if k == 0 or not (self.lo <= k <= self.hi):
            raise ValueError(f"mode {k} outside window [{self.lo}, {self.hi}]")
        return int(np.searchsorted(self.ks, k))

    # literal Hardy split masks
    @property
    def plus_mask(self) -> np.ndarray:
        return self.ks > 0

    @property
    def minus_mask(self) -> np.ndarray:
        return self.ks < 0

    # split relative to the region the disk designates:
    # "removed" modes extend into the disk's own side, "piece" modes into the
    # complementary side.  For an interior-side disk these are the literal
    # plus/minus parts; for an exterior-side disk the roles swap.
    @property
    def removed_mask(self) -> np.ndarray:
        return self.minus_mask if self.circle.is_exterior else self.plus_mask

    @property
    def piece_mask(self) -> np.ndarray:
        return self.plus_mask if self.circle.is_exterior else self.minus_mask

    def sample_points(self, m: int) -> np.ndarray:
        return self.circle.boundary_points(m)


@dataclass(frozen=True)
class ModeVector:
    space: CircleModeSpace
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex)
        if c.shape != (self.space.dim,):
            raise ValueError(f"expected {self.space.dim} coefficients, got {c.shape}")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls, space: CircleModeSpace) -> "ModeVector":
        return cls(space, np.zeros(space.dim, dtype=complex))

    @classmethod
    def unit(cls, space: CircleModeSpace, k: int) -> "ModeVector":
        v = np.zeros(space.dim, dtype=complex)
        v[space.index_of(k)] = 1.0
        return cls(space, v)

    def __add__(self, other: "ModeVector") -> "ModeVector":
        return ModeVector(self.space, self.coeffs + other.coeffs)


def h12_norm(v: ModeVector) -> float:
    """sqrt(sum pi |k| |c_k|^2)."""
    return float(np.sqrt(np.sum(v.space.weights * np.abs(v.coeffs) ** 2)))


def split_pm(v: ModeVector):
    """Hardy decomposition v = v_plus + v_minus (modes k>=1 and k<=-1)."""
    plus = np.where(v.space.plus_mask, v.coeffs, 0.0)
    minus = np.where(v.space.minus_mask, v.coeffs, 0.0)
    return ModeVector(v.space, plus), ModeVector(v.space, minus)


def to_orthonormal(v: ModeVector) -> np.ndarray:
    """Coordinates in the orthonormal basis e_k / sqrt(pi |k|)."""
    return v.coeffs * np.sqrt(v.space.weights)


def from_orthonormal(space: CircleModeSpace, coords: np.ndarray) -> ModeVector:
    return ModeVector(space, np.asarray(coords, dtype=complex) / np.sqrt(space.weights))


def mode_values(space: CircleModeSpace, k: int, z: np.ndarray) -> np.ndarray:
    """Values of ((z - c)/r)^k at points z."""
    w = (np.asarray(z, dtype=complex) - space.circle.center) / space.circle.radius
    return w ** k


def sample_to_modes(samples: np.ndarray, space: CircleModeSpace) -> ModeVector:
    """Discrete Fourier analysis of equispaced boundary samples.

    Samples must be taken at center + r exp(2 pi i t / M), t = 0..M-1, with
    M large enough to separate every mode in the window (M >= span + 2).
    Exact to roundoff for Laurent polynomials supported in the window.
    """
    samples = np.asarray(samples, dtype=complex)
    m = samples.shape[0]
    if m < space.hi - space.lo + 2:
        raise TooFewSamples(f"need at least {space.hi - space.lo + 2} samples, got {m}")
    fhat = np.fft.fft(samples) / m
    coeffs = fhat[np.mod(space.ks, m)]
    return ModeVector(space, coeffs)


def modes_to_samples(v: ModeVector, m: int) -> np.ndarray:
    """Evaluate the mode expansion at m equispaced boundary points."""
    z = v.space.sample_points(m)
    w = (z - v.space.circle.center) / v.space.circle.radius
    out = np.zeros(m, dtype=complex)
    for k, c in zip(v.space.ks, v.coeffs):
        if c != 0:
            out += c * w ** k
    return out
