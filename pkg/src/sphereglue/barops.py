"""Bar-projector blocks between disjoint disks, and related projector blocks.

The bar-projector from a disk R' to a disjoint disk R acts as the restriction
operator: take a function holomorphic on the complement of R' (modulo
constants), restrict it to R.  In the per-circle mode bases of `modes` this
becomes a dense matrix whose entries are Laurent re-expansion coefficients.
For any disjoint pair of disks its singular values are exp(-k * lambda) for
k = 1, 2, ..., with lambda the conformal distance, which the tests pin both
through the closed form and through an independent sampling construction.

Conventions for a block from source circle gamma_l to target circle gamma_j:
columns are indexed by the source modes that extend holomorphically into the
complement of the source region ("piece side"), rows by the target modes that
extend into the target region ("removed side").  For interior-side disks
these are the literal minus and plus Fourier modes.  All matrices are written
in the orthonormalized bases e_k / sqrt(pi |k|).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import svdvals

from .geometry import Disk, DisksOverlap, conformal_distance
from .modes import CircleModeSpace, sample_to_modes


class BadParameters(ValueError):
    pass


@dataclass(frozen=True)
class BlockMatrix:
    """Dense block of the restriction operator in orthonormal mode bases."""

    source: CircleModeSpace
    target: CircleModeSpace
    entries: np.ndarray

    @property
    def row_modes(self) -> np.ndarray:
        """Literal mode indices labelling the rows (target removed side)."""
        return self.target.ks[self.target.removed_mask]

    @property
    def col_modes(self) -> np.ndarray:
        """Literal mode indices labelling the columns (source piece side)."""
        return self.source.ks[self.source.piece_mask]

    def norm(self) -> float:
        s = svdvals(self.entries)
        return float(s[0]) if s.size else 0.0

    def singular_values(self) -> np.ndarray:
        return svdvals(self.entries)


def _require_disjoint(source: Disk, target: Disk):
    if source.is_exterior and target.is_exterior:
        raise DisksOverlap("two exterior disks always overlap")
    conformal_distance(source, target)  # raises DisksOverlap when closures cross


def _raw_expansion_table(source: Disk, target: Disk, n_max: int, m_max: int) -> np.ndarray:
    """Coefficient of the target removed-side mode (order n) in the Laurent
    expansion of the source piece-side mode (order m) around the target center.

    Returns table[n, m] for n in 0..n_max, m in 1..m_max (column m stored at
    index m-1).  Orders are the absolute values of the literal mode indices.
    """
    delta = target.center - source.center
    rl, rj = source.radius, target.radius
    table = np.zeros((n_max + 1, m_max), dtype=complex)
    ms = np.arange(1, m_max + 1)

    if not source.is_exterior and not target.is_exterior:
        # source mode w_l^{-m}, expand in nonnegative powers of w_j
        table[0, :] = (rl / delta) ** ms
        for n in range(n_max):
            table[n + 1, :] = table[n, :] * (rj / delta) * (-ms - n) / (n + 1)
    elif source.is_exterior and not target.is_exterior:
        # source mode w_l^{+m} is a degree-m polynomial: descending recurrence
        for mi, m in enumerate(ms):
            top = min(m, n_max)
            col = np.zeros(n_max + 1, dtype=complex)
            val = (rj / rl) ** m
            for n in range(m, top, -1):  # walk down from n = m if it exceeds n_max
                val = val * (n / (m - n + 1)) * (delta / rj)
            col[top] = val
            for n in range(top, 0, -1):
                col[n - 1] = col[n] * (n / (m - n + 1)) * (delta / rj)
            table[:, mi] = col
    elif not source.is_exterior and target.is_exterior:
        # source mode w_l^{-m}, expand in powers w_j^{-n}; vanishes for n < m
        for mi, m in enumerate(ms):
            if m > n_max:
                continue
            col = np.zeros(n_max + 1, dtype=complex)
            col[m] = (rl / rj) ** m
            for n in range(m, n_max):
                col[n + 1] = col[n] * (-n / (n - m + 1)) * (delta / rj)
            table[:, mi] = col
    else:  # pragma: no cover - rejected earlier
        raise DisksOverlap("two exterior disks always overlap")
    return table


def _bar_entries(source_space: CircleModeSpace, target_space: CircleModeSpace) -> np.ndarray:
    """Closed-form block entries in orthonormal bases, honoring mode windows."""
    n_vals = np.abs(target_space.ks[target_space.removed_mask])
    m_vals = np.abs(source_space.ks[source_space.piece_mask])
    if n_vals.size == 0 or m_vals.size == 0:
        return np.zeros((n_vals.size, m_vals.size), dtype=complex)
    table = _raw_expansion_table(
        source_space.circle, target_space.circle, int(n_vals.max()), int(m_vals.max())
    )
    raw = table[np.ix_(n_vals, m_vals - 1)]
    scale = np.sqrt(n_vals[:, None] / m_vals[None, :])
    return raw * scale


def bar_block_closed_form(source: Disk, target: Disk, n_modes: int) -> BlockMatrix:
    """Restriction-operator block via Laurent re-expansion coefficients."""
    _require_disjoint(source, target)
    ss = CircleModeSpace(source, n_modes)
    ts = CircleModeSpace(target, n_modes)
    return BlockMatrix(ss, ts, _bar_entries(ss, ts))


def bar_block_quadrature(
    source: Disk, target: Disk, n_modes: int, n_samples: int | None = None
) -> BlockMatrix:
    """Independent construction of the same block by boundary sampling.

    Each source piece-side mode is evaluated on equispaced samples of the
    target circle, analyzed with the discrete transform, and projected onto
    the target removed-side modes.
    """
    _require_disjoint(source, target)
    if n_samples is None:
        n_samples = 8 * n_modes
    if n_samples < 4 * n_modes:
        from .modes import TooFewSamples

        raise TooFewSamples(f"need at least {4 * n_modes} samples, got {n_samples}")
    ss = CircleModeSpace(source, n_modes)
    ts = CircleModeSpace(target, n_modes)
    z = ts.sample_points(n_samples)
    w_src = (z - source.center) / source.radius

    col_modes = ss.ks[ss.piece_mask]
    rows_mask = ts.removed_mask
    n_vals = np.abs(ts.ks[rows_mask])
    entries = np.zeros((n_vals.size, col_modes.size), dtype=complex)
    for i, k in enumerate(col_modes):
        vals = w_src ** k
        mv = sample_to_modes(vals, ts)
        entries[:, i] = mv.coeffs[rows_mask] * np.sqrt(n_vals / abs(k))
    return BlockMatrix(ss, ts, entries)


def bar_norm(source: Disk, target: Disk, n_modes: int) -> float:
    """Largest singular value of the block; equals exp(-conformal distance)."""
    return bar_block_closed_form(source, target, n_modes).norm()


def bar_singular_values(source: Disk, target: Disk, n_modes: int) -> np.ndarray:
    """Descending singular values; exp(-k lambda), k = 1..N, up to truncation."""
    return bar_block_closed_form(source, target, n_modes).singular_values()


def symmetric_model_mode_norm(b: float, lam: float, n: int) -> float:
    """Per-mode projector norm sqrt(1 - b^(4n)) * exp(-n lam) for the rational
    curve glued from the unit disk by identifying z with 1/z on the boundary,
    with regions {|z| < a} and the image of {b < |z| <= 1}, a = b exp(-lam).
    """
    if not (0.0 < b < 1.0):
        raise BadParameters(f"b must be in (0, 1), got {b}")
    if not lam > 0.0:
        raise BadParameters(f"lam must be positive, got {lam}")
    if not (isinstance(n, (int, np.integer)) and n >= 1):
        raise BadParameters(f"n must be a positive integer, got {n}")
    return math.sqrt(1.0 - b ** (4 * n)) * math.exp(-n * lam)


# ---------------------------------------------------------------------------
# projector blocks between energy-dual spaces supported on disks
# ---------------------------------------------------------------------------
#
# Distributions supported on the closed disks, with integral 0 and the norm
# dual to the Dirichlet energy, correspond to potentials u that are harmonic
# off the disk boundary.  Each disk carries two families:
#
#   type "+" : u holomorphic-in-the-region / conjugate-harmonic outside,
#   type "-" : the complex conjugate family.
#
# The pairing of two such potentials reduces to a single boundary integral
# over the circle owning the second potential:
#
#   <u1, u2> = -(1/4) * Int_{gamma_2} u1 * conj([d u2/dn]) ds
#
# where [d u2/dn] is the jump of the outward normal derivative across the
# circle.  Trapezoid quadrature on a circle is spectrally accurate, so this
# gives an independent numerical route to the projector blocks.


def _potential_values(disk: Disk, ptype: str, m_vals: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Values of the orthonormal potentials at points z off the circle.

    Returns an array of shape (len(m_vals), len(z)).
    """
    w = (np.asarray(z, dtype=complex) - disk.center) / disk.radius
    inside = np.abs(w[0]) < 1.0  # caller guarantees all points on one side
    amp = 1.0 / np.sqrt(np.pi * m_vals)[:, None]
    mm = m_vals[:, None]
    if disk.is_exterior:
        own_region = not inside
        if ptype == "+":
            vals = w[None, :] ** (-mm) if own_region else np.conj(w)[None, :] ** mm
        else:
            vals = np.conj(w)[None, :] ** (-mm) if own_region else w[None, :] ** mm
    else:
        own_region = inside
        if ptype == "+":
            vals = w[None, :] ** mm if own_region else np.conj(w)[None, :] ** (-mm)
        else:
            vals = np.conj(w)[None, :] ** mm if own_region else w[None, :] ** (-mm)
    return amp * vals


def _normal_jump(disk: Disk, ptype: str, m_vals: np.ndarray, theta: np.ndarray) -> np.ndarray:
    """Jump of the outward normal derivative across the disk's own circle."""
    amp = (1.0 / np.sqrt(np.pi * m_vals) * (-2.0 * m_vals / disk.radius))[:, None]
    # phase follows the holomorphically-extended side of the potential
    if (ptype == "+") == (not disk.is_exterior):
        phase = np.exp(1j * np.outer(m_vals, theta))
    else:
        phase = np.exp(-1j * np.outer(m_vals, theta))
    return amp * phase


def delta_projector_block(
    source: Disk, target: Disk, n_modes: int, n_samples: int | None = None
) -> dict:
    """Blocks of the orthogonal projector between the energy-dual spaces
    supported on two disjoint disks, split by type.

    Returns {"pp", "pm", "mp", "mm"}; rows belong to the target, columns to
    the source.  At genus zero the "pp" and "mm" blocks vanish and the mixed
    blocks have the bar-projector singular values.
    """
    _require_disjoint(source, target)
    if n_samples is None:
        n_samples = max(256, 8 * n_modes)
    theta = np.arange(n_samples) * (2.0 * np.pi / n_samples)
    z = source.center + source.radius * np.exp(1j * theta)
    m_vals = np.arange(1, n_modes + 1, dtype=float)
    weight = -(2.0 * np.pi * source.radius) / (4.0 * n_samples)

    out = {}
    for t in ("+", "-"):
        u1 = _potential_values(target, t, m_vals, z)
        for s in ("+", "-"):
            j2 = _normal_jump(source, s, m_vals, theta)
            key = ("p" if t == "+" else "m") + ("p" if s == "+" else "m")
            out[key] = weight * (u1 @ np.conj(j2).T)
    return out


# ---------------------------------------------------------------------------
# the assembled operator over a gluing model
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlockOperator:
    """Operator from the piece-side coordinates of all circles to the
    removed-side coordinates, with (target circle, source circle) blocks."""

    space: "object"  # gluing.ModelSpace
    matrix: np.ndarray

    def block(self, j: int, l: int) -> np.ndarray:
        sp = self.space
        return self.matrix[
            sp.plus_offsets[j] : sp.plus_offsets[j + 1],
            sp.minus_offsets[l] : sp.minus_offsets[l + 1],
        ]

    def norm(self) -> float:
        if min(self.matrix.shape) == 0:
            return 0.0
        s = svdvals(self.matrix)
        return float(s[0])


def assemble_C(model, n_modes: int) -> BlockOperator:
    """Assemble the restriction operator of a gluing model.

    Block (j, l) is the bar block from circle l to circle j when both bound
    removed disks of the same piece and j != l; all other blocks (including
    the diagonal and all cross-piece positions) are identically zero.
    """
    from .gluing import ModelSpace

    sp = ModelSpace(model, n_modes)
    mat = np.zeros((sp.plus_dim, sp.minus_dim), dtype=complex)
    for j in range(len(model.disks)):
        for l in range(len(model.disks)):
            if j == l or model.piece_of[j] != model.piece_of[l]:
                continue
            blk = _bar_entries(sp.spaces[l], sp.spaces[j])
            mat[
                sp.plus_offsets[j] : sp.plus_offsets[j + 1],
                sp.minus_offsets[l] : sp.minus_offsets[l + 1],
            ] = blk
    return BlockOperator(sp, mat)
