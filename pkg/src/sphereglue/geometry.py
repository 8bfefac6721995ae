"""Round disks and Moebius transformations on the Riemann sphere.

A ``Disk`` is an open round region: either the inside of a circle
(``side="interior"``) or the outside including the point at infinity
(``side="exterior"``).  The boundary circle ``|z - center| = radius`` is the
same in both cases.

The conformal distance between two disjoint disks is the modulus of the
separating annulus, normalized as the length of the conformally equivalent
cylinder of radius 1.  For two finite disks of radii r1, r2 with centers a
distance d apart it equals arccosh((d^2 - r1^2 - r2^2) / (2 r1 r2)).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass


class GeometryError(ValueError):
    pass


class DisksOverlap(GeometryError):
    """The closures of two disks intersect where disjointness is required."""


class DegenerateImage(GeometryError):
    """A Moebius image of a circle passes through infinity (a line)."""


class NotContained(GeometryError):
    """A region is not contained in the required domain."""


_DEGENERACY_TOL = 1e-12


@dataclass(frozen=True)
class SpherePoint:
    """A point of the Riemann sphere: a finite complex value or infinity."""

    value: complex | None = None

    @classmethod
    def of(cls, z) -> "SpherePoint":
        return cls(complex(z))

    @classmethod
    def infinity(cls) -> "SpherePoint":
        return cls(None)

    @property
    def is_infinity(self) -> bool:
        return self.value is None

    def __repr__(self):
        return "SpherePoint(inf)" if self.is_infinity else f"SpherePoint({self.value})"


INF = SpherePoint.infinity()


@dataclass(frozen=True)
class Disk:
    """An open round disk on the sphere, bounded by |z - center| = radius."""

    center: complex
    radius: float
    side: str = "interior"

    def __post_init__(self):
        if not self.radius > 0:
            raise GeometryError(f"radius must be positive, got {self.radius}")
        if self.side not in ("interior", "exterior"):
            raise GeometryError(f"side must be 'interior' or 'exterior', got {self.side!r}")
        object.__setattr__(self, "center", complex(self.center))
        object.__setattr__(self, "radius", float(self.radius))

    @property
    def is_exterior(self) -> bool:
        return self.side == "exterior"

    def complement(self) -> "Disk":
        """The disk on the other side of the same circle."""
        return Disk(self.center, self.radius, "exterior" if self.side == "interior" else "interior")

    def contains(self, z: complex, margin: float = 0.0) -> bool:
        r = abs(complex(z) - self.center)
        if self.side == "interior":
            return r < self.radius - margin
        return r > self.radius + margin

    def deep_point(self) -> SpherePoint:
        """A point well inside the region (center, or infinity for exterior disks)."""
        return INF if self.is_exterior else SpherePoint.of(self.center)

    def boundary_points(self, m: int) -> "np.ndarray":
        """m equispaced points on the boundary circle."""
        import numpy as np

        t = np.arange(m) * (2.0 * np.pi / m)
        return self.center + self.radius * np.exp(1j * t)


@dataclass(frozen=True)
class MoebiusMap:
    """z -> (a z + b) / (c z + d), normalized to a d - b c = 1."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        a, b, c, d = (complex(self.a), complex(self.b), complex(self.c), complex(self.d))
        det = a * d - b * c
        if det == 0:
            raise GeometryError("Moebius map must have a d - b c != 0")
        s = cmath.sqrt(det)
        object.__setattr__(self, "a", a / s)
        object.__setattr__(self, "b", b / s)
        object.__setattr__(self, "c", c / s)
        object.__setattr__(self, "d", d / s)

    @classmethod
    def identity(cls) -> "MoebiusMap":
        return cls(1, 0, 0, 1)

    @classmethod
    def translation(cls, t: complex) -> "MoebiusMap":
        return cls(1, t, 0, 1)

    @classmethod
    def scaling(cls, s: complex) -> "MoebiusMap":
        if s == 0:
            raise GeometryError("scaling factor must be nonzero")
        return cls(s, 0, 0, 1)

    @classmethod
    def inversion(cls) -> "MoebiusMap":
        return cls(0, 1, 1, 0)

    @classmethod
    def inversion_about(cls, p: complex) -> "MoebiusMap":
        """z -> 1 / (z - p)."""
        return cls(0, 1, 1, -p)

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def compose(self, other: "MoebiusMap") -> "MoebiusMap":
        """self after other."""
        return MoebiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __call__(self, z):
        """Apply to finite complex input(s); may return inf/nan at the pole."""
        import numpy as np

        z = np.asarray(z, dtype=complex)
        num = self.a * z + self.b
        den = self.c * z + self.d
        with np.errstate(divide="ignore", invalid="ignore"):
            out = num / den
        return out if out.shape else complex(out)


def mobius_apply(m: MoebiusMap, z) -> SpherePoint:
    """Apply a Moebius map with exact handling of the point at infinity."""
    if isinstance(z, SpherePoint):
        if z.is_infinity:
            if m.c == 0:
                return INF
            return SpherePoint.of(m.a / m.c)
        z = z.value
    z = complex(z)
    den = m.c * z + m.d
    if den == 0:
        return INF
    return SpherePoint.of((m.a * z + m.b) / den)


def mobius_image_disk(m: MoebiusMap, disk: Disk, tol: float = _DEGENERACY_TOL) -> Disk:
    """Exact image of a disk under a Moebius map.

    Raises DegenerateImage when the image boundary passes through infinity
    (within relative tolerance `tol`), i.e. when the pole of the map lies on
    the boundary circle.
    """
    q, rho = disk.center, disk.radius
    if m.c == 0:
        # affine map a z / d + b / d
        s = m.a / m.d
        new_center = s * q + m.b / m.d
        new_radius = abs(s) * rho
        new_side = disk.side
        return Disk(new_center, new_radius, new_side)

    pole = -m.d / m.c
    dist_pole = abs(pole - q)
    scale = max(rho, dist_pole, 1.0)
    if abs(dist_pole - rho) <= tol * scale:
        raise DegenerateImage("image boundary passes through infinity")

    # (a z + b)/(c z + d) = a/c + k / (c z + d), k = (b c - a d)/c = -1/c
    # circle under u -> 1/u: center conj(u0)/(|u0|^2 - r^2), radius r/||u0|^2 - r^2|
    u0 = m.c * q + m.d
    ur = abs(m.c) * rho
    denom = abs(u0) ** 2 - ur**2
    inv_center = u0.conjugate() / denom
    inv_radius = ur / abs(denom)
    k = -1.0 / m.c
    new_center = m.a / m.c + k * inv_center
    new_radius = abs(k) * inv_radius

    # side: follow a point deep inside the region
    w = mobius_apply(m, disk.deep_point())
    if w.is_infinity:
        new_side = "exterior"
    else:
        new_side = "interior" if abs(w.value - new_center) < new_radius else "exterior"
    return Disk(new_center, new_radius, new_side)


def _check_disjoint_finite(d1: Disk, d2: Disk):
    """Inversive-distance argument for two finite disks; >= 1 iff disjoint."""
    d = abs(d1.center - d2.center)
    return (d * d - d1.radius**2 - d2.radius**2) / (2.0 * d1.radius * d2.radius)


def _gap_point(d1: Disk, d2: Disk) -> complex:
    """A point strictly between the two disk closures.

    Requires exactly one of the disks to be exterior; the finite disk must
    sit strictly inside the complementary circle of the exterior one.
    """
    if d1.is_exterior and d2.is_exterior:
        raise DisksOverlap("two exterior disks always overlap near infinity")
    fin, ext = (d1, d2) if d2.is_exterior else (d2, d1)
    d = abs(fin.center - ext.center)
    if d + fin.radius >= ext.radius:
        raise DisksOverlap("finite disk is not inside the complement of the exterior disk")
    u = (fin.center - ext.center) / d if d > 0 else 1.0 + 0j
    return ext.center + u * 0.5 * (d + fin.radius + ext.radius)


def _to_finite_pair(d1: Disk, d2: Disk):
    """Map the pair by a Moebius transformation so both disks are finite.

    Returns (map, image of d1, image of d2); the map is the identity when both
    disks are already finite.
    """
    if not d1.is_exterior and not d2.is_exterior:
        return MoebiusMap.identity(), d1, d2
    p = _gap_point(d1, d2)
    j = MoebiusMap.inversion_about(p)
    e1, e2 = mobius_image_disk(j, d1), mobius_image_disk(j, d2)
    if e1.is_exterior or e2.is_exterior:
        raise DisksOverlap("disks do not have disjoint closures")
    return j, e1, e2


def conformal_distance(d1: Disk, d2: Disk) -> float:
    """Length of the cylinder conformally equivalent to the separating annulus.

    Zero for touching closures; raises DisksOverlap when the open regions
    genuinely intersect.
    """
    _, e1, e2 = _to_finite_pair(d1, d2)
    t = _check_disjoint_finite(e1, e2)
    if t < 1.0 - 1e-12:
        raise DisksOverlap(f"disk closures intersect (inversive distance {t:.6g} < 1)")
    return math.acosh(max(t, 1.0))


def normalize_to_concentric(d1: Disk, d2: Disk):
    """Moebius map sending d1 to {|z| < a} and d2 to {|z| > 1}.

    Returns (map, a) with a = exp(-conformal_distance(d1, d2)).  Built from
    the pair of common inverse points of the two circles, which the map sends
    to 0 and infinity.
    """
    j, e1, e2 = _to_finite_pair(d1, d2)
    if _check_disjoint_finite(e1, e2) < 1.0 - 1e-12:
        raise DisksOverlap("disk closures intersect")

    c1, r1 = e1.center, e1.radius
    c2, r2 = e2.center, e2.radius
    d = abs(c2 - c1)
    u = (c2 - c1) / d
    # common inverse points c1 + s u with d s^2 - (d^2 + r1^2 - r2^2) s + r1^2 d = 0
    bq = d * d + r1 * r1 - r2 * r2
    disc = bq * bq - 4.0 * d * d * r1 * r1
    disc = max(disc, 0.0)
    s_plus = (bq + math.sqrt(disc)) / (2.0 * d)
    s_minus = (r1 * r1) / s_plus
    p = c1 + s_minus * u  # inside disk 1
    q = c1 + s_plus * u  # inside disk 2

    t = MoebiusMap(1, -p, 1, -q)
    f1 = mobius_image_disk(t, e1)
    f2 = mobius_image_disk(t, e2)
    # both image circles are centered at 0 up to roundoff; rescale disk 2 to unit size
    m = MoebiusMap.scaling(1.0 / f2.radius).compose(t).compose(j)
    a = f1.radius / f2.radius
    return m, a


def hyperbolic_area(r: Disk) -> float:
    """Area of a round disk in the hyperbolic metric 4 |dz|^2/(1-|z|^2)^2.

    The disk must have its closure inside the unit disk.  A Euclidean disk is
    a hyperbolic disk; its geodesic diameter lies on the ray through the
    origin, giving the closed form 4 pi sinh^2(R/2) with
    R = artanh(x + rho) - artanh(x - rho), x = |center|.
    """
    if r.is_exterior:
        raise NotContained("exterior disks are never inside the unit disk")
    x = abs(r.center)
    rho = r.radius
    if x + rho >= 1.0:
        raise NotContained("disk closure must be inside the unit disk")
    half_diam = 0.5 * (math.atanh(x + rho) - math.atanh(x - rho))
    return 4.0 * math.pi * math.sinh(half_diam) ** 2
