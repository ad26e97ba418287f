"""Euclidean and Poincare-disc geometry.

Moebius involutions of the unit disc, hyperbolic distance, Moebius images
of centred discs, and the two lens areas that drive the count variances:
the Euclidean area of ``D_r^c \\cap D_r(z)`` and the hyperbolic angular
integral over ``D_r^c \\cap D(C, R)``, where ``D(C, R)`` is the image of
the centred disc ``D_r`` under the involution exchanging 0 and z.

Radial symmetry is exploited throughout: the lens quantities depend only
on ``|z|``, so the integral operations take a modulus, not a point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError
from .quadrature import DEFAULT_QUAD, QuadratureConfig, integrate_interval

__all__ = [
    "Disc",
    "ImageDisc",
    "LensIntegralResult",
    "mobius",
    "hyperbolic_distance",
    "image_disc",
    "euclidean_lens_complement_area",
    "hyperbolic_lens_integral",
    "hyperbolic_lens_integral_transformed",
]

# Floating-point roundoff can push an arccos argument marginally past +-1 at
# integration endpoints (analytically the endpoints are exactly +-1).  Within
# this window the argument is clamped; beyond it the inputs are wrong.
ACOS_CLAMP_WINDOW = 1e-12


@dataclass(frozen=True)
class Disc:
    """A disc given by centre and radius.

    With ``euclidean=False`` the disc must fit strictly inside the unit
    disc, as required when it describes a region of the hyperbolic plane.
    """

    center: complex
    radius: float
    euclidean: bool = True

    def __post_init__(self):
        if not self.radius > 0.0:
            raise DomainError(f"radius must be positive, got {self.radius}")
        if not self.euclidean and abs(self.center) + self.radius >= 1.0:
            raise DomainError(
                "a hyperbolic-context disc must lie strictly inside the unit disc")


@dataclass(frozen=True)
class ImageDisc:
    """Moebius image of the centred disc D_r, with derived quantities.

    ``center_modulus`` and ``radius`` are the Euclidean parameters of the
    image disc D(C, R).  The remaining fields are the algebraic combinations
    used by the transformed lens integral:

    * ``inner_edge`` / ``outer_edge``: moduli of the boundary points nearest
      to / farthest from the origin, ``|C| -+ R`` in absolute value,
    * ``inner_edge_sq`` / ``outer_edge_sq``: their squares,
    * ``sq_span``: ``outer_edge_sq - inner_edge_sq`` = 4|C|R, exact,
    * ``gap``: ``1 - outer_edge_sq`` in the cancellation-free form
      (1-|z|^2)(1-r^2)/(1+|z|r)^2,
    * ``radius_sq_excess``: R^2 - |C|^2 = (r^2-|z|^2)/(1-|z|^2 r^2),
    * ``sq_sum``: |C|^2 + R^2,
    * ``cut_fraction``: (outer_edge_sq - r^2)/sq_span, the fraction of the
      squared-modulus span lying outside the centred disc (inf when z = 0),
    * ``span_over_outer_sq``: sq_span/outer_edge_sq,
    * ``span_over_gap``: sq_span/gap.
    """

    z_modulus: float
    r: float
    center_modulus: float
    radius: float
    inner_edge: float
    outer_edge: float
    inner_edge_sq: float
    outer_edge_sq: float
    sq_span: float
    gap: float
    radius_sq_excess: float
    sq_sum: float
    cut_fraction: float
    span_over_outer_sq: float
    span_over_gap: float


@dataclass(frozen=True)
class LensIntegralResult:
    """Value and error estimate of a lens integral."""

    value: float
    error_estimate: float


def _require_in_disc(p: complex, name: str):
    if not abs(p) < 1.0:
        raise DomainError(f"{name} must lie in the open unit disc, got |{name}| = {abs(p)}")


def mobius(w: complex, z: complex, theta: float = 0.0) -> complex:
    """Disc automorphism e^{i theta} (w - z) / (1 - conj(w) z).

    With ``theta = 0`` the map is an involution exchanging 0 and ``w``.
    """
    w = complex(w)
    z = complex(z)
    _require_in_disc(w, "w")
    _require_in_disc(z, "z")
    out = (w - z) / (1.0 - w.conjugate() * z)
    if theta != 0.0:
        out *= complex(math.cos(theta), math.sin(theta))
    return out


def hyperbolic_distance(z: complex, w: complex) -> float:
    """Hyperbolic distance between two points of the open unit disc.

    Computed as atanh(|w - z| / |1 - conj(w) z|); equivalently
    cosh^2(d) = |1 - z conj(w)|^2 / ((1-|z|^2)(1-|w|^2)).
    """
    z = complex(z)
    w = complex(w)
    _require_in_disc(z, "z")
    _require_in_disc(w, "w")
    return math.atanh(abs(w - z) / abs(1.0 - w.conjugate() * z))


def image_disc(z_modulus: float, r: float) -> ImageDisc:
    """Parameters of the Moebius image of D_r under the involution at |z|.

    The image is the Euclidean disc with centre modulus
    (1-r^2)|z| / (1-|z|^2 r^2) and radius (1-|z|^2) r / (1-|z|^2 r^2); it is
    also the set of points w with |mobius(w, z)| < r.
    """
    if not 0.0 <= z_modulus < 1.0:
        raise DomainError(f"z_modulus must lie in [0, 1), got {z_modulus}")
    if not 0.0 < r < 1.0:
        raise DomainError(f"r must lie in (0, 1), got {r}")
    z = z_modulus
    denom = 1.0 - z * z * r * r
    c = (1.0 - r * r) * z / denom
    rad = (1.0 - z * z) * r / denom
    inner = abs(z - r) / (1.0 - z * r)     # == |c - rad|, cancellation-free
    outer = (z + r) / (1.0 + z * r)        # == c + rad
    inner_sq = inner * inner
    outer_sq = outer * outer
    sq_span = 4.0 * c * rad
    gap = (1.0 - z * z) * (1.0 - r * r) / (1.0 + z * r) ** 2
    if sq_span > 0.0:
        # == (outer_sq - r^2)/sq_span without the subtractive cancellation
        cut = (2.0 * r + z * (1.0 + r * r)) * (1.0 - z * r) ** 2 / (4.0 * r * (1.0 - z * z))
        span_over_outer = sq_span / outer_sq
        span_over_gap = sq_span / gap
    else:
        cut = math.inf
        span_over_outer = 0.0
        span_over_gap = 0.0
    # R^2 - |C|^2 == (R - |C|)(R + |C|) with R - |C| = (r - z)/(1 - z r)
    excess = (r * r - z * z) / denom
    return ImageDisc(
        z_modulus=z, r=r, center_modulus=c, radius=rad,
        inner_edge=inner, outer_edge=outer,
        inner_edge_sq=inner_sq, outer_edge_sq=outer_sq,
        sq_span=sq_span, gap=gap,
        radius_sq_excess=excess, sq_sum=c * c + rad * rad,
        cut_fraction=cut, span_over_outer_sq=span_over_outer,
        span_over_gap=span_over_gap)


def euclidean_lens_complement_area(r: float, z_modulus):
    """Euclidean area of D_r^c intersected with the disc D_r(z).

    Equals pi r^2 - 2 r^2 arccos(|z|/2r) + (|z|/2) sqrt(4r^2 - |z|^2) for
    |z| < 2r and pi r^2 otherwise (the translated disc has left the centred
    one entirely).  Continuous in |z|, zero at |z| = 0.  Vectorized in
    ``z_modulus``.
    """
    if not r > 0.0:
        raise DomainError(f"r must be positive, got {r}")
    z = np.asarray(z_modulus, dtype=float)
    if np.any(z < 0.0):
        raise DomainError("z_modulus must be non-negative")
    scalar = z.ndim == 0
    z = np.atleast_1d(z)
    out = np.full_like(z, math.pi * r * r)
    near = z < 2.0 * r
    zn = z[near]
    # both terms are written in the exact difference 2r - z, which keeps the
    # area continuous through z = 2r at roundoff level:
    # arccos(z/2r) == 2 arcsin(sqrt((2r - z)/(4r)))
    diff = 2.0 * r - zn
    angle = 2.0 * np.arcsin(np.sqrt(diff / (4.0 * r)))
    out[near] = (math.pi * r * r - 2.0 * r * r * angle
                 + 0.5 * zn * np.sqrt(diff * (2.0 * r + zn)))
    return float(out[0]) if scalar else out


def _nonneg_clamped(x: np.ndarray, name: str) -> np.ndarray:
    low = float(np.min(x))
    if low < -ACOS_CLAMP_WINDOW:
        raise DomainError(
            f"{name} is negative by {-low:.3e}, beyond the "
            f"{ACOS_CLAMP_WINDOW} roundoff window")
    return np.clip(x, 0.0, None)


def _direct_pieces(r: float, u_z: float):
    """Smooth integrand pieces of the angular lens integral.

    The integral of arccos(g(t)) t (1-t^2)^{-2} dt, with
    g(t) = (t^2+|C|^2-R^2)/(2t|C|), runs from max(r, inner_edge) to
    outer_edge.  Everything is evaluated in u = atanh(t), where the
    geometry is exact: with u_z = atanh(|z|) and u_r = atanh(r) the range
    is [max(u_r, |u_z - u_r|), u_z + u_r] by the tanh addition law, and the
    (1-t^2)^{-2} weight becomes sinh(u) cosh(u).  The substitutions
    u = end -+ w^2 at both endpoints remove the square-root behaviour of
    arccos where its argument reaches +-1.

    arccos(g) itself is computed as 2 atan2(sqrt(1-g), sqrt(1+g)) from the
    factorizations

        1 - g = (outer_edge - t)(t - s) / (2 t |C|),
        1 + g = (t + s)(t + outer_edge) / (2 t |C|),

    where s = |C| - R carries the sign of |z| - r and |s| = inner_edge.
    The differences ``outer_edge - t`` and ``t - inner_edge`` are formed
    through the tanh-difference identity
    tanh a - tanh b = sinh(a-b)/(cosh a cosh b), keeping full accuracy when
    the range crowds against the boundary of the unit disc.
    """
    u_r = math.atanh(r)
    u_in = abs(u_z - u_r)
    u_lo = max(u_r, u_in)
    u_hi = u_z + u_r
    if u_lo >= u_hi:
        return []
    sech2_z = 1.0 / math.cosh(u_z) ** 2
    denom = (1.0 - r * r) + r * r * sech2_z       # == 1 - |z|^2 r^2
    c = (1.0 - r * r) * math.tanh(u_z) / denom    # centre modulus |C|
    inner_edge = math.tanh(u_in)
    upper = math.tanh(u_hi)
    cosh_hi = math.cosh(u_hi)
    cosh_in = math.cosh(u_in)
    center_ge_radius = u_z >= u_r                  # sign of |C| - R

    def angular(u, du_hi, du_in):
        # du_hi = u_hi - u >= 0 and du_in = u - u_in >= 0, supplied exactly
        t = np.tanh(u)
        cosh_u = np.cosh(u)
        d_up = np.sinh(du_hi) / (cosh_hi * cosh_u)    # outer_edge - t
        d_in = np.sinh(du_in) / (cosh_in * cosh_u)    # t - inner_edge
        t_plus_in = t + inner_edge
        if center_ge_radius:
            one_minus_g = d_up * d_in
            one_plus_g = t_plus_in * (t + upper)
        else:
            one_minus_g = d_up * t_plus_in
            one_plus_g = d_in * (t + upper)
        scale = 2.0 * t * c
        one_minus_g = _nonneg_clamped(one_minus_g / scale, "1 - arccos argument")
        one_plus_g = _nonneg_clamped(one_plus_g / scale, "1 + arccos argument")
        acos = 2.0 * np.arctan2(np.sqrt(one_minus_g), np.sqrt(one_plus_g))
        return acos * np.sinh(u) * cosh_u

    span = u_hi - u_lo
    lo_to_in = u_lo - u_in            # 0 when the inner edge is the lower bound
    half = 0.5 * span

    def left(w):
        w2 = w * w
        return 2.0 * w * angular(u_lo + w2, span - w2, lo_to_in + w2)

    def right(w):
        w2 = w * w
        return 2.0 * w * angular(u_hi - w2, w2, (span - w2) + lo_to_in)

    w_mid = math.sqrt(half)
    return [(left, 0.0, w_mid), (right, 0.0, w_mid)]


def _lens_direct(r: float, z_modulus: float, quad: QuadratureConfig,
                 strict: bool = True, z_atanh: float | None = None) -> LensIntegralResult:
    if z_modulus == 0.0:
        return LensIntegralResult(0.0, 0.0)
    u_z = math.atanh(z_modulus) if z_atanh is None else z_atanh
    value, err = 0.0, 0.0
    for f, a, b in _direct_pieces(r, u_z):
        v, e = integrate_interval(f, a, b, quad, strict=strict)
        value += v
        err += e
    return LensIntegralResult(value, err)


def _lens_transformed(r: float, z_modulus: float, quad: QuadratureConfig,
                      strict: bool = True, z_atanh: float | None = None) -> LensIntegralResult:
    if z_modulus == 0.0:
        return LensIntegralResult(0.0, 0.0)
    u_z = math.atanh(z_modulus) if z_atanh is None else z_atanh
    u_r = math.atanh(r)
    if max(u_r, abs(u_z - u_r)) >= u_z + u_r:
        return LensIntegralResult(0.0, 0.0)
    z = math.tanh(u_z)
    sech2_z = 1.0 / math.cosh(u_z) ** 2
    denom = (1.0 - r * r) + r * r * sech2_z        # == 1 - z^2 r^2
    excess = (sech2_z - (1.0 - r * r)) / denom     # == (r^2 - z^2)/(1 - z^2 r^2)
    radius = sech2_z * r / denom
    center = (1.0 - r * r) * z / denom
    outer_sq = math.tanh(u_z + u_r) ** 2
    span = 4.0 * center * radius
    gap = sech2_z * (1.0 - r * r) / (1.0 + z * r) ** 2
    term_outer = excess / outer_sq
    # (1 + excess)/gap collapses to this cancellation-free closed form
    term_gap = (1.0 + r * r) * (1.0 + z * r) / ((1.0 - z * r) * (1.0 - r * r))
    v_rate = span / outer_sq
    u_rate = span / gap
    cut = (2.0 * r + z * (1.0 + r * r)) * (1.0 - z * r) ** 2 / (4.0 * r * sech2_z)
    u_max = math.asin(math.sqrt(min(1.0, cut)))

    def rational(u):
        s2 = np.sin(u) ** 2
        return term_outer / (1.0 - v_rate * s2) + term_gap / (1.0 + u_rate * s2)

    value, err = integrate_interval(rational, 0.0, u_max, quad, strict=strict)
    boundary = 0.0
    if u_z < 2.0 * u_r:                            # z < 2r/(1+r^2) == tanh(2 u_r)
        arg = z * (1.0 + r * r) / (2.0 * r)
        boundary = math.acos(min(1.0, arg)) / (1.0 - r * r)
    return LensIntegralResult(0.5 * (value - boundary), 0.5 * err)


def _validate_lens_args(r: float, z_modulus: float):
    if not 0.0 < r < 1.0:
        raise DomainError(f"r must lie in (0, 1), got {r}")
    if not 0.0 <= z_modulus < 1.0:
        raise DomainError(f"z_modulus must lie in [0, 1), got {z_modulus}")


def hyperbolic_lens_integral(r: float, z_modulus: float,
                             quad: QuadratureConfig = DEFAULT_QUAD) -> LensIntegralResult:
    """Angular lens integral I(|z|, r) of the hyperbolic count variance.

    I = integral of arccos((t^2+|C|^2-R^2)/(2t|C|)) * t/(1-t^2)^2 dt from
    max(r, inner_edge) to outer_edge, where (C, R) = image_disc(|z|, r).
    Geometrically 2*I is the hyperbolic area of D_r^c intersected with the
    image disc.  Returns exactly 0 when |z| = 0 (the image disc is D_r
    itself, so the region is empty) or when the range is empty.  Raises
    :class:`QuadratureFailure` if the tolerance cannot be certified.
    """
    _validate_lens_args(r, z_modulus)
    return _lens_direct(r, z_modulus, quad, strict=True)


def hyperbolic_lens_integral_transformed(r: float, z_modulus: float,
                                         quad: QuadratureConfig = DEFAULT_QUAD) -> LensIntegralResult:
    """The lens integral evaluated through its integration-by-parts form.

    Integration by parts turns the angular integral into a rational
    hypergeometric-type integral over the squared modulus plus an explicit
    boundary term at t = r, active exactly when |z| < 2r/(1+r^2):

        I = (1/4) * int_0^{min(1, cut)} [ B/F * (1 - V t)^{-1}
              + (1+B)/(1-F) * (1 + U t)^{-1} ] dt / sqrt(t (1-t))
            - arccos(|z| (1+r^2) / (2r)) / (2 (1-r^2)),

    with B = radius_sq_excess, F = outer_edge_sq, 1-F = gap,
    U = span_over_gap, V = span_over_outer_sq and cut = cut_fraction from
    :func:`image_disc`.  The substitution t = sin^2(u) removes both
    square-root endpoints.  Agrees with :func:`hyperbolic_lens_integral`;
    the two evaluations share no quadrature structure, which makes the pair
    a genuine cross-check.
    """
    _validate_lens_args(r, z_modulus)
    return _lens_transformed(r, z_modulus, quad, strict=True)
