"""Multifractal spectrum and multifractal dimension of mass functions.

A mass function spreads its unit of belief over subsets of the frame, and the
spread has a geometry.  Rescaling -log2 m(A) by log2(2**n - 1) gives each
focal element a coordinate y; counting how many focal elements share a mass
value, and rescaling the log of that count the same way, gives the spectrum
value f(y).  The multifractal dimension D_alpha compresses the same geometry
into a single order-indexed number

    D_alpha = [ 1/(1-alpha) * log2 sum_A (m(A)/(2**|A|-1))**alpha * (2**|A|-1) ]
              / [ log2 sum_A (2**|A|-1)**(alpha * m(A)) ]

whose alpha -> 1 limit has Deng entropy as its numerator.  On Bayesian mass
functions every |A| is 1, the weights collapse, and D_alpha reduces to the
Renyi information dimension; on the maximum-Deng-entropy family it climbs
toward log2(3) as the frame grows.

Numerics: numerator and denominator sums both run in the log2 domain with the
largest exponent factored out, because (m/(2**|A|-1))**alpha underflows for
large alpha on big frames and (2**|A|-1)**(alpha*m) overflows for large alpha
on masses near one.  A sum with a single term is returned exactly, with no
rounding beyond its own exponent arithmetic.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import FocalElement, MassFunction, ProfileBand
from .entropy import LIMIT_ONE_WINDOW, as_profile_bands, deng_entropy_from_profile
from .errors import DegenerateFrame, ZeroDenominator

# Focal elements whose masses differ by no more than this (relatively) are
# counted as sharing one mass value when the spectrum is grouped.
GROUPING_TOLERANCE = 1e-9


class DimensionBranch(enum.Enum):
    """Which formula produced a DimensionResult."""

    GENERAL = "general"
    LIMIT_ONE = "limit_one"


@dataclass(frozen=True)
class SpectrumPoint:
    """One group of focal elements sharing a mass value.

    Attributes
    ----------
    y:
        Rescaled mass exponent, (0 - log2 mass) / log2(2**n - 1).
    f:
        Rescaled group size, log2(multiplicity) / log2(2**n - 1).
    mass_value:
        The shared mass (smallest member when grouping was tolerant).
    multiplicity:
        Number of focal elements in the group.
    representative_cardinality:
        The common cardinality of the group's members, or None when the
        group mixes cardinalities.
    """

    y: float
    f: float
    mass_value: float
    multiplicity: int
    representative_cardinality: int | None = None


@dataclass(frozen=True)
class Spectrum:
    """All spectrum points of one mass function, sorted by ascending y."""

    frame_size: int
    points: tuple[SpectrumPoint, ...]

    @property
    def multiplicity_total(self) -> int:
        return sum(point.multiplicity for point in self.points)


@dataclass(frozen=True)
class DimensionResult:
    """One evaluated multifractal dimension.

    ``value`` equals ``numerator_bits / denominator_bits``; both sides of the
    ratio are kept so callers can inspect the scaling separately.
    """

    alpha: float
    value: float
    numerator_bits: float
    denominator_bits: float
    branch: DimensionBranch


@dataclass(frozen=True)
class SweepEntry:
    """One row of a dimension sweep: either a result or an error code."""

    alpha: float
    result: DimensionResult | None
    error: str | None


@dataclass(frozen=True)
class QuadraticEnvelope:
    """The asymptotic parabola -a (x - 0.585)(x - 1.585) over the spectrum.

    The roots sit at the limiting y values of the largest and smallest mass
    in the maximum-Deng-entropy family; the coefficient a grows with the
    central binomial weight of the frame.
    """

    a: float
    n: int
    root_low: float = 0.585
    root_high: float = 1.585

    def evaluate(self, x: float) -> float:
        # the trailing + 0.0 keeps the value at the roots a positive zero
        return -self.a * (x - self.root_low) * (x - self.root_high) + 0.0


ProfileLike = Iterable[ProfileBand] | Sequence[tuple[int, float, int]]


def _as_bands(profile: ProfileLike) -> list[ProfileBand]:
    return [ProfileBand(int(c), float(m), int(k)) for c, m, k in profile]


def _log2_full_range(n: int) -> float:
    if n < 2:
        raise DegenerateFrame(
            f"a frame of size {n} has log2(2**n - 1) = 0; no rescaling is possible"
        )
    return math.log2(2 ** n - 1)


def y_coordinate(m: MassFunction, element: FocalElement) -> float:
    """Rescaled mass exponent of one focal element of m.

    Raises :class:`DegenerateFrame` on one-hypothesis frames and
    :class:`NotAFocalElement` when the subset carries no mass.
    """
    scale = _log2_full_range(m.frame.size)
    mass = m.mass_of(element)
    return (0.0 - math.log2(mass)) / scale


def _spectrum_from_bands(
    bands: list[ProfileBand], n: int, grouping_tolerance: float
) -> Spectrum:
    scale = _log2_full_range(n)
    ordered = sorted(bands, key=lambda band: (band.mass, band.cardinality))
    groups: list[list[ProfileBand]] = []
    for band in ordered:
        if groups and band.mass - groups[-1][0].mass <= grouping_tolerance * band.mass:
            groups[-1].append(band)
        else:
            groups.append([band])
    points = []
    for group in groups:
        anchor = group[0].mass
        count = sum(band.multiplicity for band in group)
        cardinalities = {band.cardinality for band in group}
        representative = cardinalities.pop() if len(cardinalities) == 1 else None
        points.append(
            SpectrumPoint(
                y=(0.0 - math.log2(anchor)) / scale,
                f=math.log2(count) / scale,
                mass_value=anchor,
                multiplicity=count,
                representative_cardinality=representative,
            )
        )
    points.sort(key=lambda point: point.y)
    return Spectrum(frame_size=n, points=tuple(points))


def spectrum(m: MassFunction, grouping_tolerance: float = GROUPING_TOLERANCE) -> Spectrum:
    """Group the focal elements of m by mass and return the spectrum.

    Two masses count as "the same" when their relative difference is within
    ``grouping_tolerance``; each group becomes one :class:`SpectrumPoint`.
    Grouping is by mass alone, so focal elements of different cardinalities
    sharing a mass merge into a single point.
    """
    bands = [
        ProfileBand(element.cardinality, mass, 1) for element, mass in m.assignments
    ]
    return _spectrum_from_bands(bands, m.frame.size, grouping_tolerance)


def spectrum_from_profile(
    profile: ProfileLike, n: int, grouping_tolerance: float = GROUPING_TOLERANCE
) -> Spectrum:
    """Spectrum of a cardinality-symmetric mass function given as bands.

    Produces exactly what :func:`spectrum` would on the materialized mass
    function, but the cost scales with the number of cardinality bands, so
    frames far beyond the enumeration cap stay cheap.
    """
    return _spectrum_from_bands(_as_bands(profile), n, grouping_tolerance)


def _log2_power_sum(exponents: list[float]) -> float:
    """log2(sum_i 2**e_i), max-shifted; exact when only one term is present."""
    top = max(exponents)
    if len(exponents) == 1:
        return top
    return top + math.log2(math.fsum(2.0 ** (e - top) for e in exponents))


def _dimension_from_bands(bands: list[ProfileBand], alpha: float) -> DimensionResult:
    limit_one = abs(alpha - 1.0) < LIMIT_ONE_WINDOW

    # A lone focal element holding the whole unit of mass has the closed form
    # D_alpha = 1/alpha: both log sums collapse to multiples of the same
    # log2(2**c - 1), so the value is computed directly, independent of the
    # frame, rather than through a ratio that would wobble in the last bit.
    if len(bands) == 1 and bands[0].multiplicity == 1 and bands[0].mass == 1.0:
        log_weight = math.log2(2 ** bands[0].cardinality - 1)
        if log_weight == 0.0:
            raise ZeroDenominator(
                "a lone singleton of mass 1 has denominator log2(1) = 0"
            )
        if alpha == 0.0:
            raise ZeroDenominator("order 0 zeroes the denominator exponent")
        if limit_one:
            return DimensionResult(
                alpha=alpha,
                value=1.0,
                numerator_bits=log_weight,
                denominator_bits=log_weight,
                branch=DimensionBranch.LIMIT_ONE,
            )
        return DimensionResult(
            alpha=alpha,
            value=1.0 / alpha,
            numerator_bits=log_weight,
            denominator_bits=alpha * log_weight,
            branch=DimensionBranch.GENERAL,
        )

    log_weights = [math.log2(2 ** band.cardinality - 1) for band in bands]
    log_multiplicities = [math.log2(band.multiplicity) for band in bands]

    if limit_one:
        den_exponents = [
            band.mass * lw + lm
            for band, lw, lm in zip(bands, log_weights, log_multiplicities)
        ]
    else:
        den_exponents = [
            alpha * band.mass * lw + lm
            for band, lw, lm in zip(bands, log_weights, log_multiplicities)
        ]
    denominator_bits = _log2_power_sum(den_exponents)
    if denominator_bits == 0.0:
        raise ZeroDenominator("the weighted power sum in the denominator is 1")

    if limit_one:
        numerator_bits = deng_entropy_from_profile(bands)
        branch = DimensionBranch.LIMIT_ONE
    else:
        num_exponents = [
            alpha * (math.log2(band.mass) - lw) + lw + lm
            for band, lw, lm in zip(bands, log_weights, log_multiplicities)
        ]
        numerator_bits = _log2_power_sum(num_exponents) / (1.0 - alpha)
        branch = DimensionBranch.GENERAL

    return DimensionResult(
        alpha=alpha,
        value=numerator_bits / denominator_bits,
        numerator_bits=numerator_bits,
        denominator_bits=denominator_bits,
        branch=branch,
    )


def multifractal_dimension(m: MassFunction, alpha: float) -> DimensionResult:
    """Order-alpha multifractal dimension of a mass function.

    The order may be any real.  Orders within 1e-12 of 1 take the limit
    branch, whose numerator is the Deng entropy.  Cardinality-symmetric mass
    functions are evaluated through their profile bands automatically.

    Raises :class:`ZeroDenominator` when the denominator log vanishes (a
    lone singleton of mass one, or order zero on a lone focal element) and
    :class:`DegenerateFrame` on one-hypothesis frames.
    """
    if m.frame.size < 2:
        raise DegenerateFrame("the dimension needs a frame of at least two hypotheses")
    return _dimension_from_bands(as_profile_bands(m), float(alpha))


def dimension_from_profile(profile: ProfileLike, alpha: float) -> DimensionResult:
    """Multifractal dimension straight from (cardinality, mass, multiplicity)
    bands, for symmetric families too large to materialize."""
    return _dimension_from_bands(_as_bands(profile), float(alpha))


def dimension_sweep(m: MassFunction, alphas: Iterable[float]) -> list[SweepEntry]:
    """Evaluate the dimension at each order, collecting per-order errors.

    One entry comes back per requested order, in input order; an order that
    fails (zero denominator, degenerate frame) yields an entry carrying the
    error name instead of aborting the remaining orders.
    """
    entries: list[SweepEntry] = []
    for alpha in alphas:
        alpha = float(alpha)
        try:
            entries.append(SweepEntry(alpha, multifractal_dimension(m, alpha), None))
        except (ZeroDenominator, DegenerateFrame) as failure:
            entries.append(SweepEntry(alpha, None, type(failure).__name__))
    return entries


def dimension_sweep_from_profile(
    profile: ProfileLike, alphas: Iterable[float]
) -> list[SweepEntry]:
    """Profile-band twin of :func:`dimension_sweep`."""
    bands = _as_bands(profile)
    entries: list[SweepEntry] = []
    for alpha in alphas:
        alpha = float(alpha)
        try:
            entries.append(SweepEntry(alpha, _dimension_from_bands(bands, alpha), None))
        except (ZeroDenominator, DegenerateFrame) as failure:
            entries.append(SweepEntry(alpha, None, type(failure).__name__))
    return entries


def quadratic_envelope(n: int) -> QuadraticEnvelope:
    """The asymptotic quadratic envelope of the maximum-Deng-entropy
    spectrum for a frame of size n, with coefficient
    4 log2 C(n, floor(n/2)) / n and roots pinned at 0.585 and 1.585."""
    if n < 2:
        raise ValueError(f"the envelope needs a frame of at least 2, got {n}")
    a = 4.0 * math.log2(math.comb(n, n // 2)) / n
    return QuadraticEnvelope(a=a, n=n)


def asymptotic_anchor_points(n: int) -> tuple[tuple[float, float], ...]:
    """The three limiting spectrum points for the maximum-Deng-entropy
    family: zeros at y = 0.585 and y = 1.585, and the central-binomial
    apex at y = 1.085."""
    if n < 2:
        raise ValueError(f"anchor points need a frame of at least 2, got {n}")
    middle = math.log2(math.comb(n, n // 2)) / n
    return ((0.585, 0.0), (1.085, middle), (1.585, 0.0))
