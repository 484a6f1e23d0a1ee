"""Extended-precision reference evaluator.

Everything here recomputes the package's headline quantities from scratch at
120 working bits via mpmath, taking exact rational masses as input.  The test
suite uses these results as the trusted side of every tolerance check, so this
module deliberately shares no numeric code with the fast paths: sums run
directly over cardinality classes in linear space, with no log-domain
rearrangement.

A "profile" here is simply a list of ``(cardinality, mass, multiplicity)``
terms.  Cardinalities may repeat across terms, which is how asymmetric mass
functions are fed in: one term per focal element with multiplicity one.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from mpmath import mp

from .errors import MassesNotNormalized, MassOutOfRange, ZeroDenominator

# Working precision in bits.  Results are reported as doubles; 120 bits keeps
# well over 50 accurate fractional bits through every summation in scope.
ORACLE_PRECISION_BITS = 120

RationalLike = Union[int, str, float, Fraction]


class ExactMass(Fraction):
    """An exact rational mass, constrained to (0, 1] and kept in lowest terms.

    Accepts anything :class:`fractions.Fraction` accepts; note that floats
    convert to their exact binary value, which is precisely what the
    cross-checks want when mirroring a double-precision mass.
    """

    def __new__(cls, numerator: RationalLike, denominator: int | None = None) -> "ExactMass":
        if denominator is None:
            self = super().__new__(cls, numerator)
        else:
            self = super().__new__(cls, numerator, denominator)
        if not 0 < self <= 1:
            raise MassOutOfRange(f"exact mass {self} lies outside (0, 1]")
        return self


ProfileTerm = tuple[int, RationalLike, int]


def _exact_terms(profile: Iterable[ProfileTerm]) -> list[tuple[int, ExactMass, int]]:
    terms = []
    for cardinality, mass, multiplicity in profile:
        if cardinality < 1:
            raise ValueError(f"cardinality must be positive, got {cardinality}")
        if multiplicity < 1:
            raise ValueError(f"multiplicity must be positive, got {multiplicity}")
        terms.append((cardinality, ExactMass(mass), multiplicity))
    if not terms:
        raise MassesNotNormalized("empty profile carries no mass")
    total = sum(Fraction(mass) * multiplicity for _, mass, multiplicity in terms)
    if total != 1:
        raise MassesNotNormalized(f"exact masses sum to {total}, not 1")
    return terms


def _to_mpf(value: Fraction):
    return mp.mpf(value.numerator) / mp.mpf(value.denominator)


def _deng_bits(terms: Sequence[tuple[int, ExactMass, int]]):
    acc = mp.mpf(0)
    for cardinality, mass, multiplicity in terms:
        m = _to_mpf(mass)
        weight = mp.mpf(2 ** cardinality - 1)
        acc += multiplicity * m * mp.log(weight / m, 2)
    return acc


def oracle_deng_entropy(profile: Iterable[ProfileTerm]) -> float:
    """Deng entropy in bits, evaluated at 120 working bits.

    ``profile`` lists ``(cardinality, exact mass, multiplicity)`` terms whose
    masses must sum to exactly one as rationals.
    """
    with mp.workprec(ORACLE_PRECISION_BITS):
        terms = _exact_terms(profile)
        return float(_deng_bits(terms))


def oracle_dimension(profile: Iterable[ProfileTerm], alpha: RationalLike) -> float:
    """Order-alpha multifractal dimension, evaluated at 120 working bits.

    The order is taken as an exact rational; ``alpha == 1`` routes to the
    limit form whose numerator is the Deng entropy.  Raises
    :class:`ZeroDenominator` when the denominator log vanishes (a lone
    singleton focal element of mass one, or order zero on such input).
    """
    order = Fraction(alpha)
    with mp.workprec(ORACLE_PRECISION_BITS):
        terms = _exact_terms(profile)

        den_sum = mp.mpf(0)
        for cardinality, mass, multiplicity in terms:
            weight = mp.mpf(2 ** cardinality - 1)
            exponent = _to_mpf(order * mass)
            den_sum += multiplicity * mp.power(weight, exponent)
        denominator = mp.log(den_sum, 2)
        if denominator == 0:
            raise ZeroDenominator("denominator log2 of the weighted sum is zero")

        if order == 1:
            numerator = _deng_bits(terms)
        else:
            a = _to_mpf(order)
            num_sum = mp.mpf(0)
            for cardinality, mass, multiplicity in terms:
                m = _to_mpf(mass)
                weight = mp.mpf(2 ** cardinality - 1)
                num_sum += multiplicity * mp.power(m / weight, a) * weight
            numerator = mp.log(num_sum, 2) / _to_mpf(1 - order)

        return float(numerator / denominator)
