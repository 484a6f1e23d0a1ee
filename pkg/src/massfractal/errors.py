"""Error taxonomy shared by every module in the package.

All errors derive from :class:`MassFractalError` so callers can catch the
whole family with one clause; the CLI maps subclasses onto exit codes.
"""

from __future__ import annotations


class MassFractalError(ValueError):
    """Base class for every domain error raised by this package."""


# --- mass-function construction and validation ---

class EmptyFocalElement(MassFractalError):
    """An empty subset was given strictly positive mass."""


class MassOutOfRange(MassFractalError):
    """A mass value lies outside [0, 1]."""


class SumNotOne(MassFractalError):
    """The masses do not sum to one within the validation tolerance."""


class DuplicateFocalElement(MassFractalError):
    """The same subset appears more than once in the input."""


class IndexOutOfFrame(MassFractalError):
    """A hypothesis index falls outside the frame of discernment."""


class FrameTooLarge(MassFractalError):
    """Explicit power-set enumeration would exceed the subset-count cap."""


class NotCardinalitySymmetric(MassFractalError):
    """Two focal elements of equal cardinality carry different masses."""


# --- entropy-side errors ---

class NegativeOrderUnsupported(MassFractalError):
    """Renyi entropy of a probability distribution requires order >= 0."""


class DegenerateSupport(MassFractalError):
    """A probability distribution with a single-point support has no
    information dimension (the log of the support size is zero)."""


# --- multifractal-side errors ---

class DegenerateFrame(MassFractalError):
    """A frame of size one leaves every rescaling denominator at zero."""


class NotAFocalElement(MassFractalError):
    """The queried subset carries no mass under the given mass function."""


class ZeroDenominator(MassFractalError):
    """The dimension denominator log2(sum of weighted terms) is zero."""


# --- oracle errors ---

class MassesNotNormalized(MassFractalError):
    """Exact rational masses handed to the oracle do not sum to one."""


# --- CLI errors ---

class UnknownTable(MassFractalError):
    """The requested table identifier is not one of T1..T6."""
