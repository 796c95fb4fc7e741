"""Finite exponential sums ``f(s) = sum_j a_j exp(lambda_j s)``.

Coefficients come in two flavours that cannot be mixed inside one sum:
``ExactPolar`` (rational modulus, rational phase in turns) and
``NumericComplex`` (a pair of floats). Exact coefficients keep the equivalence
decision in pure rational arithmetic.
"""

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import (
    BadDiscretization,
    DimensionMismatch,
    MixedCoefficientModes,
    OutsideStrip,
)
from .exponents import ExponentSet, Frequency
from .rational import as_fraction

__all__ = [
    "ExactPolar",
    "NumericComplex",
    "ExponentialSum",
    "evaluate",
    "evaluate_many",
    "recover_coefficient",
]

TWO_PI = 2 * math.pi


@dataclass(frozen=True)
class ExactPolar:
    """``modulus * exp(2 pi i phase_turns)`` with both parts rational."""

    modulus: Fraction
    phase_turns: Fraction = Fraction(0)

    def __post_init__(self):
        mod = as_fraction(self.modulus)
        if mod < 0:
            raise ValueError("modulus must be nonnegative")
        phase = as_fraction(self.phase_turns) % 1 if mod else Fraction(0)
        object.__setattr__(self, "modulus", mod)
        object.__setattr__(self, "phase_turns", phase)

    exact = True

    @property
    def is_zero(self):
        return self.modulus == 0

    @property
    def abs(self):
        return self.modulus

    def turns(self):
        return self.phase_turns

    def __complex__(self):
        if self.modulus == 0:
            return 0j
        return float(self.modulus) * cmath.exp(1j * TWO_PI * float(self.phase_turns))


@dataclass(frozen=True)
class NumericComplex:
    re: float
    im: float = 0.0

    def __post_init__(self):
        re, im = float(self.re), float(self.im)
        if not (math.isfinite(re) and math.isfinite(im)):
            raise ValueError("coefficient must be finite")
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    exact = False

    @property
    def is_zero(self):
        return self.re == 0 and self.im == 0

    @property
    def abs(self):
        return math.hypot(self.re, self.im)

    def turns(self):
        """Principal argument in turns, mapped into ``[0, 1)``."""
        t = math.atan2(self.im, self.re) / TWO_PI
        return t + 1 if t < 0 else t

    def __complex__(self):
        return complex(self.re, self.im)


def _coerce_coefficient(c):
    if isinstance(c, (ExactPolar, NumericComplex)):
        return c
    if isinstance(c, complex):
        return NumericComplex(c.real, c.imag)
    if isinstance(c, float):
        return NumericComplex(c, 0.0)
    if isinstance(c, (int, Fraction)):
        return ExactPolar(abs(Fraction(c)), Fraction(1, 2) if c < 0 else Fraction(0))
    raise TypeError(f"cannot interpret {c!r} as a coefficient")


@dataclass(frozen=True)
class ExponentialSum:
    """A finite exponential sum over an ordered exponent set.

    Parameters
    ----------
    exponents : ExponentSet
    coeffs : sequence
        ``ExactPolar`` / ``NumericComplex``; ints and Fractions become exact
        polar coefficients, floats and complex numbers numeric ones.
    strip : (alpha, beta), optional
        Vertical strip ``alpha < Re s < beta`` the sum is attached to.
    allow_zero : bool
        The all-zero sum must be asked for explicitly.
    """

    exponents: ExponentSet
    coeffs: tuple
    strip: tuple = None
    allow_zero: bool = field(default=False, compare=False)

    def __post_init__(self):
        coeffs = tuple(_coerce_coefficient(c) for c in self.coeffs)
        if len(coeffs) != len(self.exponents):
            raise DimensionMismatch(
                f"{len(coeffs)} coefficients for {len(self.exponents)} frequencies")
        if len({c.exact for c in coeffs}) > 1:
            raise MixedCoefficientModes("exact and numeric coefficients in one sum")
        if not self.allow_zero and all(c.is_zero for c in coeffs):
            raise ValueError("zero sum; pass allow_zero=True to build it")
        strip = self.strip
        if strip is not None:
            alpha, beta = float(strip[0]), float(strip[1])
            if not alpha < beta:
                raise ValueError("strip needs alpha < beta")
            strip = (alpha, beta)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "strip", strip)

    @classmethod
    def from_polar(cls, exponents, pairs, strip=None):
        """Build from ``(modulus, phase_turns)`` pairs."""
        return cls(exponents, tuple(ExactPolar(m, p) for m, p in pairs), strip)

    @classmethod
    def from_complex(cls, exponents, values, strip=None):
        return cls(exponents, tuple(NumericComplex(complex(v).real, complex(v).imag)
                                    for v in values), strip)

    @classmethod
    def zero(cls, exponents, exact=True, strip=None):
        c = ExactPolar(0) if exact else NumericComplex(0.0, 0.0)
        return cls(exponents, (c,) * len(exponents), strip, allow_zero=True)

    def __len__(self):
        return len(self.coeffs)

    @property
    def exact(self):
        return bool(self.coeffs) and self.coeffs[0].exact

    @property
    def complex_coeffs(self):
        return np.array([complex(c) for c in self.coeffs], dtype=complex)

    @property
    def frequency_values(self):
        return np.array(self.exponents.values, dtype=float)

    def with_coeffs(self, coeffs):
        return ExponentialSum(self.exponents, tuple(coeffs), self.strip,
                              allow_zero=True)

    def check_sigma(self, sigma):
        if self.strip is not None:
            alpha, beta = self.strip
            if not alpha < sigma < beta:
                raise OutsideStrip(f"sigma={sigma} outside strip ({alpha}, {beta})")

    def majorant(self, sigma):
        """``sum_j |a_j| exp(lambda_j sigma)``, an upper bound for ``|f|`` on the line."""
        mods = np.array([float(c.abs) for c in self.coeffs])
        return float(np.sum(mods * np.exp(self.frequency_values * sigma)))

    def __call__(self, s):
        s = complex(s)
        return evaluate(self, s.real, s.imag)


def evaluate(f, sigma, t):
    """``f(sigma + i t)`` as a Python complex."""
    f.check_sigma(sigma)
    lam = f.frequency_values
    a = f.complex_coeffs
    return complex(np.sum(a * np.exp(lam * sigma) * np.exp(1j * lam * t)))


def evaluate_many(f, sigma, t):
    """Vectorised ``f(sigma + i t)`` over an array of ``t``."""
    f.check_sigma(sigma)
    t = np.asarray(t, dtype=float)
    lam = f.frequency_values
    weights = f.complex_coeffs * np.exp(lam * sigma)
    out = np.zeros(t.shape, dtype=complex)
    for w, l in zip(weights, lam):
        if w != 0:
            out += w * np.exp(1j * l * t)
    return out


def recover_coefficient(f, lam, sigma, T, step):
    """Bohr mean ``(1/2T) int_{-T}^{T} f(sigma+it) e^{-i lam t} dt * e^{-lam sigma}``.

    Trapezoidal rule on a uniform grid. Tends to ``a_j`` when ``lam`` is the
    frequency ``lambda_j`` and to 0 for a frequency absent from the sum, with
    error of order ``1 / (T * gap)``.
    """
    f.check_sigma(sigma)
    if T <= 0 or step <= 0:
        raise BadDiscretization("T and step must be positive")
    lam_value = lam.value if isinstance(lam, Frequency) else float(lam)
    top = max([abs(lam_value)] + [abs(v) for v in f.exponents.values])
    if top > 0 and step >= 1 / top:
        raise BadDiscretization(f"step {step} must be below 1/max|lambda| = {1 / top}")
    if all(c.is_zero for c in f.coeffs):
        return 0j
    n = int(round(2 * T / step))
    t = np.linspace(-T, T, n + 1)
    values = evaluate_many(f, sigma, t) * np.exp(-1j * lam_value * t)
    mean = np.trapezoid(values, t) / (2 * T)
    return complex(mean * math.exp(-lam_value * sigma))
