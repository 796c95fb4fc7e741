"""Frequencies as exact rational vectors, and natural-basis computations.

A frequency is never handled as a bare real number. The user declares a small
set of *ground generators* (``1``, ``sqrt(2)``, ``log 3`` ...) that are assumed
linearly independent over Q, and each frequency is a rational coordinate vector
over them. Rational dependence between frequencies then reduces to exact
linear algebra over ``Fraction``.
"""

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .errors import DimensionMismatch, EmptyExponentSet, NotABasis
from .rational import (
    as_fraction,
    denominator_lcm,
    express,
    inverse,
    rank,
    vecmat,
)

__all__ = [
    "DEFAULT_PRECISION",
    "GroundGeneratorSet",
    "Frequency",
    "ExponentSet",
    "BasisData",
    "ChangeOfBasis",
    "natural_basis",
    "change_of_basis",
]

#: Mantissa bits used when parsing generator values.
DEFAULT_PRECISION = 64


@dataclass(frozen=True)
class GroundGeneratorSet:
    """Ordered, immutable list of named real generators.

    Parameters
    ----------
    entries : sequence of (symbol, value)
        ``value`` is a decimal string (or anything ``mpmath.mpf`` accepts).
    precision : int
        Working precision in bits for the numeric values.

    The generators are *declared* independent over Q. That declaration is not
    checked; detecting integer relations is out of scope.
    """

    entries: tuple
    precision: int = DEFAULT_PRECISION
    declared_independent: bool = field(default=True, init=False)
    values: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        entries = tuple((str(sym), str(val)) for sym, val in self.entries)
        if not entries:
            raise ValueError("at least one generator is required")
        symbols = [s for s, _ in entries]
        if len(set(symbols)) != len(symbols):
            raise ValueError(f"duplicate generator symbols in {symbols}")
        with mpmath.workprec(self.precision):
            values = tuple(mpmath.mpf(v) for _, v in entries)
        for (sym, _), v in zip(entries, values):
            if not mpmath.isfinite(v) or v == 0:
                raise ValueError(f"generator {sym!r} must be finite and nonzero")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "values", values)

    def __len__(self):
        return len(self.entries)

    @property
    def symbols(self):
        return tuple(s for s, _ in self.entries)

    def with_precision(self, precision):
        return GroundGeneratorSet(self.entries, precision)

    def frequency(self, coords):
        return Frequency(coords, self)


@dataclass(frozen=True)
class Frequency:
    """A real frequency ``sum_k coords[k] * generators[k]`` with rational coords."""

    coords: tuple
    generators: GroundGeneratorSet
    cached_value: object = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        coords = tuple(as_fraction(c) for c in self.coords)
        if len(coords) != len(self.generators):
            raise DimensionMismatch(
                f"frequency has {len(coords)} coordinates, "
                f"generator set has {len(self.generators)}")
        object.__setattr__(self, "coords", coords)
        with mpmath.workprec(self.generators.precision):
            value = mpmath.fsum(
                mpmath.mpf(c.numerator) / c.denominator * g
                for c, g in zip(coords, self.generators.values))
        object.__setattr__(self, "cached_value", value)

    @property
    def value(self):
        """The frequency as a Python float."""
        return float(self.cached_value)

    def is_zero(self):
        return all(c == 0 for c in self.coords)


@dataclass(frozen=True)
class ExponentSet:
    """Ordered set of distinct frequencies over one generator set."""

    freqs: tuple

    def __post_init__(self):
        freqs = tuple(self.freqs)
        if freqs:
            gens = freqs[0].generators
            if any(f.generators != gens for f in freqs):
                raise ValueError("all frequencies must share one generator set")
            seen = set()
            for j, f in enumerate(freqs):
                if f.coords in seen:
                    raise ValueError(f"frequency {j} is a repeat")
                seen.add(f.coords)
        object.__setattr__(self, "freqs", freqs)

    @classmethod
    def from_coords(cls, generators, rows):
        return cls(tuple(Frequency(tuple(r), generators) for r in rows))

    def __len__(self):
        return len(self.freqs)

    def __iter__(self):
        return iter(self.freqs)

    def __getitem__(self, j):
        return self.freqs[j]

    @property
    def generators(self):
        return self.freqs[0].generators if self.freqs else None

    @property
    def values(self):
        return [f.value for f in self.freqs]


@dataclass(frozen=True)
class BasisData:
    """The natural basis of an exponent set and coordinates over it.

    Attributes
    ----------
    exponents : ExponentSet
    basis_indices : tuple of int
        Positions ``j`` (0-based) of the frequencies chosen as basis elements.
    coord_matrix : tuple of tuple of Fraction
        Row ``j`` holds the coordinates of frequency ``j`` over the basis.
    integral : bool
    row_denominators : tuple of int
        Denominator lcm ``d_j`` of each row.
    """

    exponents: ExponentSet
    basis_indices: tuple
    coord_matrix: tuple
    integral: bool
    row_denominators: tuple

    @property
    def dim(self):
        return len(self.basis_indices)

    @property
    def basis(self):
        return [self.exponents[j] for j in self.basis_indices]

    @property
    def basis_values(self):
        return [self.exponents[j].value for j in self.basis_indices]

    @property
    def moduli(self):
        """Row moduli ``1/d_j``."""
        return tuple(Fraction(1, d) for d in self.row_denominators)


def natural_basis(exponents):
    """Greedy left-to-right selection of a Q-basis from the frequencies themselves.

    Each frequency is either a rational combination of the basis elements chosen
    so far, or it becomes the next basis element. Zero frequencies are never
    selected and get a zero row.

    >>> gens = GroundGeneratorSet((("1", "1"), ("r2", "1.41421356237309504880")))
    >>> b = natural_basis(ExponentSet.from_coords(gens, [(1, 0), (0, 1), (1, 1)]))
    >>> b.basis_indices, [list(map(int, r)) for r in b.coord_matrix]
    ((0, 1), [[1, 0], [0, 1], [1, 1]])
    """
    if len(exponents) == 0:
        raise EmptyExponentSet("the exponent set is empty")
    chosen = []  # generator coordinates of the selected frequencies
    indices = []
    partial_rows = []
    for j, freq in enumerate(exponents):
        if freq.is_zero():
            partial_rows.append([])
            continue
        coeffs = express(chosen, freq.coords)
        if coeffs is None:
            chosen.append(freq.coords)
            indices.append(j)
            coeffs = [Fraction(0)] * (len(chosen) - 1) + [Fraction(1)]
        partial_rows.append(coeffs)
    m = len(indices)
    rows = tuple(tuple(r) + (Fraction(0),) * (m - len(r)) for r in partial_rows)
    dens = tuple(denominator_lcm(r) for r in rows)
    return BasisData(
        exponents=exponents,
        basis_indices=tuple(indices),
        coord_matrix=rows,
        integral=all(d == 1 for d in dens),
        row_denominators=dens,
    )


@dataclass(frozen=True)
class ChangeOfBasis:
    """Passage from the natural basis ``g`` to another basis ``h``.

    Row ``k`` of ``matrix`` gives ``h_k`` over ``g``; ``other_coords`` row ``j``
    gives frequency ``j`` over ``h``, so ``coord_matrix[j] == other_coords[j] @ T``.
    """

    natural: BasisData
    other_basis: tuple
    matrix: tuple
    inverse_matrix: tuple
    other_coords: tuple

    @property
    def other_denominators(self):
        return tuple(denominator_lcm(s) for s in self.other_coords)

    def shift(self, p):
        """Image ``T p`` of an integer shift given in natural coordinates."""
        return tuple(sum((t * Fraction(x) for t, x in zip(row, p)), Fraction(0))
                     for row in self.matrix)

    def to_other(self, x):
        """Natural-basis parameters ``x`` mapped to other-basis parameters ``T x``."""
        return tuple(sum(t * xi for t, xi in zip(row, x)) for row in self.matrix)


def change_of_basis(natural, other_basis):
    """Express ``other_basis`` over the natural basis and re-coordinatize Λ.

    Raises ``NotABasis`` unless ``other_basis`` is a Q-basis of the same space.
    """
    other = tuple(other_basis)
    m = natural.dim
    if len(other) != m:
        raise NotABasis(f"need {m} basis elements, got {len(other)}")
    gens = natural.exponents.generators
    span = [f.coords for f in natural.basis]
    T = []
    for k, h in enumerate(other):
        if h.generators != gens:
            raise NotABasis(f"element {k} uses a different generator set")
        t = express(span, h.coords)
        if t is None:
            raise NotABasis(f"element {k} lies outside the span of the exponents")
        T.append(t)
    if m and rank(T) < m:
        raise NotABasis("elements are linearly dependent")
    T_inv = inverse(T) if m else []
    S = tuple(tuple(vecmat(list(r), T_inv)) if m else () for r in natural.coord_matrix)
    return ChangeOfBasis(
        natural=natural,
        other_basis=other,
        matrix=tuple(tuple(r) for r in T),
        inverse_matrix=tuple(tuple(r) for r in T_inv),
        other_coords=S,
    )
