"""Deciding *-equivalence of two exponential sums over the same exponents.

Two sums ``sum a_j e^{lambda_j s}`` and ``sum b_j e^{lambda_j s}`` are
equivalent when ``b_j = a_j exp(i psi(lambda_j))`` for a Q-linear map ``psi``.
Over the natural basis ``g`` with coordinates ``r_j`` this means: equal
moduli, equal zero pattern, and one real vector ``y`` (in turns) with

    phase(b_j) - phase(a_j) = <r_j, y>   (mod 1)   for every active j.

Verdicts report the certificate in basis-parameter form: ``x0 = y mod 1`` in
``[0, 1)^m``, the integer shift ``n = y - x0`` and the per-row residues
``k_j in [0, d_j)`` with ``k_j / d_j = <r_j, n> (mod 1)``.

The residues are never free per row. A residue tuple is *admissible* only
if one integer shift ``n`` induces it; see ``residues_from_shift`` and
``admissible_residues``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import floor, prod

import numpy as np

from .congruence import (
    DEFAULT_NUMERIC_TOL,
    Infeasible,
    PhaseSystem,
    lattice_distance,
    solve_integer_system,
    solve_phase_system,
)
from .errors import (
    DimensionMismatch,
    ExponentSetMismatch,
    InadmissibleResidues,
    MixedCoefficientModes,
    ResidueOutOfRange,
    ToleranceInExactMode,
)
from .exponents import natural_basis as _natural_basis
from .rational import denominator_lcm
from .sums import TWO_PI, ExactPolar, ExponentialSum, NumericComplex

__all__ = [
    "EquivVerdict",
    "decide_equiv",
    "decide_equiv_prop1_all_n",
    "check_verdict",
    "residues_from_shift",
    "shift_for_residues",
    "admissible_residues",
    "residue_group_bound",
    "generate_member",
    "translation_parameters",
    "align",
]


natural_basis = lru_cache(maxsize=256)(_natural_basis)


@dataclass(frozen=True)
class EquivVerdict:
    """Outcome of an equivalence decision.

    Attributes
    ----------
    equivalent : bool
    mode : {"exact", "numeric"}
    reason : str
        ``"equivalent"``, ``"support"`` (zero patterns differ), ``"modulus"``
        or ``"phase"`` (the congruence system is infeasible).
    x0_turns, shift, residues : tuple or None
        Certificate, present iff ``equivalent``.
    witness : tuple of int or None
        Integer kernel row over all ``N`` indices (zeros on inactive rows)
        proving phase infeasibility.
    index : int or None
        First offending index for ``"support"`` / ``"modulus"``.
    failing_n : int or None
        Truncation length at which the all-n oracle first failed.
    """

    equivalent: bool
    mode: str
    reason: str
    x0_turns: tuple = None
    shift: tuple = None
    residues: tuple = None
    witness: tuple = None
    index: int = None
    failing_n: int = None
    rows: tuple = field(default=None, repr=False, compare=False)

    def __bool__(self):
        return self.equivalent

    def as_dict(self):
        def enc(v):
            return str(v) if isinstance(v, Fraction) else v
        out = {"equivalent": self.equivalent, "mode": self.mode, "reason": self.reason}
        for name in ("x0_turns", "shift", "residues", "witness"):
            val = getattr(self, name)
            if val is not None:
                out[name] = [enc(v) for v in val]
        for name in ("index", "failing_n"):
            if getattr(self, name) is not None:
                out[name] = getattr(self, name)
        return out


def _check_pair(f1, f2):
    if f1.exponents != f2.exponents:
        raise ExponentSetMismatch("sums must share the same ordered exponent set")
    if f1.exact != f2.exact:
        raise MixedCoefficientModes("one sum is exact, the other numeric")


def _resolve_tol(exact, tol):
    if tol is None:
        return 0 if exact else DEFAULT_NUMERIC_TOL
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    if exact and tol != 0:
        raise ToleranceInExactMode("exact sums are compared with tol = 0")
    return tol


def _screen(f1, f2, tol, limit=None):
    """Zero-pattern and modulus checks; returns (active indices, theta) or a verdict."""
    exact = f1.exact
    mode = "exact" if exact else "numeric"
    n = len(f1) if limit is None else limit
    scale = max([float(c.abs) for c in f1.coeffs + f2.coeffs] + [0.0])
    active, theta = [], []
    for j in range(n):
        a, b = f1.coeffs[j], f2.coeffs[j]
        if exact:
            za, zb = a.is_zero, b.is_zero
        else:
            za, zb = a.abs <= tol * scale, b.abs <= tol * scale
        if za != zb:
            return EquivVerdict(False, mode, "support", index=j)
        if za:
            continue
        if exact:
            same = a.modulus == b.modulus
        else:
            same = abs(a.abs - b.abs) <= tol * max(a.abs, b.abs)
        if not same:
            return EquivVerdict(False, mode, "modulus", index=j)
        active.append(j)
        theta.append((b.turns() - a.turns()) % 1)
    return active, theta


def _certificate(rows, dens, y, exact):
    """Split ``y`` into ``x0 in [0,1)^m`` plus an integer shift and its residues."""
    if exact:
        shift = tuple(floor(v) for v in y)
        x0 = tuple(v - s for v, s in zip(y, shift))
    else:
        shift = tuple(int(floor(v)) for v in y)
        x0 = tuple(float(v) - s for v, s in zip(y, shift))
    return x0, shift, residues_from_shift(rows, shift, dens)


def _coordinate_rows(f, change):
    if change is None:
        basis = natural_basis(f.exponents)
        return basis.coord_matrix, basis.row_denominators
    if change.natural.exponents != f.exponents:
        raise ExponentSetMismatch("change of basis belongs to another exponent set")
    return change.other_coords, change.other_denominators


def decide_equiv(f1, f2, tol=None, change=None):
    """Decide whether ``f1`` and ``f2`` are *-equivalent.

    Parameters
    ----------
    f1, f2 : ExponentialSum
        Same exponent set, same coefficient mode.
    tol : float, optional
        Relative modulus tolerance and lattice-distance tolerance for numeric
        sums (default 1e-9). Must be 0/None for exact sums.
    change : ChangeOfBasis, optional
        Decide in the coordinates of another basis. The verdict is the same;
        the certificate is expressed in that basis.
    """
    _check_pair(f1, f2)
    exact = f1.exact
    tol = _resolve_tol(exact, tol)
    mode = "exact" if exact else "numeric"
    rows, dens = _coordinate_rows(f1, change)
    screened = _screen(f1, f2, tol)
    if isinstance(screened, EquivVerdict):
        return screened
    active, theta = screened
    system = PhaseSystem(tuple(rows[j] for j in active), tuple(theta),
                         (1,) * len(active))
    cert = solve_phase_system(system, tol)
    if isinstance(cert, Infeasible):
        witness = [0] * len(f1)
        for i, j in enumerate(active):
            witness[j] = cert.u[i]
        return EquivVerdict(False, mode, "phase", witness=tuple(witness), rows=rows)
    m = len(rows[0]) if rows else 0
    y = cert.y if active else (Fraction(0) if exact else 0.0,) * m
    x0, shift, residues = _certificate(rows, dens, y, exact)
    return EquivVerdict(True, mode, "equivalent", x0_turns=x0, shift=shift,
                        residues=residues, rows=rows)


def decide_equiv_prop1_all_n(f1, f2, tol=None):
    """Truncation-by-truncation oracle for ``decide_equiv``.

    For every ``n = 1..N`` the first ``n`` terms are checked on their own:
    natural basis of ``lambda_1..lambda_n``, unit moduli, one real parameter
    vector per truncation.
    """
    _check_pair(f1, f2)
    exact = f1.exact
    tol = _resolve_tol(exact, tol)
    mode = "exact" if exact else "numeric"
    N = len(f1)
    last = None
    for n in range(1, N + 1):
        screened = _screen(f1, f2, tol, limit=n)
        if isinstance(screened, EquivVerdict):
            return EquivVerdict(False, mode, screened.reason, index=screened.index,
                                failing_n=n)
        active, theta = screened
        prefix = type(f1.exponents)(f1.exponents.freqs[:n])
        rows = natural_basis(prefix).coord_matrix
        system = PhaseSystem(tuple(rows[j] for j in active), tuple(theta),
                             (1,) * len(active))
        cert = solve_phase_system(system, tol)
        if isinstance(cert, Infeasible):
            witness = [0] * N
            for i, j in enumerate(active):
                witness[j] = cert.u[i]
            return EquivVerdict(False, mode, "phase", witness=tuple(witness),
                                failing_n=n)
        last = (rows, cert.y if active else None)
    rows, y = last
    m = len(rows[0]) if rows else 0
    if y is None:
        y = (Fraction(0) if exact else 0.0,) * m
    dens = tuple(denominator_lcm(r) for r in rows)
    x0, shift, residues = _certificate(rows, dens, y, exact)
    return EquivVerdict(True, mode, "equivalent", x0_turns=x0, shift=shift,
                        residues=residues, rows=rows)


def check_verdict(f1, f2, verdict, tol=None):
    """Re-verify a verdict against the two sums by direct substitution."""
    exact = f1.exact
    tol = _resolve_tol(exact, tol)
    rows = verdict.rows
    if rows is None:
        rows = natural_basis(f1.exponents).coord_matrix
    if verdict.equivalent:
        screened = _screen(f1, f2, tol)
        if isinstance(screened, EquivVerdict):
            return False
        active, theta = screened
        dens = [denominator_lcm(r) for r in rows]
        for j in range(len(rows)):
            if not 0 <= verdict.residues[j] < dens[j]:
                return False
            # residue must be the one induced by the shared integer shift
            induced = sum((r * s for r, s in zip(rows[j], verdict.shift)), Fraction(0))
            if (induced - Fraction(verdict.residues[j], dens[j])) % 1 != 0:
                return False
        for i, j in enumerate(active):
            k_turns = Fraction(verdict.residues[j], dens[j])
            if exact:
                phase = sum((r * x for r, x in zip(rows[j], verdict.x0_turns)),
                            Fraction(0))
                if (theta[i] - phase - k_turns) % 1 != 0:
                    return False
            else:
                phase = sum(float(r) * x for r, x in zip(rows[j], verdict.x0_turns))
                diff = (theta[i] - phase - float(k_turns)) % 1.0
                if min(diff, 1 - diff) > tol:
                    return False
        return True
    if verdict.reason in ("support", "modulus"):
        redo = _screen(f1, f2, tol)
        return isinstance(redo, EquivVerdict) and redo.reason == verdict.reason
    screened = _screen(f1, f2, tol)
    if isinstance(screened, EquivVerdict):
        return False
    active, theta = screened
    u = verdict.witness
    if any(u[j] != 0 for j in range(len(u)) if j not in active):
        return False
    system = PhaseSystem(tuple(rows[j] for j in active), tuple(theta),
                         (1,) * len(active))
    sub_u = [u[j] for j in active]
    m = len(rows[0]) if rows else 0
    for col in range(m):
        if sum((Fraction(sub_u[i]) * system.A[i][col] for i in range(len(active))),
               Fraction(0)) != 0:
            return False
    return any(sub_u) and lattice_distance(sub_u, system) > tol


def residues_from_shift(rows, shift, dens=None):
    """Residues ``k_j = d_j * (<r_j, n> mod 1)`` induced by an integer shift ``n``."""
    if dens is None:
        dens = [denominator_lcm(r) for r in rows]
    out = []
    for r, d in zip(rows, dens):
        v = sum((c * int(s) for c, s in zip(r, shift)), Fraction(0)) % 1
        out.append(int(v * d))
    return tuple(out)


def shift_for_residues(rows, residues):
    """An integer shift inducing ``residues``, or None if the tuple is inadmissible."""
    N = len(rows)
    m = len(rows[0]) if rows else 0
    dens = [denominator_lcm(r) for r in rows]
    if N == 0:
        return ()
    # (d_j r_j) n + d_j t_j = k_j  for integers n, t.
    M = [[int(dens[j] * rows[j][k]) for k in range(m)]
         + [dens[j] if i == j else 0 for i in range(N)] for j in range(N)]
    ok, sol = solve_integer_system(M, [Fraction(int(k)) for k in residues])
    return tuple(sol[:m]) if ok else None


def admissible_residues(rows):
    """All residue tuples induced by integer shifts, in a deterministic order.

    This is the subgroup of ``prod_j Z/d_j`` generated by the images of the
    unit shifts.
    """
    dens = [denominator_lcm(r) for r in rows]
    m = len(rows[0]) if rows else 0
    gens = [residues_from_shift(rows, [int(i == k) for i in range(m)], dens)
            for k in range(m)]
    zero = tuple(0 for _ in rows)
    seen = {zero}
    order = [zero]
    frontier = [zero]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = tuple((a + b) % d for a, b, d in zip(v, g, dens))
                if w not in seen:
                    seen.add(w)
                    order.append(w)
                    nxt.append(w)
        frontier = nxt
    return sorted(order)


def residue_group_bound(rows):
    """``prod_j d_j``, the size of the ambient residue group."""
    return prod(denominator_lcm(r) for r in rows)


def _validate_parameters(basis, x_turns, residues):
    m, N = basis.dim, len(basis.coord_matrix)
    if len(x_turns) != m:
        raise DimensionMismatch(f"x has length {len(x_turns)}, basis has size {m}")
    if residues is None:
        residues = (0,) * N
    residues = tuple(int(k) for k in residues)
    if len(residues) != N:
        raise DimensionMismatch(f"{len(residues)} residues for {N} frequencies")
    for j, (k, d) in enumerate(zip(residues, basis.row_denominators)):
        if not 0 <= k < d:
            raise ResidueOutOfRange(f"residue {k} at row {j} not in [0, {d})")
    return residues


def generate_member(f, x_turns, residues=None):
    """Member of the equivalence class of ``f`` with parameters ``x`` and residues.

    ``b_j = a_j exp(2 pi i (<r_j, x> + k_j / d_j))``. Exact sums with
    rational ``x`` stay exact; float ``x`` gives a numeric sum.

    Raises ``InadmissibleResidues`` when no single integer shift induces the
    residue tuple: such coefficients are generally *not* equivalent to ``f``.
    """
    basis = natural_basis(f.exponents)
    residues = _validate_parameters(basis, x_turns, residues)
    if shift_for_residues(basis.coord_matrix, residues) is None:
        raise InadmissibleResidues(
            f"residues {residues} are not induced by any integer shift")
    exact_x = all(isinstance(x, (int, Fraction)) for x in x_turns)
    rows, dens = basis.coord_matrix, basis.row_denominators
    out = []
    for a, r, k, d in zip(f.coeffs, rows, residues, dens):
        if exact_x:
            turn = sum((c * Fraction(x) for c, x in zip(r, x_turns)), Fraction(0)) \
                + Fraction(k, d)
        else:
            turn = float(sum(float(c) * float(x) for c, x in zip(r, x_turns))) + k / d
        if f.exact and exact_x:
            out.append(ExactPolar(a.modulus, a.phase_turns + turn))
        else:
            z = complex(a) * np.exp(1j * TWO_PI * float(turn))
            out.append(NumericComplex(z.real, z.imag))
    return f.with_coeffs(out)


def translation_parameters(basis, t0):
    """Parameters ``(x, residues)`` with ``F(sigma, x, residues) = f(sigma + i t0)``.

    ``t0 g / 2 pi`` is reduced into ``[0, 1)^m``; the integer part it drops
    is carried into the residues.
    """
    y = np.asarray(basis.basis_values, dtype=float) * float(t0) / TWO_PI
    shift = np.floor(y).astype(np.int64)
    return tuple(float(v) for v in y - shift), residues_from_shift(
        basis.coord_matrix, [int(s) for s in shift], basis.row_denominators)


def align(f, union):
    """Re-express ``f`` over a larger exponent set, padding with zero coefficients."""
    index = {fr.coords: j for j, fr in enumerate(f.exponents)}
    if union.generators != f.exponents.generators:
        raise ExponentSetMismatch("union uses a different generator set")
    missing = set(index) - {fr.coords for fr in union}
    if missing:
        raise ExponentSetMismatch("union does not contain every frequency of f")
    zero = ExactPolar(0) if f.exact else NumericComplex(0.0, 0.0)
    coeffs = [f.coeffs[index[fr.coords]] if fr.coords in index else zero for fr in union]
    return ExponentialSum(union, tuple(coeffs), f.strip, allow_zero=True)
