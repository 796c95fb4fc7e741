"""Auxiliary torus functions, sampled value sets and set-level verifiers.

For a sum ``f`` with natural-basis coordinates ``r_j`` the auxiliary function is

    F_f(sigma, x, k) = sum_j a_j e^{lambda_j sigma} exp(2 pi i (<r_j, x> + k_j / d_j))

with ``x`` in turns and ``k`` an admissible residue tuple. Along the special
choice ``x = t g / 2 pi``, ``k = 0`` it reproduces ``f(sigma + i t)``, and its
image over all parameters is the closure of the values of ``f`` on the
vertical line.

Every set here is a finite sample. Comparisons are Hausdorff distances with
resolution-dependent tolerances, never exact set equality.
"""

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import cKDTree
from scipy.stats import qmc

from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    EmptyCloud,
    NoCertificate,
    NotEquivalent,
)
from .equivalence import (
    _validate_parameters,
    admissible_residues,
    decide_equiv,
    natural_basis,
    residues_from_shift,
)
from .exponents import change_of_basis
from .rational import det
from .sums import TWO_PI, evaluate, evaluate_many

__all__ = [
    "DEFAULT_BUDGET",
    "ValueCloud",
    "eval_aux",
    "eval_aux_many",
    "sample_line",
    "sample_torus",
    "sample_torus_in_basis",
    "hausdorff",
    "directed_hausdorff",
    "grid_tolerance",
    "verify_prop3",
    "verify_lemma1",
    "verify_prop4",
    "verify_theorem1",
    "compare_strip_values",
    "interior_sigmas",
]

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class ValueCloud:
    """A finite sample of a value set in the complex plane.

    ``source`` records how the points were produced (``kind`` is ``"line"``,
    ``"torus"`` or ``"union"``) so ``regenerate`` can rebuild them.
    """

    points: np.ndarray
    source: dict
    sum: object = field(repr=False, compare=False)

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=complex).ravel()
        if pts.size == 0:
            raise EmptyCloud("a value cloud needs at least one point")
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return self.points.size

    def regenerate(self):
        src = dict(self.source)
        kind = src.pop("kind")
        if kind == "line":
            return sample_line(self.sum, **src)
        if kind == "torus":
            return sample_torus(self.sum, **src)
        raise ValueError(f"cannot regenerate a {kind!r} cloud")

    def to_csv(self, fh):
        """Write ``re,im`` rows plus the source parameters as trailing columns."""
        keys = sorted(self.source)
        fh.write(",".join(["re", "im"] + keys) + "\n")
        extra = ",".join(str(self.source[k]) for k in keys)
        for p in self.points:
            fh.write(f"{float(p.real)!r},{float(p.imag)!r},{extra}\n")


def _phase_matrix(rows):
    return np.array([[float(c) for c in r] for r in rows], dtype=float).reshape(
        len(rows), len(rows[0]) if rows and rows[0] else 0)


def eval_aux(f, sigma, x_turns, residues=None):
    """``F_f(sigma, x, residues)`` at one parameter point (natural basis)."""
    basis = natural_basis(f.exponents)
    residues = _validate_parameters(basis, x_turns, residues)
    f.check_sigma(sigma)
    R = _phase_matrix(basis.coord_matrix)
    x = np.array([float(v) for v in x_turns], dtype=float)
    k = np.array(residues, dtype=float) / np.array(basis.row_denominators, dtype=float)
    turns = (R @ x if R.size else np.zeros(len(f))) + k
    w = f.complex_coeffs * np.exp(f.frequency_values * sigma)
    return complex(np.sum(w * np.exp(1j * TWO_PI * turns)))


def eval_aux_many(f, sigma, X, residues=None, rows=None, dens=None):
    """``F`` over an array ``X`` of parameter points (shape ``(n, m)``).

    ``residues`` is one tuple or an array of shape ``(n, N)``. ``rows`` and
    ``dens`` select another coordinate system (default: natural basis).
    """
    f.check_sigma(sigma)
    if rows is None:
        basis = natural_basis(f.exponents)
        rows, dens = basis.coord_matrix, basis.row_denominators
    R = _phase_matrix(rows)
    X = np.atleast_2d(np.asarray(X, dtype=float))
    if X.shape[1] != R.shape[1]:
        raise DimensionMismatch(f"parameters have {X.shape[1]} columns, basis {R.shape[1]}")
    if residues is None:
        residues = np.zeros(len(rows))
    K = np.asarray(residues, dtype=float) / np.asarray(dens, dtype=float)
    turns = X @ R.T + K
    w = f.complex_coeffs * np.exp(f.frequency_values * sigma)
    return np.exp(1j * TWO_PI * turns) @ w


def sample_line(f, sigma0, t_max, step):
    """Values ``f(sigma0 + i t)`` for ``t = -t_max, -t_max + step, ..., t_max``."""
    if step <= 0 or t_max <= 0:
        raise ValueError("t_max and step must be positive")
    n = int(math.floor(2 * t_max / step + 1e-9))
    t = -t_max + step * np.arange(n + 1)
    pts = evaluate_many(f, sigma0, t)
    return ValueCloud(pts, {"kind": "line", "sigma0": sigma0, "t_max": t_max,
                            "step": step}, f)


def _parameter_points(m, grid_per_dim, method):
    if m == 0:
        return np.zeros((1, 0))
    if method == "grid":
        axis = np.arange(grid_per_dim) / grid_per_dim
        mesh = np.meshgrid(*([axis] * m), indexing="ij")
        return np.stack([g.ravel() for g in mesh], axis=1)
    if method == "halton":
        return qmc.Halton(d=m, scramble=False).random(grid_per_dim ** m)
    raise ValueError(f"unknown sampling method {method!r}")


def _torus_cloud(f, sigma0, rows, dens, grid_per_dim, residue_mode, method, budget):
    if grid_per_dim < 2:
        raise ValueError("grid_per_dim must be at least 2")
    m = len(rows[0]) if rows else 0
    if residue_mode == "all":
        tuples = admissible_residues(rows)
    elif residue_mode == "zero":
        tuples = [tuple(0 for _ in rows)]
    else:
        raise ValueError("residue_mode must be 'all' or 'zero'")
    size = grid_per_dim ** m * len(tuples)
    if size > budget:
        raise BudgetExceeded(f"{size} points exceeds the budget of {budget}")
    X = _parameter_points(m, grid_per_dim, method)
    pts = np.concatenate([eval_aux_many(f, sigma0, X, k, rows, dens) for k in tuples])
    bound = f.majorant(sigma0)
    if np.max(np.abs(pts)) > bound * (1 + 1e-12) + 1e-12:
        raise AssertionError("auxiliary values exceed the coefficient majorant")
    return pts


def sample_torus(f, sigma0, grid_per_dim, residue_mode="all", method="grid",
                 budget=DEFAULT_BUDGET):
    """Values of ``F_f(sigma0, ., .)`` on a deterministic parameter sample.

    ``x`` runs over the uniform grid ``{0, 1/n, ..., (n-1)/n}^m`` (or the
    first ``n^m`` Halton points with ``method="halton"``), crossed with every
    admissible residue tuple (``residue_mode="all"``) or residue 0 only.
    """
    f.check_sigma(sigma0)
    basis = natural_basis(f.exponents)
    pts = _torus_cloud(f, sigma0, basis.coord_matrix, basis.row_denominators,
                       grid_per_dim, residue_mode, method, budget)
    return ValueCloud(pts, {"kind": "torus", "sigma0": sigma0,
                            "grid_per_dim": grid_per_dim, "residue_mode": residue_mode,
                            "method": method, "budget": budget}, f)


def sample_torus_in_basis(f, change, sigma0, grid_per_dim, residue_mode="all",
                          method="grid", budget=DEFAULT_BUDGET):
    """Same as ``sample_torus`` but parameterised by another basis.

    Parameters are coordinates over ``change.other_basis`` and the residues are
    those induced by integer shifts in that basis.
    """
    f.check_sigma(sigma0)
    pts = _torus_cloud(f, sigma0, change.other_coords, change.other_denominators,
                       grid_per_dim, residue_mode, method, budget)
    return ValueCloud(pts, {"kind": "torus_other", "sigma0": sigma0,
                            "grid_per_dim": grid_per_dim, "residue_mode": residue_mode,
                            "method": method}, f)


def _points(c):
    pts = c.points if isinstance(c, ValueCloud) else np.asarray(c, dtype=complex).ravel()
    if pts.size == 0:
        raise EmptyCloud("empty point set")
    return np.column_stack([pts.real, pts.imag])


def directed_hausdorff(A, B, hint=0.05):
    """``max_{a in A} min_{b in B} |a - b|``.

    ``hint`` only speeds the search up: points are first matched within that
    radius, and the few that are not get an unbounded query.
    """
    a, b = _points(A), _points(B)
    tree = cKDTree(b)
    d, _ = tree.query(a, k=1, distance_upper_bound=hint)
    far = ~np.isfinite(d)
    if far.any():
        d[far], _ = tree.query(a[far], k=1)
    return float(np.max(d))


def hausdorff(A, B):
    """Symmetric Hausdorff distance between two point sets (Euclidean)."""
    return max(directed_hausdorff(A, B), directed_hausdorff(B, A))


def grid_tolerance(f, sigma0, grid_per_dim, rows=None):
    """Sampling-resolution bound ``3 * 2 pi * sum_j |a_j| e^{lambda_j sigma0} |r_j|_1 / n``.

    Pass several coordinate systems in ``rows`` (a list of row matrices) to
    take the row-wise maximum of the 1-norms.
    """
    if rows is None:
        rows = [natural_basis(f.exponents).coord_matrix]
    norms = np.max([[float(sum(abs(c) for c in r)) for r in R] for R in rows], axis=0)
    mods = np.array([float(c.abs) for c in f.coeffs])
    lip = float(np.sum(mods * np.exp(f.frequency_values * sigma0) * norms))
    return 3 * TWO_PI * lip / grid_per_dim


def verify_prop3(f1, f2, verdict, samples):
    """Check ``f2(sigma + i t) = F_{f1}(sigma, x0 + t g / 2 pi, residues)`` on samples.

    The parameter ``x0 + t g / 2 pi`` is reduced into ``[0, 1)^m`` and the
    integer part dropped by the reduction is folded into the residues.
    """
    if not verdict.equivalent or verdict.x0_turns is None:
        raise NoCertificate("an equivalent verdict with certificate is required")
    basis = natural_basis(f1.exponents)
    g = np.asarray(basis.basis_values, dtype=float)
    x0 = np.array([float(v) for v in verdict.x0_turns])
    dens = basis.row_denominators
    worst = 0.0
    for sigma, t in samples:
        y = x0 + t * g / TWO_PI
        shift = np.floor(y).astype(np.int64)
        carried = residues_from_shift(basis.coord_matrix, [int(s) for s in shift], dens)
        k = tuple((a + b) % d for a, b, d in zip(verdict.residues, carried, dens))
        lhs = evaluate(f2, sigma, t)
        rhs = eval_aux(f1, sigma, tuple(y - shift), k)
        worst = max(worst, abs(lhs - rhs))
    return {"check": "prop3", "samples": len(samples), "max_deviation": worst,
            "pass": worst < 1e-9}


def verify_lemma1(f, other_basis, sigma0, grid, tol=None, residue_mode="all"):
    """Compare auxiliary-function clouds built in the natural and in another basis."""
    basis = natural_basis(f.exponents)
    change = change_of_basis(basis, other_basis)
    natural = sample_torus(f, sigma0, grid, residue_mode)
    other = sample_torus_in_basis(f, change, sigma0, grid, residue_mode)
    if tol is None:
        tol = grid_tolerance(f, sigma0, grid, [basis.coord_matrix, change.other_coords])
    d = hausdorff(natural, other)
    return {"check": "lemma1", "grid": grid, "distance": d, "tolerance": tol,
            "unimodular": abs(det(change.matrix)) == 1, "pass": d < tol}


def verify_prop4(f, sigma0, t_max, step, grid, tol=None):
    """Sampled closure check: line values against the auxiliary torus cloud.

    Reports the directed distance line -> torus (containment; must sit within
    grid resolution), torus -> line (closure; shrinks as ``t_max`` grows) and
    whether the torus cloud respects the coefficient majorant.
    """
    line = sample_line(f, sigma0, t_max, step)
    torus = sample_torus(f, sigma0, grid)
    if tol is None:
        tol = grid_tolerance(f, sigma0, grid)
    into = directed_hausdorff(line, torus)
    back = directed_hausdorff(torus, line)
    bounded = bool(np.max(np.abs(torus.points)) <= f.majorant(sigma0) * (1 + 1e-12))
    return {"check": "prop4", "line_to_torus": into, "torus_to_line": back,
            "tolerance": tol, "bounded": bounded,
            "pass": into < tol and back < tol and bounded}


def interior_sigmas(sigma_lo, sigma_hi, steps):
    """``steps`` equally spaced points strictly inside ``(sigma_lo, sigma_hi)``."""
    if not sigma_lo < sigma_hi or steps < 1:
        raise ValueError("need sigma_lo < sigma_hi and at least one step")
    h = (sigma_hi - sigma_lo) / (steps + 1)
    return [sigma_lo + h * (i + 1) for i in range(steps)]


def _union_line(f, sigmas, t_max, step):
    pts = np.concatenate([sample_line(f, s, t_max, step).points for s in sigmas])
    return ValueCloud(pts, {"kind": "union", "sigmas": tuple(sigmas), "t_max": t_max,
                            "step": step}, f)


def verify_theorem1(f1, f2, sigma_lo, sigma_hi, sigma_steps, t_max, step, tol,
                    verdict=None):
    """Sampled check that two equivalent sums take the same values on a strip.

    Each cloud is the union of line samples over ``sigma_steps`` interior
    points of ``(sigma_lo, sigma_hi)``. Both directed Hausdorff distances must
    be below ``tol``. This is a one-sided, converging check: a finite stretch
    of line only approaches the closure of the values, so the distances shrink
    as ``t_max`` grows rather than vanish.

    Raises ``NotEquivalent`` for inequivalent inputs.
    """
    if verdict is None:
        verdict = decide_equiv(f1, f2)
    if not verdict.equivalent:
        raise NotEquivalent(f"sums are not equivalent ({verdict.reason}); "
                            "use compare_strip_values to measure them anyway")
    report = compare_strip_values(f1, f2, sigma_lo, sigma_hi, sigma_steps, t_max, step)
    report.update({"check": "theorem1", "tolerance": tol,
                   "pass": report["d_12"] < tol and report["d_21"] < tol})
    return report


def compare_strip_values(f1, f2, sigma_lo, sigma_hi, sigma_steps, t_max, step):
    """Directed distances between the strip-line clouds of any two sums.

    No equivalence is assumed and no verdict is drawn; ``verify_theorem1``
    is the checked variant.
    """
    sigmas = interior_sigmas(sigma_lo, sigma_hi, sigma_steps)
    for s in sigmas:
        f1.check_sigma(s)
        f2.check_sigma(s)
    c1 = _union_line(f1, sigmas, t_max, step)
    c2 = _union_line(f2, sigmas, t_max, step)
    d12 = directed_hausdorff(c1, c2)
    d21 = directed_hausdorff(c2, c1)
    return {"check": "compare", "sigmas": sigmas, "d_12": d12, "d_21": d21}
