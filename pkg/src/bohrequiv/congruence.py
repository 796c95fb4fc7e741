"""Feasibility of phase congruences ``A y = theta (mod mu)`` with certificates.

Phases are measured in turns (1 turn = 2*pi radians). A system asks for a real
vector ``y`` and an integer vector ``k`` with ``A y + diag(mu) k = theta``.

The decision is exact: eliminate ``y`` through an integer basis ``U`` of the
left kernel of ``A``, then ask whether ``U theta`` lies in the lattice spanned
by the columns of ``U diag(mu)``. The lattice question is settled by a column
Hermite normal form over Python integers. In exact mode (rational ``theta``) no
float ever enters; in numeric mode only the final right-hand side is a float
and integrality is judged up to ``tol``.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd

from .errors import DimensionMismatch, ToleranceInExactMode
from .rational import (
    as_fraction,
    denominator_lcm,
    primitive_integer_row,
    rref,
)

__all__ = [
    "DEFAULT_NUMERIC_TOL",
    "row_modulus",
    "xgcd",
    "column_hnf",
    "solve_integer_system",
    "PhaseSystem",
    "Feasible",
    "Infeasible",
    "solve_phase_system",
    "lattice_distance",
    "check_certificate",
]

DEFAULT_NUMERIC_TOL = 1e-9


def row_modulus(row):
    """Generator ``1/d`` of the subgroup ``{<row, n> mod 1 : n integer}`` of Q/Z.

    ``d`` is the lcm of the denominators; integral and zero rows give 1.
    """
    return Fraction(1, denominator_lcm(row))


def xgcd(a, b):
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``.

    When ``b`` divides ``a`` the answer is ``(|b|, 0, sign(b))``.
    """
    if b != 0 and a % b == 0:
        return abs(b), 0, (1 if b > 0 else -1)
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def column_hnf(M):
    """Column-style Hermite normal form of a full-row-rank integer matrix.

    Returns ``(H, V)`` with ``M V == H``, ``V`` unimodular, and ``H`` zero past
    column ``r`` (the row count). The leading ``r x r`` block is lower
    triangular with positive diagonal and entries left of each diagonal
    reduced into ``[0, diagonal)``.
    """
    r = len(M)
    n = len(M[0]) if r else 0
    H = [list(map(int, row)) for row in M]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def combine(i, j, s, t, u, v):
        # (col_i, col_j) <- (s col_i + t col_j, u col_i + v col_j)
        for X in (H, V):
            for row in X:
                a, b = row[i], row[j]
                row[i], row[j] = s * a + t * b, u * a + v * b

    for i in range(r):
        if i >= n:
            raise ValueError("matrix does not have full row rank")
        for j in range(i + 1, n):
            b = H[i][j]
            if b == 0:
                continue
            a = H[i][i]
            g, s, t = xgcd(a, b)
            combine(i, j, s, t, -b // g, a // g)
        piv = H[i][i]
        if piv == 0:
            raise ValueError("matrix does not have full row rank")
        if piv < 0:
            for X in (H, V):
                for row in X:
                    row[i] = -row[i]
            piv = -piv
        for c in range(i):
            q = H[i][c] // piv
            if q:
                for X in (H, V):
                    for row in X:
                        row[c] -= q * row[i]
    return H, V


def _nearest_int(x, tol):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else None
    k = round(x)
    return int(k) if abs(x - k) <= tol else None


def solve_integer_system(M, c, tol=0.0):
    """Integer solution ``k`` of ``M k = c`` for a full-row-rank integer ``M``.

    Returns ``(True, k)`` or ``(False, w)``. In the second case ``w`` is a
    rational row with ``w M`` integral and ``w c`` not an integer (beyond
    ``tol`` in numeric mode), which proves no integer solution exists.
    """
    r = len(M)
    n = len(M[0]) if r else 0
    if r == 0:
        return True, [0] * n
    H, V = column_hnf(M)
    z = []
    for i in range(r):
        acc = c[i] - sum(H[i][l] * z[l] for l in range(i))
        k = _nearest_int(acc / H[i][i], tol)
        if k is None:
            # w solves w H_r = e_i (H_r lower triangular).
            w = [Fraction(0)] * r
            for l in range(i, -1, -1):
                rhs = Fraction(int(l == i)) - sum(
                    (w[q] * H[q][l] for q in range(l + 1, i + 1)), Fraction(0))
                w[l] = rhs / H[l][l]
            return False, w
        z.append(k)
    return True, [sum(V[row][l] * z[l] for l in range(r)) for row in range(n)]


@dataclass(frozen=True)
class PhaseSystem:
    """``A y = theta (mod moduli)`` rowwise; phases in turns.

    ``theta`` entries that are all exact rationals put the system in exact
    mode; any float switches it to numeric mode.
    """

    A: tuple
    theta: tuple
    moduli: tuple

    def __post_init__(self):
        A = tuple(tuple(as_fraction(v) for v in row) for row in self.A)
        n = len(A)
        m = len(A[0]) if n else 0
        if any(len(row) != m for row in A):
            raise DimensionMismatch("ragged coefficient matrix")
        if len(self.theta) != n or len(self.moduli) != n:
            raise DimensionMismatch(
                f"{n} rows but {len(self.theta)} phases and {len(self.moduli)} moduli")
        moduli = tuple(as_fraction(mu) for mu in self.moduli)
        if any(mu <= 0 for mu in moduli):
            raise ValueError("moduli must be positive")
        exact = all(isinstance(t, (int, Fraction)) for t in self.theta)
        theta = tuple(Fraction(t) if exact else float(t) for t in self.theta)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "moduli", moduli)

    @property
    def rows(self):
        return len(self.A)

    @property
    def cols(self):
        return len(self.A[0]) if self.A else 0

    @property
    def exact(self):
        return all(isinstance(t, Fraction) for t in self.theta)

    def subsystem(self, indices):
        idx = list(indices)
        return PhaseSystem(
            tuple(self.A[i] for i in idx),
            tuple(self.theta[i] for i in idx),
            tuple(self.moduli[i] for i in idx),
        )


@dataclass(frozen=True)
class Feasible:
    y: tuple
    k: tuple

    feasible = True


@dataclass(frozen=True)
class Infeasible:
    u: tuple

    feasible = False


def solve_phase_system(system, tol=None):
    """Decide ``exists real y: A y = theta (mod mu)`` and return a certificate.

    ``tol`` must be 0 (or None) for exact systems; numeric systems default to
    ``DEFAULT_NUMERIC_TOL``. The returned ``y`` is the back-substitution
    solution with free variables set to 0.
    """
    exact = system.exact
    if tol is None:
        tol = 0 if exact else DEFAULT_NUMERIC_TOL
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    if exact and tol != 0:
        raise ToleranceInExactMode("exact systems are decided with tol = 0")
    N, m = system.rows, system.cols
    A, theta, mu = system.A, system.theta, system.moduli
    _, E, pivots = rref(list(A), ncols=m)
    rk = len(pivots)
    kernel = E[rk:]

    # Scale each kernel row so that row * diag(mu) is a primitive integer row.
    U, M = [], []
    for row in kernel:
        scaled = [row[j] * mu[j] for j in range(N)]
        prim = primitive_integer_row(scaled)
        nz = next(j for j in range(N) if scaled[j] != 0)
        factor = Fraction(prim[nz]) / scaled[nz]
        U.append([factor * v for v in row])
        M.append(prim)
    c = [_apply(u, theta) for u in U]
    ok, sol = solve_integer_system(M, c, tol)
    if not ok:
        w = sol
        u = [sum((w[i] * U[i][j] for i in range(len(U))), Fraction(0)) for j in range(N)]
        return Infeasible(tuple(primitive_integer_row(u)))

    k = [int(v) for v in sol] if M else [0] * N
    rhs = [theta[j] - mu[j] * k[j] if exact else theta[j] - float(mu[j]) * k[j]
           for j in range(N)]
    y = [Fraction(0) if exact else 0.0] * m
    for i, col in enumerate(pivots):
        y[col] = _apply(E[i], rhs)
    return Feasible(tuple(y), tuple(k))


def _apply(row, vec):
    """Rational row times a rational or float vector."""
    if all(isinstance(v, Fraction) for v in vec):
        return sum((a * b for a, b in zip(row, vec)), Fraction(0))
    return float(sum(float(a) * b for a, b in zip(row, vec) if a != 0))


def lattice_distance(u, system):
    """Distance of ``u . theta`` from the lattice ``{u . diag(mu) k}``, in lattice units.

    The lattice is ``g Z`` with ``g`` the gcd of the rationals ``u_j mu_j``;
    the value returned is ``dist(u . theta / g, Z)`` (exact Fraction in exact mode).
    """
    terms = [Fraction(uj) * mu for uj, mu in zip(u, system.moduli)]
    den = denominator_lcm(terms)
    g_num = 0
    for t in terms:
        g_num = gcd(g_num, int(t * den))
    val = _apply([Fraction(x) for x in u], system.theta)
    if g_num == 0:
        return abs(val)
    g = Fraction(g_num, den)
    val = val / g if system.exact else val / float(g)
    frac = val - floor(val)
    return min(frac, 1 - frac)


def check_certificate(system, cert, tol=None):
    """Re-verify a Feasible or Infeasible certificate by substitution."""
    exact = system.exact
    if tol is None:
        tol = 0 if exact else DEFAULT_NUMERIC_TOL
    if isinstance(cert, Feasible):
        for row, th, mu, kj in zip(system.A, system.theta, system.moduli, cert.k):
            lhs = _apply(row, list(cert.y))
            if exact:
                if lhs + mu * kj != th:
                    return False
            elif abs(float(lhs) + float(mu) * kj - th) > tol:
                return False
        return len(cert.y) == system.cols and len(cert.k) == system.rows
    u = cert.u
    if len(u) != system.rows or all(x == 0 for x in u):
        return False
    for col in range(system.cols):
        if sum((Fraction(u[j]) * system.A[j][col] for j in range(system.rows)),
               Fraction(0)) != 0:
            return False
    return lattice_distance(u, system) > tol
