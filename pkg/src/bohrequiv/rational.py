"""Dense linear algebra over the rationals, on lists of ``Fraction``.

Matrices are lists of rows. Nothing here touches floating point; sizes in this
package are tiny (a handful of frequencies), so plain Python loops are fine.
"""

from fractions import Fraction
from math import gcd

__all__ = [
    "as_fraction",
    "to_fraction_matrix",
    "lcm",
    "denominator_lcm",
    "rref",
    "rank",
    "express",
    "inverse",
    "det",
    "matmul",
    "vecmat",
    "dot",
    "identity",
    "primitive_integer_row",
]


def as_fraction(value):
    """Exact conversion for ints, Fractions and ``"p/q"`` / decimal strings.

    Floats are refused: a float coordinate would silently inject rounding
    into the exact decision path.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def to_fraction_matrix(rows):
    return [[as_fraction(v) for v in row] for row in rows]


def lcm(a, b):
    return a * b // gcd(a, b) if a and b else 0


def denominator_lcm(vec):
    d = 1
    for v in vec:
        d = lcm(d, Fraction(v).denominator)
    return d


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def vecmat(v, M):
    """Row vector times matrix."""
    if not M:
        return []
    return [sum((v[i] * M[i][j] for i in range(len(M))), Fraction(0))
            for j in range(len(M[0]))]


def matmul(A, B):
    return [vecmat(row, B) for row in A]


def rref(A, ncols=None):
    """Gauss-Jordan elimination with the row transform recorded.

    Returns ``(R, E, pivots)`` with ``E @ A == R``, ``R`` in reduced row
    echelon form and ``pivots`` the pivot column of each nonzero row of ``R``.
    Rows ``E[len(pivots):]`` span the left kernel of ``A``.
    """
    n = len(A)
    m = ncols if ncols is not None else (len(A[0]) if A else 0)
    R = [[Fraction(v) for v in row] for row in A]
    E = identity(n)
    pivots = []
    row = 0
    for col in range(m):
        if row == n:
            break
        p = next((i for i in range(row, n) if R[i][col] != 0), None)
        if p is None:
            continue
        R[row], R[p] = R[p], R[row]
        E[row], E[p] = E[p], E[row]
        inv = 1 / R[row][col]
        R[row] = [v * inv for v in R[row]]
        E[row] = [v * inv for v in E[row]]
        for i in range(n):
            if i != row and R[i][col] != 0:
                f = R[i][col]
                R[i] = [a - f * b for a, b in zip(R[i], R[row])]
                E[i] = [a - f * b for a, b in zip(E[i], E[row])]
        pivots.append(col)
        row += 1
    return R, E, pivots


def rank(A):
    return len(rref(A)[2])


def express(rows, v):
    """Coefficients ``c`` with ``c @ rows == v``, or None if v is outside the span.

    ``rows`` must be linearly independent, so the answer is unique.
    """
    k = len(rows)
    if k == 0:
        return [] if all(x == 0 for x in v) else None
    # Solve rows^T c = v through the augmented system.
    aug = [[rows[i][j] for i in range(k)] + [Fraction(v[j])] for j in range(len(v))]
    R, _, pivots = rref(aug, ncols=k + 1)
    if k in pivots:
        return None
    if len(pivots) < k:
        raise ValueError("rows are linearly dependent")
    return [R[i][k] for i in range(k)]


def inverse(T):
    n = len(T)
    R, E, pivots = rref(T)
    if len(pivots) != n or (T and len(T[0]) != n):
        raise ValueError("matrix is singular")
    return E


def primitive_integer_row(v):
    """Smallest positive rational multiple of ``v`` with coprime integer entries.

    The sign is fixed so the first nonzero entry is positive.
    """
    d = denominator_lcm(v)
    ints = [int(Fraction(x) * d) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return ints
    ints = [x // g for x in ints]
    first = next(x for x in ints if x != 0)
    return [-x for x in ints] if first < 0 else ints


def det(T):
    n = len(T)
    M = [[Fraction(v) for v in row] for row in T]
    out = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            out = -out
        out *= M[c][c]
        for i in range(c + 1, n):
            f = M[i][c] / M[c][c]
            M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return out
