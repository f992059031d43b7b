"""Small exact linear algebra helpers over the rationals.

Vectors are tuples of ``Fraction``; matrices are tuples of row tuples.
Everything here is deterministic and allocation-light; sizes never exceed
a few hundred entries in this package.
"""

from __future__ import annotations

from fractions import Fraction

Vec = tuple[Fraction, ...]


def vec(values) -> Vec:
    return tuple(Fraction(v) for v in values)


def vadd(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vsub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vscale(c: Fraction, a: Vec) -> Vec:
    return tuple(c * x for x in a)


def vneg(a: Vec) -> Vec:
    return tuple(-x for x in a)


def vdot(a: Vec, b: Vec) -> Fraction:
    return sum((x * y for x, y in zip(a, b, strict=True)), Fraction(0))


def vzero(n: int) -> Vec:
    return (Fraction(0),) * n


def is_zero(a: Vec) -> bool:
    return all(x == 0 for x in a)


def mat_vec(m: tuple[Vec, ...], a: Vec) -> Vec:
    return tuple(vdot(row, a) for row in m)


def solve_in_span(basis: list[Vec], target: Vec) -> Vec | None:
    """Coefficients c with sum(c_i * basis_i) == target, or None.

    The basis vectors must be linearly independent.  Solved by exact
    Gaussian elimination on the augmented column system.
    """
    if not basis:
        return () if is_zero(target) else None
    m = len(target)
    k = len(basis)
    # rows: ambient coordinates; columns: basis vectors | target
    rows = [[basis[j][i] for j in range(k)] + [target[i]] for i in range(m)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(k):
        pivot = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append((r, c))
        r += 1
    if len(pivots) != k:
        raise ValueError("basis vectors are linearly dependent")
    # consistency: rows below the pivots must have zero RHS
    for i in range(r, m):
        if rows[i][k] != 0:
            return None
    coeffs = [Fraction(0)] * k
    for row_i, col in pivots:
        coeffs[col] = rows[row_i][k]
    return tuple(coeffs)


def invert(matrix: tuple[Vec, ...]) -> tuple[Vec, ...]:
    """Exact inverse of a square nonsingular matrix (Gauss-Jordan)."""
    n = len(matrix)
    aug = [list(matrix[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        aug[c], aug[pivot] = aug[pivot], aug[c]
        inv = Fraction(1) / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return tuple(tuple(row[n:]) for row in aug)


def frac_str(x: Fraction) -> str:
    """Canonical string form: integers without denominator, else p/q."""
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_frac(s) -> Fraction:
    return Fraction(s)
