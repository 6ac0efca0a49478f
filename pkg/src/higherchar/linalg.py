"""Exact integer matrices: connection and Green matrices, fraction-free
determinants, exact inverses, characteristic polynomials and ranks.

All arithmetic is over Python's arbitrary-precision integers (rationals only
as exact bookkeeping inside the inverse); nothing here ever rounds.
"""

from __future__ import annotations

from fractions import Fraction

from .complexes import Complex
from .errors import DomainError, ResourceBudgetError, SingularMatrixError

__all__ = [
    "MAX_DENSE_SIZE",
    "connection_matrix",
    "connection_matrix_via_cores",
    "green_matrix",
    "det",
    "inverse",
    "char_poly",
    "rank",
    "identity_matrix",
    "mat_mul",
]

MAX_DENSE_SIZE = 2048


def _check_square(mat) -> int:
    n = len(mat)
    for row in mat:
        if len(row) != n:
            raise DomainError("matrix must be square")
    return n


def _check_size(n: int) -> None:
    if n > MAX_DENSE_SIZE:
        raise ResourceBudgetError(
            f"dense exact arithmetic is capped at {MAX_DENSE_SIZE} rows, got {n}"
        )


def identity_matrix(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b) -> list[list[int]]:
    n, mid, m = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(mid):
            x = ai[t]
            if x:
                bt = b[t]
                for j in range(m):
                    oi[j] += x * bt[j]
    return out


def connection_matrix(g: Complex) -> list[list[int]]:
    """L(x,y) = 1 iff the simplices x and y share a vertex; symmetric 0/1.

    Rows and columns follow the canonical simplex order of g.
    """
    if len(g) == 0:
        raise DomainError("the connection matrix of the empty complex is undefined")
    _check_size(len(g))
    bits = [s.bits for s in g.simplices]
    return [[1 if a & b else 0 for b in bits] for a in bits]


def connection_matrix_via_cores(g: Complex) -> list[list[int]]:
    """Same matrix computed as the Euler characteristic of core intersections.

    The members of core(x) ∩ core(y) are the nonempty subsets of x ∩ y, whose
    alternating count is evaluated literally here; it agrees with the
    share-a-vertex indicator entrywise.
    """
    if len(g) == 0:
        raise DomainError("the connection matrix of the empty complex is undefined")
    bits = [s.bits for s in g.simplices]

    def chi_core(b: int) -> int:
        total = 0
        sub = b
        while sub:
            total += 1 if sub.bit_count() & 1 else -1
            sub = (sub - 1) & b
        return total

    return [[chi_core(a & b) for b in bits] for a in bits]


def green_matrix(g: Complex) -> list[list[int]]:
    """g(x,y) = weight(x) weight(y) * Euler characteristic of U(x) ∩ U(y).

    Exact integer matrix; satisfies L * g = g * L = identity.
    """
    if len(g) == 0:
        raise DomainError("the Green matrix of the empty complex is undefined")
    _check_size(len(g))
    bits = [s.bits for s in g.simplices]
    ws = [s.weight for s in g.simplices]
    members = g.member_bits
    n = len(bits)

    # chi of the star of z, for every union z that is a simplex
    chi_star: dict[int, int] = {}
    for z in members:
        chi_star[z] = 0
    for y, wy in zip(bits, ws):
        sub = y
        while sub:
            if sub in chi_star:
                chi_star[sub] += wy
            sub = (sub - 1) & y
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            u = bits[i] | bits[j]
            chi = chi_star.get(u, 0)
            if chi:
                out[i][j] = ws[i] * ws[j] * chi
    return out


def det(mat) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = _check_square(mat)
    _check_size(n)
    if n == 0:
        return 1
    a = [list(row) for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row = a[i]
            top = a[k]
            aik = row[k]
            for j in range(k + 1, n):
                row[j] = (pivot * row[j] - aik * top[j]) // prev
            row[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def inverse(mat) -> list[list[int]] | list[list[Fraction]]:
    """Exact inverse via Gauss-Jordan with rational bookkeeping.

    Returns an integer matrix when every entry is integral (always the case
    when det = +-1); otherwise the exact rational inverse.  Raises on
    singular input.
    """
    n = _check_square(mat)
    _check_size(n)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(mat)]
    for col in range(n):
        piv = None
        for i in range(col, n):
            if a[i][col] != 0:
                piv = i
                break
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    inv = [row[n:] for row in a]
    if all(x.denominator == 1 for row in inv for x in row):
        return [[int(x) for x in row] for row in inv]
    return inv


def char_poly(mat) -> list[int]:
    """Coefficients of det(lambda*I - M), descending powers, leading 1.

    Faddeev-LeVerrier recurrence; the trace divisions are exact over the
    integers and asserted so.
    """
    n = _check_square(mat)
    _check_size(n)
    coeffs = [1]
    if n == 0:
        return coeffs
    mk = [list(row) for row in mat]
    for k in range(1, n + 1):
        tr = sum(mk[i][i] for i in range(n))
        if tr % k != 0:
            raise ArithmeticError("Faddeev-LeVerrier trace division was not exact")
        c = -(tr // k)
        coeffs.append(c)
        if k == n:
            break
        for i in range(n):
            mk[i][i] += c
        mk = mat_mul(mat, mk)
    return coeffs


def rank(mat) -> int:
    """Exact rank over the rationals."""
    rows = [[Fraction(x) for x in row] for row in mat if any(row)]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][col]
        for i in range(r + 1, len(rows)):
            if rows[i][col] != 0:
                f = rows[i][col] / pv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r
