"""Integer lattice kernels: Hermite and Smith normal forms, small helpers.

Matrices are lists of rows of Python ints. Lattices are row spans.
"""
from fractions import Fraction
from math import gcd


def xgcd(a, b):
    """Return (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def hnf(rows):
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    The result is upper triangular in echelon form: each row's first nonzero
    entry (pivot) is positive, lies strictly right of the previous row's
    pivot, and the entries above a pivot are reduced into ``[0, pivot)``.
    Zero rows are dropped, so the output is a basis.
    """
    A = [list(r) for r in rows if any(r)]
    if not A:
        return []
    ncols = len(A[0])
    m = len(A)
    top = 0
    for col in range(ncols):
        if top == m:
            break
        for i in range(top + 1, m):
            b = A[i][col]
            if b == 0:
                continue
            a = A[top][col]
            g, x, y = xgcd(a, b)
            p, q = a // g, b // g
            rt, ri = A[top], A[i]
            A[top] = [x * u + y * v for u, v in zip(rt, ri)]
            A[i] = [p * v - q * u for u, v in zip(rt, ri)]
        piv = A[top][col]
        if piv == 0:
            continue
        if piv < 0:
            A[top] = [-u for u in A[top]]
            piv = -piv
        for i in range(top):
            f = A[i][col] // piv
            if f:
                A[i] = [u - f * v for u, v in zip(A[i], A[top])]
        top += 1
    return [r for r in A[:top]]


def det(matrix):
    """Exact determinant of a square integer (or Fraction) matrix."""
    M = [[Fraction(v) for v in row] for row in matrix]
    n = len(M)
    result = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            result = -result
        p = M[col][col]
        result *= p
        for r in range(col + 1, n):
            f = M[r][col] / p
            if f:
                M[r] = [u - f * v for u, v in zip(M[r], M[col])]
    return result


def solve_rational(basis, vector):
    """Coordinates c with sum(c[i] * basis[i]) == vector, for a square
    nonsingular basis (rows). Returns a list of Fractions."""
    n = len(basis)
    # Solve B^T c = v by Gaussian elimination on the augmented system.
    M = [[Fraction(basis[j][i]) for j in range(n)] + [Fraction(vector[i])] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [u / p for u in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [u - f * v for u, v in zip(M[r], M[col])]
    return [M[i][n] for i in range(n)]


def in_lattice(basis, vector):
    """Membership of an integer vector in the span of an HNF ``basis``."""
    v = list(vector)
    for row in basis:
        col = next(i for i, u in enumerate(row) if u)
        q, r = divmod(v[col], row[col])
        if r:
            return False
        if q:
            v = [u - q * w for u, w in zip(v, row)]
    return not any(v)


def smith_invariants(matrix):
    """Invariant factors d1 | d2 | ... of an integer matrix (zeros dropped
    only when the whole remaining block vanishes)."""
    A = [list(r) for r in matrix]
    if not A or not A[0]:
        return []
    m, n = len(A), len(A[0])
    diag = []
    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            i, j = best
            A[t], A[i] = A[i], A[t]
            for row in A:
                row[t], row[j] = row[j], row[t]
            p = A[t][t]
            for i in range(t + 1, m):
                q = A[i][t] // p
                if q:
                    A[i] = [u - q * v for u, v in zip(A[i], A[t])]
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
            # remainders are smaller than |p|, so each retry shrinks the pivot
            if not any(A[i][t] for i in range(t + 1, m)) and not any(A[t][j] for j in range(t + 1, n)):
                break
        if best is None:
            break
        diag.append(abs(A[t][t]))
    # diag(a, b) is equivalent to diag(gcd, lcm)
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            a, b = diag[i], diag[i + 1]
            g = gcd(a, b)
            if g != a:
                diag[i], diag[i + 1] = g, a * b // g
                changed = True
    return diag


def int_matrix_with_den(rows):
    """Clear denominators of a rational matrix: returns (int rows, den)."""
    den = 1
    for r in rows:
        for v in r:
            den = den * Fraction(v).denominator // gcd(den, Fraction(v).denominator)
    return [[int(Fraction(v) * den) for v in r] for r in rows], den
