"""Exact linear algebra: ranks over the coefficient field, rational matrices, integer lattices."""

from __future__ import annotations

from fractions import Fraction


def _pivot_cost(c):
    # prefer units of the Laurent ring, then short expressions
    if c.is_monomial():
        return 0
    return len(c.num) + len(c.den)


def sparse_rank(columns) -> int:
    """Rank over F of the matrix whose columns are dicts ``row -> CoeffScalar``.

    Row-echelon elimination: every stored pivot vector has entry 1 at its
    pivot row and no entries at rows ranked above it.  Rows are ranked in
    the order they are first seen, with later rows eliminated first.
    """
    order: dict = {}
    pivots: dict = {}
    rank = 0
    for col in columns:
        v = {}
        for r, c in col.items():
            if c:
                if r not in order:
                    order[r] = len(order)
                v[r] = c
        while v:
            top = max(v, key=order.__getitem__)
            piv = pivots.get(top)
            if piv is None:
                inv = v[top].inverse()
                pivots[top] = {r: c * inv for r, c in v.items()}
                pivots[top][top] = v[top].field.one
                rank += 1
                break
            factor = v[top]
            for r, c in piv.items():
                cur = v.get(r)
                new = -(factor * c) if cur is None else cur - factor * c
                if new:
                    v[r] = new
                else:
                    v.pop(r, None)
            v.pop(top, None)
    return rank


def dense_rank(matrix) -> int:
    """Rank over F of a dense list-of-rows matrix of CoeffScalars."""
    cols = []
    if not matrix:
        return 0
    for j in range(len(matrix[0])):
        cols.append({i: row[j] for i, row in enumerate(matrix) if row[j]})
    return sparse_rank(cols)


# -- rational matrices ------------------------------------------------------


def rref(rows):
    """Reduced row echelon form over Q.  Returns (matrix, pivot columns)."""
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return mat, []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def rational_rank(rows) -> int:
    return len(rref(rows)[1])


def rational_kernel(rows, ncols: int):
    """Basis of {x in Q^ncols : rows . x = 0}."""
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    mat, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -mat[i][f]
        basis.append(v)
    return basis


def primitive_integer(v):
    """Scale a rational vector to a primitive integer vector with positive leading entry."""
    from math import gcd, lcm

    v = [Fraction(x) for x in v]
    den = lcm(1, *(x.denominator for x in v))
    w = [int(x * den) for x in v]
    g = 0
    for x in w:
        g = gcd(g, x)
    if g == 0:
        return w
    w = [x // g for x in w]
    lead = next(x for x in w if x)
    return [-x for x in w] if lead < 0 else w


def in_span(vectors, v) -> bool:
    return rational_rank(list(vectors) + [list(v)]) == rational_rank(list(vectors))


# -- integer lattices ---------------------------------------------------------


def _ext_gcd(a: int, b: int):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def column_echelon(A, ncols: int | None = None):
    """Unimodular column reduction H = A U with H lower column-echelon.

    Returns (H, U, pivots) where pivots lists (row, col) pairs.  Columns of U
    past the last pivot column span the integer kernel of A.
    """
    m = len(A)
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    H = [[int(x) for x in row] for row in A]
    U = [[int(i == j) for j in range(n)] for i in range(n)]

    def combine(j, k, a, b, c, d):
        # (col_j, col_k) <- (a col_j + b col_k, c col_j + d col_k)
        for mat in (H, U):
            for row in mat:
                x, y = row[j], row[k]
                row[j], row[k] = a * x + b * y, c * x + d * y

    col = 0
    pivots = []
    for i in range(m):
        if col >= n:
            break
        for j in range(col + 1, n):
            if H[i][j]:
                a, b = H[i][col], H[i][j]
                g, x, y = _ext_gcd(a, b)
                combine(col, j, x, y, -b // g, a // g)
        if H[i][col]:
            if H[i][col] < 0:
                for mat in (H, U):
                    for row in mat:
                        row[col] = -row[col]
            pivots.append((i, col))
            col += 1
    return H, U, pivots


def integer_kernel(A, ncols: int):
    """Basis (list of integer vectors) of the lattice {x in Z^ncols : A x = 0}."""
    if not A:
        return [[int(i == j) for i in range(ncols)] for j in range(ncols)]
    H, U, pivots = column_echelon(A, ncols)
    start = len(pivots)
    return [[U[r][c] for r in range(ncols)] for c in range(start, ncols)]


def solve_integer(A, b, ncols: int):
    """Some x in Z^ncols with A x = b, or None when no integer solution exists."""
    if not A:
        return [0] * ncols
    H, U, pivots = column_echelon(A, ncols)
    y = [0] * ncols
    pivot_of_row = dict(pivots)
    for i, row in enumerate(H):
        rest = b[i] - sum(row[c] * y[c] for c in range(ncols) if row[c] and c not in
                          (pivot_of_row.get(i),))
        pc = pivot_of_row.get(i)
        if pc is None:
            if rest:
                return None
            continue
        q, r = divmod(rest, row[pc])
        if r:
            return None
        y[pc] = q
    return [sum(U[r][c] * y[c] for c in range(ncols)) for r in range(ncols)]


def solve_with_congruences(equations, congruences, modulus: int, n: int):
    """Integer x with L.x = r for (L, r) in equations and N.x = r mod modulus for congruences."""
    k = len(congruences)
    rows, rhs = [], []
    for L, r in equations:
        rows.append(list(L) + [0] * k)
        rhs.append(r)
    for idx, (N, r) in enumerate(congruences):
        slack = [0] * k
        slack[idx] = -modulus
        rows.append(list(N) + slack)
        rhs.append(r)
    sol = solve_integer(rows, rhs, n + k)
    return None if sol is None else sol[:n]


def is_unimodular(U) -> bool:
    return abs(determinant(U)) == 1


def determinant(U):
    mat = [[Fraction(x) for x in row] for row in U]
    n = len(mat)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if mat[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            mat[c], mat[p] = mat[p], mat[c]
            det = -det
        det *= mat[c][c]
        for i in range(c + 1, n):
            f = mat[i][c] / mat[c][c]
            if f:
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[c])]
    return det


def integer_inverse(U):
    """Inverse of a unimodular integer matrix."""
    n = len(U)
    aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(U)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    inv = [[red[i][n + j] for j in range(n)] for i in range(n)]
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("matrix is not unimodular")
    return [[int(x) for x in row] for row in inv]


def row_hermite(rows, ncols: int):
    """Row Hermite normal form of an integer matrix (zero rows dropped).

    Pivots are positive and entries above each pivot are reduced into
    [0, pivot).  Same row lattice as the input.
    """
    if not rows:
        return []
    H, _, pivots = column_echelon([list(col) for col in zip(*rows)], len(rows))
    out = [[H[r][c] for r in range(ncols)] for _, c in pivots]
    for k, (pr, _) in enumerate(pivots):
        for j in range(k):
            q = out[j][pr] // out[k][pr]
            if q:
                out[j] = [a - q * b for a, b in zip(out[j], out[k])]
    return out
