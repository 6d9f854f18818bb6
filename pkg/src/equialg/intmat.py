"""Dense integer matrices: Smith normal form, kernels, exact solving.

Matrices are plain lists of lists of Python ints, so entries never
overflow.  Everything here is deterministic; pivots are chosen by
scanning in a fixed order.
"""


def zeros(rows, cols):
    return [[0] * cols for _ in range(rows)]


def identity(n):
    M = zeros(n, n)
    for i in range(n):
        M[i][i] = 1
    return M


def copy(M):
    return [row[:] for row in M]


def shape(M):
    return (len(M), len(M[0]) if M else 0)


def matmul(A, B):
    n, m = shape(A)
    m2, k = shape(B)
    if m != m2:
        raise ValueError("shape mismatch %r x %r" % (shape(A), shape(B)))
    C = zeros(n, k)
    for i in range(n):
        Ai = A[i]
        Ci = C[i]
        for j in range(m):
            a = Ai[j]
            if a:
                Bj = B[j]
                for l in range(k):
                    if Bj[l]:
                        Ci[l] += a * Bj[l]
    return C


def matvec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def transpose(M):
    n, m = shape(M)
    return [[M[i][j] for i in range(n)] for j in range(m)]


def hstack(A, B):
    if len(A) != len(B):
        raise ValueError("row counts differ")
    return [ra + rb for ra, rb in zip(A, B)]


def columns(M, idxs):
    return [[row[j] for j in idxs] for row in M]


def is_zero_matrix(M):
    return all(all(x == 0 for x in row) for row in M)


def det(M):
    """Exact determinant by fraction-free Bareiss elimination."""
    n, m = shape(M)
    if n != m:
        raise ValueError("determinant of non-square matrix")
    if n == 0:
        return 1
    A = copy(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def smith_normal_form(M):
    """Return (D, U, V) with U*M*V = D, D diagonal, d_i | d_{i+1},
    U and V unimodular.  D has the same shape as M and nonnegative
    diagonal entries."""
    n, m = shape(M)
    D = copy(M)
    U = identity(n)
    V = identity(m)

    def row_op(i1, i2, a, b, c, d):
        # rows (i1, i2) <- (a*r1 + b*r2, c*r1 + d*r2); ad - bc = +-1
        for M_ in (D, U):
            r1, r2 = M_[i1], M_[i2]
            for j in range(len(r1)):
                x, y = r1[j], r2[j]
                r1[j] = a * x + b * y
                r2[j] = c * x + d * y

    def col_op(j1, j2, a, b, c, d):
        for M_ in (D, V):
            for row in M_:
                x, y = row[j1], row[j2]
                row[j1] = a * x + b * y
                row[j2] = c * x + d * y

    def xgcd(a, b):
        x0, x1, y0, y1 = 1, 0, 0, 1
        while b:
            q, a, b = a // b, b, a % b
            x0, x1 = x1, x0 - q * x1
            y0, y1 = y1, y0 - q * y1
        return a, x0, y0

    t = 0
    while True:
        # find a pivot in the submatrix starting at (t, t)
        pivot = None
        for i in range(t, n):
            for j in range(t, m):
                if D[i][j] != 0:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            row_op(t, pi, 0, 1, 1, 0)
        if pj != t:
            col_op(t, pj, 0, 1, 1, 0)
        # clear row and column t
        while True:
            changed = False
            for i in range(t + 1, n):
                if D[i][t]:
                    a, b = D[t][t], D[i][t]
                    if b % a == 0:
                        q = b // a
                        row_op(t, i, 1, 0, -q, 1)
                    else:
                        g, x, y = xgcd(a, b)
                        row_op(t, i, x, y, -(b // g), a // g)
                    changed = True
            for j in range(t + 1, m):
                if D[t][j]:
                    a, b = D[t][t], D[t][j]
                    if b % a == 0:
                        q = b // a
                        col_op(t, j, 1, 0, -q, 1)
                    else:
                        g, x, y = xgcd(a, b)
                        col_op(t, j, x, y, -(b // g), a // g)
                    changed = True
            if not changed:
                break
        t += 1
        if t >= min(n, m):
            break

    # enforce the divisibility chain on the diagonal
    r = min(n, m)
    while True:
        fixed = True
        for i in range(r - 1):
            a, b = D[i][i], D[i + 1][i + 1]
            if a == 0 and b != 0:
                row_op(i, i + 1, 0, 1, 1, 0)
                col_op(i, i + 1, 0, 1, 1, 0)
                fixed = False
            elif a != 0 and b % a != 0:
                # diag(a, b) -> diag(gcd, +-lcm)
                row_op(i, i + 1, 1, 1, 0, 1)
                g, xg, yg = xgcd(a, b)
                col_op(i, i + 1, xg, yg, -(b // g), a // g)
                q = D[i + 1][i] // D[i][i]
                row_op(i, i + 1, 1, 0, -q, 1)
                fixed = False
        if fixed:
            break
    for i in range(r):
        if D[i][i] < 0:
            for j in range(m):
                D[i][j] = -D[i][j]
            for j in range(n):
                U[i][j] = -U[i][j]
    return D, U, V


def diagonal(D):
    n, m = shape(D)
    return [D[i][i] for i in range(min(n, m))]


def rank(M):
    D, _, _ = smith_normal_form(M)
    return sum(1 for d in diagonal(D) if d != 0)


def kernel_basis(M):
    """Columns spanning the integer kernel of M, as a (cols x k) matrix."""
    n, m = shape(M)
    D, U, V = smith_normal_form(M)
    diag = diagonal(D)
    r = sum(1 for d in diag if d != 0)
    idxs = list(range(r, m))
    return columns(V, idxs)


def solve(M, b):
    """One integer solution x of M x = b, or None."""
    n, m = shape(M)
    D, U, V = smith_normal_form(M)
    Ub = matvec(U, b)
    diag = diagonal(D)
    y = [0] * m
    for i in range(n):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if Ub[i] != 0:
                return None
        else:
            if Ub[i] % d != 0:
                return None
            y[i] = Ub[i] // d
    return matvec(V, y)


def solve_matrix(M, B):
    """Integer matrix X with M X = B, or None (columnwise solve, but the
    SNF is computed only once)."""
    n, m = shape(M)
    nb, k = shape(B)
    if nb != n:
        raise ValueError("shape mismatch")
    D, U, V = smith_normal_form(M)
    diag = diagonal(D)
    UB = matmul(U, B)
    Y = zeros(m, k)
    for j in range(k):
        for i in range(n):
            d = diag[i] if i < len(diag) else 0
            if d == 0:
                if UB[i][j] != 0:
                    return None
            else:
                if UB[i][j] % d != 0:
                    return None
                Y[i][j] = UB[i][j] // d
    return matmul(V, Y)


def column_lattice_basis(M):
    """A basis (as columns) of the lattice generated by the columns of M."""
    n, m = shape(M)
    D, U, V = smith_normal_form(M)
    # columns of U^{-1} scaled by the invariant factors span the lattice;
    # recover U^{-1} by solving U X = I exactly (U unimodular).
    Uinv = solve_matrix(U, identity(n))
    diag = diagonal(D)
    basis = []
    for i, d in enumerate(diag):
        if d != 0:
            basis.append([d * Uinv[r][i] for r in range(n)])
    return transpose(basis) if basis else zeros(n, 0)
