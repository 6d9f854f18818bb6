"""Homology of complexes of free modules given by integer matrices.

The value type is AbelianGroupShape: a free rank plus a divisibility
chain of torsion orders.  Over ZZ the computation goes through Smith
normal form; over QQ and Z/p (p prime) through exact rank computation;
over composite Z/m through an integer lattice computation that folds in
the relations m*e_i.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import intmat
from .rings import ZZ, QQ, IntegerModRing, IntegerRing, RationalRing, is_prime


class CompositionError(ValueError):
    """Raised when a claimed complex has d o d != 0."""


@dataclass(frozen=True)
class AbelianGroupShape:
    free_rank: int
    torsion: tuple = ()

    def __post_init__(self):
        prev = None
        for t in self.torsion:
            if t < 2:
                raise ValueError("torsion entries must be >= 2")
            if prev is not None and t % prev != 0:
                raise ValueError("torsion list must form a divisibility chain")
            prev = t

    @classmethod
    def from_diagonal(cls, diag, free_rank):
        torsion = tuple(d for d in diag if d > 1)
        return cls(free_rank, torsion)

    def order(self):
        if self.free_rank:
            return None
        n = 1
        for t in self.torsion:
            n *= t
        return n

    def __str__(self):
        parts = ["Z"] * self.free_rank + ["Z/%d" % t for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def _field_rank(M, modulus=None):
    """Rank over QQ (modulus None) or over F_p."""
    rows = [[Fraction(x) if modulus is None else x % modulus for x in row] for row in M]
    n = len(rows)
    m = len(rows[0]) if rows else 0
    rank = 0
    col = 0
    for col in range(m):
        piv = None
        for i in range(rank, n):
            if rows[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = (Fraction(1) / rows[rank][col] if modulus is None
               else pow(rows[rank][col], -1, modulus))
        rows[rank] = [(x * inv) if modulus is None else (x * inv) % modulus
                      for x in rows[rank]]
        for i in range(n):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [(a - f * b) if modulus is None else (a - f * b) % modulus
                           for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == n:
            break
    return rank


def lattice_quotient_shape(ambient_rank, generators):
    """Shape of Z^ambient_rank / (column span of generators)."""
    n, m = intmat.shape(generators) if generators else (ambient_rank, 0)
    if generators and n != ambient_rank:
        raise ValueError("generator matrix has wrong row count")
    if m == 0:
        return AbelianGroupShape(ambient_rank)
    D, _, _ = intmat.smith_normal_form(generators)
    diag = intmat.diagonal(D)
    r = sum(1 for d in diag if d != 0)
    return AbelianGroupShape.from_diagonal(diag, ambient_rank - r)


def _mod_m_kernel_lattice(M, m):
    """Basis of the lattice {x in Z^cols : M x = 0 mod m} (contains m*Z^cols)."""
    n, c = intmat.shape(M)
    aug = intmat.hstack(M, [[m if i == j else 0 for j in range(n)] for i in range(n)])
    ker = intmat.kernel_basis(aug)
    proj = [row[:] for row in ker[:c]] if ker else intmat.zeros(c, 0)
    if not proj or intmat.shape(proj)[1] == 0:
        return intmat.zeros(c, 0)
    return intmat.column_lattice_basis(proj)


def homology_at(d_in, d_out, coefficients=ZZ):
    """Homology ker(d_out)/im(d_in) of

        Z^a --d_in--> Z^b --d_out--> Z^c

    tensored with the coefficient ring.  d_in is b x a, d_out is c x b,
    as integer matrices.  Raises CompositionError unless d_out o d_in
    vanishes over the coefficients.
    """
    b = len(d_in)
    if d_out and len(d_out[0]) != b:
        raise ValueError("middle ranks of d_in and d_out disagree")

    comp = intmat.matmul(d_out, d_in) if (d_out and d_in and d_in[0]) else []
    if isinstance(coefficients, IntegerModRing):
        bad = comp and any(any(x % coefficients.m for x in row) for row in comp)
    else:
        bad = comp and not intmat.is_zero_matrix(comp)
    if bad:
        raise CompositionError("d_out o d_in != 0 over %r" % (coefficients,))

    if isinstance(coefficients, IntegerRing):
        return _homology_over_Z(d_in, d_out, b)
    if isinstance(coefficients, RationalRing):
        dim = (b - intmat.rank(d_out)) - intmat.rank(d_in)
        return AbelianGroupShape(dim)
    if isinstance(coefficients, IntegerModRing):
        m = coefficients.m
        if is_prime(m):
            dim = (b - _field_rank(d_out, m)) - _field_rank(d_in, m)
            return AbelianGroupShape(0, (m,) * dim)
        return _homology_mod_m(d_in, d_out, b, m)
    raise ValueError("unsupported coefficient ring %r" % (coefficients,))


def _homology_over_Z(d_in, d_out, b):
    K = intmat.kernel_basis(d_out) if d_out else intmat.identity(b)
    k = intmat.shape(K)[1]
    if k == 0:
        return AbelianGroupShape(0)
    if not d_in or not d_in[0]:
        return AbelianGroupShape(k)
    Y = intmat.solve_matrix(K, d_in)
    if Y is None:
        raise CompositionError("image of d_in does not lie in ker(d_out)")
    D, _, _ = intmat.smith_normal_form(Y)
    diag = intmat.diagonal(D)
    r = sum(1 for d in diag if d != 0)
    return AbelianGroupShape.from_diagonal(diag, k - r)


def _homology_mod_m(d_in, d_out, b, m):
    K = _mod_m_kernel_lattice(d_out, m) if d_out else intmat.identity(b)
    kcols = intmat.shape(K)[1]
    if kcols == 0:
        return AbelianGroupShape(0)
    rel = [[m if i == j else 0 for j in range(b)] for i in range(b)]
    gens = intmat.hstack(d_in, rel) if (d_in and d_in[0]) else rel
    Y = intmat.solve_matrix(K, gens)
    if Y is None:
        raise CompositionError("relations do not lie in the mod-%d kernel" % m)
    D, _, _ = intmat.smith_normal_form(Y)
    diag = intmat.diagonal(D)
    r = sum(1 for d in diag if d != 0)
    free = kcols - r
    if free:
        raise AssertionError("mod-%d homology came out infinite" % m)
    return AbelianGroupShape.from_diagonal(diag, 0)


def split_free_quotient(ambient_rank, span, modulus=None):
    """Projection matrix P of Z^r (or (Z/m)^r) onto the quotient by the
    column span, valid only when the quotient is free; this is checked.

    Returns (P, S): P is q x r, S is r x q, P S = I, and P kills the
    span.  Used for normalized chain complexes, where the degenerate
    part is a genuine direct summand.
    """
    r = ambient_rank
    cols = len(span[0]) if span else 0
    if modulus is not None:
        rel = [[modulus if i == j else 0 for j in range(r)] for i in range(r)]
        span = intmat.hstack(span, rel) if cols else rel
    elif cols == 0:
        return intmat.identity(r), intmat.identity(r)
    D, U, V = intmat.smith_normal_form(span)
    diag = intmat.diagonal(D)
    free_idx = []
    for i in range(r):
        d = diag[i] if i < len(diag) else 0
        if modulus is None:
            if d == 0:
                free_idx.append(i)
            elif d != 1:
                raise AssertionError("quotient by degenerate part is not free")
        else:
            if d == modulus:
                free_idx.append(i)
            elif d not in (1, modulus):
                raise AssertionError("quotient by degenerate part is not free mod %d"
                                     % modulus)
    P = [U[i][:] for i in free_idx]
    Uinv = intmat.solve_matrix(U, intmat.identity(r))
    S = intmat.columns(Uinv, free_idx)
    if modulus is not None:
        P = [[x % modulus for x in row] for row in P]
        S = [[x % modulus for x in row] for row in S]
    return P, S
