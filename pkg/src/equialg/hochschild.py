"""Cyclic bar constructions of finite-rank algebras and their homology.

An algebra is a free module with structure constants over a coefficient
ring; the cyclic bar construction at level k is the (k+1)-fold tensor
power with faces multiplying adjacent factors and the last face wrapping
around.  A declared automorphism g twists the last face (the rotation
composed with g on the rotated-to-front factor), giving the Lambda_n^op
structure.  The r-fold edgewise subdivision of the untwisted bar is
identified, factor by factor, with the bar construction of the r-fold
tensor-power algebra with coefficients in its rotation-twisted bimodule;
subdivision_matches_twisted_bar checks that identification as strict
matrix equality.

Hochschild homology in degree 1 is cross-checked against an independent
Kahler differential presentation (generators e_l de_k, Leibniz
relations), never against the bar complex itself.
"""

from itertools import product

from .linalg import RingMatrix
from .rings import ZZ, QQ, IntegerModRing, IntegerRing, RationalRing
from .smodules import (LambdaModule, SimplicialModule, moore_complex,
                       edgewise_subdivide_module, cn_generator)
from .homology import AbelianGroupShape, lattice_quotient_shape, _field_rank


class BudgetError(ValueError):
    pass


class FiniteRankAlgebra:
    """Associative unital algebra, free of rank d over `ring`, given by
    structure constants mult[i][j] (vector of length d), a unit vector,
    and optionally an algebra automorphism with g^order = id."""

    def __init__(self, ring, mult, unit, commutative=False,
                 automorphism=None, automorphism_order=1, name=None):
        self.ring = ring
        self.rank = len(mult)
        self.mult = mult
        self.unit = list(unit)
        self.commutative = commutative
        self.name = name or "algebra(rank %d over %r)" % (self.rank, ring)
        if automorphism is None:
            automorphism = [[ring.one() if i == j else ring.zero()
                             for j in range(self.rank)] for i in range(self.rank)]
        self.aut = automorphism  # aut[i] = image of e_i as a vector
        self.aut_order = automorphism_order
        self.validate()

    # vectors are lists of length rank over self.ring
    def basis_vector(self, i):
        return [self.ring.one() if j == i else self.ring.zero()
                for j in range(self.rank)]

    def multiply(self, u, v):
        ring = self.ring
        out = [ring.zero()] * self.rank
        for i, a in enumerate(u):
            if ring.is_zero(a):
                continue
            for j, b in enumerate(v):
                if ring.is_zero(b):
                    continue
                c = ring.mul(a, b)
                for l, s in enumerate(self.mult[i][j]):
                    if not ring.is_zero(s):
                        out[l] = ring.add(out[l], ring.mul(c, s))
        return out

    def apply_aut(self, v, times=1):
        for _ in range(times):
            v = self._aut_apply_matrix(self.aut, v)
        return v

    def validate(self):
        ring, d = self.ring, self.rank
        for i in range(d):
            if len(self.mult[i]) != d or any(len(self.mult[i][j]) != d for j in range(d)):
                raise ValueError("structure constants malformed")
        for i in range(d):
            e = self.basis_vector(i)
            if self.multiply(self.unit, e) != e or self.multiply(e, self.unit) != e:
                raise ValueError("unit law fails at basis vector %d" % i)
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    lhs = self.multiply(self.mult[i][j], self.basis_vector(k))
                    rhs = self.multiply(self.basis_vector(i), self.mult[j][k])
                    if lhs != rhs:
                        raise ValueError("associativity fails at (%d,%d,%d)" % (i, j, k))
        if self.commutative:
            for i in range(d):
                for j in range(d):
                    if self.mult[i][j] != self.mult[j][i]:
                        raise ValueError("commutative flag set but multiplication "
                                         "is not symmetric")
        # automorphism: algebra map with g^order = id
        g = self.aut
        for i in range(d):
            for j in range(d):
                lhs = self.apply_aut(self.mult[i][j])
                rhs = self.multiply(g[i], g[j])
                if lhs != rhs:
                    raise ValueError("automorphism is not multiplicative at (%d,%d)"
                                     % (i, j))
        if self.apply_aut(self.unit) != self.unit:
            raise ValueError("automorphism does not fix the unit")
        ident = [self.basis_vector(i) for i in range(d)]
        acc = ident
        for _ in range(self.aut_order):
            acc = [self._aut_apply_matrix(g, col) for col in acc]
        if acc != ident:
            raise ValueError("automorphism power g^%d is not the identity"
                             % self.aut_order)

    def _aut_apply_matrix(self, mat, v):
        ring = self.ring
        out = [ring.zero()] * self.rank
        for i, a in enumerate(v):
            if ring.is_zero(a):
                continue
            for l, s in enumerate(mat[i]):
                if not ring.is_zero(s):
                    out[l] = ring.add(out[l], ring.mul(a, s))
        return out

    def underlying_group_shape(self):
        ring = self.ring
        if isinstance(ring, IntegerRing):
            return AbelianGroupShape(self.rank)
        if isinstance(ring, RationalRing):
            return AbelianGroupShape(self.rank)
        if isinstance(ring, IntegerModRing):
            return AbelianGroupShape(0, (ring.m,) * self.rank)
        raise ValueError("no underlying group shape over %r" % (ring,))

    def __repr__(self):
        return self.name


def base_as_algebra(ring):
    """The coefficient ring as the rank-1 algebra over itself."""
    return FiniteRankAlgebra(ring, [[[ring.one()]]], [ring.one()],
                             commutative=True, name="base(%r)" % (ring,))


def dual_numbers(ring, eps_scale=None, order=1):
    """ring[eps]/(eps^2); optionally with the automorphism eps -> c*eps
    for a unit c with c^order = 1."""
    z, o = ring.zero(), ring.one()
    mult = [[[o, z], [z, o]], [[z, o], [z, z]]]
    aut = None
    if eps_scale is not None:
        aut = [[o, z], [z, eps_scale]]
    return FiniteRankAlgebra(ring, mult, [o, z], commutative=True,
                             automorphism=aut, automorphism_order=order,
                             name="%r[eps]/(eps^2)" % (ring,))


def cyclic_group_algebra(ring, n, negate_generator=False):
    """ring[C_n] with basis the group elements; for n = 2 the sign
    automorphism g -> -g (order 2) can be attached."""
    z, o = ring.zero(), ring.one()
    d = n
    mult = [[[o if l == (i + j) % n else z for l in range(d)]
             for j in range(d)] for i in range(d)]
    unit = [o if l == 0 else z for l in range(d)]
    aut = None
    order = 1
    if negate_generator:
        if n != 2:
            raise ValueError("sign automorphism only implemented for C_2")
        aut = [[o, z], [z, ring.neg(o)]]
        order = 2
    return FiniteRankAlgebra(ring, mult, unit, commutative=True,
                             automorphism=aut, automorphism_order=order,
                             name="%r[C_%d]" % (ring, n))


def truncated_polynomial_algebra(ring, k):
    """ring[x]/(x^k) with monomial basis."""
    z, o = ring.zero(), ring.one()
    mult = [[[o if l == i + j else z for l in range(k)]
             for j in range(k)] for i in range(k)]
    unit = [o if l == 0 else z for l in range(k)]
    return FiniteRankAlgebra(ring, mult, unit, commutative=True,
                             name="%r[x]/(x^%d)" % (ring, k))


def tensor_power_algebra(R, n):
    """R^{(x) n} on the tuple basis, with the right-rotation automorphism
    (last slot to the front) of order dividing n attached."""
    ring = R.ring
    d = R.rank
    tuples = list(product(range(d), repeat=n))
    index = {t: i for i, t in enumerate(tuples)}
    rank = d ** n
    z = ring.zero()

    def tensor_vector(vecs):
        out = [z] * rank
        for t in product(*[range(d)] * n):
            c = ring.one()
            ok = True
            for pos, idx in enumerate(t):
                v = vecs[pos][idx]
                if ring.is_zero(v):
                    ok = False
                    break
                c = ring.mul(c, v)
            if ok:
                out[index[t]] = ring.add(out[index[t]], c)
        return out

    mult = []
    for t1 in tuples:
        row = []
        for t2 in tuples:
            row.append(tensor_vector([R.mult[a][b] for a, b in zip(t1, t2)]))
        mult.append(row)
    unit = tensor_vector([R.unit] * n)
    aut = []
    for t in tuples:
        rot = (t[-1],) + t[:-1]
        vec = [z] * rank
        vec[index[rot]] = ring.one()
        aut.append(vec)
    return FiniteRankAlgebra(ring, mult, unit, commutative=R.commutative,
                             automorphism=aut, automorphism_order=n,
                             name="%r^(x)%d" % (R, n))


# ---------------------------------------------------------------------------
# bar constructions

def _tuple_index(t, d):
    idx = 0
    for x in t:
        idx = idx * d + x
    return idx


def _index_tuple(idx, d, length):
    out = []
    for _ in range(length):
        out.append(idx % d)
        idx //= d
    return tuple(reversed(out))


def _bar_face_inner(R, k, i):
    """d_i for 0 <= i < k: multiply tensor factors i and i+1."""
    ring, d = R.ring, R.rank
    cols = []
    for t in product(range(d), repeat=k + 1):
        col = {}
        prodvec = R.mult[t[i]][t[i + 1]]
        for l, c in enumerate(prodvec):
            if not ring.is_zero(c):
                target = t[:i] + (l,) + t[i + 2:]
                col[_tuple_index(target, d)] = c
        cols.append(col)
    return RingMatrix.from_columns_dict(ring, cols, d ** k)


def _bar_degen(R, k, i):
    """s_i: insert the unit vector as new factor i+1."""
    ring, d = R.ring, R.rank
    cols = []
    for t in product(range(d), repeat=k + 1):
        col = {}
        for l, c in enumerate(R.unit):
            if not ring.is_zero(c):
                target = t[:i + 1] + (l,) + t[i + 1:]
                col[_tuple_index(target, d)] = c
        cols.append(col)
    return RingMatrix.from_columns_dict(ring, cols, d ** (k + 2))


def _bar_alpha(R, k):
    """alpha_k: rotate the last factor to the front and hit it with g."""
    ring, d = R.ring, R.rank
    cols = []
    for t in product(range(d), repeat=k + 1):
        col = {}
        for l, c in enumerate(R.aut[t[k]]):
            if not ring.is_zero(c):
                target = (l,) + t[:k]
                col[_tuple_index(target, d)] = c
        cols.append(col)
    return RingMatrix.from_columns_dict(ring, cols, d ** (k + 1))


def twisted_cyclic_bar(R, D, budget=200000):
    """The bar construction of R twisted by its automorphism of declared
    order n: level q is R^{(x)(q+1)}, inner faces multiply adjacent
    factors, alpha_q is rotation-then-g, and the last face is
    d_q = d_0 o alpha_q.  Returns a LambdaModule with parameter n."""
    d = R.rank
    if d ** (D + 1) > budget:
        raise BudgetError("rank %d at truncation %d exceeds budget" % (d, D))
    ring = R.ring
    ranks = [d ** (k + 1) for k in range(D + 1)]
    alphas = {k: _bar_alpha(R, k) for k in range(D + 1)}
    faces = {}
    degens = {}
    for k in range(1, D + 1):
        for i in range(k):
            faces[(k, i)] = _bar_face_inner(R, k, i)
        faces[(k, k)] = faces[(k, 0)] @ alphas[k]
    for k in range(D):
        for i in range(k + 1):
            degens[(k, i)] = _bar_degen(R, k, i)
    return LambdaModule(ring, ranks, faces, degens, R.aut_order, alphas)


def cyclic_bar(R, D, budget=200000):
    """The cyclic bar construction (trivial twist); a LambdaModule with
    n = 1 whose alpha operators are the cyclic rotations."""
    if R.aut_order == 1 and all(
            R.aut[i] == R.basis_vector(i) for i in range(R.rank)):
        return twisted_cyclic_bar(R, D, budget=budget)
    untwisted = FiniteRankAlgebra(R.ring, R.mult, R.unit,
                                  commutative=R.commutative, name=R.name)
    return twisted_cyclic_bar(untwisted, D, budget=budget)


def cyclic_bar_relative(R, D, budget=200000):
    """Bar construction of an algebra over its own coefficient ring; the
    tensors are over that base by construction, so this is cyclic_bar
    under a name that stresses the relative reading."""
    return cyclic_bar(R, D, budget=budget)


class Bimodule:
    """A bimodule over R on a free basis: left[i][j] = e_i |> m_j and
    right[j][i] = m_j <| e_i, both vectors over the bimodule basis."""

    def __init__(self, R, left, right):
        self.R = R
        self.rank = len(left[0]) if left else len(right[0])
        self.left = left
        self.right = right
        self.validate()

    def left_act(self, avec, mvec):
        ring = self.R.ring
        out = [ring.zero()] * self.rank
        for i, a in enumerate(avec):
            if ring.is_zero(a):
                continue
            for j, m in enumerate(mvec):
                if ring.is_zero(m):
                    continue
                c = ring.mul(a, m)
                for l, s in enumerate(self.left[i][j]):
                    if not ring.is_zero(s):
                        out[l] = ring.add(out[l], ring.mul(c, s))
        return out

    def right_act(self, mvec, avec):
        ring = self.R.ring
        out = [ring.zero()] * self.rank
        for j, m in enumerate(mvec):
            if ring.is_zero(m):
                continue
            for i, a in enumerate(avec):
                if ring.is_zero(a):
                    continue
                c = ring.mul(m, a)
                for l, s in enumerate(self.right[j][i]):
                    if not ring.is_zero(s):
                        out[l] = ring.add(out[l], ring.mul(c, s))
        return out

    def validate(self):
        R = self.R
        d, m = R.rank, self.rank
        def mb(j):
            return [R.ring.one() if l == j else R.ring.zero() for l in range(m)]
        for j in range(m):
            if self.left_act(R.unit, mb(j)) != mb(j):
                raise ValueError("left unit law fails")
            if self.right_act(mb(j), R.unit) != mb(j):
                raise ValueError("right unit law fails")
        for i in range(d):
            for j in range(d):
                for l in range(m):
                    if (self.left_act(R.mult[i][j], mb(l))
                            != self.left_act(R.basis_vector(i),
                                             self.left_act(R.basis_vector(j), mb(l)))):
                        raise ValueError("left associativity fails")
                    if (self.right_act(mb(l), R.mult[i][j])
                            != self.right_act(self.right_act(mb(l), R.basis_vector(i)),
                                              R.basis_vector(j))):
                        raise ValueError("right associativity fails")
                    if (self.right_act(self.left_act(R.basis_vector(i), mb(l)),
                                       R.basis_vector(j))
                            != self.left_act(R.basis_vector(i),
                                             self.right_act(mb(l), R.basis_vector(j)))):
                        raise ValueError("bimodule compatibility fails")


def regular_bimodule(R):
    left = [[R.mult[i][j] for j in range(R.rank)] for i in range(R.rank)]
    right = [[R.mult[j][i] for i in range(R.rank)] for j in range(R.rank)]
    return Bimodule(R, left, right)


def twisted_regular_bimodule(R):
    """Right action regular, left action twisted by the automorphism:
    a |> m = g(a) * m."""
    left = [[R.multiply(R.aut[i], R.basis_vector(j)) for j in range(R.rank)]
            for i in range(R.rank)]
    right = [[R.mult[j][i] for i in range(R.rank)] for j in range(R.rank)]
    return Bimodule(R, left, right)


def bar_with_coefficients(R, M, D, budget=200000):
    """Bar construction with bimodule coefficients: level k is
    M (x) R^{(x)k}; d_0 merges M with the first algebra factor through
    the right action m <| a_1, inner faces multiply adjacent algebra
    factors, and the last face rotates a_k to the front of M and applies
    the left action a_k |> m."""
    ring, d, m = R.ring, R.rank, M.rank
    if m * d ** D > budget:
        raise BudgetError("coefficients at truncation %d exceed budget" % D)
    ranks = [m * d ** k for k in range(D + 1)]

    def flat(j, t):
        return j * (d ** len(t)) + _tuple_index(t, d) if t else j

    faces = {}
    degens = {}
    for k in range(1, D + 1):
        for i in range(k + 1):
            cols = []
            for j in range(m):
                mb = [ring.one() if l == j else ring.zero() for l in range(m)]
                for t in product(range(d), repeat=k):
                    col = {}
                    if i == 0:
                        vec = M.right_act(mb, R.basis_vector(t[0]))
                        rest = t[1:]
                        for l, c in enumerate(vec):
                            if not ring.is_zero(c):
                                col[flat(l, rest)] = c
                    elif i < k:
                        prodvec = R.mult[t[i - 1]][t[i]]
                        for l, c in enumerate(prodvec):
                            if not ring.is_zero(c):
                                target = t[:i - 1] + (l,) + t[i + 1:]
                                col[flat(j, target)] = c
                    else:
                        vec = M.left_act(R.basis_vector(t[k - 1]), mb)
                        rest = t[:k - 1]
                        for l, c in enumerate(vec):
                            if not ring.is_zero(c):
                                col[flat(l, rest)] = c
                    cols.append(col)
            faces[(k, i)] = RingMatrix.from_columns_dict(ring, cols, ranks[k - 1])
    for k in range(D):
        for i in range(k + 1):
            cols = []
            for j in range(m):
                for t in product(range(d), repeat=k):
                    col = {}
                    for l, c in enumerate(R.unit):
                        if not ring.is_zero(c):
                            target = t[:i] + (l,) + t[i:]
                            col[flat(j, target)] = c
                    cols.append(col)
            degens[(k, i)] = RingMatrix.from_columns_dict(ring, cols, ranks[k + 1])
    return SimplicialModule(ring, ranks, faces, degens)


def subdivision_matches_twisted_bar(R, n, D, budget=2000000):
    """Checks, as strict levelwise matrix equality under the canonical
    reindexing of tensor factors, that sd_n of the cyclic bar of R is
    the twisted cyclic bar of the n-fold tensor power algebra of R
    (equivalently, the bar construction with coefficients in the
    rotation-twisted regular bimodule), including the operators.

    The reindexing sends bar factor j at subdivided level k to
    (block j mod (k+1), slot j div (k+1))."""
    d = R.rank
    if d ** (n * (D + 1)) > budget:
        raise BudgetError("rank %d, n=%d, D=%d exceeds budget" % (d, n, D))
    C = cyclic_bar(R, n * (D + 1) - 1)
    sd = edgewise_subdivide_module(C, n, D)
    S = tensor_power_algebra(R, n)
    B = twisted_cyclic_bar(S, D)
    perms = {}
    for k in range(D + 1):
        N = n * (k + 1)

        def fn(col, k=k, N=N):
            t = _index_tuple(col, d, N)
            out = [0] * N
            for j in range(N):
                b, s = j % (k + 1), j // (k + 1)
                out[b * n + s] = t[j]
            return _tuple_index(tuple(out), d)

        perms[k] = RingMatrix.from_basis_map(R.ring, fn, d ** N, d ** N)
    for k in range(1, D + 1):
        for i in range(k + 1):
            if B.face(k, i) @ perms[k] != perms[k - 1] @ sd.face(k, i):
                return False
    for k in range(D):
        for i in range(k + 1):
            if B.degen(k, i) @ perms[k] != perms[k + 1] @ sd.degen(k, i):
                return False
    for k in range(D + 1):
        if B.alphas[k] @ perms[k] != perms[k] @ sd.alphas[k]:
            return False
        if cn_generator(B, k) @ perms[k] != perms[k] @ cn_generator(sd, k):
            return False
    return True


# ---------------------------------------------------------------------------
# homology and the Kahler oracle

def hochschild_homology(R, i, budget=200000):
    """HH_i(R) from the Moore complex of the cyclic bar construction,
    truncated at i+1 so the answer is reliable."""
    C = moore_complex(cyclic_bar(R, i + 1, budget=budget))
    return C.homology(i)


def kahler_differentials(R):
    """The module of differentials of a commutative finite-rank algebra,
    presented by generators e_l de_k and the Leibniz relations
    d(e_i e_j) = e_i de_j + e_j de_i (multiplied through by every basis
    vector), plus d(unit) = 0.  Returns its AbelianGroupShape.  This is
    the independent degree-1 oracle; it never touches the bar complex."""
    if not R.commutative:
        raise ValueError("Kahler differentials need a commutative algebra")
    ring, d = R.ring, R.rank
    ngen = d * d  # generator (l, k) = e_l de_k

    def gen_index(l, k):
        return l * d + k

    relations = []
    for i in range(d):
        for j in range(d):
            for m_ in range(d):
                coords = {}

                def bump(l, k, c):
                    if ring.is_zero(c):
                        return
                    key = gen_index(l, k)
                    coords[key] = ring.add(coords.get(key, ring.zero()), c)

                # e_m * d(e_i e_j) = sum_c mult[i][j][c] e_m de_c
                for cidx, c in enumerate(R.mult[i][j]):
                    bump(m_, cidx, c)
                # - e_m e_i de_j
                for l, c in enumerate(R.mult[m_][i]):
                    bump(l, j, ring.neg(c))
                # - e_m e_j de_i
                for l, c in enumerate(R.mult[m_][j]):
                    bump(l, i, ring.neg(c))
                relations.append(coords)
    for m_ in range(d):
        coords = {}
        for l, c in enumerate(R.unit):
            if not ring.is_zero(c):
                coords[gen_index(m_, l)] = c
        relations.append(coords)

    if isinstance(ring, RationalRing):
        rows = [[rel.get(g, ring.zero()) for rel in relations] for g in range(ngen)]
        cols = [[rows[g][j] for g in range(ngen)] for j in range(len(relations))]
        rk = _field_rank(cols) if relations else 0
        return AbelianGroupShape(ngen - rk)
    if isinstance(ring, IntegerRing):
        gens = [[int(rel.get(g, 0)) for rel in relations] for g in range(ngen)]
        return lattice_quotient_shape(ngen, gens)
    if isinstance(ring, IntegerModRing):
        m = ring.m
        gens = [[int(rel.get(g, 0)) for rel in relations] for g in range(ngen)]
        extra = [[m if i == j else 0 for j in range(ngen)] for i in range(ngen)]
        from .intmat import hstack
        return lattice_quotient_shape(ngen, hstack(gens, extra))
    raise ValueError("Kahler oracle unsupported over %r" % (ring,))
