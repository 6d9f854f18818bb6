"""Truncated simplicial modules, Lambda_n^op structure, Moore and
normalized chain complexes, and edgewise subdivision of cyclic modules.

A SimplicialModule is a levelwise free module with face/degeneracy
matrices; identities are verified exhaustively at construction.  A
LambdaModule attaches level automorphisms alpha_q of order n(q+1)
satisfying the five compatibilities with faces and degeneracies; the
n = 1 case is a cyclic module with alpha = the cyclic rotation.
"""

from fractions import Fraction

from .linalg import RingMatrix
from .rings import ZZ, QQ, IntegerModRing, IntegerRing, RationalRing
from .homology import homology_at, split_free_quotient, AbelianGroupShape, CompositionError


class SimplicialModule:
    def __init__(self, ring, ranks, faces, degens, check=True):
        self.ring = ring
        self.ranks = list(ranks)
        self.D = len(ranks) - 1
        self.faces = dict(faces)
        self.degens = dict(degens)
        if check:
            self.validate()

    def face(self, k, i):
        return self.faces[(k, i)]

    def degen(self, k, i):
        return self.degens[(k, i)]

    def validate(self):
        D = self.D
        for k in range(1, D + 1):
            for i in range(k + 1):
                m = self.faces[(k, i)]
                if (m.nrows, m.ncols) != (self.ranks[k - 1], self.ranks[k]):
                    raise ValueError("face d_%d at level %d has wrong shape" % (i, k))
        for k in range(D):
            for i in range(k + 1):
                m = self.degens[(k, i)]
                if (m.nrows, m.ncols) != (self.ranks[k + 1], self.ranks[k]):
                    raise ValueError("degeneracy s_%d at level %d has wrong shape" % (i, k))
        for k in range(2, D + 1):
            for j in range(k + 1):
                for i in range(j):
                    if (self.faces[(k - 1, i)] @ self.faces[(k, j)]
                            != self.faces[(k - 1, j - 1)] @ self.faces[(k, i)]):
                        raise ValueError("d_%d d_%d fails at level %d" % (i, j, k))
        for k in range(D - 1):
            for j in range(k + 1):
                for i in range(j + 1):
                    if (self.degens[(k + 1, i)] @ self.degens[(k, j)]
                            != self.degens[(k + 1, j + 1)] @ self.degens[(k, i)]):
                        raise ValueError("s_%d s_%d fails at level %d" % (i, j, k))
        for k in range(D):
            ident = RingMatrix.identity(self.ring, self.ranks[k])
            for j in range(k + 1):
                for i in range(k + 2):
                    lhs = self.faces[(k + 1, i)] @ self.degens[(k, j)]
                    if i == j or i == j + 1:
                        rhs = ident
                    elif i < j:
                        rhs = self.degens[(k - 1, j - 1)] @ self.faces[(k, i)]
                    else:
                        rhs = self.degens[(k - 1, j)] @ self.faces[(k, i - 1)]
                    if lhs != rhs:
                        raise ValueError("d_%d s_%d fails at level %d" % (i, j, k))


class LambdaModule(SimplicialModule):
    """Simplicial module with operators alpha_q of order n(q+1)."""

    def __init__(self, ring, ranks, faces, degens, n, alphas, check=True):
        super().__init__(ring, ranks, faces, degens, check=check)
        self.n = n
        self.alphas = dict(alphas)
        if check:
            report = check_lambda_relations(self)
            if not report.all_ok:
                raise ValueError("operator relations fail: %s" % (report.failures[0],))


class LambdaReport:
    def __init__(self):
        self.checked = 0
        self.failures = []

    @property
    def all_ok(self):
        return not self.failures

    def record(self, name, level, ok):
        self.checked += 1
        if not ok:
            self.failures.append((name, level))

    def __repr__(self):
        status = "ok" if self.all_ok else "FAIL %r" % (self.failures,)
        return "LambdaReport(%d checks, %s)" % (self.checked, status)


def check_lambda_relations(L):
    """Verify the five operator relations at every stored level:
    alpha^(n(q+1)) = id, d_0 alpha = d_q, d_i alpha = alpha d_{i-1},
    s_i alpha = alpha s_{i-1}, s_0 alpha = alpha^2 s_q.  Relations whose
    right-hand side needs level q+1 stop at q = D-1."""
    rep = LambdaReport()
    n, D = L.n, L.D
    for q in range(D + 1):
        a = L.alphas[q]
        rep.record("alpha_q^(n(q+1)) = id", q,
                   a ** (n * (q + 1)) == RingMatrix.identity(L.ring, L.ranks[q]))
    for q in range(1, D + 1):
        a = L.alphas[q]
        rep.record("d_0 alpha_q = d_q", q,
                   L.face(q, 0) @ a == L.face(q, q))
        for i in range(1, q + 1):
            rep.record("d_%d alpha_q = alpha d_%d" % (i, i - 1), q,
                       L.face(q, i) @ a == L.alphas[q - 1] @ L.face(q, i - 1))
    for q in range(D):
        a = L.alphas[q]
        a1 = L.alphas[q + 1]
        rep.record("s_0 alpha_q = alpha^2 s_q", q,
                   L.degen(q, 0) @ a == (a1 @ a1) @ L.degen(q, q))
        for i in range(1, q + 1):
            rep.record("s_%d alpha_q = alpha s_%d" % (i, i - 1), q,
                       L.degen(q, i) @ a == a1 @ L.degen(q, i - 1))
    return rep


class SimplicialModuleMap:
    """Levelwise matrices commuting with all faces and degeneracies."""

    def __init__(self, source, target, mats, check=True):
        self.source = source
        self.target = target
        self.mats = list(mats)
        if check:
            self.validate()

    def validate(self):
        D = min(self.source.D, self.target.D, len(self.mats) - 1)
        for k in range(D + 1):
            m = self.mats[k]
            if (m.nrows, m.ncols) != (self.target.ranks[k], self.source.ranks[k]):
                raise ValueError("level %d matrix has wrong shape" % k)
        for k in range(1, D + 1):
            for i in range(k + 1):
                if (self.mats[k - 1] @ self.source.face(k, i)
                        != self.target.face(k, i) @ self.mats[k]):
                    raise ValueError("map fails d_%d at level %d" % (i, k))
        for k in range(D):
            for i in range(k + 1):
                if (self.mats[k + 1] @ self.source.degen(k, i)
                        != self.target.degen(k, i) @ self.mats[k]):
                    raise ValueError("map fails s_%d at level %d" % (i, k))

    def __eq__(self, other):
        if not isinstance(other, SimplicialModuleMap):
            return NotImplemented
        return self.mats == other.mats


def module_apply_monotone(M, phi, src_level):
    """Matrix of the operator M(phi): level src_level -> level k for a
    monotone phi: [k] -> [src_level]."""
    l = src_level
    if any(phi[i] > phi[i + 1] for i in range(len(phi) - 1)):
        raise ValueError("map is not monotone")
    image = sorted(set(phi))
    missed = [m for m in range(l + 1) if m not in set(image)]
    cur = RingMatrix.identity(M.ring, M.ranks[l])
    level = l
    for m in sorted(missed, reverse=True):
        cur = M.face(level, m) @ cur
        level -= 1
    pos = {v: i for i, v in enumerate(image)}
    sigma = [pos[v] for v in phi]
    return _module_apply_surjection(M, sigma, level, cur)


def _module_apply_surjection(M, sigma, level, cur):
    k = len(sigma) - 1
    if k == level:
        return cur
    i = next(i for i in range(len(sigma) - 1) if sigma[i] == sigma[i + 1])
    shorter = sigma[:i + 1] + sigma[i + 2:]
    inner = _module_apply_surjection(M, shorter, level, cur)
    return M.degen(k - 1, i) @ inner


def _concat(phi, dst_top, copies):
    out = []
    for c in range(copies):
        out.extend(v + c * (dst_top + 1) for v in phi)
    return out


def edgewise_subdivide_module(L, r, D, check=True):
    """Edgewise subdivision of a cyclic module (a LambdaModule with
    n = 1): level k of the result is level r(k+1)-1 of L, faces and
    degeneracies are the r-fold concatenation operators, and the
    operator at level k is L's cyclic operator at level r(k+1)-1, which
    has order r(k+1); the result is a LambdaModule with parameter r.
    Its C_r-generator at level k is alpha_k^(k+1)."""
    if L.n != 1:
        raise ValueError("can only subdivide a cyclic module (n = 1)")
    need = r * (D + 1) - 1
    if L.D < need:
        raise ValueError("need truncation >= %d, have %d" % (need, L.D))
    ranks = [L.ranks[r * (k + 1) - 1] for k in range(D + 1)]
    faces = {}
    degens = {}
    for k in range(1, D + 1):
        src = r * (k + 1) - 1
        for i in range(k + 1):
            delta = [v for v in range(k + 1) if v != i]
            faces[(k, i)] = module_apply_monotone(L, _concat(delta, k, r), src)
    for k in range(D):
        src = r * (k + 1) - 1
        for i in range(k + 1):
            sigma = list(range(i + 1)) + list(range(i, k + 1))
            degens[(k, i)] = module_apply_monotone(L, _concat(sigma, k, r), src)
    alphas = {k: L.alphas[r * (k + 1) - 1] for k in range(D + 1)}
    return LambdaModule(L.ring, ranks, faces, degens, r, alphas, check=check)


def cn_generator(L, k):
    """The C_n-generator alpha_k^(k+1) of a LambdaModule at level k."""
    return L.alphas[k] ** (k + 1)


class ChainComplex:
    """Nonnegatively graded complex of free modules; diffs[k] maps
    degree k to degree k-1.  d o d = 0 is verified at construction."""

    def __init__(self, ring, dims, diffs, check=True):
        self.ring = ring
        self.dims = list(dims)
        self.D = len(dims) - 1
        self.diffs = dict(diffs)
        if check:
            self.validate()

    def validate(self):
        for k in range(1, self.D + 1):
            m = self.diffs[k]
            if (m.nrows, m.ncols) != (self.dims[k - 1], self.dims[k]):
                raise ValueError("differential at degree %d has wrong shape" % k)
        for k in range(2, self.D + 1):
            if not (self.diffs[k - 1] @ self.diffs[k]).is_zero():
                raise CompositionError("d o d != 0 at degree %d" % k)

    def homology(self, i, unreliable_ok=False):
        """AbelianGroupShape of H_i.  Degree D (the truncation top) has
        no incoming differential stored and is only computed when
        unreliable_ok is set."""
        if i < 0 or i > self.D:
            raise ValueError("degree %d out of range" % i)
        if i == self.D and not unreliable_ok:
            raise ValueError("homology at the truncation level %d is unreliable; "
                             "pass unreliable_ok=True to force" % i)
        ring = self.ring
        b = self.dims[i]
        d_out = self.diffs[i] if i >= 1 else RingMatrix.zero(ring, 0, b)
        d_in = (self.diffs[i + 1] if i + 1 <= self.D
                else RingMatrix.zero(ring, b, 0))
        if isinstance(ring, (IntegerRing, IntegerModRing)):
            din_rows = d_in.to_int_rows()
            if not din_rows:
                din_rows = [[] for _ in range(b)]
            dout_rows = d_out.to_int_rows()
            return homology_at(din_rows, dout_rows, ring)
        if isinstance(ring, RationalRing):
            from .homology import _field_rank
            din_rows = d_in.to_rows()
            dout_rows = d_out.to_rows()
            dim = b - (_field_rank(dout_rows) if dout_rows else 0)
            dim -= _field_rank(din_rows) if (din_rows and din_rows[0]) else 0
            return AbelianGroupShape(dim)
        raise ValueError("homology unsupported over %r" % (ring,))


def moore_complex(M):
    """Alternating-sum differential on the levels of M."""
    ring = M.ring
    diffs = {}
    for k in range(1, M.D + 1):
        total = RingMatrix.zero(ring, M.ranks[k - 1], M.ranks[k])
        for i in range(k + 1):
            f = M.face(k, i)
            total = total + (f if i % 2 == 0 else -f)
        diffs[k] = total
    return ChainComplex(ring, M.ranks, diffs)


def _field_split_quotient(span_cols, r):
    """Projection/section for the quotient of Q^r by the span of the
    given columns (list of dicts {row: Fraction})."""
    # column-reduce the span to find a basis and its pivot rows
    basis = []
    pivots = []
    for col in span_cols:
        vec = dict(col)
        for pr, bvec in zip(pivots, basis):
            if pr in vec:
                f = vec[pr]
                for i, v in bvec.items():
                    vec[i] = vec.get(i, Fraction(0)) - f * v
                    if vec[i] == 0:
                        del vec[i]
        if vec:
            piv = min(vec)
            scale = vec[piv]
            basis.append({i: v / scale for i, v in vec.items()})
            pivots.append(piv)
    free_rows = [i for i in range(r) if i not in set(pivots)]
    # back-substitute so each basis vector is zero at the other pivots
    for a in range(len(basis)):
        for b_ in range(len(basis)):
            if a != b_ and pivots[b_] in basis[a]:
                f = basis[a][pivots[b_]]
                for i, v in basis[b_].items():
                    basis[a][i] = basis[a].get(i, Fraction(0)) - f * v
                    if basis[a][i] == 0:
                        del basis[a][i]
    q = len(free_rows)
    P = {}
    for new_i, i in enumerate(free_rows):
        P[(new_i, i)] = Fraction(1)
        # subtract the free-row components of the basis vectors so that
        # P kills the span
        for bvec, piv in zip(basis, pivots):
            if i in bvec:
                P[(new_i, piv)] = P.get((new_i, piv), Fraction(0)) - bvec[i]
    S = {(i, new_i): Fraction(1) for new_i, i in enumerate(free_rows)}
    return P, S, q, free_rows


def normalized_complex(M):
    """Quotient of the Moore complex by the degenerate part (which is a
    direct summand levelwise); the induced differential is computed via
    an explicit projection and section."""
    ring = M.ring
    moore = moore_complex(M)
    projections = {0: RingMatrix.identity(ring, M.ranks[0])}
    sections = {0: RingMatrix.identity(ring, M.ranks[0])}
    dims = [M.ranks[0]]
    for k in range(1, M.D + 1):
        span_cols = []
        for i in range(k):
            s = M.degen(k - 1, i)
            for j in range(s.ncols):
                span_cols.append(s.column(j))
        r = M.ranks[k]
        if isinstance(ring, RationalRing):
            P, S, q, _ = _field_split_quotient(span_cols, r)
            projections[k] = RingMatrix(ring, q, r, P)
            sections[k] = RingMatrix(ring, r, q, S)
        elif isinstance(ring, (IntegerRing, IntegerModRing)):
            span = [[0] * len(span_cols) for _ in range(r)]
            for j, col in enumerate(span_cols):
                for i, v in col.items():
                    span[i][j] = int(v)
            modulus = ring.m if isinstance(ring, IntegerModRing) else None
            P, S = split_free_quotient(r, span, modulus=modulus)
            projections[k] = RingMatrix.from_rows(ring, P) if P else RingMatrix.zero(ring, 0, r)
            sections[k] = (RingMatrix.from_rows(ring, S)
                           if S and S[0] else RingMatrix.zero(ring, r, 0))
        else:
            raise ValueError("normalization unsupported over %r" % (ring,))
        dims.append(projections[k].nrows)
    diffs = {}
    for k in range(1, M.D + 1):
        diffs[k] = projections[k - 1] @ moore.diffs[k] @ sections[k]
    return ChainComplex(ring, dims, diffs)
