"""Finite truncated simplicial sets, the simplicial circle, edgewise
subdivision, and the circle covering maps.

A FiniteSimplicialSet stores levels 0..D as lists of simplices and the
face/degeneracy maps as index lists; all simplicial identities are
checked exhaustively at construction.  Operators for arbitrary monotone
maps are computed by epi-mono factorization, and the r-fold edgewise
subdivision applies the r-fold concatenation of each structure map, so
sd_r sd_s X and sd_{rs} X agree on the nose.
"""


class TruncationError(ValueError):
    pass


def _compose(outer, inner):
    return [outer[x] for x in inner]


class FiniteSimplicialSet:
    """Levels 0..D; faces[k][i] maps level k to level k-1, degeneracies
    degens[k][i] map level k to level k+1, both as index lists.  An
    optional cyclic operator (order k+1 at level k) can be attached."""

    def __init__(self, levels, faces, degens, cyclic=None, check=True):
        self.levels = [list(l) for l in levels]
        self.D = len(levels) - 1
        self.faces = faces
        self.degens = degens
        self.cyclic = cyclic
        if check:
            self.validate()

    def size(self, k):
        return len(self.levels[k])

    def face(self, k, i):
        return self.faces[k][i]

    def degen(self, k, i):
        return self.degens[k][i]

    def validate(self):
        D = self.D
        for k in range(1, D + 1):
            if len(self.faces[k]) != k + 1:
                raise ValueError("level %d needs %d faces" % (k, k + 1))
            for i in range(k + 1):
                m = self.faces[k][i]
                if len(m) != self.size(k) or any(not 0 <= x < self.size(k - 1) for x in m):
                    raise ValueError("face d_%d at level %d malformed" % (i, k))
        for k in range(D):
            if len(self.degens[k]) != k + 1:
                raise ValueError("level %d needs %d degeneracies" % (k, k + 1))
            for i in range(k + 1):
                m = self.degens[k][i]
                if len(m) != self.size(k) or any(not 0 <= x < self.size(k + 1) for x in m):
                    raise ValueError("degeneracy s_%d at level %d malformed" % (i, k))
        # d_i d_j = d_{j-1} d_i for i < j
        for k in range(2, D + 1):
            for j in range(k + 1):
                for i in range(j):
                    lhs = _compose(self.faces[k - 1][i], self.faces[k][j])
                    rhs = _compose(self.faces[k - 1][j - 1], self.faces[k][i])
                    if lhs != rhs:
                        raise ValueError("d_%d d_%d fails at level %d" % (i, j, k))
        # s_i s_j = s_{j+1} s_i for i <= j
        for k in range(D - 1):
            for j in range(k + 1):
                for i in range(j + 1):
                    lhs = _compose(self.degens[k + 1][i], self.degens[k][j])
                    rhs = _compose(self.degens[k + 1][j + 1], self.degens[k][i])
                    if lhs != rhs:
                        raise ValueError("s_%d s_%d fails at level %d" % (i, j, k))
        # d_i s_j relations
        for k in range(D):
            for j in range(k + 1):
                for i in range(k + 2):
                    lhs = _compose(self.faces[k + 1][i], self.degens[k][j])
                    if i == j or i == j + 1:
                        rhs = list(range(self.size(k)))
                    elif i < j:
                        rhs = _compose(self.degens[k - 1][j - 1], self.faces[k][i])
                    else:
                        rhs = _compose(self.degens[k - 1][j], self.faces[k][i - 1])
                    if lhs != rhs:
                        raise ValueError("d_%d s_%d fails at level %d" % (i, j, k))
        if self.cyclic is not None:
            self.validate_cyclic()

    def validate_cyclic(self):
        """Connes cyclic identities for the attached operator t."""
        t = self.cyclic
        for k in range(self.D + 1):
            if len(t[k]) != self.size(k):
                raise ValueError("cyclic operator at level %d malformed" % k)
            cur = list(range(self.size(k)))
            for _ in range(k + 1):
                cur = _compose(t[k], cur)
            if cur != list(range(self.size(k))):
                raise ValueError("t^{%d} != id at level %d" % (k + 1, k))
        for k in range(1, self.D + 1):
            if _compose(self.faces[k][0], t[k]) != self.faces[k][k]:
                raise ValueError("d_0 t != d_%d at level %d" % (k, k))
            for i in range(1, k + 1):
                lhs = _compose(self.faces[k][i], t[k])
                rhs = _compose(t[k - 1], self.faces[k][i - 1])
                if lhs != rhs:
                    raise ValueError("d_%d t fails at level %d" % (i, k))
        for k in range(self.D):
            t2 = _compose(t[k + 1], t[k + 1])
            if _compose(self.degens[k][0], t[k]) != _compose(t2, self.degens[k][k]):
                raise ValueError("s_0 t fails at level %d" % k)
            for i in range(1, k + 1):
                lhs = _compose(self.degens[k][i], t[k])
                rhs = _compose(t[k + 1], self.degens[k][i - 1])
                if lhs != rhs:
                    raise ValueError("s_%d t fails at level %d" % (i, k))

    def nondegenerate(self, k):
        """Indices of simplices at level k not hit by any degeneracy."""
        if k == 0:
            return list(range(self.size(0)))
        hit = set()
        for i in range(k):
            hit.update(self.degens[k - 1][i])
        return [x for x in range(self.size(k)) if x not in hit]

    def apply_monotone(self, phi, src_level):
        """The operator X(phi): X_{src_level} -> X_{k} for a monotone
        phi: [k] -> [src_level], via epi-mono factorization."""
        l = src_level
        if any(phi[i] > phi[i + 1] for i in range(len(phi) - 1)):
            raise ValueError("map is not monotone: %r" % (phi,))
        if phi and (phi[0] < 0 or phi[-1] > l):
            raise ValueError("map out of range")
        image = sorted(set(phi))
        missed = [m for m in range(l + 1) if m not in set(image)]
        cur = list(range(self.size(l)))
        level = l
        for m in sorted(missed, reverse=True):
            cur = _compose(self.faces[level][m], cur)
            level -= 1
        # now at level len(image)-1; apply the surjection part
        pos = {v: i for i, v in enumerate(image)}
        sigma = [pos[v] for v in phi]
        cur2 = self._apply_surjection(sigma, level, cur)
        return cur2

    def _apply_surjection(self, sigma, level, cur):
        k = len(sigma) - 1
        if k == level:
            return cur
        i = next(i for i in range(len(sigma) - 1) if sigma[i] == sigma[i + 1])
        shorter = sigma[:i + 1] + sigma[i + 2:]
        inner = self._apply_surjection(shorter, level, cur)
        return _compose(self.degens[k - 1][i], inner)


def simplicial_circle(D):
    """The circle with one vertex and one nondegenerate 1-simplex,
    truncated at level D; level k is {0, 1, ..., k} with 0 the vertex
    class, and the attached cyclic operator is j -> j+1 mod (k+1)."""
    if D < 1:
        raise ValueError("truncation must be >= 1")
    levels = [list(range(k + 1)) for k in range(D + 1)]
    # representatives 0..k at level k; the class of k+1 is the vertex 0
    faces = {0: []}
    for k in range(1, D + 1):
        faces[k] = []
        for i in range(k + 1):
            col = []
            for j in range(k + 1):
                v = j - 1 if i < j else j
                col.append(0 if v == k else v)
            faces[k].append(col)
    degens = {}
    for k in range(D):
        degens[k] = []
        for i in range(k + 1):
            col = []
            for j in range(k + 1):
                v = j + 1 if i < j else j
                col.append(v)
            degens[k].append(col)
    cyclic = {k: [(j + 1) % (k + 1) for j in range(k + 1)] for k in range(D + 1)}
    return FiniteSimplicialSet(levels, faces, degens, cyclic=cyclic)


def _concat(phi, src_top, dst_top, copies):
    """copies-fold concatenation of a monotone map [src_top] -> [dst_top]."""
    out = []
    for c in range(copies):
        out.extend(v + c * (dst_top + 1) for v in phi)
    return out


def edgewise_subdivide_sset(X, r, D):
    """The r-fold edgewise subdivision truncated at level D;
    (sd_r X)_k = X_{r(k+1)-1} with structure maps the r-fold
    concatenations.  X must be truncated at level >= r(D+1)-1."""
    if r < 1:
        raise ValueError("r must be >= 1")
    need = r * (D + 1) - 1
    if X.D < need:
        raise TruncationError("need X truncated at >= %d, have %d" % (need, X.D))
    levels = [list(X.levels[r * (k + 1) - 1]) for k in range(D + 1)]
    faces = {0: []}
    degens = {}
    for k in range(1, D + 1):
        faces[k] = []
        src = r * (k + 1) - 1
        for i in range(k + 1):
            delta = [v for v in range(k + 1) if v != i]
            phi = _concat(delta, k - 1, k, r)
            faces[k].append(X.apply_monotone(phi, src))
    for k in range(D):
        degens[k] = []
        src = r * (k + 1) - 1
        for i in range(k + 1):
            sigma = list(range(i + 1)) + list(range(i, k + 1))
            phi = _concat(sigma, k + 1, k, r)
            degens[k].append(X.apply_monotone(phi, src))
    cyclic = None
    if X.cyclic is not None:
        # C_r-generator at level k: the (k+1)-st power of the cyclic
        # operator of X at level r(k+1)-1
        cyclic = {}
        for k in range(D + 1):
            src = r * (k + 1) - 1
            t = X.cyclic[src]
            cur = list(range(X.size(src)))
            for _ in range(k + 1):
                cur = _compose(t, cur)
            cyclic[k] = cur
    sd = FiniteSimplicialSet(levels, faces, degens, cyclic=None)
    sd.cn_generator = cyclic
    sd.cn_order = r if cyclic is not None else None
    return sd


class SimplicialMap:
    """A levelwise map of truncated simplicial sets; commutation with
    all faces and degeneracies is checked at construction."""

    def __init__(self, source, target, level_maps, check=True):
        self.source = source
        self.target = target
        self.level_maps = [list(m) for m in level_maps]
        if check:
            self.validate()

    def validate(self):
        D = min(self.source.D, self.target.D, len(self.level_maps) - 1)
        for k in range(D + 1):
            m = self.level_maps[k]
            if len(m) != self.source.size(k):
                raise ValueError("level %d map malformed" % k)
            if any(not 0 <= x < self.target.size(k) for x in m):
                raise ValueError("level %d map out of range" % k)
        for k in range(1, D + 1):
            for i in range(k + 1):
                lhs = _compose(self.level_maps[k - 1], self.source.faces[k][i])
                rhs = _compose(self.target.faces[k][i], self.level_maps[k])
                if lhs != rhs:
                    raise ValueError("map fails to commute with d_%d at level %d" % (i, k))
        for k in range(D):
            for i in range(k + 1):
                lhs = _compose(self.level_maps[k + 1], self.source.degens[k][i])
                rhs = _compose(self.target.degens[k][i], self.level_maps[k])
                if lhs != rhs:
                    raise ValueError("map fails to commute with s_%d at level %d" % (i, k))

    def __eq__(self, other):
        if not isinstance(other, SimplicialMap):
            return NotImplemented
        return self.level_maps == other.level_maps


def covering_map_q(r, D, circle_levels=None):
    """The quotient map sd_r S^1 -> S^1 (levelwise j -> j mod (k+1))
    whose realization is the degree-r covering of the circle.

    Returns (q, sd_circle, circle); the simplicial-map property is
    verified at construction.  circle_levels overrides the truncation of
    the big circle model (must be >= r(D+1)-1)."""
    need = r * (D + 1) - 1
    big = simplicial_circle(max(need, D, 1))
    circle = simplicial_circle(max(D, 1)) if circle_levels is None else simplicial_circle(circle_levels)
    sd = edgewise_subdivide_sset(big, r, D)
    maps = []
    for k in range(D + 1):
        maps.append([j % (k + 1) for j in range(sd.size(k))])
    q = SimplicialMap(sd, circle, maps)
    return q, sd, circle
