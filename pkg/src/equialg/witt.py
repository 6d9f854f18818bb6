"""p-typical Witt vectors of finite length over a commutative ring.

The ring structure comes from universal integer polynomials: the sum,
product, negation and Frobenius polynomials are solved once per (p, n)
from the ghost equations over Z[a_0..a_{n-1}, b_0..b_{n-1}] and cached;
arithmetic in W_n(R) is then substitution.  Every division by p^i in
the solving recursion is checked to be exact; failure would mean the
recursion is wrong, not the input.

Conventions: ghost_i(a) = sum_{j<=i} p^j a_j^(p^(i-j)).  Frobenius F
drops to length n-1 with ghost(Fw)_i = ghost(w)_{i+1}; Verschiebung V
shifts coordinates up; restriction truncates the last coordinate.
"""

import threading
from itertools import product

from .rings import ZZ, PolynomialRing, PolyElement, Zmod, is_prime


def _ghost_polynomial(ring, vars_, p, i):
    g = ring.from_int(0)
    for j in range(i + 1):
        g = g + ring.from_int(p ** j) * vars_[j] ** (p ** (i - j))
    return g


def _divide_exactly(poly, n):
    terms = {}
    for e, c in poly.terms.items():
        if c % n:
            raise AssertionError("inexact division by %d while solving ghost equations" % n)
        terms[e] = c // n
    return PolyElement(poly.ring, terms)


def _solve_ghost_recursion(ring, targets, p, length, prior_vars=None):
    """Polynomials q_0..q_{length-1} with ghost_i(q) = targets[i]."""
    out = []
    for i in range(length):
        rhs = targets[i]
        for j in range(i):
            rhs = rhs - ring.from_int(p ** j) * out[j] ** (p ** (i - j))
        out.append(_divide_exactly(rhs, p ** i))
    return out


class WittUniversalTables:
    """Sum/product/negation/Frobenius polynomials for W_n at the prime p."""

    def __init__(self, p, length):
        if not is_prime(p):
            raise ValueError("p must be prime, got %r" % (p,))
        if length < 1:
            raise ValueError("length must be >= 1")
        self.p = p
        self.length = length
        a_names = tuple("a%d" % i for i in range(length))
        b_names = tuple("b%d" % i for i in range(length))
        ring = PolynomialRing(ZZ, a_names + b_names)
        self.ring = ring
        a = [ring.gen(n) for n in a_names]
        b = [ring.gen(n) for n in b_names]
        ghost_a = [_ghost_polynomial(ring, a, p, i) for i in range(length)]
        ghost_b = [_ghost_polynomial(ring, b, p, i) for i in range(length)]
        self.sum_polys = _solve_ghost_recursion(
            ring, [ga + gb for ga, gb in zip(ghost_a, ghost_b)], p, length)
        self.prod_polys = _solve_ghost_recursion(
            ring, [ga * gb for ga, gb in zip(ghost_a, ghost_b)], p, length)
        self.neg_polys = _solve_ghost_recursion(
            ring, [-ga for ga in ghost_a], p, length)
        # Frobenius: length n input, length n-1 output, ghost shift
        self.frob_polys = _solve_ghost_recursion(
            ring, [ghost_a[i + 1] for i in range(length - 1)], p, length - 1)

    def check_ghost_identities(self):
        """Symbolic check that the tables solve the ghost equations."""
        p, n, ring = self.p, self.length, self.ring
        a = [ring.gen("a%d" % i) for i in range(n)]
        b = [ring.gen("b%d" % i) for i in range(n)]
        ghost_a = [_ghost_polynomial(ring, a, p, i) for i in range(n)]
        ghost_b = [_ghost_polynomial(ring, b, p, i) for i in range(n)]
        for i in range(n):
            gs = _ghost_polynomial(ring, self.sum_polys, p, i)
            if gs != ghost_a[i] + ghost_b[i]:
                return False
            gp = _ghost_polynomial(ring, self.prod_polys, p, i)
            if gp != ghost_a[i] * ghost_b[i]:
                return False
            gn = _ghost_polynomial(ring, self.neg_polys, p, i)
            if gn != -ghost_a[i]:
                return False
        for i in range(n - 1):
            gf = _ghost_polynomial(ring, self.frob_polys, p, i)
            if gf != ghost_a[i + 1]:
                return False
        return True


_tables_cache = {}
_tables_lock = threading.Lock()


def universal_tables(p, length):
    key = (p, length)
    with _tables_lock:
        if key not in _tables_cache:
            _tables_cache[key] = WittUniversalTables(p, length)
        return _tables_cache[key]


def build_universal_tables(p, length):
    return universal_tables(p, length)


class WittVector:
    """A length-n p-typical Witt vector with coordinates in `ring`."""

    __slots__ = ("p", "ring", "coords")

    def __init__(self, p, ring, coords):
        coords = tuple(coords)
        if len(coords) < 1:
            raise ValueError("length must be >= 1")
        self.p = p
        self.ring = ring
        self.coords = coords

    @property
    def length(self):
        return len(self.coords)

    def _check_compatible(self, other):
        if (self.p, self.ring, self.length) != (other.p, other.ring, other.length):
            raise ValueError("mismatched Witt vectors: (p, ring, length) differ")

    def _binary(self, other, polys):
        self._check_compatible(other)
        values = list(self.coords) + list(other.coords)
        return WittVector(self.p, self.ring,
                          [q.evaluate(values, self.ring) for q in polys])

    def __add__(self, other):
        t = universal_tables(self.p, self.length)
        return self._binary(other, t.sum_polys)

    def __mul__(self, other):
        t = universal_tables(self.p, self.length)
        return self._binary(other, t.prod_polys)

    def __neg__(self):
        t = universal_tables(self.p, self.length)
        values = list(self.coords) + [self.ring.zero()] * self.length
        return WittVector(self.p, self.ring,
                          [q.evaluate(values, self.ring) for q in t.neg_polys])

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, WittVector):
            return NotImplemented
        return (self.p, self.ring, self.coords) == (other.p, other.ring, other.coords)

    def __hash__(self):
        return hash((self.p, self.coords))

    def __repr__(self):
        return "W_%d(p=%d)%r" % (self.length, self.p, tuple(self.coords))

    def ghost(self):
        ring = self.ring
        out = []
        for i in range(self.length):
            g = ring.zero()
            for j in range(i + 1):
                term = ring.from_int(self.p ** j)
                c = self.coords[j]
                for _ in range(self.p ** (i - j)):
                    term = ring.mul(term, c)
                g = ring.add(g, term)
            out.append(g)
        return out

    def frobenius(self):
        if self.length < 2:
            raise ValueError("Frobenius needs length >= 2")
        t = universal_tables(self.p, self.length)
        values = list(self.coords) + [self.ring.zero()] * self.length
        return WittVector(self.p, self.ring,
                          [q.evaluate(values, self.ring) for q in t.frob_polys])

    def verschiebung(self):
        return WittVector(self.p, self.ring, (self.ring.zero(),) + self.coords)

    def restrict(self):
        if self.length < 2:
            raise ValueError("restriction needs length >= 2")
        return WittVector(self.p, self.ring, self.coords[:-1])


class WittRing:
    """W_n(R) for a fixed prime p, length n and coordinate ring R."""

    def __init__(self, p, length, ring):
        if not is_prime(p):
            raise ValueError("p must be prime")
        if length < 1:
            raise ValueError("length must be >= 1")
        self.p = p
        self.length = length
        self.ring = ring

    def __call__(self, coords):
        coords = [c if not isinstance(c, int) else self.ring.from_int(c)
                  for c in coords]
        if len(coords) != self.length:
            raise ValueError("expected %d coordinates" % self.length)
        return WittVector(self.p, self.ring, coords)

    def zero(self):
        return self([0] * self.length)

    def one(self):
        return self.teichmuller(self.ring.one())

    def teichmuller(self, a):
        return WittVector(self.p, self.ring,
                          (a,) + (self.ring.zero(),) * (self.length - 1))

    def elements(self):
        """All Witt vectors, for finite coordinate rings (Z/m)."""
        base = list(self.ring.elements())
        for coords in product(base, repeat=self.length):
            yield WittVector(self.p, self.ring, coords)

    def __repr__(self):
        return "W_%d(%r; p=%d)" % (self.length, self.ring, self.p)


def witt_rigidity_check(p, n, bound=4):
    """The induction that pins a restriction-compatible ghost-coordinate
    permutation down to the identity.

    Over a Q-algebra the ghost map identifies W_m with a product of m
    copies, and a natural ring endomorphism must permute the factors.
    Restriction projects onto the first m-1 ghost coordinates, so a
    family of permutations sigma_m (one per length <= n) is
    restriction-compatible when proj o sigma_m = sigma_{m-1} o proj.
    This enumerates all permutations at every length <= n and returns
    True iff the identity family is the only compatible one.
    """
    if n > bound:
        raise ValueError("length %d exceeds the enumeration bound %d" % (n, bound))
    survivors = [(0,)]  # permutations of one ghost factor
    if n == 1:
        return survivors == [(0,)]
    for m in range(2, n + 1):
        new = []
        for sigma in _permutations(m):
            # proj o sigma = tau o proj means sigma(i) = tau(i) < m-1 for i < m-1
            head = sigma[:m - 1]
            if max(head) <= m - 2 and tuple(head) in set(survivors):
                new.append(sigma)
        survivors = new
        if survivors != [tuple(range(m))]:
            return False
    return True


def _permutations(m):
    from itertools import permutations
    return [tuple(s) for s in permutations(range(m))]


def frobenius_fixed_points(p, n, modulus, budget=100000):
    """All w in W_n(Z/modulus) with F(w) = restrict(w).

    For n = 1 both maps land in W_0, which does not exist here; the
    condition is declared vacuously true and the whole of W_1 comes
    back.
    """
    ring = Zmod(modulus)
    if modulus ** n > budget:
        raise ValueError("enumeration of %d elements exceeds budget" % modulus ** n)
    W = WittRing(p, n, ring)
    if n == 1:
        return list(W.elements())
    out = []
    for w in W.elements():
        if w.frobenius() == w.restrict():
            out.append(w)
    return out


def additive_order_census(p, n, modulus=None):
    """Multiples 1*[1], 2*[1], ... of the Teichmuller unit in W_n(Z/modulus),
    up to and including the first zero.  The length of the list is the
    additive order of [1]; W_n(F_p) is cyclic of order p^n iff this is
    p^n."""
    if modulus is None:
        modulus = p
    ring = Zmod(modulus)
    W = WittRing(p, n, ring)
    one = W.one()
    zero = W.zero()
    seen = []
    cur = zero
    while True:
        cur = cur + one
        seen.append(cur)
        if cur == zero:
            break
        if len(seen) > modulus ** n:
            raise AssertionError("additive closure exceeded the ring size")
    return seen
