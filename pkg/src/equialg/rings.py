"""Exact coefficient rings and sparse multivariate polynomials.

Every ring is a small object exposing arithmetic on plain immutable
values: ``int`` for the integers, ``fractions.Fraction`` for the
rationals, reduced ``int`` for the integers mod m, and ``PolyElement``
(a dict from exponent tuple to nonzero coefficient) for polynomial
rings.  All higher modules do their arithmetic through the ring object,
so matrices and complexes work uniformly over any of these.

No floating point anywhere.
"""

from fractions import Fraction


class RingMismatchError(ValueError):
    pass


class BaseRing:
    """Abstract commutative coefficient ring."""

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def from_int(self, n):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        raise NotImplementedError

    def is_zero(self, a):
        return a == self.zero()

    def sum(self, values):
        total = self.zero()
        for v in values:
            total = self.add(total, v)
        return total

    def prod(self, values):
        total = self.one()
        for v in values:
            total = self.mul(total, v)
        return total

    def element_str(self, a):
        return str(a)


class IntegerRing(BaseRing):
    def from_int(self, n):
        return int(n)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return a == 0

    def __repr__(self):
        return "ZZ"

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("ZZ")


class RationalRing(BaseRing):
    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return a == 0

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalRing)

    def __hash__(self):
        return hash("QQ")


class IntegerModRing(BaseRing):
    """Integers mod m, m >= 2.  Elements are ints reduced to [0, m)."""

    def __init__(self, m):
        if m < 2:
            raise ValueError("modulus must be >= 2, got %r" % (m,))
        self.m = m

    def from_int(self, n):
        return n % self.m

    def add(self, a, b):
        return (a + b) % self.m

    def neg(self, a):
        return (-a) % self.m

    def mul(self, a, b):
        return (a * b) % self.m

    def is_zero(self, a):
        return a % self.m == 0

    def elements(self):
        return range(self.m)

    def __repr__(self):
        return "Z/%d" % self.m

    def __eq__(self, other):
        return isinstance(other, IntegerModRing) and other.m == self.m

    def __hash__(self):
        return hash(("Zmod", self.m))


ZZ = IntegerRing()
QQ = RationalRing()

_zmod_cache = {}


def Zmod(m):
    if m not in _zmod_cache:
        _zmod_cache[m] = IntegerModRing(m)
    return _zmod_cache[m]


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _base_variable_names(ring):
    names = set()
    while isinstance(ring, PolynomialRing):
        names.update(ring.names)
        ring = ring.base
    return names


class PolynomialRing(BaseRing):
    """Multivariate polynomials over a base ring, sparse term dict.

    The variable order given at construction is the order used by the
    degrevlex comparisons everywhere downstream; it is part of the ring
    identity.
    """

    def __init__(self, base, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names %r" % (names,))
        shadow = _base_variable_names(base) & set(names)
        if shadow:
            raise ValueError("variables %r shadow base ring variables" % (sorted(shadow),))
        self.base = base
        self.names = names
        self.nvars = len(names)

    def gen(self, name):
        i = self.names.index(name)
        exps = [0] * self.nvars
        exps[i] = 1
        return PolyElement(self, {tuple(exps): self.base.one()})

    def gens(self):
        return [self.gen(n) for n in self.names]

    def monomial(self, exps, coeff=None):
        if coeff is None:
            coeff = self.base.one()
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        return PolyElement(self, {exps: coeff})

    def constant(self, c):
        return PolyElement(self, {(0,) * self.nvars: c})

    def from_int(self, n):
        return self.constant(self.base.from_int(n))

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return not a.terms

    def __repr__(self):
        return "%r[%s]" % (self.base, ",".join(self.names))

    def __eq__(self, other):
        return (isinstance(other, PolynomialRing)
                and other.base == self.base and other.names == self.names)

    def __hash__(self):
        return hash(("Poly", self.base, self.names))


def degrevlex_key(exps):
    """Sort key; max() under this key is the degrevlex leading monomial."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


class PolyElement:
    """A polynomial in canonical form: no zero coefficients stored."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        base = ring.base
        clean = {}
        for exps, c in terms.items():
            if len(exps) != ring.nvars:
                raise ValueError("exponent vector %r has wrong length" % (exps,))
            if not base.is_zero(c):
                clean[exps] = c
        self.ring = ring
        self.terms = clean

    def _coerce(self, other):
        if isinstance(other, PolyElement):
            if other.ring != self.ring:
                raise RingMismatchError("mixed polynomial rings %r and %r"
                                        % (self.ring, other.ring))
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        raise TypeError("cannot combine %r with polynomial" % (other,))

    def __add__(self, other):
        other = self._coerce(other)
        base = self.ring.base
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            terms[exps] = base.add(terms.get(exps, base.zero()), c)
        return PolyElement(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        base = self.ring.base
        return PolyElement(self.ring, {e: base.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        base = self.ring.base
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = base.mul(c1, c2)
                if e in terms:
                    terms[e] = base.add(terms[e], c)
                else:
                    terms[e] = c
        return PolyElement(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of polynomial")
        result = self.ring.one()
        square = self
        while n:
            if n & 1:
                result = result * square
            n >>= 1
            if n:
                square = square * square
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        if not isinstance(other, PolyElement) or other.ring != self.ring:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.terms.items()))))

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def leading(self):
        """(exponent tuple, coefficient) of the degrevlex leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=degrevlex_key)
        return e, self.terms[e]

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), self.ring.base.zero())

    def evaluate(self, values, target_ring, coeff_map=None):
        """Evaluate at values[i] for variable i, in target_ring.

        Coefficients are carried over by coeff_map; by default integer
        coefficients go through target_ring.from_int.
        """
        if len(values) != self.ring.nvars:
            raise ValueError("need one value per variable")
        if coeff_map is None:
            coeff_map = target_ring.from_int
        total = target_ring.zero()
        for exps, c in self.terms.items():
            term = coeff_map(c)
            for v, e in zip(values, exps):
                for _ in range(e):
                    term = target_ring.mul(term, v)
            total = target_ring.add(total, term)
        return total

    def map_exponents(self, fn):
        """Apply a bijection of variable positions to every term."""
        return PolyElement(self.ring, {fn(e): c for e, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: degrevlex_key(t[0]), reverse=True)
        parts = []
        for exps, c in items:
            factors = []
            for name, e in zip(self.ring.names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append("%s^%d" % (name, e))
            cs = self.ring.base.element_str(c)
            if factors:
                body = "*".join(factors)
                if cs == "1":
                    parts.append(body)
                elif cs == "-1":
                    parts.append("-" + body)
                else:
                    parts.append(cs + "*" + body)
            else:
                parts.append(cs)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


def poly_ring(base, *names):
    return PolynomialRing(base, names)


def poly_arith(a, b, op):
    """Binary/unary polynomial arithmetic with explicit ring check."""
    if op == "neg":
        return -a
    if a.ring != b.ring:
        raise RingMismatchError("operands live in different rings")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError("unknown op %r" % (op,))
