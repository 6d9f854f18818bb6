"""Strong Groebner bases over the integers and presented rings.

Buchberger completion with both S-polynomials and gcd (G-) polynomials,
so that strong reduction (divide the coefficient with remainder, not
only the monomial) computes unique normal forms for ideals of Z[x_1..x_n]
under degrevlex.  This is only meant for the small presentations that
arise here; a basis-size guard aborts pathological runs.
"""

from math import gcd

from .rings import ZZ, PolynomialRing, PolyElement, degrevlex_key


class BasisSizeExceeded(RuntimeError):
    pass


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _monomial_divides(e1, e2):
    return all(a <= b for a, b in zip(e1, e2))


def _monomial_lcm(e1, e2):
    return tuple(max(a, b) for a, b in zip(e1, e2))


def _shift(poly, exps, coeff):
    ring = poly.ring
    return PolyElement(ring, {tuple(a + b for a, b in zip(e, exps)): c * coeff
                              for e, c in poly.terms.items()})


def strong_reduce(f, basis):
    """Full strong normal form of f against the basis.

    Scans terms from the degrevlex top down; a term c*m is reduced by g
    (leading term cg*mg) when mg | m, replacing c by c mod |cg| via
    floor division.  The result has no term reducible by any basis
    element, and is unique once the basis is a strong Groebner basis.
    """
    ring = f.ring
    remainder = {}
    work = dict(f.terms)
    lead = [(g,) + g.leading() for g in basis if not g.is_zero()]
    while work:
        e = max(work, key=degrevlex_key)
        c = work.pop(e)
        if c == 0:
            continue
        for g, ge, gc in lead:
            if _monomial_divides(ge, e):
                # floor-divide by the absolute value, keeping determinism
                q, r = divmod(c, abs(gc))
                if gc < 0:
                    q = -q
                if q != 0:
                    shift = tuple(a - b for a, b in zip(e, ge))
                    sub = _shift(g, shift, q)
                    for se, sc in sub.terms.items():
                        if se == e:
                            continue
                        work[se] = work.get(se, 0) - sc
                        if work[se] == 0:
                            del work[se]
                    c = r
                if c == 0:
                    break
                # c is now smaller than |gc| in absolute value; other basis
                # elements may still reduce it, so keep scanning
        if c != 0:
            remainder[e] = c
    return PolyElement(ring, remainder)


def _s_polynomial(f, g):
    fe, fc = f.leading()
    ge, gc = g.leading()
    m = _monomial_lcm(fe, ge)
    l = fc * gc // gcd(fc, gc)
    return (_shift(f, tuple(a - b for a, b in zip(m, fe)), l // fc)
            - _shift(g, tuple(a - b for a, b in zip(m, ge)), l // gc))


def _g_polynomial(f, g):
    fe, fc = f.leading()
    ge, gc = g.leading()
    m = _monomial_lcm(fe, ge)
    d, x, y = _xgcd(fc, gc)
    return (_shift(f, tuple(a - b for a, b in zip(m, fe)), x)
            + _shift(g, tuple(a - b for a, b in zip(m, ge)), y))


def strong_groebner(relations, size_bound=10000):
    """Complete a list of integer polynomials to a strong Groebner basis."""
    basis = [r for r in relations if not r.is_zero()]
    pairs = [(i, j) for i in range(len(basis)) for j in range(i)]
    while pairs:
        i, j = pairs.pop()
        f, g = basis[i], basis[j]
        for candidate in (_s_polynomial(f, g), _g_polynomial(f, g)):
            h = strong_reduce(candidate, basis)
            if not h.is_zero():
                basis.append(h)
                if len(basis) > size_bound:
                    raise BasisSizeExceeded(
                        "basis exceeded %d elements; aborting completion" % size_bound)
                k = len(basis) - 1
                pairs.extend((k, l) for l in range(k))
    # drop redundant elements one at a time
    changed = True
    while changed:
        changed = False
        for idx in range(len(basis)):
            rest = basis[:idx] + basis[idx + 1:]
            if rest and strong_reduce(basis[idx], rest).is_zero():
                basis.pop(idx)
                changed = True
                break
    # completeness of the pruned basis: every S- and G-polynomial must
    # still reduce to zero
    for i in range(len(basis)):
        for j in range(i):
            for cand in (_s_polynomial(basis[i], basis[j]),
                         _g_polynomial(basis[i], basis[j])):
                if not strong_reduce(cand, basis).is_zero():
                    raise AssertionError("pruning broke the strong basis")
    return basis


class PresentedRing:
    """Z[generators]/(relations) with normal forms from a strong basis."""

    def __init__(self, generators, relations, size_bound=10000):
        self.poly = PolynomialRing(ZZ, generators)
        rels = []
        for r in relations:
            if isinstance(r, PolyElement):
                if r.ring != self.poly:
                    raise ValueError("relation lives in the wrong polynomial ring")
                rels.append(r)
            else:
                raise TypeError("relations must be PolyElements")
        self.relations = rels
        self.basis = strong_groebner(rels, size_bound=size_bound)
        for r in rels:
            if not self.reduce(r).is_zero():
                raise AssertionError("completion does not kill relation %r" % (r,))

    def gen(self, name):
        return self.poly.gen(name)

    def reduce(self, f):
        if f.ring != self.poly:
            raise ValueError("element lives in the wrong polynomial ring")
        return strong_reduce(f, self.basis)

    def mul(self, a, b):
        return self.reduce(a * b)

    def add(self, a, b):
        return self.reduce(a + b)

    def eq(self, a, b):
        return self.reduce(a - b).is_zero()

    def is_free_on_normal_monomials(self):
        """True when every basis leading coefficient is a unit, in which
        case the quotient is a free Z-module on the normal monomials."""
        return all(abs(g.leading()[1]) == 1 for g in self.basis)

    def normal_monomials(self, max_degree):
        """Exponent tuples of total degree <= max_degree not divisible by
        any unit-coefficient leading monomial of the basis.  When
        is_free_on_normal_monomials() holds these are a Z-basis of the
        quotient in those degrees."""
        unit_leads = [g.leading()[0] for g in self.basis
                      if abs(g.leading()[1]) == 1]
        out = []

        def rec(prefix, remaining, budget):
            if remaining == 0:
                e = tuple(prefix)
                if not any(_monomial_divides(le, e) for le in unit_leads):
                    out.append(e)
                return
            for d in range(budget + 1):
                rec(prefix + [d], remaining - 1, budget - d)

        rec([], self.poly.nvars, max_degree)
        out.sort(key=degrevlex_key)
        return out


def groebner_completion(generators, relations, size_bound=10000):
    """Build a PresentedRing from generator names and relation polynomials."""
    return PresentedRing(generators, relations, size_bound=size_bound)
