"""Sparse exact matrices over any BaseRing.

Entries are stored in a dict keyed by (row, col); zero entries are never
stored.  The big matrices in this package (induced maps on tensor
powers) have few nonzeros per column, so products stay cheap.
"""

from .rings import RingMismatchError, ZZ


class RingMatrix:
    __slots__ = ("ring", "nrows", "ncols", "entries")

    def __init__(self, ring, nrows, ncols, entries=None):
        self.ring = ring
        self.nrows = nrows
        self.ncols = ncols
        clean = {}
        if entries:
            for (i, j), v in entries.items():
                if not (0 <= i < nrows and 0 <= j < ncols):
                    raise ValueError("entry (%d, %d) out of range" % (i, j))
                if not ring.is_zero(v):
                    clean[(i, j)] = v
        self.entries = clean

    @classmethod
    def zero(cls, ring, nrows, ncols):
        return cls(ring, nrows, ncols)

    @classmethod
    def identity(cls, ring, n):
        one = ring.one()
        return cls(ring, n, n, {(i, i): one for i in range(n)})

    @classmethod
    def from_rows(cls, ring, rows):
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        entries = {}
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                if not ring.is_zero(v):
                    entries[(i, j)] = v
        return cls(ring, nrows, ncols, entries)

    @classmethod
    def from_basis_map(cls, ring, fn, nrows, ncols):
        """Matrix of the linear map sending basis vector j to basis
        vector fn(j)."""
        one = ring.one()
        return cls(ring, nrows, ncols, {(fn(j), j): one for j in range(ncols)})

    @classmethod
    def from_columns_dict(cls, ring, cols, nrows):
        """cols: list (one per column) of dicts {row: value}."""
        entries = {}
        for j, col in enumerate(cols):
            for i, v in col.items():
                if not ring.is_zero(v):
                    entries[(i, j)] = v
        return cls(ring, nrows, len(cols), entries)

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError("matrices over different rings")

    def __add__(self, other):
        self._check(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        ring = self.ring
        entries = dict(self.entries)
        for k, v in other.entries.items():
            entries[k] = ring.add(entries.get(k, ring.zero()), v)
        return RingMatrix(ring, self.nrows, self.ncols, entries)

    def __neg__(self):
        ring = self.ring
        return RingMatrix(ring, self.nrows, self.ncols,
                          {k: ring.neg(v) for k, v in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def __matmul__(self, other):
        self._check(other)
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch %dx%d @ %dx%d"
                             % (self.nrows, self.ncols, other.nrows, other.ncols))
        ring = self.ring
        # group left entries by column for sparse access
        by_col = {}
        for (i, j), v in self.entries.items():
            by_col.setdefault(j, []).append((i, v))
        entries = {}
        for (j, l), w in other.entries.items():
            for i, v in by_col.get(j, ()):
                key = (i, l)
                prod = ring.mul(v, w)
                if key in entries:
                    entries[key] = ring.add(entries[key], prod)
                else:
                    entries[key] = prod
        return RingMatrix(ring, self.nrows, other.ncols, entries)

    def scale(self, c):
        ring = self.ring
        return RingMatrix(ring, self.nrows, self.ncols,
                          {k: ring.mul(c, v) for k, v in self.entries.items()})

    def __pow__(self, n):
        if self.nrows != self.ncols:
            raise ValueError("power of non-square matrix")
        result = RingMatrix.identity(self.ring, self.nrows)
        square = self
        while n:
            if n & 1:
                result = result @ square
            n >>= 1
            if n:
                square = square @ square
        return result

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return (self.ring == other.ring
                and (self.nrows, self.ncols) == (other.nrows, other.ncols)
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.nrows, self.ncols, tuple(sorted(self.entries.items(), key=lambda kv: kv[0]))))

    def is_zero(self):
        return not self.entries

    def get(self, i, j):
        return self.entries.get((i, j), self.ring.zero())

    def column(self, j):
        return {i: v for (i, jj), v in self.entries.items() if jj == j}

    def to_rows(self):
        rows = [[self.ring.zero()] * self.ncols for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def to_int_rows(self):
        """Integer lift for matrices over ZZ or Z/m."""
        rows = [[0] * self.ncols for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = int(v)
        return rows

    def apply(self, vec):
        """Apply to a column vector given as dict {index: value}."""
        ring = self.ring
        out = {}
        for (i, j), v in self.entries.items():
            if j in vec:
                prod = ring.mul(v, vec[j])
                out[i] = ring.add(out[i], prod) if i in out else prod
        return {i: v for i, v in out.items() if not ring.is_zero(v)}

    def __repr__(self):
        return "RingMatrix(%dx%d over %r, %d nonzero)" % (
            self.nrows, self.ncols, self.ring, len(self.entries))
