"""
Sparse exact linear algebra.

Vectors are dicts {key: value} with no zero values.  Values may be any exact
field elements (Fraction or Scalar); the routines only use +, -, *, / and
truth testing.  Matrices keep their columns, because every map in this
package is given by the images of basis vectors.
"""

import heapq
from fractions import Fraction


class GradedSpaceWindow:
    """Finite labelled basis, each label with a degree and optional weight."""

    def __init__(self, labels, degrees=None, weights=None, name=""):
        self.labels = list(labels)
        self._index = {}
        for i, lab in enumerate(self.labels):
            if lab in self._index:
                raise ValueError("duplicate label %r" % (lab,))
            self._index[lab] = i
        if degrees is None:
            degrees = [0] * len(self.labels)
        elif isinstance(degrees, int):
            degrees = [degrees] * len(self.labels)
        self.degrees = list(degrees)
        self.weights = list(weights) if weights is not None else None
        self.name = name

    @property
    def dim(self):
        return len(self.labels)

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __contains__(self, lab):
        return lab in self._index

    def index(self, lab):
        return self._index[lab]

    def degree(self, lab):
        return self.degrees[self._index[lab]]

    def weight(self, lab):
        return None if self.weights is None else self.weights[self._index[lab]]

    def check_vector(self, v):
        for k in v:
            if k not in self._index:
                raise KeyError("label %r outside the window" % (k,))

    def __repr__(self):
        return "GradedSpaceWindow(%s, dim=%d)" % (self.name or "?", self.dim)


# ---------------------------------------------------------------------------
# vector helpers

def vadd(u, v, c=1):
    """u + c*v as a new dict."""
    r = dict(u)
    vaxpy(r, v, c)
    return r


def vaxpy(r, v, c=1):
    """In place r += c*v."""
    for k, x in v.items():
        y = r.get(k)
        y = c * x if y is None else y + c * x
        if y:
            r[k] = y
        else:
            r.pop(k, None)
    return r


def vscale(v, c):
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def vclean(v):
    return {k: x for k, x in v.items() if x}


class SparseMatrix:
    """Linear map cols -> rows, stored as {col label: {row label: value}}."""

    def __init__(self, rows, cols, entries=None, columns=None):
        self.rows = rows
        self.cols = cols
        self._cols = {}
        if entries:
            for (r, c), x in entries.items():
                if x:
                    self._cols.setdefault(c, {})[r] = x
        if columns:
            for c, vec in columns.items():
                vec = vclean(vec)
                if vec:
                    self._cols[c] = vec

    @classmethod
    def from_function(cls, rows, cols, f):
        """Matrix whose column for label c is the vector f(c)."""
        return cls(rows, cols, columns={c: f(c) for c in cols})

    @property
    def shape(self):
        return (self.rows.dim, self.cols.dim)

    def column(self, c):
        return self._cols.get(c, {})

    def entries(self):
        return {(r, c): x for c, col in self._cols.items() for r, x in col.items()}

    def __getitem__(self, rc):
        r, c = rc
        return self._cols.get(c, {}).get(r, 0)

    def nnz(self):
        return sum(len(c) for c in self._cols.values())

    def is_zero(self):
        return not self._cols

    def apply(self, v):
        out = {}
        for c, x in v.items():
            col = self._cols.get(c)
            if col:
                vaxpy(out, col, x)
        return out

    def __matmul__(self, other):
        """self ∘ other."""
        cols = {c: self.apply(other.column(c)) for c in other._cols}
        return SparseMatrix(self.rows, other.cols, columns=cols)

    def __add__(self, other):
        cols = {c: dict(v) for c, v in self._cols.items()}
        for c, v in other._cols.items():
            cols[c] = vadd(cols.get(c, {}), v)
        return SparseMatrix(self.rows, self.cols, columns=cols)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return SparseMatrix(self.rows, self.cols,
                            columns={k: vscale(v, c) for k, v in self._cols.items()})

    def transpose(self):
        ent = {(c, r): x for (r, c), x in self.entries().items()}
        return SparseMatrix(self.cols, self.rows, entries=ent)

    def to_dense(self):
        m = [[0] * self.cols.dim for _ in range(self.rows.dim)]
        for c, col in self._cols.items():
            j = self.cols.index(c)
            for r, x in col.items():
                m[self.rows.index(r)][j] = x
        return m

    def __eq__(self, other):
        return (isinstance(other, SparseMatrix) and self._cols == other._cols)

    def __repr__(self):
        return "SparseMatrix(%dx%d, nnz=%d)" % (self.rows.dim, self.cols.dim, self.nnz())


def identity(space):
    return SparseMatrix(space, space, columns={c: {c: 1} for c in space})


def zero_map(rows, cols):
    return SparseMatrix(rows, cols)


# ---------------------------------------------------------------------------
# elimination

def _inv(x):
    if isinstance(x, int):
        return Fraction(1, x)
    return 1 / x


class Echelon:
    """
    Incrementally built echelon basis of a subspace.

    Keys must be mutually comparable (ints or tuples of ints); the pivot of a
    stored vector is its smallest key, so reduction only ever pushes support
    upwards and terminates.  With ``track`` set, each reduction also records
    the combination of inserted vectors (by tag) that was subtracted.
    """

    def __init__(self, track=False):
        self.track = track
        self.piv = {}        # pivot key -> normalized vector (value 1 at pivot)
        self.combo = {}      # pivot key -> combination of tags
        self.order = []

    @property
    def rank(self):
        return len(self.piv)

    def reduce(self, v, combo=None):
        v = dict(v)
        combo = dict(combo) if combo else {}
        if not self.piv:
            return v, combo
        heap = [k for k in v if k in self.piv]
        heapq.heapify(heap)
        while heap:
            k = heapq.heappop(heap)
            x = v.get(k)
            if x is None or k not in self.piv:
                continue
            row = self.piv[k]
            vaxpy(v, row, -x)
            if self.track:
                vaxpy(combo, self.combo[k], -x)
            for k2 in row:
                if k2 in self.piv and k2 in v:
                    heapq.heappush(heap, k2)
        return v, combo

    def add(self, v, tag=None):
        """Insert v; returns True when it was independent of the span."""
        combo = {tag: 1} if self.track else None
        r, combo = self.reduce(v, combo)
        if not r:
            return False
        p = min(r)
        inv = _inv(r[p])
        r = vscale(r, inv)
        self.piv[p] = r
        if self.track:
            self.combo[p] = vscale(combo, inv)
        self.order.append(p)
        return True

    def contains(self, v):
        r, _ = self.reduce(v)
        return not r

    def express(self, v):
        """Coefficients c with v = Σ c[tag]·inserted[tag], or None."""
        if not self.track:
            raise ValueError("Echelon built without tracking")
        r, combo = self.reduce(v)
        if r:
            return None
        return vscale(combo, -1)


def _key_map(space):
    return {lab: i for i, lab in enumerate(space)}


def rank_kernel(m):
    """
    Rank and a kernel basis of a SparseMatrix.  Kernel vectors are dicts
    over column labels.
    """
    rows_idx = _key_map(m.rows)
    ech = Echelon(track=True)
    kernel = []
    for c in m.cols:
        col = {rows_idx[r]: x for r, x in m.column(c).items()}
        r, combo = ech.reduce(col, {c: 1})
        if not r:
            kernel.append(combo)
            continue
        p = min(r)
        inv = _inv(r[p])
        ech.piv[p] = vscale(r, inv)
        ech.combo[p] = vscale(combo, inv)
        ech.order.append(p)
    return ech.rank, kernel


def rank(m):
    ech = Echelon()
    rows_idx = _key_map(m.rows)
    for c in m.cols:
        ech.add({rows_idx[r]: x for r, x in m.column(c).items()})
    return ech.rank


def image_echelon(m):
    """Echelon basis (over row indices) of the column space of m."""
    ech = Echelon(track=True)
    rows_idx = _key_map(m.rows)
    for c in m.cols:
        ech.add({rows_idx[r]: x for r, x in m.column(c).items()}, tag=c)
    return ech


def solve(m, b):
    """Some x with m·x = b (dict over column labels), or None."""
    ech = image_echelon(m)
    rows_idx = _key_map(m.rows)
    x = ech.express({rows_idx[r]: v for r, v in b.items()})
    return x


def dense_rank(rows):
    """Rank of a small dense list-of-lists matrix (exact)."""
    ech = Echelon()
    for row in rows:
        ech.add({j: x for j, x in enumerate(row) if x})
    return ech.rank
