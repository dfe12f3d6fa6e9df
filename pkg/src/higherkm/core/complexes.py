"""
Finite windows of cochain complexes, optionally twisted by a formal K.

Degrees are cohomological: d^n maps C^n to C^{n+1}.  A chain complex with
boundary of degree -1 is stored with negated degrees.  A twisted complex
carries a second map delta of degree +1 with d·delta + delta·d = 0 and
delta² = 0, so that d + K·delta squares to zero for every K.
"""

from .linalg import GradedSpaceWindow, SparseMatrix, Echelon, rank_kernel, _key_map


class ComplexError(ValueError):
    pass


class ChainComplexWindow:
    def __init__(self, spaces, d, delta=None, complete_below=True,
                 complete_above=True, name="", check=True):
        self.spaces = dict(spaces)
        self.d = {}
        self.delta = {}
        empty = GradedSpaceWindow([])
        for n in self.spaces:
            tgt = self.spaces.get(n + 1, empty)
            self.d[n] = d.get(n) or SparseMatrix(tgt, self.spaces[n])
            if delta is not None:
                self.delta[n] = delta.get(n) or SparseMatrix(tgt, self.spaces[n])
        self.twisted = delta is not None
        self.complete_below = complete_below
        self.complete_above = complete_above
        self.name = name
        if check:
            self.check()

    @property
    def degrees(self):
        return sorted(self.spaces)

    def dims(self):
        return {n: self.spaces[n].dim for n in self.degrees}

    def _pairs(self):
        for n in self.degrees:
            if n + 1 in self.spaces:
                yield n

    def check(self):
        for n in self._pairs():
            if not (self.d[n + 1] @ self.d[n]).is_zero():
                raise ComplexError("d∘d != 0 at degree %d" % n)
            if self.twisted:
                s = self.d[n + 1] @ self.delta[n] + self.delta[n + 1] @ self.d[n]
                if not s.is_zero():
                    raise ComplexError("d∘δ + δ∘d != 0 at degree %d" % n)
                if not (self.delta[n + 1] @ self.delta[n]).is_zero():
                    raise ComplexError("δ∘δ != 0 at degree %d" % n)

    def at(self, K):
        """Specialize the twist parameter to a number."""
        if not self.twisted:
            return self
        d = {n: self.d[n] + self.delta[n].scale(K) for n in self.spaces}
        return ChainComplexWindow(self.spaces, d, None, self.complete_below,
                                  self.complete_above, self.name, check=False)

    def shift(self, k=1):
        """The complex C[k]: degree n of the result is degree n+k of self."""
        sp = {n - k: s for n, s in self.spaces.items()}
        sgn = -1 if k % 2 else 1
        d = {n - k: m.scale(sgn) for n, m in self.d.items()}
        delta = ({n - k: m.scale(sgn) for n, m in self.delta.items()}
                 if self.twisted else None)
        return ChainComplexWindow(sp, d, delta, self.complete_below,
                                  self.complete_above, self.name, check=False)

    def __repr__(self):
        return "ChainComplexWindow(%s, dims=%s)" % (self.name, self.dims())


class CohomologyResult:
    def __init__(self, dims, representatives, contaminated):
        self.dims = dims
        self.representatives = representatives
        self.contaminated = contaminated

    def __getitem__(self, n):
        return self.dims.get(n, 0)

    def __repr__(self):
        return "CohomologyResult(dims=%s, contaminated=%s)" % (self.dims, self.contaminated)


def cohomology_window(cx):
    """
    Cohomology of an untwisted window.  Representatives are kernel vectors
    completing a basis of the image inside the kernel.  Degrees at the edges
    of an incomplete window are reported as contaminated.
    """
    if cx.twisted:
        raise ComplexError("specialize K with .at() before taking cohomology")
    degs = cx.degrees
    dims, reps = {}, {}
    for n in degs:
        space = cx.spaces[n]
        _, ker = rank_kernel(cx.d[n])
        idx = _key_map(space)
        ech = Echelon()
        if n - 1 in cx.spaces:
            prev = cx.d[n - 1]
            for c in prev.cols:
                col = prev.column(c)
                if col:
                    ech.add({idx[r]: x for r, x in col.items()})
        img_rank = ech.rank
        rs = []
        for v in ker:
            if ech.add({idx[k]: x for k, x in v.items()}):
                rs.append(v)
        dims[n] = len(ker) - img_rank
        reps[n] = rs
    contaminated = []
    if degs:
        if not cx.complete_below:
            contaminated.append(degs[0])
        if not cx.complete_above:
            contaminated.append(degs[-1])
    return CohomologyResult(dims, reps, sorted(set(contaminated)))
