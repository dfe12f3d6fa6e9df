"""
Chevalley-Eilenberg chains Sym(L[1]) of a finite L∞ algebra, with the
coderivation differential and an optional K-twist by a scalar cocycle.
"""

from itertools import combinations

from ..core.linalg import GradedSpaceWindow, SparseMatrix, vaxpy
from ..core.complexes import ChainComplexWindow
from ..core.signs import koszul_int, sort_sign


def sym_monomials(sdeg, n):
    """Sorted index tuples of length n; odd shifted degrees never repeat."""
    out = []

    def rec(start, acc):
        if len(acc) == n:
            out.append(tuple(acc))
            return
        for i in range(start, len(sdeg)):
            if acc and acc[-1] == i and sdeg[i] % 2:
                continue
            rec(i if sdeg[i] % 2 == 0 else i + 1, acc + [i])

    rec(0, [])
    return out


def sym_product(word, sdeg):
    """Sign and sorted monomial of a word of basis indices in Sym(L[1])."""
    s = sort_sign(list(word), [sdeg[i] for i in word])
    if s == 0:
        return 0, None
    return s, tuple(sorted(word))


def decalage_sign(degs):
    """(-1)^{Σ_i (k-i)|x_i|} for unshifted degrees |x_1..x_k|."""
    k = len(degs)
    e = sum((k - 1 - i) * dg for i, dg in enumerate(degs))
    return -1 if e % 2 else 1


def coderivation(L, mono, arities, scalar=None):
    """
    Image of a Sym monomial under the coderivation induced by the brackets
    of the given arities.  With ``scalar`` (a function of basis indices) the
    bracket is replaced by a scalar-valued cocycle and the output element
    is dropped.
    """
    sdeg = [g - 1 for g in L.degrees]
    n = len(mono)
    out = {}
    for k in arities:
        if k > n:
            continue
        for first in combinations(range(n), k):
            rest = [p for p in range(n) if p not in first]
            sigma = list(first) + rest
            eps = koszul_int(sigma, [sdeg[i] for i in mono])
            inputs = [mono[p] for p in first]
            dsign = decalage_sign([L.degrees[i] for i in inputs])
            sgn = eps * dsign
            if scalar is not None:
                c = scalar(*inputs)
                if not c:
                    continue
                key = tuple(mono[p] for p in rest)
                v = out.get(key, 0) + sgn * c
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
                continue
            val = L._basis_value(k, tuple(inputs))
            for j, c in val.items():
                s2, key = sym_product([j] + [mono[p] for p in rest], sdeg)
                if not s2:
                    continue
                v = out.get(key, 0) + sgn * s2 * c
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
    return out


def ce_complex(L, sym_cutoff, cocycle=None, cocycle_arity=None, name="CE"):
    """
    CE chains Sym^{<=sym_cutoff}(L[1]) as a cochain window (homological
    grading negated).  ``cocycle`` is a scalar function on basis index
    tuples of arity ``cocycle_arity`` giving the K-twist.
    """
    if sym_cutoff < 0:
        raise ValueError("sym_cutoff must be nonnegative")
    sdeg = [g - 1 for g in L.degrees]
    monos = []
    for n in range(sym_cutoff + 1):
        monos += sym_monomials(sdeg, n)
    by_deg = {}
    for m in monos:
        by_deg.setdefault(sum(sdeg[i] for i in m), []).append(m)
    spaces = {dg: GradedSpaceWindow(ms, dg, name="C^%d" % dg) for dg, ms in by_deg.items()}
    arities = sorted(L.basis_brackets)
    d, delta = {}, ({} if cocycle is not None else None)
    for dg, sp in spaces.items():
        tgt = spaces.get(dg + 1, GradedSpaceWindow([]))
        cols = {}
        for m in sp:
            img = coderivation(L, m, arities)
            bad = [k for k in img if k not in tgt]
            if bad:
                raise ValueError("differential leaves the window at %r" % (bad[0],))
            cols[m] = img
        d[dg] = SparseMatrix(tgt, sp, columns=cols)
        if cocycle is not None:
            cols = {}
            for m in sp:
                img = coderivation(L, m, [cocycle_arity], scalar=cocycle)
                if any(k not in tgt for k in img):
                    raise ValueError("the twist must raise degree by one; "
                                     "got a cocycle of the wrong degree")
                cols[m] = img
            delta[dg] = SparseMatrix(tgt, sp, columns=cols)
    complete = not sym_monomials(sdeg, sym_cutoff + 1)
    return ChainComplexWindow(spaces, d, delta, complete_below=complete,
                              complete_above=True, name=name)
