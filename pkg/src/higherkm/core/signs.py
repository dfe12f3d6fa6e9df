"""Koszul signs for permuting graded tensor factors."""

from .scalar import ONE, Scalar


def _check_perm(perm):
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError("not a bijection on 0..%d: %r" % (n - 1, perm))


def koszul_int(perm, degrees):
    """
    Sign (+1 or -1) acquired when the factors x_0 ... x_{n-1} of the given
    degrees are rearranged into x_{perm[0]} ... x_{perm[n-1]}.

    ``perm`` is zero-based.  Each inversion of two factors of degrees a, b
    contributes (-1)^(a*b).
    """
    _check_perm(perm)
    s = 0
    n = len(perm)
    for i in range(n):
        di = degrees[perm[i]]
        if not di & 1:
            continue
        for j in range(i + 1, n):
            if perm[j] < perm[i] and degrees[perm[j]] & 1:
                s ^= 1
    return -1 if s else 1


def koszul_sign(permutation, degrees):
    """
    Scalar version of ``koszul_int``.  Accepts one-based permutations of
    {1..n} as well as zero-based ones.
    """
    perm = list(permutation)
    if perm and min(perm) == 1:
        perm = [p - 1 for p in perm]
    if len(degrees) != len(perm):
        raise ValueError("degrees and permutation differ in length")
    return ONE if koszul_int(perm, degrees) == 1 else -ONE


def perm_sign(perm):
    """Plain sign of a zero-based permutation."""
    return koszul_int(perm, [1] * len(perm))


def sort_sign(items, degrees=None):
    """
    Sign of sorting ``items`` into increasing order, counting only odd
    items when ``degrees`` is given.  Returns 0 when two odd items repeat.
    """
    n = len(items)
    if degrees is None:
        degrees = [1] * n
    s = 1
    for i in range(n):
        for j in range(i + 1, n):
            if items[i] == items[j] and degrees[i] & 1:
                return 0
            if items[i] > items[j] and degrees[i] & degrees[j] & 1:
                s = -s
    return s
