"""Pure-Python integer kernels.

Every matrix handed to these functions is a list of rows of Python ints
(the numerators of a rational matrix over a common denominator).  The
compiled twin in ``_kernels_c.pyx`` implements the same three functions
with the same results.
"""
from math import gcd

NAME = "python"


def matmul(a, b, ncols):
    """Integer product ``a @ b``; ``b`` has ``ncols`` columns."""
    out = []
    for arow in a:
        acc = [0] * ncols
        for k, x in enumerate(arow):
            if x:
                brow = b[k]
                for j in range(ncols):
                    y = brow[j]
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out


def _primitive(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def echelon(rows, ncols):
    """Fraction-free reduced row echelon form.

    Returns ``(reduced, pivots)``: ``reduced`` holds one primitive integer
    row per pivot, each pivot column is zero in every other row.  Pivots
    are chosen as the first nonzero entry in row order.
    """
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and m[p][c] == 0:
            p += 1
        if p == nrows:
            continue
        if p != r:
            m[p], m[r] = m[r], m[p]
        prow = m[r]
        pv = prow[c]
        if pv < 0:
            prow = [-x for x in prow]
            pv = -pv
        prow = _primitive(prow)
        pv = prow[c]
        m[r] = prow
        for i in range(nrows):
            if i == r:
                continue
            row = m[i]
            f = row[c]
            if f:
                g = gcd(pv, f)
                s, t = pv // g, f // g
                m[i] = _primitive([s * x - t * y for x, y in zip(row, prow)])
        pivots.append(c)
        r += 1
    return m[:r], pivots


def reduce_vector(v, basis, pivots):
    """Reduce integer vector ``v`` against an echelon ``basis``.

    ``basis[k]`` is a primitive row whose pivot column is ``pivots[k]``
    and whose pivot entry is positive.  Returns the primitive remainder
    (all zeros when ``v`` lies in the span).
    """
    v = list(v)
    for row, c in zip(basis, pivots):
        f = v[c]
        if f:
            pv = row[c]
            g = gcd(pv, f)
            s, t = pv // g, f // g
            v = [s * x - t * y for x, y in zip(v, row)]
    return _primitive(v)
