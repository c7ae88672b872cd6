"""Exact linear algebra on ``Matrix``: kernels, solves, spectra, paths."""
from fractions import Fraction
from math import gcd, isqrt, lcm

from ..errors import NotAPath
from ._backend import kernels
from .matrix import Matrix


def row_echelon(m):
    """Reduced row echelon form as ``(Matrix, pivots)`` with primitive integer rows."""
    rows, pivots = kernels.echelon(m.numerators(), m.cols)
    return Matrix.from_integer_rows(rows, 1, m.cols), pivots


def rank(m):
    return len(kernels.echelon(m.numerators(), m.cols)[1])


def kernel_basis(m):
    """Basis of the right null space, one column ``Matrix`` per free column."""
    rows, pivots = kernels.echelon(m.numerators(), m.cols)
    free = [j for j in range(m.cols) if j not in set(pivots)]
    basis = []
    for f in free:
        vec = [Fraction(0)] * m.cols
        vec[f] = Fraction(1)
        for row, pc in zip(rows, pivots):
            if row[f]:
                vec[pc] = Fraction(-row[f], row[pc])
        basis.append(Matrix([[x] for x in vec], 1))
    return basis


def kernel_matrix(m):
    """Null-space basis as the columns of one matrix (possibly zero columns)."""
    return Matrix.from_columns(kernel_basis(m), rows=m.cols)


def eigenspace(m, value):
    """Columns spanning ker(m - value I)."""
    if m.is_diagonal():
        # same basis row reduction would give, without the elimination
        hits = [i for i, x in enumerate(m.diagonal()) if x == value]
        num = [[1 if i == h else 0 for h in hits] for i in range(m.rows)]
        return Matrix.from_integer_rows(num, 1, len(hits))
    return kernel_matrix(m - Matrix.scalar(m.rows, value))


def solve(a, b):
    """Unique ``x`` with ``a @ x == b``; ValueError if none or not unique."""
    if a.rows != b.rows:
        raise ValueError("row counts differ")
    da, db = a.denominator, b.denominator
    aug = [[x * db for x in ra] + [y * da for y in rb] for ra, rb in zip(a.numerators(), b.numerators())]
    rows, pivots = kernels.echelon(aug, a.cols + b.cols)
    if pivots[: a.cols] != list(range(a.cols)):
        raise ValueError("system is not uniquely solvable")
    if len(pivots) > a.cols:
        raise ValueError("system is inconsistent")
    x = [[Fraction(rows[i][a.cols + j], rows[i][i]) for j in range(b.cols)] for i in range(a.cols)]
    return Matrix(x, b.cols)


def inverse(m):
    if not m.is_square():
        raise ValueError("only square matrices are invertible")
    return solve(m, Matrix.identity(m.rows))


def charpoly(m):
    """Coefficients of ``det(t I - m)``, lowest degree first.

    Faddeev-LeVerrier recursion; exact over the rationals.
    """
    n = m.rows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    acc = Matrix.zeros(n)
    ident = Matrix.identity(n)
    for k in range(1, n + 1):
        acc = m @ acc + ident * coeffs[n - k + 1]
        coeffs[n - k] = -(m @ acc).trace() / k
    return coeffs


def _integer_poly(coeffs):
    d = lcm(1, *(Fraction(c).denominator for c in coeffs))
    ints = [int(Fraction(c) * d) for c in coeffs]
    g = gcd(*ints)
    return [x // g for x in ints]


def _deflate(poly, root):
    """Divide integer-or-rational poly (lowest first) by ``t - root``; None if not a root."""
    hi = len(poly) - 1
    out = [Fraction(0)] * hi
    carry = Fraction(0)
    for k in range(hi, 0, -1):
        carry = carry * root + poly[k]
        out[k - 1] = carry
    if carry * root + poly[0] != 0:
        return None
    return out


def _root_bound(poly):
    """Fujiwara bound on the absolute value of every complex root."""
    n = len(poly) - 1
    lead = abs(Fraction(poly[n]))
    best = 0.0
    for k in range(1, n + 1):
        c = abs(Fraction(poly[n - k])) / lead
        if k == n:
            c /= 2
        if c:
            best = max(best, float(c) ** (1.0 / k))
    return int(2 * best) + 2


def _divisors(n):
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def rational_roots(coeffs):
    """Rational roots of a polynomial given lowest degree first.

    Returns ``(roots, leftover)`` where ``roots`` maps each rational root to
    its multiplicity and ``leftover`` is the degree of the factor with no
    rational root.  Denominators 1 and 2 are scanned first since spectra in
    this package are half-integral; any other denominator allowed by the
    rational root theorem is tried afterwards.
    """
    poly = [Fraction(x) for x in _integer_poly(coeffs)]
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    roots = {}

    def strip(root):
        nonlocal poly
        found = False
        while len(poly) > 1:
            q = _deflate(poly, root)
            if q is None:
                break
            poly = q
            roots[root] = roots.get(root, 0) + 1
            found = True
        return found

    strip(Fraction(0))
    if len(poly) == 1:
        return roots, 0
    bound = _root_bound(poly)
    for q in (1, 2):
        for p in range(1, bound * q + 1):
            if gcd(p, q) != 1:
                continue
            for sign in (1, -1):
                if len(poly) > 1:
                    strip(Fraction(sign * p, q))
    if len(poly) > 1:
        ints = _integer_poly(poly)
        for q in _divisors(ints[-1]):
            if q in (1, 2):
                continue
            for p in _divisors(ints[0]):
                if p > bound * q or gcd(p, q) != 1 or len(poly) == 1:
                    continue
                for sign in (1, -1):
                    if len(poly) > 1:
                        strip(Fraction(sign * p, q))
    return dict(sorted(roots.items())), len(poly) - 1


def path_order(adjacency):
    """Order the vertices of a path graph from one end to the other.

    ``adjacency`` is a square 0/1 (or boolean) symmetric table; its diagonal
    is ignored.  The walk starts from the end vertex with the smaller
    index.  Raises NotAPath when the graph is not a single path through
    every vertex.
    """
    n = len(adjacency)
    nbrs = [[j for j in range(n) if j != i and (adjacency[i][j] or adjacency[j][i])] for i in range(n)]
    if n == 1:
        return [0]
    if any(len(x) > 2 or not x for x in nbrs):
        raise NotAPath("vertex degree outside 1..2")
    ends = [i for i in range(n) if len(nbrs[i]) == 1]
    if len(ends) != 2:
        raise NotAPath("graph is a cycle or has several components")
    order = [ends[0]]
    prev = -1
    while len(order) < n:
        cur = order[-1]
        nxt = [j for j in nbrs[cur] if j != prev]
        if not nxt:
            break
        prev = cur
        order.append(nxt[0])
    if len(order) != n or len(set(order)) != n:
        raise NotAPath("graph is not connected")
    return order


class IncrementalSpan:
    """Row span over the rationals that grows one vector at a time."""

    def __init__(self, length):
        self.length = length
        self._basis = []
        self._pivots = []

    @property
    def dim(self):
        return len(self._basis)

    def _ints(self, vector):
        if isinstance(vector, Matrix):
            ints = [x for row in vector.numerators() for x in row]
        elif all(type(x) is int for x in vector):
            ints = list(vector)
        else:
            vals = [Fraction(x) for x in vector]
            d = lcm(1, *(x.denominator for x in vals))
            ints = [int(x * d) for x in vals]
        if len(ints) != self.length:
            raise ValueError("vector length mismatch")
        return ints

    def add(self, vector):
        """Add a vector (a list of rationals or a Matrix); True if the span grew."""
        rem = kernels.reduce_vector(self._ints(vector), self._basis, self._pivots)
        for c, x in enumerate(rem):
            if x:
                if x < 0:
                    rem = [-y for y in rem]
                self._basis.append(rem)
                self._pivots.append(c)
                return True
        return False

    def contains(self, vector):
        return not any(kernels.reduce_vector(self._ints(vector), self._basis, self._pivots))
