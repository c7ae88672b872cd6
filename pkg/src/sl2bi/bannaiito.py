"""Finite-dimensional modules of the universal Bannai-Ito algebra.

An algebra on X, Y, Z in which ``{X,Y} - Z``, ``{Y,Z} - X`` and
``{Z,X} - Y`` are central.  This module builds the odd-dimensional family
``O_n(a,b,c)`` and the even-dimensional family ``E_n(a,b,c)``, applies the
sign and cyclic automorphisms, decides irreducibility, recovers module
parameters from matrices, and certifies Leonard triples.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .errors import DimMismatch, IrrationalSpectrum, NotAPath, NotIrreducible, NotScalar, ParityMismatch, ZeroTrace
from .exactlinalg import (
    IncrementalSpan,
    Matrix,
    anticommutator,
    as_rational,
    charpoly,
    eigenspace,
    format_rational,
    inverse,
    path_order,
    rational_roots,
)

ODD = "odd"
EVEN = "even"
SIGN_TWISTS = ((1, 1), (1, -1), (-1, 1), (-1, -1))

# automorphism -> signs applied to (X, Y, Z)
_SIGN_TABLE = {(1, 1): (1, 1, 1), (1, -1): (1, -1, -1), (-1, 1): (-1, 1, -1), (-1, -1): (-1, -1, 1)}


@dataclass(frozen=True)
class BITriple:
    X: Matrix
    Y: Matrix
    Z: Matrix

    def __post_init__(self):
        shapes = {self.X.shape, self.Y.shape, self.Z.shape}
        if len(shapes) != 1 or not self.X.is_square():
            raise DimMismatch(f"operators must be square of one size, got {sorted(shapes)}")

    @property
    def dim(self):
        return self.X.rows

    def operators(self):
        return {"X": self.X, "Y": self.Y, "Z": self.Z}

    def to_json(self):
        return {"schema": 1, "dim": self.dim, **{k: v.to_json()["entries"] for k, v in self.operators().items()}}


@dataclass(frozen=True)
class BIModuleParams:
    """Label of ``O_n(a,b,c)`` (parity odd, n even) or ``E_n(a,b,c)`` (parity even, n odd).

    ``twist`` is a sign automorphism applied after construction.
    """

    parity: str
    n: int
    a: Fraction
    b: Fraction
    c: Fraction
    twist: tuple = (1, 1)

    def __post_init__(self):
        parity = self.parity.lower()
        object.__setattr__(self, "parity", parity)
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        object.__setattr__(self, "twist", tuple(self.twist))
        if parity not in (ODD, EVEN):
            raise ParityMismatch(f"parity must be odd or even, not {self.parity!r}")
        if self.n < 0:
            raise ParityMismatch("n must be >= 0")
        if (parity == ODD) != (self.n % 2 == 0):
            raise ParityMismatch(f"{parity} dimension needs n {'even' if parity == ODD else 'odd'}, got n={self.n}")
        if self.twist not in _SIGN_TABLE:
            raise ValueError(f"twist must be one of {SIGN_TWISTS}")

    @property
    def dim(self):
        return self.n + 1

    @property
    def abc(self):
        return (self.a, self.b, self.c)

    def normalized(self):
        """Odd-dimensional modules absorb a sign twist into (a, b, c)."""
        if self.parity == EVEN or self.twist == (1, 1):
            return self
        sx, sy, sz = _SIGN_TABLE[self.twist]
        return BIModuleParams(ODD, self.n, sx * self.a, sy * self.b, sz * self.c)

    def __str__(self):
        name = "O" if self.parity == ODD else "E"
        args = ",".join(format_rational(x) for x in self.abc)
        tw = "" if self.twist == (1, 1) else "^(%d,%d)" % self.twist
        return f"{name}_{self.n}({args}){tw}"

    def to_json(self):
        return {
            "parity": self.parity,
            "n": self.n,
            "a": format_rational(self.a),
            "b": format_rational(self.b),
            "c": format_rational(self.c),
            "twist": list(self.twist),
        }


def _diagonal_entry(x, n, i):
    return Fraction((-1) ** i * (2 * x - n + 2 * i), 2)


def _superdiagonal_entry(p, i):
    n, a, b, c = p.n, p.a, p.b, p.c
    if p.parity == ODD:
        if i % 2 == 0:
            return Fraction(i * (n + 1 - 2 * i - 2 * a - 2 * b - 2 * c), 2)
        return Fraction((i - n - 1) * (n + 1 - 2 * i - 2 * a - 2 * b + 2 * c), 2)
    if i % 2 == 0:
        return Fraction(i * (n - i + 1))
    return c * c - ((2 * a + 2 * b - n + 2 * i - 1) / 2) ** 2


def central_scalars(p):
    """Scalars by which kappa, lambda, mu act on the untwisted module."""
    n, a, b, c = p.n, p.a, p.b, p.c
    if p.parity == ODD:
        return (2 * a * b - c * (n + 1), 2 * b * c - a * (n + 1), 2 * c * a - b * (n + 1))
    s2 = Fraction(n + 1, 2) ** 2
    return (c * c - a * a - b * b + s2, a * a - b * b - c * c + s2, b * b - c * c - a * a + s2)


def build_bi_module(p):
    """Matrices of X, Y, Z on ``O_n`` or ``E_n`` in the standard basis ``u_0 .. u_n``.

    X is lower bidiagonal, Y upper bidiagonal, and Z is ``{X,Y} - kappa``.
    """
    d = p.n + 1
    x = [[Fraction(0)] * d for _ in range(d)]
    y = [[Fraction(0)] * d for _ in range(d)]
    for i in range(d):
        x[i][i] = _diagonal_entry(p.a, p.n, i)
        y[i][i] = _diagonal_entry(p.b, p.n, i)
        if i + 1 < d:
            x[i + 1][i] = Fraction(1)
        if i >= 1:
            y[i - 1][i] = _superdiagonal_entry(p, i)
    X, Y = Matrix(x, d), Matrix(y, d)
    kappa = central_scalars(p)[0]
    Z = anticommutator(X, Y) - Matrix.scalar(d, kappa)
    return twist(BITriple(X, Y, Z), p.twist)


def central_elements(t):
    X, Y, Z = t.X, t.Y, t.Z
    return (anticommutator(X, Y) - Z, anticommutator(Y, Z) - X, anticommutator(Z, X) - Y)


def bi_casimir(t):
    return t.X @ t.X + t.Y @ t.Y + t.Z @ t.Z


def twist(t, g):
    """Twist by a sign pair ``(e, e')`` or by a cyclic shift ``k`` (an int mod 3)."""
    if isinstance(g, int):
        k = g % 3
        if k == 0:
            return t
        if k == 1:
            return BITriple(t.Y, t.Z, t.X)
        return BITriple(t.Z, t.X, t.Y)
    sx, sy, sz = _SIGN_TABLE[tuple(g)]
    return BITriple(t.X * sx, t.Y * sy, t.Z * sz)


def cubic_identities(t):
    """The two cubic relations that follow from centrality, as pass/fail.

    ``X^2 Y + 2XYX + YX^2 - Y = 2 kappa X + mu`` and the companion with Z;
    kappa and mu enter as matrices so the check also makes sense on
    reducible triples.
    """
    X, Y, Z = t.X, t.Y, t.Z
    kappa, _, mu = central_elements(t)
    xx = X @ X
    lhs1 = xx @ Y + (X @ Y @ X) * 2 + Y @ xx - Y
    lhs2 = xx @ Z + (X @ Z @ X) * 2 + Z @ xx - Z
    return {
        "XXY+2XYX+YXX-Y=2kX+m": lhs1 == (kappa @ X) * 2 + mu,
        "XXZ+2XZX+ZXX-Z=2mX+k": lhs2 == (mu @ X) * 2 + kappa,
    }


# -- irreducibility --------------------------------------------------------


def _forbidden_sums(p):
    n = p.n
    if p.parity == ODD:
        return {Fraction(n + 1, 2) - i for i in range(2, n + 1, 2)}
    return {Fraction(n - 1, 2) - i for i in range(0, n, 2)}


def _sign_sums(p):
    a, b, c = p.abc
    if p.parity == ODD:
        return (a + b + c, a - b - c, -a + b - c, -a - b + c)
    return (a + b + c, -a + b + c, a - b + c, a + b - c)


def is_irreducible_params(p):
    """Finite-set membership test on the signed sums of a, b, c.

    Sign twists never affect irreducibility, so ``p.twist`` is ignored.
    """
    bad = _forbidden_sums(p)
    return not any(s in bad for s in _sign_sums(p))


def _flatten(m):
    # numerators only: scaling never changes membership in a span
    return [x for row in m.numerators() for x in row]


def algebra_dimension(matrices, stop_at=None):
    """Dimension of the unital algebra generated by square matrices.

    Grows a span from the identity by left multiplication with the
    generators until it is closed.  Stops early once ``stop_at`` is reached.
    """
    d = matrices[0].rows
    span = IncrementalSpan(d * d)
    ident = Matrix.identity(d)
    span.add(_flatten(ident))
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in matrices:
                prod = g @ m
                if span.add(_flatten(prod)):
                    nxt.append(prod)
                    if stop_at is not None and span.dim >= stop_at:
                        return span.dim
        frontier = nxt
    return span.dim


def is_irreducible_matrix(t):
    """Burnside test: the triple generates all ``d x d`` matrices."""
    d = t.dim
    return algebra_dimension([t.X, t.Y, t.Z], stop_at=d * d) == d * d


# -- identification ---------------------------------------------------------


@dataclass(frozen=True)
class BIIdentification:
    """Isomorphism class of an irreducible module.

    Odd dimension: ``values`` is (a, b, c).  Even dimension: ``values`` is
    (a^2, b^2, c^2) and ``twist`` is the sign automorphism.
    """

    parity: str
    n: int
    values: tuple
    twist: tuple
    traces: tuple
    central: tuple

    @property
    def squares(self):
        return self.values if self.parity == EVEN else tuple(x * x for x in self.values)

    def matches(self, params):
        params = params.normalized()
        if params.parity != self.parity or params.n != self.n:
            return False
        if self.parity == ODD:
            return tuple(self.values) == params.abc
        return self.twist == params.twist and tuple(self.values) == tuple(x * x for x in params.abc)

    def to_json(self):
        key = "abc" if self.parity == ODD else "abc_squared"
        return {
            "parity": self.parity,
            "n": self.n,
            key: [format_rational(x) for x in self.values],
            "twist": list(self.twist),
            "traces": [format_rational(x) for x in self.traces],
            "kappa_lambda_mu": [format_rational(x) for x in self.central],
        }

    def __str__(self):
        vals = ",".join(format_rational(x) for x in self.values)
        if self.parity == ODD:
            return f"O_{self.n}({vals})"
        tw = "" if self.twist == (1, 1) else "^(%d,%d)" % self.twist
        return f"E_{self.n}(squares {vals}){tw}"


def _scalars(t):
    out = []
    for name, m in zip(("kappa", "lambda", "mu"), central_elements(t)):
        s = m.scalar_value()
        if s is None:
            raise NotScalar(f"{name} is not a scalar matrix; the triple is not irreducible")
        out.append(s)
    return tuple(out)


def identify_irreducible(t):
    """Recover the module parameters from an irreducible triple."""
    d = t.dim
    n = d - 1
    traces = (t.X.trace(), t.Y.trace(), t.Z.trace())
    if d % 2 == 1:
        central = _scalars(t)
        return BIIdentification(ODD, n, traces, (1, 1), traces, central)
    s = Fraction(n + 1, 2)
    if traces[0] == 0 or traces[1] == 0:
        raise ZeroTrace("trace of X or Y vanishes; sign twist undetermined", candidates=SIGN_TWISTS)
    signs = []
    for tr in traces[:2]:
        if abs(tr) != s:
            raise NotScalar(f"trace {tr} is not +-{s}; not an even-dimensional irreducible")
        signs.append(1 if tr == -s else -1)
    g = tuple(signs)
    kappa, lam, mu = _scalars(twist(t, g))
    squares = (s * s - (kappa + mu) / 2, s * s - (kappa + lam) / 2, s * s - (lam + mu) / 2)
    return BIIdentification(EVEN, n, squares, g, traces, (kappa, lam, mu))


# -- Leonard triples -----------------------------------------------------------


def leonard_set(n):
    return {Fraction(n - 1, 2) - i for i in range(n)}


def leonard_predict(p):
    """Parameter test for X, Y, Z acting as a Leonard triple."""
    if not is_irreducible_params(p):
        raise NotIrreducible(f"{p} is not irreducible")
    bad = leonard_set(p.n)
    return not any(x in bad for x in p.abc)


@dataclass
class OperatorVerdict:
    name: str
    eigenvalues: dict
    diagonalizable: bool
    simple: bool
    ordering: list = None
    tridiagonal: dict = field(default_factory=dict)
    diagnostic: str = ""

    @property
    def ok(self):
        return self.diagonalizable and self.simple and self.ordering is not None and all(self.tridiagonal.values())

    def to_json(self):
        return {
            "operator": self.name,
            "eigenvalues": {format_rational(k): v for k, v in self.eigenvalues.items()},
            "diagonalizable": self.diagonalizable,
            "simple_spectrum": self.simple,
            "ordering": self.ordering,
            "irreducible_tridiagonal": self.tridiagonal,
            "diagnostic": self.diagnostic,
        }


@dataclass
class LeonardVerdict:
    is_leonard: bool
    per_operator: list

    def to_json(self):
        return {"schema": 1, "is_leonard": self.is_leonard, "operators": [v.to_json() for v in self.per_operator]}


def _normalize_columns(p):
    cols = []
    for j in range(p.cols):
        vals = p.column_values(j)
        lead = next(x for x in vals if x)
        cols.append([x / lead for x in vals])
    return Matrix.from_columns(cols)


def _is_irreducible_tridiagonal(m):
    d = m.rows
    for i in range(d):
        for j in range(d):
            x = m[i, j]
            if abs(i - j) > 1 and x:
                return False
            if abs(i - j) == 1 and not x:
                return False
    return True


def spectrum(m):
    """Rational eigenvalues with algebraic multiplicities; raises on irrational roots."""
    roots, leftover = rational_roots(charpoly(m))
    if leftover:
        raise IrrationalSpectrum(f"characteristic polynomial has a factor of degree {leftover} without rational roots")
    return roots


def _check_operator(name, op, others):
    try:
        roots = spectrum(op)
    except IrrationalSpectrum as exc:
        return OperatorVerdict(name, {}, False, False, diagnostic=f"not diagonalizable over the rationals: {exc}")
    spaces = {lam: eigenspace(op, lam) for lam in roots}
    diag = sum(s.cols for s in spaces.values()) == op.rows
    simple = all(mult == 1 for mult in roots.values())
    verdict = OperatorVerdict(name, roots, diag, simple)
    if not diag:
        verdict.diagnostic = "not diagonalizable"
        return verdict
    if not simple:
        repeated = ", ".join(format_rational(lam) for lam, mult in roots.items() if mult > 1)
        verdict.diagnostic = f"repeated eigenvalue {repeated}"
        return verdict
    basis = _normalize_columns(Matrix.hstack([spaces[lam] for lam in sorted(roots)]))
    binv = inverse(basis)
    conj = {k: binv @ m @ basis for k, m in others.items()}
    d = op.rows
    support = [[any(c[i, j] != 0 for c in conj.values()) for j in range(d)] for i in range(d)]
    try:
        order = path_order(support)
    except NotAPath as exc:
        verdict.diagnostic = f"no tridiagonal ordering: {exc}"
        return verdict
    verdict.ordering = order
    verdict.tridiagonal = {k: _is_irreducible_tridiagonal(c.permuted(order)) for k, c in conj.items()}
    if not all(verdict.tridiagonal.values()):
        verdict.diagnostic = "not irreducible tridiagonal"
    return verdict


def leonard_check(t):
    """Decide from the matrices whether X, Y, Z form a Leonard triple.

    For each operator: exact spectrum, diagonalizability, simple spectrum,
    then the other two conjugated into its eigenbasis must be irreducible
    tridiagonal in a common ordering of that basis.  Evaluation stops at
    the first operator that fails.
    """
    ops = t.operators()
    verdicts = []
    for name, op in ops.items():
        v = _check_operator(name, op, {k: m for k, m in ops.items() if k != name})
        verdicts.append(v)
        if not v.ok:
            break
    ok = len(verdicts) == 3 and all(v.ok for v in verdicts)
    return LeonardVerdict(ok, verdicts)


def parameter_grid(values=None, n_max=6):
    """All (parity, n, a, b, c) with n <= n_max over a grid of rationals."""
    if values is None:
        values = [Fraction(k, 2) for k in range(-6, 7)]
    for n in range(n_max + 1):
        parity = ODD if n % 2 == 0 else EVEN
        for a, b, c in product(values, repeat=3):
            yield BIModuleParams(parity, n, a, b, c)
