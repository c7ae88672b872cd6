"""Matrix representations of the skew ring.

Covers the irreducibles ``L_n^+`` and ``L_n^-``, tensor products through
the coproduct, Clebsch-Gordan embeddings, isotypic decomposition and the
power-set module of a finite set.
"""
from collections import namedtuple
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import comb, factorial, perm

from .errors import InvalidP, SignMismatch, TooLarge
from .exactlinalg import IncrementalSpan, Matrix, charpoly, eigenspace, kernel_matrix, rank, rational_roots, solve
from .skewring import PBWMonomial, RingElement, TensorElement, comultiply

POWERSET_CAP = 10


class IrrLabel(namedtuple("IrrLabel", "n sign")):
    """Highest weight ``n`` and rho-sign of an irreducible module."""

    def __new__(cls, n, sign=1):
        if n < 0:
            raise ValueError("highest weight must be >= 0")
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        return super().__new__(cls, n, sign)

    def __str__(self):
        return f"L_{self.n}^{'+' if self.sign > 0 else '-'}"

    @property
    def dim(self):
        return self.n + 1


@dataclass(frozen=True, eq=False)
class Representation:
    """Generator matrices on a labelled basis.

    With ``has_rho=False`` only the U(sl2) relations are meaningful and
    ``rho`` is ignored by the relation checker.
    """

    E: Matrix
    F: Matrix
    H: Matrix
    rho: Matrix
    basis_labels: tuple = ()
    has_rho: bool = True
    _powers: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def dim(self):
        return self.E.rows

    def generator(self, name):
        return {"E": self.E, "F": self.F, "H": self.H, "rho": self.rho}[name]

    def with_generator(self, name, matrix):
        """Copy with one generator matrix replaced (for negative controls)."""
        return replace(self, **{name: matrix}, _powers={})

    def power(self, name, k):
        key = (name, k)
        if key not in self._powers:
            if k == 0:
                self._powers[key] = Matrix.identity(self.dim)
            else:
                self._powers[key] = self.power(name, k - 1) @ self.generator(name)
        return self._powers[key]

    def monomial(self, m):
        out = Matrix.identity(self.dim)
        for name, e in (("E", m.i), ("F", m.j), ("H", m.k), ("rho", m.h)):
            if e:
                out = out @ self.power(name, e)
        return out

    def to_json(self):
        return {
            "schema": 1,
            "dim": self.dim,
            "basis_labels": list(self.basis_labels),
            "has_rho": self.has_rho,
            "generators": {g: self.generator(g).to_json()["entries"] for g in ("E", "F", "H", "rho")},
        }

    @classmethod
    def from_json(cls, data):
        gens = {g: Matrix.from_json({"cols": data["dim"], "entries": data["generators"][g]}) for g in ("E", "F", "H", "rho")}
        return cls(basis_labels=tuple(data.get("basis_labels", ())), has_rho=data.get("has_rho", True), **gens)


def _label(x):
    return x if isinstance(x, IrrLabel) else IrrLabel(*x)


def build_irreducible(label):
    """``L_n^sign`` on the basis ``v_0 .. v_n``."""
    n, sign = _label(label)
    d = n + 1
    e = [[0] * d for _ in range(d)]
    f = [[0] * d for _ in range(d)]
    h = [[0] * d for _ in range(d)]
    r = [[0] * d for _ in range(d)]
    for i in range(d):
        if i >= 1:
            e[i - 1][i] = i
        if i < n:
            f[i + 1][i] = n - i
        h[i][i] = n - 2 * i
        r[n - i][i] = sign
    return Representation(
        E=Matrix.from_integer_rows(e),
        F=Matrix.from_integer_rows(f),
        H=Matrix.from_integer_rows(h),
        rho=Matrix.from_integer_rows(r),
        basis_labels=tuple(f"v{i}" for i in range(d)),
    )


def act(rep, x):
    """Matrix of a RingElement on ``rep``."""
    out = Matrix.zeros(rep.dim)
    for m, c in x.items():
        out = out + rep.monomial(m) * c
    return out


def verify_defining_relations(rep):
    """Map from relation name to pass/fail, as exact matrix identities."""
    E, F, H, R = rep.E, rep.F, rep.H, rep.rho
    report = {
        "HE-EH=2E": H @ E - E @ H == E * 2,
        "HF-FH=-2F": H @ F - F @ H == F * -2,
        "EF-FE=H": E @ F - F @ E == H,
    }
    if rep.has_rho:
        report["rhoH+Hrho=0"] = (R @ H + H @ R).is_zero()
        report["rhoE-Frho=0"] = (R @ E - F @ R).is_zero()
        report["rho^2=I"] = R @ R == Matrix.identity(rep.dim)
    return report


class TensorRepresentation:
    """``left (x) right`` with the skew ring acting through the coproduct."""

    def __init__(self, left, right):
        self.left = left
        self.right = right
        self._cache = {}

    @property
    def dim(self):
        return self.left.dim * self.right.dim

    def apply(self, x):
        """Matrix of a TensorElement of arity 2, or of Delta(x) for a RingElement."""
        if isinstance(x, RingElement):
            key = x
            if key in self._cache:
                return self._cache[key]
            t = comultiply(x)
        else:
            key = None
            t = x
        if t.arity != 2:
            raise ValueError("tensor representation needs arity-2 elements")
        out = Matrix.zeros(self.dim)
        for (m1, m2), c in t.items():
            out = out + self.left.monomial(m1).kron(self.right.monomial(m2)) * c
        if key is not None:
            self._cache[key] = out
        return out

    def factor_op(self, x, side):
        """``x (x) 1`` for side 0, ``1 (x) x`` for side 1."""
        if side == 0:
            return act(self.left, x).kron(Matrix.identity(self.right.dim))
        return Matrix.identity(self.left.dim).kron(act(self.right, x))

    def as_representation(self):
        gens = {}
        for name, mono in (("E", (1, 0, 0, 0)), ("F", (0, 1, 0, 0)), ("H", (0, 0, 1, 0)), ("rho", (0, 0, 0, 1))):
            gens[name] = self.apply(RingElement({PBWMonomial(*mono): 1}))
        labels = tuple(f"{a}(x){b}" for a in self.left.basis_labels for b in self.right.basis_labels)
        return Representation(basis_labels=labels, has_rho=self.left.has_rho and self.right.has_rho, **gens)


def tensor_rep(a, b):
    return TensorRepresentation(a, b)


def cg_embedding(m, n, p):
    """Embedding of ``L_{m+n-2p}`` into ``L_m (x) L_n`` as a matrix.

    Column k is the image of ``v_k``; column 0 is the top vector
    ``sum_i (-1)^i C(p,i) v_i (x) v_{p-i}``.
    """
    if not 0 <= p <= min(m, n):
        raise InvalidP(f"p={p} outside 0..{min(m, n)}")
    size = (m + 1) * (n + 1)
    top = [0] * size
    for i in range(p + 1):
        top[i * (n + 1) + (p - i)] = (-1) ** i * comb(p, i)
    big_n = m + n - 2 * p
    lm, ln = build_irreducible((m, 1)), build_irreducible((n, 1))
    delta_f = lm.F.kron(Matrix.identity(n + 1)) + Matrix.identity(m + 1).kron(ln.F)
    cols = [Matrix.from_integer_rows([[x] for x in top])]
    vec = cols[0]
    for k in range(1, big_n + 1):
        vec = delta_f @ vec
        cols.append(vec / perm(big_n, k))
    return Matrix.hstack(cols)


def cg_sign(p, left_sign, right_sign):
    return (-1) ** p * left_sign * right_sign


CGPiece = namedtuple("CGPiece", "p label embedding")


def cg_pieces(a, b):
    """Summands of ``L_m^d (x) L_n^e`` with their embeddings, sign-checked.

    The sign of each summand is read off the extremal vectors: rho applied
    to the image of ``v_0`` must be sign times the image of ``v_N``.  The
    boundary coefficients of the images of ``v_{m-p}`` and ``v_{n-p}`` are
    checked as well.  Raises SignMismatch on any disagreement.
    """
    a, b = _label(a), _label(b)
    m, n = a.n, b.n
    rho = build_irreducible(a).rho.kron(build_irreducible(b).rho)
    pieces = []
    for p in range(min(m, n) + 1):
        big_n = m + n - 2 * p
        f = cg_embedding(m, n, p)
        expected = cg_sign(p, a.sign, b.sign)
        if rho @ f.column(0) != f.column(big_n) * expected:
            raise SignMismatch(f"rho-sign of summand p={p} in {a} (x) {b} is not {expected:+d}")
        if f[m * (n + 1), m - p] != Fraction((-1) ** p, comb(big_n, m - p)):
            raise SignMismatch(f"coefficient of v_m (x) v_0 wrong for p={p}")
        if f[n, n - p] != Fraction(1, comb(big_n, n - p)):
            raise SignMismatch(f"coefficient of v_0 (x) v_n wrong for p={p}")
        pieces.append(CGPiece(p, IrrLabel(big_n, expected), f))
    return pieces


def cg_decompose(a, b):
    """Labels of the irreducible summands of ``a (x) b``, largest first."""
    return [piece.label for piece in cg_pieces(a, b)]


def intertwines(f, source, target):
    """True iff ``target.u @ f == f @ source.u`` for every generator u."""
    names = ("E", "F", "H", "rho") if source.has_rho and target.has_rho else ("E", "F", "H")
    return all(target.generator(g) @ f == f @ source.generator(g) for g in names)


# -- power sets ----------------------------------------------------------


def _subset_label(mask, elements):
    return "{" + ",".join(str(e) for k, e in enumerate(elements) if mask >> k & 1) + "}"


def powerset_rep(omega_size, cap=POWERSET_CAP, elements=None):
    """Module on all subsets of an ``omega_size``-set.

    Basis: subsets as bitmasks in counting order.  E removes one element,
    F adds one, H is ``|Omega| - 2|x|`` and rho takes complements.
    """
    if omega_size < 0:
        raise ValueError("omega_size must be >= 0")
    if omega_size > cap:
        raise TooLarge(f"power set of size {omega_size} exceeds cap {cap}")
    size = 1 << omega_size
    full = size - 1
    elements = list(range(omega_size)) if elements is None else list(elements)
    e = [[0] * size for _ in range(size)]
    f = [[0] * size for _ in range(size)]
    h = [[0] * size for _ in range(size)]
    r = [[0] * size for _ in range(size)]
    for x in range(size):
        for k in range(omega_size):
            bit = 1 << k
            if x & bit:
                e[x ^ bit][x] = 1
            else:
                f[x | bit][x] = 1
        h[x][x] = omega_size - 2 * bin(x).count("1")
        r[full ^ x][x] = 1
    return Representation(
        E=Matrix.from_integer_rows(e),
        F=Matrix.from_integer_rows(f),
        H=Matrix.from_integer_rows(h),
        rho=Matrix.from_integer_rows(r),
        basis_labels=tuple(_subset_label(x, elements) for x in range(size)),
    )


def _mask(x0):
    if isinstance(x0, int):
        return x0
    mask = 0
    for e in x0:
        mask |= 1 << e
    return mask


def split_subset(x, x0, omega_size):
    """Relative bitmasks of ``x \\ x0`` inside ``Omega \\ x0`` and ``x & x0`` inside ``x0``."""
    left = right = 0
    li = ri = 0
    for k in range(omega_size):
        bit = 1 << k
        if x0 & bit:
            if x & bit:
                right |= 1 << ri
            ri += 1
        else:
            if x & bit:
                left |= 1 << li
            li += 1
    return left, right


def iota_intertwiner(omega_size, x0):
    """Permutation ``x -> (x minus x0) (x) (x meet x0)`` as a matrix.

    Rows index the tensor basis of ``powerset(Omega \\ x0) (x) powerset(x0)``.
    """
    x0 = _mask(x0)
    if x0 >> omega_size:
        raise ValueError("x0 is not a subset of Omega")
    k = bin(x0).count("1")
    size = 1 << omega_size
    num = [[0] * size for _ in range(size)]
    for x in range(size):
        left, right = split_subset(x, x0, omega_size)
        num[left * (1 << k) + right][x] = 1
    return Matrix.from_integer_rows(num)


def iota_factors(omega_size, x0):
    """The power-set modules on ``Omega \\ x0`` and on ``x0``, as a tensor."""
    x0 = _mask(x0)
    inside = [e for e in range(omega_size) if x0 >> e & 1]
    outside = [e for e in range(omega_size) if not x0 >> e & 1]
    return tensor_rep(powerset_rep(len(outside), elements=outside), powerset_rep(len(inside), elements=inside))


def verify_iota(omega_size, x0):
    """Per generator: does iota intertwine the power-set action with the coproduct?"""
    iota = iota_intertwiner(omega_size, x0)
    whole = powerset_rep(omega_size)
    tens = iota_factors(omega_size, x0).as_representation()
    return {g: iota @ whole.generator(g) == tens.generator(g) @ iota for g in ("E", "F", "H", "rho")}


def powerset_multiplicity(size, i):
    """``(size-2i+1)/(size-i+1) * C(size, i)`` for ``0 <= i <= size``.

    For ``2i <= size`` this is the multiplicity of ``L_{size-2i}^{(-1)^i}``
    in the power-set module; beyond that it is the formal value (possibly
    negative) that the Pascal-type recurrence needs.
    """
    if not 0 <= i <= size:
        raise ValueError(f"need 0 <= i <= {size}, got {i}")
    return Fraction(size - 2 * i + 1, size - i + 1) * comb(size, i)


def powerset_decompose(omega_size):
    """Formula multiplicities ``[(IrrLabel, multiplicity)]``, largest weight first."""
    out = []
    for i in range(omega_size // 2 + 1):
        mult = powerset_multiplicity(omega_size, i)
        if mult.denominator != 1:
            raise ArithmeticError("multiplicity formula gave a non-integer")
        out.append((IrrLabel(omega_size - 2 * i, (-1) ** i), int(mult)))
    return out


# -- decomposition of arbitrary modules -----------------------------------

Summand = namedtuple("Summand", "label embeddings")


def decompose(rep):
    """Split ``rep`` into irreducibles.

    For each highest weight n the highest-weight space is ``ker E`` inside
    the H-eigenspace for n.  Writing ``T = F^n / n!``, rho maps the span K
    of those vectors to ``T K``; solving ``T K M = rho K`` gives an
    involution M whose +1 and -1 eigenspaces pick out the copies of
    ``L_n^+`` and ``L_n^-``.  Each copy is returned as an embedding matrix
    whose column k is ``F^k v / (n!/(n-k)!)``.

    Returns ``[Summand(label, [embedding, ...])]`` sorted by decreasing n,
    then + before -.
    """
    weights = sorted({x for x in rep.H.diagonal()} if rep.H.is_diagonal() else _h_spectrum(rep), reverse=True)
    out = []
    for w in weights:
        if w < 0 or w.denominator != 1:
            continue
        n = int(w)
        wspace = eigenspace(rep.H, n)
        if wspace.cols == 0:
            continue
        k = wspace @ kernel_matrix(rep.E @ wspace)
        if k.cols == 0:
            continue
        t_k = rep.power("F", n) @ k / factorial(n)
        if rep.has_rho:
            mix = solve(t_k, rep.rho @ k)
            parts = [(1, mix - Matrix.identity(k.cols)), (-1, mix + Matrix.identity(k.cols))]
        else:
            parts = [(1, Matrix.zeros(k.cols))]
        for sign, shifted in parts:
            vectors = k @ kernel_matrix(shifted)
            if vectors.cols == 0:
                continue
            embeddings = []
            for c in range(vectors.cols):
                vec = vectors.column(c)
                cols = [vec]
                for j in range(1, n + 1):
                    vec = rep.F @ vec
                    cols.append(vec / perm(n, j))
                embeddings.append(Matrix.hstack(cols))
            out.append(Summand(IrrLabel(n, sign), embeddings))
    return out


def _h_spectrum(rep):
    roots, _ = rational_roots(charpoly(rep.H))
    return list(roots)


def multiplicities(rep):
    """``[(IrrLabel, multiplicity)]`` computed from the module itself."""
    return [(s.label, len(s.embeddings)) for s in decompose(rep)]


def joint_rank(matrices):
    """Rank of the column span of several matrices together."""
    return rank(Matrix.hstack(matrices).transpose())


def is_direct_sum(embeddings, dim):
    """True iff the embedded images are independent and fill ``dim``."""
    span = IncrementalSpan(dim)
    total = 0
    for f in embeddings:
        for c in range(f.cols):
            total += 1
            if not span.add(f.column(c)):
                return False
    return total == dim
