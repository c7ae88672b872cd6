"""Bannai-Ito action on the weight-1 subspace of a tensor product.

On ``V = A (x) B`` the subspace ``V(1)`` where the coproduct of H acts by
1 carries

    X = Delta(E rho),  Y = (H (x) 1 - 1 (x) H) / 2,  Z = (E (x) 1 - 1 (x) E) Delta(rho)

and these satisfy the Bannai-Ito relations with kappa = lambda = 0.
"""
from dataclasses import dataclass
from fractions import Fraction

from .bannaiito import EVEN, ODD, BIModuleParams, BITriple, central_elements, identify_irreducible
from .errors import BadParity, ClosureFailure, NotScalar
from .exactlinalg import Matrix, eigenspace, solve
from .sl2modules import IrrLabel, build_irreducible, tensor_rep
from .skewring import E, H, RHO_ELT, RingElement


@dataclass(frozen=True)
class WeightSubspace:
    theta: Fraction
    basis: Matrix
    ladder: dict

    @property
    def dim(self):
        return self.basis.cols


def _contained(h, vectors, theta):
    return h @ vectors == vectors * theta


def weight_subspace(t, theta=1):
    """Eigenspace of the coproduct of H, with the ladder inclusions checked.

    ``ladder`` records whether ``E (x) 1`` and ``1 (x) E`` raise the weight
    by 2, ``F (x) 1`` lowers it by 2, and ``Delta(rho)`` sends it to ``-theta``.
    """
    theta = Fraction(theta)
    h = t.apply(H)
    basis = eigenspace(h, theta)
    e_left = t.factor_op(E, 0)
    e_right = t.factor_op(E, 1)
    f_left = t.factor_op(RingElement({(0, 1, 0, 0): 1}), 0)
    rho = t.apply(RHO_ELT)
    ladder = {
        "E(x)1 raises by 2": _contained(h, e_left @ basis, theta + 2),
        "1(x)E raises by 2": _contained(h, e_right @ basis, theta + 2),
        "F(x)1 lowers by 2": _contained(h, f_left @ basis, theta - 2),
        "Delta(rho) negates": _contained(h, rho @ basis, -theta),
    }
    return WeightSubspace(theta, basis, ladder)


def v1_operators(t):
    """Full-space matrices of the three operators on ``A (x) B``."""
    x = t.apply(E * RHO_ELT)
    y = (t.factor_op(H, 0) - t.factor_op(H, 1)) / 2
    z = (t.factor_op(E, 0) - t.factor_op(E, 1)) @ t.apply(RHO_ELT)
    return x, y, z


def restrict(op, basis):
    """Matrix of ``op`` on the span of ``basis``; ClosureFailure if not invariant."""
    try:
        return solve(basis, op @ basis)
    except ValueError as exc:
        raise ClosureFailure(f"operator does not preserve the subspace ({exc})") from None


@dataclass
class V1Module:
    ambient: object
    basis: WeightSubspace
    triple: BITriple
    identification: object
    relations: dict

    @property
    def dim(self):
        return self.basis.dim


def bi_on_v1(t, identify=True):
    """Restrict X, Y, Z to ``V(1)`` of the tensor representation ``t``."""
    ws = weight_subspace(t, 1)
    if ws.dim == 0:
        empty = Matrix.zeros(0)
        return V1Module(t, ws, BITriple(empty, empty, empty), None, {})
    ops = [restrict(op, ws.basis) for op in v1_operators(t)]
    triple = BITriple(*ops)
    kappa, lam, mu = central_elements(triple)
    relations = {
        "{X,Y}=Z": kappa.is_zero(),
        "{Y,Z}=X": lam.is_zero(),
        "mu commutes": all(mu @ m == m @ mu for m in ops),
    }
    ident = None
    if identify:
        try:
            ident = identify_irreducible(triple)
        except NotScalar:
            ident = None
    return V1Module(t, ws, triple, ident, relations)


def v1_of(left, right, identify=True):
    """``bi_on_v1`` for ``L_left (x) L_right`` given as IrrLabels or (n, sign)."""
    return bi_on_v1(tensor_rep(build_irreducible(left), build_irreducible(right)), identify)


def _check_pair(m, n):
    if m > n or (m + n) % 2 == 0:
        raise BadParity(f"need m <= n with m + n odd, got m={m}, n={n}")


def explicit_w_basis(m, n):
    """Closed-form basis ``w_i`` of ``V(1)`` in ``L_m^+ (x) L_n^+`` and the X, Y actions.

    ``w_i = v_{m-i} (x) v_{(n-m-1)/2 + i}``.  Returns ``(W, X, Y)`` where
    W has the w_i as columns in tensor coordinates.
    """
    _check_pair(m, n)
    d = m + 1
    shift = (n - m - 1) // 2
    size = (m + 1) * (n + 1)
    w = [[0] * d for _ in range(size)]
    for i in range(d):
        w[(m - i) * (n + 1) + shift + i][i] = 1
    x = [[Fraction(0)] * d for _ in range(d)]
    for i in range(d):
        x[m - i][i] += Fraction(m + n + 1, 2) - i
        if i >= 1:
            x[m - i + 1][i] += i
    y = Matrix.diag([Fraction(4 * i - 2 * m - 1, 2) for i in range(d)])
    return Matrix.from_integer_rows(w, 1, d), Matrix(x, d), y


def check_explicit_basis(m, n):
    """Compare the closed forms with the restricted operators after base change."""
    w, x, y = explicit_w_basis(m, n)
    mod = v1_of((m, 1), (n, 1), identify=False)
    change = solve(mod.basis.basis, w)
    inv_change = solve(change, Matrix.identity(change.rows))
    return {
        "X": inv_change @ mod.triple.X @ change == x,
        "Y": inv_change @ mod.triple.Y @ change == y,
    }


# D4 element applied to L_m^+ (x) L_n^+, keyed by (swapped, left/right signs of
# the L_m and L_n factors), with its image in the sign group.
D4_DICTIONARY = {
    (False, (1, 1)): ("1", (1, 1)),
    (False, (1, -1)): ("sigma tau", (-1, 1)),
    (False, (-1, 1)): ("sigma tau^-1", (-1, 1)),
    (False, (-1, -1)): ("tau^2", (1, 1)),
    (True, (1, 1)): ("sigma", (1, -1)),
    (True, (-1, 1)): ("tau", (-1, -1)),
    (True, (1, -1)): ("tau^-1", (-1, -1)),
    (True, (-1, -1)): ("sigma tau^2", (1, -1)),
}


def base_identification(m, n):
    """Parameters of ``V(1)`` for ``L_m^+ (x) L_n^+`` with ``m <= n``."""
    _check_pair(m, n)
    if m % 2 == 0:
        return BIModuleParams(ODD, m, Fraction(n + 1, 2), Fraction(-(m + 1), 2), Fraction(-(n + 1), 2))
    return BIModuleParams(EVEN, m, Fraction(n + 1, 2), Fraction(m + 1, 2), Fraction(n + 1, 2), (-1, 1))


def identify_v1(m, n, signs=(1, 1), swapped=False):
    """Parameters of ``V(1)`` for ``L_m^d (x) L_n^e`` (or ``L_n^e (x) L_m^d`` if swapped).

    ``signs = (d, e)`` are the rho-signs of the L_m and L_n factors.  The
    answer is the base case twisted by the sign image of the D4 element
    relating the two tensor products.  Odd-dimensional answers fold the
    twist into (a, b, c).
    """
    base = base_identification(m, n)
    _, g = D4_DICTIONARY[(bool(swapped), tuple(signs))]
    tw = (base.twist[0] * g[0], base.twist[1] * g[1])
    return BIModuleParams(base.parity, base.n, base.a, base.b, base.c, tw).normalized()


def d4_element(signs=(1, 1), swapped=False):
    return D4_DICTIONARY[(bool(swapped), tuple(signs))][0]


def identify_tensor(left, right):
    """``identify_v1`` for ``left (x) right`` in either order."""
    left, right = IrrLabel(*left), IrrLabel(*right)
    if left.n <= right.n:
        return identify_v1(left.n, right.n, (left.sign, right.sign), swapped=False)
    return identify_v1(right.n, left.n, (right.sign, left.sign), swapped=True)


def expected_mu(left_n, right_n):
    return Fraction(left_n * (left_n + 2) - right_n * (right_n + 2), 2)


def expected_casimir(left_n, right_n):
    return Fraction(left_n * (left_n + 2) + right_n * (right_n + 2), 2) + Fraction(3, 4)
