"""Odd graphs and the Bannai-Ito action on their standard modules.

Vertices are the d-subsets of a (2d+1)-set, adjacent when disjoint.  With
a base vertex x0 the adjacency matrix A and the dual adjacency matrix
A*(x0) give matrices for X, Y, Z.  The standard module then splits as
the V(1) spaces of tensor products of irreducible pieces of the power-set
modules on the complement of x0 and on x0.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .bannaiito import (
    BITriple,
    algebra_dimension,
    anticommutator,
    identify_irreducible,
    leonard_check,
    spectrum,
)
from .errors import BadVertex, DecompositionMismatch, TooLarge
from .exactlinalg import Matrix, format_rational, rank, solve
from .sl2modules import decompose, iota_factors, split_subset
from .v1functor import bi_on_v1, d4_element, identify_tensor, v1_of

D_CAP = 5
DECOMPOSE_CAP = 4


def _popcount(x):
    return bin(x).count("1")


@dataclass(frozen=True)
class OddGraph:
    d: int
    vertices: tuple
    A: Matrix

    @property
    def ground(self):
        return tuple(range(2 * self.d + 1))

    @property
    def size(self):
        return len(self.vertices)

    def index(self, x0):
        mask = as_vertex(self.d, x0)
        return self.vertices.index(mask)


def as_vertex(d, x0):
    """Vertex from a bitmask or an iterable of ground elements."""
    if isinstance(x0, int):
        mask = x0
    else:
        mask = 0
        for e in x0:
            e = int(e)
            if not 0 <= e <= 2 * d:
                raise BadVertex(f"element {e} outside ground set 0..{2 * d}")
            if mask >> e & 1:
                raise BadVertex(f"element {e} repeated")
            mask |= 1 << e
    if mask < 0 or mask >> (2 * d + 1) or _popcount(mask) != d:
        raise BadVertex(f"base vertex must be a {d}-subset of 0..{2 * d}")
    return mask


def vertex_elements(mask):
    return [k for k in range(mask.bit_length()) if mask >> k & 1]


def default_base(d):
    return (1 << d) - 1


def build_odd_graph(d, cap=D_CAP):
    """Vertices in colex order (increasing bitmask) and the disjointness matrix."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if d > cap:
        raise TooLarge(f"d={d} exceeds cap {cap}")
    verts = tuple(x for x in range(1 << (2 * d + 1)) if _popcount(x) == d)
    num = [[1 if not (x & y) else 0 for y in verts] for x in verts]
    return OddGraph(d, verts, Matrix.from_integer_rows(num))


def dual_adjacency(g, x0):
    x0 = as_vertex(g.d, x0)
    d = g.d
    scale = Fraction(2 * d + 1, d + 1)
    return Matrix.diag([2 * d - scale * _popcount(x0 ^ x) for x in g.vertices])


def terwilliger_images(g, x0):
    """Images of X, Y, Z: A, an affine function of A*, and a mix of A and {A, A*}."""
    d = g.d
    a = g.A
    astar = dual_adjacency(g, x0)
    ident = Matrix.identity(g.size)
    c = Fraction(d + 1, 2 * d + 1)
    y = astar * c + ident * Fraction(1, 2 * (2 * d + 1))
    z = anticommutator(a, astar) * c + a * Fraction(1, 2 * d + 1)
    return BITriple(a, y, z)


def verify_homomorphism(t):
    """Relations of the image: kappa = lambda = 0 and mu central."""
    X, Y, Z = t.X, t.Y, t.Z
    mu = anticommutator(Z, X) - Y
    return {
        "{X,Y}-Z=0": (anticommutator(X, Y) - Z).is_zero(),
        "{Y,Z}-X=0": (anticommutator(Y, Z) - X).is_zero(),
        "mu commutes with X,Y,Z": all(mu @ m == m @ mu for m in (X, Y, Z)),
    }


def _vertex_columns(g, x0):
    """Tensor-coordinate unit vectors of the vertices, via x -> (x - x0) (x) (x & x0)."""
    n_omega = 2 * g.d + 1
    right_size = 1 << g.d
    rows = 1 << n_omega
    hits = []
    for x in g.vertices:
        left, right = split_subset(x, x0, n_omega)
        hits.append(left * right_size + right)
    num = [[0] * len(hits) for _ in range(rows)]
    for j, r in enumerate(hits):
        num[r][j] = 1
    return Matrix.from_integer_rows(num, 1, len(hits)), hits


def match_with_v1(d, x0=None):
    """Compare the V(1) operators of the split power-set module with the graph images."""
    g = build_odd_graph(d)
    x0 = default_base(d) if x0 is None else as_vertex(d, x0)
    images = terwilliger_images(g, x0)
    tens = iota_factors(2 * d + 1, x0)
    mod = bi_on_v1(tens, identify=False)
    cols, _ = _vertex_columns(g, x0)
    change = solve(mod.basis.basis, cols)
    back = change.transpose()  # a permutation matrix
    pulled = BITriple(*(back @ m @ change for m in (mod.triple.X, mod.triple.Y, mod.triple.Z)))
    return {
        "dim V(1) = C(2d+1,d)": mod.dim == comb(2 * d + 1, d),
        "X = A": pulled.X == images.X,
        "Y = Y-image": pulled.Y == images.Y,
        "Z = Z-image": pulled.Z == images.Z,
    }


@dataclass
class SummandReport:
    left: object
    right: object
    dim: int
    multiplicity: int
    params: object
    d4: str
    identification: object
    spectra: dict
    leonard: bool
    triple: BITriple
    embeddings: list = field(default_factory=list, repr=False)

    def to_json(self):
        return {
            "factors": [str(self.left), str(self.right)],
            "dims": self.dim,
            "multiplicity": self.multiplicity,
            "params": self.params.to_json(),
            "d4_element": self.d4,
            "identification": self.identification.to_json(),
            "spectraX": _spec_json(self.spectra["X"]),
            "spectraY": _spec_json(self.spectra["Y"]),
            "spectraZ": _spec_json(self.spectra["Z"]),
            "leonard": self.leonard,
        }


def _spec_json(spec):
    return [format_rational(x) for x in sorted(spec)]


@dataclass
class DecompositionReport:
    d: int
    base: int
    dim: int
    summands: list
    factor_decompositions: tuple

    @property
    def total_dim(self):
        return sum(s.dim * s.multiplicity for s in self.summands)

    @property
    def all_leonard(self):
        return all(s.leonard for s in self.summands)

    def x_spectrum(self):
        """Multiset union of the X eigenvalues over summands, as value -> count."""
        out = {}
        for s in self.summands:
            for lam in s.spectra["X"]:
                out[lam] = out.get(lam, 0) + s.multiplicity
        return dict(sorted(out.items()))

    def iso_classes(self):
        """Summed multiplicities per isomorphism class, keyed by identification text."""
        classes = {}
        for s in self.summands:
            key = str(s.params)
            dim, mult = classes.get(key, (s.dim, 0))
            classes[key] = (dim, mult + s.multiplicity)
        return classes

    def to_json(self):
        return {
            "d": self.d,
            "base": vertex_elements(self.base),
            "dim": self.dim,
            "factor_decompositions": [
                [[str(label), mult] for label, mult in part] for part in self.factor_decompositions
            ],
            "summands": [s.to_json() for s in self.summands],
        }


def decompose_standard_module(d, x0=None, allow_large=False):
    """Irreducible summands of the standard module with Leonard certificates.

    Every summand is checked against the graph matrices: its embedding
    must intertwine the abstract triple with the images of X, Y, Z, and
    all embeddings together must form a direct sum filling the space.
    """
    if d > DECOMPOSE_CAP and not allow_large:
        raise TooLarge(f"d={d} above {DECOMPOSE_CAP}; pass allow_large to try it")
    g = build_odd_graph(d)
    x0 = default_base(d) if x0 is None else as_vertex(d, x0)
    images = terwilliger_images(g, x0)
    tens = iota_factors(2 * d + 1, x0)
    left_parts = decompose(tens.left)
    right_parts = decompose(tens.right)
    cols, hits = _vertex_columns(g, x0)
    to_vertex = cols.transpose()
    summands = []
    all_embeddings = []
    for lp in left_parts:
        for rp in right_parts:
            mod = v1_of(lp.label, rp.label, identify=False)
            if mod.dim == 0:
                continue
            triple = mod.triple
            embeddings = []
            for f in lp.embeddings:
                for h in rp.embeddings:
                    emb = to_vertex @ (f.kron(h) @ mod.basis.basis)
                    for name, op, small in (("X", images.X, triple.X), ("Y", images.Y, triple.Y), ("Z", images.Z, triple.Z)):
                        if op @ emb != emb @ small:
                            raise DecompositionMismatch(f"{name} disagrees on summand {lp.label} (x) {rp.label}")
                    embeddings.append(emb)
            all_embeddings.extend(embeddings)
            params = identify_tensor(lp.label, rp.label)
            ident = identify_irreducible(triple)
            if not ident.matches(params):
                raise DecompositionMismatch(f"summand {lp.label} (x) {rp.label}: {ident} does not match {params}")
            verdict = leonard_check(triple)
            spectra = {v.name: dict(v.eigenvalues) for v in verdict.per_operator}
            for name in ("X", "Y", "Z"):
                if name not in spectra:
                    spectra[name] = spectrum(triple.operators()[name])
            spectra = {k: _expand(v) for k, v in spectra.items()}
            swapped = lp.label.n > rp.label.n
            signs = (rp.label.sign, lp.label.sign) if swapped else (lp.label.sign, rp.label.sign)
            summands.append(
                SummandReport(
                    left=lp.label,
                    right=rp.label,
                    dim=mod.dim,
                    multiplicity=len(embeddings),
                    params=params,
                    d4=d4_element(signs, swapped),
                    identification=ident,
                    spectra=spectra,
                    leonard=verdict.is_leonard,
                    triple=triple,
                    embeddings=embeddings,
                )
            )
    report = DecompositionReport(
        d=d,
        base=x0,
        dim=g.size,
        summands=sorted(summands, key=lambda s: (s.dim, str(s.params), str(s.left))),
        factor_decompositions=(
            tuple((p.label, len(p.embeddings)) for p in left_parts),
            tuple((p.label, len(p.embeddings)) for p in right_parts),
        ),
    )
    if report.total_dim != g.size:
        raise DecompositionMismatch(f"summand dimensions add to {report.total_dim}, expected {g.size}")
    if rank(Matrix.hstack(all_embeddings)) != g.size:
        raise DecompositionMismatch("summand embeddings are not independent")
    return report


def _expand(eigs):
    out = []
    for lam, mult in sorted(eigs.items()):
        out.extend([lam] * mult)
    return out


def adjacency_spectrum_matches(g, counts):
    """True iff A has exactly the eigenvalue multiplicities ``counts``.

    A is symmetric, hence diagonalizable, so it suffices that the
    eigenspace dimensions at the listed values equal the counts and the
    counts add up to the number of vertices.
    """
    if sum(counts.values()) != g.size:
        return False
    ident = Matrix.identity(g.size)
    return all(g.size - rank(g.A - ident * lam) == mult for lam, mult in counts.items())


def surjectivity_witness(report, g=None, x0=None):
    """Dimension of the algebra generated by the X and Y images vs. the sum of squared class dims."""
    g = g or build_odd_graph(report.d)
    images = terwilliger_images(g, report.base if x0 is None else x0)
    expected = sum(dim * dim for dim, _ in report.iso_classes().values())
    return algebra_dimension([images.X, images.Y]), expected


def ground_permutation_matrix(g, perm):
    """Vertex permutation matrix induced by a bijection of the ground set."""
    index = {x: i for i, x in enumerate(g.vertices)}
    n = g.size
    num = [[0] * n for _ in range(n)]
    for j, x in enumerate(g.vertices):
        y = 0
        for e in vertex_elements(x):
            y |= 1 << perm[e]
        num[index[y]][j] = 1
    return Matrix.from_integer_rows(num)


def base_independence(d, x0, x1):
    """Images at x1 equal the images at x0 conjugated by a ground bijection sending x0 to x1."""
    g = build_odd_graph(d)
    x0, x1 = as_vertex(d, x0), as_vertex(d, x1)
    src = vertex_elements(x0) + [e for e in range(2 * d + 1) if not x0 >> e & 1]
    dst = vertex_elements(x1) + [e for e in range(2 * d + 1) if not x1 >> e & 1]
    perm = dict(zip(src, dst))
    p = ground_permutation_matrix(g, perm)
    t0, t1 = terwilliger_images(g, x0), terwilliger_images(g, x1)
    pt = p.transpose()
    return all(p @ m0 @ pt == m1 for m0, m1 in ((t0.X, t1.X), (t0.Y, t1.Y), (t0.Z, t1.Z)))
