"""The acceptance battery: twelve exact checks with configurable caps.

Each criterion returns a ``CriterionResult``; a failed result names the
first identity that broke.  ``run_suite`` is shared by the CLI and the
test suite.
"""
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from . import bannaiito as bi
from . import oddgraph as og
from . import sl2modules as sm
from . import skewring as sr
from . import v1functor as v1
from .errors import DecompositionMismatch, SignMismatch
from .exactlinalg import Matrix, charpoly, rank, rational_roots

LETTERS = ("E", "F", "H", "R")
SIGN_PAIRS = ((1, 1), (1, -1), (-1, 1), (-1, -1))


@dataclass
class SuiteConfig:
    seed: int = 20240601
    words: int = 500
    hopf_words: int = 100
    max_degree: int = 6
    rep_max_n: int = 6
    irreducible_max_n: int = 20
    powerset_max: int = 8
    recurrence_max: int = 12
    cg_max: int = 8
    v1_max: int = 7
    grid_n_max: int = 6
    grid_values: tuple = tuple(Fraction(k, 2) for k in range(-6, 7))
    cap_d: int = 4


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    checks: int
    failure: str = ""

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        tail = f" ({self.checks} checks)" if self.passed else f": {self.failure}"
        return f"[{status}] criterion {self.number:2d} {self.title}{tail}"

    def to_json(self):
        return {"criterion": self.number, "title": self.title, "passed": self.passed, "checks": self.checks, "failure": self.failure}


class _Failed(Exception):
    pass


@dataclass
class Tally:
    count: int = 0
    triples: list = field(default_factory=list)

    def check(self, ok, what):
        self.count += 1
        if not ok:
            raise _Failed(what)


def random_word(rng, max_degree):
    return "".join(rng.choice(LETTERS) for _ in range(rng.randint(1, max_degree)))


def _word_matrix(rep, word):
    out = Matrix.identity(rep.dim)
    for x in word:
        out = out @ rep.generator("rho" if x == "R" else x)
    return out


# -- criteria ---------------------------------------------------------------


def crit_pbw(cfg, t):
    rng = random.Random(cfg.seed)
    reps = [sm.build_irreducible((n, s)) for n in range(cfg.rep_max_n + 1) for s in (1, -1)]
    for _ in range(cfg.words):
        w = random_word(rng, cfg.max_degree)
        nf = sr.normal_form(w)
        i, j = sorted(rng.randint(0, len(w)) for _ in range(2))
        a, b, c = (sr.normal_form(p) for p in (w[:i], w[i:j], w[j:]))
        t.check((a * b) * c == a * (b * c), f"associativity on split of {w}")
        t.check((a * b) * c == nf, f"split product equals normal form of {w}")
        for rep in reps:
            t.check(sm.act(rep, nf) == _word_matrix(rep, w), f"matrix oracle for word {w} on dim {rep.dim}")


def _hopf_checks(x, t, label):
    delta = sr.comultiply(x)
    t.check(delta.factor(0, sr.comultiply) == delta.factor(1, sr.comultiply), f"coassociativity on {label}")
    to_scalar = lambda r: sr.TensorElement.scalar(sr.counit(r))  # noqa: E731
    to_ring = lambda r: sr.TensorElement.from_ring(sr.antipode(r))  # noqa: E731
    t.check(delta.factor(1, to_scalar).contract() == x, f"right counit law on {label}")
    t.check(delta.factor(0, to_scalar).contract() == x, f"left counit law on {label}")
    unit = sr.RingElement.scalar(sr.counit(x))
    t.check(delta.factor(1, to_ring).contract() == unit, f"antipode law m(1 S)D on {label}")
    t.check(delta.factor(0, to_ring).contract() == unit, f"antipode law m(S 1)D on {label}")


def crit_hopf(cfg, t):
    rng = random.Random(cfg.seed + 1)
    for name, g in sr.GENERATORS.items():
        _hopf_checks(g, t, name)
    words = [random_word(rng, cfg.max_degree) for _ in range(cfg.hopf_words)]
    for w in words:
        _hopf_checks(sr.normal_form(w), t, w)
    for w1, w2 in zip(words, words[1:]):
        a, b = sr.normal_form(w1), sr.normal_form(w2)
        t.check(sr.comultiply(a * b) == sr.comultiply(a) * sr.comultiply(b), f"coproduct multiplicative on {w1},{w2}")


def crit_relations(cfg, t):
    cas = sr.casimir()
    for n in range(cfg.irreducible_max_n + 1):
        for s in (1, -1):
            rep = sm.build_irreducible((n, s))
            for rel, ok in sm.verify_defining_relations(rep).items():
                t.check(ok, f"{rel} on {sm.IrrLabel(n, s)}")
            t.check(sm.act(rep, cas) == Matrix.scalar(n + 1, Fraction(n * (n + 2), 2)), f"Casimir scalar on {sm.IrrLabel(n, s)}")
    for size in range(cfg.powerset_max + 1):
        for rel, ok in sm.verify_defining_relations(sm.powerset_rep(size)).items():
            t.check(ok, f"{rel} on power set of size {size}")


def crit_cg(cfg, t):
    for m in range(cfg.cg_max + 1):
        for n in range(m, cfg.cg_max + 1):
            lm = {s: sm.build_irreducible((m, s)) for s in (1, -1)}
            ln = {s: sm.build_irreducible((n, s)) for s in (1, -1)}
            for d, e in SIGN_PAIRS:
                tag = f"L_{m}^{d:+d} (x) L_{n}^{e:+d}"
                try:
                    pieces = sm.cg_pieces((m, d), (n, e))
                except SignMismatch as exc:
                    raise _Failed(f"{tag}: {exc}") from None
                expected = [sm.IrrLabel(m + n - 2 * p, (-1) ** p * d * e) for p in range(m + 1)]
                t.check([pc.label for pc in pieces] == expected, f"labels of {tag}")
                t.check(sum(pc.label.dim for pc in pieces) == (m + 1) * (n + 1), f"dimension count of {tag}")
                t.check(rank(Matrix.hstack([pc.embedding for pc in pieces])) == (m + 1) * (n + 1), f"joint rank of {tag}")
                target = sm.tensor_rep(lm[d], ln[e]).as_representation()
                for pc in pieces:
                    src = sm.build_irreducible(pc.label)
                    t.check(sm.intertwines(pc.embedding, src, target), f"embedding p={pc.p} of {tag} intertwines")


def crit_powerset(cfg, t):
    for size in range(cfg.powerset_max + 1):
        computed = sm.multiplicities(sm.powerset_rep(size))
        t.check(computed == sm.powerset_decompose(size), f"isotypic multiplicities for |Omega|={size}")
    for size in range(cfg.recurrence_max + 1):
        t.check(sm.powerset_multiplicity(size, 0) == 1, f"m_0({size}) = 1")
        for i in range(1, size):
            lhs = sm.powerset_multiplicity(size - 1, i - 1) + sm.powerset_multiplicity(size - 1, i)
            t.check(lhs == sm.powerset_multiplicity(size, i), f"recurrence at D={size}, i={i}")


def _v1_cases(cfg):
    for m in range(cfg.v1_max + 1):
        for n in range(m, cfg.v1_max + 1):
            for signs in SIGN_PAIRS:
                for swapped in (False, True):
                    yield m, n, signs, swapped


def _v1_module(m, n, signs, swapped):
    left, right = (m, signs[0]), (n, signs[1])
    if swapped:
        left, right = right, left
    return left, right, v1.v1_of(left, right)


def crit_v1_relations(cfg, t):
    for m, n, signs, swapped in _v1_cases(cfg):
        if (m + n) % 2 == 0:
            continue
        left, right, mod = _v1_module(m, n, signs, swapped)
        tag = f"V(1) of L_{left[0]}^{left[1]:+d} (x) L_{right[0]}^{right[1]:+d}"
        tr = mod.triple
        t.triples.append(tr)
        kappa, lam, mu = bi.central_elements(tr)
        t.check(kappa.is_zero(), f"{{X,Y}}=Z on {tag}")
        t.check(lam.is_zero(), f"{{Y,Z}}=X on {tag}")
        t.check(mu.scalar_value() == v1.expected_mu(left[0], right[0]), f"mu scalar on {tag}")
        t.check(bi.bi_casimir(tr).scalar_value() == v1.expected_casimir(m, n), f"Casimir scalar on {tag}")
        for name, ok in mod.basis.ladder.items():
            t.check(ok, f"ladder '{name}' on {tag}")


def crit_v1_irreducible(cfg, t):
    for m, n, signs, swapped in _v1_cases(cfg):
        left, right, mod = _v1_module(m, n, signs, swapped)
        tag = f"V(1) of L_{left[0]}^{left[1]:+d} (x) L_{right[0]}^{right[1]:+d}"
        t.check((mod.dim != 0) == ((m + n) % 2 == 1), f"V(1) nonzero iff m+n odd, {tag}")
        if mod.dim == 0:
            continue
        t.check(mod.dim == m + 1, f"dim V(1) = min+1 on {tag}")
        t.check(bi.is_irreducible_matrix(mod.triple), f"Burnside rank on {tag}")
        t.check(bi.leonard_check(mod.triple).is_leonard, f"Leonard triple on {tag}")
        t.check(mod.identification is not None and mod.identification.matches(v1.identify_v1(m, n, signs, swapped)), f"identification of {tag}")


def crit_closed_forms(cfg, t):
    for m in range(cfg.v1_max + 1):
        for n in range(m, cfg.v1_max + 1):
            if (m + n) % 2 == 0:
                continue
            for name, ok in v1.check_explicit_basis(m, n).items():
                t.check(ok, f"closed-form {name} action for (m,n)=({m},{n})")
            mod = v1.v1_of((m, 1), (n, 1))
            trace_x = Fraction(n + 1, 2) if m % 2 == 0 else Fraction(m + 1, 2)
            t.check(mod.triple.X.trace() == trace_x, f"trace of X for (m,n)=({m},{n})")
            t.check(mod.triple.Y.trace() == Fraction(-(m + 1), 2), f"trace of Y for (m,n)=({m},{n})")
            t.check(mod.identification.matches(v1.base_identification(m, n)), f"base identification for (m,n)=({m},{n})")


def _grid(cfg):
    return bi.parameter_grid(cfg.grid_values, cfg.grid_n_max)


def crit_leonard_grid(cfg, t):
    for p in _grid(cfg):
        if not bi.is_irreducible_params(p):
            continue
        tr = bi.build_bi_module(p)
        t.triples.append(tr)
        t.check(bi.leonard_check(tr).is_leonard == bi.leonard_predict(p), f"Leonard prediction for {p}")


def crit_oddgraph(cfg, t):
    for d in range(1, cfg.cap_d + 1):
        g = og.build_odd_graph(d)
        x0 = og.default_base(d)
        images = og.terwilliger_images(g, x0)
        t.triples.append(images)
        for name, ok in og.verify_homomorphism(images).items():
            t.check(ok, f"{name} at d={d}")
        for name, ok in og.match_with_v1(d, x0).items():
            t.check(ok, f"V(1) match '{name}' at d={d}")
        try:
            report = og.decompose_standard_module(d, x0)
        except DecompositionMismatch as exc:
            raise _Failed(f"decomposition at d={d}: {exc}") from None
        t.check(report.total_dim == comb(2 * d + 1, d), f"summand dimensions at d={d}")
        for s in report.summands:
            t.triples.append(s.triple)
            t.check(s.leonard, f"Leonard certificate for summand {s.params} at d={d}")
        t.check(og.adjacency_spectrum_matches(g, report.x_spectrum()), f"X spectra partition the spectrum of A at d={d}")
        algebra_dim, expected = og.surjectivity_witness(report, g)
        t.check(algebra_dim == expected, f"algebra generated by the images has dimension {expected} at d={d}")
        if d == 2:
            roots, leftover = rational_roots(charpoly(g.A))
            petersen = {Fraction(3): 1, Fraction(1): 5, Fraction(-2): 4}
            t.check(leftover == 0 and roots == petersen, "Petersen spectrum from characteristic polynomial")
            t.check(report.x_spectrum() == petersen, "summand X spectra at d=2 equal the Petersen spectrum")


def crit_traces(cfg, t):
    for p in _grid(cfg):
        tr = bi.build_bi_module(p)
        traces = (tr.X.trace(), tr.Y.trace(), tr.Z.trace())
        if p.parity == bi.ODD:
            t.check(traces == p.abc, f"traces equal (a,b,c) on {p}")
        else:
            s = Fraction(-(p.n + 1), 2)
            t.check(traces == (s, s, s), f"traces equal -(n+1)/2 on {p}")
        if not bi.is_irreducible_params(p):
            continue
        for g in bi.SIGN_TWISTS:
            q = bi.BIModuleParams(p.parity, p.n, p.a, p.b, p.c, g)
            ident = bi.identify_irreducible(bi.build_bi_module(q))
            t.check(ident.matches(q), f"identification round trip for {q}")
        if p.parity == bi.ODD:
            rotated = bi.BIModuleParams(bi.ODD, p.n, p.c, p.a, p.b)
            ident = bi.identify_irreducible(bi.twist(bi.build_bi_module(rotated), 1))
            t.check(ident.matches(p), f"cyclic twist coherence for {p}")


def crit_cubic(cfg, t):
    triples = list(t.triples)
    if not triples:
        triples = [bi.build_bi_module(p) for p in _grid(cfg)]
    for k, tr in enumerate(triples):
        for name, ok in bi.cubic_identities(tr).items():
            t.check(ok, f"{name} on triple #{k} (dim {tr.dim})")


CRITERIA = (
    (1, "PBW normal form and matrix oracle", crit_pbw),
    (2, "Hopf laws", crit_hopf),
    (3, "module relations and Casimir scalars", crit_relations),
    (4, "Clebsch-Gordan labels with signs", crit_cg),
    (5, "power-set multiplicities and recurrence", crit_powerset),
    (6, "V(1) relations and central values", crit_v1_relations),
    (7, "V(1) irreducible Leonard triples", crit_v1_irreducible),
    (8, "closed-form basis and base identifications", crit_closed_forms),
    (9, "Leonard predictor equals checker on grid", crit_leonard_grid),
    (10, "odd graphs", crit_oddgraph),
    (11, "traces and identification round trips", crit_traces),
    (12, "cubic identities on every triple", crit_cubic),
)


def run_criterion(number, cfg=None, tally=None):
    cfg = cfg or SuiteConfig()
    tally = tally if tally is not None else Tally()
    _, title, fn = next(c for c in CRITERIA if c[0] == number)
    start = tally.count
    try:
        fn(cfg, tally)
    except _Failed as exc:
        return CriterionResult(number, title, False, tally.count - start, str(exc))
    return CriterionResult(number, title, True, tally.count - start)


def run_suite(cfg=None, only=None, report=None):
    """Run the battery in order; ``report`` is called with each result as it lands."""
    cfg = cfg or SuiteConfig()
    tally = Tally()
    results = []
    for number, _, _ in CRITERIA:
        if only and number not in only:
            continue
        res = run_criterion(number, cfg, tally)
        results.append(res)
        if report:
            report(res)
    return results
