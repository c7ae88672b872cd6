"""The skew group ring of U(sl2) by Z/2Z as a rewriting system.

Elements are kept in the normal form ``E^i F^j H^k rho^h`` with rational
coefficients.  A word in the letters E, F, H, rho is normalized by
repeatedly rewriting its leftmost out-of-order adjacent pair:

    F E -> E F - H        H E -> E H + 2E        H F -> F H - 2F
    rho E -> F rho        rho F -> E rho         rho H -> -H rho
    rho rho -> 1

Termination: every rule strictly lowers, in lexicographic order,

    1. the number of Lie letters (E, F, H) in the word,
    2. the number of pairs (rho, Lie letter) with the rho on the left,
    3. the number of Lie inversions (F before E, H before E, H before F),
    4. the number of rho letters.

Swapping a Lie pair keeps (1) and (2) and lowers (3) by one; the lower
order terms drop a Lie letter.  Moving rho right past a Lie letter lowers
(2) by one even though the letter may change from E to F and create
inversions.  Cancelling rho rho keeps (1) and (3), never raises (2), and
lowers (4).  See ``termination_measure`` and ``rewrite_step``.
"""
import re
from collections import namedtuple
from fractions import Fraction
from functools import lru_cache

from .exactlinalg.rational import as_rational, format_rational, parse_rational

PBWMonomial = namedtuple("PBWMonomial", "i j k h")
PBWMonomial.__doc__ = "Exponents of E, F, H and rho (h in {0, 1})."

RHO = "R"
LIE = ("E", "F", "H")
_ORDER = {"E": 0, "F": 1, "H": 2, RHO: 3}

# (left, right) -> list of (coefficient, replacement letters)
_RULES = {
    ("F", "E"): ((1, "EF"), (-1, "H")),
    ("H", "E"): ((1, "EH"), (2, "E")),
    ("H", "F"): ((1, "FH"), (-2, "F")),
    (RHO, "E"): ((1, "F" + RHO),),
    (RHO, "F"): ((1, "E" + RHO),),
    (RHO, "H"): ((-1, "H" + RHO),),
    (RHO, RHO): ((1, ""),),
}


def _letters(mono):
    return "E" * mono.i + "F" * mono.j + "H" * mono.k + RHO * mono.h


def termination_measure(word):
    """Lexicographic measure that every rewrite step strictly decreases."""
    lie = sum(1 for x in word if x in LIE)
    rho_left = 0
    inversions = 0
    seen_rho = 0
    seen = {"F": 0, "H": 0}
    for x in word:
        if x == RHO:
            seen_rho += 1
            continue
        rho_left += seen_rho
        if x == "E":
            inversions += seen["F"] + seen["H"]
        elif x == "F":
            inversions += seen["H"]
        seen[x] = seen.get(x, 0) + 1
    return (lie, rho_left, inversions, word.count(RHO))


def rewrite_step(word):
    """Apply one rule at the leftmost reducible pair.

    Returns a list of ``(coefficient, word)``, or None if ``word`` is normal.
    """
    for pos in range(len(word) - 1):
        rule = _RULES.get((word[pos], word[pos + 1]))
        if rule is not None:
            head, tail = word[:pos], word[pos + 2:]
            return [(c, head + rep + tail) for c, rep in rule]
    return None


def _as_monomial(word):
    counts = {x: word.count(x) for x in _ORDER}
    return PBWMonomial(counts["E"], counts["F"], counts["H"], counts[RHO])


@lru_cache(maxsize=None)
def _normal_word(word):
    """Normal form of a word as a tuple of (monomial, coefficient)."""
    step = rewrite_step(word)
    if step is None:
        return ((_as_monomial(word), Fraction(1)),)
    acc = {}
    for coeff, w in step:
        for mono, c in _normal_word(w):
            acc[mono] = acc.get(mono, 0) + coeff * c
    return tuple((m, c) for m, c in acc.items() if c)


class RingElement:
    """Immutable element, stored as a map from PBWMonomial to nonzero Fraction."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        for mono, c in (terms or {}).items():
            c = as_rational(c)
            if c:
                clean[PBWMonomial(*mono)] = c
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def scalar(cls, c):
        return cls({PBWMonomial(0, 0, 0, 0): c})

    @classmethod
    def monomial(cls, i=0, j=0, k=0, h=0, coeff=1):
        if h not in (0, 1):
            raise ValueError("rho exponent must be 0 or 1 in normal form")
        return cls({PBWMonomial(i, j, k, h): coeff})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self):
        return not self._terms

    def degree(self):
        return max((m.i + m.j + m.k for m in self._terms), default=0)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, 0) + c
        return RingElement(acc)

    __radd__ = __add__

    def __neg__(self):
        return RingElement({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RingElement):
            return multiply(self, other)
        s = as_rational(other)
        return RingElement({m: c * s for m, c in self._terms.items()})

    def __rmul__(self, other):
        s = as_rational(other)
        return RingElement({m: s * c for m, c in self._terms.items()})

    def __pow__(self, k):
        result = ONE
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"RingElement({format_element(self)!r})"


def _coerce(x):
    if isinstance(x, RingElement):
        return x
    if isinstance(x, (int, Fraction)):
        return RingElement.scalar(x)
    return None


ONE = RingElement.scalar(1)
ZERO = RingElement()
E = RingElement.monomial(i=1)
F = RingElement.monomial(j=1)
H = RingElement.monomial(k=1)
RHO_ELT = RingElement.monomial(h=1)
GENERATORS = {"E": E, "F": F, "H": H, "rho": RHO_ELT}


def normal_form(word):
    """Normal form of a word given as letters (``"rho"`` or ``"R"`` for rho)."""
    letters = "".join(RHO if x in ("rho", RHO) else x for x in word)
    if any(x not in _ORDER for x in letters):
        raise ValueError(f"unknown letter in {word!r}")
    return RingElement(dict(_normal_word(letters)))


@lru_cache(maxsize=None)
def _monomial_product(m1, m2):
    return _normal_word(_letters(m1) + _letters(m2))


def multiply(x, y):
    acc = {}
    for m1, c1 in x.items():
        for m2, c2 in y.items():
            for m, c in _monomial_product(m1, m2):
                acc[m] = acc.get(m, 0) + c1 * c2 * c
    return RingElement(acc)


def counit(x):
    """Counit: kills Lie letters, sends rho to 1."""
    return sum((c for m, c in x.items() if m.i == m.j == m.k == 0), Fraction(0))


def antipode(x):
    acc = {}
    for m, c in x.items():
        sign = -1 if (m.i + m.j + m.k) % 2 else 1
        reversed_word = RHO * m.h + "H" * m.k + "F" * m.j + "E" * m.i
        for mono, c2 in _normal_word(reversed_word):
            acc[mono] = acc.get(mono, 0) + sign * c * c2
    return RingElement(acc)


def casimir():
    """Casimir element ``EF + FE + H^2/2`` in normal form."""
    return E * F + F * E + Fraction(1, 2) * H * H


# -- tensors -------------------------------------------------------------


class TensorElement:
    """Element of a tensor power of the ring.

    Keys are tuples of PBWMonomials (all of one arity); values are nonzero
    Fractions.
    """

    __slots__ = ("_terms", "arity")

    def __init__(self, terms, arity=None):
        clean = {}
        for key, c in terms.items():
            c = as_rational(c)
            if c:
                key = tuple(PBWMonomial(*m) for m in key)
                clean[key] = clean.get(key, 0) + c
        self._terms = dict(sorted((k, v) for k, v in clean.items() if v))
        if arity is None:
            arity = len(next(iter(self._terms))) if self._terms else 0
        if any(len(k) != arity for k in self._terms):
            raise ValueError("mixed tensor arity")
        self.arity = arity

    @classmethod
    def from_ring(cls, x):
        return cls({(m,): c for m, c in x.items()}, 1)

    @classmethod
    def scalar(cls, c):
        return cls({(): c}, 0)

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __add__(self, other):
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return TensorElement(acc, self.arity)

    def __neg__(self):
        return TensorElement({k: -c for k, c in self._terms.items()}, self.arity)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return tensor_multiply(self, other)
        s = as_rational(other)
        return TensorElement({k: c * s for k, c in self._terms.items()}, self.arity)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.arity == other.arity and self._terms == other._terms

    def __hash__(self):
        return hash((self.arity, tuple(self._terms.items())))

    def factor(self, pos, fn):
        """Replace tensor factor ``pos`` by ``fn(RingElement) -> TensorElement``."""
        out = {}
        for key, c in self._terms.items():
            image = fn(RingElement({key[pos]: 1}))
            for sub, c2 in image.items():
                new = key[:pos] + sub + key[pos + 1:]
                out[new] = out.get(new, 0) + c * c2
        return TensorElement(out, self.arity - 1 + _image_arity(fn))

    def contract(self):
        """Multiply all factors together in order (the ring multiplication)."""
        acc = ZERO
        for key, c in self._terms.items():
            prod = ONE
            for m in key:
                prod = multiply(prod, RingElement({m: 1}))
            acc = acc + c * prod
        return acc

    def __repr__(self):
        parts = []
        for key, c in self._terms.items():
            body = " (x) ".join(format_element(RingElement({m: 1})) for m in key)
            parts.append(f"{format_rational(c)}*[{body}]")
        return "TensorElement(" + " + ".join(parts) + ")"


def _image_arity(fn):
    return fn(ONE).arity


def tensor(*parts):
    """Tensor product of RingElements and TensorElements."""
    acc = TensorElement.scalar(1)
    for p in parts:
        if isinstance(p, RingElement):
            p = TensorElement.from_ring(p)
        out = {}
        for k1, c1 in acc.items():
            for k2, c2 in p.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        acc = TensorElement(out, acc.arity + p.arity)
    return acc


def tensor_multiply(s, t):
    if s.arity != t.arity:
        raise ValueError("tensor arity mismatch")
    out = {}
    for k1, c1 in s.items():
        for k2, c2 in t.items():
            factors = [_monomial_product(a, b) for a, b in zip(k1, k2)]
            partial = {(): c1 * c2}
            for f in factors:
                nxt = {}
                for key, c in partial.items():
                    for m, cm in f:
                        nxt[key + (m,)] = nxt.get(key + (m,), 0) + c * cm
                partial = nxt
            for key, c in partial.items():
                out[key] = out.get(key, 0) + c
    return TensorElement(out, s.arity)


_ONE_M = PBWMonomial(0, 0, 0, 0)


def _delta_generator(letter):
    m = {"E": PBWMonomial(1, 0, 0, 0), "F": PBWMonomial(0, 1, 0, 0), "H": PBWMonomial(0, 0, 1, 0)}
    if letter == RHO:
        r = PBWMonomial(0, 0, 0, 1)
        return TensorElement({(r, r): 1}, 2)
    g = m[letter]
    return TensorElement({(g, _ONE_M): 1, (_ONE_M, g): 1}, 2)


@lru_cache(maxsize=None)
def _delta_monomial(mono):
    acc = TensorElement({(_ONE_M, _ONE_M): 1}, 2)
    for letter in _letters(mono):
        acc = tensor_multiply(acc, _delta_generator(letter))
    return acc


def comultiply(x):
    """Coproduct: Lie generators are primitive, rho is grouplike."""
    out = {}
    for m, c in x.items():
        for key, c2 in _delta_monomial(m).items():
            out[key] = out.get(key, 0) + c * c2
    return TensorElement(out, 2)


# -- text form -----------------------------------------------------------


def _format_monomial(m):
    parts = []
    for name, e in (("E", m.i), ("F", m.j), ("H", m.k), ("rho", m.h)):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return " ".join(parts)


def format_element(x):
    """Canonical text, e.g. ``-H + 1/2 H^2 + 2 E F``; terms sorted by exponents."""
    if x.is_zero():
        return "0"
    out = []
    for m, c in x.items():
        body = _format_monomial(m)
        mag = abs(c)
        if not body:
            text = format_rational(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{format_rational(mag)} {body}"
        if not out:
            out.append(("-" if c < 0 else "") + text)
        else:
            out.append(("- " if c < 0 else "+ ") + text)
    return " ".join(out)


_TOKEN_RE = re.compile(r"\s*(?:(\d+(?:/\d+)?)|(rho|E|F|H)|(\^)|([-+*()]))")


def _tokenize(text):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ValueError(f"unexpected input at {text[pos:]!r}")
        num, gen, caret, op = m.groups()
        if num is not None:
            tokens.append(("num", num))
        elif gen is not None:
            tokens.append(("gen", gen))
        elif caret is not None:
            tokens.append(("op", "^"))
        else:
            tokens.append(("op", op))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expr(self):
        value = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while True:
            kind, tok = self.peek()
            if (kind, tok) == ("op", "*"):
                self.take()
                value = value * self.unary()
            elif kind in ("num", "gen") or (kind, tok) == ("op", "("):
                value = value * self.unary()
            else:
                return value

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, tok = self.take()
            if kind != "num" or "/" in tok:
                raise ValueError("exponent must be a nonnegative integer")
            base = base ** int(tok)
        return base

    def atom(self):
        kind, tok = self.take()
        if kind == "num":
            return RingElement.scalar(parse_rational(tok))
        if kind == "gen":
            return GENERATORS[tok]
        if (kind, tok) == ("op", "("):
            value = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError("missing ')'")
            return value
        raise ValueError(f"unexpected token {tok!r}")


def parse_element(text):
    """Parse words like ``rho*E*rho``, ``2 E F - H`` or ``(E+F)^2``."""
    tokens = _tokenize(text)
    if not tokens:
        raise ValueError("empty expression")
    p = _Parser(tokens)
    value = p.expr()
    if p.pos != len(tokens):
        raise ValueError(f"trailing input near token {p.pos}")
    return value
