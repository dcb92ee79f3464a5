"""Wedge-basis model and the Clifford algebra acting on it.

The underlying space has basis b_I over subsets I of {1..n}.  create(k)
wedges b_k on the left, annihilate(k) contracts against it; both carry the
usual alternating phase (-1)**(number of smaller indices present).

CliffordElement is the full 4**n-dimensional algebra in normal-ordered
form: words with all creators left of all annihilators, each block in
ascending index order.  Multiplication rewrites concatenated words with
the relations a_i b_j = delta_ij - b_j a_i, a_i a_j = -a_j a_i,
b_i b_j = -b_j b_i, a_i a_i = b_i b_i = 0.

phi / phi_inverse translate between this model and the shape model of
`spinrep` by the subset bookkeeping of `diagram.fock_index`.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .diagram import (
    Sign,
    fock_index,
    fock_index_inverse,
    format_fock_index,
    parse_fock_index,
)
from .quiver import RankContext
from .spinrep import SpinVector


class FockVector:
    """Finite rational combination of wedge basis vectors b_I."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for idx, coeff in items:
                idx = frozenset(idx)
                coeff = Fraction(coeff)
                if idx in data:
                    data[idx] += coeff
                else:
                    data[idx] = coeff
        self.terms = {i: c for i, c in data.items() if c != 0}

    @classmethod
    def from_index(cls, idx, coeff=1):
        return cls({frozenset(idx): Fraction(coeff)})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, FockVector) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for i, c in other.terms.items():
            out[i] = out.get(i, Fraction(0)) + c
        return FockVector(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return FockVector({i: -c for i, c in self.terms.items()})

    def scale(self, scalar):
        scalar = Fraction(scalar)
        return FockVector({i: scalar * c for i, c in self.terms.items()})

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def __repr__(self):
        return "FockVector(%s)" % format_fock_vector(self)


def _check_mode(k, ctx):
    if not 1 <= k <= ctx.n:
        raise ValueError("mode %r out of range 1..%d" % (k, ctx.n))


def create(k: int, vec: FockVector, ctx: RankContext) -> FockVector:
    """Left wedge by b_k: zero on terms already containing k."""
    _check_mode(k, ctx)
    out = {}
    for idx, coeff in vec.terms.items():
        if k in idx:
            continue
        phase = (-1) ** sum(1 for i in idx if i < k)
        key = idx | {k}
        out[key] = out.get(key, Fraction(0)) + coeff * phase
    return FockVector(out)


def annihilate(k: int, vec: FockVector, ctx: RankContext) -> FockVector:
    """Contraction against b_k: zero on terms not containing k."""
    _check_mode(k, ctx)
    out = {}
    for idx, coeff in vec.terms.items():
        if k not in idx:
            continue
        phase = (-1) ** sum(1 for i in idx if i < k)
        key = idx - {k}
        out[key] = out.get(key, Fraction(0)) + coeff * phase
    return FockVector(out)


# ---------------------------------------------------------------------------
# the algebra


def _first_disorder(word):
    for i in range(len(word) - 1):
        (t1, i1), (t2, i2) = word[i], word[i + 1]
        if t1 == "a" and t2 == "b":
            return i
        if t1 == t2 and i1 >= i2:
            return i
    return None


def _normal_order_word(word):
    """Rewrite a letter list to normal order; returns {(S, T): coeff}."""
    out = {}
    stack = [(Fraction(1), list(word))]
    while stack:
        coeff, w = stack.pop()
        i = _first_disorder(w)
        if i is None:
            key = (
                tuple(idx for t, idx in w if t == "b"),
                tuple(idx for t, idx in w if t == "a"),
            )
            out[key] = out.get(key, Fraction(0)) + coeff
            continue
        (t1, i1), (t2, i2) = w[i], w[i + 1]
        if t1 == "a" and t2 == "b":
            if i1 == i2:
                stack.append((coeff, w[:i] + w[i + 2:]))
            stack.append((-coeff, w[:i] + [w[i + 1], w[i]] + w[i + 2:]))
        elif i1 == i2:
            continue  # isotropic generator squares to zero
        else:
            stack.append((-coeff, w[:i] + [w[i + 1], w[i]] + w[i + 2:]))
    return {k: v for k, v in out.items() if v != 0}


class CliffordElement:
    """Exact rational combination of normal-ordered monomials (S, T)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for (creators, annihilators), coeff in items:
                key = (tuple(creators), tuple(annihilators))
                for block in key:
                    if list(block) != sorted(set(block)):
                        raise ValueError("monomial blocks must be strictly increasing, got %r" % (key,))
                    for i in block:
                        if i < 1:
                            raise ValueError("generator index must be positive, got %r" % (i,))
                coeff = Fraction(coeff)
                if key in data:
                    data[key] += coeff
                else:
                    data[key] = coeff
        self.terms = {k: c for k, c in data.items() if c != 0}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def identity(cls):
        return cls({((), ()): Fraction(1)})

    @classmethod
    def monomial(cls, creators, annihilators, coeff=1):
        return cls({(tuple(sorted(creators)), tuple(sorted(annihilators))): Fraction(coeff)})

    @classmethod
    def creator(cls, k):
        return cls.monomial((k,), ())

    @classmethod
    def annihilator(cls, k):
        return cls.monomial((), (k,))

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, CliffordElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return CliffordElement(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return CliffordElement({k: -c for k, c in self.terms.items()})

    def scale(self, scalar):
        scalar = Fraction(scalar)
        return CliffordElement({k: scalar * c for k, c in self.terms.items()})

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out = {}
        for (s1, t1), c1 in self.terms.items():
            for (s2, t2), c2 in other.terms.items():
                word = (
                    [("b", i) for i in s1]
                    + [("a", i) for i in t1]
                    + [("b", i) for i in s2]
                    + [("a", i) for i in t2]
                )
                for key, c in _normal_order_word(word).items():
                    out[key] = out.get(key, Fraction(0)) + c1 * c2 * c
        return CliffordElement(out)

    def max_index(self):
        top = 0
        for s, t in self.terms:
            for i in s:
                top = max(top, i)
            for i in t:
                top = max(top, i)
        return top

    def __repr__(self):
        return "CliffordElement(%s)" % format_clifford_element(self)


def clifford_multiply(x: CliffordElement, y: CliffordElement, ctx=None) -> CliffordElement:
    if ctx is not None:
        for e in (x, y):
            if e.max_index() > ctx.n:
                raise ValueError(
                    "generator index %d exceeds rank %d" % (e.max_index(), ctx.n)
                )
    return x * y


def act(x: CliffordElement, vec: FockVector, ctx: RankContext) -> FockVector:
    """Apply x to vec: per monomial, annihilators first, right to left."""
    total = FockVector()
    for (creators, annihilators), coeff in x.terms.items():
        w = vec
        for t in sorted(annihilators, reverse=True):
            w = annihilate(t, w, ctx)
            if w.is_zero():
                break
        if w.is_zero():
            continue
        for s in sorted(creators, reverse=True):
            w = create(s, w, ctx)
            if w.is_zero():
                break
        if not w.is_zero():
            total = total + w.scale(coeff)
    return total


def embed_generator(kind: str, k: int, ctx: RankContext) -> CliffordElement:
    """Chevalley generators as quadratic algebra elements.

    E_k -> b_{k+1} a_k and F_k -> b_k a_{k+1} for k <= n-1; at the fork,
    E_n -> a_n a_{n-1} and F_n -> b_{n-1} b_n.  H_k is the commutator of
    the corresponding E and F, computed in the algebra.
    """
    n = ctx.n
    if not 1 <= k <= n:
        raise ValueError("index %r out of range 1..%d" % (k, n))
    if kind == "E":
        if k <= n - 1:
            return CliffordElement.monomial((k + 1,), (k,))
        return CliffordElement.annihilator(n) * CliffordElement.annihilator(n - 1)
    if kind == "F":
        if k <= n - 1:
            return CliffordElement.monomial((k,), (k + 1,))
        return CliffordElement.creator(n - 1) * CliffordElement.creator(n)
    if kind == "H":
        e = embed_generator("E", k, ctx)
        f = embed_generator("F", k, ctx)
        return e * f - f * e
    raise ValueError("unknown generator kind %r" % kind)


def fock_weight(idx, ctx: RankContext) -> tuple:
    """Weight of b_I: +1/2 at coordinates outside I, -1/2 inside."""
    n = ctx.n
    idx = frozenset(idx)
    for i in idx:
        if not 1 <= i <= n:
            raise ValueError("index %r out of range 1..%d" % (i, n))
    half = Fraction(1, 2)
    return tuple(-half if i in idx else half for i in range(1, n + 1))


# ---------------------------------------------------------------------------
# the dictionary between the two models


def phi_state(state, ctx: RankContext) -> frozenset:
    sign, rows = state
    return fock_index(rows, sign, ctx.n)


def phi(vec: SpinVector, ctx: RankContext) -> FockVector:
    """Basis-to-basis identification of the shape model with the wedge model."""
    return FockVector(
        {phi_state(state, ctx): coeff for state, coeff in vec.terms.items()}
    )


def phi_inverse(vec: FockVector, ctx: RankContext) -> SpinVector:
    out = {}
    for idx, coeff in vec.terms.items():
        rows, sign = fock_index_inverse(idx, ctx.n)
        out[(sign, rows)] = coeff
    return SpinVector(out)


# ---------------------------------------------------------------------------
# text forms


def _fock_sort_key(idx):
    return (len(idx), tuple(sorted(idx)))


def _joined_terms(chunks):
    return "".join(chunks) if chunks else "0"


def _term_text(coeff, body, first):
    sgn = "-" if coeff < 0 else "+"
    mag = abs(coeff)
    if body:
        shown = body if mag == 1 else "%s * %s" % (mag, body)
    else:
        shown = str(mag)
    if first:
        return ("-" if coeff < 0 else "") + shown
    return " %s %s" % (sgn, shown)


def format_fock_vector(vec: FockVector) -> str:
    chunks = []
    for idx in sorted(vec.terms, key=_fock_sort_key):
        chunks.append(_term_text(vec.terms[idx], format_fock_index(idx), not chunks))
    return _joined_terms(chunks)


_FOCK_TOKEN = re.compile(r"\s*(\{[^{}]*\}|\d+(?:/\d+)?|[+\-*])")


def parse_fock_vector(text: str, ctx=None) -> FockVector:
    stripped = text.strip()
    if stripped == "0":
        return FockVector()
    tokens = []
    pos = 0
    while pos < len(stripped):
        m = _FOCK_TOKEN.match(stripped, pos)
        if m is None:
            raise ValueError("cannot tokenize %r at position %d" % (text, pos))
        tokens.append(m.group(1))
        pos = m.end()
    terms = []
    i = 0
    first = True
    while i < len(tokens):
        sgn = Fraction(1)
        if tokens[i] in ("+", "-"):
            if tokens[i] == "-":
                sgn = -sgn
            i += 1
        elif not first:
            raise ValueError("expected + or - in %r" % text)
        first = False
        coeff = Fraction(1)
        if i < len(tokens) and not tokens[i].startswith("{") and tokens[i] not in ("+", "-", "*"):
            coeff = Fraction(tokens[i])
            i += 1
            if i < len(tokens) and tokens[i] == "*":
                i += 1
        if i >= len(tokens) or not tokens[i].startswith("{"):
            raise ValueError("expected index set in %r" % text)
        idx = parse_fock_index(tokens[i], ctx.n if ctx is not None else None)
        terms.append((idx, sgn * coeff))
        i += 1
    return FockVector(terms)


def _monomial_word(creators, annihilators):
    letters = ["b%d" % i for i in creators] + ["a%d" % i for i in annihilators]
    return " ".join(letters)


def _monomial_sort_key(key):
    creators, annihilators = key
    return (len(creators) + len(annihilators), creators, annihilators)


def format_clifford_element(x: CliffordElement) -> str:
    chunks = []
    for key in sorted(x.terms, key=_monomial_sort_key):
        chunks.append(_term_text(x.terms[key], _monomial_word(*key), not chunks))
    return _joined_terms(chunks)


_CLIFF_TOKEN = re.compile(r"\s*([ab]\d+|\d+(?:/\d+)?|[+\-*()])")


def parse_clifford_expression(text: str, ctx=None) -> CliffordElement:
    """Parse sums and products of generator words, e.g. "a1*b1 + b1*a1".

    Juxtaposition multiplies ("b1 b3 a2"), so canonical output re-parses to
    an equal element.  Numbers are rational scalars; parentheses group.
    """
    tokens = []
    stripped = text.strip()
    pos = 0
    while pos < len(stripped):
        m = _CLIFF_TOKEN.match(stripped, pos)
        if m is None:
            raise ValueError("cannot tokenize %r at position %d" % (text, pos))
        tokens.append(m.group(1))
        pos = m.end()
    state = {"pos": 0}

    def peek():
        return tokens[state["pos"]] if state["pos"] < len(tokens) else None

    def take():
        tok = peek()
        state["pos"] += 1
        return tok

    def is_atom_start(tok):
        return tok is not None and (tok == "(" or tok not in ("+", "-", "*", ")"))

    def parse_atom():
        tok = take()
        if tok == "(":
            inner = parse_expr()
            if take() != ")":
                raise ValueError("unbalanced parentheses in %r" % text)
            return inner
        if tok is None:
            raise ValueError("unexpected end of expression in %r" % text)
        if tok[0] in ("a", "b") and len(tok) > 1 and tok[1:].isdigit():
            k = int(tok[1:])
            if k < 1:
                raise ValueError("generator index must be positive in %r" % text)
            if ctx is not None and k > ctx.n:
                raise ValueError("generator index %d exceeds rank %d" % (k, ctx.n))
            return (
                CliffordElement.creator(k)
                if tok[0] == "b"
                else CliffordElement.annihilator(k)
            )
        try:
            scalar = Fraction(tok)
        except ValueError:
            raise ValueError("unexpected token %r in %r" % (tok, text)) from None
        return CliffordElement.identity().scale(scalar)

    def parse_product():
        result = parse_atom()
        while True:
            tok = peek()
            if tok == "*":
                take()
                result = result * parse_atom()
            elif is_atom_start(tok):
                result = result * parse_atom()
            else:
                return result

    def parse_expr():
        tok = peek()
        negate = False
        if tok in ("+", "-"):
            take()
            negate = tok == "-"
        result = parse_product()
        if negate:
            result = -result
        while peek() in ("+", "-"):
            op = take()
            nxt = parse_product()
            result = result + (-nxt if op == "-" else nxt)
        return result

    result = parse_expr()
    if peek() is not None:
        raise ValueError("trailing input %r in %r" % (peek(), text))
    return result
