"""The shape model of the two half-spin modules.

Basis states are pairs (sign, shape); vectors are exact rational
combinations of them.  The Chevalley operators act through the dimension
vectors of module `quiver`: F_k moves a state to the unique state whose
dimension vector grows by the unit vector at vertex k (E_k shrinks it),
and H_k scales by the Cartan eigenvalue u_k.  The signed ladder operators
geometric_a / geometric_b move single rows and exchange the two families.

Weights live in the epsilon coordinates, as length-n tuples of exact
rationals; for basis states every entry is +1/2 or -1/2.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .diagram import (
    Sign,
    endpoint_count_below,
    add_row_with_endpoint,
    remove_row_with_endpoint,
    conjugate,
    format_diagram,
    parse_diagram,
    parse_sign,
    validate_diagram,
    diagram_sort_key,
)
from .quiver import RankContext, dim_vector, framing_vector, state_u, unit_vector


class SpinVector:
    """Finite rational combination of basis states, zero terms purged."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for state, coeff in items:
                coeff = Fraction(coeff)
                if state in data:
                    data[state] += coeff
                else:
                    data[state] = coeff
        self.terms = {s: c for s, c in data.items() if c != 0}

    @classmethod
    def from_state(cls, sign, rows, coeff=1):
        return cls({(sign, tuple(rows)): Fraction(coeff)})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, SpinVector) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for s, c in other.terms.items():
            out[s] = out.get(s, Fraction(0)) + c
        return SpinVector(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return SpinVector({s: -c for s, c in self.terms.items()})

    def scale(self, scalar):
        scalar = Fraction(scalar)
        return SpinVector({s: scalar * c for s, c in self.terms.items()})

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def __repr__(self):
        return "SpinVector(%s)" % format_spin_vector(self)


def highest_weight_vector(sign: Sign, ctx: RankContext) -> SpinVector:
    """The empty shape of the given family; killed by every E_k."""
    return SpinVector.from_state(sign, ())


def _single_box_edits(rows, n):
    """All shapes reachable from rows by one box: grow, shrink, add, delete."""
    out = set()
    rows = list(rows)
    for j, l in enumerate(rows):
        if l + 1 <= n - 1 and (j == 0 or rows[j - 1] > l + 1):
            grown = rows.copy()
            grown[j] = l + 1
            out.add(tuple(grown))
        if l - 1 == 0:
            out.add(tuple(rows[:j] + rows[j + 1:]))
        elif j == len(rows) - 1 or rows[j + 1] < l - 1:
            shrunk = rows.copy()
            shrunk[j] = l - 1
            out.add(tuple(shrunk))
    if 1 not in rows:
        out.add(tuple(rows + [1]))
    return out


def _shift_state(sign, rows, k, direction, ctx, opname):
    # the unique shape whose dimension vector differs by the unit at k,
    # searched among single-box edits; at most one can match
    n = ctx.n
    base = dim_vector(rows, sign, ctx)
    step = unit_vector(k, ctx)
    target = tuple(b + direction * e for b, e in zip(base, step))
    matches = [
        cand
        for cand in _single_box_edits(rows, n)
        if dim_vector(cand, sign, ctx) == target
    ]
    if len(matches) > 1:
        raise RuntimeError(
            "%s_%d on (%s,%s): dimension-vector equation has %d solutions %r; "
            "the component dictionary promises at most one"
            % (opname, k, sign, format_diagram(rows), len(matches), matches)
        )
    return matches[0] if matches else None


def apply_F(k: int, vec: SpinVector, ctx: RankContext) -> SpinVector:
    """Lowering operator at vertex k, extended linearly."""
    if not 1 <= k <= ctx.n:
        raise ValueError("vertex %r out of range 1..%d" % (k, ctx.n))
    out = {}
    for (sign, rows), coeff in vec.terms.items():
        moved = _shift_state(sign, rows, k, +1, ctx, "F")
        if moved is not None:
            key = (sign, moved)
            out[key] = out.get(key, Fraction(0)) + coeff
    return SpinVector(out)


def apply_E(k: int, vec: SpinVector, ctx: RankContext) -> SpinVector:
    """Raising operator at vertex k, extended linearly."""
    if not 1 <= k <= ctx.n:
        raise ValueError("vertex %r out of range 1..%d" % (k, ctx.n))
    out = {}
    for (sign, rows), coeff in vec.terms.items():
        moved = _shift_state(sign, rows, k, -1, ctx, "E")
        if moved is not None:
            key = (sign, moved)
            out[key] = out.get(key, Fraction(0)) + coeff
    return SpinVector(out)


def apply_H(k: int, vec: SpinVector, ctx: RankContext) -> SpinVector:
    """Cartan operator at vertex k: scales each state by u_k = (w - Cv)_k."""
    if not 1 <= k <= ctx.n:
        raise ValueError("vertex %r out of range 1..%d" % (k, ctx.n))
    out = {}
    for (sign, rows), coeff in vec.terms.items():
        u = state_u(rows, sign, ctx)
        if u[k - 1]:
            out[(sign, rows)] = coeff * u[k - 1]
    return SpinVector(out)


def kappa(vec: SpinVector, ctx=None) -> SpinVector:
    """The tip-swapping involution: flips the family, keeps the shape."""
    return SpinVector({(sign.flip(), rows): c for (sign, rows), c in vec.terms.items()})


def geometric_a(k: int, vec: SpinVector, ctx: RankContext) -> SpinVector:
    """Row-removing ladder operator; flips the family.

    For k <= n-1 it deletes the row with endpoint k (if present) with sign
    (-1)**(number of rows with endpoint below k).  For k = n it keeps the
    shape and acts only when w_n + (number of rows) is even, with sign
    (-1)**(number of rows).
    """
    n = ctx.n
    if not 1 <= k <= n:
        raise ValueError("vertex %r out of range 1..%d" % (k, n))
    out = {}
    for (sign, rows), coeff in vec.terms.items():
        if k == n:
            w_n = 1 if sign is Sign.PLUS else 0
            if (w_n + len(rows)) % 2 == 0:
                key = (sign.flip(), rows)
                out[key] = out.get(key, Fraction(0)) + coeff * (-1) ** len(rows)
        else:
            smaller = remove_row_with_endpoint(rows, k, n)
            if smaller is not None:
                key = (sign.flip(), smaller)
                phase = (-1) ** endpoint_count_below(rows, n, k)
                out[key] = out.get(key, Fraction(0)) + coeff * phase
    return SpinVector(out)


def geometric_b(k: int, vec: SpinVector, ctx: RankContext) -> SpinVector:
    """Row-adding ladder operator; flips the family.

    Mirror image of geometric_a: for k <= n-1 it inserts the row with
    endpoint k (if absent) with the same phase; for k = n it acts exactly
    when w_n + (number of rows) is odd.
    """
    n = ctx.n
    if not 1 <= k <= n:
        raise ValueError("vertex %r out of range 1..%d" % (k, n))
    out = {}
    for (sign, rows), coeff in vec.terms.items():
        if k == n:
            w_n = 1 if sign is Sign.PLUS else 0
            if (w_n + len(rows)) % 2 == 1:
                key = (sign.flip(), rows)
                out[key] = out.get(key, Fraction(0)) + coeff * (-1) ** len(rows)
        else:
            larger = add_row_with_endpoint(rows, k, n)
            if larger is not None:
                key = (sign.flip(), larger)
                phase = (-1) ** endpoint_count_below(rows, n, k)
                out[key] = out.get(key, Fraction(0)) + coeff * phase
    return SpinVector(out)


# ---------------------------------------------------------------------------
# weights


def fundamental_weight(i: int, ctx: RankContext) -> tuple:
    n = ctx.n
    if not 1 <= i <= n:
        raise ValueError("index %r out of range 1..%d" % (i, n))
    half = Fraction(1, 2)
    if i <= n - 2:
        return tuple(Fraction(1 if j <= i else 0) for j in range(1, n + 1))
    if i == n - 1:
        return tuple([half] * (n - 1) + [-half])
    return tuple([half] * n)


def simple_root(i: int, ctx: RankContext) -> tuple:
    n = ctx.n
    if not 1 <= i <= n:
        raise ValueError("index %r out of range 1..%d" % (i, n))
    eps = [Fraction(0)] * n
    if i <= n - 1:
        eps[i - 1] = Fraction(1)
        eps[i] = Fraction(-1)
    else:
        eps[n - 2] = Fraction(1)
        eps[n - 1] = Fraction(1)
    return tuple(eps)


def weight_eps(state, ctx: RankContext) -> tuple:
    """Weight of a basis state in epsilon coordinates, via u = w - Cv."""
    sign, rows = state
    u = state_u(rows, sign, ctx)
    n = ctx.n
    total = [Fraction(0)] * n
    for i in range(1, n + 1):
        if u[i - 1]:
            lam = fundamental_weight(i, ctx)
            for j in range(n):
                total[j] += u[i - 1] * lam[j]
    return tuple(total)


def weight_eps_alpha(state, ctx: RankContext) -> tuple:
    """Same weight through the simple-root route.

    Start from the top weight of the family and subtract the root
    combination read off the conjugate shape: the first column depth
    splits between the two tip roots (ceiling to the family's own tip),
    column i >= 2 of depth m subtracts m copies of the root at n-i.
    """
    sign, rows = state
    n = ctx.n
    validate_diagram(rows, n)
    top = fundamental_weight(n if sign is Sign.PLUS else n - 1, ctx)
    total = list(top)

    def subtract(root_index, mult):
        root = simple_root(root_index, ctx)
        for j in range(n):
            total[j] -= mult * root[j]

    mu = conjugate(rows)
    if mu:
        hi, lo = (mu[0] + 1) // 2, mu[0] // 2
        if sign is Sign.PLUS:
            subtract(n, hi)
            subtract(n - 1, lo)
        else:
            subtract(n - 1, hi)
            subtract(n, lo)
        for i in range(2, len(mu) + 1):
            subtract(n - i, mu[i - 1])
    return tuple(total)


def weight_eps_closed(state, ctx: RankContext) -> tuple:
    """Same weight once more, as a closed form in the row lengths.

    Half of (eps_1 + ... + eps_{n-1}), minus one full eps_{n-l} per row of
    length l, plus or minus half eps_n: for the PLUS family the tip
    coordinate is +1/2 exactly when the number of rows is even, for MINUS
    when it is odd.
    """
    sign, rows = state
    n = ctx.n
    validate_diagram(rows, n)
    half = Fraction(1, 2)
    total = [half] * (n - 1) + [Fraction(0)]
    for l in rows:
        total[n - l - 1] -= 1
    s = len(rows)
    plus_tip = (s % 2 == 0) if sign is Sign.PLUS else (s % 2 == 1)
    total[n - 1] = half if plus_tip else -half
    return tuple(total)


def weight_eps_halved_variant(state, ctx: RankContext) -> tuple:
    """A near-miss variant of weight_eps_closed with 1/2 per row.

    Subtracting only half an epsilon per row looks symmetric but disagrees
    with the three consistent routes on every non-empty shape.  Kept so the
    regression suite can pin the disagreement (see the weights check);
    never use this for actual weights.
    """
    sign, rows = state
    n = ctx.n
    validate_diagram(rows, n)
    half = Fraction(1, 2)
    total = [half] * (n - 1) + [Fraction(0)]
    for l in rows:
        total[n - l - 1] -= half
    s = len(rows)
    plus_tip = (s % 2 == 0) if sign is Sign.PLUS else (s % 2 == 1)
    total[n - 1] = half if plus_tip else -half
    return tuple(total)


# ---------------------------------------------------------------------------
# text forms


def format_basis_state(state) -> str:
    sign, rows = state
    return "(%s,%s)" % (sign, format_diagram(rows))


def parse_basis_state(text: str, ctx=None):
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError("cannot parse basis state %r" % text)
    body = text[1:-1]
    head, sep, tail = body.partition(",")
    if not sep:
        raise ValueError("cannot parse basis state %r" % text)
    sign = parse_sign(head)
    rows = parse_diagram(tail, ctx.n if ctx is not None else None)
    return (sign, rows)


def _state_sort_key(state):
    sign, rows = state
    return (0 if sign is Sign.PLUS else 1, diagram_sort_key(rows))


def format_coeff_term(coeff, body, first):
    sgn = "-" if coeff < 0 else "+"
    mag = abs(coeff)
    mag_text = "" if mag == 1 else "%s * " % mag
    if first:
        lead = "-" if coeff < 0 else ""
        return "%s%s%s" % (lead, mag_text, body)
    return " %s %s%s" % (sgn, mag_text, body)


def format_spin_vector(vec: SpinVector) -> str:
    if vec.is_zero():
        return "0"
    chunks = []
    for state in sorted(vec.terms, key=_state_sort_key):
        chunks.append(
            format_coeff_term(vec.terms[state], format_basis_state(state), not chunks)
        )
    return "".join(chunks)


_TOKEN = re.compile(r"\s*(\([^()]*\)|\d+(?:/\d+)?|[+\-*])")


def _tokenize(text):
    tokens = []
    pos = 0
    end = len(text)
    while pos < end:
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ValueError("cannot tokenize %r at position %d" % (text, pos))
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


def parse_spin_vector(text: str, ctx=None) -> SpinVector:
    """Inverse of format_spin_vector (also accepts unnormalized sums)."""
    stripped = text.strip()
    if stripped == "0":
        return SpinVector()
    tokens = _tokenize(stripped)
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
        if i < len(tokens) and tokens[i] not in ("+", "-", "*") and not tokens[i].startswith("("):
            coeff = Fraction(tokens[i])
            i += 1
            if i < len(tokens) and tokens[i] == "*":
                i += 1
        if i >= len(tokens) or not tokens[i].startswith("("):
            raise ValueError("expected basis state in %r" % text)
        terms.append((parse_basis_state(tokens[i], ctx), sgn * coeff))
        i += 1
    return SpinVector(terms)
