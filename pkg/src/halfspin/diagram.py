"""Strict-partition shapes and their subset bookkeeping.

A shape is a tuple of strictly decreasing positive row lengths.  At rank n
every row length is at most n-1, so shapes correspond to subsets of
{1..n-1} (via their row lengths) and there are 2**(n-1) of them.  A row of
length l has *endpoint* n-l; a length-1 row has endpoint n-1.  Together
with a parity marker on the vertex n, the endpoints of a signed shape form
a subset of {1..n}, which is how shapes are matched to wedge-basis indices.
"""

from __future__ import annotations

import itertools
from enum import Enum


class Sign(Enum):
    """Which of the two half-spin summands a basis state lives in."""

    PLUS = "plus"
    MINUS = "minus"

    def flip(self) -> "Sign":
        return Sign.MINUS if self is Sign.PLUS else Sign.PLUS

    def __str__(self) -> str:
        return self.value


def parse_sign(text: str) -> Sign:
    text = text.strip().lower()
    for sign in Sign:
        if text == sign.value:
            return sign
    raise ValueError("unknown sign %r (expected 'plus' or 'minus')" % text)


def validate_diagram(rows, n=None) -> tuple:
    """Return rows as a tuple, checking strict decrease (and the rank bound)."""
    rows = tuple(int(r) for r in rows)
    for r in rows:
        if r < 1:
            raise ValueError("row lengths must be positive, got %r" % (rows,))
    for a, b in zip(rows, rows[1:]):
        if a <= b:
            raise ValueError("row lengths must strictly decrease, got %r" % (rows,))
    if n is not None:
        if n < 2:
            raise ValueError("rank must be at least 2, got %r" % n)
        if rows and rows[0] > n - 1:
            raise ValueError("row length %d exceeds bound %d for rank %d" % (rows[0], n - 1, n))
    return rows


def is_valid_diagram(rows, n=None) -> bool:
    try:
        validate_diagram(rows, n)
    except (ValueError, TypeError):
        return False
    return True


def diagram_sort_key(rows):
    # total boxes first, then longest-row-first lexicographic order
    return (sum(rows), tuple(-r for r in rows))


def enumerate_diagrams(n: int) -> list:
    """All strict partitions with parts at most n-1, in canonical order."""
    if n < 2:
        raise ValueError("rank must be at least 2, got %r" % n)
    shapes = []
    lengths = range(n - 1, 0, -1)
    for size in range(n):
        shapes.extend(itertools.combinations(lengths, size))
    shapes.sort(key=diagram_sort_key)
    return shapes


def enumerate_diagrams_by_boxes(max_boxes: int) -> list:
    """All strict partitions with at most max_boxes boxes, no bound on parts.

    This is the rank-free enumeration: every shape listed here is a valid
    diagram for any rank n > its largest part.
    """
    if max_boxes < 0:
        raise ValueError("box cap must be non-negative, got %r" % max_boxes)
    shapes = [()]

    def extend(prefix, budget):
        # next part must be strictly smaller than the last one
        cap = min(budget, (prefix[-1] - 1) if prefix else budget)
        for part in range(cap, 0, -1):
            shape = prefix + (part,)
            shapes.append(shape)
            extend(shape, budget - part)

    extend((), max_boxes)
    shapes.sort(key=diagram_sort_key)
    return shapes


def conjugate(rows) -> tuple:
    """Transpose of the diagram; columns become (weakly decreasing) rows."""
    rows = tuple(rows)
    if not rows:
        return ()
    return tuple(sum(1 for r in rows if r >= i) for i in range(1, rows[0] + 1))


def endpoints(rows, n: int) -> frozenset:
    """The set {n - l : l a row length}; strictness makes all endpoints distinct."""
    validate_diagram(rows, n)
    return frozenset(n - l for l in rows)


def endpoint_count_below(rows, n: int, k: int) -> int:
    """Number of rows with endpoint strictly less than k (rows longer than n-k)."""
    return sum(1 for l in rows if n - l < k)


def fock_index(rows, sign: Sign, n: int) -> frozenset:
    """Subset of {1..n} attached to a signed shape.

    The endpoints of the rows, plus the marker n when the row count s has
    the parity that the sign selects: for PLUS the marker appears iff s is
    odd, for MINUS iff s is even.  The resulting map is a bijection from
    signed shapes onto all 2**n subsets, PLUS landing on even-size subsets
    and MINUS on odd-size ones.
    """
    idx = set(endpoints(rows, n))
    s = len(rows)
    if sign is Sign.PLUS:
        if s % 2 == 1:
            idx.add(n)
    else:
        if s % 2 == 0:
            idx.add(n)
    return frozenset(idx)


def fock_index_inverse(idx, n: int):
    """Inverse of fock_index: recover (rows, sign) from a subset of {1..n}."""
    idx = frozenset(int(i) for i in idx)
    for i in idx:
        if not 1 <= i <= n:
            raise ValueError("index %r out of range 1..%d" % (i, n))
    rows = tuple(sorted((n - i for i in idx if i < n), reverse=True))
    s = len(rows)
    if n in idx:
        sign = Sign.PLUS if s % 2 == 1 else Sign.MINUS
    else:
        sign = Sign.PLUS if s % 2 == 0 else Sign.MINUS
    return rows, sign


def add_row_with_endpoint(rows, k: int, n: int):
    """Insert a row of length n-k, or None if a row with endpoint k exists."""
    if not 1 <= k <= n - 1:
        raise ValueError("endpoint %r out of range 1..%d" % (k, n - 1))
    length = n - k
    if length in rows:
        return None
    return tuple(sorted(rows + (length,), reverse=True))


def remove_row_with_endpoint(rows, k: int, n: int):
    """Delete the row of length n-k, or None if no row has endpoint k."""
    if not 1 <= k <= n - 1:
        raise ValueError("endpoint %r out of range 1..%d" % (k, n - 1))
    length = n - k
    if length not in rows:
        return None
    out = list(rows)
    out.remove(length)
    return tuple(out)


def format_diagram(rows) -> str:
    if not rows:
        return "-"
    return ",".join(str(r) for r in rows)


def parse_diagram(text: str, n=None) -> tuple:
    text = text.strip()
    if text in ("-", ""):
        return ()
    try:
        rows = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError("cannot parse diagram %r" % text) from None
    return validate_diagram(rows, n)


def format_fock_index(idx) -> str:
    return "{%s}" % ",".join(str(i) for i in sorted(idx))


def parse_fock_index(text: str, n=None) -> frozenset:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError("cannot parse index set %r" % text)
    body = text[1:-1].strip()
    if not body:
        return frozenset()
    try:
        parts = [int(p) for p in body.split(",")]
    except ValueError:
        raise ValueError("cannot parse index set %r" % text) from None
    idx = frozenset(parts)
    if len(idx) != len(parts):
        raise ValueError("repeated index in %r" % text)
    if n is not None:
        for i in idx:
            if not 1 <= i <= n:
                raise ValueError("index %r out of range 1..%d" % (i, n))
    return idx
