"""Exact verification engine for the two models.

Everything here reduces claims about the operators to finite linear
algebra over the rationals: operators are tabulated as sparse exact
matrices over an explicitly ordered basis, and each check suite evaluates
a family of operator identities, reporting pass/fail per identity with a
concrete witness on failure.

Reports are plain dicts, deterministic for a given (suite, rank), with
entry statuses pass / fail / xfail / xpass / skip.  An xfail entry is a
pinned, documented deviation (a regression guard): it does not fail the
suite, but its unexpected success (xpass) does.
"""

from __future__ import annotations

import itertools
import time
from fractions import Fraction

from .diagram import (
    Sign,
    enumerate_diagrams,
    enumerate_diagrams_by_boxes,
    format_diagram,
    format_fock_index,
)
from .quiver import RankContext
from . import spinrep
from . import clifford as cliff
from .spinrep import SpinVector, format_basis_state
from .clifford import CliffordElement, FockVector


class ExactMatrix:
    """Sparse rational matrix; no stored zeros, exact arithmetic only."""

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows, ncols, entries=None):
        self.nrows = nrows
        self.ncols = ncols
        data = {}
        if entries:
            for (i, j), v in entries.items():
                if not (0 <= i < nrows and 0 <= j < ncols):
                    raise ValueError("entry (%d,%d) out of bounds %dx%d" % (i, j, nrows, ncols))
                v = Fraction(v)
                if v != 0:
                    data[(i, j)] = v
        self.entries = data

    @classmethod
    def identity(cls, size):
        return cls(size, size, {(i, i): Fraction(1) for i in range(size)})

    @classmethod
    def zero(cls, nrows, ncols):
        return cls(nrows, ncols)

    def entry(self, i, j):
        return self.entries.get((i, j), Fraction(0))

    def is_zero(self):
        return not self.entries

    @property
    def nnz(self):
        return len(self.entries)

    def __eq__(self, other):
        return (
            isinstance(other, ExactMatrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.entries == other.entries
        )

    def __add__(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, Fraction(0)) + v
        return ExactMatrix(self.nrows, self.ncols, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return ExactMatrix(self.nrows, self.ncols, {k: -v for k, v in self.entries.items()})

    def scale(self, scalar):
        scalar = Fraction(scalar)
        return ExactMatrix(
            self.nrows, self.ncols, {k: scalar * v for k, v in self.entries.items()}
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch for product")
        by_row = {}
        for (j, k), v in other.entries.items():
            by_row.setdefault(j, []).append((k, v))
        out = {}
        for (i, j), a in self.entries.items():
            for k, b in by_row.get(j, ()):
                key = (i, k)
                out[key] = out.get(key, Fraction(0)) + a * b
        return ExactMatrix(self.nrows, other.ncols, out)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def transpose(self):
        return ExactMatrix(
            self.ncols, self.nrows, {(j, i): v for (i, j), v in self.entries.items()}
        )

    def rank(self):
        """Exact rank by fraction-free-enough Gaussian elimination."""
        rows = {}
        for (i, j), v in self.entries.items():
            rows.setdefault(i, {})[j] = v
        pivots = {}
        rnk = 0
        for row in rows.values():
            row = dict(row)
            while row:
                col = min(row)
                if col not in pivots:
                    pivots[col] = row
                    rnk += 1
                    break
                pivot_row = pivots[col]
                factor = row[col] / pivot_row[col]
                for c, v in pivot_row.items():
                    nv = row.get(c, Fraction(0)) - factor * v
                    if nv:
                        row[c] = nv
                    elif c in row:
                        del row[c]
        return rnk

    def __repr__(self):
        return "ExactMatrix(%dx%d, %d nonzero)" % (self.nrows, self.ncols, self.nnz)


def commutator(x, y):
    return x * y - y * x


def anticommutator(x, y):
    return x * y + y * x


class IndexedBasis:
    """Ordered basis with a position map; label turns states into text."""

    def __init__(self, states, label=str):
        self.states = list(states)
        self.index = {s: i for i, s in enumerate(self.states)}
        if len(self.index) != len(self.states):
            raise ValueError("repeated basis state")
        self.label = label

    def __len__(self):
        return len(self.states)

    def __iter__(self):
        return iter(self.states)

    def position(self, state):
        return self.index[state]


def spin_basis(ctx: RankContext) -> IndexedBasis:
    """All 2^n basis states: the plus block first, then the minus block."""
    states = [(Sign.PLUS, rows) for rows in enumerate_diagrams(ctx.n)]
    states += [(Sign.MINUS, rows) for rows in enumerate_diagrams(ctx.n)]
    return IndexedBasis(states, label=format_basis_state)


def truncated_spin_basis(ctx: RankContext, max_boxes: int) -> IndexedBasis:
    shapes = enumerate_diagrams_by_boxes(max_boxes)
    for rows in shapes:
        if rows and rows[0] > ctx.n - 1:
            raise ValueError(
                "box cap %d needs rank > %d, got %d" % (max_boxes, rows[0], ctx.n)
            )
    states = [(Sign.PLUS, rows) for rows in shapes]
    states += [(Sign.MINUS, rows) for rows in shapes]
    return IndexedBasis(states, label=format_basis_state)


def fock_basis(ctx: RankContext) -> IndexedBasis:
    subsets = []
    for size in range(ctx.n + 1):
        subsets.extend(itertools.combinations(range(1, ctx.n + 1), size))
    subsets.sort(key=lambda s: (len(s), s))
    return IndexedBasis([frozenset(s) for s in subsets], label=format_fock_index)


_SPIN_OPS = {
    "E": spinrep.apply_E,
    "F": spinrep.apply_F,
    "H": spinrep.apply_H,
    "a": spinrep.geometric_a,
    "b": spinrep.geometric_b,
}


def parse_operator_token(token: str):
    """Split an operator token like "F_4", "a_1", "kappa" into (name, index)."""
    token = token.strip()
    if token in ("kappa", "identity", "id"):
        return ("identity" if token == "id" else token, None)
    name, sep, idx = token.partition("_")
    if sep and name in ("E", "F", "H", "a", "b", "create", "annihilate"):
        try:
            return (name, int(idx))
        except ValueError:
            pass
    raise ValueError("unknown operator token %r" % token)


def apply_spin_operator(name, k, vec: SpinVector, ctx: RankContext) -> SpinVector:
    if name == "kappa":
        return spinrep.kappa(vec, ctx)
    if name == "identity":
        return vec
    if name in _SPIN_OPS:
        return _SPIN_OPS[name](k, vec, ctx)
    raise ValueError("unknown spin operator %r" % name)


def apply_fock_operator(name, k, vec: FockVector, ctx: RankContext) -> FockVector:
    if name == "identity":
        return vec
    if name == "create":
        return cliff.create(k, vec, ctx)
    if name == "annihilate":
        return cliff.annihilate(k, vec, ctx)
    raise ValueError("unknown wedge-side operator %r" % name)


def operator_matrix(op: str, basis: IndexedBasis, ctx: RankContext) -> ExactMatrix:
    """Tabulate a named operator over the basis; column j is the image of state j."""
    name, k = parse_operator_token(op)
    size = len(basis)
    entries = {}
    fock_side = name in ("create", "annihilate")
    for j, state in enumerate(basis.states):
        if fock_side:
            vec = apply_fock_operator(name, k, FockVector.from_index(state), ctx)
        else:
            vec = apply_spin_operator(name, k, SpinVector.from_state(*state), ctx)
        for target, coeff in vec.terms.items():
            entries[(basis.position(target), j)] = coeff
    return ExactMatrix(size, size, entries)


def phi_matrix(ctx: RankContext, sbasis: IndexedBasis, fbasis: IndexedBasis) -> ExactMatrix:
    entries = {}
    for j, state in enumerate(sbasis.states):
        entries[(fbasis.position(cliff.phi_state(state, ctx)), j)] = Fraction(1)
    return ExactMatrix(len(fbasis), len(sbasis), entries)


# ---------------------------------------------------------------------------
# report plumbing


def _entry(identity, ok, witness=None, expected_fail=False):
    if expected_fail:
        status = "xpass" if ok else "xfail"
    else:
        status = "pass" if ok else "fail"
    return {
        "identity": identity,
        "status": status,
        "witness": None if ok else witness,
    }


def _skip_entry(identity, reason):
    return {"identity": identity, "status": "skip", "witness": reason}


def _finalize(suite, n, entries, t0, **extra):
    counts = {"pass": 0, "fail": 0, "xfail": 0, "xpass": 0, "skip": 0}
    for e in entries:
        counts[e["status"]] += 1
    status = "pass" if counts["fail"] == 0 and counts["xpass"] == 0 else "fail"
    report = {
        "suite": suite,
        "n": n,
        "status": status,
        "counts": counts,
        "checks": entries,
        "duration": round(time.perf_counter() - t0, 6),
    }
    report.update(extra)
    return report


def _matrix_witness(got: ExactMatrix, want: ExactMatrix, basis: IndexedBasis):
    keys = sorted(set(got.entries) | set(want.entries))
    for i, j in keys:
        a = got.entry(i, j)
        b = want.entry(i, j)
        if a != b:
            return "entry (%s <- %s): got %s, expected %s" % (
                basis.label(basis.states[i]),
                basis.label(basis.states[j]),
                a,
                b,
            )
    return None


def _matrix_check(identity, got, want, basis, expected_fail=False):
    ok = got == want
    witness = None if ok else _matrix_witness(got, want, basis)
    return _entry(identity, ok, witness, expected_fail)


# ---------------------------------------------------------------------------
# suites


def check_chevalley(n: int):
    """[E_i,F_j] = delta_ij H_i and the H brackets, as exact matrices."""
    t0 = time.perf_counter()
    ctx = RankContext(n)
    basis = spin_basis(ctx)
    E = {k: operator_matrix("E_%d" % k, basis, ctx) for k in range(1, n + 1)}
    F = {k: operator_matrix("F_%d" % k, basis, ctx) for k in range(1, n + 1)}
    H = {k: operator_matrix("H_%d" % k, basis, ctx) for k in range(1, n + 1)}
    zero = ExactMatrix.zero(len(basis), len(basis))
    entries = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            want = H[i] if i == j else zero
            entries.append(
                _matrix_check(
                    "[E_%d,F_%d] = %s" % (i, j, "H_%d" % i if i == j else "0"),
                    commutator(E[i], F[j]),
                    want,
                    basis,
                )
            )
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            c = ctx.cartan[i - 1][j - 1]
            entries.append(
                _matrix_check(
                    "[H_%d,E_%d] = %d E_%d" % (i, j, c, j),
                    commutator(H[i], E[j]),
                    E[j].scale(c),
                    basis,
                )
            )
            entries.append(
                _matrix_check(
                    "[H_%d,F_%d] = %d F_%d" % (i, j, -c, j),
                    commutator(H[i], F[j]),
                    F[j].scale(-c),
                    basis,
                )
            )
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            entries.append(
                _matrix_check(
                    "[H_%d,H_%d] = 0" % (i, j), commutator(H[i], H[j]), zero, basis
                )
            )
    return _finalize("chevalley", n, entries, t0)


def check_serre(n: int):
    """Degree bounds on the raising/lowering operators between vertices."""
    t0 = time.perf_counter()
    ctx = RankContext(n)
    basis = spin_basis(ctx)
    E = {k: operator_matrix("E_%d" % k, basis, ctx) for k in range(1, n + 1)}
    F = {k: operator_matrix("F_%d" % k, basis, ctx) for k in range(1, n + 1)}
    zero = ExactMatrix.zero(len(basis), len(basis))
    entries = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            if ctx.adjacent(i, j):
                entries.append(
                    _matrix_check(
                        "ad(E_%d)^2 E_%d = 0" % (i, j),
                        commutator(E[i], commutator(E[i], E[j])),
                        zero,
                        basis,
                    )
                )
                entries.append(
                    _matrix_check(
                        "ad(F_%d)^2 F_%d = 0" % (i, j),
                        commutator(F[i], commutator(F[i], F[j])),
                        zero,
                        basis,
                    )
                )
            else:
                entries.append(
                    _matrix_check(
                        "[E_%d,E_%d] = 0" % (i, j), commutator(E[i], E[j]), zero, basis
                    )
                )
                entries.append(
                    _matrix_check(
                        "[F_%d,F_%d] = 0" % (i, j), commutator(F[i], F[j]), zero, basis
                    )
                )
    return _finalize("serre", n, entries, t0)


def check_clifford(n: int):
    """Anticommutation of the row ladder operators on the shape basis."""
    t0 = time.perf_counter()
    ctx = RankContext(n)
    basis = spin_basis(ctx)
    A = {k: operator_matrix("a_%d" % k, basis, ctx) for k in range(1, n + 1)}
    B = {k: operator_matrix("b_%d" % k, basis, ctx) for k in range(1, n + 1)}
    ident = ExactMatrix.identity(len(basis))
    zero = ExactMatrix.zero(len(basis), len(basis))
    entries = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            entries.append(
                _matrix_check(
                    "{a_%d,a_%d} = 0" % (i, j), anticommutator(A[i], A[j]), zero, basis
                )
            )
            entries.append(
                _matrix_check(
                    "{b_%d,b_%d} = 0" % (i, j), anticommutator(B[i], B[j]), zero, basis
                )
            )
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            want = ident if i == j else zero
            entries.append(
                _matrix_check(
                    "{a_%d,b_%d} = %s" % (i, j, "1" if i == j else "0"),
                    anticommutator(A[i], B[j]),
                    want,
                    basis,
                )
            )
    return _finalize("clifford", n, entries, t0)


def check_intertwiner(n: int):
    """The basis dictionary carries each ladder operator to its wedge twin."""
    t0 = time.perf_counter()
    ctx = RankContext(n)
    sbasis = spin_basis(ctx)
    fbasis = fock_basis(ctx)
    P = phi_matrix(ctx, sbasis, fbasis)
    entries = []
    size = len(sbasis)
    ok_bijection = (
        P.nnz == size
        and all(v == 1 for v in P.entries.values())
        and len({i for (i, _) in P.entries}) == size
        and len({j for (_, j) in P.entries}) == size
    )
    entries.append(
        _entry(
            "phi is a basis bijection (all coefficients 1)",
            ok_bijection,
            None if ok_bijection else "phi matrix nnz=%d" % P.nnz,
        )
    )
    for k in range(1, n + 1):
        a_spin = operator_matrix("a_%d" % k, sbasis, ctx)
        b_spin = operator_matrix("b_%d" % k, sbasis, ctx)
        ann = operator_matrix("annihilate_%d" % k, fbasis, ctx)
        cre = operator_matrix("create_%d" % k, fbasis, ctx)
        entries.append(
            _matrix_check(
                "phi a_%d = annihilate_%d phi" % (k, k), P * a_spin, ann * P, fbasis
            )
        )
        entries.append(
            _matrix_check(
                "phi b_%d = create_%d phi" % (k, k), P * b_spin, cre * P, fbasis
            )
        )
    return _finalize("intertwiner", n, entries, t0)


def check_factorization(n: int):
    """Chevalley operators factor through quadratic ladder words."""
    t0 = time.perf_counter()
    ctx = RankContext(n)
    basis = spin_basis(ctx)
    A = {k: operator_matrix("a_%d" % k, basis, ctx) for k in range(1, n + 1)}
    B = {k: operator_matrix("b_%d" % k, basis, ctx) for k in range(1, n + 1)}
    entries = []
    for k in range(1, n):
        entries.append(
            _matrix_check(
                "E_%d = b_%d a_%d" % (k, k + 1, k),
                operator_matrix("E_%d" % k, basis, ctx),
                B[k + 1] * A[k],
                basis,
            )
        )
        entries.append(
            _matrix_check(
                "F_%d = b_%d a_%d" % (k, k, k + 1),
                operator_matrix("F_%d" % k, basis, ctx),
                B[k] * A[k + 1],
                basis,
            )
        )
    entries.append(
        _matrix_check(
            "E_%d = a_%d a_%d" % (n, n, n - 1),
            operator_matrix("E_%d" % n, basis, ctx),
            A[n] * A[n - 1],
            basis,
        )
    )
    entries.append(
        _matrix_check(
            "F_%d = b_%d b_%d" % (n, n - 1, n),
            operator_matrix("F_%d" % n, basis, ctx),
            B[n - 1] * B[n],
            basis,
        )
    )
    return _finalize("factorization", n, entries, t0)


def _f_closure(sign: Sign, ctx: RankContext):
    seen = {(sign, ())}
    frontier = [(sign, ())]
    while frontier:
        state = frontier.pop()
        vec = SpinVector.from_state(*state)
        for k in range(1, ctx.n + 1):
            image = spinrep.apply_F(k, vec, ctx)
            for target in image.terms:
                if target not in seen:
                    seen.add(target)
                    frontier.append(target)
    return seen


def check_module_structure(n: int):
    """Generation, block decomposition, multiplicities and wedge parity."""
    t0 = time.perf_counter()
    ctx = RankContext(n)
    entries = []
    half_dim = 2 ** (n - 1)
    blocks = {}
    for sign in (Sign.PLUS, Sign.MINUS):
        reachable = _f_closure(sign, ctx)
        blocks[sign] = reachable
        entries.append(
            _entry(
                "lowering closure from (%s,-) spans %d states" % (sign, half_dim),
                len(reachable) == half_dim,
                "got %d states" % len(reachable),
            )
        )
    for sign in (Sign.PLUS, Sign.MINUS):
        expected = {(sign, rows) for rows in enumerate_diagrams(n)}
        entries.append(
            _entry(
                "closure from (%s,-) is exactly the %s block" % (sign, sign),
                blocks[sign] == expected,
                "difference: %s"
                % sorted(
                    format_basis_state(s) for s in blocks[sign] ^ expected
                ),
            )
        )
    for sign in (Sign.PLUS, Sign.MINUS):
        weights = [
            spinrep.weight_eps((sign, rows), ctx) for rows in enumerate_diagrams(n)
        ]
        ok = len(set(weights)) == len(weights)
        entries.append(
            _entry(
                "weights in the %s block are pairwise distinct" % sign,
                ok,
                None if ok else "a weight repeats",
            )
        )
    # wedge parity: image sizes under the basis dictionary
    parities = {
        sign: {
            len(cliff.phi_state((sign, rows), ctx)) % 2
            for rows in enumerate_diagrams(n)
        }
        for sign in (Sign.PLUS, Sign.MINUS)
    }
    derived_ok = parities[Sign.PLUS] == {0} and parities[Sign.MINUS] == {1}
    entries.append(
        _entry(
            "plus block fills the even wedge part, minus the odd (every rank)",
            derived_ok,
            "parities: plus=%s minus=%s"
            % (sorted(parities[Sign.PLUS]), sorted(parities[Sign.MINUS])),
        )
    )
    # A rank-parity variant of the matching rule is pinned here as a
    # regression: it happens to agree for even n and is wrong for odd n.
    even_block_sign = Sign.PLUS if parities[Sign.PLUS] == {0} else Sign.MINUS
    variant_expected = Sign.PLUS if n % 2 == 0 else Sign.MINUS
    variant_ok = even_block_sign == variant_expected
    entries.append(
        _entry(
            "rank-parity variant: even wedge part is the %s block" % variant_expected,
            variant_ok,
            "even wedge part is the %s block for every rank" % even_block_sign,
            expected_fail=(n % 2 == 1),
        )
    )
    return _finalize("module", n, entries, t0)


def check_weight_consistency(n: int):
    """All weight routes agree on every basis state; the near-miss variant is pinned."""
    t0 = time.perf_counter()
    ctx = RankContext(n)
    basis = spin_basis(ctx)
    entries = []
    routes = (
        ("cartan eigenvalue route", spinrep.weight_eps),
        ("simple-root route", spinrep.weight_eps_alpha),
        ("closed form", spinrep.weight_eps_closed),
        ("wedge-side weight", lambda st, c: cliff.fock_weight(cliff.phi_state(st, c), c)),
    )
    reference_name, reference = routes[0]
    for name, route in routes[1:]:
        bad = None
        for state in basis.states:
            got = route(state, ctx)
            want = reference(state, ctx)
            if got != want:
                bad = "state %s: %s gives %s, %s gives %s" % (
                    format_basis_state(state),
                    name,
                    _format_eps(got),
                    reference_name,
                    _format_eps(want),
                )
                break
        entries.append(
            _entry(
                "%s agrees with %s on all %d states" % (name, reference_name, len(basis)),
                bad is None,
                bad,
            )
        )
    deviates_everywhere = all(
        spinrep.weight_eps_halved_variant(state, ctx) != reference(state, ctx)
        for state in basis.states
        if state[1]
    )
    entries.append(
        _entry(
            "halved-row-sum variant deviates on every non-empty shape",
            deviates_everywhere,
            "variant coincides somewhere",
        )
    )
    if n == 4:
        pinned = (Sign.PLUS, (2,))
        got = spinrep.weight_eps_halved_variant(pinned, ctx)
        want = reference(pinned, ctx)
        entries.append(
            _entry(
                "halved-row-sum variant matches at (plus,2)",
                got == want,
                "variant gives %s, consistent routes give %s"
                % (_format_eps(got), _format_eps(want)),
                expected_fail=True,
            )
        )
    return _finalize("weights", n, entries, t0)


def _format_eps(eps):
    return "(%s)" % ",".join(str(c) for c in eps)


def check_faithfulness(n: int):
    """The 4^n normal-ordered monomials act independently on the wedge space."""
    t0 = time.perf_counter()
    entries = []
    if n > 4:
        entries.append(
            _skip_entry(
                "monomial actions have rank 4^%d" % n,
                "desk-scale check runs for rank at most 4",
            )
        )
        return _finalize("faithfulness", n, entries, t0)
    ctx = RankContext(n)
    fbasis = fock_basis(ctx)
    size = len(fbasis)
    subsets = []
    for r in range(n + 1):
        subsets.extend(itertools.combinations(range(1, n + 1), r))
    flat = {}
    count = 0
    for creators in subsets:
        for annihilators in subsets:
            x = CliffordElement.monomial(creators, annihilators)
            for j, idx in enumerate(fbasis.states):
                image = cliff.act(x, FockVector.from_index(idx), ctx)
                for target, coeff in image.terms.items():
                    flat[(count, fbasis.position(target) * size + j)] = coeff
            count += 1
    matrix = ExactMatrix(count, size * size, flat)
    rank = matrix.rank()
    entries.append(
        _entry(
            "the %d monomial action matrices are linearly independent" % count,
            rank == 4**n,
            "rank %d, expected %d" % (rank, 4**n),
        )
    )
    return _finalize("faithfulness", n, entries, t0)


# ---------------------------------------------------------------------------
# rank-free mode: pointwise identities on a box-capped state family


def _pointwise(entries, identity, states, predicate):
    bad = None
    for state in states:
        witness = predicate(state)
        if witness is not None:
            bad = witness
            break
    entries.append(
        _entry("%s (pointwise on %d states)" % (identity, len(states)), bad is None, bad)
    )


def check_dinfty(max_boxes: int = 6, n: int = 12):
    """Re-run the operator identities on all shapes with at most max_boxes boxes.

    The operators never need the full rank-n state space, so the identities
    can be evaluated exactly on the capped family inside a large ambient
    rank; agreement here is what makes the rank-free limit well defined.
    """
    t0 = time.perf_counter()
    ctx = RankContext(n)
    basis = truncated_spin_basis(ctx, max_boxes)
    states = basis.states
    entries = []

    def vec(state):
        return SpinVector.from_state(*state)

    def describe(state, got, want):
        return "state %s: got %s, expected %s" % (
            format_basis_state(state),
            spinrep.format_spin_vector(got),
            spinrep.format_spin_vector(want),
        )

    E = spinrep.apply_E
    F = spinrep.apply_F
    H = spinrep.apply_H

    def chev_pred(pair):
        i, j = pair

        def inner(state):
            x = vec(state)
            got = E(i, F(j, x, ctx), ctx) - F(j, E(i, x, ctx), ctx)
            want = H(i, x, ctx) if i == j else SpinVector()
            if got != want:
                return describe(state, got, want)
            got_he = H(i, E(j, x, ctx), ctx) - E(j, H(i, x, ctx), ctx)
            want_he = E(j, x, ctx).scale(ctx.cartan[i - 1][j - 1])
            if got_he != want_he:
                return describe(state, got_he, want_he)
            got_hf = H(i, F(j, x, ctx), ctx) - F(j, H(i, x, ctx), ctx)
            want_hf = F(j, x, ctx).scale(-ctx.cartan[i - 1][j - 1])
            if got_hf != want_hf:
                return describe(state, got_hf, want_hf)
            return None

        return inner

    bad = None
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            pred = chev_pred((i, j))
            for state in states:
                w = pred(state)
                if w is not None:
                    bad = "pair (%d,%d): %s" % (i, j, w)
                    break
            if bad:
                break
        if bad:
            break
    entries.append(
        _entry(
            "Chevalley brackets on all pairs (pointwise on %d states)" % len(states),
            bad is None,
            bad,
        )
    )

    bad = None
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            for state in states:
                x = vec(state)
                if ctx.adjacent(i, j):
                    got = (
                        E(i, E(i, E(j, x, ctx), ctx), ctx)
                        - E(i, E(j, E(i, x, ctx), ctx), ctx).scale(2)
                        + E(j, E(i, E(i, x, ctx), ctx), ctx)
                    )
                    gotf = (
                        F(i, F(i, F(j, x, ctx), ctx), ctx)
                        - F(i, F(j, F(i, x, ctx), ctx), ctx).scale(2)
                        + F(j, F(i, F(i, x, ctx), ctx), ctx)
                    )
                else:
                    got = E(i, E(j, x, ctx), ctx) - E(j, E(i, x, ctx), ctx)
                    gotf = F(i, F(j, x, ctx), ctx) - F(j, F(i, x, ctx), ctx)
                if got or gotf:
                    bad = "pair (%d,%d) at state %s" % (
                        i,
                        j,
                        format_basis_state(state),
                    )
                    break
            if bad:
                break
        if bad:
            break
    entries.append(
        _entry(
            "degree bounds between vertices (pointwise on %d states)" % len(states),
            bad is None,
            bad,
        )
    )

    ga = spinrep.geometric_a
    gb = spinrep.geometric_b
    bad = None
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for state in states:
                x = vec(state)
                aa = ga(i, ga(j, x, ctx), ctx) + ga(j, ga(i, x, ctx), ctx)
                bb = gb(i, gb(j, x, ctx), ctx) + gb(j, gb(i, x, ctx), ctx)
                ab = ga(i, gb(j, x, ctx), ctx) + gb(j, ga(i, x, ctx), ctx)
                want_ab = x if i == j else SpinVector()
                if aa or bb or ab != want_ab:
                    bad = "pair (%d,%d) at state %s" % (i, j, format_basis_state(state))
                    break
            if bad:
                break
        if bad:
            break
    entries.append(
        _entry(
            "ladder anticommutators (pointwise on %d states)" % len(states),
            bad is None,
            bad,
        )
    )

    bad = None
    for k in range(1, n + 1):
        for state in states:
            x = vec(state)
            lhs = cliff.phi(ga(k, x, ctx), ctx)
            rhs = cliff.annihilate(k, cliff.phi(x, ctx), ctx)
            lhs_b = cliff.phi(gb(k, x, ctx), ctx)
            rhs_b = cliff.create(k, cliff.phi(x, ctx), ctx)
            if lhs != rhs or lhs_b != rhs_b:
                bad = "mode %d at state %s" % (k, format_basis_state(state))
                break
        if bad:
            break
    entries.append(
        _entry(
            "dictionary intertwines the ladder operators (pointwise on %d states)"
            % len(states),
            bad is None,
            bad,
        )
    )

    bad = None
    for state in states:
        x = vec(state)
        for k in range(1, n):
            if E(k, x, ctx) != gb(k + 1, ga(k, x, ctx), ctx):
                bad = "E_%d at %s" % (k, format_basis_state(state))
                break
            if F(k, x, ctx) != gb(k, ga(k + 1, x, ctx), ctx):
                bad = "F_%d at %s" % (k, format_basis_state(state))
                break
        if bad:
            break
        if E(n, x, ctx) != ga(n, ga(n - 1, x, ctx), ctx):
            bad = "E_%d at %s" % (n, format_basis_state(state))
            break
        if F(n, x, ctx) != gb(n - 1, gb(n, x, ctx), ctx):
            bad = "F_%d at %s" % (n, format_basis_state(state))
            break
    entries.append(
        _entry(
            "quadratic factorization of E/F (pointwise on %d states)" % len(states),
            bad is None,
            bad,
        )
    )

    bad = None
    for state in states:
        u_route = spinrep.weight_eps(state, ctx)
        if (
            spinrep.weight_eps_alpha(state, ctx) != u_route
            or spinrep.weight_eps_closed(state, ctx) != u_route
            or cliff.fock_weight(cliff.phi_state(state, ctx), ctx) != u_route
        ):
            bad = "state %s" % format_basis_state(state)
            break
    entries.append(
        _entry(
            "weight routes agree (pointwise on %d states)" % len(states),
            bad is None,
            bad,
        )
    )
    return _finalize("dinfty", n, entries, t0, max_boxes=max_boxes, mode="truncated")


SUITES = {
    "chevalley": check_chevalley,
    "serre": check_serre,
    "clifford": check_clifford,
    "intertwiner": check_intertwiner,
    "factorization": check_factorization,
    "module": check_module_structure,
    "weights": check_weight_consistency,
    "faithfulness": check_faithfulness,
}

SUITE_NAMES = tuple(sorted(SUITES))


def run_suites(names, ranks):
    """Run the named suites over the ranks; reports sorted by suite then rank."""
    for name in names:
        if name not in SUITES:
            raise ValueError("unknown suite %r (choose from %s)" % (name, ", ".join(SUITE_NAMES)))
    reports = []
    for name in sorted(set(names)):
        for n in ranks:
            reports.append(SUITES[name](n))
    reports.sort(key=lambda r: (r["suite"], r["n"]))
    return reports


def all_pass(reports) -> bool:
    return all(r["status"] == "pass" for r in reports)
