"""Fuzzy and neutrosophic binary relations as membership matrices.

Entries live in [0,1] union {n*I : n in (0,1]} with exact rational
magnitudes.  Mixed real/indeterminate min and max follow one documented
convention: zero annihilates min, indeterminacy otherwise propagates
through min, and max picks the larger magnitude with ties broken toward
the real value.  Property predicates are three-valued: a threshold
comparison against an indeterminate entry makes that clause indeterminate.
"""

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    NotFoundError,
    ParseError,
    ShapeError,
    _render_fraction,
    parse_number,
)


class _Indeterminate:
    """The middle truth value of the three-valued property reports."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "indeterminate"

    def __bool__(self):
        raise TypeError("indeterminate truth value; test with `is INDETERMINATE`")


INDETERMINATE = _Indeterminate()


def tri_all(values):
    """Three-valued conjunction: any False wins, then any indeterminate."""
    saw_indet = False
    for v in values:
        if v is INDETERMINATE:
            saw_indet = True
        elif not v:
            return False
    return INDETERMINATE if saw_indet else True


def _tri_not(v):
    if v is INDETERMINATE:
        return INDETERMINATE
    return not v


class FuzzyNeutroValue:
    """A membership grade: magnitude in [0,1], optionally indeterminate.

    The value is magnitude when the flag is off and magnitude*I when on;
    0*I normalizes to the real 0, and the bare symbol I is magnitude 1
    with the flag on.
    """

    __slots__ = ("magnitude", "indeterminate")

    def __init__(self, magnitude, indeterminate=False):
        mag = Fraction(magnitude)
        if not 0 <= mag <= 1:
            raise ValueError("membership magnitude %s outside [0, 1]" % (mag,))
        if mag == 0:
            indeterminate = False
        self.magnitude = mag
        self.indeterminate = bool(indeterminate)

    @classmethod
    def parse(cls, token):
        x = parse_number(token)
        if x.real != 0 and x.indet != 0:
            raise ParseError(
                "membership values cannot mix real and indeterminate parts: %r"
                % (token,)
            )
        try:
            if x.indet != 0:
                return cls(x.indet, True)
            return cls(x.real)
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    def __eq__(self, other):
        if not isinstance(other, FuzzyNeutroValue):
            return NotImplemented
        return (
            self.magnitude == other.magnitude
            and self.indeterminate == other.indeterminate
        )

    def __hash__(self):
        return hash((self.magnitude, self.indeterminate))

    def __str__(self):
        if not self.indeterminate:
            return _render_fraction(self.magnitude)
        if self.magnitude == 1:
            return "I"
        return _render_fraction(self.magnitude) + "I"

    def __repr__(self):
        return "FuzzyNeutroValue(%s)" % (self,)


FZERO = FuzzyNeutroValue(0)
FONE = FuzzyNeutroValue(1)
FI = FuzzyNeutroValue(1, True)


def lattice_min(x, y):
    if x.magnitude == 0 or y.magnitude == 0:
        return FZERO
    mag = min(x.magnitude, y.magnitude)
    return FuzzyNeutroValue(mag, x.indeterminate or y.indeterminate)


def lattice_max(x, y):
    if x.magnitude != y.magnitude:
        return x if x.magnitude > y.magnitude else y
    return FuzzyNeutroValue(x.magnitude, x.indeterminate and y.indeterminate)


class FuzzyNeutroRelation:
    __slots__ = ("row_labels", "col_labels", "values")

    def __init__(self, row_labels, col_labels, values):
        row_labels = tuple(row_labels)
        col_labels = tuple(col_labels)
        if not row_labels or not col_labels:
            raise ShapeError("relation needs at least one row and one column")
        if len(set(row_labels)) != len(row_labels):
            raise ValueError("duplicate row labels")
        if len(set(col_labels)) != len(col_labels):
            raise ValueError("duplicate column labels")
        rows = tuple(tuple(row) for row in values)
        if len(rows) != len(row_labels) or any(
            len(r) != len(col_labels) for r in rows
        ):
            raise ShapeError(
                "value grid does not match %d x %d labels"
                % (len(row_labels), len(col_labels))
            )
        for r in rows:
            for v in r:
                if not isinstance(v, FuzzyNeutroValue):
                    raise TypeError("relation entries must be FuzzyNeutroValue")
        self.row_labels = row_labels
        self.col_labels = col_labels
        self.values = rows

    @classmethod
    def from_tokens(cls, rows, row_labels=None, col_labels=None):
        """Build from token strings (or ready values); labels default x_i/y_j."""
        grid = [
            [
                v if isinstance(v, FuzzyNeutroValue) else FuzzyNeutroValue.parse(v)
                for v in row
            ]
            for row in rows
        ]
        if row_labels is None:
            row_labels = ["x%d" % (i + 1) for i in range(len(grid))]
        if col_labels is None:
            width = len(grid[0]) if grid else 0
            col_labels = ["y%d" % (j + 1) for j in range(width)]
        return cls(row_labels, col_labels, grid)

    @property
    def shape(self):
        return len(self.row_labels), len(self.col_labels)

    def entry(self, i, j):
        return self.values[i][j]

    def value(self, row_label, col_label):
        try:
            i = self.row_labels.index(row_label)
        except ValueError:
            raise NotFoundError("unknown row label %r" % (row_label,)) from None
        try:
            j = self.col_labels.index(col_label)
        except ValueError:
            raise NotFoundError("unknown column label %r" % (col_label,)) from None
        return self.values[i][j]

    def is_square(self):
        return self.row_labels == self.col_labels

    def __eq__(self, other):
        if not isinstance(other, FuzzyNeutroRelation):
            return NotImplemented
        return (
            self.row_labels == other.row_labels
            and self.col_labels == other.col_labels
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.row_labels, self.col_labels, self.values))

    def __repr__(self):
        return "FuzzyNeutroRelation(%d x %d)" % self.shape


@dataclass(frozen=True)
class DomRanHeight:
    domain: tuple
    range: tuple
    height: FuzzyNeutroValue


def dom_ran_height(R):
    """Row-wise, column-wise and global lattice_max."""
    def fold(vals):
        acc = FZERO
        for v in vals:
            acc = lattice_max(acc, v)
        return acc

    m, n = R.shape
    dom = tuple(fold(R.values[i]) for i in range(m))
    ran = tuple(fold(R.values[i][j] for i in range(m)) for j in range(n))
    return DomRanHeight(dom, ran, fold(dom))


def inverse(R):
    m, n = R.shape
    return FuzzyNeutroRelation(
        R.col_labels,
        R.row_labels,
        [[R.values[i][j] for i in range(m)] for j in range(n)],
    )


def maxmin_compose(P, Q):
    """r_ij = max_k min(p_ik, q_kj) under the lattice operations."""
    if P.col_labels != Q.row_labels:
        raise ShapeError(
            "compose needs matching middle labels: %d cols %r vs %d rows %r"
            % (len(P.col_labels), list(P.col_labels),
               len(Q.row_labels), list(Q.row_labels))
        )
    m, k = P.shape
    _k, n = Q.shape
    out = []
    for i in range(m):
        row = []
        for j in range(n):
            acc = FZERO
            for t in range(k):
                acc = lattice_max(acc, lattice_min(P.values[i][t], Q.values[t][j]))
            row.append(acc)
        out.append(row)
    return FuzzyNeutroRelation(P.row_labels, Q.col_labels, out)


def relational_join(P, Q):
    """Dense triple table (x, y, z) -> min(P(x,y), Q(y,z))."""
    if P.col_labels != Q.row_labels:
        raise ShapeError(
            "join needs matching middle labels: %r vs %r"
            % (list(P.col_labels), list(Q.row_labels))
        )
    table = {}
    for i, x in enumerate(P.row_labels):
        for j, y in enumerate(P.col_labels):
            for l, z in enumerate(Q.col_labels):
                table[(x, y, z)] = lattice_min(P.values[i][j], Q.values[j][l])
    return table


def _positive(v):
    """Three-valued `v > 0`."""
    if v.magnitude == 0:
        return False
    if v.indeterminate:
        return INDETERMINATE
    return True


def _at_least(v, threshold):
    """Three-valued `v >= threshold` for a real rational threshold."""
    if v.indeterminate:
        return INDETERMINATE
    return v.magnitude >= threshold


def _lattice_le(x, y):
    """Total-order comparison induced by lattice_max (crisp)."""
    return lattice_max(x, y) == y


@dataclass(frozen=True)
class PropertyReport:
    reflexive: object
    epsilon_reflexive: object
    irreflexive: object
    anti_reflexive: object
    symmetric: object
    asymmetric: object
    antisymmetric: object
    transitive: object
    anti_transitive: object
    compatibility: object
    partial_order: object


def properties(R, epsilon=Fraction(1, 2)):
    """Three-valued property report over a square relation.

    Equality-style predicates (reflexive, symmetric, ...) compare entries
    syntactically.  Transitivity uses the total order induced by
    lattice_max.  Only threshold comparisons (>= epsilon, > 0) against
    indeterminate entries render a clause — and possibly the property —
    indeterminate.
    """
    m, n = R.shape
    if m != n:
        raise ShapeError("property report needs a square relation (%d x %d)" % (m, n))
    epsilon = Fraction(epsilon)
    if not 0 < epsilon < 1:
        raise ValueError("epsilon must satisfy 0 < epsilon < 1")
    V = R.values
    diag = [V[i][i] for i in range(n)]

    reflexive = all(v == FONE for v in diag)
    eps_reflexive = tri_all(_at_least(v, epsilon) for v in diag)
    irreflexive = all(v == FZERO for v in diag)
    anti_reflexive = all(v != FONE for v in diag)
    symmetric = all(
        V[i][j] == V[j][i] for i in range(n) for j in range(i + 1, n)
    )
    asymmetric = not symmetric

    antisymmetric = tri_all(
        _tri_not(tri_all([_positive(V[i][j]), _positive(V[j][i])]))
        for i in range(n)
        for j in range(n)
        if i != j
    )

    composed = maxmin_compose(R, R)
    transitive = all(
        _lattice_le(composed.values[i][j], V[i][j])
        for i in range(n)
        for j in range(n)
    )
    anti_transitive = all(
        _lattice_le(V[i][j], composed.values[i][j]) and V[i][j] != composed.values[i][j]
        for i in range(n)
        for j in range(n)
    )

    compatibility = tri_all([reflexive, symmetric])
    partial_order = tri_all([reflexive, antisymmetric, transitive])
    return PropertyReport(
        reflexive,
        eps_reflexive,
        irreflexive,
        anti_reflexive,
        symmetric,
        asymmetric,
        antisymmetric,
        transitive,
        anti_transitive,
        compatibility,
        partial_order,
    )


def transitive_closure(R):
    """Smallest transitive relation dominating R (entrywise, lattice order).

    Iterates R <- elementwise-max(R, R o R) to its fixpoint.
    """
    m, n = R.shape
    if m != n:
        raise ShapeError("transitive closure needs a square relation")
    current = R
    for _ in range(n + 1):
        composed = maxmin_compose(current, current)
        merged = FuzzyNeutroRelation(
            current.row_labels,
            current.col_labels,
            [
                [
                    lattice_max(current.values[i][j], composed.values[i][j])
                    for j in range(n)
                ]
                for i in range(n)
            ],
        )
        if merged == current:
            return current
        current = merged
    raise AssertionError("closure failed to stabilize within n+1 rounds")


def check_homomorphism(h, R, Q, strong=False):
    """Check R(x1,x2) <= Q(h(x1), h(x2)) for all pairs (equality when strong).

    h maps R's labels into Q's.  Returns (holds, findings) where holds is
    three-valued and findings lists (x1, x2, status) for every pair whose
    clause is not definitely true.
    """
    if not R.is_square() or not Q.is_square():
        raise ShapeError("homomorphism check needs square relations")
    labels = R.row_labels
    for x in labels:
        if x not in h:
            raise ValueError("map is not total: missing %r" % (x,))
        if h[x] not in Q.row_labels:
            raise NotFoundError("map target %r not in codomain labels" % (h[x],))

    def le3(a, b):
        if a == b or a.magnitude == 0:
            return True
        if a.indeterminate or b.indeterminate:
            return INDETERMINATE
        return a.magnitude <= b.magnitude

    findings = []
    clauses = []
    for x1 in labels:
        for x2 in labels:
            r = R.value(x1, x2)
            q = Q.value(h[x1], h[x2])
            clause = le3(r, q)
            if strong:
                clause = tri_all([clause, le3(q, r)])
            clauses.append(clause)
            if clause is INDETERMINATE:
                findings.append((x1, x2, "indeterminate"))
            elif not clause:
                findings.append((x1, x2, "violated"))
    return tri_all(clauses), findings
