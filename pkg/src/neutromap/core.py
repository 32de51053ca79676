"""Exact arithmetic for neutrosophic numbers a + bI and matrices over them.

The indeterminate I satisfies I*I = I, so (a+bI)(c+dI) = ac + (ad+bc+bd)I.
All coefficients are exact rationals; there is no floating point anywhere in
this module.  The ring K(I) has zero divisors (I*(1-I) = 0), which is why
rank and invertibility go through the componentwise splitting isomorphism
a+bI -> (a, a+b) instead of direct elimination.
"""

import re
from dataclasses import dataclass
from fractions import Fraction


class ShapeError(ValueError):
    """Operand shapes or labels do not conform."""


class ParseError(ValueError):
    """Malformed token, matrix or model file."""


class SizeLimitError(ValueError):
    """Input exceeds a documented desk-scale guard."""


class NotFoundError(LookupError):
    """A referenced name, vertex or edge does not exist."""


_NUM = r"(?:\d+\.\d+|\.\d+|\d+/\d+|\d+)"
_TOKEN_RE = re.compile(
    "(?:(?P<ra>[+-]?{n})(?P<ib>[+-](?:{n})?)I"
    "|(?P<ionly>[+-]?(?:{n})?)I"
    "|(?P<ronly>[+-]?{n})"
    ")".format(n=_NUM)
)


def _render_fraction(f):
    if f.denominator == 1:
        return str(f.numerator)
    den = f.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den == 1:
        k = max(twos, fives)
        scaled = abs(f.numerator) * (10 ** k // f.denominator)
        digits = str(scaled).rjust(k + 1, "0")
        sign = "-" if f.numerator < 0 else ""
        return sign + digits[:-k] + "." + digits[-k:]
    return "%d/%d" % (f.numerator, f.denominator)


def _coerce_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError("expected a rational, got %r" % (x,))


class NeutroNumber:
    """An exact neutrosophic scalar a + bI.

    Construct from parts (``NeutroNumber(2, -6)``), from a single rational,
    or from a token string (``NeutroNumber("2-6I")``).
    """

    __slots__ = ("real", "indet")

    def __init__(self, real=0, indet=0):
        if isinstance(real, str):
            if indet != 0:
                raise TypeError("token form takes no second argument")
            parsed = parse_number(real)
            self.real, self.indet = parsed.real, parsed.indet
            return
        self.real = _coerce_fraction(real)
        self.indet = _coerce_fraction(indet)

    def __add__(self, other):
        other = _as_nn(other)
        return NeutroNumber(self.real + other.real, self.indet + other.indet)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_nn(other)
        return NeutroNumber(self.real - other.real, self.indet - other.indet)

    def __rsub__(self, other):
        return _as_nn(other) - self

    def __neg__(self):
        return NeutroNumber(-self.real, -self.indet)

    def __mul__(self, other):
        other = _as_nn(other)
        a, b = self.real, self.indet
        c, d = other.real, other.indet
        return NeutroNumber(a * c, a * d + b * c + b * d)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = _as_nn(other)
        except TypeError:
            return NotImplemented
        return self.real == other.real and self.indet == other.indet

    def __hash__(self):
        if self.indet == 0:
            return hash(self.real)
        return hash((self.real, self.indet))

    def __bool__(self):
        return self.real != 0 or self.indet != 0

    def is_real(self):
        return self.indet == 0

    def __str__(self):
        a, b = self.real, self.indet
        if b == 0:
            return _render_fraction(a)
        if a == 0:
            if b == 1:
                return "I"
            if b == -1:
                return "-I"
            return _render_fraction(b) + "I"
        if b > 0:
            tail = "I" if b == 1 else _render_fraction(b) + "I"
            return _render_fraction(a) + "+" + tail
        tail = "I" if b == -1 else _render_fraction(-b) + "I"
        return _render_fraction(a) + "-" + tail

    def __repr__(self):
        return "NeutroNumber('%s')" % (self,)


def _as_nn(x):
    if isinstance(x, NeutroNumber):
        return x
    if isinstance(x, (int, Fraction)):
        return NeutroNumber(x)
    if isinstance(x, str):
        return parse_number(x)
    raise TypeError("cannot treat %r as a neutrosophic number" % (x,))


ZERO = NeutroNumber(0)
ONE = NeutroNumber(1)
I = NeutroNumber(0, 1)


def nn_add(x, y):
    return _as_nn(x) + _as_nn(y)


def nn_mul(x, y):
    return _as_nn(x) * _as_nn(y)


def parse_number(token):
    """Parse a token like '2', '-I', '0.5I', '-1+4I', '1/3-2I'."""
    m = _TOKEN_RE.fullmatch(token.strip())
    if not m:
        raise ParseError("bad value token %r" % (token,))
    if m.group("ronly") is not None:
        return NeutroNumber(Fraction(m.group("ronly")))
    if m.group("ionly") is not None:
        coef = m.group("ionly")
        if coef in ("", "+"):
            b = Fraction(1)
        elif coef == "-":
            b = Fraction(-1)
        else:
            b = Fraction(coef)
        return NeutroNumber(0, b)
    a = Fraction(m.group("ra"))
    ib = m.group("ib")
    if ib == "+":
        b = Fraction(1)
    elif ib == "-":
        b = Fraction(-1)
    else:
        b = Fraction(ib)
    return NeutroNumber(a, b)


@dataclass(frozen=True)
class SplitPair:
    """Componentwise image of a+bI under the isomorphism x -> (a, a+b)."""

    first: Fraction
    second: Fraction


def split(x):
    x = _as_nn(x)
    return SplitPair(x.real, x.real + x.indet)


def unsplit(p):
    return NeutroNumber(p.first, p.second - p.first)


class NeutroMatrix:
    """Dense rectangular matrix of NeutroNumbers (at least 1x1)."""

    __slots__ = ("rows", "cols", "_rows")

    def __init__(self, rows):
        data = tuple(tuple(_as_nn(e) for e in row) for row in rows)
        if not data or not data[0]:
            raise ShapeError("a matrix needs at least one row and column")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise ShapeError("ragged matrix rows")
        self.rows = len(data)
        self.cols = width
        self._rows = data

    @classmethod
    def identity(cls, n):
        return cls(
            [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        )

    @classmethod
    def filled(cls, rows, cols, value=ZERO):
        return cls([[value] * cols for _ in range(rows)])

    def row(self, i):
        return self._rows[i]

    def entry(self, i, j):
        return self._rows[i][j]

    def __iter__(self):
        return iter(self._rows)

    def to_rows(self):
        return [list(r) for r in self._rows]

    def __eq__(self, other):
        if not isinstance(other, NeutroMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __mul__(self, other):
        return nm_mul(self, other)

    def transpose(self):
        return NeutroMatrix(list(zip(*self._rows)))

    def map_entries(self, fn):
        return NeutroMatrix([[fn(e) for e in row] for row in self._rows])

    def __str__(self):
        return render_matrix(self)

    def __repr__(self):
        return "NeutroMatrix(%dx%d)" % (self.rows, self.cols)


def nm_mul(A, B):
    if A.cols != B.rows:
        raise ShapeError(
            "cannot multiply %dx%d by %dx%d" % (A.rows, A.cols, B.rows, B.cols)
        )
    out = []
    for i in range(A.rows):
        arow = A.row(i)
        row = []
        for j in range(B.cols):
            acc = ZERO
            for k in range(A.cols):
                acc = acc + arow[k] * B.entry(k, j)
            row.append(acc)
        out.append(row)
    return NeutroMatrix(out)


def nm_transpose(A):
    return A.transpose()


def _gauss_rank(rows):
    m = [list(r) for r in rows]
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    rank = 0
    for col in range(n_cols):
        pivot = None
        for r in range(rank, n_rows):
            if m[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        for r in range(rank + 1, n_rows):
            if m[r][col] != 0:
                factor = m[r][col] / pv
                for c in range(col, n_cols):
                    m[r][c] -= factor * m[rank][c]
        rank += 1
        if rank == n_rows:
            break
    return rank


def nm_rank(A):
    """Ranks of the two split components plus invertibility over K(I)."""
    first = [[e.real for e in row] for row in A]
    second = [[e.real + e.indet for e in row] for row in A]
    r1 = _gauss_rank(first)
    r2 = _gauss_rank(second)
    invertible = A.rows == A.cols and r1 == A.rows and r2 == A.rows
    return r1, r2, invertible


def neutro_dimension(n, base):
    """Dimension of K(I)^n over K(I) ('neutrosophic-field') or K ('ordinary-field')."""
    if n < 1:
        raise ValueError("dimension asked for the zero module: n must be >= 1")
    if base == "neutrosophic-field":
        return n
    if base == "ordinary-field":
        return 2 * n
    raise ValueError("base must be 'ordinary-field' or 'neutrosophic-field'")


def parse_matrix(text):
    """Parse newline-separated rows of comma-separated value tokens."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append([parse_number(tok) for tok in line.split(",")])
        except ParseError as exc:
            raise ParseError("line %d: %s" % (lineno, exc)) from None
    if not rows:
        raise ParseError("empty matrix text")
    try:
        return NeutroMatrix(rows)
    except ShapeError as exc:
        raise ParseError(str(exc)) from None


def render_matrix(M):
    return "\n".join(", ".join(str(e) for e in row) for row in M)
