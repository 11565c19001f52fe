"""Exact scalars and dense linear algebra over Q and GF(p).

Scalars are plain Python objects: ``fractions.Fraction`` for Q and ``int``
residues in ``range(p)`` for GF(p).  Arithmetic is done with the native
operators and pushed back into canonical form with ``field.reduce``; for Q
this is a no-op because ``Fraction`` normalizes eagerly.

Vectors are lists of scalars.  ``Matrix`` is a thin row-major wrapper and
``Subspace`` keeps its basis in reduced row-echelon form, so two subspaces
are equal exactly when their bases are.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError, FieldMismatchError, InputError

__all__ = [
    "Field",
    "QQ",
    "GF",
    "parse_field",
    "Matrix",
    "Subspace",
    "WedgeIndex",
    "rref",
    "rank",
    "solve",
    "kernel_basis",
    "span_insert",
    "annihilator",
    "wedge_coords",
]


class Field:
    """Common interface of QQ and GF(p)."""

    char = 0
    name = "?"
    zero = 0
    one = 1

    def __call__(self, value):
        raise NotImplementedError

    def reduce(self, value):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.reduce(a * self.inv(b))

    def is_element(self, value) -> bool:
        raise NotImplementedError

    def parse(self, text: str):
        return self(Fraction(text.strip()))

    def format(self, a) -> str:
        return str(a)

    def vector(self, values: Iterable) -> list:
        return [self(v) for v in values]

    def zeros(self, n: int) -> list:
        return [self.zero] * n

    def unit(self, n: int, i: int) -> list:
        v = [self.zero] * n
        v[i] = self.one
        return v

    def __repr__(self):
        return self.name


class RationalField(Field):
    name = "Q"
    char = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, value):
        if isinstance(value, str):
            return Fraction(value.strip())
        if isinstance(value, float):
            raise InputError("floating point scalars are not accepted")
        return Fraction(value)

    def reduce(self, value):
        return value if isinstance(value, Fraction) else Fraction(value)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def is_element(self, value) -> bool:
        return isinstance(value, (Fraction, int)) and not isinstance(value, bool)

    def format(self, a) -> str:
        a = Fraction(a)
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


class PrimeField(Field):
    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise InputError(f"GF({p}): modulus must be prime")
        self.p = p
        self.char = p
        self.name = f"GF({p})"
        self.zero = 0
        self.one = 1 % p

    def __call__(self, value):
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, float):
            raise InputError("floating point scalars are not accepted")
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"{value} has no image in {self.name}")
            return value.numerator * self.inv(value.denominator % self.p) % self.p
        return int(value) % self.p

    def reduce(self, value):
        return value % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        # three-argument pow runs the extended Euclidean algorithm
        return pow(a, -1, self.p)

    def is_element(self, value) -> bool:
        return isinstance(value, int) and not isinstance(value, bool) and 0 <= value < self.p

    def elements(self) -> range:
        return range(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()


@functools.lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(text: str) -> Field:
    """Accepts ``Q``, ``GF(p)``, ``GF:p`` and ``GFp``."""
    t = text.strip().replace(" ", "")
    if t in ("Q", "QQ"):
        return QQ
    for prefix in ("GF(", "GF:", "GF"):
        if t.startswith(prefix):
            body = t[len(prefix):].rstrip(")")
            try:
                return GF(int(body))
            except ValueError:
                break
    raise InputError(f"unknown field {text!r}")


def same_field(*fields: Field) -> Field:
    first = fields[0]
    for f in fields[1:]:
        if f != first:
            raise FieldMismatchError(f"field mismatch: {first} vs {f}")
    return first


# -- vectors ---------------------------------------------------------------

def dot(F: Field, u: Sequence, v: Sequence):
    return F.reduce(sum(a * b for a, b in zip(u, v) if a and b))


def axpy(F: Field, a, x: Sequence, y: Sequence) -> list:
    """Return a*x + y."""
    if a == 0:
        return list(y)
    return [F.reduce(a * xi + yi) for xi, yi in zip(x, y)]


def scale(F: Field, a, x: Sequence) -> list:
    return [F.reduce(a * xi) for xi in x]


def vsub(F: Field, x: Sequence, y: Sequence) -> list:
    return [F.reduce(a - b) for a, b in zip(x, y)]


def is_zero(v: Sequence) -> bool:
    return not any(v)


# -- matrices --------------------------------------------------------------

class Matrix:
    """Dense row-major matrix with a single field tag."""

    __slots__ = ("field", "nrows", "ncols", "data")

    def __init__(self, field: Field, rows: Iterable[Sequence], ncols: int | None = None):
        data = [list(r) for r in rows]
        if ncols is None:
            if not data:
                raise DimensionError("column count required for an empty matrix")
            ncols = len(data[0])
        for r in data:
            if len(r) != ncols:
                raise DimensionError("ragged matrix rows")
            for a in r:
                if not field.is_element(a):
                    raise FieldMismatchError(f"entry {a!r} is not an element of {field}")
        self.field = field
        self.nrows = len(data)
        self.ncols = ncols
        self.data = [[field.reduce(a) for a in r] for r in data]

    @classmethod
    def from_values(cls, field: Field, rows: Iterable[Sequence], ncols: int | None = None):
        """Coerce arbitrary ints/Fractions/strings into ``field`` first."""
        return cls(field, [[field(a) for a in r] for r in rows], ncols)

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int):
        return cls(field, [[field.zero] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field: Field, n: int):
        return cls(field, [field.unit(n, i) for i in range(n)], n)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def entries(self) -> list:
        return [a for r in self.data for a in r]

    def row(self, i: int) -> list:
        return list(self.data[i])

    def col(self, j: int) -> list:
        return [r[j] for r in self.data]

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, [self.col(j) for j in range(self.ncols)], self.nrows)

    def apply(self, v: Sequence) -> list:
        if len(v) != self.ncols:
            raise DimensionError(f"vector of length {len(v)} for {self.nrows}x{self.ncols} matrix")
        return [dot(self.field, r, v) for r in self.data]

    def __matmul__(self, other: "Matrix") -> "Matrix":
        F = same_field(self.field, other.field)
        if self.ncols != other.nrows:
            raise DimensionError("matrix product shape mismatch")
        cols = [other.col(j) for j in range(other.ncols)]
        return Matrix(F, [[dot(F, r, c) for c in cols] for r in self.data], other.ncols)

    def __add__(self, other: "Matrix") -> "Matrix":
        F = same_field(self.field, other.field)
        if self.shape != other.shape:
            raise DimensionError("matrix sum shape mismatch")
        return Matrix(F, [[F.reduce(a + b) for a, b in zip(r, s)] for r, s in zip(self.data, other.data)], self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scaled(-1)

    def scaled(self, a) -> "Matrix":
        F = self.field
        return Matrix(F, [scale(F, F(a), r) for r in self.data], self.ncols)

    def is_zero(self) -> bool:
        return all(is_zero(r) for r in self.data)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.shape == other.shape
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.field, self.shape, tuple(map(tuple, self.data))))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.format(a) for a in r) for r in self.data)
        return f"Matrix[{self.field}]({self.nrows}x{self.ncols}: {body})"


def _rref_rows(F: Field, rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    """In-place Gauss-Jordan elimination; returns nonzero rows and pivots."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F.inv(rows[r][c])
        prow = [F.reduce(a * inv) for a in rows[r]]
        rows[r] = prow
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f != 0:
                    rows[i] = [F.reduce(a - f * b) for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form (same shape, zero rows last) and pivot columns."""
    rows, pivots = _rref_rows(m.field, [list(r) for r in m.data], m.ncols)
    full = rows + [[m.field.zero] * m.ncols for _ in range(m.nrows - len(rows))]
    return Matrix(m.field, full, m.ncols), pivots


def solve(m: Matrix, b: Sequence) -> list | None:
    """One solution x of m x = b, or None when the system is inconsistent."""
    F = m.field
    if len(b) != m.nrows:
        raise DimensionError("right-hand side length does not match the row count")
    aug = [list(r) + [F(bi)] for r, bi in zip(m.data, b)]
    rows, pivots = _rref_rows(F, aug, m.ncols + 1)
    if pivots and pivots[-1] == m.ncols:
        return None
    x = [F.zero] * m.ncols
    for row, pc in zip(rows, pivots):
        x[pc] = row[-1]
    return x


def rank(m: Matrix) -> int:
    return len(_rref_rows(m.field, [list(r) for r in m.data], m.ncols)[1])


def kernel_basis(m: Matrix) -> "Subspace":
    """Null space ``{v : m v = 0}`` as a subspace of F^cols."""
    F = m.field
    rows, pivots = _rref_rows(F, [list(r) for r in m.data], m.ncols)
    pivset = set(pivots)
    vecs = []
    for f in range(m.ncols):
        if f in pivset:
            continue
        v = [F.zero] * m.ncols
        v[f] = F.one
        for row, pc in zip(rows, pivots):
            if row[f] != 0:
                v[pc] = F.reduce(-row[f])
        vecs.append(v)
    return Subspace(F, m.ncols, vecs)


# -- subspaces -------------------------------------------------------------

class Subspace:
    """Subspace of F^ambient with an RREF basis.

    Only ``insert`` mutates; every other method is a pure read.
    """

    __slots__ = ("field", "ambient", "basis", "pivots")

    def __init__(self, field: Field, ambient: int, vectors: Iterable[Sequence] = ()):
        self.field = field
        self.ambient = ambient
        self.basis: list[list] = []
        self.pivots: list[int] = []
        for v in vectors:
            self.insert(v)

    @classmethod
    def full(cls, field: Field, n: int) -> "Subspace":
        s = cls(field, n)
        s.basis = [field.unit(n, i) for i in range(n)]
        s.pivots = list(range(n))
        return s

    @property
    def dim(self) -> int:
        return len(self.basis)

    def copy(self) -> "Subspace":
        s = Subspace(self.field, self.ambient)
        s.basis = [list(b) for b in self.basis]
        s.pivots = list(self.pivots)
        return s

    def _check(self, v: Sequence):
        if len(v) != self.ambient:
            raise DimensionError(f"vector of length {len(v)} in ambient dimension {self.ambient}")

    def reduce(self, v: Sequence) -> list:
        """Residual of v after clearing every pivot column."""
        self._check(v)
        F = self.field
        r = [F.reduce(a) for a in v]
        for b, pc in zip(self.basis, self.pivots):
            f = r[pc]
            if f != 0:
                r = [F.reduce(x - f * y) for x, y in zip(r, b)]
        return r

    def __contains__(self, v) -> bool:
        return is_zero(self.reduce(v))

    def insert(self, v: Sequence) -> bool:
        """Replace self by span(self, v); report whether the dimension grew."""
        F = self.field
        r = self.reduce(v)
        lead = next((i for i, a in enumerate(r) if a != 0), None)
        if lead is None:
            return False
        inv = F.inv(r[lead])
        r = [F.reduce(a * inv) for a in r]
        for k, b in enumerate(self.basis):
            f = b[lead]
            if f != 0:
                self.basis[k] = [F.reduce(x - f * y) for x, y in zip(b, r)]
        pos = 0
        while pos < len(self.pivots) and self.pivots[pos] < lead:
            pos += 1
        self.basis.insert(pos, r)
        self.pivots.insert(pos, lead)
        return True

    def coordinates(self, v: Sequence) -> list:
        """Coefficients of v in the echelon basis; v must lie in the span."""
        if v not in self:
            raise InputError("vector is not in the subspace")
        return [self.field.reduce(v[pc]) for pc in self.pivots]

    def combination(self, coeffs: Sequence) -> list:
        F = self.field
        out = F.zeros(self.ambient)
        for a, b in zip(coeffs, self.basis):
            out = axpy(F, a, b, out)
        return out

    def annihilator(self) -> "Subspace":
        if not self.basis:
            return Subspace.full(self.field, self.ambient)
        return kernel_basis(Matrix(self.field, self.basis, self.ambient))

    def __add__(self, other: "Subspace") -> "Subspace":
        same_field(self.field, other.field)
        s = self.copy()
        for b in other.basis:
            s.insert(b)
        return s

    def intersection(self, other: "Subspace") -> "Subspace":
        same_field(self.field, other.field)
        # (A + B)^perp = A^perp cap B^perp, so A cap B = (A^perp + B^perp)^perp
        return (self.annihilator() + other.annihilator()).annihilator()

    def issubspace(self, other: "Subspace") -> bool:
        return all(b in other for b in self.basis)

    def as_matrix(self) -> Matrix:
        return Matrix(self.field, self.basis, self.ambient)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient == other.ambient
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.field, self.ambient, tuple(map(tuple, self.basis))))

    def __repr__(self):
        return f"Subspace[{self.field}](dim {self.dim} in {self.ambient})"


def span_insert(s: Subspace, v: Sequence) -> bool:
    return s.insert(v)


def annihilator(s: Subspace) -> Subspace:
    return s.annihilator()


def column_space(m: Matrix) -> Subspace:
    return Subspace(m.field, m.nrows, (m.col(j) for j in range(m.ncols)))


# -- wedge coordinates -----------------------------------------------------

class WedgeIndex:
    """Flat coordinates on the exterior square of an n-dimensional space.

    Pairs (i, j) with i < j are numbered lexicographically.
    """

    def __init__(self, n: int):
        self.n = n
        self.pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        self._flat = {pair: k for k, pair in enumerate(self.pairs)}

    @property
    def dim(self) -> int:
        return len(self.pairs)

    def flat(self, i: int, j: int) -> int:
        if not 0 <= i < j < self.n:
            raise DimensionError(f"wedge index needs 0 <= i < j < {self.n}, got ({i}, {j})")
        return self._flat[(i, j)]

    def pair(self, k: int) -> tuple[int, int]:
        return self.pairs[k]

    def __eq__(self, other):
        return isinstance(other, WedgeIndex) and other.n == self.n

    def __hash__(self):
        return hash(("wedge", self.n))


@functools.lru_cache(maxsize=None)
def wedge_index(n: int) -> WedgeIndex:
    return WedgeIndex(n)


def wedge_coords(x: Sequence, y: Sequence, w: WedgeIndex, field: Field = QQ) -> list:
    """Coordinates of x ^ y: entry flat(i, j) is x_i y_j - x_j y_i."""
    if len(x) != w.n or len(y) != w.n:
        raise DimensionError(f"wedge of vectors of length {len(x)}, {len(y)} with n = {w.n}")
    return [field.reduce(x[i] * y[j] - x[j] * y[i]) for i, j in w.pairs]
