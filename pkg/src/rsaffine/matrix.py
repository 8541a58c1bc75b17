"""Dense matrices over the exact rational-function field.

Small and exact: module dimensions in scope stay below ten, so plain
row-major products with RatFunc entries are the right tool.  Matrices are
immutable after construction.
"""

from __future__ import annotations

from .errors import DivisionByZero
from .field import ONE, ZERO, RatFunc


class Matrix:
    __slots__ = ("rows", "n", "m")

    def __init__(self, rows):
        rows = tuple(tuple(RatFunc._coerce(x) for x in row) for row in rows)
        if not rows:
            raise ValueError("empty matrix")
        m = len(rows[0])
        if any(len(r) != m for r in rows):
            raise ValueError("ragged rows")
        self.rows = rows
        self.n = len(rows)
        self.m = m

    @classmethod
    def zeros(cls, n, m=None):
        m = n if m is None else m
        return cls([[ZERO] * m for _ in range(n)])

    @classmethod
    def identity(cls, n):
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries):
        entries = list(entries)
        n = len(entries)
        return cls([[entries[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other):
        return Matrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __sub__(self, other):
        return Matrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __neg__(self):
        return Matrix([[-a for a in row] for row in self.rows])

    def scale(self, c) -> "Matrix":
        c = RatFunc._coerce(c)
        return Matrix([[a * c for a in row] for row in self.rows])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self @ other
        return self.scale(other)

    __rmul__ = scale

    def __matmul__(self, other) -> "Matrix":
        if self.m != other.n:
            raise ValueError("dimension mismatch")
        bt = list(zip(*other.rows))
        out = []
        for row in self.rows:
            new = []
            for col in bt:
                acc = ZERO
                for a, b in zip(row, col):
                    if not (a.is_zero() or b.is_zero()):
                        acc = acc + a * b
                new.append(acc)
            out.append(new)
        return Matrix(out)

    def __pow__(self, k: int) -> "Matrix":
        if k < 0:
            return self.inverse() ** (-k)
        out = Matrix.identity(self.n)
        for _ in range(k):
            out = out @ self
        return out

    def apply(self, vec):
        """Matrix action on a column vector (list of RatFunc)."""
        if len(vec) != self.m:
            raise ValueError("dimension mismatch")
        out = []
        for row in self.rows:
            acc = ZERO
            for a, v in zip(row, vec):
                if not (a.is_zero() or v.is_zero()):
                    acc = acc + a * v
            out.append(acc)
        return out

    def is_zero(self) -> bool:
        return all(a.is_zero() for row in self.rows for a in row)

    def is_identity(self) -> bool:
        return self == Matrix.identity(self.n)

    def is_diagonal(self) -> bool:
        return all(
            a.is_zero() for i, row in enumerate(self.rows) for j, a in enumerate(row) if i != j
        )

    def diagonal_entries(self):
        return [self.rows[i][i] for i in range(min(self.n, self.m))]

    def kron(self, other) -> "Matrix":
        """Kronecker product (left factor acts on the outer index)."""
        out = []
        for ra in self.rows:
            for rb in other.rows:
                out.append([a * b for a in ra for b in rb])
        return Matrix(out)

    def inverse(self) -> "Matrix":
        if self.n != self.m:
            raise ValueError("inverse of a non-square matrix")
        n = self.n
        aug = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
            if piv is None:
                raise DivisionByZero("singular matrix")
            aug[col], aug[piv] = aug[piv], aug[col]
            pc = aug[col][col].inv()
            aug[col] = [x * pc for x in aug[col]]
            for r in range(n):
                if r != col and not aug[r][col].is_zero():
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return Matrix([row[n:] for row in aug])

    def __repr__(self):
        body = "; ".join(", ".join(str(a) for a in row) for row in self.rows)
        return f"Matrix[{body}]"


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


def rref(vectors):
    """Reduced row echelon basis of the span of the given vectors.

    Returns (pivot_columns, rows); pivoting picks the first nonzero column,
    so the basis order is deterministic.
    """
    rows = []
    pivots = []
    for vec in vectors:
        v = list(vec)
        for p, row in zip(pivots, rows):
            if not v[p].is_zero():
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        piv = next((j for j, x in enumerate(v) if not x.is_zero()), None)
        if piv is None:
            continue
        inv = v[piv].inv()
        v = [x * inv for x in v]
        # back-substitute into the existing rows and keep sorted order
        rows = [[x - row[piv] * y for x, y in zip(row, v)] if not row[piv].is_zero() else row for row in rows]
        idx = next((k for k, p in enumerate(pivots) if p > piv), len(pivots))
        pivots.insert(idx, piv)
        rows.insert(idx, v)
    return pivots, rows
