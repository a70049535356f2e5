"""Exact dense linear algebra over any field with ``+ - * /`` and ``== 0``.

Matrices are immutable tuples of row tuples.  Entries may be Fractions,
RationalFunctions, or nested towers thereof; pivoting is by "first nonzero",
which is sound over exact fields.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .exactmath import ExactMathError, Polynomial, poly_gcd


class SingularMatrixError(ExactMathError):
    pass


class Matrix:
    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Sequence[Sequence]):
        # bare ints are ambiguous scalars; promote them so 1/x stays exact
        rs = tuple(
            tuple(Fraction(e) if isinstance(e, int) else e for e in r) for r in rows
        )
        if rs and any(len(r) != len(rs[0]) for r in rs):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", rs)
        object.__setattr__(self, "nrows", len(rs))
        object.__setattr__(self, "ncols", len(rs[0]) if rs else 0)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @staticmethod
    def identity(n: int, one=Fraction(1), zero=Fraction(0)) -> "Matrix":
        return Matrix([[one if i == j else zero for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(n: int, m: int, zero=Fraction(0)) -> "Matrix":
        return Matrix([[zero] * m for _ in range(n)])

    @staticmethod
    def diagonal(entries: Sequence, zero=Fraction(0)) -> "Matrix":
        n = len(entries)
        return Matrix([[entries[i] if i == j else zero for j in range(n)] for i in range(n)])

    def __getitem__(self, key):
        i, j = key
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.nrows != other.nrows or self.ncols != other.ncols:
            return False
        return all(
            a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
        )

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Matrix({[list(r) for r in self.rows]!r})"

    def __add__(self, other: "Matrix"):
        return Matrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "Matrix"):
        return Matrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.rows])

    def __matmul__(self, other: "Matrix"):
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch in matrix product")
        bt = list(zip(*other.rows)) if other.rows else []
        out = []
        for row in self.rows:
            out.append(
                [sum_products(row, col) for col in bt]
            )
        return Matrix(out)

    def scale(self, c):
        return Matrix([[a * c for a in r] for r in self.rows])

    def map(self, fn: Callable):
        return Matrix([[fn(a) for a in r] for r in self.rows])

    def transpose(self):
        return Matrix(list(zip(*self.rows)) if self.rows else [])

    def is_zero(self) -> bool:
        return all(a == 0 for r in self.rows for a in r)

    def is_diagonal(self) -> bool:
        return all(
            self.rows[i][j] == 0
            for i in range(self.nrows)
            for j in range(self.ncols)
            if i != j
        )

    def diagonal_entries(self):
        return tuple(self.rows[i][i] for i in range(min(self.nrows, self.ncols)))

    def commutator(self, other: "Matrix", sign: int = 1) -> "Matrix":
        """A@B - sign*B@A; sign=-1 gives the anticommutator."""
        ab = self @ other
        ba = other @ self
        return ab - ba if sign == 1 else ab + ba

    def inverse(self) -> "Matrix":
        """Gauss-Jordan inverse; raises SingularMatrixError if not invertible."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        aug = [
            list(self.rows[i])
            + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
            for i in range(n)
        ]
        for col in range(n):
            piv = next((r for r in range(col, n) if not aug[r][col] == 0), None)
            if piv is None:
                raise SingularMatrixError("matrix is singular over its field")
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = 1 / aug[col][col]
            aug[col] = [a * inv for a in aug[col]]
            for r in range(n):
                if r == col:
                    continue
                f = aug[r][col]
                if f == 0:
                    continue
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
        return Matrix([row[n:] for row in aug])


def sum_products(xs, ys):
    acc = None
    for a, b in zip(xs, ys):
        term = a * b
        acc = term if acc is None else acc + term
    return Fraction(0) if acc is None else acc


def rref(rows: list[list]) -> tuple[list[list], list[int]]:
    """In-place-ish reduced row echelon form; returns (rows, pivot columns)."""
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if not rows[i][c] == 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [a * inv for a in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c] == 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(m: Matrix) -> int:
    return len(rref([list(r) for r in m.rows])[1])


def kernel_basis(m: Matrix, one=Fraction(1), zero=Fraction(0)) -> list[tuple]:
    """Basis of the right kernel of m, as coordinate tuples."""
    if m.nrows == 0:
        return [tuple(one if i == j else zero for i in range(m.ncols)) for j in range(m.ncols)]
    rows, pivots = rref([list(r) for r in m.rows])
    free = [c for c in range(m.ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [zero] * m.ncols
        vec[fc] = one
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][fc]
        basis.append(tuple(vec))
    return basis


def solve_linear_dependence(vectors: list[tuple]) -> tuple | None:
    """Coefficients expressing the last vector in terms of the earlier ones.

    Returns c with vectors[-1] = sum c[i]*vectors[i], or None if independent.
    """
    if not vectors:
        return None
    cols = vectors[:-1]
    target = vectors[-1]
    if not cols:
        return () if all(x == 0 for x in target) else None
    aug = Matrix([[cols[j][i] for j in range(len(cols))] + [target[i]] for i in range(len(target))])
    rows, pivots = rref([list(r) for r in aug.rows])
    ncols = len(cols)
    if ncols in pivots:
        return None
    sol = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        sol[pc] = rows[r][ncols]
    return tuple(sol)


def minimal_polynomial(m: Matrix) -> Polynomial:
    """Minimal polynomial of a square matrix over its exact field.

    Krylov approach on the flattened powers: the first linear dependence among
    I, M, M^2, ... gives the (monic) minimal polynomial.
    """
    n = m.nrows
    if n != m.ncols:
        raise ValueError("minimal polynomial of a non-square matrix")
    if n == 0:
        return Polynomial((1,))
    power = Matrix.identity(n)
    flat: list[tuple] = []
    while True:
        flat.append(tuple(a for row in power.rows for a in row))
        dep = solve_linear_dependence(flat)
        if dep is not None:
            return Polynomial(tuple(-c for c in dep) + (1,)).monic()
        power = power @ m
        if len(flat) > n + 1:
            raise ExactMathError("minimal polynomial search exceeded dimension bound")


def is_semisimple(m: Matrix) -> bool:
    """Diagonalizable over the algebraic closure: minimal polynomial squarefree."""
    p = minimal_polynomial(m)
    if p.degree <= 1:
        return True
    return poly_gcd(p, p.derivative()).degree <= 0
