"""Exact rational vectors and symmetric bilinear forms.

Everything downstream (intersection matrices, discrepancy solves, Zariski
decompositions, cone membership) runs on this layer, so it is deliberately
small and completely exact: coefficients are ``fractions.Fraction`` with
arbitrary-precision integers underneath, and no float ever appears.

Rationals serialize as ``"p/q"`` in lowest terms with positive denominator,
or ``"p"`` when the denominator is 1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

from .errors import MalformedInputError, SingularSystemError

RationalLike = Union[Fraction, int, str]


def rat(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):  # bool is an int subclass; reject it
        raise MalformedInputError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise MalformedInputError(f"not a rational: {value!r}") from exc
    raise MalformedInputError(f"not a rational: {value!r}")


def rat_str(value: Fraction) -> str:
    """Render ``p/q`` in lowest terms, or plain ``p`` for integers."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class QVector(tuple):
    """Immutable vector of exact rationals.

    Supports componentwise addition, subtraction, negation, scalar
    multiplication and componentwise order comparisons. Length is fixed at
    construction; mixing lengths raises.
    """

    def __new__(cls, entries: Iterable[RationalLike]) -> "QVector":
        return super().__new__(cls, (rat(e) for e in entries))

    @classmethod
    def zero(cls, n: int) -> "QVector":
        return cls([0] * n)

    @classmethod
    def unit(cls, n: int, i: int) -> "QVector":
        if not 0 <= i < n:
            raise MalformedInputError(f"unit index {i} out of range for length {n}")
        return cls([1 if k == i else 0 for k in range(n)])

    def _check_len(self, other: Sequence) -> None:
        if len(self) != len(other):
            raise MalformedInputError(
                f"vector length mismatch: {len(self)} vs {len(other)}"
            )

    def __add__(self, other: "QVector") -> "QVector":
        self._check_len(other)
        return QVector(a + b for a, b in zip(self, other))

    def __sub__(self, other: "QVector") -> "QVector":
        self._check_len(other)
        return QVector(a - b for a, b in zip(self, other))

    def __neg__(self) -> "QVector":
        return QVector(-a for a in self)

    def scale(self, factor: RationalLike) -> "QVector":
        f = rat(factor)
        return QVector(f * a for a in self)

    __mul__ = scale

    def __rmul__(self, factor: RationalLike) -> "QVector":
        return self.scale(factor)

    def dot(self, other: "QVector") -> Fraction:
        self._check_len(other)
        return sum((a * b for a, b in zip(self, other)), Fraction(0))

    def leq(self, other: "QVector") -> bool:
        """Componentwise ``self <= other``."""
        self._check_len(other)
        return all(a <= b for a, b in zip(self, other))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self)

    def is_nonnegative(self) -> bool:
        return all(a >= 0 for a in self)

    def to_doc(self) -> list[str]:
        return [rat_str(a) for a in self]

    def __repr__(self) -> str:
        return "QVector(" + ", ".join(rat_str(a) for a in self) + ")"


class SymForm:
    """Symmetric bilinear form given by its exact Gram matrix.

    The matrix must be square and symmetric; anything else is rejected at
    construction. Solving is exact Gaussian elimination with partial
    (nonzero) pivoting, which is plenty for the ranks seen here.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[RationalLike]]) -> None:
        mat = tuple(QVector(row) for row in rows)
        n = len(mat)
        if n == 0:
            raise MalformedInputError("form must have at least one row")
        for row in mat:
            if len(row) != n:
                raise MalformedInputError("form matrix is not square")
        for i in range(n):
            for j in range(i + 1, n):
                if mat[i][j] != mat[j][i]:
                    raise MalformedInputError(
                        f"form matrix is not symmetric at ({i}, {j})"
                    )
        object.__setattr__(self, "rows", mat)

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("SymForm is immutable")

    @property
    def dim(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i][j]

    def apply(self, v: QVector) -> QVector:
        """Matrix-vector product ``M v``."""
        if len(v) != self.dim:
            raise MalformedInputError(
                f"vector length {len(v)} does not match form dimension {self.dim}"
            )
        return QVector(row.dot(v) for row in self.rows)

    def pair(self, a: QVector, b: QVector) -> Fraction:
        """Evaluate the form: ``a . M . b``."""
        return a.dot(self.apply(b))

    def solve(self, rhs: QVector) -> QVector:
        """Solve ``M x = rhs`` exactly; raises SingularSystemError if singular."""
        n = self.dim
        if len(rhs) != n:
            raise MalformedInputError(
                f"rhs length {len(rhs)} does not match form dimension {n}"
            )
        aug = [list(row) + [rhs[i]] for i, row in enumerate(self.rows)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if pivot is None:
                raise SingularSystemError("form matrix is singular")
            if pivot != col:
                aug[col], aug[pivot] = aug[pivot], aug[col]
            pv = aug[col][col]
            for r in range(col + 1, n):
                if aug[r][col] == 0:
                    continue
                f = aug[r][col] / pv
                for c in range(col, n + 1):
                    aug[r][c] -= f * aug[col][c]
        x = [Fraction(0)] * n
        for r in range(n - 1, -1, -1):
            acc = aug[r][n] - sum(
                (aug[r][c] * x[c] for c in range(r + 1, n)), Fraction(0)
            )
            x[r] = acc / aug[r][r]
        return QVector(x)

    def det(self) -> Fraction:
        return self.leading_principal_minors()[-1]

    def leading_principal_minors(self) -> tuple[Fraction, ...]:
        """Determinants of the leading k x k blocks, k = 1..dim, all exact."""
        return tuple(
            _det([list(self.rows[i][: k + 1]) for i in range(k + 1)])
            for k in range(self.dim)
        )

    def is_negative_definite(self) -> bool:
        """Leading-principal-minor test: sign(m_k) = (-1)^k with m_k != 0."""
        sign = 1
        for m in self.leading_principal_minors():
            sign = -sign
            if m == 0 or (m > 0) != (sign > 0):
                return False
        return True

    def restrict(self, indices: Sequence[int]) -> "SymForm":
        """Principal submatrix on the given index list (order preserved)."""
        return SymForm([[self.rows[i][j] for j in indices] for i in indices])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SymForm) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __iter__(self) -> Iterator[QVector]:
        return iter(self.rows)

    def __repr__(self) -> str:
        return "SymForm(" + "; ".join(str(list(map(rat_str, r))) for r in self.rows) + ")"

    def to_doc(self) -> list[list[str]]:
        return [row.to_doc() for row in self.rows]


def _det(mat: list[list[Fraction]]) -> Fraction:
    """Exact determinant by elimination with row swaps."""
    n = len(mat)
    d = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if mat[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            d = -d
        pv = mat[col][col]
        d *= pv
        for r in range(col + 1, n):
            if mat[r][col] == 0:
                continue
            f = mat[r][col] / pv
            for c in range(col, n):
                mat[r][c] -= f * mat[col][c]
    return d
