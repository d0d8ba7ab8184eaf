"""
Dense exact matrices over Laurent polynomials.

Covers the symmetry operations used by the braid families (the anti-transpose `s` and the
central symmetry `sharp`), Kronecker products, the q-exponential of nilpotent matrices,
minors and determinants.

Numeric matrices (all entries rational constants) are handed to sympy's `DomainMatrix` for
fraction-free determinants, characteristic polynomials and nullspaces; polynomial matrices use
a memoised Laplace expansion bounded by `max_symbolic_size`.

"""
from collections import Counter
from functools import reduce

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from microcosm_braidreps.errors import (
    DivisionFailureError,
    NotInvertibleError,
    NotNilpotentError,
    RingError,
    ShapeError,
    SizeLimitError,
)
from microcosm_braidreps.ring import (
    ONE,
    PAREN,
    VARIABLES,
    ZERO,
    LaurentPolynomial,
    q_factorial,
    scalar,
)


DEFAULT_MAX_SYMBOLIC_SIZE = 8


class IndexSet(tuple):
    """
    Strictly increasing 0-based row or column selector.

    """
    def __new__(cls, indices, bound=None):
        indices = tuple(int(index) for index in indices)
        if any(left >= right for left, right in zip(indices, indices[1:])):
            raise ShapeError("index set must be strictly increasing: {}".format(indices))
        if indices and indices[0] < 0:
            raise ShapeError("index set must be non-negative: {}".format(indices))
        if bound is not None and indices and indices[-1] >= bound:
            raise ShapeError("index set {} exceeds dimension {}".format(indices, bound))
        return super(IndexSet, cls).__new__(cls, indices)


class RingMatrix:
    """
    An immutable rows x cols matrix of `LaurentPolynomial` entries.

    """
    __slots__ = ("rows", "cols", "_entries", "_hash")

    def __init__(self, entries):
        entries = tuple(
            tuple(scalar(value) for value in row)
            for row in entries
        )
        if not entries or not entries[0]:
            raise ShapeError("matrices must have at least one row and one column")
        if any(len(row) != len(entries[0]) for row in entries):
            raise ShapeError("ragged matrix rows")
        self.rows = len(entries)
        self.cols = len(entries[0])
        self._entries = entries
        self._hash = None

    @classmethod
    def from_function(cls, rows, cols, function):
        return cls([
            [function(i, j) for j in range(cols)]
            for i in range(rows)
        ])

    @classmethod
    def zeros(cls, rows, cols=None):
        return cls.from_function(rows, rows if cols is None else cols, lambda i, j: ZERO)

    @classmethod
    def identity(cls, size):
        return cls.from_function(size, size, lambda i, j: ONE if i == j else ZERO)

    @classmethod
    def diagonal(cls, values):
        values = [scalar(value) for value in values]
        return cls.from_function(len(values), len(values), lambda i, j: values[i] if i == j else ZERO)

    @classmethod
    def superdiagonal(cls, values):
        """
        Square matrix of size len(values) + 1 with `values` at positions (k, k + 1).

        """
        values = [scalar(value) for value in values]
        return cls.from_function(
            len(values) + 1,
            len(values) + 1,
            lambda i, j: values[i] if j == i + 1 else ZERO,
        )

    @classmethod
    def subdiagonal(cls, values):
        values = [scalar(value) for value in values]
        return cls.from_function(
            len(values) + 1,
            len(values) + 1,
            lambda i, j: values[j] if i == j + 1 else ZERO,
        )

    @classmethod
    def unit(cls, size, row, col):
        """
        The matrix unit with a single 1 at (row, col).

        """
        return cls.from_function(size, size, lambda i, j: ONE if (i, j) == (row, col) else ZERO)

    @classmethod
    def from_json(cls, data):
        if list(data.get("vars", VARIABLES)) != list(VARIABLES):
            raise RingError("unsupported variables: {}".format(data.get("vars")))
        matrix = cls([
            [LaurentPolynomial.from_json(terms) for terms in row]
            for row in data["entries"]
        ])
        if (matrix.rows, matrix.cols) != (data["rows"], data["cols"]):
            raise ShapeError("declared shape does not match entries")
        return matrix

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def is_square(self):
        return self.rows == self.cols

    @property
    def entries(self):
        return self._entries

    def __getitem__(self, position):
        row, col = position
        return self._entries[row][col]

    def row(self, index):
        return self._entries[index]

    def column(self, index):
        return tuple(row[index] for row in self._entries)

    def map(self, function):
        return RingMatrix([
            [function(value) for value in row]
            for row in self._entries
        ])

    def substitute(self, **values):
        return self.map(lambda value: value.substitute(**values))

    def __add__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        _require_same_shape(self, other, "add")
        return RingMatrix([
            [left + right for left, right in zip(left_row, right_row)]
            for left_row, right_row in zip(self._entries, other._entries)
        ])

    def __sub__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return self.map(lambda value: -value)

    def __mul__(self, other):
        if isinstance(other, RingMatrix):
            return self.matmul(other)
        other = scalar(other)
        return self.map(lambda value: value * other)

    def __rmul__(self, other):
        other = scalar(other)
        return self.map(lambda value: other * value)

    def matmul(self, other):
        if self.cols != other.rows:
            raise ShapeError("cannot multiply {} by {}".format(self.shape, other.shape))
        columns = [other.column(j) for j in range(other.cols)]
        result = []
        for row in self._entries:
            result_row = []
            for column in columns:
                total = ZERO
                for left, right in zip(row, column):
                    if left and right:
                        total = total + left * right
                result_row.append(total)
            result.append(result_row)
        return RingMatrix(result)

    def __pow__(self, power):
        _require_square(self, "power")
        power = int(power)
        if power < 0:
            return inverse(self) ** (-power)
        result = RingMatrix.identity(self.rows)
        base = self
        while power:
            if power & 1:
                result = result.matmul(base)
            base = base.matmul(base)
            power >>= 1
        return result

    def apply(self, vector):
        """
        Multiply a column vector given as a sequence of scalars.

        """
        if len(vector) != self.cols:
            raise ShapeError("vector of length {} does not fit {}".format(len(vector), self.shape))
        vector = [scalar(value) for value in vector]
        return [
            sum((left * right for left, right in zip(row, vector) if left and right), ZERO)
            for row in self._entries
        ]

    def transpose(self):
        return RingMatrix.from_function(self.cols, self.rows, lambda i, j: self._entries[j][i])

    @property
    def is_zero(self):
        return all(value.is_zero for row in self._entries for value in row)

    @property
    def is_identity(self):
        return self == RingMatrix.identity(self.rows) if self.is_square else False

    @property
    def is_numeric(self):
        return all(value.is_constant for row in self._entries for value in row)

    def is_upper_triangular(self, strict=False):
        return all(
            self._entries[i][j].is_zero
            for i in range(self.rows)
            for j in range(self.cols)
            if j < i or (strict and j == i)
        )

    def is_lower_triangular(self, strict=False):
        return self.transpose().is_upper_triangular(strict=strict)

    @property
    def is_diagonal(self):
        return self.is_upper_triangular() and self.is_lower_triangular()

    def diagonal_entries(self):
        return tuple(self._entries[k][k] for k in range(min(self.rows, self.cols)))

    def trace(self):
        _require_square(self, "trace")
        return sum(self.diagonal_entries(), ZERO)

    def submatrix(self, rows, cols):
        return RingMatrix([
            [self._entries[i][j] for j in cols]
            for i in rows
        ])

    def to_rational_rows(self):
        if not self.is_numeric:
            raise RingError("matrix has non-constant entries; substitute numeric values first")
        return [
            [value.constant_value() for value in row]
            for row in self._entries
        ]

    def to_domain_matrix(self):
        """
        The same matrix as a sympy `DomainMatrix` over QQ; entries must be rational.

        """
        return DomainMatrix(self.to_rational_rows(), self.shape, QQ)

    def to_json(self):
        return dict(
            rows=self.rows,
            cols=self.cols,
            vars=list(VARIABLES),
            entries=[
                [value.to_json() for value in row]
                for row in self._entries
            ],
        )

    def to_text(self):
        return "\n".join(
            "[" + ", ".join(value.to_text() for value in row) + "]"
            for row in self._entries
        )

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self._entries == other._entries

    def __ne__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self._entries != other._entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._entries)
        return self._hash

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return "RingMatrix({}x{})".format(self.rows, self.cols)


def _require_square(matrix, operation):
    if not matrix.is_square:
        raise ShapeError("{} needs a square matrix, got {}".format(operation, matrix.shape))


def _require_same_shape(left, right, operation):
    if left.shape != right.shape:
        raise ShapeError("{} needs equal shapes, got {} and {}".format(operation, left.shape, right.shape))


def mul(*matrices):
    return reduce(lambda left, right: left.matmul(right), matrices)


def add(left, right):
    return left + right


def scale(value, matrix):
    return scalar(value) * matrix


def transpose(matrix):
    return matrix.transpose()


def commutator(left, right):
    return left.matmul(right) - right.matmul(left)


def anti_transpose(matrix):
    """
    Reflection through the anti-diagonal: result[i][j] = A[n - j][n - i].

    """
    _require_square(matrix, "anti_transpose")
    last = matrix.rows - 1
    return RingMatrix.from_function(matrix.rows, matrix.cols, lambda i, j: matrix[last - j, last - i])


def sharp(matrix):
    """
    Central symmetry (rotation by 180 degrees): result[i][j] = A[n - i][n - j].

    """
    _require_square(matrix, "sharp")
    last = matrix.rows - 1
    return RingMatrix.from_function(matrix.rows, matrix.cols, lambda i, j: matrix[last - i, last - j])


def kron(left, right):
    """
    Kronecker product with row-major blocks: entry (i*rb + k, j*cb + l) = A[i][j] * B[k][l].

    """
    return RingMatrix.from_function(
        left.rows * right.rows,
        left.cols * right.cols,
        lambda i, j: left[i // right.rows, j // right.cols] * right[i % right.rows, j % right.cols],
    )


def direct_sum(*blocks):
    size = sum(block.rows for block in blocks)
    width = sum(block.cols for block in blocks)
    entries = [[ZERO] * width for _ in range(size)]
    row_offset = col_offset = 0
    for block in blocks:
        for i in range(block.rows):
            for j in range(block.cols):
                entries[row_offset + i][col_offset + j] = block[i, j]
        row_offset += block.rows
        col_offset += block.cols
    return RingMatrix(entries)


def q_exp_nilpotent(matrix, q=1):
    """
    The q-exponential sum of X^m / (m)!_q over m, which terminates for nilpotent X.

    :raises `NotNilpotentError` if X^d != 0 for the size d of X
    :raises `DivisionFailureError` if some (m)!_q does not divide X^m exactly

    """
    _require_square(matrix, "q_exp_nilpotent")
    q = scalar(q)
    result = RingMatrix.identity(matrix.rows)
    power = result
    for m in range(1, matrix.rows + 1):
        power = power.matmul(matrix)
        if power.is_zero:
            return result
        if m == matrix.rows:
            break
        factorial = q_factorial(m, PAREN, q)
        try:
            result = result + power.map(lambda value: value.exact_divide(factorial))
        except RingError as error:
            raise DivisionFailureError(
                "({})!_q = {} does not divide X^{}: {}".format(m, factorial, m, error),
            )
    raise NotNilpotentError("matrix of size {} has a nonzero {}-th power".format(matrix.rows, matrix.rows))


def _rational_determinant(matrix):
    rows = matrix.to_rational_rows()
    multiplier = QQ(1)
    integer_rows = []
    for row in rows:
        common = reduce(ZZ.lcm, (QQ.denom(value) for value in row), ZZ(1))
        multiplier *= QQ(int(common))
        integer_rows.append([ZZ(int(QQ.numer(value * common))) for value in row])
    determinant = DomainMatrix(integer_rows, matrix.shape, ZZ).det()
    return QQ(int(determinant)) / multiplier


def _symbolic_determinant(matrix):
    size = matrix.rows
    memo = {}

    def expand(row, columns):
        # columns: tuple of the still unused column indices, expanding from `row` downwards
        if row == size:
            return ONE
        if columns in memo:
            return memo[columns]
        total = ZERO
        for position, column in enumerate(columns):
            entry = matrix[row, column]
            if entry.is_zero:
                continue
            rest = expand(row + 1, columns[:position] + columns[position + 1:])
            if rest.is_zero:
                continue
            term = entry * rest
            total = total - term if position % 2 else total + term
        memo[columns] = total
        return total

    return expand(0, tuple(range(size)))


def determinant(matrix, max_symbolic_size=DEFAULT_MAX_SYMBOLIC_SIZE):
    """
    Exact determinant.

    Rational matrices use a fraction-free elimination of any size; polynomial matrices use
    Laplace expansion and are refused beyond `max_symbolic_size`.

    """
    _require_square(matrix, "determinant")
    if matrix.is_numeric:
        return LaurentPolynomial.constant(_rational_determinant(matrix))
    if matrix.is_upper_triangular() or matrix.is_lower_triangular():
        return reduce(lambda left, right: left * right, matrix.diagonal_entries(), ONE)
    if matrix.rows > max_symbolic_size:
        raise SizeLimitError(
            "symbolic determinant of size {} exceeds the limit {}".format(matrix.rows, max_symbolic_size),
        )
    return _symbolic_determinant(matrix)


def minor(matrix, rows, cols, max_symbolic_size=DEFAULT_MAX_SYMBOLIC_SIZE):
    rows = IndexSet(rows, matrix.rows)
    cols = IndexSet(cols, matrix.cols)
    if len(rows) != len(cols) or not rows:
        raise ShapeError("minor needs equally sized non-empty index sets, got {} and {}".format(rows, cols))
    return determinant(matrix.submatrix(rows, cols), max_symbolic_size)


def cofactor(matrix, rows, cols, max_symbolic_size=DEFAULT_MAX_SYMBOLIC_SIZE):
    sign = -1 if (sum(rows) + sum(cols)) % 2 else 1
    return sign * minor(matrix, rows, cols, max_symbolic_size)


def _triangular_inverse(matrix):
    size = matrix.rows
    upper = matrix.is_upper_triangular()
    inverses = [value.inverse() for value in matrix.diagonal_entries()]
    entries = [[ZERO] * size for _ in range(size)]
    order = range(size - 1, -1, -1) if upper else range(size)
    for column in range(size):
        for i in order:
            # solve row i of A X = e_column using the already known rows
            total = ONE if i == column else ZERO
            others = range(i + 1, size) if upper else range(i)
            for k in others:
                if matrix[i, k] and entries[k][column]:
                    total = total - matrix[i, k] * entries[k][column]
            entries[i][column] = total * inverses[i]
    return RingMatrix(entries)


def _faddeev_leverrier(matrix):
    """
    Characteristic coefficients c_0..c_n and the adjugate-generating matrix M_n.

    Only divides by the integers 1..n.

    """
    size = matrix.rows
    identity = RingMatrix.identity(size)
    coefficients = [ZERO] * (size + 1)
    coefficients[size] = ONE
    accumulator = RingMatrix.zeros(size)
    for k in range(1, size + 1):
        accumulator = matrix.matmul(accumulator) + coefficients[size - k + 1] * identity
        coefficients[size - k] = -matrix.matmul(accumulator).trace() * LaurentPolynomial.constant(QQ(1, k))
    return coefficients, accumulator


def inverse(matrix, max_symbolic_size=DEFAULT_MAX_SYMBOLIC_SIZE):
    """
    Exact inverse over the Laurent ring.

    :raises `NotInvertibleError` if the determinant is not a unit

    """
    _require_square(matrix, "inverse")
    triangular = matrix.is_upper_triangular() or matrix.is_lower_triangular()
    if triangular and all(value.is_unit for value in matrix.diagonal_entries()):
        return _triangular_inverse(matrix)
    if matrix.rows > max_symbolic_size and not matrix.is_numeric:
        raise SizeLimitError(
            "symbolic inverse of size {} exceeds the limit {}".format(matrix.rows, max_symbolic_size),
        )
    coefficients, accumulator = _faddeev_leverrier(matrix)
    constant_term = coefficients[0]
    if not constant_term.is_unit:
        determinant_value = constant_term if matrix.rows % 2 == 0 else -constant_term
        raise NotInvertibleError(determinant_value)
    return -(constant_term.inverse() * accumulator)


def char_poly(matrix):
    """
    Characteristic polynomial det(xI - A) of a rational matrix, leading coefficient first.

    """
    _require_square(matrix, "char_poly")
    return tuple(matrix.to_domain_matrix().charpoly())


def spectrum_multiset(matrix):
    """
    The diagonal of a triangular matrix as a multiset of scalars.

    """
    _require_square(matrix, "spectrum_multiset")
    if not (matrix.is_upper_triangular() or matrix.is_lower_triangular()):
        raise ShapeError("spectrum_multiset needs a triangular matrix")
    return Counter(matrix.diagonal_entries())


def nullspace(rows, width):
    """
    Basis of the rational nullspace of a list of rational rows, each basis vector a list.

    """
    if not rows:
        return [
            [QQ(1) if i == j else QQ(0) for j in range(width)]
            for i in range(width)
        ]
    basis = DomainMatrix(rows, (len(rows), width), QQ).nullspace()
    return [
        [QQ.from_sympy(value) for value in vector]
        for vector in basis.to_Matrix().tolist()
        if any(vector)
    ]
