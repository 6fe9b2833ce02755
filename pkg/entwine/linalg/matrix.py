from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from entwine.errors import ShapeError


def _normalize(field, array):
    if field.is_prime_field:
        return array % field.modulus
    return array


class Matrix:
    """
    Dense matrix over an exact ``FieldSpec``, stored as a 2-D numpy array of
    dtype ``object`` (``Fraction`` or ``int`` entries).

    Linear maps V -> W are (dim W x dim V) matrices acting on column vectors.
    A tensor basis vector e_i (x) e_j has index ``i * dim(second) + j``.
    """
    __slots__ = ('field', 'data')

    def __init__(self, field, data):
        self.field = field
        self.data = data

    # ------------------------------------------------------------------
    # Construction

    @classmethod
    def zeros(cls, field, rows, cols):
        data = np.empty((rows, cols), dtype=object)
        data.fill(field.zero)
        return cls(field, data)

    @classmethod
    def identity(cls, field, n):
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.data[i, i] = field.one
        return m

    @classmethod
    def from_rows(cls, field, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        m = cls.zeros(field, len(rows), cols)
        for i, r in enumerate(rows):
            if len(r) != cols:
                raise ShapeError(f'row {i} has {len(r)} entries, expected {cols}')
            for j, v in enumerate(r):
                m.data[i, j] = field(v)
        return m

    @classmethod
    def column(cls, field, values):
        values = list(values)
        m = cls.zeros(field, len(values), 1)
        for i, v in enumerate(values):
            m.data[i, 0] = field(v)
        return m

    @classmethod
    def unit(cls, field, n, j):
        m = cls.zeros(field, n, 1)
        m.data[j, 0] = field.one
        return m

    # ------------------------------------------------------------------
    # Shape and access

    @property
    def rows(self):
        return self.data.shape[0]

    @property
    def cols(self):
        return self.data.shape[1]

    @property
    def shape(self):
        return self.data.shape

    def entry(self, i, j):
        return self.data[i, j]

    def set(self, i, j, value):
        self.data[i, j] = self.field(value)

    def col(self, j):
        return Matrix(self.field, self.data[:, j:j + 1].copy())

    def take_columns(self, indices):
        indices = list(indices)
        if not indices:
            return Matrix.zeros(self.field, self.rows, 0)
        return Matrix(self.field, self.data[:, indices].copy())

    def take_rows(self, indices):
        indices = list(indices)
        if not indices:
            return Matrix.zeros(self.field, 0, self.cols)
        return Matrix(self.field, self.data[indices, :].copy())

    def block(self, r0, r1, c0, c1):
        return Matrix(self.field, self.data[r0:r1, c0:c1].copy())

    def columns(self):
        return [self.col(j) for j in range(self.cols)]

    def flatten(self):
        """Row-major coordinates as a column vector"""
        return Matrix(self.field, self.data.reshape(-1, 1).copy())

    def reshape(self, rows, cols):
        return Matrix(self.field, self.data.reshape(rows, cols).copy())

    def copy(self):
        return Matrix(self.field, self.data.copy())

    @property
    def T(self):
        return Matrix(self.field, self.data.T.copy())

    # ------------------------------------------------------------------
    # Arithmetic

    def _check(self, other):
        if not isinstance(other, Matrix):
            raise TypeError(f'expected a Matrix, got {type(other).__name__}')
        if other.field != self.field:
            raise ShapeError(f'field mismatch: {self.field} vs {other.field}')

    def __matmul__(self, other):
        self._check(other)
        if self.cols != other.rows:
            raise ShapeError(f'cannot compose {self.shape} with {other.shape}')
        if 0 in (self.rows, self.cols, other.cols):
            return Matrix.zeros(self.field, self.rows, other.cols)
        return Matrix(self.field, _normalize(self.field, self.data.dot(other.data)))

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise ShapeError(f'cannot add {self.shape} and {other.shape}')
        return Matrix(self.field, _normalize(self.field, self.data + other.data))

    def __sub__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise ShapeError(f'cannot subtract {other.shape} from {self.shape}')
        return Matrix(self.field, _normalize(self.field, self.data - other.data))

    def __neg__(self):
        return Matrix(self.field, _normalize(self.field, -self.data))

    def scale(self, s):
        s = self.field(s)
        return Matrix(self.field, _normalize(self.field, self.data * s))

    def __eq__(self, other):
        if not isinstance(other, Matrix) or other.shape != self.shape:
            return False
        if self.data.size == 0:
            return True
        return bool((self.data == other.data).all())

    __hash__ = None

    def first_difference(self, other):
        """Index of the first column where ``self`` and ``other`` differ"""
        for j in range(self.cols):
            if any(self.data[i, j] != other.data[i, j] for i in range(self.rows)):
                return j
        return None

    def is_zero(self):
        return all(v == 0 for v in self.data.flat)

    # ------------------------------------------------------------------
    # Output

    def tolist(self):
        return [[self.data[i, j] for j in range(self.cols)] for i in range(self.rows)]

    def to_strings(self):
        return [[self.field.format(v) for v in row] for row in self.tolist()]

    def to_string(self):
        return f'Matrix[{self.rows}x{self.cols} over {self.field}]{self.tolist()}'

    def __repr__(self):
        return self.to_string()


def zeros(field, rows, cols):
    return Matrix.zeros(field, rows, cols)


def identity(field, n):
    return Matrix.identity(field, n)


def hstack(field, mats, rows):
    """Side by side; ``rows`` fixes the shape of an empty list"""
    mats = list(mats)
    if not mats:
        return Matrix.zeros(field, rows, 0)
    for m in mats:
        if m.rows != rows:
            raise ShapeError(f'hstack: {m.rows} rows, expected {rows}')
    return Matrix(field, np.concatenate([m.data for m in mats], axis=1))


def vstack(field, mats, cols):
    mats = list(mats)
    if not mats:
        return Matrix.zeros(field, 0, cols)
    for m in mats:
        if m.cols != cols:
            raise ShapeError(f'vstack: {m.cols} columns, expected {cols}')
    return Matrix(field, np.concatenate([m.data for m in mats], axis=0))


def kron(a, *rest):
    """
    Kronecker product with (a (x) b)(u (x) v) = a(u) (x) b(v) under the
    row-major tensor basis order. Accepts more than two factors.
    """
    out = a
    for b in rest:
        out = _kron2(out, b)
    return out


def _kron2(a, b):
    a._check(b)
    field = a.field
    out = Matrix.zeros(field, a.rows * b.rows, a.cols * b.cols)
    for i in range(a.rows):
        for j in range(a.cols):
            s = a.data[i, j]
            if s == 0:
                continue
            out.data[i * b.rows:(i + 1) * b.rows, j * b.cols:(j + 1) * b.cols] = \
                _normalize(field, b.data * s)
    return out


def permute_legs(field, dims, order):
    """
    Reorder tensor factors: V_0 (x) ... (x) V_{m-1} -> V_{order[0]} (x) ... .
    ``order`` is a permutation of ``range(len(dims))``.
    """
    dims = list(dims)
    out_dims = [dims[k] for k in order]
    size = 1
    for d in dims:
        size *= d
    out = Matrix.zeros(field, size, size)
    for index in itertools.product(*[range(d) for d in dims]):
        src = _flat(index, dims)
        dst = _flat([index[k] for k in order], out_dims)
        out.data[dst, src] = field.one
    return out


def swap(field, a, b):
    return permute_legs(field, [a, b], [1, 0])


def _flat(index, dims):
    flat = 0
    for i, d in zip(index, dims):
        flat = flat * d + i
    return flat


'''
Row reduction
'''


@dataclass(frozen=True)
class RowReduceResult:
    matrix: Matrix
    pivots: tuple

    @property
    def rank(self):
        return len(self.pivots)

    def __iter__(self):
        yield self.matrix
        yield list(self.pivots)


def rref(m):
    """
    Reduced row-echelon form and pivot columns.

    Returns:
        ``RowReduceResult`` (unpacks as ``(matrix, pivots)``)
    """
    field = m.field
    a = m.data.copy()
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot = next((i for i in range(r, rows) if a[i, c] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            a[[r, pivot]] = a[[pivot, r]]
        a[r] = _normalize(field, a[r] * field.inv(a[r, c]))
        for i in range(rows):
            if i != r and a[i, c] != 0:
                a[i] = _normalize(field, a[i] - a[i, c] * a[r])
        pivots.append(c)
        r += 1
    return RowReduceResult(Matrix(field, a), tuple(pivots))


def rank(m):
    return rref(m).rank


def kernel_basis(m):
    """Columns form a basis of the right null space of ``m``"""
    field = m.field
    reduced, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = Matrix.zeros(field, m.cols, len(free))
    for k, fc in enumerate(free):
        basis.data[fc, k] = field.one
        for i, pc in enumerate(pivots):
            basis.data[pc, k] = _normalize(field, -reduced.data[i, fc])
    return basis


def solve_affine(a, b):
    """
    Solve ``a x = b`` for a column ``b``.

    Returns:
        ``(particular, kernel)`` or ``None`` when the system is inconsistent
    """
    if a.rows != b.rows or b.cols != 1:
        raise ShapeError(f'solve_affine: a is {a.shape}, b is {b.shape}')
    field = a.field
    reduced, pivots = rref(hstack(field, [a, b], a.rows))
    if a.cols in pivots:
        return None
    x = Matrix.zeros(field, a.cols, 1)
    for i, pc in enumerate(pivots):
        x.data[pc, 0] = reduced.data[i, a.cols]
    return x, kernel_basis(a)


def coordinates(basis, vectors):
    """
    Coordinates of the columns of ``vectors`` with respect to the columns of
    ``basis`` (assumed independent), or ``None`` if some column leaves the span.
    """
    field = basis.field
    if basis.rows != vectors.rows:
        raise ShapeError(f'coordinates: basis {basis.shape}, vectors {vectors.shape}')
    k = basis.cols
    reduced, pivots = rref(hstack(field, [basis, vectors], basis.rows))
    if any(p >= k for p in pivots):
        return None
    out = Matrix.zeros(field, k, vectors.cols)
    for i, pc in enumerate(pivots):
        out.data[pc, :] = reduced.data[i, k:]
    return out


def in_span(basis, vectors):
    return coordinates(basis, vectors) is not None


def inverse(m):
    if m.rows != m.cols:
        return None
    n = m.rows
    field = m.field
    reduced, pivots = rref(hstack(field, [m, Matrix.identity(field, n)], n))
    if list(pivots[:n]) != list(range(n)):
        return None
    return reduced.block(0, n, n, 2 * n)


def determinant(m):
    if m.rows != m.cols:
        raise ShapeError(f'determinant of a non-square {m.shape} matrix')
    field = m.field
    a = m.data.copy()
    n = m.rows
    det = field.one
    for c in range(n):
        pivot = next((i for i in range(c, n) if a[i, c] != 0), None)
        if pivot is None:
            return field.zero
        if pivot != c:
            a[[c, pivot]] = a[[pivot, c]]
            det = field.normalize(-det)
        det = field.normalize(det * a[c, c])
        inv = field.inv(a[c, c])
        for i in range(c + 1, n):
            if a[i, c] != 0:
                a[i] = _normalize(field, a[i] - a[i, c] * inv * a[c])
    return det


def quotient_projection(ambient_dim, relations):
    """
    Quotient of K^ambient_dim by the column span of ``relations``.

    The complement basis is made of the non-pivot coordinates of the RREF of
    the relation span.

    Returns:
        ``(projection, section)`` with projection @ section = identity and
        projection @ relations = 0
    """
    field = relations.field
    if relations.rows != ambient_dim:
        raise ShapeError(f'relations have {relations.rows} rows, ambient is {ambient_dim}')
    reduced, pivots = rref(relations.T)
    r = len(pivots)
    complement = [c for c in range(ambient_dim) if c not in pivots]
    select = Matrix.zeros(field, r, ambient_dim)
    for i, pc in enumerate(pivots):
        select.data[i, pc] = field.one
    reducer = Matrix.identity(field, ambient_dim) - reduced.take_rows(range(r)).T @ select
    projection = reducer.take_rows(complement)
    section = Matrix.identity(field, ambient_dim).take_columns(complement)
    return projection, section


'''
Families of matrix unknowns
'''


class BlockLayout:
    """
    Packs a keyed family of matrices into a single coordinate vector so that
    conditions written on the family become one stacked linear system.

    ``residual`` callbacks take a dict ``key -> Matrix`` and return a list of
    matrices that must all vanish; they must be affine in the family.
    """

    def __init__(self, field, shapes):
        self.field = field
        self.shapes = dict(shapes)
        self.offsets = {}
        offset = 0
        for key, (r, c) in self.shapes.items():
            self.offsets[key] = offset
            offset += r * c
        self.size = offset

    def unpack(self, vec):
        out = {}
        for key, (r, c) in self.shapes.items():
            off = self.offsets[key]
            out[key] = Matrix(self.field, vec.data[off:off + r * c, 0].reshape(r, c).copy())
        return out

    def pack(self, blocks):
        return vstack(self.field, [blocks[key].flatten() for key in self.shapes], 1)

    def zero(self):
        return self.unpack(Matrix.zeros(self.field, self.size, 1))

    def unit(self, j):
        return self.unpack(Matrix.unit(self.field, self.size, j))

    def combine(self, basis, coefficients):
        """Linear combination of unpacked families"""
        vec = Matrix.zeros(self.field, self.size, 1)
        for family, s in zip(basis, coefficients):
            vec = vec + self.pack(family).scale(s)
        return self.unpack(vec)

    def evaluate(self, residual, family):
        parts = [m.flatten() for m in residual(family)]
        return vstack(self.field, parts, 1)

    def system(self, residual):
        """Matrix ``A`` and constant ``r0`` with residual(x) = A x + r0"""
        r0 = self.evaluate(residual, self.zero())
        columns = [self.evaluate(residual, self.unit(j)) - r0 for j in range(self.size)]
        return hstack(self.field, columns, r0.rows), r0

    def solve_space(self, residual):
        a, _ = self.system(residual)
        basis = kernel_basis(a)
        return [self.unpack(col) for col in basis.columns()]

    def solve_affine_space(self, residual):
        a, r0 = self.system(residual)
        solution = solve_affine(a, -r0)
        if solution is None:
            return None
        particular, kernel = solution
        return self.unpack(particular), [self.unpack(col) for col in kernel.columns()]

    def is_solution(self, residual, family):
        return self.evaluate(residual, family).is_zero()
