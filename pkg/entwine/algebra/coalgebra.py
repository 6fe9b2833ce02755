from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from entwine.errors import ShapeError
from entwine.linalg import Matrix, identity, kron
from entwine.utils import Verdict


def default_names(dim):
    return ('e',) if dim == 1 else tuple(f'e{i}' for i in range(dim))


@dataclass(eq=False)
class Coalgebra:
    """
    Finite-dimensional coalgebra given by structure constants.

    Parameter ``delta`` (``Matrix``):
        (dim^2 x dim); column j holds the coordinates of Delta(e_j)

    Parameter ``counit`` (``Matrix``):
        (1 x dim) row of epsilon(e_j)
    """
    field: object
    dim: int
    delta: Matrix
    counit: Matrix
    names: tuple = ()
    name: str = 'C'

    def __post_init__(self):
        if not self.names:
            self.names = default_names(self.dim)

    def check_shapes(self):
        n = self.dim
        if n <= 0:
            raise ShapeError(f'coalgebra {self.name}: dimension must be positive, got {n}')
        if self.delta.shape != (n * n, n):
            raise ShapeError(f'coalgebra {self.name}: delta is {self.delta.shape}, expected {(n * n, n)}')
        if self.counit.shape != (1, n):
            raise ShapeError(f'coalgebra {self.name}: counit is {self.counit.shape}, expected {(1, n)}')

    def identity(self):
        return identity(self.field, self.dim)

    def counit_column(self):
        """epsilon as an element of the dual, in dual-basis coordinates"""
        return self.counit.T

    def index(self, name):
        return self.names.index(name)

    def to_string(self):
        return f'Coalgebra[{self.name}, dim = {self.dim}, field = {self.field}]'

    def __str__(self):
        return self.to_string()


def verify_coalgebra(c):
    """Coassociativity and both counit laws"""
    c.check_shapes()
    v = Verdict(f'coalgebra {c.name}')
    one = c.identity()
    v.expect_equal('coassociativity (Delta (x) id) Delta = (id (x) Delta) Delta',
                   kron(c.delta, one) @ c.delta, kron(one, c.delta) @ c.delta, c.names)
    v.expect_equal('left counit law (eps (x) id) Delta = id',
                   kron(c.counit, one) @ c.delta, one, c.names)
    v.expect_equal('right counit law (id (x) eps) Delta = id',
                   kron(one, c.counit) @ c.delta, one, c.names)
    return v


def is_coalgebra_map(source, target, sigma):
    v = Verdict(f'coalgebra map {source.name} -> {target.name}')
    if sigma.shape != (target.dim, source.dim):
        return v.fail(f'map is {sigma.shape}, expected {(target.dim, source.dim)}')
    v.expect_equal('comultiplicativity', target.delta @ sigma, kron(sigma, sigma) @ source.delta,
                   source.names)
    v.expect_equal('counitality', target.counit @ sigma, source.counit, source.names)
    return v


'''
Dual algebra
'''


@dataclass(eq=False)
class DualBasisData:
    """
    The convolution algebra C* in the coordinate dual basis {d_i*}.

    ``table`` is the (dim x dim^2) matrix sending d_i* (x) d_j* to the
    coordinates of d_i* . d_j*.
    """
    base: Coalgebra
    table: Matrix

    def mult(self, f, g):
        return convolution_mult(self.base, f, g)


def dual_basis_data(c):
    return DualBasisData(c, c.delta.T)


def _row(c, coords):
    if isinstance(coords, Matrix):
        return coords if coords.rows == 1 else coords.T
    return Matrix.from_rows(c.field, [list(coords)], c.dim)


def convolution_mult(c, f_coords, g_coords):
    """
    Coordinates of f . g with (f . g)(x) = f(x_1) g(x_2).

    Both arguments are dual vectors: rows, columns or plain sequences.
    Returns a (1 x dim) row.
    """
    f, g = _row(c, f_coords), _row(c, g_coords)
    if f.cols != c.dim or g.cols != c.dim:
        raise ShapeError(f'dual vectors of length {f.cols}, {g.cols} over a {c.dim}-dimensional coalgebra')
    return kron(f, g) @ c.delta


def verify_convolution_algebra(c):
    """Associativity and unitality (with eps) of the convolution product"""
    n = c.dim
    v = Verdict(f'convolution algebra of {c.name}')
    table = dual_basis_data(c).table
    one = c.identity()
    v.expect_equal('associativity', table @ kron(table, one), table @ kron(one, table))
    v.expect_equal('left unit', table @ kron(c.counit.T, one), one)
    v.expect_equal('right unit', table @ kron(one, c.counit.T), one)
    return v


def verify_dual_basis_identity(c):
    """
    sum_ij (d_i* . d_j*) (x) d_i (x) d_j = sum_j d_j* (x) Delta(d_j), both
    sides as vectors of C* (x) C (x) C.
    """
    field = c.field
    n = c.dim
    lhs = Matrix.zeros(field, n * n * n, 1)
    rhs = Matrix.zeros(field, n * n * n, 1)
    for i in range(n):
        for j in range(n):
            prod = convolution_mult(c, Matrix.unit(field, n, i).T, Matrix.unit(field, n, j).T)
            basis_ij = kron(Matrix.unit(field, n, i), Matrix.unit(field, n, j))
            lhs = lhs + kron(prod.T, basis_ij)
    for j in range(n):
        rhs = rhs + kron(Matrix.unit(field, n, j), c.delta.col(j))
    return Verdict(f'dual basis identity of {c.name}').expect_equal('dual basis identity', lhs, rhs)


'''
Common coalgebras
'''


def group_coalgebra(field, names):
    """Group-like basis: Delta(g) = g (x) g, eps(g) = 1"""
    names = tuple(names)
    n = len(names)
    delta = Matrix.zeros(field, n * n, n)
    for i in range(n):
        delta.set(i * n + i, i, 1)
    counit = Matrix.from_rows(field, [[1] * n])
    return Coalgebra(field, n, delta, counit, names, name=f'CG{n}')


def comatrix_coalgebra(field, size):
    """Basis e_ij with Delta(e_ij) = sum_k e_ik (x) e_kj, eps(e_ij) = [i = j]"""
    n = size * size
    names = tuple(f'e{i}{j}' for i in range(size) for j in range(size))
    delta = Matrix.zeros(field, n * n, n)
    counit = Matrix.zeros(field, 1, n)
    for i in range(size):
        for j in range(size):
            col = i * size + j
            for k in range(size):
                left, right = i * size + k, k * size + j
                delta.set(left * n + right, col, 1)
            if i == j:
                counit.set(0, col, 1)
    return Coalgebra(field, n, delta, counit, names, name=f'M{size}c')
