from fractions import Fraction

import pytest

from entwine.errors import EntwineError, ShapeError
from entwine.linalg import (GF, QQ, BlockLayout, Matrix, coordinates, determinant, identity,
                            inverse, kernel_basis, kron, permute_legs, quotient_projection, rank,
                            rref, solve_affine, swap)


def test_field_coercion():
    assert QQ('3/6') == Fraction(1, 2)
    assert GF(5)(Fraction(1, 2)) == 3
    assert GF(5)(-1) == 4
    assert GF(7).format(3) == '3 mod 7'
    assert QQ.format(Fraction(-2, 3)) == '-2/3'
    with pytest.raises(ZeroDivisionError):
        GF(3)(Fraction(1, 3))


def test_field_rejects_composite_modulus():
    with pytest.raises(EntwineError):
        GF(4)


def test_rref_and_rank():
    m = Matrix.from_rows(QQ, [[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    reduced, pivots = rref(m)
    assert pivots == [0, 1]
    assert rank(m) == 2
    assert reduced.entry(0, 0) == 1 and reduced.entry(1, 0) == 0
    assert reduced.entry(2, 2) == 0


def test_kernel_basis_spans_null_space(field):
    m = Matrix.from_rows(field, [[1, 1, 0], [0, 1, 1]])
    k = kernel_basis(m)
    assert k.cols == 1
    assert (m @ k).is_zero()


def test_inverse_and_determinant():
    m = Matrix.from_rows(QQ, [[2, 1], [1, 1]])
    assert inverse(m) @ m == identity(QQ, 2)
    assert determinant(m) == 1
    assert inverse(Matrix.from_rows(QQ, [[1, 2], [2, 4]])) is None
    assert determinant(Matrix.from_rows(GF(2), [[1, 1], [1, 1]])) == 0


def test_singular_over_gf2_only():
    m = Matrix.from_rows(GF(2), [[1, 1], [1, -1]])
    assert inverse(m) is None
    assert inverse(Matrix.from_rows(GF(3), [[1, 1], [1, -1]])) is not None


def test_solve_affine():
    a = Matrix.from_rows(QQ, [[1, 1], [1, -1]])
    particular, kernel = solve_affine(a, Matrix.column(QQ, [2, 0]))
    assert particular == Matrix.column(QQ, [1, 1])
    assert kernel.cols == 0
    assert solve_affine(Matrix.from_rows(QQ, [[1, 1], [1, 1]]), Matrix.column(QQ, [1, 2])) is None


def test_coordinates():
    basis = Matrix.from_rows(QQ, [[1, 0], [1, 1], [0, 1]])
    v = Matrix.column(QQ, [2, 5, 3])
    assert coordinates(basis, v) == Matrix.column(QQ, [2, 3])
    assert coordinates(basis, Matrix.column(QQ, [1, 0, 0])) is None


def test_kron_follows_row_major_tensor_index():
    a = Matrix.from_rows(QQ, [[1, 2], [3, 4]])
    b = Matrix.from_rows(QQ, [[0, 1], [1, 0]])
    u, v = Matrix.unit(QQ, 2, 1), Matrix.unit(QQ, 2, 0)
    assert kron(a, b) @ kron(u, v) == kron(a @ u, b @ v)
    assert kron(a, b).entry(1 * 2 + 0, 0 * 2 + 1) == a.entry(1, 0) * b.entry(0, 1)


def test_swap_and_permute_legs():
    u, v, w = (Matrix.unit(QQ, 2, 0), Matrix.unit(QQ, 3, 2), Matrix.unit(QQ, 2, 1))
    assert swap(QQ, 2, 3) @ kron(u, v) == kron(v, u)
    assert permute_legs(QQ, [2, 3, 2], [2, 0, 1]) @ kron(u, v, w) == kron(w, u, v)


def test_zero_dimensional_factors():
    empty = Matrix.zeros(QQ, 0, 3)
    assert (Matrix.zeros(QQ, 2, 0) @ empty).shape == (2, 3)
    assert kron(empty, identity(QQ, 2)).shape == (0, 6)
    assert kernel_basis(empty).cols == 3


def test_shape_errors():
    with pytest.raises(ShapeError):
        Matrix.zeros(QQ, 2, 3) @ Matrix.zeros(QQ, 2, 3)
    with pytest.raises(ShapeError):
        Matrix.zeros(QQ, 1, 1) + Matrix.zeros(GF(2), 1, 1)


def test_quotient_projection():
    relations = Matrix.from_rows(QQ, [[1], [-1], [0]])
    projection, section = quotient_projection(3, relations)
    assert projection.rows == 2
    assert (projection @ relations).is_zero()
    assert projection @ section == identity(QQ, 2)


def test_block_layout_solves_affine_families():
    layout = BlockLayout(QQ, {'a': (1, 2), 'b': (1, 1)})

    def residual(family):
        # a0 + a1 = b, b = 1
        a, b = family['a'], family['b']
        return [a @ Matrix.column(QQ, [1, 1]) - b, b - Matrix.from_rows(QQ, [[1]])]

    particular, kernel = layout.solve_affine_space(residual)
    assert layout.is_solution(residual, particular)
    assert len(kernel) == 1
    assert len(layout.solve_space(residual)) == 1
