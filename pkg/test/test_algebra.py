import pytest

from entwine.algebra import (Coalgebra, closure, comatrix_coalgebra, convolution_mult,
                             cyclic_group_hopf, dual_comodule_structure, group_coalgebra,
                             is_coalgebra_map, is_comodule_map, regular_comodule, trivial_comodule,
                             verify_coalgebra, verify_comodule, verify_convolution_algebra,
                             verify_dual_basis_identity, verify_hopf, verify_module_coalgebra)
from entwine.errors import ShapeError
from entwine.linalg import QQ, Matrix, identity

from conftest import load


def divided_powers(field):
    """u, x with x primitive"""
    delta = Matrix.zeros(field, 4, 2)
    delta.set(0, 0, 1)
    delta.set(1, 1, 1)
    delta.set(2, 1, 1)
    return Coalgebra(field, 2, delta, Matrix.from_rows(field, [[1, 0]]), ('u', 'x'), name='CD2')


def test_group_coalgebra(field):
    c = group_coalgebra(field, ('g0', 'g1'))
    assert verify_coalgebra(c)
    assert verify_convolution_algebra(c)
    assert verify_dual_basis_identity(c)


def test_comatrix_coalgebra(field):
    c = comatrix_coalgebra(field, 2)
    assert c.dim == 4
    assert verify_coalgebra(c)
    assert verify_comodule(regular_comodule(c))
    assert verify_comodule(dual_comodule_structure(c))


def test_dual_comodule_on_every_fixture_coalgebra():
    for name in ('c1', 'cg2', 'cd2', 'dh2'):
        _, instance, _ = load(name)
        coalgebras = list(instance.coalgebras.values()) + [h.coalgebra for h in instance.hopfs.values()]
        for c in coalgebras:
            assert verify_dual_basis_identity(c)
            assert verify_comodule(dual_comodule_structure(c)), c.name


def test_broken_counit_is_rejected():
    c = group_coalgebra(QQ, ('g0', 'g1'))
    c.counit.set(0, 1, 2)
    v = verify_coalgebra(c)
    assert not v
    assert any('counit' in msg and 'g1' in msg for msg in v.failures)


def test_perturbed_structure_constants_are_rejected():
    base = divided_powers(QQ)
    assert verify_coalgebra(base)
    # both are spanned by two group-likes: u + x, u - x and u, u + x respectively
    still_coalgebras = {(3, 0), (3, 1)}
    for i in range(4):
        for j in range(2):
            c = divided_powers(QQ)
            c.delta.set(i, j, c.delta.entry(i, j) + 1)
            if (i, j) in still_coalgebras:
                assert verify_coalgebra(c), (i, j)
            else:
                assert not verify_coalgebra(c), (i, j)
    for j in range(2):
        c = divided_powers(QQ)
        c.counit.set(0, j, c.counit.entry(0, j) + 1)
        assert not verify_coalgebra(c), j


def test_convolution_product_of_group_like_duals():
    c = group_coalgebra(QQ, ('g0', 'g1'))
    # dual basis elements are orthogonal idempotents
    assert convolution_mult(c, [1, 0], [1, 0]) == Matrix.from_rows(QQ, [[1, 0]])
    assert convolution_mult(c, [1, 0], [0, 1]) == Matrix.from_rows(QQ, [[0, 0]])
    assert convolution_mult(c, c.counit, [0, 1]) == Matrix.from_rows(QQ, [[0, 1]])


def test_hopf_h2(field):
    h = cyclic_group_hopf(field, 2)
    assert h.names == ('one', 'g')
    assert verify_hopf(h)
    assert verify_module_coalgebra(h.coalgebra, h, h.mult)


def test_hopf_with_wrong_antipode_fails():
    h = cyclic_group_hopf(QQ, 3)
    assert verify_hopf(h)
    h.antipode = identity(QQ, 3)
    v = verify_hopf(h)
    assert any('antipode' in msg for msg in v.failures)


def test_trivial_comodule_needs_group_like():
    c = divided_powers(QQ)
    assert verify_comodule(trivial_comodule(c, 2, group_like=0))
    with pytest.raises(ShapeError):
        trivial_comodule(c, 1, group_like=1)


def test_comodule_and_coalgebra_maps():
    c = group_coalgebra(QQ, ('g0', 'g1'))
    flip = Matrix.from_rows(QQ, [[0, 1], [1, 0]])
    assert is_coalgebra_map(c, c, flip)
    assert not is_coalgebra_map(c, c, flip.scale(2))
    reg = regular_comodule(c)
    assert not is_comodule_map(reg, reg, flip)
    assert is_comodule_map(reg, reg, Matrix.from_rows(QQ, [[2, 0], [0, 3]]))


def test_closure_generates_subcomodule():
    c = divided_powers(QQ)
    reg = regular_comodule(c)
    # x generates everything, u only itself
    assert closure(reg, Matrix.column(QQ, [0, 1])).cols == 2
    assert closure(reg, Matrix.column(QQ, [1, 0])).cols == 1
