import pytest

from entwine.algebra import cyclic_group_hopf
from entwine.category import (BimoduleTensor, Subcategory, algebra_category, hom_bimodule,
                              is_module_morphism, kernel_cokernel, module_hom_space,
                              point_category, representable_left, representable_right,
                              tensor_over_sub, verify_bimodule, verify_category,
                              verify_left_module, verify_right_module, verify_subcategory)
from entwine.errors import UnknownObjectError
from entwine.linalg import QQ, Matrix

from conftest import load


def da2():
    _, instance, _ = load('da2')
    return instance.categories['DA2']


def dh2():
    _, instance, _ = load('dh2')
    return instance.categories['DH2']


def test_fixture_categories_verify():
    for name in ('c1', 'da2', 'dh2', 'dh2_gf2', 'dh2_gf3'):
        _, instance, _ = load(name)
        for d in instance.categories.values():
            assert verify_category(d), d.name


def test_zero_hom_space_is_kept():
    d = da2()
    assert d.objects == ('x', 'y')
    assert d.dim('y', 'x') == 0
    assert d.comp('y', 'x', 'y').shape == (1, 0)
    assert d.names('x', 'y') == ('a',)


def test_unknown_object():
    with pytest.raises(UnknownObjectError):
        da2().dim('x', 'z')


def test_broken_composition_is_rejected():
    d = dh2()
    # id*t -> 0
    d.compose[('pt', 'pt', 'pt')].set(1, 1, 0)
    v = verify_category(d)
    assert not v
    assert any(msg.startswith('left unit law') for msg in v.failures)


def test_programmatic_categories(field):
    assert verify_category(point_category(field))
    assert verify_category(algebra_category(cyclic_group_hopf(field, 3)))


def test_representables_are_modules():
    d = da2()
    for Y in d.objects:
        assert verify_right_module(representable_right(d, Y))
        assert verify_left_module(representable_left(d, Y))


def test_yoneda_dimensions():
    for d in (da2(), dh2()):
        for X, Y in d.pairs():
            hom = module_hom_space(representable_right(d, X), representable_right(d, Y))
            assert len(hom) == d.dim(X, Y), (X, Y)
            for eta in hom:
                assert is_module_morphism(eta.source, eta.target, eta.components)


def test_tensor_over_full_subcategory_gives_hom():
    for d in (da2(), dh2()):
        full = Subcategory.full(d)
        assert verify_subcategory(full)
        for X, Y in d.pairs():
            t = tensor_over_sub(full.restrict_right(representable_right(d, Y)),
                                full.restrict_left(representable_left(d, X)))
            assert t.dim == d.dim(X, Y), (X, Y)


def test_tensor_over_identities_is_direct_sum():
    d = da2()
    sub = Subcategory.identities_only(d)
    assert verify_subcategory(sub)
    for X, Y in d.pairs():
        m = sub.restrict_right(representable_right(d, Y))
        n = sub.restrict_left(representable_left(d, X))
        t = tensor_over_sub(m, n)
        assert t.dim == sum(m.dim(Z) * n.dim(Z) for Z in d.objects)


def test_subcategory_must_contain_identities():
    d = da2()
    spaces = {(X, Y): Matrix.zeros(QQ, d.dim(X, Y), 0) for X, Y in d.pairs()}
    assert not verify_subcategory(Subcategory(d, spaces))


def test_kernel_and_cokernel_of_representable_map():
    d = da2()
    # precomposition with a : x -> y gives h_x -> h_y
    hom = module_hom_space(representable_right(d, 'x'), representable_right(d, 'y'))
    kc = kernel_cokernel(hom[0])
    assert verify_right_module(kc.kernel)
    assert verify_right_module(kc.cokernel)
    assert kc.kernel.dims == {'x': 0, 'y': 0}
    assert kc.cokernel.dims == {'x': 0, 'y': 1}


def test_hom_bimodule_and_its_tensor():
    d = da2()
    h = hom_bimodule(d)
    assert verify_bimodule(h)
    square = BimoduleTensor(h, h)
    for X, Y in d.pairs():
        assert square.dim(X, Y) == d.dim(X, Y)
    assert verify_bimodule(square.bimodule)
