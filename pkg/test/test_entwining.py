import pytest

from entwine.algebra import regular_comodule
from entwine.category import (ModuleMorphism, is_module_morphism, representable_right,
                              verify_right_module)
from entwine.entwining import (AXIOMS, CoHCategory, Entwining, adjunction_unit,
                               comodule_tensor_hX, doi_hopf_entwining, entwined_kernel_cokernel,
                               failed_axioms, generator_morphism, module_tensor_C, psi_morphism,
                               swap_entwining, tensor_C_morphism, verify_entwined_module,
                               verify_entwining, verify_entwining_morphism,
                               verify_triangle_identities)
from entwine.errors import ShapeError, VerificationError
from entwine.linalg import QQ, Matrix, identity, kron

from conftest import entwining_of, load


def identity_morphism_data(e):
    d = e.cat
    return {X: X for X in d.objects}, {(X, Y): d.eye(X, Y) for X, Y in d.pairs()}


def test_swap_on_every_fixture_pairing():
    for name in ('c1', 'cg2', 'da2', 'cd2'):
        _, instance, _ = load(name)
        for d in instance.categories.values():
            for c in instance.coalgebras.values():
                assert verify_entwining(swap_entwining(d, c)), (name, d.name, c.name)


def test_declared_entwinings_verify():
    for name in ('c1', 'cg2', 'da2', 'da2_collapse', 'cd2', 'dh2', 'dh2_gf3', 'dh2_gf2', 'ck4',
                 'dk'):
        e = entwining_of(name)
        assert verify_entwining(e), name


@pytest.mark.parametrize('ground', ['rationals', 'gf 3'])
def test_doi_hopf_on_group_graded_category(ground):
    e = entwining_of('dh2', ground)
    psi = e.at('pt', 'pt')
    assert psi.shape == (4, 4)
    # g (x) t -> t (x) one
    assert psi.entry(2, 3) == 1
    # one (x) t -> t (x) g
    assert psi.entry(3, 1) == 1
    assert psi.entry(0, 0) == 1 and psi.entry(1, 2) == 1


def test_every_single_entry_perturbation_breaks_an_axiom():
    e = entwining_of('dh2')
    psi = e.at('pt', 'pt')
    perturbations = [(i, j, 1) for i in range(4) for j in range(4)]
    perturbations += [(0, 0, 2), (3, 1, 2), (1, 2, 2), (2, 3, 2)]
    assert len(perturbations) == 20
    for i, j, delta in perturbations:
        broken = psi.copy()
        broken.set(i, j, broken.entry(i, j) + delta)
        v = verify_entwining(Entwining(e.cat, e.coalg, {('pt', 'pt'): broken}, 'broken'))
        axioms = failed_axioms(v)
        assert axioms, (i, j, delta)
        assert set(axioms) <= set(AXIOMS)
        # columns 0 and 2 are c (x) id
        assert ('identity' in axioms) == (j in (0, 2)), (i, j, axioms)


def test_failure_message_names_a_witness_column():
    e = entwining_of('dh2')
    broken = e.at('pt', 'pt').copy()
    broken.set(0, 0, 0)
    v = verify_entwining(Entwining(e.cat, e.coalg, {('pt', 'pt'): broken}))
    assert any(msg.startswith('identity axiom at pt') and 'witness basis column one' in msg
               for msg in v.failures)


def test_missing_pair_is_reported():
    e = entwining_of('da2')
    psi = dict(e.psi)
    del psi[('x', 'y')]
    v = verify_entwining(Entwining(e.cat, e.coalg, psi))
    assert v.failures == ["missing entry for the pair ('x', 'y')"]
    with pytest.raises(ShapeError):
        Entwining(e.cat, e.coalg, psi).at('x', 'y')


def test_wrong_shape_is_rejected():
    e = entwining_of('cg2')
    with pytest.raises(ShapeError):
        verify_entwining(Entwining(e.cat, e.coalg, {('pt', 'pt'): Matrix.zeros(QQ, 3, 2)}))


def test_doi_hopf_rejects_non_colinear_composition():
    _, instance, _ = load('dh2')
    d, h = instance.categories['DH2'], instance.hopfs['H2']
    # id -> id*g, t -> t*one
    rho = Matrix.zeros(QQ, 4, 2)
    rho.set(1, 0, 1)
    rho.set(2, 1, 1)
    with pytest.raises(VerificationError) as err:
        doi_hopf_entwining(CoHCategory(d, h, {('pt', 'pt'): rho}), h.coalgebra, h.mult)
    assert not err.value.verdict


def test_entwined_module_on_doi_hopf():
    _, instance, _ = load('dh2')
    e = instance.entwining()
    hstar = instance.modules['hstar']
    assert instance.entwined_modules('psi') == [hstar]
    assert verify_entwined_module(e, hstar)
    for Y in e.cat.objects:
        assert psi_morphism(e, Y).verdict
    h = representable_right(e.cat, 'pt')
    assert verify_entwined_module(e, module_tensor_C(e, h))
    assert verify_triangle_identities(e, hstar, h)


def test_generator_morphism_hits_its_element():
    _, instance, _ = load('dh2')
    e = instance.entwining()
    hstar = instance.modules['hstar']
    eta = generator_morphism(e, hstar, 'pt', Matrix.column(QQ, [1, 0]))
    assert eta.verdict
    # m1 spans a one-dimensional subcomodule
    assert eta.source.dim('pt') == 2
    with pytest.raises(ShapeError):
        generator_morphism(e, hstar, 'pt', Matrix.column(QQ, [1, 0, 0]))


def test_kernel_and_cokernel_of_the_unit():
    _, instance, _ = load('dh2')
    e = instance.entwining()
    hstar = instance.modules['hstar']
    unit = adjunction_unit(e, hstar)
    assert unit.verdict
    kc = entwined_kernel_cokernel(e, unit)
    assert kc.kernel.dim('pt') == 0
    assert kc.cokernel.dim('pt') == 2
    assert verify_right_module(kc.kernel.module)
    assert verify_entwined_module(e, kc.cokernel)


def test_entwining_morphisms():
    e = entwining_of('cg2')
    objects, homs = identity_morphism_data(e)
    flip = Matrix.from_rows(QQ, [[0, 1], [1, 0]])
    assert verify_entwining_morphism(e, e, objects, homs, e.coalg.identity())
    assert verify_entwining_morphism(e, e, objects, homs, flip)

    collapse = entwining_of('da2_collapse')
    objects, homs = identity_morphism_data(collapse)
    assert verify_entwining_morphism(collapse, collapse, objects, homs, collapse.coalg.identity())
    v = verify_entwining_morphism(collapse, collapse, objects, homs, flip)
    assert any(msg.startswith("compatibility with psi at ('x', 'y')") for msg in v.failures)


def test_comodule_tensor_representable_on_the_unit_coalgebra():
    e = entwining_of('c1')
    m = comodule_tensor_hX(e, regular_comodule(e.coalg), 'pt')
    assert m.dim('pt') == 1
    assert m.coaction('pt') == Matrix.from_rows(QQ, [[1]])
    assert verify_entwined_module(e, m)


def test_comodule_tensor_representable_on_group_likes():
    e = entwining_of('cg2')
    m = comodule_tensor_hX(e, regular_comodule(e.coalg), 'pt')
    assert m.module.dims == {'pt': 2}
    # g_i (x) id -> g_i (x) id (x) g_i
    assert m.coaction('pt') == Matrix.from_rows(QQ, [[1, 0], [0, 0], [0, 0], [0, 1]])
    assert verify_entwined_module(e, m)


def test_comodule_tensor_representable_on_doi_hopf():
    _, instance, _ = load('dh2')
    e = instance.entwining()
    m = comodule_tensor_hX(e, regular_comodule(instance.hopfs['H2'].coalgebra), 'pt')
    assert m.dim('pt') == 4
    rho = m.coaction('pt')
    assert rho.shape == (8, 4)
    # one (x) t -> one (x) t (x) g and g (x) t -> g (x) t (x) one
    assert rho.entry(3, 1) == 1
    assert rho.entry(6, 3) == 1
    assert verify_entwined_module(e, m)


def test_tensor_C_carries_the_yoneda_morphism():
    e = entwining_of('da2')
    d = e.cat
    hx, hy = representable_right(d, 'x'), representable_right(d, 'y')
    a = Matrix.column(e.field, [1])
    # f -> a f
    comps = {W: d.comp(W, 'x', 'y') @ kron(a, d.eye(W, 'x')) for W in d.objects}
    assert is_module_morphism(hx, hy, comps)
    yoneda = ModuleMorphism(hx, hy, comps)
    image = tensor_C_morphism(e, yoneda)
    assert image.verdict
    assert image['x'].shape == (d.dim('x', 'y') * e.n, d.dim('x', 'x') * e.n)

    ident = tensor_C_morphism(e, ModuleMorphism(hx, hx, {W: hx.eye(W) for W in d.objects}))
    assert ident.verdict
    for W in d.objects:
        assert ident[W] == identity(e.field, hx.dim(W) * e.n)

    double = ModuleMorphism(hx, hx, {W: hx.eye(W).scale(2) for W in d.objects})
    composite = ModuleMorphism(hx, hy, {W: yoneda[W] @ double[W] for W in d.objects})
    lhs = tensor_C_morphism(e, composite)
    rhs_first, rhs_second = tensor_C_morphism(e, double), tensor_C_morphism(e, yoneda)
    assert lhs.verdict
    for W in d.objects:
        assert lhs[W] == rhs_second[W] @ rhs_first[W]
