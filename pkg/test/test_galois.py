import pytest

from entwine.algebra import cyclic_group_hopf
from entwine.category import point_category, representable_right, verify_right_module
from entwine.entwining import CoHCategory, swap_entwining, verify_entwining
from entwine.errors import EntwineError
from entwine.galois import (PhiFamily, can_as_coring_iso, can_inverse_via_phi, canonical_map,
                            check_coinvariant, convolution_inverse, coring_comodule_to_entwined,
                            coring_hC, coring_hEh, coinvariant_subcategory,
                            decomposition_iso, entwined_as_coring_comodule,
                            equivalence_roundtrip, galois_criteria, galois_data_from_coh,
                            group_like_hC, group_like_hEh, induced_entwining, same_entwining,
                            smash_can_inverse, smash_product, translation_maps,
                            trivial_coactions, verify_coring, verify_coring_comodule,
                            verify_galois_data, verify_group_like, verify_module_category,
                            verify_phi)
from entwine.linalg import QQ, Matrix

from conftest import load


def galois_setup(name, ground=None):
    _, instance, _ = load(name, ground)
    g = instance.galois()
    sub = coinvariant_subcategory(g)
    return instance, g, sub, canonical_map(g, sub)


@pytest.mark.parametrize('ground', ['rationals', 'gf 3', 'gf 2'])
def test_graded_category_is_galois(ground):
    _, g, sub, cm = galois_setup('dh2', ground)
    assert verify_galois_data(g)
    assert sub.dim('pt', 'pt') == 1
    assert check_coinvariant(g, sub)
    assert cm['pt', 'pt'].shape == (4, 4)
    assert cm.is_galois
    assert cm.report() == {('pt', 'pt'): (4, True)}


def test_hom_coactions_of_a_co_hopf_category():
    instance, g, _, _ = galois_setup('dh2')
    a = CoHCategory(instance.categories['DH2'], instance.hopfs['H2'], g.coactions)
    again = galois_data_from_coh(a)
    assert again.rho('pt', 'pt') == g.rho('pt', 'pt')


def test_translation_map_and_induced_entwining():
    instance, g, sub, cm = galois_setup('dh2')
    tau = translation_maps(cm)
    assert tau.verdict
    induced = induced_entwining(g, cm, tau)
    assert verify_entwining(induced)
    doi_hopf = instance.entwining()
    assert induced.at('pt', 'pt') == doi_hopf.at('pt', 'pt')
    assert same_entwining(g, doi_hopf, induced)


def test_swap_is_not_induced_on_graded_category():
    instance, g, _, _ = galois_setup('dh2')
    swap = swap_entwining(instance.categories['DH2'], instance.hopfs['H2'].coalgebra)
    v = same_entwining(g, instance.entwining(), swap)
    assert not v


def test_can_is_a_coring_isomorphism():
    instance, g, sub, cm = galois_setup('dh2')
    e = instance.entwining()
    hc = coring_hC(e)
    heh = coring_hEh(sub, cm.tensors)
    assert verify_coring(hc)
    assert verify_coring(heh)
    assert can_as_coring_iso(cm, heh, hc)
    assert verify_group_like(group_like_hEh(heh, cm.tensors), sub)
    assert verify_group_like(group_like_hC(hc, g), sub)


@pytest.mark.parametrize('ground', ['rationals', 'gf 3'])
def test_criteria_agree_on_graded_category(ground):
    instance, g, sub, cm = galois_setup('dh2', ground)
    phi = instance.phi_for('rho')
    assert verify_phi(g, phi)
    criteria = galois_criteria(g, phi)
    assert criteria.galois and criteria.entwining and criteria.coinvariance
    assert criteria.agree
    assert criteria.details


def test_convolution_inverse_gives_can_inverse():
    instance, g, sub, cm = galois_setup('dh2')
    phi = convolution_inverse(g, instance.phi_for('rho'))
    assert phi is not None
    # the antipode of the group algebra is the identity
    assert phi.inverse['pt', 'pt'] == phi['pt', 'pt']
    assert verify_phi(g, phi, phi.inverse)
    maps, verdict = can_inverse_via_phi(cm, phi)
    assert verdict
    assert maps['pt', 'pt'] == cm.inverse('pt', 'pt')


def test_decomposition_of_hom_spaces():
    instance, g, sub, _ = galois_setup('dh2')
    phi = convolution_inverse(g, instance.phi_for('rho'))
    iso = decomposition_iso(g, sub, phi, 'pt')
    assert iso.verdict
    assert iso.forward['pt'].shape == (1 * 2, 2)
    with pytest.raises(EntwineError):
        decomposition_iso(g, sub, PhiFamily(dict(phi.components)), 'pt')


def test_trivial_coactions_are_not_galois():
    instance, g, sub, cm = galois_setup('cg2_trivial')
    assert sub.dim('pt', 'pt') == 1
    assert not cm.is_galois
    assert cm.report() == {('pt', 'pt'): (1, False)}
    with pytest.raises(EntwineError):
        cm.inverse('pt', 'pt')
    phi = instance.phi_for('trivial')
    assert convolution_inverse(g, phi) is None
    criteria = galois_criteria(g, phi)
    assert not (criteria.galois or criteria.entwining or criteria.coinvariance)
    assert criteria.agree
    assert not criteria.details


def test_one_dimensional_coalgebra_induces_swap():
    instance, g, sub, cm = galois_setup('c1')
    assert cm.is_galois
    induced = induced_entwining(g, cm)
    assert same_entwining(g, induced, instance.entwining())
    unit = PhiFamily({('pt', 'pt'): Matrix.from_rows(QQ, [[1]])})
    criteria = galois_criteria(g, unit)
    assert criteria.galois and criteria.entwining and criteria.coinvariance


def test_trivial_coactions_builder():
    _, instance, _ = load('cg2')
    g = trivial_coactions(instance.categories['Dpt'], instance.coalgebras['CG2'], group_like=1)
    assert verify_galois_data(g)
    assert g.rho('pt', 'pt') == Matrix.column(QQ, [0, 1])


def test_smash_product_is_galois(field):
    hopf = cyclic_group_hopf(field, 2)
    sp = smash_product(point_category(field), hopf)
    assert verify_module_category(sp.base, hopf, sp.action)
    assert sp.category.dim('*', '*') == 2
    assert verify_galois_data(sp.galois)
    sub = coinvariant_subcategory(sp.galois)
    assert sub.dim('*', '*') == 1
    cm = canonical_map(sp.galois, sub)
    assert cm.is_galois
    maps, verdict = smash_can_inverse(sp, cm)
    assert verdict


def test_entwined_modules_through_the_coring():
    instance, g, _, _ = galois_setup('dh2')
    e = instance.entwining()
    hstar = instance.modules['hstar']
    cc = entwined_as_coring_comodule(e, hstar)
    assert verify_coring_comodule(cc)
    back = coring_comodule_to_entwined(e, cc)
    assert back.coaction('pt') == hstar.coaction('pt')


def test_modules_over_coinvariants_and_entwined_modules():
    instance, g, sub, _ = galois_setup('dh2')
    e = instance.entwining()
    hstar = instance.modules['hstar']
    m = representable_right(sub.category, 'pt')
    assert verify_right_module(m)
    assert equivalence_roundtrip(g, sub, e, [m], [hstar])
