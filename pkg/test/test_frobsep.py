import pytest

from entwine.algebra import regular_comodule
from entwine.category import representable_right
from entwine.entwining import comodule_tensor_hX, module_tensor_C
from entwine.errors import VerificationError
from entwine.frobsep import (ThetaFamily, alpha, beta_prime, build_Cstar_h, build_h_C,
                             check_F_separable, check_fro, check_frobenius, check_G_separable,
                             check_unit_counit, delta_prime, eta_holds, eta_layout, nat_holds,
                             nat_layout, nat_space, omega_eval, solve_V1, solve_W1, theta_holds,
                             theta_layout, upsilon_eval, v2_translate, verify_eta, verify_theta,
                             w2_translate)
from entwine.linalg import kron

from conftest import entwining_of, load


@pytest.mark.parametrize('name, v1, w1', [('c1', 1, 1), ('cg2', 2, 2)])
def test_solution_space_dimensions(name, v1, w1):
    e = entwining_of(name)
    assert len(solve_V1(e)) == v1
    assert len(solve_W1(e)) == w1
    for theta in solve_V1(e):
        assert verify_theta(e, theta)
    for eta in solve_W1(e):
        assert verify_eta(e, eta)


@pytest.mark.parametrize('name', ['cg2', 'da2', 'da2_collapse', 'cd2', 'dh2_gf2', 'dk'])
def test_solution_spaces_match_enumeration(name, oracle):
    e = entwining_of(name, 'gf 2')
    assert oracle(e, theta_layout(e), theta_holds(e)) == len(solve_V1(e))
    assert oracle(e, eta_layout(e), eta_holds(e)) == len(solve_W1(e))


@pytest.mark.parametrize('name', ['cg2', 'da2', 'cd2'])
def test_nat_space_matches_enumeration(name, oracle):
    e = entwining_of(name, 'gf 2')
    F, G = build_Cstar_h(e), build_h_C(e)
    assert oracle(e, nat_layout(e, F, G), nat_holds(e, F, G)) == len(nat_space(e, F, G))


@pytest.mark.parametrize('name', ['cg2', 'da2', 'dh2'])
def test_theta_translation_roundtrip(name):
    e = entwining_of(name)
    for theta in solve_V1(e):
        ups = v2_translate(e, theta)
        assert ups.direction == 'h(x){0} -> {0}*(x)h'.format(e.coalg.name)
        back = beta_prime(e, ups)
        for X in e.cat.objects:
            assert back[X] == theta[X]


@pytest.mark.parametrize('name', ['cg2', 'da2', 'dh2'])
def test_eta_translation_roundtrip(name):
    e = entwining_of(name)
    for eta in solve_W1(e):
        phi = w2_translate(e, eta)
        back = delta_prime(e, phi)
        for Y in e.cat.objects:
            assert back[Y] == eta[Y]


def test_translation_rejects_non_members():
    e = entwining_of('cg2')
    theta = solve_V1(e)[0]
    broken = ThetaFamily({X: m.copy() for X, m in theta.components.items()})
    # mixed group-likes must go to zero
    broken['pt'].set(0, 1, 1)
    assert not verify_theta(e, broken)
    with pytest.raises(VerificationError):
        v2_translate(e, broken)


def test_separability_witnesses_on_group_coalgebra():
    e = entwining_of('cg2')
    d, c = e.cat, e.coalg
    theta = check_F_separable(e)
    assert theta is not None
    assert theta['pt'] @ c.delta == d.id('pt') @ c.counit
    eta = check_G_separable(e)
    assert eta is not None
    assert kron(d.eye('pt', 'pt'), c.counit) @ eta['pt'] == d.id('pt')


def test_divided_powers_only_coinduction_is_separable():
    e = entwining_of('cd2')
    assert check_F_separable(e) is None
    eta = check_G_separable(e)
    assert eta is not None
    assert verify_eta(e, eta)


@pytest.mark.parametrize('ground, separable', [('rationals', True), ('gf 3', True),
                                               ('gf 2', False)])
def test_doi_hopf_coinduction_separability_depends_on_characteristic(ground, separable):
    e = entwining_of('dh2', ground)
    assert (check_G_separable(e) is not None) == separable


@pytest.mark.parametrize('name', ['cg2', 'da2', 'dh2'])
def test_alpha_recovers_theta(name):
    e = entwining_of(name)
    for theta in solve_V1(e):
        back = alpha(e, theta)
        for X in e.cat.objects:
            assert back[X] == theta[X]


@pytest.mark.parametrize('name', ['cg2', 'da2', 'dh2'])
def test_omega_on_representables_is_eta(name):
    e = entwining_of(name)
    d = e.cat
    for eta in solve_W1(e):
        for Y in d.objects:
            om = omega_eval(e, eta, representable_right(d, Y))
            for X in d.objects:
                assert om[X] == eta.eta(e, X, Y)


def test_upsilon_on_entwined_module():
    _, instance, _ = load('dh2')
    e = instance.entwining()
    hstar = instance.modules['hstar']
    for theta in solve_V1(e):
        assert upsilon_eval(e, theta, hstar).verdict


@pytest.mark.parametrize('name', ['c1', 'cg2'])
def test_frobenius_found_on_grid(name):
    e = entwining_of(name)
    result = check_frobenius(e)
    assert result.frobenius
    assert result.deterministic
    assert result.search == 'grid'
    assert result.verdict
    assert check_fro(e, result.theta, result.eta)
    assert result.parameters == len(nat_space(e, build_Cstar_h(e), build_h_C(e)))


def test_frobenius_witnesses_invert_unit_and_counit():
    e = entwining_of('cg2')
    result = check_frobenius(e)
    induced = comodule_tensor_hX(e, regular_comodule(e.coalg), 'pt')
    coinduced = module_tensor_C(e, representable_right(e.cat, 'pt'))
    assert check_unit_counit(e, result.theta, result.eta, [induced])
    assert check_unit_counit(e, result.theta, result.eta, [induced, coinduced],
                             representables=False)


def test_frobenius_exhaustive_over_gf2():
    result = check_frobenius(entwining_of('cg2', 'gf 2'))
    assert result.frobenius
    assert result.search == 'exhaustive'
    assert result.points_tried <= 4


def test_collapsing_entwining_is_not_frobenius():
    result = check_frobenius(entwining_of('da2_collapse'))
    assert not result.frobenius
    assert result.deterministic
    assert result.phi is None and result.theta is None


def test_frobenius_search_is_reproducible():
    e = entwining_of('dh2')
    first = check_frobenius(e, seed=7, trials=8)
    second = check_frobenius(e, seed=7, trials=8)
    assert first.frobenius == second.frobenius
    assert first.points_tried == second.points_tried
    assert first.search == second.search


def test_kronecker_coalgebra_has_no_theta_families():
    e = entwining_of('ck4')
    assert solve_V1(e) == []
    assert check_F_separable(e) is None
    layout = theta_layout(e)
    holds = theta_holds(e)
    for j in range(layout.size):
        assert not holds(layout.unit(j)), j
    assert len(solve_W1(e)) == 4
    assert check_G_separable(e) is not None


def test_kronecker_coalgebra_integrals_match_enumeration(oracle):
    e = entwining_of('ck4', 'gf 2')
    assert oracle(e, eta_layout(e), eta_holds(e)) == len(solve_W1(e)) == 4


def test_split_targets_have_no_integrals_and_no_frobenius_morphism():
    e = entwining_of('dk')
    assert solve_W1(e) == []
    assert check_G_separable(e) is None
    assert nat_space(e, build_Cstar_h(e), build_h_C(e)) == []
    result = check_frobenius(e)
    assert not result.frobenius
    assert result.deterministic
    assert result.parameters == 0
    assert result.search == 'zero space'


@pytest.mark.parametrize('name', ['cg2', 'da2', 'dh2'])
def test_elementwise_identities_agree_with_verifiers(name):
    e = entwining_of(name)
    theta_ok, eta_ok = theta_holds(e), eta_holds(e)
    for theta in solve_V1(e):
        assert theta_ok(theta.components)
    for eta in solve_W1(e):
        assert eta_ok(eta.elements)
    F, G = build_Cstar_h(e), build_h_C(e)
    nat_ok = nat_holds(e, F, G)
    for phi in nat_space(e, F, G):
        assert nat_ok(phi.components)
    for j in range(theta_layout(e).size):
        family = theta_layout(e).unit(j)
        assert theta_ok(family) == bool(verify_theta(e, ThetaFamily(family))), j
