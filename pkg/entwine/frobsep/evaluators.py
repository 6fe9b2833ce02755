from __future__ import annotations

from entwine.category import ModuleMorphism, is_module_morphism, representable_right
from entwine.entwining import EntwinedMorphism, is_entwined_morphism, module_tensor_C
from entwine.errors import VerificationError
from entwine.linalg import identity, kron
from entwine.utils import Verdict

from .families import ThetaFamily, verify_eta, verify_theta


def upsilon_eval(e, theta, m, checked=False):
    """
    upsilon(M) : M (x) C -> M, m (x) c -> M(theta_X(m_1 (x) c))(m_0).

    Raises ``VerificationError`` when ``theta`` is not in V_1 or the result
    is not a morphism of entwined modules.
    """
    if not checked:
        verdict = verify_theta(e, theta)
        if not verdict:
            raise VerificationError(verdict)
    source = module_tensor_C(e, m.module)
    one_c = e.coalg.identity()
    comps = {X: m.act(X, X) @ kron(m.module.eye(X), theta[X]) @ kron(m.coaction(X), one_c)
             for X in e.cat.objects}
    verdict = is_entwined_morphism(e, source, m, comps)
    if not verdict:
        raise VerificationError(verdict)
    return EntwinedMorphism(source, m, comps, verdict)


def omega_eval(e, eta, n, checked=False):
    """omega(N) : N -> N (x) C, n -> N(a_X)(n) (x) c_X, natural in N"""
    if not checked:
        verdict = verify_eta(e, eta)
        if not verdict:
            raise VerificationError(verdict)
    target = module_tensor_C(e, n)
    one_c = e.coalg.identity()
    comps = {X: kron(n.act(X, X), one_c) @ kron(n.eye(X), eta[X]) for X in e.cat.objects}
    verdict = is_module_morphism(n, target.module, comps)
    if not verdict:
        raise VerificationError(verdict)
    return ModuleMorphism(n, target.module, comps)


def alpha(e, theta):
    """theta_X(c (x) d) = (id (x) eps) upsilon(h_X (x) C)(X)(id_X (x) c (x) d)"""
    d, c = e.cat, e.coalg
    n = c.dim
    out = {}
    for X in d.objects:
        hc = module_tensor_C(e, representable_right(d, X))
        ups = upsilon_eval(e, theta, hc, checked=True)
        out[X] = kron(d.eye(X, X), c.counit) @ ups[X] @ kron(d.id(X), identity(e.field, n * n))
    return ThetaFamily(out)


def check_unit_counit(e, theta, eta, modules, representables=True):
    """
    F(upsilon(M)) omega(F(M)) = id on every entwined module of ``modules``
    (the Frobenius search passes C (x) h_Y), and upsilon(G(N)) G(omega(N)) = id
    for N = h_Y when ``representables``.
    """
    d = e.cat
    one_c = e.coalg.identity()
    v = Verdict('unit and counit')
    for m in modules:
        ups = upsilon_eval(e, theta, m, checked=True)
        om = omega_eval(e, eta, m.module, checked=True)
        for X in d.objects:
            v.expect_equal(f'upsilon omega = id on {m.name} at {X}', ups[X] @ om[X],
                           m.module.eye(X))
    if representables:
        for Y in d.objects:
            n = representable_right(d, Y)
            gn = module_tensor_C(e, n)
            ups = upsilon_eval(e, theta, gn, checked=True)
            om = omega_eval(e, eta, n, checked=True)
            for X in d.objects:
                v.expect_equal(f'upsilon G(omega) = id on {gn.name} at {X}',
                               ups[X] @ kron(om[X], one_c), gn.module.eye(X))
    return v
