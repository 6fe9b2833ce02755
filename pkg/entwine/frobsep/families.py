from __future__ import annotations

import logging
from dataclasses import dataclass

from entwine.errors import EntwineError
from entwine.linalg import BlockLayout, kron
from entwine.utils import Verdict

log = logging.getLogger(__name__)


@dataclass(eq=False)
class ThetaFamily:
    """
    Per object X a matrix theta_X : C (x) C -> End(X) (``dim End(X)`` x n^2).
    """
    components: dict

    def __getitem__(self, X):
        return self.components[X]

    def to_string(self):
        return 'ThetaFamily[' + ', '.join(f'{X}: {m.to_strings()}' for X, m in
                                          self.components.items()) + ']'


@dataclass(eq=False)
class EtaFamily:
    """
    Natural transformation h -> h (x) C, stored through the elements
    e_Y = eta(Y, Y)(id_Y) in End(Y) (x) C (columns of length dim End(Y) * n).
    """
    elements: dict

    def __getitem__(self, Y):
        return self.elements[Y]

    def eta(self, e, X, Y):
        """eta(X, Y) : Hom(X,Y) -> Hom(X,Y) (x) C, g -> g a_X (x) c_X"""
        d = e.cat
        return kron(d.comp(X, X, Y), e.coalg.identity()) @ kron(d.eye(X, Y), self.elements[X])

    def to_string(self):
        return 'EtaFamily[' + ', '.join(f'{Y}: {m.to_strings()}' for Y, m in
                                        self.elements.items()) + ']'


'''
Theta: natural transformations GF -> 1 through V_1
'''


def theta_layout(e):
    d = e.cat
    return BlockLayout(e.field, {X: (d.dim(X, X), e.n * e.n) for X in d.objects})


def _theta_identities(e, theta):
    d, c = e.cat, e.coalg
    one_c = c.identity()
    for Y, X in d.pairs():
        # input c (x) d (x) f with f in Hom(Y,X); d meets f first
        lhs = d.comp(Y, X, X) @ kron(theta[X], d.eye(Y, X))
        rhs = d.comp(Y, Y, X) @ kron(d.eye(Y, X), theta[Y]) @ kron(e.at(Y, X), one_c) \
            @ kron(one_c, e.at(Y, X))
        yield f'theta commutes with morphisms {(Y, X)}', lhs, rhs
    for X in d.objects:
        lhs = kron(theta[X], one_c) @ kron(one_c, c.delta)
        rhs = e.at(X, X) @ kron(one_c, theta[X]) @ kron(c.delta, one_c)
        yield f'theta is colinear at {X}', lhs, rhs


def _theta_normalization(e, theta):
    d, c = e.cat, e.coalg
    for X in d.objects:
        yield f'theta Delta = eps id at {X}', theta[X] @ c.delta, d.id(X) @ c.counit


def _residual(identities):
    return lambda family: [lhs - rhs for _, lhs, rhs in identities(family)]


def solve_V1(e):
    """Basis of V_1, the space of theta families"""
    layout = theta_layout(e)
    basis = layout.solve_space(_residual(lambda t: _theta_identities(e, t)))
    log.debug('V_1 of %s: %d unknowns, dimension %d', e.name, layout.size, len(basis))
    return [ThetaFamily(b) for b in basis]


def verify_theta(e, theta):
    v = Verdict('theta family')
    for label, lhs, rhs in _theta_identities(e, theta):
        v.expect_equal(label, lhs, rhs)
    return v


def check_F_separable(e):
    """
    Witness theta in V_1 with theta_X Delta = eps id_X for every X, or None
    when the affine system is inconsistent.
    """
    layout = theta_layout(e)

    def residual(t):
        rows = [lhs - rhs for _, lhs, rhs in _theta_identities(e, t)]
        return rows + [lhs - rhs for _, lhs, rhs in _theta_normalization(e, t)]

    solution = layout.solve_affine_space(residual)
    if solution is None:
        log.info('forgetful functor of %s is not separable: normalization is inconsistent on V_1',
                 e.name)
        return None
    theta = ThetaFamily(solution[0])
    v = verify_theta(e, theta)
    for label, lhs, rhs in _theta_normalization(e, theta):
        v.expect_equal(label, lhs, rhs)
    if not v:
        raise EntwineError(f'separability witness fails re-verification: {v}')
    return theta


'''
Eta: natural transformations 1 -> FG through W_1
'''


def eta_layout(e):
    d = e.cat
    return BlockLayout(e.field, {Y: (d.dim(Y, Y) * e.n, 1) for Y in d.objects})


def _eta_identities(e, eta):
    d = e.cat
    one_c = e.coalg.identity()
    for Y, Z in d.pairs():
        # a_Z g_psi (x) c_Z^psi = g a_Y (x) c_Y for g in Hom(Y,Z)
        lhs = kron(d.comp(Y, Z, Z), one_c) @ kron(d.eye(Z, Z), e.at(Y, Z)) \
            @ kron(eta[Z], d.eye(Y, Z))
        rhs = kron(d.comp(Y, Y, Z), one_c) @ kron(d.eye(Y, Z), eta[Y])
        yield f'integral identity at {(Y, Z)}', lhs, rhs


def _eta_normalization(e, eta):
    d = e.cat
    for X in d.objects:
        yield f'(id (x) eps) e = id at {X}', kron(d.eye(X, X), e.coalg.counit) @ eta[X], d.id(X)


def solve_W1(e):
    """Basis of W_1 in terms of the elements e_Y"""
    layout = eta_layout(e)
    basis = layout.solve_space(_residual(lambda t: _eta_identities(e, t)))
    log.debug('W_1 of %s: %d unknowns, dimension %d', e.name, layout.size, len(basis))
    return [EtaFamily(b) for b in basis]


def verify_eta(e, eta):
    """
    Integral identity on the elements, plus linearity and naturality of the
    reconstructed eta(X, Y).
    """
    d = e.cat
    one_c = e.coalg.identity()
    v = Verdict('eta family')
    for label, lhs, rhs in _eta_identities(e, eta):
        v.expect_equal(label, lhs, rhs)
    for X, W, Y in d.triples():
        # D-linearity: eta(g f) = eta(g) . f, input Hom(W,Y) (x) Hom(X,W)
        lhs = eta.eta(e, X, Y) @ d.comp(X, W, Y)
        rhs = kron(d.comp(X, W, Y), one_c) @ kron(d.eye(W, Y), e.at(X, W)) \
            @ kron(eta.eta(e, W, Y), d.eye(X, W))
        v.expect_equal(f'eta is D-linear at {(X, W, Y)}', lhs, rhs)
        # naturality: eta(g f) = (g (x) id) eta(f), input Hom(W,Y) (x) Hom(X,W)
        rhs = kron(d.comp(X, W, Y), one_c) @ kron(d.eye(W, Y), eta.eta(e, X, W))
        v.expect_equal(f'eta is natural at {(X, W, Y)}', lhs, rhs)
    return v


def check_G_separable(e):
    """Witness in W_1 with (id (x) eps) eta = id, or None"""
    layout = eta_layout(e)

    def residual(t):
        rows = [lhs - rhs for _, lhs, rhs in _eta_identities(e, t)]
        return rows + [lhs - rhs for _, lhs, rhs in _eta_normalization(e, t)]

    solution = layout.solve_affine_space(residual)
    if solution is None:
        log.info('coinduction functor of %s is not separable: normalization is inconsistent on W_1',
                 e.name)
        return None
    eta = EtaFamily(solution[0])
    v = verify_eta(e, eta)
    for label, lhs, rhs in _eta_normalization(e, eta):
        v.expect_equal(label, lhs, rhs)
    if not v:
        raise EntwineError(f'separability witness fails re-verification: {v}')
    return eta
