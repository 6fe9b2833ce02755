from __future__ import annotations

from entwine.errors import EntwineError, VerificationError
from entwine.linalg import Matrix, hstack, identity, kron, vstack

from .families import EtaFamily, ThetaFamily, verify_eta, verify_theta
from .functors import NatCH, build_Cstar_h, build_h_C, verify_nat


def _alpha_prime(e, theta, F, G):
    d = e.cat
    field = e.field
    n = e.n
    one_c = e.coalg.identity()
    comps = {}
    for Y in d.objects:
        for X in d.objects:
            dxy = d.dim(X, Y)
            blocks = []
            for i in range(n):
                spread = e.at(X, Y) @ kron(Matrix.unit(field, n, i), d.eye(X, Y))
                blocks.append(d.comp(X, X, Y) @ kron(d.eye(X, Y), theta[X]) @ kron(spread, one_c))
            comps[(X, Y)] = vstack(field, blocks, dxy * n)
    return NatCH(G, F, comps)


def _beta_prime(e, ups):
    d = e.cat
    field = e.field
    n = e.n
    out = {}
    for X in d.objects:
        dxx = d.dim(X, X)
        cols = []
        for k in range(n):
            for l in range(n):
                image = ups[(X, X)] @ kron(d.id(X), Matrix.unit(field, n, l))
                cols.append(image.block(k * dxx, (k + 1) * dxx, 0, 1))
        out[X] = hstack(field, cols, dxx)
    return ThetaFamily(out)


def v2_translate(e, theta):
    """
    alpha' : V_1 -> Nat(h (x) C, C* (x) h),
    f (x) c -> sum_i d_i* (x) f_psi theta_X(d_i^psi (x) c).
    """
    verdict = verify_theta(e, theta)
    if not verdict:
        raise VerificationError(verdict)
    F, G = build_Cstar_h(e), build_h_C(e)
    ups = _alpha_prime(e, theta, F, G)
    verdict = verify_nat(e, G, F, ups.components)
    if not verdict:
        raise VerificationError(verdict)
    back = _beta_prime(e, ups)
    for X in e.cat.objects:
        if back[X] != theta[X]:
            raise EntwineError(f'beta\'(alpha\'(theta)) differs from theta at {X}')
    return ups


def beta_prime(e, ups):
    """beta' : theta_X(c (x) d) = (Upsilon_X(X)(id_X (x) d))(c)"""
    verdict = verify_nat(e, ups.source, ups.target, ups.components)
    if not verdict:
        raise VerificationError(verdict)
    theta = _beta_prime(e, ups)
    verdict = verify_theta(e, theta)
    if not verdict:
        raise VerificationError(verdict)
    again = _alpha_prime(e, theta, ups.target, ups.source)
    for pair, m in ups.components.items():
        if again[pair] != m:
            raise EntwineError(f'alpha\'(beta\'(Upsilon)) differs from Upsilon at {pair}')
    return theta


def _gamma_prime(e, eta, F, G):
    d, c = e.cat, e.coalg
    field = e.field
    n = c.dim
    one_c = c.identity()
    comps = {}
    for Y in d.objects:
        dyy = d.dim(Y, Y)
        split = kron(d.eye(Y, Y), c.delta) @ eta[Y]
        for X in d.objects:
            dxy = d.dim(X, Y)
            blocks = []
            for i in range(n):
                # sum a_Y (x) c_Y1 d_i*(c_Y2)
                v = kron(d.eye(Y, Y), one_c, Matrix.unit(field, n, i).T) @ split
                blocks.append(kron(d.comp(X, Y, Y), one_c) @ kron(d.eye(Y, Y), e.at(X, Y))
                              @ kron(v, d.eye(X, Y)))
            comps[(X, Y)] = hstack(field, blocks, dxy * n)
    return NatCH(F, G, comps)


def _delta_prime(e, phi):
    d, c = e.cat, e.coalg
    return EtaFamily({Y: phi[(Y, Y)] @ kron(c.counit.T, d.id(Y)) for Y in d.objects})


def w2_translate(e, eta):
    """
    gamma' : W_1 -> Nat(C* (x) h, h (x) C),
    c* (x) f -> sum a_Y f_psi (x) c*(c_Y2) c_Y1^psi.
    """
    verdict = verify_eta(e, eta)
    if not verdict:
        raise VerificationError(verdict)
    F, G = build_Cstar_h(e), build_h_C(e)
    phi = _gamma_prime(e, eta, F, G)
    verdict = verify_nat(e, F, G, phi.components)
    if not verdict:
        raise VerificationError(verdict)
    back = _delta_prime(e, phi)
    for Y in e.cat.objects:
        if back[Y] != eta[Y]:
            raise EntwineError(f'delta\'(gamma\'(eta)) differs from eta at {Y}')
    return phi


def delta_prime(e, phi):
    """delta' : eta(X, Y)(f) = Phi_Y(X)(eps (x) f)"""
    verdict = verify_nat(e, phi.source, phi.target, phi.components)
    if not verdict:
        raise VerificationError(verdict)
    eta = _delta_prime(e, phi)
    verdict = verify_eta(e, eta)
    if not verdict:
        raise VerificationError(verdict)
    again = _gamma_prime(e, eta, phi.source, phi.target)
    for pair, m in phi.components.items():
        if again[pair] != m:
            raise EntwineError(f'gamma\'(delta\'(Phi)) differs from Phi at {pair}')
    return eta
