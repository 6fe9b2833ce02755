from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from entwine.errors import EntwineError, VerificationError
from entwine.linalg import BlockLayout, coordinates, identity, inverse, kron
from entwine.utils import Verdict

from .canonical import canonical_map, induced_entwining, representables_entwined
from .data import coinvariant_subcategory

log = logging.getLogger(__name__)


@dataclass(eq=False)
class PhiFamily:
    """
    Per pair a colinear map Phi_XY : C -> Hom(X,Y); ``inverse`` holds the
    convolution inverse once found.
    """
    components: dict
    inverse: Optional['PhiFamily'] = None

    def __getitem__(self, pair):
        return self.components[pair]


def _convolution_identities(g, phi, other):
    d, c = g.cat, g.coalg
    for X, Y in d.pairs():
        # Phi_XY(c_1) o Phi'_YX(c_2) and Phi'_XY(c_1) o Phi_YX(c_2)
        yield (f'Phi * Phi\' = eps id at {(X, Y)}',
               d.comp(Y, X, Y) @ kron(phi[(X, Y)], other[(Y, X)]) @ c.delta, d.id(Y) @ c.counit)
        yield (f'Phi\' * Phi = eps id at {(X, Y)}',
               d.comp(Y, X, Y) @ kron(other[(X, Y)], phi[(Y, X)]) @ c.delta, d.id(Y) @ c.counit)


def _colinearity_identities(g, phi):
    c = g.coalg
    for X, Y in g.cat.pairs():
        yield f'Phi is colinear at {(X, Y)}', g.rho(X, Y) @ phi[(X, Y)], kron(phi[(X, Y)], c.identity()) @ c.delta


def verify_phi(g, phi, inverse_family=None):
    v = Verdict('Phi family')
    for label, lhs, rhs in _colinearity_identities(g, phi):
        v.expect_equal(label, lhs, rhs, g.coalg.names)
    if inverse_family is not None:
        for label, lhs, rhs in _colinearity_identities(g, inverse_family):
            v.expect_equal(label.replace('Phi', 'Phi\''), lhs, rhs, g.coalg.names)
        for label, lhs, rhs in _convolution_identities(g, phi, inverse_family):
            v.expect_equal(label, lhs, rhs, g.coalg.names)
    return v


def convolution_inverse(g, phi):
    """
    Two-sided convolution inverse among families of colinear maps, or None.
    Raises ``VerificationError`` when ``phi`` itself is not colinear.
    """
    verdict = verify_phi(g, phi)
    if not verdict:
        raise VerificationError(verdict)
    d = g.cat
    layout = BlockLayout(g.field, {(X, Y): (d.dim(X, Y), g.coalg.dim) for X, Y in d.pairs()})

    def residual(other):
        rows = [lhs - rhs for _, lhs, rhs in _colinearity_identities(g, other)]
        return rows + [lhs - rhs for _, lhs, rhs in _convolution_identities(g, phi, other)]

    solution = layout.solve_affine_space(residual)
    if solution is None:
        log.info('Phi has no convolution inverse')
        return None
    other = PhiFamily(solution[0])
    verdict = verify_phi(g, phi, other)
    if not verdict:
        raise EntwineError(f'convolution inverse fails re-verification: {verdict}')
    return PhiFamily(dict(phi.components), other)


def can_inverse_via_phi(cm, phi):
    """
    can^-1_XY(f (x) c) = [f Phi'_YX(c_1) (x) Phi_XY(c_2)], summand Y; checked
    as a two-sided inverse of can at every pair.
    """
    if phi.inverse is None:
        raise EntwineError('Phi carries no convolution inverse')
    g = cm.galois
    d, c = g.cat, g.coalg
    other = phi.inverse
    maps = {}
    v = Verdict('can inverse from Phi')
    for X, Y in d.pairs():
        t = cm.tensors[(X, Y)]
        first = d.comp(Y, X, Y) @ kron(d.eye(X, Y), other[(Y, X)])
        maps[(X, Y)] = t.of(Y, kron(first, phi[(X, Y)]) @ kron(d.eye(X, Y), c.delta))
        v.expect_equal(f'can can^-1 = id at {(X, Y)}', cm[(X, Y)] @ maps[(X, Y)],
                       identity(g.field, d.dim(X, Y) * c.dim))
        v.expect_equal(f'can^-1 can = id at {(X, Y)}', maps[(X, Y)] @ cm[(X, Y)], identity(g.field, t.dim))
    return maps, v


@dataclass(eq=False)
class GaloisCriteria:
    """
    The three equivalent conditions for a family Phi: can is invertible,
    an entwining making every h_Y entwined is induced, and f_0 Phi'(f_1) is
    coinvariant for every f.
    """
    galois: bool
    entwining: bool
    coinvariance: bool
    details: Verdict = field(default_factory=lambda: Verdict('galois criteria'))

    @property
    def agree(self):
        return self.galois == self.entwining == self.coinvariance


def galois_criteria(g, phi):
    """
    Evaluate the three conditions independently. Without a convolution
    inverse of ``phi`` the coinvariance condition is reported false.
    """
    d = g.cat
    sub = coinvariant_subcategory(g)
    cm = canonical_map(g, sub)
    details = Verdict('galois criteria')
    is_galois = cm.is_galois
    if not is_galois:
        details.fail(f'can is not invertible: {cm.report()}')

    has_entwining = False
    if is_galois:
        try:
            e = induced_entwining(g, cm)
            has_entwining = bool(representables_entwined(g, e))
        except VerificationError as err:
            details.merge(err.verdict, 'induced entwining')
    else:
        details.fail('no entwining is induced without an invertible can')

    inverse_phi = phi if phi.inverse is not None else convolution_inverse(g, phi)
    coinvariance = inverse_phi is not None
    if inverse_phi is None:
        details.fail('Phi has no convolution inverse')
    else:
        other = inverse_phi.inverse
        for X, Y in d.pairs():
            for Z in d.objects:
                image = d.comp(Z, X, Y) @ kron(d.eye(X, Y), other[(Z, X)]) @ g.rho(X, Y)
                if not sub.contains(Z, Y, image):
                    coinvariance = False
                    details.fail(f'f_0 Phi\'(f_1) leaves Hom_E{(Z, Y)} for some f in Hom{(X, Y)}')
    result = GaloisCriteria(is_galois, has_entwining, coinvariance, details)
    if not result.agree:
        log.warning('galois criteria disagree: %s', result)
    return result


@dataclass(eq=False)
class DecompositionIso:
    """
    Hom(X,-) = Hom_E(X,-) (x) C, with ``forward[Y]`` the map into E-coordinates
    tensor C and ``backward[Y]`` its inverse.
    """
    X: object
    forward: dict
    backward: dict
    verdict: Verdict


def decomposition_iso(g, sub, phi, X):
    """
    f -> f_0 Phi'_XX(f_1) (x) f_2 and f' (x) c -> f' Phi_XX(c), both checked
    as mutually inverse, E-linear and colinear.
    """
    if phi.inverse is None:
        raise EntwineError('Phi carries no convolution inverse')
    d, c = g.cat, g.coalg
    one_c = c.identity()
    other = phi.inverse
    forward, backward = {}, {}
    v = Verdict(f'Hom({X}, -) = Hom_E({X}, -) (x) {c.name}')
    for Y in d.objects:
        basis = sub.subspace(X, Y)
        image = kron(d.comp(X, X, Y) @ kron(d.eye(X, Y), other[(X, X)]), one_c) \
            @ kron(d.eye(X, Y), c.delta) @ g.rho(X, Y)
        coords = coordinates(kron(basis, one_c), image)
        if coords is None:
            raise VerificationError(v.fail(f'f_0 Phi\'(f_1) is not coinvariant at {Y}'))
        forward[Y] = coords
        backward[Y] = d.comp(X, X, Y) @ kron(basis, phi[(X, X)])
        v.expect_equal(f'backward forward = id at {Y}', backward[Y] @ forward[Y], d.eye(X, Y))
        v.expect_equal(f'forward backward = id at {Y}', forward[Y] @ backward[Y],
                       identity(g.field, basis.cols * c.dim))
        v.expect_equal(f'forward is colinear at {Y}', kron(identity(g.field, basis.cols), c.delta) @ forward[Y],
                       kron(forward[Y], one_c) @ g.rho(X, Y))
    e_cat = sub.category
    for Y, Y2 in d.pairs():
        # postcomposition with a morphism of E
        post_d = d.comp(X, Y, Y2) @ kron(sub.subspace(Y, Y2), d.eye(X, Y))
        post_e = e_cat.comp(X, Y, Y2)
        lhs = forward[Y2] @ post_d
        rhs = kron(post_e, one_c) @ kron(identity(g.field, e_cat.dim(Y, Y2)), forward[Y])
        v.expect_equal(f'forward is E-linear along Hom_E{(Y, Y2)}', lhs, rhs)
    if not v:
        raise VerificationError(v)
    return DecompositionIso(X, forward, backward, v)
