from __future__ import annotations

import logging
from dataclasses import dataclass

from entwine.category import representable_left, representable_right, tensor_over_sub
from entwine.entwining import EntwinedModule, Entwining, verify_entwined_module, verify_entwining
from entwine.errors import EntwineError, VerificationError
from entwine.linalg import Matrix, inverse, kron, rank
from entwine.utils import Verdict

from .data import check_coinvariant

log = logging.getLogger(__name__)


def hEh_tensors(sub):
    """(X, Y) -> h_Y (x)_E _Xh, summand Z being Hom(Z,Y) (x) Hom(X,Z)"""
    d = sub.base
    return {(X, Y): tensor_over_sub(sub.restrict_right(representable_right(d, Y)),
                                    sub.restrict_left(representable_left(d, X)))
            for X, Y in d.pairs()}


def _sum_over(t, field, rows, pieces):
    """sum over Z of pieces[Z] @ restrict(Z), a map out of the ambient direct sum"""
    acc = Matrix.zeros(field, rows, t.ambient_dim)
    for Z, m in pieces.items():
        acc = acc + m @ t.restrict(Z)
    return acc


@dataclass(eq=False)
class CanonicalMap:
    """
    can_XY : h_Y (x)_E _Xh -> Hom(X,Y) (x) C, [f (x) f'] -> f f'_0 (x) f'_1,
    stored in quotient coordinates for every pair.
    """
    galois: object
    sub: object
    tensors: dict
    pre: dict
    maps: dict

    def __getitem__(self, pair):
        return self.maps[pair]

    def rank(self, X, Y):
        return rank(self.maps[(X, Y)])

    def invertible(self, X, Y):
        m = self.maps[(X, Y)]
        return m.rows == m.cols and self.rank(X, Y) == m.rows

    @property
    def is_galois(self):
        return all(self.invertible(X, Y) for X, Y in self.galois.cat.pairs())

    def inverse(self, X, Y):
        inv = inverse(self.maps[(X, Y)])
        if inv is None:
            raise EntwineError(f'can at {(X, Y)} is not invertible (rank {self.rank(X, Y)})')
        return inv

    def report(self):
        return {(X, Y): (self.rank(X, Y), self.invertible(X, Y)) for X, Y in self.galois.cat.pairs()}


def canonical_map(g, sub, tensors=None):
    """
    Build can for every pair. ``sub`` must consist of coinvariant morphisms;
    the pre-quotient map must vanish on the balancing relations.
    """
    verdict = check_coinvariant(g, sub)
    if not verdict:
        raise VerificationError(verdict)
    d = g.cat
    one_c = g.coalg.identity()
    tensors = tensors or hEh_tensors(sub)
    pre, maps = {}, {}
    well_defined = Verdict('can is well defined')
    for X, Y in d.pairs():
        t = tensors[(X, Y)]
        pieces = {Z: kron(d.comp(X, Z, Y), one_c) @ kron(d.eye(Z, Y), g.rho(X, Z)) for Z in d.objects}
        pre[(X, Y)] = _sum_over(t, d.field, d.dim(X, Y) * g.coalg.dim, pieces)
        if not (pre[(X, Y)] @ t.relations).is_zero():
            well_defined.fail(f'relations at {(X, Y)} are not killed')
        maps[(X, Y)] = pre[(X, Y)] @ t.section
    if not well_defined:
        raise VerificationError(well_defined)
    cm = CanonicalMap(g, sub, tensors, pre, maps)
    log.debug('canonical map ranks: %s', cm.report())
    return cm


'''
Translation maps
'''


@dataclass(eq=False)
class TranslationMap:
    """tau_X : C -> h_X (x)_E _Xh, c -> can_XX^-1(id_X (x) c)"""
    canonical: CanonicalMap
    maps: dict
    verdict: Verdict

    def __getitem__(self, X):
        return self.maps[X]

    def lifted(self, X, Z):
        """tau_X followed by a representative in Hom(Z,X) (x) Hom(X,Z)"""
        t = self.canonical.tensors[(X, X)]
        return t.restrict(Z) @ t.section @ self.maps[X]


def quotient_coaction(cm, X, Y):
    """[f (x) f'] -> [f (x) f'_0] (x) f'_1 on h_Y (x)_E _Xh"""
    g = cm.galois
    d = g.cat
    one_c = g.coalg.identity()
    t = cm.tensors[(X, Y)]
    acc = Matrix.zeros(d.field, t.ambient_dim * g.coalg.dim, t.ambient_dim)
    for Z in d.objects:
        acc = acc + kron(t.embed(Z), one_c) @ kron(d.eye(Z, Y), g.rho(X, Z)) @ t.restrict(Z)
    return kron(t.projection, one_c) @ acc @ t.section


def translation_maps(cm):
    """
    tau_X for every object, with its three identities checked: tau is
    colinear, f_0 tau(f_1) = [id_Y (x) f], and composing the legs of tau(c)
    gives eps(c) id_X.
    """
    g = cm.galois
    d, c = g.cat, g.coalg
    one_c = c.identity()
    maps = {}
    for X in d.objects:
        maps[X] = cm.inverse(X, X) @ kron(d.id(X), one_c)
    tau = TranslationMap(cm, maps, Verdict('translation map'))
    v = tau.verdict
    for X in d.objects:
        v.expect_equal(f'tau is colinear at {X}', quotient_coaction(cm, X, X) @ maps[X],
                       kron(maps[X], one_c) @ c.delta, c.names)
        t = cm.tensors[(X, X)]
        mult = sum((d.comp(X, Z, X) @ t.restrict(Z) for Z in d.objects),
                   Matrix.zeros(d.field, d.dim(X, X), t.ambient_dim))
        v.expect_equal(f'tau(c) composes to eps(c) id at {X}', mult @ t.section @ maps[X],
                       d.id(X) @ c.counit, c.names)
    for X, Y in d.pairs():
        t = cm.tensors[(X, Y)]
        acc = Matrix.zeros(d.field, t.ambient_dim, d.dim(X, Y))
        for Z in d.objects:
            # f_0 (x) tau_X(f_1) -> [f_0 tau^1 (x) tau^2], summand Z
            post = kron(d.comp(Z, X, Y), d.eye(X, Z))
            acc = acc + t.embed(Z) @ post @ kron(d.eye(X, Y), tau.lifted(X, Z)) @ g.rho(X, Y)
        expected = t.of(Y, kron(d.id(Y), d.eye(X, Y)))
        v.expect_equal(f'f_0 tau(f_1) = [id (x) f] at {(X, Y)}', t.projection @ acc, expected)
    if not v:
        raise VerificationError(v)
    return tau


'''
Induced entwining
'''


def induced_entwining(g, cm, tau=None, name='induced'):
    """
    psi_XY(c (x) f) = can_XY(tau_Y(c) . f), the dot appending f to the right
    leg. The result is checked as an entwining for which every h_Y, with the
    given coactions, is an entwined module.
    """
    tau = tau or translation_maps(cm)
    d = g.cat
    psi = {}
    for X, Y in d.pairs():
        t = cm.tensors[(X, Y)]
        acc = Matrix.zeros(d.field, t.ambient_dim, g.coalg.dim * d.dim(X, Y))
        for Z in d.objects:
            acc = acc + t.embed(Z) @ kron(d.eye(Z, Y), d.comp(X, Y, Z)) @ kron(tau.lifted(Y, Z), d.eye(X, Y))
        psi[(X, Y)] = cm[(X, Y)] @ t.projection @ acc
    e = Entwining(d, g.coalg, psi, name)
    verdict = verify_entwining(e)
    verdict.merge(representables_entwined(g, e))
    if not verdict:
        raise VerificationError(verdict)
    return e


def representable_entwined(g, Y):
    """h_Y with the hom coactions rho_XY"""
    d = g.cat
    return EntwinedModule(representable_right(d, Y), {X: g.rho(X, Y) for X in d.objects})


def representables_entwined(g, e):
    v = Verdict(f'representables entwined by {e.name}')
    for Y in g.cat.objects:
        v.merge(verify_entwined_module(e, representable_entwined(g, Y)))
    return v


def same_entwining(g, psi, candidate):
    """
    Uniqueness check: a ``candidate`` entwining under which every h_Y is an
    entwined module must coincide with ``psi``.
    """
    v = Verdict(f'{candidate.name} agrees with {psi.name}')
    if not representables_entwined(g, candidate):
        return v.fail(f'{candidate.name} does not make the representables entwined modules')
    for X, Y in g.cat.pairs():
        v.expect_equal(f'psi at {(X, Y)}', candidate.at(X, Y), psi.at(X, Y))
    return v
