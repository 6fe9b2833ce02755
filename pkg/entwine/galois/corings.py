from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property

from entwine.category import (Bimodule, BimoduleTensor, RightModule, tensor_over_sub,
                              verify_bimodule)
from entwine.entwining import EntwinedModule
from entwine.errors import VerificationError
from entwine.linalg import Matrix, coordinates, kernel_basis, kron
from entwine.utils import Verdict

from .canonical import hEh_tensors, induced_entwining

log = logging.getLogger(__name__)


@dataclass(eq=False)
class Coring:
    """
    Coalgebra object in D-D bimodules.

    Parameter ``comult`` (``dict``):
        (X, Y) -> Matrix K(X,Y) -> (K (x)_D K)(X,Y) in the quotient
        coordinates of ``square``

    Parameter ``counit`` (``dict``):
        (X, Y) -> Matrix K(X,Y) -> Hom(X,Y)
    """
    carrier: Bimodule
    comult: dict = field(default_factory=dict)
    counit: dict = field(default_factory=dict)
    name: str = 'K'

    @property
    def base(self):
        return self.carrier.base

    @cached_property
    def square(self):
        return BimoduleTensor(self.carrier, self.carrier)

    @cached_property
    def cube(self):
        return BimoduleTensor(self.square.bimodule, self.carrier)


def _over_summands(t, field, rows, pieces):
    acc = Matrix.zeros(field, rows, t.ambient_dim)
    for Z, m in pieces.items():
        acc = acc + m @ t.restrict(Z)
    return acc @ t.section


def verify_coring(k):
    d = k.base
    f = d.field
    b = k.carrier
    sq = k.square
    sqb = sq.bimodule
    v = Verdict(f'coring {k.name}')
    v.merge(verify_bimodule(b))
    for X2, X, Y in d.triples():
        v.expect_equal(f'Delta is right linear at {(X2, X, Y)}', k.comult[(X2, Y)] @ b.right[(X2, X, Y)],
                       sqb.right[(X2, X, Y)] @ kron(k.comult[(X, Y)], d.eye(X2, X)))
        v.expect_equal(f'eps is right linear at {(X2, X, Y)}', k.counit[(X2, Y)] @ b.right[(X2, X, Y)],
                       d.comp(X2, X, Y) @ kron(k.counit[(X, Y)], d.eye(X2, X)))
    for X, Y, Y2 in d.triples():
        v.expect_equal(f'Delta is left linear at {(X, Y, Y2)}', k.comult[(X, Y2)] @ b.left[(X, Y, Y2)],
                       sqb.left[(X, Y, Y2)] @ kron(d.eye(Y, Y2), k.comult[(X, Y)]))
        v.expect_equal(f'eps is left linear at {(X, Y, Y2)}', k.counit[(X, Y2)] @ b.left[(X, Y, Y2)],
                       d.comp(X, Y, Y2) @ kron(d.eye(Y, Y2), k.counit[(X, Y)]))
    for X, Y in d.pairs():
        t = sq[(X, Y)]
        left = _over_summands(t, f, b.dim(X, Y), {
            Z: b.left[(X, Z, Y)] @ kron(k.counit[(Z, Y)], b.eye(X, Z)) for Z in d.objects})
        right = _over_summands(t, f, b.dim(X, Y), {
            Z: b.right[(X, Z, Y)] @ kron(b.eye(Z, Y), k.counit[(X, Z)]) for Z in d.objects})
        v.expect_equal(f'left counit law at {(X, Y)}', left @ k.comult[(X, Y)], b.eye(X, Y))
        v.expect_equal(f'right counit law at {(X, Y)}', right @ k.comult[(X, Y)], b.eye(X, Y))
    for X, Y in d.pairs():
        v.expect_equal(f'coassociativity at {(X, Y)}', _delta_left(k, X, Y) @ k.comult[(X, Y)],
                       _delta_right(k, X, Y) @ k.comult[(X, Y)])
    return v


def _delta_left(k, X, Y):
    """(Delta (x) id) : (K (x) K)(X,Y) -> ((K (x) K) (x) K)(X,Y)"""
    d = k.base
    t2, t3 = k.square[(X, Y)], k.cube[(X, Y)]
    pieces = {Z: t3.embed(Z) @ kron(k.comult[(Z, Y)], k.carrier.eye(X, Z)) for Z in d.objects}
    return t3.projection @ _over_summands(t2, d.field, t3.ambient_dim, pieces)


def _delta_right(k, X, Y):
    """(id (x) Delta) followed by reassociation into ((K (x) K) (x) K)(X,Y)"""
    d = k.base
    b = k.carrier
    t2, t3 = k.square[(X, Y)], k.cube[(X, Y)]
    pieces = {}
    for Z in d.objects:
        inner = k.square[(X, Z)]
        regroup = Matrix.zeros(d.field, t3.ambient_dim, b.dim(Z, Y) * inner.dim)
        for W in d.objects:
            outer = k.square[(W, Y)]
            regroup = regroup + t3.embed(W) @ kron(outer.projection @ outer.embed(Z), b.eye(X, W)) \
                @ kron(b.eye(Z, Y), inner.restrict(W) @ inner.section)
        pieces[Z] = regroup @ kron(b.eye(Z, Y), k.comult[(X, Z)])
    return t3.projection @ _over_summands(t2, d.field, t3.ambient_dim, pieces)


def coring_hC(e):
    """h (x) C with (f (x) c) . p = f p_psi (x) c^psi, Delta = id (x) Delta_C"""
    d, c = e.cat, e.coalg
    n = c.dim
    one_c = c.identity()
    dims = {(X, Y): d.dim(X, Y) * n for X, Y in d.pairs()}
    right = {(X2, X, Y): kron(d.comp(X2, X, Y), one_c) @ kron(d.eye(X, Y), e.at(X2, X))
             for X2, X, Y in d.triples()}
    left = {(X, Y, Y2): kron(d.comp(X, Y, Y2), one_c) for X, Y, Y2 in d.triples()}
    k = Coring(Bimodule(d, dims, right, left, name=f'h(x){c.name}'), name=f'h(x){c.name}')
    for X, Y in d.pairs():
        t = k.square[(X, Y)]
        # f (x) c_1 (x) c_2 -> [(f (x) c_1) (x) (id_X (x) c_2)], summand X
        spread = kron(d.eye(X, Y), one_c, d.id(X), one_c) @ kron(d.eye(X, Y), c.delta)
        k.comult[(X, Y)] = t.of(X, spread)
        k.counit[(X, Y)] = kron(d.eye(X, Y), c.counit)
    return k


def coring_hEh(sub, tensors=None):
    """h (x)_E h with Delta[f (x) f'] = [f (x) id_Z] (x) [id_Z (x) f'] and composition as counit"""
    d = sub.base
    f = d.field
    tensors = tensors or hEh_tensors(sub)
    dims = {pair: t.dim for pair, t in tensors.items()}
    right, left = {}, {}
    for X2, X, Y in d.triples():
        source, target = tensors[(X, Y)], tensors[(X2, Y)]
        acc = Matrix.zeros(f, target.ambient_dim, source.ambient_dim * d.dim(X2, X))
        for Z in d.objects:
            acc = acc + target.embed(Z) @ kron(d.eye(Z, Y), d.comp(X2, X, Z)) \
                @ kron(source.restrict(Z), d.eye(X2, X))
        right[(X2, X, Y)] = target.projection @ acc @ kron(source.section, d.eye(X2, X))
    for X, Y, Y2 in d.triples():
        source, target = tensors[(X, Y)], tensors[(X, Y2)]
        acc = Matrix.zeros(f, target.ambient_dim, d.dim(Y, Y2) * source.ambient_dim)
        for Z in d.objects:
            acc = acc + target.embed(Z) @ kron(d.comp(Z, Y, Y2), d.eye(X, Z)) \
                @ kron(d.eye(Y, Y2), source.restrict(Z))
        left[(X, Y, Y2)] = target.projection @ acc @ kron(d.eye(Y, Y2), source.section)
    k = Coring(Bimodule(d, dims, right, left, name='h(x)_E h'), name='h(x)_E h')
    for X, Y in d.pairs():
        t, t2 = tensors[(X, Y)], k.square[(X, Y)]
        pieces = {}
        for Z in d.objects:
            first = tensors[(Z, Y)].projection @ tensors[(Z, Y)].embed(Z)
            second = tensors[(X, Z)].projection @ tensors[(X, Z)].embed(Z)
            split = kron(d.eye(Z, Y), d.id(Z), d.id(Z), d.eye(X, Z))
            pieces[Z] = t2.embed(Z) @ kron(first, second) @ split
        k.comult[(X, Y)] = t2.projection @ _over_summands(t, f, t2.ambient_dim, pieces)
        k.counit[(X, Y)] = _over_summands(t, f, d.dim(X, Y), {Z: d.comp(X, Z, Y) for Z in d.objects})
    return k


def can_as_coring_iso(cm, source=None, target=None, entwining=None):
    """
    can : h (x)_E h -> h (x) C is a map of bimodules commuting with both
    comultiplications and counits. ``source`` and ``target`` default to the
    two standard corings; ``entwining`` to the induced one.
    """
    d = cm.galois.cat
    f = d.field
    source = source or coring_hEh(cm.sub, cm.tensors)
    target = target or coring_hC(entwining or induced_entwining(cm.galois, cm))
    v = Verdict('can as a coring map')
    for X2, X, Y in d.triples():
        v.expect_equal(f'can is right linear at {(X2, X, Y)}',
                       cm[(X2, Y)] @ source.carrier.right[(X2, X, Y)],
                       target.carrier.right[(X2, X, Y)] @ kron(cm[(X, Y)], d.eye(X2, X)))
        v.expect_equal(f'can is left linear at {(X2, X, Y)}',
                       cm[(X2, Y)] @ source.carrier.left[(X2, X, Y)],
                       target.carrier.left[(X2, X, Y)] @ kron(d.eye(X, Y), cm[(X2, X)]))
    for X, Y in d.pairs():
        v.expect_equal(f'can preserves the counit at {(X, Y)}', target.counit[(X, Y)] @ cm[(X, Y)],
                       source.counit[(X, Y)])
        s2, t2 = source.square[(X, Y)], target.square[(X, Y)]
        pieces = {Z: t2.embed(Z) @ kron(cm[(Z, Y)], cm[(X, Z)]) for Z in d.objects}
        both = t2.projection @ _over_summands(s2, f, t2.ambient_dim, pieces)
        v.expect_equal(f'can preserves Delta at {(X, Y)}', both @ source.comult[(X, Y)],
                       target.comult[(X, Y)] @ cm[(X, Y)])
    return v


'''
Group-like collections and comodules over a coring
'''


@dataclass(eq=False)
class GroupLikeCollection:
    coring: Coring
    elements: dict

    def __getitem__(self, X):
        return self.elements[X]


def group_like_hEh(k, tensors):
    """{[id_X (x) id_X]} in h (x)_E h"""
    d = k.base
    return GroupLikeCollection(k, {X: tensors[(X, X)].of(X, kron(d.id(X), d.id(X)))
                                   for X in d.objects})


def group_like_hC(k, g):
    """{rho_XX(id_X)} in h (x) C"""
    d = k.base
    return GroupLikeCollection(k, {X: g.rho(X, X) @ d.id(X) for X in d.objects})


def verify_group_like(s, sub):
    """Delta(s_X) = s_X (x) s_X, eps(s_X) = id_X, and e . s_X = s_Y . e on a basis of E"""
    k = s.coring
    d = k.base
    b = k.carrier
    v = Verdict('group-like collection')
    for X in d.objects:
        t = k.square[(X, X)]
        v.expect_equal(f'Delta(s) = s (x) s at {X}', k.comult[(X, X)] @ s[X], t.of(X, kron(s[X], s[X])))
        v.expect_equal(f'eps(s) = id at {X}', k.counit[(X, X)] @ s[X], d.id(X))
    for X, Y in d.pairs():
        basis = sub.subspace(X, Y)
        for j in range(basis.cols):
            e = basis.col(j)
            v.expect_equal(f'e . s_{X} = s_{Y} . e for basis element {j} of Hom_E{(X, Y)}',
                           b.left[(X, X, Y)] @ kron(e, s[X]), b.right[(X, Y, Y)] @ kron(s[Y], e))
    return v


@dataclass(eq=False)
class CoringComodule:
    """
    Right module N with coactions N(X) -> (N (x)_D K)(X) in the quotient
    coordinates of ``targets[X]``.
    """
    coring: Coring
    module: RightModule
    coactions: dict

    @cached_property
    def targets(self):
        b = self.coring.carrier
        return {X: tensor_over_sub(self.module, b.left_module(X)) for X in self.coring.base.objects}


def verify_coring_comodule(cc):
    """Counit law and D-linearity of the coaction"""
    k = cc.coring
    d = k.base
    n = cc.module
    b = k.carrier
    v = Verdict(f'{k.name}-comodule {n.name}')
    for X in d.objects:
        t = cc.targets[X]
        back = _over_summands(t, d.field, n.dim(X), {
            Z: n.act(X, Z) @ kron(n.eye(Z), k.counit[(X, Z)]) for Z in d.objects})
        v.expect_equal(f'counit law at {X}', back @ cc.coactions[X], n.eye(X))
    for X, Y in d.pairs():
        source, target = cc.targets[Y], cc.targets[X]
        acc = Matrix.zeros(d.field, target.ambient_dim, source.ambient_dim * d.dim(X, Y))
        for Z in d.objects:
            acc = acc + target.embed(Z) @ kron(n.eye(Z), b.right[(X, Y, Z)]) \
                @ kron(source.restrict(Z), d.eye(X, Y))
        action = target.projection @ acc @ kron(source.section, d.eye(X, Y))
        v.expect_equal(f'coaction is D-linear at {(X, Y)}', cc.coactions[X] @ n.act(X, Y),
                       action @ kron(cc.coactions[Y], d.eye(X, Y)))
    return v


def entwined_as_coring_comodule(e, m, k=None):
    """n -> [n_0 (x) (id_X (x) n_1)] over h (x) C"""
    d = e.cat
    k = k or coring_hC(e)
    cc = CoringComodule(k, m.module, {})
    for X in d.objects:
        spread = kron(m.module.eye(X), d.id(X), e.coalg.identity()) @ m.coaction(X)
        cc.coactions[X] = cc.targets[X].of(X, spread)
    return cc


def coring_comodule_to_entwined(e, cc):
    """[n (x) (f (x) c)] -> n . f (x) c"""
    d = e.cat
    n = cc.module
    one_c = e.coalg.identity()
    coactions = {}
    for X in d.objects:
        t = cc.targets[X]
        back = _over_summands(t, d.field, n.dim(X) * e.n, {
            Z: kron(n.act(X, Z), one_c) for Z in d.objects})
        coactions[X] = back @ cc.coactions[X]
    return EntwinedModule(n, coactions)


@dataclass(eq=False)
class CoinvariantModule:
    """N^co as a right E-module with its objectwise embedding into N"""
    module: RightModule
    embedding: dict


def coring_coinvariants(cc, s, sub):
    """N^co(X) = {n | rho(n) = [n (x) s_X]} with the restricted E-action"""
    verdict = verify_group_like(s, sub)
    if not verdict:
        raise VerificationError(verdict)
    d = sub.base
    n = cc.module
    embedding = {}
    for X in d.objects:
        t = cc.targets[X]
        with_s = t.of(X, kron(n.eye(X), s[X]))
        embedding[X] = kernel_basis(cc.coactions[X] - with_s)
    e_cat = sub.category
    actions = {}
    for X, Y in d.pairs():
        image = n.act(X, Y) @ kron(embedding[Y], sub.subspace(X, Y))
        coords = coordinates(embedding[X], image)
        if coords is None:
            raise VerificationError(Verdict('coinvariants').fail(f'E-action leaves N^co at {(X, Y)}'))
        actions[(X, Y)] = coords
    dims = {X: embedding[X].cols for X in d.objects}
    log.debug('coinvariants of %s: %s', n.name, dims)
    return CoinvariantModule(RightModule(e_cat, dims, actions, name=f'{n.name}^co'), embedding)
