from __future__ import annotations

import logging
from dataclasses import dataclass

from entwine.category import RightModule, representable_left, tensor_over_sub
from entwine.entwining import (EntwinedModule, EntwinedMorphism, is_entwined_morphism,
                               verify_entwined_module)
from entwine.errors import VerificationError
from entwine.linalg import Matrix, coordinates, inverse, kron, rank
from entwine.utils import Verdict

from .corings import (coring_coinvariants, coring_hC, entwined_as_coring_comodule,
                      group_like_hC)

log = logging.getLogger(__name__)


@dataclass(eq=False)
class InducedModule:
    """M (x)_E h as an entwined module, with the E-linear map M -> M (x)_E h"""
    entwined: EntwinedModule
    tensors: dict
    unit: dict


def tensor_with_h(g, sub, e, m):
    """
    M (x)_E h for a right E-module M: objectwise the quotient of
    sum_Z M(Z) (x) Hom(X,Z), acting by precomposition on the right leg, with
    coaction [m (x) f] -> [m (x) f_0] (x) f_1. ``unit[X]`` sends m to [m (x) id_X].
    """
    d = g.cat
    f = d.field
    one_c = g.coalg.identity()
    tensors = {X: tensor_over_sub(m, sub.restrict_left(representable_left(d, X))) for X in d.objects}
    actions = {}
    for X2, X in d.pairs():
        source, target = tensors[X], tensors[X2]
        acc = Matrix.zeros(f, target.ambient_dim, source.ambient_dim * d.dim(X2, X))
        for Z in d.objects:
            acc = acc + target.embed(Z) @ kron(m.eye(Z), d.comp(X2, X, Z)) \
                @ kron(source.restrict(Z), d.eye(X2, X))
        actions[(X2, X)] = target.projection @ acc @ kron(source.section, d.eye(X2, X))
    coactions, unit = {}, {}
    for X in d.objects:
        t = tensors[X]
        acc = Matrix.zeros(f, t.ambient_dim * g.coalg.dim, t.ambient_dim)
        for Z in d.objects:
            acc = acc + kron(t.embed(Z), one_c) @ kron(m.eye(Z), g.rho(X, Z)) @ t.restrict(Z)
        coactions[X] = kron(t.projection, one_c) @ acc @ t.section
        unit[X] = t.of(X, kron(m.eye(X), d.id(X)))
    module = RightModule(d, {X: tensors[X].dim for X in d.objects}, actions,
                         name=f'{m.name}(x)_E h')
    induced = InducedModule(EntwinedModule(module, coactions), tensors, unit)
    verdict = verify_entwined_module(e, induced.entwined)
    if not verdict:
        raise VerificationError(verdict)
    return induced


def verify_unit_monomorphism(sub, m, induced):
    """M -> M (x)_E h is injective and E-linear"""
    d = sub.base
    v = Verdict(f'{m.name} -> {m.name} (x)_E h')
    n = induced.entwined.module
    for X in d.objects:
        if rank(induced.unit[X]) != m.dim(X):
            v.fail(f'not injective at {X}')
    for X, Y in d.pairs():
        lhs = induced.unit[X] @ m.act(X, Y)
        rhs = n.act(X, Y) @ kron(induced.unit[Y], sub.subspace(X, Y))
        v.expect_equal(f'E-linear at {(X, Y)}', lhs, rhs)
    return v


def _coinvariants(g, sub, e, n, k):
    cc = entwined_as_coring_comodule(e, n, k)
    return coring_coinvariants(cc, group_like_hC(k, g), sub)


def equivalence_roundtrip(g, sub, e, e_modules=(), entwined_modules=()):
    """
    For every right E-module M: (M (x)_E h)^co is identified with M through
    the unit map. For every entwined module N: N^co (x)_E h -> N,
    [n (x) f] -> n . f, is an isomorphism of entwined modules.
    """
    d = g.cat
    k = coring_hC(e)
    v = Verdict('Mod-E and entwined modules')
    for m in e_modules:
        induced = tensor_with_h(g, sub, e, m)
        v.merge(verify_unit_monomorphism(sub, m, induced))
        co = _coinvariants(g, sub, e, induced.entwined, k)
        for X in d.objects:
            coords = coordinates(co.embedding[X], induced.unit[X])
            if coords is None or inverse(coords) is None:
                v.fail(f'({m.name} (x)_E h)^co differs from {m.name} at {X}')
        log.debug('%s -> %s -> %s', m.dims, induced.entwined.module.dims, co.module.dims)
    for n in entwined_modules:
        co = _coinvariants(g, sub, e, n, k)
        induced = tensor_with_h(g, sub, e, co.module)
        comps = {}
        for X in d.objects:
            t = induced.tensors[X]
            acc = Matrix.zeros(d.field, n.dim(X), t.ambient_dim)
            for Z in d.objects:
                acc = acc + n.act(X, Z) @ kron(co.embedding[Z], d.eye(X, Z)) @ t.restrict(Z)
            comps[X] = acc @ t.section
            if inverse(comps[X]) is None:
                v.fail(f'{n.name}^co (x)_E h -> {n.name} is not invertible at {X}')
        morphism = EntwinedMorphism(induced.entwined, n, comps,
                                    is_entwined_morphism(e, induced.entwined, n, comps))
        v.merge(morphism.verdict)
    return v
