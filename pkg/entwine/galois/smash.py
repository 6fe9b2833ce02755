from __future__ import annotations

from dataclasses import dataclass

from entwine.category import LinCategory, verify_category
from entwine.errors import EntwineError, VerificationError
from entwine.linalg import identity, kron, permute_legs
from entwine.utils import Verdict

from .data import GaloisData


def trivial_hom_action(cat, hopf):
    """k . f = eps(k) f"""
    return {(X, Y): kron(hopf.counit, cat.eye(X, Y)) for X, Y in cat.pairs()}


def verify_module_category(cat, hopf, action):
    """
    Left H-module structure on the hom spaces, ``action[(X, Y)]`` being
    H (x) Hom(X,Y) -> Hom(X,Y), with k . (g f) = (k_1 . g)(k_2 . f) and
    k . id = eps(k) id.
    """
    f = cat.field
    nh = hopf.dim
    one_h = identity(f, nh)
    v = Verdict(f'{cat.name} as a left {hopf.name}-module category')
    for X, Y in cat.pairs():
        act = action[(X, Y)]
        v.expect_equal(f'action is associative at {(X, Y)}', act @ kron(hopf.mult, cat.eye(X, Y)),
                       act @ kron(one_h, act))
        v.expect_equal(f'action is unital at {(X, Y)}', act @ kron(hopf.unit, cat.eye(X, Y)),
                       cat.eye(X, Y))
    for X, Y, Z in cat.triples():
        dyz, dxy = cat.dim(Y, Z), cat.dim(X, Y)
        lhs = action[(X, Z)] @ kron(one_h, cat.comp(X, Y, Z))
        # k (x) g (x) f -> k_1 (x) g (x) k_2 (x) f
        order = permute_legs(f, [nh, nh, dyz, dxy], [0, 2, 1, 3])
        rhs = cat.comp(X, Y, Z) @ kron(action[(Y, Z)], action[(X, Y)]) @ order \
            @ kron(hopf.delta, cat.eye(Y, Z), cat.eye(X, Y))
        v.expect_equal(f'action respects composition at {(X, Y, Z)}', lhs, rhs)
    for X in cat.objects:
        v.expect_equal(f'action fixes the identity of {X}', action[(X, X)] @ kron(one_h, cat.id(X)),
                       cat.id(X) @ hopf.counit)
    return v


@dataclass(eq=False)
class SmashProduct:
    """
    C # H: Hom(X,Y) (x) H with (g # k)(f # l) = g (k_1 . f) # k_2 l and the
    coaction f # h -> f # h_1 (x) h_2.
    """
    base: LinCategory
    hopf: object
    action: dict
    category: LinCategory
    galois: GaloisData


def smash_product(cat, hopf, action=None, name=None):
    """
    Raises ``VerificationError`` when ``action`` does not make the hom spaces
    a module category.
    """
    f = cat.field
    nh = hopf.dim
    one_h = identity(f, nh)
    action = action or trivial_hom_action(cat, hopf)
    verdict = verify_module_category(cat, hopf, action)
    if not verdict:
        raise VerificationError(verdict)
    hom_dims = {(X, Y): cat.dim(X, Y) * nh for X, Y in cat.pairs()}
    compose = {}
    for X, Y, Z in cat.triples():
        dyz, dxy = cat.dim(Y, Z), cat.dim(X, Y)
        split = kron(cat.eye(Y, Z), hopf.delta, cat.eye(X, Y), one_h)
        # g, k_1, k_2, f, l -> g, k_1, f, k_2, l
        order = permute_legs(f, [dyz, nh, nh, dxy, nh], [0, 1, 3, 2, 4])
        act = kron(cat.eye(Y, Z), action[(X, Y)], one_h, one_h)
        compose[(X, Y, Z)] = kron(cat.comp(X, Y, Z), hopf.mult) @ act @ order @ split
    identities = {X: kron(cat.id(X), hopf.unit) for X in cat.objects}
    names = {}
    for X, Y in cat.pairs():
        base_names = cat.names(X, Y)
        names[(X, Y)] = tuple(f'{a}#{b}' for a in base_names for b in hopf.names)
    smash = LinCategory(f, cat.objects, hom_dims, compose, identities, names,
                        name=name or f'{cat.name}#{hopf.name}')
    verdict = verify_category(smash)
    if not verdict:
        raise EntwineError(f'smash composition is not a category: {verdict}')
    coactions = {(X, Y): kron(cat.eye(X, Y), hopf.delta) for X, Y in cat.pairs()}
    g = GaloisData(smash, hopf.coalgebra, coactions, name=f'{smash.name} coaction')
    return SmashProduct(cat, hopf, action, smash, g)


def smash_can_inverse(sp, cm):
    """
    can^-1((g # k) (x) k') = (g # k)(id_X # S(k'_1)) (x) (id_X # k'_2),
    summand X; compared with the inverse of can at every pair.
    """
    d = sp.category
    h = sp.hopf
    one_h = identity(d.field, h.dim)
    maps = {}
    v = Verdict('smash formula for can^-1')
    for X, Y in d.pairs():
        t = cm.tensors[(X, Y)]
        ident = kron(sp.base.id(X), one_h)
        step = kron(d.comp(X, X, Y), d.eye(X, X)) @ kron(d.eye(X, Y), ident @ h.antipode, ident) \
            @ kron(d.eye(X, Y), h.delta)
        maps[(X, Y)] = t.of(X, step)
        if cm.invertible(X, Y):
            v.expect_equal(f'smash formula agrees with can^-1 at {(X, Y)}', maps[(X, Y)],
                           cm.inverse(X, Y))
        else:
            v.fail(f'can is not invertible at {(X, Y)}')
    return maps, v
