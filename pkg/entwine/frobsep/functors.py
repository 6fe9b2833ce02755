from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable

from entwine.algebra import dual_comodule_structure
from entwine.category import RightModule, representable_right
from entwine.entwining import EntwinedModule, module_tensor_C
from entwine.linalg import BlockLayout, Matrix, identity, kron, permute_legs
from entwine.utils import Verdict

log = logging.getLogger(__name__)


@dataclass(eq=False)
class ModuleFunctor:
    """
    A functor D -> M(psi), Y -> ``modules[Y]``.

    Parameter ``lift`` (``Callable``):
        (Y, X, Z) -> Matrix F(Y)(Z) (x) Hom(Y,X) -> F(X)(Z), the image of a
        morphism f : Y -> X evaluated at Z
    """
    name: str
    modules: dict
    lift: Callable

    def __getitem__(self, Y):
        return self.modules[Y]


@dataclass(eq=False)
class NatCH:
    """
    Morphism of functors between C* (x) h and h (x) C. ``components[(X, Y)]``
    is the map at the module of Y evaluated at X.
    """
    source: ModuleFunctor
    target: ModuleFunctor
    components: dict

    @property
    def direction(self):
        return f'{self.source.name} -> {self.target.name}'

    def __getitem__(self, pair):
        return self.components[pair]


def build_Cstar_h(e):
    """
    Y -> C* (x) h_Y with precomposition, coaction
    c* (x) g -> sum_i d_i* . c* (x) g_psi (x) d_i^psi, and morphisms acting by
    (f . phi)(x) = f_psi phi(x^psi).
    """
    d, c = e.cat, e.coalg
    field = e.field
    n = c.dim
    one_n = identity(field, n)
    dual = dual_comodule_structure(c)
    modules = {}
    for Y in d.objects:
        dims = {Z: n * d.dim(Z, Y) for Z in d.objects}
        actions = {(Z, W): kron(one_n, d.comp(Z, W, Y)) for Z, W in d.pairs()}
        coactions = {Z: kron(one_n, e.at(Z, Y)) @ kron(dual.rho, d.eye(Z, Y)) for Z in d.objects}
        module = RightModule(d, dims, actions, name=f'{c.name}*(x)h_{Y}')
        modules[Y] = EntwinedModule(module, coactions)

    def transfer(Y, X):
        # d_i* (x) f -> sum_j d_j* (x) (component of psi(d_j (x) f) at d_i)
        dyx = d.dim(Y, X)
        psi = e.at(Y, X)
        t = Matrix.zeros(field, n * dyx, n * dyx)
        for j in range(n):
            for u in range(dyx):
                for i in range(n):
                    for f in range(dyx):
                        t.data[j * dyx + u, i * dyx + f] = psi.data[u * n + i, j * dyx + f]
        return t

    def lift(Y, X, Z):
        dzy, dyx = d.dim(Z, Y), d.dim(Y, X)
        order = permute_legs(field, [n, dzy, dyx], [0, 2, 1])
        return kron(one_n, d.comp(Z, Y, X)) @ kron(transfer(Y, X), d.eye(Z, Y)) @ order

    return ModuleFunctor(f'{c.name}*(x)h', modules, lift)


def build_h_C(e):
    """Y -> h_Y (x) C; morphisms act by postcomposition on the first leg"""
    d, c = e.cat, e.coalg
    field = e.field
    modules = {Y: module_tensor_C(e, representable_right(d, Y)) for Y in d.objects}

    def lift(Y, X, Z):
        order = permute_legs(field, [d.dim(Z, Y), c.dim, d.dim(Y, X)], [2, 0, 1])
        return kron(d.comp(Z, Y, X), c.identity()) @ order

    return ModuleFunctor(f'h(x){c.name}', modules, lift)


def _nat_identities(e, F, G, comps):
    d = e.cat
    one_c = e.coalg.identity()
    for Y in d.objects:
        m, n = F[Y], G[Y]
        for X, W in d.pairs():
            yield (f'D-linear at {(X, W)} for {Y}', comps[(X, Y)] @ m.act(X, W),
                   n.act(X, W) @ kron(comps[(W, Y)], d.eye(X, W)))
        for X in d.objects:
            yield (f'colinear at {X} for {Y}', n.coaction(X) @ comps[(X, Y)],
                   kron(comps[(X, Y)], one_c) @ m.coaction(X))
    for Y, X in d.pairs():
        for Z in d.objects:
            yield (f'natural along Hom{(Y, X)} at {Z}', comps[(Z, X)] @ F.lift(Y, X, Z),
                   G.lift(Y, X, Z) @ kron(comps[(Z, Y)], d.eye(Y, X)))


def nat_layout(e, F, G):
    d = e.cat
    return BlockLayout(e.field, {(X, Y): (G[Y].dim(X), F[Y].dim(X)) for Y in d.objects
                                 for X in d.objects})


def nat_residual(e, F, G):
    return lambda comps: [lhs - rhs for _, lhs, rhs in _nat_identities(e, F, G, comps)]


def nat_space(e, F, G):
    """Basis of the morphisms of functors F -> G"""
    layout = nat_layout(e, F, G)
    basis = layout.solve_space(nat_residual(e, F, G))
    log.debug('Nat(%s, %s): %d unknowns, dimension %d', F.name, G.name, layout.size, len(basis))
    return [NatCH(F, G, b) for b in basis]


def verify_nat(e, F, G, comps):
    v = Verdict(f'morphism {F.name} -> {G.name}')
    for label, lhs, rhs in _nat_identities(e, F, G, comps):
        v.expect_equal(label, lhs, rhs)
    return v
