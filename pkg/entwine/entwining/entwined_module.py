from __future__ import annotations

import logging
from dataclasses import dataclass, field

from entwine.algebra import Comodule, closure, regular_comodule, verify_comodule
from entwine.category import (KernelCokernel, ModuleMorphism, RightModule, is_module_morphism,
                              kernel_cokernel, representable_right, verify_right_module)
from entwine.errors import EntwineError, ShapeError, VerificationError
from entwine.linalg import Matrix, coordinates, identity, kron
from entwine.utils import Verdict

log = logging.getLogger(__name__)


@dataclass(eq=False)
class EntwinedModule:
    """
    Right module over the category together with a C-coaction on every
    M(X) compatible with the actions through psi.

    Parameter ``coactions`` (``dict``):
        X -> Matrix M(X) -> M(X) (x) C
    """
    module: RightModule
    coactions: dict
    name: str = None

    def __post_init__(self):
        if self.name is None:
            self.name = self.module.name

    @property
    def base(self):
        return self.module.base

    @property
    def field(self):
        return self.module.field

    def dim(self, X):
        return self.module.dim(X)

    def act(self, X, Y):
        return self.module.act(X, Y)

    def coaction(self, X):
        try:
            return self.coactions[X]
        except KeyError:
            raise ShapeError(f'entwined module {self.name}: no coaction at {X}')

    def comodule(self, X, coalg):
        return Comodule(coalg, self.dim(X), self.coaction(X), name=f'{self.name}({X})')

    def to_string(self):
        return f'EntwinedModule[{self.name}, dims = {self.module.dims}]'


@dataclass(eq=False)
class EntwinedMorphism:
    """
    Morphism of entwined modules. ``verdict`` holds the outcome of the
    linearity and colinearity checks when the morphism was built by one of
    the constructions below.
    """
    source: EntwinedModule
    target: EntwinedModule
    components: dict
    verdict: Verdict = field(default=None)

    def __getitem__(self, X):
        return self.components[X]

    def as_module_morphism(self):
        return ModuleMorphism(self.source.module, self.target.module, self.components)


def verify_entwined_module(e, m):
    """Module laws, comodule laws, and the compatibility through psi"""
    d, c = e.cat, e.coalg
    v = Verdict(f'entwined module {m.name}')
    v.merge(verify_right_module(m.module))
    for X in d.objects:
        v.merge(verify_comodule(m.comodule(X, c)))
    for X, Y in d.pairs():
        # input M(Y) (x) Hom(X,Y)
        lhs = m.coaction(X) @ m.act(X, Y)
        rhs = kron(m.act(X, Y), c.identity()) @ kron(m.module.eye(Y), e.at(X, Y)) \
            @ kron(m.coaction(Y), d.eye(X, Y))
        v.expect_equal(f'compatibility with psi at {(X, Y)}', lhs, rhs)
    return v


def is_entwined_morphism(e, m, n, components):
    v = Verdict(f'entwined morphism {m.name} -> {n.name}')
    v.merge(is_module_morphism(m.module, n.module, components))
    if not v:
        return v
    one_c = e.coalg.identity()
    for X in e.cat.objects:
        v.expect_equal(f'colinearity at {X}', n.coaction(X) @ components[X],
                       kron(components[X], one_c) @ m.coaction(X))
    return v


'''
Constructions
'''


def module_tensor_C(e, n):
    """
    N (x) C for a right module N: (n (x) c) . f = n . f_psi (x) c^psi, with
    coaction id (x) Delta.
    """
    d, c = e.cat, e.coalg
    one_c = c.identity()
    dims = {X: n.dim(X) * c.dim for X in d.objects}
    actions = {(X, Y): kron(n.act(X, Y), one_c) @ kron(n.eye(Y), e.at(X, Y)) for X, Y in d.pairs()}
    coactions = {X: kron(n.eye(X), c.delta) for X in d.objects}
    module = RightModule(d, dims, actions, name=f'{n.name}(x){c.name}')
    return EntwinedModule(module, coactions)


def tensor_C_morphism(e, eta, source=None, target=None):
    """Image of a module morphism under - (x) C"""
    source = source or module_tensor_C(e, eta.source)
    target = target or module_tensor_C(e, eta.target)
    one_c = e.coalg.identity()
    comps = {X: kron(eta[X], one_c) for X in e.cat.objects}
    return EntwinedMorphism(source, target, comps, is_entwined_morphism(e, source, target, comps))


def comodule_tensor_hX(e, v, X):
    """
    N (x) h_X for a right C-comodule N: objectwise N (x) Hom(-, X), acting by
    precomposition; rho(n (x) g) = n_0 (x) g_psi (x) n_1^psi.
    """
    d = e.cat
    d.check_object(X)
    one_v = identity(e.field, v.dim)
    dims = {Y: v.dim * d.dim(Y, X) for Y in d.objects}
    actions = {(W, Y): kron(one_v, d.comp(W, Y, X)) for W, Y in d.pairs()}
    coactions = {Y: kron(one_v, e.at(Y, X)) @ kron(v.rho, d.eye(Y, X)) for Y in d.objects}
    module = RightModule(d, dims, actions, name=f'{v.name}(x)h_{X}')
    return EntwinedModule(module, coactions)


def psi_morphism(e, Y):
    """
    Psi_Y: C (x) h_Y -> h_Y (x) C with components psi_{XY}. Linearity and
    colinearity are checked and kept in the returned morphism's verdict.
    """
    source = comodule_tensor_hX(e, regular_comodule(e.coalg), Y)
    target = module_tensor_C(e, representable_right(e.cat, Y))
    comps = {X: e.at(X, Y) for X in e.cat.objects}
    return EntwinedMorphism(source, target, comps, is_entwined_morphism(e, source, target, comps))


def generator_morphism(e, m, X, vector):
    """
    For an element ``vector`` of M(X) build V (x) h_X -> M, v (x) f -> v . f,
    with V the finite-dimensional subcomodule of M(X) generated by it. The
    verdict also records whether ``vector`` is hit by v (x) id_X.
    """
    d, c = e.cat, e.coalg
    if vector.shape != (m.dim(X), 1):
        raise ShapeError(f'element of {m.name}({X}) must be {(m.dim(X), 1)}, got {vector.shape}')
    basis = closure(m.comodule(X, c), vector)
    rho_v = coordinates(kron(basis, c.identity()), m.coaction(X) @ basis)
    if rho_v is None:
        raise EntwineError(f'generated subspace of {m.name}({X}) is not a subcomodule')
    v = Comodule(c, basis.cols, rho_v, name=f'<{m.name}({X})>')
    source = comodule_tensor_hX(e, v, X)
    comps = {Y: m.act(Y, X) @ kron(basis, d.eye(Y, X)) for Y in d.objects}
    log.debug('generated subcomodule of %s(%s) has dimension %d', m.name, X, basis.cols)
    verdict = is_entwined_morphism(e, source, m, comps)
    coords = coordinates(basis, vector)
    hit = comps[X] @ kron(coords, d.id(X))
    verdict.expect_equal('generator is hit', hit, vector)
    return EntwinedMorphism(source, m, comps, verdict)


def entwined_kernel_cokernel(e, eta):
    """Kernel and cokernel of an entwined morphism, both entwined modules"""
    verdict = is_entwined_morphism(e, eta.source, eta.target, eta.components)
    if not verdict:
        raise VerificationError(verdict)
    m, n = eta.source, eta.target
    plain = kernel_cokernel(eta.as_module_morphism())
    one_c = e.coalg.identity()
    kernel_coactions, cokernel_coactions = {}, {}
    for X in e.cat.objects:
        k = plain.embedding[X]
        coords = coordinates(kron(k, one_c), m.coaction(X) @ k)
        if coords is None:
            raise EntwineError(f'kernel at {X} is not a subcomodule')
        kernel_coactions[X] = coords
        cokernel_coactions[X] = kron(plain.projection[X], one_c) @ n.coaction(X) @ plain.section[X]
    return KernelCokernel(EntwinedModule(plain.kernel, kernel_coactions), plain.embedding,
                          EntwinedModule(plain.cokernel, cokernel_coactions), plain.projection,
                          plain.section)


'''
Forgetful functor and its right adjoint - (x) C
'''


def forget(m):
    return m.module


def adjunction_unit(e, m):
    """M -> F(M) (x) C, the coaction itself"""
    target = module_tensor_C(e, m.module)
    comps = {X: m.coaction(X) for X in e.cat.objects}
    return EntwinedMorphism(m, target, comps, is_entwined_morphism(e, m, target, comps))


def adjunction_counit(e, n):
    """F(N (x) C) -> N, id (x) eps"""
    source = module_tensor_C(e, n)
    comps = {X: kron(n.eye(X), e.coalg.counit) for X in e.cat.objects}
    return ModuleMorphism(source.module, n, comps)


def verify_triangle_identities(e, m, n):
    """Both triangle identities at the entwined module ``m`` and the module ``n``"""
    d, c = e.cat, e.coalg
    v = Verdict('adjunction')
    unit_m = adjunction_unit(e, m)
    counit_fm = adjunction_counit(e, m.module)
    for X in d.objects:
        v.expect_equal(f'counit(F M) F(unit M) = id at {X}', counit_fm[X] @ unit_m[X],
                       m.module.eye(X))
    nc = module_tensor_C(e, n)
    unit_nc = adjunction_unit(e, nc)
    counit_n = adjunction_counit(e, n)
    for X in d.objects:
        lhs = kron(counit_n[X], c.identity()) @ unit_nc[X]
        v.expect_equal(f'(counit N) (x) C unit(N (x) C) = id at {X}', lhs,
                       identity(e.field, nc.dim(X)))
    return v


