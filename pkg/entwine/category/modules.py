from __future__ import annotations

import logging
from dataclasses import dataclass

from entwine.errors import EntwineError, ShapeError, VerificationError
from entwine.linalg import (BlockLayout, Matrix, coordinates, identity, kernel_basis,
                            kron, quotient_projection, swap)
from entwine.utils import Verdict

log = logging.getLogger(__name__)


@dataclass(eq=False)
class RightModule:
    """
    Right module over a ``LinCategory`` (a contravariant K-linear functor).

    Parameter ``actions`` (``dict``):
        (X, Y) -> Matrix M(Y) (x) Hom(X,Y) -> M(X), m (x) f -> M(f)(m)
    """
    base: object
    dims: dict
    actions: dict
    name: str = 'M'

    @property
    def field(self):
        return self.base.field

    def dim(self, X):
        return self.dims.get(X, 0)

    def act(self, X, Y):
        try:
            return self.actions[(X, Y)]
        except KeyError:
            raise ShapeError(f'module {self.name}: no action for {(X, Y)}')

    def eye(self, X):
        return identity(self.field, self.dim(X))

    def along(self, f, X, Y):
        """The linear map M(f): M(Y) -> M(X) for f in Hom(X,Y)"""
        return self.act(X, Y) @ kron(self.eye(Y), f)

    def check_shapes(self):
        d = self.base
        for X, Y in d.pairs():
            shape = (self.dim(X), self.dim(Y) * d.dim(X, Y))
            if self.act(X, Y).shape != shape:
                raise ShapeError(f'module {self.name}: action {(X, Y)} is '
                                 f'{self.act(X, Y).shape}, expected {shape}')

    def to_string(self):
        return f'RightModule[{self.name}, dims = {self.dims}]'


@dataclass(eq=False)
class LeftModule:
    """
    Left module (covariant functor); ``actions[(X, Y)]`` is
    N(X) (x) Hom(X,Y) -> N(Y), n (x) f -> N(f)(n).
    """
    base: object
    dims: dict
    actions: dict
    name: str = 'N'

    @property
    def field(self):
        return self.base.field

    def dim(self, X):
        return self.dims.get(X, 0)

    def act(self, X, Y):
        try:
            return self.actions[(X, Y)]
        except KeyError:
            raise ShapeError(f'module {self.name}: no action for {(X, Y)}')

    def eye(self, X):
        return identity(self.field, self.dim(X))

    def along(self, f, X, Y):
        """The linear map N(f): N(X) -> N(Y) for f in Hom(X,Y)"""
        return self.act(X, Y) @ kron(self.eye(X), f)

    def check_shapes(self):
        d = self.base
        for X, Y in d.pairs():
            shape = (self.dim(Y), self.dim(X) * d.dim(X, Y))
            if self.act(X, Y).shape != shape:
                raise ShapeError(f'module {self.name}: action {(X, Y)} is '
                                 f'{self.act(X, Y).shape}, expected {shape}')

    def to_string(self):
        return f'LeftModule[{self.name}, dims = {self.dims}]'


@dataclass(eq=False)
class ModuleMorphism:
    source: object
    target: object
    components: dict

    def __getitem__(self, X):
        return self.components[X]


def verify_right_module(m):
    m.check_shapes()
    d = m.base
    v = Verdict(f'right module {m.name}')
    for X, Y, Z in d.triples():
        # M(g f) = M(f) M(g), input M(Z) (x) Hom(Y,Z) (x) Hom(X,Y)
        lhs = m.act(X, Z) @ kron(m.eye(Z), d.comp(X, Y, Z))
        rhs = m.act(X, Y) @ kron(m.act(Y, Z), d.eye(X, Y))
        v.expect_equal(f'functor law at {(X, Y, Z)}', lhs, rhs)
    for X in d.objects:
        v.expect_equal(f'identity law at {X}', m.act(X, X) @ kron(m.eye(X), d.id(X)), m.eye(X))
    return v


def verify_left_module(n):
    n.check_shapes()
    d = n.base
    field = d.field
    v = Verdict(f'left module {n.name}')
    for X, Y, Z in d.triples():
        # N(g f) = N(g) N(f), input N(X) (x) Hom(Y,Z) (x) Hom(X,Y)
        lhs = n.act(X, Z) @ kron(n.eye(X), d.comp(X, Y, Z))
        rhs = n.act(Y, Z) @ kron(n.act(X, Y), d.eye(Y, Z)) \
            @ kron(n.eye(X), swap(field, d.dim(Y, Z), d.dim(X, Y)))
        v.expect_equal(f'functor law at {(X, Y, Z)}', lhs, rhs)
    for X in d.objects:
        v.expect_equal(f'identity law at {X}', n.act(X, X) @ kron(n.eye(X), d.id(X)), n.eye(X))
    return v


def representable_right(d, Y):
    """h_Y = Hom(-, Y) with precomposition"""
    d.check_object(Y)
    dims = {X: d.dim(X, Y) for X in d.objects}
    actions = {(X, W): d.comp(X, W, Y) for X, W in d.pairs()}
    return RightModule(d, dims, actions, name=f'h_{Y}')


def representable_left(d, X):
    """_Xh = Hom(X, -) with postcomposition"""
    d.check_object(X)
    field = d.field
    dims = {Y: d.dim(X, Y) for Y in d.objects}
    actions = {(Y, Z): d.comp(X, Y, Z) @ swap(field, d.dim(X, Y), d.dim(Y, Z))
               for Y, Z in d.pairs()}
    return LeftModule(d, dims, actions, name=f'{X}_h')


def _naturality(m, n, comps):
    d = m.base
    out = []
    for X, Y in d.pairs():
        out.append(comps[X] @ m.act(X, Y) - n.act(X, Y) @ kron(comps[Y], d.eye(X, Y)))
    return out


def is_module_morphism(m, n, components):
    v = Verdict(f'module morphism {m.name} -> {n.name}')
    d = m.base
    for X in d.objects:
        if components[X].shape != (n.dim(X), m.dim(X)):
            return v.fail(f'component at {X} is {components[X].shape}')
    for X, Y in d.pairs():
        v.expect_equal(f'naturality at {(X, Y)}', components[X] @ m.act(X, Y),
                       n.act(X, Y) @ kron(components[Y], d.eye(X, Y)))
    return v


def module_hom_space(m, n):
    """Basis of Hom(m, n) in the category of right modules"""
    if m.base is not n.base:
        raise EntwineError(f'modules {m.name} and {n.name} live over different categories')
    layout = BlockLayout(m.field, {X: (n.dim(X), m.dim(X)) for X in m.base.objects})
    basis = layout.solve_space(lambda comps: _naturality(m, n, comps))
    log.debug('Hom(%s, %s): %d unknowns, dimension %d', m.name, n.name, layout.size, len(basis))
    return [ModuleMorphism(m, n, comps) for comps in basis]


@dataclass(eq=False)
class KernelCokernel:
    kernel: RightModule
    embedding: dict
    cokernel: RightModule
    projection: dict
    section: dict


def kernel_cokernel(eta):
    """Objectwise kernel and cokernel of a module morphism with induced actions"""
    m, n = eta.source, eta.target
    verdict = is_module_morphism(m, n, eta.components)
    if not verdict:
        raise VerificationError(verdict)
    d = m.base
    embedding, projection, section = {}, {}, {}
    for X in d.objects:
        embedding[X] = kernel_basis(eta[X])
        projection[X], section[X] = quotient_projection(n.dim(X), eta[X])

    kernel_actions, cokernel_actions = {}, {}
    for X, Y in d.pairs():
        image = m.act(X, Y) @ kron(embedding[Y], d.eye(X, Y))
        coords = coordinates(embedding[X], image)
        if coords is None:
            raise EntwineError(f'kernel of {m.name} -> {n.name} is not stable at {(X, Y)}')
        kernel_actions[(X, Y)] = coords
        cokernel_actions[(X, Y)] = projection[X] @ n.act(X, Y) @ kron(section[Y], d.eye(X, Y))

    kernel = RightModule(d, {X: embedding[X].cols for X in d.objects}, kernel_actions,
                         name=f'ker({m.name}->{n.name})')
    cokernel = RightModule(d, {X: projection[X].rows for X in d.objects}, cokernel_actions,
                           name=f'coker({m.name}->{n.name})')
    return KernelCokernel(kernel, embedding, cokernel, projection, section)
