from __future__ import annotations

from dataclasses import dataclass

from entwine.errors import ShapeError
from entwine.linalg import Matrix, identity, kron, permute_legs
from entwine.utils import Verdict

from .coalgebra import Coalgebra, verify_coalgebra


@dataclass(eq=False)
class HopfAlgebra:
    """
    Finite-dimensional Hopf algebra: a coalgebra together with ``mult``
    (dim x dim^2), ``unit`` (dim x 1) and ``antipode`` (dim x dim).
    """
    coalgebra: Coalgebra
    mult: Matrix
    unit: Matrix
    antipode: Matrix

    @property
    def field(self):
        return self.coalgebra.field

    @property
    def dim(self):
        return self.coalgebra.dim

    @property
    def delta(self):
        return self.coalgebra.delta

    @property
    def counit(self):
        return self.coalgebra.counit

    @property
    def names(self):
        return self.coalgebra.names

    @property
    def name(self):
        return self.coalgebra.name

    def check_shapes(self):
        self.coalgebra.check_shapes()
        n = self.dim
        for label, m, shape in (('mult', self.mult, (n, n * n)),
                                ('unit', self.unit, (n, 1)),
                                ('antipode', self.antipode, (n, n))):
            if m.shape != shape:
                raise ShapeError(f'hopf algebra {self.name}: {label} is {m.shape}, expected {shape}')

    def product(self, a, b):
        return self.mult @ kron(a, b)

    def to_string(self):
        return f'HopfAlgebra[{self.name}, dim = {self.dim}, field = {self.field}]'


def verify_hopf(h):
    """Bialgebra axioms plus both antipode laws"""
    h.check_shapes()
    field = h.field
    n = h.dim
    one = identity(field, n)
    scalar_one = identity(field, 1)
    v = Verdict(f'hopf algebra {h.name}')
    v.merge(verify_coalgebra(h.coalgebra))
    v.expect_equal('associativity', h.mult @ kron(h.mult, one), h.mult @ kron(one, h.mult))
    v.expect_equal('left unit', h.mult @ kron(h.unit, one), one, h.names)
    v.expect_equal('right unit', h.mult @ kron(one, h.unit), one, h.names)
    middle = permute_legs(field, [n, n, n, n], [0, 2, 1, 3])
    v.expect_equal('Delta is multiplicative', h.delta @ h.mult,
                   kron(h.mult, h.mult) @ middle @ kron(h.delta, h.delta))
    v.expect_equal('Delta is unital', h.delta @ h.unit, kron(h.unit, h.unit))
    v.expect_equal('eps is multiplicative', h.counit @ h.mult, kron(h.counit, h.counit))
    v.expect_equal('eps is unital', h.counit @ h.unit, scalar_one)
    v.expect_equal('antipode law m (S (x) id) Delta = unit eps',
                   h.mult @ kron(h.antipode, one) @ h.delta, h.unit @ h.counit, h.names)
    v.expect_equal('antipode law m (id (x) S) Delta = unit eps',
                   h.mult @ kron(one, h.antipode) @ h.delta, h.unit @ h.counit, h.names)
    return v


def verify_module_coalgebra(c, h, action):
    """
    Right H-module coalgebra: ``action`` (c.dim x c.dim * h.dim) sends
    c (x) h to c.h; the action is associative and unital and Delta_C, eps_C
    are H-linear.
    """
    field = c.field
    nc, nh = c.dim, h.dim
    v = Verdict(f'{c.name} as a right {h.name}-module coalgebra')
    if action.shape != (nc, nc * nh):
        return v.fail(f'action is {action.shape}, expected {(nc, nc * nh)}')
    one_c, one_h = identity(field, nc), identity(field, nh)
    v.expect_equal('action associativity', action @ kron(action, one_h), action @ kron(one_c, h.mult))
    v.expect_equal('action unit', action @ kron(one_c, h.unit), one_c, c.names)
    middle = permute_legs(field, [nc, nc, nh, nh], [0, 2, 1, 3])
    v.expect_equal('Delta_C is H-linear', c.delta @ action,
                   kron(action, action) @ middle @ kron(c.delta, h.delta))
    v.expect_equal('eps_C is H-linear', c.counit @ action, kron(c.counit, h.counit))
    return v


def cyclic_group_hopf(field, order):
    """Group algebra of Z/order with S(g) = g^-1; basis 1, g, g^2, ..."""
    names = tuple(['one'] + ['g' if k == 1 else f'g{k}' for k in range(1, order)])
    n = order
    delta = Matrix.zeros(field, n * n, n)
    mult = Matrix.zeros(field, n, n * n)
    antipode = Matrix.zeros(field, n, n)
    for a in range(n):
        delta.set(a * n + a, a, 1)
        antipode.set((-a) % n, a, 1)
        for b in range(n):
            mult.set((a + b) % n, a * n + b, 1)
    counit = Matrix.from_rows(field, [[1] * n])
    coalgebra = Coalgebra(field, n, delta, counit, names, name=f'H{order}')
    return HopfAlgebra(coalgebra, mult, Matrix.unit(field, n, 0), antipode)


def trivial_hopf(field):
    """The ground field K as a Hopf algebra"""
    return cyclic_group_hopf(field, 1)
