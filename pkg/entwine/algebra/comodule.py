from __future__ import annotations

from dataclasses import dataclass

from entwine.errors import ShapeError
from entwine.linalg import Matrix, hstack, identity, kron, rref
from entwine.utils import Verdict

from .coalgebra import Coalgebra, dual_basis_data


@dataclass(eq=False)
class Comodule:
    """
    Right comodule over ``base``; ``rho`` is (dim * base.dim x dim) and sends
    v to v_0 (x) v_1.
    """
    base: Coalgebra
    dim: int
    rho: Matrix
    name: str = 'V'

    @property
    def field(self):
        return self.base.field

    def check_shapes(self):
        if self.rho.shape != (self.dim * self.base.dim, self.dim):
            raise ShapeError(f'comodule {self.name}: coaction is {self.rho.shape}, '
                             f'expected {(self.dim * self.base.dim, self.dim)}')

    def to_string(self):
        return f'Comodule[{self.name}, dim = {self.dim}, over {self.base.name}]'


def verify_comodule(v):
    v.check_shapes()
    c = v.base
    one_v = identity(v.field, v.dim)
    verdict = Verdict(f'comodule {v.name}')
    verdict.expect_equal('coassociativity (rho (x) id) rho = (id (x) Delta) rho',
                         kron(v.rho, c.identity()) @ v.rho, kron(one_v, c.delta) @ v.rho)
    verdict.expect_equal('counit law (id (x) eps) rho = id',
                         kron(one_v, c.counit) @ v.rho, one_v)
    return verdict


def regular_comodule(c):
    return Comodule(c, c.dim, c.delta, name=f'{c.name}_reg')


def trivial_comodule(c, dim, group_like=0):
    """v -> v (x) g for a group-like basis element g"""
    g = Matrix.unit(c.field, c.dim, group_like)
    if not (c.delta.col(group_like) == kron(g, g) and c.counit.entry(0, group_like) == 1):
        raise ShapeError(f'{c.names[group_like]} is not group-like in {c.name}')
    return Comodule(c, dim, kron(identity(c.field, dim), g), name=f'triv{dim}')


def is_comodule_map(source, target, f):
    v = Verdict(f'comodule map {source.name} -> {target.name}')
    if f.shape != (target.dim, source.dim):
        return v.fail(f'map is {f.shape}, expected {(target.dim, source.dim)}')
    return v.expect_equal('colinearity', target.rho @ f,
                          kron(f, source.base.identity()) @ source.rho)


def dual_comodule_structure(c):
    """
    C* as a right C-comodule: rho(c*) = sum_i d_i* . c* (x) d_i.
    """
    n = c.dim
    table = dual_basis_data(c).table
    rho = Matrix.zeros(c.field, n * n, n)
    for j in range(n):
        for i in range(n):
            # d_i* . d_j*
            prod = table.col(i * n + j)
            for k in range(n):
                rho.data[k * n + i, j] = prod.entry(k, 0)
    return Comodule(c, n, rho, name=f'{c.name}*')


def closure(v, vectors):
    """
    Smallest subcomodule containing the columns of ``vectors``: iterate
    span <- span + (id (x) d_i*) rho(span) to a fixed point.

    Returns a matrix whose columns are a basis of the subcomodule.
    """
    field = v.field
    n = v.base.dim
    current = _independent(hstack(field, [vectors], v.dim))
    while True:
        parts = [current]
        for i in range(n):
            pick = kron(identity(field, v.dim), Matrix.unit(field, n, i).T)
            parts.append(pick @ v.rho @ current)
        grown = _independent(hstack(field, parts, v.dim))
        if grown.cols == current.cols:
            return current
        current = grown


def _independent(m):
    reduced, pivots = rref(m.T)
    return reduced.take_rows(range(len(pivots))).T
