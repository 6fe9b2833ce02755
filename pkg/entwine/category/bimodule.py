from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from entwine.errors import ShapeError
from entwine.linalg import Matrix, identity, kron, swap
from entwine.utils import Verdict

from .modules import LeftModule, RightModule, verify_left_module, verify_right_module
from .tensor import tensor_over_sub


@dataclass(eq=False)
class Bimodule:
    """
    D-D bimodule B(X,Y), contravariant in X and covariant in Y.

    Parameter ``right`` (``dict``):
        (X2, X, Y) -> Matrix B(X,Y) (x) Hom(X2,X) -> B(X2,Y), b (x) p -> b.p

    Parameter ``left`` (``dict``):
        (X, Y, Y2) -> Matrix Hom(Y,Y2) (x) B(X,Y) -> B(X,Y2), q (x) b -> q.b
    """
    base: object
    dims: dict
    right: dict
    left: dict
    name: str = 'B'

    @property
    def field(self):
        return self.base.field

    def dim(self, X, Y):
        return self.dims.get((X, Y), 0)

    def eye(self, X, Y):
        return identity(self.field, self.dim(X, Y))

    def right_module(self, Y):
        """B(-, Y) as a right module"""
        d = self.base
        return RightModule(d, {X: self.dim(X, Y) for X in d.objects},
                           {(X2, X): self.right[(X2, X, Y)] for X2, X in d.pairs()},
                           name=f'{self.name}(-,{Y})')

    def left_module(self, X):
        """B(X, -) as a left module"""
        d = self.base
        actions = {(Y, Y2): self.left[(X, Y, Y2)] @ swap(self.field, self.dim(X, Y), d.dim(Y, Y2))
                   for Y, Y2 in d.pairs()}
        return LeftModule(d, {Y: self.dim(X, Y) for Y in d.objects}, actions,
                          name=f'{self.name}({X},-)')

    def check_shapes(self):
        d = self.base
        for X2, X, Y in d.triples():
            shape = (self.dim(X2, Y), self.dim(X, Y) * d.dim(X2, X))
            if self.right[(X2, X, Y)].shape != shape:
                raise ShapeError(f'bimodule {self.name}: right action {(X2, X, Y)} has wrong shape')
            # left action keyed (X2, X, Y): Hom(X,Y) (x) B(X2,X) -> B(X2,Y)
            shape = (self.dim(X2, Y), d.dim(X, Y) * self.dim(X2, X))
            if self.left[(X2, X, Y)].shape != shape:
                raise ShapeError(f'bimodule {self.name}: left action {(X2, X, Y)} has wrong shape')


def hom_bimodule(d):
    """Hom(-, -) with composition on both sides"""
    return Bimodule(d, {(X, Y): d.dim(X, Y) for X, Y in d.pairs()},
                    {key: d.comp(*key) for key in d.triples()},
                    {key: d.comp(*key) for key in d.triples()}, name='h')


def verify_bimodule(b):
    b.check_shapes()
    d = b.base
    v = Verdict(f'bimodule {b.name}')
    for Y in d.objects:
        v.merge(verify_right_module(b.right_module(Y)))
    for X in d.objects:
        v.merge(verify_left_module(b.left_module(X)))
    for X2, X, Y, Y2 in product(d.objects, repeat=4):
        # (q.b).p = q.(b.p), input Hom(Y,Y2) (x) B(X,Y) (x) Hom(X2,X)
        lhs = b.right[(X2, X, Y2)] @ kron(b.left[(X, Y, Y2)], d.eye(X2, X))
        rhs = b.left[(X2, Y, Y2)] @ kron(d.eye(Y, Y2), b.right[(X2, X, Y)])
        v.expect_equal(f'actions commute at {(X2, X, Y, Y2)}', lhs, rhs)
    return v


class BimoduleTensor:
    """
    B1 (x)_D B2 evaluated at every pair: the quotient of the direct sum over
    Z of B1(Z,Y) (x) B2(X,Z) by the D-balancing relations, together with the
    induced bimodule structure.
    """

    def __init__(self, first, second):
        self.first = first
        self.second = second
        self.base = first.base
        self.field = first.field
        self.parts = {(X, Y): tensor_over_sub(first.right_module(Y), second.left_module(X))
                      for X, Y in self.base.pairs()}

    def __getitem__(self, pair):
        return self.parts[pair]

    def dim(self, X, Y):
        return self.parts[(X, Y)].dim

    def pair(self, Z, X, Y, vectors):
        """Class of elements of B1(Z,Y) (x) B2(X,Z)"""
        return self.parts[(X, Y)].of(Z, vectors)

    @cached_property
    def bimodule(self):
        d = self.base
        right, left = {}, {}
        for X2, X, Y in d.triples():
            source, target = self.parts[(X, Y)], self.parts[(X2, Y)]
            acc = Matrix.zeros(self.field, target.ambient_dim, source.ambient_dim * d.dim(X2, X))
            for Z in d.objects:
                step = kron(self.first.eye(Z, Y), self.second.right[(X2, X, Z)])
                acc = acc + target.embed(Z) @ step @ kron(source.restrict(Z), d.eye(X2, X))
            right[(X2, X, Y)] = target.projection @ acc @ kron(source.section, d.eye(X2, X))
        for X, Y, Y2 in d.triples():
            source, target = self.parts[(X, Y)], self.parts[(X, Y2)]
            acc = Matrix.zeros(self.field, target.ambient_dim, d.dim(Y, Y2) * source.ambient_dim)
            for Z in d.objects:
                step = kron(self.first.left[(Z, Y, Y2)], self.second.eye(X, Z))
                acc = acc + target.embed(Z) @ step @ kron(d.eye(Y, Y2), source.restrict(Z))
            left[(X, Y, Y2)] = target.projection @ acc @ kron(d.eye(Y, Y2), source.section)
        dims = {(X, Y): self.dim(X, Y) for X, Y in d.pairs()}
        return Bimodule(d, dims, right, left, name=f'{self.first.name}(x){self.second.name}')
