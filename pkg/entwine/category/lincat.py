from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from entwine.errors import ShapeError, UnknownObjectError
from entwine.linalg import Matrix, identity, kron
from entwine.utils import Verdict


@dataclass(eq=False)
class LinCategory:
    """
    Small K-linear category with finite-dimensional hom spaces.

    Parameter ``compose`` (``dict``):
        (X, Y, Z) -> Matrix Hom(Y,Z) (x) Hom(X,Y) -> Hom(X,Z), so that
        g o f = compose[X, Y, Z] @ kron(g, f)

    Parameter ``identities`` (``dict``):
        X -> coordinate column of id_X in Hom(X,X)

    Objects are kept sorted so every per-pair table iterates in the same
    order. Pairs missing from ``hom_dims`` are zero-dimensional.
    """
    field: object
    objects: tuple
    hom_dims: dict
    compose: dict
    identities: dict
    hom_names: dict = field(default_factory=dict)
    name: str = 'D'

    def __post_init__(self):
        self.objects = tuple(sorted(self.objects))

    def check_object(self, X):
        if X not in self.objects:
            raise UnknownObjectError(f'unknown object "{X}" in category {self.name}')

    def dim(self, X, Y):
        self.check_object(X)
        self.check_object(Y)
        return self.hom_dims.get((X, Y), 0)

    def pairs(self):
        return list(product(self.objects, repeat=2))

    def triples(self):
        return list(product(self.objects, repeat=3))

    def comp(self, X, Y, Z):
        try:
            return self.compose[(X, Y, Z)]
        except KeyError:
            raise ShapeError(f'category {self.name}: no composition table for {(X, Y, Z)}')

    def id(self, X):
        try:
            return self.identities[X]
        except KeyError:
            raise ShapeError(f'category {self.name}: no identity for {X}')

    def eye(self, X, Y):
        """Identity map of the vector space Hom(X,Y)"""
        return identity(self.field, self.dim(X, Y))

    def then(self, g, f, X, Y, Z):
        """Coordinates of g o f for f: X -> Y, g: Y -> Z"""
        return self.comp(X, Y, Z) @ kron(g, f)

    def basis(self, X, Y):
        n = self.dim(X, Y)
        return [Matrix.unit(self.field, n, j) for j in range(n)]

    def names(self, X, Y):
        return self.hom_names.get((X, Y), tuple(f'{X}{Y}{j}' for j in range(self.dim(X, Y))))

    def check_shapes(self):
        for X in self.objects:
            if self.id(X).shape != (self.dim(X, X), 1):
                raise ShapeError(f'category {self.name}: identity of {X} has shape {self.id(X).shape}')
        for X, Y, Z in self.triples():
            shape = (self.dim(X, Z), self.dim(Y, Z) * self.dim(X, Y))
            if self.comp(X, Y, Z).shape != shape:
                raise ShapeError(f'category {self.name}: compose{(X, Y, Z)} is '
                                 f'{self.comp(X, Y, Z).shape}, expected {shape}')

    def to_string(self):
        return f'LinCategory[{self.name}, objects = {list(self.objects)}, field = {self.field}]'

    def __str__(self):
        return self.to_string()


def verify_category(d):
    """Associativity over all object quadruples and both unit laws"""
    d.check_shapes()
    v = Verdict(f'category {d.name}')
    for W, X, Y, Z in product(d.objects, repeat=4):
        # h o (g o f) = (h o g) o f, input Hom(Y,Z) (x) Hom(X,Y) (x) Hom(W,X)
        lhs = d.comp(W, Y, Z) @ kron(d.eye(Y, Z), d.comp(W, X, Y))
        rhs = d.comp(W, X, Z) @ kron(d.comp(X, Y, Z), d.eye(W, X))
        v.expect_equal(f'associativity at {(W, X, Y, Z)}', lhs, rhs)
    for X, Y in d.pairs():
        v.expect_equal(f'left unit law at {(X, Y)}',
                       d.comp(X, Y, Y) @ kron(d.id(Y), d.eye(X, Y)), d.eye(X, Y), d.names(X, Y))
        v.expect_equal(f'right unit law at {(X, Y)}',
                       d.comp(X, X, Y) @ kron(d.eye(X, Y), d.id(X)), d.eye(X, Y), d.names(X, Y))
    return v


def point_category(field, name='Dpt'):
    """One object with End = K"""
    one = Matrix.from_rows(field, [[1]])
    return LinCategory(field, ('*',), {('*', '*'): 1}, {('*', '*', '*'): one},
                       {'*': Matrix.column(field, [1])}, {('*', '*'): ('id',)}, name)


def algebra_category(hopf, name=None):
    """One object whose endomorphism algebra is the algebra underlying ``hopf``"""
    field = hopf.field
    return LinCategory(field, ('*',), {('*', '*'): hopf.dim}, {('*', '*', '*'): hopf.mult},
                       {'*': hopf.unit}, {('*', '*'): hopf.names}, name or f'End{hopf.name}')
