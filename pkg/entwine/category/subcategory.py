from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from entwine.errors import EntwineError
from entwine.linalg import Matrix, coordinates, in_span, kron
from entwine.utils import Verdict

from .lincat import LinCategory
from .modules import LeftModule, RightModule


@dataclass(eq=False)
class Subcategory:
    """
    Subcategory with the same objects as ``base``; ``hom_subspaces[(X, Y)]``
    has independent columns spanning Hom_E(X,Y) inside Hom(X,Y).
    """
    base: LinCategory
    hom_subspaces: dict
    name: str = 'E'

    @property
    def field(self):
        return self.base.field

    def subspace(self, X, Y):
        return self.hom_subspaces[(X, Y)]

    def dim(self, X, Y):
        return self.subspace(X, Y).cols

    def contains(self, X, Y, vectors):
        return in_span(self.subspace(X, Y), vectors)

    @classmethod
    def full(cls, base):
        return cls(base, {(X, Y): base.eye(X, Y) for X, Y in base.pairs()}, name=base.name)

    @classmethod
    def identities_only(cls, base):
        spaces = {}
        for X, Y in base.pairs():
            if X == Y:
                spaces[(X, Y)] = base.id(X)
            else:
                spaces[(X, Y)] = Matrix.zeros(base.field, base.dim(X, Y), 0)
        return cls(base, spaces, name=f'K[{base.name}]')

    @cached_property
    def category(self):
        """This subcategory as a ``LinCategory`` in its own hom bases"""
        return self.as_category()

    def as_category(self):
        d = self.base
        compose = {}
        for X, Y, Z in d.triples():
            image = d.comp(X, Y, Z) @ kron(self.subspace(Y, Z), self.subspace(X, Y))
            coords = coordinates(self.subspace(X, Z), image)
            if coords is None:
                raise EntwineError(f'{self.name} is not closed under composition at {(X, Y, Z)}')
            compose[(X, Y, Z)] = coords
        identities = {}
        for X in d.objects:
            coords = coordinates(self.subspace(X, X), d.id(X))
            if coords is None:
                raise EntwineError(f'{self.name} does not contain the identity of {X}')
            identities[X] = coords
        hom_dims = {(X, Y): self.dim(X, Y) for X, Y in d.pairs()}
        return LinCategory(self.field, d.objects, hom_dims, compose, identities, name=self.name)

    def restrict_right(self, m):
        """Right D-module viewed over this subcategory"""
        d = self.category
        actions = {(X, Y): m.act(X, Y) @ kron(m.eye(Y), self.subspace(X, Y)) for X, Y in d.pairs()}
        return RightModule(d, dict(m.dims), actions, name=m.name)

    def restrict_left(self, n):
        d = self.category
        actions = {(X, Y): n.act(X, Y) @ kron(n.eye(X), self.subspace(X, Y)) for X, Y in d.pairs()}
        return LeftModule(d, dict(n.dims), actions, name=n.name)

    def to_string(self):
        dims = {f'{X}->{Y}': self.dim(X, Y) for X, Y in self.base.pairs()}
        return f'Subcategory[{self.name} of {self.base.name}, dims = {dims}]'


def verify_subcategory(e):
    d = e.base
    v = Verdict(f'subcategory {e.name}')
    for X in d.objects:
        if not e.contains(X, X, d.id(X)):
            v.fail(f'identity of {X} is missing')
    for X, Y, Z in d.triples():
        image = d.comp(X, Y, Z) @ kron(e.subspace(Y, Z), e.subspace(X, Y))
        if not e.contains(X, Z, image):
            v.fail(f'not closed under composition at {(X, Y, Z)}')
    return v
