from __future__ import annotations

from dataclasses import dataclass

from entwine.algebra import is_coalgebra_map
from entwine.errors import ShapeError
from entwine.linalg import identity, kron, swap
from entwine.utils import Verdict

# names of the four entwining axioms, in checking order
AXIOMS = ('composition', 'counit', 'comultiplication', 'identity')


@dataclass(eq=False)
class Entwining:
    """
    Entwining structure (D, C, psi).

    Parameter ``psi`` (``dict``):
        (X, Y) -> Matrix C (x) Hom(X,Y) -> Hom(X,Y) (x) C, c (x) f -> f_psi (x) c^psi.
        Every ordered pair of objects needs an entry, zero-dimensional ones
        included.
    """
    cat: object
    coalg: object
    psi: dict
    name: str = 'psi'

    @property
    def field(self):
        return self.cat.field

    @property
    def n(self):
        return self.coalg.dim

    def at(self, X, Y):
        try:
            return self.psi[(X, Y)]
        except KeyError:
            raise ShapeError(f'entwining {self.name}: no entry for the pair {(X, Y)}')

    def missing_pairs(self):
        return [pair for pair in self.cat.pairs() if pair not in self.psi]

    def check_shapes(self):
        n = self.n
        for X, Y in self.cat.pairs():
            if (X, Y) not in self.psi:
                continue
            d = self.cat.dim(X, Y)
            if self.psi[(X, Y)].shape != (d * n, n * d):
                raise ShapeError(f'entwining {self.name}: entry {(X, Y)} is {self.psi[(X, Y)].shape}, '
                                 f'expected {(d * n, n * d)}')

    def to_string(self):
        return f'Entwining[{self.name} on {self.cat.name} with {self.coalg.name}]'

    def __str__(self):
        return self.to_string()


def swap_entwining(cat, coalg, name='swap'):
    """psi(c (x) f) = f (x) c"""
    psi = {(X, Y): swap(cat.field, coalg.dim, cat.dim(X, Y)) for X, Y in cat.pairs()}
    return Entwining(cat, coalg, psi, name)


def verify_entwining(e):
    """
    All four entwining axioms as matrix identities over every object pair
    and triple. Failure messages start with the axiom name (see ``AXIOMS``).
    """
    e.check_shapes()
    d, c = e.cat, e.coalg
    v = Verdict(f'entwining {e.name}')
    missing = e.missing_pairs()
    for pair in missing:
        v.fail(f'missing entry for the pair {pair}')
    if missing:
        return v
    one_c = c.identity()
    for X, Y, Z in d.triples():
        # c meets g first, then f; input C (x) Hom(Y,Z) (x) Hom(X,Y)
        lhs = e.at(X, Z) @ kron(one_c, d.comp(X, Y, Z))
        rhs = kron(d.comp(X, Y, Z), one_c) @ kron(d.eye(Y, Z), e.at(X, Y)) \
            @ kron(e.at(Y, Z), d.eye(X, Y))
        v.expect_equal(f'composition axiom at {(X, Y, Z)}', lhs, rhs)
    for X, Y in d.pairs():
        psi = e.at(X, Y)
        eye = d.eye(X, Y)
        v.expect_equal(f'counit axiom at {(X, Y)}', kron(eye, c.counit) @ psi, kron(c.counit, eye))
        v.expect_equal(f'comultiplication axiom at {(X, Y)}', kron(eye, c.delta) @ psi,
                       kron(psi, one_c) @ kron(one_c, psi) @ kron(c.delta, eye))
    for X in d.objects:
        v.expect_equal(f'identity axiom at {X}', e.at(X, X) @ kron(one_c, d.id(X)),
                       kron(d.id(X), one_c), c.names)
    return v


def failed_axioms(verdict):
    """Axiom names mentioned by the failures of a ``verify_entwining`` verdict"""
    return [a for a in AXIOMS if any(msg.startswith(a) for msg in verdict.failures)]


def verify_entwining_morphism(source, target, object_map, hom_maps, sigma):
    """
    Predicate for a morphism (F, sigma) of entwining structures from
    ``source`` to ``target``: F is a K-linear functor given by ``object_map``
    and the matrices ``hom_maps[(X, Y)]`` : Hom(X,Y) -> Hom(FX,FY), sigma a
    counital coalgebra map, and (F (x) sigma) psi = psi' (sigma (x) F).
    """
    d, d2 = source.cat, target.cat
    v = Verdict(f'morphism {source.name} -> {target.name}')
    v.merge(is_coalgebra_map(source.coalg, target.coalg, sigma))
    F = object_map
    for X, Y, Z in d.triples():
        lhs = hom_maps[(X, Z)] @ d.comp(X, Y, Z)
        rhs = d2.comp(F[X], F[Y], F[Z]) @ kron(hom_maps[(Y, Z)], hom_maps[(X, Y)])
        v.expect_equal(f'functor preserves composition at {(X, Y, Z)}', lhs, rhs)
    for X in d.objects:
        v.expect_equal(f'functor preserves the identity of {X}', hom_maps[(X, X)] @ d.id(X),
                       d2.id(F[X]))
    for X, Y in d.pairs():
        lhs = kron(hom_maps[(X, Y)], sigma) @ source.at(X, Y)
        rhs = target.at(F[X], F[Y]) @ kron(sigma, hom_maps[(X, Y)])
        v.expect_equal(f'compatibility with psi at {(X, Y)}', lhs, rhs)
    return v
