from __future__ import annotations

from dataclasses import dataclass

from entwine.algebra import Comodule, verify_comodule, verify_hopf, verify_module_coalgebra
from entwine.errors import ShapeError, VerificationError
from entwine.linalg import kron, permute_legs
from entwine.utils import Verdict

from .entwining import Entwining, verify_entwining


@dataclass(eq=False)
class CoHCategory:
    """
    Right co-H-category: every Hom(X,Y) is a right H-comodule, composition
    is colinear for the codiagonal coaction and identities are coinvariant.

    Parameter ``coactions`` (``dict``):
        (X, Y) -> Matrix Hom(X,Y) -> Hom(X,Y) (x) H
    """
    cat: object
    hopf: object
    coactions: dict

    def rho(self, X, Y):
        try:
            return self.coactions[(X, Y)]
        except KeyError:
            raise ShapeError(f'co-{self.hopf.name} category: no coaction for {(X, Y)}')

    def comodule(self, X, Y):
        return Comodule(self.hopf.coalgebra, self.cat.dim(X, Y), self.rho(X, Y), name=f'Hom{(X, Y)}')


def verify_coh_category(a):
    d, h = a.cat, a.hopf
    v = Verdict(f'co-{h.name} category {d.name}')
    for X, Y in d.pairs():
        v.merge(verify_comodule(a.comodule(X, Y)))
    f = d.field
    for X, Y, Z in d.triples():
        # rho(g f) = g_0 f_0 (x) g_1 f_1
        lhs = a.rho(X, Z) @ d.comp(X, Y, Z)
        order = permute_legs(f, [d.dim(Y, Z), h.dim, d.dim(X, Y), h.dim], [0, 2, 1, 3])
        rhs = kron(d.comp(X, Y, Z), h.mult) @ order @ kron(a.rho(Y, Z), a.rho(X, Y))
        v.expect_equal(f'colinear composition at {(X, Y, Z)}', lhs, rhs)
    for X in d.objects:
        v.expect_equal(f'identity of {X} is coinvariant', a.rho(X, X) @ d.id(X),
                       kron(d.id(X), h.unit))
    return v


def doi_hopf_entwining(a, coalg, action, name='doi_hopf'):
    """
    psi(c (x) f) = f_0 (x) c . f_1 for a co-H-category ``a`` and a right
    H-module coalgebra ``coalg`` with ``action`` : C (x) H -> C.

    Raises ``VerificationError`` when the inputs or the result fail their laws.
    """
    d, h = a.cat, a.hopf
    pre = Verdict('doi-hopf datum')
    pre.merge(verify_hopf(h))
    pre.merge(verify_coh_category(a))
    pre.merge(verify_module_coalgebra(coalg, h, action))
    if not pre:
        raise VerificationError(pre)
    f = d.field
    n = coalg.dim
    psi = {}
    for X, Y in d.pairs():
        dxy = d.dim(X, Y)
        # c (x) f_0 (x) f_1 -> f_0 (x) c (x) f_1 -> f_0 (x) c . f_1
        spread = kron(coalg.identity(), a.rho(X, Y))
        reorder = permute_legs(f, [n, dxy, h.dim], [1, 0, 2])
        psi[(X, Y)] = kron(d.eye(X, Y), action) @ reorder @ spread
    e = Entwining(d, coalg, psi, name)
    post = verify_entwining(e)
    if not post:
        raise VerificationError(post)
    return e
