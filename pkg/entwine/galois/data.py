from __future__ import annotations

import logging
from dataclasses import dataclass

from entwine.algebra import Comodule, verify_comodule
from entwine.category import Subcategory, verify_subcategory
from entwine.errors import ShapeError, VerificationError
from entwine.linalg import Matrix, hstack, kernel_basis, kron, vstack
from entwine.utils import Verdict

log = logging.getLogger(__name__)


@dataclass(eq=False)
class GaloisData:
    """
    A category whose hom spaces are right C-comodules.

    Parameter ``coactions`` (``dict``):
        (X, Y) -> Matrix Hom(X,Y) -> Hom(X,Y) (x) C
    """
    cat: object
    coalg: object
    coactions: dict
    name: str = 'rho'

    @property
    def field(self):
        return self.cat.field

    def rho(self, X, Y):
        try:
            return self.coactions[(X, Y)]
        except KeyError:
            raise ShapeError(f'coactions {self.name}: no entry for {(X, Y)}')

    def comodule(self, X, Y):
        return Comodule(self.coalg, self.cat.dim(X, Y), self.rho(X, Y), name=f'Hom{(X, Y)}')


def galois_data_from_coh(a, name='rho'):
    """The hom coactions of a co-H-category"""
    return GaloisData(a.cat, a.hopf.coalgebra, dict(a.coactions), name)


def trivial_coactions(cat, coalg, group_like=0, name='trivial'):
    """f -> f (x) g for a group-like basis element g"""
    g = Matrix.unit(cat.field, coalg.dim, group_like)
    return GaloisData(cat, coalg, {(X, Y): kron(cat.eye(X, Y), g) for X, Y in cat.pairs()}, name)


def verify_galois_data(g):
    v = Verdict(f'hom coactions {g.name}')
    for X, Y in g.cat.pairs():
        v.merge(verify_comodule(g.comodule(X, Y)))
    return v


def _coinvariance_defect(g, X, Y):
    """
    Matrix sending g in Hom(X,Y) to the stacked values over Z of
    rho(g f) - (g o -) (x) C applied to rho(f), as a linear map of g.
    """
    d = g.cat
    one_c = g.coalg.identity()
    blocks = []
    for Z in d.objects:
        defect = g.rho(Z, Y) @ d.comp(Z, X, Y) - kron(d.comp(Z, X, Y), one_c) @ kron(d.eye(X, Y), g.rho(Z, X))
        cols = [(defect @ kron(Matrix.unit(d.field, d.dim(X, Y), k), d.eye(Z, X))).flatten()
                for k in range(d.dim(X, Y))]
        rows = d.dim(Z, Y) * g.coalg.dim * d.dim(Z, X)
        blocks.append(hstack(d.field, cols, rows))
    return vstack(d.field, blocks, d.dim(X, Y))


def coinvariant_subcategory(g):
    """Hom_E(X,Y) = {g | rho(g f) = g f_0 (x) f_1 for every f}"""
    d = g.cat
    spaces = {}
    for X, Y in d.pairs():
        spaces[(X, Y)] = kernel_basis(_coinvariance_defect(g, X, Y))
        log.debug('coinvariants %s: dimension %d of %d', (X, Y), spaces[(X, Y)].cols, d.dim(X, Y))
    sub = Subcategory(d, spaces, name=f'{d.name}^co')
    verdict = verify_subcategory(sub)
    if not verdict:
        raise VerificationError(verdict)
    return sub


def check_coinvariant(g, sub):
    """Every morphism of ``sub`` is C-coinvariant"""
    v = Verdict(f'{sub.name} inside the coinvariants')
    for X, Y in g.cat.pairs():
        if not (_coinvariance_defect(g, X, Y) @ sub.subspace(X, Y)).is_zero():
            v.fail(f'Hom_E{(X, Y)} contains a morphism that is not coinvariant')
    return v
