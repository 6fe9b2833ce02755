from __future__ import annotations

import logging
from dataclasses import dataclass, field

from entwine.algebra import Coalgebra, HopfAlgebra
from entwine.category import LinCategory, RightModule
from entwine.entwining import (CoHCategory, EntwinedModule, Entwining, doi_hopf_entwining,
                               swap_entwining)
from entwine.errors import EntwineError, VerificationError
from entwine.galois import GaloisData, PhiFamily
from entwine.linalg import Matrix

log = logging.getLogger(__name__)


@dataclass(eq=False)
class Instance:
    """
    The structures a document describes, keyed by block name. ``failures``
    holds the ``VerificationError`` of every block whose construction
    checks its own inputs and rejected them (Doi-Hopf entwinings).
    """
    document: object
    field: object
    coalgebras: dict = field(default_factory=dict)
    hopfs: dict = field(default_factory=dict)
    categories: dict = field(default_factory=dict)
    coactions: dict = field(default_factory=dict)
    actions: dict = field(default_factory=dict)
    entwinings: dict = field(default_factory=dict)
    modules: dict = field(default_factory=dict)
    phis: dict = field(default_factory=dict)
    failures: dict = field(default_factory=dict)

    def _pick(self, table, kind, name):
        if name is not None:
            if name not in table:
                raise EntwineError(f'no {kind} named "{name}"')
            return table[name]
        if not table:
            raise EntwineError(f'the instance declares no {kind}')
        return next(iter(table.values()))

    def entwining(self, name=None):
        """The named entwining, or the first one declared"""
        if name is None and not self.entwinings and self.failures:
            first = next(iter(self.failures.values()))
            raise first
        return self._pick(self.entwinings, 'entwining', name)

    def galois(self, name=None):
        return self._pick(self.coactions, 'coactions', name)

    def _over(self, name):
        block = self.document.get(name)
        return block.ref('on'), block.ref('with')

    def entwined_modules(self, entwining_name):
        """Entwined modules declared over the same category and coalgebra"""
        over = self._over(entwining_name)
        return [m for name, m in self.modules.items()
                if isinstance(m, EntwinedModule) and self._over(name) == over]

    def phi_for(self, galois_name):
        """First Phi block over the same category and coalgebra, if any"""
        over = self._over(galois_name)
        for name, phi in self.phis.items():
            if self._over(name) == over:
                return phi
        return None


def _assemble(k, entries, rows, cols, col_of, row_of):
    m = Matrix.zeros(k, rows, cols)
    for lhs, comb in entries.items():
        j = col_of(lhs)
        for factors, coef in comb.items():
            m.set(row_of(factors), j, coef)
    return m


class Builder:
    def __init__(self, doc):
        self.doc = doc
        self.k = doc.ground
        self.instance = Instance(doc, doc.ground)
        self.index = {}     # block name -> element name -> position

    def run(self):
        for block in self.doc.blocks.values():
            getattr(self, f'_{block.kind}')(block)
        return self.instance

    def coalgebra(self, name):
        inst = self.instance
        return inst.hopfs[name].coalgebra if name in inst.hopfs else inst.coalgebras[name]

    # ------------------------------------------------------------------

    def _coalgebra(self, block):
        k = self.k
        basis = block.section('basis')
        n = len(basis)
        at = {b: i for i, b in enumerate(basis)}
        self.index[block.name] = at
        delta = _assemble(k, block.section('delta', default={}), n * n, n,
                          lambda lhs: at[lhs[0]], lambda f: at[f[0]] * n + at[f[1]])
        counit = _assemble(k, block.section('counit', default={}), 1, n,
                           lambda lhs: at[lhs[0]], lambda f: 0)
        c = Coalgebra(k, n, delta, counit, tuple(basis), name=block.name)
        if block.kind == 'coalgebra':
            self.instance.coalgebras[block.name] = c
        return c, at

    def _hopf(self, block):
        k = self.k
        c, at = self._coalgebra(block)
        n = c.dim
        mult = _assemble(k, block.section('mult', default={}), n, n * n,
                         lambda lhs: at[lhs[0]] * n + at[lhs[1]], lambda f: at[f[0]])
        unit = _assemble(k, {(): block.section('unit', default={})}, n, 1,
                         lambda lhs: 0, lambda f: at[f[0]])
        antipode = _assemble(k, block.section('antipode', default={}), n, n,
                             lambda lhs: at[lhs[0]], lambda f: at[f[0]])
        self.instance.hopfs[block.name] = HopfAlgebra(c, mult, unit, antipode)

    def _category(self, block):
        k = self.k
        objects = tuple(block.section('objects'))
        hom_names = {(X, Y): () for X in objects for Y in objects}
        for (X, Y), names in block.keyed('hom'):
            hom_names[(X, Y)] = tuple(names)
        where = {}
        for pair, names in hom_names.items():
            for i, name in enumerate(names):
                where[name] = (pair, i)
        self.index[block.name] = where

        def dim(X, Y):
            return len(hom_names[(X, Y)])

        identities = {X: Matrix.zeros(k, dim(X, X), 1) for X in objects}
        for (X,), comb in block.section('identity', default={}).items():
            for (f,), coef in comb.items():
                identities[X].set(where[f][1], 0, coef)
        compose = {(X, Y, Z): Matrix.zeros(k, dim(X, Z), dim(Y, Z) * dim(X, Y))
                   for X in objects for Y in objects for Z in objects}
        for (g, f), comb in block.section('compose', default={}).items():
            (X, Y), i = where[f]
            (_, Z), j = where[g]
            for (h,), coef in comb.items():
                compose[(X, Y, Z)].set(where[h][1], j * dim(X, Y) + i, coef)
        hom_dims = {pair: len(names) for pair, names in hom_names.items() if names}
        self.instance.categories[block.name] = LinCategory(
            k, objects, hom_dims, compose, identities, hom_names, block.name)

    def _hom_coaction_table(self, cat_name, coalg_name, entries):
        """Per pair the matrix Hom(X,Y) -> Hom(X,Y) (x) C of f -> sum f' * c"""
        k = self.k
        d = self.instance.categories[cat_name]
        where, at = self.index[cat_name], self.index[coalg_name]
        n = len(at)
        table = {(X, Y): Matrix.zeros(k, d.dim(X, Y) * n, d.dim(X, Y)) for X, Y in d.pairs()}
        for (f,), comb in entries.items():
            pair, j = where[f]
            for (f2, c), coef in comb.items():
                table[pair].set(where[f2][1] * n + at[c], j, coef)
        return table

    def _coactions(self, block):
        on, over = block.ref('on'), block.ref('with')
        table = self._hom_coaction_table(on, over, block.section('coaction', default={}))
        self.instance.coactions[block.name] = GaloisData(
            self.instance.categories[on], self.coalgebra(over), table, block.name)

    def _action(self, block):
        target, by = block.ref('of'), block.ref('by')
        at, h = self.index[target], self.index[by]
        nh = len(h)
        self.instance.actions[block.name] = _assemble(
            self.k, block.section('act', default={}), len(at), len(at) * nh,
            lambda lhs: at[lhs[0]] * nh + h[lhs[1]], lambda f: at[f[0]])

    def _entwining(self, block):
        k = self.k
        on, over = block.ref('on'), block.ref('with')
        d, c = self.instance.categories[on], self.coalgebra(over)
        if block.section('preset') is not None:
            self.instance.entwinings[block.name] = swap_entwining(d, c, block.name)
            return
        doi_hopf = block.section('doi_hopf')
        if doi_hopf is not None:
            rho_block = self.doc.get(doi_hopf[0])
            hopf = self.instance.hopfs[rho_block.ref('with')]
            a = CoHCategory(d, hopf, self.instance.coactions[doi_hopf[0]].coactions)
            try:
                self.instance.entwinings[block.name] = doi_hopf_entwining(
                    a, c, self.instance.actions[doi_hopf[1]], block.name)
            except VerificationError as err:
                log.info('entwining %s rejected: %s', block.name, err)
                self.instance.failures[block.name] = err
            return
        where, at = self.index[on], self.index[over]
        n = c.dim
        psi = {}
        for (b, f), comb in block.section('psi', default={}).items():
            (X, Y), j = where[f]
            dxy = d.dim(X, Y)
            if (X, Y) not in psi:
                psi[(X, Y)] = Matrix.zeros(k, dxy * n, n * dxy)
            for (f2, b2), coef in comb.items():
                psi[(X, Y)].set(where[f2][1] * n + at[b2], at[b] * dxy + j, coef)
        for X, Y in d.pairs():
            if d.dim(X, Y) == 0:
                psi[(X, Y)] = Matrix.zeros(k, 0, 0)
        self.instance.entwinings[block.name] = Entwining(d, c, psi, block.name)

    def _module(self, block):
        k = self.k
        d = self.instance.categories[block.ref('on')]
        where = self.index[block.ref('on')]
        spaces = {X: () for X in d.objects}
        for (X,), names in block.keyed('space'):
            spaces[X] = tuple(names)
        elements = {name: (X, i) for X, names in spaces.items() for i, name in enumerate(names)}
        dims = {X: len(names) for X, names in spaces.items()}
        actions = {(X, Y): Matrix.zeros(k, dims[X], dims[Y] * d.dim(X, Y)) for X, Y in d.pairs()}
        for (x, f), comb in block.section('act', default={}).items():
            (X, Y), j = where[f]
            for (y,), coef in comb.items():
                actions[(X, Y)].set(elements[y][1], elements[x][1] * d.dim(X, Y) + j, coef)
        module = RightModule(d, dims, actions, block.name)
        over = block.ref('with')
        if over is None:
            self.instance.modules[block.name] = module
            return
        at = self.index[over]
        n = len(at)
        coactions = {X: Matrix.zeros(k, dims[X] * n, dims[X]) for X in d.objects}
        for (x,), comb in block.section('coaction', default={}).items():
            X, i = elements[x]
            for (y, c), coef in comb.items():
                coactions[X].set(elements[y][1] * n + at[c], i, coef)
        self.instance.modules[block.name] = EntwinedModule(module, coactions, block.name)

    def _phi(self, block):
        k = self.k
        d = self.instance.categories[block.ref('on')]
        where, at = self.index[block.ref('on')], self.index[block.ref('with')]
        components = {(X, Y): Matrix.zeros(k, d.dim(X, Y), len(at)) for X, Y in d.pairs()}
        for (X, Y), entries in block.keyed('map'):
            for (c,), comb in entries.items():
                for (f,), coef in comb.items():
                    components[(X, Y)].set(where[f][1], at[c], coef)
        self.instance.phis[block.name] = PhiFamily(components)


def build(doc):
    """Assemble the structure constants of a parsed document into matrices"""
    instance = Builder(doc).run()
    log.debug('built %s', doc.to_string())
    return instance
