from __future__ import annotations

from .document import PRESETS
from .errors import DIMENSION, REFERENCE, SYNTAX, Diagnostic


def _show(names):
    return '*'.join(names) if names else 'scalar'


class Resolver:
    """
    Name resolution and dimension checks over a syntactically valid
    document. Blocks may only refer to blocks declared before them.
    """

    def __init__(self, doc):
        self.doc = doc
        self.diagnostics = []
        self.seen = {}
        self.bases = {}      # coalgebra or hopf name -> basis names
        self.objects = {}    # category name -> object names
        self.homs = {}       # category name -> morphism name -> (X, Y)

    def run(self):
        for block in self.doc.blocks.values():
            getattr(self, f'_{block.kind}')(block)
            self.seen[block.name] = block
        return self.diagnostics

    def error(self, category, block, message, span):
        self.diagnostics.append(Diagnostic(category, f'{block.kind} {block.name}: {message}', span))

    def lookup(self, block, keyword, kinds):
        name = block.ref(keyword)
        if name is None:
            return None
        target = self.seen.get(name)
        if target is None or target.kind not in kinds:
            self.error(REFERENCE, block, f'"{name}" is not a previously declared {" or ".join(kinds)}',
                       block.span_of('header', keyword))
            return None
        return target

    def unique(self, block, key, names, what):
        seen = set()
        for name in names:
            if name in seen:
                self.error(REFERENCE, block, f'duplicate {what} "{name}"', block.span_of(key, name))
            seen.add(name)

    def monomial(self, block, names, spaces, span):
        """``spaces`` lists one (names, label) pair per tensor factor"""
        if len(names) != len(spaces):
            self.error(DIMENSION, block, f'"{_show(names)}" has {len(names)} tensor factors, '
                       f'expected {len(spaces)}', span)
            return False
        ok = True
        for name, (space, what) in zip(names, spaces):
            if name not in space:
                self.error(REFERENCE, block, f'unknown {what} "{name}"', span)
                ok = False
        return ok

    def simple_map(self, block, key, lhs_spaces, rhs_spaces):
        for lhs, comb in block.section(*key, default={}).items():
            span = block.span_of(key, lhs)
            self.monomial(block, lhs, lhs_spaces, span)
            for factors in comb:
                self.monomial(block, factors, rhs_spaces, span)

    def in_pair(self, block, homs, name, pair, span):
        if homs[name] != pair:
            X, Y = pair
            self.error(DIMENSION, block, f'"{name}" does not lie in Hom({X}, {Y})', span)

    # ------------------------------------------------------------------
    # Blocks

    def _coalgebra(self, block):
        basis = block.section('basis', default=())
        dim = block.ref('dim')
        if len(basis) != dim:
            self.error(DIMENSION, block, f'{len(basis)} basis elements for dimension {dim}',
                       block.span_of('basis'))
        self.unique(block, ('basis',), basis, 'basis element')
        self.bases[block.name] = basis
        b = (set(basis), 'basis element')
        self.simple_map(block, ('delta',), [b], [b, b])
        self.simple_map(block, ('counit',), [b], [])
        return b

    def _hopf(self, block):
        b = self._coalgebra(block)
        self.simple_map(block, ('mult',), [b, b], [b])
        self.simple_map(block, ('antipode',), [b], [b])
        for factors in block.section('unit', default={}):
            self.monomial(block, factors, [b], block.span_of('unit'))

    def _category(self, block):
        objects = block.section('objects', default=())
        if not objects:
            self.error(DIMENSION, block, 'a category needs at least one object', block.span)
        self.unique(block, ('objects',), objects, 'object')
        homs = {}
        for (X, Y), names in block.keyed('hom'):
            for obj in (X, Y):
                if obj not in objects:
                    self.error(REFERENCE, block, f'unknown object "{obj}"', block.span_of('hom', X, Y))
            for name in names:
                if name in homs:
                    self.error(REFERENCE, block, f'duplicate morphism name "{name}"',
                               block.span_of(('hom', X, Y), name))
                homs[name] = (X, Y)
        self.objects[block.name] = objects
        self.homs[block.name] = homs
        h = (homs, 'morphism')
        for lhs, comb in block.section('identity', default={}).items():
            span = block.span_of(('identity',), lhs)
            if not self.monomial(block, lhs, [(set(objects), 'object')], span):
                continue
            for factors in comb:
                if self.monomial(block, factors, [h], span):
                    self.in_pair(block, homs, factors[0], (lhs[0], lhs[0]), span)
        for lhs, comb in block.section('compose', default={}).items():
            span = block.span_of(('compose',), lhs)
            if not self.monomial(block, lhs, [h, h], span):
                continue
            g, f = lhs
            (X, Y), (Y2, Z) = homs[f], homs[g]
            if Y != Y2:
                self.error(DIMENSION, block, f'"{g}*{f}" is not composable', span)
                continue
            for factors in comb:
                if self.monomial(block, factors, [h], span):
                    self.in_pair(block, homs, factors[0], (X, Z), span)

    def _over(self, block):
        """(category, coalgebra basis) referenced by ``on`` and ``with``"""
        cat = self.lookup(block, 'on', ('category',))
        coalg = self.lookup(block, 'with', ('coalgebra', 'hopf'))
        basis = self.bases.get(coalg.name) if coalg is not None else None
        return cat, basis

    def _coactions(self, block):
        cat, basis = self._over(block)
        if cat is None or basis is None:
            return
        homs = self.homs[cat.name]
        h, b = (homs, 'morphism'), (set(basis), 'basis element')
        for lhs, comb in block.section('coaction', default={}).items():
            span = block.span_of(('coaction',), lhs)
            if not self.monomial(block, lhs, [h], span):
                continue
            for factors in comb:
                if self.monomial(block, factors, [h, b], span):
                    self.in_pair(block, homs, factors[0], homs[lhs[0]], span)

    def _entwining(self, block):
        cat, basis = self._over(block)
        given = [key for key in (('psi',), ('preset',), ('doi_hopf',)) if key in block.sections]
        if len(given) > 1:
            self.error(SYNTAX, block, 'give only one of psi, preset and doi_hopf', block.span)
        preset = block.section('preset')
        if preset is not None and (len(preset) != 1 or preset[0] not in PRESETS):
            self.error(REFERENCE, block, f'unknown preset "{", ".join(preset)}"', block.span_of('preset'))
        doi_hopf = block.section('doi_hopf')
        if doi_hopf is not None:
            self._doi_hopf(block, doi_hopf)
        if cat is None or basis is None:
            return
        homs = self.homs[cat.name]
        h, b = (homs, 'morphism'), (set(basis), 'basis element')
        for lhs, comb in block.section('psi', default={}).items():
            span = block.span_of(('psi',), lhs)
            if not self.monomial(block, lhs, [b, h], span):
                continue
            for factors in comb:
                if self.monomial(block, factors, [h, b], span):
                    self.in_pair(block, homs, factors[0], homs[lhs[1]], span)

    def _doi_hopf(self, block, names):
        span = block.span_of('doi_hopf')
        if len(names) != 2:
            self.error(SYNTAX, block, 'doi_hopf takes a coactions block and an action block', span)
            return
        rho, act = self.seen.get(names[0]), self.seen.get(names[1])
        if rho is None or rho.kind != 'coactions':
            self.error(REFERENCE, block, f'"{names[0]}" is not a previously declared coactions', span)
            return
        if act is None or act.kind != 'action':
            self.error(REFERENCE, block, f'"{names[1]}" is not a previously declared action', span)
            return
        hopf = self.seen.get(rho.ref('with'))
        if hopf is None or hopf.kind != 'hopf':
            self.error(REFERENCE, block, f'coactions {rho.name} are not over a hopf algebra', span)
        elif act.ref('by') != hopf.name:
            self.error(REFERENCE, block, f'action {act.name} is not by {hopf.name}', span)
        if rho.ref('on') != block.ref('on'):
            self.error(REFERENCE, block, f'coactions {rho.name} live on another category', span)
        if act.ref('of') != block.ref('with'):
            self.error(REFERENCE, block, f'action {act.name} acts on another coalgebra', span)

    def _action(self, block):
        target = self.lookup(block, 'of', ('coalgebra', 'hopf'))
        hopf = self.lookup(block, 'by', ('hopf',))
        if target is None or hopf is None:
            return
        c = (set(self.bases[target.name]), 'basis element')
        h = (set(self.bases[hopf.name]), 'basis element')
        self.simple_map(block, ('act',), [c, h], [c])

    def _module(self, block):
        cat = self.lookup(block, 'on', ('category',))
        coalg = self.lookup(block, 'with', ('coalgebra', 'hopf'))
        if cat is None:
            return
        objects, homs = self.objects[cat.name], self.homs[cat.name]
        where = {}
        for (X,), names in block.keyed('space'):
            if X not in objects:
                self.error(REFERENCE, block, f'unknown object "{X}"', block.span_of('space', X))
            for name in names:
                if name in where:
                    self.error(REFERENCE, block, f'duplicate element name "{name}"',
                               block.span_of(('space', X), name))
                where[name] = X
        m, h = (where, 'module element'), (homs, 'morphism')
        for lhs, comb in block.section('act', default={}).items():
            span = block.span_of(('act',), lhs)
            if not self.monomial(block, lhs, [m, h], span):
                continue
            x, f = lhs
            X, Y = homs[f]
            if where[x] != Y:
                self.error(DIMENSION, block, f'"{x}" lies over {where[x]}, but "{f}" acts on {Y}', span)
                continue
            for factors in comb:
                if self.monomial(block, factors, [m], span) and where[factors[0]] != X:
                    self.error(DIMENSION, block, f'"{factors[0]}" does not lie over {X}', span)
        coaction = block.section('coaction')
        if coaction is None:
            return
        if block.ref('with') is None:
            self.error(REFERENCE, block, 'a coaction needs "with" in the header', block.span_of('coaction'))
            return
        if coalg is None:
            return
        b = (set(self.bases[coalg.name]), 'basis element')
        for lhs, comb in coaction.items():
            span = block.span_of(('coaction',), lhs)
            if not self.monomial(block, lhs, [m], span):
                continue
            for factors in comb:
                if self.monomial(block, factors, [m, b], span) and where[factors[0]] != where[lhs[0]]:
                    self.error(DIMENSION, block, f'"{factors[0]}" does not lie over {where[lhs[0]]}', span)

    def _phi(self, block):
        cat, basis = self._over(block)
        if cat is None or basis is None:
            return
        objects, homs = self.objects[cat.name], self.homs[cat.name]
        b = (set(basis), 'basis element')
        for (X, Y), entries in block.keyed('map'):
            key = ('map', X, Y)
            if X not in objects or Y not in objects:
                self.error(REFERENCE, block, f'unknown object in "map {X} {Y}"', block.span_of(*key))
                continue
            for lhs, comb in entries.items():
                span = block.span_of(key, lhs)
                self.monomial(block, lhs, [b], span)
                for factors in comb:
                    if self.monomial(block, factors, [(homs, 'morphism')], span):
                        self.in_pair(block, homs, factors[0], (X, Y), span)


def resolve(doc):
    """Reference and dimension diagnostics of a parsed document"""
    return Resolver(doc).run()
