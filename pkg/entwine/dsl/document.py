from __future__ import annotations

from dataclasses import dataclass, field

'''
Document model of an instance file.

A linear combination is a dict from a tuple of basis names (empty for a
scalar) to a nonzero field scalar. A map section is a dict from its
left-hand side tuple to a linear combination. Both compare as plain dicts,
so two documents are equal when they describe the same structures,
whatever the order of entries in the source.
'''

NAMES = 'names'
MAP = 'map'
VALUE = 'value'

# block kind -> (required header keywords, optional header keywords)
HEADERS = {
    'coalgebra': (('dim',), ()),
    'hopf': (('dim',), ()),
    'category': ((), ()),
    'coactions': (('on', 'with'), ()),
    'entwining': (('on', 'with'), ()),
    'action': (('of', 'by'), ()),
    'module': (('on',), ('with',)),
    'phi': (('on', 'with'), ()),
}

_COALGEBRA_SECTIONS = {'basis': (NAMES, 0), 'delta': (MAP, 0), 'counit': (MAP, 0)}

# block kind -> section keyword -> (section type, number of arguments)
SECTIONS = {
    'coalgebra': dict(_COALGEBRA_SECTIONS),
    'hopf': {**_COALGEBRA_SECTIONS, 'mult': (MAP, 0), 'unit': (VALUE, 0), 'antipode': (MAP, 0)},
    'category': {'objects': (NAMES, 0), 'hom': (NAMES, 2), 'identity': (MAP, 0), 'compose': (MAP, 0)},
    'coactions': {'coaction': (MAP, 0)},
    'entwining': {'psi': (MAP, 0), 'preset': (NAMES, 0), 'doi_hopf': (NAMES, 0)},
    'action': {'act': (MAP, 0)},
    'module': {'space': (NAMES, 1), 'act': (MAP, 0), 'coaction': (MAP, 0)},
    'phi': {'map': (MAP, 2)},
}

PRESETS = ('swap',)


@dataclass
class Block:
    """
    One named block. ``header`` maps header keywords (dim, on, with, of, by)
    to their values; ``sections`` maps a key ``(keyword, *arguments)`` to a
    name tuple, a map or a linear combination.

    ``spans`` records source spans keyed by ``('header', keyword)``, by
    section key, and by ``(section key, lhs)`` for map entries.
    """
    kind: str
    name: str
    header: dict = field(default_factory=dict)
    sections: dict = field(default_factory=dict)
    span: object = field(default=None, compare=False, repr=False)
    spans: dict = field(default_factory=dict, compare=False, repr=False)

    def ref(self, keyword):
        return self.header.get(keyword)

    def section(self, keyword, *args, default=None):
        return self.sections.get((keyword, *args), default)

    def keyed(self, keyword):
        """Sections with the given keyword, as (arguments, value) pairs"""
        return [(key[1:], value) for key, value in self.sections.items() if key[0] == keyword]

    def span_of(self, *key):
        return self.spans.get(key, self.span)

    def to_string(self):
        return f'Block[{self.kind} {self.name}]'


@dataclass
class Document:
    """A parsed instance file: the ground field and the blocks in declaration order"""
    ground: object
    blocks: dict = field(default_factory=dict)
    field_span: object = field(default=None, compare=False, repr=False)

    def get(self, name):
        return self.blocks.get(name)

    def of_kind(self, *kinds):
        return [b for b in self.blocks.values() if b.kind in kinds]

    def to_string(self):
        return f'Document[{self.ground}, blocks = {list(self.blocks)}]'
