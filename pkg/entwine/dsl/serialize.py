from __future__ import annotations

from .document import HEADERS, MAP, NAMES, SECTIONS

INDENT = '    '


class _Order:
    """
    Sort keys for names: position in the declaring list (basis, objects,
    hom, space) first, then the name itself.
    """

    def __init__(self, doc):
        self.rank = {}
        for block in doc.blocks.values():
            keywords = list(SECTIONS[block.kind])
            for key in sorted(block.sections, key=lambda s: (keywords.index(s[0]), s[1:])):
                if SECTIONS[block.kind][key[0]][0] == NAMES:
                    for i, name in enumerate(block.sections[key]):
                        self.rank.setdefault(name, i)

    def name(self, name):
        return self.rank.get(name, len(self.rank)), name

    def names(self, names):
        return tuple(self.name(n) for n in names)


def _scalar(k, c):
    return k.literal(c)


def format_lincomb(k, comb, order):
    """Canonical text of a linear combination: sorted terms, unit coefficients omitted"""
    if not comb:
        return '0'
    parts = []
    for factors in sorted(comb, key=order.names):
        c = comb[factors]
        negative = not k.is_prime_field and c < 0
        magnitude = -c if negative else c
        body = '*'.join(factors)
        if not factors:
            text = _scalar(k, magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f'{_scalar(k, magnitude)} {body}'
        if not parts:
            parts.append(f'-{text}' if negative else text)
        else:
            parts.append(f'- {text}' if negative else f'+ {text}')
    return ' '.join(parts)


def _section_key(kind, order):
    keywords = list(SECTIONS[kind])

    def key(section):
        return keywords.index(section[0]), order.names(section[1:])
    return key


def _section(k, block, key, value, order):
    head = ' '.join(key)
    kind = SECTIONS[block.kind][key[0]][0]
    if kind == NAMES:
        body = ', '.join(value)
    elif kind == MAP:
        body = ', '.join(f'{"*".join(lhs)} -> {format_lincomb(k, value[lhs], order)}'
                         for lhs in sorted(value, key=order.names))
    else:
        body = format_lincomb(k, value, order)
    return f'{INDENT}{head}: {body};' if body else f'{INDENT}{head}: ;'


def serialize(doc):
    """
    Canonical text of a document: fixed section order, entries sorted by
    declaration order of their names, rationals in lowest terms and GF(p)
    residues in [0, p). Comments and layout of the source are not kept.
    """
    k = doc.ground
    order = _Order(doc)
    lines = ['field gf %d;' % k.modulus if k.is_prime_field else 'field rationals;']
    for block in doc.blocks.values():
        lines.append('')
        required, optional = HEADERS[block.kind]
        header = [block.kind, block.name]
        for keyword in required + optional:
            if keyword in block.header:
                header += [keyword, str(block.header[keyword])]
        lines.append(' '.join(header) + ' {')
        for key in sorted(block.sections, key=_section_key(block.kind, order)):
            lines.append(_section(k, block, key, block.sections[key], order))
        lines.append('}')
    return '\n'.join(lines) + '\n'
