from __future__ import annotations

import logging
from fractions import Fraction

from entwine.algebra import default_names
from entwine.linalg import GF, QQ, is_prime

from .document import HEADERS, MAP, NAMES, SECTIONS, VALUE, Block, Document
from .errors import DIMENSION, LEXICAL, REFERENCE, SYNTAX, Diagnostic, DslError, SourceSpan
from .lexer import tokenize
from .resolve import resolve

log = logging.getLogger(__name__)


class _Recover(Exception):
    """Abandon the current statement and resynchronize"""


class Parser:
    """
    Recursive-descent parser over the token list. Problems are collected as
    diagnostics; after an error the parser skips to the end of the current
    section (``;``) or block (``}``) and carries on.
    """

    def __init__(self, text):
        self.tokens, self.diagnostics = tokenize(text)
        self.pos = 0
        self.ground = QQ

    # ------------------------------------------------------------------
    # Token stream

    def peek(self, ahead=0):
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def advance(self):
        tok = self.peek()
        if tok.kind != 'eof':
            self.pos += 1
        return tok

    def at(self, text):
        return self.peek().is_(text)

    def at_end(self):
        return self.peek().kind == 'eof'

    def error(self, category, message, span):
        self.diagnostics.append(Diagnostic(category, message, span))

    def expect(self, text):
        tok = self.peek()
        if not tok.is_(text):
            self.error(SYNTAX, f'expected "{text}", found {tok}', tok.span)
            raise _Recover()
        return self.advance()

    def expect_name(self, what):
        tok = self.peek()
        if tok.kind != 'name':
            self.error(SYNTAX, f'expected {what}, found {tok}', tok.span)
            raise _Recover()
        return self.advance()

    def synchronize(self):
        # inside a block: up to and including the next ";", or up to "}"
        depth = 0
        while not self.at_end():
            if self.at('{'):
                depth += 1
            elif self.at('}'):
                if depth == 0:
                    return
                depth -= 1
            elif self.at(';') and depth == 0:
                self.advance()
                return
            self.advance()

    def skip_block(self):
        depth = 0
        while not self.at_end():
            tok = self.advance()
            if tok.is_('{'):
                depth += 1
            elif tok.is_('}'):
                depth -= 1
                if depth <= 0:
                    return
            elif tok.is_(';') and depth == 0:
                return

    # ------------------------------------------------------------------
    # Statements

    def document(self):
        doc = Document(QQ)
        if self.at('field'):
            self.field_decl(doc)
        else:
            self.error(SYNTAX, 'missing field declaration ("field rationals;" or "field gf P;")',
                       self.peek().span)
        while not self.at_end():
            tok = self.peek()
            if tok.is_('field'):
                self.error(SYNTAX, 'duplicate field declaration', tok.span)
                self.field_decl(None)
            elif tok.kind == 'name' and tok.text in SECTIONS:
                self.block(doc)
            else:
                self.error(SYNTAX, f'unknown block kind {tok}', tok.span)
                self.skip_block()
        return doc

    def field_decl(self, doc):
        start = self.advance()
        ground = None
        try:
            kind = self.expect_name('"rationals" or "gf"')
            if kind.text == 'rationals':
                ground = QQ
            elif kind.text == 'gf':
                tok = self.peek()
                if tok.kind != 'number':
                    self.error(SYNTAX, f'expected a prime modulus, found {tok}', tok.span)
                    raise _Recover()
                self.advance()
                if is_prime(int(tok.text)):
                    ground = GF(int(tok.text))
                else:
                    self.error(SYNTAX, f'field modulus {tok.text} is not a prime', tok.span)
            else:
                self.error(SYNTAX, f'unknown field "{kind.text}"', kind.span)
                raise _Recover()
            end = self.expect(';')
        except _Recover:
            self.synchronize()
            return
        if doc is not None and ground is not None:
            doc.ground = ground
            doc.field_span = start.span.join(end.span)
            self.ground = ground

    def block(self, doc):
        kind_tok = self.advance()
        kind = kind_tok.text
        try:
            name_tok = self.expect_name(f'a name for the {kind}')
            block = Block(kind, name_tok.text)
            self.header(block)
            self.expect('{')
        except _Recover:
            self.skip_block()
            return
        while not self.at('}') and not self.at_end():
            try:
                self.section(block)
            except _Recover:
                self.synchronize()
        end = self.peek()
        if self.at_end():
            self.error(SYNTAX, f'missing "}}" at the end of {kind} {block.name}', end.span)
        else:
            self.advance()
        block.span = kind_tok.span.join(end.span)
        if kind in ('coalgebra', 'hopf') and ('basis',) not in block.sections:
            dim = block.ref('dim')
            if dim is not None and dim > 0:
                block.sections[('basis',)] = default_names(dim)
        if block.name in doc.blocks:
            self.error(REFERENCE, f'duplicate block name "{block.name}"', name_tok.span)
        else:
            doc.blocks[block.name] = block

    def header(self, block):
        required, optional = HEADERS[block.kind]
        while not self.at('{') and not self.at_end():
            tok = self.expect_name('a header keyword or "{"')
            keyword = tok.text
            if keyword not in required + optional or keyword in block.header:
                self.error(SYNTAX, f'unexpected "{keyword}" in the header of {block.kind} {block.name}',
                           tok.span)
                raise _Recover()
            if keyword == 'dim':
                value, span = self.dimension()
            else:
                ref = self.expect_name(f'a block name after "{keyword}"')
                value, span = ref.text, ref.span
            block.header[keyword] = value
            block.spans[('header', keyword)] = span
        for keyword in required:
            if keyword not in block.header:
                self.error(SYNTAX, f'{block.kind} {block.name} needs "{keyword}" in its header',
                           self.peek().span)

    def dimension(self):
        sign = self.advance() if self.at('-') else None
        tok = self.peek()
        if tok.kind != 'number':
            self.error(SYNTAX, f'expected a dimension, found {tok}', tok.span)
            raise _Recover()
        self.advance()
        value = -int(tok.text) if sign else int(tok.text)
        span = sign.span.join(tok.span) if sign else tok.span
        if value <= 0:
            self.error(DIMENSION, f'dimension must be positive, got {value}', span)
        return value, span

    def section(self, block):
        tok = self.expect_name('a section keyword')
        spec = SECTIONS[block.kind].get(tok.text)
        if spec is None:
            self.error(SYNTAX, f'unknown section "{tok.text}" in {block.kind} {block.name}', tok.span)
            raise _Recover()
        kind, arity = spec
        args = tuple(self.expect_name(f'an object name after "{tok.text}"').text for _ in range(arity))
        self.expect(':')
        key = (tok.text, *args)
        if kind == NAMES:
            value, spans = self.name_list(key)
        elif kind == VALUE:
            value, _ = self.lincomb()
            spans = {}
        else:
            value, spans = self.map_entries(key)
        end = self.expect(';')
        if key in block.sections:
            self.error(REFERENCE, f'duplicate section "{" ".join(key)}" in {block.kind} {block.name}',
                       tok.span)
            return
        block.sections[key] = value
        block.spans[key] = tok.span.join(end.span)
        block.spans.update(spans)

    # ------------------------------------------------------------------
    # Section bodies

    def name_list(self, key):
        names, spans = [], {}
        while True:
            tok = self.expect_name('a name')
            names.append(tok.text)
            spans[(key, tok.text)] = tok.span
            if not self.at(','):
                return tuple(names), spans
            self.advance()

    def map_entries(self, key):
        entries, spans = {}, {}
        if self.at(';'):
            return entries, spans
        while True:
            lhs, lhs_span = self.monomial()
            self.expect('->')
            comb, comb_span = self.lincomb()
            if lhs in entries:
                self.error(REFERENCE, f'duplicate entry for "{"*".join(lhs)}"', lhs_span)
            else:
                entries[lhs] = comb
                spans[(key, lhs)] = lhs_span.join(comb_span)
            if not self.at(','):
                return entries, spans
            self.advance()

    def monomial(self):
        first = self.expect_name('a basis name')
        names, span = [first.text], first.span
        while self.at('*'):
            self.advance()
            tok = self.expect_name('a basis name after "*"')
            names.append(tok.text)
            span = span.join(tok.span)
        return tuple(names), span

    def lincomb(self):
        """Sum of terms, merged and with zero coefficients dropped"""
        k = self.ground
        comb = {}
        span = self.peek().span
        sign = k.one
        if self.at('-'):
            self.advance()
            sign = k(-1)
        while True:
            coef, factors, term_span = self.term()
            span = span.join(term_span)
            comb[factors] = k.normalize(comb.get(factors, k.zero) + sign * coef)
            if self.at('+'):
                sign = k.one
            elif self.at('-'):
                sign = k(-1)
            else:
                break
            self.advance()
        return {factors: c for factors, c in comb.items() if c != 0}, span

    def term(self):
        tok = self.peek()
        if tok.kind == 'number':
            coef, span = self.scalar()
            if self.at('*') and self.peek(1).kind == 'name':
                self.advance()
            if self.peek().kind == 'name':
                factors, rest = self.monomial()
                return coef, factors, span.join(rest)
            return coef, (), span
        if tok.kind == 'name':
            factors, span = self.monomial()
            return self.ground.one, factors, span
        self.error(SYNTAX, f'expected a coefficient or a basis name, found {tok}', tok.span)
        raise _Recover()

    def scalar(self):
        num = self.advance()
        value, span = int(num.text), num.span
        if not self.at('/'):
            return self.ground(value), span
        self.advance()
        den = self.peek()
        if den.kind != 'number':
            self.error(SYNTAX, f'bad coefficient: expected a denominator after "/", found {den}', den.span)
            raise _Recover()
        self.advance()
        span = span.join(den.span)
        if self.ground.is_prime_field:
            self.error(SYNTAX, f'fractions are not allowed over {self.ground}, write the residue', span)
            return self.ground(value), span
        if int(den.text) == 0:
            self.error(LEXICAL, 'zero denominator', span)
            return self.ground(value), span
        return self.ground(Fraction(value, int(den.text))), span


def parse(text):
    """
    Parse an instance file into a ``Document``.

    Raises ``DslError`` with every lexical and syntax diagnostic, or, when
    the text is well formed, every reference and dimension diagnostic.
    """
    parser = Parser(text)
    doc = parser.document()
    diagnostics = parser.diagnostics or resolve(doc)
    if diagnostics:
        raise DslError(sorted(diagnostics, key=lambda d: d.span.offset))
    log.debug('parsed %d blocks over %s', len(doc.blocks), doc.ground)
    return doc


def decode(data):
    """UTF-8 bytes to text; a decoding failure is a lexical diagnostic"""
    try:
        return data.decode('utf-8')
    except UnicodeDecodeError as err:
        line = data[:err.start].count(b'\n') + 1
        column = err.start - (data.rfind(b'\n', 0, err.start) + 1) + 1
        span = SourceSpan(line, column, line, column + 1, err.start, err.start + 1)
        raise DslError([Diagnostic(LEXICAL, f'input is not UTF-8 ({err.reason})', span)])


def parse_file(path):
    with open(path, 'rb') as f:
        return parse(decode(f.read()))
