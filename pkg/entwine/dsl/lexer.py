from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import LEXICAL, Diagnostic, SourceSpan

_SPECS = [
    ('comment', r'#[^\n]*'),
    ('newline', r'\n'),
    ('space', r'[ \t\r]+'),
    ('number', r'\d+'),
    ('name', r'[A-Za-z_][A-Za-z0-9_\']*'),
    ('arrow', r'->'),
    ('punct', r'[{}:;,*+\-/]'),
]
_REGEX = re.compile('|'.join(f'(?P<{kind}>{pattern})' for kind, pattern in _SPECS))


@dataclass(frozen=True)
class Token:
    kind: str    # number, name, arrow, punct or eof
    text: str
    span: SourceSpan

    def is_(self, text):
        return self.kind in ('punct', 'arrow', 'name') and self.text == text

    def __str__(self):
        return 'end of input' if self.kind == 'eof' else f'"{self.text}"'


def tokenize(text):
    """
    Split ``text`` into tokens, dropping spaces and comments. Returns the
    token list (ending with an ``eof`` token) and the lexical diagnostics;
    unexpected characters are reported and skipped.
    """
    tokens, diagnostics = [], []
    pos, line, line_start = 0, 1, 0

    def span(start, end):
        return SourceSpan(line, start - line_start + 1, line, end - line_start + 1, start, end)

    while pos < len(text):
        m = _REGEX.match(text, pos)
        if m is None:
            diagnostics.append(Diagnostic(LEXICAL, f'unexpected character "{text[pos]}"', span(pos, pos + 1)))
            pos += 1
            continue
        kind, value = m.lastgroup, m.group()
        if kind == 'newline':
            line += 1
            line_start = m.end()
        elif kind not in ('space', 'comment'):
            tokens.append(Token(kind, value, span(pos, m.end())))
        pos = m.end()
    tokens.append(Token('eof', '', span(pos, pos)))
    return tokens, diagnostics
