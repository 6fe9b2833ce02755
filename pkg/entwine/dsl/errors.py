from __future__ import annotations

from dataclasses import dataclass

from entwine.errors import EntwineError

# diagnostic categories
LEXICAL = 'lexical'
SYNTAX = 'syntax'
REFERENCE = 'reference'
DIMENSION = 'dimension'


@dataclass(frozen=True)
class SourceSpan:
    """Location in an instance file; lines and columns are 1-based, offsets 0-based"""
    line: int
    column: int
    end_line: int
    end_column: int
    offset: int
    end_offset: int

    def join(self, other):
        """Smallest span covering both"""
        first, last = (self, other) if self.offset <= other.offset else (other, self)
        end = last if last.end_offset >= first.end_offset else first
        return SourceSpan(first.line, first.column, end.end_line, end.end_column,
                          first.offset, end.end_offset)

    def contains(self, other):
        return self.offset <= other.offset and other.end_offset <= self.end_offset

    def __str__(self):
        return f'{self.line}:{self.column}'


@dataclass(frozen=True)
class Diagnostic:
    category: str
    message: str
    span: SourceSpan
    severity: str = 'error'

    def to_string(self):
        return f'{self.span}: {self.severity}: [{self.category}] {self.message}'

    def __str__(self):
        return self.to_string()


class DslError(EntwineError):
    """
    An instance file failed to parse. ``diagnostics`` lists every problem
    found; the message starts with the location of the first one.
    """

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        first = self.diagnostics[0]
        more = len(self.diagnostics) - 1
        suffix = f' (and {more} more)' if more else ''
        super().__init__(f'{first.span}: {first.message}{suffix}')
