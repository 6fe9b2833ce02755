from .errors import (SourceSpan, Diagnostic, DslError, LEXICAL, SYNTAX, REFERENCE,
                     DIMENSION)
from .document import Block, Document, HEADERS, SECTIONS, PRESETS
from .lexer import Token, tokenize
from .parser import Parser, parse, parse_file, decode
from .resolve import Resolver, resolve
from .build import Instance, build
from .serialize import serialize, format_lincomb
from .validate import BlockVerdict, ValidationReport, validate

__all__ = ['SourceSpan', 'Diagnostic', 'DslError', 'LEXICAL', 'SYNTAX', 'REFERENCE', 'DIMENSION',
           'Block', 'Document', 'HEADERS', 'SECTIONS', 'PRESETS', 'Token', 'tokenize', 'Parser',
           'parse', 'parse_file', 'decode', 'Resolver', 'resolve', 'Instance', 'build', 'serialize',
           'format_lincomb', 'BlockVerdict', 'ValidationReport', 'validate']
