from __future__ import annotations

import hashlib
import json
import logging
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Optional

from entwine.dsl import build, decode, parse, validate
from entwine.errors import EntwineError

log = logging.getLogger(__name__)

_COMMANDS = {}


def register_command(name, factory):
    """Make ``factory(props)`` available as the command ``name``"""
    _COMMANDS[name] = factory


def registered_commands():
    return sorted(_COMMANDS)


def create_command(name, props):
    try:
        factory = _COMMANDS[name]
    except KeyError:
        raise EntwineError(f'unknown command "{name}"')
    return factory(props)


def matrix_strings(m):
    return m.to_strings()


def pair_key(pair):
    return ','.join(str(x) for x in pair) if isinstance(pair, tuple) else str(pair)


def table_strings(table):
    """dict of matrices keyed by objects or object tuples -> JSON-ready dict"""
    return {pair_key(key): matrix_strings(m) for key, m in table.items()}


def verdict_entry(verdict, **extra):
    entry = {'subject': verdict.subject, 'ok': verdict.ok, 'failures': list(verdict.failures)}
    entry.update(extra)
    return entry


@dataclass
class Report:
    """
    Certificate report of one command run. ``witnesses`` holds matrices as
    nested lists of scalar strings; ``probabilistic`` is set when a verdict
    rests on random evaluation points.
    """
    command: str
    instance: str
    ok: bool = True
    verdicts: list = field(default_factory=list)
    results: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    probabilistic: Optional[dict] = None
    timings: dict = field(default_factory=dict)

    @property
    def exit_code(self):
        return 0 if self.ok else 1

    def add(self, verdict, **extra):
        self.verdicts.append(verdict_entry(verdict, **extra))
        self.ok = self.ok and verdict.ok
        return verdict

    @contextmanager
    def phase(self, name):
        start = time.perf_counter()
        try:
            yield
        finally:
            self.timings[name] = round(time.perf_counter() - start, 6)

    def to_dict(self):
        return {
            'command': self.command,
            'instance': self.instance,
            'ok': self.ok,
            'verdicts': self.verdicts,
            'results': self.results,
            'witnesses': self.witnesses,
            'probabilistic': self.probabilistic,
            'timings': self.timings,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self, verbose=False):
        lines = [f'{self.command}: {"ok" if self.ok else "FAILED"} (instance {self.instance[:12]})']
        for v in self.verdicts:
            status = 'ok' if v['ok'] else 'FAIL'
            lines.append(f'  [{status}] {v["subject"]}')
            for msg in v['failures']:
                lines.append(f'      {msg}')
        for key in sorted(self.results):
            lines.append(f'  {key}: {self.results[key]}')
        if self.probabilistic:
            lines.append(f'  probabilistic: {self.probabilistic}')
        if verbose:
            for key in sorted(self.witnesses):
                lines.append(f'  witness {key}: {self.witnesses[key]}')
            lines.append(f'  timings: {self.timings}')
        return '\n'.join(lines)


class Command:
    """
    Abstract base class of the command-line commands.

    .. pluginparameters::

     * - format
       - |string|
       - Output format, ``json`` or ``text``. (Default: json)
     * - verbose
       - |bool|
       - Include witnesses and timings in text output. (Default: False)
    """
    name = None

    def __init__(self, props):
        self.format = props.get('format', 'json')
        self.verbose = props.get('verbose', False)

    def to_string(self):
        return f'{type(self).__name__}[format = {self.format}]'

    def execute(self, data):
        """
        Parse, build and validate the instance file contents ``data``
        (bytes), then run the command. Parse errors propagate as ``DslError``.
        """
        report = Report(self.name, hashlib.sha256(data).hexdigest())
        with report.phase('parse'):
            doc = parse(decode(data))
        with report.phase('build'):
            instance = build(doc)
        with report.phase('validate'):
            validation = validate(doc, instance)
        with report.phase('run'):
            self.run(doc, instance, validation, report)
        log.debug('%s finished: %s', self.name, report.timings)
        return report

    def run(self, doc, instance, validation, report):
        raise NotImplementedError

    def render(self, report):
        if self.format == 'text':
            return report.to_text(self.verbose)
        return report.to_json()

    def require_entwining(self, instance, validation, report):
        """The first entwining, or None after recording why it is unusable"""
        e_name = next((b.name for b in instance.document.of_kind('entwining')), None)
        if e_name is None:
            raise EntwineError('the instance declares no entwining')
        result = validation.get(e_name)
        if not result.ok:
            report.add(result.verdict, block=e_name)
            return None
        return instance.entwinings[e_name]
