import os

import pytest

from entwine.dsl import build, parse, validate
from entwine.frobsep import brute_force_dimension
from entwine.linalg import GF, QQ

FIXTURES = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'fixtures')

FIXTURE_NAMES = sorted(f[:-4] for f in os.listdir(FIXTURES) if f.endswith('.ent'))


def fixture_path(name):
    return os.path.join(FIXTURES, f'{name}.ent')


def fixture_text(name, ground=None):
    """
    Text of a shipped instance file. ``ground`` replaces the field
    declaration ("gf 2", "rationals", ...).
    """
    with open(fixture_path(name), encoding='utf-8') as f:
        text = f.read()
    if ground is not None:
        first, rest = text.split('\n', 1)
        text = f'field {ground};\n{rest}'
    return text


def load(name, ground=None):
    """Parsed, built and validated fixture: (document, instance, validation)"""
    doc = parse(fixture_text(name, ground))
    instance = build(doc)
    return doc, instance, validate(doc, instance)


def entwining_of(name, ground=None):
    _, instance, _ = load(name, ground)
    return instance.entwining()


@pytest.fixture(params=[QQ, GF(2), GF(3)], ids=['Q', 'GF2', 'GF3'])
def field(request):
    return request.param


@pytest.fixture
def gf2():
    return GF(2)


@pytest.fixture
def oracle():
    """Solution-space dimension by enumerating GF(p)^unknowns"""
    def dimension(e, layout, holds):
        assert layout.size <= 12, f'{layout.size} unknowns is too many to enumerate'
        return brute_force_dimension(e.field, layout, holds)
    return dimension
