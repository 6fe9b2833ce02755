import pytest

from entwine.dsl import (DIMENSION, LEXICAL, REFERENCE, SYNTAX, DslError, build, decode, parse,
                         parse_file, serialize, validate)
from entwine.errors import EntwineError
from entwine.linalg import GF, QQ

from conftest import FIXTURE_NAMES, fixture_path, fixture_text, load

COALGEBRA = '''field rationals;
coalgebra C dim 1 {
    basis: e;
    delta: e -> e*e;
    counit: e -> 1;
}
'''


def diagnose(text):
    with pytest.raises(DslError) as err:
        parse(text)
    return err.value.diagnostics


@pytest.mark.parametrize('name', FIXTURE_NAMES)
def test_fixture_text_is_canonical(name):
    text = fixture_text(name)
    doc = parse(text)
    assert serialize(doc) == text
    assert parse(serialize(doc)) == doc


@pytest.mark.parametrize('name', FIXTURE_NAMES)
def test_fixtures_validate(name):
    _, _, report = load(name)
    assert report.ok, report.to_string()
    assert not report.failed()


def test_layout_and_order_do_not_matter():
    scrambled = '''# trivial coalgebra over a point
field rationals;

coalgebra C1 dim 1 {
    counit: e -> 2/2;   # normalized to 1
    delta: e -> e*e;
    basis: e;
}
category Dpt { objects: pt; compose: id*id -> id; identity: pt -> id; hom pt pt: id; }
coactions rho on Dpt with C1 { coaction: id -> id*e; }
entwining swap on Dpt with C1 { preset: swap; }
'''
    doc = parse(scrambled)
    assert doc == parse(fixture_text('c1'))
    assert serialize(doc) == fixture_text('c1')
    assert serialize(parse(serialize(doc))) == serialize(doc)


def test_residues_are_normalized():
    doc = parse('''field gf 3;
coalgebra C dim 1 {
    basis: e;
    delta: e -> 4 e*e;
    counit: e -> -2;
}
''')
    assert doc.ground == GF(3)
    assert serialize(doc) == '''field gf 3;

coalgebra C dim 1 {
    basis: e;
    delta: e -> e*e;
    counit: e -> 1;
}
'''


def test_rational_coefficients_are_merged_and_reduced():
    doc = parse('''field rationals;
coalgebra C dim 2 {
    basis: u, x;
    delta: u -> u*u, x -> 2/4 x*u - 3 x*u + u*x + 5/2 x*u;
    counit: u -> 1, x -> x*x - x*x;
}
''')
    assert doc.ground == QQ
    text = serialize(doc)
    assert '    delta: u -> u*u, x -> u*x;\n' in text
    assert '    counit: u -> 1, x -> 0;\n' in text


def test_negative_coefficients():
    doc = parse(COALGEBRA.replace('e -> e*e', 'e -> -3/2 e*e + 5/2 e*e'))
    assert doc.get('C').section('delta') == {('e',): {('e', 'e'): 1}}
    doc = parse(COALGEBRA.replace('e -> 1;', 'e -> -1/3;'))
    assert '    counit: e -> -1/3;\n' in serialize(doc)


def test_default_basis_names():
    doc = parse('field rationals;\ncoalgebra C dim 2 { delta: ; }\n')
    assert len(doc.get('C').section('basis')) == 2


MALFORMED = [
    # no field declaration
    ('coalgebra C dim 1 {\n    basis: e;\n}\n', SYNTAX, '1:1', 'missing field declaration'),
    (COALGEBRA.replace('counit: e -> 1;', 'counit: e -> 1 @;'), LEXICAL, '5:20', 'unexpected character'),
    (COALGEBRA.replace('field rationals;', 'field gf 4;'), SYNTAX, '1:10', 'not a prime'),
    ('field rationals;\ncoalgebra C dim -1 {\n}\n', DIMENSION, '2:17', 'must be positive'),
    (COALGEBRA + 'entwining s on Dx with C {\n    preset: swap;\n}\n', REFERENCE, '7:16',
     '"Dx" is not a previously declared category'),
    ('field rationals;\ncoalgebra C dim 1 {\n    basis: e;\n', SYNTAX, '4:1', 'missing "}"'),
    (COALGEBRA.replace('counit: e -> 1;', 'counit: e -> 1/;'), SYNTAX, '5:20', 'bad coefficient'),
    (COALGEBRA.replace('dim 1', 'dim 2'), DIMENSION, '3:5', '1 basis elements for dimension 2'),
    (COALGEBRA.replace('delta: e -> e*e;', 'delta: e -> e;'), DIMENSION, '4:12', 'tensor factors'),
    (COALGEBRA.replace('delta: e -> e*e;', 'delta: e -> e*z;'), REFERENCE, '4:12',
     'unknown basis element "z"'),
    (COALGEBRA + 'coalgebra C dim 1 {\n    basis: e;\n}\n', REFERENCE, '7:11', 'duplicate block name'),
    (COALGEBRA.replace('basis: e;', 'cobasis: e;'), SYNTAX, '3:5', 'unknown section "cobasis"'),
    (COALGEBRA.replace('field rationals;', 'field gf 3;').replace('e -> 1;', 'e -> 1/2;'), SYNTAX,
     '5:18', 'fractions are not allowed'),
    ('field rationals;\ncategory D {\n    objects: x, y;\n    hom x x: idx;\n    hom x y: a;\n'
     '    hom y y: idy;\n    compose: idx*a -> a;\n}\n', DIMENSION, '7:14', 'not composable'),
    (COALGEBRA + 'widget W {\n}\n', SYNTAX, '7:1', 'unknown block kind'),
    (COALGEBRA.replace('field rationals;', 'field reals;'), SYNTAX, '1:7', 'unknown field'),
]


@pytest.mark.parametrize('text, category, location, fragment', MALFORMED)
def test_malformed_input_is_located(text, category, location, fragment):
    diagnostics = diagnose(text)
    first = diagnostics[0]
    assert first.category == category
    assert str(first.span) == location
    assert fragment in first.message


def test_diagnostics_are_collected_and_sorted():
    text = COALGEBRA.replace('basis: e;', 'basis: e $;').replace('counit: e -> 1;', 'counit: e -> 1 $;')
    with pytest.raises(DslError) as err:
        parse(text)
    diagnostics = err.value.diagnostics
    assert [d.category for d in diagnostics] == [LEXICAL, LEXICAL]
    assert [str(d.span) for d in diagnostics] == ['3:14', '5:20']
    assert str(err.value).startswith('3:14: ')
    assert str(err.value).endswith('(and 1 more)')
    assert diagnostics[0].to_string().startswith('3:14: error: [lexical]')


def test_resolution_waits_for_a_clean_parse():
    # the unknown category is not reported while the syntax is broken
    text = COALGEBRA.replace('basis: e;', 'basis: e,;') + 'entwining s on Dx with C {\n    preset: swap;\n}\n'
    assert {d.category for d in diagnose(text)} == {SYNTAX}


def test_blocks_refer_backwards_only():
    text = ('field rationals;\nentwining s on Dpt with C {\n    preset: swap;\n}\n'
            + COALGEBRA.split('\n', 1)[1]
            + 'category Dpt {\n    objects: pt;\n    hom pt pt: id;\n    identity: pt -> id;\n'
              '    compose: id*id -> id;\n}\n')
    categories = {d.category for d in diagnose(text)}
    assert categories == {REFERENCE}


def test_non_utf8_input():
    with pytest.raises(DslError) as err:
        decode(b'field rationals;\n\xff\n')
    first = err.value.diagnostics[0]
    assert first.category == LEXICAL
    assert str(first.span) == '2:1'


def test_parse_file(tmp_path):
    doc = parse_file(fixture_path('cg2'))
    assert set(doc.blocks) == {'CG2', 'Dpt', 'swap', 'reg'}
    bad = tmp_path / 'bad.ent'
    bad.write_bytes(b'\xfe\xff')
    with pytest.raises(DslError):
        parse_file(str(bad))


def test_validation_flags_broken_counit():
    doc = parse(fixture_text('c1').replace('counit: e -> 1;', 'counit: e -> 2;'))
    report = validate(doc)
    assert not report
    # the hom coactions over C1 lose their counit law too
    assert [r.name for r in report.failed()] == ['C1', 'rho']
    assert report.get('Dpt').ok
    assert any('counit' in msg for msg in report.get('C1').verdict.failures)


def test_validation_flags_missing_psi_pair():
    head = fixture_text('da2').split('entwining')[0]
    text = head + ('entwining partial on DA2 with CG2 {\n'
                   '    psi: g0*idx -> idx*g0, g0*idy -> idy*g0, g1*idx -> idx*g1, g1*idy -> idy*g1;\n'
                   '}\n')
    doc = parse(text)
    report = validate(doc)
    verdict = report.get('partial').verdict
    assert verdict.failures == ["missing entry for the pair ('x', 'y')"]
    assert report.get('DA2').ok


def test_rejected_doi_hopf_block_is_reported():
    text = fixture_text('dh2').replace('coaction: id -> id*one, t -> t*g;',
                                       'coaction: id -> id*g, t -> t*one;')
    doc = parse(text)
    instance = build(doc)
    assert 'psi' in instance.failures
    assert not validate(doc, instance).get('psi').ok
    with pytest.raises(EntwineError):
        instance.entwining()


def test_instance_lookups():
    _, instance, _ = load('dh2')
    assert instance.entwining().name == 'psi'
    assert instance.galois().name == 'rho'
    with pytest.raises(EntwineError):
        instance.entwining('missing')
    _, instance, _ = load('cd2')
    assert instance.phi_for('swap') is None
