from __future__ import annotations

import logging
from dataclasses import dataclass, field

from entwine.algebra import verify_coalgebra, verify_comodule, verify_hopf, verify_module_coalgebra
from entwine.category import verify_category, verify_right_module
from entwine.entwining import EntwinedModule, verify_entwined_module, verify_entwining
from entwine.galois import verify_galois_data, verify_phi
from entwine.utils import Verdict

from .build import build

log = logging.getLogger(__name__)


@dataclass
class BlockVerdict:
    kind: str
    name: str
    span: object
    verdict: Verdict

    @property
    def ok(self):
        return self.verdict.ok


@dataclass
class ValidationReport:
    """Structural verdicts of every block, in declaration order"""
    instance: object
    results: list = field(default_factory=list)

    @property
    def ok(self):
        return all(r.ok for r in self.results)

    def __bool__(self):
        return self.ok

    def failed(self):
        return [r for r in self.results if not r.ok]

    def get(self, name):
        for r in self.results:
            if r.name == name:
                return r
        return None

    def to_string(self):
        return '\n'.join(f'{r.span}: {r.kind} {r.name}: {r.verdict}' for r in self.results)


def _module_verdict(inst, block, m):
    if not isinstance(m, EntwinedModule):
        return verify_right_module(m)
    over = (block.ref('on'), block.ref('with'))
    matching = [e for name, e in inst.entwinings.items()
                if (inst.document.get(name).ref('on'), inst.document.get(name).ref('with')) == over]
    if not matching:
        v = Verdict(f'module {m.name}')
        v.merge(verify_right_module(m.module))
        coalg = inst.coalgebras.get(block.ref('with')) or inst.hopfs[block.ref('with')].coalgebra
        for X in m.base.objects:
            v.merge(verify_comodule(m.comodule(X, coalg)))
        return v
    v = Verdict(f'module {m.name}')
    for e in matching:
        v.merge(verify_entwined_module(e, m), e.name)
    return v


def _phi_verdict(inst, block, phi):
    over = (block.ref('on'), block.ref('with'))
    for name, g in inst.coactions.items():
        b = inst.document.get(name)
        if (b.ref('on'), b.ref('with')) == over:
            return verify_phi(g, phi)
    return Verdict(f'phi {block.name}').fail('no coactions over the same category and coalgebra')


def validate(doc, instance=None):
    """
    Run the structural verification of every block: coalgebra and Hopf
    laws, category laws, comodule laws of hom coactions, module coalgebra
    laws, the entwining axioms, entwined module laws and colinearity of Phi.
    """
    inst = instance if instance is not None else build(doc)
    report = ValidationReport(inst)
    for block in doc.blocks.values():
        name = block.name
        if block.kind == 'coalgebra':
            v = verify_coalgebra(inst.coalgebras[name])
        elif block.kind == 'hopf':
            v = verify_hopf(inst.hopfs[name])
        elif block.kind == 'category':
            v = verify_category(inst.categories[name])
        elif block.kind == 'coactions':
            v = verify_galois_data(inst.coactions[name])
        elif block.kind == 'action':
            coalg = inst.coalgebras.get(block.ref('of')) or inst.hopfs[block.ref('of')].coalgebra
            v = verify_module_coalgebra(coalg, inst.hopfs[block.ref('by')], inst.actions[name])
        elif block.kind == 'entwining':
            if name in inst.failures:
                v = inst.failures[name].verdict
            else:
                v = verify_entwining(inst.entwinings[name])
        elif block.kind == 'module':
            v = _module_verdict(inst, block, inst.modules[name])
        else:
            v = _phi_verdict(inst, block, inst.phis[name])
        if not v:
            log.info('%s %s fails: %s', block.kind, name, v.first())
        report.results.append(BlockVerdict(block.kind, name, block.span, v))
    return report
