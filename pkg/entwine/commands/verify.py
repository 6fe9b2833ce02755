from __future__ import annotations

from entwine.entwining import failed_axioms

from .common import Command, register_command


class VerifyCommand(Command):
    """
    Structural verification of every block of an instance: coalgebra and
    Hopf laws, category laws, hom coactions, the entwining axioms, entwined
    modules and Phi families.
    """
    name = 'verify'

    def run(self, doc, instance, validation, report):
        for result in validation.results:
            extra = {'block': result.name, 'kind': result.kind, 'span': str(result.span)}
            if result.kind == 'entwining':
                extra['failed_axioms'] = failed_axioms(result.verdict)
            report.add(result.verdict, **extra)
        report.results['blocks'] = len(validation.results)
        report.results['failed_blocks'] = [r.name for r in validation.failed()]


register_command('verify', lambda props: VerifyCommand(props))
