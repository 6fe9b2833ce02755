from __future__ import annotations

from entwine.frobsep import check_frobenius
from entwine.utils import DEFAULT_SEED, DEFAULT_TRIALS

from .common import Command, register_command, table_strings


class FrobeniusCommand(Command):
    """
    Search for an isomorphism C* (x) h -> h (x) C; on success report Phi, its
    inverse and the extracted theta, eta.

    .. pluginparameters::

     * - seed
       - |int|
       - Seed of the sampled search. (Default: 0)
     * - trials
       - |int|
       - Number of sampled points when the parameter grid is too large. (Default: 64)
    """
    name = 'frobenius'

    def __init__(self, props):
        super().__init__(props)
        self.seed = props.get('seed', DEFAULT_SEED)
        self.trials = props.get('trials', DEFAULT_TRIALS)

    def run(self, doc, instance, validation, report):
        e = self.require_entwining(instance, validation, report)
        if e is None:
            return
        result = check_frobenius(e, seed=self.seed, trials=self.trials)
        report.results.update({
            'frobenius': result.frobenius,
            'deterministic': result.deterministic,
            'parameters': result.parameters,
            'search': result.search,
            'points_tried': result.points_tried,
        })
        if not result.deterministic:
            report.probabilistic = {
                'seed': self.seed,
                'trials': self.trials,
                'degree_bound': result.degree_bound,
                'log2_error_bound': result.log2_bound,
            }
        if not result.frobenius:
            report.ok = False
            return
        report.add(result.verdict)
        report.witnesses.update({
            'phi': table_strings(result.phi.components),
            'phi_inverse': table_strings(result.phi_inverse.components),
            'theta': table_strings(result.theta.components),
            'eta': table_strings(result.eta.elements),
        })


register_command('frobenius', lambda props: FrobeniusCommand(props))
