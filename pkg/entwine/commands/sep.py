from __future__ import annotations

import logging

from entwine.frobsep import (check_F_separable, check_G_separable, solve_V1, solve_W1,
                             verify_eta, verify_theta)

from .common import Command, register_command, table_strings

log = logging.getLogger(__name__)


class SeparabilityCommand(Command):
    """
    Separability of the forgetful functor F (witness theta) and of its right
    adjoint G (witness eta).

    .. pluginparameters::

     * - functor
       - |string|
       - ``F``, ``G``, or None for both. (Default: None)
    """
    name = 'sep'

    def __init__(self, props):
        super().__init__(props)
        self.functor = props.get('functor', None)

    def run(self, doc, instance, validation, report):
        e = self.require_entwining(instance, validation, report)
        if e is None:
            return
        if self.functor in (None, 'F'):
            self._forgetful(e, report)
        if self.functor in (None, 'G'):
            self._right_adjoint(e, report)

    def _forgetful(self, e, report):
        report.results['V1_dim'] = len(solve_V1(e))
        theta = check_F_separable(e)
        report.results['F_separable'] = theta is not None
        if theta is None:
            report.ok = False
            return
        report.witnesses['theta'] = table_strings(theta.components)
        report.add(verify_theta(e, theta))

    def _right_adjoint(self, e, report):
        report.results['W1_dim'] = len(solve_W1(e))
        eta = check_G_separable(e)
        report.results['G_separable'] = eta is not None
        if eta is None:
            report.ok = False
            return
        report.witnesses['eta'] = table_strings(eta.elements)
        report.add(verify_eta(e, eta))


register_command('sep', lambda props: SeparabilityCommand(props))
