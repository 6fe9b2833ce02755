from __future__ import annotations

import logging

from entwine.category import representable_right
from entwine.errors import VerificationError
from entwine.galois import (can_as_coring_iso, canonical_map, coinvariant_subcategory,
                            equivalence_roundtrip, galois_criteria, induced_entwining,
                            representable_entwined, same_entwining, translation_maps)

from .common import Command, pair_key, register_command, table_strings

log = logging.getLogger(__name__)


class GaloisCommand(Command):
    """
    Galois analysis of the first coactions block: coinvariant subcategory,
    ranks of the canonical map, and when it is invertible the translation
    map, the induced entwining, the coring isomorphism and the equivalence
    between E-modules and entwined modules. A Phi block over the same data
    adds the three-way criteria.
    """
    name = 'galois'

    def run(self, doc, instance, validation, report):
        g = instance.galois()
        coactions = validation.get(g.name)
        report.add(coactions.verdict, block=g.name)
        if not coactions.ok:
            return
        d = g.cat

        sub = coinvariant_subcategory(g)
        report.results['coinvariant_dims'] = {pair_key(p): sub.dim(*p) for p in d.pairs()}
        cm = canonical_map(g, sub)
        report.results['can'] = {
            pair_key(p): {'rank': rank, 'rows': cm[p].rows, 'cols': cm[p].cols, 'invertible': ok}
            for p, (rank, ok) in cm.report().items()}
        report.results['galois'] = cm.is_galois
        phi = instance.phi_for(g.name)
        if phi is not None:
            self._criteria(g, phi, report)
        if not cm.is_galois:
            report.ok = False
            return

        try:
            tau = translation_maps(cm)
            report.add(tau.verdict)
            e = induced_entwining(g, cm, tau)
        except VerificationError as err:
            report.add(err.verdict)
            return
        report.witnesses['tau'] = table_strings(tau.maps)
        report.witnesses['psi'] = table_strings(e.psi)
        for given in instance.entwinings.values():
            if given.cat is d and given.coalg is g.coalg:
                report.add(same_entwining(g, given, e), entwining=given.name)
        report.add(can_as_coring_iso(cm, entwining=e))
        e_modules = [representable_right(sub.category, Y) for Y in d.objects]
        entwined = [representable_entwined(g, Y) for Y in d.objects]
        report.add(equivalence_roundtrip(g, sub, e, e_modules, entwined))

    def _criteria(self, g, phi, report):
        try:
            criteria = galois_criteria(g, phi)
        except VerificationError as err:
            report.add(err.verdict)
            return
        report.results['criteria'] = {
            'galois': criteria.galois,
            'entwining': criteria.entwining,
            'coinvariance': criteria.coinvariance,
            'agree': criteria.agree,
        }
        if not criteria.agree:
            report.add(criteria.details)


register_command('galois', lambda props: GaloisCommand(props))
