from __future__ import annotations

import itertools
import logging
import math
import random
from dataclasses import dataclass, field
from typing import Optional

from entwine.algebra import regular_comodule
from entwine.entwining import comodule_tensor_hX
from entwine.errors import VerificationError
from entwine.linalg import inverse, kron, permute_legs
from entwine.utils import (DEFAULT_SEED, DEFAULT_TRIALS, EXHAUSTIVE_LIMIT, GRID_MAX_PARAMETERS,
                           SAMPLE_RANGE_FACTOR, Verdict)

from .evaluators import check_unit_counit
from .families import EtaFamily, ThetaFamily
from .functors import NatCH, build_Cstar_h, build_h_C, nat_space
from .translate import beta_prime, delta_prime

log = logging.getLogger(__name__)


@dataclass(eq=False)
class FrobeniusResult:
    """
    Outcome of the Frobenius search.

    ``deterministic`` is True when a negative answer is certified (zero
    morphism space, or the whole parameter grid was tried); otherwise
    ``log2_bound`` bounds the base-2 logarithm of the false-negative
    probability. A positive answer is always exact.
    """
    frobenius: bool
    deterministic: bool
    parameters: int
    degree_bound: int
    points_tried: int
    search: str
    log2_bound: Optional[float] = None
    phi: Optional[NatCH] = None
    phi_inverse: Optional[NatCH] = None
    theta: Optional[ThetaFamily] = None
    eta: Optional[EtaFamily] = None
    verdict: Verdict = field(default_factory=lambda: Verdict('frobenius witnesses'))


def _combine(basis, coefficients):
    comps = {}
    for phi, s in zip(basis, coefficients):
        for key, m in phi.components.items():
            comps[key] = comps[key] + m.scale(s) if key in comps else m.scale(s)
    return comps


def _invert(comps):
    out = {}
    for key, m in comps.items():
        inv = inverse(m)
        if inv is None:
            return None
        out[key] = inv
    return out


def _search_points(f, k, degree, seed, trials):
    """
    Returns ``(points, search, deterministic, log2_bound)``. A nonzero
    polynomial of degree <= ``degree`` in each variable cannot vanish on a
    full grid of ``degree + 1`` values per variable.
    """
    if f.is_prime_field:
        p = f.modulus
        if p ** k <= EXHAUSTIVE_LIMIT:
            return itertools.product(range(p), repeat=k), 'exhaustive', True, None
        rng = random.Random(seed)
        points = ([rng.randrange(p) for _ in range(k)] for _ in range(trials))
        ratio = min(1.0, degree / p)
        return points, 'sampled', False, trials * math.log2(ratio) if ratio > 0 else -math.inf
    if k <= GRID_MAX_PARAMETERS:
        return itertools.product(range(degree + 1), repeat=k), 'grid', True, None
    bound = SAMPLE_RANGE_FACTOR * degree
    rng = random.Random(seed)
    points = ([rng.randint(-bound, bound) for _ in range(k)] for _ in range(trials))
    return points, 'sampled', False, trials * math.log2(degree / (2 * bound + 1))


def check_frobenius(e, seed=DEFAULT_SEED, trials=DEFAULT_TRIALS):
    """
    Search Nat(C* (x) h, h (x) C) for a morphism invertible at every pair.
    On success the witnesses theta = beta'(Phi^-1) and eta = delta'(Phi) are
    extracted and checked against both Frobenius identities and the unit and
    counit roundtrips: F(upsilon) omega = id on the entwined modules C (x) h_Y,
    and upsilon(G(h_Y)) G(omega(h_Y)) = id on the representables h_Y.
    """
    d = e.cat
    F, G = build_Cstar_h(e), build_h_C(e)
    basis = nat_space(e, F, G)
    k = len(basis)
    degree = sum(e.n * d.dim(X, Y) for X, Y in d.pairs())
    if k == 0:
        log.info('Nat(%s, %s) is zero: not Frobenius', F.name, G.name)
        return FrobeniusResult(False, True, 0, degree, 0, 'zero space')

    points, search, deterministic, log2_bound = _search_points(e.field, k, degree, seed, trials)
    tried = 0
    for point in points:
        tried += 1
        comps = _combine(basis, [e.field(x) for x in point])
        inv = _invert(comps)
        if inv is None:
            continue
        log.debug('invertible morphism found after %d points', tried)
        phi = NatCH(F, G, comps)
        phi_inverse = NatCH(G, F, inv)
        theta = beta_prime(e, phi_inverse)
        eta = delta_prime(e, phi)
        verdict = check_fro(e, theta, eta)
        regular = regular_comodule(e.coalg)
        modules = [comodule_tensor_hX(e, regular, Y) for Y in d.objects]
        verdict.merge(check_unit_counit(e, theta, eta, modules))
        if not verdict:
            raise VerificationError(verdict)
        return FrobeniusResult(True, True, k, degree, tried, search, None, phi, phi_inverse,
                               theta, eta, verdict)

    if deterministic:
        log.info('no invertible morphism on the full %s search: not Frobenius', search)
    else:
        log.warning('no invertible morphism among %d sampled points: not Frobenius with '
                    'false-negative probability below 2^%.1f', tried, log2_bound)
    return FrobeniusResult(False, deterministic, k, degree, tried, search, log2_bound)


def check_fro(e, theta, eta):
    """
    eps(d) f = sum f^ theta_X(c_f (x) d) and eps(d) f = sum f^_psi theta_X(d^psi (x) c_f),
    where eta(X, Y)(f) = sum f^ (x) c_f.
    """
    d, c = e.cat, e.coalg
    n = c.dim
    one_c = c.identity()
    v = Verdict('frobenius identities')
    for X, Y in d.pairs():
        dxy = d.dim(X, Y)
        eta_xy = eta.eta(e, X, Y)
        expected = kron(d.eye(X, Y), c.counit)
        lhs = d.comp(X, X, Y) @ kron(d.eye(X, Y), theta[X]) @ kron(eta_xy, one_c)
        v.expect_equal(f'first identity at {(X, Y)}', lhs, expected)
        # f^ (x) c_f (x) d -> d (x) f^ (x) c_f -> f^_psi (x) d^psi (x) c_f
        order = permute_legs(e.field, [dxy, n, n], [2, 0, 1])
        lhs = d.comp(X, X, Y) @ kron(d.eye(X, Y), theta[X]) @ kron(e.at(X, Y), one_c) \
            @ order @ kron(eta_xy, one_c)
        v.expect_equal(f'second identity at {(X, Y)}', lhs, expected)
    return v
