from __future__ import annotations

import itertools
from collections import defaultdict

from entwine.entwining import is_entwined_morphism
from entwine.errors import EntwineError
from entwine.linalg import Matrix, kron


def brute_force_dimension(field, layout, holds):
    """
    Dimension of the solution space of a linear condition on ``layout``.
    ``holds`` takes the unpacked blocks of a point and returns a bool; it is
    evaluated on every point of GF(p)^size and log_p of the number of hits
    is returned.
    """
    if not field.is_prime_field:
        raise EntwineError('brute force enumeration needs a prime field')
    p = field.modulus
    count = 0
    for point in itertools.product(range(p), repeat=layout.size):
        vec = Matrix.column(field, point)
        if holds(layout.unpack(vec)):
            count += 1
    dim = 0
    while count > 1:
        if count % p:
            raise EntwineError(f'{count} solutions is not a power of {p}; the condition is not linear')
        count //= p
        dim += 1
    return dim


'''
Defining identities evaluated on basis elements
'''


def _column(m, j):
    """Nonzero entries of column ``j`` as {row: value}"""
    return {i: m.entry(i, j) for i in range(m.rows) if m.entry(i, j) != 0}


def _reduce(field, terms):
    out = {}
    for key, value in terms.items():
        value = field(value)
        if value != 0:
            out[key] = value
    return out


class _Structure:
    """Structure maps of an entwining, read off one basis element at a time"""

    def __init__(self, e):
        self.e = e
        self.d = e.cat
        self.n = e.n

    def delta(self, c):
        """Delta(c) as {(c1, c2): coefficient}"""
        return {divmod(r, self.n): v for r, v in _column(self.e.coalg.delta, c).items()}

    def psi(self, X, Y, c, f):
        """psi(c (x) f) for f in Hom(X,Y) as {(f', c'): coefficient}"""
        col = c * self.d.dim(X, Y) + f
        return {divmod(r, self.n): v for r, v in _column(self.e.at(X, Y), col).items()}

    def comp(self, X, Y, Z, g, f):
        """g f for g in Hom(Y,Z), f in Hom(X,Y) as {h: coefficient}"""
        return _column(self.d.comp(X, Y, Z), g * self.d.dim(X, Y) + f)


def theta_holds(e):
    """
    Predicate on theta blocks: theta(c (x) d) f = f_{psi Psi} theta(c^Psi (x) d^psi)
    for every basis morphism f, and theta(c (x) d_1) (x) d_2 = psi(c_1 (x) theta(c_2 (x) d))
    at every object.
    """
    s = _Structure(e)
    d, n, field = e.cat, e.n, e.field

    def value(theta, X, c, k):
        return _column(theta[X], c * n + k)

    def natural(theta, Y, X, c, k, f):
        lhs, rhs = defaultdict(int), defaultdict(int)
        for a, t in value(theta, X, c, k).items():
            for h, w in s.comp(Y, X, X, a, f).items():
                lhs[h] += t * w
        for (f1, k1), w1 in s.psi(Y, X, k, f).items():
            for (f2, c1), w2 in s.psi(Y, X, c, f1).items():
                for b, t in value(theta, Y, c1, k1).items():
                    for h, w in s.comp(Y, Y, X, f2, b).items():
                        rhs[h] += w1 * w2 * t * w
        return _reduce(field, lhs) == _reduce(field, rhs)

    def colinear(theta, X, c, k):
        lhs, rhs = defaultdict(int), defaultdict(int)
        for (k1, k2), w in s.delta(k).items():
            for a, t in value(theta, X, c, k1).items():
                lhs[(a, k2)] += w * t
        for (c1, c2), w in s.delta(c).items():
            for a, t in value(theta, X, c2, k).items():
                for key, w2 in s.psi(X, X, c1, a).items():
                    rhs[key] += w * t * w2
        return _reduce(field, lhs) == _reduce(field, rhs)

    def holds(theta):
        for Y, X in d.pairs():
            for c, k, f in itertools.product(range(n), range(n), range(d.dim(Y, X))):
                if not natural(theta, Y, X, c, k, f):
                    return False
        return all(colinear(theta, X, c, k) for X in d.objects
                   for c, k in itertools.product(range(n), repeat=2))

    return holds


def eta_holds(e):
    """
    Predicate on the elements e_Y = a_Y (x) c_Y:
    a_Z g_psi (x) c_Z^psi = g a_Y (x) c_Y for every basis morphism g : Y -> Z.
    """
    s = _Structure(e)
    d, n, field = e.cat, e.n, e.field

    def integral(eta, Y, Z, g):
        lhs, rhs = defaultdict(int), defaultdict(int)
        for r, t in _column(eta[Z], 0).items():
            a, k = divmod(r, n)
            for (g1, k1), w in s.psi(Y, Z, k, g).items():
                for h, w2 in s.comp(Y, Z, Z, a, g1).items():
                    lhs[(h, k1)] += t * w * w2
        for r, t in _column(eta[Y], 0).items():
            a, k = divmod(r, n)
            for h, w in s.comp(Y, Y, Z, g, a).items():
                rhs[(h, k)] += t * w
        return _reduce(field, lhs) == _reduce(field, rhs)

    def holds(eta):
        return all(integral(eta, Y, Z, g) for Y, Z in d.pairs() for g in range(d.dim(Y, Z)))

    return holds


def nat_holds(e, F, G):
    """
    Predicate on components (X, Y): every slice at Y is an entwined morphism
    F(Y) -> G(Y), and every f : Y -> X carries it along the functors' lifts,
    one basis element of F(Y)(Z) (x) Hom(Y,X) at a time.
    """
    d = e.cat

    def natural(comps, Y, X, Z):
        dyx = d.dim(Y, X)
        lift_f, lift_g = F.lift(Y, X, Z), G.lift(Y, X, Z)
        for u, f in itertools.product(range(F[Y].dim(Z)), range(dyx)):
            moved = comps[(Z, X)] @ lift_f.col(u * dyx + f)
            lifted = lift_g @ kron(comps[(Z, Y)].col(u), Matrix.unit(e.field, dyx, f))
            if moved != lifted:
                return False
        return True

    def holds(comps):
        for Y in d.objects:
            if not is_entwined_morphism(e, F[Y], G[Y], {X: comps[(X, Y)] for X in d.objects}):
                return False
        return all(natural(comps, Y, X, Z) for Y, X in d.pairs() for Z in d.objects)

    return holds
