from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from entwine.errors import EntwineError


def is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """
    Exact ground field: the rationals or a prime field GF(p).

    Scalars are plain Python values: ``Fraction`` for the rationals (always in
    lowest terms) and ``int`` residues in ``[0, p)`` for GF(p).
    """
    kind: str
    modulus: Optional[int] = None

    def __post_init__(self):
        if self.kind == 'rationals':
            if self.modulus is not None:
                raise EntwineError('the rational field carries no modulus')
        elif self.kind == 'prime_field':
            if self.modulus is None or not is_prime(self.modulus):
                raise EntwineError(f'modulus {self.modulus} is not a prime')
        else:
            raise EntwineError(f'unknown field kind "{self.kind}"')

    @property
    def is_prime_field(self):
        return self.kind == 'prime_field'

    @property
    def characteristic(self):
        return self.modulus if self.is_prime_field else 0

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, value):
        """Coerce ``value`` (int, Fraction or "a/b" text) into the field"""
        if isinstance(value, str):
            value = Fraction(value.strip())
        if not self.is_prime_field:
            return Fraction(value)
        p = self.modulus
        if isinstance(value, Fraction):
            den = value.denominator % p
            if den == 0:
                raise ZeroDivisionError(f'{value} has no image in GF({p})')
            return (value.numerator * pow(den, -1, p)) % p
        return int(value) % p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError('zero has no inverse')
        if self.is_prime_field:
            return pow(a, -1, self.modulus)
        return 1 / a

    def normalize(self, a):
        # products and sums of residues leave [0, p)
        return a % self.modulus if self.is_prime_field else a

    def format(self, a):
        if self.is_prime_field:
            return f'{a} mod {self.modulus}'
        return str(a)

    def literal(self, a):
        """Scalar as written in instance files ("a/b" or a residue)"""
        return str(a)

    def elements(self):
        if not self.is_prime_field:
            raise EntwineError('the rationals cannot be enumerated')
        return range(self.modulus)

    def to_string(self):
        return f'GF({self.modulus})' if self.is_prime_field else 'Q'

    def __str__(self):
        return self.to_string()


QQ = FieldSpec('rationals')


def GF(p):
    return FieldSpec('prime_field', p)
