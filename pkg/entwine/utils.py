from dataclasses import dataclass, field

'''
Constants
'''

VERSION = '0.1.0'

DEFAULT_SEED = 0
DEFAULT_TRIALS = 64
SEED_ENV = 'ENTWINE_SEED'

# Frobenius search: full integer grid when the morphism space has at most
# this many parameters, otherwise sampling from [-64 D, 64 D]
GRID_MAX_PARAMETERS = 2
SAMPLE_RANGE_FACTOR = 64

# GF(p): enumerate the whole parameter space below this many points
EXHAUSTIVE_LIMIT = 2 ** 16


'''
Verdicts
'''


@dataclass
class Verdict:
    """
    Outcome of a verification predicate. A verdict is truthy iff no
    failure was recorded. Failure messages name the violated identity and a
    witness basis column.
    """
    subject: str
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def __bool__(self):
        return self.ok

    def fail(self, message):
        self.failures.append(message)
        return self

    def merge(self, other, prefix=None):
        for msg in other.failures:
            self.failures.append(f'{prefix}: {msg}' if prefix else msg)
        return self

    def expect_equal(self, label, lhs, rhs, names=None):
        """
        Record a failure when the two matrices differ. The witness is the
        first input basis column on which they disagree, printed through
        ``names`` when given.
        """
        if lhs.shape != rhs.shape:
            return self.fail(f'{label}: shape {lhs.shape} != {rhs.shape}')
        column = lhs.first_difference(rhs)
        if column is not None:
            witness = names[column] if names and column < len(names) else column
            self.fail(f'{label} fails (witness basis column {witness})')
        return self

    def first(self):
        return self.failures[0] if self.failures else None

    def to_string(self):
        if self.ok:
            return f'{self.subject}: ok'
        return f'{self.subject}: ' + '; '.join(self.failures)

    def __str__(self):
        return self.to_string()


