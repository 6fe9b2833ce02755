class EntwineError(Exception):
    """Base class of every error raised by the package"""


class ShapeError(EntwineError, ValueError):
    """Matrix or tensor shapes do not fit together"""


class UnknownObjectError(EntwineError, NameError):
    """An object, basis element or block name could not be resolved"""


class VerificationError(EntwineError):
    """
    A structure handed to an operation fails the predicate the operation
    relies on. The failing ``Verdict`` is kept in ``verdict``.
    """

    def __init__(self, verdict):
        self.verdict = verdict
        super().__init__(str(verdict))
