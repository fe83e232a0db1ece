"""Exceptions raised by the deltoid package.

Every domain failure derives from :class:`DeltoidError` so the CLI can map
them to a single exit code.
"""


class DeltoidError(ValueError):
    pass


class ParallelLines(DeltoidError):
    pass


class CoincidentLines(DeltoidError):
    pass


class OutsideDeltoid(DeltoidError):
    pass


class DegenerateTriangle(DeltoidError):
    pass


class NonCollinearFeet(DeltoidError):
    pass


class LambdaOutOfRange(DeltoidError):
    pass


class NegativeIndex(DeltoidError):
    pass


class IndexOutOfRange(DeltoidError):
    pass


class InvalidAmplitude(DeltoidError):
    pass
