"""Exception hierarchy.

``InputError`` subclasses describe bad user input (the CLI maps them to
exit code 2); everything else deriving from ``HBICError`` is a programming
or invariant failure.
"""


class HBICError(Exception):
    pass


class InputError(HBICError):
    pass


class MissingValue(InputError):
    pass


class SchemaMismatch(InputError):
    pass


class TypeViolation(InputError):
    pass


class InvalidBins(InputError, ValueError):
    pass


class OutOfRange(HBICError, ValueError):
    pass


class EmptyBicluster(HBICError, ValueError):
    pass


class EmptySeed(HBICError):
    pass


class NoColumnLeft(HBICError):
    pass


class EmptyCandidateSet(HBICError, ValueError):
    pass


class EmptySolution(InputError, ValueError):
    pass


class InfeasiblePlacement(InputError, ValueError):
    pass


class InvariantViolation(HBICError):
    pass
