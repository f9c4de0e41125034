"""Exception taxonomy shared across the library.

The CLI maps these onto exit codes: parse failures exit with 2 and
domain failures (everything else below) with 3.
"""


class StabgeoError(Exception):
    """Base class for all library-specific failures."""


class DimensionError(StabgeoError):
    """Operands act on different numbers of qubits."""


class MalformedMatrixError(StabgeoError):
    """A generator set violates a stabilizer-matrix invariant
    (odd phase, anticommuting rows, dependent rows, -I in the group)."""


class NonCanonicalError(StabgeoError):
    """An operation that requires canonical input received a
    non-canonical matrix."""


class ZeroCofactorError(StabgeoError):
    """Requested a cofactor whose projector annihilates the state."""


class NotStabilizerBivector(StabgeoError):
    """The wedge product of the two states is not a stabilizer state."""


class ParallelStatesError(StabgeoError):
    """The wedge product of parallel states is zero."""


class OracleSizeError(StabgeoError):
    """Dense-oracle request beyond the configured qubit bound."""


class ParseError(StabgeoError):
    """A matrix, circuit or scalar file failed to parse."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
