"""Exception types for the drazin package.

User-facing input problems (bad JSON, wrong shapes, composite modulus) are
distinct from internal-inconsistency errors, which signal a bug in the
library itself and are never a legal input state.
"""


class DrazinError(Exception):
    """Base class for all package errors."""


class ParseError(DrazinError):
    """Malformed JSON payload or scalar encoding."""


class NonPrimeModulusError(DrazinError):
    """Requested F_p with composite or invalid p."""


class FieldMismatchError(DrazinError):
    """Operands live over different fields."""


class ShapeMismatchError(DrazinError):
    """Operand shapes are incompatible for the requested operation."""


class NotSquareError(ShapeMismatchError):
    """A square matrix was required."""


class SingularMatrixError(DrazinError):
    """Inversion of a singular matrix was requested."""


class NotIdempotentError(DrazinError):
    """split_idempotent was handed a matrix with e*e != e."""


class WitnessInvalidError(DrazinError):
    """A claimed pi-regularity witness fails its defining equation."""


class CycleNotFoundError(DrazinError):
    """The cyclic subsemigroup did not close within max_steps."""


class EnumerationTooLargeError(DrazinError):
    """A brute-force enumeration exceeded its candidate limit."""


class InternalInconsistencyError(DrazinError):
    """Two routes or identities that must agree did not; library bug."""
