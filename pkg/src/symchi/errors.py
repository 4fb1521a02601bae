"""Shared error types raised across the package."""

from .field import UnboundedElement  # noqa: F401  (canonical home is field)


class ZeroPolynomial(ValueError):
    """An operation that needs a nonzero polynomial got the zero one."""


class GroupTooLarge(ValueError):
    """Symmetrization over a permutation group above the configured cap."""


class IncompatiblePartition(ValueError):
    """Multi-partition does not match the block structure."""


class OddDegree(ValueError):
    """Deformation degree must be even."""


class VariableCapExceeded(ValueError):
    """Problem exceeds the configured variable budget."""


class SeparationFailure(RuntimeError):
    """No separating linear form found within the retry budget."""


class PositiveDimensionSuspected(RuntimeError):
    """A zero-dimensional solve met evidence of a positive-dimensional set."""


class UnboundedVariety(RuntimeError):
    """A bounded-input algorithm detected an unbounded zero set."""


class NotSymmetric(ValueError):
    """Input polynomial is not invariant under the block action."""


class SingularSignMatrix(RuntimeError):
    """Sign-condition linear system unexpectedly singular."""


class NonDelineable(RuntimeError):
    """A projection-based decomposition failed to delineate root branches."""


class NotClosedUnderAction(ValueError):
    """A polynomial family is not closed under the group action."""


class InconsistentEncoding(ValueError):
    """Thom encoding does not belong to the given polynomial."""


class DimensionMismatch(ValueError):
    """Point or matrix dimensions disagree with the declared blocks."""


class DegeneratePattern(RuntimeError):
    """Critical point with a degenerate pattern survived the filters."""


class DegenerateCritical(RuntimeError):
    """A critical point failed a strictness test (zero orientation or a
    singular restricted Hessian); the caller should re-deform."""
