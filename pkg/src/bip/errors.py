"""Exception types shared across the package."""


class BipError(Exception):
    """Base class for every error raised by this package."""


class NotAPermutation(BipError):
    """Input sequence is not a bijection of 1..n."""


class RankMismatch(BipError):
    """Two permutations from different symmetric groups were combined."""


class DuplicateValue(BipError):
    """A sequence that must have distinct entries repeats one."""


class NotBiclosed(BipError):
    """Root set is not the inversion set of any permutation."""


class NoUniqueMax(BipError):
    """A subset has no element dominating all others in Bruhat order."""


class PreconditionViolated(BipError):
    """Arguments fail the stated entry condition of a verification utility."""


class NotInInterval(BipError):
    """Queried permutation does not lie below the interval's top element."""


class CyclicInput(BipError):
    """Graph operation that requires acyclicity received a cyclic graph."""


class InternalDisagreement(BipError):
    """Two independent formulas for the same quantity returned different values.

    This always signals an implementation bug, never a property of the input.
    """


class CriteriaDisagree(BipError):
    """Independent smoothness criteria returned different verdicts (a bug)."""


class OracleUnavailable(BipError):
    """Requested geometric certification exceeds the oracle's size limits."""


class DimensionMismatch(BipError):
    """Points of different ambient dimensions were mixed."""


class DimensionTooLarge(BipError):
    """Face-lattice enumeration is limited to polytopes of dimension <= 3."""


class UnknownTheorem(BipError):
    """Requested verification sweep id is not registered."""
