"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: guard/budget errors exit 2, malformed
input exits 3, verification failures exit 1.
"""


class UphoError(Exception):
    """Base class for all errors raised by this package."""


class RankMismatch(UphoError):
    """A cover relation does not raise rank by exactly one."""


class CycleDetected(UphoError):
    """The cover digraph contains a directed cycle."""


class NotReduced(UphoError):
    """A cover relation is duplicated or implied by transitivity."""


class NotComparable(UphoError):
    """The two elements are not related in the poset."""


class NoMinimum(UphoError):
    """The poset has no unique minimal element."""


class NoJoin(UphoError):
    """A pair has no least upper bound.

    ``certificate`` holds the antichain of minimal upper bounds (possibly
    empty when there is no upper bound at all).
    """

    def __init__(self, x, y, certificate):
        super().__init__(f"no join for elements {x}, {y}")
        self.pair = (x, y)
        self.certificate = tuple(certificate)


class NoMeet(UphoError):
    """A pair has no greatest lower bound; see :class:`NoJoin`."""

    def __init__(self, x, y, certificate):
        super().__init__(f"no meet for elements {x}, {y}")
        self.pair = (x, y)
        self.certificate = tuple(certificate)


class JoinOfAtomsMissing(UphoError):
    """The join of all atoms does not exist inside the (truncated) poset."""


class DualNotGraded(UphoError):
    """The reversed poset has no single minimum, so it cannot be re-ranked."""


class ChainNotModular(UphoError):
    """A supplied chain element fails the modular rank identity."""


class ChainNotMaximal(UphoError):
    """A supplied chain is not a saturated 0-to-top chain."""


class SizeGuard(UphoError):
    """The requested instance would exceed the element budget."""


class UnsupportedFieldOrder(UphoError):
    """Finite field arithmetic is only provided for q in {2, 3, 4, 5}."""


class BudgetExceeded(UphoError):
    """Word enumeration would exceed the configured word budget."""


class InhomogeneousRelation(UphoError):
    """A monoid relation equates words of different lengths."""


class DepthExceedsTruncation(UphoError):
    """A verification depth is too large for the truncation rank."""


class NonUnitConstantTerm(UphoError):
    """Series inversion needs a constant term of 1 or -1."""


class SearchBudgetExceeded(UphoError):
    """A backtracking search hit its node budget before finishing."""
