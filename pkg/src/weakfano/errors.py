"""Exception types raised across the package.

Everything inherits from :class:`Error`, so callers can catch one base
class at CLI or notebook level.  Validation errors carry enough context
in their message to identify the offending set or pair.
"""


class Error(Exception):
    """Base class for all package-specific errors."""


class ParseError(Error):
    """Input text or JSON does not match the expected format."""


class ElementOutOfRange(Error):
    """A set member falls outside the declared ground set 1..n."""


class GroundSetTooLarge(Error):
    """Ground set exceeds the bitmask-backed size limit."""


class EmptySubset(Error):
    """An operation was given an empty subset where it needs a nonempty one."""


class EmptyMember(Error):
    """A family member is the empty set."""


class NotProperSubset(Error):
    """A proper subset of the ground set is required."""


class MissingSingleton(Error):
    """A building set omits some singleton of its ground set."""


class NotUnionClosed(Error):
    """Two overlapping members whose union is missing from the family."""

    def __init__(self, first: frozenset, second: frozenset):
        self.first = frozenset(first)
        self.second = frozenset(second)
        super().__init__(
            f"overlapping members {sorted(first)} and {sorted(second)} "
            f"have union outside the family"
        )


class NotAMember(Error):
    """An operation expected a set belonging to the family."""


class MaximalMember(Error):
    """A maximal member was supplied where a non-maximal one is required."""


class NotConnected(Error):
    """The ground set itself is missing, but the operation needs it."""


class FullSetRay(Error):
    """The full ground set maps to the zero vector and spans no ray."""


class WallPairingError(Error):
    """A ridge of the fan is not shared by exactly two maximal cones."""


class SingularSystem(Error):
    """An exact linear solve met a singular matrix."""


class CaseNotMatched(Error):
    """No wall relation of the expected shape exists for this wall."""


class CriterionSatisfied(Error):
    """A witness was requested for a pair that does not fail the criterion."""


class StalledRecursion(Error):
    """The witness recursion stopped making progress; indicates a bug."""


class NotWeakFano(Error):
    """A polytope construction requires the weak Fano property."""

    def __init__(self, message=None, pair=None):
        self.pair = pair
        msg = message or "building set fails the weak Fano criterion"
        if pair is not None:
            msg += f" at pair {sorted(pair.first)}, {sorted(pair.second)}"
        super().__init__(msg)


class NoArrows(Error):
    """A digraph polytope needs at least one arrow."""


class NotFullDimensional(Error):
    """A point set does not span the ambient space affinely."""


class NotReflexive(Error):
    """An operation requires a reflexive polytope."""


class OriginNotInterior(Error):
    """The origin must lie strictly inside the polytope."""


class DimensionMismatch(Error):
    """Points or polytopes with inconsistent ambient dimensions."""
