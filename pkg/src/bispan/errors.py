"""Exception hierarchy shared by all modules."""


class BispanError(Exception):
    """Base class for all library errors."""


class LoopEdge(BispanError):
    pass


class VertexOutOfRange(BispanError):
    pass


class NotBispanning(BispanError):
    pass


class NotAtomic(BispanError):
    pass


class TooLarge(BispanError):
    pass


class WrongDegree(BispanError):
    pass


class SameEdge(BispanError):
    pass


class NoSuchEdge(BispanError):
    pass


class EdgeInTree(BispanError):
    pass


class EdgeNotInTree(BispanError):
    pass


class NotATree(BispanError):
    pass


class Disconnected(BispanError):
    pass


class InvalidExchange(BispanError):
    pass


class NotApplicable(BispanError):
    pass


class FormMismatch(BispanError):
    pass


class SeamMismatch(BispanError):
    pass


class LengthMismatch(BispanError):
    pass


class InvalidInput(BispanError):
    pass


class NotBispanningSubgraph(BispanError):
    pass


class IsoCheckFailed(BispanError):
    pass


class CompositionMismatch(BispanError):
    """A composed exchange graph disagrees with the directly built one.

    Raised only when an implementation bug violates a structural guarantee.
    """


class UnknownName(BispanError):
    pass


class WrongPhase(BispanError):
    pass


class UnknownEdge(BispanError):
    pass


class IllegalFix(BispanError):
    pass


class EmptyHistory(BispanError):
    pass


class InternalInvariant(BispanError):
    """Signals a state the algorithms guarantee cannot occur."""
