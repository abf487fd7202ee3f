"""Exception hierarchy shared by all modules.

Every domain error has its own class so callers (and the CLI) can report
the violated contract by name.
"""


class PlaneSignError(Exception):
    """Base class for all library errors."""

    @property
    def name(self):
        return type(self).__name__


# -- embedding construction / mutation ---------------------------------------

class NonSimple(PlaneSignError):
    """Input has a loop, a parallel edge, or an asymmetric rotation."""


class NonPlanarEmbedding(PlaneSignError):
    """Traced faces violate Euler's formula (bad or disconnected rotation)."""


class BadOuterHint(PlaneSignError):
    """The outer-face hint does not identify a traced face."""


class TooSmall(PlaneSignError):
    """Operation needs at least three vertices."""


class BridgeDeletion(PlaneSignError):
    """Deleting a bridge would disconnect the graph."""


class UnknownEdge(PlaneSignError):
    pass


class UnknownVertex(PlaneSignError):
    pass


class NotACircle(PlaneSignError):
    """Edge set is not a single simple closed cycle."""


# -- dual / face operations ---------------------------------------------------

class NotOuterplane(PlaneSignError):
    pass


class NotTwoConnected(PlaneSignError):
    pass


class NonPolygonalFace(PlaneSignError):
    """A face boundary repeats a vertex, so it is not a simple polygon."""


# -- peeling ------------------------------------------------------------------

class AlreadyOuterBoundary(PlaneSignError):
    """The protected circle already is the outer boundary; nothing to peel."""


class NoHamiltonianCircle(PlaneSignError):
    pass


class NotHamiltonian(PlaneSignError):
    """The supplied circle is not a Hamiltonian circle of the graph."""


class SequenceStepError(PlaneSignError):
    """Base for stepwise sequence-validation failures; carries the 1-based step."""

    def __init__(self, step, message):
        super().__init__(f"step {step}: {message}")
        self.step = step


class NotOnOuterBoundary(SequenceStepError):
    pass


class NotTwoConnectedAfter(SequenceStepError):
    pass


class FinalHasInteriorVertex(PlaneSignError):
    pass


class FinalNotUniquelyHamiltonian(PlaneSignError):
    pass


class InvalidSet(PlaneSignError):
    """Face set does not determine a Hamiltonian circle."""


class OddN(PlaneSignError):
    """The canonical grid sequence needs an even number of columns."""


# -- search / census ----------------------------------------------------------

class BadSymmetricDifference(PlaneSignError):
    """Two Hamiltonian sets must differ by exactly one face on each side."""


# -- grids ----------------------------------------------------------------------

class BadDimensions(PlaneSignError):
    pass


class BadPreconditions(PlaneSignError):
    pass


class OutOfRange(PlaneSignError):
    pass


# -- local configurations -------------------------------------------------------

class InvalidConfig(PlaneSignError):
    """A certification hypothesis fails; the message names the clause."""


class NotHamiltonianAfterToggle(PlaneSignError):
    """Toggled edge set is not spanning, 2-regular and connected."""


# -- file formats ----------------------------------------------------------------

class ParseError(PlaneSignError):
    def __init__(self, line, reason):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class InconsistentRotation(PlaneSignError):
    """An edge line names a pair that the rotation lines do not define."""
