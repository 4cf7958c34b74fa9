"""Exception types raised by signednet.

Everything derives from ``SignedNetError`` so callers (and the CLI) can catch
data problems in one place without swallowing unrelated bugs.
"""


class SignedNetError(ValueError):
    """Base class for all signednet data and usage errors."""


# ---- graph construction -------------------------------------------------

class GraphConstructionError(SignedNetError):
    """Invalid input to the graph constructor."""


class SelfLoopError(GraphConstructionError):
    pass


class DuplicateEdgeError(GraphConstructionError):
    pass


class ZeroWeightError(GraphConstructionError):
    pass


class IdOutOfRangeError(GraphConstructionError):
    pass


class DisconnectedError(GraphConstructionError):
    pass


# ---- file parsing --------------------------------------------------------

class EdgeListParseError(SignedNetError):
    """Malformed edge-list file; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


# ---- balance / spectral preconditions ------------------------------------

class NotSymmetricError(SignedNetError):
    pass


class NotBalancedError(SignedNetError):
    pass


class NotBipartiteError(SignedNetError):
    pass


class BipartiteGraphError(SignedNetError):
    """Operation undefined on bipartite graphs (degenerate +/- rho pair)."""


class WrongVerdictError(SignedNetError):
    """Operation requires a different balance verdict."""


class TooLargeError(SignedNetError):
    """Exact search refused beyond its size cap."""


class EdgeNotPresentError(SignedNetError):
    pass


# ---- dynamics -------------------------------------------------------------

class DimensionMismatchError(SignedNetError):
    pass


class NonpositiveThresholdError(SignedNetError):
    pass


class NegativeDensityError(SignedNetError):
    pass


class NotLatticeError(SignedNetError):
    pass


class InconsistentModeError(SignedNetError):
    pass


class BipartiteUnsupportedError(SignedNetError):
    """No closed-form stationary state is available for bipartite graphs."""


# ---- generators -----------------------------------------------------------

class ParamOutOfRangeError(SignedNetError):
    pass


class GaveUpConnectivityError(SignedNetError):
    """Generator failed to produce a connected graph within its retry budget."""


# ---- verification ---------------------------------------------------------

class VerificationFailure(SignedNetError):
    """Raised by the CLI when a verification suite does not pass."""
