"""Exception hierarchy shared across the package.

Two broad classes matter to callers: ``InputError`` (the caller handed us
something invalid: bad file, non-chordal graph, out-of-range parameter) and
``InvariantError`` (an internal structural guarantee failed, which means the
construction itself has a bug).  The service layer maps the former to HTTP
400 and the latter to HTTP 500; the CLI maps them to exit codes 2 and 3.
"""


class ChordalHamError(Exception):
    """Base class for every error raised by this package."""

    code = "error"


class InputError(ChordalHamError):
    """The caller supplied an invalid graph, file, or parameter."""

    code = "input"


class ParseError(InputError):
    code = "parse"


class NotChordalError(InputError):
    """Raised when an operation requires chordality and the input has a hole."""

    code = "not-chordal"

    def __init__(self, message: str, hole: tuple[int, ...] | None = None):
        super().__init__(message)
        self.hole = hole


class DisconnectedError(InputError):
    code = "disconnected"


class TooSmallError(InputError):
    code = "too-small"


class ParameterError(InputError):
    code = "bad-parameter"


class CapExceededError(InputError):
    """The subfamily enumeration cap was exceeded; raise the cap to proceed."""

    code = "cap-exceeded"


class InvariantError(ChordalHamError):
    """An internal structural guarantee failed (a construction bug)."""

    code = "invariant"


class KonigError(InvariantError):
    """Koenig duality machinery failed, e.g. a loop-stripped union graph
    turned out non-bipartite.  The construction guarantees this never happens
    on graphs produced by the overspan builder."""

    code = "konig"


class RepresentationError(InvariantError):
    code = "representation"


class ConstructionError(InvariantError):
    code = "construction"


class WitnessError(InvariantError):
    code = "witness"


class PathDiagnostic(ChordalHamError):
    """Hamilton-path assembly hit an unresolved corner case.

    The path operation is one-sided and best-effort; rather than silently
    repairing a broken assembly we surface the context and let the caller
    decide.  Distinct from ``InvariantError`` so callers can count these.
    """

    code = "path-diagnostic"
