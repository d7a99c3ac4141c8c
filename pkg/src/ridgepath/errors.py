"""Exception hierarchy shared by the library and the CLI."""


class RidgeError(ValueError):
    """Base class for every input or precondition failure raised here."""


class DimensionMismatch(RidgeError):
    pass


class DependentDirections(RidgeError):
    pass


class NotThreeDistinctLines(RidgeError):
    pass


class PointNotOnProjection(RidgeError):
    pass


class DegenerateStep(RidgeError):
    pass


class DuplicatePoint(RidgeError):
    pass


class NotTwoDirections(RidgeError):
    pass


class MissingLevel(RidgeError):
    pass


class InvalidCycle(RidgeError):
    pass


class SceneError(RidgeError):
    """Malformed scene or report file; the message names field and line."""
