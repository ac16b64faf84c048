"""Exception hierarchy shared by all modules."""


class QuadEllipseError(Exception):
    """Base class for all library errors."""


class InputError(QuadEllipseError, ValueError):
    """Malformed input: non-finite numbers, singular maps, etc."""


class ValidationError(QuadEllipseError, ValueError):
    """A candidate quadrilateral failed a validation predicate."""

    def __init__(self, predicate, message):
        self.predicate = predicate
        super().__init__(f"{predicate}: {message}")


class UnsupportedShapeError(QuadEllipseError):
    """Operation is undefined for this quadrilateral shape (parallelograms)."""


class ClassificationError(QuadEllipseError):
    """A conic was not of the class an operation requires."""

    def __init__(self, tag, message):
        self.tag = tag
        super().__init__(f"{message} (classified as {tag})")


class ParameterDomainError(QuadEllipseError, ValueError):
    """A pencil parameter fell outside the open ellipse interval."""

    def __init__(self, value, interval):
        self.value = value
        self.interval = interval
        super().__init__(f"parameter {value} outside open interval {interval}")


class FrameUnavailableError(QuadEllipseError):
    """No right-angle vertex: the closed-form frame path cannot fire."""


class NumericError(QuadEllipseError):
    """An iterative solve failed to converge or lost its bracket."""
