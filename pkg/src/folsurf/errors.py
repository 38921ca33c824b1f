"""Exception hierarchy shared by all folsurf modules."""


class FolsurfError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(FolsurfError):
    """An argument lies outside the mathematical domain of an operation."""


class ShapeError(FolsurfError):
    """Two lattice objects that must live on the same surface do not."""


class InconsistentScenario(FolsurfError):
    """Declared scenario data contradicts an identity that must hold exactly."""


class ParseError(FolsurfError):
    """A scenario document is malformed.

    ``path`` locates the offending element inside the document, e.g.
    ``singularities[2].kind``.
    """

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.reason = message
