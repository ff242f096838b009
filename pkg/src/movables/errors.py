"""Exception types raised by the engine."""


class EngineError(Exception):
    """Base class for every error the engine raises on purpose."""


class InvalidGeometry(EngineError):
    """Geometry violates a structural precondition (degenerate, non-finite, ...)."""


class InsufficientCover(InvalidGeometry):
    """Too few band nodes to cover a curved border without gaps."""


class ProtocolViolation(EngineError):
    """Pointer events arrived in an impossible order (e.g. press while caught)."""


class ImmovableObject(EngineError):
    """Translate or node move requested on an object with movable=False."""


class NotRotatable(EngineError):
    """Rotation requested on an object with rotatable=False."""


class DisabledHandle(EngineError):
    """Resize handle exists but is disabled under the object's policy."""


class VanishedObject(EngineError):
    """A resize crossed the opposite border under the vanish policy.

    Carries the object id; the scene removes the object when it sees this.
    """

    def __init__(self, object_id: str):
        super().__init__(f"object {object_id!r} vanished")
        self.object_id = object_id


class DuplicateId(EngineError):
    """Object id already present in the scene."""


class UnknownId(EngineError):
    """Object id not present in the scene."""


class MissingMember(EngineError):
    """Group references a member id that does not resolve."""


class MalformedDocument(EngineError):
    """Layout document failed to parse or validate.

    line is 1-based; 0 means the problem is not tied to a single line.
    """

    def __init__(self, message: str, line: int = 0):
        super().__init__(message)
        self.line = line


class MalformedTrace(EngineError):
    """Trace file failed to parse or is not press/move/release well-formed."""

    def __init__(self, message: str, line: int = 0):
        super().__init__(message)
        self.line = line
