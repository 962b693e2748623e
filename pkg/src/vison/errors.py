"""Exception types shared across the package."""


class VisonError(Exception):
    """Base class for all errors raised by this package."""

    code = "error"


class DuplicateIdError(VisonError):
    code = "duplicate-id"


class UnknownReferenceError(VisonError):
    code = "unknown-reference"

    def __init__(self, message: str, name: str | None = None):
        super().__init__(message)
        self.name = name


class CycleError(VisonError):
    code = "would-create-cycle"


class SelfDisjointnessError(VisonError):
    code = "self-disjointness"


class KindMismatchError(VisonError):
    code = "kind-mismatch"


class FrozenOntologyError(VisonError):
    code = "frozen-ontology"


class QuerySyntaxError(VisonError):
    """Raised by the query parser; `position` is a 0-based character offset."""

    code = "syntax-error"

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class TypeMismatchError(VisonError):
    code = "type-mismatch"


class CatalogFormatError(VisonError):
    """Structurally broken catalog or schema file (bad header, bad row shape)."""

    code = "malformed-csv"

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class SnapshotError(VisonError):
    code = "bad-snapshot"
