"""Exception types shared across the package."""


class EngineError(Exception):
    """Base class for every error this package raises on purpose."""


class ParseError(EngineError):
    """Malformed CSV document: ragged rows, no header, no data rows."""


class SchemaError(EngineError):
    """Header-level problem: missing decision column, duplicate names."""


class MissingValueError(EngineError):
    """Empty cell in the input table; missing values are unsupported."""


class DomainError(EngineError):
    """Structurally invalid request, e.g. an empty object set."""


class ParameterError(EngineError):
    """Parameter outside its admissible range (fraction, precision, seed)."""


class CapacityError(EngineError):
    """Input exceeds a configured enumeration limit."""


class SelfCheckError(EngineError):
    """The exhaustive cross-check disagreed with the main engine."""
