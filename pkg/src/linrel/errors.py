class RelationError(ValueError):
    """Base class for input errors raised by linrel."""


class DimensionMismatchError(RelationError):
    pass


class PreconditionError(RelationError):
    """An operation was applied outside its domain of definition.

    ``dimension`` carries the size of the offending part (e.g. dim mul T).
    """

    def __init__(self, message, dimension=None):
        super().__init__(message)
        self.dimension = dimension


class PairError(RelationError):
    """Two relations do not form an adjoint pair."""


class ParseError(RelationError):
    def __init__(self, message, field=None, line=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)
        self.field = field
        self.line = line
