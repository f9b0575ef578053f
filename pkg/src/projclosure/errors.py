"""Exception hierarchy; the CLI maps these onto exit codes."""


class PreconditionError(ValueError):
    """Input violates a precondition of the requested computation."""


class EngineConsistencyError(RuntimeError):
    """Two independent computations that must agree did not."""


class ParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column
