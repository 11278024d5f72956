"""Exception hierarchy. The CLI maps these onto its exit codes."""


class DualLieError(Exception):
    pass


class StructuralError(DualLieError):
    """Malformed algebra data (shapes, labels, index ranges)."""


class PreconditionError(DualLieError):
    """An operation was called on an input outside its domain."""


class NotAnIdeal(PreconditionError):
    pass


class NotEpsInvariant(PreconditionError):
    pass


class NotSolvable(PreconditionError):
    pass


class NotSemisimple(PreconditionError):
    pass


class NotASubalgebra(PreconditionError):
    pass


class NotARepresentation(PreconditionError):
    def __init__(self, msg: str, witness: tuple):
        super().__init__(msg)
        self.witness = witness


class PluralIndexUnsupported(PreconditionError):
    """Raised by routines that rely on eps^2 = 0 when p > 2."""


class NotNilpotent(PreconditionError):
    def __init__(self, msg: str, index: int, char_poly):
        super().__init__(msg)
        self.index = index
        self.char_poly = char_poly


class NotTriangularizable(PreconditionError):
    pass


class VerificationError(DualLieError):
    """A post-hoc self-check failed; indicates a bug, never a user error."""


class ParseError(DualLieError):
    def __init__(self, msg: str, line: int | None = None):
        super().__init__(f"line {line}: {msg}" if line is not None else msg)
        self.line = line
