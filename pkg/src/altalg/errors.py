"""Exception types shared across the package."""


class AlgebraError(Exception):
    """Base class for domain errors raised by altalg."""


class FieldMismatch(AlgebraError):
    pass


class AlgebraMismatch(AlgebraError):
    pass


class DivisionByZero(AlgebraError, ZeroDivisionError):
    pass


class ZeroGamma(AlgebraError):
    pass


class NotScalar(AlgebraError):
    """x * conj(x) did not land in span{1}; the involution is broken."""


class NotAlternative(AlgebraError):
    pass


class ZeroElement(AlgebraError):
    pass


class InvalidStructure(AlgebraError):
    """A table, involution or file violates its declared invariants."""


class PreconditionFailed(AlgebraError):
    def __init__(self, precondition: str, detail: str = ""):
        self.precondition = precondition
        self.detail = detail
        msg = f"precondition failed: {precondition}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
