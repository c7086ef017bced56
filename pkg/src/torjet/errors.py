"""Exception types shared across the package.

Every error carries a machine-readable ``code`` (used by the CLI to build
exit-1 reports) plus whatever structured detail the failure produced.
"""


class TorjetError(Exception):
    """Base class for all precondition / contract violations."""

    code = "error"

    def payload(self) -> dict:
        return {"type": self.code, "message": str(self)}


class EmptyInput(TorjetError):
    code = "EmptyInput"


class EmptySet(TorjetError):
    code = "EmptySet"


class NotFullDimensional(TorjetError):
    code = "NotFullDimensional"

    def __init__(self, actual_dim: int, ambient_dim: int):
        self.actual_dim = actual_dim
        self.ambient_dim = ambient_dim
        super().__init__(
            f"affine span has dimension {actual_dim}, expected {ambient_dim}"
        )

    def payload(self) -> dict:
        return {**super().payload(), "actual_dim": self.actual_dim}


class DimensionUnsupported(TorjetError):
    code = "DimensionUnsupported"

    def __init__(self, dim: int):
        self.dim = dim
        super().__init__(f"polytope machinery supports ambient dimension 1..3, got {dim}")


class DimensionMismatch(TorjetError):
    code = "DimensionMismatch"


class LengthMismatch(TorjetError):
    code = "LengthMismatch"


class NotSmooth(TorjetError):
    code = "NotSmooth"


class NotDim3(TorjetError):
    code = "NotDim3"


class NotKRegular(TorjetError):
    code = "NotKRegular"


class Not2Regular(TorjetError):
    code = "Not2Regular"


class PreconditionViolated(TorjetError):
    code = "PreconditionViolated"


class BadParameters(TorjetError):
    code = "BadParameters"


class KOutOfRange(TorjetError):
    code = "KOutOfRange"


class NonIntegralResult(TorjetError):
    code = "NonIntegralResult"


class BothZero(TorjetError):
    code = "BothZero"


class CapExceeded(TorjetError):
    code = "CapExceeded"

    def __init__(self, count: int, cap: int, what: str = "columns"):
        self.count = count
        self.cap = cap
        self.what = what
        super().__init__(f"{what} count {count} exceeds cap {cap}")

    def payload(self) -> dict:
        return {**super().payload(), "count": self.count, "cap": self.cap}


class DegreeTooHigh(TorjetError):
    code = "DegreeTooHigh"


class ZeroPolynomial(TorjetError):
    code = "ZeroPolynomial"


class NotPlanar(TorjetError):
    code = "NotPlanar"
