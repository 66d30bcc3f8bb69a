"""Exception hierarchy shared by every torifan module."""


class TorifanError(Exception):
    pass


class SingularSystem(TorifanError, ArithmeticError):
    pass


class ZeroVector(TorifanError, ValueError):
    pass


class DimensionMismatch(TorifanError, ValueError):
    pass


class InvalidFan(TorifanError, ValueError):
    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(self.diagnostics) or "invalid fan")


class NonCompleteFan(TorifanError, ValueError):
    pass


class NotSmooth(TorifanError, ValueError):
    pass


class NotACone(TorifanError, ValueError):
    pass


class RayOutsideSupport(TorifanError, ValueError):
    pass


class DuplicateRay(TorifanError, ValueError):
    pass


class IncompatibleMap(TorifanError, ValueError):
    pass


class NotCartier(TorifanError, ValueError):
    pass


class NotNef(TorifanError, ValueError):
    pass


class UnboundedPolytope(TorifanError, ValueError):
    pass
