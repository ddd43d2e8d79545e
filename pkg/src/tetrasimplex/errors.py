"""Exception types raised across the package."""


class InvalidSiteError(ValueError):
    """Site list has duplicates or indices outside the register."""


class DimensionError(ValueError):
    """Operator or vector shape does not match what the call expects."""


class SingularMatrixError(ValueError):
    """Matrix is numerically singular."""


class AnticommutationError(ValueError):
    """Operators that must anticommute do not."""


class CommutantError(ValueError):
    """An appended single-site operator fails the commutant condition."""

    def __init__(self, message, residual):
        super().__init__(message)
        self.residual = residual


class ConstraintError(ValueError):
    """A family constraint is violated; ``constraint`` names the violated one."""

    def __init__(self, constraint, residual):
        super().__init__(f"{constraint} violated (residual {residual:.3e})")
        self.constraint = constraint
        self.residual = residual


class ConvergenceError(RuntimeError):
    """An iterative solver stopped without meeting its tolerance."""

    def __init__(self, message, best_residual, best=None):
        super().__init__(f"{message} (best residual {best_residual:.3e})")
        self.best_residual = best_residual
        self.best = best


class SpectrumError(RuntimeError):
    """Eigenvalue iteration failed to converge."""


class FormatError(ValueError):
    """Malformed SIMPLEXMAT or manifest input."""
