"""Exception types shared across the package."""

from __future__ import annotations


class MinkflowError(Exception):
    """Base class for all library-specific failures."""


class NullVector(MinkflowError):
    """Normalization of a vector whose pseudo-norm is (numerically) zero."""


class FrameDrift(MinkflowError):
    """Integrated frame lost orthonormality beyond the hard tolerance."""


class DegenerateFrame(MinkflowError):
    """An operation needed frame data that is missing or unusable."""


class SingularCurvature(MinkflowError):
    """Division by kappa hit a (near-)zero of the curvature.

    ``index`` is the first offending grid index, ``s`` the corresponding
    arc-length value (both None when not applicable).
    """

    def __init__(self, message: str, index: int | None = None, s: float | None = None):
        super().__init__(message)
        self.index = index
        self.s = s


class BlowUp(MinkflowError):
    """A state magnitude exceeded the configured bound during time stepping."""


class ConstraintViolation(MinkflowError):
    """Soliton parameters cannot satisfy their defining constraints."""


class DegenerateRuling(MinkflowError):
    """Ruled-surface first form degenerated (unit normal undefined)."""


class NullNormal(MinkflowError):
    """Surface normal is null: the closed-form denominators vanish."""


class NotTimelike(MinkflowError):
    """Closed-form surface formulas evaluated outside their timelike regime."""


class ExprError(MinkflowError):
    """Base for profile-expression problems; carries a character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


class ExprSyntaxError(ExprError):
    """Parse failure, with the offset and the set of expected tokens."""

    def __init__(self, position: int, expected: set[str], found: str):
        self.expected = frozenset(expected)
        self.found = found
        want = ", ".join(sorted(expected))
        super().__init__(
            f"syntax error at offset {position}: expected {want}, found {found}",
            position,
        )


class ExprEvalError(ExprError):
    """Evaluation failure (division by zero, sqrt of a negative)."""


class ConfigError(MinkflowError):
    """One or more configuration/validation problems, reported together."""

    def __init__(self, problems: list[str]):
        self.problems = list(problems)
        super().__init__("\n".join(self.problems))


class StabilityWarning(UserWarning):
    """Heuristic warning: the explicit time step looks large for the grid."""
