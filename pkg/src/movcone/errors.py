"""Exception types shared across the package."""


class MovconeError(Exception):
    """Base class for all domain errors raised by this package."""


class ConfigSyntaxError(MovconeError):
    """Malformed variety config text; carries the 1-based line and column."""

    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ValidationError(MovconeError):
    """A variety spec violates one of the structural requirements."""


class AnticanonicalViolation(ValidationError):
    """Some column sum of the degree matrix is not n_k + 1."""

    def __init__(self, column, got, expected):
        super().__init__(
            f"column {column}: degree sum {got} != {expected} "
            f"(divisors must add up to the anticanonical class)"
        )
        self.column = column


class CodimTooLarge(ValidationError):
    """More divisors than the smallest factor dimension allows."""


class AmbientTooSmall(ValidationError):
    """Ambient product fails sum(n_i) >= 4, or is the excluded P^2 x P^2."""


class SubcriticalVariety(MovconeError):
    """Operation requires codim = n but the variety has codim < n.

    For such varieties every pseudoeffective integral class is already nef
    (Mov(X) = Nef(X)) and the birational group acts trivially, so reflection
    and descent machinery is refused rather than silently degenerate.
    """


class NonReducedWord(MovconeError):
    """Word has two equal adjacent letters, or a letter outside J."""


class NotLorentzian(MovconeError):
    """The restricted Gram matrix does not have signature (|J|-1, 1)."""


class NoAttractingDirection(MovconeError):
    """Word matrix has spectral radius 1; no dominant eigendirection."""


class NoGrowth(MovconeError):
    """Spectral radius is 1, so no spectral report can be produced."""


class NonConvergent(MovconeError):
    """Iterative eigensolver failed to meet its residual bound."""


class RankNotThree(MovconeError):
    """Rendering is only defined for 3-factor (rank-3) varieties."""
