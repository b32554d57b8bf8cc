"""Exception hierarchy shared by all lmono modules."""


class LmonoError(Exception):
    """Base class for all lmono-specific errors."""


class PoleError(LmonoError):
    """Evaluation requested exactly at a pole (e.g. Hurwitz zeta at s=1)."""


class PrecisionError(LmonoError):
    """Requested accuracy is unreachable within the parameter caps."""


class DomainError(LmonoError):
    """Argument outside the supported domain of a special function."""


class PhaseError(LmonoError):
    """Z-function rotation left an imaginary residue above tolerance."""


class ContourError(LmonoError):
    """Argument-principle contour passed too close to a zero."""


class EmptyListError(LmonoError):
    """Operation requires a nonempty zero list."""


class TailError(LmonoError):
    """Truncation tail bound exceeds the permitted fraction of the result."""


class FormatError(LmonoError):
    """Malformed zero-cache file.  Carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class ConvergenceError(LmonoError):
    """Series truncation point needed for the target accuracy is too large."""


class TieError(LmonoError):
    """Two non-conjugate zeros are equidistant from s within resolution."""


class NoFindingsError(LmonoError):
    """Sign-change scan below the onset threshold found nothing."""


class DominanceError(LmonoError):
    """Real zero is not weakly dominant over the rest of the synthetic set."""


class SearchError(LmonoError):
    """Integer search (a + b*sqrt(2) window) exhausted its budget."""


class GeometryError(LmonoError):
    """Feet of perpendiculars fall outside the admissible region."""
