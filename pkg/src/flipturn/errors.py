"""Error taxonomy shared across the package."""


class FlipturnError(Exception):
    """Base class for all package errors."""


class SimplicityError(FlipturnError):
    """Input boundary self-intersects (code SIMPLICITY)."""


class DegeneratePolygonError(FlipturnError):
    """Zero area or fewer than three usable vertices (code DEGENERATE_POLYGON)."""


class StalePocketError(FlipturnError):
    """Pocket handle does not match the current polygon (code STALE_POCKET)."""


class BadUndoError(FlipturnError):
    """Undo record does not match the polygon it is applied to (code BAD_UNDO)."""


class SearchBudgetError(FlipturnError):
    """Exhaustive search exceeded its node budget (code SEARCH_BUDGET)."""


class PotentialViolationError(FlipturnError):
    """A per-flipturn potential delta contradicted the proven bounds."""


class NotPseudodisksError(FlipturnError):
    """Sibling subhulls violated the pseudo-disk trichotomy; upstream corruption."""


class GenerationError(FlipturnError):
    """A generator exhausted its budget or failed its construction self-check."""
