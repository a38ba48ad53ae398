"""Exception types raised for malformed input.

Mathematical outcomes (invalid fan, compact variety, no Hartogs) are never
raised; they are reported.
"""


class HartogsFansError(Exception):
    pass


class DimensionMismatch(HartogsFansError, ValueError):
    pass


class ZeroVector(HartogsFansError, ValueError):
    pass


class ZeroCone(HartogsFansError, ValueError):
    pass


class UnknownColor(HartogsFansError, KeyError):
    pass


class RankTooLarge(HartogsFansError, ValueError):
    pass


class IsCompact(HartogsFansError):
    """The fan is complete, so the noncompact criteria do not apply."""
