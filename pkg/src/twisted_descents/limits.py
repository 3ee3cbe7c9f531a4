"""Default size caps for enumeration-heavy operations.

All caps are overridable per call; the CLI additionally reads them from
flags and environment variables.
"""

# Largest ground-set label accepted anywhere.
MAX_LABEL = 2**32 - 1

# Largest set whose ordered partitions we will enumerate by default.
# Fubini(10) is around 1e8, the practical desk limit.
ENUMERATION_CAP = 10

# Refuse coproducts (and basis expansions) producing more terms than this.
MAX_TERMS = 2**24

# Largest symmetric group whose descent classes we enumerate by default.
DESCENT_CLASS_CAP = 8

# Largest universe for brute-force endomorphism tables.
ORACLE_SUPPORT_CAP = 4


class SizeLimitError(Exception):
    """An operation would exceed a configured size cap."""

    def __init__(self, message: str, cap: int):
        super().__init__(message)
        self.cap = cap
