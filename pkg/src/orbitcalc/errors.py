class InvalidInput(ValueError):
    """Bad user input: malformed partition or algebra, inadmissible Jordan type."""


class InvariantViolation(RuntimeError):
    """An internal consistency check failed (oracle disagreement, unclassifiable pair)."""
