"""Exceptions shared by the lookup and assembly modules."""

from typing import Optional


class GottliebError(Exception):
    """Base exception for every error raised by gottlieb_groups."""
    pass


class NotCoveredError(GottliebError):
    """Raised when no encoded fact or rule answers a lookup.

    Query operations catch it and report ``not_covered`` instead of failing.
    """
    def __init__(self, subject: str, reason: Optional[str] = None):
        self.subject = subject
        self.reason = reason or "outside the encoded tables and rules"
        super().__init__(f"Not covered: {subject} ({self.reason})")
