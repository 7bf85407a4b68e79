"""Machine-readable reports and their storage."""

from piecewise.reports.models import Report, Verdict, compute_content_hash
from piecewise.reports.store import ReportStore

__all__ = ["Report", "ReportStore", "Verdict", "compute_content_hash"]
