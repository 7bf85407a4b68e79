"""Optional persistence of reports under run directories."""

from __future__ import annotations

import json
import uuid
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional

from piecewise.reports.models import Report


class ReportStore:
    """Writes reports to <reports_directory>/<run_id>/report.json."""

    def __init__(self, reports_directory: str = "reports", save_reports: bool = True):
        self.reports_directory = Path(reports_directory)
        self.save_reports = save_reports

    def generate_run_id(self) -> str:
        """UTC timestamp + short UUID, suffixed when the directory already exists."""
        timestamp = datetime.now(timezone.utc).strftime("%Y%m%d_%H%M%S")
        run_id = f"{timestamp}_{str(uuid.uuid4())[:8]}"
        original, counter = run_id, 1
        while (self.reports_directory / run_id).exists():
            run_id = f"{original}_{counter}"
            counter += 1
        return run_id

    def write_report(self, report: Report, run_id: Optional[str] = None) -> Optional[Path]:
        if not self.save_reports:
            return None
        run_id = run_id or self.generate_run_id()
        run_dir = self.reports_directory / run_id
        run_dir.mkdir(parents=True, exist_ok=True)
        report_path = run_dir / "report.json"
        with open(report_path, "w", encoding="utf-8") as file_obj:
            json.dump(report.model_dump(mode="json"), file_obj, indent=2, ensure_ascii=False, default=str)
        return report_path

    def read_report(self, run_id: str) -> Report:
        with open(self.reports_directory / run_id / "report.json", "r", encoding="utf-8") as file_obj:
            return Report.model_validate(json.load(file_obj))
