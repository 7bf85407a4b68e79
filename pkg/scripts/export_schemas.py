#!/usr/bin/env python3
"""Export JSON schemas for input documents and reports."""

from __future__ import annotations

import json
import sys
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parents[1]
if str(REPO_ROOT) not in sys.path:
    sys.path.insert(0, str(REPO_ROOT))

from piecewise.io.models import DOCUMENT_MODELS, RecipeDocument
from piecewise.reports.models import Report


def main() -> int:
    target_dir = REPO_ROOT / "schemas"
    target_dir.mkdir(parents=True, exist_ok=True)

    for kind, model_cls in DOCUMENT_MODELS.items():
        schema_path = target_dir / f"{kind.value}.schema.json"
        with open(schema_path, "w", encoding="utf-8") as file_obj:
            json.dump(model_cls.model_json_schema(), file_obj, indent=2, ensure_ascii=False)

    with open(target_dir / "recipe.schema.json", "w", encoding="utf-8") as file_obj:
        json.dump(RecipeDocument.model_json_schema(), file_obj, indent=2, ensure_ascii=False)

    with open(target_dir / "report.schema.json", "w", encoding="utf-8") as file_obj:
        json.dump(Report.model_json_schema(), file_obj, indent=2, ensure_ascii=False)

    return 0


if __name__ == "__main__":
    raise SystemExit(main())
