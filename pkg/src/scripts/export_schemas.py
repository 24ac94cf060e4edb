#!/usr/bin/env python3
"""Write the JSON Schema of every JSON report the CLI prints into schemas/."""

import json
import sys
from pathlib import Path
from typing import Dict, List, Type

from pydantic import BaseModel

PROJECT_ROOT = Path(__file__).parent.parent.parent
sys.path.insert(0, str(PROJECT_ROOT))

from src.models.reports import (
    CasePolyReport,
    DissReport,
    FamilyBuildReport,
    ReducedSolveReport,
    RhoReport,
    SearchRecord,
    SearchResult,
    Theorem1Report,
    VerifyReport,
)

# File stem -> model; the CLI dumps with by_alias=True, so do the schemas
REPORT_MODELS: Dict[str, Type[BaseModel]] = {
    "rho": RhoReport,
    "diss": DissReport,
    "family-build": FamilyBuildReport,
    "reduced-solve": ReducedSolveReport,
    "verify": VerifyReport,
    "search": SearchResult,
    "search-record": SearchRecord,
    "theorem1": Theorem1Report,
    "casepoly": CasePolyReport,
}


def export_schemas(directory: Path) -> List[Path]:
    """Write one ``<stem>.schema.json`` per report model and return the paths."""
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for stem, model in REPORT_MODELS.items():
        schema = model.model_json_schema(by_alias=True, mode="serialization")
        path = directory / f"{stem}.schema.json"
        with open(path, "w", encoding="utf-8") as f:
            json.dump(schema, f, indent=2)
            f.write("\n")
        written.append(path)
    return written


def main():
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else PROJECT_ROOT / "schemas"
    print("=" * 70)
    print("EXPORT JSON SCHEMAS")
    print("=" * 70)
    for path in export_schemas(target):
        print(f"✓ {path.name}")
    print("=" * 70)


if __name__ == "__main__":
    main()
