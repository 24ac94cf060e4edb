"""Append-only JSONL checkpoint with a cursor file for resumable searches."""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Any, Dict, List, Sequence, Tuple

from ..models.reports import SearchRecord


class CheckpointStore:
    """
    Records of committed chunks plus a cursor naming the next chunk.

    Layout under ``directory``: ``records.jsonl`` holds one SearchRecord per
    line (aliases g6, n, diss, rho, canon) and ``cursor.json`` holds the next
    chunk index, the scanned count, the byte length of the committed JSONL and
    the run identity. A cursor from a different run identity is ignored.
    """

    def __init__(self, directory: Path, identity: Dict[str, Any]):
        self.directory = Path(directory)
        self.identity = identity
        self.records_path = self.directory / "records.jsonl"
        self.cursor_path = self.directory / "cursor.json"

    def load(self) -> Tuple[int, int, List[SearchRecord]]:
        """Committed state: (next chunk, scanned count, records)."""
        if not self.cursor_path.exists():
            self.reset()
            return 0, 0, []
        with open(self.cursor_path, "r", encoding="utf-8") as f:
            cursor = json.load(f)
        if cursor.get("identity") != self.identity or not self.records_path.exists():
            self.reset()
            return 0, 0, []

        offset = int(cursor["offset"])
        with open(self.records_path, "r+b") as f:
            f.truncate(offset)
            f.seek(0)
            lines = f.read().decode("utf-8").splitlines()
        records = [SearchRecord.model_validate_json(line) for line in lines if line.strip()]
        return int(cursor["chunk"]), int(cursor["scanned"]), records

    def reset(self) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        self.records_path.write_bytes(b"")
        self._write_cursor(0, 0, 0)

    def commit(self, next_chunk: int, scanned: int, records: Sequence[SearchRecord]) -> None:
        """Append one chunk's records, then advance the cursor."""
        with open(self.records_path, "ab") as f:
            for record in records:
                f.write((record.to_jsonl() + "\n").encode("utf-8"))
            f.flush()
            os.fsync(f.fileno())
            offset = f.tell()
        self._write_cursor(next_chunk, scanned, offset)

    def _write_cursor(self, chunk: int, scanned: int, offset: int) -> None:
        tmp = self.cursor_path.with_suffix(".tmp")
        with open(tmp, "w", encoding="utf-8") as f:
            json.dump(
                {"chunk": chunk, "scanned": scanned, "offset": offset, "identity": self.identity},
                f,
                indent=2,
            )
        os.replace(tmp, self.cursor_path)
