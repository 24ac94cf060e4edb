"""Run configuration loaded from the environment and CLI flags."""

from __future__ import annotations

import os
from pathlib import Path
from typing import Any, Literal, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

DEFAULT_SEED = 20240101

# Environment variable -> RunConfig field
ENV_VARS = {
    "DISSOC_WORKERS": "workers",
    "DISSOC_TOLERANCE": "tolerance",
    "DISSOC_OUTPUT_DIR": "output_dir",
    "DISSOC_SEED": "seed",
}


def _default_workers() -> int:
    return os.cpu_count() or 1


class RunConfig(BaseModel):
    """Settings shared by every command."""
    tolerance: float = Field(default=1e-10, gt=0.0)
    workers: int = Field(default_factory=_default_workers, ge=1)
    output_format: Literal["text", "json"] = "text"
    output_dir: Path = Field(default=Path("data"))
    seed: int = Field(default=DEFAULT_SEED, ge=0, lt=2**64)

    @classmethod
    def from_env(cls, **overrides: Optional[Any]) -> "RunConfig":
        """
        Build a config from .env / environment, then apply overrides.

        Args:
            **overrides: field values from CLI flags; None means "not given"

        Returns:
            Validated RunConfig
        """
        load_dotenv()
        values = {}
        for var, name in ENV_VARS.items():
            raw = os.getenv(var)
            if raw:
                values[name] = raw
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    @property
    def json_output(self) -> bool:
        return self.output_format == "json"
