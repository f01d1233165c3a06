"""
Runtime configuration loaded from the environment and an optional .env file
"""

import logging
import os
from functools import lru_cache
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

REPO_ROOT = Path(__file__).resolve().parents[2]

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Settings(BaseModel):
    """Settings read from KOLCHIN_* environment variables"""

    seed: int = Field(default=0, description="seed for randomized property runs")
    log_level: str = Field(default="WARNING")
    data_dir: Path = Field(default=REPO_ROOT / "data" / "examples")

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in LEVELS:
            raise ValueError(f"unknown log level {value}")
        return level


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """
    Load settings once per process

    Returns:
        Settings built from the environment after loading ``.env``
    """
    load_dotenv()
    values = {}
    if os.getenv("KOLCHIN_SEED"):
        values["seed"] = int(os.environ["KOLCHIN_SEED"])
    if os.getenv("KOLCHIN_LOG_LEVEL"):
        values["log_level"] = os.environ["KOLCHIN_LOG_LEVEL"]
    if os.getenv("KOLCHIN_DATA_DIR"):
        values["data_dir"] = Path(os.environ["KOLCHIN_DATA_DIR"])
    return Settings(**values)


def configure_logging(verbosity: int = 0, level: Optional[str] = None) -> None:
    """
    Configure root logging for command-line runs

    Args:
        verbosity: Number of -v flags (1 → INFO, 2 or more → DEBUG)
        level: Explicit level name overriding the settings
    """
    chosen = level or get_settings().log_level
    if verbosity == 1:
        chosen = "INFO"
    elif verbosity >= 2:
        chosen = "DEBUG"
    logging.basicConfig(level=chosen, format=LOG_FORMAT, force=True)
