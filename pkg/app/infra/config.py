import logging
import os
from typing import Any, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field

logger = logging.getLogger(__name__)

ENV_PREFIX = "PGROUP_"


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    group_cap: int = Field(default=3**8, gt=0)
    algebra_cap: int = Field(default=3**6, gt=0)
    basis_cap: int = Field(default=3**6, gt=0)
    word_cap: int = Field(default=64, gt=0)
    samples: int = Field(default=10_000, gt=0)
    pair_samples: int = Field(default=100_000, gt=0)
    seed: int = 0
    out: Optional[str] = None
    jobs: int = Field(default=1, gt=0)


_ENV_FIELDS = (
    "group_cap",
    "algebra_cap",
    "basis_cap",
    "word_cap",
    "samples",
    "pair_samples",
    "seed",
    "jobs",
)


class ConfigFactory:
    @staticmethod
    def create(**overrides: Any) -> RunConfig:
        """Defaults, then PGROUP_* variables (a .env file included), then overrides."""
        load_dotenv()
        values: dict[str, Any] = {}
        for name in _ENV_FIELDS:
            raw = os.getenv(ENV_PREFIX + name.upper())
            if raw is not None:
                values[name] = raw
        values.update({k: v for k, v in overrides.items() if v is not None})
        config = RunConfig(**values)
        logger.info("using configuration %s", config.model_dump())
        return config
