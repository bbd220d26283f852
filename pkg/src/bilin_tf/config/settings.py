import logging
import os

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = logging.getLogger(__name__)


def default_threads() -> int:
    return os.cpu_count() or 1


class BilinTfSettings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="",
        case_sensitive=False,
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Worker cap for trial sweeps
    threads: int = Field(default_factory=default_threads, alias="BILIN_TF_THREADS")

    # Developer settings
    file_logging: bool = Field(False, alias="BILIN_TF_FILE_LOGGING")
    log_level: str | int | None = Field(None, alias="BILIN_TF_LOG_LEVEL")

    def __repr__(self):
        return (
            f"BilinTfSettings(threads={self.threads}, "
            f"log_level={self.log_level}, "
            f"file_logging={self.file_logging})"
        )

    @field_validator("threads", mode="after")
    @classmethod
    def validate_threads(cls, v: int) -> int:
        if v < 1:
            logger.warning(f"BILIN_TF_THREADS={v} is not positive, using one worker")
            return 1
        return v
