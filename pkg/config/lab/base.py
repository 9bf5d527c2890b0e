from pathlib import Path

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class LabSettings(BaseSettings):
    """
    Filesystem settings for experiment runs.
    OUTPUT_DIR is the only value read from the environment (QOGP_OUTPUT_DIR).
    """

    # Absolute project root directory (immutable after initialization)
    BASE_DIR: Path = Field(
        default=Path(__file__).resolve().parent.parent.parent,
        frozen=True,
    )

    # Where command outputs land unless --out is given
    OUTPUT_DIR: Path = Field(default=Path("output"), description="Default experiment output directory")

    # Tool name written into every CSV header
    TOOL_NAME: str = Field(default="qogp-lab", frozen=True)

    model_config = SettingsConfigDict(
        env_prefix="QOGP_",
        # Ignore unrelated environment variables
        extra="ignore",
    )

    @field_validator("OUTPUT_DIR", mode="after")
    @classmethod
    def resolve_output_dir(cls, value: Path) -> Path:
        # Relative output paths are anchored at the current working directory
        return value.expanduser()

    @classmethod
    def settings_customise_sources(cls, settings_cls, init_settings, env_settings, dotenv_settings, file_secret_settings):
        # Archival runs: no .env files, no secrets directory
        return (init_settings, env_settings)


lab_config = LabSettings()
