import logging
from pathlib import Path
import tomllib

from pydantic import ValidationError

from _library.error_codes import MALFORMED_CONFIG_ERROR
from _library.exceptions import ConfigurationError
from apps.experiments.models import ExperimentConfig
from apps.experiments.models.choices import CommandName
from config import settings

logger = logging.getLogger(__name__)


def parse_config(payload: dict, command: CommandName | str | None = None, overrides: dict | None = None) -> ExperimentConfig:
    """
    Validate a run document. Overrides with a None value are ignored; a
    command named on the command line must agree with the document.
    """
    payload = {**payload, **{key: value for key, value in (overrides or {}).items() if value is not None}}

    if command is not None:
        command = CommandName(command)
        declared = payload.get("command")
        if declared is not None and declared != command.value:
            raise ConfigurationError(MALFORMED_CONFIG_ERROR, field="command", declared=declared, requested=command.value)
        payload["command"] = command.value

    try:
        return ExperimentConfig.model_validate(payload)
    except ValidationError as error:
        problems = [f"{'.'.join(str(part) for part in item['loc'])}: {item['msg']}" for item in error.errors()]
        raise ConfigurationError(MALFORMED_CONFIG_ERROR, problems=problems) from error


def load_config(path: Path | str, command: CommandName | str | None = None, overrides: dict | None = None) -> ExperimentConfig:
    path = Path(path)
    try:
        with path.open("rb") as handle:
            payload = tomllib.load(handle)
    except FileNotFoundError as error:
        raise ConfigurationError(MALFORMED_CONFIG_ERROR, path=str(path), info="config file not found") from error
    except tomllib.TOMLDecodeError as error:
        raise ConfigurationError(MALFORMED_CONFIG_ERROR, path=str(path), info=str(error)) from error

    config = parse_config(payload, command, overrides)
    logger.info(f"INFO:-------->> Loaded {path} for command {config.command.value if config.command else '-'}")
    return config


def output_root(config: ExperimentConfig) -> Path:
    """
    --out, then the document's output_dir, then QOGP_OUTPUT_DIR.
    """
    root = config.output_dir if config.output_dir is not None else settings.OUTPUT_DIR
    root.mkdir(parents=True, exist_ok=True)
    return root
