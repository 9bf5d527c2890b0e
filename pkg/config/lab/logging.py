from pydantic import Field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class LoggingSettings(BaseSettings):
    """
    Lab logging settings.
    """

    LOGGING: dict = Field(default_factory=dict, description="logging.config.dictConfig payload")
    # Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
    LEVEL: str = Field(default="INFO", description="Root log level")

    FORMATTERS: dict = {
        "verbose": {
            "format": "{levelname} {asctime} [{module}:{lineno}] {message}",
            "style": "{",
            "datefmt": "%Y-%m-%d %H:%M:%S",
        },
    }

    # Logging handlers; stderr keeps stdout free for command summaries
    HANDLERS: dict = {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "verbose",
            "stream": "ext://sys.stderr",
            "level": "DEBUG",
        },
    }

    LOGGERS: dict = {
        "apps": {
            "handlers": ["console"],
            "level": "INFO",
            "propagate": False,
        },
        "_library": {
            "handlers": ["console"],
            "level": "INFO",
            "propagate": False,
        },
        "routes": {
            "handlers": ["console"],
            "level": "INFO",
            "propagate": False,
        },
    }

    model_config = SettingsConfigDict(extra="ignore")

    @classmethod
    def settings_customise_sources(cls, settings_cls, init_settings, env_settings, dotenv_settings, file_secret_settings):
        # Only the CLI sets these; the environment is never read
        return (init_settings,)

    @model_validator(mode="after")
    def build_logging(self) -> "LoggingSettings":
        """
        Build the dictConfig payload.
        """
        level = self.LEVEL.upper()
        loggers = {name: {**spec, "level": level} for name, spec in self.LOGGERS.items()}
        self.LOGGING = {
            "version": 1,
            "disable_existing_loggers": False,
            "formatters": self.FORMATTERS,
            "handlers": self.HANDLERS,
            "root": {"handlers": ["console"], "level": level},
            "loggers": loggers,
        }
        return self


logging_config = LoggingSettings()
