from pathlib import Path
from typing import Optional

from pydantic import ValidationError

from hahnspec.configs import AnalysisConfig
from hahnspec.core import ConfigError


def create_config(config_path: Optional[Path] = None) -> AnalysisConfig:
    """Create configuration from file or defaults."""
    if not config_path:
        return AnalysisConfig()
    try:
        with open(config_path, 'r') as file:
            return AnalysisConfig.model_validate_json(file.read())
    except OSError as e:
        raise ConfigError(f"cannot read {config_path}: {e.strerror or e}", field="config") from e
    except ValidationError as e:
        error = e.errors()[0]
        field = ".".join(str(part) for part in error["loc"]) or "config"
        raise ConfigError(error["msg"], field=field) from e


def pick(flag: Optional[float], fallback: float) -> float:
    """Command line flag if given, otherwise the configured value."""
    return fallback if flag is None else flag
