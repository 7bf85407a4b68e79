"""
Configuration loading and validation for the piecewise toolkit.
Reads config/toolkit.yaml into pydantic models.
"""
import yaml
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import BaseModel, Field, ValidationError, field_validator

from exceptions import FormatError
from piecewise.linalg import FieldSpec
from piecewise.sheaves import AXIOM_MODES


class SettingsConfig(BaseModel):
    """Process-wide defaults."""
    log_level: str = "ERROR"
    default_field: str = "gf5"

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"unknown log level {value!r}")
        return level

    @field_validator("default_field")
    @classmethod
    def _known_field(cls, value: str) -> str:
        try:
            return FieldSpec.parse(value).label
        except FormatError as exc:
            raise ValueError(str(exc)) from exc


class LimitsConfig(BaseModel):
    """Enumeration limits."""
    antichain_cap: int = Field(default=6, ge=1, le=6)
    all_covers_max_n: int = Field(default=3, ge=1)


class SheafConfig(BaseModel):
    default_axiom_mode: str = "basis"

    @field_validator("default_axiom_mode")
    @classmethod
    def _known_mode(cls, value: str) -> str:
        if value not in AXIOM_MODES:
            raise ValueError(f"unknown axiom mode {value!r}")
        return value


class HopfConfig(BaseModel):
    default_alpha_variant: int = Field(default=0, ge=0, le=1)


class ReportsConfig(BaseModel):
    save_reports: bool = False
    reports_directory: str = "reports"


class ToolkitConfig(BaseModel):
    """The `toolkit:` section of toolkit.yaml."""
    settings: SettingsConfig = Field(default_factory=SettingsConfig)
    limits: LimitsConfig = Field(default_factory=LimitsConfig)
    sheaf: SheafConfig = Field(default_factory=SheafConfig)
    hopf: HopfConfig = Field(default_factory=HopfConfig)
    reports: ReportsConfig = Field(default_factory=ReportsConfig)


class ConfigValidationError(Exception):
    """Raised when configuration validation fails."""
    pass


class ConfigLoader:
    """Loads and caches the toolkit configuration."""

    CONFIG_FILE = "toolkit.yaml"

    def __init__(self, config_root: str = "./config"):
        self.config_root = Path(config_root)
        self._toolkit_config: Optional[ToolkitConfig] = None

    @property
    def config_path(self) -> Path:
        return self.config_root / self.CONFIG_FILE

    def _read_yaml(self, path: Path) -> Dict[str, Any]:
        try:
            with open(path, "r", encoding="utf-8") as file_obj:
                data = yaml.safe_load(file_obj) or {}
        except yaml.YAMLError as e:
            raise ConfigValidationError(f"Invalid YAML in {path}: {e}")
        if not isinstance(data, dict):
            raise ConfigValidationError(f"Top-level YAML value in {path} must be a mapping")
        return data

    def load_toolkit_config(self) -> ToolkitConfig:
        """Load toolkit.yaml; a missing file yields the defaults."""
        if self._toolkit_config is not None:
            return self._toolkit_config

        if not self.config_path.exists():
            self._toolkit_config = ToolkitConfig()
            return self._toolkit_config

        config_data = self._read_yaml(self.config_path)
        if "toolkit" not in config_data:
            raise ConfigValidationError(f"Toolkit config must have a 'toolkit' section: {self.config_path}")
        try:
            self._toolkit_config = ToolkitConfig(**(config_data["toolkit"] or {}))
        except ValidationError as e:
            raise ConfigValidationError(f"Invalid toolkit config in {self.config_path}: {e}")
        return self._toolkit_config

    def validate_all_configs(self) -> bool:
        """Validate every configuration file under the root."""
        if not self.config_root.is_dir():
            raise ConfigValidationError(f"Config directory not found: {self.config_root}")
        self.load_toolkit_config()
        return True


def validate_config(config_root: str = "./config") -> bool:
    """Validate configuration and raise exception if invalid."""
    return ConfigLoader(config_root).validate_all_configs()
