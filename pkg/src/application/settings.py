"""
settings.py

Numeric configuration for the solver, the analysis routines and the simulator.
IMPORTANT: Parameters are loaded dynamically from config.yaml and are not hardcoded.
"""

from pathlib import Path

import yaml  # type: ignore

from src.models.settings_schemas import Settings


CONFIG_PATH = Path(__file__).with_name("config.yaml")


def load_settings(config_path: Path = CONFIG_PATH) -> Settings:
    with open(config_path, "r") as file:
        config = yaml.safe_load(file)
    return Settings.model_validate(config)


SETTINGS = load_settings()
