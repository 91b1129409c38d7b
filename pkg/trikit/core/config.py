# core/config.py
"""
trikit Configuration Management

Handles loading and validation of trikit.config.json. Every key is optional;
missing keys fall back to the defaults below and command-line flags override
whatever the file says.
"""

import json
import logging
from pathlib import Path
from dataclasses import dataclass, field
from typing import Dict, Any, Optional

from trikit.core.constants import CONFIG_FILE_NAME, DEFAULT_SEARCH_CAP, OutputFormat


__version__ = "0.1.0"

logger = logging.getLogger(__name__)


def get_version() -> str:
    return __version__


@dataclass
class SearchConfig:
    """Brute-force representation search settings."""
    cap: int = DEFAULT_SEARCH_CAP
    workers: int = 1


@dataclass
class CorpusConfig:
    """Random stacked-triangulation corpus settings."""
    seed: int = 0
    count: int = 1


@dataclass
class OutputConfig:
    """Output rendering settings."""
    format: str = OutputFormat.TEXT


@dataclass
class TrikitConfig:
    """Complete trikit configuration."""
    verify: bool = False
    search: SearchConfig = field(default_factory=SearchConfig)
    corpus: CorpusConfig = field(default_factory=CorpusConfig)
    output: OutputConfig = field(default_factory=OutputConfig)


def load_trikit_config(
    project_root: Optional[str] = None,
    config_path: Optional[str] = None
) -> TrikitConfig:
    """
    Load trikit configuration from a JSON file, or return the defaults.

    Args:
        project_root: Directory searched for trikit.config.json (defaults to cwd)
        config_path: Explicit config file; must exist when given

    Returns:
        TrikitConfig with loaded or default values

    Raises:
        ValueError: If the file is not valid JSON or holds invalid values
    """
    if config_path is not None:
        path = Path(config_path)
        if not path.exists():
            raise ValueError(f"Config file not found: {path}")
        return _load_config_from_file(path)

    if project_root is None:
        project_root = str(Path.cwd())

    path = Path(project_root) / CONFIG_FILE_NAME
    if path.exists():
        return _load_config_from_file(path)

    logger.debug(f"No {CONFIG_FILE_NAME} in {project_root}, using defaults")
    return TrikitConfig()


def _load_config_from_file(config_path: Path) -> TrikitConfig:
    """Load configuration from an existing file."""
    try:
        with open(config_path, 'r', encoding='utf-8') as f:
            config_data = json.load(f)
    except json.JSONDecodeError as e:
        raise ValueError(f"Invalid JSON in {config_path}: {e}")

    if not isinstance(config_data, dict):
        raise ValueError(f"Config root in {config_path} must be an object")

    config = _validate_and_convert_config(config_data)
    logger.debug(f"Loaded trikit config from {config_path}")
    return config


def _validate_and_convert_config(config_data: Dict[str, Any]) -> TrikitConfig:
    """Validate and convert raw config data to a TrikitConfig object."""

    verify = config_data.get("verify", False)
    if not isinstance(verify, bool):
        raise ValueError(f"Invalid verify flag: {verify!r}")

    search_data = config_data.get("search", {})
    search_config = SearchConfig(
        cap=search_data.get("cap", DEFAULT_SEARCH_CAP),
        workers=search_data.get("workers", 1)
    )
    if not isinstance(search_config.cap, int) or search_config.cap < 3:
        raise ValueError(f"Invalid search cap: {search_config.cap!r}")
    if not isinstance(search_config.workers, int) or search_config.workers < 1:
        raise ValueError(f"Invalid worker count: {search_config.workers!r}")

    corpus_data = config_data.get("corpus", {})
    corpus_config = CorpusConfig(
        seed=corpus_data.get("seed", 0),
        count=corpus_data.get("count", 1)
    )
    if not isinstance(corpus_config.seed, int) or corpus_config.seed < 0:
        raise ValueError(f"Invalid corpus seed: {corpus_config.seed!r}")
    if not isinstance(corpus_config.count, int) or corpus_config.count < 1:
        raise ValueError(f"Invalid corpus count: {corpus_config.count!r}")

    output_data = config_data.get("output", {})
    output_config = OutputConfig(format=output_data.get("format", OutputFormat.TEXT))
    if output_config.format not in OutputFormat.get_all_formats():
        raise ValueError(f"Invalid output format: {output_config.format}")

    return TrikitConfig(
        verify=verify,
        search=search_config,
        corpus=corpus_config,
        output=output_config,
    )


def _config_to_dict(config: TrikitConfig) -> Dict[str, Any]:
    """Convert TrikitConfig to dictionary for JSON serialization."""
    return {
        "verify": config.verify,
        "search": {
            "cap": config.search.cap,
            "workers": config.search.workers
        },
        "corpus": {
            "seed": config.corpus.seed,
            "count": config.corpus.count
        },
        "output": {
            "format": config.output.format
        }
    }


def save_trikit_config(config: TrikitConfig, config_path: Path):
    """Save configuration to a JSON file."""
    config_path.parent.mkdir(parents=True, exist_ok=True)

    with open(config_path, 'w', encoding='utf-8') as f:
        json.dump(_config_to_dict(config), f, indent=2, ensure_ascii=False)
