"""Configuration for search bounds, corpora and logging."""

import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional, Type, Union

import yaml
from dotenv import load_dotenv

from negtrans.errors import ConfigError
from negtrans.generator import GeneratorConfig
from negtrans.kripke import SearchBounds

load_dotenv()

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent.parent / "config" / "negtrans.yaml"


def _env(name: str, default: Any) -> Any:
    raw = os.environ.get(f"NEGTRANS_{name}")
    if raw is None:
        return default
    if isinstance(default, bool):
        return raw.strip().lower() in ("1", "true", "yes", "on")
    if isinstance(default, int):
        try:
            return int(raw)
        except ValueError:
            raise ConfigError(f"NEGTRANS_{name} must be an integer, got '{raw}'") from None
    return raw


class Config:
    """Base configuration."""

    # Kernel
    FO_DEPTH = _env("FO_DEPTH", 12)
    FO_NODE_BUDGET = _env("FO_NODE_BUDGET", 20000)
    PATH_NODE_BUDGET = _env("PATH_NODE_BUDGET", 200000)

    # Countermodels
    KRIPKE_MAX_WORLDS = _env("KRIPKE_MAX_WORLDS", 3)
    KRIPKE_MAX_DOMAIN = _env("KRIPKE_MAX_DOMAIN", 2)
    KRIPKE_CATALOG = _env("KRIPKE_CATALOG", "catalog")
    CONSTANT_DOMAINS = _env("CONSTANT_DOMAINS", False)

    # Corpora
    SEED = _env("SEED", 1)
    CORPUS_PROPOSITIONAL = _env("CORPUS_PROPOSITIONAL", 500)
    CORPUS_QUANTIFIED = _env("CORPUS_QUANTIFIED", 200)
    NNF_CORPUS = _env("NNF_CORPUS", 200)
    ORACLE_MAX_SYMBOLS = _env("ORACLE_MAX_SYMBOLS", 6)
    ORACLE_CORPUS = _env("ORACLE_CORPUS", 40)
    AGREEMENT_CORPUS = _env("AGREEMENT_CORPUS", 60)

    # Logging
    LOG_LEVEL = _env("LOG_LEVEL", "WARNING")
    LOG_DIR = _env("LOG_DIR", None)

    def search_bounds(self) -> SearchBounds:
        return SearchBounds(
            max_worlds=self.KRIPKE_MAX_WORLDS,
            max_domain=self.KRIPKE_MAX_DOMAIN,
            catalog=self.KRIPKE_CATALOG,
            constant_domains=self.CONSTANT_DOMAINS,
        )

    def generator(self, propositional: bool = True, seed: Optional[int] = None) -> GeneratorConfig:
        return GeneratorConfig(
            seed=self.SEED if seed is None else seed,
            propositional=propositional,
        )

    def as_dict(self) -> Dict[str, Any]:
        return {name: getattr(self, name) for name in dir(self) if name.isupper()}


class DevelopmentConfig(Config):
    """Development configuration. Corpora sized so `verify all` stays under a minute."""

    CORPUS_PROPOSITIONAL = _env("CORPUS_PROPOSITIONAL", 200)
    CORPUS_QUANTIFIED = _env("CORPUS_QUANTIFIED", 80)
    NNF_CORPUS = _env("NNF_CORPUS", 100)
    ORACLE_CORPUS = _env("ORACLE_CORPUS", 20)
    AGREEMENT_CORPUS = _env("AGREEMENT_CORPUS", 30)


class TestingConfig(Config):
    """Small corpora and tight bounds for the test suite."""

    CORPUS_PROPOSITIONAL = 40
    CORPUS_QUANTIFIED = 20
    NNF_CORPUS = 20
    ORACLE_CORPUS = 8
    AGREEMENT_CORPUS = 20
    FO_NODE_BUDGET = 5000


class AuditConfig(Config):
    """Every rooted poset up to four worlds."""

    KRIPKE_MAX_WORLDS = 4
    KRIPKE_CATALOG = "all"


config: Dict[str, Type[Config]] = {
    "development": DevelopmentConfig,
    "testing": TestingConfig,
    "audit": AuditConfig,
    "default": DevelopmentConfig,
}

# YAML section -> key -> attribute
_YAML_KEYS = {
    "search": {
        "depth": "FO_DEPTH",
        "node_budget": "FO_NODE_BUDGET",
        "path_node_budget": "PATH_NODE_BUDGET",
    },
    "kripke": {
        "max_worlds": "KRIPKE_MAX_WORLDS",
        "max_domain": "KRIPKE_MAX_DOMAIN",
        "catalog": "KRIPKE_CATALOG",
        "constant_domains": "CONSTANT_DOMAINS",
    },
    "corpus": {
        "seed": "SEED",
        "propositional": "CORPUS_PROPOSITIONAL",
        "quantified": "CORPUS_QUANTIFIED",
        "nnf": "NNF_CORPUS",
        "oracle_max_symbols": "ORACLE_MAX_SYMBOLS",
        "oracle": "ORACLE_CORPUS",
        "agreement": "AGREEMENT_CORPUS",
    },
    "logging": {"level": "LOG_LEVEL", "dir": "LOG_DIR"},
}


def get_config(config_name: Optional[str] = None) -> Config:
    """Get a configuration instance by name."""
    if not config_name:
        config_name = os.environ.get("NEGTRANS_CONFIG", "default")
    try:
        return config[config_name]()
    except KeyError:
        raise ConfigError(
            f"unknown configuration '{config_name}'; valid options: {', '.join(sorted(config))}"
        ) from None


def load_config(
    path: Optional[Union[str, Path]] = None, config_name: Optional[str] = None
) -> Config:
    """Named configuration with the overrides of a YAML file applied."""
    cfg = get_config(config_name)
    path = Path(path) if path else DEFAULT_CONFIG_PATH
    try:
        with open(path) as f:
            data = yaml.safe_load(f) or {}
    except FileNotFoundError:
        logger.warning(f"Config file {path} not found. Using defaults.")
        return cfg
    except yaml.YAMLError as e:
        raise ConfigError(f"cannot read {path}: {e}") from e

    if not isinstance(data, dict):
        raise ConfigError(f"{path}: expected a mapping at the top level")
    for section, values in data.items():
        keys = _YAML_KEYS.get(section)
        if keys is None:
            raise ConfigError(f"{path}: unknown section '{section}'")
        for key, value in (values or {}).items():
            if key not in keys:
                raise ConfigError(f"{path}: unknown key '{section}.{key}'")
            setattr(cfg, keys[key], value)
    return cfg
