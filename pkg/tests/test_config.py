import pytest

from negtrans.config import (
    DEFAULT_CONFIG_PATH,
    AuditConfig,
    DevelopmentConfig,
    TestingConfig,
    get_config,
    load_config,
)
from negtrans.errors import ConfigError


def test_named_configs():
    assert isinstance(get_config("testing"), TestingConfig)
    assert isinstance(get_config("audit"), AuditConfig)
    assert isinstance(get_config("default"), DevelopmentConfig)


def test_environment_selects_config(monkeypatch):
    monkeypatch.setenv("NEGTRANS_CONFIG", "audit")
    assert isinstance(get_config(), AuditConfig)


def test_unknown_config():
    with pytest.raises(ConfigError) as e:
        get_config("production")
    assert "testing" in str(e.value)


def test_search_bounds():
    bounds = AuditConfig().search_bounds()
    assert bounds.max_worlds == 4
    assert bounds.catalog == "all"


def test_development_corpora_are_smaller_than_audit():
    dev, audit = DevelopmentConfig(), AuditConfig()
    assert dev.AGREEMENT_CORPUS == 30
    assert dev.CORPUS_PROPOSITIONAL == 200
    for name in ("CORPUS_PROPOSITIONAL", "CORPUS_QUANTIFIED", "NNF_CORPUS", "ORACLE_CORPUS", "AGREEMENT_CORPUS"):
        assert getattr(dev, name) < getattr(audit, name)


def test_shipped_file_keeps_profile_values():
    cfg = load_config(DEFAULT_CONFIG_PATH, "testing")
    assert cfg.CORPUS_PROPOSITIONAL == TestingConfig.CORPUS_PROPOSITIONAL
    assert cfg.LOG_LEVEL == "WARNING"


def test_yaml_overrides(tmp_path):
    path = tmp_path / "negtrans.yaml"
    path.write_text("kripke:\n  max_worlds: 2\ncorpus:\n  seed: 7\n")
    cfg = load_config(path, "testing")
    assert cfg.KRIPKE_MAX_WORLDS == 2
    assert cfg.SEED == 7
    assert TestingConfig.SEED == 1


def test_missing_file_uses_defaults(tmp_path, caplog):
    cfg = load_config(tmp_path / "absent.yaml", "testing")
    assert cfg.KRIPKE_MAX_WORLDS == 3
    assert "not found" in caplog.text


@pytest.mark.parametrize(
    "text",
    [
        "kripke:\n  worlds: 2\n",
        "solver:\n  depth: 3\n",
        "- just\n- a list\n",
        "kripke: [unclosed\n",
    ],
)
def test_bad_files(tmp_path, text):
    path = tmp_path / "bad.yaml"
    path.write_text(text)
    with pytest.raises(ConfigError):
        load_config(path, "testing")
