import os

import pytest
import yaml

from frobfix.config.env_check import FIXTURES_ENV, check_polynomial_backend, resolve_fixtures_dir
from frobfix.config.loader import DEFAULT_CONFIG, load_settings, resolve_paths


def _write_config(tmp_path, raw) -> str:
    path = tmp_path / "settings.yaml"
    path.write_text(yaml.safe_dump(raw), encoding="utf-8")
    return str(path)


def _base_config():
    with open(DEFAULT_CONFIG, "r", encoding="utf-8") as f:
        return yaml.safe_load(f)


def test_default_settings_load() -> None:
    settings = load_settings()
    assert settings.get("app.name") == "frobfix"
    assert settings.get("decompose.max_retries") == 16
    assert settings.get("missing.key", "fallback") == "fallback"


def test_missing_fields_are_listed(tmp_path) -> None:
    raw = _base_config()
    del raw["decompose"]["seed"]
    raw["paths"]["fixtures_dir"] = ""
    with pytest.raises(ValueError) as exc:
        load_settings(_write_config(tmp_path, raw))
    assert "decompose.seed" in str(exc.value)
    assert "paths.fixtures_dir" in str(exc.value)


def test_decompose_settings_must_be_positive_integers(tmp_path) -> None:
    raw = _base_config()
    raw["decompose"]["max_retries"] = 0
    with pytest.raises(ValueError, match="positive"):
        load_settings(_write_config(tmp_path, raw))
    raw["decompose"]["max_retries"] = "many"
    with pytest.raises(ValueError, match="integer"):
        load_settings(_write_config(tmp_path, raw))


def test_missing_config_file(tmp_path) -> None:
    with pytest.raises(FileNotFoundError):
        load_settings(str(tmp_path / "nope.yaml"))


def test_resolve_paths_is_relative_to_the_config(tmp_path) -> None:
    raw = _base_config()
    raw["paths"]["fixtures_dir"] = "fixtures"
    path = _write_config(tmp_path, raw)
    paths = resolve_paths(load_settings(path), path)
    assert paths["fixtures_dir"] == os.path.join(str(tmp_path), "fixtures")


def test_resolve_fixtures_dir(tmp_path, fixtures_dir) -> None:
    assert resolve_fixtures_dir({"fixtures_dir": fixtures_dir}, environ={}) == fixtures_dir
    with pytest.raises(ValueError, match="manifest"):
        resolve_fixtures_dir({"fixtures_dir": str(tmp_path)}, environ={})
    with pytest.raises(ValueError, match="not found"):
        resolve_fixtures_dir({"fixtures_dir": str(tmp_path / "absent")}, environ={})
    env = {FIXTURES_ENV: fixtures_dir}
    assert resolve_fixtures_dir({"fixtures_dir": str(tmp_path / "absent")}, environ=env) == fixtures_dir


def test_polynomial_backend_is_available() -> None:
    check_polynomial_backend()
