from __future__ import annotations

from pathlib import Path

import pytest

from config import DEFAULT_CONFIG_PATH, Settings, apply_mapping, load_settings
from errors import DomainError


class TestLoadSettings:
    def test_bundled_config_matches_defaults(self) -> None:
        settings = load_settings(environ={})
        assert settings.source == str(DEFAULT_CONFIG_PATH)
        assert settings.oracle_max_n == 10
        assert settings.bdn_max_n == 8
        assert settings.min_cut_enumeration_limit == 200_000
        assert settings.sweep_seed == 7

    def test_file_overrides_defaults(self, tmp_path: Path) -> None:
        path = tmp_path / "config.yaml"
        path.write_text("oracle:\n  max_n: 6\nsweep:\n  max_seconds: 2.5\n", encoding="utf-8")
        settings = load_settings(str(path), environ={})
        assert settings.oracle_max_n == 6
        assert settings.sweep_max_seconds == 2.5
        assert settings.bdn_max_n == 8

    def test_environment(self, tmp_path: Path) -> None:
        path = tmp_path / "other.yaml"
        path.write_text("sweep:\n  seed: 1\n", encoding="utf-8")
        assert load_settings(environ={"BD_CONFIG": str(path)}).sweep_seed == 1
        assert load_settings(environ={"BD_CONFIG": str(path), "BD_SEED": "42"}).sweep_seed == 42

    def test_bad_seed(self) -> None:
        with pytest.raises(DomainError, match="BD_SEED"):
            load_settings(environ={"BD_SEED": "seven"})

    def test_missing_explicit_file(self, tmp_path: Path) -> None:
        with pytest.raises(DomainError, match="not found"):
            load_settings(str(tmp_path / "absent.yaml"), environ={})

    def test_missing_default_file_is_fine(self, tmp_path: Path) -> None:
        settings = load_settings(environ={"BD_CONFIG": str(tmp_path / "absent.yaml")})
        assert settings == Settings()

    def test_malformed_yaml(self, tmp_path: Path) -> None:
        path = tmp_path / "broken.yaml"
        path.write_text("oracle: [unclosed\n", encoding="utf-8")
        with pytest.raises(DomainError, match="cannot parse"):
            load_settings(str(path), environ={})


class TestApplyMapping:
    def test_unknown_key(self) -> None:
        with pytest.raises(DomainError, match="oracle.depth"):
            apply_mapping(Settings(), {"oracle": {"depth": 3}})

    def test_unknown_section(self) -> None:
        with pytest.raises(DomainError, match="section"):
            apply_mapping(Settings(), {"logging": {}})

    @pytest.mark.parametrize("value", ["ten", True, -1, 2.5])
    def test_rejects_bad_integers(self, value: object) -> None:
        with pytest.raises(DomainError):
            apply_mapping(Settings(), {"oracle": {"max_n": value}})

    def test_version_is_ignored(self) -> None:
        assert apply_mapping(Settings(), {"config_version": 1}) == Settings()
