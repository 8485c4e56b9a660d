#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Тесты modules.config_manager
"""

import yaml

from modules.config_manager import DEFAULT_CONFIG, ConfigManager
from modules.numerics import PrecisionConfig


def test_missing_file_uses_defaults(tmp_path):
    config = ConfigManager(tmp_path / "absent.yaml")
    assert config.get_precision_config() == DEFAULT_CONFIG['precision']
    assert config.get("suite.threads") == 1
    assert config.get("suite.nothing", "x") == "x"


def test_file_overrides_section_keys(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text(yaml.safe_dump({'precision': {'digits': 40}, 'cache': {'enabled': False}}),
                    encoding='utf-8')
    config = ConfigManager(path)
    precision = config.get_precision_config()
    assert precision['digits'] == 40
    assert precision['cutoff'] == DEFAULT_CONFIG['precision']['cutoff']
    assert config.get_cache_config()['enabled'] is False
    assert PrecisionConfig.from_mapping(precision).digits == 40


def test_broken_file_falls_back(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text("precision: [unclosed", encoding='utf-8')
    assert ConfigManager(path).get_suite_config() == DEFAULT_CONFIG['suite']


def test_set_and_save(tmp_path):
    path = tmp_path / "config.yaml"
    config = ConfigManager(path)
    config.set("logging.level", "DEBUG")
    config.save_config()
    assert ConfigManager(path).get_logging_config()['level'] == "DEBUG"


def test_defaults_are_not_shared(tmp_path):
    first = ConfigManager(tmp_path / "a.yaml")
    first.set("precision.digits", 99)
    assert ConfigManager(tmp_path / "b.yaml").get("precision.digits") == 30
