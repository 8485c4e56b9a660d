#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Config Manager - Модуль для работы с конфигурацией
"""

import copy
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from modules.loguru_logger import LogCategory, debug, warning


DEFAULT_CONFIG: Dict[str, Any] = {
    'precision': {
        'digits': 30,
        'cutoff': 100000,
        'extrapolate': True,
        'quad_level': 10
    },
    'suite': {
        'series_tol': 1e-6,
        'quadrature_tol': 1e-4,
        'threads': 1
    },
    'cache': {
        'path': './eulersum-cache.jsonl',
        'enabled': True
    },
    'logging': {
        'level': 'WARNING',
        'log_dir': None
    }
}


class ConfigManager:
    def __init__(self, config_file: Optional[Path] = None):
        if config_file is None:
            config_file = Path(__file__).parent.parent / "config.yaml"

        self.config_file = Path(config_file)
        self.config = self.load_config()

    def load_config(self) -> Dict[str, Any]:
        """Загрузка конфигурации из файла поверх значений по умолчанию"""
        config = self.get_default_config()
        if not self.config_file.exists():
            debug(f"Файл конфигурации {self.config_file} не найден, используются значения по умолчанию",
                  LogCategory.CONFIG)
            return config

        try:
            with open(self.config_file, 'r', encoding='utf-8') as f:
                loaded = yaml.safe_load(f) or {}
        except Exception as e:
            warning(f"Ошибка загрузки конфигурации: {e}", LogCategory.CONFIG)
            return config

        if not isinstance(loaded, dict):
            warning("Конфигурация должна быть словарём, файл проигнорирован", LogCategory.CONFIG)
            return config

        for section, values in loaded.items():
            if isinstance(values, dict) and isinstance(config.get(section), dict):
                config[section].update(values)
            else:
                config[section] = values
        return config

    def get_default_config(self) -> Dict[str, Any]:
        """Получение конфигурации по умолчанию"""
        return copy.deepcopy(DEFAULT_CONFIG)

    def get(self, key: str, default: Any = None) -> Any:
        """Получение значения конфигурации по ключу"""
        keys = key.split('.')
        value = self.config

        for k in keys:
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default

        return value

    def set(self, key: str, value: Any) -> None:
        """Установка значения конфигурации"""
        keys = key.split('.')
        config = self.config

        for k in keys[:-1]:
            if k not in config:
                config[k] = {}
            config = config[k]

        config[keys[-1]] = value

    def save_config(self) -> None:
        """Сохранение конфигурации в файл"""
        try:
            with open(self.config_file, 'w', encoding='utf-8') as f:
                yaml.safe_dump(self.config, f, default_flow_style=False, allow_unicode=True, indent=2)
        except Exception as e:
            warning(f"Ошибка сохранения конфигурации: {e}", LogCategory.CONFIG)

    def get_precision_config(self) -> Dict[str, Any]:
        """Получение секции точности"""
        return self.get('precision', {})

    def get_suite_config(self) -> Dict[str, Any]:
        """Получение настроек прогона идентичностей"""
        return self.get('suite', {})

    def get_cache_config(self) -> Dict[str, Any]:
        """Получение конфигурации кэша"""
        return self.get('cache', {})

    def get_logging_config(self) -> Dict[str, Any]:
        """Получение конфигурации логирования"""
        return self.get('logging', {})
