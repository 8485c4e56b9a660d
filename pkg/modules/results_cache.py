#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Results Cache - Кэш вычисленных значений в формате JSON lines

Файл только дописывается; при открытии он читается один раз в словарь
в памяти. Ключ записи - (каноническое выражение, digits, cutoff, версия схемы).
"""

import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import mpmath
import orjson as json

from modules.loguru_logger import LogCategory, debug, info, warning
from modules.numerics import PrecisionConfig, ValueWithError

SCHEMA_VERSION = 1

CacheKey = Tuple[str, int, int, int]


@dataclass(frozen=True)
class CacheRecord:
    """Одна строка кэша; value и err - десятичные строки"""
    expr: str
    digits: int
    cutoff: int
    value: str
    err: str
    version: int = SCHEMA_VERSION

    @property
    def key(self) -> CacheKey:
        return self.expr, self.digits, self.cutoff, self.version

    @classmethod
    def from_value(cls, expr: str, result: ValueWithError, cfg: PrecisionConfig) -> "CacheRecord":
        data = result.to_json_dict(cfg.digits)
        return cls(expr, cfg.digits, cfg.cutoff, data['value'], data['err'])

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CacheRecord":
        """Запись из словаря; ValueError, если value или err не конечные числа либо err < 0"""
        value, err = str(data['value']), str(data['err'])
        parsed_value, parsed_err = mpmath.mpf(value), mpmath.mpf(err)
        if not mpmath.isfinite(parsed_value) or not mpmath.isfinite(parsed_err):
            raise ValueError(f"value и err должны быть конечными, получено {value!r} ± {err!r}")
        if parsed_err < 0:
            raise ValueError(f"err должна быть неотрицательной, получено {err!r}")
        return cls(
            expr=str(data['expr']),
            digits=int(data['digits']),
            cutoff=int(data['cutoff']),
            value=value,
            err=err,
            version=int(data['version']),
        )

    def to_dict(self) -> Dict[str, Any]:
        return {'expr': self.expr, 'digits': self.digits, 'cutoff': self.cutoff,
                'value': self.value, 'err': self.err, 'version': self.version}

    def to_value(self, cfg: PrecisionConfig) -> ValueWithError:
        ctx = cfg.ctx
        return ValueWithError(ctx.mpf(self.value), ctx.mpf(self.err))


class ResultsCache:
    def __init__(self, cache_file: Path):
        self.cache_file = Path(cache_file)
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0
        self.records = self.load_cache()

    def load_cache(self) -> Dict[CacheKey, CacheRecord]:
        """Чтение файла кэша; повреждённые строки пропускаются с предупреждением"""
        records: Dict[CacheKey, CacheRecord] = {}
        if not self.cache_file.exists():
            debug(f"Файл кэша {self.cache_file} отсутствует, начинаем с пустого", LogCategory.CACHE)
            return records

        try:
            with open(self.cache_file, 'rb') as f:
                lines = f.read().splitlines()
        except OSError as e:
            warning(f"Ошибка чтения кэша {self.cache_file}: {e}", LogCategory.CACHE)
            return records

        skipped = 0
        for lineno, line in enumerate(lines, 1):
            if not line.strip():
                continue
            try:
                record = CacheRecord.from_dict(json.loads(line))
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
                skipped += 1
                warning(f"Повреждённая строка {lineno} в {self.cache_file}: {e}", LogCategory.CACHE)
                continue
            records[record.key] = record

        info(f"Кэш загружен: {len(records)} записей, пропущено {skipped}", LogCategory.CACHE)
        return records

    def lookup(self, expr: str, cfg: PrecisionConfig) -> Optional[ValueWithError]:
        record = self.records.get((expr, cfg.digits, cfg.cutoff, SCHEMA_VERSION))
        if record is None:
            self.misses += 1
            return None
        self.hits += 1
        debug(f"Попадание в кэш: {expr} (digits={cfg.digits}, cutoff={cfg.cutoff})", LogCategory.CACHE)
        return record.to_value(cfg)

    def store(self, expr: str, result: ValueWithError, cfg: PrecisionConfig) -> CacheRecord:
        """Дописать запись; повторное сохранение того же ключа не пишет в файл"""
        record = CacheRecord.from_value(expr, result, cfg)
        with self._lock:
            if record.key in self.records:
                return self.records[record.key]
            try:
                self.cache_file.parent.mkdir(parents=True, exist_ok=True)
                with open(self.cache_file, 'ab') as f:
                    f.write(json.dumps(record.to_dict(), option=json.OPT_SORT_KEYS) + b"\n")
            except OSError as e:
                warning(f"Не удалось записать в кэш {self.cache_file}: {e}", LogCategory.CACHE)
            self.records[record.key] = record
        return record

    def __len__(self) -> int:
        return len(self.records)
