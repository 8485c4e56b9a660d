#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Identity Suite - Прогон тождеств каталога и отчёты

run_identity вычисляет обе стороны одного экземпляра тождества,
run_suite проходит сетки по умолчанию всех (или отобранных по маске)
записей каталога. Ошибки вычисления не выбрасываются, а попадают
в отчёт как провал с причиной.
"""

import fnmatch
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Tuple

import orjson as json

from modules.errors import ConfigurationError, EulerSumError, ParameterRangeError
from modules.identity_catalog import CATALOG, IdentityDef, Params, get_identity
from modules.loguru_logger import LogCategory, debug, info, success, warning
from modules.numerics import PrecisionConfig, ValueWithError


@dataclass(frozen=True)
class SuiteSettings:
    """Допуски по умолчанию и параллелизм прогона"""
    series_tol: float = 1e-6
    quadrature_tol: float = 1e-4
    threads: int = 1

    def __post_init__(self):
        if self.series_tol <= 0 or self.quadrature_tol <= 0:
            raise ConfigurationError("Допуски должны быть положительными")
        if not isinstance(self.threads, int) or self.threads < 1:
            raise ConfigurationError(f"threads должно быть целым >= 1, получено {self.threads!r}")

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> "SuiteSettings":
        """Создание из секции suite файла config.yaml"""
        try:
            return cls(
                series_tol=float(data.get('series_tol', 1e-6)),
                quadrature_tol=float(data.get('quadrature_tol', 1e-4)),
                threads=int(data.get('threads', 1)),
            )
        except (TypeError, ValueError) as e:
            raise ConfigurationError(f"Некорректная секция suite: {e}") from e


@dataclass(frozen=True)
class IdentityReport:
    """Результат проверки одного экземпляра тождества"""
    id: str
    params: Dict[str, int]
    lhs: Optional[ValueWithError]
    rhs: Optional[ValueWithError]
    residual: Optional[Any]
    tol: float
    passed: bool
    elapsed_ms: float
    cause: Optional[str] = None

    @property
    def sort_key(self) -> Tuple[str, Tuple[int, ...]]:
        return self.id, tuple(self.params.values())

    def to_dict(self, digits: int, timing: bool = True) -> Dict[str, Any]:
        """Словарь для JSON: числа - десятичные строки"""
        data: Dict[str, Any] = {
            'id': self.id,
            'params': dict(self.params),
            'lhs': self.lhs.to_json_dict(digits) if self.lhs is not None else None,
            'rhs': self.rhs.to_json_dict(digits) if self.rhs is not None else None,
            'residual': self.lhs.ctx.nstr(self.residual, 6) if self.residual is not None else None,
            'tol': format(self.tol, 'g'),
            'pass': self.passed,
        }
        if timing:
            data['elapsed_ms'] = f"{self.elapsed_ms:.1f}"
        if self.cause is not None:
            data['cause'] = self.cause
        return data

    def to_json(self, digits: int, timing: bool = True) -> bytes:
        return json.dumps(self.to_dict(digits, timing), option=json.OPT_SORT_KEYS)

    def to_text(self, digits: int, timing: bool = True) -> str:
        params = ",".join(f"{k}={v}" for k, v in self.params.items())
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.id}({params})"
        if self.lhs is not None and self.rhs is not None:
            ctx = self.lhs.ctx
            show = min(digits, 20)
            line += (f" lhs={ctx.nstr(self.lhs.value, show)} rhs={ctx.nstr(self.rhs.value, show)}"
                     f" residual={ctx.nstr(self.residual, 3)} tol={self.tol:g}")
        if timing:
            line += f" [{self.elapsed_ms:.1f} ms]"
        if self.cause is not None:
            line += f" cause: {self.cause}"
        return line


@dataclass(frozen=True)
class SuiteSummary:
    total: int
    passed: int
    failed: int

    @property
    def all_passed(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> Dict[str, int]:
        return {'total': self.total, 'passed': self.passed, 'failed': self.failed}


def summarize(reports: List[IdentityReport]) -> SuiteSummary:
    passed = sum(1 for r in reports if r.passed)
    return SuiteSummary(total=len(reports), passed=passed, failed=len(reports) - passed)


def resolve_tolerance(entry: IdentityDef, params: Params, settings: SuiteSettings,
                      tol: Optional[float] = None) -> float:
    """Допуск экземпляра: явный > объявленный в каталоге > по виду (ряды / квадратура)"""
    if tol is not None:
        if tol <= 0:
            raise ParameterRangeError(f"Допуск должен быть положительным, получено {tol}")
        return tol
    if entry.tol is not None:
        return entry.tol
    return settings.quadrature_tol if entry.is_quadrature(params) else settings.series_tol


def passes(lhs: ValueWithError, rhs: ValueWithError, tol: float, zero_target: bool) -> Tuple[Any, bool]:
    """
    |lhs - rhs| <= max(tol * max(|lhs|, |rhs|), lhs.err + rhs.err, atol),
    atol = tol только для экземпляров с точным нулём в правой части
    """
    ctx = lhs.ctx
    residual = abs(lhs.value - rhs.value)
    bound = max(tol * max(abs(lhs.value), abs(rhs.value)), lhs.err + rhs.err)
    if zero_target:
        bound = max(bound, ctx.mpf(tol))
    return residual, bool(residual <= bound)


def _run_checked(entry: IdentityDef, params: Params, cfg: PrecisionConfig, tol: float) -> IdentityReport:
    start = time.perf_counter()
    lhs = None
    try:
        lhs = entry.lhs(params, cfg)
        rhs = entry.rhs(params, cfg)
    except EulerSumError as e:
        elapsed = (time.perf_counter() - start) * 1000
        cause = f"{type(e).__name__}: {e}"
        warning(f"{entry.id}{params}: ошибка вычисления - {cause}", LogCategory.IDENTITY)
        return IdentityReport(entry.id, params, lhs, None, None, tol, False, elapsed, cause)
    residual, ok = passes(lhs, rhs, tol, entry.zero_target(params))
    elapsed = (time.perf_counter() - start) * 1000
    if ok:
        debug(f"{entry.id}{params}: PASS, невязка {lhs.ctx.nstr(residual, 3)}", LogCategory.IDENTITY)
    else:
        warning(f"{entry.id}{params}: FAIL, невязка {lhs.ctx.nstr(residual, 3)} при допуске {tol:g}",
                LogCategory.IDENTITY)
    return IdentityReport(entry.id, params, lhs, rhs, residual, tol, ok, elapsed)


def run_identity(identity_id: str, params: Params, cfg: PrecisionConfig,
                 tol: Optional[float] = None, settings: Optional[SuiteSettings] = None) -> IdentityReport:
    """
    Проверка одного экземпляра.

    Неизвестный id и параметры вне диапазона - исключения (ошибка использования),
    ошибки вычисления - провал в отчёте с причиной.
    """
    entry = get_identity(identity_id)
    ordered = entry.validate(params)
    settings = settings or SuiteSettings()
    return _run_checked(entry, ordered, cfg, resolve_tolerance(entry, ordered, settings, tol))


def select_identities(pattern: Optional[str] = None) -> List[IdentityDef]:
    """Записи каталога, чей id подходит под glob-маску (все при pattern=None)"""
    entries = sorted(CATALOG, key=lambda e: e.id)
    if pattern is None:
        return entries
    return [e for e in entries if fnmatch.fnmatchcase(e.id, pattern)]


def run_instances(instances: List[Tuple[str, Params]], cfg: PrecisionConfig,
                  tol: Optional[float] = None, settings: Optional[SuiteSettings] = None) -> List[IdentityReport]:
    """Прогон набора экземпляров; порядок результата - по (id, параметры) независимо от потоков"""
    settings = settings or SuiteSettings()
    if settings.threads == 1:
        reports = [run_identity(i, p, cfg, tol, settings) for i, p in instances]
    else:
        with ThreadPoolExecutor(max_workers=settings.threads) as pool:
            futures = [pool.submit(run_identity, i, p, cfg, tol, settings) for i, p in instances]
            reports = [f.result() for f in futures]
    return sorted(reports, key=lambda r: r.sort_key)


def run_suite(pattern: Optional[str], cfg: PrecisionConfig, tol: Optional[float] = None,
              settings: Optional[SuiteSettings] = None) -> List[IdentityReport]:
    """Все записи каталога (или отобранные маской) на сетках по умолчанию"""
    entries = select_identities(pattern)
    instances = [(entry.id, params) for entry in entries for params in entry.default_grid()]
    info(f"Прогон каталога: {len(entries)} тождеств, {len(instances)} экземпляров", LogCategory.IDENTITY)
    reports = run_instances(instances, cfg, tol, settings)
    summary = summarize(reports)
    if reports and summary.all_passed:
        success(f"Все {summary.total} экземпляров прошли", LogCategory.IDENTITY)
    else:
        info(f"Итог: {summary.passed} из {summary.total} прошли", LogCategory.IDENTITY)
    return reports
