#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
CLI - Командная строка eulersum

Подкоманды:
    eval EXPR               значение выражения (см. modules.expressions)
    verify ID [--n 0..2]    проверка тождества; verify --all - весь каталог
    suite [--filter GLOB]   весь каталог или отобранные по маске записи
    table NAME              таблица значений (zetastar-head, g2, euler-g)
    list                    каталог тождеств

Коды выхода: 0 - успех, 1 - провал тождества или вычисления, 2 - ошибка использования.
"""

import argparse
import itertools
import sys
import time
import traceback
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import orjson as json

from modules.config_manager import ConfigManager
from modules.errors import (ConfigurationError, DivergentSeriesError, DomainError, EulerSumError,
                            ExpressionParseError, ParameterRangeError, UnknownIdentityError,
                            UnknownTableError)
from modules.expressions import evaluate_expression, parse_expression
from modules.identity_catalog import CATALOG, Params, get_identity
from modules.identity_suite import (IdentityReport, SuiteSettings, run_instances, run_suite,
                                    select_identities, summarize)
from modules.loguru_logger import LogCategory, debug, info, init_loguru_logging
from modules.numerics import PrecisionConfig
from modules.results_cache import ResultsCache
from modules.tables import FORMATS, TABLE_NAMES, build_table

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

USAGE_ERRORS = (ExpressionParseError, DivergentSeriesError, DomainError, UnknownIdentityError,
                ParameterRangeError, UnknownTableError, ConfigurationError)

# Имена параметров всех тождеств каталога - флаги команды verify
PARAM_NAMES = sorted({spec.name for entry in CATALOG for spec in entry.params})


class UsageError(EulerSumError):
    """Неверные аргументы командной строки"""


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_range(text: str) -> List[int]:
    """'3' -> [3], '0..2' -> [0, 1, 2], '1,3' -> [1, 3], '0..1,4' -> [0, 1, 4]"""
    values: List[int] = []
    try:
        for chunk in text.split(','):
            chunk = chunk.strip()
            if '..' in chunk:
                low, high = (int(x) for x in chunk.split('..', 1))
                if high < low:
                    raise UsageError(f"пустой диапазон {chunk!r}")
                values.extend(range(low, high + 1))
            else:
                values.append(int(chunk))
    except ValueError:
        raise UsageError(f"ожидался диапазон вида 3, 0..2 или 1,3; получено {text!r}") from None
    return sorted(set(values))


def _common_options() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    group = common.add_argument_group("общие параметры")
    group.add_argument('--digits', type=int, help="значащие десятичные цифры (>= 15)")
    group.add_argument('--cutoff', type=int, help="индекс обрезки рядов N (>= 100)")
    group.add_argument('--no-extrapolate', action='store_true', help="без экстраполяции Ричардсона")
    group.add_argument('--quad-level', type=int, help="уровень квадратуры tanh-sinh")
    group.add_argument('--tol', type=float, help="относительный допуск для всех экземпляров")
    group.add_argument('--threads', type=int, help="число потоков для экземпляров тождеств")
    group.add_argument('--cache', type=Path, help="путь к файлу кэша JSON lines")
    group.add_argument('--no-cache', action='store_true', help="не читать и не писать кэш")
    group.add_argument('--json', action='store_true', help="вывод в JSON")
    group.add_argument('--verbose', action='store_true', help="подробный лог и время выполнения")
    group.add_argument('--timing', action='store_true', help="добавить elapsed_ms в отчёты")
    group.add_argument('--config', type=Path, help="файл конфигурации (по умолчанию config.yaml)")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = _ArgumentParser(prog="eulersum",
                             description="Многократные дзета-значения и суммы Эйлера G_{n+2}(p,q)")
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    p_eval = sub.add_parser('eval', parents=[common], help="вычислить выражение")
    p_eval.add_argument('expr', help="например zetastar(3,{2}^2) или G(n=0,p=1,q=1)")

    p_verify = sub.add_parser('verify', parents=[common], help="проверить тождество")
    p_verify.add_argument('id', nargs='?', help="идентификатор тождества (см. list)")
    p_verify.add_argument('--all', action='store_true', help="весь каталог на сетках по умолчанию")
    for name in PARAM_NAMES:
        p_verify.add_argument(f'--{name}', type=parse_range, metavar='RANGE',
                              help=f"значения параметра {name}: 3, 0..2 или 1,3")

    p_suite = sub.add_parser('suite', parents=[common], help="прогон каталога")
    p_suite.add_argument('--filter', default=None, help="glob-маска идентификаторов, например 'prop2.*'")

    p_table = sub.add_parser(
        'table', parents=[common], help="таблица значений",
        description="zetastar-head: r, n, weight, value, err; g2: p, q, coeff, s, value, err; "
                    "euler-g: n, p, q, direct, direct_err, compositions, compositions_err "
                    "[, quadrature, quadrature_err]")
    p_table.add_argument('name', help=f"одна из: {', '.join(TABLE_NAMES)}")
    p_table.add_argument('--r', type=parse_range, metavar='RANGE', help="zetastar-head: значения r (0..2)")
    p_table.add_argument('--n', type=parse_range, metavar='RANGE', help="zetastar-head: значения n")
    p_table.add_argument('--max', type=int, help="g2, euler-g: предел p+q или n+p+q")
    p_table.add_argument('--quad', action='store_true', help="euler-g: добавить квадратуру")
    p_table.add_argument('--format', choices=FORMATS, default='text')

    sub.add_parser('list', parents=[common], help="каталог тождеств")
    return parser


class CliContext:
    """Настройки одного запуска: конфигурация файла поверх умолчаний, флаги поверх файла"""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.config = ConfigManager(args.config)
        precision = dict(self.config.get_precision_config())
        if args.digits is not None:
            precision['digits'] = args.digits
        if args.cutoff is not None:
            precision['cutoff'] = args.cutoff
        if args.quad_level is not None:
            precision['quad_level'] = args.quad_level
        if args.no_extrapolate:
            precision['extrapolate'] = False
        self.cfg = PrecisionConfig.from_mapping(precision)

        suite = dict(self.config.get_suite_config())
        if args.threads is not None:
            suite['threads'] = args.threads
        self.settings = SuiteSettings.from_mapping(suite)
        self.timing = args.timing

    def open_cache(self) -> Optional[ResultsCache]:
        cache_cfg = self.config.get_cache_config()
        if self.args.no_cache or not cache_cfg.get('enabled', True):
            return None
        # значения без экстраполяции в кэш не попадают: ключ их не различает
        if not self.cfg.extrapolate:
            return None
        path = self.args.cache or Path(cache_cfg.get('path', './eulersum-cache.jsonl'))
        return ResultsCache(path)


def _write(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def cmd_eval(ctx: CliContext) -> int:
    expr = parse_expression(ctx.args.expr)
    canonical = expr.canonical()
    cache = ctx.open_cache()
    start = time.perf_counter()
    result = cache.lookup(canonical, ctx.cfg) if cache is not None else None
    cached = result is not None
    if result is None:
        result = evaluate_expression(expr, ctx.cfg)
        if cache is not None:
            cache.store(canonical, result, ctx.cfg)
    elapsed = (time.perf_counter() - start) * 1000
    if ctx.args.verbose:
        sys.stderr.write(f"{canonical}: {'из кэша' if cached else 'вычислено'} за {elapsed:.1f} ms\n")

    data = result.to_json_dict(ctx.cfg.digits)
    if ctx.args.json:
        payload = {'expr': canonical, 'value': data['value'], 'err': data['err'],
                   'digits': ctx.cfg.digits, 'cutoff': ctx.cfg.cutoff}
        _write(json.dumps(payload, option=json.OPT_SORT_KEYS).decode('utf-8'))
    else:
        _write(f"{canonical} = {data['value']} ± {data['err']}")
    return EXIT_OK


def _verify_instances(args: argparse.Namespace) -> List[Tuple[str, Params]]:
    entry = get_identity(args.id)
    given: Dict[str, List[int]] = {}
    for name in PARAM_NAMES:
        values = getattr(args, name)
        if values is None:
            continue
        if name not in entry.param_names:
            raise UsageError(f"{entry.id} не имеет параметра --{name}; параметры: {list(entry.param_names)}")
        given[name] = values

    if len(given) == len(entry.param_names):
        names = entry.param_names
        points = [dict(zip(names, combo)) for combo in itertools.product(*(given[n] for n in names))]
        for params in points:
            entry.validate(params)
        return [(entry.id, params) for params in points]

    # часть параметров не задана - берём точки сетки по умолчанию с заданными значениями
    points = [params for params in entry.default_grid()
              if all(params[name] in values for name, values in given.items())]
    if not points:
        raise ParameterRangeError(f"{entry.id}: в сетке по умолчанию нет экземпляров с {given}; "
                                  f"задайте все параметры {list(entry.param_names)}")
    return [(entry.id, params) for params in points]


def _emit_reports(ctx: CliContext, reports: List[IdentityReport]) -> int:
    summary = summarize(reports)
    digits = ctx.cfg.digits
    if ctx.args.json:
        for report in reports:
            _write(report.to_json(digits, ctx.timing).decode('utf-8'))
        _write(json.dumps({'summary': summary.to_dict()}, option=json.OPT_SORT_KEYS).decode('utf-8'))
    else:
        for report in reports:
            _write(report.to_text(digits, ctx.timing))
        _write(f"passed {summary.passed}/{summary.total}, failed {summary.failed}")
    return EXIT_OK if summary.all_passed else EXIT_FAILURE


def cmd_verify(ctx: CliContext) -> int:
    args = ctx.args
    if args.all:
        if args.id is not None:
            raise UsageError("--all и идентификатор тождества взаимоисключающие")
        return _emit_reports(ctx, run_suite(None, ctx.cfg, args.tol, ctx.settings))
    if args.id is None:
        raise UsageError("укажите идентификатор тождества или --all")
    instances = _verify_instances(args)
    return _emit_reports(ctx, run_instances(instances, ctx.cfg, args.tol, ctx.settings))


def cmd_suite(ctx: CliContext) -> int:
    return _emit_reports(ctx, run_suite(ctx.args.filter, ctx.cfg, ctx.args.tol, ctx.settings))


def cmd_table(ctx: CliContext) -> int:
    args = ctx.args
    options = {'r': args.r, 'n': args.n, 'max': args.max, 'quad': args.quad}
    table = build_table(args.name, options, ctx.cfg)
    fmt = 'json' if args.json else args.format
    sys.stdout.write(table.render(fmt))
    return EXIT_OK


def cmd_list(ctx: CliContext) -> int:
    entries = select_identities(None)
    if ctx.args.json:
        for entry in entries:
            payload = {
                'id': entry.id,
                'params': {spec.name: f"{spec.low}..{spec.high}" for spec in entry.params},
                'grid': len(entry.grid),
                'kind': entry.kind,
                'ref': entry.ref,
            }
            _write(json.dumps(payload, option=json.OPT_SORT_KEYS).decode('utf-8'))
        return EXIT_OK
    for entry in entries:
        params = " ".join(f"{spec.name}={spec.low}..{spec.high}" for spec in entry.params)
        _write(f"{entry.id:<14} {params:<40} grid={len(entry.grid):<3} {entry.ref}")
    return EXIT_OK


COMMANDS = {
    'eval': cmd_eval,
    'verify': cmd_verify,
    'suite': cmd_suite,
    'table': cmd_table,
    'list': cmd_list,
}


def _init_logging(args: argparse.Namespace) -> None:
    config = ConfigManager(args.config)
    logging_cfg = config.get_logging_config()
    level = "DEBUG" if args.verbose else str(logging_cfg.get('level', 'WARNING'))
    log_dir = logging_cfg.get('log_dir')
    init_loguru_logging(log_dir=Path(log_dir) if log_dir else None, level=level)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        sys.stderr.write(f"usage error: {e}\n")
        return EXIT_USAGE

    verbose = getattr(args, 'verbose', False)
    try:
        _init_logging(args)
        ctx = CliContext(args)
        debug(f"Команда {args.command}, {ctx.cfg.to_dict()}", LogCategory.CLI)
        code = COMMANDS[args.command](ctx)
        info(f"Команда {args.command} завершена с кодом {code}", LogCategory.CLI)
        return code
    except ExpressionParseError as e:
        sys.stderr.write(e.annotated() + "\n")
        return EXIT_USAGE
    except (UsageError,) + USAGE_ERRORS as e:
        if verbose:
            traceback.print_exc()
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    except EulerSumError as e:
        if verbose:
            traceback.print_exc()
        sys.stderr.write(f"error: {type(e).__name__}: {e}\n")
        return EXIT_FAILURE
