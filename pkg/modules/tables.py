#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tables - Таблицы значений для команды table

    zetastar-head   r, n, weight, value, err                ζ*(r+2, {2}^n)
    g2              p, q, coeff, s, value, err              G_2(p,q) = C(p+q+1,q) ζ(p+q+2)
    euler-g         n, p, q, direct, direct_err, compositions, compositions_err
                    [, quadrature, quadrature_err]          G_{n+2}(p,q) разными способами
"""

import csv
import io
from dataclasses import dataclass
from typing import Dict, List, Sequence

import orjson as json

from modules.errors import ParameterRangeError, UnknownTableError
from modules.euler_sums import GSpec, g2_closed, g2_closed_value, g_compositions, g_direct, g_quad, MAX_QUAD_ORDER
from modules.indices import index, repeat
from modules.loguru_logger import LogCategory, info, log_function_calls
from modules.mzv_engine import mzsv
from modules.numerics import PrecisionConfig, ValueWithError

TABLE_NAMES = ('euler-g', 'g2', 'zetastar-head')
FORMATS = ('csv', 'json', 'text')

# Пределы диапазонов таблиц
MAX_HEAD_R = 2
MAX_HEAD_N = 6
MAX_G2_WEIGHT = 14
MAX_EULER_G_ORDER = 6


@dataclass(frozen=True)
class Table:
    name: str
    columns: Sequence[str]
    rows: List[List[str]]

    def render(self, fmt: str) -> str:
        if fmt == 'csv':
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator="\n")
            writer.writerow(self.columns)
            writer.writerows(self.rows)
            return buffer.getvalue()
        if fmt == 'json':
            records = [dict(zip(self.columns, row)) for row in self.rows]
            return json.dumps(records, option=json.OPT_SORT_KEYS | json.OPT_INDENT_2).decode('utf-8') + "\n"
        if fmt == 'text':
            widths = [max(len(col), *(len(row[i]) for row in self.rows)) if self.rows else len(col)
                      for i, col in enumerate(self.columns)]
            lines = ["  ".join(col.rjust(w) for col, w in zip(self.columns, widths))]
            lines.append("  ".join("-" * w for w in widths))
            lines.extend("  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in self.rows)
            return "\n".join(lines) + "\n"
        raise ParameterRangeError(f"Неизвестный формат таблицы {fmt!r}, допустимы: {', '.join(FORMATS)}")


def _check_range(name: str, values: Sequence[int], low: int, high: int) -> None:
    for v in values:
        if v < low or v > high:
            raise ParameterRangeError(f"{name}={v} вне диапазона {low}..{high}")


def _cells(result: ValueWithError, digits: int) -> List[str]:
    data = result.to_json_dict(digits)
    return [data['value'], data['err']]


def zetastar_head_table(rs: Sequence[int], ns: Sequence[int], cfg: PrecisionConfig) -> Table:
    """ζ*(r+2, {2}^n) по строкам (r, n)"""
    _check_range('r', rs, 0, MAX_HEAD_R)
    _check_range('n', ns, 0, MAX_HEAD_N)
    rows = []
    for r in rs:
        for n in ns:
            value = mzsv(index(r + 2, repeat(2, n)), cfg)
            rows.append([str(r), str(n), str(r + 2 + 2 * n)] + _cells(value, cfg.digits))
    return Table('zetastar-head', ('r', 'n', 'weight', 'value', 'err'), rows)


def g2_table(max_order: int, cfg: PrecisionConfig) -> Table:
    """Замкнутая форма G_2(p, q) для p + q <= max_order"""
    _check_range('max', [max_order], 0, MAX_G2_WEIGHT - 2)
    rows = []
    for total in range(max_order + 1):
        for p in range(total, -1, -1):
            q = total - p
            coeff, s = g2_closed(p, q)
            rows.append([str(p), str(q), str(coeff), str(s)] + _cells(g2_closed_value(p, q, cfg), cfg.digits))
    return Table('g2', ('p', 'q', 'coeff', 's', 'value', 'err'), rows)


def euler_g_table(max_order: int, cfg: PrecisionConfig, with_quadrature: bool = False) -> Table:
    """G_{n+2}(p, q) прямым суммированием и через композиции (и квадратурой) для n + p + q <= max_order"""
    _check_range('max', [max_order], 0, MAX_EULER_G_ORDER)
    if with_quadrature and max_order > MAX_QUAD_ORDER:
        raise ParameterRangeError(f"Квадратура поддерживает n + p + q <= {MAX_QUAD_ORDER}")
    columns = ['n', 'p', 'q', 'direct', 'direct_err', 'compositions', 'compositions_err']
    if with_quadrature:
        columns += ['quadrature', 'quadrature_err']
    rows = []
    for n in range(max_order + 1):
        for p in range(max_order + 1 - n):
            for q in range(max_order + 1 - n - p):
                spec = GSpec(n, p, q)
                row = [str(n), str(p), str(q)]
                row += _cells(g_direct(spec, cfg), cfg.digits)
                row += _cells(g_compositions(spec, cfg), cfg.digits)
                if with_quadrature:
                    row += _cells(g_quad(spec, cfg), cfg.digits)
                rows.append(row)
    return Table('euler-g', tuple(columns), rows)


@log_function_calls(LogCategory.CLI)
def build_table(name: str, options: Dict[str, object], cfg: PrecisionConfig) -> Table:
    """Таблица по имени; options: r, n (списки), max (int), quad (bool)"""
    if name not in TABLE_NAMES:
        raise UnknownTableError(f"Неизвестная таблица {name!r}, допустимы: {', '.join(TABLE_NAMES)}")
    info(f"Построение таблицы {name}", LogCategory.CLI)
    if name == 'zetastar-head':
        return zetastar_head_table(options.get('r') or [0, 1, 2], options.get('n') or [0, 1, 2], cfg)
    if name == 'g2':
        return g2_table(int(options.get('max') if options.get('max') is not None else 4), cfg)
    return euler_g_table(int(options.get('max') if options.get('max') is not None else 3), cfg,
                         bool(options.get('quad')))
