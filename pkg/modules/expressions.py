#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Expressions - Грамматика выражений командной строки

    expr    := kind "(" args ")"
    kind    := zeta | zetastar | G | finite_zeta | finite_zetastar | harmonic | H
    index   := [item ("," item)*]             item := INT | "{" INT "}" "^" INT
    zeta, zetastar                  -> index
    finite_zeta, finite_zetastar    -> index ";" "n" "=" INT
    harmonic, H                     -> INT ";" "n" "=" INT
    G                               -> "n" "=" INT "," "p" "=" INT "," "q" "=" INT

Пробелы незначимы. H - синоним harmonic. Каноническая форма использует
блоки {a}^k для повторов и не содержит пробелов.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from modules.errors import DomainError, ExpressionParseError
from modules.euler_sums import GSpec, g_direct
from modules.finite_sums import EXACT_LIMIT, finite_mzsv, finite_mzv, finite_sum_fixed, gen_harmonic
from modules.indices import MultiIndex, split_blocks
from modules.loguru_logger import LogCategory, log_function_calls
from modules.mzv_engine import mzsv, mzv
from modules.numerics import PrecisionConfig, ValueWithError

SERIES_KINDS = ('zeta', 'zetastar')
FINITE_KINDS = ('finite_zeta', 'finite_zetastar')
HARMONIC_KINDS = ('harmonic', 'H')
KINDS = SERIES_KINDS + ('G',) + FINITE_KINDS + HARMONIC_KINDS

# Защита от выражений вида {2}^100000000
MAX_PARTS = 64


@dataclass(frozen=True)
class Expression:
    """Разобранное выражение"""
    kind: str
    index: Optional[MultiIndex] = None
    g: Optional[GSpec] = None
    n: Optional[int] = None

    def canonical(self) -> str:
        if self.kind == 'G':
            return self.g.canonical()
        if self.kind == 'harmonic':
            return f"harmonic({self.index.parts[0]};n={self.n})"
        body = split_blocks(self.index.parts)
        if self.kind in FINITE_KINDS:
            return f"{self.kind}{body[:-1]};n={self.n})"
        return f"{self.kind}{body}"

    def __str__(self) -> str:
        return self.canonical()


class _Parser:
    """Рекурсивный спуск по строке с отслеживанием позиции"""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, position: Optional[int] = None) -> ExpressionParseError:
        return ExpressionParseError(message, self.text, self.pos if position is None else position)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str) -> None:
        if self.peek() != char:
            found = repr(self.peek()) if self.peek() else "конец строки"
            raise self.error(f"ожидалось '{char}', найдено {found}")
        self.pos += 1

    def accept(self, char: str) -> bool:
        if self.peek() == char:
            self.pos += 1
            return True
        return False

    def word(self) -> Tuple[str, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == '_'):
            self.pos += 1
        if start == self.pos:
            raise self.error("ожидалось имя")
        return self.text[start:self.pos], start

    def integer(self) -> Tuple[int, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            found = repr(self.text[start]) if start < len(self.text) else "конец строки"
            raise self.error(f"ожидалось целое число, найдено {found}")
        return int(self.text[start:self.pos]), start

    def keyword_value(self, name: str) -> int:
        key, start = self.word()
        if key != name:
            raise self.error(f"ожидалось '{name}=', найдено '{key}'", start)
        self.expect('=')
        value, _ = self.integer()
        return value

    def item(self, parts: List[int]) -> None:
        if self.accept('{'):
            value, start = self.integer()
            self.expect('}')
            self.expect('^')
            count, count_start = self.integer()
            if len(parts) + count > MAX_PARTS:
                raise self.error(f"слишком длинный индекс (больше {MAX_PARTS} компонент)", count_start)
        else:
            value, start = self.integer()
            count = 1
        if value < 1:
            raise self.error("компоненты индекса должны быть >= 1", start)
        parts.extend([value] * count)
        if len(parts) > MAX_PARTS:
            raise self.error(f"слишком длинный индекс (больше {MAX_PARTS} компонент)", start)

    def index(self) -> MultiIndex:
        parts: List[int] = []
        if self.peek() in (')', ';'):
            return MultiIndex(())
        self.item(parts)
        while self.accept(','):
            self.item(parts)
        return MultiIndex(tuple(parts))

    def truncation(self) -> int:
        self.expect(';')
        return self.keyword_value('n')

    def finish(self) -> None:
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error(f"лишние символы после выражения: {self.text[self.pos:]!r}")

    def expression(self) -> Expression:
        kind, start = self.word()
        if kind not in KINDS:
            raise self.error(f"неизвестный вид выражения '{kind}', допустимы: {', '.join(KINDS)}", start)
        self.expect('(')
        if kind == 'G':
            n = self.keyword_value('n')
            self.expect(',')
            p = self.keyword_value('p')
            self.expect(',')
            q = self.keyword_value('q')
            result = Expression('G', g=GSpec(n, p, q))
        elif kind in HARMONIC_KINDS:
            s, s_start = self.integer()
            if s < 1:
                raise self.error("порядок s должен быть >= 1", s_start)
            result = Expression('harmonic', index=MultiIndex((s,)), n=self.truncation())
        elif kind in FINITE_KINDS:
            idx = self.index()
            result = Expression(kind, index=idx, n=self.truncation())
        else:
            result = Expression(kind, index=self.index())
        self.expect(')')
        self.finish()
        return result


def parse_expression(text: str) -> Expression:
    """Разбор выражения; ExpressionParseError содержит позицию ошибки"""
    return _Parser(text).expression()


def parse_index_text(text: str) -> MultiIndex:
    """Разбор индекса вида "(3,{2}^2)" или "3,{2}^2" """
    parser = _Parser(text)
    bracketed = parser.accept('(')
    idx = parser.index()
    if bracketed:
        parser.expect(')')
    parser.finish()
    return idx


def canonicalize(text: str) -> str:
    return parse_expression(text).canonical()


@log_function_calls(LogCategory.NUMERICS)
def evaluate_expression(expr: Expression, cfg: PrecisionConfig) -> ValueWithError:
    """Значение выражения; конечные суммы до EXACT_LIMIT считаются точно"""
    if expr.kind == 'zeta':
        return mzv(expr.index, cfg)
    if expr.kind == 'zetastar':
        return mzsv(expr.index, cfg)
    if expr.kind == 'G':
        return g_direct(expr.g, cfg)
    if expr.n < 0:
        raise DomainError(f"Верхняя граница n должна быть >= 0, получено {expr.n}")
    if expr.kind == 'harmonic':
        s = expr.index.parts[0]
        if expr.n > EXACT_LIMIT:
            return finite_sum_fixed(expr.index, expr.n, False, cfg)
        return ValueWithError.exact(gen_harmonic(expr.n, s), cfg)
    finite = finite_mzv if expr.kind == 'finite_zeta' else finite_mzsv
    value = finite(expr.index, expr.n, cfg)
    if isinstance(value, ValueWithError):
        return value
    return ValueWithError.exact(value, cfg)
