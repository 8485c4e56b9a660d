#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Numerics - Арифметика повышенной точности

Содержит:
- PrecisionConfig: рабочая точность, обрезка рядов, экстраполяция, уровень квадратуры
- ValueWithError: значение mpf с неотрицательной оценкой абсолютной ошибки
- bernoulli / binomial: точная комбинаторика (fractions.Fraction, int)
- riemann_zeta: ζ(s) в целых точках через формулу Эйлера-Маклорена
- вспомогательные функции фиксированной точки для ядер рядов

Контексты mpmath создаются по одному на число цифр и после создания
не изменяются, поэтому значения можно передавать между потоками.
"""

import functools
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Union

import mpmath

from modules.errors import ConfigurationError, DomainError
from modules.loguru_logger import LogCategory, debug

# Защитные десятичные цифры поверх рабочей точности
GUARD_DIGITS = 10

Number = Union[int, Fraction, "mpmath.mpf"]


@dataclass(frozen=True)
class PrecisionConfig:
    """Настройки точности одного вычисления"""
    digits: int = 30
    cutoff: int = 100000
    extrapolate: bool = True
    quad_level: int = 10

    def __post_init__(self):
        if not isinstance(self.digits, int) or self.digits < 15:
            raise ConfigurationError(f"digits должно быть целым >= 15, получено {self.digits!r}")
        if not isinstance(self.cutoff, int) or self.cutoff < 100:
            raise ConfigurationError(f"cutoff должно быть целым >= 100, получено {self.cutoff!r}")
        if not isinstance(self.quad_level, int) or self.quad_level < 3:
            raise ConfigurationError(f"quad_level должно быть целым >= 3, получено {self.quad_level!r}")

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> "PrecisionConfig":
        """Создание из секции precision файла config.yaml"""
        try:
            return cls(
                digits=int(data.get('digits', 30)),
                cutoff=int(data.get('cutoff', 100000)),
                extrapolate=bool(data.get('extrapolate', True)),
                quad_level=int(data.get('quad_level', 10)),
            )
        except (TypeError, ValueError) as e:
            raise ConfigurationError(f"Некорректная секция precision: {e}") from e

    @property
    def ctx(self) -> "mpmath.MPContext":
        return working_context(self.digits)

    def eps(self):
        """Единица последнего значащего разряда рабочей точности"""
        return self.ctx.mpf(10) ** (-self.digits)

    def to_dict(self) -> Dict[str, Any]:
        return {'digits': self.digits, 'cutoff': self.cutoff,
                'extrapolate': self.extrapolate, 'quad_level': self.quad_level}


_contexts: Dict[int, "mpmath.MPContext"] = {}
_contexts_lock = threading.Lock()


def working_context(digits: int) -> "mpmath.MPContext":
    """Контекст mpmath на digits значащих цифр (плюс защитные)"""
    ctx = _contexts.get(digits)
    if ctx is None:
        with _contexts_lock:
            ctx = _contexts.get(digits)
            if ctx is None:
                ctx = mpmath.MPContext()
                ctx.dps = digits + GUARD_DIGITS
                _contexts[digits] = ctx
    return ctx


def _to_mpf(ctx, x: Number):
    if isinstance(x, Fraction):
        return ctx.mpf(x.numerator) / x.denominator
    return ctx.mpf(x)


@dataclass(frozen=True)
class ValueWithError:
    """Значение повышенной точности с оценкой абсолютной ошибки"""
    value: Any
    err: Any

    def __post_init__(self):
        ctx = self.value.context
        if not ctx.isfinite(self.err) or self.err < 0:
            raise ValueError(f"Оценка ошибки должна быть конечной и неотрицательной: {self.err}")

    @classmethod
    def exact(cls, x: Number, cfg: PrecisionConfig) -> "ValueWithError":
        """Точное значение (нулевая ошибка, кроме округления при переводе в mpf)"""
        ctx = cfg.ctx
        value = _to_mpf(ctx, x)
        err = ctx.zero if isinstance(x, int) else abs(value) * ctx.eps
        return cls(value, err)

    @property
    def ctx(self):
        return self.value.context

    def _coerce(self, other) -> "ValueWithError":
        if isinstance(other, ValueWithError):
            return other
        ctx = self.ctx
        return ValueWithError(_to_mpf(ctx, other), ctx.zero)

    def __add__(self, other):
        other = self._coerce(other)
        return ValueWithError(self.value + other.value, self.err + other.err)

    __radd__ = __add__

    def __neg__(self):
        return ValueWithError(-self.value, self.err)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        # Распространение ошибки первого порядка плюс произведение ошибок
        other = self._coerce(other)
        value = self.value * other.value
        err = abs(self.value) * other.err + abs(other.value) * self.err + self.err * other.err
        return ValueWithError(value, err)

    __rmul__ = __mul__

    def to_json_dict(self, digits: int) -> Dict[str, str]:
        """Сериализация {"value": "...", "err": "..."} десятичными строками"""
        ctx = self.ctx
        return {
            'value': ctx.nstr(self.value, digits, strip_zeros=False),
            'err': ctx.nstr(self.err, 6),
        }

    def __repr__(self) -> str:
        ctx = self.ctx
        return f"ValueWithError({ctx.nstr(self.value, 20)} ± {ctx.nstr(self.err, 3)})"


def vsum(terms: Iterable[ValueWithError], cfg: PrecisionConfig) -> ValueWithError:
    """Сумма значений с аддитивным накоплением ошибок; пустая сумма равна 0"""
    total = ValueWithError.exact(0, cfg)
    for term in terms:
        total = total + term
    return total


# ---------------------------------------------------------------------------
# Точная комбинаторика
# ---------------------------------------------------------------------------

_bernoulli_table: List[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def bernoulli(n: int) -> Fraction:
    """
    Число Бернулли B_n (соглашение B_1 = -1/2)

    Вычисляется рекуррентно: sum_{k=0}^{n} C(n+1, k) B_k = 0 при n >= 1.
    """
    if n < 0:
        raise DomainError(f"bernoulli: n должно быть >= 0, получено {n}")
    if n < len(_bernoulli_table):
        return _bernoulli_table[n]
    with _bernoulli_lock:
        table = _bernoulli_table
        for m in range(len(table), n + 1):
            acc = Fraction(0)
            for k in range(m):
                acc += math.comb(m + 1, k) * table[k]
            table.append(-acc / (m + 1))
        return table[n]


def binomial(n: int, k: int) -> int:
    """Биномиальный коэффициент C(n, k); 0 вне диапазона 0 <= k <= n"""
    if n < 0:
        raise DomainError(f"binomial: n должно быть >= 0, получено {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


# ---------------------------------------------------------------------------
# Константы
# ---------------------------------------------------------------------------

_pi_cache: Dict[int, Any] = {}
_pi_lock = threading.Lock()


def pi_value(digits: int):
    """π по алгоритму Гаусса-Лежандра (AGM), кэш по числу цифр"""
    cached = _pi_cache.get(digits)
    if cached is not None:
        return cached
    with _pi_lock:
        cached = _pi_cache.get(digits)
        if cached is not None:
            return cached
        ctx = working_context(digits)
        a = ctx.one
        b = ctx.one / ctx.sqrt(2)
        t = ctx.mpf(1) / 4
        p = ctx.one
        tiny = ctx.mpf(10) ** (-(digits + GUARD_DIGITS))
        while abs(a - b) > tiny:
            a_next = (a + b) / 2
            b = ctx.sqrt(a * b)
            t -= p * (a - a_next) ** 2
            p *= 2
            a = a_next
        value = (a + b) ** 2 / (4 * t)
        _pi_cache[digits] = value
        debug(f"π вычислено для {digits} цифр", LogCategory.NUMERICS)
        return value


# ---------------------------------------------------------------------------
# ζ(s) в целых точках
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=512)
def _zeta_em(s: int, digits: int) -> ValueWithError:
    ctx = working_context(digits)
    target = ctx.mpf(10) ** (-(digits + 3))
    n_cut = max(10, digits)
    while True:
        N = ctx.mpf(n_cut)
        head = ctx.fsum(ctx.mpf(k) ** (-s) for k in range(1, n_cut))
        total = head + N ** (1 - s) / (s - 1) + N ** (-s) / 2
        # Поправки Бернулли: B_2j/(2j)! * s(s+1)...(s+2j-2) * N^(-s-2j+1)
        rising = Fraction(s)
        factorial = 2
        remainder = None
        for j in range(1, 4 * n_cut):
            b2j = bernoulli(2 * j)
            coeff = b2j * rising / factorial
            term = _to_mpf(ctx, coeff) * N ** (-s - 2 * j + 1)
            if abs(term) < target:
                remainder = abs(term)
                break
            total += term
            rising *= (s + 2 * j - 1) * (s + 2 * j)
            factorial *= (2 * j + 1) * (2 * j + 2)
        if remainder is not None:
            break
        # Асимптотический ряд начал расходиться - увеличиваем N
        n_cut *= 2

    rounding = ctx.mpf(10) ** (-(digits + GUARD_DIGITS - 2)) * max(ctx.one, abs(total))
    return ValueWithError(total, remainder + rounding)


def riemann_zeta(s: int, cfg: PrecisionConfig) -> ValueWithError:
    """ζ(s) для целого s >= 2 с оценкой ошибки ниже 10^(-digits)"""
    if not isinstance(s, int) or s < 2:
        raise DomainError(f"riemann_zeta: требуется целое s >= 2, получено {s!r}")
    return _zeta_em(s, cfg.digits)


# ---------------------------------------------------------------------------
# Фиксированная точка для ядер рядов
# ---------------------------------------------------------------------------

def fixed_precision(digits: int, operations: int) -> int:
    """Число двоичных разрядов дробной части: рабочие цифры плюс запас на округления"""
    return int(math.ceil(digits * math.log2(10))) + 24 + max(1, operations).bit_length()


def from_fixed(x: int, prec: int, cfg: PrecisionConfig):
    """Перевод целого x * 2^(-prec) в mpf рабочего контекста"""
    ctx = cfg.ctx
    return ctx.ldexp(ctx.mpf(x), -prec)


def fixed_rounding_error(operations: int, prec: int, cfg: PrecisionConfig):
    """Граница ошибки округления: по одной единице младшего разряда на операцию"""
    ctx = cfg.ctx
    return ctx.ldexp(ctx.mpf(operations + 1), -prec)
