#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Quadrature - Интегралы по симплексу E_2 = {0 < t_1 < t_2 < 1}

Подынтегральные функции - мономы от пяти логарифмических множителей
    F1 = log 1/(1-t_1)      F2 = log 1/(1-t_2)      F3 = log t_2/t_1
    F4 = log (1-t_1)/(1-t_2)                          F5 = log 1/t_2
с мерой dt_1 dt_2 / ((1-t_1) t_2).

Замена t_1 = s t_2 переводит E_2 в единичный квадрат с мерой
ds dt_2 / (1 - s t_2), при этом F3 = log 1/s. По каждой переменной
используется правило tanh-sinh в float64; узлы уровня L-1 и L-2 являются
подмножествами узлов уровня L, поэтому три уровня считаются за один проход.
"""

import functools
import math
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from typing import Dict, Iterable, List, Tuple

import numpy as np

from modules.errors import DomainError, QuadratureNonConvergenceError
from modules.loguru_logger import LogCategory, debug, log_performance_decorator
from modules.numerics import PrecisionConfig, ValueWithError, binomial

MAX_TOTAL_EXPONENT = 12
# Полуширина отрезка в переменной t: exp(π sinh 6) ~ 1e275, без переполнения
T_MAX = 6.0
SAFETY_FACTOR = 2
ROUNDING_EPS = 64 * np.finfo(np.float64).eps
# Порог относительной разности уровней, ниже которого рост не считается расходимостью
STALL_THRESHOLD = 1e-11


class LogFactor(IntEnum):
    """Канонические логарифмические множители"""
    F1 = 1
    F2 = 2
    F3 = 3
    F4 = 4
    F5 = 5


@dataclass(frozen=True)
class LogMonomial:
    """coeff * F1^e1 F2^e2 F3^e3 F4^e4 F5^e5"""
    coeff: Fraction
    exponents: Tuple[int, int, int, int, int]

    def __post_init__(self):
        object.__setattr__(self, 'coeff', Fraction(self.coeff))
        object.__setattr__(self, 'exponents', tuple(int(e) for e in self.exponents))
        if self.coeff == 0:
            raise DomainError("Коэффициент монома не может быть нулевым")
        if len(self.exponents) != 5 or any(e < 0 for e in self.exponents):
            raise DomainError(f"Нужны пять неотрицательных показателей: {self.exponents}")
        if sum(self.exponents) > MAX_TOTAL_EXPONENT:
            raise DomainError(f"Суммарная степень {sum(self.exponents)} больше {MAX_TOTAL_EXPONENT}")

    @classmethod
    def of(cls, coeff=1, e1: int = 0, e2: int = 0, e3: int = 0, e4: int = 0, e5: int = 0) -> "LogMonomial":
        return cls(Fraction(coeff), (e1, e2, e3, e4, e5))

    def __str__(self) -> str:
        factors = [f"F{i + 1}^{e}" if e > 1 else f"F{i + 1}"
                   for i, e in enumerate(self.exponents) if e]
        return f"{self.coeff}*" + "*".join(factors) if factors else str(self.coeff)


def _collect(terms: Iterable[Tuple[Tuple[int, ...], Fraction]]) -> List[LogMonomial]:
    # Приведение подобных; нулевые коэффициенты выбрасываются
    acc: Dict[Tuple[int, ...], Fraction] = {}
    for exps, coeff in terms:
        acc[exps] = acc.get(exps, Fraction(0)) + coeff
    return [LogMonomial(c, e) for e, c in sorted(acc.items()) if c != 0]


def expand_log_power(base_a: LogFactor, base_b: LogFactor, sign: int, n: int) -> List[LogMonomial]:
    """Биномиальное разложение (F_a + sign * F_b)^n в мономы"""
    if sign not in (1, -1):
        raise DomainError(f"sign должен быть ±1, получено {sign}")
    if n < 0 or n > MAX_TOTAL_EXPONENT:
        raise DomainError(f"Степень {n} вне диапазона 0..{MAX_TOTAL_EXPONENT}")
    terms = []
    for j in range(n + 1):
        exps = [0] * 5
        exps[int(base_a) - 1] += n - j
        exps[int(base_b) - 1] += j
        terms.append((tuple(exps), Fraction(binomial(n, j) * sign ** j)))
    return _collect(terms)


def multiply(left: List[LogMonomial], right: List[LogMonomial]) -> List[LogMonomial]:
    """Произведение двух сумм мономов"""
    return _collect(
        (tuple(a + b for a, b in zip(x.exponents, y.exponents)), x.coeff * y.coeff)
        for x in left for y in right
    )


def scale(terms: List[LogMonomial], factor) -> List[LogMonomial]:
    return _collect((t.exponents, t.coeff * Fraction(factor)) for t in terms)


# ---------------------------------------------------------------------------
# Узлы tanh-sinh
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TanhSinhGrid:
    """Неизменяемая таблица узлов уровня level на (0, 1) и двумерные множители"""
    level: int
    x: np.ndarray
    xc: np.ndarray
    w: np.ndarray
    # двумерные массивы по (s, t_2)
    weight2d: np.ndarray
    f1: np.ndarray
    f4: np.ndarray
    # одномерные множители
    f2: np.ndarray
    f3: np.ndarray
    f5: np.ndarray


def _nodes_1d(level: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    h = 2.0 ** (3 - level)
    half = int(round(T_MAX / h))
    t = np.arange(-half, half + 1, dtype=np.float64) * h
    u = math.pi * np.sinh(t)
    # x и 1-x считаются раздельно, чтобы не терять точность у концов
    x = 1.0 / (1.0 + np.exp(-u))
    xc = 1.0 / (1.0 + np.exp(u))
    w = h * math.pi * np.cosh(t) * x * xc
    return x, xc, w


@functools.lru_cache(maxsize=2)
def tanh_sinh_grid(level: int) -> TanhSinhGrid:
    """Таблица узлов уровня level (кэшируется, только чтение)"""
    x, xc, w = _nodes_1d(level)
    s, sc = x[:, None], xc[:, None]
    t, tc = x[None, :], xc[None, :]
    with np.errstate(under='ignore'):
        denom = sc + s * tc                       # 1 - s t_2 без сокращения
        weight2d = np.outer(w, w) / denom
        f1 = -np.log(denom)
        f4 = np.log(s + sc / tc)
    grid = TanhSinhGrid(
        level=level, x=x, xc=xc, w=w,
        weight2d=weight2d, f1=f1, f4=f4,
        f2=-np.log(xc), f3=-np.log(x), f5=-np.log(x),
    )
    for arr in (grid.x, grid.xc, grid.w, grid.weight2d, grid.f1, grid.f4, grid.f2, grid.f3, grid.f5):
        arr.setflags(write=False)
    debug(f"Построена сетка tanh-sinh уровня {level}: {x.size}x{x.size} узлов", LogCategory.QUADRATURE)
    return grid


def _monomial_levels(grid: TanhSinhGrid, exps: Tuple[int, ...]) -> Tuple[float, float, float]:
    # Интеграл монома без коэффициента на уровнях L, L-1, L-2
    e1, e2, e3, e4, e5 = exps
    with np.errstate(under='ignore'):
        body = grid.weight2d
        if e1:
            body = body * grid.f1 ** e1
        if e4:
            body = body * grid.f4 ** e4
        col = grid.f3 ** e3                       # переменная s
        row = grid.f2 ** e2 * grid.f5 ** e5       # переменная t_2
        fine = float(col @ body @ row)
        mid = 4.0 * float(col[::2] @ body[::2, ::2] @ row[::2])
        coarse = 16.0 * float(col[::4] @ body[::4, ::4] @ row[::4])
    return fine, mid, coarse


@log_performance_decorator(LogCategory.PERFORMANCE)
def integrate_monomials(terms: List[LogMonomial], cfg: PrecisionConfig) -> ValueWithError:
    """
    Σ coeff * ∫_{E_2} Π F_i^{e_i} dt_1 dt_2/((1-t_1) t_2)

    Ошибка: 2 * |I_L - I_{L-1}| для каждого монома плюс граница округления float64;
    все мономы неотрицательны, поэтому ошибки складываются с весами |coeff|.
    """
    ctx = cfg.ctx
    grid = tanh_sinh_grid(cfg.quad_level)
    value = ctx.zero
    err = ctx.zero
    for term in terms:
        fine, mid, coarse = _monomial_levels(grid, term.exponents)
        d_fine = abs(fine - mid)
        d_coarse = abs(mid - coarse)
        if d_fine > d_coarse and d_fine > STALL_THRESHOLD * abs(fine):
            raise QuadratureNonConvergenceError(
                f"tanh-sinh не сходится для {term}: |I_L - I_(L-1)| = {d_fine:.3e} > "
                f"|I_(L-1) - I_(L-2)| = {d_coarse:.3e} (уровень {cfg.quad_level})")
        coeff = ctx.mpf(term.coeff.numerator) / term.coeff.denominator
        value += coeff * ctx.mpf(fine)
        err += abs(coeff) * ctx.mpf(SAFETY_FACTOR * d_fine + ROUNDING_EPS * abs(fine))
    debug(f"Квадратура {len(terms)} мономов, уровень {cfg.quad_level}", LogCategory.QUADRATURE)
    return ValueWithError(value, err)


# ---------------------------------------------------------------------------
# Семейства подынтегральных выражений
# ---------------------------------------------------------------------------

def g_integrand(n: int, p: int, q: int) -> List[LogMonomial]:
    """F1^p F2^q F3^n / (p! q! n!) - интегральное представление G_{n+2}(p, q)"""
    coeff = Fraction(1, math.factorial(p) * math.factorial(q) * math.factorial(n))
    return [LogMonomial.of(coeff, e1=p, e2=q, e3=n)]


def head2_integrand(r: int, n: int) -> List[LogMonomial]:
    """F4^r (F1 - F3)^n / (r! n!) - ζ*(r+2, {2}^m) при n = 2m и 0 при нечётном n"""
    inner = expand_log_power(LogFactor.F1, LogFactor.F3, -1, n)
    return scale(multiply([LogMonomial.of(1, e4=r)], inner),
                 Fraction(1, math.factorial(r) * math.factorial(n)))


def composition_sum_integrand(p: int, q: int, m: int, n: int) -> List[LogMonomial]:
    """
    F1^p F3^(m-q) F4^(q-1) F5^(n-1) / (p! (q-1)! (m-q)! (n-1)!) -
    представление Σ_{|α|=m} ζ({1}^p, α_1, ..., α_q + n)
    """
    if q < 1 or n < 1 or m < q:
        raise DomainError(f"Требуется q >= 1, n >= 1, m >= q; получено q={q}, m={m}, n={n}")
    coeff = Fraction(1, math.factorial(p) * math.factorial(q - 1)
                     * math.factorial(m - q) * math.factorial(n - 1))
    return [LogMonomial.of(coeff, e1=p, e3=m - q, e4=q - 1, e5=n - 1)]
