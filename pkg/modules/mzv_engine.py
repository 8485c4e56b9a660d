#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
MZV Engine - Бесконечные ряды ζ(α), ζ*(α) и коэффициенты произведения Π_{n>=k}(1 - x²/n²)^(-1)

Все ряды суммируются префиксной динамикой в фиксированной точке до N и 2N
(N = cfg.cutoff). Хвост за N раскладывается точно:
    ζ(α) - ζ_N(α) = Σ_{j<r} ζ_N(α_1..α_j) · ζ^{>N}(α_{j+1}..α_r),
где ζ_N-множители уже лежат в накопителях прохода, а вложенные хвосты
ζ^{>N}(γ) = c(γ) N^(-(|γ|-d)) + O(N^(-(|γ|-d)-1)) не содержат степеней log N.
Главный член добавляется к обеим частичным суммам, после чего остаток
убывает как N^(-α_r) (с полилогарифмическим множителем) и снимается
экстраполяцией Ричардсона по двум обрезкам. Ошибка: 2 * |S_2N - S_N|,
пересчитанная по той же степенной модели.
"""

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from modules.errors import DivergentSeriesError, DomainError
from modules.finite_sums import prefix_sweep_states, sweep_rounding_bound
from modules.indices import MultiIndex, star_expansion
from modules.loguru_logger import LogCategory, debug, log_performance_decorator
from modules.numerics import (PrecisionConfig, ValueWithError, fixed_precision,
                              from_fixed, vsum)

MAX_DEPTH = 12
MAX_WEIGHT = 16
SAFETY_FACTOR = 2


@dataclass(frozen=True)
class SeriesEvaluation:
    """Результат суммирования ряда на двух обрезках"""
    index: Optional[MultiIndex]
    cutoff_used: int
    raw: ValueWithError
    extrapolated: ValueWithError
    truncated: ValueWithError

    def result(self, cfg: PrecisionConfig) -> ValueWithError:
        return self.extrapolated if cfg.extrapolate else self.truncated


def check_index(idx: MultiIndex) -> None:
    """Проверка адмиссибельности и пределов глубины/веса"""
    if idx.is_empty:
        return
    if not idx.is_admissible:
        raise DivergentSeriesError(idx.parts)
    if idx.depth > MAX_DEPTH:
        raise DomainError(f"Глубина {idx.depth} превышает предел {MAX_DEPTH}")
    if idx.weight > MAX_WEIGHT:
        raise DomainError(f"Вес {idx.weight} превышает предел {MAX_WEIGHT}")


def dual_cutoff(s_n, s_2n, beta: int, rounding, cfg: PrecisionConfig,
                idx: Optional[MultiIndex], cutoff: int) -> SeriesEvaluation:
    """
    Сборка SeriesEvaluation из частичных сумм S_N и S_2N.

    По модели хвост за N равен Δ * 2^β / (2^β - 1), за 2N - Δ / (2^β - 1),
    где Δ = S_2N - S_N.
    """
    ctx = cfg.ctx
    delta = s_2n - s_n
    denom = ctx.mpf(2) ** beta - 1
    tail_2n = abs(delta) / denom
    raw = ValueWithError(s_n, SAFETY_FACTOR * (abs(delta) + tail_2n) + rounding)
    extrapolated = ValueWithError(s_2n + delta / denom, SAFETY_FACTOR * tail_2n + rounding)
    truncated = ValueWithError(s_2n, SAFETY_FACTOR * tail_2n + rounding)
    return SeriesEvaluation(idx, cutoff, raw, extrapolated, truncated)


@functools.lru_cache(maxsize=4096)
def tail_leading_coeff(parts: Tuple[int, ...]) -> Fraction:
    """
    c(γ) = ∫_{1<x_1<...<x_d<∞} Π x_i^(-γ_i) dx - главный коэффициент вложенного
    хвоста ζ^{>N}(γ) (и ζ*^{>N}(γ)) при N -> ∞.

    Промежуточные функции верхнего предела y хранятся как {(e, m): c}
    для слагаемых c * y^(-e) (log y)^m.
    """
    if not parts or parts[-1] < 2:
        raise DivergentSeriesError(parts)
    terms: Dict[Tuple[int, int], Fraction] = {(0, 0): Fraction(1)}
    for gamma in parts[:-1]:
        integrated: Dict[Tuple[int, int], Fraction] = {}
        for (e, m), c in terms.items():
            e += gamma
            if e == 1:
                key = (0, m + 1)
                integrated[key] = integrated.get(key, Fraction(0)) + c / (m + 1)
                continue
            a = Fraction(1 - e)
            # ∫_1^y x^(a-1) L^m dx = y^a Σ_i (-1)^i m!/(m-i)! L^(m-i) / a^(i+1) - (-1)^m m!/a^(m+1)
            for i in range(m + 1):
                key = (e - 1, m - i)
                integrated[key] = integrated.get(key, Fraction(0)) + (
                    c * (-1) ** i * math.factorial(m) / (math.factorial(m - i) * a ** (i + 1)))
            integrated[(0, 0)] = integrated.get((0, 0), Fraction(0)) - (
                c * (-1) ** m * math.factorial(m) / a ** (m + 1))
        terms = {key: c for key, c in integrated.items() if c != 0}

    total = Fraction(0)
    for (e, m), c in terms.items():
        e += parts[-1]
        if e < 2:
            raise DivergentSeriesError(parts)
        # ∫_1^∞ x^(-e) (log x)^m dx = m! / (e-1)^(m+1)
        total += c * math.factorial(m) / Fraction(e - 1) ** (m + 1)
    return total


def tail_corrected(state: Sequence[int], parts: Sequence[int], cutoff: int, prec: int,
                   cfg: PrecisionConfig):
    """Частичная сумма из состояния прохода плюс главные члены всех вложенных хвостов"""
    ctx = cfg.ctx
    depth = len(parts)
    total = from_fixed(state[depth], prec, cfg)
    for j in range(depth):
        rest = tuple(parts[j:])
        order = sum(rest) - len(rest)
        coeff = tail_leading_coeff(rest)
        total += from_fixed(state[j], prec, cfg) * (ctx.mpf(coeff.numerator) / coeff.denominator) \
            / ctx.mpf(cutoff) ** order
    return total


@functools.lru_cache(maxsize=8192)
def _evaluate(parts: Tuple[int, ...], star: bool, cfg: PrecisionConfig) -> SeriesEvaluation:
    idx = MultiIndex(parts)
    ctx = cfg.ctx
    if idx.is_empty:
        one = ValueWithError(ctx.one, ctx.zero)
        return SeriesEvaluation(idx, 0, one, one, one)

    n = cfg.cutoff
    operations = 2 * n * idx.depth
    prec = fixed_precision(cfg.digits, operations)
    state_n, state_2n = prefix_sweep_states(parts, star, [n, 2 * n], prec)
    rounding = sweep_rounding_bound(max(state_2n), operations, prec, cfg)
    evaluation = dual_cutoff(tail_corrected(state_n, parts, n, prec, cfg),
                             tail_corrected(state_2n, parts, 2 * n, prec, cfg),
                             parts[-1], rounding, cfg, idx, n)
    debug(f"{'ζ*' if star else 'ζ'}{idx} = {evaluation.extrapolated!r}", LogCategory.SERIES)
    return evaluation


@log_performance_decorator(LogCategory.PERFORMANCE)
def evaluate_series(idx: MultiIndex, star: bool, cfg: PrecisionConfig) -> SeriesEvaluation:
    """Полное описание суммирования ζ(α) или ζ*(α) (с кэшем на процесс)"""
    check_index(idx)
    return _evaluate(idx.parts, star, cfg)


def mzv(idx: MultiIndex, cfg: PrecisionConfig) -> ValueWithError:
    """ζ(α_1, ..., α_r) с восходящим суммированием; ζ() = 1"""
    return evaluate_series(idx, False, cfg).result(cfg)


def mzsv(idx: MultiIndex, cfg: PrecisionConfig) -> ValueWithError:
    """ζ*(α_1, ..., α_r) - нестрогие неравенства; ζ*() = 1"""
    return evaluate_series(idx, True, cfg).result(cfg)


def mzsv_from_mzv(idx: MultiIndex, cfg: PrecisionConfig) -> ValueWithError:
    """Независимый оракул: ζ*(α) как сумма ζ по всем слияниям соседних компонент"""
    check_index(idx)
    return vsum((mzv(beta, cfg) for beta in star_expansion(idx)), cfg)


def _tail_coeff_fixed(k: int, m: int, limits: Sequence[int], prec: int) -> List[int]:
    # Коэффициенты Π_{n=k}^{L}(1 - x²/n²)^(-1) до x^(2m); множитель раскладывается
    # в геометрический ряд, обрезанный на порядке m
    one = 1 << prec
    coeffs = [one] + [0] * m
    out: List[int] = []
    limits = sorted(limits)
    cp_iter = iter(limits)
    next_cp = next(cp_iter)
    for n in range(k, limits[-1] + 1):
        w = one // (n * n)
        for i in range(1, m + 1):
            coeffs[i] += (coeffs[i - 1] * w) >> prec
        if n == next_cp:
            out.append(coeffs[m])
            next_cp = next(cp_iter, None)
    return out


@functools.lru_cache(maxsize=1024)
def homogeneous_tail_coeff(k: int, m: int, cfg: PrecisionConfig) -> ValueWithError:
    """
    c_m(k) - коэффициент при x^(2m) в Π_{n>=k}(1 - x²/n²)^(-1),
    то есть Σ_{k <= n_1 <= ... <= n_m} Π n_i^(-2).
    """
    if k < 1 or m < 0:
        raise DomainError(f"homogeneous_tail_coeff: требуется k >= 1, m >= 0, получено k={k}, m={m}")
    ctx = cfg.ctx
    if m == 0:
        return ValueWithError(ctx.one, ctx.zero)

    upper = max(cfg.cutoff, k)
    operations = 2 * upper * m
    prec = fixed_precision(cfg.digits, operations)
    c_n, c_2n = _tail_coeff_fixed(k, m, [upper, 2 * upper], prec)
    rounding = sweep_rounding_bound(c_2n, operations, prec, cfg)
    evaluation = dual_cutoff(from_fixed(c_n, prec, cfg), from_fixed(c_2n, prec, cfg), 1,
                             rounding, cfg, MultiIndex((2,) * m), upper)
    return evaluation.result(cfg)


def _head2_fixed(r: int, m: int, upper: int, prec: int) -> int:
    # Нисходящий проход: после учёта множителя n коэффициент при x^(2m)
    # равен c_m(n) с обрезкой на upper
    one = 1 << prec
    coeffs = [one] + [0] * m
    total = 0
    head = r + 2
    for n in range(upper, 0, -1):
        w = one // (n * n)
        for i in range(1, m + 1):
            coeffs[i] += (coeffs[i - 1] * w) >> prec
        total += (coeffs[m] * (one // n ** head)) >> prec
    return total


@log_performance_decorator(LogCategory.PERFORMANCE)
def zetastar_head2(r: int, m: int, cfg: PrecisionConfig) -> ValueWithError:
    """
    ζ*(r+2, {2}^m) через производящую функцию Σ_k k^(-(r+2)) Π_{n>=k}(1 - x²/n²)^(-1):
    Σ_k k^(-(r+2)) c_m(k).
    """
    if r < 0 or m < 0:
        raise DomainError(f"zetastar_head2: требуется r, m >= 0, получено r={r}, m={m}")
    check_index(MultiIndex((r + 2,) + (2,) * m))
    return _zetastar_head2(r, m, cfg)


@functools.lru_cache(maxsize=256)
def _zetastar_head2(r: int, m: int, cfg: PrecisionConfig) -> ValueWithError:
    n = cfg.cutoff
    operations = 3 * n * (m + 1)
    prec = fixed_precision(cfg.digits, operations)
    s_n = _head2_fixed(r, m, n, prec)
    s_2n = _head2_fixed(r, m, 2 * n, prec)
    rounding = sweep_rounding_bound(s_2n, operations, prec, cfg)
    beta = 1 if m > 0 else r + 1
    idx = MultiIndex((r + 2,) + (2,) * m)
    evaluation = dual_cutoff(from_fixed(s_n, prec, cfg), from_fixed(s_2n, prec, cfg), beta,
                             rounding, cfg, idx, n)
    return evaluation.result(cfg)
