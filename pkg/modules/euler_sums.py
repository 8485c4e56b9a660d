#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Euler Sums - Суммы G_{n+2}(p, q) = Σ_{K>=1} ζ_{K-1}({1}^p) K^(-(n+2)) ζ*_K({1}^q)

Три независимых способа вычисления:
- g_direct: прямое суммирование одним проходом по K
- g_compositions: сумма ζ по композициям p+q+1
- g_quad: двойной интеграл по E_2

А также замкнутая форма G_2(p, q), формула отражения и интегральное
представление сумм ζ({1}^p, α_1, ..., α_q + n) по композициям α.
"""

import functools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from modules.errors import DomainError
from modules.indices import MultiIndex, compositions, index, ones
from modules.loguru_logger import LogCategory, debug, log_performance_decorator
from modules.mzv_engine import dual_cutoff, mzv
from modules.numerics import (PrecisionConfig, ValueWithError, binomial, fixed_precision,
                              fixed_rounding_error, from_fixed, riemann_zeta, vsum)
from modules.quadrature import composition_sum_integrand, g_integrand, integrate_monomials

# Предел p + q + n для квадратуры
MAX_QUAD_ORDER = 10

_GSPEC_RE = re.compile(r"^\s*G\(\s*n\s*=\s*(\d+)\s*,\s*p\s*=\s*(\d+)\s*,\s*q\s*=\s*(\d+)\s*\)\s*$")


@dataclass(frozen=True)
class GSpec:
    """Параметры суммы G_{n+2}(p, q)"""
    n: int
    p: int
    q: int

    def __post_init__(self):
        for name in ('n', 'p', 'q'):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise DomainError(f"GSpec.{name} должно быть целым >= 0, получено {value!r}")

    @classmethod
    def parse(cls, text: str) -> "GSpec":
        """Разбор канонической формы G(n=..,p=..,q=..)"""
        match = _GSPEC_RE.match(text)
        if not match:
            raise DomainError(f"Ожидалась форма G(n=<n>,p=<p>,q=<q>), получено {text!r}")
        return cls(*(int(g) for g in match.groups()))

    @property
    def weight(self) -> int:
        return self.n + self.p + self.q + 2

    def canonical(self) -> str:
        return f"G(n={self.n},p={self.p},q={self.q})"

    def __str__(self) -> str:
        return self.canonical()


# ---------------------------------------------------------------------------
# Прямое суммирование
# ---------------------------------------------------------------------------

def _g_sweep_fixed(n: int, p: int, q: int, checkpoints: Sequence[int],
                   prec: int) -> List[Tuple[int, List[int], List[int]]]:
    """
    Один проход K = 1..max(checkpoints).

    strict[j] = ζ_K({1}^j) обновляется после слагаемого (нисходящие уровни),
    поэтому в слагаемом стоит ζ_{K-1}({1}^p); star[j] = ζ*_K({1}^j) - до слагаемого.
    В каждой контрольной точке возвращается (частичная сумма, strict, star).
    """
    one = 1 << prec
    strict = [one] + [0] * p
    star = [one] + [0] * q
    head = n + 2
    total = 0
    out: List[Tuple[int, List[int], List[int]]] = []
    checkpoints = sorted(checkpoints)
    cp_iter = iter(checkpoints)
    next_cp = next(cp_iter)
    for k in range(1, checkpoints[-1] + 1):
        w = one // k
        for j in range(1, q + 1):
            star[j] += (star[j - 1] * w) >> prec
        product = (strict[p] * star[q]) >> prec
        total += (product * (one // k ** head)) >> prec
        for j in range(p, 0, -1):
            strict[j] += (strict[j - 1] * w) >> prec
        if k == next_cp:
            out.append((total, list(strict), list(star)))
            next_cp = next(cp_iter, None)
    return out


@functools.lru_cache(maxsize=256)
def g_tail_weight(i: int, j: int, beta: int) -> Fraction:
    """
    ∫_1^∞ x^(-(β+1)) (log x)^(i+j) / (i! j!) dx = (i+j)! / (i! j! β^(i+j+1)):
    главный коэффициент хвоста при i строгих и j нестрогих индексах за обрезкой
    """
    return Fraction(math.factorial(i + j), math.factorial(i) * math.factorial(j) * beta ** (i + j + 1))


def _g_corrected(total: int, strict: Sequence[int], star: Sequence[int], n: int,
                 cutoff: int, prec: int, cfg: PrecisionConfig):
    # Хвост K > N: ζ_{K-1}({1}^p) и ζ*_K({1}^q) расщепляются по числу индексов <= N
    ctx = cfg.ctx
    p, q = len(strict) - 1, len(star) - 1
    beta = n + 1
    correction = ctx.zero
    for a in range(p + 1):
        for b in range(q + 1):
            weight = g_tail_weight(p - a, q - b, beta)
            correction += from_fixed(strict[a], prec, cfg) * from_fixed(star[b], prec, cfg) \
                * (ctx.mpf(weight.numerator) / weight.denominator)
    return from_fixed(total, prec, cfg) + correction / ctx.mpf(cutoff) ** beta


@functools.lru_cache(maxsize=1024)
def _g_direct(n: int, p: int, q: int, cfg: PrecisionConfig) -> ValueWithError:
    cutoff = cfg.cutoff
    operations = 2 * cutoff * (p + q + 2)
    prec = fixed_precision(cfg.digits, operations)
    (total_n, strict_n, star_n), (total_2n, strict_2n, star_2n) = \
        _g_sweep_fixed(n, p, q, [cutoff, 2 * cutoff], prec)
    # накопители растут полилогарифмически; граница берётся по их максимуму
    magnitude = (max(strict_2n) >> prec) + (max(star_2n) >> prec) + (total_2n >> prec) + 2
    rounding = fixed_rounding_error(operations * magnitude * magnitude, prec, cfg)
    evaluation = dual_cutoff(_g_corrected(total_n, strict_n, star_n, n, cutoff, prec, cfg),
                             _g_corrected(total_2n, strict_2n, star_2n, n, 2 * cutoff, prec, cfg),
                             n + 2, rounding, cfg, None, cutoff)
    result = evaluation.result(cfg)
    debug(f"G(n={n},p={p},q={q}) прямым суммированием = {result!r}", LogCategory.SERIES)
    return result


@log_performance_decorator(LogCategory.PERFORMANCE)
def g_direct(spec: GSpec, cfg: PrecisionConfig) -> ValueWithError:
    """
    G_{n+2}(p, q) прямым суммированием: главный член хвоста добавляется
    к обеим частичным суммам, остаток O(N^(-(n+2))) снимается экстраполяцией
    """
    return _g_direct(spec.n, spec.p, spec.q, cfg)


# ---------------------------------------------------------------------------
# Представление через композиции
# ---------------------------------------------------------------------------

def composition_indices(spec: GSpec) -> List[Tuple[int, MultiIndex]]:
    """
    Пары (C(r-1, p), α') для r = p+1..p+q+1 и композиций α числа p+q+1 на r частей,
    где α' = (α_1, ..., α_{r-1}, α_r + n + 1).
    """
    total = spec.p + spec.q + 1
    result: List[Tuple[int, MultiIndex]] = []
    for r in range(spec.p + 1, total + 1):
        weight = binomial(r - 1, spec.p)
        for comp in compositions(total, r):
            parts = comp.parts
            result.append((weight, MultiIndex(parts[:-1] + (parts[-1] + spec.n + 1,))))
    return result


@log_performance_decorator(LogCategory.PERFORMANCE)
def g_compositions(spec: GSpec, cfg: PrecisionConfig) -> ValueWithError:
    """G_{n+2}(p, q) как взвешенная сумма ζ; ошибки слагаемых складываются"""
    terms = [weight * mzv(idx, cfg) for weight, idx in composition_indices(spec)]
    return vsum(terms, cfg)


def zetastar_ones(q: int, n: int, cfg: PrecisionConfig) -> ValueWithError:
    """ζ*({1}^q, n+2) через сумму по композициям (случай p = 0)"""
    return g_compositions(GSpec(n, 0, q), cfg)


# ---------------------------------------------------------------------------
# Квадратура
# ---------------------------------------------------------------------------

def g_quad(spec: GSpec, cfg: PrecisionConfig) -> ValueWithError:
    """G_{n+2}(p, q) = 1/(p! q! n!) ∫_{E_2} F1^p F2^q F3^n dt_1 dt_2/((1-t_1) t_2)"""
    if spec.n + spec.p + spec.q > MAX_QUAD_ORDER:
        raise DomainError(f"Квадратура поддерживает p + q + n <= {MAX_QUAD_ORDER}, получено {spec}")
    return integrate_monomials(g_integrand(spec.n, spec.p, spec.q), cfg)


# ---------------------------------------------------------------------------
# Замкнутые формы и тождества
# ---------------------------------------------------------------------------

def g2_closed(p: int, q: int) -> Tuple[int, int]:
    """G_2(p, q) = C(p+q+1, q) ζ(p+q+2): возвращает (C(p+q+1, q), p+q+2)"""
    if p < 0 or q < 0:
        raise DomainError(f"g2_closed: требуется p, q >= 0, получено p={p}, q={q}")
    return binomial(p + q + 1, q), p + q + 2


def g2_closed_value(p: int, q: int, cfg: PrecisionConfig) -> ValueWithError:
    coeff, s = g2_closed(p, q)
    return coeff * riemann_zeta(s, cfg)


def reflection_residual(p: int, q: int, k: int, cfg: PrecisionConfig) -> ValueWithError:
    """
    G_{k+3}(p-1, q) + (-1)^k G_{k+3}(q-1, p) - Σ_{a+b=k} (-1)^b ζ({1}^(p-1), a+2) ζ({1}^(q-1), b+2)
    (должно быть нулём в пределах ошибки)
    """
    if p < 1 or q < 1 or k < 0:
        raise DomainError(f"reflection_residual: требуется p, q >= 1, k >= 0; получено p={p}, q={q}, k={k}")
    lhs = g_direct(GSpec(k + 1, p - 1, q), cfg) + (-1) ** k * g_direct(GSpec(k + 1, q - 1, p), cfg)
    products = vsum(
        ((-1) ** b * (mzv(index(ones(p - 1), a + 2), cfg) * mzv(index(ones(q - 1), b + 2), cfg))
         for a, b in ((a, k - a) for a in range(k + 1))),
        cfg,
    )
    return lhs - products


def composition_sum_series(p: int, q: int, m: int, n: int, cfg: PrecisionConfig) -> ValueWithError:
    """Σ_{|α|=m} ζ({1}^p, α_1, ..., α_q + n) по композициям m на q частей"""
    if q < 1 or n < 1 or m < q:
        raise DomainError(f"Требуется q >= 1, n >= 1, m >= q; получено q={q}, m={m}, n={n}")
    head = ones(p)
    terms = []
    for comp in compositions(m, q):
        parts = comp.parts
        terms.append(mzv(head + MultiIndex(parts[:-1] + (parts[-1] + n,)), cfg))
    return vsum(terms, cfg)


def composition_sum_integral(p: int, q: int, m: int, n: int, cfg: PrecisionConfig) -> ValueWithError:
    """Та же сумма квадратурой интеграла F1^p F3^(m-q) F4^(q-1) F5^(n-1)"""
    return integrate_monomials(composition_sum_integrand(p, q, m, n), cfg)


def integral_sum_representation(p: int, q: int, m: int, n: int,
                                cfg: PrecisionConfig) -> Tuple[ValueWithError, ValueWithError]:
    """
    Сумма ζ({1}^p, α_1, ..., α_q + n) по |α| = m двумя способами:
    (рядами через mzv, квадратурой интеграла с F1^p F3^(m-q) F4^(q-1) F5^(n-1))
    """
    series = composition_sum_series(p, q, m, n, cfg)
    return series, composition_sum_integral(p, q, m, n, cfg)
