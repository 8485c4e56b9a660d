#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Finite Sums - Конечные суммы: гармонические числа, ζ_n, ζ*_n, полиномы Белла

Ядро префиксной динамики (один накопитель на каждый префикс индекса)
используется и здесь в точных рациональных числах, и в mzv_engine
в двоичной фиксированной точке.
"""

from fractions import Fraction
from typing import Any, List, Optional, Sequence, Union

from modules.errors import DomainError
from modules.indices import MultiIndex
from modules.loguru_logger import LogCategory, trace
from modules.numerics import (PrecisionConfig, ValueWithError, fixed_precision,
                              fixed_rounding_error, from_fixed)

# Выше этого n рациональные знаменатели растут слишком быстро
EXACT_LIMIT = 1000


def gen_harmonic(n: int, s: int) -> Fraction:
    """H_n^(s) = Σ_{j=1}^{n} j^(-s); H_0^(s) = 0"""
    if n < 0 or s < 1:
        raise DomainError(f"gen_harmonic: требуется n >= 0, s >= 1, получено n={n}, s={s}")
    total = Fraction(0)
    for j in range(1, n + 1):
        total += Fraction(1, j ** s)
    return total


class PrefixState:
    """
    Состояние префиксной динамики для фиксированного индекса.

    values[j] = ζ_n(α_1..α_j) (или ζ*_n при star=True), values[0] = 1.
    При переходе n -> n+1 все значения не убывают.
    """

    def __init__(self, idx: MultiIndex, star: bool = False):
        self.parts = idx.parts
        self.star = star
        self.n = 0
        self.values: List[Fraction] = [Fraction(1)] + [Fraction(0)] * len(self.parts)
        depth = len(self.parts)
        self._levels = range(1, depth + 1) if star else range(depth, 0, -1)

    def advance(self) -> None:
        """Добавить слагаемые с k = n + 1"""
        k = self.n + 1
        values = self.values
        parts = self.parts
        for j in self._levels:
            values[j] += values[j - 1] * Fraction(1, k ** parts[j - 1])
        self.n = k

    def advance_to(self, n: int) -> None:
        while self.n < n:
            self.advance()

    @property
    def value(self) -> Fraction:
        return self.values[-1]


def _finite(idx: MultiIndex, n: int, star: bool,
            cfg: Optional[PrecisionConfig]) -> Union[Fraction, ValueWithError]:
    if n < 0:
        raise DomainError(f"Верхняя граница n должна быть >= 0, получено {n}")
    if cfg is not None and n > EXACT_LIMIT:
        return finite_sum_fixed(idx, n, star, cfg)
    state = PrefixState(idx, star)
    state.advance_to(n)
    return state.value


def finite_mzv(idx: MultiIndex, n: int,
               cfg: Optional[PrecisionConfig] = None) -> Union[Fraction, ValueWithError]:
    """
    ζ_n(α) = Σ_{1 <= k_1 < ... < k_r <= n} Π k_i^(-α_i)

    Точно (Fraction); при n > EXACT_LIMIT и заданном cfg - в повышенной точности.
    """
    return _finite(idx, n, False, cfg)


def finite_mzsv(idx: MultiIndex, n: int,
                cfg: Optional[PrecisionConfig] = None) -> Union[Fraction, ValueWithError]:
    """ζ*_n(α) - то же с нестрогими неравенствами"""
    return _finite(idx, n, True, cfg)


def bell_poly(m: int, xs: Sequence[Any]) -> Any:
    """
    Модифицированный полином Белла P_m(x_1..x_m):
    exp(Σ x_k z^k / k) = Σ P_m z^m, рекуррентно m P_m = Σ_{k=1}^{m} x_k P_{m-k}.
    """
    if m < 0:
        raise DomainError(f"bell_poly: m должно быть >= 0, получено {m}")
    if len(xs) < m:
        raise DomainError(f"bell_poly: нужно не меньше {m} аргументов, получено {len(xs)}")
    exact = all(isinstance(x, (int, Fraction)) for x in xs[:m])
    polys: List[Any] = [Fraction(1) if exact else 1]
    for j in range(1, m + 1):
        acc = sum((xs[k - 1] * polys[j - k] for k in range(1, j + 1)), Fraction(0) if exact else 0)
        polys.append(Fraction(acc) / j if exact else acc / j)
    return polys[m]


# ---------------------------------------------------------------------------
# Ядро в фиксированной точке
# ---------------------------------------------------------------------------

def prefix_sweep_states(parts: Sequence[int], star: bool, checkpoints: Sequence[int],
                        prec: int) -> List[List[int]]:
    """
    Префиксная динамика в целых числах с масштабом 2^prec.

    Для каждой контрольной точки N (по возрастанию) возвращает копию всех
    накопителей [ζ_N(), ζ_N(α_1), ..., ζ_N(α_1..α_r)] (или ζ*_N при star=True).
    """
    one = 1 << prec
    depth = len(parts)
    checkpoints = sorted(checkpoints)
    if depth == 0:
        return [[one] for _ in checkpoints]

    acc = [one] + [0] * depth
    levels = list(range(1, depth + 1)) if star else list(range(depth, 0, -1))
    steps = [(j, parts[j - 1]) for j in levels]
    exponents = sorted(set(parts))
    weights = [0] * (max(exponents) + 1)

    out: List[List[int]] = []
    cp_iter = iter(checkpoints)
    next_cp = next(cp_iter)
    last = checkpoints[-1]
    for k in range(1, last + 1):
        for a in exponents:
            weights[a] = one // k ** a
        for j, a in steps:
            acc[j] += (acc[j - 1] * weights[a]) >> prec
        if k == next_cp:
            out.append(list(acc))
            next_cp = next(cp_iter, None)
    return out


def prefix_sweep_fixed(parts: Sequence[int], star: bool, checkpoints: Sequence[int],
                       prec: int) -> List[int]:
    """Значение полного префикса (ζ_N или ζ*_N) в каждой контрольной точке; для пустого индекса - единица"""
    return [state[-1] for state in prefix_sweep_states(parts, star, checkpoints, prec)]


def sweep_rounding_bound(final_fixed: int, operations: int, prec: int, cfg: PrecisionConfig):
    """Граница округления: на каждую операцию не больше (2 + max|acc|) единиц младшего разряда"""
    magnitude = (final_fixed >> prec) + 2
    return fixed_rounding_error(operations * magnitude, prec, cfg)


def finite_sum_fixed(idx: MultiIndex, n: int, star: bool, cfg: PrecisionConfig) -> ValueWithError:
    """ζ_n / ζ*_n в повышенной точности для больших n"""
    operations = n * max(1, idx.depth) * 2
    prec = fixed_precision(cfg.digits, operations)
    raw = prefix_sweep_fixed(idx.parts, star, [n], prec)[0]
    trace(f"Конечная сумма {idx} до n={n} (star={star})", LogCategory.SERIES)
    return ValueWithError(from_fixed(raw, prec, cfg), sweep_rounding_bound(raw, operations, prec, cfg))
