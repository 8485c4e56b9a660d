#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Identity Catalog - Каталог проверяемых тождеств

Каждое тождество - пара построителей левой и правой части над модулями
mzv_engine / euler_sums / quadrature, объявленные диапазоны параметров
и сетка параметров по умолчанию.
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from modules.errors import ParameterRangeError, UnknownIdentityError
from modules.euler_sums import (GSpec, composition_sum_integral, composition_sum_series, g2_closed_value,
                                g_compositions, g_direct, g_quad, zetastar_ones)
from modules.indices import (MultiIndex, admissible_by_weight_height, compositions, index,
                             ones, repeat)
from modules.mzv_engine import mzsv, mzv, zetastar_head2
from modules.numerics import PrecisionConfig, ValueWithError, binomial, riemann_zeta, vsum
from modules.quadrature import head2_integrand, integrate_monomials

Params = Dict[str, int]
Builder = Callable[[Params, PrecisionConfig], ValueWithError]

SERIES = "series"
QUADRATURE = "quadrature"


@dataclass(frozen=True)
class ParamSpec:
    """Целочисленный параметр с объявленным диапазоном [low, high]"""
    name: str
    low: int
    high: int


@dataclass(frozen=True)
class IdentityDef:
    """Тождество lhs(params) = rhs(params)"""
    id: str
    params: Tuple[ParamSpec, ...]
    lhs: Builder
    rhs: Builder
    ref: str
    grid: Tuple[Tuple[int, ...], ...]
    kind: str = SERIES
    tol: Optional[float] = None
    # дополнительные ограничения на сочетания параметров
    constraint: Optional[Callable[[Params], bool]] = None
    zero_target: Callable[[Params], bool] = field(default=lambda params: False)
    uses_quadrature: Optional[Callable[[Params], bool]] = None

    @property
    def param_names(self) -> Tuple[str, ...]:
        return tuple(spec.name for spec in self.params)

    def default_grid(self) -> List[Params]:
        return [dict(zip(self.param_names, values)) for values in self.grid]

    def is_quadrature(self, params: Params) -> bool:
        if self.uses_quadrature is not None:
            return self.uses_quadrature(params)
        return self.kind == QUADRATURE

    def validate(self, params: Params) -> Params:
        """Проверка полного набора параметров; возвращает параметры в объявленном порядке"""
        names = self.param_names
        unknown = sorted(set(params) - set(names))
        if unknown:
            raise ParameterRangeError(f"{self.id}: неизвестные параметры {unknown}; ожидаются {list(names)}")
        missing = [name for name in names if name not in params]
        if missing:
            raise ParameterRangeError(f"{self.id}: не заданы параметры {missing}")
        for spec in self.params:
            value = params[spec.name]
            if not isinstance(value, int) or not spec.low <= value <= spec.high:
                raise ParameterRangeError(
                    f"{self.id}: {spec.name}={value!r} вне диапазона {spec.low}..{spec.high}")
        ordered = {name: params[name] for name in names}
        if self.constraint is not None and not self.constraint(ordered):
            raise ParameterRangeError(f"{self.id}: недопустимое сочетание параметров {ordered}")
        return ordered


def _grid(ranges: Dict[str, range], where: Optional[Callable[..., bool]] = None) -> Tuple[Tuple[int, ...], ...]:
    # Декартово произведение в лексикографическом порядке с фильтром
    names = list(ranges)
    points = []
    for values in itertools.product(*(ranges[name] for name in names)):
        binding = dict(zip(names, values))
        if where is None or where(**binding):
            points.append(values)
    return tuple(points)


# ---------------------------------------------------------------------------
# Сокращения для построителей
# ---------------------------------------------------------------------------

def _z(cfg: PrecisionConfig, *blocks) -> ValueWithError:
    return mzv(index(*blocks), cfg)


def _zs(cfg: PrecisionConfig, *blocks) -> ValueWithError:
    return mzsv(index(*blocks), cfg)


def _g(n: int, p: int, q: int, cfg: PrecisionConfig) -> ValueWithError:
    return g_direct(GSpec(n, p, q), cfg)


def _zero(cfg: PrecisionConfig) -> ValueWithError:
    return ValueWithError.exact(0, cfg)


def _twos(k: int) -> MultiIndex:
    return repeat(2, k)


def _sum(cfg: PrecisionConfig, terms) -> ValueWithError:
    return vsum(terms, cfg)


def _pairs(total: int) -> List[Tuple[int, int]]:
    """(a, b) с a + b = total, a по возрастанию; пусто при total < 0"""
    return [(a, total - a) for a in range(total + 1)]


def _triples(total: int) -> List[Tuple[int, int, int]]:
    return [(a, b, total - a - b) for a in range(total + 1) for b in range(total - a + 1)]


def _mixed_three(a: int, b: int) -> MultiIndex:
    """({2}^a, 3, {2}^b)"""
    return index(_twos(a), 3, _twos(b))


def _zetastar_twos_closed(m: int, cfg: PrecisionConfig) -> ValueWithError:
    """ζ*({2}^m) = 2(1 - 2^(1-2m)) ζ(2m) для m >= 1"""
    return 2 * (1 - Fraction(1, 2 ** (2 * m - 1))) * riemann_zeta(2 * m, cfg)


def _alternating_ones(n: int, cfg: PrecisionConfig) -> ValueWithError:
    """Σ_{r=0}^{n} (-1)^(r+n) ζ({1}^r, n+2-r)"""
    return _sum(cfg, ((-1) ** (r + n) * _z(cfg, ones(r), n + 2 - r) for r in range(n + 1)))


def _weighted_alternating_ones(n: int, cfg: PrecisionConfig) -> ValueWithError:
    """Σ_{r=0}^{n} (-1)^(r+n) (r+1) ζ({1}^(r+1), n+2-r)"""
    return _sum(cfg, ((-1) ** (r + n) * (r + 1) * _z(cfg, ones(r + 1), n + 2 - r) for r in range(n + 1)))


def _mixed_three_sum(n: int, cfg: PrecisionConfig) -> ValueWithError:
    """Σ_{a+b=n} ζ*({2}^a, 3, {2}^b); 0 при n < 0"""
    return _sum(cfg, (mzsv(_mixed_three(a, b), cfg) for a, b in _pairs(n)))


def _star_ones_sum(total: int, cfg: PrecisionConfig) -> ValueWithError:
    """Σ_{p+q=total} ζ*({1}^p, q+2)"""
    return _sum(cfg, (_zs(cfg, ones(p), q + 2) for p, q in _pairs(total)))


def _odd_zeta_closed(n: int, cfg: PrecisionConfig) -> ValueWithError:
    """2(2n+2)(1 - 2^(-(2n+2))) ζ(2n+3)"""
    return 2 * (2 * n + 2) * (1 - Fraction(1, 2 ** (2 * n + 2))) * riemann_zeta(2 * n + 3, cfg)


def _even_zeta_closed(n: int, cfg: PrecisionConfig) -> ValueWithError:
    """2(2n+3)(1 - 2^(-(2n+3))) ζ(2n+4)"""
    return 2 * (2 * n + 3) * (1 - Fraction(1, 2 ** (2 * n + 3))) * riemann_zeta(2 * n + 4, cfg)


# ---------------------------------------------------------------------------
# Составные величины
# ---------------------------------------------------------------------------

def w_weight(c: Tuple[int, ...]) -> int:
    """W(c_0, c_1, ..., c_j) = C(c_0+3, 3) (c_1+1) ... (c_j+1)"""
    weight = binomial(c[0] + 3, 3)
    for part in c[1:]:
        weight *= part + 1
    return weight


def _w_composition_sum(n: int, cfg: PrecisionConfig) -> ValueWithError:
    """Σ_{j=1}^{n} (-1)^j Σ_{|c|=2n+1-2j} ζ(c_0+3, c_1+2, ..., c_j+2) W(c), c из j+1 неотрицательных частей"""
    terms = []
    for j in range(1, n + 1):
        for comp in compositions(2 * n + 1 - 2 * j, j + 1, min_part=0):
            c = comp.parts
            idx = MultiIndex((c[0] + 3,) + tuple(part + 2 for part in c[1:]))
            terms.append((-1) ** j * w_weight(c) * mzv(idx, cfg))
    return vsum(terms, cfg)


def thm53_rhs(n: int, cfg: PrecisionConfig) -> ValueWithError:
    """C(2n+4, 3) ζ(2n+4) + Σ_j (-1)^j Σ_{c} ζ(c_0+3, c_1+2, ..., c_j+2) W(c)"""
    if n < 0 or n > 3:
        raise ParameterRangeError(f"thm53_rhs: n={n} вне диапазона 0..3")
    return binomial(2 * n + 4, 3) * riemann_zeta(2 * n + 4, cfg) + _w_composition_sum(n, cfg)


def zetastar_head_eval(r: int, n: int, cfg: PrecisionConfig) -> ValueWithError:
    """
    ζ*(r+2, {2}^n) по явным формулам для r = 0, 1, 2:
    r = 0 - знакопеременная сумма ζ({1}^p, q+2);
    r = 1 - через ζ(2n+3) и суммы ζ*({2}^a, 3, {2}^b);
    r = 2 - через суммы с весами W, C(p+2, 2) и произведения ζ на ζ*.
    """
    if r not in (0, 1, 2) or n < 0 or n > 3:
        raise ParameterRangeError(f"zetastar_head_eval: требуется r в 0..2 и n в 0..3, получено r={r}, n={n}")
    if r == 0:
        return _sum(cfg, ((-1) ** q * _z(cfg, ones(p), q + 2) for p, q in _pairs(2 * n)))
    if r == 1:
        return _odd_zeta_closed(n, cfg) - 2 * _mixed_three_sum(n, cfg)

    zeta_head = riemann_zeta(2 * n + 4, cfg)
    terms = [
        -binomial(2 * n + 4, 3) * zeta_head,
        _even_zeta_closed(n, cfg),
        -zeta_head,
        -_w_composition_sum(n, cfg),
    ]
    terms.extend((-1) ** q * binomial(p + 2, 2) * _z(cfg, ones(p + 2), q + 2) for p, q in _pairs(2 * n))
    terms.extend(-(_z(cfg, 1, 2 * a + 3) * _zs(cfg, _twos(b))) for a, b in _pairs(n))
    terms.extend(b * (riemann_zeta(2 * a + 2, cfg) * _zs(cfg, _twos(b + 1))) for a, b in _pairs(n) if b)
    terms.extend(mzsv(_mixed_three(a, b), cfg) * riemann_zeta(2 * c + 3, cfg) for a, b, c in _triples(n - 1))
    return vsum(terms, cfg)


# ---------------------------------------------------------------------------
# Построители сторон тождеств
# ---------------------------------------------------------------------------

def _thm22_rhs(params: Params, cfg: PrecisionConfig) -> ValueWithError:
    spec = GSpec(params['n'], params['p'], params['q'])
    return g_quad(spec, cfg) if params['route'] else g_compositions(spec, cfg)


def _cor23_rhs(params: Params, cfg: PrecisionConfig) -> ValueWithError:
    q, n = params['q'], params['n']
    return g_quad(GSpec(n, 0, q), cfg) if params['route'] else zetastar_ones(q, n, cfg)


def _reflection_lhs(params: Params, cfg: PrecisionConfig) -> ValueWithError:
    p, q, k = params['p'], params['q'], params['k']
    return _g(k + 1, p - 1, q, cfg) + (-1) ** k * _g(k + 1, q - 1, p, cfg)


def _reflection_rhs(params: Params, cfg: PrecisionConfig) -> ValueWithError:
    p, q, k = params['p'], params['q'], params['k']
    return _sum(cfg, ((-1) ** b * (_z(cfg, ones(p - 1), a + 2) * _z(cfg, ones(q - 1), b + 2))
                      for a, b in _pairs(k)))


def _head2_quad(params: Params, cfg: PrecisionConfig) -> ValueWithError:
    return integrate_monomials(head2_integrand(params['r'], params['n']), cfg)


def _head2_target(params: Params, cfg: PrecisionConfig) -> ValueWithError:
    r, n = params['r'], params['n']
    if n % 2:
        return _zero(cfg)
    return _zs(cfg, r + 2, _twos(n // 2))


def _prop33_rhs(params: Params, cfg: PrecisionConfig) -> ValueWithError:
    """Σ_{p+q=2m, a+b=r} (-1)^(q+b) C(p+b, p) G_{q+2}(p+b, a)"""
    r, m = params['r'], params['m']
    return _sum(cfg, ((-1) ** (q + b) * binomial(p + b, p) * _g(q, p + b, a, cfg)
                      for p, q in _pairs(2 * m) for a, b in _pairs(r)))


def _prop41_lhs(params: Params, cfg: PrecisionConfig) -> ValueWithError:
    s, r, n = params['s'], params['r'], params['n']
    return _sum(cfg, (_zs(cfg, repeat(s, a)) * riemann_zeta(s * b + r, cfg) for a, b in _pairs(n)))


def _prop41_rhs(params: Params, cfg: PrecisionConfig) -> ValueWithError:
    s, r, n = params['s'], params['r'], params['n']
    return _sum(cfg, (_zs(cfg, repeat(s, a), r, repeat(s, b)) for a, b in _pairs(n)))


def _prop42_rhs(params: Params, cfg: PrecisionConfig) -> ValueWithError:
    n = params['n']
    if n % 2:
        return _zero(cfg)
    return _zs(cfg, _twos(n // 2 + 1))


def _prop43_rhs(params: Params, cfg: PrecisionConfig) -> ValueWithError:
    n = params['n']
    m = n // 2
    if n % 2:
        return (m + 1) * _zs(cfg, _twos(m + 2))
    return _mixed_three_sum(m, cfg)


def _prop43_mixed_rhs(params: Params, cfg: PrecisionConfig) -> ValueWithError:
    """Σ_{r=0}^{m} ζ*({2}^r) ζ(2m+3-2r)"""
    m = params['m']
    return _sum(cfg, (_zs(cfg, _twos(r)) * riemann_zeta(2 * m + 3 - 2 * r, cfg) for r in range(m + 1)))


def _aoki_ohno_lhs(params: Params, cfg: PrecisionConfig) -> ValueWithError:
    return _sum(cfg, (mzsv(idx, cfg) for idx in admissible_by_weight_height(params['k'], params['s'])))


def _aoki_ohno_rhs(params: Params, cfg: PrecisionConfig) -> ValueWithError:
    k, s = params['k'], params['s']
    return 2 * binomial(k - 1, 2 * s - 1) * (1 - Fraction(1, 2 ** (k - 1))) * riemann_zeta(k, cfg)


def _prop51_lhs(params: Params, cfg: PrecisionConfig) -> ValueWithError:
    n = params['n']
    return _sum(cfg, ((-1) ** q * _g(q, p, 2, cfg) for p, q in _pairs(2 * n)))


def _prop51_rhs(params: Params, cfg: PrecisionConfig) -> ValueWithError:
    n = params['n']
    g_part = _sum(cfg, (_g(q, 1, p, cfg) for p, q in _pairs(2 * n + 1)))
    products = _sum(cfg, (_z(cfg, 1, 2 * a + 3) * _zs(cfg, _twos(b)) for a, b in _pairs(n)))
    return g_part - products


def _prop52_lhs(params: Params, cfg: PrecisionConfig) -> ValueWithError:
    n = params['n']
    return _sum(cfg, ((-1) ** q * (p + 1) * _g(q, p + 1, 1, cfg) for p, q in _pairs(2 * n)))


def _prop52_rhs(params: Params, cfg: PrecisionConfig) -> ValueWithError:
    n = params['n']
    stars = _sum(cfg, ((p + 1) * _zs(cfg, ones(p + 2), q + 2) for p, q in _pairs(2 * n)))
    products = _sum(cfg, (b * (riemann_zeta(2 * a + 2, cfg) * _zs(cfg, _twos(b + 1)))
                          for a, b in _pairs(n) if b))
    mixed = _sum(cfg, (mzsv(_mixed_three(a, b), cfg) * riemann_zeta(2 * c + 3, cfg)
                       for a, b, c in _triples(n - 1)))
    return stars - products - mixed


def _thm53_lhs(params: Params, cfg: PrecisionConfig) -> ValueWithError:
    n = params['n']
    stars = _sum(cfg, ((p + 1) * _zs(cfg, ones(p + 1), q + 2) for p, q in _pairs(2 * n + 1)))
    g_part = _sum(cfg, (_g(q, 1, p, cfg) for p, q in _pairs(2 * n + 1)))
    return stars - g_part


def _eq61_lhs(params: Params, cfg: PrecisionConfig) -> ValueWithError:
    n = params['n']
    return _sum(cfg, ((2 + (1 if a == 0 else 0)) * mzsv(_mixed_three(a, b), cfg) for a, b in _pairs(n)))


def _h1_lhs(params: Params, cfg: PrecisionConfig) -> ValueWithError:
    n = params['n']
    return _sum(cfg, ((-1) ** q * _g(q, p, 1, cfg) for p, q in _pairs(2 * n)))


def _h1_rhs(params: Params, cfg: PrecisionConfig) -> ValueWithError:
    n = params['n']
    return _odd_zeta_closed(n, cfg) - _mixed_three_sum(n, cfg)


def _prop21_series(params: Params, cfg: PrecisionConfig) -> ValueWithError:
    return composition_sum_series(params['p'], params['q'], params['m'], params['n'], cfg)


def _prop21_integral(params: Params, cfg: PrecisionConfig) -> ValueWithError:
    return composition_sum_integral(params['p'], params['q'], params['m'], params['n'], cfg)


def _head_eval_entry(r: int, grid_n: int) -> IdentityDef:
    return IdentityDef(
        id=f"sec6-r{r}",
        params=(ParamSpec('n', 0, 3),),
        lhs=lambda params, cfg: zetastar_head_eval(r, params['n'], cfg),
        rhs=lambda params, cfg: _zs(cfg, r + 2, _twos(params['n'])),
        ref=f"ζ*({r + 2}, {{2}}^n) по явной формуле",
        grid=_grid({'n': range(grid_n + 1)}),
        tol=1e-4,
    )


# ---------------------------------------------------------------------------
# Каталог
# ---------------------------------------------------------------------------

CATALOG: Tuple[IdentityDef, ...] = (
    IdentityDef(
        id="prop2.1",
        params=(ParamSpec('p', 0, 6), ParamSpec('q', 1, 6), ParamSpec('m', 1, 8), ParamSpec('n', 1, 6)),
        lhs=_prop21_series,
        rhs=_prop21_integral,
        ref="Σ_{|α|=m} ζ({1}^p, α_1, ..., α_q + n) = интеграл с F1^p F3^(m-q) F4^(q-1) F5^(n-1)",
        grid=_grid({'p': range(4), 'q': range(1, 5), 'm': range(1, 5), 'n': range(1, 5)},
                   lambda p, q, m, n: q <= m and p + m + n <= 5),
        kind=QUADRATURE,
        constraint=lambda params: params['q'] <= params['m'] and params['p'] + params['m'] + params['n'] <= 12,
    ),
    IdentityDef(
        id="prop2.4",
        params=(ParamSpec('p', 1, 6), ParamSpec('q', 1, 6), ParamSpec('k', 0, 6)),
        lhs=_reflection_lhs,
        rhs=_reflection_rhs,
        ref="G_{k+3}(p-1,q) + (-1)^k G_{k+3}(q-1,p) = Σ_{a+b=k} (-1)^b ζ({1}^(p-1),a+2) ζ({1}^(q-1),b+2)",
        grid=_grid({'p': range(1, 4), 'q': range(1, 4), 'k': range(3)},
                   lambda p, q, k: p + q + k + 2 <= 9),
        constraint=lambda params: params['p'] + params['q'] + params['k'] + 2 <= 14,
    ),
    IdentityDef(
        id="prop2.5",
        params=(ParamSpec('p', 0, 10), ParamSpec('q', 0, 10)),
        lhs=lambda params, cfg: _g(0, params['p'], params['q'], cfg),
        rhs=lambda params, cfg: g2_closed_value(params['p'], params['q'], cfg),
        ref="G_2(p,q) = C(p+q+1,q) ζ(p+q+2)",
        grid=_grid({'p': range(7), 'q': range(7)}, lambda p, q: p + q <= 6),
        constraint=lambda params: params['p'] + params['q'] <= 12,
    ),
    IdentityDef(
        id="g2-symmetry",
        params=(ParamSpec('p', 0, 10), ParamSpec('q', 1, 10)),
        lhs=lambda params, cfg: _g(0, params['p'], params['q'], cfg),
        rhs=lambda params, cfg: _g(0, params['q'] - 1, params['p'] + 1, cfg),
        ref="G_2(p,q) = G_2(q-1,p+1)",
        grid=_grid({'p': range(6), 'q': range(1, 6)}, lambda p, q: p + q <= 5),
        constraint=lambda params: params['p'] + params['q'] <= 12,
    ),
    IdentityDef(
        id="thm2.2-equiv",
        params=(ParamSpec('n', 0, 10), ParamSpec('p', 0, 10), ParamSpec('q', 0, 10), ParamSpec('route', 0, 1)),
        lhs=lambda params, cfg: _g(params['n'], params['p'], params['q'], cfg),
        rhs=_thm22_rhs,
        ref="G_{n+2}(p,q): прямая сумма = сумма по композициям (route=0) = интеграл (route=1)",
        grid=_grid({'n': range(7), 'p': range(7), 'q': range(7), 'route': range(2)},
                   lambda n, p, q, route: n + p + q <= (4 if route else 6)),
        constraint=lambda params: params['n'] + params['p'] + params['q'] <= (10 if params['route'] else 12),
        uses_quadrature=lambda params: params['route'] == 1,
    ),
    IdentityDef(
        id="cor2.3",
        params=(ParamSpec('q', 0, 10), ParamSpec('n', 0, 10), ParamSpec('route', 0, 1)),
        lhs=lambda params, cfg: _zs(cfg, ones(params['q']), params['n'] + 2),
        rhs=_cor23_rhs,
        ref="ζ*({1}^q, n+2) = Σ_r Σ_{|α|=q+1} ζ(α_1, ..., α_r+n+1) = 1/(q! n!) ∫ F2^q F3^n",
        grid=_grid({'q': range(6), 'n': range(6), 'route': range(2)},
                   lambda q, n, route: q + n <= (4 if route else 5)),
        constraint=lambda params: params['q'] + params['n'] <= (10 if params['route'] else 12),
        uses_quadrature=lambda params: params['route'] == 1,
    ),
    IdentityDef(
        id="easy-ones",
        params=(ParamSpec('q', 0, 12),),
        lhs=lambda params, cfg: _zs(cfg, ones(params['q']), 2),
        rhs=lambda params, cfg: (params['q'] + 1) * riemann_zeta(params['q'] + 2, cfg),
        ref="ζ*({1}^q, 2) = G_2(0,q) = (q+1) ζ(q+2)",
        grid=_grid({'q': range(7)}),
    ),
    IdentityDef(
        id="prop3.1",
        params=(ParamSpec('r', 0, 6), ParamSpec('m', 0, 6)),
        lhs=lambda params, cfg: zetastar_head2(params['r'], params['m'], cfg),
        rhs=lambda params, cfg: _zs(cfg, params['r'] + 2, _twos(params['m'])),
        ref="Σ_k k^(-(r+2)) [x^(2m)] Π_{n>=k}(1-x²/n²)^(-1) = ζ*(r+2, {2}^m)",
        grid=_grid({'r': range(3), 'm': range(4)}),
        tol=1e-5,
    ),
    IdentityDef(
        id="thm3.2",
        params=(ParamSpec('r', 0, 4), ParamSpec('n', 0, 6)),
        lhs=_head2_quad,
        rhs=_head2_target,
        ref="1/(r! n!) ∫ F4^r (F1 - F3)^n = ζ*(r+2, {2}^(n/2)) при чётном n, 0 при нечётном",
        grid=_grid({'r': range(3), 'n': range(4)}),
        kind=QUADRATURE,
        zero_target=lambda params: params['n'] % 2 == 1,
    ),
    IdentityDef(
        id="prop3.3",
        params=(ParamSpec('r', 0, 4), ParamSpec('m', 0, 4)),
        lhs=lambda params, cfg: _zs(cfg, params['r'] + 2, _twos(params['m'])),
        rhs=_prop33_rhs,
        ref="ζ*(r+2, {2}^m) = Σ_{p+q=2m, a+b=r} (-1)^(q+b) C(p+b,p) G_{q+2}(p+b,a)",
        grid=_grid({'r': range(3), 'm': range(4)}),
        tol=1e-5,
    ),
    IdentityDef(
        id="prop4.1",
        params=(ParamSpec('s', 2, 3), ParamSpec('r', 2, 3), ParamSpec('n', 0, 3)),
        lhs=_prop41_lhs,
        rhs=_prop41_rhs,
        ref="Σ_{a+b=n} ζ*({s}^a) ζ(sb+r) = Σ_{a+b=n} ζ*({s}^a, r, {s}^b)",
        grid=_grid({'s': range(2, 4), 'r': range(2, 4), 'n': range(3)}),
    ),
    IdentityDef(
        id="prop4.2",
        params=(ParamSpec('n', 0, 8),),
        lhs=lambda params, cfg: _alternating_ones(params['n'], cfg),
        rhs=_prop42_rhs,
        ref="Σ_r (-1)^(r+n) ζ({1}^r, n+2-r) = ζ*({2}^(m+1)) при n=2m, 0 при нечётном n",
        grid=_grid({'n': range(6)}),
        zero_target=lambda params: params['n'] % 2 == 1,
    ),
    IdentityDef(
        id="prop4.3",
        params=(ParamSpec('n', 0, 8),),
        lhs=lambda params, cfg: _weighted_alternating_ones(params['n'], cfg),
        rhs=_prop43_rhs,
        ref="Σ_r (-1)^(r+n) (r+1) ζ({1}^(r+1), n+2-r) = (m+1) ζ*({2}^(m+2)) | Σ_{a+b=m} ζ*({2}^a,3,{2}^b)",
        grid=_grid({'n': range(5)}),
    ),
    IdentityDef(
        id="prop4.3-mixed",
        params=(ParamSpec('m', 0, 4),),
        lhs=lambda params, cfg: _weighted_alternating_ones(2 * params['m'], cfg),
        rhs=_prop43_mixed_rhs,
        ref="Σ_r (-1)^r (r+1) ζ({1}^(r+1), 2m+2-r) = Σ_{r=0}^{m} ζ*({2}^r) ζ(2m+3-2r)",
        grid=_grid({'m': range(3)}),
    ),
    IdentityDef(
        id="prop4.4",
        params=(ParamSpec('n', 0, 5),),
        lhs=lambda params, cfg: _star_ones_sum(2 * params['n'] + 2, cfg),
        rhs=lambda params, cfg: _even_zeta_closed(params['n'], cfg),
        ref="Σ_{p+q=2n+2} ζ*({1}^p, q+2) = 2(2n+3)(1 - 2^(-(2n+3))) ζ(2n+4)",
        grid=_grid({'n': range(3)}),
    ),
    IdentityDef(
        id="eq4.4",
        params=(ParamSpec('n', 0, 5),),
        lhs=lambda params, cfg: _star_ones_sum(2 * params['n'] + 2, cfg),
        rhs=lambda params, cfg: (2 * params['n'] + 3) * _zs(cfg, _twos(params['n'] + 2)),
        ref="Σ_{p+q=2n+2} ζ*({1}^p, q+2) = (2n+3) ζ*({2}^(n+2))",
        grid=_grid({'n': range(3)}),
    ),
    IdentityDef(
        id="aoki-ohno",
        params=(ParamSpec('k', 2, 12), ParamSpec('s', 1, 6)),
        lhs=_aoki_ohno_lhs,
        rhs=_aoki_ohno_rhs,
        ref="Σ_{k ∈ I_0(k,s)} ζ*(k) = 2 C(k-1, 2s-1) (1 - 2^(1-k)) ζ(k)",
        grid=_grid({'k': range(2, 9), 's': range(1, 3)}, lambda k, s: 2 * s <= k),
        constraint=lambda params: 2 * params['s'] <= params['k'],
    ),
    IdentityDef(
        id="zetastar-2s",
        params=(ParamSpec('m', 1, 8),),
        lhs=lambda params, cfg: _zs(cfg, _twos(params['m'])),
        rhs=lambda params, cfg: _zetastar_twos_closed(params['m'], cfg),
        ref="ζ*({2}^m) = 2(1 - 2^(1-2m)) ζ(2m)",
        grid=_grid({'m': range(1, 5)}),
    ),
    IdentityDef(
        id="prop5.1",
        params=(ParamSpec('n', 0, 3),),
        lhs=_prop51_lhs,
        rhs=_prop51_rhs,
        ref="Σ_{p+q=2n} (-1)^q G_{q+2}(p,2) = Σ_{p+q=2n+1} G_{q+2}(1,p) - Σ_{a+b=n} ζ(1,2a+3) ζ*({2}^b)",
        grid=_grid({'n': range(3)}),
        tol=1e-5,
    ),
    IdentityDef(
        id="prop5.2",
        params=(ParamSpec('n', 0, 3),),
        lhs=_prop52_lhs,
        rhs=_prop52_rhs,
        ref="Σ (-1)^q (p+1) G_{q+2}(p+1,1) = Σ (p+1) ζ*({1}^(p+2),q+2) - Σ b ζ(2a+2) ζ*({2}^(b+1)) - Σ ζ*({2}^a,3,{2}^b) ζ(2c+3)",
        grid=_grid({'n': range(3)}),
        tol=1e-5,
    ),
    IdentityDef(
        id="thm5.3",
        params=(ParamSpec('n', 0, 3),),
        lhs=_thm53_lhs,
        rhs=lambda params, cfg: thm53_rhs(params['n'], cfg),
        ref="Σ (p+1) ζ*({1}^(p+1),q+2) - Σ G_{q+2}(1,p) = C(2n+4,3) ζ(2n+4) + Σ_j (-1)^j Σ ζ(c_0+3, c_1+2, ...) W(c)",
        grid=_grid({'n': range(3)}),
        tol=1e-5,
    ),
    IdentityDef(
        id="eq6.1",
        params=(ParamSpec('n', 0, 4),),
        lhs=_eq61_lhs,
        rhs=lambda params, cfg: _odd_zeta_closed(params['n'], cfg),
        ref="Σ_{a+b=n} (2 + δ_{0a}) ζ*({2}^a, 3, {2}^b) = 2(2n+2)(1 - 2^(-(2n+2))) ζ(2n+3)",
        grid=_grid({'n': range(4)}),
        tol=1e-5,
    ),
    IdentityDef(
        id="sec6-h1",
        params=(ParamSpec('n', 0, 4),),
        lhs=_h1_lhs,
        rhs=_h1_rhs,
        ref="Σ_{p+q=2n} (-1)^q G_{q+2}(p,1) = 2(2n+2)(1 - 2^(-(2n+2))) ζ(2n+3) - Σ_{a+b=n} ζ*({2}^a,3,{2}^b)",
        grid=_grid({'n': range(4)}),
        tol=1e-5,
    ),
    _head_eval_entry(0, 3),
    _head_eval_entry(1, 3),
    _head_eval_entry(2, 2),
    IdentityDef(
        id="duality-ones",
        params=(ParamSpec('m', 0, 12),),
        lhs=lambda params, cfg: _z(cfg, ones(params['m']), 2),
        rhs=lambda params, cfg: riemann_zeta(params['m'] + 2, cfg),
        ref="ζ({1}^m, 2) = ζ(m+2)",
        grid=_grid({'m': range(7)}),
    ),
)

_BY_ID: Dict[str, IdentityDef] = {entry.id: entry for entry in CATALOG}
if len(_BY_ID) != len(CATALOG):
    raise RuntimeError("Повторяющиеся идентификаторы в каталоге тождеств")


def get_identity(identity_id: str) -> IdentityDef:
    try:
        return _BY_ID[identity_id]
    except KeyError:
        raise UnknownIdentityError(f"Неизвестное тождество: {identity_id!r}") from None


def identity_ids() -> List[str]:
    """Идентификаторы каталога в отсортированном порядке"""
    return sorted(_BY_ID)
