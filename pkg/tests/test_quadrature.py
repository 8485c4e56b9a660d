#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Тесты modules.quadrature
"""

import math
from fractions import Fraction

import numpy as np
import pytest

from modules.errors import DomainError
from modules.quadrature import (LogFactor, LogMonomial, composition_sum_integrand, expand_log_power,
                                g_integrand, head2_integrand, integrate_monomials,
                                multiply, scale, tanh_sinh_grid)
from modules.numerics import PrecisionConfig, riemann_zeta


class TestMonomials:
    def test_validation(self):
        with pytest.raises(DomainError):
            LogMonomial.of(0, e1=1)
        with pytest.raises(DomainError):
            LogMonomial(Fraction(1), (1, 2, 3))
        with pytest.raises(DomainError):
            LogMonomial.of(1, e1=7, e2=6)

    def test_str(self):
        assert str(LogMonomial.of(Fraction(1, 2), e1=2, e4=1)) == "1/2*F1^2*F4"
        assert str(LogMonomial.of(3)) == "3"

    def test_binomial_expansion(self):
        terms = expand_log_power(LogFactor.F1, LogFactor.F3, -1, 3)
        coeffs = {t.exponents: t.coeff for t in terms}
        assert coeffs == {
            (3, 0, 0, 0, 0): 1,
            (2, 0, 1, 0, 0): -3,
            (1, 0, 2, 0, 0): 3,
            (0, 0, 3, 0, 0): -1,
        }

    def test_expansion_sign(self):
        with pytest.raises(DomainError):
            expand_log_power(LogFactor.F1, LogFactor.F2, 2, 1)

    def test_multiply_collects_like_terms(self):
        # (F2 - F1)(F2 + F1) = F2^2 - F1^2
        left = expand_log_power(LogFactor.F2, LogFactor.F1, -1, 1)
        right = expand_log_power(LogFactor.F2, LogFactor.F1, 1, 1)
        product = {t.exponents: t.coeff for t in multiply(left, right)}
        assert product == {(0, 2, 0, 0, 0): 1, (2, 0, 0, 0, 0): -1}

    def test_scale(self):
        scaled = scale([LogMonomial.of(2, e5=1)], Fraction(1, 4))
        assert scaled[0].coeff == Fraction(1, 2)

    def test_families(self):
        assert g_integrand(1, 2, 3)[0].coeff == Fraction(1, 12)
        assert len(head2_integrand(1, 2)) == 3
        with pytest.raises(DomainError):
            composition_sum_integrand(0, 2, 1, 1)
        with pytest.raises(DomainError):
            composition_sum_integrand(0, 1, 1, 0)


class TestGrid:
    def test_read_only(self):
        grid = tanh_sinh_grid(6)
        with pytest.raises(ValueError):
            grid.w[0] = 0.0

    def test_nodes_inside_unit_interval(self):
        grid = tanh_sinh_grid(6)
        # крайние узлы x округляются до 1.0, их дополнение xc остаётся > 0
        assert np.all(grid.x > 0) and np.all(grid.x <= 1)
        assert np.all(grid.xc > 0)
        assert np.allclose(grid.x + grid.xc, 1.0)
        # Σ w ≈ ∫_0^1 dx
        assert abs(grid.w.sum() - 1.0) < 1e-12


class TestIntegrals:
    def test_zeta2(self, cfg):
        # ∫_{E_2} dt_1 dt_2/((1-t_1) t_2) = ζ(2)
        result = integrate_monomials(g_integrand(0, 0, 0), cfg)
        target = riemann_zeta(2, cfg).value
        assert abs(result.value - target) < 1e-7
        assert result.err < 1e-6

    def test_g_integrand_matches_closed_form(self, cfg):
        # G_2(1,1) = 3ζ(4), G_3(0,0) = ζ(3)
        assert abs(integrate_monomials(g_integrand(0, 1, 1), cfg).value - 3 * riemann_zeta(4, cfg).value) < 1e-7
        assert abs(integrate_monomials(g_integrand(1, 0, 0), cfg).value - riemann_zeta(3, cfg).value) < 1e-7

    @pytest.mark.parametrize("r", [0, 1, 2])
    def test_head2_odd_vanishes(self, cfg, r):
        result = integrate_monomials(head2_integrand(r, 1), cfg)
        assert abs(result.value) < 1e-7

    def test_head2_even(self, cfg):
        # 1/2 ∫ (F1 - F3)^2 = ζ*(2, 2) = 7π^4/360
        ctx = cfg.ctx
        result = integrate_monomials(head2_integrand(0, 2), cfg)
        assert abs(result.value - 7 * ctx.pi ** 4 / 360) < 1e-7

    @pytest.mark.parametrize("r, n", [(1, 2), (2, 1)])
    def test_f4_as_difference(self, cfg, r, n):
        # F4 = F2 - F1 поточечно
        split = scale(multiply(expand_log_power(LogFactor.F2, LogFactor.F1, -1, r),
                               expand_log_power(LogFactor.F1, LogFactor.F3, -1, n)),
                      Fraction(1, math.factorial(r) * math.factorial(n)))
        direct = integrate_monomials(head2_integrand(r, n), cfg)
        assert abs(direct.value - integrate_monomials(split, cfg).value) < 1e-7

    def test_higher_level_not_worse(self):
        results = []
        for level in (7, 8):
            level_cfg = PrecisionConfig(digits=20, cutoff=5000, quad_level=level)
            target = riemann_zeta(2, level_cfg).value
            results.append(integrate_monomials(g_integrand(0, 0, 0), level_cfg))
        coarse, fine = results
        assert fine.err <= coarse.err + 1e-10
        assert abs(fine.value - target) <= abs(coarse.value - target) + 1e-12
