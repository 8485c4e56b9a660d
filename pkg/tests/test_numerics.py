#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Тесты modules.numerics
"""

from fractions import Fraction

import pytest

from modules.errors import ConfigurationError, DomainError
from modules.numerics import (PrecisionConfig, ValueWithError, bernoulli, binomial, fixed_precision,
                              pi_value, riemann_zeta, vsum, working_context)


class TestPrecisionConfig:
    def test_defaults(self):
        cfg = PrecisionConfig()
        assert cfg.to_dict() == {'digits': 30, 'cutoff': 100000, 'extrapolate': True, 'quad_level': 10}

    @pytest.mark.parametrize("kwargs", [
        {'digits': 10},
        {'cutoff': 50},
        {'quad_level': 2},
        {'digits': 20.5},
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(ConfigurationError):
            PrecisionConfig(**kwargs)

    def test_from_mapping(self):
        cfg = PrecisionConfig.from_mapping({'digits': '25', 'cutoff': 1000})
        assert cfg.digits == 25 and cfg.cutoff == 1000 and cfg.extrapolate

    def test_from_mapping_garbage(self):
        with pytest.raises(ConfigurationError):
            PrecisionConfig.from_mapping({'digits': 'many'})

    def test_context_is_shared_per_digits(self):
        assert PrecisionConfig(digits=22).ctx is working_context(22)
        assert working_context(22).dps == 32


class TestValueWithError:
    def test_exact_int_has_zero_error(self, cfg):
        v = ValueWithError.exact(3, cfg)
        assert v.err == 0

    def test_exact_fraction_has_rounding_error(self, cfg):
        v = ValueWithError.exact(Fraction(1, 3), cfg)
        assert 0 < v.err < 1e-25

    def test_negative_error_rejected(self, cfg):
        ctx = cfg.ctx
        with pytest.raises(ValueError):
            ValueWithError(ctx.one, ctx.mpf(-1))

    def test_product_error_propagation(self, cfg):
        ctx = cfg.ctx
        a = ValueWithError(ctx.mpf(2), ctx.mpf('0.1'))
        b = ValueWithError(ctx.mpf(3), ctx.mpf('0.2'))
        c = a * b
        assert c.value == 6
        assert abs(c.err - ctx.mpf('0.72')) < 1e-20

    def test_arithmetic_with_scalars(self, cfg):
        ctx = cfg.ctx
        a = ValueWithError(ctx.mpf(2), ctx.mpf('0.5'))
        assert (3 * a).err == ctx.mpf('1.5')
        assert (1 - a).value == -1
        assert (Fraction(1, 2) * a).value == 1
        assert (-a).err == a.err

    def test_vsum_empty_is_zero(self, cfg):
        assert vsum([], cfg).value == 0

    def test_json_dict_is_decimal_strings(self, cfg):
        data = ValueWithError.exact(Fraction(1, 4), cfg).to_json_dict(cfg.digits)
        assert data['value'].startswith('0.25')
        assert isinstance(data['err'], str)


class TestExactCombinatorics:
    @pytest.mark.parametrize("n, expected", [
        (0, Fraction(1)),
        (1, Fraction(-1, 2)),
        (2, Fraction(1, 6)),
        (3, Fraction(0)),
        (4, Fraction(-1, 30)),
        (12, Fraction(-691, 2730)),
        (24, Fraction(-236364091, 2730)),
    ])
    def test_bernoulli(self, n, expected):
        assert bernoulli(n) == expected

    def test_bernoulli_recurrence(self):
        for n in range(1, 25):
            assert sum(binomial(n + 1, k) * bernoulli(k) for k in range(n + 1)) == 0

    def test_odd_bernoulli_vanish(self):
        assert all(bernoulli(n) == 0 for n in range(3, 25, 2))

    def test_bernoulli_negative(self):
        with pytest.raises(DomainError):
            bernoulli(-1)

    def test_binomial(self):
        assert binomial(5, 2) == 10
        assert binomial(5, 6) == 0
        assert binomial(5, -1) == 0
        with pytest.raises(DomainError):
            binomial(-1, 0)


class TestConstants:
    def test_pi(self):
        ctx = working_context(30)
        assert abs(pi_value(30) - ctx.pi) < ctx.mpf(10) ** -35

    @pytest.mark.parametrize("s, power, denominator", [(2, 2, 6), (4, 4, 90), (6, 6, 945)])
    def test_even_zeta_closed_forms(self, cfg, s, power, denominator):
        ctx = cfg.ctx
        z = riemann_zeta(s, cfg)
        target = ctx.pi ** power / denominator
        assert abs(z.value - target) <= 10 * z.err + ctx.mpf(10) ** -(cfg.digits + 5)
        assert z.err < ctx.mpf(10) ** -cfg.digits

    @pytest.mark.parametrize("s, power, denominator", [(2, 2, 6), (4, 4, 90), (6, 6, 945)])
    def test_more_digits_never_worse(self, s, power, denominator):
        ctx = working_context(60)
        target = ctx.pi ** power / denominator
        errors = [abs(ctx.mpf(riemann_zeta(s, PrecisionConfig(digits=d)).value) - target)
                  for d in (20, 40)]
        assert errors[1] <= errors[0]

    def test_zeta3(self, cfg):
        ctx = cfg.ctx
        z = riemann_zeta(3, cfg)
        assert abs(z.value - ctx.mpf('1.2020569031595942853997381615114')) < ctx.mpf(10) ** -19

    @pytest.mark.parametrize("s", [1, 0, -2])
    def test_zeta_domain(self, cfg, s):
        with pytest.raises(DomainError):
            riemann_zeta(s, cfg)

    def test_fixed_precision_grows_with_operations(self):
        assert fixed_precision(30, 10 ** 6) > fixed_precision(30, 10)
        assert fixed_precision(30, 1) >= 100
