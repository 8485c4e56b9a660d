#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Тесты modules.euler_sums: три способа вычисления G_{n+2}(p, q)
"""

from fractions import Fraction

import pytest

from modules.errors import DomainError
from modules.euler_sums import (GSpec, composition_indices, g2_closed, g2_closed_value, g_compositions,
                                g_direct, g_quad, g_tail_weight, integral_sum_representation,
                                reflection_residual, zetastar_ones)
from modules.indices import MultiIndex, index, ones
from modules.mzv_engine import mzsv
from modules.numerics import binomial, riemann_zeta


def _agree(a, b, factor=10, floor=1e-12):
    return abs(a.value - b.value) <= factor * (a.err + b.err) + floor


class TestGSpec:
    def test_parse_and_canonical(self):
        spec = GSpec.parse(" G( n = 1 , p=2, q=0 ) ")
        assert spec == GSpec(1, 2, 0)
        assert spec.canonical() == "G(n=1,p=2,q=0)"
        assert spec.weight == 5

    @pytest.mark.parametrize("text", ["G(1,2,3)", "G(n=1,p=2)", "zeta(2)", "G(n=-1,p=0,q=0)"])
    def test_parse_errors(self, text):
        with pytest.raises(DomainError):
            GSpec.parse(text)

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            GSpec(0, -1, 0)


def test_g2_closed():
    assert g2_closed(1, 1) == (3, 4)
    assert g2_closed(0, 0) == (1, 2)
    assert g2_closed(2, 1) == (binomial(4, 1), 5)
    with pytest.raises(DomainError):
        g2_closed(-1, 0)


def test_g_tail_weight():
    assert g_tail_weight(0, 0, 2) == Fraction(1, 2)
    assert g_tail_weight(1, 1, 1) == Fraction(2)


def test_composition_indices():
    # p = 0, q = 1: r = 1..2, композиции числа 2
    pairs = composition_indices(GSpec(0, 0, 1))
    assert pairs == [(1, MultiIndex.of(3)), (1, MultiIndex.of(1, 2))]
    # весовые множители C(r-1, p)
    weights = [w for w, _ in composition_indices(GSpec(1, 1, 1))]
    assert weights == [1, 1, 2]


def test_g_direct_g2_example(cfg):
    value = g_direct(GSpec(0, 1, 1), cfg)
    assert _agree(value, 3 * riemann_zeta(4, cfg))


@pytest.mark.parametrize("p, q", [(0, 0), (1, 0), (0, 2), (2, 1), (1, 3)])
def test_g_direct_closed_form(cfg, p, q):
    assert _agree(g_direct(GSpec(0, p, q), cfg), g2_closed_value(p, q, cfg))


@pytest.mark.parametrize("n, p, q", [(0, 0, 1), (1, 1, 0), (1, 0, 1), (2, 1, 0), (1, 1, 1), (0, 2, 1)])
def test_direct_matches_compositions(cfg, n, p, q):
    spec = GSpec(n, p, q)
    assert _agree(g_direct(spec, cfg), g_compositions(spec, cfg))


@pytest.mark.parametrize("n, p, q", [(0, 1, 1), (1, 0, 1), (2, 1, 0), (1, 1, 1)])
def test_quadrature_matches_direct(cfg, n, p, q):
    spec = GSpec(n, p, q)
    quad = g_quad(spec, cfg)
    direct = g_direct(spec, cfg)
    assert abs(quad.value - direct.value) <= 1e-6 * abs(direct.value) + direct.err


def test_quadrature_order_limit(cfg):
    with pytest.raises(DomainError):
        g_quad(GSpec(5, 3, 3), cfg)


@pytest.mark.parametrize("q, n", [(0, 0), (1, 1), (2, 0), (1, 2)])
def test_zetastar_ones(cfg, q, n):
    assert _agree(zetastar_ones(q, n, cfg), mzsv(index(ones(q), n + 2), cfg))


@pytest.mark.parametrize("p, q, k", [(1, 1, 0), (1, 2, 1), (2, 2, 2), (3, 1, 0)])
def test_reflection(cfg, p, q, k):
    residual = reflection_residual(p, q, k, cfg)
    assert abs(residual.value) <= 10 * residual.err + 1e-12


def test_reflection_domain(cfg):
    with pytest.raises(DomainError):
        reflection_residual(0, 1, 0, cfg)


@pytest.mark.parametrize("p, q, m, n", [(0, 1, 1, 1), (1, 1, 2, 1), (0, 2, 2, 2), (1, 2, 3, 1)])
def test_integral_sum_representation(cfg, p, q, m, n):
    series, integral = integral_sum_representation(p, q, m, n, cfg)
    assert abs(series.value - integral.value) <= 1e-6 * abs(series.value) + series.err + integral.err


def test_integral_sum_representation_simplest(cfg):
    # p=0, q=1, m=1, n=1: ζ(2) = ∫ 1
    series, _ = integral_sum_representation(0, 1, 1, 1, cfg)
    assert _agree(series, riemann_zeta(2, cfg))


@pytest.mark.parametrize("p, q", [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (0, 3)])
def test_g2_error_is_honest(cfg, p, q):
    value = g_direct(GSpec(0, p, q), cfg)
    closed = g2_closed_value(p, q, cfg)
    assert abs(value.value - closed.value) <= 10 * value.err + closed.err + 1e-20
