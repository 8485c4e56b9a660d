#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Тесты modules.identity_catalog
"""

import pytest

from modules.errors import ParameterRangeError, UnknownIdentityError
from modules.identity_catalog import (CATALOG, QUADRATURE, get_identity, identity_ids, thm53_rhs,
                                      w_weight, zetastar_head_eval)
from modules.indices import MultiIndex, index, repeat
from modules.mzv_engine import mzsv, mzv, zetastar_head2
from modules.numerics import binomial, riemann_zeta


def _agree(a, b, factor=10, floor=1e-12):
    return abs(a.value - b.value) <= factor * (a.err + b.err) + floor


EXPECTED_IDS = {
    "prop2.1", "prop2.4", "prop2.5", "g2-symmetry", "thm2.2-equiv", "cor2.3", "easy-ones",
    "prop3.1", "thm3.2", "prop3.3", "prop4.1", "prop4.2", "prop4.3", "prop4.3-mixed", "prop4.4",
    "eq4.4", "aoki-ohno", "zetastar-2s", "prop5.1", "prop5.2", "thm5.3", "eq6.1", "sec6-h1",
    "sec6-r0", "sec6-r1", "sec6-r2", "duality-ones",
}


def test_catalog_ids():
    assert set(identity_ids()) == EXPECTED_IDS
    assert len(identity_ids()) == len(CATALOG) >= 22
    assert identity_ids() == sorted(identity_ids())


@pytest.mark.parametrize("entry", CATALOG, ids=lambda e: e.id)
def test_default_grid_is_valid(entry):
    grid = entry.default_grid()
    assert grid
    for params in grid:
        assert entry.validate(params) == params
    assert len({tuple(p.values()) for p in grid}) == len(grid)


def test_grid_sizes():
    assert len(get_identity("prop2.5").grid) == 28
    assert len(get_identity("prop4.1").grid) == 12
    # route 0: n+p+q <= 6, route 1: n+p+q <= 4
    assert len(get_identity("thm2.2-equiv").grid) == 84 + 35
    assert len(get_identity("aoki-ohno").grid) == 7 + 5


def test_quadrature_kind():
    thm22 = get_identity("thm2.2-equiv")
    assert thm22.is_quadrature({'n': 0, 'p': 0, 'q': 0, 'route': 1})
    assert not thm22.is_quadrature({'n': 0, 'p': 0, 'q': 0, 'route': 0})
    assert get_identity("thm3.2").kind == QUADRATURE


def test_zero_targets():
    assert get_identity("prop4.2").zero_target({'n': 3})
    assert not get_identity("prop4.2").zero_target({'n': 2})
    assert get_identity("thm3.2").zero_target({'r': 0, 'n': 1})


def test_unknown_identity():
    with pytest.raises(UnknownIdentityError):
        get_identity("bogus")


@pytest.mark.parametrize("identity_id, params", [
    ("eq6.1", {'n': 9}),
    ("eq6.1", {'m': 1}),
    ("eq6.1", {}),
    ("prop2.4", {'p': 0, 'q': 1, 'k': 0}),
    ("aoki-ohno", {'k': 3, 's': 2}),
    ("prop2.1", {'p': 0, 'q': 3, 'm': 2, 'n': 1}),
])
def test_validate_rejects(identity_id, params):
    with pytest.raises(ParameterRangeError):
        get_identity(identity_id).validate(params)


def test_validate_orders_params():
    entry = get_identity("prop2.4")
    assert list(entry.validate({'k': 0, 'q': 1, 'p': 2})) == ['p', 'q', 'k']


def test_w_weight():
    assert w_weight((1, 0)) == 4
    assert w_weight((0, 1)) == 2
    assert w_weight((2, 1, 0)) == binomial(5, 3) * 2


def test_thm53_rhs_small(cfg):
    assert _agree(thm53_rhs(0, cfg), 4 * riemann_zeta(4, cfg))
    expected = 20 * riemann_zeta(6, cfg) - (4 * mzv(MultiIndex.of(4, 2), cfg) + 2 * mzv(MultiIndex.of(3, 3), cfg))
    assert _agree(thm53_rhs(1, cfg), expected)
    with pytest.raises(ParameterRangeError):
        thm53_rhs(4, cfg)


def test_zetastar_head_eval_examples(cfg):
    ctx = cfg.ctx
    r0 = zetastar_head_eval(0, 1, cfg)
    assert abs(r0.value - 7 * ctx.pi ** 4 / 360) <= 10 * r0.err + 1e-12
    assert _agree(zetastar_head_eval(1, 0, cfg), riemann_zeta(3, cfg))
    assert _agree(zetastar_head_eval(2, 0, cfg), riemann_zeta(4, cfg))


@pytest.mark.parametrize("r, n", [(0, 2), (1, 1), (1, 2), (2, 1)])
def test_zetastar_head_eval_routes_agree(cfg, r, n):
    evaluated = zetastar_head_eval(r, n, cfg)
    series = mzsv(index(r + 2, repeat(2, n)), cfg)
    generating = zetastar_head2(r, n, cfg)
    assert abs(evaluated.value - series.value) <= 1e-4 * abs(series.value) + evaluated.err + series.err
    assert abs(generating.value - series.value) <= 1e-4 * abs(series.value) + generating.err + series.err


def test_zetastar_head_eval_range(cfg):
    with pytest.raises(ParameterRangeError):
        zetastar_head_eval(3, 0, cfg)
