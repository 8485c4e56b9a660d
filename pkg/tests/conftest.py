#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Общие фикстуры тестов eulersum
"""

import sys
from pathlib import Path

import pytest

# Корень проекта в пути импорта, как в main.py
sys.path.insert(0, str(Path(__file__).parent.parent))

from modules.numerics import PrecisionConfig  # noqa: E402

# Малые обрезки: тесты должны идти секунды, а не минуты
FAST_DIGITS = 20
FAST_CUTOFF = 5000
FAST_QUAD_LEVEL = 8


@pytest.fixture(scope="session")
def cfg() -> PrecisionConfig:
    return PrecisionConfig(digits=FAST_DIGITS, cutoff=FAST_CUTOFF, quad_level=FAST_QUAD_LEVEL)


@pytest.fixture(scope="session")
def cfg_raw() -> PrecisionConfig:
    """Та же точность без экстраполяции"""
    return PrecisionConfig(digits=FAST_DIGITS, cutoff=FAST_CUTOFF, extrapolate=False,
                           quad_level=FAST_QUAD_LEVEL)


@pytest.fixture(scope="session")
def fast_flags():
    """Флаги командной строки для тех же настроек"""
    return ['--digits', str(FAST_DIGITS), '--cutoff', str(FAST_CUTOFF), '--quad-level', str(FAST_QUAD_LEVEL)]


def _close(value, target, factor: int = 10, floor: float = 1e-15) -> bool:
    """|value - target| <= factor * (value.err + target.err) (+ floor)"""
    target_value = target.value if hasattr(target, 'value') else target
    extra = target.err if hasattr(target, 'err') else 0
    return abs(value.value - target_value) <= factor * (value.err + extra) + floor


@pytest.fixture(scope="session")
def close():
    return _close
