#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Тесты modules.results_cache
"""

import orjson as json
import pytest

from modules.numerics import PrecisionConfig, ValueWithError
from modules.results_cache import SCHEMA_VERSION, CacheRecord, ResultsCache


def _value(cfg, text="1.6449340668482264365", err="1e-19"):
    return ValueWithError(cfg.ctx.mpf(text), cfg.ctx.mpf(err))


def test_missing_file_is_empty(tmp_path):
    cache = ResultsCache(tmp_path / "cache.jsonl")
    assert len(cache) == 0


def test_store_and_lookup(tmp_path, cfg):
    cache = ResultsCache(tmp_path / "cache.jsonl")
    assert cache.lookup("zeta(2)", cfg) is None
    cache.store("zeta(2)", _value(cfg), cfg)
    found = cache.lookup("zeta(2)", cfg)
    assert found is not None
    assert abs(found.value - _value(cfg).value) < 1e-18
    assert (cache.hits, cache.misses) == (1, 1)


def test_key_includes_precision(tmp_path, cfg):
    cache = ResultsCache(tmp_path / "cache.jsonl")
    cache.store("zeta(2)", _value(cfg), cfg)
    other_digits = PrecisionConfig(digits=cfg.digits + 5, cutoff=cfg.cutoff)
    other_cutoff = PrecisionConfig(digits=cfg.digits, cutoff=cfg.cutoff + 1)
    assert cache.lookup("zeta(2)", other_digits) is None
    assert cache.lookup("zeta(2)", other_cutoff) is None


def test_reload_from_file(tmp_path, cfg):
    path = tmp_path / "cache.jsonl"
    ResultsCache(path).store("zeta(3)", _value(cfg, "1.2020569031595942854"), cfg)
    reloaded = ResultsCache(path)
    assert len(reloaded) == 1
    assert reloaded.lookup("zeta(3)", cfg) is not None


def test_line_format(tmp_path, cfg):
    path = tmp_path / "cache.jsonl"
    ResultsCache(path).store("zeta(2)", _value(cfg), cfg)
    data = json.loads(path.read_bytes().splitlines()[0])
    assert set(data) == {'expr', 'digits', 'cutoff', 'value', 'err', 'version'}
    assert data['version'] == SCHEMA_VERSION
    assert isinstance(data['value'], str) and isinstance(data['err'], str)


def test_no_duplicate_append(tmp_path, cfg):
    path = tmp_path / "cache.jsonl"
    cache = ResultsCache(path)
    cache.store("zeta(2)", _value(cfg), cfg)
    cache.store("zeta(2)", _value(cfg), cfg)
    assert len(path.read_bytes().splitlines()) == 1


def test_corrupt_lines_skipped(tmp_path, cfg):
    path = tmp_path / "cache.jsonl"
    good = CacheRecord.from_value("zeta(2)", _value(cfg), cfg)
    path.write_bytes(b"{not json\n"
                     + json.dumps({'expr': 'zeta(3)'}) + b"\n"
                     + b"\n"
                     + json.dumps(good.to_dict()) + b"\n")
    cache = ResultsCache(path)
    assert len(cache) == 1
    assert cache.lookup("zeta(2)", cfg) is not None


def test_other_schema_version_ignored(tmp_path, cfg):
    path = tmp_path / "cache.jsonl"
    record = CacheRecord.from_value("zeta(2)", _value(cfg), cfg).to_dict()
    record['version'] = SCHEMA_VERSION + 1
    path.write_bytes(json.dumps(record) + b"\n")
    assert ResultsCache(path).lookup("zeta(2)", cfg) is None


def test_record_round_trip(cfg):
    record = CacheRecord.from_value("G(n=0,p=1,q=1)", _value(cfg), cfg)
    assert CacheRecord.from_dict(record.to_dict()) == record


@pytest.mark.parametrize("value, err", [
    ("garbage", "1"),
    ("1.5", "abc"),
    ("1.5", "-1e-10"),
    ("inf", "0"),
    ("nan", "1e-5"),
])
def test_non_numeric_record_skipped(tmp_path, cfg, value, err):
    path = tmp_path / "cache.jsonl"
    bad = {'expr': 'zeta(3)', 'digits': cfg.digits, 'cutoff': cfg.cutoff,
           'value': value, 'err': err, 'version': SCHEMA_VERSION}
    path.write_bytes(json.dumps(bad) + b"\n")
    cache = ResultsCache(path)
    assert len(cache) == 0
    assert cache.lookup("zeta(3)", cfg) is None
    with pytest.raises(ValueError):
        CacheRecord.from_dict(bad)
