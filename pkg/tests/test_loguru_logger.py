#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Тесты modules.loguru_logger
"""

from modules.loguru_logger import (LogCategory, get_loguru_logger, info, init_loguru_logging,
                                   log_function_calls, log_performance_decorator, warning)


def test_stats_by_category(tmp_path):
    init_loguru_logging(tmp_path / "logs", level="WARNING")
    before = get_loguru_logger().get_stats()
    info("кэш загружен", LogCategory.CACHE)
    warning("повреждённая строка", LogCategory.CACHE)
    after = get_loguru_logger().get_stats()
    assert after['total_logs'] == before['total_logs'] + 2
    assert after['by_category']['CACHE'] == before['by_category']['CACHE'] + 2
    assert after['by_level']['WARNING'] == before['by_level']['WARNING'] + 1
    assert (tmp_path / "logs" / "eulersum.log").exists()


def test_console_goes_to_stderr(capsys):
    init_loguru_logging(level="WARNING")
    warning("только stderr", LogCategory.SYSTEM)
    out, err = capsys.readouterr()
    assert out == ""
    assert "только stderr" in err


def test_decorators_keep_result():
    @log_performance_decorator(LogCategory.PERFORMANCE)
    @log_function_calls(LogCategory.NUMERICS)
    def add(a, b):
        return a + b

    assert add(2, b=3) == 5
    assert add.__name__ == "add"
