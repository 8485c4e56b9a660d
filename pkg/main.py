#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
eulersum - Главная точка входа

Отвечает за:
- Инициализацию системы логирования
- Установку глобального обработчика исключений
- Запуск командной строки (modules.cli)
"""

import sys
from pathlib import Path

# Добавляем текущую директорию в путь для импорта модулей
current_dir = Path(__file__).parent
sys.path.insert(0, str(current_dir))

# Логирование инициализируется до импорта вычислительных модулей;
# modules.cli затем перенастраивает уровень по config.yaml и --verbose
try:
    from modules.loguru_logger import init_loguru_logging, LogCategory, critical

    loguru_logger = init_loguru_logging(level="WARNING")
except Exception as e:
    print(f"Ошибка инициализации логирования: {e}", file=sys.stderr)
    loguru_logger = None


def handle_exception(exc_type, exc_value, exc_traceback):
    """Глобальная обработка необработанных исключений"""
    if loguru_logger:
        critical(f"Необработанное исключение: {exc_type.__name__}: {exc_value}",
                 LogCategory.ERROR, exception=exc_value)
    else:
        import traceback
        traceback.print_exception(exc_type, exc_value, exc_traceback)


sys.excepthook = handle_exception

if __name__ == "__main__":
    try:
        from modules.cli import main
    except ImportError as e:
        print(f"Ошибка импорта: {e}", file=sys.stderr)
        print("Убедитесь, что все зависимости установлены:", file=sys.stderr)
        print("python -m pip install -r requirements.txt", file=sys.stderr)
        sys.exit(1)

    sys.exit(main())
