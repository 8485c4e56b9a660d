#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Errors - Иерархия исключений eulersum

Библиотечные модули только выбрасывают исключения, печатью и кодами
выхода занимается modules.cli.
"""

from typing import Optional


class EulerSumError(Exception):
    """Базовое исключение проекта"""


class ConfigurationError(EulerSumError):
    """Нарушен инвариант PrecisionConfig или неверное значение в config.yaml"""


class DomainError(EulerSumError):
    """Аргумент вне области определения операции"""


class DivergentSeriesError(EulerSumError):
    """Неадмиссибельный мультииндекс: ряд расходится"""

    def __init__(self, parts, message: Optional[str] = None):
        self.parts = tuple(parts)
        if message is None:
            message = (f"divergent series: последняя компонента индекса {self.parts} "
                       f"должна быть >= 2")
        super().__init__(message)


class QuadratureNonConvergenceError(EulerSumError):
    """Разность соседних уровней tanh-sinh не убывает"""


class ExpressionParseError(EulerSumError):
    """Ошибка разбора выражения с указанием позиции"""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        self.reason = message
        super().__init__(f"{message} (позиция {position})")

    def annotated(self) -> str:
        """Сообщение с исходным текстом и кареткой под ошибочной позицией"""
        caret = " " * self.position + "^"
        return f"parse error: {self.reason}\n  {self.text}\n  {caret}"


class UnknownIdentityError(EulerSumError):
    """Идентичность отсутствует в каталоге"""


class ParameterRangeError(EulerSumError):
    """Параметр идентичности или таблицы вне объявленного диапазона"""


class UnknownTableError(EulerSumError):
    """Неизвестное имя таблицы"""
