#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Indices - Мультииндексы и композиции

Соглашение о суммировании во всём проекте восходящее:
ζ(α_1, ..., α_r) = Σ_{k_1 < ... < k_r} Π k_i^(-α_i), сходимость при α_r >= 2.
"""

from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from modules.errors import DomainError


@dataclass(frozen=True)
class MultiIndex:
    """Последовательность показателей (α_1, ..., α_r); пустой индекс допустим"""
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(a) for a in self.parts)
        if any(a < 1 for a in parts):
            raise DomainError(f"Компоненты мультииндекса должны быть >= 1: {parts}")
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def of(cls, *parts: int) -> "MultiIndex":
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "MultiIndex":
        """Разбор канонической формы, например "(3,{2}^2)" -> (3,2,2)"""
        from modules.expressions import parse_index_text
        return parse_index_text(text)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def depth(self) -> int:
        return len(self.parts)

    @property
    def height(self) -> int:
        return sum(1 for a in self.parts if a > 1)

    @property
    def is_empty(self) -> bool:
        return not self.parts

    @property
    def is_admissible(self) -> bool:
        """Последняя компонента >= 2 (пустой индекс не считается адмиссибельным)"""
        return bool(self.parts) and self.parts[-1] >= 2

    def __add__(self, other: "MultiIndex") -> "MultiIndex":
        return MultiIndex(self.parts + other.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def canonical(self) -> str:
        return "(" + ",".join(str(a) for a in self.parts) + ")"

    def __str__(self) -> str:
        return self.canonical()


def repeat(a: int, k: int) -> MultiIndex:
    """{a}^k"""
    if k < 0:
        raise DomainError(f"Число повторений должно быть >= 0, получено {k}")
    return MultiIndex((a,) * k)


def ones(k: int) -> MultiIndex:
    """{1}^k"""
    return repeat(1, k)


def index(*blocks) -> MultiIndex:
    """Склейка: целые числа и MultiIndex в одном вызове, index(ones(2), 3) = (1,1,3)"""
    parts: List[int] = []
    for block in blocks:
        if isinstance(block, MultiIndex):
            parts.extend(block.parts)
        else:
            parts.append(int(block))
    return MultiIndex(tuple(parts))


def weight_depth_height(idx: MultiIndex) -> Tuple[int, int, int]:
    """(вес, глубина, высота) мультииндекса"""
    return idx.weight, idx.depth, idx.height


@dataclass(frozen=True)
class Composition:
    """Упорядоченное разбиение total на части"""
    parts: Tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


def _compose(total: int, parts: int, min_part: int) -> Iterator[Tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        if total >= min_part:
            yield (total,)
        return
    # первая часть от меньшего к большему - лексикографический порядок
    for first in range(min_part, total - min_part * (parts - 1) + 1):
        for rest in _compose(total - first, parts - 1, min_part):
            yield (first,) + rest


def compositions(total: int, parts: int, min_part: int = 1) -> List[Composition]:
    """
    Все последовательности из parts целых >= min_part с суммой total
    в лексикографическом порядке; пустой список, если таких нет.
    """
    if min_part not in (0, 1):
        raise DomainError(f"min_part должно быть 0 или 1, получено {min_part}")
    if total < 0 or parts < 0:
        return []
    return [Composition(c) for c in _compose(total, parts, min_part)]


def all_indices_of_weight(weight: int) -> List[MultiIndex]:
    """Все мультииндексы веса weight (любая глубина), лексикографически"""
    result: List[MultiIndex] = []
    for depth in range(1, weight + 1):
        result.extend(MultiIndex(c.parts) for c in compositions(weight, depth, 1))
    result.sort(key=lambda m: m.parts)
    return result


def admissible_by_weight_height(weight: int, height: int) -> List[MultiIndex]:
    """
    Множество I_0(k, s): адмиссибельные индексы веса weight
    ровно с height компонентами > 1. Возвращается отсортированным без повторов.
    """
    if weight < 2:
        raise DomainError(f"Вес должен быть >= 2, получено {weight}")
    if height < 1:
        raise DomainError(f"Высота должна быть >= 1, получено {height}")
    if height > weight // 2:
        return []
    return [m for m in all_indices_of_weight(weight)
            if m.height == height and m.is_admissible]


def star_expansion(idx: MultiIndex) -> List[MultiIndex]:
    """
    Все способы слить соседние компоненты индекса (2^(depth-1) штук):
    ζ*(α) = Σ ζ(β) по этим β. Порядок: по маске разрезов, начиная без слияний.
    """
    parts = idx.parts
    if len(parts) <= 1:
        return [idx]
    gaps = len(parts) - 1
    result: List[MultiIndex] = []
    for mask in range(1 << gaps):
        merged = [parts[0]]
        for i in range(gaps):
            if mask >> i & 1:
                merged[-1] += parts[i + 1]
            else:
                merged.append(parts[i + 1])
        result.append(MultiIndex(tuple(merged)))
    return result


def split_blocks(parts: Sequence[int]) -> str:
    """Каноническая запись с блоками повторов: (3,2,2) -> "(3,{2}^2)" """
    out: List[str] = []
    i = 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        run = j - i
        out.append(f"{{{parts[i]}}}^{run}" if run > 1 else str(parts[i]))
        i = j
    return "(" + ",".join(out) + ")"
