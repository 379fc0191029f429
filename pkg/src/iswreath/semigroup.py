"""Finite semigroups given by an element list and a multiplication table."""
from __future__ import annotations

import operator
from typing import Callable, Hashable, Sequence

import numpy as np

from .errors import NotClosed


class FiniteSemigroup:
    """Elements ``elements[i]`` with ``table[i, j]`` the index of ``elements[i] * elements[j]``."""

    def __init__(self, elements: Sequence[Hashable], table: np.ndarray):
        self.elements = list(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        self.table = np.asarray(table, dtype=np.int64)
        if self.table.shape != (len(self.elements),) * 2:
            raise ValueError(f"table shape {self.table.shape} does not match {len(self.elements)} elements")
        self._rows = self.table.tolist()

    @classmethod
    def from_elements(cls, elements: Sequence[Hashable], mul: Callable = operator.mul) -> FiniteSemigroup:
        """Tabulate ``mul`` on ``elements``; raises NotClosed with the offending product."""
        elements = list(elements)
        index = {x: i for i, x in enumerate(elements)}
        if len(index) != len(elements):
            raise ValueError("duplicate elements")
        k = len(elements)
        table = np.empty((k, k), dtype=np.int64)
        for i, x in enumerate(elements):
            for j, y in enumerate(elements):
                p = mul(x, y)
                try:
                    table[i, j] = index[p]
                except KeyError:
                    raise NotClosed(f"{x} * {y} = {p} is not in the set", (x, y, p)) from None
        return cls(elements, table)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"FiniteSemigroup(size={len(self)})"

    @property
    def rows(self) -> list[list[int]]:
        return self._rows

    def mul(self, i: int, j: int) -> int:
        return self._rows[i][j]

    def identity(self) -> int | None:
        k = len(self)
        target = np.arange(k)
        for e in range(k):
            if np.array_equal(self.table[e], target) and np.array_equal(self.table[:, e], target):
                return e
        return None

    def idempotents(self) -> list[int]:
        return [i for i in range(len(self)) if self._rows[i][i] == i]

    def right_ideal(self, i: int, adjoin: bool = False) -> frozenset[int]:
        """``aS`` (``aS u {a}`` with ``adjoin``)."""
        s = set(self._rows[i])
        if adjoin:
            s.add(i)
        return frozenset(s)

    def left_ideal(self, i: int, adjoin: bool = False) -> frozenset[int]:
        s = set(self.table[:, i].tolist())
        if adjoin:
            s.add(i)
        return frozenset(s)

    def is_associative(self) -> bool:
        t = self.table
        # (xy)z vs x(yz) over all triples, vectorized over z
        return bool(np.array_equal(t[t, :], t[:, t]))

    def subsemigroup(self, indices: Sequence[int]) -> FiniteSemigroup:
        """Restriction to ``indices``; raises NotClosed if they are not closed."""
        indices = list(indices)
        pos = {g: k for k, g in enumerate(indices)}
        sub = self.table[np.ix_(indices, indices)]
        try:
            table = np.vectorize(pos.__getitem__, otypes=[np.int64])(sub) if len(indices) else sub
        except KeyError as exc:
            raise NotClosed(f"product index {exc.args[0]} leaves the subset") from None
        return FiniteSemigroup([self.elements[g] for g in indices], table)
