"""Exact incremental row reduction over the rationals.

Rows are sparse mappings column -> Fraction.  Pivot rows are kept in echelon
form (each pivot is the least column of its row, normalized to 1), which is
enough for ranks, pivot columns, and span-membership tests without any
floating-point arithmetic.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class RowReducer:
    def __init__(self) -> None:
        self._pivots: dict[int, dict[int, Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    @property
    def pivot_columns(self) -> set[int]:
        return set(self._pivots)

    def reduce(self, row: Mapping[int, Fraction]) -> dict[int, Fraction]:
        """Eliminate all known pivots from a copy of ``row``."""
        work = {c: Fraction(v) for c, v in row.items() if v}
        while work:
            col = min(work)
            pivot = self._pivots.get(col)
            if pivot is None:
                break
            factor = work[col]
            for c, v in pivot.items():
                new = work.get(c, Fraction(0)) - factor * v
                if new:
                    work[c] = new
                else:
                    work.pop(c, None)
        return work

    def add(self, row: Mapping[int, Fraction]) -> bool:
        """Insert a row; return True when it enlarged the span."""
        reduced = self.reduce(row)
        if not reduced:
            return False
        col = min(reduced)
        lead = reduced[col]
        self._pivots[col] = {c: v / lead for c, v in reduced.items()}
        return True

    def contains(self, row: Mapping[int, Fraction]) -> bool:
        return not self.reduce(row)

    def extend(self, rows: Iterable[Mapping[int, Fraction]]) -> None:
        for row in rows:
            self.add(row)


def rank_of(rows: Iterable[Mapping[int, Fraction]]) -> int:
    reducer = RowReducer()
    reducer.extend(rows)
    return reducer.rank
