"""Monomial orders: lexicographic, degree-reverse-lexicographic, block elimination.

An order exposes ``key(exps) -> tuple[int, ...]`` mapping an exponent tuple to
a flat integer tuple such that ``key(a) > key(b)`` iff the monomial ``a`` is
larger.  Flat integer keys let callers negate them for min-heaps and compare
them without custom comparators.

Block orders eliminate the first block: any monomial involving a variable of
the leading block is larger than every monomial that avoids the block.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

Exponent = tuple[int, ...]


class MonomialOrder:
    """Base class; subclasses are immutable and usable as cache keys."""

    def key(self, exps: Exponent) -> tuple[int, ...]:
        raise NotImplementedError

    def sort_terms(self, exps_iter) -> list[Exponent]:
        return sorted(exps_iter, key=self.key, reverse=True)


@dataclass(frozen=True)
class Lex(MonomialOrder):
    def key(self, exps: Exponent) -> tuple[int, ...]:
        return exps

    def __str__(self) -> str:
        return "lex"


@dataclass(frozen=True)
class DegRevLex(MonomialOrder):
    def key(self, exps: Exponent) -> tuple[int, ...]:
        out = [0] * (len(exps) + 1)
        total = 0
        j = len(exps)
        for e in exps:
            total += e
            out[j] = -e
            j -= 1
        out[0] = total
        return tuple(out)

    def __str__(self) -> str:
        return "degrevlex"


@dataclass(frozen=True)
class BlockOrder(MonomialOrder):
    """Compare the first ``elim_count`` variables first, then the rest.

    Both blocks are compared with their own (graded) orders, so the order
    eliminates the leading block.
    """

    elim_count: int
    outer: MonomialOrder = DegRevLex()
    inner: MonomialOrder = DegRevLex()

    def key(self, exps: Exponent) -> tuple[int, ...]:
        k = self.elim_count
        return self.outer.key(exps[:k]) + self.inner.key(exps[k:])

    def __str__(self) -> str:
        return f"block({self.elim_count}; {self.outer}, {self.inner})"


DEGREVLEX = DegRevLex()
LEX = Lex()


def order_by_name(name: str) -> MonomialOrder:
    try:
        return {"degrevlex": DEGREVLEX, "lex": LEX}[name]
    except KeyError:
        raise ValueError(f"unknown monomial order {name!r}") from None
