"""Corpus statistics: histograms, group tables and orbit-stabiliser counts."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from math import factorial
from typing import Callable, Iterable

from .canonical import GroupInfo, automorphism_group
from .configurations import count_fano, count_mitre, count_pasch
from .design import Design


class NonDivisorOrder(ValueError):
    code = "NonDivisorOrder"


class EmptyCorpus(ValueError):
    code = "EmptyCorpus"


class Statistic(enum.Enum):
    PASCH = "pasch"
    MITRE = "mitre"
    FANO = "fano"
    GROUP_ORDER = "groups"

    @classmethod
    def _missing_(cls, value):
        if isinstance(value, str):
            aliases = {"group": "groups", "group_order": "groups", "grouporder": "groups"}
            v = aliases.get(value.lower(), value.lower())
            for m in cls:
                if m.value == v:
                    return m
        return None


def _value_fn(statistic: Statistic) -> Callable[[Design], int]:
    if statistic is Statistic.PASCH:
        return lambda d: count_pasch(d)[0]
    if statistic is Statistic.MITRE:
        return lambda d: count_mitre(d)[0]
    if statistic is Statistic.FANO:
        return count_fano
    return lambda d: automorphism_group(d).order


@dataclass
class Histogram:
    statistic: str
    counts: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def add(self, value: int, n: int = 1) -> None:
        self.counts[value] = self.counts.get(value, 0) + n

    def merge(self, other: "Histogram") -> "Histogram":
        out = Histogram(self.statistic, dict(self.counts))
        for k, n in other.counts.items():
            out.add(k, n)
        return out

    def rows(self) -> list[tuple[int, int]]:
        return sorted(self.counts.items())

    def to_tsv(self, corpus: str = "-") -> str:
        lines = [f"# statistic={self.statistic} corpus={corpus} total={self.total}"]
        lines += [f"{k}\t{n}" for k, n in self.rows()]
        return "\n".join(lines) + "\n"


def histogram(corpus: Iterable[Design], statistic: Statistic | str) -> Histogram:
    statistic = Statistic(statistic)
    fn = _value_fn(statistic)
    h = Histogram(statistic.value)
    for d in corpus:
        h.add(fn(d))
    return h


def values(corpus: Iterable[Design], statistic: Statistic | str) -> list[int]:
    fn = _value_fn(Statistic(statistic))
    return [fn(d) for d in corpus]


def extremes(corpus: Iterable[Design], statistic: Statistic | str) -> tuple[int, int, int, int]:
    """(minimum, how many attain it, maximum, how many attain it)."""
    h = histogram(corpus, statistic)
    if not h.counts:
        raise EmptyCorpus("no designs to summarise")
    lo, hi = min(h.counts), max(h.counts)
    return lo, h.counts[lo], hi, h.counts[hi]


def labelled_count(orders: Iterable[int], v: int) -> int:
    """Number of labelled designs on v points: sum of v!/|Aut(D)| over classes."""
    n = factorial(v)
    total = 0
    for o in orders:
        if o <= 0 or n % o:
            raise NonDivisorOrder(f"group order {o} does not divide {v}!")
        total += n // o
    return total


def group_table(groups: Iterable[GroupInfo]) -> list[tuple[int, str, int]]:
    """Rows (order, name, number of designs), largest orders first."""
    c = Counter((g.order, g.name or "-") for g in groups)
    return sorted(((o, name, n) for (o, name), n in c.items()), key=lambda r: (-r[0], r[1]))


def group_table_tsv(rows: list[tuple[int, str, int]], corpus: str = "-") -> str:
    total = sum(r[2] for r in rows)
    out = [f"# statistic=groups corpus={corpus} total={total}"]
    out += [f"{o}\t{name}\t{n}" for o, name, n in rows]
    return "\n".join(out) + "\n"
