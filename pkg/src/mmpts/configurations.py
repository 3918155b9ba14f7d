"""Pasch configurations, mitres and Fano subsystems of a partial triple system."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .design import Design, Triple


@dataclass(frozen=True)
class ConfigCensus:
    pasch: int
    mitre: int
    fano: int
    # per point: (Pasch configurations through it, mitres rooted at it, mitres with it as a leaf)
    per_point: tuple[tuple[int, int, int], ...]

    def check_sums(self) -> None:
        np_, nr, nl = (sum(col) for col in zip(*self.per_point)) if self.per_point else (0, 0, 0)
        if np_ != 6 * self.pasch or nr != self.mitre or nl != 6 * self.mitre:
            raise AssertionError("per-point census does not match the totals")


def _blocks_at(design: Design) -> list[list[Triple]]:
    at: list[list[Triple]] = [[] for _ in range(design.v)]
    for t in design.triples:
        for x in t:
            at[x].append(t)
    return at


def _others(t: Triple, x: int) -> tuple[int, int]:
    a, b, c = t
    if x == a:
        return b, c
    if x == b:
        return a, c
    return a, b


def count_pasch(design: Design) -> tuple[int, list[int]]:
    """Number of Pasch configurations {abc, ade, bdf, cef} and the count through each point."""
    third = design.third
    at = _blocks_at(design)
    per = [0] * design.v
    found = 0
    for a in range(design.v):
        blocks = at[a]
        for i in range(len(blocks)):
            b, c = _others(blocks[i], a)
            for j in range(i + 1, len(blocks)):
                d, e = _others(blocks[j], a)
                # both ways of pairing the two legs
                for x, y in ((d, e), (e, d)):
                    f = third[b][x]
                    if f >= 0 and third[c][y] == f:
                        found += 1
                        for p in (a, b, c, d, e, f):
                            per[p] += 1
    # each configuration is met once at each of its six points
    return found // 6, [n // 6 for n in per]


def count_mitre(design: Design) -> tuple[int, list[int], list[int]]:
    """Number of mitres {abc, ade, afg, bdf, ceg} with per-point root and leaf counts."""
    third = design.third
    at = _blocks_at(design)
    roots = [0] * design.v
    leaves = [0] * design.v
    total = 0
    for a in range(design.v):
        for t1, t2, t3 in combinations(at[a], 3):
            b, c = _others(t1, a)
            d, e = _others(t2, a)
            f, g = _others(t3, a)
            for x, x2 in ((d, e), (e, d)):
                y = third[b][x]
                if y == f:
                    y2 = g
                elif y == g:
                    y2 = f
                else:
                    continue
                if third[c][x2] == y2:
                    total += 1
                    roots[a] += 1
                    for p in (b, c, d, e, f, g):
                        leaves[p] += 1
    return total, roots, leaves


def fano_subsystems(design: Design) -> list[tuple[int, ...]]:
    """Point sets of the STS(7) subsystems, sorted."""
    third = design.third
    found = set()
    for t1 in design.triples:
        a = t1[0]
        for x in range(design.v):
            if x in t1 or third[a][x] < x:
                continue
            pts = set(t1) | {x, third[a][x]}
            # close under the partial operation pair -> third point
            grew = True
            ok = True
            while grew and ok:
                grew = False
                for p, q in combinations(sorted(pts), 2):
                    r = third[p][q]
                    if r < 0:
                        ok = False
                        break
                    if r not in pts:
                        pts.add(r)
                        grew = True
                        if len(pts) > 7:
                            ok = False
                            break
            if ok and len(pts) == 7:
                found.add(tuple(sorted(pts)))
    return sorted(found)


def count_fano(design: Design) -> int:
    return len(fano_subsystems(design))


def census(design: Design) -> ConfigCensus:
    pasch, per_p = count_pasch(design)
    mitre, roots, leaves = count_mitre(design)
    fano = count_fano(design)
    per = tuple(zip(per_p, roots, leaves))
    return ConfigCensus(pasch, mitre, fano, per)
