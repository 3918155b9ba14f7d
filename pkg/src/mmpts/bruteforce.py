"""Direct isomorphism search between two triple systems.

Written independently of the canonical labelling code so the two can check
each other.  Points are mapped one at a time; whenever two mapped points
lie in a triple the image of the third point is forced.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterator

from .design import Design


def _profile(d: Design) -> list[tuple[int, int]]:
    deg = d.point_degrees()
    ldeg = d.leave_degrees()
    return [(deg[x], ldeg[x]) for x in range(d.v)]


def isomorphisms(d1: Design, d2: Design) -> Iterator[list[int]]:
    """Every point map f with f(d1) = d2; leave pairs necessarily go to leave pairs."""
    v = d1.v
    if d2.v != v or len(d1.triples) != len(d2.triples):
        return
    p1, p2 = _profile(d1), _profile(d2)
    if Counter(p1) != Counter(p2):
        return
    t1, t2 = d1.third, d2.third
    f = [-1] * v
    used = [False] * v

    def consistent(x: int) -> bool:
        fx = f[x]
        for y in range(v):
            fy = f[y]
            if fy < 0 or y == x:
                continue
            z = t1[x][y]
            w = t2[fx][fy]
            if (z < 0) != (w < 0):
                return False
            if z >= 0 and f[z] >= 0 and f[z] != w:
                return False
        return True

    def assign(x: int, y: int, trail: list[int]) -> bool:
        """Map x -> y and propagate forced thirds; record assignments on ``trail``."""
        stack = [(x, y)]
        while stack:
            a, b = stack.pop()
            if f[a] >= 0:
                if f[a] != b:
                    return False
                continue
            if used[b] or p1[a] != p2[b]:
                return False
            f[a] = b
            used[b] = True
            trail.append(a)
            if not consistent(a):
                return False
            for c in range(v):
                if c != a and f[c] >= 0:
                    z = t1[a][c]
                    if z >= 0:
                        stack.append((z, t2[b][f[c]]))
        return True

    def undo(trail: list[int]) -> None:
        for a in trail:
            used[f[a]] = False
            f[a] = -1

    def rec() -> Iterator[list[int]]:
        try:
            x = f.index(-1)
        except ValueError:
            yield list(f)
            return
        for y in range(v):
            if used[y] or p1[x] != p2[y]:
                continue
            trail: list[int] = []
            if assign(x, y, trail):
                yield from rec()
            undo(trail)

    yield from rec()


def find_isomorphism(d1: Design, d2: Design) -> list[int] | None:
    return next(isomorphisms(d1, d2), None)


def are_isomorphic(d1: Design, d2: Design) -> bool:
    return find_isomorphism(d1, d2) is not None


def automorphism_count(d: Design) -> int:
    return sum(1 for _ in isomorphisms(d, d))
