"""Naive reference implementations, written independently of the package internals.

Everything here works from the definitions alone: subsets of blocks, subsets of
points, or a plain first-open-pair recursion.  They are slow and only meant for
small designs.
"""

from __future__ import annotations

import random
from collections import Counter
from functools import lru_cache
from itertools import combinations, permutations
from math import comb

from mmpts.design import Design


def parse_hex(v: int, text: str) -> Design:
    """Triples written as runs of hex digits, e.g. ``"024 13a"``."""
    return Design(v, [tuple(int(ch, 16) for ch in tok) for tok in text.split()])


def random_perm(v: int, rng: random.Random) -> list[int]:
    p = list(range(v))
    rng.shuffle(p)
    return p


def fano() -> Design:
    return Design(7, [(0, 1, 3), (1, 2, 4), (2, 3, 5), (3, 4, 6), (0, 4, 5), (1, 5, 6), (0, 2, 6)])


def affine_plane_3() -> Design:
    """The unique STS(9): lines of AG(2,3)."""
    pts = [(x, y) for x in range(3) for y in range(3)]
    idx = {p: i for i, p in enumerate(pts)}
    lines = set()
    for a, b in combinations(pts, 2):
        c = ((-a[0] - b[0]) % 3, (-a[1] - b[1]) % 3)
        lines.add(tuple(sorted((idx[a], idx[b], idx[c]))))
    return Design(9, lines)


def projective_sts15() -> Design:
    """Points and lines of PG(3,2): nonzero vectors of F_2^4, lines {a, b, a xor b}."""
    lines = {tuple(sorted((a - 1, b - 1, (a ^ b) - 1))) for a in range(1, 16) for b in range(a + 1, 16)}
    return Design(15, lines)


# -- configuration counts ----------------------------------------------------------


def _degrees(blocks) -> Counter:
    return Counter(x for b in blocks for x in b)


def naive_pasch(d: Design) -> tuple[int, list[int]]:
    """Four blocks on six points, every point on exactly two of them."""
    n = 0
    per = [0] * d.v
    for quad in combinations(d.triples, 4):
        deg = _degrees(quad)
        if len(deg) == 6 and all(c == 2 for c in deg.values()):
            n += 1
            for x in deg:
                per[x] += 1
    return n, per


def naive_mitre(d: Design) -> tuple[int, list[int], list[int]]:
    """Five blocks on seven points: one point on three blocks, the other six on two."""
    n = 0
    roots = [0] * d.v
    leaves = [0] * d.v
    for five in combinations(d.triples, 5):
        deg = _degrees(five)
        if len(deg) != 7 or sorted(deg.values()) != [2, 2, 2, 2, 2, 2, 3]:
            continue
        n += 1
        for x, c in deg.items():
            if c == 3:
                roots[x] += 1
            else:
                leaves[x] += 1
    return n, roots, leaves


def naive_fano(d: Design) -> int:
    """Seven-point subsets carrying seven blocks."""
    blocks = [set(t) for t in d.triples]
    n = 0
    for s in combinations(range(d.v), 7):
        ss = set(s)
        if sum(b <= ss for b in blocks) == 7:
            n += 1
    return n


# -- isomorphism by exhaustive permutation search -------------------------------------


def naive_automorphism_count(d: Design) -> int:
    blocks = set(d.triples)
    n = 0
    for p in permutations(range(d.v)):
        if all(tuple(sorted((p[a], p[b], p[c]))) in blocks for a, b, c in blocks):
            n += 1
    return n


def naive_isomorphic(d1: Design, d2: Design) -> bool:
    if d1.v != d2.v or len(d1.triples) != len(d2.triples):
        return False
    target = set(d2.triples)
    return any(
        all(tuple(sorted((p[a], p[b], p[c]))) in target for a, b, c in d1.triples)
        for p in permutations(range(d1.v))
    )


# -- labelled enumeration ---------------------------------------------------------------


def _matchings(points: list[int]):
    if not points:
        yield []
        return
    a = points[0]
    for i in range(1, len(points)):
        rest = points[1:i] + points[i + 1 :]
        for m in _matchings(rest):
            yield [(a, points[i])] + m


def leaves_of_order(v: int):
    """Every labelled leave graph an MMPTS(v) can have."""
    r = v % 6
    pts = list(range(v))
    if r in (1, 3):
        yield frozenset()
    elif r in (0, 2):
        for m in _matchings(pts):
            yield frozenset(m)
    elif r == 4:
        for c in pts:
            others = [x for x in pts if x != c]
            for arms in combinations(others, 3):
                rest = [x for x in others if x not in arms]
                for m in _matchings(rest):
                    yield frozenset([tuple(sorted((c, a))) for a in arms] + m)
    else:
        for quad in combinations(pts, 4):
            a, b, c, e = quad
            for cyc in ((a, b, c, e), (a, b, e, c), (a, c, b, e)):
                yield frozenset(tuple(sorted((cyc[i], cyc[(i + 1) % 4]))) for i in range(4))


def count_completions_naive(v: int, leave: frozenset) -> int:
    """Triangle decompositions of K_v minus ``leave``, by first-open-pair recursion."""
    used = [[False] * v for _ in range(v)]
    for a, b in leave:
        used[a][b] = used[b][a] = True

    def first_open():
        for a in range(v):
            for b in range(a + 1, v):
                if not used[a][b]:
                    return a, b
        return None

    def rec() -> int:
        p = first_open()
        if p is None:
            return 1
        a, b = p
        total = 0
        for c in range(b + 1, v):
            if not used[a][c] and not used[b][c]:
                used[a][b] = used[b][a] = used[a][c] = used[c][a] = used[b][c] = used[c][b] = True
                total += rec()
                used[a][b] = used[b][a] = used[a][c] = used[c][a] = used[b][c] = used[c][b] = False
        return total

    return rec()


def labelled_mmpts(v: int) -> int:
    """Number of MMPTS(v) on the point set {0, ..., v-1}."""
    return sum(count_completions_naive(v, leave) for leave in leaves_of_order(v))


def leave_count(v: int) -> int:
    """Number of labelled leaves of the MMPTS shape for v."""
    def perfect(n: int) -> int:
        out = 1
        for k in range(n - 1, 0, -2):
            out *= k
        return out

    r = v % 6
    if r in (1, 3):
        return 1
    if r in (0, 2):
        return perfect(v)
    if r == 4:
        return v * comb(v - 1, 3) * perfect(v - 4)
    return comb(v, 4) * 3


# -- shared pools -----------------------------------------------------------------------


@lru_cache(maxsize=None)
def small_pool() -> tuple[Design, ...]:
    """Class representatives of every order from 3 to 13."""
    from mmpts.pipeline import enumerate_designs

    out: list[Design] = []
    for v in range(3, 14):
        out.extend(enumerate_designs(v).designs())
    return tuple(out)


@lru_cache(maxsize=None)
def pool_of_order(v: int) -> tuple[Design, ...]:
    return tuple(d for d in small_pool() if d.v == v)


class _Enough(Exception):
    pass


@lru_cache(maxsize=None)
def sample_mmpts17(name: str = "Q1", k: int = 3) -> tuple[Design, ...]:
    """The first few completions of one of the v = 17 search seeds."""
    from mmpts.search import build_problem, enumerate_completions
    from mmpts.seeds import paper_seeds

    out: list[Design] = []

    def visit(d: Design) -> None:
        out.append(d)
        if len(out) >= k:
            raise _Enough

    try:
        enumerate_completions(build_problem(paper_seeds()[name]), visit)
    except _Enough:
        pass
    return tuple(out)


def random_pts(v: int, rng: random.Random, tries: int = 40) -> Design:
    """A random partial triple system built greedily."""
    used: set[tuple[int, int]] = set()
    blocks = []
    for _ in range(tries):
        t = tuple(sorted(rng.sample(range(v), 3)))
        ps = {(t[0], t[1]), (t[0], t[2]), (t[1], t[2])}
        if used.isdisjoint(ps):
            used |= ps
            blocks.append(t)
    return Design(v, blocks)
