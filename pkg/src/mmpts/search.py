"""Completing seeds to full systems: triangle decompositions of the open-pair graph.

Two independent exact-cover engines are provided.  ``backtrack`` works on
bitmask adjacency of the uncovered pairs and branches on the pair with the
fewest remaining triangles; ``dancing_links`` is Knuth's Algorithm X on a
toroidal doubly-linked matrix.  They share nothing but the problem object.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .design import Design, DesignError, DuplicatePair, Pair, Triple, pair, triple, triple_pairs

log = logging.getLogger(__name__)

SolutionVisitor = Callable[[Design], None]


class Engine(enum.Enum):
    BACKTRACK = "backtrack"
    DANCING_LINKS = "dlx"


@dataclass(frozen=True)
class Seed:
    """A partial design with its declared leave; completions cover every other pair."""

    v: int
    fixed_triples: tuple[Triple, ...]
    leave: frozenset[Pair]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "fixed_triples", tuple(sorted(triple(*t) for t in self.fixed_triples)))
        object.__setattr__(self, "leave", frozenset(pair(*p) for p in self.leave))

    @property
    def covered(self) -> frozenset[Pair]:
        return frozenset(p for t in self.fixed_triples for p in triple_pairs(t))

    @property
    def open_pairs(self) -> tuple[Pair, ...]:
        covered = self.covered
        return tuple(
            (a, b)
            for a in range(self.v)
            for b in range(a + 1, self.v)
            if (a, b) not in covered and (a, b) not in self.leave
        )

    def check(self) -> "Seed":
        seen: dict[Pair, Triple] = {}
        for t in self.fixed_triples:
            if t[2] >= self.v:
                raise DesignError(f"triple {t} outside 0..{self.v - 1}")
            for p in triple_pairs(t):
                if p in self.leave:
                    raise DesignError(f"seed triple {t} covers leave pair {p}")
                if p in seen:
                    raise DuplicatePair(f"pair {p} in both {seen[p]} and {t}")
                seen[p] = t
        return self

    def as_design(self) -> Design:
        return Design(self.v, self.fixed_triples)


@dataclass(frozen=True)
class CoverProblem:
    """Exact cover instance: items are open pairs, options are triangles on them."""

    v: int
    fixed: tuple[Triple, ...]
    leave: frozenset[Pair]
    items: tuple[Pair, ...]
    options: tuple[Triple, ...]
    name: str = ""
    dead_items: tuple[Pair, ...] = field(default=(), compare=False)


def build_problem(seed: Seed) -> CoverProblem:
    items = seed.open_pairs
    open_set = set(items)
    adj: dict[int, set[int]] = {x: set() for x in range(seed.v)}
    for a, b in items:
        adj[a].add(b)
        adj[b].add(a)
    options = []
    for a, b in items:
        for c in sorted(adj[a] & adj[b]):
            if c > b:
                options.append((a, b, c))
    options.sort()
    hit = {p for t in options for p in triple_pairs(t)}
    dead = tuple(p for p in items if p not in hit)
    if dead:
        log.info("seed %s: %d open pairs lie in no triangle", seed.name, len(dead))
    assert hit <= open_set
    return CoverProblem(seed.v, seed.fixed_triples, seed.leave, items, tuple(options), seed.name, dead)


def _select_item(problem: CoverProblem) -> tuple[Pair, list[Triple]] | None:
    """Item with fewest covering options, ties broken lexicographically."""
    cover: dict[Pair, list[Triple]] = {p: [] for p in problem.items}
    for t in problem.options:
        for p in triple_pairs(t):
            cover[p].append(t)
    best = None
    for p in problem.items:
        if best is None or len(cover[p]) < len(cover[best]):
            best = p
    if best is None:
        return None
    return best, sorted(cover[best])


def _restrict(problem: CoverProblem, t: Triple) -> CoverProblem:
    used = set(triple_pairs(t))
    items = tuple(p for p in problem.items if p not in used)
    options = tuple(o for o in problem.options if used.isdisjoint(triple_pairs(o)))
    return CoverProblem(
        problem.v,
        tuple(sorted(problem.fixed + (t,))),
        problem.leave,
        items,
        options,
        problem.name,
    )


def split_work(problem: CoverProblem, depth: int) -> list[CoverProblem]:
    """Fix the first ``depth`` branching decisions, one subproblem per branch.

    Branches that die (an item with no options) are dropped; they contribute
    no solutions.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    if depth == 0 or not problem.items:
        return [problem]
    sel = _select_item(problem)
    _, opts = sel
    out: list[CoverProblem] = []
    for t in opts:
        out.extend(split_work(_restrict(problem, t), depth - 1))
    return out


def enumerate_completions(
    problem: CoverProblem,
    visitor: SolutionVisitor | None = None,
    engine: Engine | str = Engine.BACKTRACK,
) -> int:
    """Visit every exact cover once; returns the number of solutions."""
    engine = Engine(engine)
    if engine is Engine.BACKTRACK:
        return _backtrack(problem, visitor)
    return _dancing_links(problem, visitor)


def count_completions(problem: CoverProblem, engine: Engine | str = Engine.BACKTRACK) -> int:
    return enumerate_completions(problem, None, engine)


# -- engine 1: bitmask backtracking with minimum-remaining-values ----------------


def _backtrack(problem: CoverProblem, visitor: SolutionVisitor | None) -> int:
    v = problem.v
    adj = [0] * v
    for a, b in problem.items:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    optz = [[0] * v for _ in range(v)]
    for a, b, c in problem.options:
        optz[a][b] |= 1 << c
        optz[b][a] |= 1 << c
        optz[a][c] |= 1 << b
        optz[c][a] |= 1 << b
        optz[b][c] |= 1 << a
        optz[c][b] |= 1 << a
    fixed = problem.fixed
    chosen: list[Triple] = []
    count = 0

    def rec() -> None:
        nonlocal count
        bx = by = -1
        bcand = 0
        bc = 1 << 30
        for x in range(v):
            ax = adj[x]
            m = ax >> (x + 1)
            base = x + 1
            ox = optz[x]
            while m:
                low = m & -m
                y = base + low.bit_length() - 1
                m ^= low
                cand = ax & adj[y] & ox[y]
                c = cand.bit_count()
                if c < bc:
                    if c == 0:
                        return
                    bc, bx, by, bcand = c, x, y, cand
                    if c == 1:
                        break
            if bc == 1:
                break
        if bx < 0:
            count += 1
            if visitor is not None:
                visitor(Design._trusted(v, tuple(sorted(fixed + tuple(chosen)))))
            return
        x, y = bx, by
        mx, my = 1 << x, 1 << y
        while bcand:
            low = bcand & -bcand
            bcand ^= low
            z = low.bit_length() - 1
            mz = low
            adj[x] ^= my | mz
            adj[y] ^= mx | mz
            adj[z] ^= mx | my
            chosen.append((x, y, z) if z > y else ((x, z, y) if z > x else (z, x, y)))
            rec()
            chosen.pop()
            adj[x] ^= my | mz
            adj[y] ^= mx | mz
            adj[z] ^= mx | my

    rec()
    return count


# -- engine 2: dancing links ----------------------------------------------------


def _dancing_links(problem: CoverProblem, visitor: SolutionVisitor | None) -> int:
    items = list(problem.items)
    ncol = len(items)
    col_of = {p: i + 1 for i, p in enumerate(items)}
    # node 0 is the root; nodes 1..ncol are column headers
    L = list(range(-1, ncol))
    R = list(range(1, ncol + 2))
    L[0] = ncol
    R[ncol] = 0
    U = list(range(ncol + 1))
    D = list(range(ncol + 1))
    C = list(range(ncol + 1))
    S = [0] * (ncol + 1)
    row_of = [-1] * (ncol + 1)
    options = list(problem.options)
    for r, t in enumerate(options):
        first = -1
        for p in triple_pairs(t):
            c = col_of[p]
            n = len(C)
            C.append(c)
            row_of.append(r)
            U.append(U[c])
            D.append(c)
            D[U[c]] = n
            U[c] = n
            S[c] += 1
            if first < 0:
                first = n
                L.append(n)
                R.append(n)
            else:
                L.append(L[first])
                R.append(first)
                R[L[first]] = n
                L[first] = n

    def cover(c):
        L[R[c]] = L[c]
        R[L[c]] = R[c]
        i = D[c]
        while i != c:
            j = R[i]
            while j != i:
                U[D[j]] = U[j]
                D[U[j]] = D[j]
                S[C[j]] -= 1
                j = R[j]
            i = D[i]

    def uncover(c):
        i = U[c]
        while i != c:
            j = L[i]
            while j != i:
                S[C[j]] += 1
                U[D[j]] = j
                D[U[j]] = j
                j = L[j]
            i = U[i]
        L[R[c]] = c
        R[L[c]] = c

    partial: list[int] = []
    count = 0
    v = problem.v
    fixed = problem.fixed

    def search():
        nonlocal count
        if R[0] == 0:
            count += 1
            if visitor is not None:
                ts = tuple(sorted(fixed + tuple(options[r] for r in partial)))
                visitor(Design._trusted(v, ts))
            return
        c = R[0]
        best = c
        while c != 0:
            if S[c] < S[best]:
                best = c
            c = R[c]
        c = best
        if S[c] == 0:
            return
        cover(c)
        r = D[c]
        while r != c:
            partial.append(row_of[r])
            j = R[r]
            while j != r:
                cover(C[j])
                j = R[j]
            search()
            j = L[r]
            while j != r:
                uncover(C[j])
                j = L[j]
            partial.pop()
            r = D[r]
        uncover(c)

    search()
    return count
