"""Starting points for the completion search.

``paper_seeds`` are the nine (plus one redundant) partial MMPTS(17)s with
leave {01, 03, 12, 23}.  ``small_order_seeds`` fixes the canonical leave and
the star of point 0 once per orbit; ``deepen`` adds the stars of further
points, keeping one partial design per isomorphism class.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .canonical import partial_key
from .design import Pair, Triple, pair, triple, triple_pairs
from .search import Seed

log = logging.getLogger(__name__)

PAPER_LEAVE: frozenset[Pair] = frozenset({(0, 1), (0, 3), (1, 2), (2, 3)})

_COMMON = [(0, 2, 4), (0, 5, 6), (0, 7, 8), (0, 9, 10), (0, 11, 12), (0, 13, 14), (0, 15, 16), (2, 5, 7)]

# the six columns of the published point-2 triples, by seed suffix
_POINT_TWO = {
    "1": [(2, 6, 8), (2, 9, 11), (2, 10, 12), (2, 13, 15), (2, 14, 16)],
    "2": [(2, 6, 8), (2, 9, 11), (2, 10, 13), (2, 12, 15), (2, 14, 16)],
    "3": [(2, 6, 9), (2, 8, 10), (2, 11, 13), (2, 12, 15), (2, 14, 16)],
    "4": [(2, 6, 9), (2, 8, 11), (2, 10, 12), (2, 13, 15), (2, 14, 16)],
    "5": [(2, 6, 9), (2, 8, 11), (2, 10, 13), (2, 12, 15), (2, 14, 16)],
}

# Q-seed columns reuse the N-seed point-2 columns in this order
_Q_COLUMNS = {"Q1": "1", "Q2": "2", "Q3": "3", "Q2a": "4", "Q4": "5"}

Q2_TO_Q2A = {5: 13, 13: 5, 6: 14, 14: 6, 7: 15, 15: 10, 10: 7, 8: 16, 16: 9, 9: 8}

SEARCH_SEED_NAMES = ("N1", "N2", "N3", "N4", "N5", "Q1", "Q2", "Q3", "Q4")


class RedundancyMismatch(AssertionError):
    pass


def canonical_leave(v: int) -> frozenset[Pair]:
    """The fixed leave used for order ``v``."""
    if v < 3:
        raise ValueError(f"order must be at least 3, got {v}")
    r = v % 6
    if r in (1, 3):
        return frozenset()
    if r == 5:
        return PAPER_LEAVE
    if r in (0, 2):
        return frozenset((i, i + 1) for i in range(0, v, 2))
    return frozenset({(0, 1), (0, 2), (0, 3)} | {(i, i + 1) for i in range(4, v, 2)})


def paper_seeds() -> dict[str, Seed]:
    """The ten published v = 17 seeds, keyed N1..N5, Q1, Q2, Q3, Q2a, Q4."""
    out = {}
    for k in "12345":
        ts = _COMMON + [(1, 3, 5)] + _POINT_TWO[k]
        out[f"N{k}"] = Seed(17, tuple(ts), PAPER_LEAVE, f"N{k}").check()
    for name, k in _Q_COLUMNS.items():
        ts = _COMMON + [(1, 3, 4)] + _POINT_TWO[k]
        out[name] = Seed(17, tuple(ts), PAPER_LEAVE, name).check()
    return out


def apply_map(triples: Iterable[Triple], mapping: dict[int, int]) -> tuple[Triple, ...]:
    return tuple(sorted(triple(*(mapping.get(x, x) for x in t)) for t in triples))


def seed_key(seed: Seed, centres: Sequence[int] = ()) -> bytes:
    colors = None
    if centres:
        colors = [0] * seed.v
        for c in centres:
            colors[c] = 1
    key, _ = partial_key(seed.v, seed.fixed_triples, seed.leave, colors)
    return key


@dataclass
class RedundancyReport:
    q2_maps_to_q2a: bool
    identity_ok: bool
    collisions: list[tuple[str, str]]

    @property
    def ok(self) -> bool:
        return self.q2_maps_to_q2a and self.identity_ok and self.collisions == [("Q2", "Q2a")]


def check_seed_redundancy() -> RedundancyReport:
    """Confirm the Q2 -> Q2a isomorphism and that no other seeds coincide."""
    seeds = paper_seeds()
    image = apply_map(seeds["Q2"].fixed_triples, Q2_TO_Q2A)
    mapped = image == seeds["Q2a"].fixed_triples
    ident = apply_map(seeds["N1"].fixed_triples, {}) == seeds["N1"].fixed_triples
    keys = {name: seed_key(s) for name, s in seeds.items()}
    names = list(seeds)
    collisions = [
        (a, b) for i, a in enumerate(names) for b in names[i + 1:] if keys[a] == keys[b]
    ]
    report = RedundancyReport(mapped, ident, collisions)
    if not mapped:
        raise RedundancyMismatch("the stated permutation does not map Q2 onto Q2a")
    return report


# -- small orders -----------------------------------------------------------------


def _partitions(n: int, smallest: int) -> Iterator[list[int]]:
    if n == 0:
        yield []
        return
    for k in range(smallest, n + 1):
        for rest in _partitions(n - k, k):
            yield [k] + rest


def _alternating_star(edges: Sequence[Pair], parts: Sequence[int]) -> list[Pair]:
    """Matching closing the given leave edges into cycles of the given sizes."""
    out = []
    i = 0
    for k in parts:
        cyc = edges[i:i + k]
        i += k
        for j in range(k):
            out.append(pair(cyc[j][1], cyc[(j + 1) % k][0]))
    return out


def small_order_seeds(v: int) -> list[Seed]:
    """Leave plus one star of point 0 per orbit of the leave stabiliser fixing 0."""
    if not 3 <= v <= 17:
        raise ValueError(f"small-order seeds cover 3 <= v <= 17, got {v}")
    leave = canonical_leave(v)
    r = v % 6
    if r in (1, 3):
        stars = [[(i, i + 1) for i in range(1, v, 2)]]
        names = ["star"]
    elif r == 5:
        stars = [[(2, 4)] + [(i, i + 1) for i in range(5, v, 2)]]
        names = ["star"]
    else:
        start = 2 if r in (0, 2) else 4
        edges = [(i, i + 1) for i in range(start, v, 2)]
        stars = []
        names = []
        for parts in _partitions(len(edges), 2):
            stars.append(_alternating_star(edges, parts))
            names.append("cycles" + "-".join(str(2 * k) for k in parts))
        if not edges:
            stars, names = [[]], ["star"]
    seeds = []
    for name, star in zip(names, stars):
        ts = tuple(triple(0, a, b) for a, b in star)
        seeds.append(Seed(v, ts, leave, f"v{v}-{name}").check())
    return seeds


def _open_pairs_at(seed: Seed, y: int, covered: set[Pair]) -> list[int]:
    return [
        z for z in range(seed.v)
        if z != y and pair(y, z) not in covered and pair(y, z) not in seed.leave
    ]


def star_completions(seed: Seed, y: int) -> Iterator[tuple[Triple, ...]]:
    """All ways to cover the open pairs at ``y`` by triples through ``y``."""
    covered = set(seed.covered)
    nbrs = _open_pairs_at(seed, y, covered)
    blocked = covered | seed.leave

    def rec(rest: list[int], acc: list[Triple]):
        if not rest:
            yield tuple(acc)
            return
        a = rest[0]
        for i in range(1, len(rest)):
            b = rest[i]
            if pair(a, b) in blocked:
                continue
            acc.append(triple(y, a, b))
            yield from rec(rest[1:i] + rest[i + 1:], acc)
            acc.pop()

    yield from rec(nbrs, [])


@dataclass(frozen=True)
class StagedSeed:
    """A seed together with the points whose stars it fixes."""

    seed: Seed
    centres: tuple[int, ...]


def _next_centre(seed: Seed, centres: Sequence[int]) -> int:
    # any point will do, since every completion contains exactly one star at it;
    # the point with fewest open pairs keeps the branching smallest
    covered = set(seed.covered)
    best = min(
        (x for x in range(seed.v) if x not in centres),
        key=lambda x: (len(_open_pairs_at(seed, x, covered)), x),
    )
    return best


def deepen(seeds: Sequence[StagedSeed], levels: int = 1) -> list[StagedSeed]:
    """Add the star of one more point, keeping one seed per isomorphism class.

    Every completion of a seed contains exactly one star at the new centre, so
    the children of a seed together reach all of its completions.  Children
    are identified up to isomorphisms respecting the leave and the set of
    centres, which leaves the class set reached by completion unchanged.
    """
    current = list(seeds)
    for _ in range(levels):
        found: dict[bytes, StagedSeed] = {}
        for st in current:
            seed = st.seed
            v = seed.v
            y = _next_centre(seed, st.centres)
            for star in star_completions(seed, y):
                child = Seed(v, seed.fixed_triples + star, seed.leave, seed.name)
                centres = st.centres + (y,)
                key = seed_key(child, centres)
                if key not in found:
                    found[key] = StagedSeed(child, centres)
        current = [found[k] for k in sorted(found)]
        log.info("deepened to %d partial designs", len(current))
    return [
        StagedSeed(Seed(s.seed.v, s.seed.fixed_triples, s.seed.leave, f"{s.seed.name}/{i}"), s.centres)
        for i, s in enumerate(current)
    ]


def staged_seeds(v: int, centres: int) -> list[Seed]:
    """Small-order seeds deepened until ``centres`` points have fixed stars."""
    base = [StagedSeed(s, (0,)) for s in small_order_seeds(v)]
    if centres > 1:
        base = deepen(base, centres - 1)
    return [s.seed for s in base]
