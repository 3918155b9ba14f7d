"""Partial triple systems: the core design type, validation and classification."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

Pair = tuple[int, int]
Triple = tuple[int, int, int]


class DesignError(ValueError):
    """Base class for structural problems with a design."""

    code = "DesignError"


class DuplicatePair(DesignError):
    code = "DuplicatePair"


class WrongBlockCount(DesignError):
    code = "WrongBlockCount"


class WrongLeaveShape(DesignError):
    code = "WrongLeaveShape"


class InadmissibleOrder(DesignError):
    code = "InadmissibleOrder"


class LeaveKind(enum.Enum):
    EMPTY = "empty"
    FOUR_CYCLE = "four-cycle"
    MATCHING = "matching"
    TRIPOD_MATCHING = "tripod+matching"
    K5 = "k5"
    OTHER = "other"


class Claim(enum.Enum):
    PTS = "pts"
    MMPTS = "mmpts"
    STS = "sts"

    @classmethod
    def _missing_(cls, value):
        if isinstance(value, str):
            return cls.__members__.get(value.upper())
        return None


class SystemType(enum.Enum):
    TYPE_Q = "Q"
    TYPE_N = "N"
    NOT_APPLICABLE = "-"


def pair(a: int, b: int) -> Pair:
    return (a, b) if a < b else (b, a)


def triple(a: int, b: int, c: int) -> Triple:
    return tuple(sorted((a, b, c)))  # type: ignore[return-value]


def triple_pairs(t: Sequence[int]) -> tuple[Pair, Pair, Pair]:
    a, b, c = t
    return (a, b), (a, c), (b, c)


def leave_size(v: int) -> int:
    """Number of uncovered pairs in a maximum partial triple system of order ``v``."""
    r = v % 6
    if r in (1, 3):
        return 0
    if r in (0, 2):
        return v // 2
    if r == 4:
        return (v + 2) // 2
    return 4


def block_count(v: int) -> int:
    """b(v): the number of triples of an MMPTS(v)."""
    return (v * (v - 1) // 2 - leave_size(v)) // 3


def leave_kind_for_order(v: int) -> LeaveKind:
    r = v % 6
    if r in (1, 3):
        return LeaveKind.EMPTY
    if r in (0, 2):
        return LeaveKind.MATCHING
    if r == 4:
        return LeaveKind.TRIPOD_MATCHING
    return LeaveKind.FOUR_CYCLE


def expected_leave_and_blocks(v: int) -> tuple[LeaveKind, int]:
    if v < 3:
        raise ValueError(f"order must be at least 3, got {v}")
    return leave_kind_for_order(v), block_count(v)


@dataclass(frozen=True)
class LeaveShape:
    """Shape of a leave graph.

    ``points`` carries the structural points of the shape: the 4-cycle in
    cyclic order, the tripod centre followed by its three arms, or the five
    points of a K5.  ``matching`` lists the disjoint pairs outside it.
    """

    kind: LeaveKind
    points: tuple[int, ...] = ()
    matching: tuple[Pair, ...] = ()


def classify_leave(v: int, leave: Iterable[Pair]) -> LeaveShape:
    """Recognise which of the standard leave shapes ``leave`` has."""
    leave = sorted(pair(*p) for p in leave)
    if not leave:
        return LeaveShape(LeaveKind.EMPTY)
    nbrs: dict[int, list[int]] = {}
    for a, b in leave:
        nbrs.setdefault(a, []).append(b)
        nbrs.setdefault(b, []).append(a)
    degs = {x: len(ns) for x, ns in nbrs.items()}
    deg_values = sorted(degs.values())

    if all(d == 1 for d in deg_values):
        return LeaveShape(LeaveKind.MATCHING, matching=tuple(leave))

    if len(leave) == 4 and deg_values == [2, 2, 2, 2]:
        a = min(nbrs)
        b, d = sorted(nbrs[a])
        cs = set(nbrs[b]) & set(nbrs[d])
        cs.discard(a)
        if len(cs) == 1:
            c = cs.pop()
            return LeaveShape(LeaveKind.FOUR_CYCLE, points=(a, b, c, d))

    centres = [x for x, d in degs.items() if d == 3]
    if len(centres) == 1 and all(d in (1, 3) for d in deg_values):
        c = centres[0]
        arms = sorted(nbrs[c])
        if all(degs[a] == 1 for a in arms):
            rest = tuple(p for p in leave if c not in p)
            return LeaveShape(LeaveKind.TRIPOD_MATCHING, points=(c, *arms), matching=rest)

    if len(leave) == 10 and deg_values == [4] * 5:
        return LeaveShape(LeaveKind.K5, points=tuple(sorted(nbrs)))

    return LeaveShape(LeaveKind.OTHER)


class Design:
    """A set of triples on the points ``0 .. v-1``.

    Triples are stored sorted and the triple list is kept in lexicographic
    order.  The leave (pairs in no triple) is derived and cached, as is the
    pair -> covering-triple table.  Pair-disjointness is *not* enforced here;
    use :func:`validate` for that.
    """

    __slots__ = ("v", "triples", "_leave", "_cover", "_third")

    def __init__(self, v: int, triples: Iterable[Sequence[int]]):
        if v < 1:
            raise ValueError(f"order must be positive, got {v}")
        ts = set()
        for t in triples:
            if len(t) != 3 or len(set(t)) != 3:
                raise DesignError(f"not a triple of distinct points: {t!r}")
            s = triple(*t)
            if s[0] < 0 or s[2] >= v:
                raise DesignError(f"triple {s} has a point outside 0..{v - 1}")
            ts.add(s)
        self.v = v
        self.triples: tuple[Triple, ...] = tuple(sorted(ts))
        self._leave = None
        self._cover = None
        self._third = None

    @classmethod
    def _trusted(cls, v: int, triples: tuple[Triple, ...]) -> "Design":
        # triples already sorted, unique and in range
        d = cls.__new__(cls)
        d.v = v
        d.triples = triples
        d._leave = None
        d._cover = None
        d._third = None
        return d

    def __repr__(self) -> str:
        return f"Design(v={self.v}, b={len(self.triples)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Design):
            return NotImplemented
        return self.v == other.v and self.triples == other.triples

    def __hash__(self) -> int:
        return hash((self.v, self.triples))

    def __len__(self) -> int:
        return len(self.triples)

    @property
    def cover_table(self) -> list[list[Triple | None]]:
        """v x v table mapping each pair to its (last seen) covering triple."""
        if self._cover is None:
            v = self.v
            table: list[list[Triple | None]] = [[None] * v for _ in range(v)]
            for t in self.triples:
                for a, b in triple_pairs(t):
                    table[a][b] = t
                    table[b][a] = t
            self._cover = table
        return self._cover

    @property
    def third(self) -> list[list[int]]:
        """``third[x][y]`` is the third point of the triple on ``xy``, or -1."""
        if self._third is None:
            v = self.v
            th = [[-1] * v for _ in range(v)]
            for a, b, c in self.triples:
                th[a][b] = th[b][a] = c
                th[a][c] = th[c][a] = b
                th[b][c] = th[c][b] = a
            self._third = th
        return self._third

    @property
    def leave(self) -> frozenset[Pair]:
        if self._leave is None:
            table = self.cover_table
            v = self.v
            self._leave = frozenset(
                (a, b) for a in range(v) for b in range(a + 1, v) if table[a][b] is None
            )
        return self._leave

    def leave_shape(self) -> LeaveShape:
        return classify_leave(self.v, self.leave)

    def leave_degrees(self) -> list[int]:
        deg = [0] * self.v
        for a, b in self.leave:
            deg[a] += 1
            deg[b] += 1
        return deg

    def point_degrees(self) -> list[int]:
        deg = [0] * self.v
        for t in self.triples:
            for x in t:
                deg[x] += 1
        return deg

    def relabel(self, perm: Sequence[int]) -> "Design":
        """Image of the design under the point map ``x -> perm[x]``."""
        ts = tuple(sorted(triple(perm[a], perm[b], perm[c]) for a, b, c in self.triples))
        return Design._trusted(self.v, ts)

    def with_triples(self, triples: Iterable[Sequence[int]]) -> "Design":
        return Design(self.v, triples)


@dataclass(frozen=True)
class Pbd35:
    """A PBD(v, {3, 5*}): triples plus a single block of size five."""

    v: int
    triples: tuple[Triple, ...]
    quintuple: tuple[int, int, int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "triples", tuple(sorted(triple(*t) for t in self.triples)))
        object.__setattr__(self, "quintuple", tuple(sorted(self.quintuple)))

    def check(self) -> None:
        """Raise :class:`DesignError` unless every pair is covered exactly once."""
        if len(set(self.quintuple)) != 5 or not all(0 <= x < self.v for x in self.quintuple):
            raise DesignError(f"bad quintuple block {self.quintuple}")
        seen = {p: "block" for p in combinations(self.quintuple, 2)}
        for t in self.triples:
            for p in triple_pairs(t):
                if p in seen:
                    raise DuplicatePair(f"pair {p} in {t} already covered by {seen[p]}")
                seen[p] = t
        missing = self.v * (self.v - 1) // 2 - len(seen)
        if missing:
            raise DesignError(f"{missing} pairs are not covered")

    def as_design(self) -> Design:
        """The triples alone, leaving the ten quintuple pairs uncovered."""
        return Design(self.v, self.triples)


@dataclass
class ValidationReport:
    claim: Claim
    leave: frozenset[Pair]
    shape: LeaveShape
    errors: list[DesignError] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors

    def raise_first(self) -> None:
        if self.errors:
            raise self.errors[0]


def validate(design: Design, claim: Claim | str = Claim.PTS) -> ValidationReport:
    """Check ``design`` against a PTS, MMPTS or STS claim.

    Every violation found is collected in the report rather than raised.
    """
    claim = Claim(claim)
    v = design.v
    if v < 3:
        raise ValueError(f"order must be at least 3, got {v}")
    errors: list[DesignError] = []
    seen: dict[Pair, Triple] = {}
    for t in design.triples:
        for p in triple_pairs(t):
            if p in seen:
                errors.append(DuplicatePair(f"pair {p} occurs in both {seen[p]} and {t}"))
            else:
                seen[p] = t
    leave = frozenset(
        (a, b) for a in range(v) for b in range(a + 1, v) if (a, b) not in seen
    )
    shape = classify_leave(v, leave)

    if claim is Claim.STS:
        if v % 6 not in (1, 3):
            errors.append(InadmissibleOrder(f"no STS of order {v}: v must be 1 or 3 mod 6"))
        if leave:
            errors.append(WrongLeaveShape(f"STS claim but {len(leave)} pairs are uncovered"))
    elif claim is Claim.MMPTS:
        b = block_count(v)
        if len(design.triples) != b:
            errors.append(WrongBlockCount(f"expected {b} triples, found {len(design.triples)}"))
        want = leave_kind_for_order(v)
        if shape.kind is not want or len(leave) != leave_size(v):
            errors.append(
                WrongLeaveShape(f"leave of order {v} should be {want.value}, got {shape.kind.value}")
            )
    return ValidationReport(claim, leave, shape, errors)


def check(design: Design, claim: Claim | str = Claim.PTS) -> Design:
    """Like :func:`validate` but raises the first problem; returns the design."""
    validate(design, claim).raise_first()
    return design


def diagonal_triples(design: Design) -> tuple[LeaveShape, Triple, Triple]:
    """For a v = 5 (mod 6) MMPTS, the triples covering the two leave diagonals."""
    shape = design.leave_shape()
    if shape.kind is not LeaveKind.FOUR_CYCLE:
        raise WrongLeaveShape(f"expected a 4-cycle leave, got {shape.kind.value}")
    a, b, c, d = shape.points
    table = design.cover_table
    t1, t2 = table[a][c], table[b][d]
    if t1 is None or t2 is None:
        raise WrongLeaveShape("a diagonal of the leave 4-cycle is uncovered")
    return shape, t1, t2


def classify_type(design: Design) -> SystemType:
    """Type-Q / Type-N classification of an MMPTS of order 4 or 5 mod 6."""
    r = design.v % 6
    if r == 5:
        shape, t1, t2 = diagonal_triples(design)
        a, b, c, d = shape.points
        e = sum(t1) - a - c
        f = sum(t2) - b - d
        return SystemType.TYPE_Q if e == f else SystemType.TYPE_N
    if r == 4:
        return SystemType.TYPE_Q if SystemType.TYPE_Q in extension_types(design) else SystemType.TYPE_N
    return SystemType.NOT_APPLICABLE


def extension_types(design: Design) -> list[SystemType]:
    """Types of the three one-point extensions of a v = 4 (mod 6) MMPTS."""
    from .transforms import extend_point

    shape = design.leave_shape()
    if shape.kind is not LeaveKind.TRIPOD_MATCHING:
        raise WrongLeaveShape(f"expected a tripod+matching leave, got {shape.kind.value}")
    centre, *arms = shape.points
    return [classify_type(extend_point(design, pair(centre, a))) for a in arms]
