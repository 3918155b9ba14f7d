"""Maps between orders and between Type-Q systems and PBD(v, {3, 5*})s."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .design import (
    Claim,
    Design,
    DesignError,
    LeaveKind,
    Pair,
    Pbd35,
    SystemType,
    WrongLeaveShape,
    classify_type,
    diagonal_triples,
    pair,
    triple,
    validate,
)


class NotLeavePoint(DesignError):
    code = "NotLeavePoint"


class InvalidChoice(DesignError):
    code = "InvalidChoice"


class NotTypeQ(DesignError):
    code = "NotTypeQ"


class IndexOutOfRange(DesignError):
    code = "IndexOutOfRange"


def leave_normalizing_perm(design: Design) -> list[int]:
    """A point map sending the leave of ``design`` onto the standard leave."""
    v = design.v
    shape = design.leave_shape()
    lab = [-1] * v
    nxt = 0
    if shape.kind is LeaveKind.FOUR_CYCLE:
        for i, x in enumerate(shape.points):
            lab[x] = i
        nxt = 4
    elif shape.kind in (LeaveKind.TRIPOD_MATCHING, LeaveKind.K5):
        for i, x in enumerate(shape.points):
            lab[x] = i
        nxt = len(shape.points)
    elif shape.kind is LeaveKind.OTHER:
        raise WrongLeaveShape("leave has no standard position")
    for a, b in shape.matching:
        lab[a], lab[b] = nxt, nxt + 1
        nxt += 2
    for x in range(v):
        if lab[x] < 0:
            lab[x] = nxt
            nxt += 1
    return lab


def normalize_leave(design: Design) -> Design:
    return design.relabel(leave_normalizing_perm(design))


def delete_point(design: Design, x: int, normalize: bool = True) -> Design:
    """Remove ``x`` and its triples, renumber to 0..v-2 and (by default) move the leave into place."""
    v = design.v
    if not 0 <= x < v:
        raise NotLeavePoint(f"point {x} is outside 0..{v - 1}")
    if v % 6 == 5 and x not in design.leave_shape().points:
        raise NotLeavePoint(f"point {x} is not on the leave 4-cycle")
    shift = [y if y < x else y - 1 for y in range(v)]
    ts = [
        triple(shift[a], shift[b], shift[c]) for a, b, c in design.triples if x not in (a, b, c)
    ]
    out = Design(v - 1, ts)
    if not validate(out, Claim.MMPTS).ok:
        raise NotLeavePoint(f"deleting point {x} does not leave a maximum system")
    return normalize_leave(out) if normalize else out


def extension_choices(design: Design) -> list[Pair]:
    shape = design.leave_shape()
    if shape.kind is not LeaveKind.TRIPOD_MATCHING:
        raise WrongLeaveShape(f"expected a tripod+matching leave, got {shape.kind.value}")
    centre, *arms = shape.points
    return [pair(centre, a) for a in arms]


def extend_point(design: Design, choice: Sequence[int]) -> Design:
    """Add point v on every matching pair and on the chosen tripod pair."""
    choices = extension_choices(design)
    choice = pair(*choice)
    if choice not in choices:
        raise InvalidChoice(f"{choice} is not one of the tripod pairs {choices}")
    v = design.v
    shape = design.leave_shape()
    new = [triple(a, b, v) for a, b in shape.matching] + [triple(*choice, v)]
    return Design(v + 1, design.triples + tuple(new))


def to_pbd(design: Design) -> Pbd35:
    """Replace the two diagonal triples of a Type-Q system by one quintuple block."""
    if classify_type(design) is not SystemType.TYPE_Q:
        raise NotTypeQ("the diagonal triples do not share their third point")
    shape, t1, t2 = diagonal_triples(design)
    a, _, c, _ = shape.points
    e = sum(t1) - a - c
    rest = tuple(t for t in design.triples if t not in (t1, t2))
    pbd = Pbd35(design.v, rest, (*shape.points, e))
    pbd.check()
    return pbd


# the three 4-cycles on p0 < p1 < p2 < p3 in lexicographic order, by diagonal pairs
_DIAGONALS = (((0, 2), (1, 3)), ((0, 3), (1, 2)), ((0, 1), (2, 3)))


def from_pbd(pbd: Pbd35, index: int) -> Design:
    """Completion ``index`` = 3 * apex_rank + cycle_rank of the quintuple block."""
    if not 0 <= index < 15:
        raise IndexOutOfRange(f"completion index must be in 0..14, got {index}")
    q = pbd.quintuple
    apex = q[index // 3]
    p = [x for x in q if x != apex]
    new = [triple(p[i], p[j], apex) for i, j in _DIAGONALS[index % 3]]
    return Design(pbd.v, pbd.triples + tuple(new))


def completion_index(design: Design, pbd: Pbd35) -> int:
    """The index for which ``from_pbd(pbd, index)`` restores ``design``."""
    for i in range(15):
        if from_pbd(pbd, i) == design:
            return i
    raise ValueError("design is not a completion of this PBD")


class DeriveOp(enum.Enum):
    DELETE_LEAVE_POINTS = "delete-point"
    TO_PBD = "to-pbd"
    FROM_PBD = "from-pbd"


@dataclass
class DeriveResult:
    raw: int
    classes: dict[bytes, Design]
    skipped: int = 0
    # for from-pbd: how many distinct classes each input PBD produced
    per_item: list[int] = field(default_factory=list)

    def sorted_designs(self) -> list[Design]:
        return [self.classes[k] for k in sorted(self.classes)]


def deletion_points(design: Design) -> list[int]:
    if design.v % 6 == 5:
        return list(design.leave_shape().points)
    if not design.leave:
        return list(range(design.v))
    raise WrongLeaveShape(f"no deletion rule for order {design.v}")


def derive_all(items: Iterable, op: DeriveOp | str) -> DeriveResult:
    """Apply ``op`` over a corpus and keep one canonical representative per class."""
    from .canonical import canonical_form

    op = DeriveOp(op)
    result = DeriveResult(0, {})

    def keep(d: Design) -> bytes:
        form, _ = canonical_form(d, with_group=False)
        result.classes.setdefault(form.key, form.design)
        result.raw += 1
        return form.key

    for item in items:
        if op is DeriveOp.DELETE_LEAVE_POINTS:
            for x in deletion_points(item):
                keep(delete_point(item, x))
        elif op is DeriveOp.TO_PBD:
            if classify_type(item) is not SystemType.TYPE_Q:
                result.skipped += 1
                continue
            keep(to_pbd(item).as_design())
        else:
            pbd = item if isinstance(item, Pbd35) else design_to_pbd(item)
            result.per_item.append(len({keep(from_pbd(pbd, i)) for i in range(15)}))
    return result


def design_to_pbd(design: Design) -> Pbd35:
    """Read a triples-only design whose leave is a K5 as a PBD."""
    shape = design.leave_shape()
    if shape.kind is not LeaveKind.K5:
        raise WrongLeaveShape("leave is not a complete graph on five points")
    pbd = Pbd35(design.v, design.triples, shape.points)
    pbd.check()
    return pbd
