"""Canonical labelling of triple systems by individualization-refinement.

A design is viewed as its point/block incidence structure together with any
marked pairs (the leave) and an initial point colouring.  Point partitions are
refined until equitable, using block signatures, leave adjacency and, for
regular designs, a pair invariant: the component structure of the union of
the two derived matchings at a pair of points.  The search tree is pruned by
refinement traces and by automorphisms as they are discovered.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .design import (
    Design,
    LeaveKind,
    LeaveShape,
    Pair,
    Triple,
    classify_leave,
    leave_kind_for_order,
    leave_size,
    pair,
)
from .groups import StabChain, small_group_name

ORDER_RULE = "order"
LEAVE_RULE = "leave"


@dataclass(frozen=True)
class GroupInfo:
    generators: tuple[tuple[int, ...], ...]
    order: int
    name: str | None = None


@dataclass(frozen=True)
class CanonicalForm:
    """Relabelling-invariant key of a design; equal keys iff isomorphic.

    For complete systems with a standard leave the key is the compact string
    of the canonically relabelled design.
    """

    key: bytes
    design: Design = field(compare=False, hash=False, repr=False)
    perm: tuple[int, ...] = field(compare=False, hash=False, repr=False)

    @property
    def text(self) -> str:
        return self.key.decode("ascii", errors="replace")


def _pair_type_matrix(v: int, third: list[list[int]]) -> list[list[int]]:
    """Isomorphism-invariant colour of every ordered pair of points."""
    types: dict[tuple, int] = {}
    raw = [[None] * v for _ in range(v)]
    for x in range(v):
        tx = third[x]
        for y in range(x + 1, v):
            ty = third[y]
            seen = [False] * v
            seen[x] = seen[y] = True
            comps = []
            for z in range(v):
                if seen[z]:
                    continue
                seen[z] = True
                stack = [z]
                nodes = 0
                degsum = 0
                while stack:
                    w = stack.pop()
                    nodes += 1
                    a = tx[w]
                    if a >= 0 and a != y:
                        degsum += 1
                        if not seen[a]:
                            seen[a] = True
                            stack.append(a)
                    b = ty[w]
                    if b >= 0 and b != x:
                        degsum += 1
                        if not seen[b]:
                            seen[b] = True
                            stack.append(b)
                comps.append(nodes * 64 + degsum)
            comps.sort()
            key = (tx[y] >= 0, tuple(comps))
            raw[x][y] = raw[y][x] = key
            types[key] = 0
    for i, key in enumerate(sorted(types)):
        types[key] = i + 1
    return [[types[raw[x][y]] if x != y else 0 for y in range(v)] for x in range(v)]


class _Labeller:
    def __init__(
        self,
        v: int,
        triples: Sequence[Triple],
        pairs: Iterable[Pair],
        colors: Sequence[int] | None,
        rule: str,
        shape: LeaveShape | None,
        compact: bool,
        use_pair_types: bool | None = None,
    ):
        self.v = v
        self.triples = list(triples)
        self.pairs = sorted(pair(*p) for p in pairs)
        self.rule = rule
        self.shape = shape
        self.compact = compact
        blocks_at: list[list[tuple[int, int]]] = [[] for _ in range(v)]
        third = [[-1] * v for _ in range(v)]
        for a, b, c in self.triples:
            blocks_at[a].append((b, c))
            blocks_at[b].append((a, c))
            blocks_at[c].append((a, b))
            third[a][b] = third[b][a] = c
            third[a][c] = third[c][a] = b
            third[b][c] = third[c][b] = a
        nbr: list[list[int]] = [[] for _ in range(v)]
        for a, b in self.pairs:
            nbr[a].append(b)
            nbr[b].append(a)
        self.blocks_at = blocks_at
        self.nbr = nbr
        self.third = third
        self.ptype: list[list[int]] | None = None
        self._use_pair_types = use_pair_types

        base = list(colors) if colors is not None else [0] * v
        init = [(base[x], len(blocks_at[x]), len(nbr[x])) for x in range(v)]
        self.root_color = self._colors_from_keys(init)
        self.generators: list[tuple[int, ...]] = []

    @staticmethod
    def _colors_from_keys(keys: Sequence) -> list[int]:
        return _colors_and_cells(keys)[0]

    def refine(self, color: list[int]) -> tuple[list[int], int]:
        """Refine to an equitable partition; returns colours and a trace hash."""
        v = self.v
        blocks_at = self.blocks_at
        nbr = self.nbr
        ptype = self.ptype
        ncells = len(set(color))
        trace = ncells
        while True:
            keys = []
            for x in range(v):
                bs = tuple(sorted(
                    (color[a] * v + color[b]) if color[a] < color[b] else (color[b] * v + color[a])
                    for a, b in blocks_at[x]
                ))
                ls = tuple(sorted(color[y] for y in nbr[x]))
                if ptype is not None:
                    px = ptype[x]
                    ps = tuple(sorted(color[y] * 256 + px[y] for y in range(v)))
                    keys.append((color[x], bs, ls, ps))
                else:
                    keys.append((color[x], bs, ls))
            new, cells = _colors_and_cells(keys)
            trace = hash((trace, cells))
            n = len(cells)
            color = new
            if n == ncells or n == v:
                return color, trace
            ncells = n

    def relabel_from_order(self, order: Sequence[int]) -> list[int]:
        """Point -> new label, respecting the leave shape when requested."""
        v = self.v
        lab = [-1] * v
        if self.rule == ORDER_RULE or self.shape is None or self.shape.kind in (LeaveKind.EMPTY, LeaveKind.OTHER):
            for i, x in enumerate(order):
                lab[x] = i
            return lab
        rank = [0] * v
        for i, x in enumerate(order):
            rank[x] = i
        kind = self.shape.kind
        nxt = 0
        if kind is LeaveKind.FOUR_CYCLE:
            cyc = self.shape.points
            i0 = min(range(4), key=lambda i: rank[cyc[i]])
            a = cyc[i0]
            b, d = cyc[(i0 + 1) % 4], cyc[(i0 + 3) % 4]
            if rank[d] < rank[b]:
                b, d = d, b
            c = cyc[(i0 + 2) % 4]
            lab[a], lab[b], lab[c], lab[d] = 0, 1, 2, 3
            nxt = 4
        elif kind is LeaveKind.TRIPOD_MATCHING:
            centre, *arms = self.shape.points
            lab[centre] = 0
            for i, x in enumerate(sorted(arms, key=rank.__getitem__)):
                lab[x] = i + 1
            nxt = 4
        elif kind is LeaveKind.K5:
            for i, x in enumerate(sorted(self.shape.points, key=rank.__getitem__)):
                lab[x] = i
            nxt = 5
        partner = {}
        if kind in (LeaveKind.MATCHING, LeaveKind.TRIPOD_MATCHING):
            for a, b in self.shape.matching:
                partner[a] = b
                partner[b] = a
        for x in order:
            if lab[x] >= 0:
                continue
            lab[x] = nxt
            nxt += 1
            p = partner.get(x)
            if p is not None:
                lab[p] = nxt
                nxt += 1
        return lab

    def encode(self, lab: Sequence[int]) -> bytes:
        ts = sorted(
            tuple(sorted((lab[a], lab[b], lab[c]))) for a, b, c in self.triples
        )
        if self.compact:
            return bytes(t[2] for t in ts)
        body = bytes(x for t in ts for x in t)
        ps = sorted(pair(lab[a], lab[b]) for a, b in self.pairs)
        return body + b"\xff" + bytes(x for p in ps for x in p)

    # -- search -------------------------------------------------------------

    def run(self) -> tuple[list[int], bytes]:
        color, trace = self.refine(self.root_color)
        if len(set(color)) < self.v and self._want_pair_types():
            self.ptype = _pair_type_matrix(self.v, self.third)
            color, trace = self.refine(color)
        self.first = None  # (traces, path, lab, key)
        self.best = None
        self._search(color, [trace], [])
        _, _, lab, key = self.best
        return lab, key

    def _want_pair_types(self) -> bool:
        if self._use_pair_types is not None:
            return self._use_pair_types
        return bool(self.triples)

    def _target_cell(self, color: list[int]) -> list[int]:
        cells: dict[int, list[int]] = {}
        for x, c in enumerate(color):
            cells.setdefault(c, []).append(x)
        best = None
        for c in sorted(cells):
            members = cells[c]
            if len(members) > 1 and (best is None or len(members) < len(best)):
                best = members
        return best

    def _search(self, color: list[int], traces: list[int], path: list[int]) -> int:
        """Explore below a node; returns the level to unwind to (or -1)."""
        v = self.v
        if len(set(color)) == v:
            return self._leaf(color, traces, path)
        cell = self._target_cell(color)
        level = len(path)
        explored: list[int] = []
        ngens = -1
        find = None
        for x in cell:
            if len(self.generators) != ngens:
                ngens = len(self.generators)
                find = self._stabiliser_orbits(path)
            rx = find(x)
            if any(find(y) == rx for y in explored):
                continue
            explored.append(x)
            child = list(color)
            cx = color[x]
            for y in cell:
                if y != x:
                    child[y] = cx + 1
            child, t = self.refine(child)
            ctraces = traces + [t]
            if not self._keep(ctraces):
                continue
            back = self._search(child, ctraces, path + [x])
            if back >= 0 and back < level:
                return back
        return -1

    def _keep(self, traces: list[int]) -> bool:
        if self.first is None:
            return True
        k = len(traces)
        if self.first[0][:k] == traces:
            return True
        return traces <= self.best[0][:k]

    def _leaf(self, color: list[int], traces: list[int], path: list[int]) -> int:
        order = sorted(range(self.v), key=color.__getitem__)
        lab = self.relabel_from_order(order)
        key = self.encode(lab)
        rec = (traces, path, lab, key)
        if self.first is None:
            self.first = self.best = rec
            return -1
        if traces == self.first[0] and key == self.first[3]:
            self._add_automorphism(self.first[2], lab)
            return _common_prefix(path, self.first[1])
        bt = self.best[0]
        if traces < bt or (traces == bt and key < self.best[3]):
            self.best = rec
            return -1
        if traces == bt and key == self.best[3]:
            self._add_automorphism(self.best[2], lab)
            return _common_prefix(path, self.best[1])
        return -1

    def _add_automorphism(self, lab_a: Sequence[int], lab_b: Sequence[int]) -> None:
        # lab_a^{-1} o lab_b maps the design onto itself
        inv_a = [0] * self.v
        for x, l in enumerate(lab_a):
            inv_a[l] = x
        g = tuple(inv_a[lab_b[x]] for x in range(self.v))
        if any(g[x] != x for x in range(self.v)):
            self.generators.append(g)

    def _stabiliser_orbits(self, path: list[int]):
        parent = list(range(self.v))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            if all(g[p] == p for p in path):
                for x in range(self.v):
                    a, b = find(x), find(g[x])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return find


def _colors_and_cells(keys: Sequence) -> tuple[list[int], tuple]:
    """Colour = first position of the key in sorted order; also the distinct keys."""
    n = len(keys)
    order = sorted(range(n), key=keys.__getitem__)
    color = [0] * n
    cells = []
    i = 0
    while i < n:
        k = keys[order[i]]
        cells.append(k)
        j = i
        while j < n and keys[order[j]] == k:
            color[order[j]] = i
            j += 1
        i = j
    return color, tuple(cells)


def _common_prefix(a: Sequence[int], b: Sequence[int]) -> int:
    n = 0
    for x, y in zip(a, b):
        if x != y:
            break
        n += 1
    return n


def canonical_labelling(
    v: int,
    triples: Sequence[Triple],
    pairs: Iterable[Pair] = (),
    colors: Sequence[int] | None = None,
    rule: str = ORDER_RULE,
    shape: LeaveShape | None = None,
    compact: bool = False,
) -> tuple[list[int], bytes, list[tuple[int, ...]]]:
    """Canonical relabelling of a coloured incidence structure.

    Returns ``(lab, key, generators)`` where ``lab[x]`` is the canonical label
    of point ``x``, ``key`` the certificate and ``generators`` automorphisms.
    """
    lab = _Labeller(v, triples, pairs, colors, rule, shape, compact)
    perm, key = lab.run()
    return perm, key, lab.generators


def _is_standard(shape: LeaveShape, v: int, size: int) -> bool:
    # the compact key only determines the design when the relabelled leave is fixed
    if shape.kind is LeaveKind.K5:
        return size == 10
    return shape.kind is leave_kind_for_order(v) and size == leave_size(v)


def canonical_form(design: Design, with_group: bool = True) -> tuple[CanonicalForm, GroupInfo | None]:
    """Canonical form of a partial triple system, plus its automorphism group."""
    v = design.v
    leave = design.leave
    shape = classify_leave(v, leave)
    standard = _is_standard(shape, v, len(leave))
    labeller = _Labeller(
        v,
        design.triples,
        leave,
        None,
        LEAVE_RULE if standard else ORDER_RULE,
        shape if standard else None,
        compact=standard,
    )
    lab, key = labeller.run()
    if standard:
        key = bytes(_CHARS[x] for x in key)
    canon = design.relabel(lab)
    form = CanonicalForm(key, canon, tuple(lab))
    if not with_group:
        return form, None
    gens = tuple(labeller.generators)
    order = StabChain(v, gens).order()
    name = small_group_name(v, gens, order)
    return form, GroupInfo(gens, order, name)


_CHARS = b"0123456789abcdefghijklmnopqrstuvwxyz"


def canonical_key(design: Design) -> bytes:
    return canonical_form(design, with_group=False)[0].key


def automorphism_group(design: Design) -> GroupInfo:
    return canonical_form(design)[1]


def partial_key(v: int, triples: Sequence[Triple], leave: Iterable[Pair], colors: Sequence[int] | None = None) -> tuple[bytes, list[int]]:
    """Canonical key of a partial design with a declared leave and point colours."""
    lab, key, _ = canonical_labelling(v, triples, leave, colors)
    if colors is not None:
        inv = [0] * v
        for x, l in enumerate(lab):
            inv[l] = x
        key = key + b"\xfe" + bytes(colors[inv[i]] for i in range(v))
    return key, lab


# -- isomorph store ---------------------------------------------------------------


class InsertResult(enum.Enum):
    NEW = "new"
    DUPLICATE = "duplicate"


@dataclass
class StoreEntry:
    design: Design
    hits: int = 1


class IsoStore:
    """Canonical keys with one representative and a hit count each.

    Backed by a dict; ``keys()`` and ``dump()`` are sorted, so the contents
    never depend on insertion order.
    """

    def __init__(self):
        self.entries: dict[bytes, StoreEntry] = {}

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, key: bytes) -> bool:
        return key in self.entries

    def keys(self) -> list[bytes]:
        return sorted(self.entries)

    def designs(self) -> list[Design]:
        return [self.entries[k].design for k in self.keys()]

    def total_hits(self) -> int:
        return sum(e.hits for e in self.entries.values())

    def add(self, key: bytes, design: Design, hits: int = 1) -> InsertResult:
        entry = self.entries.get(key)
        if entry is None:
            self.entries[key] = StoreEntry(design, hits)
            return InsertResult.NEW
        entry.hits += hits
        return InsertResult.DUPLICATE

    def dump(self) -> list[str]:
        return [k.decode("latin-1") for k in self.keys()]


def store_insert(store: IsoStore, form: CanonicalForm) -> InsertResult:
    return store.add(form.key, form.design)


def merge(stores: Iterable[IsoStore]) -> IsoStore:
    """Union of the key sets with hit counts summed."""
    out = IsoStore()
    for s in stores:
        for k, e in s.entries.items():
            out.add(k, e.design, e.hits)
    # keep the representatives independent of merge order: they are canonical
    return out


# -- point invariant ------------------------------------------------------------------


def point_classes(design: Design) -> dict[str, list[int]]:
    """Points grouped by their role relative to the leave."""
    v = design.v
    shape = design.leave_shape()
    if shape.kind is LeaveKind.FOUR_CYCLE:
        from .design import diagonal_triples

        _, t1, t2 = diagonal_triples(design)
        cyc = set(shape.points)
        apex = sorted((set(t1) | set(t2)) - cyc)
        rest = [x for x in range(v) if x not in cyc and x not in apex]
        return {"V1": sorted(cyc), "V2": apex, "V3": rest}
    deg = design.leave_degrees()
    out: dict[str, list[int]] = {}
    for x in range(v):
        out.setdefault(f"d{deg[x]}", []).append(x)
    return out


def point_invariant(design: Design) -> dict[str, tuple[tuple[int, int, int], ...]]:
    """Per leave-role class, the sorted multiset of (n_p, n_r, n_l) over its points."""
    from .configurations import census

    per = census(design).per_point
    return {
        name: tuple(sorted(per[x] for x in pts))
        for name, pts in point_classes(design).items()
    }
