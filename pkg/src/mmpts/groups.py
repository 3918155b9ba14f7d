"""Small permutation-group utilities: Schreier-Sims order, closure and naming."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Iterable, Sequence

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    """``p`` after ``q``: x -> p[q[x]]."""
    return tuple(p[x] for x in q)


def inverse(p: Sequence[int]) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def perm_order(p: Sequence[int]) -> int:
    seen = [False] * len(p)
    order = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        n = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            n += 1
        order = order * n // gcd(order, n)
    return order


def orbits(n: int, gens: Iterable[Sequence[int]]) -> list[list[int]]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    out: dict[int, list[int]] = {}
    for x in range(n):
        out.setdefault(find(x), []).append(x)
    return sorted(out.values())


class StabChain:
    """Stabiliser chain built with Knuth's sift/extend formulation of Schreier-Sims.

    ``table[k]`` maps j to a group element fixing every point above k and
    sending k to j; the group order is the product of the table sizes.
    """

    def __init__(self, n: int, gens: Iterable[Sequence[int]]):
        self.n = n
        e = identity(n)
        self.table: list[dict[int, Perm]] = [{k: e} for k in range(n)]
        self.strong: list[list[Perm]] = [[] for _ in range(n)]
        for g in gens:
            self._add(n - 1, tuple(g))

    def order(self) -> int:
        result = 1
        for t in self.table:
            result *= len(t)
        return result

    def contains(self, g: Sequence[int]) -> bool:
        g = tuple(g)
        for k in range(self.n - 1, -1, -1):
            s = self.table[k].get(g[k])
            if s is None:
                return False
            g = compose(inverse(s), g)
        return True

    def _member(self, k: int, g: Perm) -> bool:
        for i in range(k, -1, -1):
            s = self.table[i].get(g[i])
            if s is None:
                return False
            g = compose(inverse(s), g)
        return True

    def _add(self, k: int, g: Perm) -> None:
        if self._member(k, g):
            return
        self.strong[k].append(g)
        for s in list(self.table[k].values()):
            self._fill(k, compose(g, s))

    def _fill(self, k: int, g: Perm) -> None:
        j = g[k]
        s = self.table[k].get(j)
        if s is not None:
            self._add(k - 1, compose(inverse(s), g))
            return
        self.table[k][j] = g
        for r in list(self.strong[k]):
            self._fill(k, compose(r, g))


def group_order(n: int, gens: Iterable[Sequence[int]]) -> int:
    return StabChain(n, gens).order()


def closure(n: int, gens: Iterable[Sequence[int]], limit: int = 100_000) -> list[Perm]:
    """All elements of the group generated by ``gens`` (small groups only)."""
    gens = [tuple(g) for g in gens]
    e = identity(n)
    elems = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
                    if len(elems) > limit:
                        raise ValueError("group too large to enumerate")
        frontier = nxt
    return sorted(elems)


def _abelian_profile(factors: Sequence[int]) -> tuple:
    counts: Counter[int] = Counter()
    for elem in product(*(range(f) for f in factors)):
        o = 1
        for x, f in zip(elem, factors):
            k = f // gcd(x, f)
            o = o * k // gcd(o, k)
        counts[o] += 1
    return tuple(sorted(counts.items()))


def _abelian_name(factors: Sequence[int]) -> str:
    if not factors:
        return "trivial"
    if list(factors) == [2, 2]:
        return "Klein"
    c = Counter(factors)
    parts = []
    for f in sorted(c, reverse=True):
        parts.append(f"Z{f}" if c[f] == 1 else f"Z{f}^{c[f]}")
    return "x".join(parts)


def _abelian_table(max_order: int) -> dict[tuple, str]:
    """Element-order profiles of all abelian groups of order <= max_order."""

    def invariant_factor_lists(n, smallest=2):
        # lists f1 | f2 | ... with product n, written in increasing divisibility
        out = [[]] if n == 1 else []
        for f in range(smallest, n + 1):
            if n % f == 0:
                for rest in invariant_factor_lists(n // f, f):
                    if not rest or rest[0] % f == 0:
                        out.append([f] + rest)
        return out

    table = {}
    for n in range(1, max_order + 1):
        for fs in invariant_factor_lists(n):
            table[(n, True, _abelian_profile(fs))] = _abelian_name(fs)
    return table


_ABELIAN = _abelian_table(24)


def element_profile(elems: Iterable[Perm]) -> tuple:
    counts = Counter(perm_order(g) for g in elems)
    return tuple(sorted(counts.items()))


def is_abelian(gens: Sequence[Perm]) -> bool:
    return all(compose(a, b) == compose(b, a) for a in gens for b in gens)


def small_group_name(n: int, gens: Sequence[Sequence[int]], order: int | None = None) -> str | None:
    """Name of the group generated by ``gens`` when its order is at most 24.

    Abelian groups are named from their element-order profile, which
    determines them.  A non-abelian group is named only after an explicit
    isomorphism onto one of the model groups has been found; otherwise the
    result is None.
    """
    gens = [tuple(g) for g in gens]
    if order is None:
        order = group_order(n, gens)
    if order > 24:
        return None
    if order == 1:
        return "trivial"
    elems = closure(n, gens)
    profile = element_profile(elems)
    if is_abelian(gens):
        return _ABELIAN.get((order, True, profile))
    for name, model in _models().items():
        if model.order == order and model.profile == profile and isomorphic(model.gens, gens):
            return name
    return None


def isomorphic(gens_a: Sequence[Perm], gens_b: Sequence[Perm]) -> bool:
    """Whether two small permutation groups are isomorphic, by searching generator images."""
    ea = closure(len(gens_a[0]), gens_a)
    eb = closure(len(gens_b[0]), gens_b)
    if len(ea) != len(eb) or element_profile(ea) != element_profile(eb):
        return False
    orders = [perm_order(g) for g in gens_a]
    pools = [[h for h in eb if perm_order(h) == o] for o in orders]
    for images in product(*pools):
        if _extends(gens_a, images, len(ea)):
            return True
    return False


def _extends(gens: Sequence[Perm], images: Sequence[Perm], size: int) -> bool:
    """Does g_i -> images[i] extend to a bijective homomorphism?"""
    e_a = identity(len(gens[0]))
    e_b = identity(len(images[0]))
    phi = {e_a: e_b}
    frontier = [e_a]
    while frontier:
        nxt = []
        for x in frontier:
            y = phi[x]
            for g, h in zip(gens, images):
                x2 = compose(g, x)
                y2 = compose(h, y)
                seen = phi.get(x2)
                if seen is None:
                    phi[x2] = y2
                    nxt.append(x2)
                elif seen != y2:
                    return False
        frontier = nxt
    return len(phi) == size and len(set(phi.values())) == size


# -- model groups ---------------------------------------------------------------------


@dataclass(frozen=True)
class Model:
    gens: tuple[Perm, ...]
    order: int
    profile: tuple


def _cycle(n: int) -> Perm:
    return tuple((i + 1) % n for i in range(n))


def _pad(g: Sequence[int], offset: int, size: int) -> Perm:
    p = list(range(size))
    for i, x in enumerate(g):
        p[offset + i] = offset + x
    return tuple(p)


def direct_product(a: Sequence[Perm], b: Sequence[Perm]) -> list[Perm]:
    na, nb = len(a[0]), len(b[0])
    size = na + nb
    return [_pad(g, 0, size) for g in a] + [_pad(g, na, size) for g in b]


def dihedral(n: int) -> list[Perm]:
    # symmetries of an n-gon; for n = 2 use the Klein group on four points
    if n == 2:
        return [(1, 0, 3, 2), (2, 3, 0, 1)]
    return [_cycle(n), tuple((-i) % n for i in range(n))]


def affine_group(p: int, mult: int) -> list[Perm]:
    """x -> x + 1 and x -> mult * x on Z_p."""
    return [tuple((x + 1) % p for x in range(p)), tuple((mult * x) % p for x in range(p))]


def sl23_action(subgroup: str) -> list[Perm]:
    """SL(2,3) or its quaternion subgroup acting on the nonzero vectors of F_3^2."""
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    index = {v: i for i, v in enumerate(vecs)}

    def act(m):
        return tuple(index[((m[0] * a + m[1] * b) % 3, (m[2] * a + m[3] * b) % 3)] for a, b in vecs)

    if subgroup == "Q8":
        return [act((0, 2, 1, 0)), act((1, 1, 1, 2))]
    return [act((1, 1, 0, 1)), act((1, 0, 1, 1))]


def cyclic_semidirect(m: int, n: int, k: int) -> list[Perm]:
    """Regular representation of Z_m : Z_n with the generator of Z_n acting as x -> k x."""
    elems = [(a, b) for a in range(m) for b in range(n)]
    index = {e: i for i, e in enumerate(elems)}

    def left(g):
        a1, b1 = g
        return tuple(index[((a1 + pow(k, b1, m) * a2) % m, (b1 + b2) % n)] for a2, b2 in elems)

    return [left((1, 0)), left((0, 1))]


_MODEL_CACHE: dict[str, Model] = {}


def _models() -> dict[str, Model]:
    if _MODEL_CACHE:
        return _MODEL_CACHE
    s3 = dihedral(3)
    a4 = [(1, 2, 0, 3), (1, 0, 3, 2)]
    s4 = [(1, 2, 3, 0), (1, 0, 2, 3)]
    raw = {
        "D6": s3,
        "D8": dihedral(4),
        "Q8": sl23_action("Q8"),
        "D10": dihedral(5),
        "D12": dihedral(6),
        "A4": a4,
        "Z3:Z4": cyclic_semidirect(3, 4, 2),
        "D14": dihedral(7),
        "D16": dihedral(8),
        "Z2xD8": direct_product(dihedral(4), [(1, 0)]),
        "D18": dihedral(9),
        "Z3xS3": direct_product(s3, [_cycle(3)]),
        "Z3^2:Z2": direct_product(s3, s3)[:1] + direct_product(s3, s3)[2:3] + [
            tuple(list(s3[1]) + [3 + x for x in s3[1]])
        ],
        "D20": dihedral(10),
        "Z5:Z4": affine_group(5, 2),
        "Z7:Z3": affine_group(7, 2),
        "S4": s4,
        "A4xZ2": direct_product(a4, [(1, 0)]),
        "SL(2,3)": sl23_action("SL"),
        "Z4xS3": direct_product(s3, [_cycle(4)]),
        "Z2^2xS3": direct_product(s3, dihedral(2)),
        "D24": dihedral(12),
        "Z3xD8": direct_product(dihedral(4), [_cycle(3)]),
        "Z3xQ8": direct_product(sl23_action("Q8"), [_cycle(3)]),
        "Z3:Z8": cyclic_semidirect(3, 8, 2),
        "Z2xZ3:Z4": direct_product(cyclic_semidirect(3, 4, 2), [(1, 0)]),
    }
    for name, gens in raw.items():
        elems = closure(len(gens[0]), gens)
        _MODEL_CACHE[name] = Model(tuple(gens), len(elems), element_profile(elems))
    return _MODEL_CACHE
