"""Published reference values used by the acceptance suite."""

from __future__ import annotations

CLASS_COUNTS = {7: 1, 9: 1, 10: 2, 11: 2, 12: 5, 13: 2, 14: 787, 15: 80}

TABLE1_Q = "024 056 078 09A 134 159 168 17A 257 269 28A 35A 367 389 458 46A 479"
TABLE1_N = "024 057 068 09A 135 148 169 17A 259 26A 278 34A 367 389 456 479 58A"

# compact string, #Pasch, #mitre, group order, group name
MMPTS12 = [
    ("468ab798abb8ab7aa99b", 4, 6, 2, "Z2"),
    ("468ab79a6b9baba889ba", 5, 3, 2, "Z2"),
    ("468ab78ab96ba9abb89a", 5, 3, 6, "D6"),
    ("468ab94ba87baa9b8ba9", 4, 5, 1, "trivial"),
    ("468aba498b79bb9ab8aa", 7, 0, 3, "Z3"),
]

LABELLED = {12: 1_197_504_000, 14: 60_281_712_691_200}

PASCH14 = {
    0: 6, 1: 7, 2: 34, 3: 94, 4: 94, 5: 117, 6: 72, 7: 62, 8: 56, 9: 36, 10: 26,
    11: 30, 12: 13, 13: 29, 14: 23, 15: 9, 16: 3, 17: 17, 19: 12, 20: 7, 21: 5,
    22: 4, 23: 10, 25: 2, 26: 1, 27: 2, 28: 1, 29: 2, 31: 7, 33: 1, 35: 1, 39: 1,
    43: 1, 47: 1, 63: 1,
}

MITRE14 = {
    0: 15, 2: 5, 3: 8, 4: 24, 5: 12, 6: 44, 7: 35, 8: 73, 9: 87, 10: 90, 11: 96,
    12: 100, 13: 71, 14: 51, 15: 40, 16: 23, 17: 7, 18: 1, 19: 3, 20: 1, 22: 1,
}

FANO14 = {0: 730, 1: 43, 2: 11, 4: 2, 8: 1}

# (order, name or None above order 24, number of designs)
GROUPS14 = [
    (1344, None, 1),
    (192, None, 1),
    (96, None, 1),
    (32, None, 3),
    (24, "S4", 3),
    (24, "A4xZ2", 2),
    (21, "Z7:Z3", 2),
    (16, "Z2^4", 1),
    (12, "A4", 4),
    (8, "D8", 10),
    (6, "D6", 1),
    (6, "Z6", 1),
    (4, "Klein", 18),
    (4, "Z4", 13),
    (3, "Z3", 37),
    (2, "Z2", 40),
    (1, "trivial", 649),
]

# v = 17 search results, by seed
SEED_COUNTS17 = {
    "N1": 161_885_696, "N2": 165_881_472, "N3": 166_118_112, "N4": 170_428_416, "N5": 171_571_376,
    "Q1": 134_263_296, "Q2": 140_978_304, "Q3": 142_761_312, "Q4": 144_371_376,
}
SEED_TOTALS17 = {"N": 835_885_072, "Q": 562_374_288}
CLASSES17 = {"N": 33_459_364, "Q": 2_350_733}

# seed tables, row by row as printed; columns N1..N5 and Q1, Q2, Q3, Q2a, Q4
_SEED_ROWS = """
0,2,4 0,2,4 0,2,4 0,2,4 0,2,4
* * * * *
0,5,6 0,5,6 0,5,6 0,5,6 0,5,6
0,7,8 0,7,8 0,7,8 0,7,8 0,7,8
0,9,10 0,9,10 0,9,10 0,9,10 0,9,10
0,11,12 0,11,12 0,11,12 0,11,12 0,11,12
0,13,14 0,13,14 0,13,14 0,13,14 0,13,14
0,15,16 0,15,16 0,15,16 0,15,16 0,15,16
2,5,7 2,5,7 2,5,7 2,5,7 2,5,7
2,6,8 2,6,8 2,6,9 2,6,9 2,6,9
2,9,11 2,9,11 2,8,10 2,8,11 2,8,11
2,10,12 2,10,13 2,11,13 2,10,12 2,10,13
2,13,15 2,12,15 2,12,15 2,13,15 2,12,15
2,14,16 2,14,16 2,14,16 2,14,16 2,14,16
"""


def seed_table() -> dict[str, list[tuple[int, int, int]]]:
    """The ten printed seeds; the second row is 1,3,5 for N-seeds and 1,3,4 for Q-seeds."""
    rows = [r.split() for r in _SEED_ROWS.strip().splitlines()]
    out = {}
    for family, second, names in (
        ("N", (1, 3, 5), ["N1", "N2", "N3", "N4", "N5"]),
        ("Q", (1, 3, 4), ["Q1", "Q2", "Q3", "Q2a", "Q4"]),
    ):
        for col, name in enumerate(names):
            ts = []
            for r in rows:
                ts.append(second if r[col] == "*" else tuple(int(x) for x in r[col].split(",")))
            out[name] = ts
    return out
