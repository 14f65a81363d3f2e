"""Independent reference arithmetic for the tests.

Basis-blade products are derived here from first principles: concatenate the
index lists, bubble-sort to canonical order counting a sign flip per swap,
and contract equal adjacent indices with the Euclidean metric (+1).  Nothing
in this module imports the package under test, so comparisons against it are
a genuine dual route.
"""

from __future__ import annotations

ORACLE_BLADES = [(), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3)]


def oracle_blade_product(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """(sign, canonical blade) for the product of two basis blades."""
    seq = list(u) + list(v)
    sign = 1
    swapped = True
    while swapped:
        swapped = False
        for i in range(len(seq) - 1):
            if seq[i] > seq[i + 1]:
                seq[i], seq[i + 1] = seq[i + 1], seq[i]
                sign = -sign
                swapped = True
    out: list[int] = []
    i = 0
    while i < len(seq):
        if i + 1 < len(seq) and seq[i] == seq[i + 1]:
            i += 2  # e_k e_k = +1
        else:
            out.append(seq[i])
            i += 1
    return sign, tuple(out)


def oracle_table() -> list[list[tuple[int, int]]]:
    """Full 8x8 table of (sign, result slot) pairs."""
    table = []
    for u in ORACLE_BLADES:
        row = []
        for v in ORACLE_BLADES:
            sign, blade = oracle_blade_product(u, v)
            row.append((sign, ORACLE_BLADES.index(blade)))
        table.append(row)
    return table


_TABLE = oracle_table()


def oracle_gp(x: tuple[float, ...], y: tuple[float, ...]) -> tuple[float, ...]:
    """Geometric product on raw coefficient 8-tuples via the oracle table."""
    out = [0.0] * 8
    for i, xi in enumerate(x):
        if xi == 0.0:
            continue
        for j, yj in enumerate(y):
            if yj == 0.0:
                continue
            sign, slot = _TABLE[i][j]
            out[slot] += sign * xi * yj
    return tuple(out)
