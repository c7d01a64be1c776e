"""Partition maps: diagonal-hook reading, odd-parts fill, 2-modular hook
counting, the color-conjugate pair map, and the m-modular hook-count map
with its collision search.
"""

from typing import NamedTuple

from .partitions import (
    FrobeniusCoords,
    InvalidFrobenius,
    ModularDiagram,
    Partition,
    PartitionError,
    conjugate,
    durfee_size,
    enumerate_partitions,
    from_frobenius,
    to_modular,
)
from .colored import ColoredPartition


class NotDistinct(PartitionError):
    """Input must have strictly decreasing parts."""


class NotInImage(PartitionError):
    """No preimage exists for this input."""


class NotOddParts(PartitionError):
    """Input must have all parts odd."""


class InvalidPair(PartitionError):
    """The (nu, mu) pair is outside the map's image."""


class ColorConjugatePair(NamedTuple):
    nu: Partition
    mu: ColoredPartition


class HookMapImage(NamedTuple):
    parts: tuple
    is_partition: bool


class CollisionGroup(NamedTuple):
    image: Partition
    preimages: tuple


def mork(mu):
    """Read off diagonal hook lengths, interleaved with their right neighbors.

    Part 2i-1 is the hook length at cell (i,i), part 2i the hook length at
    (i,i+1) when that cell exists. The result always has strictly
    decreasing parts, and its odd-indexed parts sum to the input size.
    """
    conj = conjugate(mu)
    parts = []
    for i in range(1, durfee_size(mu) + 1):
        parts.append((mu.part(i) - i) + (conj.part(i) - i) + 1)
        if mu.part(i) >= i + 1:
            parts.append((mu.part(i) - (i + 1)) + (conj.part(i + 1) - i) + 1)
    return Partition(parts)


def mork_inverse(delta):
    """Rebuild the partition whose interleaved hook lengths are delta.

    Hook lengths of consecutive diagonal cells determine arm and leg
    lengths one diagonal at a time, from the innermost out:
    delta_{2i-1} = a_i + l_i + 1 and delta_{2i} = a_i + l_{i+1} + 1,
    with the last diagonal pinned by the parity of len(delta).
    """
    delta = Partition(delta)
    if not delta:
        return Partition(())
    for i in range(len(delta) - 1):
        if delta[i] == delta[i + 1]:
            raise NotDistinct(f"repeated part {delta[i]}")
    d = (len(delta) + 1) // 2
    arms = [0] * d
    legs = [0] * d
    if len(delta) % 2:
        arms[d - 1] = 0
        legs[d - 1] = delta[2 * d - 2] - 1
    else:
        arms[d - 1] = delta[2 * d - 1]
        legs[d - 1] = delta[2 * d - 2] - arms[d - 1] - 1
    for i in range(d - 2, -1, -1):
        arms[i] = delta[2 * i + 1] - legs[i + 1] - 1
        legs[i] = delta[2 * i] - arms[i] - 1
    try:
        return from_frobenius(FrobeniusCoords(tuple(arms), tuple(legs)))
    except InvalidFrobenius as exc:
        raise NotInImage(str(exc)) from exc


def modular_fill(mu):
    """Double each part and subtract one: fill mu's diagram read as a
    2-modular diagram, a 1 ending every row and 2s elsewhere."""
    return Partition(2 * p - 1 for p in mu)


def modular_fill_inverse(omega):
    """Halve each odd part rounding up; inverse of modular_fill."""
    omega = Partition(omega)
    if any(p % 2 == 0 for p in omega):
        raise NotOddParts(f"even part in {omega!r}")
    return Partition((p + 1) // 2 for p in omega)


def _diagonal_hook_values(diagram):
    """Cell values of each diagonal hook of a modular diagram's shape.

    A row of c cells holds the base in every cell except the last, which
    holds the row's remainder.
    """
    m = diagram.m
    rows = diagram.rows
    hooks = []
    i = 0
    while i < len(rows) and rows[i][0] >= i + 1:
        cells, rem = rows[i]
        values = [rem if j == cells - 1 else m for j in range(i, cells)]
        for i2 in range(i + 1, len(rows)):
            cells2, rem2 = rows[i2]
            if cells2 < i + 1:
                break
            values.append(rem2 if cells2 == i + 1 else m)
        hooks.append(values)
        i += 1
    return hooks


def bessenrodt(omega):
    """Count each diagonal hook of the 2-modular diagram: total cells,
    then cells holding 2.

    Size-preserving map from odd-parts to distinct-parts partitions;
    pointwise equal to mork(modular_fill_inverse(omega)).
    """
    omega = Partition(omega)
    if any(p % 2 == 0 for p in omega):
        raise NotOddParts(f"even part in {omega!r}")
    parts = []
    for values in _diagonal_hook_values(to_modular(omega, 2)):
        parts.append(len(values))
        parts.append(sum(1 for v in values if v == 2))
    return Partition(p for p in parts if p)


def bessenrodt_inverse(delta):
    """Compose the two inverses: distinct parts back to odd parts."""
    return modular_fill(mork_inverse(delta))


def color_conjugate(lam, t, r):
    """Split a partition into a short top and a colored conjugate.

    nu records rows above row r relative to it; mu's parts are the
    conjugate of the rows r, t+r, 2t+r, ...; the color of part i encodes
    column i's height above the last counted row, reduced mod t.
    """
    lam = Partition(lam)
    lam_r = lam.part(r)
    nu = Partition(lam.part(i) - lam_r for i in range(1, r))
    counted = []
    k = 0
    while lam.part(r + k * t) > 0:
        counted.append(lam.part(r + k * t))
        k += 1
    mu_parts = conjugate(Partition(counted))
    conj = conjugate(lam)
    entries = []
    for i in range(1, lam_r + 1):
        h = conj.part(i) - (r - 1)
        entries.append((mu_parts.part(i), (h - 1) % t + 1))
    return ColorConjugatePair(nu, ColoredPartition(entries, t))


def color_conjugate_inverse(nu, mu, t, r):
    """Rebuild the partition from its color-conjugate pair.

    Column i regrows to height (mu_i - 1)*t + color_i below row r-1;
    rows above are nu's parts over a base of length(mu).
    """
    nu = Partition(nu)
    if nu.length() > r - 1:
        raise InvalidPair(
            f"nu has {nu.length()} parts, at most {r - 1} allowed")
    heights = [(part - 1) * t + color for part, color in mu.entries]
    for a, b in zip(heights, heights[1:]):
        if a < b:
            raise InvalidPair("column heights increase")
    back = conjugate(Partition(heights))
    front = [mu.length() + nu.part(i) for i in range(1, r)]
    return Partition(front + list(back))


def generalized_hook_map(diagram):
    """Per diagonal hook, count cells with value at least j for j = 1..m.

    Blocks are concatenated in hook order and zeros dropped; the result
    is flagged as a partition when weakly decreasing. The emitted parts
    always sum to the size of the decoded partition, because summing
    the threshold counts of a cell of value v contributes exactly v.
    """
    m = diagram.m
    parts = []
    for values in _diagonal_hook_values(diagram):
        for j in range(1, m + 1):
            parts.append(sum(1 for v in values if v >= j))
    parts = tuple(p for p in parts if p)
    is_partition = all(a >= b for a, b in zip(parts, parts[1:]))
    return HookMapImage(parts, is_partition)


def collision_search(m, n):
    """Group partitions sharing a generalized hook-map image.

    The domain is the partitions of n with no part divisible by m, the
    m-modular analog of odd-parts partitions (at m=2 the map reduces to
    the 2-modular hook count, which is injective there). Only images
    that are valid partitions are grouped; groups of one are dropped.
    Groups and preimages are ordered reverse-lexicographically.
    """
    groups = {}
    for p in enumerate_partitions(n):
        if any(part % m == 0 for part in p):
            continue
        image = generalized_hook_map(to_modular(p, m))
        if image.is_partition:
            groups.setdefault(image.parts, []).append(p)
    out = [
        CollisionGroup(Partition(image), tuple(sorted(pre, reverse=True)))
        for image, pre in groups.items()
        if len(pre) >= 2
    ]
    out.sort(key=lambda g: g.image, reverse=True)
    return out
