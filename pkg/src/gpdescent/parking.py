"""Parking functions with the dinv, area and diagonal-touch statistics.

A parking function is stored as a pair ``(area, labels)``:

- ``area`` is the area sequence of a Dyck path: ``area[0] == 0`` and each
  entry grows by at most one over its predecessor;
- ``labels`` is a permutation of ``{1..n}`` decorating the rows, read from
  the bottom row up, with the rule that a rise in the area sequence forces
  the labels to increase.

Row indices are 0-based internally; the pair is immutable and hashable.
"""

from __future__ import annotations

import itertools
from typing import Iterator, NamedTuple

from .core import Composition, Permutation, is_permutation, n_stat


class ParkingFunction(NamedTuple):
    area: tuple[int, ...]
    labels: tuple[int, ...]


class NotAParkingFunction(ValueError):
    """Raised when a pair (area, labels) violates the parking constraints."""


class TouchConstraintError(ValueError):
    """Raised when a parking function misses a required diagonal touch."""


def is_valid(pf: ParkingFunction) -> bool:
    """Check the Dyck and label constraints.

    >>> is_valid(ParkingFunction((0, 0, 1, 0, 0, 1, 2, 2, 3), (2, 4, 7, 9, 1, 5, 8, 3, 6)))
    True
    >>> is_valid(ParkingFunction((0, 1), (2, 1)))
    False
    """
    area, labels = pf
    n = len(area)
    if n == 0 or len(labels) != n or not is_permutation(labels):
        return False
    if area[0] != 0 or any(a < 0 for a in area):
        return False
    for i in range(n - 1):
        if area[i + 1] > area[i] + 1:
            return False
        if area[i + 1] == area[i] + 1 and labels[i] >= labels[i + 1]:
            return False
    return True


def check_valid(pf: ParkingFunction) -> ParkingFunction:
    if not is_valid(pf):
        raise NotAParkingFunction(pf)
    return pf


def area(pf: ParkingFunction) -> int:
    """Total area: the norm of the area sequence."""
    return sum(pf.area)


def dinv_pairs(pf: ParkingFunction) -> set[tuple[int, int]]:
    """Label pairs ``(labels_i, labels_j)`` with ``i < j`` and either
    equal levels with increasing labels, or levels off by one
    (``a_i == a_j + 1``) with decreasing labels.

    >>> sorted(dinv_pairs(ParkingFunction((0, 0, 1, 0, 0, 1, 2, 2, 3), (2, 4, 7, 9, 1, 5, 8, 3, 6))))
    [(2, 4), (2, 9), (4, 9), (7, 1)]
    """
    a, labels = pf
    pairs = set()
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            if a[i] == a[j] and labels[i] < labels[j]:
                pairs.add((labels[i], labels[j]))
            elif a[i] == a[j] + 1 and labels[i] > labels[j]:
                pairs.add((labels[i], labels[j]))
    return pairs


def dinv(pf: ParkingFunction) -> int:
    return len(dinv_pairs(pf))


def block_ranges(alpha: Composition) -> list[range]:
    """0-based row ranges of the touch blocks of ``alpha``."""
    ranges = []
    start = 0
    for part in alpha:
        ranges.append(range(start, start + part))
        start += part
    return ranges


def touches(pf: ParkingFunction, alpha: Composition) -> bool:
    """Whether the path touches the diagonal at the start of every block."""
    if sum(alpha) != len(pf.area) or any(part < 1 for part in alpha):
        return False
    return all(pf.area[block[0]] == 0 for block in block_ranges(alpha))


def doff(pf: ParkingFunction, alpha: Composition) -> int:
    """Weighted count of diagonal rows: block ``k`` (1-based, ``l`` blocks)
    contributes ``(l - k)`` for each of its rows at level zero.

    >>> doff(ParkingFunction((0, 0, 1, 0, 0, 1, 2, 2, 3), (2, 4, 7, 9, 1, 5, 8, 3, 6)), (1, 2, 6))
    3
    """
    check_valid(pf)
    if not touches(pf, alpha):
        raise TouchConstraintError((pf, alpha))
    l = len(alpha)
    total = 0
    for k, block in enumerate(block_ranges(alpha), start=1):
        zero_rows = sum(1 for i in block if pf.area[i] == 0)
        total += (l - k) * zero_rows
    return total


def _area_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """All Dyck area sequences of length ``n``."""

    def extend(prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield prefix
            return
        for nxt in range(prefix[-1] + 2):
            yield from extend(prefix + (nxt,))

    if n >= 1:
        yield from extend((0,))


def _labelings(area_seq: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All label permutations valid for ``area_seq``.

    Rows linked by rises form chains that must be labeled increasingly, so
    a labeling amounts to distributing ``{1..n}`` over the chains.
    """
    n = len(area_seq)
    chains = []
    current = [0]
    for i in range(1, n):
        if area_seq[i] == area_seq[i - 1] + 1:
            current.append(i)
        else:
            chains.append(current)
            current = [i]
    chains.append(current)

    def assign(chain_index: int, free: tuple[int, ...], labels: list[int]):
        if chain_index == len(chains):
            yield tuple(labels)
            return
        chain = chains[chain_index]
        for values in itertools.combinations(free, len(chain)):
            for row, value in zip(chain, values):
                labels[row] = value
            remaining = tuple(v for v in free if v not in values)
            yield from assign(chain_index + 1, remaining, labels)

    yield from assign(0, tuple(range(1, n + 1)), [0] * n)


def parking_functions(n: int) -> Iterator[ParkingFunction]:
    """All parking functions on ``n`` rows.

    >>> sum(1 for _ in parking_functions(3))
    16
    """
    for seq in _area_sequences(n):
        for labels in _labelings(seq):
            yield ParkingFunction(seq, labels)


def parking_functions_alpha(alpha: Composition) -> Iterator[ParkingFunction]:
    """All parking functions whose path touches the diagonal at the start
    of each block of ``alpha``."""
    if any(part < 1 for part in alpha):
        raise ValueError(f"touch composition must have positive parts: {alpha}")
    for pieces in itertools.product(*(_area_sequences(part) for part in alpha)):
        seq = tuple(itertools.chain.from_iterable(pieces))
        for labels in _labelings(seq):
            yield ParkingFunction(seq, labels)


def is_dinv_zero(pf: ParkingFunction) -> bool:
    return dinv(pf) == 0


def is_dinv_zero_structural(pf: ParkingFunction) -> bool:
    """Structural characterization of dinv-zero parking functions: the area
    sequence is weakly increasing and equal levels carry decreasing labels.
    """
    a, labels = pf
    n = len(a)
    if any(a[i + 1] < a[i] for i in range(n - 1)):
        return False
    return all(
        labels[i] > labels[j]
        for i in range(n)
        for j in range(i + 1, n)
        if a[i] == a[j]
    )


def reading_word(pf: ParkingFunction) -> Permutation:
    """Labels read along diagonals, highest level first, top row first
    within a level.

    >>> reading_word(ParkingFunction((0, 0, 1, 2, 3, 3, 4), (6, 2, 4, 5, 7, 1, 3)))
    (3, 1, 7, 5, 4, 2, 6)
    """
    order = sorted(range(len(pf.area)), key=lambda i: (-pf.area[i], -i))
    return tuple(pf.labels[i] for i in order)


def perm_to_pf0(sigma: Permutation) -> ParkingFunction:
    """The dinv-zero parking function with reading word ``sigma``.

    The labels are ``sigma`` reversed; walking up from the bottom row, the
    level steps up exactly at the descents of ``sigma``, so the area of the
    row holding value ``i`` is entry ``i`` of ``majt(sigma)`` and the total
    area is ``maj(sigma)``.

    >>> perm_to_pf0((3, 1, 7, 5, 4, 2, 6))
    ParkingFunction(area=(0, 0, 1, 2, 3, 3, 4), labels=(6, 2, 4, 5, 7, 1, 3))
    """
    n = len(sigma)
    levels = [0] * n
    level = 0
    for i in range(n - 1, 0, -1):
        if sigma[i - 1] > sigma[i]:
            level += 1
        levels[n - i] = level
    return ParkingFunction(tuple(levels), tuple(reversed(sigma)))


def pf0_to_perm(pf: ParkingFunction) -> Permutation:
    """Inverse of :func:`perm_to_pf0`; rejects parking functions with dinv > 0."""
    check_valid(pf)
    if dinv(pf) != 0:
        raise ValueError(f"parking function has dinv {dinv(pf)} != 0")
    return reading_word(pf)


def level_composition(pf: ParkingFunction) -> Composition:
    """Composition whose entry ``i`` is the level of the row labeled ``i``.

    For dinv-zero parking functions this equals ``majt`` of the reading word.
    """
    n = len(pf.area)
    entry = [0] * n
    for i in range(n):
        entry[pf.labels[i] - 1] = pf.area[i]
    return tuple(entry)


def minimal_parking_functions(alpha: Composition) -> list[ParkingFunction]:
    """Touch-constrained parking functions minimizing ``dinv + doff``.

    ``alpha`` must be the reverse of a partition ``lam`` (weakly increasing
    parts); the minimum value of the statistic is ``n(lam)`` and the family
    is selected by that exact value, not by a structural shortcut.
    """
    alpha = tuple(alpha)
    if any(alpha[i] > alpha[i + 1] for i in range(len(alpha) - 1)):
        raise ValueError(f"touch composition must be weakly increasing: {alpha}")
    lam = tuple(reversed(alpha))
    target = n_stat(lam)
    return sorted(
        pf
        for pf in parking_functions_alpha(alpha)
        if dinv(pf) + doff(pf, alpha) == target
    )


def render(pf: ParkingFunction) -> str:
    """ASCII picture: one line per row, top row first, label placed in the
    column just right of its north step; dots fill the rest of the square.
    """
    check_valid(pf)
    n = len(pf.area)
    width = len(str(n))
    lines = []
    for row in range(n - 1, -1, -1):
        col = row - pf.area[row]
        cells = []
        for c in range(n):
            if c == col:
                cells.append(str(pf.labels[row]).rjust(width))
            elif c == row:
                cells.append("\\".rjust(width))
            else:
                cells.append(".".rjust(width))
        lines.append(" ".join(cells))
    return "\n".join(lines)


def to_json_dict(pf: ParkingFunction) -> dict:
    """Canonical serialization as the pair of integer sequences."""
    return {"area": list(pf.area), "labels": list(pf.labels)}

def stats_summary(pf: ParkingFunction, alpha: Composition | None = None) -> dict:
    summary = {
        "area": area(pf),
        "dinv": dinv(pf),
        "dinv_pairs": sorted(dinv_pairs(pf)),
        "reading_word": list(reading_word(pf)),
    }
    if alpha is not None:
        summary["doff"] = doff(pf, alpha)
    return summary
