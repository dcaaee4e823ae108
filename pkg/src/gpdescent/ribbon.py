"""Tuples of ribbon-shaped standard fillings and the height-vector bijection.

A single ribbon is stored as its rows from the bottom up, each row a tuple
of entries from west to east:

    ((2,), (8,), (10,), (3, 4, 7, 16), (5, 13, 23))

The shape is implied: within a component, the east end of each row sits
directly on top of the west end of the row below (an edge-connected skew
shape with no 2x2 block).  Entries increase to the east along rows and to
the north up columns, which for this encoding means every row is sorted
and ``max(row above) > min(row below)``.

A ribbon tuple is a tuple of components laid out left to right with
disjoint column supports; the bottom rows share height 0.  Only the
left-to-right component order and the row alignment enter any statistic,
so no column offsets are stored.

The key statistics: ``heights`` (per entry), ``area`` (their sum), the
reading word (levels top down, west to east within a level), ``dinv``
(cross-component pairs: same row with a bigger entry to the west, or an
entry one row up and further east that is bigger), and ``doff`` (bottom
cells weighted by component position).  Minimal tuples are those whose
dinv pairs hit every non-bottom cell of each later component exactly once
per earlier component and never end in the bottom row; they minimize
``dinv + doff``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator

from .core import (
    Composition,
    Partition,
    Permutation,
    ordered_set_partitions,
)
from .parking import ParkingFunction

Ribbon = tuple[tuple[int, ...], ...]
RibbonTuple = tuple[Ribbon, ...]


class DoesNotTerminate(RuntimeError):
    """Raised when the set-partition recovery algorithm runs out of candidates."""


class ReconstructionError(ValueError):
    """Raised when a composition does not reconstruct to a minimal ribbon tuple."""


def is_valid_ribbon(rows: Ribbon) -> bool:
    """Validity of a single component.

    >>> is_valid_ribbon(((1, 9), (5,), (3, 8), (6,)))
    True
    >>> is_valid_ribbon(((2, 1),))
    False
    """
    if not rows or any(not row for row in rows):
        return False
    for row in rows:
        if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
            return False
    for lower, upper in zip(rows, rows[1:]):
        if upper[-1] <= lower[0]:
            return False
    return True


def is_valid(tup: RibbonTuple, lam: Partition | None = None) -> bool:
    """Validity of a tuple: each component a ribbon, entries exactly 1..n,
    and component sizes equal to ``lam`` when given."""
    if not tup or not all(is_valid_ribbon(comp) for comp in tup):
        return False
    entries = [e for comp in tup for row in comp for e in row]
    if sorted(entries) != list(range(1, len(entries) + 1)):
        return False
    if lam is not None and tuple(component_sizes(tup)) != tuple(lam):
        return False
    return True


def component_sizes(tup: RibbonTuple) -> tuple[int, ...]:
    return tuple(sum(len(row) for row in comp) for comp in tup)


def heights(tup: RibbonTuple) -> dict[int, int]:
    """Map each entry to the height of its cell (bottom row is height 0)."""
    result = {}
    for comp in tup:
        for h, row in enumerate(comp):
            for entry in row:
                result[entry] = h
    return result


def area(tup: RibbonTuple) -> int:
    """Sum of all cell heights."""
    return sum(h * len(row) for comp in tup for h, row in enumerate(comp))


def height_vector(tup: RibbonTuple) -> Composition:
    """The composition whose entry ``i`` is the height of the cell holding ``i``.

    This is the map carrying a minimal tuple to its descent composition.
    """
    hs = heights(tup)
    return tuple(hs[i] for i in range(1, len(hs) + 1))


def reading_word(tup: RibbonTuple) -> Permutation:
    """Entries by level, top level first; within a level by component order
    then west to east.

    >>> reading_word((((1, 9), (5,), (3, 8), (6,)), ((4,), (7,)), ((2,),)))
    (6, 3, 8, 5, 7, 1, 9, 4, 2)
    """
    top = max(len(comp) for comp in tup) - 1
    word = []
    for level in range(top, -1, -1):
        for comp in tup:
            if level < len(comp):
                word.extend(comp[level])
    return tuple(word)


def dinv_pairs(tup: RibbonTuple) -> set[tuple[int, int]]:
    """Cross-component pairs ``(x, y)`` with ``x`` in an earlier component
    than ``y`` and either equal heights with ``x > y``, or ``y`` one row
    above ``x`` with ``x < y``.

    Geometry rules out pairs within one component: rows increase eastward
    and heights only rise along the path.
    """
    pairs = set()
    for i, comp_i in enumerate(tup):
        for j in range(i + 1, len(tup)):
            comp_j = tup[j]
            for h, row_i in enumerate(comp_i):
                if h < len(comp_j):
                    for x in row_i:
                        for y in comp_j[h]:
                            if x > y:
                                pairs.add((x, y))
                if h + 1 < len(comp_j):
                    for x in row_i:
                        for y in comp_j[h + 1]:
                            if x < y:
                                pairs.add((x, y))
    return pairs


def dinv(tup: RibbonTuple) -> int:
    return len(dinv_pairs(tup))


def doff(tup: RibbonTuple) -> int:
    """Bottom-row cells of component ``i`` (1-based) weigh ``i - 1``.

    >>> doff((((1, 9), (5,), (3, 8), (6,)), ((4,), (7,)), ((2,),)))
    3
    """
    return sum(i * len(comp[0]) for i, comp in enumerate(tup))


def ribbon_to_parking(tup: RibbonTuple) -> ParkingFunction:
    """Reflect and shear a tuple with weakly decreasing component sizes into
    a parking function touching the diagonal at the reversed sizes.

    Components are traversed last to first; within a component the cells
    follow the ribbon path from the bottom-east end (heights weakly
    increasing, east before west at equal height).  Heights become the area
    sequence and entries become the labels.
    """
    sizes = component_sizes(tup)
    if any(sizes[i] < sizes[i + 1] for i in range(len(sizes) - 1)):
        raise ValueError(f"component sizes must be weakly decreasing: {sizes}")
    area_seq: list[int] = []
    labels: list[int] = []
    for comp in reversed(tup):
        for h, row in enumerate(comp):
            for entry in reversed(row):
                area_seq.append(h)
                labels.append(entry)
    return ParkingFunction(tuple(area_seq), tuple(labels))


def is_minimal(tup: RibbonTuple) -> bool:
    """Minimality: every cell of a later component is in exactly one dinv
    pair with each earlier component if it sits above the bottom row, and
    in none at all if it sits in the bottom row.
    """
    for j, comp_j in enumerate(tup):
        for h, row_j in enumerate(comp_j):
            for y in row_j:
                for i in range(j):
                    comp_i = tup[i]
                    count = 0
                    if h < len(comp_i):
                        count += sum(1 for x in comp_i[h] if x > y)
                    if h >= 1 and h - 1 < len(comp_i):
                        count += sum(1 for x in comp_i[h - 1] if x < y)
                    if count != (1 if h > 0 else 0):
                        return False
    return True


def _compositions(total: int) -> Iterator[tuple[int, ...]]:
    """Compositions of ``total`` into positive parts."""
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first):
            yield (first,) + rest


def ribbon_fillings(entries: tuple[int, ...]) -> Iterator[Ribbon]:
    """All ribbons on a fixed entry set: choose the row sizes from the
    bottom up, distribute the entries, and keep the fillings where every
    row tops its predecessor (``max(row above) > min(row below)``).

    >>> sorted(ribbon_fillings((1, 2)))
    [((1,), (2,)), ((1, 2),)]
    """
    entries = tuple(sorted(entries))
    for shape in _compositions(len(entries)):

        def distribute(row_index: int, free: tuple[int, ...], rows: tuple):
            if row_index == len(shape):
                yield rows
                return
            for chosen in itertools.combinations(free, shape[row_index]):
                if row_index > 0 and chosen[-1] <= rows[-1][0]:
                    continue
                remaining = tuple(v for v in free if v not in chosen)
                yield from distribute(row_index + 1, remaining, rows + (chosen,))

        yield from distribute(0, entries, ())


def ribbon_tuples(lam: Partition) -> Iterator[RibbonTuple]:
    """All ribbon tuples with component sizes ``lam`` on entries ``1..n``.

    There are ``n!`` of them: the entry sets form an ordered set partition
    and each component admits ``size!`` fillings.
    """
    parts = tuple(p for p in lam if p > 0)
    for osp in ordered_set_partitions(parts):
        for combo in itertools.product(*(tuple(ribbon_fillings(block)) for block in osp)):
            yield combo


@lru_cache(maxsize=None)
def minimal_ribbon_tuples(lam: Partition) -> tuple[RibbonTuple, ...]:
    """The minimal tuples of shape ``lam``, sorted by height vector.

    >>> len(minimal_ribbon_tuples((3, 1)))
    12
    """
    found = [tup for tup in ribbon_tuples(lam) if is_minimal(tup)]
    return tuple(sorted(found, key=height_vector))


def algorithm_sequence(a: Composition, lam: Partition) -> tuple[tuple[int, ...], ...]:
    """Recover an ordered set partition from a composition by scanning the
    periodically shifted sequence ``a~[k*n + i] = a[i] + k``.

    For each block ``k`` the levels ``0 .. lam_k - 1`` are matched greedily:
    level ``m`` is realized by position ``i' = (m - a_j)*n + j`` for an
    unused index ``j`` with ``a_j <= m``, and the smallest ``i'`` past the
    previous pick wins.  Blocks are returned with their indices in the
    order picked.  Raises :class:`DoesNotTerminate` if a level cannot be
    matched.

    >>> algorithm_sequence((1, 2, 0, 2, 0, 1, 1, 0, 1), (6, 2, 1))
    ((3, 6, 1, 2, 4, 7), (5, 9), (8,))
    """
    n = len(a)
    if sum(lam) != n:
        raise ValueError("partition size must match composition length")
    used: set[int] = set()
    blocks = []
    for size in lam:
        block: list[int] = []
        position = 0
        for m in range(size):
            best = None
            for j in range(1, n + 1):
                if j in used or a[j - 1] > m:
                    continue
                candidate = (m - a[j - 1]) * n + j
                if candidate > position and (best is None or candidate < best):
                    best = candidate
            if best is None:
                raise DoesNotTerminate((a, lam))
            position = best
            j = (best - 1) % n + 1
            used.add(j)
            block.append(j)
        blocks.append(tuple(block))
    return tuple(blocks)


def algorithm_tableau(tup: RibbonTuple) -> tuple[tuple[int, ...], ...]:
    """The same recovery run directly on a ribbon tuple.

    Each block starts at the smallest unused bottom-row entry; then it
    repeatedly moves to the smallest unused larger entry one row up if one
    exists, and otherwise to the smallest unused entry in the highest row
    not above the current one.

    >>> t = (((3,), (1, 6, 7), (2, 4)), ((5,), (9,)), ((8,),))
    >>> algorithm_tableau(t)
    ((3, 6, 1, 2, 4, 7), (5, 9), (8,))
    """
    by_height: dict[int, list[int]] = {}
    for comp in tup:
        for h, row in enumerate(comp):
            by_height.setdefault(h, []).extend(row)
    for cells in by_height.values():
        cells.sort()
    sizes = component_sizes(tup)
    used: set[int] = set()
    blocks = []
    for size in sizes:
        available_bottom = [e for e in by_height.get(0, []) if e not in used]
        if not available_bottom:
            raise DoesNotTerminate(tup)
        current = min(available_bottom)
        level = 0
        used.add(current)
        block = [current]
        for _ in range(size - 1):
            above = [
                e for e in by_height.get(level + 1, []) if e not in used and e > current
            ]
            if above:
                current = min(above)
                level += 1
            else:
                for h in range(level, -1, -1):
                    free = [e for e in by_height.get(h, []) if e not in used]
                    if free:
                        current = min(free)
                        level = h
                        break
                else:
                    raise DoesNotTerminate(tup)
            used.add(current)
            block.append(current)
        blocks.append(tuple(block))
    return tuple(blocks)


def _ribbon_from_heights(entries_with_heights: dict[int, int]) -> Ribbon:
    """Assemble a single ribbon from an entry->height map; rows are the
    sorted height classes.  Raises ``ReconstructionError`` if the heights
    skip a level or some row fails to top its predecessor.
    """
    top = max(entries_with_heights.values())
    rows = []
    for h in range(top + 1):
        row = tuple(sorted(e for e, he in entries_with_heights.items() if he == h))
        if not row:
            raise ReconstructionError(f"no cell at height {h}")
        rows.append(row)
    ribbon = tuple(rows)
    if not is_valid_ribbon(ribbon):
        raise ReconstructionError(f"invalid ribbon rows {ribbon}")
    return ribbon


def reconstruct(a: Composition, lam: Partition) -> RibbonTuple:
    """The unique minimal tuple of shape ``lam`` with height vector ``a``.

    Runs :func:`algorithm_sequence` to split ``1..n`` into component entry
    sets, groups each set by height, and validates the result (well-formed
    components, minimality, height vector round-trip).
    """
    try:
        blocks = algorithm_sequence(a, lam)
    except DoesNotTerminate as exc:
        raise ReconstructionError(f"set recovery failed for {a}") from exc
    components = tuple(
        _ribbon_from_heights({j: a[j - 1] for j in block}) for block in blocks
    )
    if not is_valid(components, lam):
        raise ReconstructionError(f"invalid tuple for {a}")
    if height_vector(components) != tuple(a):
        raise ReconstructionError(f"height vector mismatch for {a}")
    if not is_minimal(components):
        raise ReconstructionError(f"tuple for {a} is not minimal")
    return components


def _column_spans(comp: Ribbon) -> list[tuple[int, int]]:
    """Per-row [west, east] column spans, normalized to start at 0."""
    spans = []
    east = 0
    for i, row in enumerate(comp):
        west = east - len(row) + 1
        spans.append((west, east))
        if i + 1 < len(comp):
            east = west
    shift = -min(w for w, _ in spans)
    return [(w + shift, e + shift) for w, e in spans]


def cell_coordinates(tup: RibbonTuple, gap: int = 1) -> dict[int, tuple[int, int]]:
    """Absolute (column, row) of each entry in a left-to-right layout with
    ``gap`` empty columns between components.

    Statistics never read these coordinates; they exist for rendering and
    for checking that no statistic depends on the chosen offsets.
    """
    coords: dict[int, tuple[int, int]] = {}
    offset = 0
    for comp in tup:
        spans = _column_spans(comp)
        for h, (row, (west, _)) in enumerate(zip(comp, spans)):
            for k, entry in enumerate(row):
                coords[entry] = (offset + west + k, h)
        offset += max(east for _, east in spans) + 1 + gap
    return coords


def check_patterns(tup: RibbonTuple) -> list[str]:
    """Local rules satisfied by every minimal tuple; returns violations.

    With the earlier component on the west side of each picture:

    1. the bottom row increases west to east across components;
    2. a stacked pair (``a`` on top of ``c``) level with a later-component
       entry ``b`` in ``a``'s row never has ``c < b < a``;
    3. an entry with an east neighbour in its own row is smaller than every
       later-component entry at its height;
    4. no row with three or more cells is level with a later-component cell
       carrying a cell directly above it;
    5. if a cell ``a`` tops the west end ``b`` of a row with east neighbour
       ``c``, and a later component also rises through those two rows, then
       ``a < c``.

    Vertical adjacency in this encoding: the cell above the west end of a
    row is the east end of the row above, whenever that row exists.
    """
    violations = []

    bottom = [e for comp in tup for e in comp[0]]
    if any(bottom[k] > bottom[k + 1] for k in range(len(bottom) - 1)):
        violations.append(f"pattern 1: bottom row {bottom} not increasing")

    for i, comp in enumerate(tup):
        for j in range(i + 1, len(tup)):
            other = tup[j]
            for h, row in enumerate(comp):
                if h >= 1 and h < len(other):
                    a_val, c_val = row[-1], comp[h - 1][0]
                    for b_val in other[h]:
                        if c_val < b_val < a_val:
                            violations.append(
                                f"pattern 2: {c_val}<{b_val}<{a_val} at height {h}"
                                f" (components {i + 1},{j + 1})"
                            )
                if len(row) >= 2 and h < len(other):
                    for a_val in row[:-1]:
                        for c_val in other[h]:
                            if a_val > c_val:
                                violations.append(
                                    f"pattern 3: {a_val}>{c_val} at height {h}"
                                    f" (components {i + 1},{j + 1})"
                                )
                if len(row) >= 3 and h + 1 < len(other):
                    violations.append(
                        f"pattern 4: 3-cell row at height {h} of component"
                        f" {i + 1} with component {j + 1} rising past it"
                    )
                if h + 1 < len(comp) and len(row) >= 2 and h + 1 < len(other):
                    a_val, c_val = comp[h + 1][-1], row[1]
                    if a_val > c_val:
                        violations.append(
                            f"pattern 5: {a_val}>{c_val} at height {h}"
                            f" (components {i + 1},{j + 1})"
                        )
    return violations


def render(tup: RibbonTuple, gap: int = 1) -> str:
    """ASCII layout mirroring the stored geometry, components left to right."""
    n = sum(component_sizes(tup))
    width = len(str(n))
    coords = cell_coordinates(tup, gap)
    total_cols = max(col for col, _ in coords.values()) + 1
    top = max(len(comp) for comp in tup)
    lines = []
    for h in range(top - 1, -1, -1):
        cells = ["." * width] * total_cols
        for entry, (col, row) in coords.items():
            if row == h:
                cells[col] = str(entry).rjust(width)
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines)


def to_json_dict(tup: RibbonTuple) -> dict:
    """Canonical serialization: rows of entries per component, bottom row first."""
    return {"components": [[list(row) for row in comp] for comp in tup]}
