"""Descent and inversion statistics, their tables, and descent compositions.

The inversion set records *value* pairs: ``Inv(sigma)`` consists of pairs
``(sigma_i, sigma_j)`` with ``i < j`` and ``sigma_i > sigma_j``.  The
inversion table ``invt(sigma)`` is indexed by values: entry ``j`` counts
inversion pairs whose second (smaller) coordinate is ``j``.

The major index table ``majt(sigma)`` is built from runs: decompose
``sigma`` into maximal increasing factors; if there are ``r`` runs and
value ``i`` lies in the ``k``-th run then entry ``i`` of the table is
``r - k``.  Its entries sum to ``maj(sigma)``.  The image of ``majt`` on
``S_n`` is the set of descent compositions ``D_n``; shuffling descent
compositions with block sizes ``lam`` gives the shape-indexed family
``D_lam``, the exponent set of the descent-monomial basis.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import NamedTuple

from .core import (
    Composition,
    OrderedSetPartition,
    Partition,
    Permutation,
    multinomial,
    ordered_set_partitions,
    permutations,
)


class NotADescentComposition(ValueError):
    """Raised when a composition is not the major index table of any permutation."""


def inversion_set(sigma: Permutation) -> set[tuple[int, int]]:
    """Value pairs ``(sigma_i, sigma_j)`` with ``i < j`` and ``sigma_i > sigma_j``.

    >>> sorted(inversion_set((3, 5, 1, 2, 4)))
    [(3, 1), (3, 2), (5, 1), (5, 2), (5, 4)]
    """
    return {
        (sigma[i], sigma[j])
        for i in range(len(sigma))
        for j in range(i + 1, len(sigma))
        if sigma[i] > sigma[j]
    }


def descent_set(sigma: Permutation) -> set[int]:
    """1-based positions ``i`` with ``sigma_i > sigma_{i+1}``.

    >>> descent_set((3, 5, 1, 2, 4))
    {2}
    """
    return {i + 1 for i in range(len(sigma) - 1) if sigma[i] > sigma[i + 1]}


def inv(sigma: Permutation) -> int:
    """Number of inversions."""
    return len(inversion_set(sigma))


def maj(sigma: Permutation) -> int:
    """Major index: sum of descent positions.

    >>> maj((3, 5, 1, 2, 4))
    2
    """
    return sum(descent_set(sigma))


def invt(sigma: Permutation) -> Composition:
    """Inversion table, indexed by value.

    Entry ``j`` counts the values larger than ``j`` appearing to its left.
    These are the exponents of the Artin-type monomial of ``sigma``.

    >>> invt((3, 4, 1, 5, 2))
    (2, 3, 0, 0, 0)
    """
    n = len(sigma)
    table = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if sigma[i] > sigma[j]:
                table[sigma[j] - 1] += 1
    return tuple(table)


def runs(sigma: Permutation) -> list[tuple[int, ...]]:
    """Maximal increasing factors of ``sigma``, in order.

    >>> runs((3, 4, 1, 5, 2))
    [(3, 4), (1, 5), (2,)]
    """
    result = []
    current = [sigma[0]] if sigma else []
    for value in sigma[1:]:
        if value > current[-1]:
            current.append(value)
        else:
            result.append(tuple(current))
            current = [value]
    if current:
        result.append(tuple(current))
    return result


def majt(sigma: Permutation) -> Composition:
    """Major index table: entry ``i`` is ``r - k`` when value ``i`` is in run ``k``.

    The entries sum to ``maj(sigma)``, and these are the exponents of the
    descent monomial of ``sigma``.

    >>> majt((3, 4, 1, 5, 2))
    (1, 0, 2, 2, 1)
    >>> majt((3, 1, 7, 5, 4, 2, 6))
    (3, 0, 4, 1, 2, 0, 3)
    """
    sigma_runs = runs(sigma)
    r = len(sigma_runs)
    table = [0] * len(sigma)
    for k, run in enumerate(sigma_runs, start=1):
        for value in run:
            table[value - 1] = r - k
    return tuple(table)


def majt_inverse(a: Composition) -> Permutation:
    """The unique permutation with major index table ``a``.

    Reconstruction: with ``r = max(a) + 1``, the values ``i`` with
    ``a_i = r - k`` form the ``k``-th run, listed increasingly; the runs are
    concatenated and the result validated by recomputing the table.

    Raises :class:`NotADescentComposition` when no such permutation exists.

    >>> majt_inverse((1, 0, 2, 2, 1))
    (3, 4, 1, 5, 2)
    >>> majt_inverse((1, 1, 0))
    Traceback (most recent call last):
        ...
    gpdescent.descent.NotADescentComposition: (1, 1, 0)
    """
    a = tuple(a)
    if not a:
        return ()
    if min(a) < 0:
        raise NotADescentComposition(a)
    r = max(a) + 1
    word: list[int] = []
    for k in range(1, r + 1):
        run = [i + 1 for i, entry in enumerate(a) if entry == r - k]
        if not run:
            raise NotADescentComposition(a)
        word.extend(run)
    sigma = tuple(word)
    if majt(sigma) != a:
        raise NotADescentComposition(a)
    return sigma


def is_descent_composition(a: Composition) -> bool:
    """Whether ``a`` lies in ``D_n``, i.e. is a major index table."""
    try:
        majt_inverse(a)
    except NotADescentComposition:
        return False
    return True


@lru_cache(maxsize=None)
def descent_compositions(n: int) -> tuple[Composition, ...]:
    """The set ``D_n`` of descent compositions of length ``n``, sorted.

    >>> descent_compositions(3)
    ((0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2), (1, 0, 1))
    """
    return tuple(sorted({majt(sigma) for sigma in permutations(n)}))


def descent_key(a: Composition):
    """Sort key realizing the descent order on exponent vectors.

    Compare the descending sorts lexicographically; break ties by comparing
    the vectors themselves lexicographically.  This is a total order on
    compositions of a fixed length (not a monomial order).
    """
    return (tuple(sorted(a, reverse=True)), tuple(a))


def descent_compare(a: Composition, b: Composition) -> int:
    """Three-way comparison in the descent order: -1, 0, or 1.

    >>> descent_compare((0, 1, 1), (2, 0, 0))
    -1
    >>> descent_compare((1, 0, 1), (1, 1, 0))
    -1
    """
    if len(a) != len(b):
        raise ValueError("descent order compares equal-length compositions")
    ka, kb = descent_key(a), descent_key(b)
    return (ka > kb) - (ka < kb)


def restrict(a: Composition, positions) -> Composition:
    """Subsequence of ``a`` at the 1-based ``positions``, in original order.

    >>> restrict((3, 0, 4, 1, 2, 0, 3), {1, 3, 6})
    (3, 4, 0)
    """
    return tuple(a[p - 1] for p in sorted(positions))


@lru_cache(maxsize=None)
def descent_compositions_lambda(lam: Partition) -> tuple[Composition, ...]:
    """The set ``D_lam``: compositions whose restriction to some ordered set
    partition of type ``lam`` is a descent composition block by block.

    Built as the (deduplicated) union of shuffles of tuples from
    ``D_{lam_1} x ... x D_{lam_l}``.  Zero parts are skipped, so weak
    compositions are accepted.

    >>> len(descent_compositions_lambda((3, 1)))
    12
    """
    parts = tuple(p for p in lam if p > 0)
    n = sum(parts)
    found: set[Composition] = set()
    for osp in ordered_set_partitions(parts):
        for combo in itertools.product(*(descent_compositions(p) for p in parts)):
            a = [0] * n
            for block, entries in zip(osp, combo):
                for position, entry in zip(block, entries):
                    a[position - 1] = entry
            found.add(tuple(a))
    return tuple(sorted(found))


def descent_composition_witness(a: Composition, lam: Partition) -> OrderedSetPartition | None:
    """An ordered set partition witnessing ``a`` in ``D_lam``, or ``None``.

    >>> descent_composition_witness((1, 0, 0, 1), (3, 1))
    ((1, 2, 4), (3,))
    >>> descent_composition_witness((1, 1, 0, 0), (3, 1)) is None
    True
    """
    parts = tuple(p for p in lam if p > 0)
    if len(a) != sum(parts):
        raise ValueError("composition length must match the partition size")

    def search(block_index: int, free: tuple[int, ...], blocks: list):
        if block_index == len(parts):
            return tuple(blocks)
        for subset in itertools.combinations(free, parts[block_index]):
            if is_descent_composition(restrict(a, subset)):
                remaining = tuple(p for p in free if p not in subset)
                result = search(block_index + 1, remaining, blocks + [subset])
                if result is not None:
                    return result
        return None

    return search(0, tuple(range(1, len(a) + 1)), [])


def in_descent_compositions_lambda(a: Composition, lam: Partition) -> bool:
    """Membership test for ``D_lam`` (witness search)."""
    return descent_composition_witness(a, lam) is not None


@lru_cache(maxsize=None)
def j_maj(lam: Partition) -> tuple[Permutation, ...]:
    """The permutations whose major index tables lie in ``D_lam``.

    Cardinality is the multinomial coefficient in the conjugate parts.

    >>> len(j_maj((3, 1))) == multinomial((3, 1)) == 12
    True
    """
    return tuple(majt_inverse(a) for a in descent_compositions_lambda(lam))


class DescentBasisElement(NamedTuple):
    """A descent monomial together with its indexing permutation.

    >>> DescentBasisElement.from_witness((3, 4, 1, 5, 2))
    DescentBasisElement(exponent=(1, 0, 2, 2, 1), witness=(3, 4, 1, 5, 2), degree=6)
    >>> DescentBasisElement.from_exponent((0, 1, 0)).witness
    (2, 1, 3)
    """

    exponent: Composition
    witness: Permutation
    degree: int

    @classmethod
    def from_witness(cls, sigma: Permutation) -> "DescentBasisElement":
        exponent = majt(sigma)
        return cls(exponent, tuple(sigma), sum(exponent))

    @classmethod
    def from_exponent(cls, a: Composition) -> "DescentBasisElement":
        return cls(tuple(a), majt_inverse(a), sum(a))


def descent_monomial(sigma: Permutation) -> Composition:
    """Exponent vector of the descent monomial: the product over descent
    positions ``i`` of ``x_{sigma_1} ... x_{sigma_i}``.  Equals ``majt``.
    """
    return majt(sigma)


def artin_monomial(sigma: Permutation) -> Composition:
    """Exponent vector of the Artin-type monomial, one factor ``x_j`` per
    inversion pair with smaller value ``j``.  Equals ``invt``.
    """
    return invt(sigma)
