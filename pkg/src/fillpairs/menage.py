"""Ménage permutations and their classes under cyclic relabelling.

A ménage permutation of size ``n`` satisfies ``P(i) not in {i, i+1} (mod n)``.
It encodes how the ``2n`` alpha-sides of the complementary polygon pair up:
white side ``i`` and black side ``P(i)`` are two copies of the same arc.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial, gcd
from typing import Iterator


def _images(P) -> tuple[int, ...]:
    return tuple(getattr(P, "images", P))


def is_menage(P) -> bool:
    images = _images(P)
    n = len(images)
    return all(v != i and v != (i + 1) % n for i, v in enumerate(images))


def enumerate_menage(n: int) -> Iterator[tuple[int, ...]]:
    """Every ménage permutation of size ``n`` once, in lexicographic order of images."""
    if n < 3:
        raise ValueError("ménage permutations need n >= 3")
    images = [0] * n
    used = [False] * n

    def place(i):
        if i == n:
            yield tuple(images)
            return
        banned = (i, (i + 1) % n)
        for v in range(n):
            if used[v] or v in banned:
                continue
            used[v] = True
            images[i] = v
            yield from place(i + 1)
            used[v] = False

    yield from place(0)


def menage_number(n: int) -> int:
    """Touchard's alternating sum, exact."""
    if n < 3:
        raise ValueError("ménage numbers are defined here for n >= 3")
    total = 0
    for k in range(n + 1):
        term = 2 * n * comb(2 * n - k, k) // (2 * n - k) * factorial(n - k)
        total += -term if k % 2 else term
    return total


def rotate_conjugate(P, a: int) -> tuple[int, ...]:
    """``C^-1 P C`` with ``C: i -> i + a``; the same seating read from another chair."""
    images = _images(P)
    n = len(images)
    return tuple((images[(i + a) % n] - a) % n for i in range(n))


@dataclass(frozen=True)
class GilbertClass:
    representative: tuple[int, ...]
    size: int

    @property
    def n(self) -> int:
        return len(self.representative)

    def members(self) -> list[tuple[int, ...]]:
        return sorted({rotate_conjugate(self.representative, a) for a in range(self.n)})


def gilbert_class_of(P) -> GilbertClass:
    images = _images(P)
    conj = {rotate_conjugate(images, a) for a in range(len(images))}
    return GilbertClass(min(conj), len(conj))


def gilbert_classes(n: int) -> list[GilbertClass]:
    """Partition of all ménage permutations into rotation classes, sorted by representative."""
    seen: set[tuple[int, ...]] = set()
    classes = []
    for P in enumerate_menage(n):
        if P in seen:
            continue
        conj = {rotate_conjugate(P, a) for a in range(n)}
        seen |= conj
        classes.append(GilbertClass(min(conj), len(conj)))
    return sorted(classes, key=lambda c: c.representative)


def rotation_fixed_count(n: int, a: int) -> int:
    """Number of ménage permutations commuting with ``i -> i + a``.

    Such a permutation is fixed by its values on ``0..d-1`` with
    ``d = gcd(a, n)``; those values must hit every residue class mod ``d``
    once and avoid the two forbidden seats.
    """
    d = gcd(a, n)
    if d == n:
        return menage_number(n)
    count = 0

    def choose(i, residues):
        nonlocal count
        if i == d:
            count += 1
            return
        for v in range(n):
            if v % d in residues or v == i or v == (i + 1) % n:
                continue
            choose(i + 1, residues | {v % d})

    choose(0, frozenset())
    return count


def gilbert_class_count(n: int) -> int:
    """Class count by Burnside's lemma over the ``n`` rotations."""
    total = sum(rotation_fixed_count(n, a) for a in range(n))
    assert total % n == 0
    return total // n


# Slot layout of the alpha-sides around the polygon (1-based): white side i
# sits at slot 2i+1, black side j at slot 2j, black side 0 at slot 2n.  With
# this layout the slots adjacent to white i are exactly black i and black i+1.
def white_slot(i: int, n: int) -> int:
    return 2 * i + 1


def black_slot(j: int, n: int) -> int:
    return 2 * j if j else 2 * n


def opposite_permutation(n: int) -> tuple[int, ...]:
    """The seating that puts every couple diametrically opposite."""
    if n % 2 == 0:
        raise ValueError("the opposite seating is only defined for odd n")
    half = (n + 1) // 2
    return tuple((i + half) % n for i in range(n))


def is_all_opposite(P) -> bool:
    images = _images(P)
    n = len(images)
    if n % 2 == 0:
        raise ValueError("all-opposite check needs odd n")
    for i, j in enumerate(images):
        gap = abs(white_slot(i, n) - black_slot(j, n))
        if min(gap, 2 * n - gap) != n:
            return False
    return True


def usable_classes(n: int) -> list[GilbertClass]:
    """Classes that can come from a minimal filling pair: all but the opposite seating."""
    return [c for c in gilbert_classes(n) if not is_all_opposite(c.representative)]

