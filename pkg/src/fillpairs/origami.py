"""[1,1]-origamis: ``n`` unit squares in one horizontal row.

The right edge of square ``i`` is glued to the left edge of square ``i + 1``
(the standard horizontal cycle ``h``) and the top edge of square ``i`` is glued
to the bottom edge of square ``p(i)``.  When ``p`` is a single n-cycle there is
exactly one horizontal and one vertical cylinder, and the horizontal and
vertical core curves form a coherent pair intersecting ``n`` times.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

from .perms import (
    Perm,
    PermutationError,
    commutator,
    compose,
    conjugate,
    cycle_of,
    cycles,
    format_cycle,
    from_diffs,
    inverse,
    is_ncycle,
    to_diffs,
)

Group = Literal["mirror", "full"]
GROUPS: tuple[str, ...] = ("mirror", "full")


@dataclass(frozen=True)
class Origami:
    p: Perm

    def __post_init__(self):
        if not is_ncycle(self.p):
            raise PermutationError(
                f"vertical gluing {self.p} is not a single cycle; not a [1,1]-origami"
            )

    @property
    def n(self) -> int:
        return self.p.n

    @property
    def h(self) -> Perm:
        return Perm.rotation(self.n)

    @classmethod
    def from_cycle(cls, entries) -> Origami:
        return cls(Perm.from_cycle(entries))

    def cycle(self) -> tuple[int, ...]:
        return cycle_of(self.p)

    def __str__(self) -> str:
        return format_cycle(self.cycle())


@dataclass(frozen=True)
class SurfaceData:
    vertex_count: int
    cone_orders: tuple[int, ...]
    euler_char: int
    genus: int


# corner indices within a square
BL, BR, TR, TL = range(4)


def corner_classes(o: Origami) -> list[list[tuple[int, int]]]:
    """Group the ``4n`` square corners into surface vertices by following edge gluings.

    Independent of any permutation algebra: corners are merged with a
    union-find along each glued edge, two corners per edge.
    """
    n = o.n
    parent = list(range(4 * n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    def corner(square, c):
        return 4 * square + c

    for i in range(n):
        right = (i + 1) % n
        union(corner(i, TR), corner(right, TL))
        union(corner(i, BR), corner(right, BL))
        above = o.p(i)
        union(corner(i, TL), corner(above, BL))
        union(corner(i, TR), corner(above, BR))

    classes: dict[int, list[tuple[int, int]]] = {}
    for x in range(4 * n):
        classes.setdefault(find(x), []).append(divmod(x, 4))
    return sorted(classes.values())


def surface_from_corners(o: Origami) -> SurfaceData:
    orders = tuple(sorted((len(c) // 4 for c in corner_classes(o)), reverse=True))
    return _surface(len(orders), orders, o.n)


def vertex_orbits(o: Origami) -> SurfaceData:
    """Vertex classes are the cycles of the commutator of the two gluings."""
    cyc = cycles(commutator(o.h, o.p))
    orders = tuple(sorted((len(c) for c in cyc), reverse=True))
    return _surface(len(cyc), orders, o.n)


def _surface(vertex_count: int, orders: tuple[int, ...], n: int) -> SurfaceData:
    # V - E + F with E = 2n, F = n
    chi = vertex_count - n
    return SurfaceData(vertex_count, orders, chi, (2 - chi) // 2)


def stratum(o: Origami) -> tuple[int, ...]:
    """Zero orders of the translation surface, largest first; ``(2g - 2,)`` for a minimal pair."""
    return tuple(k - 1 for k in vertex_orbits(o).cone_orders if k > 1)


def is_coherent_minimal_pair(o: Origami) -> bool:
    """True iff the complement of the two core curves is a single disk.

    Then ``n = 2g - 1`` and the pair intersects the minimal possible number of
    times.  Coherence needs no check: every square carries the same
    orientation, so all crossings have the same sign.
    """
    return o.n >= 3 and vertex_orbits(o).vertex_count == 1


def is_genus2_minimal_pair(o: Origami) -> bool:
    """Genus 2 needs four squares and leaves two complementary disks."""
    return o.n == 4 and vertex_orbits(o).euler_char == -2


def shift(o: Origami) -> Origami:
    """Relabel every square ``i`` as ``i - 1``; the only relabellings that fix ``h``."""
    h = o.h
    return Origami(compose(inverse(h), compose(o.p, h)))


def mirror_h(o: Origami) -> Origami:
    """Left-right reflection, relabelled so the horizontal cycle stays standard."""
    n = o.n
    r = Perm(tuple((-i) % n for i in range(n)))
    return Origami(conjugate(o.p, r))


def flip_v(o: Origami) -> Origami:
    """Top-bottom reflection."""
    return Origami(inverse(o.p))


def _moves(group: str):
    if group == "mirror":
        return (shift, mirror_h)
    if group == "full":
        return (shift, mirror_h, flip_v)
    raise ValueError(f"unknown symmetry group {group!r}; expected one of {GROUPS}")


def symmetry_orbit(o: Origami, group: Group = "mirror") -> set[Perm]:
    """Orbit of the vertical gluing under relabelling and reflections.

    ``"mirror"`` is generated by :func:`shift` and :func:`mirror_h` (order ``2n``);
    ``"full"`` adds :func:`flip_v` (order ``4n``).
    """
    moves = _moves(group)
    seen = {o.p}
    todo = [o]
    while todo:
        cur = todo.pop()
        for move in moves:
            nxt = move(cur)
            if nxt.p not in seen:
                seen.add(nxt.p)
                todo.append(nxt)
    return seen


def canonical_diffs(diffs: Iterable[int], group: Group = "mirror") -> tuple[int, ...]:
    """Lexicographically least rotation of the difference sequence over the group images.

    A shift leaves the differences unchanged up to rotation, the mirror
    negates them, and the flip negates and reverses them.
    """
    d = tuple(diffs)
    n = len(d)
    neg = tuple((-x) % n for x in d)
    seqs = [d, neg]
    if group == "full":
        seqs += [neg[::-1], d[::-1]]
    elif group != "mirror":
        raise ValueError(f"unknown symmetry group {group!r}; expected one of {GROUPS}")
    return min(s[r:] + s[:r] for s in seqs for r in range(n))


def canonical_form(o: Origami, group: Group = "mirror") -> tuple[int, ...]:
    return canonical_diffs(to_diffs(o.cycle()), group)


def diffs_stabilizer(diffs: tuple[int, ...], group: Group = "mirror") -> int:
    """Number of group elements fixing the origami with these differences."""
    n = len(diffs)
    neg = tuple((-x) % n for x in diffs)
    seqs = [diffs, neg]
    if group == "full":
        seqs += [neg[::-1], diffs[::-1]]
    return sum(1 for s in seqs for r in range(n) if s[r:] + s[:r] == diffs)


def orbit_size(o: Origami, group: Group = "mirror") -> int:
    order = 2 * o.n if group == "mirror" else 4 * o.n
    return order // diffs_stabilizer(to_diffs(o.cycle()), group)


@dataclass(frozen=True)
class PairClass:
    """One equivalence class of coherent minimally intersecting pairs."""

    canonical: tuple[int, ...]
    genus: int
    orbit_size: int
    stratum: tuple[int, ...]
    group: str = "mirror"

    @property
    def n(self) -> int:
        return len(self.canonical)

    def origami(self) -> Origami:
        return Origami.from_cycle(from_diffs(self.canonical))

    def representatives(self) -> set[Perm]:
        return symmetry_orbit(self.origami(), self.group)

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "n": self.n,
            "canonical_diffs": list(self.canonical),
            "orbit_size": self.orbit_size,
            "stratum": list(self.stratum),
        }


def pair_class(o: Origami, group: Group = "mirror") -> PairClass:
    canon = canonical_form(o, group)
    return PairClass(
        canonical=canon,
        genus=vertex_orbits(o).genus,
        orbit_size=orbit_size(o, group),
        stratum=stratum(o),
        group=group,
    )
