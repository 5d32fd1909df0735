"""The complementary ``4n``-gon of a minimal filling pair.

Cutting the surface along both curves leaves a single polygon whose sides
alternate between copies of alpha-arcs and copies of beta-arcs.  Sides are
listed in rotational order around the lone cone point: alpha-slot ``s``
(1-based, ``1..2n``) is followed by beta-side ``s``.  Odd alpha-slots are
*white* and lie below their arc in the origami, even slots are *black* and
lie above it; every arc shows up once in each colour.

Building an origami from a matching is a three stage pipeline:

1. :func:`alpha_matching_from_menage` lays out the alpha-sides.
2. :func:`propagate_beta_labels` forces the beta labels up to one offset ``x``.
3. :func:`resolve_offset` fixes ``x`` and reads off the vertical gluing.

Beta labels run against the upward direction of the vertical curve:
the square whose top is crossed by beta-arc ``k`` sits directly above the
square whose top is crossed by beta-arc ``k + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .menage import black_slot, is_all_opposite, is_menage, white_slot
from .origami import Origami
from .perms import Perm, inverse, to_diffs


class PolygonError(ValueError):
    pass


class PropagationConflict(PolygonError):
    """The beta-label rules loop back on themselves before covering every side."""


class NotAnOrigami(PolygonError):
    """An offset that does not glue up to a [1,1]-origami.

    ``reason`` is ``"self"`` when some alpha-arc would join a square to itself
    (``edge`` is its label) and ``"multi"`` when the horizontal gluing splits
    into several cylinders.
    """

    def __init__(self, reason: str, edge: int | None = None, message: str = ""):
        super().__init__(message or reason)
        self.reason = reason
        self.edge = edge


class TraceFailure(PolygonError):
    pass


def distance(i: int, j: int, n: int) -> int:
    """Cyclic distance between alpha-slots ``i`` and ``j`` (1-based, ``2n`` slots)."""
    if i == j:
        raise PolygonError("distance needs two different slots")
    if not (1 <= i <= 2 * n and 1 <= j <= 2 * n):
        raise ValueError(f"slots must lie in 1..{2 * n}")
    gap = abs(i - j)
    return gap if gap <= n else 2 * n - gap


def _first_appearance(seq: Sequence[int]) -> tuple[int, ...]:
    names: dict[int, int] = {}
    return tuple(names.setdefault(a, len(names) + 1) for a in seq)


@dataclass(frozen=True)
class PolygonMatching:
    """Alpha labels around the polygon; ``labels[s - 1]`` sits in slot ``s``."""

    labels: tuple[int, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if len(labels) % 2 or not labels:
            raise PolygonError("a matching needs an even, positive number of alpha-slots")
        n = len(labels) // 2
        if sorted(set(labels)) != list(range(1, n + 1)):
            raise PolygonError(f"labels must be exactly 1..{n}")
        for a in range(1, n + 1):
            slots = self.slots_of(a)
            if len(slots) != 2:
                raise PolygonError(f"label {a} appears {len(slots)} times, expected 2")
            if slots[0] % 2 == slots[1] % 2:
                raise PolygonError(f"both copies of label {a} have the same colour")

    @property
    def n(self) -> int:
        return len(self.labels) // 2

    @classmethod
    def from_labels(cls, seq: Sequence[int], relabel: bool = False) -> PolygonMatching:
        return cls(_first_appearance(seq) if relabel else tuple(seq))

    def slots_of(self, label: int) -> list[int]:
        return [s for s, a in enumerate(self.labels, 1) if a == label]

    def white(self, label: int) -> int:
        return next(s for s in self.slots_of(label) if s % 2 == 1)

    def black(self, label: int) -> int:
        return next(s for s in self.slots_of(label) if s % 2 == 0)

    def label_at(self, slot: int) -> int:
        return self.labels[(slot - 1) % (2 * self.n)]

    def direction(self, slot: int) -> str:
        # the two copies of an arc are traversed in opposite directions
        return "+" if slot % 2 else "-"

    def pairs(self) -> list[tuple[int, int]]:
        return [(self.white(a), self.black(a)) for a in range(1, self.n + 1)]

    def distances(self) -> tuple[int, ...]:
        """Distance between the two copies of each label, in label order."""
        return tuple(distance(w, b, self.n) for w, b in self.pairs())

    def menage_permutation(self) -> tuple[int, ...]:
        """White side ``i`` (slot ``2i+1``) pairs with black side ``P(i)``."""
        n = self.n
        images = []
        for i in range(n):
            b = self.black(self.label_at(white_slot(i, n)))
            images.append((b // 2) % n)
        return tuple(images)

    def rotated(self, k: int) -> PolygonMatching:
        """Start reading ``2k`` slots later (colours preserved), relabelled by first appearance."""
        m = 2 * self.n
        shift = (2 * k) % m
        return PolygonMatching.from_labels(self.labels[shift:] + self.labels[:shift], relabel=True)


def check_lemma(m: PolygonMatching) -> list[str]:
    """Violations of the structural constraints on minimal-pair matchings (empty if none)."""
    problems = []
    dist = m.distances()
    for a, d in enumerate(dist, 1):
        if d % 2 == 0:
            problems.append(f"label {a} has even distance {d}")
        if d == 1:
            problems.append(f"label {a} has distance 1")
    if dist and all(d == m.n for d in dist):
        problems.append("every label is matched with its opposite")
    return problems


def alpha_matching_from_menage(P: Sequence[int]) -> PolygonMatching:
    images = tuple(getattr(P, "images", P))
    n = len(images)
    if n % 2 == 0:
        raise PolygonError("minimal filling pairs need an odd number of arcs")
    if not is_menage(images):
        raise PolygonError(f"{images} is not a ménage permutation: some copies would be adjacent")
    if is_all_opposite(images):
        raise PolygonError("the all-opposite matching cannot come from a filling pair")
    return _matching_from_images(images)


def _matching_from_images(images: Sequence[int]) -> PolygonMatching:
    n = len(images)
    slots = [0] * (2 * n)
    for i, j in enumerate(images):
        slots[white_slot(i, n) - 1] = i + 1
        slots[black_slot(j, n) - 1] = i + 1
    return PolygonMatching.from_labels(slots, relabel=True)


@dataclass(frozen=True)
class BetaLabeling:
    """Beta labels forced by the alpha matching.

    ``fixed[s]`` is the label of beta-side ``s`` for even ``s`` (the sides
    entering a white slot); ``symbolic[s] = k`` means beta-side ``s`` (odd)
    carries ``x + k``.  Labels live in ``1..n`` and wrap modulo ``n``.
    """

    matching: PolygonMatching
    fixed: dict[int, int]
    symbolic: dict[int, int]

    @property
    def n(self) -> int:
        return self.matching.n

    def labels(self, x: int) -> dict[int, int]:
        n = self.n
        out = dict(self.fixed)
        out.update({s: (x - 1 + k) % n + 1 for s, k in self.symbolic.items()})
        return out

    def fixed_row(self) -> list[int]:
        """Fixed labels in slot order."""
        return [self.fixed[s] for s in sorted(self.fixed)]

    def symbolic_row(self) -> list[str]:
        return [f"x+{k}" if k else "x" for _, k in sorted(self.symbolic.items())]


def propagate_beta_labels(m: PolygonMatching) -> BetaLabeling:
    """Push labels across every alpha identification.

    Crossing from the black copy of an arc to its white copy raises the label
    by one on both sides: the beta-side leaving the black copy is one below
    the side entering the white copy, and the side entering the black copy is
    one below the side leaving the white copy.  The sides entering white
    slots form one chain (seeded with 1 just before slot 1), the sides
    leaving white slots another (seeded with ``x`` just after slot 1).
    """
    n = m.n
    last = 2 * n

    fixed = {last: 1}
    side = last
    for step in range(1, n):
        side = (m.white(m.label_at(side)) - 1) or last
        if side in fixed:
            raise PropagationConflict(f"fixed chain closes after {step} of {n} sides")
        fixed[side] = step + 1
    if (m.white(m.label_at(side)) - 1 or last) != last:
        raise PropagationConflict("fixed chain does not close up")

    symbolic = {1: 0}
    side = 1
    for step in range(1, n):
        side = m.white(m.label_at(side + 1))
        if side in symbolic:
            raise PropagationConflict(f"symbolic chain closes after {step} of {n} sides")
        symbolic[side] = step
    if m.white(m.label_at(side + 1)) != 1:
        raise PropagationConflict("symbolic chain does not close up")

    return BetaLabeling(m, fixed, symbolic)


def resolve_offset(bl: BetaLabeling, x: int) -> Origami:
    """Glue the polygon with offset ``x`` and return the origami.

    Each black slot puts the square named by the beta label before it
    immediately left of the square named by the label after it.  Squares are
    numbered from the one carrying beta label ``n``.  Raises
    :class:`NotAnOrigami` when the gluing fails.
    """
    m = bl.matching
    n = m.n
    if not 1 <= x <= n:
        raise ValueError(f"offset must lie in 1..{n}")
    lab = bl.labels(x)
    right_of: dict[int, int] = {}
    for b in range(2, 2 * n + 1, 2):
        left, right = lab[b - 1], lab[b]
        if left == right:
            edge = m.label_at(b)
            raise NotAnOrigami("self", edge, f"edge {edge} in alpha is followed by itself")
        right_of[left] = right

    row = [n]
    while len(row) < n and right_of[row[-1]] != n:
        row.append(right_of[row[-1]])
    if len(row) < n:
        raise NotAnOrigami("multi", message="the horizontal gluing has more than one cylinder")

    pos = {label: k for k, label in enumerate(row)}
    images = [0] * n
    for label, k in pos.items():
        images[k] = pos[(label - 2) % n + 1]
    return Origami(Perm(tuple(images)))


def offsets(bl: BetaLabeling) -> dict[int, Origami | NotAnOrigami]:
    """Outcome of every offset ``1..n``."""
    out: dict[int, Origami | NotAnOrigami] = {}
    for x in range(1, bl.n + 1):
        try:
            out[x] = resolve_offset(bl, x)
        except NotAnOrigami as exc:
            out[x] = exc
    return out


def construct_from_matching(m: PolygonMatching) -> list[tuple[int, Origami]]:
    try:
        bl = propagate_beta_labels(m)
    except PropagationConflict:
        return []
    return [(x, o) for x, o in offsets(bl).items() if isinstance(o, Origami)]


def construct_from_class(P) -> list[Origami]:
    """All origamis realising the matching of a ménage permutation (or a class representative)."""
    P = getattr(P, "representative", P)
    return [o for _, o in construct_from_matching(alpha_matching_from_menage(P))]


def origami_to_polygon(o: Origami) -> PolygonMatching:
    """Walk around the cone point and record the alpha-arcs met, starting below arc 1.

    Arc ``k`` (1-based) joins square ``k`` to the square on its right.  From
    the underside of an arc the walk drops into the square below the arc's
    left end and meets the topside of that square's arc; from the topside it
    moves one square right, goes up, and meets the underside of the arc
    entering that square from the left.
    """
    n = o.n
    p = o.p
    below = inverse(p)
    seen: set[tuple[int, str]] = set()
    labels = []
    arc, side = 0, "under"
    for _ in range(2 * n):
        if (arc, side) in seen:
            raise TraceFailure(f"walk closed after {len(labels)} of {2 * n} alpha-sides")
        seen.add((arc, side))
        labels.append(arc + 1)
        if side == "under":
            arc, side = below(arc), "top"
        else:
            arc, side = (p((arc + 1) % n) - 1) % n, "under"
    if (arc, side) != (0, "under"):
        raise TraceFailure("walk did not return to its start after 2n alpha-sides")
    return PolygonMatching(tuple(labels))


def is_valid_pair_via_trace(o: Origami) -> bool:
    """The walk fills all ``2n`` slots and every identified pair sits at odd distance."""
    try:
        m = origami_to_polygon(o)
    except (TraceFailure, PolygonError):
        return False
    return all(d % 2 == 1 for d in m.distances())


def same_up_to_shift(a: Origami, b: Origami) -> bool:
    if a.n != b.n:
        return False
    da, db = to_diffs(a.cycle()), to_diffs(b.cycle())
    return any(da[r:] + da[:r] == db for r in range(a.n))


def full_labels(o: Origami) -> tuple[PolygonMatching, dict[int, int], int]:
    """Trace ``o`` and recover its beta labels by rebuilding it from the matching."""
    m = origami_to_polygon(o)
    bl = propagate_beta_labels(m)
    for x, res in offsets(bl).items():
        if isinstance(res, Origami) and same_up_to_shift(res, o):
            return m, bl.labels(x), x
    raise PolygonError(f"{o} is not rebuilt by its own matching")


def polygon_lines(o: Origami) -> list[str]:
    """``side curve label direction`` for each of the ``4n`` sides, 1-based."""
    m, beta, _ = full_labels(o)
    lines = []
    for s in range(1, 2 * m.n + 1):
        lines.append(f"{2 * s - 1} a {m.label_at(s)} {m.direction(s)}")
        lines.append(f"{2 * s} b {beta[s]} {'-' if s % 2 else '+'}")
    return lines

