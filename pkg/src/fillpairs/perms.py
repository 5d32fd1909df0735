"""Permutations of ``{0, ..., n-1}``, n-cycles and their difference sequences.

Everything here is 0-based.  The textual cycle notation used on the command
line and in reports is 1-based; conversion happens only in
:func:`parse_cycle` and :func:`format_cycle`.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Sequence


class PermutationError(ValueError):
    """Raised for malformed permutations or size mismatches."""


@dataclass(frozen=True)
class Perm:
    """A permutation stored as its image list: ``images[i]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if not images:
            raise PermutationError("a permutation needs at least one point")
        if sorted(images) != list(range(len(images))):
            raise PermutationError(f"not a bijection of 0..{len(images) - 1}: {images}")
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __len__(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> Perm:
        return cls(tuple(range(n)))

    @classmethod
    def rotation(cls, n: int, a: int = 1) -> Perm:
        """``i -> i + a (mod n)``.  With ``a = 1`` this is the standard horizontal cycle."""
        return cls(tuple((i + a) % n for i in range(n)))

    @classmethod
    def from_cycle(cls, entries: Sequence[int]) -> Perm:
        """The n-cycle ``entries[0] -> entries[1] -> ... -> entries[0]``."""
        n = len(entries)
        images = [-1] * n
        for i, a in enumerate(entries):
            if not 0 <= a < n or images[a] != -1:
                raise PermutationError(f"cycle entries must be distinct values in 0..{n - 1}")
            images[a] = entries[(i + 1) % n]
        return cls(tuple(images))

    def __str__(self) -> str:
        return format_cycles(self)


def _check_sizes(p: Perm, q: Perm) -> None:
    if p.n != q.n:
        raise PermutationError(f"size mismatch: {p.n} != {q.n}")


def compose(p: Perm, q: Perm) -> Perm:
    """``i -> p(q(i))``."""
    _check_sizes(p, q)
    return Perm(tuple(p.images[j] for j in q.images))


def inverse(p: Perm) -> Perm:
    images = [0] * p.n
    for i, v in enumerate(p.images):
        images[v] = i
    return Perm(tuple(images))


def commutator(a: Perm, b: Perm) -> Perm:
    """``a b a^-1 b^-1`` (rightmost factor applied first)."""
    _check_sizes(a, b)
    return compose(a, compose(b, compose(inverse(a), inverse(b))))


def conjugate(p: Perm, r: Perm) -> Perm:
    """``r p r^-1``: the permutation ``p`` after renaming every point ``i`` to ``r(i)``."""
    return compose(r, compose(p, inverse(r)))


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Orbits of ``p``, each listed from its minimal element, sorted by that element."""
    seen = [False] * p.n
    out = []
    for start in range(p.n):
        if seen[start]:
            continue
        cyc = []
        j = start
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = p.images[j]
        out.append(tuple(cyc))
    return out


def is_ncycle(p: Perm) -> bool:
    return len(cycles(p)) == 1


def cycle_of(p: Perm) -> tuple[int, ...]:
    """The cycle sequence ``(0, p(0), p(p(0)), ...)`` of an n-cycle."""
    cyc = cycles(p)
    if len(cyc) != 1:
        raise PermutationError(f"{format_cycles(p)} is not an n-cycle")
    return cyc[0]


def iterate_ncycles(n: int, prefix: Sequence[int] = ()) -> Iterator[tuple[int, ...]]:
    """Yield every n-cycle as a cycle sequence starting at 0, in lexicographic order.

    ``prefix`` pins the entries right after the leading 0, which is how the
    search space is cut into independent chunks.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    prefix = tuple(prefix)
    if len(set(prefix)) != len(prefix) or any(not 0 < a < n for a in prefix):
        raise ValueError(f"bad prefix {prefix} for n={n}")
    rest = sorted(set(range(1, n)) - set(prefix))
    for tail in itertools.permutations(rest):
        yield (0, *prefix, *tail)


def prefixes(n: int, depth: int) -> list[tuple[int, ...]]:
    """All admissible prefixes of the given depth, in the order :func:`iterate_ncycles` visits them."""
    return list(itertools.permutations(range(1, n), depth))


def to_diffs(entries: Sequence[int]) -> tuple[int, ...]:
    """Consecutive differences ``a[i+1] - a[i] (mod n)`` of a cycle sequence, cyclically."""
    n = len(entries)
    return tuple((entries[(i + 1) % n] - entries[i]) % n for i in range(n))


def from_diffs(diffs: Sequence[int]) -> tuple[int, ...]:
    """Rebuild the cycle sequence starting at 0; rejects sequences that are not an n-cycle."""
    n = len(diffs)
    entries = [0]
    seen = {0}
    for d in diffs[:-1]:
        nxt = (entries[-1] + d) % n
        if nxt in seen:
            raise PermutationError(f"partial sums of {tuple(diffs)} repeat: not an n-cycle")
        seen.add(nxt)
        entries.append(nxt)
    if (entries[-1] + diffs[-1]) % n != 0:
        raise PermutationError(f"{tuple(diffs)} does not sum to 0 mod {n}")
    return tuple(entries)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int | None = None) -> Perm:
    """Parse 1-based cycle notation like ``"(1 2 5 3 4)"`` or ``"(1 3)(2 4)"``.

    Points not mentioned are fixed; ``n`` defaults to the largest point seen.
    """
    groups = _CYCLE_RE.findall(text)
    if not groups or _CYCLE_RE.sub("", text).strip():
        raise PermutationError(f"cannot parse cycle notation {text!r}")
    cyc_list = [[int(tok) for tok in g.replace(",", " ").split()] for g in groups]
    points = [a for c in cyc_list for a in c]
    size = n if n is not None else max(points, default=0)
    if len(points) != len(set(points)) or any(not 1 <= a <= size for a in points):
        raise PermutationError(f"cycle notation {text!r} is not a permutation of 1..{size}")
    images = list(range(size))
    for c in cyc_list:
        for i, a in enumerate(c):
            images[a - 1] = c[(i + 1) % len(c)] - 1
    return Perm(tuple(images))


def parse_cycle(text: str, n: int | None = None) -> Perm:
    """Like :func:`parse_cycles` but insists on a single n-cycle."""
    p = parse_cycles(text, n)
    if not is_ncycle(p):
        raise PermutationError(f"{text!r} is not a single {p.n}-cycle")
    return p


def format_cycle(entries: Sequence[int]) -> str:
    return "(" + " ".join(str(a + 1) for a in entries) + ")"


def format_cycles(p: Perm) -> str:
    """1-based cycle notation; fixed points are omitted unless ``p`` is the identity."""
    cyc = [c for c in cycles(p) if len(c) > 1]
    if not cyc:
        return "()"
    return "".join(format_cycle(c) for c in cyc)
