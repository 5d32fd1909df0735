"""Census of coherent minimally intersecting filling pairs, genus by genus.

Brute force walks every n-cycle as a difference sequence ``d`` (cycle
``0, d0, d0+d1, ...``), pruning on repeated partial sums.  In canonical mode it
additionally keeps only sequences whose first entry is the smallest of all
``d_i`` and ``n - d_i``; every lexicographically least group image has that
property, so each class is met exactly at its canonical form.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Literal

import numba
import numpy as np

from .menage import usable_classes
from .origami import (
    Group,
    Origami,
    PairClass,
    canonical_form,
    is_coherent_minimal_pair,
    is_genus2_minimal_pair,
    orbit_size,
    pair_class,
    stratum,
    vertex_orbits,
)
from .perms import Perm, PermutationError, cycle_of, format_cycle, is_ncycle, iterate_ncycles
from .polygon import construct_from_class, is_valid_pair_via_trace

Method = Literal["brute-force", "construction"]

# (n-1)! for g = 8 is 14!; beyond that the search is refused unless forced
MAX_GENUS = 7
# prefix length for work partitioning
SPLIT_DEPTH = 2


class CensusTooLarge(ValueError):
    pass


@dataclass
class CensusResult:
    genus: int
    n: int
    classes: list[PairClass]
    method: str
    elapsed: float
    group: str = "mirror"
    ordered_count: int | None = None
    extra: dict = field(default_factory=dict)

    @property
    def count(self) -> int:
        return len(self.classes)

    def canonical_set(self) -> set[tuple[int, ...]]:
        return {c.canonical for c in self.classes}


def squares_for(g: int) -> int:
    return 4 if g == 2 else 2 * g - 1


def _check_genus(g: int, allow_long: bool) -> None:
    if g < 3:
        raise ValueError(f"genus {g}: the odd-square census needs g >= 3 (use genus2_census for g = 2)")
    if g > MAX_GENUS and not allow_long:
        raise CensusTooLarge(
            f"genus {g} means scanning {2 * g - 2}! cycles; pass allow_long to force it"
        )


# ---------------------------------------------------------------------------
# numba kernel


@numba.njit(cache=True)
def _single_vertex(p, pinv, n):
    # cycle of commutator h p h^-1 p^-1 through 0: i -> p(pinv(i) - 1) + 1
    i = 0
    steps = 0
    while True:
        j = pinv[i] - 1
        if j < 0:
            j += n
        i = p[j] + 1
        if i == n:
            i = 0
        steps += 1
        if i == 0:
            break
    return steps == n


@numba.njit(cache=True)
def _is_least(d, n, full):
    """True if ``d`` is the lexicographic minimum over its group images; also the stabilizer size."""
    nseq = 4 if full else 2
    stab = 0
    for s in range(nseq):
        for r in range(n):
            cmp = 0
            for k in range(n):
                if s == 0:
                    v = d[(r + k) % n]
                elif s == 1:
                    v = n - d[(r + k) % n]
                elif s == 2:
                    v = n - d[(r - k) % n]
                else:
                    v = d[(r - k) % n]
                if v != d[k]:
                    cmp = -1 if v < d[k] else 1
                    break
            if cmp < 0:
                return False, 0
            if cmp == 0:
                stab += 1
    return True, stab


@numba.njit(cache=True)
def _scan(n, prefix, canonical, full, out):
    """Depth-first scan of difference sequences extending ``prefix``.

    Returns ``(valid, written)``.  ``valid`` counts accepted sequences: every
    single-vertex cycle, or in canonical mode only the canonical ones.  Those
    are copied into ``out`` (diffs followed by the stabilizer size) while it
    has room.
    """
    d = np.zeros(n, np.int64)
    a = np.zeros(n, np.int64)  # a[k] = partial sum before d[k]
    used = np.zeros(n, np.bool_)
    p = np.zeros(n, np.int64)
    pinv = np.zeros(n, np.int64)
    used[0] = True
    depth = 0
    lo = 1
    hi = n - 1
    for v in prefix:
        nxt = (a[depth] + v) % n
        if used[nxt]:
            return 0, 0
        d[depth] = v
        used[nxt] = True
        depth += 1
        a[depth] = nxt
    if canonical and len(prefix) > 0:
        lo = min(prefix[0], n - prefix[0])
        if lo != prefix[0]:
            return 0, 0
        for k in range(1, len(prefix)):
            if prefix[k] < lo or prefix[k] > n - lo:
                return 0, 0
        hi = n - lo
    base = depth
    valid = 0
    written = 0
    cap = out.shape[0]
    last = n - 1
    # next candidate value at each depth
    cand = np.zeros(n + 1, np.int64)
    cand[depth] = 1
    while depth >= base:
        if depth == last:
            # forced closing difference back to 0
            v = (n - a[last]) % n
            ok = True
            if canonical and (v < lo or v > hi):
                ok = False
            if ok:
                d[last] = v
                for k in range(n):
                    s = a[k]
                    t = (a[k] + d[k]) % n
                    p[s] = t
                    pinv[t] = s
                if _single_vertex(p, pinv, n):
                    stab = 1
                    least = True
                    if canonical:
                        least, stab = _is_least(d, n, full)
                    if least:
                        if written < cap:
                            for k in range(n):
                                out[written, k] = d[k]
                            out[written, n] = stab
                            written += 1
                        valid += 1
            depth -= 1
            if depth >= base:
                used[a[depth + 1]] = False
            continue
        v = cand[depth]
        if canonical:
            if depth == 0:
                top = n // 2
            else:
                if v < lo:
                    v = lo
                top = hi
        else:
            top = n - 1
        placed = False
        nxt = 0
        while v <= top:
            nxt = (a[depth] + v) % n
            if not used[nxt]:
                placed = True
                break
            v += 1
        if not placed:
            depth -= 1
            if depth >= base:
                used[a[depth + 1]] = False
            continue
        cand[depth] = v + 1
        d[depth] = v
        if canonical and depth == 0:
            lo = v
            hi = n - v
        used[nxt] = True
        a[depth + 1] = nxt
        depth += 1
        cand[depth] = 1
    return valid, written


def _run_prefix(args) -> tuple[int, np.ndarray]:
    n, prefix, canonical, full, store = args
    pre = np.asarray(prefix, dtype=np.int64)
    if not store:
        valid, _ = _scan(n, pre, canonical, full, np.zeros((0, n + 1), dtype=np.int16))
        return valid, np.zeros((0, n + 1), dtype=np.int16)
    cap = 1024
    while True:
        out = np.zeros((cap, n + 1), dtype=np.int16)
        valid, written = _scan(n, pre, canonical, full, out)
        if written == valid:
            return valid, out[:written]
        cap = valid


def diff_prefixes(n: int, depth: int = SPLIT_DEPTH, canonical: bool = True) -> list[tuple[int, ...]]:
    """Work units: every admissible leading run of differences."""
    depth = min(depth, n - 2)
    out = []
    for pre in itertools.product(range(1, n), repeat=depth):
        sums = list(itertools.accumulate(pre))
        if len({s % n for s in sums} | {0}) != depth + 1:
            continue
        if canonical and pre and any(min(v, n - v) < pre[0] for v in pre):
            continue
        out.append(pre)
    return out


def scan(
    n: int, canonical: bool = True, group: Group = "mirror", workers: int = 1, store: bool = True
):
    """Run the kernel over all prefixes; returns ``(valid, rows)`` with rows sorted.

    With ``store=False`` only the count is kept and ``rows`` is empty.
    """
    if n < 3:
        raise ValueError("scan needs n >= 3")
    if group not in ("mirror", "full"):
        raise ValueError(f"unknown symmetry group {group!r}")
    tasks = [(n, pre, canonical, group == "full", store) for pre in diff_prefixes(n, canonical=canonical)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_prefix, tasks, chunksize=1))
    else:
        parts = [_run_prefix(t) for t in tasks]
    valid = sum(v for v, _ in parts)
    chunks = [r for _, r in parts if len(r)]
    rows = np.concatenate(chunks) if chunks else np.zeros((0, n + 1), dtype=np.int16)
    if len(rows):
        order = np.lexsort(rows[:, :n].T[::-1])
        rows = rows[order]
    return valid, rows


def count_ordered(g: int, workers: int = 1, allow_long: bool = False) -> int:
    """Number of n-cycles ``p`` (not classes) giving a minimal pair of genus ``g``."""
    _check_genus(g, allow_long)
    valid, _ = scan(2 * g - 1, canonical=False, workers=workers, store=False)
    return valid


def _classes_from_rows(rows: np.ndarray, g: int, group: str) -> list[PairClass]:
    n = 2 * g - 1
    order = 2 * n if group == "mirror" else 4 * n
    top = (2 * g - 2,)
    return [
        PairClass(tuple(int(v) for v in row[:n]), g, order // int(row[n]), top, group)
        for row in rows
    ]


def enumerate_brute(
    g: int, workers: int = 1, group: Group = "mirror", allow_long: bool = False
) -> CensusResult:
    """All classes at genus ``g`` by scanning every (2g-1)-cycle; sorted by canonical form."""
    _check_genus(g, allow_long)
    start = time.perf_counter()
    _, rows = scan(2 * g - 1, canonical=True, group=group, workers=workers)
    classes = _classes_from_rows(rows, g, group)
    ordered = sum(c.orbit_size for c in classes)
    return CensusResult(g, 2 * g - 1, classes, "brute-force", time.perf_counter() - start, group, ordered)


def enumerate_constructive(
    g: int, group: Group = "mirror", allow_long: bool = False
) -> CensusResult:
    """All classes at genus ``g`` from ménage classes through the polygon construction."""
    _check_genus(g, allow_long)
    start = time.perf_counter()
    n = 2 * g - 1
    found: dict[tuple[int, ...], Origami] = {}
    built = 0
    for cls in usable_classes(n):
        for o in construct_from_class(cls):
            built += 1
            found.setdefault(canonical_form(o, group), o)
    classes = [pair_class(found[k], group) for k in sorted(found)]
    res = CensusResult(g, n, classes, "construction", time.perf_counter() - start, group)
    res.extra["constructed"] = built
    return res


def genus2_census(group: Group = "mirror") -> CensusResult:
    """The four-square case: pairs on genus 2 whose complement is two disks."""
    start = time.perf_counter()
    candidates = [Origami.from_cycle(c) for c in iterate_ncycles(4)]
    valid = [o for o in candidates if is_genus2_minimal_pair(o)]
    found = {canonical_form(o, group): o for o in valid}
    classes = [pair_class(found[k], group) for k in sorted(found)]
    res = CensusResult(2, 4, classes, "brute-force", time.perf_counter() - start, group, len(valid))
    res.extra["candidates"] = len(candidates)
    return res


def census(
    g: int,
    method: Method = "brute-force",
    workers: int = 1,
    group: Group = "mirror",
    allow_long: bool = False,
) -> CensusResult:
    if g == 2:
        return genus2_census(group)
    if method == "construction":
        return enumerate_constructive(g, group, allow_long)
    return enumerate_brute(g, workers, group, allow_long)


def verify_one(p: Perm, n: int | None = None) -> dict:
    """Full diagnostic for one vertical gluing."""
    if n is not None and p.n != n:
        raise PermutationError(f"permutation has size {p.n}, expected {n}")
    report: dict = {"n": p.n, "is_ncycle": is_ncycle(p)}
    if not report["is_ncycle"]:
        report["valid"] = False
        return report
    o = Origami(p)
    surf = vertex_orbits(o)
    valid = is_coherent_minimal_pair(o)
    report.update(
        cycle=format_cycle(cycle_of(p)),
        vertex_count=surf.vertex_count,
        cone_orders=list(surf.cone_orders),
        euler_char=surf.euler_char,
        genus=surf.genus,
        stratum=list(stratum(o)),
        valid=valid,
        valid_via_trace=is_valid_pair_via_trace(o),
        canonical_diffs=list(canonical_form(o)),
        orbit_size=orbit_size(o),
    )
    if p.n == 4:
        report["genus2_minimal"] = is_genus2_minimal_pair(o)
    return report
