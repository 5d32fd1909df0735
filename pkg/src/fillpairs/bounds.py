"""Upper bounds on the number of classes of minimal filling pairs.

Each usable ménage class admits at most ``2g - 2`` offsets, and every pair is
built twice (once per mirror image), giving ``(g - 1) * A`` with ``A`` the
number of rotation classes of ménage permutations of size ``2g - 1``.  The
asymptotic column replaces ``A`` by ``(2g - 2)! / e^2``.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from math import factorial

import mpmath

from .menage import gilbert_class_count

# known census counts, used to fill the table when no census is run
CENSUS_COUNTS = {3: 1, 4: 8, 5: 436, 6: 23904, 7: 2448720}

TABLE_COLUMNS = (
    "genus",
    "squares",
    "count",
    "asymptotic_bound",
    "exact_bound",
    "exact_bound_excl_opposite",
)


@dataclass(frozen=True)
class BoundReport:
    g: int
    A: int
    exact_bound: int
    exact_bound_excl: int
    asymptotic: int


def class_count(g: int) -> int:
    """``A(g)``: rotation classes of ménage permutations of size ``2g - 1``."""
    if g < 3:
        raise ValueError("bounds are defined for g >= 3")
    return gilbert_class_count(2 * g - 1)


def exact_bound(g: int) -> tuple[int, int]:
    """``((g - 1) A, (g - 1)(A - 1))``; the second drops the all-opposite class."""
    A = class_count(g)
    return (g - 1) * A, (g - 1) * (A - 1)


def asymptotic_bound(g: int, digits: int = 60) -> int:
    """``floor((g - 1) (2g - 2)! / e^2)`` with ``e^2`` to ``digits`` significant digits."""
    if g < 3:
        raise ValueError("bounds are defined for g >= 3")
    numerator = (g - 1) * factorial(2 * g - 2)
    # enough digits for the integer part plus the requested precision
    with mpmath.workdps(digits + len(str(numerator))):
        return int(mpmath.floor(mpmath.mpf(numerator) / mpmath.exp(2)))


def bound_report(g: int) -> BoundReport:
    A = class_count(g)
    return BoundReport(g, A, (g - 1) * A, (g - 1) * (A - 1), asymptotic_bound(g))


def bound_rows(g_max: int, counts: dict[int, int] | None = None, exact_max: int = 7) -> list[dict]:
    """One row per genus 3..g_max; ``exact`` columns left empty past ``exact_max``."""
    if g_max < 3:
        raise ValueError("table needs g_max >= 3")
    counts = CENSUS_COUNTS if counts is None else counts
    rows = []
    for g in range(3, g_max + 1):
        row = {
            "genus": g,
            "squares": 2 * g - 1,
            "count": counts.get(g, ""),
            "asymptotic_bound": asymptotic_bound(g),
            "exact_bound": "",
            "exact_bound_excl_opposite": "",
        }
        if g <= exact_max:
            row["exact_bound"], row["exact_bound_excl_opposite"] = exact_bound(g)
        rows.append(row)
    return rows


def bound_table(g_max: int, counts: dict[int, int] | None = None, exact_max: int = 7) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=TABLE_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(bound_rows(g_max, counts, exact_max))
    return buf.getvalue()
