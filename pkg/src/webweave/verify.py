"""Exhaustive verification campaigns over enumerated tableau families."""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .bijection import russell_web, tymoczko_web, web_of_2row
from .jdt import evacuate, reading_word
from .tableau import (
    RowStrictTableau,
    Shape,
    enumerate_russell,
    enumerate_standard,
    format_tableau,
    rotate_complement,
)
from .webcore import canonicalize, reflect_matching, reflect_web, validate_web

CHECK_NAMES = ("theorem", "involution", "lemma", "validity", "injectivity")

# desk-scale defaults; larger families need an explicit time budget
MAX_2ROW_N = 8
MAX_3ROW_K = 5
MAX_RUSSELL_K = 4


class FamilyBoundError(ValueError):
    """The requested family exceeds the configured desk-scale bounds."""


class TimeBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Family:
    """An enumerable verification domain: (n, n), or (k, k, k) with an
    optional repetition (None = standard tableaux, "all" = every h)."""

    shape: tuple[int, ...]
    repetition: int | str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "shape", tuple(int(p) for p in self.shape))
        if len(self.shape) not in (2, 3) or len(set(self.shape)) != 1:
            raise ValueError(f"families are rectangles (n,n) or (k,k,k), got {self.shape}")
        if self.repetition is not None:
            if len(self.shape) == 2:
                raise ValueError("2-row families do not take a repetition")
            if isinstance(self.repetition, str) and self.repetition != "all":
                raise ValueError(f"bad repetition {self.repetition!r}")

    @property
    def rows(self) -> int:
        return len(self.shape)

    @property
    def is_russell(self) -> bool:
        return self.rows == 3 and self.repetition is not None

    def describe(self) -> str:
        base = ",".join(str(p) for p in self.shape)
        if self.repetition is None:
            return f"standard({base})"
        return f"russell({base}, h={self.repetition})"

    def check_bounds(self) -> None:
        side = self.shape[0]
        if self.rows == 2 and side > MAX_2ROW_N:
            raise FamilyBoundError(f"2-row families are bounded at n <= {MAX_2ROW_N}")
        if self.rows == 3 and self.repetition is None and side > MAX_3ROW_K:
            raise FamilyBoundError(f"3-row standard families are bounded at k <= {MAX_3ROW_K}")
        if self.is_russell and side > MAX_RUSSELL_K:
            raise FamilyBoundError(f"Russell families are bounded at k <= {MAX_RUSSELL_K}")

    def tableaux(self) -> list[RowStrictTableau]:
        if self.repetition is None:
            return enumerate_standard(Shape(self.shape))
        k = self.shape[0]
        if self.repetition == "all":
            out = []
            for h in range(0, 3 * k):
                out.extend(enumerate_russell(k, h))
            return out
        return enumerate_russell(k, int(self.repetition))


@dataclass
class VerifyReport:
    family: str
    check: str
    total: int
    failures: list[dict] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "check": self.check,
            "total": self.total,
            "failures": self.failures,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.failures)} FAILURES"
        return (
            f"check {self.check} over {self.family}: total {self.total}, "
            f"{status}, {self.elapsed_ms:.0f} ms"
        )


def _forward_canonical(family: Family, t: RowStrictTableau) -> str:
    if family.rows == 2:
        return str(web_of_2row(t).pairs)
    if family.is_russell:
        return canonicalize(russell_web(t))
    return canonicalize(tymoczko_web(t))


def _failure(t: RowStrictTableau, expected: str, actual: str) -> dict:
    return {
        "tableau": format_tableau(t),
        "reading_word": list(reading_word(t)),
        "expected": expected,
        "actual": actual,
    }


def _check_theorem(family: Family, t: RowStrictTableau) -> dict | None:
    if family.rows == 2:
        actual = reflect_matching(web_of_2row(t))
        expected = web_of_2row(evacuate(t))
        if actual != expected:
            return _failure(t, str(expected.pairs), str(actual.pairs))
        return None
    build = russell_web if family.is_russell else tymoczko_web
    actual = canonicalize(reflect_web(build(t)))
    expected = canonicalize(build(evacuate(t)))
    if actual != expected:
        return _failure(t, expected, actual)
    return None


def _check_involution(family: Family, t: RowStrictTableau) -> dict | None:
    back = evacuate(evacuate(t))
    if back != t:
        return _failure(t, format_tableau(t), format_tableau(back))
    return None


def _check_lemma(family: Family, t: RowStrictTableau) -> dict | None:
    actual = evacuate(t)
    expected = rotate_complement(t, t.max_entry)
    if actual != expected:
        return _failure(t, format_tableau(expected), format_tableau(actual))
    return None


def _check_validity(family: Family, t: RowStrictTableau) -> dict | None:
    if family.rows == 2:
        web_of_2row(t)  # noncrossing enforced on construction
        return None
    build = russell_web if family.is_russell else tymoczko_web
    report = validate_web(build(t))
    if report:
        return _failure(t, "", "; ".join(report))
    return None


_PER_TABLEAU = {
    "theorem": _check_theorem,
    "involution": _check_involution,
    "lemma": _check_lemma,
    "validity": _check_validity,
}


def _check_batch(args) -> list[dict]:
    check, family, tableaux = args
    fn = _PER_TABLEAU[check]
    return [bad for t in tableaux if (bad := fn(family, t)) is not None]


def _injectivity_failures(family: Family, tableaux) -> list[dict]:
    seen: dict[str, RowStrictTableau] = {}
    failures = []
    for t in tableaux:
        key = _forward_canonical(family, t)
        if key in seen:
            failures.append(_failure(t, "distinct web", f"collides with {format_tableau(seen[key])}"))
        else:
            seen[key] = t
    return failures


def _worker_count(jobs: int | None) -> int:
    jobs = jobs or 1
    cap = os.environ.get("WEBWEAVE_THREADS")
    if cap:
        jobs = min(jobs, max(1, int(cap)))
    return max(1, jobs)


def run_verification(
    family: Family,
    check: str,
    jobs: int | None = None,
    max_seconds: float | None = None,
) -> VerifyReport:
    """Run one named property exhaustively over a family.

    Families beyond the desk-scale bounds are refused unless a time budget is
    given; exceeding a given budget aborts with TimeBudgetExceeded.
    """
    if check not in CHECK_NAMES:
        raise ValueError(f"unknown check {check!r}; expected one of {CHECK_NAMES}")
    if max_seconds is None:
        family.check_bounds()
    start = time.monotonic()

    def over_budget() -> bool:
        return max_seconds is not None and time.monotonic() - start > max_seconds

    tableaux = family.tableaux()
    if over_budget():
        raise TimeBudgetExceeded(f"enumeration alone exceeded {max_seconds}s")

    if check == "injectivity":
        failures = _injectivity_failures(family, tableaux)
    else:
        jobs = _worker_count(jobs)
        if jobs == 1 or len(tableaux) < 4 * jobs:
            failures = []
            fn = _PER_TABLEAU[check]
            for t in tableaux:
                bad = fn(family, t)
                if bad is not None:
                    failures.append(bad)
                if over_budget():
                    raise TimeBudgetExceeded(f"exceeded {max_seconds}s")
        else:
            chunks = [tableaux[i::jobs] for i in range(jobs)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = pool.map(_check_batch, [(check, family, chunk) for chunk in chunks])
                failures = [bad for batch in results for bad in batch]
            if over_budget():
                raise TimeBudgetExceeded(f"exceeded {max_seconds}s")

    failures.sort(key=lambda f: tuple(f["reading_word"]))
    elapsed = (time.monotonic() - start) * 1000.0
    return VerifyReport(family.describe(), check, len(tableaux), failures, elapsed)
