"""Brute-force ground truth for the closed forms.

The tables here come straight from the Weyl dimension formula, one weight at
a time.  Only :mod:`weylgen.rootsys` is shared with the closed-form engine;
no rational-function code is involved on this side.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError, DomainError
from .genfun import ConeSpec
from .polyring import CoeffTable, EulerRational, expand
from .rootsys import weyl_dim

__all__ = ["VerificationReport", "dimension_table", "verify_equivalence"]


@dataclass
class VerificationReport:
    checked: int
    mismatches: list[tuple[tuple[int, ...], int, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def __str__(self):
        lines = [f"{self.checked} checked, {len(self.mismatches)} mismatches"]
        for a, expected, got in self.mismatches:
            lines.append(f"  a={a}: expected {expected}, got {got}")
        return "\n".join(lines)


def _check_bounds(cone: ConeSpec, bounds: Sequence[int]) -> tuple[int, ...]:
    bounds = tuple(int(b) for b in bounds)
    if len(bounds) != cone.k:
        raise DimensionError(f"{len(bounds)} bounds for {cone.k} generators")
    if any(b < 0 for b in bounds):
        raise DomainError("bounds must be nonnegative")
    return bounds


def dimension_table(cone: ConeSpec, bounds: Sequence[int]) -> CoeffTable:
    """``dim L(sum_j a_j lam_j)`` for every ``a <= bounds``."""
    bounds = _check_bounds(cone, bounds)
    entries = np.empty(tuple(b + 1 for b in bounds), dtype=object)
    for a in np.ndindex(*entries.shape):
        entries[a] = weyl_dim(cone.rs, cone.point(a))
    return CoeffTable(bounds, entries)


def verify_equivalence(f: EulerRational, cone: ConeSpec, bounds: Sequence[int]) -> VerificationReport:
    """Compare the expansion of ``f`` with the brute-force table, entry by entry."""
    bounds = _check_bounds(cone, bounds)
    if f.nvars != cone.k:
        raise DimensionError(f"series in {f.nvars} variables for a cone with {cone.k} generators")
    got = expand(f, bounds)
    expected = dimension_table(cone, bounds)
    report = VerificationReport(checked=len(expected))
    for a in expected.indices():
        if expected[a] != got[a]:
            report.mismatches.append((tuple(int(x) for x in a), expected[a], got[a]))
    return report
