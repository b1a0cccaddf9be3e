"""Named cones for determinantal varieties and the full dominant chamber.

* ``sym-det``: rank <= k symmetric n x n matrices.  The coordinate ring is the
  sum of ``L(lam)`` over ``lam`` in ``<2w_1, ..., 2w_k>`` for SL(n).
* ``antisym-det``: rank <= 2k antisymmetric 2n x 2n matrices, with cone
  ``<w_2, w_4, ..., w_2k>`` for SL(2n).
* ``fundamental``: all of ``P_+``, i.e. the cone on the fundamental weights.

Both determinantal presets carry the grading ``q_i -> q^i`` that turns the
multigraded series into the standard Hilbert series.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .genfun import ConeSpec
from .rootsys import RootSystem, build_root_system

__all__ = [
    "ProblemSpec",
    "symmetric_determinantal",
    "antisymmetric_determinantal",
    "fundamental_cone",
    "PRESETS",
]


@dataclass(frozen=True)
class ProblemSpec:
    name: str
    cone: ConeSpec
    grading: tuple[int, ...]
    notes: str = ""

    def __post_init__(self):
        if len(self.grading) != self.cone.k:
            raise DomainError("grading length must equal the number of generators")
        if any(w <= 0 for w in self.grading):
            raise DomainError("grading entries must be positive")


def symmetric_determinantal(n: int, k: int) -> ProblemSpec:
    if n < 2:
        raise DomainError(f"sym-det needs n >= 2, got {n}")
    if not 1 <= k <= n - 1:
        raise DomainError(f"sym-det needs 1 <= k <= n-1, got n={n}, k={k}")
    rs = build_root_system([("A", n - 1)])
    gens = [rs.fundamental_weight(i) * 2 for i in range(1, k + 1)]
    return ProblemSpec(
        name=f"sym-det(n={n}, k={k})",
        cone=ConeSpec(rs, gens),
        grading=tuple(range(1, k + 1)),
        notes=f"symmetric {n}x{n} matrices of rank <= {k}; cone <2w_1..2w_{k}> in SL({n})",
    )


def antisymmetric_determinantal(n: int, k: int) -> ProblemSpec:
    if n < 1:
        raise DomainError(f"antisym-det needs n >= 1, got {n}")
    if not 1 <= k <= n or 2 * k > 2 * n - 1:
        raise DomainError(f"antisym-det needs 1 <= k and 2k <= 2n-1, got n={n}, k={k}")
    rs = build_root_system([("A", 2 * n - 1)])
    gens = [rs.fundamental_weight(2 * i) for i in range(1, k + 1)]
    return ProblemSpec(
        name=f"antisym-det(n={n}, k={k})",
        cone=ConeSpec(rs, gens),
        grading=tuple(range(1, k + 1)),
        notes=f"antisymmetric {2 * n}x{2 * n} matrices of rank <= {2 * k}; cone <w_2..w_{2 * k}> in SL({2 * n})",
    )


def fundamental_cone(rs: RootSystem) -> ProblemSpec:
    gens = [rs.fundamental_weight(i) for i in range(1, rs.rank + 1)]
    return ProblemSpec(
        name=f"fundamental({rs})",
        cone=ConeSpec(rs, gens),
        grading=(1,) * rs.rank,
        notes="all dominant weights, one variable per fundamental weight",
    )


PRESETS = {
    "sym-det": symmetric_determinantal,
    "antisym-det": antisymmetric_determinantal,
    "fundamental": fundamental_cone,
}
