"""Semisimple root systems from Cartan data, in exact arithmetic.

Simple roots are numbered in the Bourbaki convention inside each simple
factor, and the Cartan matrix entries are ``A[i][j] = <alpha_i, alpha_j^v>
= 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)``.  With this convention the
Cartan matrices are::

    A_n  (n >= 1)   o---o---o-- ... --o---o        all entries -1 off-diagonal

    B_n  (n >= 2)   o---o-- ... --o=>=o            alpha_n short
                    A[n-1][n] = -2, A[n][n-1] = -1

    C_n  (n >= 3)   o---o-- ... --o=<=o            alpha_n long
                    A[n-1][n] = -1, A[n][n-1] = -2

    D_n  (n >= 4)   alpha_{n-2} joined to both alpha_{n-1} and alpha_n

    E_n  (n = 6,7,8)  chain 1-3-4-5-6(-7-8), with alpha_2 joined to alpha_4

    F_4             o---o=>=o---o                  alpha_1, alpha_2 long
                    A[2][3] = -2, A[3][2] = -1

    G_2             [[2, -1], [-3, 2]]             alpha_1 short

(indices above are 1-based, as in Bourbaki's tables).

Roots live only in simple-root coordinates and weights only in
fundamental-weight coordinates.  The invariant form is never written in an
ambient basis; all pairings go through the symmetrizer ``d``, where ``d_j``
is the squared length of ``alpha_j`` relative to a short root of the same
factor.  Since ``(omega_i, alpha_j^v) = delta_ij`` we get
``(omega_i, alpha_j) = delta_ij * d_j / 2`` (up to one global scale per
factor), which is all that the quotients ``(lambda, alpha) / (rho, alpha)``
need.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import ConfigurationError, DimensionError, DomainError, IntegralityError

__all__ = [
    "SimpleFactor",
    "PositiveRoot",
    "Weight",
    "RootSystem",
    "cartan_matrix",
    "build_root_system",
    "c_coeff",
    "weyl_dim",
    "POSITIVE_ROOT_COUNTS",
]

_VALID_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 3,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

# classical |Phi^+| per family, used by tests and sanity checks
POSITIVE_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


@dataclass(frozen=True)
class SimpleFactor:
    family: str
    rank: int

    def __post_init__(self):
        family = str(self.family).upper()
        object.__setattr__(self, "family", family)
        if family not in _VALID_RANKS:
            raise ConfigurationError(f"unknown Lie type {self.family!r}")
        if not isinstance(self.rank, int) or not _VALID_RANKS[family](self.rank):
            raise ConfigurationError(f"invalid rank {self.rank!r} for type {family}")

    @classmethod
    def parse(cls, text: str) -> SimpleFactor:
        """Parse strings such as ``"A3"``, ``"g2"`` or ``"E_8"``."""
        m = re.fullmatch(r"\s*([A-Za-z])_?(\d+)\s*", text)
        if not m:
            raise ConfigurationError(f"cannot parse simple factor {text!r}")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class PositiveRoot:
    """A positive root, as nonnegative coefficients on the simple roots."""

    coeffs: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def __str__(self):
        return "(" + ",".join(map(str, self.coeffs)) + ")"


@dataclass(frozen=True)
class Weight:
    """An integral weight, as coefficients on the fundamental weights."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in coeffs))

    def __len__(self):
        return len(self.coeffs)

    def __add__(self, other: Weight) -> Weight:
        if len(self) != len(other):
            raise DimensionError("weights of different rank")
        return Weight(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __mul__(self, n: int) -> Weight:
        return Weight(n * c for c in self.coeffs)

    __rmul__ = __mul__

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __str__(self):
        return "(" + ",".join(map(str, self.coeffs)) + ")"


def cartan_matrix(factor: SimpleFactor) -> list[list[int]]:
    """Cartan matrix of one simple factor, Bourbaki numbering, 0-based."""
    fam, n = factor.family, factor.rank
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, a_ij=-1, a_ji=-1):
        A[i][j] = a_ij
        A[j][i] = a_ji

    if fam in "ABCD":
        chain = n - 1 if fam == "D" else n
        for i in range(chain - 1):
            link(i, i + 1)
        if fam == "B":
            link(n - 2, n - 1, -2, -1)
        elif fam == "C":
            link(n - 2, n - 1, -1, -2)
        elif fam == "D":
            link(n - 3, n - 1)
    elif fam == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif fam == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif fam == "G":
        link(0, 1, -1, -3)
    return A


def _symmetrizer(A: Sequence[Sequence[int]]) -> list[int]:
    # d_j proportional to |alpha_j|^2, i.e. (A[i][j] * d_j) is symmetric.
    n = len(A)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and A[i][j] != 0 and d[j] is None:
                d[j] = d[i] * Fraction(A[j][i], A[i][j])
                stack.append(j)
    if any(x is None for x in d):
        raise ConfigurationError("Cartan matrix of a simple factor must be connected")
    short = min(d)
    scaled = [x / short for x in d]
    if any(x.denominator != 1 for x in scaled):
        raise IntegralityError(f"non-integral symmetrizer {scaled}")
    return [int(x) for x in scaled]


def _positive_roots(A: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Height-by-height closure from the simple roots.

    For a positive root beta and a simple root alpha_i, beta + alpha_i is a
    root iff p - <beta, alpha_i^v> > 0, where p is the largest integer with
    beta - p alpha_i a root.
    """
    n = len(A)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    roots = list(simple)
    layer = simple
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                pairing = sum(beta[j] * A[j][i] for j in range(n))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        roots.extend(sorted(nxt, reverse=True))
        layer = nxt
    return roots


@dataclass(frozen=True)
class RootSystem:
    """A semisimple root system, possibly a product of simple factors.

    The Cartan matrix is block diagonal over ``factors``.  Positive roots are
    listed by increasing height.
    """

    factors: tuple[SimpleFactor, ...]
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    positive_roots: tuple[PositiveRoot, ...]

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    @property
    def rho(self) -> Weight:
        return Weight([1] * self.rank)

    def fundamental_weight(self, i: int) -> Weight:
        """``omega_i`` with the 1-based index used in the literature."""
        if not 1 <= i <= self.rank:
            raise DomainError(f"omega_{i} does not exist in rank {self.rank}")
        return Weight(int(j == i - 1) for j in range(self.rank))

    def weight(self, coeffs: Iterable[int]) -> Weight:
        w = coeffs if isinstance(coeffs, Weight) else Weight(coeffs)
        if len(w) != self.rank:
            raise DimensionError(f"weight {w} has length {len(w)}, rank is {self.rank}")
        return w

    @cached_property
    def _rho_pairings(self) -> dict[PositiveRoot, int]:
        d = self.symmetrizer
        return {a: sum(c * dj for c, dj in zip(a.coeffs, d)) for a in self.positive_roots}

    def __str__(self):
        return "x".join(map(str, self.factors))


def build_root_system(spec: Iterable[SimpleFactor | str | tuple[str, int]]) -> RootSystem:
    """Assemble a root system from its simple factors.

    ``spec`` items may be :class:`SimpleFactor` instances, strings like
    ``"A3"`` or ``(family, rank)`` pairs.

    >>> rs = build_root_system(["G2"])
    >>> rs.num_positive_roots, rs.positive_roots[-1].coeffs
    (6, (3, 2))
    """
    factors = []
    for item in spec:
        if isinstance(item, SimpleFactor):
            factors.append(item)
        elif isinstance(item, str):
            factors.append(SimpleFactor.parse(item))
        else:
            factors.append(SimpleFactor(*item))
    if not factors:
        raise ConfigurationError("a root system needs at least one simple factor")

    total = sum(f.rank for f in factors)
    cartan = [[0] * total for _ in range(total)]
    symmetrizer: list[int] = []
    roots: list[tuple[int, ...]] = []
    offset = 0
    for f in factors:
        A = cartan_matrix(f)
        for i in range(f.rank):
            cartan[offset + i][offset:offset + f.rank] = A[i]
        symmetrizer.extend(_symmetrizer(A))
        for r in _positive_roots(A):
            roots.append((0,) * offset + r + (0,) * (total - offset - f.rank))
        offset += f.rank

    roots.sort(key=sum)
    return RootSystem(
        factors=tuple(factors),
        cartan=tuple(tuple(row) for row in cartan),
        symmetrizer=tuple(symmetrizer),
        positive_roots=tuple(PositiveRoot(r) for r in roots),
    )


def c_coeff(rs: RootSystem, lam: Weight | Sequence[int], alpha: PositiveRoot) -> Fraction:
    """The quotient ``(lam, alpha) / (rho, alpha)``."""
    lam = rs.weight(lam)
    if len(alpha.coeffs) != rs.rank:
        raise DimensionError("root and root system have different rank")
    d = rs.symmetrizer
    num = sum(c * dj * m for c, dj, m in zip(alpha.coeffs, d, lam.coeffs))
    den = rs._rho_pairings.get(alpha)
    if den is None:
        den = sum(c * dj for c, dj in zip(alpha.coeffs, d))
    return Fraction(num, den)


def weyl_dim(rs: RootSystem, lam: Weight | Sequence[int]) -> int:
    """Dimension of the irreducible module with highest weight ``lam``.

    Evaluated as the product over positive roots of ``c_lam(alpha) + 1``.

    >>> weyl_dim(build_root_system(["A3"]), (0, 2, 0))
    20
    """
    lam = rs.weight(lam)
    if not lam.is_dominant():
        raise DomainError(f"weight {lam} is not dominant")
    dim = Fraction(1)
    for alpha in rs.positive_roots:
        dim *= c_coeff(rs, lam, alpha) + 1
    if dim.denominator != 1:
        raise IntegralityError(f"Weyl product for {lam} gave {dim}")
    return int(dim)
