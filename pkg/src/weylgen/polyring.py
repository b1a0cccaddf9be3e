"""Sparse multivariate polynomials over Q and Euler-shaped rational functions.

A :class:`Poly` is a map from exponent tuples to nonzero ``Fraction``
coefficients.  An :class:`EulerRational` is a polynomial numerator over a
product of powers of ``(1 - q_j)``, which is the only kind of denominator the
generating functions in this package ever need.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DimensionError, DomainError, IntegralityError

__all__ = [
    "Poly",
    "EulerRational",
    "CoeffTable",
    "poly_mul",
    "exact_div_one_minus_q",
    "expand",
    "grlex_key",
]


def grlex_key(exp: Sequence[int]):
    """Sort key for graded lexicographic order with ``q_1 > q_2 > ...``."""
    return (sum(exp), tuple(-e for e in exp))


class Poly:
    """Immutable sparse polynomial in ``nvars`` variables with rational coefficients."""

    __slots__ = ("_terms", "nvars")

    def __init__(self, terms: Mapping[Sequence[int], object] | None = None, nvars: int = 1):
        self.nvars = nvars
        clean: dict[tuple[int, ...], Fraction] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise DimensionError(f"exponent {exp} does not have {nvars} entries")
            if any(e < 0 for e in exp):
                raise DomainError(f"negative exponent {exp}")
            c = Fraction(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        self._terms = clean

    @classmethod
    def _raw(cls, terms: dict, nvars: int) -> Poly:
        # trusted constructor: keys are valid tuples, values nonzero Fractions
        p = cls.__new__(cls)
        p._terms = terms
        p.nvars = nvars
        return p

    @classmethod
    def constant(cls, c, nvars: int) -> Poly:
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def zero(cls, nvars: int) -> Poly:
        return cls._raw({}, nvars)

    @classmethod
    def one(cls, nvars: int) -> Poly:
        return cls.constant(1, nvars)

    @classmethod
    def var(cls, j: int, nvars: int, power: int = 1) -> Poly:
        """The monomial ``q_j ** power`` (``j`` is 0-based)."""
        exp = [0] * nvars
        exp[j] = power
        return cls({tuple(exp): 1}, nvars)

    @classmethod
    def one_minus_q(cls, j: int, nvars: int) -> Poly:
        return cls.one(nvars) - cls.var(j, nvars)

    @classmethod
    def from_dense(cls, coeffs: Sequence) -> Poly:
        """Univariate polynomial from a coefficient list, lowest degree first."""
        return cls({(i,): c for i, c in enumerate(coeffs)}, 1)

    # -- inspection -----------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, exp: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def degree(self, j: int | None = None) -> int:
        """Total degree, or degree in ``q_j``; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        if j is None:
            return max(sum(e) for e in self._terms)
        return max(e[j] for e in self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(other, self.nvars)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def __repr__(self):
        return f"Poly({self.to_str()!r}, nvars={self.nvars})"

    def __str__(self):
        return self.to_str()

    # -- arithmetic -----------------------------------------------------

    def _check(self, other: Poly):
        if self.nvars != other.nvars:
            raise DimensionError(f"{self.nvars}-variable and {other.nvars}-variable polynomials")

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return Poly._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: -c for e, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return poly_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative power of a polynomial")
        result, base = Poly.one(self.nvars), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> Poly:
        c = Fraction(c)
        if not c:
            return Poly.zero(self.nvars)
        return Poly._raw({e: c * v for e, v in self._terms.items()}, self.nvars)

    def shift(self, j: int, k: int = 1) -> Poly:
        """Multiply by ``q_j ** k``."""
        out = {}
        for e, c in self._terms.items():
            e = list(e)
            e[j] += k
            out[tuple(e)] = c
        return Poly._raw(out, self.nvars)

    def euler(self, j: int) -> Poly:
        """Apply ``q_j d/dq_j``: multiplies each term by its ``q_j`` exponent."""
        return Poly._raw({e: e[j] * c for e, c in self._terms.items() if e[j]}, self.nvars)

    def diff(self, j: int) -> Poly:
        """Partial derivative with respect to ``q_j``."""
        out = {}
        for e, c in self._terms.items():
            if e[j]:
                e2 = list(e)
                e2[j] -= 1
                out[tuple(e2)] = e[j] * c
        return Poly._raw(out, self.nvars)

    def at_one(self, j: int) -> Poly:
        """Substitute ``q_j = 1``, keeping ``q_j`` as a (now absent) variable."""
        out: dict = {}
        for e, c in self._terms.items():
            e2 = list(e)
            e2[j] = 0
            e2 = tuple(e2)
            s = out.get(e2, 0) + c
            if s:
                out[e2] = s
            else:
                out.pop(e2, None)
        return Poly._raw(out, self.nvars)

    def permute_vars(self, perm: Sequence[int]) -> Poly:
        """Rename variables: old ``q_i`` becomes new ``q_{perm[i]}``."""
        if sorted(perm) != list(range(self.nvars)):
            raise DomainError(f"{perm} is not a permutation of {self.nvars} variables")
        out = {}
        for e, c in self._terms.items():
            e2 = [0] * self.nvars
            for i, x in enumerate(e):
                e2[perm[i]] = x
            out[tuple(e2)] = c
        return Poly._raw(out, self.nvars)

    def to_dense(self) -> list[Fraction]:
        """Coefficient list of a univariate polynomial, lowest degree first."""
        if self.nvars != 1:
            raise DimensionError("to_dense needs a univariate polynomial")
        out = [Fraction(0)] * (self.degree() + 1)
        for (e,), c in self._terms.items():
            out[e] = c
        return out

    # -- printing -------------------------------------------------------

    def to_str(self, names: Sequence[str] | None = None, latex: bool = False) -> str:
        """Render in graded-lex order, e.g. ``1+7q_1-11q_1^2q_2``."""
        if names is None:
            names = ["q"] if self.nvars == 1 else [f"q_{i + 1}" for i in range(self.nvars)]
        if not self._terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            mono = ""
            for name, e in zip(names, exp):
                if e == 1:
                    mono += name
                elif e:
                    mono += f"{name}^{{{e}}}" if latex and e > 9 else f"{name}^{e}"
            mag = abs(c)
            if mag.denominator != 1:
                num = rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}" if latex else f"{mag}"
                if not latex and mono:
                    num = f"({num})"
            elif mag == 1 and mono:
                num = ""
            else:
                num = str(mag.numerator)
            sign = "-" if c < 0 else "+"
            parts.append((sign, num + mono))
        text = "".join(s + t for s, t in parts)
        return text[1:] if text.startswith("+") else text


def poly_mul(a: Poly, b: Poly) -> Poly:
    """Exact product of two polynomials in the same number of variables."""
    a._check(b)
    if len(a) > len(b):
        a, b = b, a
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return Poly._raw({e: c for e, c in out.items() if c}, a.nvars)


def exact_div_one_minus_q(p: Poly, j: int) -> Poly | None:
    """Return ``p / (1 - q_j)`` if it is a polynomial, otherwise ``None``.

    ``j`` is 0-based.  Writing ``p = sum_k P_k q_j^k`` the quotient has
    coefficients the prefix sums ``P_0 + ... + P_k``; divisibility means the
    full sum (``p`` at ``q_j = 1``) vanishes.
    """
    if not 0 <= j < p.nvars:
        raise DimensionError(f"variable index {j} out of range for {p.nvars} variables")
    if p.is_zero():
        return p
    if not p.at_one(j).is_zero():
        return None
    slices: dict[int, dict] = {}
    for e, c in p.items():
        rest = e[:j] + (0,) + e[j + 1:]
        slices.setdefault(e[j], {})[rest] = c
    out: dict = {}
    running: dict = {}
    for k in range(p.degree(j)):
        for rest, c in slices.get(k, {}).items():
            s = running.get(rest, 0) + c
            if s:
                running[rest] = s
            else:
                running.pop(rest, None)
        for rest, c in running.items():
            e = list(rest)
            e[j] = k
            out[tuple(e)] = c
    return Poly._raw(out, p.nvars)


@dataclass(frozen=True)
class EulerRational:
    """``numerator / prod_j (1 - q_j) ** den_exps[j]``."""

    numerator: Poly
    den_exps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "den_exps", tuple(int(e) for e in self.den_exps))
        if len(self.den_exps) != self.numerator.nvars:
            raise DimensionError("den_exps length must equal the number of variables")
        if any(e < 0 for e in self.den_exps):
            raise DomainError("denominator exponents must be nonnegative")

    @property
    def nvars(self) -> int:
        return self.numerator.nvars

    @classmethod
    def geometric(cls, nvars: int) -> EulerRational:
        """``prod_j 1 / (1 - q_j)``."""
        return cls(Poly.one(nvars), (1,) * nvars)

    def permute_vars(self, perm: Sequence[int]) -> EulerRational:
        exps = [0] * self.nvars
        for i, e in enumerate(self.den_exps):
            exps[perm[i]] = e
        return EulerRational(self.numerator.permute_vars(perm), tuple(exps))

    def denominator_str(self, names: Sequence[str] | None = None, latex: bool = False) -> str:
        if names is None:
            names = ["q"] if self.nvars == 1 else [f"q_{i + 1}" for i in range(self.nvars)]
        parts = []
        for name, e in zip(names, self.den_exps):
            if e == 1:
                parts.append(f"(1-{name})")
            elif e:
                parts.append(f"(1-{name})^{{{e}}}" if latex else f"(1-{name})^{e}")
        return "".join(parts) or "1"

    def __str__(self):
        return f"({self.numerator})/({self.denominator_str()})"


@dataclass(frozen=True)
class CoeffTable:
    """Dense table of integer series coefficients for all ``a <= bounds``."""

    bounds: tuple[int, ...]
    entries: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "bounds", tuple(int(b) for b in self.bounds))
        if self.entries.shape != tuple(b + 1 for b in self.bounds):
            raise DimensionError(f"entries of shape {self.entries.shape} do not match bounds {self.bounds}")

    def __getitem__(self, a):
        return self.entries[tuple(a)]

    def __len__(self):
        return self.entries.size

    def __eq__(self, other):
        if not isinstance(other, CoeffTable):
            return NotImplemented
        return self.bounds == other.bounds and bool(np.all(self.entries == other.entries))

    def indices(self) -> Iterable[tuple[int, ...]]:
        return np.ndindex(*self.entries.shape)


def _binomial_row(e: int, bound: int) -> np.ndarray:
    # coefficients of 1/(1-q)^e up to q^bound
    if e == 0:
        return np.array([1] + [0] * bound, dtype=object)
    return np.array([math.comb(a + e - 1, e - 1) for a in range(bound + 1)], dtype=object)


def expand(f: EulerRational, bounds: Sequence[int]) -> CoeffTable:
    """Power-series coefficients of ``f`` at every multidegree ``a <= bounds``."""
    bounds = tuple(int(b) for b in bounds)
    if len(bounds) != f.nvars:
        raise DimensionError(f"{len(bounds)} bounds for {f.nvars} variables")
    if any(b < 0 for b in bounds):
        raise DomainError("bounds must be nonnegative")

    kernel = np.ones((), dtype=object)
    for e, b in zip(f.den_exps, bounds):
        kernel = np.multiply.outer(kernel, _binomial_row(e, b))

    acc = np.zeros(kernel.shape, dtype=object)
    acc[...] = Fraction(0)
    for exp, c in f.numerator.items():
        if any(x > b for x, b in zip(exp, bounds)):
            continue
        target = tuple(slice(x, None) for x in exp)
        source = tuple(slice(0, b + 1 - x) for x, b in zip(exp, bounds))
        acc[target] += c * kernel[source]

    entries = np.empty(acc.shape, dtype=object)
    for idx in np.ndindex(*acc.shape):
        v = Fraction(acc[idx])
        if v.denominator != 1:
            raise IntegralityError(f"non-integral series coefficient {v} at {idx}")
        entries[idx] = int(v)
    return CoeffTable(bounds, entries)
