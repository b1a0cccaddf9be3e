"""Closed-form multigraded generating functions for Weyl dimensions.

For dominant weights ``lam_1, ..., lam_k`` the series

    sum over a in N^k of dim L(a_1 lam_1 + ... + a_k lam_k) q^a

equals the product, over positive roots ``alpha``, of the operators
``1 + sum_j c_{lam_j}(alpha) q_j d/dq_j`` applied to ``prod_j 1/(1 - q_j)``.
The operators commute, so they are applied one root at a time; the expanded
multinomial never has to be formed.

Univariate specializations ``q_j -> q^{w_j}`` and their reduction to lowest
terms also live here.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionError, DomainError, IntegralityError
from .polyring import EulerRational, Poly
from .rootsys import PositiveRoot, RootSystem, Weight, build_root_system, c_coeff

__all__ = [
    "EulerOp",
    "ConeSpec",
    "UniRational",
    "operator_for_root",
    "apply_euler_op",
    "hilbert_series",
    "specialize",
    "reduce_univariate",
    "lemma_operators",
    "lemma_recursion_step",
]


@dataclass(frozen=True)
class EulerOp:
    """The differential operator ``1 + sum_j coeffs[j] q_j d/dq_j``."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in coeffs))

    def is_identity(self) -> bool:
        return not any(self.coeffs)

    def __str__(self):
        terms = ["1"]
        for j, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{'' if c == 1 else c}q_{j + 1}d_{j + 1}")
        return "(" + "+".join(terms) + ")"


@dataclass(frozen=True)
class ConeSpec:
    """A root system together with generators of a lattice cone of weights."""

    rs: RootSystem
    generators: tuple[Weight, ...]

    def __init__(self, rs: RootSystem, generators: Iterable):
        gens = tuple(rs.weight(g) for g in generators)
        if not gens:
            raise DomainError("a cone needs at least one generator")
        for g in gens:
            if not g.is_dominant():
                raise DomainError(f"generator {g} is not dominant")
        object.__setattr__(self, "rs", rs)
        object.__setattr__(self, "generators", gens)

    @classmethod
    def of(cls, types: Iterable, generators: Iterable) -> ConeSpec:
        """Shortcut: ``ConeSpec.of(["A2"], [(3, 0), (0, 3)])``."""
        return cls(build_root_system(types), generators)

    @property
    def k(self) -> int:
        return len(self.generators)

    def point(self, a: Sequence[int]) -> Weight:
        """The weight ``sum_j a_j lam_j``."""
        w = Weight([0] * self.rs.rank)
        for aj, lam in zip(a, self.generators):
            w = w + aj * lam
        return w


def operator_for_root(cone: ConeSpec, alpha: PositiveRoot) -> EulerOp:
    if alpha not in cone.rs.positive_roots:
        raise DomainError(f"{alpha} is not a positive root of {cone.rs}")
    return EulerOp(c_coeff(cone.rs, lam, alpha) for lam in cone.generators)


def apply_euler_op(op: EulerOp, f: EulerRational) -> EulerRational:
    """Exactly apply ``op`` to ``f``, keeping the result in Euler shape.

    Uses ``q_j d_j [P / prod (1-q_i)^e_i]
    = [q_j (d_j P)(1 - q_j) + e_j q_j P] / [(1 - q_j) prod (1-q_i)^e_i]``,
    so every variable touched by ``op`` gains exactly one denominator power.
    No cancellation is attempted.
    """
    if len(op.coeffs) != f.nvars:
        raise DimensionError(f"operator on {len(op.coeffs)} variables applied to {f.nvars}")
    k = f.nvars
    P = f.numerator
    active = [j for j, c in enumerate(op.coeffs) if c]
    if not active:
        return f

    factors = {j: Poly.one_minus_q(j, k) for j in active}

    def product_except(skip):
        out = Poly.one(k)
        for j in active:
            if j != skip:
                out = out * factors[j]
        return out

    result = P * product_except(None)
    for j in active:
        e_j = f.den_exps[j]
        qdP = P.diff(j).shift(j)
        term = qdP * factors[j] + P.shift(j).scale(e_j)
        result = result + (term * product_except(j)).scale(op.coeffs[j])
    exps = list(f.den_exps)
    for j in active:
        exps[j] += 1
    return EulerRational(result, tuple(exps))


def hilbert_series(cone: ConeSpec, roots: Sequence[PositiveRoot] | None = None) -> EulerRational:
    """The multigraded series of Weyl dimensions over the cone, in closed form.

    ``roots`` may give the positive roots in another order; the result is the
    same, because the operators commute and no cancellation happens.
    """
    if roots is None:
        roots = cone.rs.positive_roots
    elif sorted(roots, key=lambda r: r.coeffs) != sorted(cone.rs.positive_roots, key=lambda r: r.coeffs):
        raise DomainError("roots must be a permutation of the positive roots")
    f = EulerRational.geometric(cone.k)
    for alpha in roots:
        f = apply_euler_op(operator_for_root(cone, alpha), f)
    if not f.numerator.is_integral():
        raise IntegralityError("closed-form numerator has non-integral coefficients")
    return f


@dataclass(frozen=True)
class UniRational:
    """A univariate rational function ``numerator / denominator``."""

    numerator: Poly
    denominator: Poly

    def __post_init__(self):
        if self.numerator.nvars != 1 or self.denominator.nvars != 1:
            raise DimensionError("UniRational needs univariate polynomials")
        if self.denominator.is_zero():
            raise DomainError("zero denominator")

    def one_minus_q_power(self) -> int | None:
        """``D`` if the denominator is exactly ``(1 - q) ** D``, else ``None``."""
        D = self.denominator.degree()
        if self.denominator == Poly.from_dense([1, -1]) ** D:
            return D
        return None

    def to_str(self, latex: bool = False) -> str:
        num = self.numerator.to_str(latex=latex)
        D = self.one_minus_q_power()
        if D == 0:
            return num
        if len(self.numerator) > 1:
            num = f"({num})"
        if D is not None:
            den = "(1-q)" if D == 1 else (f"(1-q)^{{{D}}}" if latex else f"(1-q)^{D}")
        else:
            den = f"({self.denominator.to_str(latex=latex)})"
        if latex:
            return rf"\frac{{{num}}}{{{den}}}"
        return f"{num}/{den}"

    def __str__(self):
        return self.to_str()


def specialize(f: EulerRational, grading: Sequence[int]) -> UniRational:
    """Substitute ``q_j -> q ** grading[j]``; the result is not reduced."""
    grading = [int(w) for w in grading]
    if len(grading) != f.nvars:
        raise DimensionError(f"grading of length {len(grading)} for {f.nvars} variables")
    if any(w <= 0 for w in grading):
        raise DomainError(f"grading entries must be positive, got {grading}")
    num: dict = {}
    for exp, c in f.numerator.items():
        d = sum(w * a for w, a in zip(grading, exp))
        num[(d,)] = num.get((d,), 0) + c
    den = Poly.one(1)
    for w, e in zip(grading, f.den_exps):
        den = den * (Poly.one(1) - Poly.var(0, 1, w)) ** e
    return UniRational(Poly(num, 1), den)


def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return _trim(q), _trim(a[: len(b) - 1])


def _gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _divmod(a, b)[1]
    return [c / a[-1] for c in a]


def reduce_univariate(f: UniRational) -> UniRational:
    """Cancel the common factor of numerator and denominator.

    The denominator is normalized to constant term 1 (to its lowest nonzero
    coefficient if the constant term vanishes).  Use
    :meth:`UniRational.one_minus_q_power` to read off the standard
    ``p(q) / (1 - q)^D`` presentation when there is one.
    """
    if f.denominator.is_zero():
        raise DomainError("zero denominator")
    num, den = f.numerator.to_dense(), f.denominator.to_dense()
    if num:
        g = _gcd(num, den)
        if len(g) > 1:
            num = _divmod(num, g)[0]
            den = _divmod(den, g)[0]
    else:
        den = [Fraction(1)]
    lowest = next(c for c in den if c)
    return UniRational(
        Poly.from_dense([c / lowest for c in num]),
        Poly.from_dense([c / lowest for c in den]),
    )


def lemma_operators(n: int) -> tuple[EulerOp, EulerOp]:
    """The two new operators when passing from SL(n-1) to SL(n) on <2w1, 2w2>.

    They come from the roots ``alpha_2 + ... + alpha_{n-1}`` and
    ``alpha_1 + ... + alpha_{n-1}``.
    """
    if n < 4:
        raise DomainError(f"the recursion needs n >= 4, got {n}")
    return (
        EulerOp([0, Fraction(2, n - 2)]),
        EulerOp([Fraction(2, n - 1), Fraction(2, n - 1)]),
    )


def lemma_recursion_step(n: int, f: EulerRational) -> EulerRational:
    """Series for SL(n), <2w1, 2w2> from the one for SL(n-1)."""
    if f.nvars != 2:
        raise DimensionError("the recursion acts on two-variable series")
    for op in lemma_operators(n):
        f = apply_euler_op(op, f)
    return f
