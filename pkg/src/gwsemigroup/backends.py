"""Ground-truth generators and independent dimension oracles.

Two families are built in:

* genus-0 curves with m marked rational points, where every quantity has a
  closed form (the dimension is ``max(0, |alpha| + 1)``), and
* Hermitian curves ``x^{q+1} = y^q + y`` over the field with q^2 elements,
  at the pair (point at infinity, origin).

The Hermitian oracle never touches the combinatorial machinery in
:mod:`gwsemigroup.semigroup`: it counts reduced monomials ``x^a y^b`` with
``0 <= a <= q`` whose valuation vector ``(a q + b (q+1), -a - b (q+1))``
fits under ``alpha``.  Those monomials have pairwise distinct pole orders at
infinity (``a q + b (q+1)`` is congruent to ``-a`` modulo ``q+1``, which
pins down ``a`` and then ``b``), hence are linearly independent and span,
so the count is the exact dimension.  Descriptions produced here therefore
serve as independent fixtures for cross-validation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .core import (
    Box,
    IntTuple,
    Lattice,
    SemigroupDescription,
    ceildiv,
    floordiv,
    ones,
    tsub,
    unit,
)
from .semigroup import dimension

__all__ = [
    "Genus0Model",
    "HermitianTwoPointModel",
    "MonomialExponent",
    "genus0_dimension",
    "genus0_description",
    "hermitian_genus",
    "hermitian_dimension",
    "hermitian_description",
    "cross_validate",
    "is_prime_power",
]


def is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    for p in range(2, isqrt(n) + 1):
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
    return True


# ---------------------------------------------------------------------------
# genus 0

def genus0_dimension(m: int, alpha: IntTuple) -> int:
    """Closed-form dimension on the projective line: max(0, |alpha| + 1)."""
    if len(alpha) != m:
        raise ValueError(f"tuple of length {len(alpha)}, expected {m}")
    return max(0, sum(alpha) + 1)


def genus0_description(m: int) -> SemigroupDescription:
    """Description of the genus-0 semigroup at m points.

    Every difference of points is principal, so all periods are 1 and the
    fundamental region holds a single absolute maximal class, the origin.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    return SemigroupDescription(
        m=m,
        genus=0,
        lattice=Lattice.from_periods((1,) * (m - 1)),
        gamma_fundamental=((0,) * m,),
        label=f"genus-0, {m} points",
    )


@dataclass(frozen=True)
class Genus0Model:
    """m marked rational points on a genus-0 curve.

    Needs a base field with at least m elements; that is a property of the
    modelled curve, recorded here but not enforced numerically.
    """

    m: int

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError("m must be at least 2")

    def dimension(self, alpha: IntTuple) -> int:
        return genus0_dimension(self.m, alpha)

    def description(self) -> SemigroupDescription:
        return genus0_description(self.m)


# ---------------------------------------------------------------------------
# Hermitian two-point

def hermitian_genus(q: int) -> int:
    return q * (q - 1) // 2


@dataclass(frozen=True)
class MonomialExponent:
    """Exponent pair (a, b) of a reduced monomial x^a y^b, 0 <= a <= q."""

    a: int
    b: int

    def pole_vector(self, q: int) -> IntTuple:
        """Valuation vector at (infinity, origin)."""
        if not 0 <= self.a <= q:
            raise ValueError(f"a must lie in [0, {q}]")
        return (self.a * q + self.b * (q + 1), -self.a - self.b * (q + 1))


def hermitian_dimension(q: int, alpha: IntTuple) -> int:
    """Monomial-count dimension oracle for the Hermitian two-point setting.

    Counts pairs (a, b) with 0 <= a <= q and
    ``a q + b (q+1) <= alpha_1`` and ``a + b (q+1) >= -alpha_2``.
    For each a the two inequalities bound b into one integer interval, so no
    search is involved.
    """
    if len(alpha) != 2:
        raise ValueError("Hermitian oracle takes length-2 tuples")
    a1, a2 = alpha
    period = q + 1
    count = 0
    for a in range(q + 1):
        b_hi = floordiv(a1 - a * q, period)
        b_lo = ceildiv(-a2 - a, period)
        if b_hi >= b_lo:
            count += b_hi - b_lo + 1
    return count


def _oracle_member(q: int, alpha: IntTuple) -> bool:
    la = hermitian_dimension(q, alpha)
    if la == 0:
        return False
    return all(hermitian_dimension(q, tsub(alpha, unit(2, i))) == la - 1 for i in (1, 2))


def hermitian_description(q: int) -> SemigroupDescription:
    """Build the two-point Hermitian description entirely from the oracle.

    Scans the fundamental-region slab 0 <= |alpha| <= 2g and keeps the
    elements that the monomial-count oracle declares absolute maximal; the
    combinatorial dimension machinery is never consulted, which is what
    makes the resulting fixture an independent reference.
    """
    if q < 2:
        raise ValueError("q must be at least 2")
    if not is_prime_power(q):
        raise ValueError(f"q must be a prime power, got {q}")
    g = hermitian_genus(q)
    period = q + 1
    gammas = []
    for a1 in range(period):
        for a2 in range(-a1, 2 * g - a1 + 1):
            alpha = (a1, a2)
            if not _oracle_member(q, alpha):
                continue
            drop = hermitian_dimension(q, alpha) - hermitian_dimension(q, tsub(alpha, ones(2)))
            if drop == 1:
                gammas.append(alpha)
    return SemigroupDescription(
        m=2,
        genus=g,
        lattice=Lattice.from_periods((period,)),
        gamma_fundamental=tuple(gammas),
        label=f"hermitian q={q} (Qinf,P00)",
    )


@dataclass(frozen=True)
class HermitianTwoPointModel:
    """Hermitian curve x^{q+1} = y^q + y at (infinity, origin)."""

    q: int

    def __post_init__(self) -> None:
        if self.q < 2 or not is_prime_power(self.q):
            raise ValueError(f"q must be a prime power >= 2, got {self.q}")

    @property
    def genus(self) -> int:
        return hermitian_genus(self.q)

    @property
    def period(self) -> int:
        return self.q + 1

    def dimension(self, alpha: IntTuple) -> int:
        return hermitian_dimension(self.q, alpha)

    def description(self) -> SemigroupDescription:
        return hermitian_description(self.q)


def cross_validate(q: int, box: Box) -> bool:
    """Combinatorial dimension versus monomial-count oracle on a whole box."""
    d = hermitian_description(q)
    return all(dimension(d, alpha) == hermitian_dimension(q, alpha) for alpha in box.points())
