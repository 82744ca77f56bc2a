"""Exact-integer tuples, lattices, boxes, and finite semigroup descriptions.

A generalized Weierstrass semigroup at m marked points is an additive
sub-semigroup of Z^m.  Although infinite, it is pinned down by a finite
amount of data:

* the genus ``g`` of the underlying curve,
* the sum-zero lattice spanned by the period vectors
  ``eta^i = a_i * (e_i - e_{i+1})`` for ``i = 1, ..., m-1``,
* the finitely many absolute maximal elements inside the fundamental
  region ``C = {alpha in Z^m : 0 <= alpha_i < a_i for i < m}``
  (the last coordinate is unconstrained).

This module holds that data model together with the exact lattice
arithmetic everything else is built on.  All integers are unbounded
Python ints; no floating point is used anywhere in the package.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path
from typing import Iterable, Iterator

IntTuple = tuple[int, ...]

__all__ = [
    "IntTuple",
    "indicator",
    "unit",
    "ones",
    "zeros",
    "tadd",
    "tsub",
    "tneg",
    "lub",
    "floordiv",
    "ceildiv",
    "Box",
    "Lattice",
    "Region",
    "canonicalize",
    "SemigroupDescription",
    "validate_description",
    "load_description",
    "save_description",
]


# ---------------------------------------------------------------------------
# tuple arithmetic

def indicator(m: int, indices: Iterable[int]) -> IntTuple:
    """The m-tuple with entry 1 at the given 1-based positions and 0 elsewhere.

    ``indicator(m, range(1, m + 1))`` is the all-ones tuple, ``indicator(m, ())``
    the zero tuple, and ``indicator(m, (i,))`` the i-th standard basis vector.
    """
    idx = set(indices)
    for i in idx:
        if not 1 <= i <= m:
            raise ValueError(f"index {i} outside 1..{m}")
    return tuple(1 if i in idx else 0 for i in range(1, m + 1))


def unit(m: int, i: int) -> IntTuple:
    """Standard basis vector e_i (1-based)."""
    return indicator(m, (i,))


def ones(m: int) -> IntTuple:
    return (1,) * m


def zeros(m: int) -> IntTuple:
    return (0,) * m


def tadd(a: IntTuple, b: IntTuple) -> IntTuple:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def tsub(a: IntTuple, b: IntTuple) -> IntTuple:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def tneg(a: IntTuple) -> IntTuple:
    return tuple(-x for x in a)


def lub(tuples: Iterable[IntTuple]) -> IntTuple:
    """Coordinatewise maximum of a nonempty family of equal-length tuples."""
    it = iter(tuples)
    try:
        best = list(next(it))
    except StopIteration:
        raise ValueError("lub of an empty family") from None
    for t in it:
        if len(t) != len(best):
            raise ValueError("lub over tuples of mixed lengths")
        for j, x in enumerate(t):
            if x > best[j]:
                best[j] = x
    return tuple(best)


def floordiv(a: int, b: int) -> int:
    """Floor division for a positive divisor (Python's // already floors)."""
    return a // b


def ceildiv(a: int, b: int) -> int:
    """Ceiling division for a positive divisor."""
    return -((-a) // b)


# ---------------------------------------------------------------------------
# boxes

@dataclass(frozen=True)
class Box:
    """The finite window {alpha : lower <= alpha <= upper} (coordinatewise)."""

    lower: IntTuple
    upper: IntTuple

    def __post_init__(self) -> None:
        lo = tuple(int(x) for x in self.lower)
        hi = tuple(int(x) for x in self.upper)
        if len(lo) != len(hi):
            raise ValueError("box bounds of mixed lengths")
        if not lo:
            raise ValueError("box must have positive dimension")
        if any(l > u for l, u in zip(lo, hi)):
            raise ValueError(f"empty box: lower {lo} exceeds upper {hi}")
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    @property
    def dim(self) -> int:
        return len(self.lower)

    def point_count(self) -> int:
        n = 1
        for l, u in zip(self.lower, self.upper):
            n *= u - l + 1
        return n

    def __contains__(self, alpha: IntTuple) -> bool:
        return len(alpha) == self.dim and all(
            l <= x <= u for l, x, u in zip(self.lower, alpha, self.upper)
        )

    def points(self) -> Iterator[IntTuple]:
        """All box points in lexicographic order (deterministic)."""
        return product(*(range(l, u + 1) for l, u in zip(self.lower, self.upper)))


# ---------------------------------------------------------------------------
# the period lattice and its fundamental region

@dataclass(frozen=True)
class Lattice:
    """Sum-zero lattice spanned by eta^i = a_i * (e_i - e_{i+1}), i = 1..m-1.

    ``generators[i-1]`` is the full m-tuple eta^i.  The positive integer a_i
    (the i-th period) sits at position i, its negative at position i+1, and
    every other entry is zero, so each generator has coordinate sum zero.
    """

    generators: tuple[IntTuple, ...]

    def __post_init__(self) -> None:
        gens = tuple(tuple(int(x) for x in g) for g in self.generators)
        if not gens:
            raise ValueError("a lattice needs at least one generator (m >= 2)")
        m = len(gens[0])
        if len(gens) != m - 1:
            raise ValueError(f"expected {m - 1} generators for m={m}, got {len(gens)}")
        for i, g in enumerate(gens):
            if len(g) != m:
                raise ValueError("generators of mixed lengths")
            a = g[i]
            if a <= 0:
                raise ValueError(f"period a_{i + 1} must be positive, got {a}")
            expected = tuple(a if j == i else -a if j == i + 1 else 0 for j in range(m))
            if g != expected:
                raise ValueError(
                    f"generator {i + 1} must equal {expected} (period shape), got {g}"
                )
        object.__setattr__(self, "generators", gens)

    @property
    def m(self) -> int:
        return len(self.generators[0])

    @property
    def periods(self) -> tuple[int, ...]:
        return tuple(g[i] for i, g in enumerate(self.generators))

    @classmethod
    def from_periods(cls, periods: Iterable[int]) -> "Lattice":
        per = tuple(int(a) for a in periods)
        m = len(per) + 1
        gens = tuple(
            tuple(a if j == i else -a if j == i + 1 else 0 for j in range(m))
            for i, a in enumerate(per)
        )
        return cls(gens)

    def combination(self, coeffs: Iterable[int]) -> IntTuple:
        """The lattice element sum_i coeffs_i * eta^i."""
        ks = list(coeffs)
        if len(ks) != self.m - 1:
            raise ValueError("coefficient count must be m-1")
        v = [0] * self.m
        for k, g in zip(ks, self.generators):
            for j, x in enumerate(g):
                v[j] += k * x
        return tuple(v)

    def contains(self, v: IntTuple) -> bool:
        """Whether v lies in the lattice."""
        rep, _ = canonicalize(self, v)
        return rep == zeros(self.m) and sum(v) == 0

    @property
    def region(self) -> "Region":
        return Region(self)


@dataclass(frozen=True)
class Region:
    """The fundamental region C of a lattice.

    C constrains coordinates 1..m-1 to ``0 <= alpha_i < a_i`` and leaves the
    last coordinate free; every alpha in Z^m has exactly one representative
    alpha - eta in C with eta in the lattice.
    """

    lattice: Lattice

    def __contains__(self, alpha: IntTuple) -> bool:
        per = self.lattice.periods
        if len(alpha) != self.lattice.m:
            return False
        return all(0 <= alpha[i] < per[i] for i in range(len(per)))

    def sum_slab(self, lo_sum: int, hi_sum: int) -> Iterator[IntTuple]:
        """All alpha in C with lo_sum <= |alpha| <= hi_sum, in lexicographic order.

        Finite: the constrained coordinates range over [0, a_i) and the free
        last coordinate is then pinned between the two sum bounds.
        """
        per = self.lattice.periods
        for prefix in product(*(range(a) for a in per)):
            s = sum(prefix)
            for last in range(lo_sum - s, hi_sum - s + 1):
                yield prefix + (last,)


def canonicalize(lattice: Lattice, alpha: IntTuple) -> tuple[IntTuple, tuple[int, ...]]:
    """Reduce alpha to its unique representative in the fundamental region.

    Returns ``(rep, coeffs)`` with ``rep`` in C and
    ``alpha == rep + sum(coeffs[i] * eta^{i+1})``.  Coefficients are computed
    left to right by floor division: subtracting ``c_i`` copies of eta^i
    normalizes coordinate i into [0, a_i) and carries ``c_i * a_i`` onto
    coordinate i+1 before the next step.
    """
    per = lattice.periods
    m = lattice.m
    if len(alpha) != m:
        raise ValueError(f"tuple of length {len(alpha)}, lattice has m={m}")
    v = list(alpha)
    coeffs = []
    for i, a in enumerate(per):
        c = floordiv(v[i], a)
        v[i] -= c * a
        v[i + 1] += c * a
        coeffs.append(c)
    return tuple(v), tuple(coeffs)


# ---------------------------------------------------------------------------
# the finite description

@dataclass(frozen=True)
class SemigroupDescription:
    """Finite presentation of a generalized Weierstrass semigroup.

    ``gamma_fundamental`` lists the absolute maximal elements inside the
    fundamental region C; together with the lattice they determine the whole
    semigroup.  Construction enforces the cheap structural invariants (each
    gamma lies in C, has coordinate sum within [0, 2g-2+m], and the zero
    tuple is present).  The deeper self-consistency checks live in
    :func:`validate_description`, which reports violations as data.
    """

    m: int
    genus: int
    lattice: Lattice
    gamma_fundamental: tuple[IntTuple, ...]
    label: str = ""
    _caches: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError("m must be at least 2")
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        if self.lattice.m != self.m:
            raise ValueError("lattice dimension disagrees with m")
        gammas = tuple(sorted({tuple(int(x) for x in g) for g in self.gamma_fundamental}))
        region = self.lattice.region
        bound = self.maximal_sum_bound
        for g in gammas:
            if len(g) != self.m:
                raise ValueError(f"gamma {g} has wrong length")
            if g not in region:
                raise ValueError(f"gamma {g} lies outside the fundamental region")
            if not 0 <= sum(g) <= bound:
                raise ValueError(
                    f"gamma {g} has coordinate sum {sum(g)} outside [0, {bound}]"
                )
        if zeros(self.m) not in gammas:
            raise ValueError("gamma_fundamental must contain the zero tuple")
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "genus", int(self.genus))
        object.__setattr__(self, "gamma_fundamental", gammas)

    @property
    def region(self) -> Region:
        return self.lattice.region

    @property
    def maximal_sum_bound(self) -> int:
        """Upper bound 2g-2+m on the coordinate sum of any maximal element.

        If |alpha| >= 2g-1+m then |alpha - 1 + e_i| >= 2g, so alpha - 1 + e_i
        is a member and alpha cannot be maximal; members also need |alpha| >= 0.
        """
        return 2 * self.genus - 2 + self.m

    # -- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "genus": self.genus,
            "lattice_generators": [list(g) for g in self.lattice.generators],
            "gamma_fundamental": [list(g) for g in self.gamma_fundamental],
            "label": self.label,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SemigroupDescription":
        required = {"m", "genus", "lattice_generators", "gamma_fundamental", "label"}
        if not isinstance(data, dict):
            raise ValueError("description JSON must be an object")
        missing = required - set(data)
        if missing:
            raise ValueError(f"description JSON missing keys: {sorted(missing)}")
        if not isinstance(data["m"], int) or not isinstance(data["genus"], int):
            raise ValueError("'m' and 'genus' must be integers")
        if not isinstance(data["label"], str):
            raise ValueError("'label' must be a string")
        for key in ("lattice_generators", "gamma_fundamental"):
            rows = data[key]
            if not isinstance(rows, list) or not all(
                isinstance(r, list) and all(isinstance(x, int) for x in r) for r in rows
            ):
                raise ValueError(f"'{key}' must be a list of integer lists")
        lattice = Lattice(tuple(tuple(g) for g in data["lattice_generators"]))
        return cls(
            m=data["m"],
            genus=data["genus"],
            lattice=lattice,
            gamma_fundamental=tuple(tuple(g) for g in data["gamma_fundamental"]),
            label=data["label"],
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2) + "\n"


def load_description(path: str | Path) -> SemigroupDescription:
    """Read and structurally validate a description JSON file."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return SemigroupDescription.from_json_dict(data)


def save_description(d: SemigroupDescription, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(d.dumps())


# ---------------------------------------------------------------------------
# semantic validation

def _rr_sample_prefixes(periods: tuple[int, ...], cap: int = 512) -> list[tuple[int, ...]]:
    # Cover every pattern of constrained coordinates so that a dropped
    # fundamental class cannot hide from the Riemann-Roch probe.
    total = 1
    for a in periods:
        total *= a
    prefixes = list(product(*(range(a) for a in periods)))
    if total <= cap:
        return prefixes
    step = total // cap + 1
    return prefixes[::step]


def validate_description(d: SemigroupDescription) -> list[str]:
    """Self-consistency gate; returns human-readable violations (empty = valid).

    Checks, with dimensions computed from the description itself:

    a. every listed gamma is absolute maximal;
    b. no absolute maximal element of the fundamental region with coordinate
       sum in [0, 2g-2+m] is missing from the list;
    c. dim(alpha) == |alpha| + 1 - g on a deterministic sample of tuples with
       |alpha| >= 2g-1 (consistency with the claimed genus);
    d. dim(alpha) == 0 on a sample with |alpha| < 0.
    """
    from . import semigroup  # deferred: semigroup builds on this module

    violations: list[str] = []
    listed = set(d.gamma_fundamental)

    for g in d.gamma_fundamental:
        if not semigroup.is_absolute_maximal(d, g):
            violations.append(f"(a) listed gamma {g} is not absolute maximal")

    for alpha in d.region.sum_slab(0, d.maximal_sum_bound):
        if alpha not in listed and semigroup.is_absolute_maximal(d, alpha):
            violations.append(f"(b) absolute maximal {alpha} missing from the list")

    g2 = 2 * d.genus - 1
    prefixes = _rr_sample_prefixes(d.lattice.periods)
    for s in (g2, g2 + 1, g2 + 5):
        for prefix in prefixes:
            alpha = prefix + (s - sum(prefix),)
            expected = s + 1 - d.genus
            got = semigroup.dimension(d, alpha)
            if got != expected:
                violations.append(
                    f"(c) dim({alpha}) = {got}, Riemann-Roch predicts {expected}"
                )

    for s in (-1, -2, -7):
        for prefix in prefixes[:4]:
            alpha = prefix + (s - sum(prefix),)
            got = semigroup.dimension(d, alpha)
            if got != 0:
                violations.append(f"(d) dim({alpha}) = {got}, expected 0 for sum {s}")

    return violations
