"""Named consistency checks over a description and a finite box.

Each check returns its first counterexample (or None); the runner packs the
outcomes into :class:`CheckResult` rows for reporting.  Everything here
re-derives quantities through routes that are independent of the primary
fast paths, so the suite doubles as the library's internal cross-validation:
class counts come from full enumeration instead of the greedy range walk,
lub generation is an actual fold instead of a membership scan, and so on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Box, SemigroupDescription, tadd, validate_description
from .semigroup import (
    absolute_maximals_below,
    dimension,
    is_absolute_maximal,
    is_maximal,
    is_member,
    members_from_lubs,
    two_point_profile,
)
from .series import (
    coeff_p,
    qp_violations,
    reconstruction_violations,
    semigroup_polynomial,
    symmetry_report,
    symmetry_violations,
)

__all__ = ["CheckResult", "run_verification", "CHECK_NAMES"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _sample_points(box: Box, cap: int = 400) -> list:
    pts = list(box.points())
    if len(pts) <= cap:
        return pts
    step = len(pts) // cap + 1
    return pts[::step]


def _check_description_consistency(d: SemigroupDescription, box: Box) -> str | None:
    violations = validate_description(d)
    return violations[0] if violations else None


def _check_class_counts(d: SemigroupDescription, box: Box) -> str | None:
    # dimension == number of classes of Gamma(alpha) under "equal coordinate
    # i", for every i, from full enumeration.
    for alpha in box.points():
        gam = absolute_maximals_below(d, alpha)
        counts = [len({b[i] for b in gam}) for i in range(d.m)]
        want = dimension(d, alpha)
        if any(c != want for c in counts):
            return f"at {alpha}: class counts {counts} vs dimension {want}"
    return None


def _check_lub_generation(d: SemigroupDescription, box: Box) -> str | None:
    folded = members_from_lubs(d, box)
    scanned = {a for a in box.points() if is_member(d, a)}
    if folded != scanned:
        diff = sorted(folded.symmetric_difference(scanned))[0]
        return f"lub fold and membership scan disagree at {diff}"
    return None


def _check_qp_identity(d: SemigroupDescription, box: Box) -> str | None:
    alpha = next(qp_violations(d, box), None)
    return None if alpha is None else f"q != p - shifted p at {alpha}"


def _check_index_independence(d: SemigroupDescription, box: Box) -> str | None:
    for alpha in _sample_points(box):
        vals = {coeff_p(d, alpha, i) for i in range(1, d.m + 1)}
        if len(vals) != 1:
            return f"p at {alpha} depends on the direction: {sorted(vals)}"
    return None


def _check_poincare_support(d: SemigroupDescription, box: Box) -> str | None:
    for alpha in box.points():
        p = coeff_p(d, alpha)
        if not is_member(d, alpha):
            if p != 0:
                return f"nonzero p({alpha}) = {p} at a non-member"
        elif not is_maximal(d, alpha):
            if p != 0:
                return f"nonzero p({alpha}) = {p} at a non-maximal member"
        elif is_absolute_maximal(d, alpha) and p != 1:
            return f"p({alpha}) = {p} at an absolute maximal (expected 1)"
    return None


def _check_reconstruction(d: SemigroupDescription, box: Box) -> str | None:
    poly = semigroup_polynomial(d)
    alpha = next(reconstruction_violations(d, box, poly), None)
    return None if alpha is None else f"polynomial lookup disagrees with p at {alpha}"


def _check_periodicity(d: SemigroupDescription, box: Box) -> str | None:
    for alpha in _sample_points(box, cap=150):
        for eta in d.lattice.generators:
            shifted = tadd(alpha, eta)
            if is_member(d, alpha) != is_member(d, shifted):
                return f"membership not periodic at {alpha} + {eta}"
            if dimension(d, alpha) != dimension(d, shifted):
                return f"dimension not periodic at {alpha} + {eta}"
            if is_maximal(d, alpha) != is_maximal(d, shifted):
                return f"maximality not periodic at {alpha} + {eta}"
            if is_absolute_maximal(d, alpha) != is_absolute_maximal(d, shifted):
                return f"absolute maximality not periodic at {alpha} + {eta}"
            if coeff_p(d, alpha) != coeff_p(d, shifted):
                return f"p not periodic at {alpha} + {eta}"
    return None


def _check_riemann_roch_regime(d: SemigroupDescription, box: Box) -> str | None:
    lo = 2 * d.genus - 1
    for alpha in box.points():
        s = sum(alpha)
        if s >= lo:
            want = s + 1 - d.genus
            got = dimension(d, alpha)
            if got != want:
                return f"dim({alpha}) = {got}, Riemann-Roch predicts {want}"
        elif s < 0 and dimension(d, alpha) != 0:
            return f"dim({alpha}) nonzero below the zero-sum hyperplane"
    return None


def _check_symmetry(d: SemigroupDescription, box: Box) -> str | None:
    report = symmetry_report(d)
    if not report.symmetric:
        return None  # nothing to check; runner marks this as skipped
    failure = next(symmetry_violations(d, box, report), None)
    if failure is not None:
        name, alpha = failure
        return f"{name} fails at {alpha} (sigma = {report.sigma})"
    return None


def _check_two_point_profile(d: SemigroupDescription, box: Box) -> str | None:
    if d.m != 2:
        return None
    try:
        profile = two_point_profile(d)
    except ValueError as exc:
        return str(exc)
    for j, t in enumerate(profile.table):
        if not is_member(d, (j, t)):
            return f"staircase point ({j}, {t}) is not a member"
        if is_member(d, (j, t - 1)):
            return f"({j}, {t - 1}) is a member below the staircase"
    a = profile.period
    for j in (-a, 1, a + 1, 3 * a + 2):
        if profile.sigma2(j + a) != profile.sigma2(j) - a:
            return f"staircase periodicity fails at column {j}"
    return None


_CHECKS = [
    ("description-consistency", _check_description_consistency),
    ("dimension-class-counts", _check_class_counts),
    ("lub-generation", _check_lub_generation),
    ("qp-identity", _check_qp_identity),
    ("poincare-index-independence", _check_index_independence),
    ("poincare-support", _check_poincare_support),
    ("polynomial-reconstruction", _check_reconstruction),
    ("lattice-periodicity", _check_periodicity),
    ("riemann-roch-regime", _check_riemann_roch_regime),
    ("symmetry-equations", _check_symmetry),
    ("two-point-profile", _check_two_point_profile),
]

CHECK_NAMES = [name for name, _ in _CHECKS]


def run_verification(d: SemigroupDescription, box: Box) -> list[CheckResult]:
    """Run every check; results are ordered and deterministic."""
    results = []
    symmetric = symmetry_report(d).symmetric
    for name, fn in _CHECKS:
        if name == "symmetry-equations" and not symmetric:
            results.append(CheckResult(name, True, "skipped: not symmetric"))
            continue
        if name == "two-point-profile" and d.m != 2:
            results.append(CheckResult(name, True, "skipped: m != 2"))
            continue
        counterexample = fn(d, box)
        if counterexample is None:
            results.append(CheckResult(name, True))
        else:
            results.append(CheckResult(name, False, counterexample))
    return results
