import random

import pytest

from gwsemigroup import (
    Box,
    BoxSeries,
    check_qp_identity,
    check_reconstruction,
    check_symmetry_equations,
    coeff_l,
    coeff_p,
    coeff_q,
    dimension_jump,
    is_absolute_maximal,
    is_maximal,
    is_member,
    semigroup_polynomial,
    series_on_box,
    symmetry_report,
)
from gwsemigroup.core import canonicalize, tadd, tsub, unit

from window_data import MAXIMALS_Q3_WINDOW


# ---------------------------------------------------------------------------
# coefficients

def test_coeff_l_examples(hermitian_q3, genus0_m3):
    assert coeff_l(hermitian_q3, (2, 2)) == 1
    assert coeff_l(hermitian_q3, (-2, 0)) == 0
    assert coeff_l(genus0_m3, (1, 1, 1)) == 3


def test_coeff_l_range(hermitian_q3, genus0_m3):
    for d, box in [
        (hermitian_q3, Box((-4, -4), (7, 7))),
        (genus0_m3, Box((-2, -2, -2), (3, 3, 3))),
    ]:
        for alpha in box.points():
            assert 0 <= coeff_l(d, alpha) <= d.m


def test_coeff_q_examples(hermitian_q3, genus0_m3):
    assert coeff_q(genus0_m3, (0, 0, 0)) == 1
    assert coeff_q(hermitian_q3, (0, 0)) == 1
    assert coeff_q(hermitian_q3, (-5, -5)) == 0
    assert coeff_q(genus0_m3, (-4, -4, -4)) == 0


def test_coeff_p_examples(hermitian_q3, genus0_m3):
    assert coeff_p(hermitian_q3, (2, 2)) == 1
    assert coeff_p(hermitian_q3, (1, 1)) == 0
    assert coeff_p(genus0_m3, (0, 0, 1)) == -1
    assert coeff_p(genus0_m3, (0, 0, 0)) == 1


def test_coeff_p_index_independence(hermitian_q3, genus0_m3):
    for d, box in [
        (hermitian_q3, Box((-4, -4), (6, 7))),
        (genus0_m3, Box((-2, -2, -2), (2, 2, 2))),
    ]:
        for alpha in box.points():
            vals = {coeff_p(d, alpha, i) for i in range(1, d.m + 1)}
            assert len(vals) == 1


def test_coeff_p_lattice_periodicity(hermitian_q3, genus0_m3):
    for d, box in [
        (hermitian_q3, Box((-4, -4), (6, 6))),
        (genus0_m3, Box((-2, -2, -2), (2, 2, 2))),
    ]:
        pts = list(box.points())
        for alpha in pts[:: max(1, len(pts) // 80)]:
            for eta in d.lattice.generators:
                assert coeff_p(d, alpha) == coeff_p(d, tadd(alpha, eta))


def test_two_point_poincare_is_maximal_indicator(hermitian_q2, hermitian_q3):
    for d in (hermitian_q2, hermitian_q3):
        for alpha in Box((-5, -5), (7, 7)).points():
            p = coeff_p(d, alpha)
            assert p in (0, 1)
            assert (p == 1) == is_maximal(d, alpha)


def test_jump_difference_relation(hermitian_q3, genus0_m3):
    # d_i(beta) - d_i(beta - e_j) == d_j(beta) - d_j(beta - e_i) for i != j
    rng = random.Random(3)
    for d, lo, hi in [(hermitian_q3, -6, 8), (genus0_m3, -3, 4)]:
        for _ in range(250):
            beta = tuple(rng.randint(lo, hi) for _ in range(d.m))
            i, j = rng.sample(range(1, d.m + 1), 2)
            lhs = dimension_jump(d, beta, i) - dimension_jump(d, tsub(beta, unit(d.m, j)), i)
            rhs = dimension_jump(d, beta, j) - dimension_jump(d, tsub(beta, unit(d.m, i)), j)
            assert lhs == rhs


def test_jump_chain_is_monotone(hermitian_q3, genus0_m3):
    # inserting the missing coordinates one at a time can only raise the jump
    rng = random.Random(5)
    for d, lo, hi in [(hermitian_q3, -5, 7), (genus0_m3, -3, 3)]:
        m = d.m
        for _ in range(150):
            alpha = tuple(rng.randint(lo, hi) for _ in range(m))
            i = rng.randint(1, m)
            order = [j for j in range(1, m + 1) if j != i]
            rng.shuffle(order)
            point = tadd(tsub(alpha, (1,) * m), unit(m, i))
            chain = [dimension_jump(d, point, i)]
            for j in order:
                point = tadd(point, unit(m, j))
                chain.append(dimension_jump(d, point, i))
            assert chain == sorted(chain)
            assert 0 <= chain[0] and chain[-1] <= 1
            assert point == alpha


# ---------------------------------------------------------------------------
# box series

def test_series_on_box_poincare_window(hermitian_q3):
    bs = series_on_box(hermitian_q3, "P", Box((-8, -8), (9, 10)))
    assert set(bs.support()) == MAXIMALS_Q3_WINDOW
    assert all(bs[a] == 1 for a in MAXIMALS_Q3_WINDOW)


def test_series_on_box_below_zero_sum(hermitian_q3):
    bs = series_on_box(hermitian_q3, "L", Box((-6, -6), (-2, -3)))
    assert bs.support() == []


def test_series_on_box_genus0_two_point(genus0_m2):
    bs = series_on_box(genus0_m2, "P", Box((-2, -2), (2, 2)))
    assert set(bs.support()) == {(x, -x) for x in range(-2, 3)}
    assert all(c in (0, 1) for c in bs.coeffs.values())


def test_box_series_requires_total_map():
    box = Box((0, 0), (1, 1))
    with pytest.raises(ValueError):
        BoxSeries(box=box, kind="P", coeffs={(0, 0): 1})
    with pytest.raises(ValueError):
        BoxSeries(box=box, kind="P", coeffs={p: 0 for p in box.points()} | {(9, 9): 1})
    with pytest.raises(ValueError):
        BoxSeries(box=box, kind="X", coeffs={p: 0 for p in box.points()})


def test_box_series_json_roundtrip(hermitian_q3):
    bs = series_on_box(hermitian_q3, "Q", Box((-3, -3), (4, 4)))
    again = BoxSeries.from_json_dict(bs.to_json_dict())
    assert again == bs
    data = bs.to_json_dict()
    assert data["coeffs"] == sorted(data["coeffs"])
    assert all(c != 0 for _, c in data["coeffs"])


# ---------------------------------------------------------------------------
# functional equation between Q and P

def test_qp_identity(hermitian_q3, genus0_m3):
    assert check_qp_identity(hermitian_q3, Box((-6, -6), (6, 6)))
    assert check_qp_identity(genus0_m3, Box((-4, -4, -4), (4, 4, 4)))


def test_qp_identity_single_point(hermitian_q3):
    box = Box((0, 0), (0, 0))
    expected = coeff_q(hermitian_q3, (0, 0)) == coeff_p(hermitian_q3, (0, 0)) - coeff_p(
        hermitian_q3, (-1, -1)
    )
    assert check_qp_identity(hermitian_q3, box) == expected


# ---------------------------------------------------------------------------
# semigroup polynomial

def test_semigroup_polynomial_fixtures(hermitian_q3, genus0_m2, genus0_m3):
    assert semigroup_polynomial(hermitian_q3).terms == {
        (0, 0): 1, (1, 5): 1, (2, 2): 1, (3, -1): 1,
    }
    assert semigroup_polynomial(genus0_m3).terms == {(0, 0, 0): 1, (0, 0, 1): -1}
    assert semigroup_polynomial(genus0_m2).terms == {(0, 0): 1}


def test_semigroup_polynomial_support_law(hermitian_q2, genus0_m3, genus0_m4):
    from gwsemigroup import fundamental_maximals

    for d in (hermitian_q2, genus0_m3, genus0_m4):
        poly = semigroup_polynomial(d)
        maxima, absolute = fundamental_maximals(d)
        assert set(poly.terms) <= set(maxima)
        for gamma in absolute:
            assert poly[gamma] == 1


def test_reconstruction(hermitian_q3, genus0_m3):
    assert check_reconstruction(hermitian_q3, Box((-8, -8), (9, 10)))
    assert check_reconstruction(genus0_m3, Box((-3, -3, -3), (3, 3, 3)))


def test_reconstruction_single_point(hermitian_q3):
    # at the origin the lookup reduces to the constant term, which is 1
    poly = semigroup_polynomial(hermitian_q3)
    assert poly[(0, 0)] == 1
    assert check_reconstruction(hermitian_q3, Box((0, 0), (0, 0)))


def test_reconstruction_is_representative_lookup(hermitian_q3):
    poly = semigroup_polynomial(hermitian_q3)
    for alpha in Box((-6, -6), (8, 8)).points():
        rep, _ = canonicalize(hermitian_q3.lattice, alpha)
        assert coeff_p(hermitian_q3, alpha) == poly[rep]


# ---------------------------------------------------------------------------
# symmetry

def test_symmetry_report_hermitian_q3(hermitian_q3):
    report = symmetry_report(hermitian_q3)
    assert report.symmetric
    assert report.sigma == (1, 5)
    assert sum(report.sigma) == 2 * hermitian_q3.genus - 2 + 2
    assert is_maximal(hermitian_q3, report.sigma)
    assert report.gamma_witness is not None
    assert sum(report.gamma_witness) == 2 * hermitian_q3.genus - 1
    assert not is_member(hermitian_q3, report.gamma_witness)
    assert report.canonical_full_support
    assert report.full_support_witness == (-3, 9)
    assert all(x != 1 for x in report.full_support_witness)
    assert is_maximal(hermitian_q3, report.full_support_witness)


def test_symmetry_report_genus0(genus0_m2, genus0_m3):
    r2 = symmetry_report(genus0_m2)
    assert r2.symmetric and r2.sigma == (0, 0)
    r3 = symmetry_report(genus0_m3)
    assert r3.symmetric and r3.sigma == (0, 0, 1)
    for d, r in ((genus0_m2, r2), (genus0_m3, r3)):
        assert not is_member(d, r.gamma_witness) and sum(r.gamma_witness) == -1
        assert r.canonical_full_support
        assert all(x != 1 for x in r.full_support_witness)
        assert is_maximal(d, r.full_support_witness)
        assert sum(r.full_support_witness) == d.maximal_sum_bound


def test_symmetry_equations(hermitian_q2, hermitian_q3, genus0_m2, genus0_m3):
    cases = [
        (hermitian_q2, Box((-5, -5), (7, 7))),
        (hermitian_q3, Box((-6, -6), (8, 8))),
        (genus0_m2, Box((-4, -4), (4, 4))),
        (genus0_m3, Box((-3, -3, -3), (3, 3, 3))),
    ]
    for d, box in cases:
        assert check_symmetry_equations(d, box)


def test_symmetry_equation_at_distinguished_point(hermitian_q3, genus0_m3):
    for d in (hermitian_q3, genus0_m3):
        sigma = symmetry_report(d).sigma
        sign = 1 if d.m % 2 == 0 else -1
        assert coeff_p(d, sigma) == sign * coeff_p(d, (0,) * d.m)


def test_symmetry_equations_require_symmetric_description(hermitian_q3):
    report = symmetry_report(hermitian_q3)
    broken = type(report)(
        symmetric=False,
        sigma=None,
        gamma_witness=None,
        canonical_full_support=False,
    )
    with pytest.raises(ValueError):
        check_symmetry_equations(hermitian_q3, Box((0, 0), (1, 1)), broken)


def test_poincare_support_law(hermitian_q3, genus0_m3, genus0_m4):
    cases = [
        (hermitian_q3, Box((-6, -6), (8, 8))),
        (genus0_m3, Box((-2, -2, -2), (2, 2, 2))),
        (genus0_m4, Box((-2,) * 4, (2,) * 4)),
    ]
    for d, box in cases:
        for alpha in box.points():
            p = coeff_p(d, alpha)
            if not is_member(d, alpha):
                assert p == 0
            elif not is_maximal(d, alpha):
                assert p == 0
            elif is_absolute_maximal(d, alpha):
                assert p == 1
