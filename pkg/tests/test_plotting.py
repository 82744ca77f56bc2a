import pytest

from gwsemigroup import Box, render_membership_svg

from window_data import MAXIMALS_Q3_WINDOW, NONMAXIMAL_MEMBERS_Q3_WINDOW


def test_window_svg_marker_counts(hermitian_q3):
    svg = render_membership_svg(hermitian_q3, Box((-8, -8), (9, 10)))
    assert svg.count('fill="none"') == len(MAXIMALS_Q3_WINDOW)
    assert svg.count('fill="black"') == len(NONMAXIMAL_MEMBERS_Q3_WINDOW)
    assert svg.count("<line") == 2  # both axes cross the window


def test_genus0_plot_classifies_diagonal(genus0_m2):
    box = Box((-3, -3), (3, 3))
    svg = render_membership_svg(genus0_m2, box)
    # open circles exactly on the zero-sum diagonal, filled dots strictly above
    assert svg.count('fill="none"') == sum(1 for a in box.points() if sum(a) == 0)
    assert svg.count('fill="black"') == sum(1 for a in box.points() if sum(a) > 0)


def test_plot_is_deterministic(hermitian_q2):
    box = Box((-4, -4), (5, 5))
    assert render_membership_svg(hermitian_q2, box) == render_membership_svg(hermitian_q2, box)


def test_plot_rejects_non_two_point(genus0_m3, hermitian_q3):
    with pytest.raises(ValueError):
        render_membership_svg(genus0_m3, Box((-1, -1, -1), (1, 1, 1)))
    with pytest.raises(ValueError):
        render_membership_svg(hermitian_q3, Box((-1, -1, -1), (1, 1, 1)))