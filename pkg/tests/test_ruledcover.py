import pytest

from surfcover.oracle import implicit_check, sample_points
from surfcover.polycore import ONE, ZERO, MPoly, RatFn, substitute
from surfcover.ruledcover import (
    BudgetExhausted,
    NotRuledForm,
    PipelineError,
    RuledParam,
    a_polynomials,
    base_point_ideal,
    compute_alphas,
    cover,
    critical_line,
    detect_ruled_form,
    normality_test,
    remove_base_points_ruled,
    second_parametrization,
    standardize,
)
from surfdata import P, load, poly

s, t, x, y, z = (MPoly.var(v) for v in "stxyz")

CUBIC_CHART = RuledParam((ONE, ONE, ONE), (s**2 + s + 1, s**2 + 2 * s, s**2 + 1), s - 1)


def test_detect_ruled_form_of_debased_cubic():
    comps = [P("(s^2*t+s*t+t+1)/(s-1)"), P("(s^2*t+2*s*t+1)/(s-1)"), P("(s^2*t+t+1)/(s-1)")]
    assert detect_ruled_form(comps) == CUBIC_CHART


def test_detect_plane():
    plane = detect_ruled_form([P("s"), P("t"), P("0")])
    assert plane.r == (s, ZERO, ZERO) and plane.p == (ZERO, ONE, ZERO) and plane.q == ONE


@pytest.mark.parametrize(
    "comps",
    [("s*t^2", "t", "1"), ("s", "1/t", "0"), ("s", "s", "s"), ("s", "w*t", "0")],
)
def test_detect_rejects_non_ruled(comps):
    with pytest.raises(NotRuledForm):
        detect_ruled_form([P(c) for c in comps])


def test_standardize_leaves_standard_input_alone():
    out = standardize(CUBIC_CHART)
    assert out.param == CUBIC_CHART and out.log == []


def test_standardize_divides_out_common_p_factor():
    out = standardize(RuledParam((ZERO, ZERO, ZERO), (s**2 + s, s**2, s**2 - s), ONE))
    assert out.param.p == (s + 1, s, s - 1)
    assert [e.label for e in out.log] == ["t -> t/(s)"]


def test_standardize_unequal_degrees_by_moebius():
    start = RuledParam((ZERO, ONE, s), (s**2, s, s), ONE)
    out = standardize(start, seed=3)
    assert out.param.is_standardized()
    assert all(e.composes_to_identity() for e in out.log)
    # the new chart lies on the surface of the old one: y = 1 + t*s, z = s + t*s so z - y = s - 1, x = t*s^2
    F = x - (z - y + 1) * (y - 1)
    assert implicit_check(start.components(), F)
    assert implicit_check(out.param.components(), F)


def test_standardize_handles_s_free_numerator():
    start = RuledParam((ZERO, s, ZERO), (ONE, ZERO, s), ONE)
    out = standardize(start, seed=1)
    assert out.param.is_standardized()
    assert any(e.label.startswith("t -> ") for e in out.log)
    assert all(e.composes_to_identity() for e in out.log)


def test_standardize_budget():
    with pytest.raises(BudgetExhausted):
        standardize(RuledParam((ZERO, ONE, s), (s**2, s, s), ONE), max_attempts=0)


def test_base_point_ideal_of_cubic():
    comps, _ = load("cubic")
    gens = base_point_ideal(detect_ruled_form(comps))
    want = ["(s^2+s+1)*t+s", "(s^2+2*s)*t+s", "(s^2+1)*t+s", "s^2-s"]
    assert gens == [poly(g) for g in want]


def test_removal_on_cubic():
    comps, _ = load("cubic")
    removal = remove_base_points_ruled(detect_ruled_form(comps))
    assert removal.iterations == 1
    assert removal.param == CUBIC_CHART
    assert [e.label for e in removal.log] == ["t -> 1/t+(0)", "t -> 1/((s)*t)"]


def test_removal_without_base_points_is_identity():
    removal = remove_base_points_ruled(CUBIC_CHART)
    assert removal.iterations == 0 and removal.param == CUBIC_CHART


def test_alphas_and_normality():
    a12, a13, a23 = compute_alphas(CUBIC_CHART)
    assert (a12, a13, a23) == (s - 1, -s, -2 * s + 1)
    assert normality_test(CUBIC_CHART) is False
    quartic_final = detect_ruled_form([P("-(3*s^2+s-t+1)*s"), P("t*s+t-4"), P("t*s+2*t-7")])
    assert normality_test(quartic_final) is True
    quintic = detect_ruled_form(load("quintic")[0])
    assert compute_alphas(quintic)[0] == poly("2*s^5-s^4+4*s^2+2")
    assert normality_test(quintic) is False


def test_a_polynomials_lead_to_line_forms():
    A12 = a_polynomials(CUBIC_CHART)[0]
    assert A12.lc_wrt("s") == x - y


def test_critical_lines():
    line = critical_line(CUBIC_CHART)
    assert line.implicit == (x - y, x - z, y - z)
    assert line.point == (0, 0, 0) and line.direction == (1, 1, 1)
    line5 = critical_line(detect_ruled_form(load("quintic")[0]))
    assert line5.implicit == (x - y - 2, x - z - 2, y - z)
    assert line5.parametric_exprs() == (t + 2, t, t)
    assert line5.at(3) == (5, 3, 3)


def test_second_parametrization_default_sign():
    H = second_parametrization(CUBIC_CHART)
    assert H[0] == RatFn(t)
    h0 = [substitute(h, {"s": 0}) for h in H]
    assert h0 == [RatFn(t)] * 3


def test_second_parametrization_display_sign():
    H = second_parametrization(CUBIC_CHART, k=3, offset_sign=1)
    assert H[0] == P("(s^3*t-2*s^3-s^2-2*s-t)/((s^2+1)*(s-1))")
    with pytest.raises(ValueError):
        second_parametrization(RuledParam((s, ZERO, ZERO), (ZERO, ONE, ZERO), ONE), k=1)


def test_second_parametrization_rejects_pole_at_zero():
    bad = RuledParam((ONE, ZERO, ZERO), (ONE, s, s**2 + 1), s**2 + s + 1)
    with pytest.raises(PipelineError):
        second_parametrization(bad, k=2)


def test_cover_reports():
    comps, F = load("cubic")
    rep = cover(comps)
    assert rep.normal is False and rep.secondary is not None
    assert rep.to_json()["line"]["parametric"] == {"point": ["0", "0", "0"], "direction": ["1", "1", "1"]}
    quartic = cover(load("quartic")[0])
    assert quartic.normal is True and quartic.secondary is None
    assert quartic.to_json()["secondary"] is None


def test_cover_plane():
    comps = [P("s"), P("t"), P("0")]
    rep = cover(comps)
    assert rep.cylinder is True and rep.normal is True
    assert all(pt[2] == 0 for pt in sample_points(rep.primary.components(), seed=1, n=5))
    assert implicit_check(rep.primary.components(), z)


def test_cover_log_reconstructs_primary():
    comps, _ = load("quartic")
    rep = cover(comps)
    out = tuple(comps)
    for sub in rep.log:
        out = sub.apply(out)
    assert out == rep.primary.components()
