import pytest

from surfcover.oracle import cover_crosscheck, implicit_check, point_reachable, sample_points
from surfcover.polycore import MPoly
from surfcover.ruledcover import cover
from surfdata import P, load

z = MPoly.var("z")

CUBIC_CHART = [P("(s^2*t+s*t+t+1)/(s-1)"), P("(s^2*t+2*s*t+1)/(s-1)"), P("(s^2*t+t+1)/(s-1)")]
PLANE = [P("s"), P("t"), P("0")]


def test_implicit_check_examples():
    comps, F = load("cubic")
    assert implicit_check(comps, F)
    assert implicit_check(CUBIC_CHART, F)
    assert implicit_check(PLANE, z)
    assert not implicit_check([P("s"), P("t"), P("1")], z)
    with pytest.raises(ValueError):
        implicit_check(PLANE, MPoly.const(0))


def test_displayed_quintic_chart_is_on_the_surface():
    _, F = load("quintic")
    H = [
        P("-(s^5+s^4+2*s^3-t*s^2+4*s^2+t+2)/((s^3+s^2+1)*(s^2-1))"),
        P("(2*s^5*t-3*s^5-2*s^4-2*t*s^3-s^3+t*s^2-2*s^2-s-t)/((s^3+s^2+1)*(s^2-1))"),
        P("(t*s^2-2*s^2-t)/(s^2-1)"),
    ]
    assert implicit_check(H, F)


def test_point_reachable_examples():
    assert point_reachable(CUBIC_CHART, (0, 0, 0)) is False
    assert point_reachable(CUBIC_CHART, (1, 1, 1)) is True
    quintic = load("quintic")[0]
    assert point_reachable(quintic, (2, 0, 0)) is False
    assert point_reachable(PLANE, (3, -4, 0)) is True
    assert point_reachable(PLANE, (3, -4, 1)) is False


def test_point_reachable_agrees_with_grid_search():
    for pt in sample_points(CUBIC_CHART, seed=5, n=4):
        assert point_reachable(CUBIC_CHART, pt)


def test_sample_points_examples():
    pts = sample_points(PLANE, seed=1, n=3)
    assert len(pts) == 3 and all(p[2] == 0 for p in pts)
    assert sample_points(PLANE, seed=1, n=3) == pts
    _, F = load("cubic")
    for pt in sample_points(CUBIC_CHART, seed=9, n=6):
        assert F.value(dict(zip("xyz", pt))) == 0


def test_sample_points_skips_poles():
    comps = [P("1/(s-1)"), P("t"), P("0")]
    pts = sample_points(comps, seed=0, n=40)
    assert all(p[0] != 0 for p in pts)


def test_sample_points_budget():
    with pytest.raises(ValueError):
        sample_points(PLANE, n=0)
    with pytest.raises(RuntimeError):
        sample_points(PLANE, n=2, max_tries=1)


def test_crosscheck_cubic_and_quintic():
    for name in ("cubic", "quintic"):
        comps, F = load(name)
        verdict = cover_crosscheck(cover(comps), F, seed=3, n=5)
        assert verdict.passed, verdict.to_json()


def test_crosscheck_normal_report_checks_primary_only():
    comps, F = load("quartic")
    verdict = cover_crosscheck(cover(comps), F)
    assert verdict.passed and list(verdict.checks) == ["primary_on_surface"]


def test_crosscheck_reports_witness():
    comps, F = load("cubic")
    rep = cover(comps)
    h1, h2, h3 = rep.secondary
    rep.secondary = (h1 + 1, h2, h3)
    verdict = cover_crosscheck(rep, F, n=2)
    assert not verdict.passed
    assert verdict.checks["secondary_on_surface"] is False
    assert verdict.witnesses["secondary_at_s0_on_line"]
