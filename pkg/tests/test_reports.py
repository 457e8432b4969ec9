from git_topo.connectivity import CONTRACTIBLE
from git_topo.families.control import ControlFamily
from git_topo.families.dag import DagFamily
from git_topo.families.quiver import kronecker_spec
from git_topo.groups import OrbitConvention
from git_topo.harness import TrialConfig, sample_generic_points
from git_topo.reports import (
    build_connectivity_report,
    dag_thresholds,
    render_connectivity_text,
    render_harness_text,
    render_status_text,
)
from git_topo.families import stability_status
from git_topo.harness import draw_instance


def test_dag_thresholds_formula():
    assert dag_thresholds(DagFamily(10, 3)) == (
        ("path_connected_from_n", 5),
        ("simply_connected_from_n", 6),
    )
    assert dag_thresholds(DagFamily(4, 2)) == (
        ("path_connected_from_n", 3),
        ("simply_connected_from_n", 4),
    )


def test_build_report_defaults_per_family():
    assert build_connectivity_report(kronecker_spec()).convention is OrbitConvention.PARABOLIC
    assert build_connectivity_report(ControlFamily(3, 2)).convention is OrbitConvention.PARABOLIC
    assert build_connectivity_report(DagFamily(10, 3)).convention is OrbitConvention.CENTRALIZER


def test_build_report_single_state_control_is_contractible():
    report = build_connectivity_report(ControlFamily(1, 2))
    assert report.strata == ()
    assert report.d_min is None
    assert report.connectivity == CONTRACTIBLE
    assert any("V^st = V" in n for n in report.notes)


def test_render_kronecker_lines():
    lines = render_connectivity_text(build_connectivity_report(kronecker_spec()))
    assert lines[0] == "family: quiver"
    assert lines[1] == "convention: parabolic"
    assert "  sub_dim=(1, 0): m=2, orbit_dim=0, value=4" in lines
    assert "d_min = 4" in lines
    assert "connectivity: 2 (π_q(V^st)=0 for q ≤ 2)" in lines


def test_render_contractible_lines():
    lines = render_connectivity_text(build_connectivity_report(ControlFamily(1, 2)))
    assert "strata: none" in lines
    assert "d_min: none (no destabilizing classes: V^st = V)" in lines
    assert "connectivity: contractible (V^st is all of V)" in lines


def test_render_dag_threshold_line():
    lines = render_connectivity_text(
        build_connectivity_report(DagFamily(10, 3), max_q=5)
    )
    assert "thresholds: path-connected for n ≥ 5, simply connected for n ≥ 6" in lines
    assert "homotopy:" in lines
    assert "  q=2: Z^2" in lines


def test_render_status_orders_evidence_keys():
    cfg = TrialConfig(ControlFamily(2, 1), trials=1, seed=0)
    status = stability_status(draw_instance(cfg, 0))
    lines = render_status_text("control", status)
    assert lines[0] == "family: control"
    assert lines[1].startswith("verdict: ")


def test_render_harness_counters():
    report = sample_generic_points(TrialConfig(DagFamily(4, 2), trials=10, seed=0))
    lines = render_harness_text(report)
    assert lines[0] == "op: generic_points"
    assert "trials_run = 10" in lines
    assert any(line.startswith("elapsed_ms = ") for line in lines)
