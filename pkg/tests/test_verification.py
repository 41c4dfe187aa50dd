import io
import json

import pytest

from PlanarEuler.canonical_utils import canonical_graph
from PlanarEuler.enumeration.graphs import CatalogEntry
from PlanarEuler.generator_utils import complete_bipartite
from PlanarEuler.graph_io import write_graph6
from PlanarEuler.verification.report import Status, TheoremReport, VerifyConfig
from PlanarEuler.verification.sweep import (
    FRONTIER_COLUMNS,
    SWEEP_COLUMNS,
    frontier_rows,
    linear_caps,
    sweep_rows,
    write_csv,
)
from PlanarEuler.verification.theorems import (
    atlas_classes,
    run_verifiers,
    verify_corollary,
    verify_infrastructure,
    verify_lemma1,
    verify_lemma2,
    verify_polynomial,
    verify_small_levels,
    verify_theorem1,
    verify_theorem2,
    verify_theorem3,
    verify_theorem4,
    verify_theorem5,
)

QUICK = VerifyConfig(bound=2000, enumerated_tree_order=6, enumeration_max_order=6, relabel_sample=40, relabelings=10, roundtrip_order=5)


def test_report_invariant():
    with pytest.raises(ValueError):
        TheoremReport("1", Status.REFUTED, "nothing")
    with pytest.raises(ValueError):
        TheoremReport("1", Status.VERIFIED, "nothing", counterexamples=({"n": 3},))
    assert TheoremReport.conclude("1", "d", [], 0.1).status is Status.VERIFIED
    assert TheoremReport.conclude("1", "d", [], 0.1, partial=True).status is Status.PARTIAL
    assert TheoremReport.conclude("1", "d", [{"n": 3}], 0.1, partial=True).status is Status.REFUTED


def test_report_json_round_trip():
    report = TheoremReport.conclude(
        "lemma2", "orders 7 and 8", [{"graph6": "Dhc", "fvector": [5, 5, 2]}], 1.25, {"checked": {"7": 3}}
    )
    assert TheoremReport.from_json(report.to_json()) == report
    assert not report.ok
    assert json.loads(report.to_json())["status"] == "refuted"


def test_config_from_json(tmp_path):
    path = tmp_path / "args.json"
    path.write_text(json.dumps({"bound": 500, "lemma2_orders": [7], "jobs": 2}))
    config = VerifyConfig.from_json(path)
    assert config.bound == 500 and config.lemma2_orders == (7,) and config.jobs == 2
    assert config.override(bound=None, jobs=1) == VerifyConfig(bound=500, lemma2_orders=(7,), jobs=1)
    assert VerifyConfig.from_dict(config.to_dict()) == config


def test_config_rejects_unknown_keys(tmp_path):
    path = tmp_path / "args.json"
    path.write_text(json.dumps({"bound": 500, "n_signal_samples": 10}))
    with pytest.raises(ValueError, match="unknown configuration keys"):
        VerifyConfig.from_json(path)


def test_config_validation():
    with pytest.raises(ValueError):
        VerifyConfig(bound=10)
    with pytest.raises(ValueError):
        VerifyConfig(jobs=0)


def test_theorem1():
    report = verify_theorem1()
    assert report.status is Status.VERIFIED
    assert report.details["tree_counts"] == {"1": 1, "2": 1, "3": 1, "4": 2, "5": 3, "6": 6, "7": 11, "8": 23}


def test_theorem2():
    report = verify_theorem2()
    assert report.status is Status.VERIFIED
    assert report.details["pairs"] == 78
    assert report.details["exceptions"] == [[1, 1], [1, 2], [1, 3], [1, 4], [2, 2], [2, 3]]


def test_theorem3():
    report = verify_theorem3()
    assert report.status is Status.VERIFIED
    assert report.details["general_equality"] == [18]
    assert report.details["triangle_free_equality"] == [10]
    assert report.details["general_window"] == [3, 17]
    assert report.details["triangle_free_window"] == [3, 9]


def test_corollary():
    report = verify_corollary()
    assert report.status is Status.VERIFIED
    assert report.details["complex_orders"] == [3, 17]
    assert report.details["complex_edge_counts_at_17"] == [44, 45]


def test_small_levels():
    report = verify_small_levels()
    assert report.status is Status.VERIFIED
    assert report.details["classes"]["4"] == {"real": 0, "complex": 6}
    assert report.details["classes"]["5"]["real"] == 3
    assert report.details["classes"]["6"]["real"] == 6 + 13


def test_lemma1():
    report = verify_lemma1(QUICK)
    assert report.status is Status.VERIFIED
    assert report.details["max_edges"]["6"] == [12, 8]


def test_lemma2_is_partially_checked():
    report = verify_lemma2(VerifyConfig(lemma2_orders=(7,)))
    assert report.status is Status.PARTIAL
    assert report.details["checked_deletions"]["7"] > 0
    assert report.details["cascade_fvectors"] == [[9, 14, 7], [8, 12, 6], [7, 10, 5]]


@pytest.mark.slow
def test_lemma2_full():
    assert verify_lemma2().status is Status.PARTIAL


def test_theorem5():
    report = verify_theorem5()
    assert report.status is Status.VERIFIED
    assert report.details["catalog_size"] == report.details["atlas_catalog_size"] == 6
    assert report.details["catalog_bipartite"] == 2
    assert report.details["published_catalog_size"] == 12
    k25 = CatalogEntry.from_graph(complete_bipartite(2, 5)).canonical
    assert k25 in report.details["extension_without_biconnected_parent"]
    assert all(report.details["extension_parents"].values())
    assert report.details["extension_bipartite"] == report.details["extension_size"]


def test_atlas_classes():
    assert len(atlas_classes((7, 9, 4))) == 6
    assert len(atlas_classes((7, 9, 4), biconnected=False)) > 6
    assert write_graph6(canonical_graph(complete_bipartite(2, 4))) in atlas_classes((6, 8, 4))
    with pytest.raises(ValueError, match="atlas"):
        atlas_classes((8, 10, 4))


@pytest.mark.slow
def test_theorem4():
    report = verify_theorem4()
    assert report.status is Status.VERIFIED
    assert set(report.details["classes_by_order"]) == {"7", "8", "9"}


def test_theorem4_smaller_range():
    report = verify_theorem4(VerifyConfig(lattice_min=7, lattice_max=7))
    assert report.status is Status.VERIFIED


def test_polynomial_quick():
    report = verify_polynomial(QUICK)
    assert report.status is Status.VERIFIED
    assert [6, 6, 2] in report.details["boundary_fvectors"]


@pytest.mark.slow
def test_polynomial_full():
    assert verify_polynomial().status is Status.VERIFIED


def test_infrastructure_quick():
    report = verify_infrastructure(QUICK)
    assert report.status is Status.VERIFIED
    assert report.details["roundtrip_graphs"] == 34


@pytest.mark.slow
def test_infrastructure_full():
    report = verify_infrastructure()
    assert report.status is Status.VERIFIED
    assert report.details["roundtrip_graphs"] == 1044
    assert report.details["relabel_sample"] == 1000


def test_run_verifiers_order_and_dedup():
    reports = run_verifiers(["2", "3", "2"], QUICK)
    assert [r.theorem for r in reports] == ["2", "3"]


def test_run_verifiers_in_process_pool():
    reports = run_verifiers(["2", "corollary"], QUICK.override(jobs=2))
    assert [r.status for r in reports] == [Status.VERIFIED, Status.VERIFIED]


def test_run_verifiers_unknown():
    with pytest.raises(ValueError, match="unknown theorem"):
        run_verifiers(["6"])


def test_sweep_rows():
    rows = list(sweep_rows(6))
    assert rows[0] == {"f0": 1, "f1": 0, "f2": 1, "delta": -7, "verdict": "complex", "lemma1a_cap": 0, "lemma1b_cap": 0}
    six = {row["f1"]: row["verdict"] for row in rows if row["f0"] == 6}
    assert six == {5: "real", 6: "real", 7: "complex", 8: "complex", 9: "complex", 10: "complex", 11: "complex", 12: "complex"}
    assert linear_caps(10) == (24, 16)


def test_frontier_rows_and_csv():
    rows = list(frontier_rows(18, 17))
    assert rows == [
        {"f0": 17, "quadratic_cap": 43, "lemma1a_cap": 45, "lemma1b_cap": 30},
        {"f0": 18, "quadratic_cap": 48, "lemma1a_cap": 48, "lemma1b_cap": 32},
    ]
    out = io.StringIO()
    assert write_csv(rows, FRONTIER_COLUMNS, out) == 2
    assert out.getvalue().splitlines() == ["f0,quadratic_cap,lemma1a_cap,lemma1b_cap", "17,43,45,30", "18,48,48,32"]
    out = io.StringIO()
    write_csv(sweep_rows(3), SWEEP_COLUMNS, out)
    assert out.getvalue().splitlines()[0] == ",".join(SWEEP_COLUMNS)


def test_sweep_rejects_bad_range():
    with pytest.raises(ValueError):
        list(sweep_rows(3, 5))
