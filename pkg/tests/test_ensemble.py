import pytest

from edgebiclique.ensemble import EnsembleConfig, Row, check_graph, parse_range, rows_to_csv, run_ensemble
from edgebiclique.catalog import catalog


def test_parse_range():
    assert parse_range("6..8") == [6, 7, 8]
    assert parse_range("5") == [5]


def test_config_validation():
    with pytest.raises(ValueError):
        EnsembleConfig(p_values=(1.2,))
    with pytest.raises(ValueError):
        EnsembleConfig(count=-1)


def test_same_seed_same_rows():
    config = EnsembleConfig(n_values=(5, 6), count=8, seed=42)
    a, b = run_ensemble(config), run_ensemble(config)
    assert rows_to_csv(a, timings=False) == rows_to_csv(b, timings=False)
    assert [r.seed for r in a] != [r.seed for r in run_ensemble(EnsembleConfig(n_values=(5, 6), count=8, seed=43))]


def test_combinations_cycle_in_order():
    rows = run_ensemble(EnsembleConfig(n_values=(5, 6), p_values=(0.1, 0.9), count=5, seed=0))
    assert [(r.n, r.p) for r in rows] == [(5, 0.1), (5, 0.9), (6, 0.1), (6, 0.9), (5, 0.1)]
    assert all(r.ok for r in rows)


def test_prism_row():
    row = check_graph(catalog("prism"), Row(None, 6, None))
    assert row.ok and row.conformal is False and row.helly is False and row.hhelly is False
    assert row.bicliques == 3 and row.m == 9
    fields = row.as_csv(timings=False)
    assert fields[:8] == ["", "6", "", "9", "3", "false", "false", "false"]
    assert fields[8] == "bicliques:1|lg:1|conformal:1|helly:1|hhelly:1"


def test_cap_violation_surfaces_as_error_row():
    row = check_graph(catalog("K15"), Row(None, 15, None))
    assert row.error is not None and not row.ok
    assert row.as_csv()[8].startswith("error:")
