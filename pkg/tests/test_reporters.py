from core.decomp.decomposition import ThetaTable
from core.exactnum import ONE, Cyclotomic, make_root
from core.pipeline.checks import run_pipeline
from core.reporters.csv_export import format_entry, theta_rows, theta_to_csv
from core.reporters.summary import render_summary


def test_format_entry_grammar():
    assert format_entry(ONE) == "1"
    assert format_entry(Cyclotomic.from_int(-1)) == "zeta(2)^1"
    assert format_entry(make_root(12, 5)) == "zeta(12)^5"
    assert format_entry(make_root(8, 2)) == "zeta(4)^1"
    assert format_entry(Cyclotomic.from_int(2)) == "[2]"
    assert format_entry(ONE + make_root(4, 1)) == "[1;1]"


def test_pauli_csv(pauli2):
    rows = theta_rows(pauli2.expected_theta)
    assert rows[0] == ["", "(0,0)", "(0,1)", "(1,0)", "(1,1)"]
    assert rows[2] == ["(0,1)", "1", "1", "zeta(2)^1", "zeta(2)^1"]
    text = theta_to_csv(pauli2.expected_theta)
    assert text.splitlines()[0] == ",(0,0),(0,1),(1,0),(1,1)"


def test_csv_without_labels_uses_positions():
    table = ThetaTable.from_entries([[1, 1], [1, -1]])
    assert theta_rows(table)[0] == ["", "1", "2"]


def test_summary_lists_every_step(non_realizable):
    report = run_pipeline(non_realizable.decomposition, source="non-realizable")
    text = render_summary(report)
    assert text.startswith("Checks for non-realizable (seed 0): FAIL")
    for step in report.steps:
        assert step.check in text
    assert "verdict" in text
    assert "duplicates" in text


def test_summary_shows_skip_reasons(grassmann3):
    report = run_pipeline(grassmann3.decomposition, steps=["reconstruct-group"], budget=2)
    text = render_summary(report)
    assert "SKIPPED (reconstruction needs m = dim R" in text
