import csv
import io
import json
import os

from rubikmap import maps, report
from rubikmap.verifier import run_suite

_REPORTS = None


def reports():
    global _REPORTS
    if _REPORTS is None:
        _REPORTS = run_suite([maps.prism(3), maps.theta()])
    return _REPORTS


def test_csv_columns_and_rows():
    text = report.to_csv(reports())
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["name", "V", "E", "F", "all_odd", "order", "h1", "h2",
                       "h3", "vertex_image", "predicted", "pass", "seconds"]
    assert len(rows) == 3
    assert rows[1][0] == "prism3"
    assert rows[2][0] == "theta"
    assert rows[2][5] == ""  # errored entry has no order


def test_doc_mirrors_csv_fields():
    doc = report.to_doc(reports())
    entry = doc["reports"][0]
    assert set(entry) == {"name", "V", "E", "F", "all_odd", "order", "h1",
                          "h2", "h3", "vertex_image", "predicted", "pass",
                          "seconds", "error"}
    assert entry["error"] is None
    assert doc["reports"][1]["error"].startswith("OutOfConjectureScope")
    json.dumps(doc)  # serializable


def test_table_renders():
    text = report.to_table(reports())
    assert "prism3" in text and "theta" in text
    assert text.splitlines()[0].split()[0] == "name"


def test_outputs_and_figures(tmp_path):
    paths = report.write_outputs(reports(), str(tmp_path))
    names = {os.path.basename(p) for p in paths}
    assert names == {"suite.csv", "suite.json", "orders.png", "timings.png"}
    for p in paths:
        assert os.path.getsize(p) > 0
