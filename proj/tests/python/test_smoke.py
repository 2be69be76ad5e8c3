import json
import os
import subprocess
from pathlib import Path

import pytest

import floerkit

DATA = Path(os.environ.get("FLOER_DATA", Path(__file__).resolve().parents[2] / "data"))
CLI = os.environ.get("FLOER_CLI")


def test_minus_trefoil_hfk():
    inv = floerkit.hfk(DATA / "specs" / "minus_trefoil.json")["invariants"]
    dims = {(e["m"], e["s"]): e["dim"] for e in inv["hfk_hat"]}
    assert dims == {(0, -1): 1, (1, 0): 1, (2, 1): 1}
    assert inv["genus"] == 1
    assert inv["fibered"] is True


def test_spec_from_dict_matches_file():
    path = DATA / "specs" / "trefoil_lspace.json"
    doc = json.loads(path.read_text())
    assert floerkit.hfk(doc) == floerkit.hfk(path)


def test_surgery_classes_and_verify():
    res = floerkit.surgery(DATA / "specs" / "minus_trefoil.json", 3, verify=True)["surgery"]
    assert res["method"] == "large"
    assert res["verified"] is True
    assert [c["spin_c"] for c in res["classes"]] == [-1, 0, 1]
    assert res["l_space"] is False
    assert res["h1"]["text"] == "Z/3"


def test_t34_five_surgery_is_lspace():
    assert floerkit.surgery(DATA / "specs" / "t34.json", 5)["surgery"]["l_space"] is True


def test_diagram_and_h1():
    d = floerkit.diagram(DATA / "trefoil_diagram.json")["diagram"]
    assert d["generator_count"] == 3
    assert floerkit.h1({"matrix": [[2]]})["h1"]["group"]["text"] == "Z/2"
    assert floerkit.h1(DATA / "matrices" / "z12.json")["h1"]["group"]["text"] == "Z/12"


def test_table_rendering():
    text = floerkit.table(floerkit.h1({"matrix": [[2]]}))
    assert "Z/2" in text


def test_errors():
    with pytest.raises(floerkit.SchemaError):
        floerkit.hfk({"type": "lspace", "alexander": 1.5})
    with pytest.raises(floerkit.DomainError):
        floerkit.surgery(DATA / "specs" / "unknot.json", 0)
    with pytest.raises(floerkit.SchemaError):
        floerkit.h1({"matrix": [[1, 2]]})


def test_corpus():
    rows = floerkit.corpus()
    assert rows and all(r["passed"] for r in rows)


@pytest.mark.skipif(not CLI, reason="command-line tool not built")
def test_cli_agrees_with_module():
    spec = DATA / "specs" / "figure_eight.json"
    out = subprocess.run([CLI, "surgery", str(spec), "--n", "1"], capture_output=True, text=True, check=True)
    assert json.loads(out.stdout) == floerkit.surgery(spec, 1)
