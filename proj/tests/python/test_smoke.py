import json
import pathlib

import jsonschema
import pytest

import xytr

ROOT = pathlib.Path(__file__).resolve().parents[2]
DATA = ROOT / "tests" / "data"
SCHEMA = json.loads((ROOT / "docs" / "report.schema.json").read_text())


def test_airy_three_point():
    assert xytr.tr("z^2", "z", 0, 3) == "-1/16/(z1^3*z2^3*z3^3)"


def test_tree_counts():
    assert [xytr.tree_count(0, m) for m in (2, 3, 4)] == [1, 4, 29]
    assert xytr.run(["trees", "--n", "0", "--m", "4", "--count"])[1] == "29\n"


def test_airy_tree_sum_vanishes():
    assert xytr.xy("z^2", "z", 0, 3) == "0"


def test_errors():
    with pytest.raises(xytr.CurveRejected):
        xytr.fingerprint("z^3", "z")
    with pytest.raises(xytr.SyntaxError):
        xytr.fingerprint("z^(-1)", "z")
    assert xytr.run(["tr", "--curve", str(DATA / "rejected.curve")])[0] == 3


@pytest.mark.parametrize(
    "args",
    [
        ["verify", "--curve", str(DATA / "q.curve"), "--suite", "genus1"],
        ["free", "--curve", str(DATA / "free.curve"), "--order", "4"],
        ["tr", "--curve", str(DATA / "q.curve"), "--g", "1", "--n", "1"],
        ["trees", "--n", "1", "--m", "2"],
    ],
)
def test_json_output_matches_schema(args):
    code, doc, _ = xytr.run_json(args)
    assert code == 0
    jsonschema.validate(doc, SCHEMA)
    assert doc["tool_version"] == xytr.version()
