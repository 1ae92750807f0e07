import json
import subprocess
import sys
from pathlib import Path

import pytest

from tautilt import io
from tautilt.cli import run
from tautilt.corpus import linear_a
from tautilt.field import Field
from tautilt.rep import is_isomorphic, min_presentation, simple, tau

DATA = Path(__file__).resolve().parents[1] / "demos" / "data"


def write(tmp_path, doc, name="in.json"):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


def test_algebra_info():
    code, out, _ = run(["algebra-info", str(DATA / "a2.json")])
    assert code == 0 and out.splitlines()[0] == "dim 3"
    code, out, _ = run(["algebra-info", str(DATA / "semisimple3.json")])
    assert code == 0 and out.splitlines()[0] == "dim 3, semisimple"


def test_malformed_relation_exit_code():
    code, out, err = run(["algebra-info", str(DATA / "bad_relation.json")])
    assert code == 2 and "NonAdmissibleRelation" in err and out == ""


def test_missing_file_and_bad_handle(tmp_path):
    assert run(["rigid", str(tmp_path / "nope.json"), "P0[0]"])[0] == 2
    assert run(["rigid", str(DATA / "a2.json"), "P7[0]"])[0] == 2
    assert run(["rigid", str(DATA / "a2.json"), "X"])[0] == 2
    assert run(["no-such-command"])[0] == 2


def test_e_dim_and_rigid():
    a3 = str(DATA / "a3_linear.json")
    assert run(["e-dim", a3, "P0[1]", "P0[0]"])[1] == "1\n"
    assert run(["rigid", a3, "f"])[1] == "true\n"
    assert run(["rigid", a3, "P0[0]+P0[1]"])[1] == "false\n"
    code, out, _ = run(["--format", "json", "e-dim", a3, "f", "S1"])
    assert code == 0 and json.loads(out) == {"e_dim": 0}


def test_min_pres_and_tau_files():
    a3 = str(DATA / "a3_linear.json")
    A = linear_a(3)
    code, out, _ = run(["--format", "json", "min-pres", a3, "S0"])
    doc = json.loads(out)
    f = io.presentation_from_json(A, doc["presentations"]["f"])
    assert f == min_presentation(simple(A, 0))
    code, out, _ = run(["--format", "json", "tau", a3, "M"])
    M = io.module_from_json(A, json.loads(out)["modules"]["tau"])
    src = io.module_from_json(A, json.load(open(a3))["modules"]["M"])
    assert is_isomorphic(M, tau(src))


def test_complete_reports():
    a3 = str(DATA / "a3_linear.json")
    code, out, _ = run(["--format", "json", "complete", a3, "P1[1]"])
    assert code == 0
    assert [0, -1, 0] in json.loads(out)["g_matrix"]
    code, out, _ = run(["complete", a3, "S0+S1"])
    assert code == 1


def test_mutate_twice_returns(tmp_path):
    a3 = str(DATA / "a3_linear.json")
    for k in range(3):
        code, out, _ = run(["--format", "json", "mutate", a3, "A[0]", str(k)])
        assert code == 0
        doc = json.loads(out)
        assert all(doc["exchange"]["checks"].values())
        p = write(tmp_path, doc, f"m{k}.json")
        code, out, _ = run(["--format", "json", "mutate", p, doc["object"], str(k)])
        assert json.loads(out)["g_matrix"] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_mutate_rejects_non_silting():
    a3 = str(DATA / "a3_linear.json")
    assert run(["mutate", a3, "P0[0]+P1[0]", "0"])[0] == 1
    assert run(["mutate", a3, "A[0]", "5"])[0] == 2


def test_graph_formats_and_cap():
    a2 = str(DATA / "a2.json")
    code, out, _ = run(["--format", "dot", "graph", a2])
    assert code == 0 and out.startswith("digraph") and out.count("->") == 5
    code, out, _ = run(["--format", "json", "graph", a2])
    doc = json.loads(out)
    assert doc["complete"] and len(doc["vertices"]) == 5 and len(doc["edges"]) == 5
    assert all(all(e["checks"].values()) for e in doc["edges"])
    code, out, _ = run(["--cap-vertices", "3", "graph", str(DATA / "a3_linear.json")])
    assert code == 3 and "incomplete" in out


def test_output_is_byte_stable(tmp_path):
    a3 = str(DATA / "a3_linear.json")
    outs = {run(["--seed", str(s), "--format", "json", "graph", a3])[1] for s in (0, 1, 7)}
    assert len(outs) == 1
    target = tmp_path / "g.dot"
    code, out, _ = run(["--format", "dot", "--out", str(target), "graph", a3])
    assert code == 0 and out == "" and target.read_text().startswith("digraph")


def test_field_override():
    a3 = str(DATA / "a3_linear.json")
    p = run(["graph", a3])[1].splitlines()[0]
    q = run(["--field", "Q", "graph", a3])[1].splitlines()[0]
    assert p == q == "14 silting objects, 21 edges"


def test_options_after_subcommand():
    a2 = str(DATA / "a2.json")
    assert run(["graph", a2, "--format", "dot"])[1].startswith("digraph")


def test_module_entrypoint():
    proc = subprocess.run([sys.executable, "-m", "tautilt", "algebra-info", str(DATA / "a2.json")],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("dim 3")


def test_algebra_and_module_json_round_trip(field):
    A = linear_a(3, field)
    doc = io.algebra_to_json(A)
    B = io.algebra_from_json(json.loads(json.dumps(doc)))
    assert B.dim == A.dim and B.field.descriptor() == field.descriptor()
    M = tau(simple(A, 1))
    N = io.module_from_json(A, json.loads(json.dumps(io.module_to_json(M))))
    assert is_isomorphic(M, N)


def test_rational_coefficients_in_relations():
    doc = {"vertices": 4, "arrows": [[0, 0, 1], [1, 1, 3], [2, 0, 2], [3, 2, 3]],
           "relations": [[["1/2", [0, 1]], ["-1", [2, 3]]]], "nilpotency_bound": 3,
           "field": {"rationals": True}}
    assert io.algebra_from_json(doc).dim == 9
    assert io.algebra_from_json(doc, Field(7)).dim == 9
