import json

import pytest

from _brute import six_vertex_tree
from rootedpoly.cli import EXIT_CAP, EXIT_INPUT, EXIT_OK, main
from rootedpoly.graph import graph_from_json, graph_to_json
from rootedpoly.oracle import CHARACTERISTIC_STANDARD, simple_circuit_poly
from rootedpoly.poly import parse_poly


@pytest.fixture()
def files(tmp_path):
    out = {}
    docs = {
        "k2": {"p": 2, "edges": [{"a": 1, "b": 2}]},
        "k1": {"p": 1, "root": 1},
        "k1loop": {"p": 1, "loops": [{"at": 1, "b": 2}]},
        "twig": {"p": 2, "edges": [{"a": 1, "b": 2}], "root": 1},
        "tree": graph_to_json(six_vertex_tree()),
        "dendrimer": {"core": {"p": 1}, "unit": {"p": 2, "edges": [{"a": 1, "b": 2}], "root": 1},
                      "attach_sites": [2], "generations": 3},
        "bad": {"p": "two"},
    }
    for name, doc in docs.items():
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(doc))
        out[name] = str(path)
    out["dir"] = tmp_path
    return out


def test_poly_simple_characteristic(files, capsys):
    rc = main(["poly", files["k2"], "--mode", "characteristic-standard", "--simple"])
    assert rc == EXIT_OK
    assert capsys.readouterr().out.strip() == "x^2 - 1"


def test_poly_full_generic_with_loop(files, capsys):
    rc = main(["poly", files["k1loop"], "--full"])
    assert rc == EXIT_OK
    assert capsys.readouterr().out.strip() == "x1*w1 + 2*w1"


def test_poly_json_terms(files, capsys):
    rc = main(["poly", files["k2"], "--mode", "matching-minus", "--format", "json"])
    assert rc == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["text"] == "x^2 - 1"
    assert {"coeff": "-1", "monomial": {}} in doc["terms"]


def test_product_roundtrip_matches_library(files, capsys, tmp_path):
    out = str(tmp_path / "prod.json")
    rc = main(["product", files["tree"], "--restricted",
               "--h1", files["k1"], "--h2", files["twig"], "-o", out])
    assert rc == EXIT_OK
    doc = json.loads(open(out).read())
    assert len(doc["provenance"]) == 9
    built = graph_from_json({k: v for k, v in doc.items() if k != "provenance"})
    assert built.p == 9
    rc = main(["poly", out, "--mode", "characteristic-standard"])
    assert rc == EXIT_OK
    got = parse_poly(capsys.readouterr().out.strip())
    assert got == simple_circuit_poly(built, CHARACTERISTIC_STANDARD)


def test_product_gamma_arity_error(files, capsys):
    rc = main(["product", files["k2"], "--gamma", files["twig"]])
    assert rc == EXIT_INPUT
    assert "2 vertices" in capsys.readouterr().err


def test_product_gamma(files, capsys):
    rc = main(["product", files["k2"], "--gamma", files["twig"], files["twig"]])
    assert rc == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["p"] == 4


def test_bad_graph_exit_code(files, capsys):
    assert main(["poly", files["bad"]]) == EXIT_INPUT
    assert main(["poly", str(files["dir"] / "missing.json")]) == EXIT_INPUT


def test_cap_exit_code(files, monkeypatch, capsys):
    monkeypatch.setenv("ROOTEDPOLY_CAP", "1")
    assert main(["poly", files["k2"]]) == EXIT_CAP
    monkeypatch.setenv("ROOTEDPOLY_CAP", "9")
    assert main(["poly", files["k2"]]) == EXIT_OK
    monkeypatch.setenv("ROOTEDPOLY_CAP", "zero")
    assert main(["poly", files["k2"]]) == EXIT_INPUT


def test_explicit_cap_flag(files):
    assert main(["poly", files["tree"], "--cap", "5"]) == EXIT_CAP


def test_spectrum_text(files, capsys):
    rc = main(["spectrum", files["k2"]])
    assert rc == EXIT_OK
    out = capsys.readouterr().out
    assert "1" in out and "-1" in out


def test_spectrum_dendrimer_json(files, capsys):
    rc = main(["spectrum", "--dendrimer", files["dendrimer"], "--format", "json"])
    assert rc == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["degree"] == 4
    golden = (1 + 5 ** 0.5) / 2
    assert abs(float(doc["roots"][0]["re"]) - golden) < 1e-9


def test_spectrum_requires_input(files, capsys):
    assert main(["spectrum"]) == EXIT_INPUT


def test_verify_dendrimer_suite(files, capsys):
    rc = main(["verify", "--suite", "dendrimer"])
    assert rc == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["status"] == "pass"
    ids = {i["id"] for s in doc["suites"] for i in s["identities"]}
    assert "path-eigenvalues" in ids and "branch-monoid" in ids


def test_verify_failure_exit_code(files, capsys, monkeypatch):
    import rootedpoly.verify as verify_mod
    from rootedpoly.cli import EXIT_VERIFY

    def broken(cap=0, tol=0.0):
        report = verify_mod.SuiteReport("dendrimer")
        failing = verify_mod.IdentityReport("path-eigenvalues")
        failing.record(False, detail="forced")
        report.identities.append(failing)
        return report

    monkeypatch.setitem(verify_mod.SUITES, "dendrimer", broken)
    rc = main(["verify", "--suite", "dendrimer"])
    assert rc == EXIT_VERIFY
    assert json.loads(capsys.readouterr().out)["status"] == "fail"
