"""Smoke tests for the Python bindings: the compiled module loads, the main
operations run on the shipped example documents, and failure modes surface as
Python exceptions."""

import json
import os

import pytest

import puniv

DATA = os.environ["PUNIV_DATA_DIR"]


def read(name: str) -> str:
    with open(os.path.join(DATA, name), encoding="utf-8") as handle:
        return handle.read()


def test_module_loads_with_docstring():
    assert "Poisson" in puniv.__doc__


def test_verify_accepts_the_example_algebra():
    report = json.loads(puniv.verify(read("ex_h3.json")))
    assert report["command"] == "verify"
    assert report["status"] == "ok"
    assert report["outputs"]["poisson"] is True
    assert report["failures"] == []


def test_verify_reports_a_jacobi_violation():
    doc = {
        "field": "Q",
        "dim": 3,
        "product": [],
        "bracket": [[1, 2, 2, 1], [2, 3, 1, 1]],
    }
    report = json.loads(puniv.verify(json.dumps(doc)))
    assert report["status"] == "verification-failed"
    assert report["failures"]


def test_universal_presentation_of_the_mixed_pair():
    text = puniv.universal(read("ex_dx.json"), read("ex_aff2.json"))
    assert text == puniv.universal(read("ex_dx.json"), read("ex_aff2.json"))
    report = json.loads(text)
    assert report["status"] == "ok"
    out = report["outputs"]
    assert out["raw_relation_count"] == 16
    assert out["groebner_basis"] == ["x12", "x22", "x11^2", "x11*x21"]


def test_bialgebra_report_on_the_three_dimensional_example():
    report = json.loads(puniv.bialgebra(read("ex_h3.json")))
    assert report["status"] == "ok"
    out = report["outputs"]
    assert out["delta"]["x11"] == "x11*x11'"
    assert out["delta"]["x21"] == "x22*x21' + x21*x11'"
    assert out["epsilon"]["x11"] == "1"
    assert out["epsilon"]["x21"] == "0"


def test_endomorphism_and_automorphism_counts():
    endo = json.loads(puniv.endomorphisms(read("ex_h3.json"), "F2"))
    assert endo["outputs"]["count"] == 12
    auto = json.loads(puniv.automorphisms(read("ex_h3.json"), "F2"))
    assert auto["outputs"]["order"] == 4
    assert auto["outputs"]["grouplike_count"] == 12


def test_grading_classification():
    report = json.loads(puniv.gradings(read("ex_h3.json"), "Z2", "F3", True))
    assert report["outputs"]["count"] == 4
    assert len(report["outputs"]["orbits"]) == 2


def test_tensor_module_and_presentations():
    tensor = json.loads(
        puniv.tensor_module(
            read("ex_dx.json"),
            read("ex_aff2.json"),
            read("ex_reg_dx.json"),
            read("ex_amod_line.json"),
        )
    )
    assert tensor["status"] == "ok"
    assert tensor["outputs"]["module"]["dim"] == 2
    pres = json.loads(
        puniv.presentation(
            "V",
            read("ex_dx.json"),
            read("ex_aff2.json"),
            read("ex_amod_line.json"),
            read("ex_adj_aff2.json"),
        )
    )
    assert pres["outputs"]["generators"] == ["y11", "y21"]


def test_input_errors_become_value_errors():
    with pytest.raises(ValueError):
        puniv.verify("{ not json")
    with pytest.raises(ValueError):
        puniv.automorphisms(read("ex_h3.json"), "")  # rational field, no --field


def test_guard_errors_become_runtime_errors():
    with pytest.raises(RuntimeError):
        puniv.endomorphisms(read("ex_h3.json"), "F1009")


def test_run_matches_the_cli_contract():
    code, text = puniv.run(["verify", os.path.join(DATA, "ex_h3.json")])
    assert code == 0
    assert json.loads(text)["status"] == "ok"
    code, text = puniv.run(["frobnicate"])
    assert code == 2
    assert json.loads(text)["status"] == "input-error"
