import json

import pytest

import spva

NS = """
odd psi
{psi, psi} = psi'' - 3/2*X^2*psi + 1/2*X*psi' - X^5
"""


def test_builtins_listed():
    names = spva.builtin_names()
    assert "osp(2|2)" in names


def test_w_algebra_generators():
    w = spva.w_algebra("osp22")
    assert list(w) == ["w1", "w2", "w3", "w4"]
    assert w["w1"] == "1/2*e1bar"
    assert w["w2"] == "-1/4*h2bar"


def test_run_hierarchy_json():
    code, out, err = spva.run(builtin="osp22", stage="hierarchy", format="json")
    assert code == 0, err
    report = json.loads(out)
    assert report["status"] == 0
    assert report["stages"]["hierarchy"]["hamiltonians"][1]["density"] == "4*w1*w4"


def test_run_rejects_small_window():
    code, _, _ = spva.run(builtin="osp22", stage="hierarchy", window=1)
    assert code == 2


def test_neveu_schwarz_axioms():
    assert spva.axioms(NS) == {"skew_symmetry": True, "jacobi": True}


def test_bracket_and_flow():
    assert spva.bracket(NS, "psi", "psi") != "0"
    quadratic = spva.flow(NS, "psi*psi'", "psi")
    assert "psi^(6)" in quadratic


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        spva.w_algebra("so(3)")
    with pytest.raises(ValueError):
        spva.bracket(NS, "psi +", "psi")
