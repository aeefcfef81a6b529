from fastapi.testclient import TestClient

from tposc.service import app

client = TestClient(app)


def test_health():
    resp = client.get("/health")
    assert resp.status_code == 200
    assert resp.json() == {"status": "ok"}


def test_mg_endpoint():
    resp = client.post("/mg", json={"type": "A4", "witness": True})
    assert resp.status_code == 200
    data = resp.json()
    assert data["type"] == "A4"
    assert data["m"] == 4
    assert data["permutations_checked"] == 24
    assert data["witness"] is not None


def test_mg_case_insensitive_and_bad_type():
    assert client.post("/mg", json={"type": "g2"}).json()["m"] == 3
    resp = client.post("/mg", json={"type": "Z9"})
    assert resp.status_code == 400
    assert resp.json()["detail"]["code"] == "usage"


def test_mg_per_permutation():
    resp = client.post("/mg", json={"type": "A3", "per_permutation": True})
    data = resp.json()
    per = data["per_permutation_min"]
    assert len(per) == 6
    assert max(entry["m"] for entry in per) == data["m"] == 3
    # lexicographic enumeration order
    assert [entry["i"] for entry in per][:2] == [[1, 2, 3], [1, 3, 2]]


def test_check_tnn_true_and_false():
    good = {"n": 2, "entries": [["1", "1"], ["1", "2"]]}
    resp = client.post("/check", json={"matrix": good, "mode": "tnn"})
    assert resp.status_code == 200
    verdict = resp.json()["verdict"]
    assert verdict["ok"] and verdict["value"] and verdict["witness"] is None

    bad = {"n": 2, "entries": [["0", "1"], ["1", "0"]]}
    resp = client.post("/check", json={"matrix": bad, "mode": "tnn"})
    verdict = resp.json()["verdict"]
    assert not verdict["ok"]
    assert verdict["witness"] == {"rows": [1, 2], "cols": [1, 2], "value": "-1"}


def test_check_osc_reports_min_power():
    good = {"n": 2, "entries": [["1", "1"], ["1", "2"]]}
    resp = client.post("/check", json={"matrix": good, "mode": "osc"})
    verdict = resp.json()["verdict"]
    assert verdict["value"] is True
    assert verdict["min_power"] == 1


def test_check_cell_and_singular():
    x = {"n": 2, "entries": [["1", "1"], ["1", "2"]]}
    resp = client.post("/check", json={"matrix": x, "mode": "cell"})
    cell = resp.json()["verdict"]["cell"]
    assert cell["u"] == [1] and cell["v"] == [1]

    singular = {"n": 2, "entries": [["1", "1"], ["1", "1"]]}
    resp = client.post("/check", json={"matrix": singular, "mode": "cell"})
    assert resp.status_code == 409
    assert resp.json()["detail"]["code"] == "domain"


def test_check_minpow():
    ident = {"n": 2, "entries": [["1", "0"], ["0", "1"]]}
    resp = client.post("/check", json={"matrix": ident, "mode": "minpow"})
    verdict = resp.json()["verdict"]
    assert verdict["tnn"] is True
    assert verdict["min_power"] is None
    assert not verdict["ok"]


def test_check_bad_matrix_payload():
    broken = {"n": 2, "entries": [["1", "x/y"], ["1", "1"]]}
    resp = client.post("/check", json={"matrix": broken, "mode": "tnn"})
    assert resp.status_code == 400
    zero_den = {"n": 2, "entries": [["1", "1/0"], ["1", "1"]]}
    resp = client.post("/check", json={"matrix": zero_den, "mode": "tnn"})
    assert resp.status_code == 400
    # pydantic-level validation problems surface as 422
    resp = client.post("/check", json={"matrix": {"n": 2}, "mode": "tnn"})
    assert resp.status_code == 422


def test_factor_endpoint():
    payload = {
        "factorization": {
            "n": 2,
            "diag": ["1", "1"],
            "word": [-1, 1],
            "params": ["1", "1"],
        }
    }
    resp = client.post("/factor", json=payload)
    assert resp.status_code == 200
    verdict = resp.json()["verdict"]
    assert verdict["matrix"]["entries"] == [["1", "1"], ["1", "2"]]
    assert verdict["cell"]["u"] == [1] and verdict["cell"]["v"] == [1]
    assert verdict["predicted_min_tp_power"] == 1


def test_factor_empty_word_identity():
    payload = {
        "factorization": {"n": 3, "diag": ["1", "1", "1"], "word": [], "params": []}
    }
    verdict = client.post("/factor", json=payload).json()["verdict"]
    assert verdict["cell"]["u"] == [] and verdict["cell"]["v"] == []
    assert verdict["predicted_min_tp_power"] is None


def test_factor_demazure_cell_example():
    payload = {
        "factorization": {
            "n": 3,
            "diag": ["1", "1", "1"],
            "word": [1, 2, 1],
            "params": ["1", "2", "3"],
        }
    }
    verdict = client.post("/factor", json=payload).json()["verdict"]
    assert verdict["cell"]["u"] == []
    assert verdict["cell"]["v"] == [1, 2, 1]


def test_factor_rejects_nonpositive_parameter():
    payload = {
        "factorization": {
            "n": 2,
            "diag": ["1", "1"],
            "word": [1],
            "params": ["-1"],
        }
    }
    resp = client.post("/factor", json=payload)
    assert resp.status_code == 400
    assert resp.json()["detail"]["code"] == "usage"


def test_verify_endpoint():
    resp = client.post("/verify", json={"suite": "coxeter"})
    assert resp.status_code == 200
    verdict = resp.json()["verdict"]
    assert verdict["ok"] and verdict["passed"]

    resp = client.post("/verify", json={"suite": "unknown"})
    assert resp.status_code == 422


def test_verify_inputs_echoed():
    resp = client.post("/verify", json={"suite": "gp", "seed": 9, "trials": 2})
    data = resp.json()
    assert data["inputs"] == {"suite": "gp", "seed": 9, "trials": 2, "jobs": 1}
    assert data["verdict"]["seed"] == 9
