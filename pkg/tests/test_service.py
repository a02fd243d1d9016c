"""HTTP endpoints: shapes, frozen values, and validation failures."""

from fastapi.testclient import TestClient

from torusfloer import __version__
from torusfloer.service import app

client = TestClient(app)


def test_health():
    resp = client.get("/health")
    assert resp.status_code == 200
    assert resp.json() == {"status": "ok", "version": __version__}


def test_compute_endpoint():
    resp = client.get("/compute/3/4")
    assert resp.status_code == 200
    data = resp.json()
    assert data["pair"] == {"p": 3, "q": 4}
    assert data["invariants"]["d"] == -2
    assert data["invariants"]["delta"] == 3
    assert data["d_routes"] == {"tau": -2, "dedekind": -2, "gap_count": -2, "signature": -2}
    assert data["seifert_plus"]["euler"] == "-1/132"
    assert data["hf"]["plus"]["towers"][0] == {
        "grading": -2,
        "length": "infinite",
        "multiplicity": 1,
    }
    assert data["hf"]["minus"]["d"] == 0
    assert data["tau"]["minus"]["minima_positions"] is None
    assert data["inequalities"]["alternating_bound_holds"] is True


def test_compute_normalizes_order():
    assert client.get("/compute/4/3").json() == client.get("/compute/3/4").json()


def test_compute_rejects_bad_pairs():
    assert client.get("/compute/4/6").status_code == 422
    assert client.get("/compute/1/5").status_code == 422


def test_compute_rejects_over_ceiling():
    resp = client.get("/compute/3/4", params={"max_product": 10})
    assert resp.status_code == 422
    assert "ceiling" in resp.json()["detail"]


def test_table_endpoint():
    resp = client.get("/table", params={"p_max": 2, "q_max": 3, "columns": "d,sigma"})
    assert resp.status_code == 200
    assert resp.json() == {"header": ["p", "q", "d", "sigma"], "rows": [[2, 3, -2, -2]]}


def test_table_empty_range():
    resp = client.get("/table", params={"p_max": 2, "q_max": 2})
    assert resp.status_code == 200
    assert resp.json()["rows"] == []


def test_table_unknown_column():
    resp = client.get("/table", params={"p_max": 2, "q_max": 3, "columns": "bogus"})
    assert resp.status_code == 422


def test_verify_endpoint():
    resp = client.get(
        "/verify", params={"p_max": 6, "q_max": 6, "suites": "d-agreement,duality"}
    )
    assert resp.status_code == 200
    data = resp.json()
    assert data["passed"] is True
    assert [s["name"] for s in data["suites"]] == ["d-agreement", "duality"]
    assert all(s["passed"] and s["checks"] > 0 and s["failures"] == [] for s in data["suites"])


def test_verify_unknown_suite():
    resp = client.get("/verify", params={"p_max": 4, "q_max": 4, "suites": "nope"})
    assert resp.status_code == 422


def test_diagram_csv():
    resp = client.get("/diagram/3/4", params={"which": "minus", "format": "csv"})
    assert resp.status_code == 200
    assert resp.headers["content-type"].startswith("text/csv")
    lines = resp.text.strip().split("\n")
    assert lines[0] == "surgery,position,value"
    values = [int(line.split(",")[2]) for line in lines[1:]]
    assert values == [0, 1, -2, -1, -3, -2, -3, -1, -2, 1, 0]
    assert all(line.startswith("minus,") for line in lines[1:])


def test_diagram_json():
    resp = client.get("/diagram/2/3", params={"which": "both", "format": "json"})
    assert resp.status_code == 200
    data = resp.json()
    assert [part["surgery"] for part in data] == ["minus", "plus"]
    assert data[0]["teeth"] == [1] and data[0]["corners"] == [0, 1, 0]
    assert data[1]["teeth"] == [] and data[1]["corners"] == [0]


def test_diagram_dot():
    resp = client.get("/diagram/3/4", params={"which": "plus", "format": "dot"})
    assert resp.status_code == 200
    assert resp.text.startswith("digraph towers {")
    assert 'label="T_{-2}(inf)^1"' in resp.text
    assert 'label="T_{0}(1)^2"' in resp.text
    assert "cluster_plus" in resp.text and "cluster_minus" not in resp.text


def test_diagram_validation():
    assert client.get("/diagram/3/4", params={"which": "sideways"}).status_code == 422
    assert client.get("/diagram/3/4", params={"format": "svg"}).status_code == 422
    assert client.get("/diagram/4/6").status_code == 422
