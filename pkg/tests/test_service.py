"""The HTTP facade: endpoints, error mapping, payload shapes."""

import pytest
from fastapi.testclient import TestClient

from kummer.service import app

FIELD_ORDER = [
    "input",
    "galois_class",
    "projective_image",
    "integrable_pullback",
    "integrable_isogeny",
    "affine_subgroupoid",
    "minimal",
    "n_minimal_all_n",
    "product_rigidity",
    "acts_diagonally",
    "rational_sym2_basis",
]


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_classify_returns_report_and_text(client):
    response = client.post("/classify", json={"expression": "-2"})
    assert response.status_code == 200
    body = response.json()
    assert list(body["report"]) == FIELD_ORDER
    assert body["report"]["galois_class"] == "torus_infinite"
    assert body["report"]["affine_subgroupoid"] == {
        "u": "1",
        "r": "-2",
        "operator": ["0", "-2", "1"],
    }
    assert (
        "minimal: No (rational Riccati solution u = 1; affine reduction r = -2)"
        in body["text"]
    )


def test_classify_honors_variable(client):
    response = client.post(
        "/classify", json={"expression": "-2*t", "var": "t"}
    )
    assert response.status_code == 200
    assert response.json()["report"]["input"] == "-2*t"

    mismatch = client.post(
        "/classify", json={"expression": "-2*x", "var": "t"}
    )
    assert mismatch.status_code == 400


def test_syntax_error_maps_to_400_with_position(client):
    response = client.post("/classify", json={"expression": "x + y"})
    assert response.status_code == 400
    detail = response.json()["detail"]
    assert detail["error"] == "syntax"
    assert detail["position"] == 4


def test_unsupported_poles_map_to_422_with_factor(client):
    response = client.post("/classify", json={"expression": "1/(x^2-2)"})
    assert response.status_code == 422
    detail = response.json()["detail"]
    assert detail["error"] == "unsupported_poles"
    assert detail["residual_factor"] == "x^2-2"


def test_batch_preserves_order(client):
    response = client.post(
        "/batch", json={"expressions": ["-2", "0", "-2*x"]}
    )
    assert response.status_code == 200
    reports = response.json()["reports"]
    assert [r["input"] for r in reports] == ["-2", "0", "-2*x"]
    assert [r["galois_class"] for r in reports] == [
        "torus_infinite",
        "projectively_trivial",
        "full_sl2",
    ]


def test_batch_error_names_the_line(client):
    response = client.post(
        "/batch", json={"expressions": ["-2", "x^", "0"]}
    )
    assert response.status_code == 400
    detail = response.json()["detail"]
    assert detail["error"] == "syntax"
    assert detail["line"] == 2


def test_selfcheck_reports_every_check(client):
    response = client.get("/selfcheck")
    assert response.status_code == 200
    body = response.json()
    assert body["passed"] is True
    assert len(body["checks"]) == 7
    assert all(c["passed"] for c in body["checks"])
