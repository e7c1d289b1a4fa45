import pytest

from app import app
from services import polygon


@pytest.fixture
def client():
    app.config["TESTING"] = True
    return app.test_client()


def test_health(client):
    assert client.get("/api/health").get_json() == {"status": "ok"}


def test_config_lists_environment(client):
    data = client.get("/api/config").get_json()
    assert data["STOKES_MAX_K"]["value"] >= 1
    assert "description" in data["STOKES_SAMPLE_POINTS"]


def test_run_check(client):
    resp = client.post("/api/checks/monodromy", json={"K": 1})
    assert resp.status_code == 200
    body = resp.get_json()
    assert body["check"] == "monodromy"
    assert all(item["status"] == "pass" for item in body["items"])


def test_unknown_check(client):
    assert client.post("/api/checks/nope", json={}).status_code == 404


def test_bad_parameters(client):
    resp = client.post("/api/checks/monodromy", json={"K": 0})
    assert resp.status_code == 400
    assert "error" in resp.get_json()


def test_check_with_triangulation_body(client):
    T = polygon.flip(polygon.fan_triangulation(2), 4)
    resp = client.post("/api/checks/form", json={"triangulation": T.to_json()})
    assert resp.status_code == 200
    assert resp.get_json()["parameters"]["K"] == 2


def test_fan(client):
    assert client.post("/api/triangulation/fan", json={}).status_code == 400
    body = client.post("/api/triangulation/fan", json={"K": 2}).get_json()
    assert body["dynkin_a"] is True
    assert body["orientation"] == [1, 1, 1]
    assert body["quiver"]["labels"] == ["y1", "y2", "y3", "y4"]


def test_flip(client):
    fan = polygon.fan_triangulation(2).to_json()
    assert client.post("/api/triangulation/flip", json={"triangulation": fan}).status_code == 400
    body = client.post("/api/triangulation/flip", json={"triangulation": fan, "diagonal": 2}).get_json()
    assert body["case"]["case"] == 1
    assert body["case"]["new_diagonal"] == [1, 3]
    assert body["quiver"]["B"] == [[0, -1, 0, 0], [1, 0, -1, 0], [0, 1, 0, 1], [0, 0, -1, 0]]


def test_flip_bad_diagonal(client):
    fan = polygon.fan_triangulation(2).to_json()
    resp = client.post("/api/triangulation/flip", json={"triangulation": fan, "diagonal": [1, 3]})
    assert resp.status_code == 400
