import pytest
from fastapi.testclient import TestClient

from bottom_schur.api import MAX_RANGE, app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


class TestStatus:
    def test_healthz(self, client):
        response = client.get("/healthz")
        assert response.status_code == 200
        assert response.json()["status"] == "healthy"

    def test_api_status(self, client):
        data = client.get("/api").json()
        assert data["status"] == "running"
        assert data["api_version"] == "v1"


class TestComputation:
    def test_bottom_all_routes(self, client):
        response = client.get("/v1/bottom", params={"partition": "4,4,4", "route": "all"})
        assert response.status_code == 200
        data = response.json()
        assert data["agree"] is True
        assert data["rendered"]["mn"] == (
            "-p~[6,4,2] + p~[6,3,3] + p~[5,5,2] - 2 p~[5,4,3] + p~[4,4,4]"
        )

    def test_expand_m_basis(self, client):
        data = client.get("/v1/expand", params={"partition": "2", "basis": "m"}).json()
        assert data["basis"] == "m"
        assert data["rendered"] == "m[2] + m[1,1]"

    def test_snakes(self, client):
        data = client.get("/v1/snakes", params={"partition": "321"}).json()
        assert data["word"] == "LOLROR"
        assert data["edges"][0]["cells"] == [[2, 1], [3, 1]]

    def test_jtstar(self, client):
        data = client.get("/v1/jtstar", params={"partition": "321"}).json()
        assert data["star"] == [[3, 5], [1, 3]]
        assert data["laplace_sign"] == -1

    def test_lr(self, client):
        params = {"outer": "3,2,1", "inner": "2,1", "nu": "2,1"}
        data = client.get("/v1/lr", params=params).json()
        assert data["lattice"] == data["jdt"] == 2

    def test_dims(self, client):
        data = client.get("/v1/dims", params={"from": 1, "to": 10}).json()
        assert [row["formula_value"] for row in data["rows"]] == [1, 1, 1, 2, 2, 3, 3, 4, 5, 6]

    def test_characters_use_lambda_key(self, client):
        data = client.get("/v1/characters/3").json()
        assert data["n"] == 3
        assert len(data["entries"]) == 9
        assert "lambda" in data["entries"][0]


class TestErrors:
    def test_bad_partition(self, client):
        response = client.get("/v1/bottom", params={"partition": "1,2"})
        assert response.status_code == 400
        assert response.json()["error_code"] == "E_INVALID_PARTITION"

    def test_gamma_gate(self, client):
        response = client.get("/v1/gamma", params={"from": 1, "to": 12})
        assert response.status_code == 422
        assert response.json()["error_code"] == "E_OVERSIZE_REQUEST"

    def test_range_limit(self, client):
        response = client.get("/v1/dims", params={"from": 1, "to": MAX_RANGE + 1})
        assert response.status_code == 422

    def test_missing_parameter(self, client):
        assert client.get("/v1/bottom").status_code == 422
