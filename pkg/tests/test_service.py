import pytest
from fastapi.testclient import TestClient

from alphanum.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


class TestHealth:
    def test_healthz(self, client):
        resp = client.get("/healthz")
        assert resp.status_code == 200
        assert resp.json()["status"] == "ok"


class TestSigmaEndpoint:
    def test_exact(self, client):
        resp = client.post("/sigma", json={"n": "28", "exponent": "1"})
        assert resp.status_code == 200
        body = resp.json()
        assert body["exact"] is True and body["value"] == "56"

    def test_quaternion(self, client):
        resp = client.post("/sigma", json={"n": "30", "exponent": "i"})
        body = resp.json()
        assert body["exact"] is False
        assert abs(body["quaternion"]["a"] - (-0.5759)) < 1e-3
        assert abs(body["quaternion"]["b"] - 4.412) < 1e-3

    def test_big_integer_stays_string(self, client):
        resp = client.post("/sigma", json={"n": "523776", "exponent": "4"})
        assert isinstance(resp.json()["value"], str)
        assert int(resp.json()["value"]) > 2**53

    def test_validation(self, client):
        assert client.post("/sigma", json={"n": "0"}).status_code == 422
        assert client.post("/sigma", json={"n": "6", "exponent": "??"}).status_code == 422


class TestClassifyEndpoint:
    def test_exact(self, client):
        resp = client.post("/classify", json={"n": "672"})
        body = resp.json()
        assert body["verdict"] == "Strong"
        assert (body["alpha1"], body["alpha2"], body["omega"]) == ("3", "1", 3)

    def test_rounded(self, client):
        resp = client.post(
            "/classify",
            json={"n": "24", "order": {"under": "0.5", "upper": "1"}, "variant": "ceiled"},
        )
        body = resp.json()
        assert body["verdict"] == "Weak"
        assert (body["alpha1"], body["alpha2"]) == ("5", "6")

    def test_exact_rejects_general_order(self, client):
        resp = client.post("/classify", json={"n": "24", "order": {"under": "i", "upper": "1"}})
        assert resp.status_code == 422


class TestEnumerateEndpoint:
    def test_strong(self, client):
        resp = client.post("/enumerate", json={"bound": 1000, "classes": ["strong"]})
        body = resp.json()
        assert [r["n"] for r in body["records"]] == ["6", "28", "120", "496", "672"]
        assert body["manifest"]["command"] == "enumerate"

    def test_digest_deterministic(self, client):
        req = {"bound": 700, "classes": ["strong", "weak"]}
        d1 = client.post("/enumerate", json=req).json()["manifest"]["result_digest"]
        d2 = client.post("/enumerate", json=req).json()["manifest"]["result_digest"]
        assert d1 == d2

    def test_unknown_class(self, client):
        assert client.post("/enumerate", json={"bound": 100, "classes": ["epic"]}).status_code == 422

    def test_bound_validated(self, client):
        assert client.post("/enumerate", json={"bound": 1}).status_code == 422


class TestCountEndpoint:
    def test_counts(self, client):
        resp = client.post("/count", json={"bound": 100, "parity": "even"})
        assert resp.json()["strong"] == 2


class TestSearchOddEndpoint:
    def test_empty_and_agreeing(self, client):
        resp = client.post("/search-odd", json={"bound": 10000, "cross_check": True})
        body = resp.json()
        assert body["found"] == []
        assert body["methods_agree"] is True


class TestVerifyEndpoint:
    def test_pass(self, client):
        resp = client.post("/verify", json={"theorem": "3.8", "bound": 5000})
        body = resp.json()
        assert body["passed"] is True and body["counterexample"] is None

    def test_unknown(self, client):
        assert client.post("/verify", json={"theorem": "x", "bound": 100}).status_code == 422


class TestAuditEndpoint:
    def test_mismatches_reported(self, client):
        resp = client.post("/audit-tables")
        body = resp.json()
        assert body["mismatches"] == 8
        flagged = {(r["table"], r["row"]) for r in body["rows"] if r["status"] == "mismatch"}
        assert ("strong-examples", "707840") in flagged


class TestResourceCap:
    def test_cap_surfaces_as_507(self, client, monkeypatch):
        # bound chosen above any sieve another test may have cached
        monkeypatch.setenv("ALPHANUM_MEMORY_CAP", "1000")
        resp = client.post("/enumerate", json={"bound": 3000000, "classes": ["strong"]})
        assert resp.status_code == 507
