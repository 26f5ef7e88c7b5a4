from fastapi.testclient import TestClient

from chordalham.service import app

client = TestClient(app)

K4_MINUS_EDGES = [[0, 1], [0, 2], [1, 2], [1, 3], [2, 3]]
P4_EDGES = [[0, 1], [1, 2], [2, 3]]
C4_EDGES = [[0, 1], [1, 2], [2, 3], [0, 3]]


def _graph(n, edges):
    return {"n": n, "edges": edges}


class TestHealth:
    def test_health(self):
        r = client.get("/health")
        assert r.status_code == 200
        assert r.json() == {"status": "ok"}


class TestCheck:
    def test_chordal(self):
        r = client.post("/check", json={"graph": _graph(4, K4_MINUS_EDGES)})
        assert r.status_code == 200
        body = r.json()
        assert body["chordal"] is True
        assert sorted(body["order"]) == [0, 1, 2, 3]

    def test_hole(self):
        r = client.post("/check", json={"graph": _graph(4, C4_EDGES)})
        body = r.json()
        assert body["chordal"] is False
        assert body["hole"] == [0, 1, 2, 3]


class TestStructures:
    def test_cliquetree(self):
        r = client.post("/cliquetree", json={"graph": _graph(4, K4_MINUS_EDGES)})
        assert r.status_code == 200
        body = r.json()
        assert body["nodes"] == [[0, 1, 2], [1, 2, 3]]
        assert body["edges"] == [[0, 1]]
        assert body["subtrees"] == [[0], [0, 1], [0, 1], [1]]
        assert body["leaf_owners"] == [[0, 0], [1, 3]]
        assert body["dot"] is None

    def test_basetree_with_dot(self):
        r = client.post(
            "/basetree", json={"graph": _graph(4, K4_MINUS_EDGES), "dot": True}
        )
        body = r.json()
        assert body["independent_set"] == [0, 3]
        assert body["edges"] == [{"u": 0, "v": 1, "colour": "black"}]
        assert "color=black" in body["dot"]

    def test_overspan(self):
        r = client.post("/overspan", json={"graph": _graph(4, K4_MINUS_EDGES)})
        body = r.json()
        assert body["excluded"] == [0, 3]
        assert len(body["items"]) == 2
        assert body["items"][0]["loops"] == [1, 2]
        assert body["items"][0]["edges"] == [[1, 2]]
        assert body["items"][1]["copy_index"] == 1


class TestPipelineEndpoints:
    def test_pipeline_cycle(self):
        r = client.post("/pipeline", json={"graph": _graph(4, K4_MINUS_EDGES)})
        body = r.json()
        assert body["outcome"] == "cycle"
        assert body["cycle"] == [1, 3, 2, 0]
        assert body["witness"] is None

    def test_pipeline_witness(self):
        r = client.post("/pipeline", json={"graph": _graph(4, P4_EDGES)})
        body = r.json()
        assert body["outcome"] == "witness"
        w = body["witness"]
        assert w["separator"] == [1]
        assert w["components"] == 2
        assert w["e2"] == [[0, 1]]

    def test_sdr(self):
        r = client.post("/sdr", json={"graph": _graph(4, K4_MINUS_EDGES)})
        body = r.json()
        assert body["found"] is True
        assert body["choice"] == [
            {"item": 0, "element": [1, 1]},
            {"item": 1, "element": [2, 2]},
        ]
        r = client.post("/sdr", json={"graph": _graph(4, P4_EDGES)})
        assert r.json()["found"] is False

    def test_hamilton(self):
        r = client.post("/hamilton", json={"graph": _graph(4, K4_MINUS_EDGES)})
        assert r.json() == {"found": True, "cycle": [1, 3, 2, 0]}
        r = client.post("/hamilton", json={"graph": _graph(4, P4_EDGES)})
        assert r.json() == {"found": False, "cycle": None}

    def test_path(self):
        r = client.post(
            "/path", json={"graph": _graph(4, K4_MINUS_EDGES), "source": 0, "target": 3}
        )
        body = r.json()
        assert body["outcome"] == "path"
        assert body["path"] == [0, 2, 1, 3]
        r = client.post(
            "/path", json={"graph": _graph(4, P4_EDGES), "source": 0, "target": 3}
        )
        assert r.json()["outcome"] == "witness"

    def test_witness_search(self):
        r = client.post("/witness", json={"graph": _graph(4, P4_EDGES)})
        body = r.json()
        assert body["found"] is True
        assert body["witness"]["separator"] == [1]
        r = client.post("/witness", json={"graph": _graph(3, [[0, 1], [0, 2], [1, 2]])})
        assert r.json()["found"] is False

    def test_toughness(self):
        r = client.post("/toughness", json={"graph": _graph(4, P4_EDGES)})
        assert r.json() == {
            "infinite": False,
            "numerator": 1,
            "denominator": 2,
            "witness": [1],
        }
        r = client.post(
            "/toughness",
            json={"graph": _graph(3, [[0, 1], [0, 2], [1, 2]])},
        )
        assert r.json()["infinite"] is True


class TestErrors:
    def test_non_chordal_input_400(self):
        r = client.post("/pipeline", json={"graph": _graph(4, C4_EDGES)})
        assert r.status_code == 400
        assert r.json()["error"]["code"] == "not-chordal"

    def test_disconnected_400(self):
        r = client.post("/pipeline", json={"graph": _graph(4, [[0, 1], [2, 3]])})
        assert r.status_code == 400
        assert r.json()["error"]["code"] == "disconnected"

    def test_too_small_400(self):
        r = client.post("/pipeline", json={"graph": _graph(2, [[0, 1]])})
        assert r.status_code == 400
        assert r.json()["error"]["code"] == "too-small"

    def test_bad_edge_400(self):
        r = client.post("/check", json={"graph": _graph(2, [[0, 7]])})
        assert r.status_code == 400
        assert r.json()["error"]["code"] == "input"

    def test_malformed_body_422(self):
        r = client.post("/pipeline", json={"graph": {"edges": "nope"}})
        assert r.status_code == 422

    def test_cap_exceeded_400(self):
        big = {"graph": _graph(4, P4_EDGES), "cap": 0}
        r = client.post("/witness", json=big)
        assert r.status_code == 400
        assert r.json()["error"]["code"] == "cap-exceeded"


class TestGen:
    def test_deterministic(self):
        payload = {"family": "ktree", "n": 8, "k": 2, "seed": 42}
        a = client.post("/gen", json=payload).json()
        b = client.post("/gen", json=payload).json()
        assert a == b
        assert a["graph"]["n"] == 8
        assert a["text"].startswith("8 ")

    def test_bad_family(self):
        r = client.post("/gen", json={"family": "grid", "n": 5})
        assert r.status_code == 400
        assert r.json()["error"]["code"] == "bad-parameter"
