import pytest
from fastapi.testclient import TestClient

from kappa_lab import fixtures
from kappa_lab.api import create_app
from kappa_lab.certificates import certificate_document, schedule_for, threshold_table
from kappa_lab.graph import graph_to_dict


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def analyze(client, g, **extra):
    return client.post("/analyze", json={"graph": graph_to_dict(g), **extra})


def test_analyze_banana(client):
    r = analyze(client, fixtures.double_banana(1))
    assert r.status_code == 200
    doc = r.json()
    assert doc["kappa"] == 4
    assert doc["validation"] == []
    assert sum(s["epsilon"] for s in doc["steps"]) == 18


def test_analyze_matches_certificate_document(client):
    g = fixtures.toy_graph()
    r = analyze(client, g, dims=[2, 3])
    cert = schedule_for(g)
    expected = certificate_document(cert, threshold_table(cert.kappa, [2, 3]))
    assert r.json() == {"validation": [], **expected}


def test_analyze_pins_override_changes_kappa(client):
    g = fixtures.banana_minus_edge(1)
    assert analyze(client, g).json()["kappa"] == 4
    r = analyze(client, g, pins=[7])
    assert r.status_code == 200
    assert r.json()["kappa"] == 3


def test_analyze_edgeless(client):
    from kappa_lab.graph import PinnedGraph

    g = PinnedGraph(n=3, edges=(), pins=frozenset())
    doc = analyze(client, g).json()
    assert doc["kappa"] == 0 and doc["back_degrees"] == [0, 0, 0]


def test_analyze_accepts_string_document(client):
    r = client.post("/analyze", json={"graph": "3\n1 2\n2 3\npins: 1 3\n"})
    assert r.status_code == 200
    assert r.json()["kappa"] == 2


def test_analyze_missing_graph_400(client):
    r = client.post("/analyze", json={})
    assert r.status_code == 400
    body = r.json()
    assert body["code"] == "MissingGraph" and set(body) == {"code", "message", "details"}


def test_analyze_invalid_graph_400_with_details(client):
    r = client.post("/analyze", json={"graph": {"vertices": 2, "edges": [[1, 2]], "pins": [1, 2]}})
    assert r.status_code == 400
    body = r.json()
    assert body["code"] == "PinsNotIndependent"


def test_pins_override_validated(client):
    # overriding pins onto adjacent vertices must fail like a bad document
    g = fixtures.chain_graph(3, {1})
    r = analyze(client, g, pins=[1, 2])
    assert r.status_code == 400
    assert r.json()["code"] == "InvalidGraph"
    assert any(v["code"] == "PinsNotIndependent" for v in r.json()["details"])


def test_size_cap_413(client):
    r = client.post("/analyze", json={"graph": {"vertices": 501, "edges": [], "pins": []}})
    assert r.status_code == 413
    assert r.json()["code"] == "GraphTooLarge"


def test_dismantle_seven_cycle(client):
    g = fixtures.seven_cycle_three_pins()
    r = client.post("/dismantle", json={"graph": graph_to_dict(g), "k": 2})
    assert r.status_code == 200
    doc = r.json()
    assert doc["succeeded"] is True and len(doc["deletions"]) == 4
    r1 = client.post("/dismantle", json={"graph": graph_to_dict(g), "k": 1})
    doc1 = r1.json()
    assert doc1["succeeded"] is False and doc1["deletions"] == []


def test_dismantle_bad_budget(client):
    g = fixtures.chain_graph(3, {1})
    for bad in (-1, "two", None):
        r = client.post("/dismantle", json={"graph": graph_to_dict(g), "k": bad})
        assert r.status_code == 400
        assert r.json()["code"] == "BadBudget"


def test_dismantle_policy_seeds_agree(client):
    g = fixtures.eight_cycle_four_pins()
    outcomes = set()
    for seed in range(5):
        r = client.post("/dismantle", json={
            "graph": graph_to_dict(g), "k": 2,
            "policy": {"kind": "random", "seed": seed},
        })
        outcomes.add(r.json()["succeeded"])
    assert outcomes == {True}


def test_dismantle_bad_policy(client):
    g = fixtures.chain_graph(3, {1})
    r = client.post("/dismantle", json={"graph": graph_to_dict(g), "k": 1,
                                        "policy": {"kind": "random"}})
    assert r.status_code == 400
    assert r.json()["code"] == "BadPolicy"


def test_volume_sweep(client):
    g = fixtures.eight_cycle_four_pins()
    gens = [
        {"kind": "uniform-cube", "dim": 2},
        {"kind": "cantor-product", "dim": 2, "ratio": 1 / 3, "levels": 10},
    ]
    r = client.post("/volume-sweep", json={
        "graph": graph_to_dict(g), "generators": gens, "n": 2000,
        "delta": 1 / 32, "seed": 7,
    })
    assert r.status_code == 200
    results = r.json()["results"]
    assert len(results) == 2
    for res in results:
        assert res["K"] == 8 and res["N"] >= 1 and res["seed"] == 7
    # repeated call is bit-identical: stateless and seeded
    r2 = client.post("/volume-sweep", json={
        "graph": graph_to_dict(g), "generators": gens, "n": 2000,
        "delta": 1 / 32, "seed": 7,
    })
    assert r2.json() == r.json()


def test_volume_sweep_bad_params(client):
    g = fixtures.chain_graph(3, {1})
    r = client.post("/volume-sweep", json={"graph": graph_to_dict(g), "generators": []})
    assert r.status_code == 400
    r = client.post("/volume-sweep", json={"graph": graph_to_dict(g),
                                           "generators": [{"kind": "bogus"}]})
    assert r.status_code == 400 and r.json()["code"] == "BadParams"


def test_cors_loopback_origin(client):
    r = client.post("/analyze",
                    json={"graph": graph_to_dict(fixtures.chain_graph(3, {1}))},
                    headers={"Origin": "http://localhost:5173"})
    assert r.headers.get("access-control-allow-origin") == "http://localhost:5173"
    r2 = client.post("/analyze",
                     json={"graph": graph_to_dict(fixtures.chain_graph(3, {1}))},
                     headers={"Origin": "https://evil.example"})
    assert "access-control-allow-origin" not in r2.headers


def test_static_mount(tmp_path):
    (tmp_path / "index.html").write_text("<h1>explorer</h1>", encoding="utf-8")
    app = create_app(static_dir=str(tmp_path))
    c = TestClient(app)
    r = c.get("/")
    assert r.status_code == 200 and "explorer" in r.text
    # API routes still take precedence over the static mount
    assert c.post("/analyze", json={}).status_code == 400
