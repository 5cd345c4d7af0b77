"""HTTP contract of the service layer."""

import warnings

import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from fastapi.testclient import TestClient

from bkscope.service.app import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    r = client.get("/health")
    assert r.status_code == 200
    body = r.json()
    assert body["status"] == "ok"
    assert body["version"]


def test_observables(client):
    r = client.get("/observables")
    assert r.status_code == 200
    items = r.json()["observables"]
    assert len(items) == 15
    assert items[0]["name"] == "IX"
    assert all(set(o) >= {"name", "bits"} for o in items)


def test_triads(client):
    r = client.get("/triads")
    items = r.json()["triads"]
    assert len(items) == 15
    negative = [t for t in items if t["sign"] == -1]
    assert {frozenset(t["members"]) for t in negative} == {
        frozenset(("XX", "YY", "ZZ")),
        frozenset(("XY", "YZ", "ZX")),
        frozenset(("XZ", "YX", "ZY")),
    }
    assert all(len(t["state_labels"]) == 4 for t in items)


def test_states(client):
    items = client.get("/states").json()["states"]
    assert len(items) == 60
    assert items[0]["label"] == 1
    assert all(len(s["coords"]) == 4 for s in items)
    assert all(len(s["signature"]) == 3 for s in items)


def test_squares_index(client):
    items = client.get("/squares").json()["squares"]
    assert len(items) == 10
    assert [s["id"] for s in items] == [f"S{i}" for i in range(1, 11)]
    for s in items:
        assert len(s["grid"]) == 3
        assert len(s["line_signs"]) == 6


def test_square_detail(client):
    body = client.get("/squares/S1").json()
    assert body["grid"] == [
        ["IZ", "ZI", "ZZ"],
        ["XI", "IX", "XX"],
        ["XZ", "ZX", "YY"],
    ]
    assert body["line_signs"] == [1, 1, 1, 1, 1, -1]
    assert body["negative_lines"] == 1
    assert body["satisfying_assignments"] == 0
    assert body["row_states"] == [[1, 2, 3, 4], [5, 6, 7, 8], [9, 10, 11, 12]]
    assert len(body["column_states"]) == 3
    assert sorted(x for line in body["column_states"] for x in line) == list(
        range(13, 25)
    )


def test_square_detail_unknown(client):
    assert client.get("/squares/S99").status_code == 404


def test_tetrads_all(client):
    body = client.get("/tetrads").json()
    assert body["square"] is None
    assert body["count"] == 105
    assert len(body["tetrads"]) == 105


def test_tetrads_for_square(client):
    body = client.get("/tetrads", params={"square": "S4"}).json()
    assert body["square"] == "S4"
    assert body["count"] == 24


def test_tetrads_unknown_square(client):
    assert client.get("/tetrads", params={"square": "S0"}).status_code == 404


def test_reye(client):
    body = client.get("/reye", params={"square": "S1"}).json()
    assert body["square"] == "S1"
    for cfg in (body["row_config"], body["column_config"]):
        assert len(cfg["points"]) == 12
        assert len(cfg["lines"]) == 16
    assert len(body["partner_pairs"]) == 16
    assert len(body["point_triangles"]) == 24
    assert all(len(v) == 4 for v in body["point_triangles"].values())


def test_mubsets(client):
    sets = client.get("/mubsets").json()["sets"]
    assert len(sets) == 6
    for fam in sets:
        assert len(fam["triads"]) == 5


def test_designs(client):
    items = client.get("/designs").json()["designs"]
    by_name = {d["name"]: d for d in items}
    assert by_name["triads_over_observables"]["symbol"] == "{15,15,3,3;(1,6)}"
    assert (
        by_name["tetrads_over_square_states"]["symbol"]
        == "{24,24,4,4;(1,6),(2,3)}"
    )
    assert (
        by_name["tetrads_over_all_states"]["symbol"] == "{105,60,7,4;(1,12),(3,3)}"
    )
    assert by_name["unbiased_families_over_triads"]["symbol"] == "{6,15,2,5;(1,8)}"
    assert all(d["identities_hold"] for d in items)


def test_apparitions_all(client):
    body = client.get("/apparitions").json()
    assert len(body["apparitions"]) == 1120
    first = body["apparitions"][0]
    assert first["square"] == "S1"
    assert first["kind"] == 18
    assert first["colorings"] is None


def test_apparitions_filtered_and_checked(client):
    body = client.get(
        "/apparitions", params={"square": "S2", "kind": "20", "check": "true"}
    ).json()
    apps = body["apparitions"]
    assert len(apps) == 96
    assert all(a["kind"] == 20 for a in apps)
    assert all(a["parity"] for a in apps)
    assert all(a["colorings"] == 0 for a in apps)


def test_apparitions_bad_kind(client):
    assert client.get("/apparitions", params={"kind": "19"}).status_code == 422


def test_apparitions_bad_square(client):
    assert client.get("/apparitions", params={"square": "S11"}).status_code == 404


def test_find_map(client):
    body = client.get("/find-map", params={"src": "S1", "dst": "S6"}).json()
    assert body["source"] == "S1"
    assert body["target"] == "S6"
    assert body["count"] == 72
    assert body["all_nonlocal"] is True
    assert len(body["maps"]) == 72
    assert all(m["lift"] is None for m in body["maps"])


def test_find_map_with_lifts(client):
    body = client.get(
        "/find-map", params={"src": "S1", "dst": "S1", "lift": "true"}
    ).json()
    assert body["all_nonlocal"] is False
    for m in body["maps"][:3]:
        assert m["lift"] is not None
        assert m["lift"]["den"] in (1, 2)
        assert len(m["lift"]["num"]) == 4
        assert len(m["lift"]["signs"]) == 15


def test_verify_scope(client):
    body = client.get("/verify/observables").json()
    assert body["scope"] == "observables"
    assert body["ok"] is True
    assert all(c["ok"] for c in body["checks"])


def test_verify_unknown_scope(client):
    assert client.get("/verify/everything").status_code == 404


def test_golden(client):
    body = client.get("/golden").json()
    assert set(body) == {
        "state_rows",
        "s1_tetrads",
        "s1_partner_lines",
        "s1_point_triangles",
        "square_relabelings",
        "local_map_rows",
        "mub_sets",
    }
    assert len(body["state_rows"]) == 15
    assert len(body["s1_tetrads"]) == 24
