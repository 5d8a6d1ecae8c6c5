import pytest
from fastapi.testclient import TestClient

from rubikmap.service import create_app


@pytest.fixture(scope="module")
def client():
    app = create_app(map_names=["theta", "prism3", "cube"])
    with TestClient(app) as c:
        yield c


def make_session(client, name="prism3"):
    resp = client.post("/sessions", json={"map": name})
    assert resp.status_code == 200
    body = resp.json()
    return body["session"], body["state"]


def test_list_maps(client):
    body = client.get("/maps").json()
    names = [m["name"] for m in body["maps"]]
    assert names == ["theta", "prism3", "cube"]
    prism = body["maps"][1]
    assert prism["vertices"] == 6 and prism["planar"] is True


def test_map_descriptor(client):
    body = client.get("/maps/prism3").json()
    assert len(body["face_list"]) == 5
    assert len(body["corners"]) == 18
    assert len(body["side_edges"]) == 18
    assert len(body["edge_list"]) == 9
    sizes = sorted(f["size"] for f in body["face_list"])
    assert sizes == [3, 3, 4, 4, 4]
    assert {f["label"] for f in body["face_list"]} == {"F1", "F2", "F3", "F4", "F5"}
    for face in body["face_list"]:
        assert len(face["edges"]) == face["size"]
        for i, e in enumerate(face["edges"]):
            endpoints = set(body["edge_list"][e])
            v1 = face["vertices"][i]
            v2 = face["vertices"][(i + 1) % face["size"]]
            assert {v1, v2} == endpoints


def test_unknown_map_code(client):
    resp = client.get("/maps/moebius")
    assert resp.status_code == 404
    assert resp.json()["error"] == "unknown_map"


def test_session_lifecycle(client):
    sid, state = make_session(client)
    assert state["solved"] is True
    got = client.get(f"/sessions/{sid}").json()
    assert got["state"] == state


def test_unknown_session_code(client):
    resp = client.get("/sessions/nope")
    assert resp.status_code == 404
    assert resp.json()["error"] == "unknown_session"


def test_move_and_full_turn(client):
    sid, _ = make_session(client)
    label, size = "F1", None
    desc = client.get("/maps/prism3").json()
    size = next(f["size"] for f in desc["face_list"] if f["label"] == label)
    state = None
    for _ in range(size):
        resp = client.post(f"/sessions/{sid}/move",
                           json={"face": label, "exponent": 1})
        assert resp.status_code == 200
        state = resp.json()["state"]
    assert state["solved"] is True
    # consecutive turns of one face merge into a single history syllable
    assert state["history"] == [[label, size]]


def test_unknown_face_code(client):
    sid, _ = make_session(client)
    resp = client.post(f"/sessions/{sid}/move", json={"face": "F99", "exponent": 1})
    assert resp.status_code == 400
    assert resp.json()["error"] == "unknown_face"


def test_malformed_request_code(client):
    sid, _ = make_session(client)
    resp = client.post(f"/sessions/{sid}/move", json={"exponent": 1})
    assert resp.status_code == 422
    assert resp.json()["error"] == "malformed_request"


def test_scramble_solve_round_trip(client):
    sid, _ = make_session(client, "cube")
    scrambled = client.post(f"/sessions/{sid}/scramble",
                            json={"seed": 4, "moves": 20}).json()
    assert scrambled["state"]["solved"] is False
    solved = client.post(f"/sessions/{sid}/solve").json()
    assert solved["state"]["solved"] is False  # solve does not mutate
    for label, exponent in solved["word"]:
        state = client.post(f"/sessions/{sid}/move",
                            json={"face": label, "exponent": exponent}).json()["state"]
    assert state["solved"] is True


def test_scramble_is_seed_deterministic(client):
    sid1, _ = make_session(client)
    sid2, _ = make_session(client)
    w1 = client.post(f"/sessions/{sid1}/scramble", json={"seed": 8}).json()["word"]
    w2 = client.post(f"/sessions/{sid2}/scramble", json={"seed": 8}).json()["word"]
    assert w1 == w2


def test_reset(client):
    sid, _ = make_session(client)
    client.post(f"/sessions/{sid}/scramble", json={"seed": 1})
    state = client.post(f"/sessions/{sid}/reset").json()["state"]
    assert state["solved"] is True
    assert state["history"] == []


def test_history_always_reproduces_state(client):
    from rubikmap import maps
    from rubikmap.puzzle import PuzzleState
    from rubikmap.presentation import rubik_generators

    sid, _ = make_session(client)
    client.post(f"/sessions/{sid}/move", json={"face": "F2", "exponent": 1})
    client.post(f"/sessions/{sid}/scramble", json={"seed": 2, "moves": 5})
    client.post(f"/sessions/{sid}/move", json={"face": "F1", "exponent": -1})
    state = client.get(f"/sessions/{sid}").json()["state"]
    replay = PuzzleState(rubik_generators(maps.prism(3)))
    labels = list(replay.presentation.face_labels)
    for label, exponent in state["history"]:
        replay.apply_move(labels.index(label), exponent)
    doc = replay.to_doc()
    assert doc["stickers"] == state["stickers"]
