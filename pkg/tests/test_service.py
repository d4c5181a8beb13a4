import pytest
from fastapi.testclient import TestClient

from mcluster.service import create_app
from fixtures import BASE_ANGULATION_DIAGONALS, CYCLE4_DIAGONAL_LABELS, cycle4


@pytest.fixture()
def client():
    return TestClient(create_app())


def base_session_body():
    return {"angulation": {
        "m": 2, "n": 5, "diagonals": [list(d) for d in BASE_ANGULATION_DIAGONALS]}}


def create_base(client):
    response = client.post("/session", json=base_session_body())
    assert response.status_code == 200, response.text
    return response.json()


class TestSessionLifecycle:
    def test_create_from_angulation(self, client):
        doc = create_base(client)
        state = doc["state"]
        assert state["quiver"] == cycle4(CYCLE4_DIAGONAL_LABELS)[0].to_json_dict()
        assert state["angulation"]["diagonals"] == [[3, 8], [3, 12], [5, 8], [9, 12]]
        flips = {tuple(f["diagonal"]): f["candidates"] for f in state["legal_moves"]["flips"]}
        assert flips[(3, 8)] == [[5, 12], [4, 9]]

    def test_create_from_dynkin_seed(self, client):
        response = client.post("/session", json={"m": 2, "seed": "A4"})
        assert response.status_code == 200
        state = response.json()["state"]
        assert state["angulation"] is None
        assert state["n"] == 4

    def test_malformed_body_is_400(self, client):
        assert client.post("/session", json={"m": "x"}).status_code == 400
        assert client.post("/session", json={}).status_code == 400
        response = client.post("/session", content=b"{nope", headers={"content-type": "application/json"})
        assert response.status_code == 400

    def test_unknown_session_is_404(self, client):
        assert client.get("/session/nope").status_code == 404
        assert client.post("/session/nope/mutate", json={"vertex": "1"}).status_code == 404
        assert client.post("/session/nope/undo").status_code == 404
        assert client.get("/session/nope/export").status_code == 404


class TestMoves:
    def test_mutation_reaches_the_next_tilting_quiver(self, client):
        doc = create_base(client)
        sid = doc["id"]
        response = client.post(f"/session/{sid}/mutate", json={"vertex": "3,8"})
        assert response.status_code == 200
        state = response.json()
        expected = cycle4(CYCLE4_DIAGONAL_LABELS)[1].rename_vertex("3,8", "5,12")
        assert state["quiver"] == expected.to_json_dict()
        assert state["angulation"]["diagonals"] == [[3, 12], [5, 8], [5, 12], [9, 12]]

    def test_flip_with_choice(self, client):
        doc = create_base(client)
        sid = doc["id"]
        response = client.post(f"/session/{sid}/flip",
                               json={"diagonal": [3, 8], "choice": [5, 12]})
        assert response.status_code == 200
        state = response.json()
        expected = cycle4(CYCLE4_DIAGONAL_LABELS)[1].rename_vertex("3,8", "5,12")
        assert state["quiver"] == expected.to_json_dict()

    def test_flip_two_steps(self, client):
        doc = create_base(client)
        sid = doc["id"]
        response = client.post(f"/session/{sid}/flip",
                               json={"diagonal": [3, 8], "choice": [4, 9]})
        assert response.status_code == 200
        state = response.json()
        expected = cycle4(CYCLE4_DIAGONAL_LABELS)[2].rename_vertex("3,8", "4,9")
        assert state["quiver"] == expected.to_json_dict()
        assert state["angulation"]["diagonals"] == [[3, 12], [4, 9], [5, 8], [9, 12]]

    def test_illegal_moves_are_409(self, client):
        sid = create_base(client)["id"]
        assert client.post(f"/session/{sid}/mutate", json={"vertex": "zz"}).status_code == 409
        assert client.post(f"/session/{sid}/flip",
                           json={"diagonal": [3, 8], "choice": [3, 8]}).status_code == 409
        assert client.post(f"/session/{sid}/flip",
                           json={"diagonal": [1, 6], "choice": [3, 8]}).status_code == 409
        assert client.post(f"/session/{sid}/undo").status_code == 409  # nothing to undo

    def test_busy_session_is_409(self, client):
        sid = create_base(client)["id"]
        session = client.app.state.sessions[sid]
        assert session.lock.acquire(blocking=False)
        try:
            response = client.post(f"/session/{sid}/mutate", json={"vertex": "3,8"})
            assert response.status_code == 409
            assert client.post(f"/session/{sid}/undo").status_code == 409
        finally:
            session.lock.release()

    def test_mutate_missing_field_is_400(self, client):
        sid = create_base(client)["id"]
        assert client.post(f"/session/{sid}/mutate", json={}).status_code == 400
        assert client.post(f"/session/{sid}/flip", json={"diagonal": [3, 8]}).status_code == 400


class TestUndoAndReplay:
    def test_undo_restores_prior_state_byte_for_byte(self, client):
        sid = create_base(client)["id"]
        before = client.get(f"/session/{sid}").content
        client.post(f"/session/{sid}/mutate", json={"vertex": "3,8"})
        after = client.post(f"/session/{sid}/undo")
        assert after.status_code == 200
        assert client.get(f"/session/{sid}").content == before

    def test_full_period_returns_without_undo(self, client):
        sid = create_base(client)["id"]
        start = client.get(f"/session/{sid}").json()["quiver"]
        vertex = "3,8"
        for _ in range(3):  # m + 1 = 3 exchanges at the same slot
            state = client.post(f"/session/{sid}/mutate", json={"vertex": vertex}).json()
            slots = set(state["quiver"]["vertices"]) - {"3,12", "5,8", "9,12"}
            vertex = slots.pop()
        assert client.get(f"/session/{sid}").json()["quiver"] == start

    def test_history_is_reported(self, client):
        sid = create_base(client)["id"]
        client.post(f"/session/{sid}/mutate", json={"vertex": "3,8"})
        history = client.get(f"/session/{sid}").json()["history"]
        assert history == [{"type": "mutate", "vertex": "3,8"}]


class TestExportImport:
    def test_roundtrip_is_byte_stable(self, client):
        sid = create_base(client)["id"]
        client.post(f"/session/{sid}/mutate", json={"vertex": "3,8"})
        export1 = client.get(f"/session/{sid}/export")
        assert export1.status_code == 200
        imported = client.post("/session", json={"import": export1.json()})
        assert imported.status_code == 200
        new_sid = imported.json()["id"]
        export2 = client.get(f"/session/{new_sid}/export")
        assert export1.content == export2.content
        # the imported session carries the same current state
        a = client.get(f"/session/{sid}").json()
        b = client.get(f"/session/{new_sid}").json()
        for key in ("quiver", "angulation", "history"):
            assert a[key] == b[key]

    def test_import_rejects_garbage(self, client):
        assert client.post("/session", json={"import": {"version": 7}}).status_code == 400


class TestHealth:
    def test_health(self, client):
        assert client.get("/health").json() == {"ok": True}
