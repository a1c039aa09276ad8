import pytest
from fastapi.testclient import TestClient

from proxsweep.service import create_app
from conftest import DOC_RUNS


@pytest.fixture
def client():
    return TestClient(create_app())


@pytest.fixture
def sample_index(client):
    response = client.post("/indexes", json={"text": DOC_RUNS})
    assert response.status_code == 201
    return response.json()


class TestIndexes:
    def test_create_returns_summary(self, sample_index):
        assert sample_index["token_count"] == 12
        assert sample_index["alpha"] == 2
        assert sample_index["wsim"] == pytest.approx(2 / 12)

    def test_get_summary(self, client, sample_index):
        response = client.get(f"/indexes/{sample_index['index_id']}")
        assert response.status_code == 200
        assert response.json() == sample_index

    def test_unknown_index_404(self, client):
        assert client.get("/indexes/idx-999").status_code == 404

    def test_words_mode_and_lowercase(self, client):
        response = client.post(
            "/indexes", json={"text": "Ab AB ab", "mode": "words", "lowercase": True}
        )
        assert response.status_code == 201
        assert response.json()["alpha"] == 2

    def test_export_import_round_trip(self, client, sample_index):
        exported = client.get(f"/indexes/{sample_index['index_id']}/file")
        assert exported.status_code == 200
        assert exported.text.startswith("PROXIDX 1 12 3\n")
        imported = client.post(
            "/indexes/import", content=exported.text,
            headers={"content-type": "text/plain"},
        )
        assert imported.status_code == 201
        body = imported.json()
        assert body["token_count"] == 12 and body["alpha"] == 2
        again = client.get(f"/indexes/{body['index_id']}/file")
        assert again.text == exported.text

    def test_import_rejects_malformed(self, client):
        response = client.post("/indexes/import", content="PROXIDX 1 2 1\nA\t0:0\n")
        assert response.status_code == 400
        assert "ctr" in response.json()["detail"]

    def test_empty_document_rejected(self, client):
        response = client.post("/indexes", json={"text": "   "})
        assert response.status_code == 400
        assert response.json()["detail"] == "empty index"


class TestSearch:
    def test_mwpsr_reference_example(self, client, sample_index):
        response = client.post(
            f"/indexes/{sample_index['index_id']}/search",
            json={"keywords": ["B", "C", "A"], "algo": "mwpsr"},
        )
        assert response.status_code == 200
        body = response.json()
        assert [(iv["start"], iv["end"]) for iv in body["intervals"]] == [
            (0, 2), (5, 7), (6, 8), (7, 9),
        ]
        assert body["minimal"] == {"start": 0, "end": 2, "size": 3}
        stats = body["stats"]
        assert stats["cn"] == stats["beta"] - stats["gamma"] == stats["comparisons"]

    def test_top_truncation(self, client, sample_index):
        response = client.post(
            f"/indexes/{sample_index['index_id']}/search",
            json={"keywords": ["A", "B", "C"], "top": 1},
        )
        assert [iv["start"] for iv in response.json()["intervals"]] == [0]

    def test_generalized_frequency_on_ps(self, client, sample_index):
        response = client.post(
            f"/indexes/{sample_index['index_id']}/search",
            json={"keywords": ["B"], "freqs": [3], "algo": "ps", "top": 1},
        )
        assert response.json()["intervals"] == [{"start": 9, "end": 11, "size": 3}]

    def test_absent_keyword_400(self, client, sample_index):
        response = client.post(
            f"/indexes/{sample_index['index_id']}/search",
            json={"keywords": ["A", "Q"], "algo": "mwpsr"},
        )
        assert response.status_code == 400
        assert "keyword not in document" in response.json()["detail"]

    def test_unsupported_frequency_400(self, client, sample_index):
        response = client.post(
            f"/indexes/{sample_index['index_id']}/search",
            json={"keywords": ["B"], "freqs": [2], "algo": "wpsr"},
        )
        assert response.status_code == 400
        assert "unsupported frequency" in response.json()["detail"]

    def test_unknown_algo_422(self, client, sample_index):
        response = client.post(
            f"/indexes/{sample_index['index_id']}/search",
            json={"keywords": ["A"], "algo": "grep"},
        )
        assert response.status_code == 422


class TestCorpus:
    def test_deterministic(self, client):
        payload = {"seed": 3, "size": 300, "alphabet_size": 3, "wsim_target": 0.4}
        first = client.post("/corpus", json=payload).json()
        second = client.post("/corpus", json=payload).json()
        assert first == second
        assert len(first["text"]) == 300
        assert abs(first["wsim_actual"] - 0.4) <= 0.02

    def test_unreachable_target_400(self, client):
        response = client.post(
            "/corpus", json={"seed": 1, "size": 3, "alphabet_size": 2, "wsim_target": 0.5}
        )
        assert response.status_code == 400


class TestBench:
    def test_small_grid(self, client):
        response = client.post(
            "/bench",
            json={"sizes": [100, 200], "wsim": [0.2], "seeds": 1},
        )
        assert response.status_code == 200
        records = response.json()["records"]
        assert len(records) == 2 * 1 * 1 * 3
        for record in records:
            assert record["cn"] == record["beta"] - record["gamma"]

    def test_invalid_grid_400(self, client):
        response = client.post("/bench", json={"sizes": [0], "wsim": [0.2]})
        assert response.status_code == 400
