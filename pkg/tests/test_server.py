import json
import threading
import urllib.error
import urllib.request

import pytest

from infoeda import analyze
from infoeda.server import AnalysisService, make_server, run_server, subset_hash

from conftest import ranking_fixture

DATASET = ranking_fixture(n_per_class=60)


@pytest.fixture(scope="module")
def live_server():
    server = make_server(DATASET, port=0, max_size=1)
    run_server(server)
    host, port = server.server_address[:2]
    yield f"http://{host}:{port}"
    server.shutdown()
    server.server_close()


def get(base, path):
    try:
        with urllib.request.urlopen(base + path, timeout=10) as resp:
            return resp.status, json.loads(resp.read())
    except urllib.error.HTTPError as err:
        return err.code, json.loads(err.read())


def post(base, path, payload):
    req = urllib.request.Request(
        base + path,
        data=json.dumps(payload).encode() if not isinstance(payload, bytes) else payload,
        headers={"Content-Type": "application/json"},
        method="POST",
    )
    try:
        with urllib.request.urlopen(req, timeout=10) as resp:
            return resp.status, json.loads(resp.read())
    except urllib.error.HTTPError as err:
        return err.code, json.loads(err.read())


class TestSubsetHash:
    def test_frozen_vector(self):
        # FNV-1a 64 over "0,1,2"; the explorer client implements the same digest
        assert subset_hash([0, 1, 2]) == subset_hash([2, 0, 1])
        assert len(subset_hash([0])) == 16
        # FNV-1a 64 of b"0,1,2", computed independently byte by byte
        assert subset_hash([0, 1, 2]) == "1c2c3ac2c828864a"

    def test_order_insensitive(self):
        assert subset_hash(range(50)) == subset_hash(reversed(range(50)))


class TestService:
    def test_full_set_recompute_matches_bundle(self):
        service = AnalysisService(DATASET, max_size=1)
        bundle_doc = json.loads(service.bundle_bytes)
        out = service.recompute({"rows": list(range(DATASET.n_rows))})
        assert out["si"] == bundle_doc["si"]
        assert out["ranking"] == bundle_doc["ranking"]
        assert out["vid"] == bundle_doc["vid"]
        assert out["n_rows"] == DATASET.n_rows

    def test_subset_equals_batch_run(self):
        service = AnalysisService(DATASET, max_size=1)
        rows = [i for i in range(DATASET.n_rows) if i % 3 != 0]
        out = service.recompute({"rows": rows})
        batch = analyze(DATASET.subset_rows(rows), max_size=1)
        assert out["si"] == batch.stats_document()["si"]
        assert out["ranking"] == batch.stats_document()["ranking"]
        assert out["vid"] == batch.stats_document()["vid"]
        assert out["subset_hash"] == subset_hash(rows)

    def test_imbalance_term_reflects_pruned_counts(self):
        part = DATASET.partition_by_class()
        keep = list(part.row_indices[0]) + list(part.row_indices[1][:2])
        out = AnalysisService(DATASET, max_size=1).recompute({"rows": [int(i) for i in keep]})
        top = out["ranking"]["entries"][0]
        batch = analyze(DATASET.subset_rows(keep), max_size=1)
        assert top == batch.stats_document()["ranking"]["entries"][0]


class TestHttpEndpoints:
    def test_health(self, live_server):
        status, doc = get(live_server, "/health")
        assert status == 200
        assert doc["status"] == "ok"

    def test_bundle_matches_batch_export(self, live_server):
        status, doc = get(live_server, "/bundle")
        assert status == 200
        batch = json.loads(analyze(DATASET, max_size=1).to_bytes())
        assert doc == batch

    def test_recompute_identity(self, live_server):
        rows = list(range(DATASET.n_rows))
        status, doc = post(live_server, "/recompute", {"rows": rows})
        assert status == 200
        assert doc["subset_hash"] == subset_hash(rows)
        _, bundle_doc = get(live_server, "/bundle")
        assert doc["si"] == bundle_doc["si"]

    def test_prune_below_two_per_class_is_422(self, live_server):
        part = DATASET.partition_by_class()
        rows = [int(i) for i in part.row_indices[0]] + [int(part.row_indices[1][0])]
        status, doc = post(live_server, "/recompute", {"rows": rows})
        assert status == 422
        assert "error" in doc
        assert doc["subset_hash"] == subset_hash(rows)
        # the service must stay up after a rejected recompute
        assert get(live_server, "/health")[0] == 200

    @pytest.mark.parametrize("payload", [
        {"rows": [0, 0, 1]},
        {"rows": [0, 1, 999999]},
        {"rows": [0, "x"]},
        {"rows": [0, True]},
        {"rows": []},
        {"wrong": [1, 2]},
        [1, 2, 3],
    ])
    def test_malformed_subsets_are_400(self, live_server, payload):
        status, doc = post(live_server, "/recompute", payload)
        assert status == 400
        assert "error" in doc

    def test_invalid_json_is_400(self, live_server):
        status, doc = post(live_server, "/recompute", b"{nope")
        assert status == 400
        assert "invalid JSON" in doc["error"]

    def test_unknown_paths_are_404(self, live_server):
        status, doc = get(live_server, "/nope")
        assert status == 404 and doc["status"] == 404
        status, _ = post(live_server, "/nope", {})
        assert status == 404

    def test_cors_headers_present(self, live_server):
        with urllib.request.urlopen(live_server + "/health", timeout=10) as resp:
            assert resp.headers["Access-Control-Allow-Origin"] == "*"

    def test_concurrent_recomputes_agree(self, live_server):
        rows = [i for i in range(DATASET.n_rows) if i % 2 == 0]
        results = []
        errors = []

        def worker():
            try:
                results.append(post(live_server, "/recompute", {"rows": rows}))
            except Exception as exc:  # pragma: no cover
                errors.append(exc)

        threads = [threading.Thread(target=worker) for _ in range(8)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert not errors
        assert len(results) == 8
        first = results[0]
        assert all(r == first for r in results)
