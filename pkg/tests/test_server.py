import json
import threading
import urllib.error
import urllib.parse
import urllib.request
from concurrent.futures import ThreadPoolExecutor

import pytest

from topicmap import MapParams, build_map, save_map, save_model
from topicmap.server import create_server

from conftest import TWO_TOPIC_PARAMS, model_from_vectors, random_model


@pytest.fixture(scope="module")
def served(tmp_path_factory, two_topic_docs, two_topic_model):
    """A live server over the two-topic map and model, plus raw file bytes."""
    root = tmp_path_factory.mktemp("served")
    map_path = root / "map.json"
    model_path = root / "model.txt"
    topic_map = build_map(
        two_topic_docs,
        train_params=TWO_TOPIC_PARAMS,
        map_params=MapParams(n_terms=20, percentile=0.8, cap=12,
                             base_percentile=0.7),
        phrases=False,
    )
    save_map(topic_map, map_path)
    save_model(two_topic_model, model_path)
    server = create_server(port=0, map_path=map_path, model_path=model_path,
                           static_dir=root / "no-static")
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    base = f"http://127.0.0.1:{server.server_address[1]}"
    yield base, map_path.read_bytes(), two_topic_model, topic_map
    server.shutdown()
    server.server_close()


def get(url):
    try:
        with urllib.request.urlopen(url) as resp:
            return resp.status, dict(resp.headers), resp.read()
    except urllib.error.HTTPError as e:
        return e.code, dict(e.headers), e.read()


class TestMapEndpoint:
    def test_bytes_identical_to_file(self, served):
        base, file_bytes, _, _ = served
        status, headers, body = get(f"{base}/api/map")
        assert status == 200
        assert body == file_bytes

    def test_content_type_and_cors(self, served):
        base, _, _, _ = served
        _, headers, _ = get(f"{base}/api/map")
        assert headers["Content-Type"].startswith("application/json")
        assert headers["Access-Control-Allow-Origin"] == "*"

    def test_missing_map_503(self, tmp_path):
        server = create_server(port=0, static_dir=tmp_path)
        thread = threading.Thread(target=server.serve_forever, daemon=True)
        thread.start()
        try:
            base = f"http://127.0.0.1:{server.server_address[1]}"
            status, _, body = get(f"{base}/api/map")
            assert status == 503
            assert json.loads(body)["error"] == "MapNotLoaded"
            status, _, body = get(f"{base}/api/neighbors/x")
            assert status == 503
            assert json.loads(body)["error"] == "ModelNotLoaded"
        finally:
            server.shutdown()
            server.server_close()


class TestNeighborsEndpoint:
    def test_depth_one_matches_exhaustive_scan(self, served):
        base, _, model, _ = served
        status, _, body = get(f"{base}/api/neighbors/a1?k=3&depth=1")
        assert status == 200
        data = json.loads(body)
        assert data["term"] == "a1"
        expected = [t for t, _ in model.nearest("a1", 3)]
        level1 = [n["id"] for n in data["nodes"] if n["level"] == 1]
        assert level1 == expected
        assert data["nodes"][0] == {"id": "a1", "level": 0, "sim": 1.0}

    def test_depth_zero_is_term_alone(self, served):
        base, _, _, _ = served
        _, _, body = get(f"{base}/api/neighbors/a1?depth=0")
        data = json.loads(body)
        assert [n["id"] for n in data["nodes"]] == ["a1"]
        assert data["links"] == []

    def test_depth_two_adds_frontier_neighbors(self, served):
        base, _, model, _ = served
        _, _, body = get(f"{base}/api/neighbors/a1?k=2&depth=2")
        data = json.loads(body)
        ids = {n["id"]: n["level"] for n in data["nodes"]}
        frontier = [t for t, _ in model.nearest("a1", 2)]
        for t in frontier:
            assert ids[t] == 1
            for nb, _ in model.nearest(t, 2):
                assert nb in ids
        # dedup: levels are first-seen
        assert ids["a1"] == 0

    def test_links_respect_base_threshold(self, served):
        base, _, model, topic_map = served
        _, _, body = get(f"{base}/api/neighbors/a1?k=5&depth=1")
        data = json.loads(body)
        threshold = topic_map.min_raw()
        for link in data["links"]:
            assert link["raw"] >= round(threshold, 6) - 1e-6
            assert link["source"] < link["target"]

    def test_unknown_term_404(self, served):
        base, _, _, _ = served
        status, _, body = get(f"{base}/api/neighbors/zzz")
        assert status == 404
        assert json.loads(body) == {"error": "UnknownTerm", "term": "zzz"}

    @pytest.mark.parametrize(
        "query", ["k=0", "k=51", "depth=4", "depth=-1", "k=abc", "depth=1.5"]
    )
    def test_bad_params_400(self, served, query):
        base, _, _, _ = served
        status, _, body = get(f"{base}/api/neighbors/a1?{query}")
        assert status == 400
        assert json.loads(body)["error"] == "BadRequest"

    def test_repeated_requests_identical(self, served):
        base, _, _, _ = served
        url = f"{base}/api/neighbors/a1?k=5&depth=2"
        bodies = {get(url)[2] for _ in range(5)}
        assert len(bodies) == 1

    def test_concurrent_equals_serial(self, served):
        base, _, _, _ = served
        urls = [
            f"{base}/api/neighbors/{t}?k=4&depth={d}"
            for t in ("a1", "b3", "a7")
            for d in (1, 2)
        ]
        serial = [get(u)[2] for u in urls]
        with ThreadPoolExecutor(max_workers=6) as pool:
            concurrent = list(pool.map(lambda u: get(u)[2], urls))
        assert concurrent == serial


class TestCompoundEndpoint:
    def test_single_term_matches_neighbors_ranking(self, served):
        base, _, _, _ = served
        _, _, nb_body = get(f"{base}/api/neighbors/a1?k=5&depth=1")
        _, _, cp_body = get(f"{base}/api/compound?terms=a1&k=5")
        nb = json.loads(nb_body)
        cp = json.loads(cp_body)
        nb_ranked = [n["id"] for n in nb["nodes"] if n["level"] == 1]
        cp_ranked = [n["term"] for n in cp["neighbors"]]
        assert cp_ranked == nb_ranked

    def test_matches_brute_force_scan(self, served):
        base, _, model, _ = served
        _, _, body = get(f"{base}/api/compound?terms=a1,a2&k=6")
        data = json.loads(body)
        vec = model.compound(["a1", "a2"])
        expected = model.nearest(vec, 6, exclude={"a1", "a2"})
        assert [n["term"] for n in data["neighbors"]] == [t for t, _ in expected]
        for got, (_, sim) in zip(data["neighbors"], expected):
            assert got["sim"] == pytest.approx(sim, abs=1e-6)

    def test_opposite_vectors_422(self, tmp_path):
        model = model_from_vectors({"plus": [1.0, 0.0], "minus": [-1.0, 0.0]})
        model_path = tmp_path / "m.txt"
        save_model(model, model_path)
        server = create_server(port=0, model_path=model_path,
                               static_dir=tmp_path)
        threading.Thread(target=server.serve_forever, daemon=True).start()
        try:
            base = f"http://127.0.0.1:{server.server_address[1]}"
            status, _, body = get(f"{base}/api/compound?terms=plus,minus&k=3")
            assert status == 422
            assert json.loads(body)["error"] == "ZeroVector"
        finally:
            server.shutdown()
            server.server_close()

    def test_missing_terms_param_400(self, served):
        base, _, _, _ = served
        status, _, body = get(f"{base}/api/compound?k=3")
        assert status == 400
        status, _, body = get(f"{base}/api/compound?terms=,,&k=3")
        assert status == 400

    def test_unknown_member_404(self, served):
        base, _, _, _ = served
        status, _, body = get(f"{base}/api/compound?terms=a1,zzz")
        assert status == 404
        assert json.loads(body)["term"] == "zzz"


class TestStatic:
    def test_fallback_index(self, served):
        base, _, _, _ = served
        status, headers, body = get(f"{base}/")
        assert status == 200
        assert headers["Content-Type"].startswith("text/html")

    def test_requests_outside_root_rejected(self, served):
        base, _, _, _ = served
        status, _, _ = get(f"{base}/%2e%2e/%2e%2e/etc/passwd")
        assert status == 404

    def test_unknown_api_path(self, served):
        base, _, _, _ = served
        status, _, body = get(f"{base}/api/nope")
        assert status == 404
        assert json.loads(body)["error"] == "NotFound"

    def test_serves_real_files(self, tmp_path, served):
        static = tmp_path / "static"
        static.mkdir()
        (static / "index.html").write_text("<h1>real</h1>", encoding="utf-8")
        server = create_server(port=0, static_dir=static)
        threading.Thread(target=server.serve_forever, daemon=True).start()
        try:
            base = f"http://127.0.0.1:{server.server_address[1]}"
            status, _, body = get(f"{base}/")
            assert status == 200
            assert b"real" in body
        finally:
            server.shutdown()
            server.server_close()
