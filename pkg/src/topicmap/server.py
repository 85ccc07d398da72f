"""Serve a built topic map and live embedding queries over HTTP.

Endpoints:
  GET /api/map                      the map file, byte for byte
  GET /api/neighbors/{term}?k&depth breadth-first nearest-neighbor close-up
  GET /api/compound?terms=a,b&k     neighbors of an averaged term vector
  GET /                             the bundled explorer page

State is loaded once at startup and never mutated, so every endpoint is a
pure function of the request and concurrent reads need no locking.
"""

from __future__ import annotations

import json
import mimetypes
from dataclasses import dataclass
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, unquote, urlsplit

from .embedding import EmbeddingModel, load_model
from .errors import UnknownTermError, ZeroVectorError
from .mapbuilder import TopicMap, load_map

MAX_K = 50
MAX_DEPTH = 3

_FALLBACK_PAGE = b"""<!doctype html>
<meta charset="utf-8">
<title>topicmap</title>
<body style="font-family: sans-serif; max-width: 40em; margin: 3em auto;">
<h1>topicmap server</h1>
<p>No explorer bundle is installed. The JSON API is live:</p>
<ul>
<li><code>/api/map</code></li>
<li><code>/api/neighbors/{term}?k=10&amp;depth=1</code></li>
<li><code>/api/compound?terms=a,b&amp;k=10</code></li>
</ul>
</body>
"""


@dataclass
class ServeState:
    """Immutable per-server data: the map bytes as written to disk, the
    parsed map, the optional embedding model, and the static asset root.
    """

    map_bytes: bytes | None = None
    topic_map: TopicMap | None = None
    model: EmbeddingModel | None = None
    static_dir: Path | None = None
    # smallest raw similarity kept in the map; close-up links must reach it
    base_threshold: float = -1.0


def make_state(
    map_path: str | Path | None = None,
    model_path: str | Path | None = None,
    static_dir: str | Path | None = None,
) -> ServeState:
    map_bytes = None
    topic_map = None
    if map_path is not None:
        map_bytes = Path(map_path).read_bytes()
        topic_map = load_map(map_path)
    model = load_model(model_path) if model_path is not None else None
    if static_dir is None:
        bundled = Path(__file__).parent / "static"
        static = bundled if bundled.is_dir() else None
    else:
        static = Path(static_dir)
    return ServeState(
        map_bytes=map_bytes,
        topic_map=topic_map,
        model=model,
        static_dir=static,
        base_threshold=topic_map.min_raw() if topic_map is not None else -1.0,
    )


def neighborhood(
    model: EmbeddingModel,
    term: str,
    k: int,
    depth: int,
    link_threshold: float = -1.0,
) -> dict:
    """Breadth-first close-up: level 0 is the term, each next level adds the
    k nearest (by embedding cosine) of every frontier term, deduplicated.
    Links report raw cosine among returned nodes, kept when they reach
    ``link_threshold``.
    """
    if term not in model:
        raise UnknownTermError(term)
    level = {term: 0}
    order = [term]
    frontier = [term]
    for lvl in range(1, depth + 1):
        nxt = []
        for t in frontier:
            for nb, _ in model.nearest(t, k):
                if nb not in level:
                    level[nb] = lvl
                    order.append(nb)
                    nxt.append(nb)
        frontier = nxt
    nodes = [
        {
            "id": t,
            "level": level[t],
            "sim": round(1.0 if t == term else model.similarity(term, t), 6),
        }
        for t in order
    ]
    links = []
    for i, a in enumerate(order):
        for b in order[i + 1 :]:
            raw = model.similarity(a, b)
            if raw >= link_threshold:
                s, t = (a, b) if a < b else (b, a)
                links.append({"source": s, "target": t, "raw": round(raw, 6)})
    links.sort(key=lambda link: (link["source"], link["target"]))
    return {"term": term, "k": k, "depth": depth, "nodes": nodes, "links": links}


def compound_neighbors(model: EmbeddingModel, terms: list[str], k: int) -> dict:
    """Ranked nearest terms of the averaged (then re-normalized) vector of
    ``terms``, the input terms themselves excluded.
    """
    vec = model.compound(terms)
    ranked = model.nearest(vec, k, exclude=set(terms))
    return {
        "terms": list(terms),
        "k": k,
        "neighbors": [{"term": t, "sim": round(s, 6)} for t, s in ranked],
    }


class _BadRequest(Exception):
    pass


def _int_param(query: dict, name: str, default: int, lo: int, hi: int) -> int:
    values = query.get(name)
    if not values:
        return default
    try:
        value = int(values[-1])
    except ValueError:
        raise _BadRequest(f"{name} must be an integer") from None
    if not lo <= value <= hi:
        raise _BadRequest(f"{name} must be in [{lo}, {hi}]")
    return value


class _Handler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"

    @property
    def state(self) -> ServeState:
        return self.server.state  # type: ignore[attr-defined]

    def log_message(self, fmt, *args):
        pass

    def do_OPTIONS(self):
        self.send_response(204)
        self._cors()
        self.send_header("Allow", "GET, OPTIONS")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self):
        split = urlsplit(self.path)
        path = unquote(split.path)
        query = parse_qs(split.query)
        try:
            if path == "/api/map":
                self._api_map()
            elif path.startswith("/api/neighbors/"):
                self._api_neighbors(path[len("/api/neighbors/") :], query)
            elif path == "/api/compound":
                self._api_compound(query)
            elif path.startswith("/api/"):
                self._json(404, {"error": "NotFound", "path": path})
            else:
                self._static(path)
        except _BadRequest as e:
            self._json(400, {"error": "BadRequest", "detail": str(e)})
        except UnknownTermError as e:
            self._json(404, {"error": "UnknownTerm", "term": e.term})
        except ZeroVectorError:
            self._json(422, {"error": "ZeroVector"})
        except BrokenPipeError:
            pass

    def _api_map(self):
        if self.state.map_bytes is None:
            self._json(503, {"error": "MapNotLoaded"})
            return
        self._send(200, self.state.map_bytes, "application/json; charset=utf-8",
                   cors=True)

    def _api_neighbors(self, term: str, query: dict):
        if not term or "/" in term:
            self._json(404, {"error": "UnknownTerm", "term": term})
            return
        if self.state.model is None:
            self._json(503, {"error": "ModelNotLoaded"})
            return
        k = _int_param(query, "k", 10, 1, MAX_K)
        depth = _int_param(query, "depth", 1, 0, MAX_DEPTH)
        payload = neighborhood(
            self.state.model, term, k, depth, self.state.base_threshold
        )
        self._json(200, payload)

    def _api_compound(self, query: dict):
        if self.state.model is None:
            self._json(503, {"error": "ModelNotLoaded"})
            return
        raw = ",".join(query.get("terms", []))
        terms = [t for t in (part.strip() for part in raw.split(",")) if t]
        if not terms:
            raise _BadRequest("terms must name at least one term")
        k = _int_param(query, "k", 10, 1, MAX_K)
        self._json(200, compound_neighbors(self.state.model, terms, k))

    def _static(self, path: str):
        if path == "/":
            path = "/index.html"
        root = self.state.static_dir
        if root is not None:
            target = (root / path.lstrip("/")).resolve()
            if str(target).startswith(str(root.resolve())) and target.is_file():
                ctype = mimetypes.guess_type(target.name)[0] or "application/octet-stream"
                if ctype.startswith("text/") or ctype in (
                    "application/javascript", "application/json", "image/svg+xml",
                ):
                    ctype += "; charset=utf-8"
                self._send(200, target.read_bytes(), ctype)
                return
        if path == "/index.html":
            self._send(200, _FALLBACK_PAGE, "text/html; charset=utf-8")
            return
        self._json(404, {"error": "NotFound", "path": path})

    def _cors(self):
        self.send_header("Access-Control-Allow-Origin", "*")

    def _json(self, status: int, payload: dict):
        body = json.dumps(payload, ensure_ascii=False).encode("utf-8")
        self._send(status, body, "application/json; charset=utf-8", cors=True)

    def _send(self, status: int, body: bytes, ctype: str, cors: bool = False):
        self.send_response(status)
        self.send_header("Content-Type", ctype)
        self.send_header("Content-Length", str(len(body)))
        if cors:
            self._cors()
        self.end_headers()
        try:
            self.wfile.write(body)
        except BrokenPipeError:
            pass


def create_server(
    host: str = "127.0.0.1",
    port: int = 8787,
    map_path: str | Path | None = None,
    model_path: str | Path | None = None,
    static_dir: str | Path | None = None,
) -> ThreadingHTTPServer:
    """Build a ready-to-run threaded HTTP server; call serve_forever() on it."""
    state = make_state(map_path, model_path, static_dir)
    server = ThreadingHTTPServer((host, port), _Handler)
    server.state = state  # type: ignore[attr-defined]
    server.daemon_threads = True
    return server
