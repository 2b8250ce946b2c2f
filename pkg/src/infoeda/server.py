"""Local analysis service behind the parallel-coordinates explorer.

Serves the precomputed bundle and recomputes statistics for pruned row
subsets. The dataset is immutable, every recompute is a pure function of the
requested row set, and each response echoes a canonical hash of that set so
clients can discard stale answers. Local, unauthenticated, one dataset per
process.
"""

from __future__ import annotations

import json
import posixpath
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .binning import DEFAULT_M
from .bundle import analyze
from .class_distance import EXHAUSTIVE
from .dataset import Dataset
from .diagram import VidThresholds

FNV_OFFSET = 0xCBF29CE484222325
FNV_PRIME = 0x100000001B3
_U64 = (1 << 64) - 1

_STATIC_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".mjs": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".map": "application/json",
    ".json": "application/json",
    ".svg": "image/svg+xml",
}


def subset_hash(indices) -> str:
    """FNV-1a 64-bit hex digest of the sorted row-index list.

    The explorer computes the same digest client-side to pair responses with
    the prune state that requested them.
    """
    text = ",".join(str(i) for i in sorted(int(i) for i in indices))
    acc = FNV_OFFSET
    for byte in text.encode("ascii"):
        acc = ((acc ^ byte) * FNV_PRIME) & _U64
    return f"{acc:016x}"


class AnalysisService:
    """Pure request handlers shared by the HTTP layer and in-process tests."""

    def __init__(self, dataset: Dataset, m: float = DEFAULT_M, max_size: int = 1,
                 strategy: str = EXHAUSTIVE, thresholds: VidThresholds | None = None):
        self.dataset = dataset
        self.m = m
        self.max_size = max_size
        self.strategy = strategy
        self.thresholds = thresholds or VidThresholds()
        self.bundle_bytes = analyze(
            dataset, m=m, max_size=max_size, strategy=strategy, thresholds=self.thresholds
        ).to_bytes()

    def validate_rows(self, payload) -> list[int]:
        if not isinstance(payload, dict) or "rows" not in payload:
            raise BadRequest("body must be a JSON object with a 'rows' list")
        rows = payload["rows"]
        if not isinstance(rows, list) or not rows:
            raise BadRequest("'rows' must be a non-empty list of row indices")
        seen = set()
        for r in rows:
            if isinstance(r, bool) or not isinstance(r, int):
                raise BadRequest(f"row index {r!r} is not an integer")
            if not 0 <= r < self.dataset.n_rows:
                raise BadRequest(
                    f"row index {r} out of range [0, {self.dataset.n_rows})"
                )
            if r in seen:
                raise BadRequest(f"duplicate row index {r}")
            seen.add(r)
        return sorted(rows)

    def recompute(self, payload) -> dict:
        """Statistics for a pruned view; equals a batch run on the materialized subset."""
        rows = self.validate_rows(payload)
        echo = subset_hash(rows)
        try:
            subset = self.dataset.subset_rows(rows)
            bundle = analyze(subset, m=self.m, max_size=self.max_size,
                             strategy=self.strategy, thresholds=self.thresholds)
        except ValueError as exc:
            raise UnprocessableSubset(str(exc), subset_hash=echo) from exc
        doc = {"subset_hash": echo, "n_rows": subset.n_rows}
        doc.update(bundle.stats_document())
        return doc


class BadRequest(Exception):
    """4xx-class request problem; carries the HTTP status to send."""

    status = 400

    def __init__(self, message, subset_hash=None):
        super().__init__(message)
        self.subset_hash = subset_hash


class UnprocessableSubset(BadRequest):
    """Well-formed subset the analysis cannot run on (e.g. one class left)."""

    status = 422


def make_server(dataset: Dataset, host: str = "127.0.0.1", port: int = 8760,
                m: float = DEFAULT_M, max_size: int = 1, strategy: str = EXHAUSTIVE,
                thresholds: VidThresholds | None = None,
                ui_dir=None) -> ThreadingHTTPServer:
    """Build (but do not start) the threaded HTTP server for one dataset."""
    service = AnalysisService(dataset, m=m, max_size=max_size,
                              strategy=strategy, thresholds=thresholds)

    class Handler(BaseHTTPRequestHandler):
        protocol_version = "HTTP/1.1"

        def log_message(self, fmt, *args):  # quiet by default
            pass

        def _send(self, status: int, body: bytes, content_type="application/json"):
            self.send_response(status)
            self.send_header("Content-Type", content_type)
            self.send_header("Content-Length", str(len(body)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")
            self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
            self.end_headers()
            self.wfile.write(body)

        def _send_json(self, status: int, doc: dict):
            self._send(status, json.dumps(doc).encode("utf-8"))

        def _send_error(self, exc: BadRequest):
            doc = {"error": str(exc), "status": exc.status}
            if exc.subset_hash is not None:
                doc["subset_hash"] = exc.subset_hash
            self._send_json(exc.status, doc)

        def do_OPTIONS(self):
            self._send(204, b"")

        def do_GET(self):
            path = self.path.split("?", 1)[0]
            if path == "/bundle":
                self._send(200, service.bundle_bytes)
            elif path == "/health":
                self._send_json(200, {"status": "ok", "n_rows": dataset.n_rows})
            elif ui_dir is not None:
                self._serve_static(path)
            else:
                self._send_json(404, {"error": f"unknown path {path}", "status": 404})

        def _serve_static(self, path: str):
            name = posixpath.normpath(path.lstrip("/")) or "index.html"
            if name in ("", "."):
                name = "index.html"
            if name.startswith(("..", "/")):
                self._send_json(404, {"error": "not found", "status": 404})
                return
            target = ui_dir / name
            if target.is_dir():
                target = target / "index.html"
            suffix = target.suffix.lower()
            if suffix not in _STATIC_TYPES or not target.is_file():
                self._send_json(404, {"error": f"unknown path {path}", "status": 404})
                return
            self._send(200, target.read_bytes(), content_type=_STATIC_TYPES[suffix])

        def do_POST(self):
            path = self.path.split("?", 1)[0]
            if path != "/recompute":
                self._send_json(404, {"error": f"unknown path {path}", "status": 404})
                return
            try:
                length = int(self.headers.get("Content-Length", "0"))
                raw = self.rfile.read(length) if length else b""
                try:
                    payload = json.loads(raw.decode("utf-8")) if raw else None
                except (UnicodeDecodeError, json.JSONDecodeError) as exc:
                    raise BadRequest(f"invalid JSON body: {exc}") from exc
                doc = service.recompute(payload)
            except BadRequest as exc:
                self._send_error(exc)
                return
            self._send_json(200, doc)

    server = ThreadingHTTPServer((host, port), Handler)
    server.daemon_threads = True
    server.service = service  # handy for tests
    return server


def run_server(server: ThreadingHTTPServer) -> threading.Thread:
    """Start serve_forever on a daemon thread; returns the thread."""
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    return thread
