"""Read-only HTTP JSON API over one shared immutable snapshot.

Endpoints:
    GET  /api/health
    GET  /api/tools               all tools, default result ordering
    GET  /api/tools/{slug}
    GET  /api/facets
    GET  /api/metrics
    GET  /api/graph?root=<class>&depth=<n>
    POST /api/query               body {"query": "<expression>"}

Errors are {"error": message, "code": machine-code} with 400/404/500. Requests
never mutate the snapshot; SIGHUP swaps in a freshly loaded snapshot
atomically, so in-flight requests keep the ontology they started with.
"""

from __future__ import annotations

import json
import signal
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from .cli import query_payload
from .errors import (
    QuerySyntaxError,
    TypeMismatchError,
    UnknownReferenceError,
    VisonError,
)
from .exports import export_graph, facet_inventory
from .metrics import compute_metrics
from .queries import parse_query, evaluate, result_order_key
from .snapshot import Snapshot, load


class SnapshotHolder:
    """Mutable cell so handler threads always see a complete snapshot."""

    def __init__(self, path: str | None, snapshot: Snapshot):
        self.path = path
        self.snapshot = snapshot

    def reload(self) -> None:
        if self.path:
            self.snapshot = load(self.path)


class _Handler(BaseHTTPRequestHandler):
    holder: SnapshotHolder  # set on the server class by make_server

    # -- plumbing ---------------------------------------------------------

    def log_message(self, format: str, *args) -> None:  # noqa: A002 - stdlib name
        pass  # keep test output quiet; errors surface as JSON bodies

    def _send(self, status: int, payload: dict) -> None:
        body = json.dumps(payload, sort_keys=True).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _error(self, status: int, code: str, message: str, **extra) -> None:
        self._send(status, {"error": message, "code": code, **extra})

    # -- routing -----------------------------------------------------------

    def do_OPTIONS(self) -> None:  # CORS preflight for POST /api/query
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    def do_GET(self) -> None:
        snap = self.server.holder.snapshot  # type: ignore[attr-defined]
        url = urlparse(self.path)
        try:
            if url.path == "/api/health":
                self._send(200, {"status": "ok", "tools": len(snap.records)})
            elif url.path == "/api/tools":
                ordered = sorted(
                    (r.slug for r in snap.records),
                    key=lambda slug: result_order_key(snap.ontology, slug),
                )
                self._send(200, {"tools": [snap.tool_json(s) for s in ordered]})
            elif url.path.startswith("/api/tools/"):
                slug = url.path[len("/api/tools/"):].lower()
                if slug not in snap.by_slug:
                    self._error(404, "unknown-name", f"unknown tool {slug!r}")
                else:
                    self._send(200, snap.tool_json(slug))
            elif url.path == "/api/facets":
                self._send(200, facet_inventory(snap.records))
            elif url.path == "/api/metrics":
                self._send(200, compute_metrics(snap.ontology).to_json())
            elif url.path == "/api/graph":
                params = parse_qs(url.query)
                root = params.get("root", ["thing"])[0].lower()
                try:
                    depth = int(params.get("depth", ["1"])[0])
                except ValueError:
                    self._error(400, "bad-request", "depth must be an integer")
                    return
                if depth < 0:
                    self._error(400, "bad-request", "depth must be >= 0")
                    return
                try:
                    graph = export_graph(snap.ontology, root=root, depth=depth)
                except UnknownReferenceError as exc:
                    self._error(404, "unknown-name", str(exc))
                    return
                self._send(200, graph.to_json())
            else:
                self._error(404, "not-found", f"no such endpoint {url.path!r}")
        except Exception as exc:  # pragma: no cover - last-resort guard
            self._error(500, "internal", str(exc))

    def do_POST(self) -> None:
        snap = self.server.holder.snapshot  # type: ignore[attr-defined]
        url = urlparse(self.path)
        if url.path != "/api/query":
            self._error(404, "not-found", f"no such endpoint {url.path!r}")
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
            body = json.loads(self.rfile.read(length) or b"{}")
            text = body.get("query")
            if not isinstance(text, str) or not text.strip():
                self._error(400, "bad-request", 'body must be {"query": "<text>"}')
                return
        except (json.JSONDecodeError, ValueError):
            self._error(400, "bad-request", "request body is not valid JSON")
            return
        try:
            result = evaluate(parse_query(text), snap.ontology)
        except QuerySyntaxError as exc:
            self._error(400, exc.code, str(exc), position=exc.position)
            return
        except (UnknownReferenceError, TypeMismatchError) as exc:
            self._error(400, exc.code, str(exc))
            return
        except VisonError as exc:
            self._error(400, exc.code, str(exc))
            return
        self._send(200, query_payload(snap, result))


def make_server(
    snapshot: Snapshot, host: str = "127.0.0.1", port: int = 0,
    path: str | None = None,
) -> ThreadingHTTPServer:
    server = ThreadingHTTPServer((host, port), _Handler)
    server.holder = SnapshotHolder(path=path, snapshot=snapshot)  # type: ignore[attr-defined]
    return server


def serve(snapshot_path: str, host: str, port: int) -> None:
    """Blocking entry point used by `vison serve`. SIGHUP reloads."""
    server = make_server(load(snapshot_path), host, port, path=snapshot_path)

    def _reload(signum, frame) -> None:
        server.holder.reload()  # type: ignore[attr-defined]

    if threading.current_thread() is threading.main_thread():
        signal.signal(signal.SIGHUP, _reload)
    print(f"vison API on http://{host}:{port} (snapshot: {snapshot_path})")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
