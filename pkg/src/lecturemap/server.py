"""A small WSGI application exposing the analysis as JSON endpoints.

Endpoints (all GET):

    /api/meta                                   course summary + slider bounds
    /api/phrases                                phrase registry with doc_freq and kind
    /api/stats                                  per-lecture statistics + dispersion
    /api/indexmap?zoom=Z&focus=F&contrast=C     index map layout
    /api/chaptermatch?mode=M&zoom=Z             score matrix + assignments
    /api/similarity?phrases=p1,p2,...           similarity graph
    /api/pairs?top=K                            ranked collocations

Anything else is served from the static UI directory when one is
configured.  Errors come back as {"error": ...} with a 4xx status.  The
bundle is immutable, so handlers are safe under the threading server.
"""

from __future__ import annotations

import json
import mimetypes
from pathlib import Path
from socketserver import ThreadingMixIn
from urllib.parse import parse_qs
from wsgiref.simple_server import WSGIServer, make_server

from .bundle import AnalysisBundle
from .errors import DataError


class BadRequest(Exception):
    pass


def _json_bytes(payload: object) -> bytes:
    return json.dumps(payload, separators=(",", ":"), sort_keys=True).encode("utf-8")


def _int_param(params: dict, name: str, default: int | None = None) -> int | None:
    values = params.get(name)
    if not values:
        return default
    try:
        return int(values[0])
    except ValueError:
        raise BadRequest(f"parameter {name!r} must be an integer, got {values[0]!r}")


class App:
    def __init__(self, bundle: AnalysisBundle, ui_dir: "str | Path | None" = None):
        self.bundle = bundle
        self.ui_dir = Path(ui_dir) if ui_dir else None

    def __call__(self, environ, start_response):
        method = environ.get("REQUEST_METHOD", "GET")
        path = environ.get("PATH_INFO", "/")
        params = parse_qs(environ.get("QUERY_STRING", ""))
        if method != "GET":
            return self._error(start_response, 405, f"method {method} not allowed")
        try:
            if path.startswith("/api/"):
                payload = self._dispatch_api(path, params)
                body = _json_bytes(payload)
                start_response(
                    "200 OK",
                    [("Content-Type", "application/json; charset=utf-8"),
                     ("Content-Length", str(len(body)))],
                )
                return [body]
            return self._static(start_response, path)
        except BadRequest as exc:
            return self._error(start_response, 400, str(exc))
        except DataError as exc:
            return self._error(start_response, 400, str(exc))

    def _dispatch_api(self, path: str, params: dict) -> object:
        bundle = self.bundle
        if path == "/api/meta":
            return bundle.meta_payload()
        if path == "/api/phrases":
            return bundle.phrases_payload()
        if path == "/api/stats":
            return bundle.stats_payload()
        if path == "/api/indexmap":
            n = bundle.corpus.n_transcripts
            zoom = _int_param(params, "zoom", n)
            focus = _int_param(params, "focus", 1)
            contrast = _int_param(params, "contrast", 1)
            try:
                return bundle.indexmap_payload(zoom, focus, contrast)
            except ValueError as exc:
                raise BadRequest(str(exc))
        if path == "/api/chaptermatch":
            mode = params.get("mode", [bundle.config.mode])[0]
            zoom = _int_param(params, "zoom")
            try:
                return bundle.chaptermatch_payload(mode, zoom)
            except ValueError as exc:
                raise BadRequest(str(exc))
        if path == "/api/similarity":
            raw = params.get("phrases", [""])[0]
            items = [part for part in raw.split(",") if part.strip()]
            if not items:
                raise BadRequest("parameter 'phrases' is required: comma-separated ids or phrase text")
            selection = bundle.resolve_selection(items)
            return bundle.similarity_payload(selection)
        if path == "/api/pairs":
            top = _int_param(params, "top")
            min_g2 = params.get("min_g2")
            threshold = None
            if min_g2:
                try:
                    threshold = float(min_g2[0])
                except ValueError:
                    raise BadRequest(f"parameter 'min_g2' must be a number, got {min_g2[0]!r}")
            return bundle.collocations_payload(top_k=top, min_g2=threshold)
        raise BadRequest(f"unknown endpoint {path}")

    def _static(self, start_response, path: str):
        if self.ui_dir is None:
            return self._error(start_response, 404, f"no static UI configured; try /api/meta")
        relative = path.lstrip("/") or "index.html"
        target = (self.ui_dir / relative).resolve()
        if not target.is_relative_to(self.ui_dir.resolve()) or not target.is_file():
            return self._error(start_response, 404, f"not found: {path}")
        body = target.read_bytes()
        content_type = mimetypes.guess_type(target.name)[0] or "application/octet-stream"
        start_response(
            "200 OK",
            [("Content-Type", content_type), ("Content-Length", str(len(body)))],
        )
        return [body]

    def _error(self, start_response, status: int, message: str):
        body = _json_bytes({"error": message})
        reasons = {400: "Bad Request", 404: "Not Found", 405: "Method Not Allowed"}
        start_response(
            f"{status} {reasons.get(status, 'Error')}",
            [("Content-Type", "application/json; charset=utf-8"),
             ("Content-Length", str(len(body)))],
        )
        return [body]


class _ThreadingWSGIServer(ThreadingMixIn, WSGIServer):
    daemon_threads = True


def serve(bundle: AnalysisBundle, port: int, ui_dir: "str | Path | None" = None, host: str = "127.0.0.1"):
    app = App(bundle, ui_dir)
    server = make_server(host, port, app, server_class=_ThreadingWSGIServer)
    return server
