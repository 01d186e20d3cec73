"""Synchronous client for the service.

Without a server URL the app is mounted in-process through the ASGI
transport, so the CLI works with no running daemon; with one, the same
calls go over the wire.
"""

from __future__ import annotations

import asyncio
from typing import Any

import httpx


class ServiceError(RuntimeError):
    def __init__(self, status: int, detail: str):
        super().__init__(detail)
        self.status = status
        self.detail = detail


class ServiceClient:
    def __init__(self, server: str | None = None):
        self._server = server

    def _make_client(self) -> httpx.AsyncClient:
        if self._server:
            return httpx.AsyncClient(base_url=self._server, timeout=600.0)
        from .service import create_app

        transport = httpx.ASGITransport(app=create_app())
        return httpx.AsyncClient(
            transport=transport, base_url="http://isolation-lab.internal", timeout=None
        )

    def _call(self, method: str, path: str, payload: dict | None = None) -> Any:
        async def go() -> Any:
            async with self._make_client() as cx:
                r = await cx.request(method, path, json=payload)
            if r.status_code >= 400:
                try:
                    detail = r.json().get("detail", r.text)
                except ValueError:
                    detail = r.text
                raise ServiceError(r.status_code, str(detail))
            return r.json()

        return asyncio.run(go())

    def health(self) -> dict:
        return self._call("GET", "/health")

    def pattern_info(self, text: str) -> dict:
        return self._call("POST", "/patterns/resolve", {"text": text})

    def solve(self, graph6: str, patterns: list[str], all_cycles: bool = False) -> dict:
        return self._call(
            "POST",
            "/solve",
            {"graph6": graph6, "family": {"patterns": patterns, "all_cycles": all_cycles}},
        )

    def gen_special(
        self, pattern: str, m: int, pure: bool = False, include_layout: bool = False
    ) -> dict:
        return self._call(
            "POST",
            "/gen/special",
            {"pattern": pattern, "m": m, "pure": pure, "include_layout": include_layout},
        )

    def gen_fplus(self, pattern: str) -> dict:
        return self._call("POST", "/gen/fplus", {"pattern": pattern})

    def recognize(self, pattern: str, graphs: list[str]) -> dict:
        return self._call("POST", "/recognize", {"pattern": pattern, "graphs": graphs})

    def enumerate(
        self,
        n_max: int,
        m_min: int = 0,
        m_max: int | None = None,
        connected_only: bool = False,
    ) -> dict:
        return self._call(
            "POST",
            "/enumerate",
            {"n_max": n_max, "m_min": m_min, "m_max": m_max, "connected_only": connected_only},
        )

    def verify(self, **kwargs: Any) -> dict:
        return self._call("POST", "/verify", kwargs)
