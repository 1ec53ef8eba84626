"""Overpass API client with a content-addressed response cache.

Every raw response is written to cache/<city>/<query-hash>.json before
parsing, so experiments replay offline and snapshot hashes are stable.
Remote access is serialized process-wide: the public endpoint enforces
a per-client rate limit.
"""

import hashlib
import json
import logging
import os
import re
import threading
import time

import requests

log = logging.getLogger(__name__)

DEFAULT_ENDPOINT = "https://overpass-api.de/api/interpreter"
ENDPOINT_ENV_VAR = "STATIONSCOUT_OVERPASS_URL"

_RETRYABLE = {429, 500, 502, 503, 504}

_fetch_lock = threading.Lock()


class OverpassError(RuntimeError):
    pass


def city_slug(city_name: str) -> str:
    slug = re.sub(r"[^a-z0-9]+", "_", city_name.strip().lower()).strip("_")
    if not slug:
        raise ValueError(f"unusable city name {city_name!r}")
    return slug


def query_hash(ql: str) -> str:
    return hashlib.sha256(ql.encode()).hexdigest()[:16]


class OverpassClient:
    def __init__(
        self,
        cache_root,
        endpoint: str | None = None,
        max_attempts: int = 5,
        backoff_base: float = 2.0,
        session=None,
        sleep=time.sleep,
    ):
        self.cache_root = cache_root
        self.endpoint = endpoint or os.environ.get(ENDPOINT_ENV_VAR, DEFAULT_ENDPOINT)
        self.max_attempts = max_attempts
        self.backoff_base = backoff_base
        self.session = session or requests.Session()
        self.sleep = sleep

    def cache_path(self, city_name: str, ql: str) -> str:
        return os.path.join(
            self.cache_root, city_slug(city_name), f"{query_hash(ql)}.json"
        )

    def _fetch(self, ql: str) -> bytes:
        last = None
        for attempt in range(self.max_attempts):
            if attempt:
                self.sleep(self.backoff_base * 2 ** (attempt - 1))
            try:
                with _fetch_lock:
                    resp = self.session.post(self.endpoint, data={"data": ql}, timeout=300)
            except requests.RequestException as e:
                last = f"transport error: {e}"
                continue
            if resp.status_code == 200:
                return resp.content
            last = f"HTTP {resp.status_code}"
            if resp.status_code not in _RETRYABLE:
                break
            log.warning("overpass returned %s, retrying", resp.status_code)
        raise OverpassError(f"query failed after {self.max_attempts} attempts: {last}")

    def query(self, city_name: str, ql: str) -> dict:
        """Run (or replay) one query; returns the parsed JSON payload."""
        path = self.cache_path(city_name, ql)
        if os.path.exists(path):
            with open(path, "rb") as f:
                raw = f.read()
        else:
            raw = self._fetch(ql)
            os.makedirs(os.path.dirname(path), exist_ok=True)
            tmp = path + ".tmp"
            with open(tmp, "wb") as f:
                f.write(raw)
            os.replace(tmp, path)
        try:
            return json.loads(raw)
        except json.JSONDecodeError as e:
            raise OverpassError(
                f"malformed response in {path} at byte {e.pos}: {e.msg}"
            ) from e

    def raw_cached(self, city_name: str, ql: str) -> bytes:
        """Cached payload bytes for snapshot hashing; query() must have run."""
        with open(self.cache_path(city_name, ql), "rb") as f:
            return f.read()
