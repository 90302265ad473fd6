"""Shared memoization infrastructure.

Two layers live here. ``Memo`` is the in-process cache used by the Groebner
and staircase engines; it guarantees that concurrent lookups are safe and at
most one computation runs per key. ``DiskCache`` is the optional on-disk
result store used by the job runner; values are small JSON documents keyed by
a content hash, so cache hits are bit-identical to recomputation.
"""

from __future__ import annotations

import hashlib
import json
import os
import threading


class Memo:
    """Thread-safe compute-once cache.

    Values are immutable once stored. If several workers request the same
    missing key, exactly one runs the computation and the rest wait on it.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._done: dict = {}
        self._pending: dict = {}

    def get_or_compute(self, key, fn):
        with self._lock:
            if key in self._done:
                return self._done[key]
            event = self._pending.get(key)
            if event is None:
                event = threading.Event()
                self._pending[key] = event
                owner = True
            else:
                owner = False
        if not owner:
            event.wait()
            with self._lock:
                return self._done[key]
        try:
            value = fn()
        except BaseException:
            # Leave the key recomputable; wake waiters so they retry and fail
            # with the same error instead of hanging.
            with self._lock:
                del self._pending[key]
            event.set()
            raise
        with self._lock:
            self._done[key] = value
            del self._pending[key]
        event.set()
        return value

    def clear(self):
        with self._lock:
            self._done.clear()


_registry_lock = threading.Lock()
_registry: dict[str, Memo] = {}


def memo(namespace: str) -> Memo:
    """Return the process-wide memo for a namespace, creating it on demand."""
    with _registry_lock:
        cache = _registry.get(namespace)
        if cache is None:
            cache = _registry[namespace] = Memo()
        return cache


def clear_all_memos():
    with _registry_lock:
        for cache in _registry.values():
            cache.clear()


def content_key(*parts) -> str:
    """Stable hex digest of an arbitrary tuple of printable parts."""
    blob = repr(parts).encode("utf-8")
    return hashlib.sha256(blob).hexdigest()


class DiskCache:
    """Content-addressed key/value store of JSON-serializable results."""

    def __init__(self, directory: str):
        self.directory = directory
        os.makedirs(directory, exist_ok=True)
        self._lock = threading.Lock()

    def _path(self, key: str) -> str:
        return os.path.join(self.directory, key + ".json")

    def get(self, key: str):
        path = self._path(key)
        try:
            with open(path, "r", encoding="utf-8") as fh:
                return json.load(fh)["value"]
        except (OSError, ValueError, KeyError):
            return None

    def put(self, key: str, value):
        path = self._path(key)
        tmp = path + ".tmp"
        with self._lock:
            with open(tmp, "w", encoding="utf-8") as fh:
                json.dump({"value": value}, fh)
            os.replace(tmp, path)
