"""Content-addressed on-disk cache for command payloads.

Each entry is ``<sha256(key)>.json`` holding the key, the payload text and a
checksum of that text. A missing file, unreadable JSON, a key mismatch or a
bad checksum all count as a miss; the caller then recomputes and overwrites.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


class PayloadCache:
    def __init__(self, directory: str | os.PathLike | None):
        self.directory = Path(directory) if directory else None

    def _path(self, key: str) -> Path:
        assert self.directory is not None
        return self.directory / f"{_digest(key)}.json"

    @staticmethod
    def make_key(command: str, n: int, q: int, schema: int, **extra) -> str:
        parts = [command, f"n={n}", f"q={q}", f"schema={schema}"]
        parts += [f"{k}={extra[k]}" for k in sorted(extra)]
        return "|".join(parts)

    def get(self, key: str) -> dict | None:
        if self.directory is None:
            return None
        try:
            entry = json.loads(self._path(key).read_text(encoding="utf-8"))
            if entry["key"] != key or _digest(entry["payload"]) != entry["checksum"]:
                return None
            return json.loads(entry["payload"])
        except (OSError, ValueError, KeyError, TypeError):
            return None

    def put(self, key: str, payload: dict) -> None:
        if self.directory is None:
            return
        self.directory.mkdir(parents=True, exist_ok=True)
        text = json.dumps(payload, ensure_ascii=False)
        entry = json.dumps({"key": key, "checksum": _digest(text), "payload": text})
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(entry)
        os.replace(tmp, self._path(key))

    def get_or_compute(self, key: str, compute) -> dict:
        hit = self.get(key)
        if hit is not None:
            return hit
        payload = compute()
        self.put(key, payload)
        return payload
