"""On-disk JSON result cache with checksums and atomic writes.

Each entry is a file whose first line is ``sha256:<hex>`` over the JSON body
that follows. Entries are keyed by command, canonical arguments and a hash of
the package source, so editing the code invalidates old results.
"""
from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from functools import lru_cache
from pathlib import Path
from typing import Any, Optional

log = logging.getLogger(__name__)

CACHE_ENV = "STACKSORTING_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "stacksorting"


@lru_cache(maxsize=1)
def code_version() -> str:
    digest = hashlib.sha256()
    src = Path(__file__).resolve().parent
    for path in sorted(src.glob("*.py")):
        digest.update(path.name.encode())
        digest.update(path.read_bytes())
    return digest.hexdigest()[:16]


def _checksum(body: str) -> str:
    return hashlib.sha256(body.encode()).hexdigest()


class ResultCache:
    def __init__(self, directory: Optional[os.PathLike] = None, enabled: bool = True):
        self.directory = Path(directory) if directory is not None else default_cache_dir()
        self.enabled = enabled

    def key(self, command: str, args: dict) -> str:
        blob = json.dumps([command, args, code_version()], sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    def _path(self, key: str) -> Path:
        return self.directory / f"{key}.json"

    def get(self, key: str) -> Optional[Any]:
        if not self.enabled:
            return None
        path = self._path(key)
        try:
            text = path.read_text()
        except FileNotFoundError:
            return None
        header, _, body = text.partition("\n")
        if header != f"sha256:{_checksum(body)}":
            log.warning("discarding corrupt cache entry %s", path)
            path.unlink(missing_ok=True)
            return None
        try:
            return json.loads(body)
        except json.JSONDecodeError:
            log.warning("discarding unreadable cache entry %s", path)
            path.unlink(missing_ok=True)
            return None

    def put(self, key: str, payload: Any) -> None:
        if not self.enabled:
            return
        self.directory.mkdir(parents=True, exist_ok=True)
        body = json.dumps(payload, sort_keys=True)
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(f"sha256:{_checksum(body)}\n{body}")
            os.replace(tmp, self._path(key))
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise

    def fetch(self, command: str, args: dict, compute):
        """Cached value for (command, args), computing and storing it on a miss."""
        key = self.key(command, args)
        hit = self.get(key)
        if hit is not None:
            return hit
        value = compute()
        self.put(key, value)
        return value
