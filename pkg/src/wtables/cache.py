"""Content-addressed on-disk cache for expensive closures and reports.

Entries are keyed by a digest of the operation name, its parameters, and the
package version, so stale results can never be returned across code changes.
Writes are atomic-rename and therefore idempotent under concurrent workers.
"""

import hashlib
import json
import os
import tempfile
from pathlib import Path

from . import __version__

DEFAULT_DIR = Path(os.environ.get("WTABLES_CACHE", "~/.cache/wtables"))


def cache_key(op: str, params: dict) -> str:
    payload = json.dumps({"op": op, "params": params, "version": __version__},
                         sort_keys=True, default=str)
    return hashlib.sha256(payload.encode()).hexdigest()


class Store:
    def __init__(self, root=DEFAULT_DIR):
        self.root = Path(root).expanduser()

    def path(self, key: str) -> Path:
        return self.root / f"{key}.json"

    def get(self, key: str):
        p = self.path(key)
        if p.exists():
            with open(p) as fh:
                return json.load(fh)
        return None

    def put(self, key: str, value) -> None:
        self.root.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(value, fh)
            os.replace(tmp, self.path(key))
        finally:
            if os.path.exists(tmp):
                os.unlink(tmp)

    def memo(self, op: str, params: dict, compute):
        key = cache_key(op, params)
        hit = self.get(key)
        if hit is not None:
            return hit
        value = compute()
        self.put(key, value)
        return value
