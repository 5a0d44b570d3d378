"""Canonical JSON and a content-addressed on-disk report cache."""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable

import numpy as np

from . import __version__
from .errors import CacheCorrupt

SAFE_INT = 2**53


def exact(obj):
    """Convert to JSON-safe values without losing exactness."""
    if isinstance(obj, dict):
        return {str(k): exact(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [exact(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return exact(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        v = int(obj)
        return v if abs(v) < SAFE_INT else str(v)
    if isinstance(obj, Fraction):
        return exact(obj.numerator) if obj.denominator == 1 else str(obj)
    if obj is None or isinstance(obj, str):
        return obj
    raise TypeError(f"cannot serialise {type(obj).__name__} exactly")


def canonical_json(obj, indent: int | None = None) -> str:
    seps = (",", ":") if indent is None else (",", ": ")
    return json.dumps(exact(obj), sort_keys=True, indent=indent, separators=seps, ensure_ascii=True)


def sha256(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


@dataclass(frozen=True)
class TaskDescriptor:
    command: str
    quiver: dict | None
    params: dict

    def canonical(self) -> str:
        return canonical_json({"command": self.command, "quiver": self.quiver, "params": self.params})

    def digest(self, version: str = __version__) -> str:
        return sha256(canonical_json({"task": json.loads(self.canonical()), "version": version}))


@dataclass(frozen=True)
class CachedReport:
    digest: str
    version: str
    payload: dict
    created: int


class ReportCache:
    """Entries live at ``root/<digest[:2]>/<digest>.json``."""

    def __init__(self, root, version: str = __version__):
        self.root = Path(root)
        self.version = version

    def path(self, digest: str) -> Path:
        return self.root / digest[:2] / f"{digest}.json"

    def lookup(self, task: TaskDescriptor) -> CachedReport | None:
        digest = task.digest(self.version)
        path = self.path(digest)
        try:
            text = path.read_text()
        except FileNotFoundError:
            return None
        try:
            entry = json.loads(text)
            payload = entry["payload"]
            ok = (
                entry["digest"] == digest
                and entry["version"] == self.version
                and entry["payload_digest"] == sha256(canonical_json(payload))
            )
        except (ValueError, KeyError, TypeError) as exc:
            raise CacheCorrupt(f"{path}: {exc}") from exc
        if not ok:
            raise CacheCorrupt(f"{path}: digest mismatch")
        return CachedReport(digest, self.version, payload, entry.get("created", 0))

    def store(self, task: TaskDescriptor, payload: dict) -> CachedReport:
        digest = task.digest(self.version)
        path = self.path(digest)
        path.parent.mkdir(parents=True, exist_ok=True)
        payload = json.loads(canonical_json(payload))
        entry = {
            "digest": digest,
            "version": self.version,
            "task": json.loads(task.canonical()),
            "payload": payload,
            "payload_digest": sha256(canonical_json(payload)),
            "created": int(time.time()),
        }
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(canonical_json(entry))
                fh.flush()
                os.fsync(fh.fileno())
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        return CachedReport(digest, self.version, payload, entry["created"])

    def discard(self, task: TaskDescriptor) -> None:
        try:
            self.path(task.digest(self.version)).unlink()
        except FileNotFoundError:
            pass

    def fetch_or_compute(self, task: TaskDescriptor, compute: Callable[[], dict]) -> tuple[dict, str]:
        """Payload plus its provenance: "hit", "miss" or "recomputed" (after a corrupt entry)."""
        status = "miss"
        try:
            hit = self.lookup(task)
        except CacheCorrupt:
            self.discard(task)
            hit = None
            status = "recomputed"
        if hit is not None:
            return hit.payload, "hit"
        return self.store(task, compute()).payload, status
