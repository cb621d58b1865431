"""Seed plumbing: one master seed fans out to labeled 64-bit sub-seeds so
generator and strategy randomness never collide."""

from __future__ import annotations

import hashlib


def split_seed(master: int, label: str) -> int:
    digest = hashlib.sha256(f"{master}:{label}".encode()).digest()
    return int.from_bytes(digest[:8], "big")
