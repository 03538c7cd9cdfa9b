"""Vectorised helpers for exhaustive scans over algebras on GF(p)^n.

Elements are identified with their index sum_i c_i p^i (little-endian
digits), the same order used by ``StructureConstants.element_at``.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from functools import cached_property
from typing import Callable

import numpy as np

from .core import StructureConstants

CHUNK = 1 << 14


def structure_tensor(a: StructureConstants) -> np.ndarray:
    return np.array(a.table, dtype=np.int64)


def element_coords(a: StructureConstants, start: int, stop: int) -> np.ndarray:
    """Coordinates of the elements with indices in [start, stop)."""
    p = a.field.p
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, a.dim), dtype=np.int64)
    for i in range(a.dim):
        out[:, i] = idx % p
        idx //= p
    return out


def coords_to_index(a: StructureConstants, coords: np.ndarray) -> np.ndarray:
    p = a.field.p
    weights = p ** np.arange(a.dim, dtype=np.int64)
    return coords @ weights


def _safe_int64(a: StructureConstants) -> bool:
    p = a.field.p
    return p is not None and a.dim * a.dim * (p - 1) ** 3 < 2**62


class ElementTables:
    """Full multiplication and subtraction tables on all p^n elements."""

    def __init__(self, a: StructureConstants):
        if a.field.p is None or not _safe_int64(a):
            raise ValueError("element tables need a small finite field")
        self.algebra = a
        self.p = a.field.p
        self.size = a.size
        self.coords = element_coords(a, 0, self.size)
        dtype = np.uint16 if self.size <= 1 << 16 else np.int64
        self.dtype = dtype
        c = structure_tensor(a)
        n = self.size
        mt = np.empty((n, n), dtype=dtype)
        # product coordinates row block by row block to bound memory
        step = max(1, (1 << 20) // max(1, n))
        for s in range(0, n, step):
            xs = self.coords[s:s + step]
            left = np.einsum("ai,ijk->ajk", xs, c) % self.p
            prod = np.einsum("bj,ajk->abk", self.coords, left) % self.p
            mt[s:s + step] = coords_to_index(a, prod)
        self.mul = mt
        diff = (self.coords[:, None, :] - self.coords[None, :, :]) % self.p
        self.sub = coords_to_index(a, diff).astype(dtype)
        self.add = coords_to_index(a, (self.coords[:, None, :] + self.coords[None, :, :]) % self.p).astype(dtype)

    def assoc_slice(self, x: int) -> np.ndarray:
        """(x, y, z) as an index array over all (y, z)."""
        mt = self.mul
        xy = mt[x]                      # (N,)
        left = mt[xy]                   # (xy) z over (y, z)
        right = mt[x][mt]               # x (y z)
        return self.sub[left, right]

    @cached_property
    def assoc(self) -> np.ndarray:
        n = self.size
        out = np.empty((n, n, n), dtype=self.dtype)
        for x in range(n):
            out[x] = self.assoc_slice(x)
        return out


def _inverse_table(p: int) -> np.ndarray:
    inv = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        inv[a] = pow(a, -1, p)
    return inv


def singular_mask(mats: np.ndarray, p: int) -> np.ndarray:
    """Batched test of det(M) == 0 mod p for an array of square matrices."""
    m = np.array(mats, dtype=np.int64) % p
    b, n, _ = m.shape
    singular = np.zeros(b, dtype=bool)
    inv = _inverse_table(p) if p <= 1 << 16 else None
    rows = np.arange(b)
    for c in range(n):
        nz = m[:, c:, c] != 0
        has = nz.any(axis=1)
        singular |= ~has
        piv = c + nz.argmax(axis=1)
        top = m[rows, c].copy()
        m[rows, c] = m[rows, piv]
        m[rows, piv] = top
        pv = m[:, c, c]
        if inv is not None:
            pinv = inv[pv]
        else:
            pinv = np.array([pow(int(v), -1, p) if v else 0 for v in pv], dtype=np.int64)
        m[:, c, :] = m[:, c, :] * pinv[:, None] % p
        if c + 1 < n:
            fct = m[:, c + 1:, c]
            m[:, c + 1:, :] = (m[:, c + 1:, :] - fct[:, :, None] * m[:, None, c, :]) % p
    return singular


def multiplication_matrices(a: StructureConstants, coords: np.ndarray, side: str) -> np.ndarray:
    """L_x (side 'left') or R_x (side 'right') for a batch of coordinate rows.

    Entry [b, k, j] is coordinate k of x_b * e_j (left) or e_j * x_b (right).
    """
    c = structure_tensor(a)
    if side == "left":
        return np.einsum("bi,ijk->bkj", coords, c) % a.field.p
    return np.einsum("bi,jik->bkj", coords, c) % a.field.p


def first_hit(total: int, chunk_fn: Callable[[int, int], int | None], threads: int = 1, chunk: int = CHUNK) -> int | None:
    """Lowest index in [0, total) reported by ``chunk_fn(start, stop)``.

    ``chunk_fn`` returns the lowest hit inside its range or None.  Chunks
    are processed in waves of ``threads``; the first wave with any hit
    decides, so the answer does not depend on the thread count.
    """
    starts = list(range(0, total, chunk))
    if threads <= 1:
        for s in starts:
            hit = chunk_fn(s, min(s + chunk, total))
            if hit is not None:
                return hit
        return None
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for w in range(0, len(starts), threads):
            wave = starts[w:w + threads]
            hits = list(pool.map(lambda s: chunk_fn(s, min(s + chunk, total)), wave))
            found = [h for h in hits if h is not None]
            if found:
                return min(found)
    return None
