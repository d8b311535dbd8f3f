"""Truncated lattice sums over Z + Zi.

Two interchangeable backends compute, for each z, the raw square-truncated sums

    s2(z) = 1/z^2 + sum' [1/(z - w)^2 - 1/w^2]
    s3(z) = sum 1/(z - w)^3

over w = m + n i with |m|, |n| <= radius.  The numba kernel is the default when
numba imports cleanly; the vectorised numpy path is used otherwise, or when a
caller passes ``backend="numpy"``.  Both paths must agree to rounding error.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

try:
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is a hard dependency in CI
    NUMBA_AVAILABLE = False


def use_numba() -> bool:
    return NUMBA_AVAILABLE


def backend_name() -> str:
    return "numba" if use_numba() else "numpy"


if NUMBA_AVAILABLE:

    @njit(cache=True, nogil=True)
    def _sums_numba(z, radius):
        out2 = np.empty(z.size, dtype=np.complex128)
        out3 = np.empty(z.size, dtype=np.complex128)
        for k in range(z.size):
            zk = z[k]
            s2 = 1.0 / (zk * zk)
            s3 = 1.0 / (zk * zk * zk)
            for m in range(-radius, radius + 1):
                for n in range(-radius, radius + 1):
                    if m == 0 and n == 0:
                        continue
                    w = complex(m, n)
                    d = zk - w
                    d2 = d * d
                    s2 += 1.0 / d2 - 1.0 / (w * w)
                    s3 += 1.0 / (d2 * d)
            out2[k] = s2
            out3[k] = s3
        return out2, out3


@lru_cache(maxsize=8)
def _lattice(radius: int) -> np.ndarray:
    m, n = np.meshgrid(np.arange(-radius, radius + 1), np.arange(-radius, radius + 1), indexing="ij")
    w = (m + 1j * n).ravel()
    return w[w != 0]


def _sums_numpy(z: np.ndarray, radius: int, chunk: int = 64):
    w = _lattice(radius)
    inv_w2 = (1.0 / (w * w)).sum()
    out2 = np.empty(z.size, dtype=np.complex128)
    out3 = np.empty(z.size, dtype=np.complex128)
    for start in range(0, z.size, chunk):
        zc = z[start:start + chunk]
        d = zc[:, None] - w[None, :]
        d2 = d * d
        out2[start:start + chunk] = 1.0 / (zc * zc) + (1.0 / d2).sum(axis=1) - inv_w2
        out3[start:start + chunk] = 1.0 / (zc * zc * zc) + (1.0 / (d2 * d)).sum(axis=1)
    return out2, out3


def lattice_sums(z, radius: int, backend: str | None = None):
    """Raw truncated sums (s2, s3) for an array of points; see module docstring."""
    z = np.ascontiguousarray(np.atleast_1d(np.asarray(z, dtype=np.complex128)))
    if backend is None:
        backend = backend_name()
    if backend == "numba":
        if not NUMBA_AVAILABLE:
            raise RuntimeError("numba backend requested but numba is not importable")
        return _sums_numba(z, int(radius))
    if backend == "numpy":
        return _sums_numpy(z, int(radius))
    raise ValueError(f"unknown backend {backend!r}")


@lru_cache(maxsize=8)
def truncated_power_sum(radius: int, power: int) -> complex:
    """sum' w^{-power} over the truncation square (exact same points as the kernels)."""
    w = _lattice(radius)
    return complex((w ** (-power)).sum())
