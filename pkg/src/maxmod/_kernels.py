"""Hot numeric kernels: trigonometric term sums over theta grids.

Two interchangeable backends:

* ``numba`` -- @njit compiled loops (default when numba imports cleanly);
* ``numpy`` -- vectorized per-term loop, no compilation.

Select explicitly with the ``MAXMOD_BACKEND`` environment variable
(``numba`` | ``numpy`` | ``auto``).  Both backends accumulate terms in the
given order with Neumaier compensation for the value sum, so results agree
to the last few ulps; ``benchmarks/bench_backends.py`` compares their speed.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = [
    "BACKEND",
    "HAVE_NUMBA",
    "osc_sum",
    "d1d2_sum",
    "osc_sum_numpy",
    "d1d2_sum_numpy",
    "osc_sum_numba",
    "d1d2_sum_numba",
    "warmup",
]


def osc_sum_numpy(ap: np.ndarray, freqs: np.ndarray, phas: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    """Compensated sum of ``ap[t] * cos(freqs[t]*theta + phas[t])`` per theta."""
    s = np.zeros(thetas.shape[0])
    comp = np.zeros_like(s)
    for t in range(ap.shape[0]):
        x = ap[t] * np.cos(freqs[t] * thetas + phas[t])
        tot = s + x
        comp += np.where(np.abs(s) >= np.abs(x), (s - tot) + x, (x - tot) + s)
        s = tot
    return s + comp


def d1d2_sum_numpy(ap: np.ndarray, freqs: np.ndarray, phas: np.ndarray, thetas: np.ndarray):
    """First and second theta-derivatives of the cosine term sum."""
    d1 = np.zeros(thetas.shape[0])
    d2 = np.zeros_like(d1)
    for t in range(ap.shape[0]):
        w = freqs[t]
        arg = w * thetas + phas[t]
        d1 -= (ap[t] * w) * np.sin(arg)
        d2 -= (ap[t] * w * w) * np.cos(arg)
    return d1, d2


_env = os.environ.get("MAXMOD_BACKEND", "auto").strip().lower() or "auto"
if _env not in ("auto", "numba", "numpy"):
    raise RuntimeError(f"MAXMOD_BACKEND must be 'numba', 'numpy' or 'auto', got {_env!r}")

HAVE_NUMBA = False
osc_sum_numba = None
d1d2_sum_numba = None

if _env != "numpy":
    try:
        from numba import njit

        HAVE_NUMBA = True
    except ImportError:
        if _env == "numba":
            raise RuntimeError("MAXMOD_BACKEND=numba but numba is not importable")

if HAVE_NUMBA:

    @njit(cache=True, nogil=True)
    def _osc_sum_nb(ap, freqs, phas, thetas):  # pragma: no cover - compiled
        n = thetas.shape[0]
        m = ap.shape[0]
        out = np.empty(n)
        for i in range(n):
            th = thetas[i]
            s = 0.0
            comp = 0.0
            for t in range(m):
                x = ap[t] * np.cos(freqs[t] * th + phas[t])
                tot = s + x
                if abs(s) >= abs(x):
                    comp += (s - tot) + x
                else:
                    comp += (x - tot) + s
                s = tot
            out[i] = s + comp
        return out

    @njit(cache=True, nogil=True)
    def _d1d2_sum_nb(ap, freqs, phas, thetas):  # pragma: no cover - compiled
        n = thetas.shape[0]
        m = ap.shape[0]
        d1 = np.zeros(n)
        d2 = np.zeros(n)
        for i in range(n):
            th = thetas[i]
            s1 = 0.0
            s2 = 0.0
            for t in range(m):
                w = freqs[t]
                arg = w * th + phas[t]
                s1 -= (ap[t] * w) * np.sin(arg)
                s2 -= (ap[t] * w * w) * np.cos(arg)
            d1[i] = s1
            d2[i] = s2
        return d1, d2

    osc_sum_numba = _osc_sum_nb
    d1d2_sum_numba = _d1d2_sum_nb

BACKEND = "numba" if HAVE_NUMBA else "numpy"
osc_sum = osc_sum_numba if HAVE_NUMBA else osc_sum_numpy
d1d2_sum = d1d2_sum_numba if HAVE_NUMBA else d1d2_sum_numpy


def warmup() -> None:
    """Trigger JIT compilation (no-op on the numpy backend)."""
    ap = np.array([1.0, 0.5])
    fr = np.array([1.0, 2.0])
    ph = np.array([0.0, 0.1])
    th = np.array([0.0, 0.5])
    osc_sum(ap, fr, ph, th)
    d1d2_sum(ap, fr, ph, th)
