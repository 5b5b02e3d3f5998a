"""Hot numeric kernels with a numba fast path and a pure-numpy fallback.

The per-realization SINR term evaluation dominates Monte Carlo runtime, so it
is compiled with numba when available.  Set MIMO_SIM_BACKEND=numpy to force
the fallback (or =numba to insist on the compiled path); the default prefers
numba whenever it imports.  Both paths are exercised against each other in the
test suite and timed against each other in benchmarks/bench_kernels.py.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba installed
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def decorator(func):
            return func

        if args and callable(args[0]):
            return args[0]
        return decorator


_ENV_VAR = "MIMO_SIM_BACKEND"


def backend() -> str:
    """Active kernel backend: 'numba' or 'numpy'."""
    choice = os.environ.get(_ENV_VAR, "").strip().lower()
    if choice == "numpy":
        return "numpy"
    if choice == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("MIMO_SIM_BACKEND=numba but numba is not importable")
        return "numba"
    if choice not in ("", "auto"):
        raise RuntimeError(f"unrecognized {_ENV_VAR}={choice!r}")
    return "numba" if HAVE_NUMBA else "numpy"


def sinr_terms_batch(g_det, g_mmse, p_own, v_sum, inter_sum, sigma_n2):
    """SINR decomposition terms for every (realization, user) pair.

    Parameters
    ----------
    g_det : (R, K, M) complex
        Detector-side channel estimates (LS or MMSE, whichever detector runs).
    g_mmse : (R, K, M) complex
        MMSE estimates; the signal/intra-cell channel side of each product.
    p_own : (K,) float
        Data powers of the served users.
    v_sum : (M, M) complex
        Power-weighted sum of MMSE error covariances.
    inter_sum : (M, M) complex
        Power-weighted sum of inter-cell channel second moments.
    sigma_n2 : float
        Receiver noise power.

    Returns
    -------
    signal, i1, i2, i3, i4 : (R, K) float arrays.
    """
    g_det = np.ascontiguousarray(g_det, dtype=np.complex128)
    g_mmse = np.ascontiguousarray(g_mmse, dtype=np.complex128)
    p_own = np.ascontiguousarray(p_own, dtype=np.float64)
    v_sum = np.ascontiguousarray(v_sum, dtype=np.complex128)
    inter_sum = np.ascontiguousarray(inter_sum, dtype=np.complex128)
    if backend() == "numba":
        return _sinr_terms_numba(g_det, g_mmse, p_own, v_sum, inter_sum, float(sigma_n2))
    return _sinr_terms_numpy(g_det, g_mmse, p_own, v_sum, inter_sum, float(sigma_n2))


def _sinr_terms_numpy(g_det, g_mmse, p_own, v_sum, inter_sum, sigma_n2):
    n_real, n_users, _ = g_det.shape
    cross = np.einsum("rkm,rim->rki", g_det.conj(), g_mmse)
    power = np.abs(cross) ** 2 * p_own[None, None, :]
    diag = np.arange(n_users)
    signal = power[:, diag, diag]
    i1 = power.sum(axis=2) - signal
    det_conj = g_det.conj()
    i2 = np.sum(det_conj * (g_det @ v_sum.T), axis=-1).real
    i3 = np.sum(det_conj * (g_det @ inter_sum.T), axis=-1).real
    i4 = sigma_n2 * np.sum(det_conj * g_det, axis=-1).real
    return signal, i1, i2, i3, i4


@njit(cache=True)
def _sinr_terms_numba_impl(g_det, g_mmse, p_own, v_sum, inter_sum, sigma_n2):
    n_real, n_users, m = g_det.shape
    signal = np.empty((n_real, n_users))
    i1 = np.empty((n_real, n_users))
    i2 = np.empty((n_real, n_users))
    i3 = np.empty((n_real, n_users))
    i4 = np.empty((n_real, n_users))
    for r in range(n_real):
        for k in range(n_users):
            acc1 = 0.0
            sig = 0.0
            for i in range(n_users):
                dot = 0.0 + 0.0j
                for s in range(m):
                    dot += np.conj(g_det[r, k, s]) * g_mmse[r, i, s]
                term = p_own[i] * (dot.real * dot.real + dot.imag * dot.imag)
                if i == k:
                    sig = term
                else:
                    acc1 += term
            q2 = 0.0
            q3 = 0.0
            norm = 0.0
            for s in range(m):
                row2 = 0.0 + 0.0j
                row3 = 0.0 + 0.0j
                for t in range(m):
                    row2 += v_sum[s, t] * g_det[r, k, t]
                    row3 += inter_sum[s, t] * g_det[r, k, t]
                c = np.conj(g_det[r, k, s])
                q2 += (c * row2).real
                q3 += (c * row3).real
                norm += (c * g_det[r, k, s]).real
            signal[r, k] = sig
            i1[r, k] = acc1
            i2[r, k] = q2
            i3[r, k] = q3
            i4[r, k] = sigma_n2 * norm
    return signal, i1, i2, i3, i4


def _sinr_terms_numba(g_det, g_mmse, p_own, v_sum, inter_sum, sigma_n2):
    if not HAVE_NUMBA:  # pragma: no cover
        return _sinr_terms_numpy(g_det, g_mmse, p_own, v_sum, inter_sum, sigma_n2)
    return _sinr_terms_numba_impl(g_det, g_mmse, p_own, v_sum, inter_sum, sigma_n2)
