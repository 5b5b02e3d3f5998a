"""Circularly symmetric complex-Gaussian vectors: sampling and moment identities.

Every channel, estimate, and estimation error in the simulator is a complex
normal vector, so the quadratic and quartic expectations here are the
foundation of all closed-form spectral-efficiency expressions.  The convention
is circular symmetry throughout: covariance is E[(x-m)(x-m)^H], no
pseudo-covariance, and each component's real and imaginary part carries half
the diagonal variance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import (
    DimMismatchError,
    IndefiniteCovarianceError,
    NotHermitianError,
)

# Eigenvalues of a covariance matrix in [-PSD_EPS * trace/dim, 0) are clipped
# to zero; anything lower is treated as genuinely indefinite.  Scattering
# covariances with tiny angular spread are routinely rank-deficient and land
# slightly negative in floating point.
PSD_EPS = 1e-9

_HERMITIAN_ATOL = 1e-12


def _check_hermitian(a, name="matrix"):
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimMismatchError(f"{name} must be square, got shape {a.shape}")
    scale = 1.0 + float(np.abs(a).max(initial=0.0))
    if float(np.abs(a - a.conj().T).max(initial=0.0)) > _HERMITIAN_ATOL * scale:
        raise NotHermitianError(f"{name} is not Hermitian within tolerance")


def hermitian_part(a):
    """Exactly Hermitian symmetrization (A + A^H)/2."""
    return (a + a.conj().T) / 2


@dataclass(eq=False)
class ComplexNormalDist:
    """CN(mean, covariance) with Hermitian positive-semidefinite covariance.

    The PSD requirement is enforced lazily: eigenvalue clipping happens when
    the sampling factor is first requested, so constructing statistics for
    thousands of links stays cheap.
    """

    mean: np.ndarray
    covariance: np.ndarray

    def __post_init__(self):
        self.mean = np.ascontiguousarray(self.mean, dtype=np.complex128)
        self.covariance = np.ascontiguousarray(self.covariance, dtype=np.complex128)
        if self.mean.ndim != 1:
            raise DimMismatchError(f"mean must be 1-D, got shape {self.mean.shape}")
        _check_hermitian(self.covariance, "covariance")
        if self.covariance.shape[0] != self.mean.shape[0]:
            raise DimMismatchError(
                f"mean dim {self.mean.shape[0]} != covariance dim {self.covariance.shape[0]}"
            )
        self._factor = None

    @property
    def dim(self) -> int:
        return self.mean.shape[0]

    def factor(self) -> np.ndarray:
        """Cached G with G G^H equal to the eigenvalue-clipped covariance."""
        if self._factor is None:
            self._factor = factor_psd(self.covariance)
        return self._factor


def factor_psd(cov) -> np.ndarray:
    """Factor a Hermitian PSD matrix as G G^H via eigendecomposition.

    Eigen-based rather than Cholesky so that rank-deficient covariances
    (common for small angular spreads) factor cleanly after clipping.

    Raises NotHermitianError or IndefiniteCovarianceError.
    """
    cov = np.asarray(cov, dtype=np.complex128)
    _check_hermitian(cov, "covariance")
    w, v = np.linalg.eigh(cov)
    scale = max(float(np.trace(cov).real) / cov.shape[0], 0.0)
    threshold = PSD_EPS * scale
    if w.size and float(w[0]) < -threshold:
        raise IndefiniteCovarianceError(
            f"most negative eigenvalue {w[0]:.3e} below -{threshold:.3e}"
        )
    np.clip(w, 0.0, None, out=w)
    return v * np.sqrt(w)


def sample(dist: ComplexNormalDist, rng: np.random.Generator, size=None):
    """Draw from CN(m, R) as m + G w, w having i.i.d. unit-variance entries.

    Returns shape (dim,) for size=None, else (size, dim).
    """
    n = 1 if size is None else int(size)
    g = dist.factor()
    w = rng.standard_normal((n, dist.dim)) + 1j * rng.standard_normal((n, dist.dim))
    w *= np.sqrt(0.5)
    x = dist.mean + w @ g.T
    return x[0] if size is None else x


def quad_expectation(a, dist: ComplexNormalDist) -> complex:
    """E[x^H A x] = Tr{A (Sigma + m m^H)} for x ~ CN(m, Sigma)."""
    a = np.asarray(a, dtype=np.complex128)
    if a.shape != (dist.dim, dist.dim):
        raise DimMismatchError(f"matrix shape {a.shape} does not match dim {dist.dim}")
    return complex(np.trace(a @ dist.covariance) + np.vdot(dist.mean, a @ dist.mean))


def expected_norm_sq(dist: ComplexNormalDist) -> float:
    """E[||x||^2] = Tr{Sigma} + ||m||^2."""
    return float(np.trace(dist.covariance).real + np.vdot(dist.mean, dist.mean).real)


def outer_moment(dist: ComplexNormalDist) -> np.ndarray:
    """E[x x^H] = Sigma + m m^H."""
    return dist.covariance + np.outer(dist.mean, dist.mean.conj())


def quartic_expectation(a_mat, a, b_mat, b, c_mat, c, d_mat, d, dist) -> complex:
    """E[(Ax+a)^H (Bx+b) (Cx+c)^H (Dx+d)] for x ~ CN(m, Sigma).

    Four-term closed form:

        Tr{A^H B S C^H D S}
        + (Cm+c)^H D S A^H (Bm+b)
        + (Am+a)^H B S C^H (Dm+d)
        + (Tr{B S A^H} + (Am+a)^H (Bm+b)) (Tr{D S C^H} + (Cm+c)^H (Dm+d))
    """
    dim = dist.dim
    mats = [np.asarray(x, dtype=np.complex128) for x in (a_mat, b_mat, c_mat, d_mat)]
    vecs = [np.asarray(x, dtype=np.complex128) for x in (a, b, c, d)]
    for mat in mats:
        if mat.shape != (dim, dim):
            raise DimMismatchError(f"matrix shape {mat.shape} does not match dim {dim}")
    for vec in vecs:
        if vec.shape != (dim,):
            raise DimMismatchError(f"vector shape {vec.shape} does not match dim {dim}")
    am, bm, cm, dm = mats
    av, bv, cv, dv = vecs
    s = dist.covariance
    m = dist.mean
    am_a = am @ m + av
    bm_b = bm @ m + bv
    cm_c = cm @ m + cv
    dm_d = dm @ m + dv
    ah = am.conj().T
    ch = cm.conj().T
    t1 = np.trace(ah @ bm @ s @ ch @ dm @ s)
    t2 = np.vdot(cm_c, dm @ s @ ah @ bm_b)
    t3 = np.vdot(am_a, bm @ s @ ch @ dm_d)
    t4 = (np.trace(bm @ s @ ah) + np.vdot(am_a, bm_b)) * (
        np.trace(dm @ s @ ch) + np.vdot(cm_c, dm_d)
    )
    return complex(t1 + t2 + t3 + t4)


def expected_norm_fourth(dist: ComplexNormalDist) -> float:
    """E[||x||^4] = Tr{Sigma^2} + 2 m^H Sigma m + (Tr{Sigma} + ||m||^2)^2.

    Evaluated through the general quartic identity with identity matrices and
    zero offsets, so the two code paths agree bit for bit.
    """
    eye = np.eye(dist.dim, dtype=np.complex128)
    zero = np.zeros(dist.dim, dtype=np.complex128)
    return float(
        quartic_expectation(eye, zero, eye, zero, eye, zero, eye, zero, dist).real
    )


@dataclass(frozen=True)
class SplitReport:
    """Diagonal/off-diagonal decomposition of three Hermitian expressions.

    Each pair sums to the direct value: Tr{A^2}, x^H A x, and Tr{A B}.
    The off-diagonal share of Tr{A^2} is 2 sum_{i>j} |a_ij|^2 >= 0.
    """

    trace_sq: tuple[float, float]
    quad_form: tuple[float, float]
    trace_prod: tuple[float, float]


def offdiag_splits(a, b, x) -> SplitReport:
    """Split Tr{A^2}, x^H A x, Tr{AB} into diagonal-only and off-diagonal parts."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    x = np.asarray(x, dtype=np.complex128)
    n = a.shape[0]
    if a.shape != (n, n) or b.shape != (n, n) or x.shape != (n,):
        raise DimMismatchError(
            f"incompatible shapes A{a.shape}, B{b.shape}, x{x.shape}"
        )
    lo = np.tril_indices(n, -1)
    a_lo = a[lo]
    ad = a.diagonal().real
    bd = b.diagonal().real

    trace_sq = (
        float(np.sum(ad**2)),
        float(2.0 * np.sum(np.abs(a_lo) ** 2)),
    )
    quad_form = (
        float(np.sum(ad * np.abs(x) ** 2)),
        float(2.0 * np.sum(a_lo * x.conj()[lo[0]] * x[lo[1]]).real),
    )
    trace_prod = (
        float(np.sum(ad * bd)),
        float(2.0 * np.sum(a_lo.conj() * b[lo]).real),
    )
    return SplitReport(trace_sq=trace_sq, quad_form=quad_form, trace_prod=trace_prod)
