"""Exact evaluation of |p(r e^{i theta})|^2 and its theta-derivatives.

Writing ``p = sum a_l z^l``, the squared modulus on a circle expands into a
finite trigonometric sum

    |p(r e^{i t})|^2 = sum_l |a_l|^2 r^{2l}
                     + sum_{j<l} 2|a_j||a_l| r^{j+l} cos((l-j) t + arg a_l - arg a_j).

The diagonal part is independent of theta; the cross part carries all the
angular structure, and comparing cross sums directly (method :meth:`osc`)
avoids the cancellation against the constant 1 that would otherwise drown
signals of order r^n near the origin.  Terms are stored in ascending power
of r and accumulated with compensated summation.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import ZeroPolynomialError
from .poly import Polynomial
from .util import reduce_angle


@dataclass(frozen=True)
class ModulusExpansion:
    """Precomputed trigonometric expansion of ``|p(r e^{i theta})|^2``."""

    diag_pows: np.ndarray  # 2*l per nonzero coefficient
    diag_amps: np.ndarray  # |a_l|^2
    cross_pows: np.ndarray  # j+l per unordered pair j < l
    cross_amps: np.ndarray  # 2|a_j||a_l|
    cross_freqs: np.ndarray  # l-j
    cross_phas: np.ndarray  # arg a_l - arg a_j
    all_pows: np.ndarray  # diagonal and cross merged, ascending power
    all_amps: np.ndarray
    all_freqs: np.ndarray  # 0 for diagonal terms
    all_phas: np.ndarray

    @property
    def diagonal(self) -> list[tuple[float, float]]:
        return list(zip(self.diag_pows.tolist(), self.diag_amps.tolist()))

    @property
    def cross(self) -> list[tuple[float, float, float, float]]:
        return list(
            zip(
                self.cross_pows.tolist(),
                self.cross_amps.tolist(),
                self.cross_freqs.tolist(),
                self.cross_phas.tolist(),
            )
        )

    # -- evaluation -----------------------------------------------------

    def _eval(self, pows, amps, freqs, phas, r: float, theta):
        th = np.atleast_1d(np.asarray(reduce_angle(theta), dtype=float))
        ap = amps * r ** pows
        out = _kernels.osc_sum(ap, freqs, phas, th)
        if np.ndim(theta) == 0:
            return float(out[0])
        return out

    def mod2(self, r: float, theta):
        """``|p(r e^{i theta})|^2``; theta may be a scalar or an array."""
        return self._eval(self.all_pows, self.all_amps, self.all_freqs, self.all_phas, r, theta)

    def base(self, r: float) -> float:
        """Theta-independent diagonal part of :meth:`mod2`."""
        return float(np.sum(self.diag_amps * r ** self.diag_pows))

    def osc(self, r: float, theta):
        """Theta-dependent cross part; ``mod2 = base + osc``."""
        return self._eval(self.cross_pows, self.cross_amps, self.cross_freqs, self.cross_phas, r, theta)

    def d1d2(self, r: float, theta):
        """First and second theta-derivative arrays of :meth:`mod2`."""
        th = np.atleast_1d(np.asarray(reduce_angle(theta), dtype=float))
        ap = self.cross_amps * r ** self.cross_pows
        return _kernels.d1d2_sum(ap, self.cross_freqs, self.cross_phas, th)

    def dmod2_dtheta(self, r: float, theta):
        """Exact termwise d/dtheta of :meth:`mod2` (diagonal terms drop out)."""
        d1, _ = self.d1d2(r, theta)
        if np.ndim(theta) == 0:
            return float(d1[0])
        return d1

    def d2mod2_dtheta2(self, r: float, theta):
        """Exact termwise second theta-derivative of :meth:`mod2`."""
        _, d2 = self.d1d2(r, theta)
        if np.ndim(theta) == 0:
            return float(d2[0])
        return d2

    # -- magnitude bounds used by the tracer -----------------------------

    def osc_spread_bound(self, r: float) -> float:
        """Upper bound for max-min of :meth:`osc` over a circle."""
        return 2.0 * float(np.sum(self.cross_amps * r ** self.cross_pows))

    def d1_bound(self, r: float) -> float:
        """Upper bound for |dmod2_dtheta| over a circle."""
        return float(np.sum(self.cross_amps * self.cross_freqs * r ** self.cross_pows))

    def d2_bound(self, r: float) -> float:
        return float(np.sum(self.cross_amps * self.cross_freqs**2 * r ** self.cross_pows))


def expand(p: Polynomial) -> ModulusExpansion:
    """Build the trigonometric expansion of ``|p|^2`` from the coefficients.

    One diagonal term per nonzero coefficient and one cross term per
    unordered pair of distinct nonzero coefficients.
    """
    if p.is_zero:
        raise ZeroPolynomialError("cannot expand the zero polynomial")
    exps = np.array(p.nonzero_exponents(), dtype=float)
    cs = np.array([p.coeffs[int(e)] for e in exps], dtype=complex)
    mags = np.abs(cs)
    args = np.angle(cs)

    diag_pows = 2.0 * exps
    diag_amps = mags**2

    jj, ll = np.triu_indices(len(exps), k=1)
    cross_pows = exps[jj] + exps[ll]
    cross_amps = 2.0 * mags[jj] * mags[ll]
    cross_freqs = exps[ll] - exps[jj]
    cross_phas = args[ll] - args[jj]

    order = np.lexsort((cross_freqs, cross_pows))
    cross_pows = cross_pows[order]
    cross_amps = cross_amps[order]
    cross_freqs = cross_freqs[order]
    cross_phas = cross_phas[order]

    all_pows = np.concatenate([diag_pows, cross_pows])
    all_amps = np.concatenate([diag_amps, cross_amps])
    all_freqs = np.concatenate([np.zeros_like(diag_pows), cross_freqs])
    all_phas = np.concatenate([np.zeros_like(diag_pows), cross_phas])
    order = np.lexsort((all_freqs, all_pows))

    arrays = (
        diag_pows,
        diag_amps,
        cross_pows,
        cross_amps,
        cross_freqs,
        cross_phas,
        all_pows[order],
        all_amps[order],
        all_freqs[order],
        all_phas[order],
    )
    for a in arrays:
        a.setflags(write=False)
    return ModulusExpansion(*arrays)


def direct_mod2(p: Polynomial, r: float, theta: float) -> float:
    """Oracle: Horner evaluation of ``p`` at ``r e^{i theta}``, then |.|^2."""
    z = r * cmath.exp(1j * theta)
    v = p(z)
    return v.real * v.real + v.imag * v.imag
