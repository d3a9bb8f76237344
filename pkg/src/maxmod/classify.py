"""Coefficient-level classification of the maximum-modulus set near 0.

For ``p = 1 + a z^k + ...`` the candidate tangent directions are the k
angles ``omega_j = (2 j pi - arg a) / k``.  Which candidates actually carry
a maximum curve is decided by an argument-resonance test on the
coefficients (the *exceptional* condition) and, term by term, by the
survivor weights ``t_j = 2|b| cos(n omega_j + arg b)``.  For non-exceptional
inputs the survivor recursion is exact and the number of curves equals the
inner degree; for exceptional ones it is reported as a heuristic.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import MonomialAllPlaneError, NotCubicFamilyError
from .poly import (
    HaymanForm,
    MonomialVerdict,
    Polynomial,
    core_polynomial,
    inner_degree,
    normalize,
)
from .util import reduce_angle

# Tolerances for the exact algebraic tests.  Doubles lose ~1e-16 per arg;
# axis-aligned user input lands within 1e-12, so 1e-9 separates "intended
# exactly" from "merely close".  Residuals in (EPS_ARG, NEAR_ARG] produce a
# near-exceptional warning instead of a verdict.
EPS_ARG = 1e-9
NEAR_ARG = 1e-6
EPS_T = 1e-9
EPS_MAG = 1e-9

MAGIC = "MAGIC"
NOT_MAGIC = "NOT_MAGIC"
UNKNOWN = "UNKNOWN"
PROVEN = "PROVEN"
HEURISTIC = "HEURISTIC"


@dataclass(frozen=True)
class ExceptionalWitness:
    """One resonance hit: ``m pi = (k/sigma)(m' pi - arg b_sigma) + arg a``."""

    m: int
    m_prime: int
    sigma: int
    residual: float


@dataclass(frozen=True)
class TermFilter:
    """Effect of one tail term ``b z^n`` on the survivor set."""

    n: int
    coeff: complex
    t_values: tuple[tuple[int, float], ...]  # (j, t_j) over the entering set
    retained: tuple[int, ...]


@dataclass(frozen=True)
class PredictedJ:
    j_set: tuple[int, ...]
    validity: str  # PROVEN | HEURISTIC
    t_history: tuple[TermFilter, ...]


@dataclass(frozen=True)
class Classification:
    mu: int
    N: int
    k: int
    a: complex
    omega: tuple[float, ...]
    exceptional: bool
    witnesses: tuple[ExceptionalWitness, ...]
    minimal: bool
    magic: str  # MAGIC | NOT_MAGIC | UNKNOWN
    predicted_count: int | tuple[int, ...]
    conjecture_count: int | None
    predicted_j: PredictedJ
    warnings: tuple[str, ...]

    def to_json_dict(self) -> dict:
        """Fixed external field set; see the CLI docs."""
        return {
            "mu": self.mu,
            "N": self.N,
            "omega": list(self.omega),
            "exceptional": self.exceptional,
            "witnesses": [
                {"m": w.m, "m_prime": w.m_prime, "sigma": w.sigma, "residual": w.residual}
                for w in self.witnesses
            ],
            "magic": self.magic,
            "predicted_count": (
                self.predicted_count
                if isinstance(self.predicted_count, int)
                else list(self.predicted_count)
            ),
            "conjecture_count": self.conjecture_count,
            "warnings": list(self.warnings),
        }


def omega_angles(h: HaymanForm) -> np.ndarray:
    """Candidate tangent angles ``(2 j pi - arg a)/k`` reduced to (-pi, pi]."""
    arg_a = cmath.phase(h.a)
    j = np.arange(h.k, dtype=float)
    out = reduce_angle((2.0 * j * math.pi - arg_a) / h.k)
    out = np.atleast_1d(out)
    out.setflags(write=False)
    return out


def _exceptional_scan(h: HaymanForm):
    """All resonance triples (m, m', sigma) plus near-miss warnings."""
    n_core, core = core_polynomial(h)
    k = h.k
    arg_a = cmath.phase(h.a)
    witnesses = []
    near = []
    for sigma in range(k + 1, n_core + 1):
        b = core.coeffs[sigma]
        if b == 0:
            continue
        arg_b = cmath.phase(b)
        for m in range(1, 2 * k - 2):
            m_prime = sigma * (m * math.pi - arg_a) / (k * math.pi) + arg_b / math.pi
            residual = abs(m_prime - round(m_prime))
            if residual <= EPS_ARG:
                witnesses.append(
                    ExceptionalWitness(m=m, m_prime=round(m_prime), sigma=sigma, residual=residual)
                )
            elif residual <= NEAR_ARG:
                near.append(
                    f"near-exceptional: m={m} sigma={sigma} residual={residual:.3e}"
                )
    return bool(witnesses), tuple(witnesses), tuple(near)


def is_exceptional(h: HaymanForm) -> tuple[bool, list[ExceptionalWitness]]:
    """Resonance test on the coefficient arguments, scanned up to the core.

    Empty m-range for k = 1, so such inputs are never exceptional.
    """
    flag, witnesses, _ = _exceptional_scan(h)
    return flag, list(witnesses)


def cubic_magic(h: HaymanForm) -> str:
    """Magic verdict for quadratics and cubics.

    Quadratics and cubics with k in {1, 3} are never magic.  A cubic with
    k = 2, i.e. ``1 + a z^2 + b z^3``, is magic iff ``Re(b a^{-3/2}) = 0``;
    either square-root branch gives the same verdict since the branches
    negate ``b a^{-3/2}``.
    """
    deg = h.tail.degree
    if deg == 2:
        return NOT_MAGIC
    if deg != 3:
        raise NotCubicFamilyError(f"tail degree {deg} is outside the quadratic/cubic family")
    if h.k in (1, 3):
        return NOT_MAGIC
    b_prime = h.tail.coeffs[3] * h.a ** -1.5
    return MAGIC if abs(b_prime.real) <= EPS_MAG * abs(b_prime) else NOT_MAGIC


def predict_J(h: HaymanForm) -> PredictedJ:
    """Survivor recursion over all tail terms above degree k.

    Starts from the full candidate set {0,...,k-1} (exact for two-term
    inputs) and, for each term ``b z^n`` in ascending degree, keeps the
    candidates maximizing ``t_j = 2|b| cos(n omega_j + arg b)`` up to a tie
    tolerance.  Exact for non-exceptional inputs (validity PROVEN), where
    the result is one residue class mod k/mu with mu elements.
    """
    k = h.k
    omega = omega_angles(h)
    mu = inner_degree(h)
    exceptional, _, _ = _exceptional_scan(h)

    j_set = list(range(k))
    history = []
    for n in h.tail.nonzero_exponents():
        if n <= k:
            continue
        b = h.tail.coeffs[n]
        two_abs_b = 2.0 * abs(b)
        arg_b = cmath.phase(b)
        t = {j: two_abs_b * math.cos(n * omega[j] + arg_b) for j in j_set}
        t_max = max(t.values())
        retained = [j for j in j_set if t[j] >= t_max - EPS_T * two_abs_b]
        history.append(
            TermFilter(
                n=n,
                coeff=b,
                t_values=tuple(sorted(t.items())),
                retained=tuple(retained),
            )
        )
        j_set = retained

    validity = HEURISTIC if exceptional else PROVEN
    if validity == PROVEN:
        step = k // mu
        expected = set(range(min(j_set), k, step)) if j_set else set()
        if len(j_set) != mu or set(j_set) != expected:
            raise RuntimeError(
                "internal error: proven survivor set is not one residue class "
                f"of size mu: J={j_set}, mu={mu}, k={k}"
            )
    return PredictedJ(j_set=tuple(j_set), validity=validity, t_history=tuple(history))


def classify(p: Polynomial) -> Classification:
    """Full coefficient-level report for a polynomial.

    Monomial inputs are rejected: their maximum modulus set is the whole
    plane and there is nothing to classify.
    """
    h = normalize(p)
    if isinstance(h, MonomialVerdict):
        raise MonomialAllPlaneError("the maximum modulus set of a monomial is the whole plane")
    mu = inner_degree(h)
    n_core, _ = core_polynomial(h)
    omega = omega_angles(h)
    exceptional, witnesses, near = _exceptional_scan(h)
    pj = predict_J(h)
    if p.truncated:
        near = near + (
            "truncated series: exact only if the omitted terms lie above the core degree",
        )

    if h.tail.degree in (2, 3):
        magic = cubic_magic(h)
    elif pj.validity == PROVEN:
        magic = NOT_MAGIC
    else:
        # identifying magic inputs beyond the cubic family is an open
        # problem; never guess
        magic = UNKNOWN

    predicted_count: int | tuple[int, ...]
    if not exceptional:
        predicted_count = mu
    else:
        predicted_count = tuple(range(mu, h.k + 1, mu))
    conjecture_count = 2 * mu if magic == MAGIC else None

    return Classification(
        mu=mu,
        N=n_core,
        k=h.k,
        a=h.a,
        omega=tuple(float(w) for w in omega),
        exceptional=exceptional,
        witnesses=witnesses,
        minimal=not exceptional,
        magic=magic,
        predicted_count=predicted_count,
        conjecture_count=conjecture_count,
        predicted_j=pj,
        warnings=near,
    )
