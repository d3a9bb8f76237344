"""Polynomial representation and reduction to the canonical near-origin form.

A polynomial is a finite sequence of complex coefficients in ascending degree
order.  Every analysis in this package starts by factoring out the leading
monomial ``c * z^m`` (which does not change the maximum modulus set) to reach
the canonical form ``1 + a z^k + higher order terms``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import PolyParseError, TruncatedSeriesError, ZeroPolynomialError


@dataclass(frozen=True)
class Polynomial:
    """Dense complex polynomial; ``coeffs[i]`` is the coefficient of ``z^i``.

    Trailing zeros are trimmed on construction, so the last coefficient is
    nonzero unless the polynomial is zero (empty tuple).  Only exact zeros are
    trimmed: the classification below is discontinuous in "coefficient = 0",
    so tiny coefficients are taken at face value.

    ``truncated`` marks the sequence as the initial part of a longer Taylor
    series.  Classification works on such inputs (exactly, provided the
    omitted terms sit above the core degree) but tracing refuses them.
    """

    coeffs: tuple[complex, ...]
    truncated: bool = False

    def __post_init__(self):
        cs = tuple(complex(c) for c in self.coeffs)
        end = len(cs)
        while end > 0 and cs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", cs[:end])

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def nonzero_exponents(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coeffs) if c != 0)

    def __call__(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            term = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            parts.append(f"({_fmt_complex(c)}){term}" if term else _fmt_complex(c))
        return " + ".join(parts)


@dataclass(frozen=True)
class MonomialVerdict:
    """Input was ``c * z^n``: its maximum modulus set is the whole plane."""

    is_monomial: bool = True


@dataclass(frozen=True)
class HaymanForm:
    """Factored form ``prefactor_scalar * z^prefactor_power * tail`` where
    ``tail = 1 + a z^k + ...`` with ``a != 0`` and ``k >= 1``."""

    prefactor_scalar: complex
    prefactor_power: int
    k: int
    a: complex
    tail: Polynomial


def normalize(p: Polynomial) -> HaymanForm | MonomialVerdict:
    """Factor out ``c * z^m`` so the remaining tail starts ``1 + a z^k + ...``.

    Returns a :class:`MonomialVerdict` when ``p`` has a single nonzero term.
    Raises :class:`ZeroPolynomialError` on the zero polynomial.
    """
    if p.is_zero:
        raise ZeroPolynomialError("cannot normalize the zero polynomial")
    nz = p.nonzero_exponents()
    if len(nz) == 1:
        return MonomialVerdict()
    m = nz[0]
    c = p.coeffs[m]
    # the leading tail coefficient is analytically 1; complex division c/c
    # rounds, so set it exactly
    tail = Polynomial(
        (1.0 + 0j,) + tuple(ci / c for ci in p.coeffs[m + 1 :]), truncated=p.truncated
    )
    k = nz[1] - m
    return HaymanForm(prefactor_scalar=c, prefactor_power=m, k=k, a=tail.coeffs[k], tail=tail)


def inner_degree(h: HaymanForm) -> int:
    """gcd of all positive exponents carrying a nonzero tail coefficient."""
    exps = [e for e in h.tail.nonzero_exponents() if e > 0]
    return math.gcd(*exps)


def core_polynomial(h: HaymanForm) -> tuple[int, Polynomial]:
    """Shortest truncation of the tail whose inner degree equals the tail's.

    Returns ``(N, core)`` where ``N`` is the least index ``>= k`` such that
    the gcd of nonzero exponents up to ``N`` equals ``inner_degree(h)``.
    """
    mu = inner_degree(h)
    g = 0
    for e in h.tail.nonzero_exponents():
        if e == 0:
            continue
        g = math.gcd(g, e)
        if g == mu:
            return e, Polynomial(h.tail.coeffs[: e + 1], truncated=h.tail.truncated)
    raise AssertionError("unreachable: gcd of all exponents is the inner degree")


def reciprocal(p: Polynomial) -> Polynomial:
    """Coefficient reversal ``z^n p(1/z)``; swaps structure at 0 and infinity."""
    if p.is_zero:
        raise ZeroPolynomialError("cannot reverse the zero polynomial")
    if p.truncated:
        raise TruncatedSeriesError("the reciprocal needs the true leading coefficient")
    return Polynomial(tuple(reversed(p.coeffs)))


# ---------------------------------------------------------------------------
# Text and JSON input formats (shared by CLI and files).
#
# A polynomial is written as comma-separated complex literals in ascending
# degree, e.g. "1,0,1,1i" for 1 + z^2 + i z^3.  A literal is an optional real
# part followed by an optional imaginary part with an "i" suffix, such as
# "2", "-0.5", "1i", "-i", "0.001+1i".
# ---------------------------------------------------------------------------

_NUM = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_COEFF_RE = re.compile(rf"^(?P<s1>[+-])?(?P<n1>{_NUM})?(?:(?P<s2>[+-])?(?P<n2>{_NUM})?(?P<i>i))?$")


def _signed(sign: str | None, digits: str) -> float:
    return -float(digits) if sign == "-" else float(digits)


def parse_coeff(token: str, position: int = 0) -> complex:
    text = token.strip()
    m = _COEFF_RE.fullmatch(text)
    if not m or not text:
        raise PolyParseError(token, position)
    if m.group("i"):
        if m.group("s2") is None and m.group("n2") is None:
            # the leading part is the imaginary magnitude: "1i", "-i", "i"
            return complex(0.0, _signed(m.group("s1"), m.group("n1") or "1"))
        if m.group("n1") is None:
            raise PolyParseError(token, position, "imaginary part follows an empty real part")
        real = _signed(m.group("s1"), m.group("n1"))
        return complex(real, _signed(m.group("s2"), m.group("n2") or "1"))
    if m.group("n1") is None:
        raise PolyParseError(token, position)
    return complex(_signed(m.group("s1"), m.group("n1")), 0.0)


def parse_poly(text: str) -> Polynomial:
    tokens = text.split(",")
    return Polynomial(tuple(parse_coeff(tok, i) for i, tok in enumerate(tokens)))


def poly_from_json(data) -> Polynomial:
    """Build a polynomial from ``{"coeffs": [[re, im], ...]}``.

    An optional ``"truncated": true`` marks a truncated Taylor series.
    """
    if not isinstance(data, dict) or "coeffs" not in data:
        raise PolyParseError(repr(data), 0, 'expected an object with a "coeffs" array')
    coeffs = []
    for i, pair in enumerate(data["coeffs"]):
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise PolyParseError(repr(pair), i, "expected a [re, im] pair")
        coeffs.append(complex(float(pair[0]), float(pair[1])))
    return Polynomial(tuple(coeffs), truncated=bool(data.get("truncated", False)))


def _fmt_real(v: float) -> str:
    if v == int(v) and abs(v) < 1e16:
        return str(int(v))
    return repr(v)


def _fmt_complex(c: complex) -> str:
    re_, im = c.real, c.imag
    if im == 0:
        return _fmt_real(re_)
    imag = f"{_fmt_real(im)}i" if im < 0 else f"+{_fmt_real(im)}i"
    if re_ == 0:
        return imag.lstrip("+")
    return f"{_fmt_real(re_)}{imag}"


def format_poly(p: Polynomial) -> str:
    """Inverse of :func:`parse_poly` (canonical form)."""
    if p.is_zero:
        return "0"
    return ",".join(_fmt_complex(c) for c in p.coeffs)
