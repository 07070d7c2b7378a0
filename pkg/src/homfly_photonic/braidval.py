"""Operator words, two-strand invariants and an interpolation cross-check.

A word is multiplied left to right, its ``(∅, ∅)`` element is taken and
scaled by ``(A - 1/A)/(q - 1/q)``.  For the powers ``Tnd**n`` this gives the
two-strand torus family: knots for odd ``n``, two-component links for even
``n``.  Link values keep a ``1/(q - 1/q)`` and are returned as
:class:`~.ring.RatFunc2` with that denominator.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from . import operators as ops
from .errors import BasisMismatch, ReconstructionResidual, WordSyntaxError
from .operators import CHANNEL, CouplingParams, Mat2
from .ring import A, LaurentPoly2, Q, RadElem, RatFunc2, rad_reduce

__all__ = [
    "Chirality",
    "Token",
    "EvalResult",
    "Reconstruction",
    "parse_word",
    "format_word",
    "mat_pow",
    "eval_word",
    "two_strand_invariant",
    "framing_normalize",
    "ch_recursion_coeffs",
    "reconstruct_polynomial",
    "FRAMING_FACTOR",
]

Q_MINUS_QINV = Q - Q ** -1
PREFACTOR = RatFunc2(A - A ** -1, Q_MINUS_QINV)
#: Multiplicative factor carried by each crossing, ``-A**2``.
FRAMING_FACTOR = -(A * A)


class Chirality(enum.Enum):
    """``POSITIVE`` uses ``Tnd``; it reproduces ``A^2 - A^4 (q^2 + q^-2)`` at n=3."""

    POSITIVE = "pos"
    NEGATIVE = "neg"

    def flipped(self) -> "Chirality":
        return Chirality.NEGATIVE if self is Chirality.POSITIVE else Chirality.POSITIVE


@dataclass(frozen=True)
class Token:
    """One factor of a word: operator ``name`` raised to ``power``.

    ``name`` is one of ``S, S_DAG, T, T_DAG, SBAR, TBAR, TBAR_DAG, TND,
    TND_DAG``.  ``S``, ``S_DAG`` and ``SBAR`` take power 1 only.
    """

    name: str
    power: int = 1

    def __post_init__(self):
        if self.name not in _TOKEN_SPECS:
            raise WordSyntaxError(f"unknown operator {self.name!r}")
        if self.power < 1:
            raise WordSyntaxError(f"operator power must be >= 1, got {self.power}")
        if self.name in ("S", "S_DAG", "SBAR") and self.power != 1:
            raise WordSyntaxError(f"{self.name} takes no power")

    def matrix(self, params: Optional[CouplingParams] = None) -> Mat2:
        builder, adjoint = _TOKEN_SPECS[self.name]
        m = builder(params, adjoint=adjoint)
        return mat_pow(m, self.power) if self.power > 1 else m


_TOKEN_SPECS = {
    "S": (ops.build_S, False),
    "S_DAG": (ops.build_S, True),
    "T": (ops.build_T, False),
    "T_DAG": (ops.build_T, True),
    "SBAR": (ops.build_Sbar, False),
    "TBAR": (ops.build_Tbar, False),
    "TBAR_DAG": (ops.build_Tbar, True),
    "TND": (ops.build_Tnd, False),
    "TND_DAG": (ops.build_Tnd, True),
}

# text spelling used on the command line
_TEXT_NAMES = {
    "S": "S", "Sd": "S_DAG", "T": "T", "Td": "T_DAG", "Sb": "SBAR",
    "Tb": "TBAR", "Tbd": "TBAR_DAG", "Tnd": "TND", "Tndd": "TND_DAG",
}
_TEXT_SPELLING = {v: k for k, v in _TEXT_NAMES.items()}
_TOKEN_RE = re.compile(r"^([A-Za-z]+)(?:\^(\d+))?$")


def parse_word(text: str) -> list[Token]:
    """Parse ``"S Td^3 Sd"`` style words (space separated, optional ``^m``)."""
    tokens = []
    for piece in text.split():
        m = _TOKEN_RE.match(piece)
        if not m or m.group(1) not in _TEXT_NAMES:
            raise WordSyntaxError(f"cannot parse token {piece!r}")
        tokens.append(Token(_TEXT_NAMES[m.group(1)], int(m.group(2) or 1)))
    if not tokens:
        raise WordSyntaxError("empty word")
    return tokens


def format_word(tokens: Sequence[Token]) -> str:
    return " ".join(
        _TEXT_SPELLING[t.name] + (f"^{t.power}" if t.power != 1 else "") for t in tokens
    )


def mat_pow(M: Mat2, n: int) -> Mat2:
    """``M**n`` by repeated squaring; ``M**0`` is the identity."""
    if M.row_basis != M.col_basis:
        raise BasisMismatch("matrix power needs equal row and column bases")
    if n < 0:
        raise ValueError("negative matrix power")
    result = None
    base = M
    while n:
        if n & 1:
            result = base if result is None else result @ base
        n >>= 1
        if n:
            base = base @ base
    return M.identity_like() if result is None else result


@dataclass
class EvalResult:
    """Outcome of evaluating a closed word.

    ``invariant`` is a :class:`LaurentPoly2` (or :class:`RatFunc2` for links)
    in exact mode and a complex number in numeric mode.
    """

    raw_element: Union[RadElem, complex]
    invariant: Union[LaurentPoly2, RatFunc2, complex]
    framing_normalized: Union[LaurentPoly2, RatFunc2, complex, None] = None
    backend: str = "exact"


def _product(tokens: Sequence[Token], params) -> Mat2:
    mats = [t.matrix(params) for t in tokens]
    out = mats[0]
    for m in mats[1:]:
        out = out @ m
    return out


def _check_backend(backend, params):
    if backend not in ("exact", "numeric"):
        raise ValueError(f"backend must be 'exact' or 'numeric', got {backend!r}")
    if backend == "numeric" and params is None:
        raise ValueError("numeric backend requires CouplingParams")


def eval_word(word: Union[str, Sequence[Token]], backend: str = "exact",
              params: Optional[CouplingParams] = None, *,
              denominator: Optional[LaurentPoly2] = None) -> EvalResult:
    """Evaluate a closed word and scale its ``(∅, ∅)`` element.

    In exact mode the scaled element must reduce to a Laurent polynomial,
    otherwise :class:`NotDivisible` (or :class:`ResidualRadical`) is raised.
    Passing ``denominator=d`` instead accepts values of the form ``P/d`` and
    returns ``RatFunc2(P, d)``.
    """
    _check_backend(backend, params)
    tokens = parse_word(word) if isinstance(word, str) else list(word)
    if not tokens:
        raise WordSyntaxError("empty word")
    prod = _product(tokens, params if backend == "numeric" else None)
    if prod.row_basis != CHANNEL or prod.col_basis != CHANNEL:
        raise BasisMismatch(
            f"word {format_word(tokens)!r} does not map the ∅ channel to itself")
    raw = prod[0, 0]
    if backend == "numeric":
        q, a = params.q, params.A
        return EvalResult(raw, raw * (a - 1 / a) / (q - 1 / q), backend="numeric")
    scaled = raw * PREFACTOR
    if denominator is None:
        return EvalResult(raw, rad_reduce(scaled))
    return EvalResult(raw, RatFunc2(rad_reduce(scaled, denominator), denominator))


def _tnd_token(n: int, chirality: Chirality) -> Token:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return Token("TND" if chirality is Chirality.POSITIVE else "TND_DAG", n)


def two_strand_invariant(n: int, chirality: Chirality = Chirality.POSITIVE,
                         backend: str = "exact",
                         params: Optional[CouplingParams] = None) -> EvalResult:
    """Invariant of the two-strand closure with ``n`` crossings.

    Odd ``n`` gives a knot and an exact :class:`LaurentPoly2`; even ``n``
    gives a two-component link whose exact value is ``RatFunc2(P, q - 1/q)``.
    """
    chirality = Chirality(chirality)
    word = [_tnd_token(n, chirality)]
    den = None if n % 2 else Q_MINUS_QINV
    return eval_word(word, backend, params, denominator=den)


def framing_normalize(r: EvalResult, writhe: int) -> EvalResult:
    """Divide the invariant by ``(-A^2)**writhe``."""
    inv = r.invariant
    if isinstance(inv, (LaurentPoly2, RatFunc2)):
        f = FRAMING_FACTOR ** abs(writhe)
        if isinstance(inv, RatFunc2):
            num = inv.num.divexact(f) if writhe >= 0 else inv.num * f
            out = RatFunc2(num, inv.den)
        else:
            out = inv.divexact(f) if writhe >= 0 else inv * f
    else:
        raise TypeError("framing_normalize needs an exact invariant; "
                        "use framing_normalize_numeric for complex values")
    return EvalResult(r.raw_element, r.invariant, out, r.backend)


def framing_normalize_numeric(r: EvalResult, writhe: int, params: CouplingParams) -> EvalResult:
    f = (-(params.A ** 2)) ** writhe
    return EvalResult(r.raw_element, r.invariant, r.invariant / f, r.backend)


def ch_recursion_coeffs(params: Optional[CouplingParams] = None):
    """Trace and determinant of ``Tnd``: ``(-A (q - 1/q), -A^2)``.

    The ``(0,0)`` entries ``x_n`` of ``Tnd**n`` then obey
    ``x_{n+2} = trace * x_{n+1} - det * x_n``.
    """
    if params is None:
        return -(A * Q_MINUS_QINV), -(A * A)
    q, a = params.q, params.A
    return -a * (q - 1 / q), -(a * a)


@dataclass
class Reconstruction:
    value: Union[LaurentPoly2, RatFunc2]
    residual: float
    check_error: float


RESIDUAL_TOL = 1e-6


def _numeric_invariants(n: int, chirality: Chirality, qs, As) -> np.ndarray:
    # independent of the exact path: stacked numpy matrix power of the
    # complex-formula crossing at arbitrary (q, A)
    m = ops.tnd_at(qs, As, adjoint=chirality is Chirality.NEGATIVE)
    x = np.linalg.matrix_power(m, n)[..., 0, 0]
    return x * (As - 1 / As) / (qs - 1 / qs)


def reconstruct_polynomial(n: int, chirality: Chirality = Chirality.POSITIVE, *,
                           full_output: bool = False):
    """Recover the exact invariant from floating-point samples.

    The numeric invariant is sampled on a product grid of rotated roots of
    unity in ``q`` and ``A`` (independent variables, not tied by ``A = q**N``),
    and the coefficients come from a 2-D inverse DFT.  Exponent windows are
    ``|e_q| <= n+2`` and ``|e_A| <= 2n+2``.  Coefficients are rounded to
    integers after checking that the largest rounding distance is below
    ``1e-6``; the result is then checked at an off-grid point.  For even
    ``n`` the samples are multiplied by ``q - 1/q`` first and the result is
    returned as ``RatFunc2(P, q - 1/q)``.

    With ``full_output=True`` returns a :class:`Reconstruction` carrying the
    residual as well.
    """
    chirality = Chirality(chirality)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    kq, ka = n + 2, 2 * n + 2
    mq, ma = 2 * kq + 1, 2 * ka + 1
    # rotations keep q, A away from +-1 where q - 1/q or A - 1/A vanish
    aq, aa = np.pi / (2 * mq), np.pi / (2 * ma)
    tq = aq + 2 * np.pi * np.arange(mq) / mq
    ta = aa + 2 * np.pi * np.arange(ma) / ma
    qs = np.exp(1j * tq)[:, None]
    As = np.exp(1j * ta)[None, :]
    link = n % 2 == 0
    f = _numeric_invariants(n, chirality, qs, As)
    if link:
        f = f * (qs - 1 / qs)
    coef = np.fft.fft2(f) / (mq * ma)
    eq = np.fft.fftfreq(mq, 1 / mq).astype(int)
    ea = np.fft.fftfreq(ma, 1 / ma).astype(int)
    coef = coef * np.exp(-1j * aq * eq)[:, None] * np.exp(-1j * aa * ea)[None, :]
    rounded = np.rint(coef.real)
    residual = float(max(np.max(np.abs(coef.real - rounded)), np.max(np.abs(coef.imag))))
    if residual > RESIDUAL_TOL:
        raise ReconstructionResidual(f"pre-rounding residual {residual:.3g} > {RESIDUAL_TOL}")
    terms = {}
    for i, j in zip(*np.nonzero(rounded)):
        terms[(int(eq[i]), int(ea[j]))] = int(rounded[i, j])
    poly = LaurentPoly2(terms)
    # off-grid check guards against aliasing from a too-small window
    q0, a0 = 1.1 * np.exp(0.7j), 0.9 * np.exp(2.3j)
    target = complex(_numeric_invariants(n, chirality, np.array(q0), np.array(a0)))
    value = poly.eval(q0, a0)
    if link:
        value = value / (q0 - 1 / q0)
    check = abs(value - target)
    if check > RESIDUAL_TOL * max(1.0, abs(target)):
        raise ReconstructionResidual(
            f"reconstruction misses off-grid check by {check:.3g}; degree window too small?")
    result = RatFunc2(poly, Q_MINUS_QINV) if link else poly
    if full_output:
        return Reconstruction(result, residual, check)
    return result
