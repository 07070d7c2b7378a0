"""Crossing and channel-change operators for the fundamental representation.

Every builder works in two modes.  Called with a :class:`CouplingParams`
it returns a complex matrix at the root-of-unity point; called with
``params=None`` it returns the exact matrix over :class:`~.ring.RadElem`.

Numerically, ``S`` and ``Sbar`` are assembled from real sine ratios
(substituting ``q = exp(i phi)``, ``A = exp(i N phi)``) instead of complex
square roots, so they come out manifestly real orthogonal.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Any, Optional

import numpy as np

from .errors import BasisMismatch, DegeneratePhase, DomainTooSmall
from .ring import A, DEFAULT_BASIS, ONE, Q, RadElem, RatFunc2

__all__ = [
    "BasisLabel",
    "CHANNEL",
    "IRREP",
    "CouplingParams",
    "Mat2",
    "make_params",
    "build_S",
    "build_T",
    "build_Sbar",
    "build_Tbar",
    "build_Tnd",
    "tnd_at",
    "diag",
]


class BasisLabel(enum.Enum):
    EMPTY = "∅"
    ADJ = "adj"
    SYM = "[2]"
    ANTISYM = "[1,1]"

    def __str__(self):
        return self.value


CHANNEL = (BasisLabel.EMPTY, BasisLabel.ADJ)
IRREP = (BasisLabel.SYM, BasisLabel.ANTISYM)

_PHASE_EPS = 1e-12


@dataclass(frozen=True)
class CouplingParams:
    N: int
    k: int
    phi: float
    q: complex
    A: complex


def make_params(N: int, k: int) -> CouplingParams:
    """Evaluation point ``q = exp(4 pi i/(k+N))``, ``A = q**N``.

    Requires ``k + N >= 4(N+1)`` so that every radicand ratio of the
    operators is nonnegative (equality is the boundary point where ``S``
    becomes diagonal).
    """
    N = int(N)
    k = int(k)
    if N < 2:
        raise DomainTooSmall(f"N={N} < 2")
    if k + N < 4 * (N + 1):
        raise DomainTooSmall(f"k+N={k + N} < 4(N+1)={4 * (N + 1)}")
    phi = 4 * math.pi / (k + N)
    # |q| = |A| = 1 exactly: build from cos/sin rather than powering q
    q = complex(math.cos(phi), math.sin(phi))
    A_val = complex(math.cos(N * phi), math.sin(N * phi))
    if abs(math.sin(phi)) < _PHASE_EPS or abs(math.sin(N * phi)) < _PHASE_EPS:
        raise DegeneratePhase(f"q - 1/q or A - 1/A vanishes at N={N}, k={k}")
    return CouplingParams(N=N, k=k, phi=phi, q=q, A=A_val)


class Mat2:
    """2x2 matrix over a scalar kind (``complex`` or ``RadElem``) with basis labels.

    ``row_basis``/``col_basis`` are pairs of :class:`BasisLabel`; products
    check that the inner labels agree.
    """

    __slots__ = ("entries", "row_basis", "col_basis")

    def __init__(self, entries, row_basis, col_basis):
        (a, b), (c, d) = entries
        self.entries = ((a, b), (c, d))
        self.row_basis = tuple(row_basis)
        self.col_basis = tuple(col_basis)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: "Mat2") -> "Mat2":
        if not isinstance(other, Mat2):
            return NotImplemented
        if self.col_basis != other.row_basis:
            raise BasisMismatch(
                f"cannot multiply: columns {_fmt_basis(self.col_basis)} "
                f"vs rows {_fmt_basis(other.row_basis)}"
            )
        x, y = self.entries, other.entries
        out = tuple(
            tuple(x[i][0] * y[0][j] + x[i][1] * y[1][j] for j in range(2))
            for i in range(2)
        )
        return Mat2(out, self.row_basis, other.col_basis)

    @property
    def is_exact(self) -> bool:
        return isinstance(self.entries[0][0], RadElem)

    def scalar_one(self):
        return RadElem.one(self.entries[0][0].basis) if self.is_exact else 1 + 0j

    def identity_like(self) -> "Mat2":
        if self.row_basis != self.col_basis:
            raise BasisMismatch("identity requires a square basis")
        one = self.scalar_one()
        zero = one - one
        return Mat2(((one, zero), (zero, one)), self.row_basis, self.col_basis)

    def transpose(self) -> "Mat2":
        (a, b), (c, d) = self.entries
        return Mat2(((a, c), (b, d)), self.col_basis, self.row_basis)

    def dagger(self) -> "Mat2":
        """Conjugate transpose, numeric matrices only.

        Exact matrices have no intrinsic conjugation (the formal roots carry
        no branch); use the builders' ``adjoint=True`` instead.
        """
        if self.is_exact:
            raise TypeError("dagger() of an exact matrix; build it with adjoint=True")
        (a, b), (c, d) = self.entries
        return Mat2(((a.conjugate(), c.conjugate()), (b.conjugate(), d.conjugate())),
                    self.col_basis, self.row_basis)

    def trace(self):
        return self.entries[0][0] + self.entries[1][1]

    def det(self):
        (a, b), (c, d) = self.entries
        return a * d - b * c

    def to_array(self) -> np.ndarray:
        if self.is_exact:
            raise TypeError("exact matrix has no array form; use evaluate()")
        return np.array(self.entries, dtype=complex)

    def evaluate(self, q: complex, A: complex) -> np.ndarray:
        if not self.is_exact:
            return self.to_array()
        return np.array([[e.eval(q, A) for e in row] for row in self.entries], dtype=complex)

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return (self.row_basis == other.row_basis and self.col_basis == other.col_basis
                and all(self.entries[i][j] == other.entries[i][j]
                        for i in range(2) for j in range(2)))

    __hash__ = None

    def __repr__(self):
        return (f"Mat2({self.entries!r}, rows={_fmt_basis(self.row_basis)}, "
                f"cols={_fmt_basis(self.col_basis)})")


def _fmt_basis(b):
    return "{" + ", ".join(str(x) for x in b) + "}"


def diag(a, d, basis) -> Mat2:
    zero = a - a
    return Mat2(((a, zero), (zero, d)), basis, basis)


# exact building blocks from the default radicand basis
# D1 = Aq - 1/(Aq), D2 = A/q - q/A, D3 = q + 1/q, D4 = A - 1/A
_D1, _D2, _D3, _D4 = DEFAULT_BASIS.radicands
_C_EXACT = RatFunc2(Q - Q ** -1, _D4)  # (q - 1/q)/(A - 1/A)


def _rad(value) -> RadElem:
    return RadElem.scalar(value)


def _s_exact(adjoint: bool):
    # sqrt(x/(D3 D4)) = sqrt(x D3 D4) / (D3 D4)
    norm = RatFunc2(ONE, _D3 * _D4)
    s11 = RadElem.sqrt((1, 2, 3), norm)   # sqrt(D2) / sqrt(D3 D4)
    s12 = RadElem.sqrt((0, 2, 3), norm)   # sqrt(D1) / sqrt(D3 D4)
    m = Mat2(((s11, s12), (s12, -s11)), CHANNEL, IRREP)
    return m.transpose() if adjoint else m


def _check_params(params):
    if not isinstance(params, CouplingParams):
        raise TypeError(f"expected CouplingParams or None, got {type(params).__name__}")


def _sin_upper(params: CouplingParams) -> float:
    # sin((N+1) phi); exactly zero on the boundary k + N = 4(N+1)
    if params.k + params.N == 4 * (params.N + 1):
        return 0.0
    return math.sin((params.N + 1) * params.phi)


def build_S(params: Optional[CouplingParams] = None, *, adjoint: bool = False) -> Mat2:
    """Channel-change matrix from the ``{[2], [1,1]}`` basis to ``{∅, adj}``.

    Real symmetric at the unitary point, so the adjoint is the transpose
    (with the basis labels swapped).
    """
    if params is None:
        return _s_exact(adjoint)
    _check_params(params)
    N, phi = params.N, params.phi
    den = 2 * math.cos(phi) * math.sin(N * phi)
    a = math.sqrt(max(0.0, math.sin((N - 1) * phi) / den))
    b = math.sqrt(max(0.0, _sin_upper(params) / den))
    m = Mat2(((complex(a), complex(b)), (complex(b), complex(-a))), CHANNEL, IRREP)
    return m.transpose() if adjoint else m


def build_T(params: Optional[CouplingParams] = None, *, adjoint: bool = False) -> Mat2:
    """Diagonal crossing ``diag(q/A, -1/(qA))`` in the ``{[2], [1,1]}`` basis."""
    if params is None:
        t1, t2 = Q * A ** -1, -(Q ** -1 * A ** -1)
        if adjoint:
            t1, t2 = t1.mirror(), t2.mirror()
        return diag(_rad(t1), _rad(t2), IRREP)
    _check_params(params)
    q, a = params.q, params.A
    t1, t2 = q / a, -1 / (q * a)
    if adjoint:
        t1, t2 = t1.conjugate(), t2.conjugate()
    return diag(t1, t2, IRREP)


def build_Sbar(params: Optional[CouplingParams] = None, *, adjoint: bool = False) -> Mat2:
    """Symmetric involution ``[[c, s], [s, -c]]`` in the ``{∅, adj}`` basis.

    ``c = (q - 1/q)/(A - 1/A)``, ``s = sqrt(D1 D2)/(A - 1/A)``; self-adjoint,
    so ``adjoint`` is accepted and ignored.
    """
    if params is None:
        c = _rad(_C_EXACT)
        s = RadElem.sqrt((0, 1), RatFunc2(ONE, _D4))
        return Mat2(((c, s), (s, -c)), CHANNEL, CHANNEL)
    _check_params(params)
    N, phi = params.N, params.phi
    sn = math.sin(N * phi)
    c = math.sin(phi) / sn
    s = math.sqrt(max(0.0, _sin_upper(params) * math.sin((N - 1) * phi))) / sn
    return Mat2(((complex(c), complex(s)), (complex(s), complex(-c))), CHANNEL, CHANNEL)


def build_Tbar(params: Optional[CouplingParams] = None, *, adjoint: bool = False) -> Mat2:
    """``diag(1, -A)`` in the ``{∅, adj}`` basis."""
    if params is None:
        t2 = -(A ** -1) if adjoint else -A
        return diag(_rad(ONE), _rad(t2), CHANNEL)
    _check_params(params)
    t2 = -params.A
    if adjoint:
        t2 = t2.conjugate()
    return diag(1 + 0j, t2, CHANNEL)


def build_Tnd(params: Optional[CouplingParams] = None, *, adjoint: bool = False) -> Mat2:
    """Non-diagonal crossing in the ``{∅, adj}`` basis::

        [[-A^2 c,  A s],
         [ A s,    c  ]]

    with ``c``, ``s`` as in :func:`build_Sbar`.  This equals
    ``diag(A^2, 1) @ S @ T @ S^+ @ diag(A^2, 1)``, not the bare product.
    The adjoint replaces ``A`` by ``1/A`` (``c`` and ``s`` are real).
    """
    if params is None:
        c = _C_EXACT
        s = RadElem.sqrt((0, 1), RatFunc2(ONE, _D4))
        a = A ** -1 if adjoint else A
        return Mat2(((_rad(-(a * a) * c), s * a), (s * a, _rad(c))), CHANNEL, CHANNEL)
    _check_params(params)
    sb = build_Sbar(params)
    c, s = sb[0, 0].real, sb[0, 1].real
    a = params.A.conjugate() if adjoint else params.A
    return Mat2(((-a * a * c, a * s), (a * s, complex(c))), CHANNEL, CHANNEL)


def tnd_at(q, A_val, *, adjoint: bool = False) -> np.ndarray:
    """Non-diagonal crossing as complex arrays at arbitrary points ``(q, A)``.

    Broadcasts over array inputs; the result has shape ``(..., 2, 2)``.  The
    complex square root branch is irrelevant for the ``(0, 0)`` entry of any
    power, which only sees ``s**2``.  Used for interpolation off the unit
    circle.
    """
    q = np.asarray(q, dtype=complex)
    a0 = np.asarray(A_val, dtype=complex)
    q, a0 = np.broadcast_arrays(q, a0)
    d1 = a0 * q - 1 / (a0 * q)
    d2 = a0 / q - q / a0
    d4 = a0 - 1 / a0
    c = (q - 1 / q) / d4
    s = np.sqrt(d1 * d2) / d4
    a = 1 / a0 if adjoint else a0
    out = np.empty(q.shape + (2, 2), dtype=complex)
    out[..., 0, 0] = -a * a * c
    out[..., 0, 1] = a * s
    out[..., 1, 0] = a * s
    out[..., 1, 1] = c
    return out


BUILDERS: dict[str, Any] = {
    "S": build_S,
    "T": build_T,
    "SBAR": build_Sbar,
    "TBAR": build_Tbar,
    "TND": build_Tnd,
}
