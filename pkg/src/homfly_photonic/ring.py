"""Exact scalars for the two-strand calculus.

Three layers:

* :class:`LaurentPoly2` -- integer Laurent polynomials in ``q`` and ``A``,
  stored as ``{(e_q, e_A): coeff}`` with zero coefficients dropped.
* :class:`RatFunc2` -- fractions of those, compared by cross-multiplication
  (no gcd canonicalization).
* :class:`RadElem` -- elements of the extension by formal square roots of a
  fixed list of radicands.  A component is keyed by a bitmask; bit ``i`` set
  means the factor ``sqrt(D_i)`` is present.

Everything is immutable.  Coefficients are Python ints, so there is no
overflow.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import BasisMismatch, NotDivisible, ResidualRadical, ZeroBase

__all__ = [
    "LaurentPoly2",
    "RatFunc2",
    "RadicandBasis",
    "RadElem",
    "DEFAULT_BASIS",
    "Q",
    "A",
    "ONE",
    "ZERO",
    "lp_mul",
    "lp_divexact",
    "lp_eval",
    "rf_equals",
    "rad_mul",
    "rad_reduce",
]

Exponent = tuple[int, int]


class LaurentPoly2:
    """Integer Laurent polynomial in ``q`` and ``A``.

    Terms are kept in canonical form: a plain dict from ``(e_q, e_A)`` to a
    nonzero int.  Two polynomials are equal iff their term dicts are equal.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None):
        clean = {}
        if terms:
            for (eq, ea), c in terms.items():
                c = int(c)
                if c:
                    clean[(int(eq), int(ea))] = c
        self._terms = clean
        self._hash = None

    # construction helpers

    @classmethod
    def const(cls, c: int) -> "LaurentPoly2":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, e_q: int = 0, e_A: int = 0, coeff: int = 1) -> "LaurentPoly2":
        return cls({(e_q, e_A): coeff})

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly2":
        # caller guarantees canonical form
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    # arithmetic

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly2):
            return other
        if isinstance(other, int):
            return LaurentPoly2.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly2._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly2._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Exponent, int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                e = (a1 + a2, b1 + b2)
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly2({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise NotDivisible(f"cannot invert non-monomial {self}")
            ((eq, ea), c), = self._terms.items()
            if c not in (1, -1):
                raise NotDivisible(f"cannot invert {self} over the integers")
            return LaurentPoly2({(eq * n, ea * n): c ** (-n)})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2.const(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def map_exponents(self, f) -> "LaurentPoly2":
        return LaurentPoly2({f(e): c for e, c in self._terms.items()})

    def mirror(self) -> "LaurentPoly2":
        """Substitute ``q -> 1/q`` and ``A -> 1/A``."""
        return self.map_exponents(lambda e: (-e[0], -e[1]))

    def q_reflect(self) -> "LaurentPoly2":
        """Substitute ``q -> 1/q`` only."""
        return self.map_exponents(lambda e: (-e[0], e[1]))

    def degree_bounds(self) -> tuple[int, int, int, int]:
        """``(min e_q, max e_q, min e_A, max e_A)``; raises on the zero polynomial."""
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        eqs = [e[0] for e in self._terms]
        eas = [e[1] for e in self._terms]
        return min(eqs), max(eqs), min(eas), max(eas)

    def eval(self, q: complex, A: complex) -> complex:
        if q == 0 or A == 0:
            raise ZeroBase("Laurent polynomial evaluated at q=0 or A=0")
        q = complex(q)
        A = complex(A)
        return sum((c * q ** eq * A ** ea for (eq, ea), c in self._terms.items()), 0j)

    def divexact(self, other: "LaurentPoly2") -> "LaurentPoly2":
        return lp_divexact(self, other)

    # rendering

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        return sorted(self._terms.items(), key=lambda t: (-t[0][1], -t[0][0]))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, ((eq, ea), c) in enumerate(self.sorted_terms()):
            factors = [str(abs(c))]
            for sym, e in (("A", ea), ("q", eq)):
                if e == 1:
                    factors.append(sym)
                elif e:
                    factors.append(f"{sym}^{e}")
            body = "*".join(factors)
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"LaurentPoly2({str(self)!r})"


ZERO = LaurentPoly2()
ONE = LaurentPoly2.const(1)
Q = LaurentPoly2.monomial(1, 0)
A = LaurentPoly2.monomial(0, 1)


def lp_mul(a: LaurentPoly2, b: LaurentPoly2) -> LaurentPoly2:
    return a * b


def lp_eval(p: LaurentPoly2, q_val: complex, A_val: complex) -> complex:
    return p.eval(q_val, A_val)


def _shift_to_polynomial(p: LaurentPoly2) -> tuple[dict, Exponent]:
    mq, _, ma, _ = p.degree_bounds()
    return {(eq - mq, ea - ma): c for (eq, ea), c in p.items()}, (mq, ma)


def lp_divexact(a: LaurentPoly2, b: LaurentPoly2) -> LaurentPoly2:
    """Exact quotient ``a / b`` as an integer Laurent polynomial.

    Both operands are shifted to ordinary polynomials with no monomial factor;
    a Laurent quotient then has to be an ordinary polynomial, and is found by
    long division treating ``q`` as the main variable over ``Q(A)``
    (lexicographic leading terms, ``q`` first).  Any nonzero remainder or
    non-integer coefficient raises :class:`NotDivisible`.
    """
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return ZERO
    if b.is_monomial():
        ((bq, bA), bc), = b.items()
        out = {}
        for (eq, ea), c in a.items():
            if c % bc:
                raise NotDivisible(f"{a} is not divisible by {b} over the integers")
            out[(eq - bq, ea - bA)] = c // bc
        return LaurentPoly2._raw(out)

    rem, (aq, aA) = _shift_to_polynomial(a)
    div, (bq, bA) = _shift_to_polynomial(b)
    rem = {e: Fraction(c) for e, c in rem.items()}
    lead_e = max(div)
    lead_c = div[lead_e]
    # bounds: a quotient term can never have exponents beyond these
    max_q = max(e[0] for e in rem) - lead_e[0]
    quot: dict[Exponent, Fraction] = {}
    while rem:
        e = max(rem)
        te = (e[0] - lead_e[0], e[1] - lead_e[1])
        if te[0] < 0 or te[1] < 0 or te[0] > max_q:
            raise NotDivisible(f"{a} is not divisible by {b}")
        tc = rem[e] / lead_c
        quot[te] = tc
        for de, dc in div.items():
            k = (de[0] + te[0], de[1] + te[1])
            v = rem.get(k, 0) - tc * dc
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    out = {}
    for (eq, ea), c in quot.items():
        if c.denominator != 1:
            raise NotDivisible(f"quotient {a} / {b} has non-integer coefficients")
        out[(eq + aq - bq, ea + aA - bA)] = int(c)
    return LaurentPoly2(out)


class RatFunc2:
    """Fraction ``num / den`` of Laurent polynomials, never reduced by gcd.

    Additions with equal (or mutually dividing) denominators keep the
    denominator small, which is enough for the 2x2 products used here.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = ONE if den is None else _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("RatFunc2 with zero denominator")
        if num.is_zero():
            den = ONE
        elif den.is_monomial() and not den == ONE:
            # monomial denominators fold into the numerator when possible
            ((_, _), c), = den.items()
            if c in (1, -1):
                num, den = num * den ** -1, ONE
        self.num = num
        self.den = den

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFunc2):
            return other
        if isinstance(other, (int, LaurentPoly2)):
            return RatFunc2(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return _collapse(self.num + other.num, self.den)
        for small, big in ((self, other), (other, self)):
            try:
                k = lp_divexact(big.den, small.den)
            except NotDivisible:
                continue
            return _collapse(small.num * k + big.num, big.den)
        return _collapse(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc2(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatFunc2(ZERO)
        return _collapse(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return self * RatFunc2(other.den, other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None  # equality is not canonical

    def eval(self, q: complex, A: complex) -> complex:
        return self.num.eval(q, A) / self.den.eval(q, A)

    def mirror(self) -> "RatFunc2":
        return RatFunc2(self.num.mirror(), self.den.mirror())

    def as_poly(self) -> LaurentPoly2:
        """Exact Laurent form; raises :class:`NotDivisible` if there is none."""
        return lp_divexact(self.num, self.den)

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc2({str(self)!r})"


def _collapse(num: LaurentPoly2, den: LaurentPoly2) -> RatFunc2:
    # drop the denominator whenever it divides out exactly
    if not den == ONE and not num.is_zero():
        try:
            return RatFunc2(lp_divexact(num, den))
        except NotDivisible:
            pass
    return RatFunc2(num, den)


def rf_equals(a: RatFunc2, b: RatFunc2) -> bool:
    return a.num * b.den == b.num * a.den


def _as_poly(x) -> LaurentPoly2:
    if isinstance(x, LaurentPoly2):
        return x
    if isinstance(x, int):
        return LaurentPoly2.const(x)
    raise TypeError(f"expected LaurentPoly2 or int, got {type(x).__name__}")


@dataclass(frozen=True)
class RadicandBasis:
    """Ordered list of distinct radicands ``D_1 .. D_m``."""

    radicands: tuple[LaurentPoly2, ...]

    def __post_init__(self):
        if len(set(self.radicands)) != len(self.radicands):
            raise ValueError("radicands must be pairwise distinct")

    def __len__(self):
        return len(self.radicands)

    def product(self, mask: int) -> LaurentPoly2:
        out = ONE
        for i, d in enumerate(self.radicands):
            if mask >> i & 1:
                out = out * d
        return out


#: D1 = Aq - 1/(Aq), D2 = A/q - q/A, D3 = q + 1/q, D4 = A - 1/A
DEFAULT_BASIS = RadicandBasis((
    A * Q - A ** -1 * Q ** -1,
    A * Q ** -1 - Q * A ** -1,
    Q + Q ** -1,
    A - A ** -1,
))


Scalar = Union[int, LaurentPoly2, RatFunc2]


class RadElem:
    """Sum of ``coeff_mask * prod_{i in mask} sqrt(D_i)`` over bitmasks."""

    __slots__ = ("basis", "components")

    def __init__(self, basis: RadicandBasis, components: Mapping[int, Scalar] | None = None):
        self.basis = basis
        comps = {}
        for mask, c in (components or {}).items():
            if not 0 <= mask < 1 << len(basis):
                raise ValueError(f"mask {mask} out of range for basis of size {len(basis)}")
            c = RatFunc2._coerce(c)
            if not c.is_zero():
                comps[mask] = c
        self.components = comps

    @classmethod
    def scalar(cls, value: Scalar, basis: RadicandBasis = DEFAULT_BASIS) -> "RadElem":
        return cls(basis, {0: value})

    @classmethod
    def one(cls, basis: RadicandBasis = DEFAULT_BASIS) -> "RadElem":
        return cls(basis, {0: 1})

    @classmethod
    def zero(cls, basis: RadicandBasis = DEFAULT_BASIS) -> "RadElem":
        return cls(basis)

    @classmethod
    def sqrt(cls, indices: int | Iterable[int], coeff: Scalar = 1,
             basis: RadicandBasis = DEFAULT_BASIS) -> "RadElem":
        """``coeff * prod sqrt(D_i)`` for the given zero-based indices."""
        if isinstance(indices, int):
            indices = (indices,)
        mask = 0
        for i in indices:
            mask ^= 1 << i
        return cls(basis, {mask: coeff})

    def _coerce(self, other):
        if isinstance(other, RadElem):
            if other.basis != self.basis:
                raise BasisMismatch("RadElem operands use different radicand bases")
            return other
        if isinstance(other, (int, LaurentPoly2, RatFunc2)):
            return RadElem.scalar(other, self.basis)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.components

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.components)
        for m, c in other.components.items():
            out[m] = out[m] + c if m in out else c
        return RadElem(self.basis, out)

    __radd__ = __add__

    def __neg__(self):
        return RadElem(self.basis, {m: -c for m, c in self.components.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return rad_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, LaurentPoly2, RatFunc2)):
            inv = RatFunc2(1) / RatFunc2._coerce(other)
            return RadElem(self.basis, {m: c * inv for m, c in self.components.items()})
        return NotImplemented

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except BasisMismatch:
            return False
        if other is NotImplemented:
            return NotImplemented
        masks = set(self.components) | set(other.components)
        zero = RatFunc2(0)
        return all(
            rf_equals(self.components.get(m, zero), other.components.get(m, zero))
            for m in masks
        )

    __hash__ = None

    def rational_part(self) -> RatFunc2:
        return self.components.get(0, RatFunc2(0))

    def eval(self, q: complex, A: complex) -> complex:
        """Numeric value; a mask evaluates to the product of principal square roots."""
        roots = [cmath.sqrt(d.eval(q, A)) for d in self.basis.radicands]
        total = 0j
        for mask, c in self.components.items():
            r = 1 + 0j
            for i, s in enumerate(roots):
                if mask >> i & 1:
                    r *= s
            total += c.eval(q, A) * r
        return total

    def __str__(self):
        if not self.components:
            return "0"
        parts = []
        for mask in sorted(self.components):
            c = self.components[mask]
            if mask == 0:
                parts.append(f"[{c}]")
            else:
                idx = ",".join(f"D{i + 1}" for i in range(len(self.basis)) if mask >> i & 1)
                parts.append(f"[{c}]*sqrt({idx})")
        return " + ".join(parts)

    def __repr__(self):
        return f"RadElem({str(self)!r})"


def rad_mul(a: RadElem, b: RadElem) -> RadElem:
    if a.basis != b.basis:
        raise BasisMismatch("RadElem operands use different radicand bases")
    out: dict[int, RatFunc2] = {}
    for m1, c1 in a.components.items():
        for m2, c2 in b.components.items():
            c = c1 * c2
            both = m1 & m2
            if both:
                c = c * a.basis.product(both)
            m = m1 ^ m2
            out[m] = out[m] + c if m in out else c
    return RadElem(a.basis, out)


def rad_reduce(x: RadElem, expected_denominator: LaurentPoly2 | int = 1) -> LaurentPoly2:
    """Collapse a radical-free element to a Laurent polynomial.

    The rational part is multiplied by ``expected_denominator`` and must then
    divide out exactly; the returned polynomial is that product.  So the
    element itself equals ``result / expected_denominator``.
    """
    for mask, c in x.components.items():
        if mask and not c.is_zero():
            raise ResidualRadical(f"nonzero radical component {c} * sqrt(mask={mask:b})")
    r = x.rational_part()
    return lp_divexact(r.num * _as_poly(expected_denominator), r.den)
