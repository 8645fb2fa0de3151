"""Sparse multivariate polynomials over F_p with fast Frobenius powering.

Representation:

    Monomial         = tuple of non-negative ints, one exponent per variable
    SparsePolynomial = ring + dict mapping Monomial -> coefficient in [1, p)

The zero polynomial has an empty term dict; zero coefficients are never
stored. Values are immutable after construction, so sharing across threads
is safe. Exponent arithmetic is checked against a 64-bit limit and raises
instead of wrapping.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import ExponentOverflowError, RingMismatchError
from .field import PrimeField

Monomial = tuple[int, ...]

EXP_LIMIT = 2**63 - 1


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    out = tuple(x + y for x, y in zip(a, b))
    if any(e > EXP_LIMIT for e in out):
        raise ExponentOverflowError(f"exponent exceeds 2^63-1 in {out}")
    return out


def mono_scale(a: Monomial, k: int) -> Monomial:
    out = tuple(e * k for e in a)
    if any(e > EXP_LIMIT for e in out):
        raise ExponentOverflowError(f"exponent exceeds 2^63-1 in {out}")
    return out


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Exponent vector of x^a / x^b; requires b | a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def grevlex_key(mono: Monomial):
    """Sort key realizing graded reverse lexicographic order (ascending)."""
    return (sum(mono), tuple(-e for e in reversed(mono)))


@dataclass(frozen=True)
class PolyRing:
    """F_p[x_1, ..., x_n] with a fixed variable order and monomial order.

    ``order`` is "grevlex" for user-facing rings. The internal value
    "elim1" makes the first variable dominate (grevlex on the rest), which
    is the elimination order used by colon and intersection computations.
    """

    field: PrimeField
    variables: tuple[str, ...]
    order: str = "grevlex"

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable in {self.variables}")
        if self.order not in ("grevlex", "elim1"):
            raise ValueError(f"unknown monomial order {self.order!r}")

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def key(self, mono: Monomial):
        if self.order == "grevlex":
            return grevlex_key(mono)
        return (mono[0], grevlex_key(mono[1:]))

    def zero(self) -> "SparsePolynomial":
        return SparsePolynomial(self, {})

    def one(self) -> "SparsePolynomial":
        return self.const(1)

    def const(self, c: int) -> "SparsePolynomial":
        c = c % self.p
        if c == 0:
            return self.zero()
        return SparsePolynomial(self, {(0,) * self.nvars: c})

    def var(self, name: str) -> "SparsePolynomial":
        i = self.variables.index(name)
        exps = [0] * self.nvars
        exps[i] = 1
        return SparsePolynomial(self, {tuple(exps): 1})

    def monomial(self, exps: Iterable[int], coeff: int = 1) -> "SparsePolynomial":
        mono = tuple(exps)
        if len(mono) != self.nvars:
            raise ValueError(f"expected {self.nvars} exponents, got {len(mono)}")
        if any(e < 0 for e in mono):
            raise ValueError(f"negative exponent in {mono}")
        c = coeff % self.p
        if c == 0:
            return self.zero()
        return SparsePolynomial(self, {mono: c})

    def poly(self, terms: Mapping[Monomial, int]) -> "SparsePolynomial":
        """Build a polynomial from raw terms, reducing coefficients mod p."""
        clean: dict[Monomial, int] = {}
        for mono, c in terms.items():
            mono = tuple(mono)
            if len(mono) != self.nvars:
                raise ValueError(f"expected {self.nvars} exponents, got {len(mono)}")
            c = (clean.get(mono, 0) + c) % self.p
            if c:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        return SparsePolynomial(self, clean)


class SparsePolynomial:
    """An element of a PolyRing in canonical sparse form."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict[Monomial, int]):
        self.ring = ring
        self.terms = terms
        self._hash = None

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in m) for m in self.terms)

    def is_monomial(self) -> bool:
        """Single-term polynomial (the zero polynomial does not count)."""
        return len(self.terms) == 1

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(m) for m in self.terms)

    def lead_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=self.ring.key)

    def lead_coeff(self) -> int:
        return self.terms[self.lead_monomial()]

    def monic(self) -> "SparsePolynomial":
        if not self.terms:
            return self
        inv = self.ring.field.inv(self.lead_coeff())
        if inv == 1:
            return self
        p = self.ring.p
        return SparsePolynomial(self.ring, {m: (c * inv) % p for m, c in self.terms.items()})

    def _check_ring(self, other: "SparsePolynomial"):
        if self.ring != other.ring:
            raise RingMismatchError(
                f"cannot combine polynomials over {self.ring.variables} "
                f"mod {self.ring.p} and {other.ring.variables} mod {other.ring.p}"
            )

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        self._check_ring(other)
        p = self.ring.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = (out.get(m, 0) + c) % p
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return SparsePolynomial(self.ring, out)

    def __sub__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        self._check_ring(other)
        p = self.ring.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = (out.get(m, 0) - c) % p
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return SparsePolynomial(self.ring, out)

    def __neg__(self) -> "SparsePolynomial":
        p = self.ring.p
        return SparsePolynomial(self.ring, {m: (-c) % p for m, c in self.terms.items()})

    def __mul__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        return poly_mul(self, other)

    def __pow__(self, s: int) -> "SparsePolynomial":
        return poly_pow(self, s)

    def scale(self, c: int) -> "SparsePolynomial":
        c = c % self.ring.p
        if c == 0:
            return self.ring.zero()
        if c == 1:
            return self
        p = self.ring.p
        return SparsePolynomial(self.ring, {m: (k * c) % p for m, k in self.terms.items()})

    def mul_term(self, mono: Monomial, coeff: int) -> "SparsePolynomial":
        """Multiply by coeff * x^mono in one pass."""
        c = coeff % self.ring.p
        if c == 0:
            return self.ring.zero()
        p = self.ring.p
        return SparsePolynomial(
            self.ring, {mono_mul(m, mono): (k * c) % p for m, k in self.terms.items()}
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, tuple(sorted(self.terms.items()))))
        return self._hash

    def __repr__(self):
        from .parser import poly_to_str

        return poly_to_str(self)


def poly_mul(f: SparsePolynomial, g: SparsePolynomial) -> SparsePolynomial:
    """Exact product of two polynomials over the same ring."""
    f._check_ring(g)
    if not f.terms or not g.terms:
        return f.ring.zero()
    p = f.ring.p
    out: dict[Monomial, int] = {}
    for ma, ca in f.terms.items():
        for mb, cb in g.terms.items():
            m = mono_mul(ma, mb)
            s = (out.get(m, 0) + ca * cb) % p
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return SparsePolynomial(f.ring, out)


def frobenius_image(f: SparsePolynomial, q: int) -> SparsePolynomial:
    """f^q for q = p^e, computed by scaling every exponent by q.

    Valid because the e-fold Frobenius is a ring map fixing F_p: no term
    interaction occurs and coefficients satisfy c^q = c.
    """
    _check_q(f.ring.p, q)
    if q == 1:
        return f
    return SparsePolynomial(f.ring, {mono_scale(m, q): c for m, c in f.terms.items()})


def poly_pow(f: SparsePolynomial, s: int) -> SparsePolynomial:
    """f^s by binary exponentiation with a Frobenius shortcut.

    Writing s = s0 * p^k with p not dividing s0, computes f^s0 by squaring
    and then applies the k-fold Frobenius, which only rescales exponents.
    """
    if s < 0:
        raise ValueError(f"negative exponent {s}")
    if s == 0:
        return f.ring.one()
    p = f.ring.p
    q = 1
    while s % p == 0:
        s //= p
        q *= p
    base = f
    acc = None
    while s:
        if s & 1:
            acc = base if acc is None else poly_mul(acc, base)
        s >>= 1
        if s:
            base = poly_mul(base, base)
    return frobenius_image(acc, q)


def _check_q(p: int, q: int):
    if q < 1:
        raise ValueError(f"q must be a positive power of {p}, got {q}")
    r = q
    while r % p == 0:
        r //= p
    if r != 1:
        raise ValueError(f"q={q} is not a power of p={p}")


def is_power_of(q: int, p: int) -> bool:
    if q < 1:
        return False
    while q % p == 0:
        q //= p
    return q == 1
