"""GF(2^m) arithmetic and binary polynomials.

Field elements are integers in polynomial basis: bit i of the integer is
the coefficient of x^i.  Multiplication goes through log/antilog tables,
which is the fastest option for the table sizes used here (m <= 16).

Binary polynomials (over GF(2), not field elements) use the same integer
encoding.  The encoding is self-normalizing: the leading coefficient of a
nonzero polynomial is the top set bit.
"""

from __future__ import annotations

import numpy as np


class NotPrimitiveError(ValueError):
    """The candidate modulus does not generate the full multiplicative group."""


# ---------------------------------------------------------------------------
# binary polynomials as ints (bit i = coefficient of x^i)
# ---------------------------------------------------------------------------

def poly_deg(p: int) -> int:
    """Degree of p; -1 for the zero polynomial."""
    return p.bit_length() - 1


def poly_mul(p: int, q: int) -> int:
    """Carry-less product of two binary polynomials."""
    out = 0
    while q:
        low = q & -q
        out ^= p << (low.bit_length() - 1)
        q ^= low
    return out


def poly_divmod(p: int, d: int) -> tuple[int, int]:
    """Quotient and remainder of p / d over GF(2)."""
    if d == 0:
        raise ZeroDivisionError("polynomial division by zero")
    dd = poly_deg(d)
    q = 0
    while poly_deg(p) >= dd:
        shift = poly_deg(p) - dd
        q |= 1 << shift
        p ^= d << shift
    return q, p


def poly_mod(p: int, d: int) -> int:
    return poly_divmod(p, d)[1]


def poly_from_coeffs(coeffs) -> int:
    """Build a polynomial from a coefficient sequence, lowest degree first."""
    p = 0
    for i, c in enumerate(coeffs):
        if c & 1:
            p |= 1 << i
    return p


def poly_coeffs(p: int) -> list[int]:
    """Coefficient list, lowest degree first; [] for zero."""
    return [(p >> i) & 1 for i in range(p.bit_length())]


class GaloisField:
    """GF(2^m) built from a primitive polynomial.

    Construction verifies primitivity: the powers of alpha (= x) must run
    through all 2^m - 1 nonzero elements before returning to 1, otherwise
    NotPrimitiveError is raised.  Tables are immutable after construction
    and safe to share between workers.
    """

    def __init__(self, m: int, primitive_poly: int):
        if not 2 <= m <= 16:
            raise ValueError(f"field degree m={m} outside supported range [2, 16]")
        if poly_deg(primitive_poly) != m:
            raise ValueError(
                f"modulus degree {poly_deg(primitive_poly)} does not match m={m}"
            )
        if not primitive_poly & 1:
            # x divides the modulus, so it cannot be primitive
            raise NotPrimitiveError(f"modulus {primitive_poly:#x} has zero constant term")
        self.m = m
        self.primitive_poly = primitive_poly
        self.order = 1 << m
        self.n = self.order - 1  # size of the multiplicative group

        log = [0] * self.order
        antilog = [0] * self.n
        x = 1
        for i in range(self.n):
            if x == 1 and i > 0:
                raise NotPrimitiveError(
                    f"alpha has order {i} < {self.n}; {primitive_poly:#x} is not primitive"
                )
            antilog[i] = x
            log[x] = i
            x <<= 1
            if x & self.order:
                x ^= primitive_poly
        if x != 1:
            raise NotPrimitiveError(f"{primitive_poly:#x} is not primitive")

        self.log = log          # log[0] is a guarded placeholder, never valid
        self.antilog = antilog
        # numpy copies for vectorized syndrome/root-search loops
        self.log_np = np.array(log, dtype=np.int64)
        self.antilog_np = np.array(antilog, dtype=np.int64)

    def __repr__(self):
        return f"GaloisField(m={self.m}, modulus={self.primitive_poly:#x})"

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        s = self.log[a] + self.log[b]
        if s >= self.n:
            s -= self.n
        return self.antilog[s]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse in GF(2^m)")
        return self.antilog[(self.n - self.log[a]) % self.n]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        return self.antilog[(self.log[a] * e) % self.n]

    def alpha_pow(self, e: int) -> int:
        """alpha^e for any integer exponent."""
        return self.antilog[e % self.n]

    def minimal_polynomial(self, e: int) -> int:
        """Monic binary polynomial of least degree with e as a root.

        Computed as the product of (x - c) over the conjugacy class
        {e, e^2, e^4, ...}; the result always has 0/1 coefficients.
        """
        if e == 0:
            raise ValueError("zero has no minimal polynomial over the group")
        conjugates = []
        c = e
        while c not in conjugates:
            conjugates.append(c)
            c = self.mul(c, c)
        # multiply out prod (x + c) with coefficients in the field
        coeffs = [1]
        for c in conjugates:
            nxt = [0] * (len(coeffs) + 1)
            for i, a in enumerate(coeffs):
                nxt[i + 1] ^= a
                nxt[i] ^= self.mul(a, c)
            coeffs = nxt
        poly = 0
        for i, a in enumerate(coeffs):
            if a not in (0, 1):
                raise AssertionError("minimal polynomial has non-binary coefficient")
            poly |= a << i
        return poly


# Standard primitive moduli for the field sizes exercised in practice.
PRIMITIVE_POLYS = {
    2: 0b111,            # x^2 + x + 1
    3: 0b1011,           # x^3 + x + 1
    4: 0b10011,          # x^4 + x + 1
    5: 0b100101,         # x^5 + x^2 + 1
    6: 0b1000011,        # x^6 + x + 1
    8: 0b100011101,      # x^8 + x^4 + x^3 + x^2 + 1
    10: 0b10000001001,   # x^10 + x^3 + 1
}

_FIELD_CACHE: dict[tuple[int, int], GaloisField] = {}


def default_field(m: int) -> GaloisField:
    """Shared field instance for a supported degree (tables are immutable)."""
    poly = PRIMITIVE_POLYS.get(m)
    if poly is None:
        raise ValueError(f"no default modulus for m={m}")
    key = (m, poly)
    field = _FIELD_CACHE.get(key)
    if field is None:
        field = _FIELD_CACHE[key] = GaloisField(m, poly)
    return field
