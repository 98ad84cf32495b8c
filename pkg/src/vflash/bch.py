"""Binary primitive BCH codes of length 2^m - 1.

Construction follows the classic recipe: the generator is the LCM of the
minimal polynomials of alpha^1 .. alpha^2t.  Encoding is systematic with
parity in the low-order positions.  Decoding is bounded-distance:
Berlekamp-Massey locator synthesis followed by a Chien root search, with
a syndrome recheck so a word with nonzero syndromes is never returned.

Codewords are numpy uint8 arrays; position i corresponds to the x^i
coefficient of the code polynomial.
"""

from __future__ import annotations

import numpy as np

from .galois import GaloisField, default_field, poly_deg, poly_mod, poly_mul
from .gf2 import bits_to_int, int_to_bits


class DecodeFailure(Exception):
    """The received word is not within bounded distance of any codeword."""


def cyclotomic_cosets(m: int) -> list[list[int]]:
    """Partition of [1, 2^m - 2] into cosets closed under doubling mod 2^m - 1."""
    if m < 2:
        raise ValueError("m must be at least 2")
    n = (1 << m) - 1
    seen = [False] * n
    cosets = []
    for j in range(1, n):
        if seen[j]:
            continue
        coset = []
        c = j
        while not seen[c]:
            seen[c] = True
            coset.append(c)
            c = (2 * c) % n
        cosets.append(coset)
    return cosets


class BchCode:
    """A [2^m - 1, dimension] binary BCH code correcting t errors."""

    def __init__(self, field: GaloisField, t: int, generator: int, design_roots: list[int]):
        self.field = field
        self.m = field.m
        self.n = field.n
        self.t = t
        self.generator = generator
        self.design_roots = design_roots
        self.redundancy = poly_deg(generator) if generator != 1 else 0
        self.dimension = self.n - self.redundancy
        self._enc_table = None
        # (j, position) exponent products for vectorized syndromes
        if t > 0:
            js = np.arange(1, 2 * t + 1, dtype=np.int64)
            self._syn_j = js[:, None]
            self._chien_tab = (
                np.arange(1, t + 1, dtype=np.int64)[:, None]
                * np.arange(self.n, dtype=np.int64)[None, :]
            ) % self.n

    def __repr__(self):
        return f"BchCode(n={self.n}, k={self.dimension}, t={self.t})"

    # -- encoding ----------------------------------------------------------

    def _byte_table(self):
        if self._enc_table is None:
            deg = self.redundancy
            table = [0] * 256
            for v in range(256):
                table[v] = poly_mod(v << deg, self.generator)
            self._enc_table = table
        return self._enc_table

    def encode_int(self, msg: int) -> int:
        """Systematic codeword as an int; message occupies the top bits."""
        deg = self.redundancy
        if deg == 0:
            return msg
        if deg < 8:
            return (msg << deg) ^ poly_mod(msg << deg, self.generator)
        table = self._byte_table()
        mask = (1 << deg) - 1
        state = 0
        for byte in msg.to_bytes((self.dimension + 7) // 8, "big"):
            state = ((state << 8) & mask) ^ table[(state >> (deg - 8)) ^ byte]
        return (msg << deg) ^ state

    def encode(self, msg: np.ndarray) -> np.ndarray:
        msg = np.asarray(msg, dtype=np.uint8)
        if msg.shape != (self.dimension,):
            raise ValueError(f"message length {msg.size} != dimension {self.dimension}")
        return int_to_bits(self.encode_int(bits_to_int(msg)), self.n)

    # -- decoding ----------------------------------------------------------

    def syndromes(self, word: np.ndarray) -> list[int]:
        """S_j = word(alpha^j) for j = 1 .. 2t."""
        word = np.asarray(word, dtype=np.uint8)
        if word.shape != (self.n,):
            raise ValueError(f"word length {word.size} != n {self.n}")
        if self.t == 0:
            return []
        positions = np.flatnonzero(word).astype(np.int64)
        if positions.size == 0:
            return [0] * (2 * self.t)
        exps = (self._syn_j * positions[None, :]) % self.n
        vals = self.field.antilog_np[exps]
        return [int(s) for s in np.bitwise_xor.reduce(vals, axis=1)]

    def _locator(self, syn: list[int]) -> list[int]:
        """Berlekamp-Massey: minimal LFSR for the syndrome sequence."""
        f = self.field
        C = [1]  # connection polynomial, C[j] multiplies S_{i-j}
        B = [1]
        L = 0
        shift = 1
        b = 1
        for i in range(len(syn)):
            d = syn[i]
            for j in range(1, L + 1):
                if j < len(C) and C[j]:
                    d ^= f.mul(C[j], syn[i - j])
            if d == 0:
                shift += 1
                continue
            coef = f.div(d, b)
            if 2 * L <= i:
                T = C[:]
                if len(C) < len(B) + shift:
                    C = C + [0] * (len(B) + shift - len(C))
                for j, bj in enumerate(B):
                    if bj:
                        C[j + shift] ^= f.mul(coef, bj)
                L = i + 1 - L
                B = T
                b = d
                shift = 1
            else:
                if len(C) < len(B) + shift:
                    C = C + [0] * (len(B) + shift - len(C))
                for j, bj in enumerate(B):
                    if bj:
                        C[j + shift] ^= f.mul(coef, bj)
                shift += 1
        while len(C) > 1 and C[-1] == 0:
            C.pop()
        return C

    def _chien_positions(self, locator: list[int]) -> np.ndarray:
        """Error positions p where locator(alpha^{-p}) = 0."""
        f = self.field
        deg = len(locator) - 1
        acc = np.full(self.n, locator[0], dtype=np.int64)
        for k in range(1, deg + 1):
            if locator[k]:
                exps = (f.log[locator[k]] + self._chien_tab[k - 1]) % self.n
                acc ^= f.antilog_np[exps]
        root_exps = np.flatnonzero(acc == 0)
        return (self.n - root_exps) % self.n

    def decode(self, word: np.ndarray) -> tuple[np.ndarray, int]:
        """Correct up to t errors; raises DecodeFailure when inconsistent."""
        word = np.asarray(word, dtype=np.uint8)
        syn = self.syndromes(word)
        if not any(syn):
            return word.copy(), 0
        locator = self._locator(syn)
        nerr = len(locator) - 1
        if nerr > self.t:
            raise DecodeFailure(f"locator degree {nerr} exceeds t={self.t}")
        positions = self._chien_positions(locator)
        if positions.size != nerr:
            raise DecodeFailure(
                f"locator degree {nerr} but {positions.size} roots found"
            )
        corrected = word.copy()
        corrected[positions] ^= 1
        if any(self.syndromes(corrected)):
            raise DecodeFailure("correction left nonzero syndromes")
        return corrected, nerr

    def is_codeword(self, word: np.ndarray) -> bool:
        return poly_mod(bits_to_int(np.asarray(word, dtype=np.uint8)), self.generator) == 0


def bch_code(m: int, t: int, field: GaloisField | None = None) -> BchCode:
    """Construct the t-error-correcting BCH code of length 2^m - 1.

    t = 0 yields the degenerate full-space code (generator 1), used as the
    no-correction end of the redundancy allocation range.
    """
    f = field if field is not None else default_field(m)
    if t < 0:
        raise ValueError("t must be nonnegative")
    if t == 0:
        return BchCode(f, 0, 1, [])
    generator = 1
    covered: set[int] = set()
    for j in range(1, 2 * t + 1):
        if j in covered:
            continue
        coset = []
        c = j
        while c not in coset:
            coset.append(c)
            c = (2 * c) % f.n
        covered.update(coset)
        generator = poly_mul(generator, f.minimal_polynomial(f.alpha_pow(j)))
    if poly_deg(generator) > f.n - 1:
        raise ValueError(f"generator degree {poly_deg(generator)} leaves no message bits")
    return BchCode(f, t, generator, list(range(1, 2 * t + 1)))
