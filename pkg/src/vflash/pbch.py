"""Partitioned BCH codes [n, k, l, r] for masking stuck-at positions.

The transmitted code is the t = r/m error-correcting BCH code C_err.  Its
k-dimensional subcode C_inner (a BCH code with extra design roots worth l
redundancy bits) carries the message; the l remaining dimensions select a
coset of C_inner inside C_err and are free for masking.  A codeword is

    codeword = msg . G1  xor  z . G0

where z solves, over GF(2), the system pinning the codeword to the stuck
values at the defect positions.  The decoder needs no defect knowledge:
it runs the C_err decoder and projects out the message with a recovery
matrix R satisfying R.G1^T = I and R.G0^T = 0.

G1 spans C_inner (cyclic shifts of its generator).  G0 spans the unique
cyclic complement of C_inner in C_err: the code whose defining root set
is everything except the inner code's extra conjugacy classes.  That
complement has no zero columns (checked at construction), so any single
defect is always maskable, and its columns behave well on random defect
sets, which is what the masking statistics rely on.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gf2
from .bch import BchCode, bch_code
from .galois import default_field, poly_deg, poly_divmod, poly_mul


@dataclass(frozen=True)
class DefectPattern:
    """Stuck-at positions and their forced values; everything else is normal."""

    n: int
    positions: np.ndarray  # sorted, strictly increasing
    values: np.ndarray     # stuck output bit per position

    def __post_init__(self):
        pos = np.asarray(self.positions, dtype=np.int64)
        val = np.asarray(self.values, dtype=np.uint8)
        if pos.size != val.size:
            raise ValueError("positions and values differ in length")
        if pos.size:
            if pos[0] < 0 or pos[-1] >= self.n:
                raise ValueError("defect position out of range")
            if np.any(np.diff(pos) <= 0):
                raise ValueError("positions must be strictly increasing")
        object.__setattr__(self, "positions", pos)
        object.__setattr__(self, "values", val)

    @classmethod
    def empty(cls, n: int) -> "DefectPattern":
        return cls(n, np.empty(0, dtype=np.int64), np.empty(0, dtype=np.uint8))

    @classmethod
    def stuck_at_zero(cls, n: int, positions) -> "DefectPattern":
        pos = np.unique(np.asarray(positions, dtype=np.int64))
        return cls(n, pos, np.zeros(pos.size, dtype=np.uint8))

    def states(self) -> np.ndarray:
        """Length-n ternary view: 0 or 1 where stuck, -1 where normal."""
        s = np.full(self.n, -1, dtype=np.int8)
        s[self.positions] = self.values
        return s

    def __len__(self):
        return int(self.positions.size)


def random_defect_pattern(n: int, eps0: float, eps1: float, rng) -> DefectPattern:
    """I.i.d. ternary states: stuck-0 w.p. eps0, stuck-1 w.p. eps1."""
    if eps0 < 0 or eps1 < 0 or eps0 + eps1 > 1:
        raise ValueError("state probabilities must be nonnegative with eps0 + eps1 <= 1")
    u = rng.random(n)
    stuck = u < eps0 + eps1
    positions = np.flatnonzero(stuck).astype(np.int64)
    values = (u[positions] >= eps0).astype(np.uint8)
    return DefectPattern(n, positions, values)


@dataclass
class EncodeOutcome:
    codeword: np.ndarray
    masked: bool
    unmasked_count: int


class PbchCode:
    """An [n, k, l, r] partitioned BCH code over GF(2^m)."""

    def __init__(self, m: int, k: int, l: int, r: int):
        field = default_field(m)
        n = field.n
        if k + l + r != n:
            raise ValueError(f"k + l + r = {k + l + r} != n = {n}")
        if l % m or r % m:
            raise ValueError(f"l={l} and r={r} must be multiples of m={m}")
        if k <= 0:
            raise ValueError("no message bits left")
        self.m, self.n, self.k, self.l, self.r = m, n, k, l, r
        self.field = field

        t = r // m
        self.err_code: BchCode = bch_code(m, t, field)
        if self.err_code.redundancy != r:
            raise ValueError(
                f"r={r} not achievable: conjugacy classes for t={t} consume "
                f"{self.err_code.redundancy} bits"
            )

        # extend the design-root set with whole conjugacy classes until the
        # extra redundancy is exactly l
        covered: set[int] = set()
        for j in self.err_code.design_roots:
            c = j
            while c not in covered:
                covered.add(c)
                c = (2 * c) % n
        g_extra = 1
        extra_roots: list[int] = []
        j = 2 * t + 1
        achieved = [0]
        while poly_deg(g_extra) < l if l else False:
            if j >= n:
                raise ValueError(f"ran out of conjugacy classes extending to l={l}")
            if j not in covered:
                coset = []
                c = j
                while c not in coset:
                    coset.append(c)
                    c = (2 * c) % n
                covered.update(coset)
                extra_roots.extend(coset)
                g_extra = poly_mul(g_extra, field.minimal_polynomial(field.alpha_pow(j)))
                achieved.append(poly_deg(g_extra))
            j += 2
        if poly_deg(g_extra) != max(l, 0):
            near = [a for a in achieved if a <= l]
            raise ValueError(
                f"l={l} not tileable by whole conjugacy classes; "
                f"nearest achievable: {near[-1]} or {achieved[-1]}"
            )
        self.extra_roots = sorted(extra_roots)

        self.g_err = self.err_code.generator
        self.g_inner = poly_mul(self.g_err, g_extra)
        # cyclic complement of the inner code inside err_code
        x_n_1 = (1 << n) | 1
        q, rem = poly_divmod(x_n_1, self.g_inner)
        if rem:
            raise AssertionError("inner generator must divide x^n + 1")
        self.g_mask = poly_mul(self.g_err, q)  # degree n - l

        self.G1_rows = [self.g_inner << i for i in range(k)]
        self.G0_rows = [self.g_mask << i for i in range(l)]

        # per-position equation rows: bit i of column d is coeff d-i of g_mask
        cols = [0] * n
        for i in range(l):
            row = self.g_mask << i
            while row:
                low = row & -row
                cols[low.bit_length() - 1] |= 1 << i
                row ^= low
        self._g0_cols = cols
        if l and min(cols) == 0:
            raise ValueError("masking generator has an all-zero column")

        self._build_recovery()

    def _build_recovery(self):
        """Solve R.G1^T = I, R.G0^T = 0 by row reduction of [G1; G0]."""
        k, l, n = self.k, self.l, self.n
        stack = self.G1_rows + self.G0_rows
        work = [(row, 1 << idx) for idx, row in enumerate(stack)]
        reduced: list[tuple[int, int]] = []
        pivots: list[int] = []
        for col in range(n - 1, -1, -1):
            mask = 1 << col
            src = None
            for i, (row, _) in enumerate(work):
                if row & mask:
                    src = i
                    break
            if src is None:
                continue
            prow, ptr = work.pop(src)
            work = [(rw ^ prow, tr ^ ptr) if rw & mask else (rw, tr) for rw, tr in work]
            reduced = [(rw ^ prow, tr ^ ptr) if rw & mask else (rw, tr) for rw, tr in reduced]
            reduced.append((prow, ptr))
            pivots.append(col)
        if len(reduced) != k + l:
            raise ValueError(f"generator stack has rank {len(reduced)}, expected {k + l}")
        rbits = np.zeros((k, n), dtype=np.uint8)
        for (_, trans), piv in zip(reduced, pivots):
            rbits[:, piv] = gf2.int_to_bits(trans, k + l)[:k]
        self.R = gf2.PackedMatrix([gf2.bits_to_int(rbits[i]) for i in range(k)], n)

    def __repr__(self):
        return f"PbchCode([{self.n}, {self.k}, {self.l}, {self.r}], m={self.m})"

    # -- encoding ----------------------------------------------------------

    def message_word_int(self, msg_int: int) -> int:
        """msg . G1 as an int (the coset anchor before masking)."""
        return poly_mul(msg_int, self.g_inner)

    def mask_encode(self, msg: np.ndarray, defects: DefectPattern) -> EncodeOutcome:
        """Additive encoding against the given stuck-at pattern.

        When the defect system is inconsistent, the solvable subsystem
        found in position order is satisfied and the rest reported via
        unmasked_count; the write must proceed regardless, so failure is
        in-band rather than an exception.
        """
        msg = np.asarray(msg, dtype=np.uint8)
        if msg.shape != (self.k,):
            raise ValueError(f"message length {msg.size} != k {self.k}")
        if defects.n != self.n:
            raise ValueError("defect pattern length mismatch")
        word = self.message_word_int(gf2.bits_to_int(msg))
        positions = defects.positions
        if self.l and positions.size:
            rows = [self._g0_cols[d] for d in positions]
            rhs = [int(v) ^ ((word >> int(d)) & 1) for d, v in zip(positions, defects.values)]
            z, _ = gf2.solve(rows, rhs, self.l)
            if z:
                word ^= poly_mul(self.g_mask, z)
        bits = gf2.int_to_bits(word, self.n)
        unmasked = int(np.count_nonzero(bits[positions] != defects.values)) if positions.size else 0
        return EncodeOutcome(bits, unmasked == 0, unmasked)

    # -- decoding ----------------------------------------------------------

    def decode(self, received: np.ndarray) -> tuple[np.ndarray, int]:
        """Recover (message, errors corrected); raises DecodeFailure."""
        received = np.asarray(received, dtype=np.uint8)
        if received.shape != (self.n,):
            raise ValueError(f"received length {received.size} != n {self.n}")
        corrected, nerr = self.err_code.decode(received)
        return self.R.matvec(corrected), nerr


def pbch_code(m: int, k: int, l: int, r: int) -> PbchCode:
    return PbchCode(m, k, l, r)


def allocation_table(m: int = 10, k: int = 923) -> list[tuple[int, int]]:
    """All (l, r) splits of the fixed total redundancy in steps of m."""
    n = (1 << m) - 1
    total = n - k
    return [(l, total - l) for l in range(0, total + 1, m)]
