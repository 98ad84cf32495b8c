"""GF(2) bit-vector and bit-matrix helpers.

Matrices are lists of Python ints, one int per row, bit j = column j.
Arbitrary-precision ints make row XOR a single C-level operation, which
keeps Gaussian elimination fast without pulling in a dedicated library.
A packed uint64 representation is used where a matrix-vector product sits
on a hot path.
"""

from __future__ import annotations

import numpy as np

_WORD = 64


def bits_to_int(bits: np.ndarray) -> int:
    """Bit array (index i = bit i) to int."""
    b = np.asarray(bits, dtype=np.uint8)
    return int.from_bytes(np.packbits(b, bitorder="little").tobytes(), "little")


def int_to_bits(x: int, n: int) -> np.ndarray:
    """Int to length-n uint8 bit array (index i = bit i)."""
    nbytes = (n + 7) // 8
    raw = np.frombuffer(x.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n]


def rank(rows: list[int]) -> int:
    """Rank of the row set over GF(2)."""
    basis: list[int] = []
    r = 0
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
            basis.sort(reverse=True)
            r += 1
    return r


def row_reduce(rows: list[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form.

    Returns (reduced nonzero rows, pivot column per row).  Pivots are
    chosen from the highest column down so the reduced rows come out in
    decreasing pivot order.
    """
    rows = [r for r in rows]
    reduced: list[int] = []
    pivots: list[int] = []
    for col in range(ncols - 1, -1, -1):
        mask = 1 << col
        src = None
        for i, r in enumerate(rows):
            if r & mask:
                src = i
                break
        if src is None:
            continue
        pivot_row = rows.pop(src)
        rows = [r ^ pivot_row if r & mask else r for r in rows]
        reduced = [r ^ pivot_row if r & mask else r for r in reduced]
        reduced.append(pivot_row)
        pivots.append(col)
    return reduced, pivots


def solve(eq_rows: list[int], rhs: list[int], nvars: int) -> tuple[int, list[int]]:
    """Best-effort solve of eq_rows . z = rhs over GF(2).

    Equations are processed in order against a growing basis; an equation
    that reduces to 0 = 1 is inconsistent with the ones already kept and
    is dropped.  Returns (solution, dropped equation indices).  Free
    variables are set to 0, so the result is deterministic.
    """
    basis: list[tuple[int, int, int]] = []  # (row, rhs bit, pivot mask)
    dropped: list[int] = []
    for idx, (row, b) in enumerate(zip(eq_rows, rhs)):
        for brow, bb, bmask in basis:
            if row & bmask:
                row ^= brow
                b ^= bb
        if row == 0:
            if b:
                dropped.append(idx)
            continue
        pivot = 1 << (row.bit_length() - 1)
        basis.append((row, b, pivot))
    z = 0
    # back-substitute: basis rows were fully reduced against earlier pivots
    # only, so walk in reverse insertion order
    for row, b, pivot in reversed(basis):
        acc = b
        rest = row ^ pivot
        while rest:
            low = rest & -rest
            if z & low:
                acc ^= 1
            rest ^= low
        if acc:
            z |= pivot
    return z, dropped


class PackedMatrix:
    """Row-major GF(2) matrix packed into uint64 words for fast matvec."""

    def __init__(self, rows: list[int], ncols: int):
        self.nrows = len(rows)
        self.ncols = ncols
        self.nwords = (ncols + _WORD - 1) // _WORD
        data = np.zeros((self.nrows, self.nwords), dtype=np.uint64)
        nbytes = self.nwords * 8
        for i, r in enumerate(rows):
            data[i] = np.frombuffer(r.to_bytes(nbytes, "little"), dtype=np.uint64)
        self.data = data

    def matvec(self, bits: np.ndarray) -> np.ndarray:
        """Product (matrix . bits) mod 2 as a uint8 vector."""
        x = np.zeros(self.nwords * _WORD, dtype=np.uint8)
        x[: self.ncols] = bits
        xw = np.frombuffer(np.packbits(x, bitorder="little").tobytes(), dtype=np.uint64)
        acc = np.bitwise_count(self.data & xw).sum(axis=1)
        return (acc & 1).astype(np.uint8)

    def row_bits(self, i: int) -> np.ndarray:
        raw = self.data[i].tobytes()
        return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[: self.ncols]
