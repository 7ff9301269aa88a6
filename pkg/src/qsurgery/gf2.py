"""GF(2) linear algebra on bit-packed rows, plus the symplectic Pauli view.

Rows are stored as Python ints used as bitsets (bit i = column i), which keeps
row XOR and popcount cheap without any dependency. All public contracts are
index based; the packing is an internal detail.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionError


class BitMatrix:
    """Dense matrix over GF(2); each row is an int bitset, bit i = column i."""

    __slots__ = ("rows", "cols", "bits")

    def __init__(self, rows: int, cols: int, bits: list[int] | None = None):
        if rows < 0 or cols < 0:
            raise DimensionError(f"negative shape ({rows}, {cols})")
        self.rows = rows
        self.cols = cols
        if bits is None:
            bits = [0] * rows
        if len(bits) != rows:
            raise DimensionError(f"expected {rows} rows, got {len(bits)}")
        mask = (1 << cols) - 1
        self.bits = [b & mask for b in bits]

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, [1 << i for i in range(n)])

    @classmethod
    def from_lists(cls, data: Sequence[Sequence[int]]) -> "BitMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        bits = []
        for r, row in enumerate(data):
            if len(row) != cols:
                raise DimensionError(f"ragged row {r}: {len(row)} != {cols}")
            bits.append(bits_from_iterable(row))
        return cls(rows, cols, bits)

    def get(self, r: int, c: int) -> int:
        self._check(r, c)
        return (self.bits[r] >> c) & 1

    def set(self, r: int, c: int, value: int) -> None:
        self._check(r, c)
        if value & 1:
            self.bits[r] |= 1 << c
        else:
            self.bits[r] &= ~(1 << c)

    def _check(self, r: int, c: int) -> None:
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError(f"({r}, {c}) out of range for {self.rows}x{self.cols}")

    def row_list(self, r: int) -> list[int]:
        return [(self.bits[r] >> c) & 1 for c in range(self.cols)]

    def copy(self) -> "BitMatrix":
        return BitMatrix(self.rows, self.cols, list(self.bits))

    def transpose(self) -> "BitMatrix":
        out = BitMatrix.zeros(self.cols, self.rows)
        for r, row in enumerate(self.bits):
            while row:
                low = row & -row
                out.bits[low.bit_length() - 1] |= 1 << r
                row ^= low
        return out

    def matmul(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = BitMatrix.zeros(self.rows, other.cols)
        for r, row in enumerate(self.bits):
            acc = 0
            while row:
                low = row & -row
                acc ^= other.bits[low.bit_length() - 1]
                row ^= low
            out.bits[r] = acc
        return out

    def is_zero(self) -> bool:
        return all(b == 0 for b in self.bits)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BitMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.bits == other.bits
        )

    def __hash__(self):  # pragma: no cover - mutable, do not hash
        raise TypeError("BitMatrix is mutable and unhashable")

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"


def bits_from_iterable(values: Iterable[int]) -> int:
    """Pack an iterable of 0/1 values into an int bitset (index 0 first)."""
    acc = 0
    for i, v in enumerate(values):
        if v & 1:
            acc |= 1 << i
    return acc


def bits_to_list(bits: int, n: int) -> list[int]:
    return [(bits >> i) & 1 for i in range(n)]


def row_reduce(m: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Reduced row-echelon form over GF(2) with the pivot column list.

    The row space is preserved; zero rows sink to the bottom.
    """
    work = list(m.bits)
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r >= len(work):
            break
        sel = None
        for i in range(r, len(work)):
            if (work[i] >> c) & 1:
                sel = i
                break
        if sel is None:
            continue
        work[r], work[sel] = work[sel], work[r]
        for i in range(len(work)):
            if i != r and ((work[i] >> c) & 1):
                work[i] ^= work[r]
        pivots.append(c)
        r += 1
    # sort zero rows last (they already are, elimination never reorders others)
    return BitMatrix(m.rows, m.cols, work), pivots


def rank(m: BitMatrix) -> int:
    """GF(2) row rank."""
    return len(row_reduce(m)[1])


def rank_of_rows(bits: Iterable[int]) -> int:
    """Rank of a collection of int-bitset rows (column count implicit)."""
    basis: dict[int, int] = {}
    r = 0
    for row in bits:
        row = _reduce_against(row, basis)
        if row:
            basis[row & -row] = row
            r += 1
    return r


def _reduce_against(row: int, basis: dict[int, int]) -> int:
    while row:
        low = row & -row
        b = basis.get(low)
        if b is None:
            return row
        row ^= b
    return 0


class RowBasis:
    """Incremental GF(2) row basis keyed by lowest set bit.

    Supports membership tests against the span and rank queries without
    re-eliminating from scratch.
    """

    def __init__(self, rows: Iterable[int] = ()):
        self._basis: dict[int, int] = {}
        for r in rows:
            self.add(r)

    def add(self, row: int) -> bool:
        """Insert a row; returns True if it enlarged the span."""
        row = _reduce_against(row, self._basis)
        if row:
            self._basis[row & -row] = row
            return True
        return False

    def contains(self, row: int) -> bool:
        return _reduce_against(row, self._basis) == 0

    def reduce(self, row: int) -> int:
        return _reduce_against(row, self._basis)

    @property
    def rank(self) -> int:
        return len(self._basis)


def in_row_space(vec: int, m: BitMatrix) -> bool:
    """True iff ``vec`` (int bitset of length m.cols) is a GF(2) combination
    of the rows of ``m``."""
    basis = RowBasis(m.bits)
    return basis.contains(vec)


def nullspace(m: BitMatrix) -> list[int]:
    """Basis of the right nullspace, as int bitsets of length m.cols."""
    reduced, pivots = row_reduce(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    out = []
    for f in free:
        vec = 1 << f
        for r, p in enumerate(pivots):
            if (reduced.bits[r] >> f) & 1:
                vec |= 1 << p
        out.append(vec)
    return out


def invert(m: BitMatrix) -> BitMatrix:
    """Inverse of a square invertible matrix over GF(2)."""
    if m.rows != m.cols:
        raise DimensionError(f"cannot invert {m.rows}x{m.cols}")
    n = m.rows
    work = list(m.bits)
    inv = [1 << i for i in range(n)]
    r = 0
    for c in range(n):
        sel = None
        for i in range(r, n):
            if (work[i] >> c) & 1:
                sel = i
                break
        if sel is None:
            raise DimensionError("matrix is singular over GF(2)")
        work[r], work[sel] = work[sel], work[r]
        inv[r], inv[sel] = inv[sel], inv[r]
        for i in range(n):
            if i != r and ((work[i] >> c) & 1):
                work[i] ^= work[r]
                inv[i] ^= inv[r]
        r += 1
    return BitMatrix(n, n, inv)


@dataclass(frozen=True)
class PauliVector:
    """Phase-free n-qubit Pauli in binary symplectic form.

    Only the commutation structure matters for surgery, so signs are not
    tracked. ``x`` and ``z`` are int bitsets; qubit q carries X iff bit q of
    ``x`` is set, Z iff bit q of ``z`` is set, Y iff both.
    """

    n: int
    x: int
    z: int

    def __post_init__(self):
        mask = (1 << self.n) - 1
        object.__setattr__(self, "x", self.x & mask)
        object.__setattr__(self, "z", self.z & mask)

    @classmethod
    def identity(cls, n: int) -> "PauliVector":
        return cls(n, 0, 0)

    @classmethod
    def from_string(cls, s: str) -> "PauliVector":
        x = z = 0
        for i, ch in enumerate(s):
            c = ch.upper()
            if c in ("X", "Y"):
                x |= 1 << i
            if c in ("Z", "Y"):
                z |= 1 << i
            if c not in "IXYZ_.":
                raise DimensionError(f"invalid Pauli character {ch!r}")
        return cls(len(s), x, z)

    def to_string(self) -> str:
        out = []
        for i in range(self.n):
            xb = (self.x >> i) & 1
            zb = (self.z >> i) & 1
            out.append("IXZY"[xb + 2 * zb])
        return "".join(out)

    @property
    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    @property
    def support(self) -> tuple[int, ...]:
        bits = self.x | self.z
        out = []
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return tuple(out)

    def mul(self, other: "PauliVector") -> "PauliVector":
        """Phase-free product (bitwise XOR of symplectic parts)."""
        if self.n != other.n:
            raise DimensionError(f"Pauli sizes differ: {self.n} != {other.n}")
        return PauliVector(self.n, self.x ^ other.x, self.z ^ other.z)

    def commutes_with(self, other: "PauliVector") -> bool:
        return symplectic_product(self, other) == 0

    def to_symplectic(self) -> int:
        """Bitset of length 2n: x-part in bits [0, n), z-part in [n, 2n)."""
        return self.x | (self.z << self.n)

    @classmethod
    def from_symplectic(cls, n: int, bits: int) -> "PauliVector":
        mask = (1 << n) - 1
        return cls(n, bits & mask, (bits >> n) & mask)

    def __repr__(self) -> str:
        if self.n <= 32:
            return f"PauliVector({self.to_string()!r})"
        return f"PauliVector(n={self.n}, weight={self.weight})"


def symplectic_product(p: PauliVector, q: PauliVector) -> int:
    """0 iff the two Paulis commute: x_p.z_q + z_p.x_q mod 2."""
    if p.n != q.n:
        raise DimensionError(f"Pauli sizes differ: {p.n} != {q.n}")
    return ((p.x & q.z).bit_count() + (p.z & q.x).bit_count()) & 1
