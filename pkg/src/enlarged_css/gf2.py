"""Dense linear algebra over GF(2) on bit-packed rows.

Rows are packed little-endian into ``uint64`` words: column ``j`` lives in
word ``j // 64`` at bit ``j % 64``. Bits past the last column are always
zero, so word-wise equality is value equality and ``bitwise_count`` is the
Hamming weight. All values are immutable; every operation returns a new one.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

import numpy as np

from .errors import DimensionMismatch, SingularMatrix

WORD_BITS = 64
_ONE = np.uint64(1)


def n_words(cols: int) -> int:
    return (cols + WORD_BITS - 1) // WORD_BITS


def pack_bits(bits: np.ndarray) -> np.ndarray:
    """Pack a 2-D 0/1 array of shape ``(r, c)`` into ``(r, ceil(c/64))`` uint64 words."""
    bits = np.asarray(bits)
    if bits.ndim != 2:
        raise DimensionMismatch(f"expected a 2-D bit array, got shape {bits.shape}")
    r, c = bits.shape
    width = n_words(c)
    padded = np.zeros((r, width * WORD_BITS), dtype=np.uint8)
    padded[:, :c] = bits.astype(np.uint8) & 1
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8").astype(np.uint64).reshape(r, width)


def unpack_bits(words: np.ndarray, cols: int) -> np.ndarray:
    """Inverse of :func:`pack_bits`; returns a ``uint8`` array of shape ``(r, cols)``."""
    r = words.shape[0]
    if words.shape[1] == 0:
        return np.zeros((r, cols), dtype=np.uint8)
    as_bytes = np.ascontiguousarray(words.astype("<u8")).view(np.uint8)
    return np.unpackbits(as_bytes, axis=1, bitorder="little")[:, :cols]


def _column_bits(words: np.ndarray, col: int) -> np.ndarray:
    w, b = divmod(col, WORD_BITS)
    return (words[:, w] >> np.uint64(b)) & _ONE


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr, dtype=np.uint64)
    arr.flags.writeable = False
    return arr


class BitVector:
    """An immutable binary vector of fixed length."""

    __slots__ = ("_words", "length")

    def __init__(self, words: np.ndarray, length: int) -> None:
        words = np.asarray(words, dtype=np.uint64).reshape(-1)
        if words.shape[0] != n_words(length):
            raise DimensionMismatch(f"{words.shape[0]} words cannot hold {length} bits")
        if length % WORD_BITS and words.shape[0]:
            if int(words[-1]) >> (length % WORD_BITS):
                raise ValueError("bits beyond the vector length must be zero")
        self._words = _frozen(words)
        self.length = length

    @classmethod
    def from_bits(cls, bits: Sequence[int] | np.ndarray | str) -> BitVector:
        if isinstance(bits, str):
            bits = [int(ch) for ch in bits]
        arr = np.asarray(bits, dtype=np.uint8).reshape(1, -1)
        return cls(pack_bits(arr)[0], arr.shape[1])

    @classmethod
    def from_int(cls, value: int, length: int) -> BitVector:
        """Bit ``j`` of ``value`` becomes coordinate ``j``."""
        if value < 0 or value >> length:
            raise ValueError(f"{value} does not fit in {length} bits")
        words = [(value >> (WORD_BITS * i)) & 0xFFFFFFFFFFFFFFFF for i in range(n_words(length))]
        return cls(np.array(words, dtype=np.uint64), length)

    @classmethod
    def zeros(cls, length: int) -> BitVector:
        return cls(np.zeros(n_words(length), dtype=np.uint64), length)

    @property
    def words(self) -> np.ndarray:
        return self._words

    @property
    def weight(self) -> int:
        return int(np.bitwise_count(self._words).sum())

    def to_bits(self) -> np.ndarray:
        return unpack_bits(self._words.reshape(1, -1), self.length)[0]

    def to_int(self) -> int:
        return sum(int(w) << (WORD_BITS * i) for i, w in enumerate(self._words))

    def _check(self, other: BitVector) -> None:
        if self.length != other.length:
            raise DimensionMismatch(f"lengths {self.length} and {other.length} differ")

    def __xor__(self, other: BitVector) -> BitVector:
        self._check(other)
        return BitVector(self._words ^ other._words, self.length)

    __add__ = __xor__

    def __and__(self, other: BitVector) -> BitVector:
        self._check(other)
        return BitVector(self._words & other._words, self.length)

    def __or__(self, other: BitVector) -> BitVector:
        self._check(other)
        return BitVector(self._words | other._words, self.length)

    def dot(self, other: BitVector) -> int:
        """Standard inner product mod 2."""
        return (self & other).weight & 1

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.length:
            raise IndexError(j)
        return int(self._words[j // WORD_BITS] >> np.uint64(j % WORD_BITS)) & 1

    def __len__(self) -> int:
        return self.length

    def __bool__(self) -> bool:
        return bool(self._words.any())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return self.length == other.length and bool(np.array_equal(self._words, other._words))

    def __hash__(self) -> int:
        return hash((self.length, self._words.tobytes()))

    def __str__(self) -> str:
        return "".join(map(str, self.to_bits()))

    def __repr__(self) -> str:
        return f"BitVector('{self}')"


class BitMatrix:
    """An immutable ``rows x cols`` binary matrix with bit-packed rows."""

    __slots__ = ("_words", "cols")

    def __init__(self, words: np.ndarray, cols: int) -> None:
        words = np.asarray(words, dtype=np.uint64)
        if words.ndim != 2 or words.shape[1] != n_words(cols):
            raise DimensionMismatch(f"word array of shape {words.shape} cannot hold {cols} columns")
        if cols % WORD_BITS and words.shape[0] and words.shape[1]:
            if np.any(words[:, -1] >> np.uint64(cols % WORD_BITS)):
                raise ValueError("bits beyond the last column must be zero")
        self._words = _frozen(words)
        self.cols = cols

    @classmethod
    def from_bits(cls, bits: Sequence[Sequence[int]] | np.ndarray, cols: int | None = None) -> BitMatrix:
        arr = np.asarray(bits, dtype=np.uint8)
        if arr.size == 0:
            rows = arr.shape[0] if arr.ndim == 2 else 0
            width = cols if cols is not None else (arr.shape[1] if arr.ndim == 2 else 0)
            return cls.zeros(rows, width)
        if arr.ndim != 2:
            raise DimensionMismatch(f"expected a 2-D array, got shape {arr.shape}")
        return cls(pack_bits(arr), arr.shape[1])

    @classmethod
    def from_rows(cls, rows: Iterable[str | Sequence[int]], cols: int | None = None) -> BitMatrix:
        """Build from strings such as ``"1011"`` or from 0/1 sequences."""
        parsed = [[int(ch) for ch in r] if isinstance(r, str) else list(r) for r in rows]
        if not parsed:
            return cls.zeros(0, cols or 0)
        return cls.from_bits(parsed)

    @classmethod
    def from_vectors(cls, vectors: Sequence[BitVector], cols: int) -> BitMatrix:
        if any(v.length != cols for v in vectors):
            raise DimensionMismatch("all vectors must have length equal to cols")
        if not vectors:
            return cls.zeros(0, cols)
        return cls(np.stack([v.words for v in vectors]), cols)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BitMatrix:
        return cls(np.zeros((rows, n_words(cols)), dtype=np.uint64), cols)

    @classmethod
    def identity(cls, size: int) -> BitMatrix:
        return cls.from_bits(np.eye(size, dtype=np.uint8), cols=size)

    @property
    def words(self) -> np.ndarray:
        return self._words

    @property
    def rows(self) -> int:
        return self._words.shape[0]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def to_bits(self) -> np.ndarray:
        return unpack_bits(self._words, self.cols)

    def row(self, i: int) -> BitVector:
        return BitVector(self._words[i], self.cols)

    def __iter__(self) -> Iterator[BitVector]:
        return (self.row(i) for i in range(self.rows))

    def __len__(self) -> int:
        return self.rows

    def __getitem__(self, index: int | slice | Sequence[int]) -> BitVector | BitMatrix:
        if isinstance(index, (int, np.integer)):
            return self.row(int(index))
        return BitMatrix(self._words[index].reshape(-1, self._words.shape[1]), self.cols)

    def is_zero(self) -> bool:
        return not self._words.any()

    @property
    def T(self) -> BitMatrix:
        return transpose(self)

    def __add__(self, other: BitMatrix) -> BitMatrix:
        return add(self, other)

    def __matmul__(self, other: BitMatrix) -> BitMatrix:
        return multiply(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._words, other._words))

    def __hash__(self) -> int:
        return hash((self.shape, self._words.tobytes()))

    def __str__(self) -> str:
        return "\n".join("".join(map(str, r)) for r in self.to_bits())

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"


def vstack(*mats: BitMatrix) -> BitMatrix:
    cols = {m.cols for m in mats}
    if len(cols) != 1:
        raise DimensionMismatch(f"cannot stack matrices with column counts {sorted(cols)}")
    return BitMatrix(np.vstack([m.words for m in mats]), cols.pop())


def hstack(*mats: BitMatrix) -> BitMatrix:
    rows = {m.rows for m in mats}
    if len(rows) != 1:
        raise DimensionMismatch(f"cannot join matrices with row counts {sorted(rows)}")
    bits = np.hstack([m.to_bits() for m in mats])
    return BitMatrix.from_bits(bits, cols=sum(m.cols for m in mats))


def add(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    if a.shape != b.shape:
        raise DimensionMismatch(f"cannot add {a.shape} and {b.shape}")
    return BitMatrix(a.words ^ b.words, a.cols)


def transpose(m: BitMatrix) -> BitMatrix:
    return BitMatrix.from_bits(m.to_bits().T, cols=m.rows)


def multiply(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    # float64 products are exact here: every partial sum is an integer below 2**53
    prod = a.to_bits().astype(np.float64) @ b.to_bits().astype(np.float64)
    return BitMatrix.from_bits(prod.astype(np.int64) & 1, cols=b.cols)


def _rref_words(words: np.ndarray, cols: int) -> tuple[np.ndarray, list[int]]:
    work = np.array(words, dtype=np.uint64, copy=True)
    nrows = work.shape[0]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == nrows:
            break
        below = np.flatnonzero(_column_bits(work[r:], c))
        if below.size == 0:
            continue
        p = r + int(below[0])
        if p != r:
            work[[r, p]] = work[[p, r]]
        hits = np.flatnonzero(_column_bits(work, c))
        hits = hits[hits != r]
        if hits.size:
            work[hits] ^= work[r]
        pivots.append(c)
        r += 1
    return work, pivots


def rref(m: BitMatrix) -> tuple[BitMatrix, list[int], int]:
    """Reduced row-echelon form.

    Returns:
        ``(R, pivots, rank)`` where ``R`` has the shape of ``m`` with its
        zero rows at the bottom and ``pivots[i]`` is the pivot column of row ``i``.
    """
    words, pivots = _rref_words(m.words, m.cols)
    return BitMatrix(words, m.cols), pivots, len(pivots)


def rank(m: BitMatrix) -> int:
    return len(_rref_words(m.words, m.cols)[1])


def row_basis(m: BitMatrix) -> BitMatrix:
    """The nonzero rows of ``rref(m)``: the canonical basis of the row space."""
    words, pivots = _rref_words(m.words, m.cols)
    return BitMatrix(words[: len(pivots)], m.cols)


def kernel(m: BitMatrix) -> BitMatrix:
    """Basis of ``{v : m v^T = 0}``, one row per non-pivot column."""
    words, pivots = _rref_words(m.words, m.cols)
    reduced = unpack_bits(words[: len(pivots)], m.cols)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = np.zeros((len(free), m.cols), dtype=np.uint8)
    if free:
        basis[np.arange(len(free)), free] = 1
        if pivots:
            basis[:, pivots] = reduced[:, free].T
    return BitMatrix.from_bits(basis, cols=m.cols)


def inverse(m: BitMatrix) -> BitMatrix:
    n = m.rows
    if m.cols != n:
        raise DimensionMismatch(f"only square matrices are invertible, got {m.shape}")
    augmented = np.hstack([m.to_bits(), np.eye(n, dtype=np.uint8)])
    words, pivots = _rref_words(pack_bits(augmented), 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise SingularMatrix(f"matrix of rank {sum(p < n for p in pivots)} < {n} is singular")
    return BitMatrix.from_bits(unpack_bits(words, 2 * n)[:, n:], cols=n)


def reduce_rows(basis: BitMatrix, pivots: Sequence[int], vectors: BitMatrix) -> BitMatrix:
    """Reduce each row of ``vectors`` modulo the row space of an rref ``basis``.

    The result is zero exactly for rows inside the row space.
    """
    if basis.cols != vectors.cols:
        raise DimensionMismatch(f"widths {basis.cols} and {vectors.cols} differ")
    work = np.array(vectors.words, copy=True)
    for i, c in enumerate(pivots):
        hits = np.flatnonzero(_column_bits(work, c))
        if hits.size:
            work[hits] ^= basis.words[i]
    return BitMatrix(work, vectors.cols)


def row_space_contains(m: BitMatrix, v: BitVector | BitMatrix) -> bool:
    """True if ``v`` (a vector, or every row of a matrix) lies in the row space of ``m``."""
    vectors = BitMatrix.from_vectors([v], v.length) if isinstance(v, BitVector) else v
    if vectors.cols != m.cols:
        raise DimensionMismatch(f"widths {m.cols} and {vectors.cols} differ")
    reduced, pivots, _ = rref(m)
    return reduce_rows(reduced, pivots, vectors).is_zero()


def row_space_equal(a: BitMatrix, b: BitMatrix) -> bool:
    if a.cols != b.cols:
        raise DimensionMismatch(f"widths {a.cols} and {b.cols} differ")
    return row_basis(a) == row_basis(b)
