"""Classical binary linear codes."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, replace

import numpy as np

from . import gf2
from .errors import LengthMismatch
from .gf2 import BitMatrix
from .search import DEFAULT_CODEWORD_CAP, span_min_weights

DEFAULT_SUBSET_CAP = 10**9


@dataclass(frozen=True)
class Unverified:
    """A distance that could not be computed within the work cap.

    ``lower_bound`` carries whatever guarantee is known (usually a designed
    distance), or ``None``.
    """

    lower_bound: int | None = None
    reason: str = "enumeration cap exceeded"

    def __str__(self) -> str:
        bound = f">= {self.lower_bound}" if self.lower_bound is not None else "unknown"
        return f"{bound} (unverified)"


@dataclass(frozen=True, eq=False)
class LinearCode:
    """An ``[n, k]`` binary code given by a full-rank generator and a check matrix."""

    generator: BitMatrix
    check: BitMatrix
    distance: int | None = None
    designed_distance: int | None = None
    name: str = ""

    def __post_init__(self) -> None:
        if self.generator.cols != self.check.cols:
            raise LengthMismatch("generator and check matrices have different lengths")
        if self.generator.rows + self.check.rows != self.generator.cols:
            raise ValueError(
                f"{self.generator.rows} generator rows and {self.check.rows} check rows "
                f"do not add up to n={self.generator.cols}"
            )
        if not (self.generator @ self.check.T).is_zero():
            raise ValueError("generator is not orthogonal to the check matrix")
        if gf2.rank(self.generator) != self.generator.rows or gf2.rank(self.check) != self.check.rows:
            raise ValueError("generator and check matrices must both have full row rank")

    @classmethod
    def from_generator(cls, generator: BitMatrix, **kwargs) -> LinearCode:
        basis = gf2.row_basis(generator)
        if basis.rows != generator.rows:
            generator = basis
        return cls(generator, gf2.kernel(generator), **kwargs)

    @classmethod
    def from_check(cls, check: BitMatrix, **kwargs) -> LinearCode:
        return cls(gf2.kernel(check), gf2.row_basis(check), **kwargs)

    @property
    def n(self) -> int:
        return self.generator.cols

    @property
    def k(self) -> int:
        return self.generator.rows

    @property
    def known_distance(self) -> int | None:
        """Verified distance if available, else the designed lower bound."""
        return self.distance if self.distance is not None else self.designed_distance

    def __contains__(self, word: gf2.BitVector) -> bool:
        return (self.check @ BitMatrix.from_vectors([word], self.n).T).is_zero()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.n == other.n and gf2.row_space_equal(self.generator, other.generator)

    def __hash__(self) -> int:
        return hash(gf2.row_basis(self.generator))

    def __str__(self) -> str:
        d = self.distance if self.distance is not None else "?"
        return f"[{self.n},{self.k},{d}]"

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"LinearCode{label}{self}"


def dual(c: LinearCode) -> LinearCode:
    return LinearCode(c.check, c.generator)


def contains(outer: LinearCode, inner: LinearCode) -> bool:
    """True if every codeword of ``inner`` is a codeword of ``outer``."""
    if outer.n != inner.n:
        raise LengthMismatch(f"lengths {outer.n} and {inner.n} differ")
    return (inner.generator @ outer.check.T).is_zero()


def is_dual_containing(c: LinearCode) -> bool:
    return contains(c, dual(c))


def extend_parity(c: LinearCode) -> LinearCode:
    """Append an overall parity bit to every codeword."""
    bits = c.generator.to_bits()
    parity = bits.sum(axis=1, dtype=np.int64) & 1
    generator = BitMatrix.from_bits(np.hstack([bits, parity[:, None]]), cols=c.n + 1)

    def bumped(d: int | None) -> int | None:
        return d + 1 if d is not None and d % 2 else d

    return LinearCode.from_generator(
        generator,
        distance=bumped(c.distance),
        designed_distance=bumped(c.designed_distance),
        name=f"extended {c.name}".strip(),
    )


def puncture_last(c: LinearCode) -> LinearCode:
    """Delete the last coordinate. For a parity-extended code this recovers the original."""
    generator = BitMatrix.from_bits(c.generator.to_bits()[:, :-1], cols=c.n - 1)

    def lowered(d: int | None) -> int | None:
        return d - 1 if d is not None else None

    return LinearCode.from_generator(
        generator, distance=None, designed_distance=lowered(c.known_distance), name=c.name
    )


def even_weight_code(n: int) -> LinearCode:
    if n < 2:
        raise ValueError("the even-weight code needs n >= 2")
    check = BitMatrix.from_bits(np.ones((1, n), dtype=np.uint8))
    return LinearCode(gf2.kernel(check), check, distance=2, designed_distance=2, name="even-weight")


def repetition_code(n: int) -> LinearCode:
    return replace(dual(even_weight_code(n)), distance=n, designed_distance=n, name="repetition")


def hamming_code(r: int) -> LinearCode:
    """The ``[2^r - 1, 2^r - 1 - r, 3]`` Hamming code; column ``j`` of the check is ``j + 1`` in binary."""
    n = (1 << r) - 1
    cols = np.arange(1, n + 1)
    check = ((cols[None, :] >> np.arange(r)[:, None]) & 1).astype(np.uint8)
    return LinearCode.from_check(BitMatrix.from_bits(check), distance=3, designed_distance=3, name="Hamming")


def with_distance(c: LinearCode, distance: int) -> LinearCode:
    return replace(c, distance=distance)


# -- minimum distance ---------------------------------------------------------


def _enumerate_distance(c: LinearCode, workers: int = 1) -> int:
    weights = span_min_weights(c.generator.words, kind="hamming", workers=workers)
    return weights.all_nonzero


def _column_search_distance(c: LinearCode, cap: int) -> int | None:
    """Smallest ``w`` such that some ``w`` columns of the check matrix sum to zero.

    Enumerates ``(w-1)``-subsets and looks the missing column up by value.
    Returns ``None`` once the subset budget ``cap`` is exhausted.
    """
    columns = [int.from_bytes(np.packbits(col, bitorder="little").tobytes(), "little")
               for col in c.check.to_bits().T]
    where: dict[int, list[int]] = {}
    for j, value in enumerate(columns):
        where.setdefault(value, []).append(j)
    if 0 in where:
        return 1
    spent = 0
    for w in range(2, c.n - c.k + 2):
        spent += math.comb(c.n, w - 1)
        if spent > cap:
            return None
        for subset in itertools.combinations(range(c.n), w - 1):
            acc = 0
            for j in subset:
                acc ^= columns[j]
            for j in where.get(acc, ()):
                if j > subset[-1]:
                    return w
    raise AssertionError("n - k + 1 columns are always dependent")  # unreachable


def min_distance(
    c: LinearCode,
    cap: int = DEFAULT_CODEWORD_CAP,
    subset_cap: int = DEFAULT_SUBSET_CAP,
    *,
    method: str = "auto",
    workers: int = 1,
) -> int | Unverified:
    """Exact minimum weight of a nonzero codeword.

    ``method="enumerate"`` walks all ``2^k`` codewords (allowed when
    ``2^k <= cap``); ``method="columns"`` searches for dependent columns of
    the check matrix within ``subset_cap`` subsets. ``"auto"`` tries them in
    that order. A zero-dimensional code has no nonzero codeword and returns
    an :class:`Unverified` with no bound.
    """
    if c.k == 0:
        return Unverified(None, "code has no nonzero codewords")
    if method in ("auto", "enumerate") and (1 << c.k) <= cap:
        return _enumerate_distance(c, workers)
    if method in ("auto", "columns"):
        found = _column_search_distance(c, subset_cap)
        if found is not None:
            return found
    return Unverified(c.designed_distance)
