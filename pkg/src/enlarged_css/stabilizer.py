"""Stabilizer codes in the binary symplectic (X|Z) picture."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from . import gf2
from .codes import LinearCode, Unverified, contains, dual
from .errors import DimensionMismatch, DualConditionViolated, FormatError, LengthMismatch
from .gf2 import BitMatrix, BitVector
from .search import DEFAULT_SYMPLECTIC_CAP, span_min_weights

_PAULI = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}
_BITS = {v: k for k, v in _PAULI.items()}


@dataclass(frozen=True)
class SymplecticVector:
    x: BitVector
    z: BitVector

    def __post_init__(self) -> None:
        if self.x.length != self.z.length:
            raise LengthMismatch("X and Z parts must have the same length")

    @property
    def n(self) -> int:
        return self.x.length

    @classmethod
    def from_pauli(cls, text: str) -> SymplecticVector:
        x, z = parse_pauli_string(text)
        return cls(BitVector.from_bits(x), BitVector.from_bits(z))

    def __add__(self, other: SymplecticVector) -> SymplecticVector:
        return SymplecticVector(self.x ^ other.x, self.z ^ other.z)

    def __str__(self) -> str:
        return "".join(_PAULI[b] for b in zip(self.x.to_bits(), self.z.to_bits()))


def symplectic_weight(v: SymplecticVector) -> int:
    """Number of qubits where the operator acts nontrivially: ``wt(x OR z)``."""
    return (v.x | v.z).weight


def symplectic_inner(a: SymplecticVector, b: SymplecticVector) -> int:
    if a.n != b.n:
        raise LengthMismatch(f"vectors on {a.n} and {b.n} qubits")
    return (a.x.dot(b.z) + a.z.dot(b.x)) & 1


def symplectic_product(ax: BitMatrix, az: BitMatrix, bx: BitMatrix, bz: BitMatrix) -> BitMatrix:
    """Matrix of pairwise symplectic inner products between two sets of rows."""
    return ax @ bz.T + az @ bx.T


@dataclass(frozen=True, eq=False)
class StabilizerCode:
    """An ``[[n, K]]`` stabilizer code.

    ``gx | gz`` holds the ``n + K`` generator rows (the normalizer, including
    the stabilizer); ``hx | hz`` the ``n - K`` stabilizer rows.
    ``claimed_distance`` is what the construction promises;
    ``distance`` and ``pure`` are filled in by brute force.
    """

    gx: BitMatrix
    gz: BitMatrix
    hx: BitMatrix
    hz: BitMatrix
    claimed_distance: int | None = None
    distance: int | None = None
    pure: bool | None = None
    notes: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        n = self.gx.cols
        if {self.gz.cols, self.hx.cols, self.hz.cols} != {n}:
            raise DimensionMismatch("all four blocks must have n columns")
        if self.gx.rows != self.gz.rows or self.hx.rows != self.hz.rows:
            raise DimensionMismatch("X and Z blocks must have equal row counts")
        if self.gx.rows + self.hx.rows != 2 * n:
            raise DimensionMismatch(
                f"{self.gx.rows} generator rows and {self.hx.rows} stabilizer rows "
                f"are not n + K and n - K for n={n}"
            )

    @property
    def n(self) -> int:
        return self.gx.cols

    @property
    def K(self) -> int:
        return self.gx.rows - self.n

    @property
    def generator(self) -> BitMatrix:
        return gf2.hstack(self.gx, self.gz)

    @property
    def stabilizer(self) -> BitMatrix:
        return gf2.hstack(self.hx, self.hz)

    def stabilizer_rows(self) -> list[SymplecticVector]:
        return [SymplecticVector(x, z) for x, z in zip(self.hx, self.hz)]

    def generator_rows(self) -> list[SymplecticVector]:
        return [SymplecticVector(x, z) for x, z in zip(self.gx, self.gz)]

    def __str__(self) -> str:
        d = self.distance if self.distance is not None else self.claimed_distance
        return f"[[{self.n},{self.K},{d if d is not None else '?'}]]"

    __repr__ = __str__


def check_commutativity(code: StabilizerCode) -> bool:
    """Stabilizers commute with each other and with every generator row."""
    hh = symplectic_product(code.hx, code.hz, code.hx, code.hz)
    hg = symplectic_product(code.hx, code.hz, code.gx, code.gz)
    return hh.is_zero() and hg.is_zero()


def check_structure(code: StabilizerCode) -> bool:
    """Commutativity plus full rank of both blocks and stabilizer inside the generator span."""
    g, h = code.generator, code.stabilizer
    return (
        check_commutativity(code)
        and gf2.rank(g) == g.rows
        and gf2.rank(h) == h.rows
        and gf2.row_space_contains(g, h)
    )


def in_symplectic_dual(code: StabilizerCode, v: SymplecticVector) -> bool:
    """Whether ``v`` is symplectic-orthogonal to every generator row, i.e. a stabilizer element."""
    row = BitMatrix.from_vectors([v.x], v.n), BitMatrix.from_vectors([v.z], v.n)
    return symplectic_product(*row, code.gx, code.gz).is_zero()


def from_stabilizer(hx: BitMatrix, hz: BitMatrix, **kwargs) -> StabilizerCode:
    """Complete a commuting stabilizer to a code by computing its normalizer.

    Independent stabilizer rows are kept verbatim; dependent ones are
    replaced by a row-reduced basis.
    """
    normalizer = gf2.kernel(gf2.hstack(hz, hx))
    bits = normalizer.to_bits()
    n = hx.cols
    gx = BitMatrix.from_bits(bits[:, :n], cols=n)
    gz = BitMatrix.from_bits(bits[:, n:], cols=n)
    stacked = gf2.hstack(hx, hz)
    if gf2.rank(stacked) < stacked.rows:
        basis = gf2.row_basis(stacked).to_bits()
        hx = BitMatrix.from_bits(basis[:, :n], cols=n)
        hz = BitMatrix.from_bits(basis[:, n:], cols=n)
    return StabilizerCode(gx, gz, hx, hz, **kwargs)


def css(c1: LinearCode, c2: LinearCode) -> StabilizerCode:
    """CSS code from ``C1`` and ``C2`` with ``C1^perp`` inside ``C2``.

    X-type generators come from ``C1`` and Z-type from ``C2``; the stabilizer
    is ``(H2 | 0), (0 | H1)``.
    """
    if c1.n != c2.n:
        raise LengthMismatch(f"lengths {c1.n} and {c2.n} differ")
    if not contains(c2, dual(c1)):
        raise DualConditionViolated("C1^perp is not contained in C2")
    n = c1.n
    zg1, zg2 = BitMatrix.zeros(c1.k, n), BitMatrix.zeros(c2.k, n)
    zh1, zh2 = BitMatrix.zeros(n - c1.k, n), BitMatrix.zeros(n - c2.k, n)
    d1, d2 = c1.known_distance, c2.known_distance
    claimed = min(d1, d2) if d1 is not None and d2 is not None else None
    return StabilizerCode(
        gx=gf2.vstack(c1.generator, zg2),
        gz=gf2.vstack(zg1, c2.generator),
        hx=gf2.vstack(c2.check, zh1),
        hz=gf2.vstack(zh2, c1.check),
        claimed_distance=claimed,
    )


@dataclass(frozen=True)
class QuantumDistance:
    distance: int | Unverified
    pure: bool | None


def _split_basis(code: StabilizerCode) -> tuple[BitMatrix, int]:
    """Generator basis with the stabilizer span first; returns (basis, stabilizer rank)."""
    stab, pivots, s = gf2.rref(code.stabilizer)
    stab = stab[:s]
    residual = gf2.reduce_rows(stab, pivots, code.generator)
    logical = gf2.row_basis(residual)
    if stab.rows + logical.rows != code.gx.rows or not gf2.row_space_contains(code.generator, stab):
        raise ValueError("stabilizer span is not inside the generator span")
    return gf2.vstack(stab, logical), s


def quantum_distance(
    code: StabilizerCode,
    cap: int = DEFAULT_SYMPLECTIC_CAP,
    *,
    shards: int = 1,
    workers: int = 1,
) -> QuantumDistance:
    """Brute-force distance and purity over all ``2^(n+K)`` generator combinations.

    The distance is the least weight of a vector in the code but outside
    the stabilizer; purity means no nonzero vector at all is lighter. For
    ``K = 0`` there is nothing outside the stabilizer and the distance is the
    least weight of a nonzero stabilizer element (so such codes are pure).
    """
    r = code.gx.rows
    if (1 << r) > cap:
        return QuantumDistance(Unverified(code.claimed_distance), None)
    basis, s = _split_basis(code)
    bits = basis.to_bits()
    n = code.n
    x = BitMatrix.from_bits(bits[:, :n], cols=n).words
    z = BitMatrix.from_bits(bits[:, n:], cols=n).words
    weights = span_min_weights(
        np.hstack([x, z]), kind="symplectic", split=s, shards=shards, workers=workers
    )
    if weights.above_split is None:
        d = weights.all_nonzero
        return QuantumDistance(d if d is not None else Unverified(None, "empty code"), True)
    return QuantumDistance(weights.above_split, weights.all_nonzero >= weights.above_split)


def with_verified_distance(code: StabilizerCode, result: QuantumDistance) -> StabilizerCode:
    if isinstance(result.distance, Unverified):
        return code
    return replace(code, distance=result.distance, pure=result.pure)


# -- Pauli strings ---------------------------------------------------------------


def parse_pauli_string(text: str) -> tuple[np.ndarray, np.ndarray]:
    try:
        pairs = [_BITS[ch] for ch in text.strip().upper()]
    except KeyError as exc:
        raise FormatError(f"invalid Pauli character {exc.args[0]!r} in {text!r}") from None
    arr = np.array(pairs, dtype=np.uint8).reshape(-1, 2)
    return arr[:, 0], arr[:, 1]


def to_pauli_strings(code: StabilizerCode) -> list[str]:
    """One ``IXYZ`` string per stabilizer row."""
    xb, zb = code.hx.to_bits(), code.hz.to_bits()
    return ["".join(_PAULI[p] for p in zip(xr, zr)) for xr, zr in zip(xb, zb)]


def stabilizer_from_pauli_strings(lines: list[str], n: int) -> tuple[BitMatrix, BitMatrix]:
    xs, zs = [], []
    for line in lines:
        x, z = parse_pauli_string(line)
        if x.size != n:
            raise FormatError(f"Pauli string {line!r} has length {x.size}, expected {n}")
        xs.append(x)
        zs.append(z)
    shape = (len(lines), n)
    xb = np.array(xs, dtype=np.uint8).reshape(shape)
    zb = np.array(zs, dtype=np.uint8).reshape(shape)
    return BitMatrix.from_bits(xb, cols=n), BitMatrix.from_bits(zb, cols=n)
