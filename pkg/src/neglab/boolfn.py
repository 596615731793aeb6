"""Truth-table representation of Boolean functions on the hypercube.

Point/index convention used everywhere in this package: the table index
``i`` encodes the input point whose coordinate ``x_j`` (coordinates are
1-based) equals bit ``j-1`` of ``i``.  Index 0 is the all-zeros point,
index ``2**n - 1`` the all-ones point, and the bitwise partial order on
points is exactly bitmask containment of indices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import ArityMismatchError, ParseError, ValidationError
from .rng import generator

MAX_ARITY = 24

_HEX_CHARS = np.frombuffer(b"0123456789abcdef", dtype=np.uint8)
_HEADER_RE = re.compile(r"\ATT v1 n=(0|[1-9][0-9]*)\Z")


def popcount(values) -> np.ndarray:
    """Number of set bits of each entry (entries must be non-negative)."""
    return np.bitwise_count(np.asarray(values, dtype=np.int64))


def point_weights(n: int) -> np.ndarray:
    """Hamming weight of every point of the n-cube, in index order."""
    return popcount(np.arange(1 << n, dtype=np.int64))


class BooleanFunction:
    """Immutable Boolean function given by its packed truth table.

    The table is stored bit-packed (8 points per byte, low bit first);
    `bits` exposes it as a 0/1 array of length ``2**n``.
    """

    __slots__ = ("n", "packed", "__dict__")

    def __init__(self, n: int, packed: np.ndarray):
        if not 0 <= n <= MAX_ARITY:
            raise ValidationError(f"arity must be between 0 and {MAX_ARITY}, got {n}")
        packed = np.asarray(packed, dtype=np.uint8)
        expected = ((1 << n) + 7) // 8
        if packed.shape != (expected,):
            raise ValidationError(
                f"packed table must have {expected} bytes for arity {n}"
            )
        packed = packed.copy()
        packed.setflags(write=False)
        self.n = int(n)
        self.packed = packed

    @classmethod
    def from_bits(cls, bits) -> "BooleanFunction":
        """Build from a 0/1 sequence of length ``2**n`` (index order)."""
        bits = np.asarray(bits, dtype=np.uint8)
        if bits.ndim != 1 or bits.size == 0 or bits.size & (bits.size - 1):
            raise ValidationError("table length must be a power of two")
        if not np.all(bits <= 1):
            raise ValidationError("table entries must be 0 or 1")
        n = int(bits.size).bit_length() - 1
        packed = np.packbits(bits, bitorder="little")
        return cls(n, packed)

    @classmethod
    def from_onset(cls, n: int, ones) -> "BooleanFunction":
        """Build from the set of point indices mapped to 1."""
        bits = np.zeros(1 << n, dtype=np.uint8)
        ones = np.asarray(list(ones), dtype=np.int64)
        if ones.size:
            if ones.min() < 0 or ones.max() >= 1 << n:
                raise ValidationError("onset index out of range")
            bits[ones] = 1
        return cls.from_bits(bits)

    @cached_property
    def bits(self) -> np.ndarray:
        """Unpacked truth table as a read-only uint8 array of 0/1."""
        bits = np.unpackbits(self.packed, bitorder="little", count=1 << self.n)
        bits.setflags(write=False)
        return bits

    @property
    def size(self) -> int:
        return 1 << self.n

    def evaluate(self, x: int) -> int:
        """Value at point index x."""
        if not 0 <= x < self.size:
            raise ValidationError(f"point index {x} out of range for arity {self.n}")
        return int((self.packed[x >> 3] >> (x & 7)) & 1)

    __call__ = evaluate

    def count_ones(self) -> int:
        return int(popcount(self.packed.astype(np.int64)).sum())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BooleanFunction)
            and self.n == other.n
            and bool(np.array_equal(self.packed, other.packed))
        )

    def __hash__(self) -> int:
        return hash((self.n, self.packed.tobytes()))

    def __invert__(self) -> "BooleanFunction":
        return BooleanFunction.from_bits(1 - self.bits)

    def __xor__(self, other: "BooleanFunction") -> "BooleanFunction":
        if self.n != other.n:
            raise ArityMismatchError("xor requires equal arities")
        return BooleanFunction.from_bits(self.bits ^ other.bits)

    def __repr__(self) -> str:
        if self.n <= 4:
            return f"BooleanFunction(n={self.n}, table={''.join(map(str, self.bits))})"
        return f"BooleanFunction(n={self.n}, ones={self.count_ones()}/{self.size})"


# ---------------------------------------------------------------------------
# Elementary quantities


def bias(f: BooleanFunction) -> float:
    """max(Pr[f=1], Pr[f=0]) under the uniform distribution; in [1/2, 1]."""
    ones = f.count_ones()
    return max(ones, f.size - ones) / f.size


def is_balanced(f: BooleanFunction) -> bool:
    return 2 * f.count_ones() == f.size


def distance(f: BooleanFunction, g: BooleanFunction) -> float:
    """Normalized Hamming distance Pr_x[f(x) != g(x)]."""
    if f.n != g.n:
        raise ArityMismatchError(f"arity mismatch: {f.n} vs {g.n}")
    return int(np.count_nonzero(f.bits != g.bits)) / f.size


# ---------------------------------------------------------------------------
# Restrictions

FREE = None


@dataclass(frozen=True)
class Restriction:
    """Per-coordinate assignment: None (free) or a fixed bit 0/1.

    Coordinates are 1-based, consistent with the x_j naming; entry j-1 of
    `assignments` governs coordinate j.
    """

    assignments: tuple

    def __post_init__(self):
        for a in self.assignments:
            if a not in (None, 0, 1):
                raise ValidationError("assignments must be None, 0 or 1")

    @property
    def n(self) -> int:
        return len(self.assignments)

    @property
    def free_positions(self) -> tuple:
        """0-based bit positions left free, ascending."""
        return tuple(j for j, a in enumerate(self.assignments) if a is None)

    @property
    def free_count(self) -> int:
        return len(self.free_positions)

    @classmethod
    def all_free(cls, n: int) -> "Restriction":
        return cls((None,) * n)

    @classmethod
    def fixing(cls, n: int, fixed: dict) -> "Restriction":
        """Restriction fixing the 1-based coordinates in `fixed`."""
        assignments = [None] * n
        for coord, value in fixed.items():
            if not 1 <= coord <= n:
                raise ValidationError(f"coordinate {coord} out of range 1..{n}")
            assignments[coord - 1] = int(value)
        return cls(tuple(assignments))


def restrict(f: BooleanFunction, rho: Restriction) -> BooleanFunction:
    """Subfunction on the free coordinates of rho, in ascending order."""
    if rho.n != f.n:
        raise ArityMismatchError(f"restriction arity {rho.n} != function arity {f.n}")
    free = rho.free_positions
    base = 0
    for j, a in enumerate(rho.assignments):
        if a == 1:
            base |= 1 << j
    m = len(free)
    sub = np.arange(1 << m, dtype=np.int64)
    x = np.full(1 << m, base, dtype=np.int64)
    for t, pos in enumerate(free):
        x |= ((sub >> t) & 1) << pos
    return BooleanFunction.from_bits(f.bits[x])


# ---------------------------------------------------------------------------
# Named families


def constant(n: int, value: int) -> BooleanFunction:
    return BooleanFunction.from_bits(np.full(1 << n, int(value), dtype=np.uint8))


def dictator(n: int, coord: int) -> BooleanFunction:
    """The projection x -> x_coord (1-based coordinate)."""
    if not 1 <= coord <= n:
        raise ValidationError(f"coordinate {coord} out of range 1..{n}")
    idx = np.arange(1 << n, dtype=np.int64)
    return BooleanFunction.from_bits((idx >> (coord - 1)) & 1)


def parity(n: int) -> BooleanFunction:
    return BooleanFunction.from_bits(point_weights(n) & 1)


def majority(n: int) -> BooleanFunction:
    if n % 2 == 0:
        raise ValidationError("majority requires odd arity")
    return BooleanFunction.from_bits((point_weights(n) > n // 2).astype(np.uint8))


def conjunction(n: int) -> BooleanFunction:
    bits = np.zeros(1 << n, dtype=np.uint8)
    bits[-1] = 1
    return BooleanFunction.from_bits(bits)


def disjunction(n: int) -> BooleanFunction:
    bits = np.ones(1 << n, dtype=np.uint8)
    bits[0] = 0
    return BooleanFunction.from_bits(bits)


def random_function(n: int, seed) -> BooleanFunction:
    """Uniformly random truth table from the seeded Philox stream."""
    if n > MAX_ARITY:
        raise ValidationError(f"arity must be at most {MAX_ARITY}, got {n}")
    rng = generator(seed)
    return BooleanFunction.from_bits(rng.integers(0, 2, size=1 << n, dtype=np.uint8))


# ---------------------------------------------------------------------------
# TT v1 file format
#
# Line 1: "TT v1 n=<arity>"
# Line 2: ceil(2**n / 4) lowercase hex digits; digit d carries table
#         indices 4d..4d+3 with the digit's most significant bit holding
#         the lowest index (4d).  Both lines newline-terminated, ASCII.


def table_to_hex(bits: np.ndarray) -> str:
    """Pack a 0/1 table into the TT v1 hex payload."""
    size = bits.size
    padded = np.zeros(((size + 3) // 4) * 4, dtype=np.uint8)
    padded[:size] = bits
    quads = padded.reshape(-1, 4)
    digits = quads[:, 0] * 8 + quads[:, 1] * 4 + quads[:, 2] * 2 + quads[:, 3]
    return _HEX_CHARS[digits].tobytes().decode("ascii")


def hex_to_table(payload: str, n: int) -> np.ndarray:
    """Inverse of table_to_hex; validates length, charset and padding."""
    expected = ((1 << n) + 3) // 4
    if len(payload) != expected:
        raise ParseError(
            f"payload has {len(payload)} hex digits, expected {expected} for n={n}"
        )
    raw = np.frombuffer(payload.encode("ascii", errors="replace"), dtype=np.uint8)
    digits = np.full(raw.shape, -1, dtype=np.int8)
    digto9 = (raw >= ord("0")) & (raw <= ord("9"))
    atof = (raw >= ord("a")) & (raw <= ord("f"))
    digits[digto9] = raw[digto9] - ord("0")
    digits[atof] = raw[atof] - ord("a") + 10
    if np.any(digits < 0):
        raise ParseError("payload contains non-hex characters (lowercase hex required)")
    bits = np.zeros(expected * 4, dtype=np.uint8)
    bits[0::4] = (digits >> 3) & 1
    bits[1::4] = (digits >> 2) & 1
    bits[2::4] = (digits >> 1) & 1
    bits[3::4] = digits & 1
    size = 1 << n
    if np.any(bits[size:]):
        raise ParseError("payload sets bits beyond the table length")
    return bits[:size]


def serialize(f: BooleanFunction) -> str:
    """TT v1 file contents for f (two newline-terminated lines)."""
    return f"TT v1 n={f.n}\n{table_to_hex(f.bits)}\n"


def parse(text) -> BooleanFunction:
    """Parse TT v1 file contents (str or ASCII bytes)."""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError("truth-table file is not ASCII") from exc
    lines = text.split("\n")
    if len(lines) != 3 or lines[2] != "":
        raise ParseError("expected exactly two newline-terminated lines")
    match = _HEADER_RE.match(lines[0])
    if not match:
        raise ParseError(f"malformed header: {lines[0]!r}")
    n = int(match.group(1))
    if n > MAX_ARITY:
        raise ParseError(f"arity {n} exceeds the maximum of {MAX_ARITY}")
    return BooleanFunction.from_bits(hex_to_table(lines[1], n))


def save(f: BooleanFunction, path) -> None:
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(serialize(f))


def load(path) -> BooleanFunction:
    with open(path, "rb") as fh:
        return parse(fh.read())
