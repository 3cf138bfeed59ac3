"""Elements of F_2^d as fixed-width bit vectors.

Conventions:
  - A vector of dimension d is stored as a Python int `bits` with
    0 <= bits < 2**d.  Coordinate 1 is the MOST significant bit, so the
    printed form reads left to right: dim=4, bits=0b0011 prints "0011".
  - The zero vector is representable (bits=0); whether zero is allowed
    is a property of the surrounding object (labelings exclude it,
    pair partitions include it).
  - Dimensions are capped at the machine word (64) so that label sets
    fit in flat integer arrays and masks.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_DIM = 64


@dataclass(frozen=True, order=True)
class GF2Vector:
    """An element of F_2^dim. Immutable; ordering is (dim, bits)."""

    dim: int
    bits: int

    def __post_init__(self) -> None:
        if not 1 <= self.dim <= MAX_DIM:
            raise ValueError(f"dimension must be in 1..{MAX_DIM}, got {self.dim}")
        if not 0 <= self.bits < (1 << self.dim):
            raise ValueError(f"bits {self.bits:#x} out of range for dimension {self.dim}")

    def __str__(self) -> str:
        return format(self.bits, f"0{self.dim}b")

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    def __xor__(self, other: GF2Vector) -> GF2Vector:
        return xor(self, other)


def parse_vector(text: str) -> GF2Vector:
    """Parse a 01-string; inverse of str()."""
    if not text or any(c not in "01" for c in text):
        raise ValueError(f"not a bitstring: {text!r}")
    return GF2Vector(len(text), int(text, 2))


def vec(bits_text: str) -> GF2Vector:
    """Shorthand constructor from a printed bitstring."""
    return parse_vector(bits_text)


def zero(dim: int) -> GF2Vector:
    return GF2Vector(dim, 0)


def xor(a: GF2Vector, b: GF2Vector) -> GF2Vector:
    """Coordinatewise sum mod 2. Requires equal dimensions."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} != {b.dim}")
    return GF2Vector(a.dim, a.bits ^ b.bits)


def extend(v: GF2Vector, suffix: GF2Vector) -> GF2Vector:
    """Concatenate: first v.dim coordinates are v, last suffix.dim are suffix."""
    if v.dim + suffix.dim > MAX_DIM:
        raise ValueError("extended dimension exceeds word width")
    return GF2Vector(v.dim + suffix.dim, (v.bits << suffix.dim) | suffix.bits)


def all_nonzero(dim: int) -> list[GF2Vector]:
    """The 2**dim - 1 nonzero vectors, in increasing integer order."""
    return [GF2Vector(dim, b) for b in range(1, 1 << dim)]
