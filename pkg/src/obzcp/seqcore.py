"""Binary sequence representation, hex codec, and aperiodic correlation kernels.

Sequences live over {0,1} and are stored as plain Python integers with bit
position i holding element a_i (LSB = a_0, MSB = a_{n-1}).  All correlation
arithmetic interprets bits through the (-1)**bit map, computed branch-free
with XOR + popcount, so a shift costs O(n/w) word operations instead of O(n).
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "BinarySequence",
    "SequencePair",
    "RhoVector",
    "decode_hex",
    "encode_hex",
    "aacf",
    "accf",
    "aacf_sum_vector",
    "rho_vector",
]


@dataclass(frozen=True, slots=True)
class BinarySequence:
    """An odd-length word of bits, indexed a_0 .. a_{n-1}.

    `bits` packs the sequence into one integer with bit i = a_i.  Positions
    at or above `n` are always zero.  Instances are immutable and hashable.
    """

    n: int
    bits: int

    def __post_init__(self) -> None:
        if self.n < 3 or self.n % 2 == 0:
            raise ValueError(f"length must be odd and >= 3, got {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"value 0x{self.bits:X} does not fit in {self.n} bits")

    def bit(self, i: int) -> int:
        return (self.bits >> i) & 1

    def to_tuple(self) -> tuple[int, ...]:
        """Elements (a_0, ..., a_{n-1}) as a tuple of 0/1 ints."""
        return tuple((self.bits >> i) & 1 for i in range(self.n))

    def weight(self) -> int:
        return self.bits.bit_count()

    def __str__(self) -> str:
        return encode_hex(self)


@dataclass(frozen=True, slots=True)
class SequencePair:
    """Ordered pair of equal odd length; the unit of classification."""

    a: BinarySequence
    b: BinarySequence

    def __post_init__(self) -> None:
        if self.a.n != self.b.n:
            raise ValueError(f"length mismatch: {self.a.n} != {self.b.n}")

    @property
    def n(self) -> int:
        return self.a.n

    def __str__(self) -> str:
        return f"({self.a}, {self.b})"


@dataclass(frozen=True, slots=True)
class RhoVector:
    """Truncated AACF vector (shifts 1 .. (n-3)/2); the search map key.

    Entry values[t-1] holds the correlation at shift t.  Each entry has the
    same parity as n - t because it is a sum of n - t terms of +-1.
    """

    n: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        expect = (self.n - 3) // 2
        if len(self.values) != expect:
            raise ValueError(f"expected {expect} entries for n={self.n}, got {len(self.values)}")

    def negated(self) -> "RhoVector":
        return RhoVector(self.n, tuple(-v for v in self.values))

    def packed(self) -> bytes:
        """Fixed-width signed-byte encoding, collision-free for n <= 127."""
        return bytes((v + 128) & 0xFF for v in self.values)


def decode_hex(text: str, n: int) -> BinarySequence:
    """Parse an uppercase-hex word into a length-n sequence.

    The hex value is the packed integer: its least significant bit is a_0,
    so the most significant written bit corresponds to a_{n-1}.
    """
    if not text:
        raise ValueError("empty hex string")
    value = int(text, 16)  # raises ValueError on non-hex characters
    if value >> n:
        raise ValueError(f"0x{text} needs more than {n} bits")
    return BinarySequence(n, value)


def encode_hex(seq: BinarySequence) -> str:
    """Uppercase hex rendering of the packed value, no leading zeros."""
    return format(seq.bits, "X")


def _corr(x: int, y: int, n: int, tau: int) -> int:
    # popcount of the disagreeing positions among the n - tau overlapping ones
    window = (1 << (n - tau)) - 1
    return (n - tau) - 2 * ((x ^ (y >> tau)) & window).bit_count()


def aacf(a: BinarySequence, tau: int) -> int:
    """Aperiodic auto-correlation of `a` at integer shift `tau`.

    Symmetric in the sign of tau and zero for |tau| >= n.
    """
    tau = abs(tau)
    if tau >= a.n:
        return 0
    return _corr(a.bits, a.bits, a.n, tau)


def accf(a: BinarySequence, b: BinarySequence, tau: int) -> int:
    """Aperiodic cross-correlation of `a` and `b` at shift `tau`.

    For negative shifts the roles swap: accf(a, b, -tau) == accf(b, a, tau).
    """
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} != {b.n}")
    if tau < 0:
        a, b, tau = b, a, -tau
    if tau >= a.n:
        return 0
    return _corr(a.bits, b.bits, a.n, tau)


def aacf_sum_vector(p: SequencePair) -> list[int]:
    """Per-shift AACF sums, indexed tau = 0 .. n-1.

    Entry 0 is 2n; every entry is even (two length-matched odd/even parities).
    """
    return [aacf(p.a, t) + aacf(p.b, t) for t in range(p.n)]


def rho_vector(a: BinarySequence) -> RhoVector:
    """The truncated AACF vector used as the meet-in-the-middle key."""
    m = (a.n - 3) // 2
    return RhoVector(a.n, tuple(aacf(a, t) for t in range(1, m + 1)))
