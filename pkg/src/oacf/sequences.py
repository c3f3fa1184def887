"""Binary periodic sequences and their correlation functions.

A sequence of period N is stored bit-packed in a single Python int (bit i
holds element i), so both correlation kernels reduce to rotate / XOR /
popcount on arbitrary-precision words.  The doubled form s||(s+1) turns the
odd-periodic autocorrelation (OACF) into an ordinary periodic one: the PACF
of the doubled sequence at shift tau is twice the OACF of s at tau.

All operations are pure functions returning new sequences; a BinarySequence
is immutable, hashable, and safe to share across threads.
"""

import math
from collections import Counter
from dataclasses import dataclass

__all__ = [
    "BinarySequence",
    "CorrelationProfile",
    "ValueMultiset",
    "SequenceParseError",
    "NotCoprimeError",
    "pacf",
    "oacf",
    "pacf_profile",
    "oacf_profile",
    "oacf_distribution",
    "peak_oacf",
    "is_odd_optimal",
    "negate",
    "cyclic_shift",
    "nega_cyclic_shift",
    "decimate",
    "parker_double",
    "try_parker_split",
    "nega_decimate",
]

_SEPARATORS = " \t\r\n,"


class SequenceParseError(ValueError):
    """Malformed sequence literal; ``position`` is the offending index."""

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


class NotCoprimeError(ValueError):
    """A decimation parameter shares a factor with the (doubled) period."""


class BinarySequence:
    """Immutable binary sequence of period N, bit-packed into ``word``.

    Bit i of ``word`` is the element at index i.  Raw element access
    requires 0 <= i < N; operations that wrap indices reduce them mod N
    explicitly.
    """

    __slots__ = ("word", "period")

    def __init__(self, word: int, period: int):
        if period < 1:
            raise ValueError(f"period must be >= 1, got {period}")
        if not 0 <= word < (1 << period):
            raise ValueError(f"word does not fit in {period} bits")
        self.word = word
        self.period = period

    @classmethod
    def from_bits(cls, bits) -> "BinarySequence":
        word = 0
        n = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"bit values must be 0 or 1, got {b!r}")
            word |= b << n
            n += 1
        return cls(word, n)

    @classmethod
    def from_string(cls, text: str) -> "BinarySequence":
        """Parse a '0'/'1' literal; whitespace and commas are ignored."""
        word = 0
        n = 0
        for pos, ch in enumerate(text):
            if ch == "1":
                word |= 1 << n
                n += 1
            elif ch == "0":
                n += 1
            elif ch in _SEPARATORS:
                continue
            else:
                raise SequenceParseError(
                    f"invalid character {ch!r} at position {pos}", pos
                )
        if n == 0:
            raise SequenceParseError("empty sequence literal", 0)
        return cls(word, n)

    def bits(self) -> list[int]:
        return [(self.word >> i) & 1 for i in range(self.period)]

    def __len__(self) -> int:
        return self.period

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.period:
            raise IndexError(f"index {i} out of range [0, {self.period})")
        return (self.word >> i) & 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BinarySequence)
            and self.period == other.period
            and self.word == other.word
        )

    def __hash__(self) -> int:
        return hash((self.word, self.period))

    def __str__(self) -> str:
        return "".join("1" if (self.word >> i) & 1 else "0" for i in range(self.period))

    def __repr__(self) -> str:
        return f"BinarySequence({str(self)!r})"


@dataclass(frozen=True)
class CorrelationProfile:
    """Correlation values indexed by shift tau in [0, N).

    For an autocorrelation profile values[0] == N, every value has the
    parity of N, and an OACF profile satisfies values[tau] == -values[N-tau].
    """

    values: tuple[int, ...]
    kind: str  # "PACF" or "OACF"

    @property
    def period(self) -> int:
        return len(self.values)


class ValueMultiset:
    """Multiset of integer correlation values with multiplicities."""

    __slots__ = ("entries", "shifts_counted")

    def __init__(self, values):
        vals = list(values)
        self.entries: dict[int, int] = dict(sorted(Counter(vals).items()))
        self.shifts_counted = len(vals)

    def multiset_notation(self) -> str:
        """Render as ``{* (-9)^2, -3, 1^6, 31 *}`` (exponent = multiplicity)."""
        parts = []
        for value, mult in self.entries.items():
            if mult == 1:
                parts.append(str(value))
            elif value < 0:
                parts.append(f"({value})^{mult}")
            else:
                parts.append(f"{value}^{mult}")
        return "{* " + ", ".join(parts) + " *}"

    def __eq__(self, other) -> bool:
        return isinstance(other, ValueMultiset) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(tuple(self.entries.items()))

    def __repr__(self) -> str:
        return f"ValueMultiset({self.multiset_notation()})"


def _mask(n: int) -> int:
    return (1 << n) - 1


def _rotated(word: int, n: int, tau: int) -> int:
    # b(i) = a((i + tau) mod n) on an n-bit word
    if tau == 0:
        return word
    return ((word >> tau) | (word << (n - tau))) & _mask(n)


def _doubled_word(a: BinarySequence) -> int:
    # 2N-bit word of a || (a + 1)
    return a.word | ((a.word ^ _mask(a.period)) << a.period)


def _check_shift(tau: int, n: int) -> None:
    if not 0 <= tau < n:
        raise ValueError(f"shift {tau} out of range [0, {n})")


def pacf(a: BinarySequence, tau: int) -> int:
    """Periodic autocorrelation of ``a`` at shift ``tau``."""
    n = a.period
    _check_shift(tau, n)
    diff = a.word ^ _rotated(a.word, n, tau)
    return n - 2 * diff.bit_count()


def oacf(a: BinarySequence, tau: int) -> int:
    """Odd-periodic (negaperiodic) autocorrelation of ``a`` at shift ``tau``.

    Terms that wrap past the period pick up an extra sign flip; computed as
    half the PACF of the doubled sequence a || (a + 1).
    """
    n = a.period
    _check_shift(tau, n)
    u = _doubled_word(a)
    diff = u ^ _rotated(u, 2 * n, tau)
    return n - diff.bit_count()


def pacf_profile(a: BinarySequence) -> CorrelationProfile:
    return CorrelationProfile(tuple(pacf(a, t) for t in range(a.period)), "PACF")


def oacf_profile(a: BinarySequence) -> CorrelationProfile:
    return CorrelationProfile(tuple(oacf(a, t) for t in range(a.period)), "OACF")


def oacf_distribution(a: BinarySequence, include_zero_shift: bool = True) -> ValueMultiset:
    """Multiset of OACF values over tau in [0, N), or [1, N) if excluded."""
    start = 0 if include_zero_shift else 1
    return ValueMultiset(oacf(a, t) for t in range(start, a.period))


def peak_oacf(a: BinarySequence) -> int:
    """max |OACF| over the nonzero shifts 0 < tau < N."""
    if a.period < 2:
        raise ValueError("peak OACF is undefined for period 1")
    return max(abs(oacf(a, t)) for t in range(1, a.period))


def is_odd_optimal(a: BinarySequence) -> bool:
    """True iff the nonzero-shift peak |OACF| meets the lower bound exactly:
    1 for odd N, 2 for even N."""
    bound = 1 if a.period % 2 else 2
    return peak_oacf(a) == bound


def negate(a: BinarySequence) -> BinarySequence:
    return BinarySequence(a.word ^ _mask(a.period), a.period)


def cyclic_shift(a: BinarySequence, tau: int) -> BinarySequence:
    """[a(tau), ..., a(N-1), a(0), ..., a(tau-1)]"""
    _check_shift(tau, a.period)
    return BinarySequence(_rotated(a.word, a.period, tau), a.period)


def nega_cyclic_shift(a: BinarySequence, tau: int) -> BinarySequence:
    """Cyclic shift by ``tau`` that complements the wrapped prefix:
    [a(tau), ..., a(N-1), a(0)+1, ..., a(tau-1)+1]."""
    n = a.period
    _check_shift(tau, n)
    return BinarySequence(_rotated(_doubled_word(a), 2 * n, tau) & _mask(n), n)


def decimate(a: BinarySequence, d: int) -> BinarySequence:
    """b(i) = a(d*i mod N); requires gcd(d, N) = 1."""
    n = a.period
    if math.gcd(d, n) != 1:
        raise NotCoprimeError(
            f"gcd(d={d}, N={n}) = {math.gcd(d, n)}; decimation requires gcd(d, N) = 1"
        )
    word = 0
    for i in range(n):
        word |= ((a.word >> (d * i % n)) & 1) << i
    return BinarySequence(word, n)


def parker_double(s: BinarySequence) -> BinarySequence:
    """The doubled sequence u = s || (s + 1) of period 2N."""
    return BinarySequence(_doubled_word(s), 2 * s.period)


def try_parker_split(u: BinarySequence) -> BinarySequence | None:
    """First half of ``u`` if u has even period 2N and u(i+N) = u(i)+1 for
    all i < N; None otherwise."""
    if u.period % 2:
        return None
    n = u.period // 2
    low = u.word & _mask(n)
    if (u.word >> n) != low ^ _mask(n):
        return None
    return BinarySequence(low, n)


def nega_decimate(s: BinarySequence, d: int) -> BinarySequence:
    """Nega-decimation: s'(tau) = s(d*tau mod N) + floor((d*tau mod 2N) / N).

    Equals decimating the doubled sequence s || (s + 1) by d and truncating
    to the first half; requires gcd(d, 2N) = 1.
    """
    n = s.period
    if math.gcd(d, 2 * n) != 1:
        raise NotCoprimeError(
            f"gcd(d={d}, 2N={2 * n}) = {math.gcd(d, 2 * n)}; "
            "nega-decimation requires gcd(d, 2N) = 1"
        )
    word = 0
    for tau in range(n):
        k = d * tau % (2 * n)
        bit = ((s.word >> (k % n)) & 1) ^ (k >= n)
        word |= bit << tau
    return BinarySequence(word, n)
