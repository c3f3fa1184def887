"""Equivalence of binary sequences under the OACF-preserving operations.

On the doubled sequence u = s || (s + 1) of period 2N, negation is a cyclic
shift by N, a nega-cyclic shift by tau is a cyclic shift by tau, and
nega-decimation by d is a decimation by d.  Shifts and decimations of
Z_{2N} generate exactly the affine index maps i -> d*i + t, so any
composition of the three operations is one witness (d, t) acting as

    s'(i) = u(d*i + t mod 2N),  0 <= i < N,

and the witness search space d in Z*_{2N}, t in Z_{2N} is complete.
"""

import math
from dataclasses import dataclass

from .constructions import construct_in, crt_iso
from .cyclotomy import build_system
from .sequences import (
    BinarySequence,
    NotCoprimeError,
    _doubled_word,
    _mask,
    _rotated,
    decimate,
    negate,
    nega_decimate,
    parker_double,
)

__all__ = [
    "AffineWitness",
    "EquivalenceClass",
    "Table4RowReport",
    "Table4Report",
    "TABLE4_RELATIONS",
    "apply_witness",
    "compose",
    "oacf_equivalent",
    "reachable_without_negadecimation",
    "classify",
    "verify_table4",
]


@dataclass(frozen=True, order=True)
class AffineWitness:
    """Index map i -> d*i + t on the doubled index set Z_{2N}.

    Canonical forms: negation = (1, N); nega-cyclic shift by tau = (1, tau);
    nega-decimation by d = (d, 0).
    """

    d: int
    t: int

    @classmethod
    def identity(cls) -> "AffineWitness":
        return cls(1, 0)

    @classmethod
    def negation(cls, period: int) -> "AffineWitness":
        return cls(1, period)

    @classmethod
    def nega_shift(cls, tau: int) -> "AffineWitness":
        return cls(1, tau)

    @classmethod
    def nega_decimation(cls, d: int) -> "AffineWitness":
        return cls(d, 0)


def apply_witness(w: AffineWitness, s: BinarySequence) -> BinarySequence:
    """s'(i) = u(d*i + t mod 2N) with u = s || (s + 1)."""
    n = s.period
    two_n = 2 * n
    d = w.d % two_n
    t = w.t % two_n
    if math.gcd(d, two_n) != 1:
        raise NotCoprimeError(
            f"gcd(d={w.d}, 2N={two_n}) = {math.gcd(d, two_n)}; "
            "witnesses require gcd(d, 2N) = 1"
        )
    u = _doubled_word(s)
    word = 0
    for i in range(n):
        word |= ((u >> ((d * i + t) % two_n)) & 1) << i
    return BinarySequence(word, n)


def compose(first: AffineWitness, second: AffineWitness, period: int) -> AffineWitness:
    """Witness equivalent to applying ``first`` and then ``second``."""
    two_n = 2 * period
    return AffineWitness(
        first.d * second.d % two_n, (first.d * second.t + first.t) % two_n
    )


def _unit_range(two_n: int):
    # d must be odd; remaining coprimality checked against two_n
    for d in range(1, two_n, 2):
        if math.gcd(d, two_n) == 1:
            yield d


def oacf_equivalent(s: BinarySequence, s_prime: BinarySequence) -> AffineWitness | None:
    """Exhaustive search over all witnesses (d, t); returns the
    lexicographically smallest one mapping s to s_prime, or None."""
    if s.period != s_prime.period:
        raise ValueError(
            f"periods differ: {s.period} != {s_prime.period}"
        )
    n = s.period
    two_n = 2 * n
    u = parker_double(s)
    target = _doubled_word(s_prime)
    for d in _unit_range(two_n):
        decimated = decimate(u, d).word
        d_inv = pow(d, -1, two_n)
        for t in range(two_n):
            if _rotated(decimated, two_n, d_inv * t % two_n) == target:
                return AffineWitness(d, t)
    return None


def reachable_without_negadecimation(s: BinarySequence, s_prime: BinarySequence) -> bool:
    """True iff some witness with d = 1 maps s to s_prime, i.e. s_prime lies
    in the orbit of s under negation and nega-cyclic shifts alone."""
    if s.period != s_prime.period:
        raise ValueError(
            f"periods differ: {s.period} != {s_prime.period}"
        )
    n = s.period
    u = _doubled_word(s)
    low = _mask(n)
    return any(
        _rotated(u, 2 * n, t) & low == s_prime.word for t in range(2 * n)
    )


@dataclass
class EquivalenceClass:
    """Sequences mutually reachable through the OACF-preserving operations;
    each member carries a witness from the representative."""

    representative: str
    members: tuple[str, ...]
    witnesses: dict[str, AffineWitness]

    def to_json_dict(self, class_index: int) -> dict:
        return {
            "class": class_index,
            "members": list(self.members),
            "representative": self.representative,
            "witnesses": [
                {"member": m, "d": self.witnesses[m].d, "t": self.witnesses[m].t}
                for m in self.members
            ],
        }


def classify(labeled) -> list[EquivalenceClass]:
    """Partition labeled sequences under OACF equivalence.

    ``labeled`` maps label -> BinarySequence; all periods must agree.  The
    representative of each class is its lexicographically smallest label.
    """
    items = sorted(dict(labeled).items())
    if not items:
        return []
    period = items[0][1].period
    for label, seq in items:
        if seq.period != period:
            raise ValueError(
                f"mixed periods: {label!r} has period {seq.period}, expected {period}"
            )
    classes: list[tuple[BinarySequence, EquivalenceClass]] = []
    for label, seq in items:
        for rep_seq, cls in classes:
            witness = oacf_equivalent(rep_seq, seq)
            if witness is not None:
                cls.members += (label,)
                cls.witnesses[label] = witness
                break
        else:
            classes.append(
                (seq, EquivalenceClass(label, (label,), {label: AffineWitness(1, 0)}))
            )
    return [cls for _, cls in classes]


# (row, source index, target index, printed alpha exponent, negate source first)
TABLE4_RELATIONS = (
    (1, 1, 4, 3, True),
    (2, 2, 3, 3, True),
    (3, 5, 8, 3, True),
    (4, 6, 7, 3, True),
    (5, 9, 12, 3, False),
    (6, 10, 11, 1, False),
    (7, 13, 16, 1, False),
    (8, 14, 15, 1, False),
)


@dataclass(frozen=True)
class Table4RowReport:
    """Outcome of one explicit pairing relation.

    The printed decimation parameter is d = eta(1, alpha^exponent).  It is
    checked both as-is and inverted mod 2N (the two readings of which way a
    decimation moves a support set); ``direction`` records what matched.
    """

    row: int
    p: int
    source: str
    target: str
    negate_first: bool
    exponent: int
    d_printed: int
    printed_match: bool
    d_inverse: int
    inverse_match: bool
    witness: AffineWitness | None

    @property
    def direction(self) -> str | None:
        if self.printed_match and self.inverse_match:
            return "both"
        if self.printed_match:
            return "printed"
        if self.inverse_match:
            return "inverse"
        return None

    @property
    def passed(self) -> bool:
        return self.printed_match or self.inverse_match

    def to_json_dict(self) -> dict:
        witness = (
            {"d": self.witness.d, "t": self.witness.t} if self.witness else None
        )
        return {
            "row": self.row,
            "p": self.p,
            "source": self.source,
            "target": self.target,
            "negation": self.negate_first,
            "exponent": self.exponent,
            "d_printed": self.d_printed,
            "printed_match": self.printed_match,
            "d_inverse": self.d_inverse,
            "inverse_match": self.inverse_match,
            "direction": self.direction,
            "witness": witness,
            "pass": self.passed,
        }

    def text_line(self) -> str:
        op = f"negadecimate(negate({self.source}), d)" if self.negate_first else (
            f"negadecimate({self.source}, d)"
        )
        if self.witness:
            witness = f"witness=(d={self.witness.d}, t={self.witness.t})"
        else:
            witness = "witness=none"
        status = "PASS" if self.passed else "FAIL"
        return (
            f"row {self.row} p={self.p}: {self.target} = {op} {status} "
            f"direction={self.direction} d_printed={self.d_printed} "
            f"d_inverse={self.d_inverse} {witness}"
        )


@dataclass(frozen=True)
class Table4Report:
    p_even_f: int
    p_odd_f: int
    rows: tuple[Table4RowReport, ...]

    @property
    def all_passed(self) -> bool:
        return all(row.passed for row in self.rows)

    def to_json_dict(self) -> dict:
        return {
            "p_even_f": self.p_even_f,
            "p_odd_f": self.p_odd_f,
            "rows": [row.to_json_dict() for row in self.rows],
            "pass": self.all_passed,
        }


def verify_table4(
    p_even_f: int,
    p_odd_f: int,
    alpha_even: int | None = None,
    alpha_odd: int | None = None,
) -> Table4Report:
    """Check the eight explicit pairing relations among the sixteen
    constructions, plus a generic witness search per pair.

    Rows 1-2 run at ``p_even_f`` (constructions 1-4 need f even), rows 3-8
    at ``p_odd_f``.
    """
    sys_even = build_system(p_even_f, alpha_even)
    sys_odd = build_system(p_odd_f, alpha_odd)
    if sys_even.f % 2 != 0:
        raise ValueError(f"p_even_f={p_even_f} has odd f={sys_even.f}")
    if sys_odd.f % 2 != 1:
        raise ValueError(f"p_odd_f={p_odd_f} has even f={sys_odd.f}")

    cache: dict[tuple[int, int], BinarySequence] = {}

    def built(system, index):
        key = (system.p, index)
        if key not in cache:
            cache[key], _ = construct_in(system, index)
        return cache[key]

    rows = []
    for row, i_src, i_tgt, exponent, negate_first in TABLE4_RELATIONS:
        system = sys_even if i_src <= 4 else sys_odd
        source = built(system, i_src)
        target = built(system, i_tgt)
        eta, _ = crt_iso(system.p)
        two_n = 2 * source.period
        d_printed = eta(1, pow(system.alpha, exponent, system.p))
        d_inverse = pow(d_printed, -1, two_n)
        base = negate(source) if negate_first else source
        rows.append(
            Table4RowReport(
                row=row,
                p=system.p,
                source=f"s{i_src}",
                target=f"s{i_tgt}",
                negate_first=negate_first,
                exponent=exponent,
                d_printed=d_printed,
                printed_match=nega_decimate(base, d_printed) == target,
                d_inverse=d_inverse,
                inverse_match=nega_decimate(base, d_inverse) == target,
                witness=oacf_equivalent(source, target),
            )
        )
    return Table4Report(p_even_f, p_odd_f, tuple(rows))
