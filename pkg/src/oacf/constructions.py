"""The sixteen period-4p sequence families built from quartic cyclotomy.

Each family is described by a subset G' of {0,1,2,3} and a quadruple gamma
of C-set indices.  A support set inside Z_8 x Z_p is expanded from (G',
gamma) by complement rules, mapped through the CRT isomorphism to Z_{8p},
and read off as a characteristic sequence u of period 8p.  By construction
u(i) = u(i + 4p) + 1, so u splits as s || (s + 1) with s of period N = 4p.

``verify_table`` checks the distinct OACF values of s against the family's
symbolic value set instantiated with the quartic decomposition (x, y),
accepting a uniform sign flip of y (the tables fix no sign convention).
"""

from dataclasses import dataclass

from .cyclotomy import CyclotomicSystem, build_system, cset, complement_cset_index
from .sequences import BinarySequence, oacf, try_parker_split

__all__ = [
    "ConstructionSpec",
    "ConstructionInapplicableError",
    "SupportSet",
    "VerificationReport",
    "CONSTRUCTIONS",
    "construction_spec",
    "is_applicable",
    "crt_iso",
    "expand_g",
    "expand_gamma_indices",
    "expand_gamma",
    "build_support",
    "construct",
    "construct_in",
    "verify_table",
]


class ConstructionInapplicableError(ValueError):
    """The requested construction needs the other parity of f = (p-1)/4."""


# Symbolic value terms (a, b, c) standing for a + b*x + c*y; every term is
# listed in a value set together with its negative.
_V0 = (0, 0, 0)
_V2 = (2, 0, 0)
_V4 = (4, 0, 0)
_2X_4Y = (0, 2, 4)
_2X_M4Y = (0, 2, -4)
_2Y = (0, 0, 2)
_4Y = (0, 0, 4)
_4Y_P8 = (8, 0, 4)
_4Y_M8 = (-8, 0, 4)


@dataclass(frozen=True)
class ConstructionSpec:
    index: int
    g_prime: frozenset[int]
    gamma: tuple[int, int, int, int]  # C-set indices for A0..A3
    value_terms: tuple[tuple[int, int, int], ...]
    f_parity: str  # "even" or "odd"

    def template_text(self) -> str:
        """Symbolic value set, e.g. ``{0, +-2, +-4, +-(2x+4y)}``."""
        parts = []
        for a, b, c in self.value_terms:
            if (a, b, c) == (0, 0, 0):
                parts.append("0")
                continue
            pieces = []
            if b:
                pieces.append(f"{b}x" if b > 0 else f"-{-b}x")
            if c:
                pieces.append(f"{c}y" if c > 0 else f"-{-c}y")
            if a:
                pieces.append(str(a))
            body = pieces[0]
            for piece in pieces[1:]:
                body += piece if piece.startswith("-") else "+" + piece
            parts.append(f"+-({body})" if len(pieces) > 1 else f"+-{body}")
        return "{" + ", ".join(parts) + "}"


def _spec(index, g_prime, gamma, terms, parity):
    return ConstructionSpec(index, frozenset(g_prime), gamma, terms, parity)


CONSTRUCTIONS: tuple[ConstructionSpec, ...] = (
    _spec(1, {2}, (3, 4, 1, 1), (_V0, _V2, _V4, _2X_4Y), "even"),
    _spec(2, {0, 1, 2}, (4, 3, 1, 1), (_V0, _V2, _V4, _2X_M4Y), "even"),
    _spec(3, {3}, (6, 1, 4, 4), (_V0, _V2, _V4, _2X_M4Y), "even"),
    _spec(4, {0, 1, 3}, (1, 6, 4, 4), (_V0, _V2, _V4, _2X_4Y), "even"),
    _spec(5, {0}, (3, 4, 1, 1), (_V0, _V2, _V4, _2X_4Y), "odd"),
    _spec(6, {1}, (4, 3, 1, 1), (_V0, _V2, _V4, _2X_M4Y), "odd"),
    _spec(7, {0, 2, 3}, (6, 1, 4, 4), (_V0, _V2, _V4, _2X_M4Y), "odd"),
    _spec(8, {1, 2, 3}, (1, 6, 4, 4), (_V0, _V2, _V4, _2X_4Y), "odd"),
    _spec(9, {0}, (5, 2, 1, 1), (_V0, _V2, _2Y, _4Y, _4Y_P8), "odd"),
    _spec(10, {0}, (2, 5, 1, 1), (_V0, _V2, _2Y, _4Y, _4Y_M8), "odd"),
    _spec(11, {0}, (5, 2, 4, 4), (_V0, _V2, _2Y, _4Y, _4Y_M8), "odd"),
    _spec(12, {0}, (2, 5, 4, 4), (_V0, _V2, _2Y, _4Y, _4Y_P8), "odd"),
    _spec(13, {0, 3}, (1, 2, 2, 1), (_V0, _V2, _2Y, _4Y, _4Y_P8), "odd"),
    _spec(14, {0, 3}, (1, 5, 5, 1), (_V0, _V2, _2Y, _4Y, _4Y_M8), "odd"),
    _spec(15, {0, 3}, (4, 2, 2, 4), (_V0, _V2, _2Y, _4Y, _4Y_M8), "odd"),
    _spec(16, {0, 3}, (4, 5, 5, 4), (_V0, _V2, _2Y, _4Y, _4Y_P8), "odd"),
)


def construction_spec(index: int) -> ConstructionSpec:
    if not 1 <= index <= 16:
        raise ValueError(f"construction index must be in [1, 16], got {index}")
    return CONSTRUCTIONS[index - 1]


def is_applicable(index: int, p: int) -> bool:
    """True iff the parity of f = (p-1)/4 matches the construction's row."""
    spec = construction_spec(index)
    f = (p - 1) // 4
    return (f % 2 == 0) == (spec.f_parity == "even")


def crt_iso(p: int):
    """The bijection pair (eta, phi) between Z_8 x Z_p and Z_{8p}.

    phi(z) = (z mod 8, z mod p); eta is its inverse by CRT.
    """
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be an odd prime, got {p}")
    m = 8 * p
    inv_p_mod8 = pow(p, -1, 8)
    inv_8_modp = pow(8, -1, p)

    def eta(n: int, a: int) -> int:
        return (n * p * inv_p_mod8 + a * 8 * inv_8_modp) % m

    def phi(z: int) -> tuple[int, int]:
        return z % 8, z % p

    return eta, phi


def expand_g(g_prime) -> frozenset[int]:
    """G' in {0..3} grows to G in Z_8: j in G' stays, j not in G' joins as j+4."""
    g_prime = frozenset(g_prime)
    if not g_prime <= {0, 1, 2, 3}:
        raise ValueError(f"G' must be a subset of {{0,1,2,3}}, got {sorted(g_prime)}")
    return g_prime | frozenset(j + 4 for j in {0, 1, 2, 3} - g_prime)


def expand_gamma_indices(gamma) -> tuple[int, ...]:
    """C-set indices for A0..A7; A_(n+4) is the complementary C-set of A_n."""
    gamma = tuple(gamma)
    if len(gamma) != 4:
        raise ValueError("gamma must list four C-set indices")
    return gamma + tuple(complement_cset_index(i) for i in gamma)


def expand_gamma(gamma, system: CyclotomicSystem) -> tuple[frozenset[int], ...]:
    """The eight subsets A0..A7 of Z_p \\ {0} named by ``gamma``."""
    return tuple(cset(system, i).members for i in expand_gamma_indices(gamma))


@dataclass(frozen=True)
class SupportSet:
    """Residues in Z_modulus whose characteristic sequence is u."""

    modulus: int
    residues: frozenset[int]


def build_support(spec: ConstructionSpec, system: CyclotomicSystem) -> SupportSet:
    """Support of u in Z_{8p}: the G x {0} part plus the {n} x A_n parts."""
    f = system.f
    if (f % 2 == 0) != (spec.f_parity == "even"):
        raise ConstructionInapplicableError(
            f"construction {spec.index} requires f {spec.f_parity} "
            f"(p={system.p} has f={f})"
        )
    eta, _ = crt_iso(system.p)
    residues = {eta(g, 0) for g in expand_g(spec.g_prime)}
    for n, a_n in enumerate(expand_gamma(spec.gamma, system)):
        residues.update(eta(n, a) for a in a_n)
    return SupportSet(8 * system.p, frozenset(residues))


def _characteristic(support: SupportSet) -> BinarySequence:
    word = 0
    for r in support.residues:
        word |= 1 << r
    return BinarySequence(word, support.modulus)


def construct_in(system: CyclotomicSystem, index: int) -> tuple[BinarySequence, BinarySequence]:
    """(s, u) for construction ``index`` over an already-built system."""
    support = build_support(construction_spec(index), system)
    u = _characteristic(support)
    s = try_parker_split(u)
    if s is None:
        raise RuntimeError(
            "support violates the half-period complement rule (internal error)"
        )
    return s, u


def construct(index: int, p: int, alpha: int | None = None) -> tuple[BinarySequence, BinarySequence]:
    """Build construction ``index`` at prime p: s of period 4p and its
    doubled characteristic sequence u of period 8p."""
    return construct_in(build_system(p, alpha), index)


@dataclass(frozen=True)
class VerificationReport:
    """Distinct-OACF-value check of one construction at one prime.

    ``branch`` records which sign of y matched ("+y", "-y", "both", or None);
    ``collapsed`` flags that distinct symbolic terms coincided numerically.
    """

    index: int
    p: int
    x: int
    y: int
    f: int
    alpha: int
    matched: bool
    branch: str | None
    computed: tuple[int, ...]
    expected: tuple[int, ...]
    collapsed: bool

    def to_json_dict(self) -> dict:
        return {
            "index": self.index,
            "p": self.p,
            "x": self.x,
            "y": self.y,
            "f": self.f,
            "alpha": self.alpha,
            "matched": self.matched,
            "branch": self.branch,
            "computed": list(self.computed),
            "expected": list(self.expected),
            "collapsed": self.collapsed,
        }

    def text_line(self) -> str:
        values = "{" + ", ".join(str(v) for v in self.computed) + "}"
        if self.matched:
            note = " (collapsed)" if self.collapsed else ""
            return (
                f"c{self.index:02d} p={self.p}: PASS branch={self.branch} "
                f"values={values}{note}"
            )
        expected = "{" + ", ".join(str(v) for v in self.expected) + "}"
        return f"c{self.index:02d} p={self.p}: FAIL computed={values} expected={expected}"


def _instantiate(terms, x: int, y: int) -> tuple[int, ...]:
    values = set()
    for a, b, c in terms:
        v = a + b * x + c * y
        values.add(v)
        values.add(-v)
    return tuple(sorted(values))


def verify_table(index: int, p: int, alpha: int | None = None) -> VerificationReport:
    """Compare the distinct OACF values of construction ``index`` at p with
    the row's symbolic value set, under either sign of y."""
    system = build_system(p, alpha)
    spec = construction_spec(index)
    s, _ = construct_in(system, index)
    n = s.period
    computed = tuple(sorted({oacf(s, t) for t in range(1, n)}))
    plus = _instantiate(spec.value_terms, system.x, system.y)
    minus = _instantiate(spec.value_terms, system.x, -system.y)
    full_size = 2 * len(spec.value_terms) - 1  # 0 contributes one value
    if computed == plus and computed == minus:
        matched, branch, expected = True, "both", plus
    elif computed == plus:
        matched, branch, expected = True, "+y", plus
    elif computed == minus:
        matched, branch, expected = True, "-y", minus
    else:
        matched, branch, expected = False, None, plus
    return VerificationReport(
        index=index,
        p=p,
        x=system.x,
        y=system.y,
        f=system.f,
        alpha=system.alpha,
        matched=matched,
        branch=branch,
        computed=computed,
        expected=expected,
        collapsed=len(expected) < full_size,
    )
