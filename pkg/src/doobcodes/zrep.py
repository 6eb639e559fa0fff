"""The Doob scheme presented on (Z4^2)^m x (Z2^2)^n' x Z4^n''.

This presentation has its own plus/minus inner products, so it is built
directly rather than pulled back through the E4 coordinates; only the group
structure and the weight carry over under :func:`to_zrep`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .codes import AdditiveCode, Pairing, dual
from .enumerators import char_sum_poly, power_product
from .errors import ParseError, ShapeMismatchError
from .rings import E4Elem, F4Elem, GaussInt, char_i
from .space import (
    DEFAULT_BUDGET,
    GraphStats,
    MixedVector,
    SpaceShape,
    check_budget,
    distance_graph_stats,
    join_segments,
    split_segments,
)

Z4_PAIRS: tuple[tuple[int, int], ...] = tuple(itertools.product(range(4), repeat=2))
Z2_PAIRS: tuple[tuple[int, int], ...] = tuple(itertools.product(range(2), repeat=2))

WT1_PAIRS = frozenset({(0, 1), (0, 3), (1, 0), (3, 0), (1, 1), (3, 3)})
WA1_PAIRS = frozenset({(0, 1), (0, 3), (1, 0), (3, 0), (1, 3), (3, 1)})


@dataclass(frozen=True)
class ZShape:
    m: int
    nprime: int = 0
    nsec: int = 0

    def __post_init__(self):
        if min(self.m, self.nprime, self.nsec) < 0:
            raise ValueError(f"segment lengths must be nonnegative, got {self}")

    @property
    def N(self) -> int:
        return 2 * self.m + self.nprime + self.nsec

    @property
    def ambient_size(self) -> int:
        return 16**self.m * 4**self.nprime * 4**self.nsec

    def zero(self) -> ZVector:
        return ZVector(((0, 0),) * self.m, ((0, 0),) * self.nprime, (0,) * self.nsec)

    def vectors(self, budget: int = DEFAULT_BUDGET) -> Iterator[ZVector]:
        check_budget(self.ambient_size, budget)
        m, n1 = self.m, self.nprime
        alphabets = [Z4_PAIRS] * m + [Z2_PAIRS] * n1 + [range(4)] * self.nsec
        for coords in itertools.product(*alphabets):
            yield ZVector(coords[:m], coords[m:m + n1], coords[m + n1:])

    def __str__(self) -> str:
        return f"({self.m},{self.nprime},{self.nsec})"


class ZVector:
    __slots__ = ("pairs4", "pairs2", "tail", "_hash")

    def __init__(self, pairs4: Sequence[tuple[int, int]] = (),
                 pairs2: Sequence[tuple[int, int]] = (), tail: Sequence[int] = ()) -> None:
        self.pairs4 = tuple((a % 4, b % 4) for a, b in pairs4)
        self.pairs2 = tuple((a % 2, b % 2) for a, b in pairs2)
        self.tail = tuple(c % 4 for c in tail)
        self._hash = None

    @property
    def shape(self) -> ZShape:
        return ZShape(len(self.pairs4), len(self.pairs2), len(self.tail))

    def _check(self, other: ZVector) -> None:
        if (len(self.pairs4), len(self.pairs2), len(self.tail)) != (
            len(other.pairs4), len(other.pairs2), len(other.tail)
        ):
            raise ShapeMismatchError(f"shapes differ: {self.shape} vs {other.shape}")

    def key(self) -> tuple:
        return (self.pairs4, self.pairs2, self.tail)

    def __add__(self, other: ZVector) -> ZVector:
        self._check(other)
        return ZVector(
            [(a + c, b + d) for (a, b), (c, d) in zip(self.pairs4, other.pairs4)],
            [(a + c, b + d) for (a, b), (c, d) in zip(self.pairs2, other.pairs2)],
            [a + c for a, c in zip(self.tail, other.tail)],
        )

    def __neg__(self) -> ZVector:
        return ZVector([(-a, -b) for a, b in self.pairs4], self.pairs2, [-c for c in self.tail])

    def __sub__(self, other: ZVector) -> ZVector:
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ZVector):
            return NotImplemented
        return self.key() == other.key()

    def __lt__(self, other: ZVector) -> bool:
        return self.key() < other.key()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("Z",) + self.key())
        return self._hash

    def __bool__(self) -> bool:
        return any(a or b for a, b in self.pairs4) or any(a or b for a, b in self.pairs2) or any(self.tail)

    def __repr__(self) -> str:
        return f"ZVector({format_zvector(self)!r})"

    def __str__(self) -> str:
        return format_zvector(self)

    def weight(self) -> int:
        return z_weight(self)

    def coweight(self) -> int:
        return z_coweight(self)


def pair_weight(p: tuple[int, int]) -> int:
    if p == (0, 0):
        return 0
    return 1 if p in WT1_PAIRS else 2


def pair_coweight(p: tuple[int, int]) -> int:
    if p == (0, 0):
        return 0
    return 1 if p in WA1_PAIRS else 2


def _hamming_tail(x: ZVector) -> int:
    return sum(1 for p in x.pairs2 if p != (0, 0)) + sum(1 for c in x.tail if c)


def z_weight(x: ZVector) -> int:
    return sum(pair_weight(p) for p in x.pairs4) + _hamming_tail(x)


def z_coweight(x: ZVector) -> int:
    return sum(pair_coweight(p) for p in x.pairs4) + _hamming_tail(x)


def _inner(u: ZVector, x: ZVector, sign: int) -> int:
    u._check(x)
    total = sum(a * c + sign * b * d for (a, b), (c, d) in zip(u.pairs4, x.pairs4))
    total += 2 * sum(a * c + b * d for (a, b), (c, d) in zip(u.pairs2, x.pairs2))
    total += sum(a * c for a, c in zip(u.tail, x.tail))
    return total % 4


def inner_plus(u: ZVector, x: ZVector) -> int:
    return _inner(u, x, 1)


def inner_minus(u: ZVector, x: ZVector) -> int:
    return _inner(u, x, -1)


PLUS = Pairing("plus", inner_plus)
MINUS = Pairing("minus", inner_minus)


def character_table_z4sq(sign: int = 1) -> list[list[GaussInt]]:
    """Entry ``[u][v] = i**(u1 v1 + u2 v2)`` (``sign=-1`` gives the minus form)."""
    return [[char_i(u1 * v1 + sign * u2 * v2) for (v1, v2) in Z4_PAIRS] for (u1, u2) in Z4_PAIRS]


def z_char_sum_exponents(a: tuple[int, int], pairing: str = "plus") -> tuple[int, int]:
    """Exponents ``(p, q)`` with ``sum_v i^<a,v> A^(2-wt v) B^(wt v) = (A+3B)^p (A-B)^q``.

    The left side is expanded exactly and compared; ArithmeticError if the
    identity fails.
    """
    sign = {"plus": 1, "minus": -1}[pairing]
    a1, a2 = a
    lhs = char_sum_poly(
        2, ((char_i(a1 * v1 + sign * a2 * v2), pair_weight((v1, v2))) for v1, v2 in Z4_PAIRS)
    )
    k = pair_coweight(a) if sign == 1 else pair_weight(a)
    if lhs != power_product(2 - k, k):
        raise ArithmeticError(f"character sum identity fails at a={a}, {pairing}")
    return 2 - k, k


def z_dual(code: AdditiveCode, pairing: Pairing = PLUS, budget: int = DEFAULT_BUDGET) -> AdditiveCode:
    if pairing.kind not in ("plus", "minus"):
        raise ValueError(f"pairing {pairing} does not act on the Z4^2 presentation")
    return dual(code, pairing, budget)


def z_graph_stats(shape: ZShape, budget: int = 2**16) -> GraphStats:
    vertices = list(shape.vectors(budget))
    return GraphStats(len(vertices), distance_graph_stats(vertices, z_weight),
                      distance_graph_stats(vertices, z_coweight))


# -- correspondence with the E4 presentation -------------------------------

def zshape_of(shape: SpaceShape) -> ZShape:
    return ZShape(shape.m, shape.nprime, shape.nsec)


def eshape_of(shape: ZShape) -> SpaceShape:
    return SpaceShape(shape.m, shape.nprime, shape.nsec)


def to_zrep(v: MixedVector) -> ZVector:
    return ZVector([(x.a, x.b) for x in v.estar], [(x.a, x.b) for x in v.fprime], v.zsec)


def from_zrep(z: ZVector) -> MixedVector:
    return MixedVector([E4Elem(a, b) for a, b in z.pairs4],
                       [F4Elem(a, b) for a, b in z.pairs2], z.tail)


def convert_code(code: AdditiveCode) -> AdditiveCode:
    """Carry a code across the coordinate isomorphism in whichever direction applies."""
    if isinstance(code.shape, SpaceShape):
        f, shape = to_zrep, zshape_of(code.shape)
    else:
        f, shape = from_zrep, eshape_of(code.shape)
    return AdditiveCode(shape, [f(g) for g in code.generators], [f(x) for x in code.elements])


# -- text format -----------------------------------------------------------

def _parse_pair(token: str, modulus: int) -> tuple[int, int]:
    parts = token.split(":")
    digits = "0123"[:modulus]
    if len(parts) != 2 or any(len(p) != 1 or p not in digits for p in parts):
        raise ParseError(f"bad pair token {token!r} (digits 0-{modulus - 1})")
    return int(parts[0]), int(parts[1])


def parse_zvector(text: str, shape: ZShape) -> ZVector:
    p4, p2, t = split_segments(text, (shape.m, shape.nprime, shape.nsec))
    tail = []
    for tok in t:
        if len(tok) != 1 or tok not in "0123":
            raise ParseError(f"bad Z4 token {tok!r}")
        tail.append(int(tok))
    return ZVector([_parse_pair(s, 4) for s in p4], [_parse_pair(s, 2) for s in p2], tail)


def format_zvector(x: ZVector) -> str:
    return join_segments([
        [f"{a}:{b}" for a, b in x.pairs4],
        [f"{a}:{b}" for a, b in x.pairs2],
        [str(c) for c in x.tail],
    ])

