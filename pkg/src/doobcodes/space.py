"""The ambient space V = E4^m x F4^n' x Z4^n'' with its metrics and inner products."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .errors import BudgetExceededError, ParseError, ShapeMismatchError
from .rings import (
    E4_ELEMENTS,
    F4_ELEMENTS,
    PSI,
    Z4_ELEMENTS,
    E4Elem,
    F4Elem,
    e4_trace,
    embed_double,
    parse_e4,
    parse_f4,
    parse_z4,
    reduce_mod2,
    wa_e4,
    wt_e4,
    wt_f4,
    wt_z4,
)

DEFAULT_BUDGET = 2**20


@dataclass(frozen=True)
class SpaceShape:
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

    def zero(self) -> MixedVector:
        return MixedVector(
            (E4Elem(0),) * self.m, (F4Elem(0),) * self.nprime, (0,) * self.nsec
        )

    def vectors(self, budget: int = DEFAULT_BUDGET) -> Iterator[MixedVector]:
        return enumerate_space(self, budget)

    def __str__(self) -> str:
        return f"({self.m},{self.nprime},{self.nsec})"


class MixedVector:
    """A point ``(x*, x', x'')`` of V_{m,n',n''}."""

    __slots__ = ("estar", "fprime", "zsec", "_hash")

    def __init__(self, estar: Sequence[E4Elem] = (), fprime: Sequence[F4Elem] = (),
                 zsec: Sequence[int] = ()) -> None:
        self.estar = tuple(estar)
        self.fprime = tuple(fprime)
        self.zsec = tuple(z % 4 for z in zsec)
        self._hash = None

    @property
    def shape(self) -> SpaceShape:
        return SpaceShape(len(self.estar), len(self.fprime), len(self.zsec))

    def _check(self, other: MixedVector) -> None:
        if (len(self.estar), len(self.fprime), len(self.zsec)) != (
            len(other.estar), len(other.fprime), len(other.zsec)
        ):
            raise ShapeMismatchError(f"shapes differ: {self.shape} vs {other.shape}")

    def __add__(self, other: MixedVector) -> MixedVector:
        return vec_add(self, other)

    def __neg__(self) -> MixedVector:
        return vec_neg(self)

    def __sub__(self, other: MixedVector) -> MixedVector:
        return vec_add(self, vec_neg(other))

    def key(self) -> tuple:
        return (
            tuple((x.a, x.b) for x in self.estar),
            tuple((x.a, x.b) for x in self.fprime),
            self.zsec,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MixedVector):
            return NotImplemented
        return (self.estar == other.estar and self.fprime == other.fprime
                and self.zsec == other.zsec)

    def __lt__(self, other: MixedVector) -> bool:
        return self.key() < other.key()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def __bool__(self) -> bool:
        return any(self.estar) or any(self.fprime) or any(self.zsec)

    def __repr__(self) -> str:
        return f"MixedVector({format_vector(self)!r})"

    def __str__(self) -> str:
        return format_vector(self)

    def weight(self) -> int:
        return weight(self)

    def coweight(self) -> int:
        return coweight(self)


@dataclass(frozen=True)
class LMap:
    """A Z4-linear map E4 -> Z4 given by the images of 1 and w."""

    l1: int
    lw: int

    @property
    def surjective(self) -> bool:
        return self.l1 % 2 == 1 or self.lw % 2 == 1

    def __call__(self, x: E4Elem) -> int:
        return (x.a * self.l1 + x.b * self.lw) % 4

    @classmethod
    def trace(cls) -> LMap:
        return cls(2, 3)

    @classmethod
    def all_surjective(cls) -> list[LMap]:
        maps = [cls(a, b) for a in range(4) for b in range(4)]
        return [L for L in maps if L.surjective]


# -- group structure -------------------------------------------------------

def vec_add(x: MixedVector, y: MixedVector) -> MixedVector:
    x._check(y)
    return MixedVector(
        [u + v for u, v in zip(x.estar, y.estar)],
        [u + v for u, v in zip(x.fprime, y.fprime)],
        [u + v for u, v in zip(x.zsec, y.zsec)],
    )


def vec_neg(x: MixedVector) -> MixedVector:
    return MixedVector([-u for u in x.estar], x.fprime, [-u for u in x.zsec])


def scalar_mul(s: E4Elem, x: MixedVector) -> MixedVector:
    """E4-scalar action; the F4 part is multiplied by ``s mod 2``."""
    if x.zsec:
        raise ValueError("scalar multiplication by E4 is undefined on Z4 coordinates")
    s2 = reduce_mod2(s)
    return MixedVector([s * u for u in x.estar], [s2 * u for u in x.fprime])


def psi_times(x: MixedVector) -> MixedVector:
    """Multiply the E4 segment by psi, leaving the rest untouched."""
    return MixedVector([PSI * u for u in x.estar], x.fprime, x.zsec)


# -- metrics ---------------------------------------------------------------

def weight(x: MixedVector) -> int:
    return (sum(wt_e4(u) for u in x.estar) + sum(wt_f4(u) for u in x.fprime)
            + sum(wt_z4(u) for u in x.zsec))


def coweight(x: MixedVector) -> int:
    return (sum(wa_e4(u) for u in x.estar) + sum(wt_f4(u) for u in x.fprime)
            + sum(wt_z4(u) for u in x.zsec))


def distance(x: MixedVector, y: MixedVector) -> int:
    return weight(y - x)


# -- inner products --------------------------------------------------------

def _no_z4(x: MixedVector, y: MixedVector, what: str) -> None:
    x._check(y)
    if x.zsec:
        raise ValueError(f"{what} is defined only when there are no Z4 coordinates")


def _e4_dot(xs, ys) -> E4Elem:
    acc = E4Elem(0)
    for u, v in zip(xs, ys):
        acc = acc + u * v
    return acc


def _f4_dot(xs, ys) -> F4Elem:
    acc = F4Elem(0)
    for u, v in zip(xs, ys):
        acc = acc + u * v
    return acc


def inner_std(x: MixedVector, y: MixedVector) -> E4Elem:
    _no_z4(x, y, "the E4-valued inner product")
    return _e4_dot(x.estar, y.estar) + embed_double(_f4_dot(x.fprime, y.fprime))


def inner_hermitian(x: MixedVector, y: MixedVector) -> E4Elem:
    _no_z4(x, y, "the Hermitian inner product")
    return (_e4_dot(x.estar, [v.conj() for v in y.estar])
            + embed_double(_f4_dot(x.fprime, [v.conj() for v in y.fprime])))


def _tr_e4_dot(xs, ys) -> int:
    # Tr((a+bw)(c+dw)) = 2(ac - bd) - (ad + bc - bd)
    total = 0
    for u, v in zip(xs, ys):
        a, b, c, d = u.a, u.b, v.a, v.b
        total += 2 * (a * c - b * d) - (a * d + b * c - b * d)
    return total


def _tr_f4_dot(xs, ys) -> int:
    # Tr((a+bw)(c+dw)) over F2 is the w-coordinate ad + bc + bd
    total = 0
    for u, v in zip(xs, ys):
        total += u.a * v.b + u.b * v.a + u.b * v.b
    return total % 2


def _z4_dot(xs, ys) -> int:
    return sum(u * v for u, v in zip(xs, ys))


def inner_z4_tr(x: MixedVector, y: MixedVector) -> int:
    """``Tr<x*,y*> + 2 Tr<x',y'> + <x'',y''>`` in Z4."""
    x._check(y)
    return (_tr_e4_dot(x.estar, y.estar) + 2 * _tr_f4_dot(x.fprime, y.fprime)
            + _z4_dot(x.zsec, y.zsec)) % 4


def inner_z4_psi(x: MixedVector, y: MixedVector) -> int:
    """``Tr(psi <x*,y*>) + 2 Tr<x',y'> + <x'',y''>`` in Z4.

    The F4 term is doubled into {0, 2}; without it ``i**[x,y]`` would not be
    a character of the F4 coordinates.
    """
    x._check(y)
    return (e4_trace(PSI * _e4_dot(x.estar, y.estar))
            + 2 * _tr_f4_dot(x.fprime, y.fprime) + _z4_dot(x.zsec, y.zsec)) % 4


def inner_L(x: MixedVector, y: MixedVector, L: LMap) -> int:
    if not L.surjective:
        raise ValueError(f"{L} is not surjective onto Z4")
    return L(inner_std(x, y))


def inner_herm_tr(x: MixedVector, y: MixedVector) -> int:
    """Z4-valued trace of the Hermitian product, the pairing behind Hermitian duality."""
    return e4_trace(inner_hermitian(x, y))


# -- enumeration -----------------------------------------------------------

def check_budget(size: int, budget: int) -> None:
    if size > budget:
        raise BudgetExceededError(f"ambient size {size} exceeds budget {budget}")


def enumerate_space(shape: SpaceShape, budget: int = DEFAULT_BUDGET) -> Iterator[MixedVector]:
    """Every vector of the space once, in canonical lexicographic order."""
    check_budget(shape.ambient_size, budget)
    m, n1, n2 = shape.m, shape.nprime, shape.nsec
    alphabets = [E4_ELEMENTS] * m + [F4_ELEMENTS] * n1 + [Z4_ELEMENTS] * n2
    for coords in itertools.product(*alphabets):
        yield MixedVector(coords[:m], coords[m:m + n1], coords[m + n1:])


@dataclass(frozen=True)
class DistanceGraphStats:
    degree_profile: dict[int, int]
    regular: bool
    srg: tuple[int, int, int, int] | None


@dataclass(frozen=True)
class GraphStats:
    vertices: int
    weight: DistanceGraphStats
    coweight: DistanceGraphStats


def distance_graph_stats(vertices: Sequence, weight_fn: Callable) -> DistanceGraphStats:
    """Degree profile and strongly-regular parameters of the weight-1 Cayley graph.

    Neighbours of ``x`` are exactly ``x + d`` for ``weight_fn(d) == 1``.
    Translations are automorphisms, so lambda/mu are read off at the zero vertex.
    """
    index = {v: k for k, v in enumerate(vertices)}
    steps = [d for d in vertices if weight_fn(d) == 1]
    nbrs = [frozenset(index[v + d] for d in steps) for v in vertices]
    profile: dict[int, int] = {}
    for s in nbrs:
        profile[len(s)] = profile.get(len(s), 0) + 1
    regular = len(profile) == 1
    srg = None
    zero = next(k for k, v in enumerate(vertices) if not v)
    if regular:
        n0 = nbrs[zero]
        lambdas = {len(n0 & nbrs[y]) for y in n0}
        mus = {len(n0 & nbrs[y]) for y in range(len(vertices)) if y != zero and y not in n0}
        if len(lambdas) <= 1 and len(mus) <= 1:
            srg = (len(vertices), len(n0), lambdas.pop() if lambdas else 0,
                   mus.pop() if mus else 0)
    return DistanceGraphStats(dict(sorted(profile.items())), regular, srg)


def graph_stats(shape: SpaceShape, budget: int = 2**16) -> GraphStats:
    vertices = list(enumerate_space(shape, budget))
    return GraphStats(
        len(vertices),
        distance_graph_stats(vertices, weight),
        distance_graph_stats(vertices, coweight),
    )


# -- text format -----------------------------------------------------------

def split_segments(text: str, lengths: Sequence[int]) -> list[list[str]]:
    """Split ``a b | c | d`` into per-segment token lists.

    Either all three segments are written (empty ones as ``-``), or only the
    segments whose length is nonzero.
    """
    parts = [p.strip() for p in text.split("|")]
    tokens = [[] if p in ("", "-") else p.split() for p in parts]
    nonempty = [k for k, n in enumerate(lengths) if n]
    if len(tokens) == len(lengths):
        out = tokens
    elif len(tokens) == len(nonempty) or (not nonempty and tokens == [[]]):
        out = [[] for _ in lengths]
        for k, toks in zip(nonempty, tokens):
            out[k] = toks
    else:
        raise ParseError(f"cannot split {text!r} into segments of lengths {tuple(lengths)}")
    for toks, n in zip(out, lengths):
        if len(toks) != n:
            raise ParseError(f"segment {' '.join(toks) or '-'} of {text!r} should have {n} tokens")
    return out


def join_segments(segments: Sequence[Sequence[str]]) -> str:
    shown = [" ".join(s) for s in segments if s]
    return " | ".join(shown) if shown else "-"


def parse_vector(text: str, shape: SpaceShape) -> MixedVector:
    e, f, z = split_segments(text, (shape.m, shape.nprime, shape.nsec))
    try:
        return MixedVector([parse_e4(t) for t in e], [parse_f4(t) for t in f],
                           [parse_z4(t) for t in z])
    except ValueError as exc:
        raise ParseError(f"{text!r}: {exc}") from None


def format_vector(x: MixedVector) -> str:
    return join_segments([
        [str(u) for u in x.estar], [str(u) for u in x.fprime], [str(u) for u in x.zsec]
    ])
