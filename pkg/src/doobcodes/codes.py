"""Additive and linear codes as explicit subgroups, and their duals."""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

from .errors import BudgetExceededError, ParseError, ShapeMismatchError
from .rings import E4_ELEMENTS, OMEGA
from .space import (
    DEFAULT_BUDGET,
    LMap,
    SpaceShape,
    check_budget,
    inner_herm_tr,
    inner_L,
    inner_z4_psi,
    inner_z4_tr,
    parse_vector,
    scalar_mul,
)


@dataclass(frozen=True)
class Pairing:
    """A biadditive nondegenerate Z4-valued form used to define duality."""

    kind: str
    form: Callable[[Any, Any], int] = field(compare=False, repr=False)
    lmap: LMap | None = None

    def __call__(self, x, y) -> int:
        return self.form(x, y)

    def __str__(self) -> str:
        if self.lmap is not None:
            return f"L:{self.lmap.l1},{self.lmap.lw}"
        return self.kind

    @classmethod
    def from_lmap(cls, L: LMap) -> Pairing:
        if not L.surjective:
            raise ValueError(f"{L} is not surjective onto Z4")
        return cls("L", lambda x, y: inner_L(x, y, L), L)


TR = Pairing("tr", inner_z4_tr)
PSI_PAIRING = Pairing("psi", inner_z4_psi)
HERM = Pairing("herm", inner_herm_tr)


class AdditiveCode:
    """A subgroup of an ambient space, kept as generators plus a sorted element list.

    Works for any vector type supporting ``+``, ``-``, hashing and ordering,
    whose shape offers ``zero()``, ``ambient_size`` and ``vectors()``.
    """

    __slots__ = ("shape", "generators", "elements", "_members")

    def __init__(self, shape, generators: Sequence, elements: Sequence) -> None:
        self.shape = shape
        self.generators = tuple(generators)
        self.elements = tuple(sorted(elements))
        self._members = frozenset(self.elements)

    @classmethod
    def from_elements(cls, shape, elements: Iterable) -> AdditiveCode:
        """Wrap a known subgroup, picking a small generating set for it."""
        elements = sorted(set(elements))
        gens: list = []
        span = {shape.zero()}
        for e in elements:
            if e not in span:
                gens.append(e)
                span = _add_cyclic(span, e)
        if len(span) != len(elements):
            raise ValueError("element list is not a subgroup")
        return cls(shape, gens, elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, v) -> bool:
        return v in self._members

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AdditiveCode):
            return NotImplemented
        return self.shape == other.shape and self.elements == other.elements

    def __hash__(self) -> int:
        return hash((self.shape, self.elements))

    def __le__(self, other: AdditiveCode) -> bool:
        return self._members <= other._members

    def __repr__(self) -> str:
        return f"AdditiveCode(shape={self.shape}, size={len(self)})"


def _cyclic(g) -> list:
    out, p = [], g
    while p:
        out.append(p)
        p = p + g
    return out


def _add_cyclic(span: set, g) -> set:
    multiples = _cyclic(g)
    return span | {s + k for s in span for k in multiples}


def additive_closure(shape, generators: Sequence, budget: int = DEFAULT_BUDGET) -> AdditiveCode:
    """Smallest subgroup containing ``generators`` (worklist fixpoint under addition)."""
    zero = shape.zero()
    for g in generators:
        if g.shape != shape:
            raise ShapeMismatchError(f"generator {g} does not live in {shape}")
    elements = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = x + g
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
        if len(elements) > budget:
            raise BudgetExceededError(f"closure exceeds budget {budget}")
        frontier = nxt
    return AdditiveCode(shape, generators, elements)


def linear_closure(shape: SpaceShape, generators: Sequence, budget: int = DEFAULT_BUDGET) -> AdditiveCode:
    if shape.nsec:
        raise ValueError("linear codes need a shape without Z4 coordinates")
    multiples = sorted({scalar_mul(s, g) for g in generators for s in E4_ELEMENTS} - {shape.zero()})
    # keep additive generators: dual() only tests orthogonality against them
    return AdditiveCode.from_elements(shape, additive_closure(shape, multiples, budget).elements)


def is_linear(code: AdditiveCode) -> bool:
    if code.shape.nsec:
        raise ValueError("linearity is undefined with Z4 coordinates")
    return all(scalar_mul(OMEGA, x) in code for x in code.elements)


def dual(code: AdditiveCode, pairing: Pairing = TR, budget: int = DEFAULT_BUDGET) -> AdditiveCode:
    """All ambient vectors orthogonal to every generator, by exhaustive scan."""
    shape = code.shape
    check_budget(shape.ambient_size, budget)
    gens = [g for g in code.generators if g]
    members = [v for v in shape.vectors(budget) if all(pairing(v, g) % 4 == 0 for g in gens)]
    return AdditiveCode.from_elements(shape, members)


def contains(code: AdditiveCode, v) -> bool:
    if v.shape != code.shape:
        raise ShapeMismatchError(f"{v} does not live in {code.shape}")
    k = bisect.bisect_left(code.elements, v)
    return k < len(code.elements) and code.elements[k] == v


def size(code: AdditiveCode) -> int:
    return len(code.elements)


# -- code files ------------------------------------------------------------

def parse_code_file(text: str, budget: int = DEFAULT_BUDGET) -> tuple[str, AdditiveCode]:
    """Parse a ``space``/``zspace`` code file, returning ``(rep, code)``.

    ``rep`` is ``"e4"`` for ``space`` files and ``"z4"`` for ``zspace`` files.
    """
    from . import zrep

    header = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        word, _, rest = line.partition(" ")
        if header is None:
            if word not in ("space", "zspace"):
                raise ParseError(f"line {lineno}: expected 'space m n1 n2' or 'zspace m n1 n2'")
            try:
                dims = [int(t) for t in rest.split()]
                if len(dims) != 3:
                    raise ValueError
                header = (word, SpaceShape(*dims) if word == "space" else zrep.ZShape(*dims))
            except ValueError:
                raise ParseError(f"line {lineno}: bad dimensions {rest!r}") from None
        elif word == "gen":
            kind, shape = header
            parse = parse_vector if kind == "space" else zrep.parse_zvector
            try:
                gens.append(parse(rest, shape))
            except ParseError as exc:
                raise ParseError(f"line {lineno}: {exc}") from None
        else:
            raise ParseError(f"line {lineno}: unknown directive {word!r}")
    if header is None:
        raise ParseError("missing 'space' header")
    kind, shape = header
    code = additive_closure(shape, gens, budget)
    return ("e4" if kind == "space" else "z4"), code


def format_code_file(code: AdditiveCode) -> str:
    from .zrep import ZShape

    s = code.shape
    word = "zspace" if isinstance(s, ZShape) else "space"
    lines = [f"{word} {s.m} {s.nprime} {s.nsec}"]
    lines += [f"gen {g}" for g in code.generators]
    return "\n".join(lines) + "\n"
