"""Exact arithmetic in Z4, Z2, F4 = E/2E, E4 = E/4E = GR(4^2) and Z[i].

Elements of F4 and E4 are stored as coordinate pairs ``(a, b)`` in the
basis ``{1, w}`` where ``w`` is a primitive cube root of unity, so
``w^2 = -1 - w``.  Z4 and Z2 residues are plain ints in canonical range.
"""

from __future__ import annotations

from enum import Enum
from functools import total_ordering

__all__ = [
    "E4Elem", "F4Elem", "GaussInt", "CosetClass",
    "E4_ELEMENTS", "F4_ELEMENTS", "Z4_ELEMENTS",
    "E4_ZERO", "E4_ONE", "OMEGA", "OMEGA_BAR", "PSI",
    "F4_ZERO", "F4_ONE", "F4_OMEGA", "F4_OMEGA_BAR",
    "OMEGA_SET", "TWO_OMEGA_SET", "PSI_OMEGA_SET",
    "e4_mul", "e4_conj", "e4_trace", "f4_trace", "f4_conj",
    "embed_double", "reduce_mod2", "coset_class",
    "wt_e4", "wa_e4", "wt_f4", "wt_z4",
    "char_i", "character_table_e4",
    "parse_e4", "parse_f4", "parse_z4", "format_z4",
]


@total_ordering
class E4Elem:
    """An element ``a + b*w`` of the Galois ring GR(4^2)."""

    __slots__ = ("a", "b")

    def __init__(self, a: int, b: int = 0) -> None:
        self.a = a % 4
        self.b = b % 4

    def __add__(self, other: E4Elem) -> E4Elem:
        return E4Elem(self.a + other.a, self.b + other.b)

    def __sub__(self, other: E4Elem) -> E4Elem:
        return E4Elem(self.a - other.a, self.b - other.b)

    def __neg__(self) -> E4Elem:
        return E4Elem(-self.a, -self.b)

    def __mul__(self, other: E4Elem | int) -> E4Elem:
        if isinstance(other, int):
            return E4Elem(self.a * other, self.b * other)
        return e4_mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, E4Elem):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __lt__(self, other: E4Elem) -> bool:
        return (self.a, self.b) < (other.a, other.b)

    def __hash__(self) -> int:
        return hash(("E4", self.a, self.b))

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def __repr__(self) -> str:
        return f"E4Elem({self.a}, {self.b})"

    def __str__(self) -> str:
        return f"{self.a}:{self.b}"

    def conj(self) -> E4Elem:
        return e4_conj(self)

    def trace(self) -> int:
        return e4_trace(self)


@total_ordering
class F4Elem:
    """An element ``a + b*w`` of the field F4, with ``w^2 = 1 + w``."""

    __slots__ = ("a", "b")

    _TOKENS = {(0, 0): "0", (1, 0): "1", (0, 1): "w", (1, 1): "W"}

    def __init__(self, a: int, b: int = 0) -> None:
        self.a = a % 2
        self.b = b % 2

    def __add__(self, other: F4Elem) -> F4Elem:
        return F4Elem(self.a + other.a, self.b + other.b)

    __sub__ = __add__

    def __neg__(self) -> F4Elem:
        return self

    def __mul__(self, other: F4Elem) -> F4Elem:
        a, b, c, d = self.a, self.b, other.a, other.b
        return F4Elem(a * c + b * d, a * d + b * c + b * d)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, F4Elem):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __lt__(self, other: F4Elem) -> bool:
        return (self.a, self.b) < (other.a, other.b)

    def __hash__(self) -> int:
        return hash(("F4", self.a, self.b))

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def __repr__(self) -> str:
        return f"F4Elem({self.a}, {self.b})"

    def __str__(self) -> str:
        return self._TOKENS[self.a, self.b]

    def conj(self) -> F4Elem:
        return f4_conj(self)

    def trace(self) -> int:
        return f4_trace(self)


class GaussInt:
    """Exact Gaussian integer ``re + im*i``."""

    __slots__ = ("re", "im")

    def __init__(self, re: int = 0, im: int = 0) -> None:
        self.re = re
        self.im = im

    @staticmethod
    def _coerce(other: GaussInt | int) -> GaussInt:
        if isinstance(other, GaussInt):
            return other
        if isinstance(other, int):
            return GaussInt(other, 0)
        raise TypeError(f"cannot combine GaussInt with {type(other).__name__}")

    def __add__(self, other: GaussInt | int) -> GaussInt:
        other = self._coerce(other)
        return GaussInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: GaussInt | int) -> GaussInt:
        other = self._coerce(other)
        return GaussInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: int) -> GaussInt:
        return self._coerce(other) - self

    def __neg__(self) -> GaussInt:
        return GaussInt(-self.re, -self.im)

    def __mul__(self, other: GaussInt | int) -> GaussInt:
        other = self._coerce(other)
        return GaussInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __pow__(self, k: int) -> GaussInt:
        if k < 0:
            raise ValueError("negative powers are not Gaussian integers")
        result, base = GaussInt(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exact_div(self, d: int) -> GaussInt:
        """Divide by a nonzero integer, raising ArithmeticError if inexact."""
        if d == 0:
            raise ZeroDivisionError("division by zero")
        if self.re % d or self.im % d:
            raise ArithmeticError(f"{self} is not divisible by {d}")
        return GaussInt(self.re // d, self.im // d)

    def conj(self) -> GaussInt:
        return GaussInt(self.re, -self.im)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        if not isinstance(other, GaussInt):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def __repr__(self) -> str:
        return f"GaussInt({self.re}, {self.im})"

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        return f"{self.re}{self.im:+d}i"


class CosetClass(Enum):
    ZERO = "Zero"
    OMEGA = "Omega"
    TWO_OMEGA = "TwoOmega"
    PSI_OMEGA = "PsiOmega"


E4_ZERO = E4Elem(0, 0)
E4_ONE = E4Elem(1, 0)
OMEGA = E4Elem(0, 1)
OMEGA_BAR = E4Elem(-1, -1)
PSI = OMEGA - E4_ONE

F4_ZERO = F4Elem(0, 0)
F4_ONE = F4Elem(1, 0)
F4_OMEGA = F4Elem(0, 1)
F4_OMEGA_BAR = F4Elem(1, 1)

E4_ELEMENTS: tuple[E4Elem, ...] = tuple(E4Elem(a, b) for a in range(4) for b in range(4))
F4_ELEMENTS: tuple[F4Elem, ...] = tuple(F4Elem(a, b) for a in range(2) for b in range(2))
Z4_ELEMENTS: tuple[int, ...] = (0, 1, 2, 3)


def e4_mul(x: E4Elem, y: E4Elem) -> E4Elem:
    a, b, c, d = x.a, x.b, y.a, y.b
    return E4Elem(a * c - b * d, a * d + b * c - b * d)


def e4_conj(x: E4Elem) -> E4Elem:
    # w -> w_bar = -1 - w
    return E4Elem(x.a - x.b, -x.b)


def e4_trace(x: E4Elem) -> int:
    """Tr(z) = z + conj(z), which always lands in Z4."""
    return (2 * x.a - x.b) % 4


def f4_trace(x: F4Elem) -> int:
    return x.b


def f4_conj(x: F4Elem) -> F4Elem:
    # Frobenius: w -> w^2 = 1 + w
    return F4Elem(x.a + x.b, x.b)


def embed_double(x: F4Elem) -> E4Elem:
    """The additive map ``z + 2E -> 2z + 4E`` from F4 into E4."""
    return E4Elem(2 * x.a, 2 * x.b)


def reduce_mod2(x: E4Elem) -> F4Elem:
    return F4Elem(x.a, x.b)


def _powers(g: E4Elem) -> frozenset[E4Elem]:
    out, p = {E4_ONE}, g
    while p != E4_ONE:
        out.add(p)
        p = p * g
    return frozenset(out)


OMEGA_SET: frozenset[E4Elem] = _powers(-OMEGA)
TWO_OMEGA_SET: frozenset[E4Elem] = frozenset(2 * u for u in OMEGA_SET)
PSI_OMEGA_SET: frozenset[E4Elem] = frozenset(PSI * u for u in OMEGA_SET)

_CLASS_OF = {E4_ZERO: CosetClass.ZERO}
_CLASS_OF.update({u: CosetClass.OMEGA for u in OMEGA_SET})
_CLASS_OF.update({u: CosetClass.TWO_OMEGA for u in TWO_OMEGA_SET})
_CLASS_OF.update({u: CosetClass.PSI_OMEGA for u in PSI_OMEGA_SET})
assert len(_CLASS_OF) == 16


def coset_class(x: E4Elem) -> CosetClass:
    return _CLASS_OF[x]


def wt_e4(x: E4Elem) -> int:
    if not x:
        return 0
    return 1 if x in OMEGA_SET else 2


def wa_e4(x: E4Elem) -> int:
    if not x:
        return 0
    return 1 if x in PSI_OMEGA_SET else 2


def wt_f4(x: F4Elem) -> int:
    return 1 if x else 0


def wt_z4(x: int) -> int:
    return 1 if x % 4 else 0


_I_POWERS = (GaussInt(1, 0), GaussInt(0, 1), GaussInt(-1, 0), GaussInt(0, -1))


def char_i(k: int) -> GaussInt:
    """Return ``i**k`` exactly; only ``k mod 4`` matters."""
    return _I_POWERS[k % 4]


def character_table_e4() -> list[list[GaussInt]]:
    """16x16 table with entry ``[u][v] = i**Tr(u*v)``, rows and columns in canonical order."""
    return [[char_i(e4_trace(u * v)) for v in E4_ELEMENTS] for u in E4_ELEMENTS]


# -- token syntax shared with the CLI -------------------------------------

_F4_BY_TOKEN = {"0": F4_ZERO, "1": F4_ONE, "w": F4_OMEGA, "W": F4_OMEGA_BAR}


def parse_e4(token: str) -> E4Elem:
    parts = token.split(":")
    if len(parts) != 2 or any(p not in "0123" or len(p) != 1 for p in parts):
        raise ValueError(f"bad E4 token {token!r}, expected 'a:b' with digits 0-3")
    return E4Elem(int(parts[0]), int(parts[1]))


def parse_f4(token: str) -> F4Elem:
    try:
        return _F4_BY_TOKEN[token]
    except KeyError:
        raise ValueError(f"bad F4 token {token!r}, expected one of 0 1 w W") from None


def parse_z4(token: str) -> int:
    if len(token) != 1 or token not in "0123":
        raise ValueError(f"bad Z4 token {token!r}, expected a digit 0-3")
    return int(token)


def format_z4(x: int) -> str:
    return str(x % 4)
