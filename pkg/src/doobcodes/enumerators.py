"""Weight, coweight and complete enumerators, the MacWilliams transform,
and the Fourier/Poisson machinery behind it.

Homogeneous bivariate polynomials of degree N are coefficient lists indexed
by the power of B, so ``[c0, ..., cN]`` stands for ``sum c_w A^(N-w) B^w``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .codes import TR, AdditiveCode, Pairing, dual
from .errors import TransformError
from .rings import (
    E4_ELEMENTS,
    F4_ELEMENTS,
    Z4_ELEMENTS,
    GaussInt,
    char_i,
    e4_trace,
    f4_trace,
    wa_e4,
    wt_e4,
    wt_f4,
    wt_z4,
)
from .space import DEFAULT_BUDGET, MixedVector, SpaceShape, check_budget

# (A, B) -> (p A + q B, r A + s B) as (p, q, r, s)
CORRECTED_SUBSTITUTION = (1, 3, 1, -1)
PRINTED_SUBSTITUTION = (1, 1, 1, -3)


@dataclass(frozen=True)
class BivariateEnum:
    N: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.N + 1:
            raise ValueError(f"degree {self.N} needs {self.N + 1} coefficients")

    @classmethod
    def of(cls, coeffs: Sequence[int]) -> BivariateEnum:
        return cls(len(coeffs) - 1, tuple(coeffs))

    def total(self) -> int:
        return sum(self.coeffs)

    def evaluate(self, A, B):
        return sum(c * A ** (self.N - w) * B**w for w, c in enumerate(self.coeffs))

    def to_json(self) -> dict:
        return {"N": self.N, "coeffs": list(self.coeffs)}

    def __str__(self) -> str:
        return format_poly(self.coeffs)


def format_poly(coeffs: Sequence, a: str = "A", b: str = "B") -> str:
    N = len(coeffs) - 1
    terms = []
    for w, c in enumerate(coeffs):
        if not c:
            continue
        mono = "".join(
            f"{v}^{e}" if e > 1 else v for v, e in ((a, N - w), (b, w)) if e
        )
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        elif c == -1:
            terms.append("-" + mono)
        else:
            terms.append(f"{c}{mono}")
    return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _histogram(values: Iterable[int], N: int) -> BivariateEnum:
    coeffs = [0] * (N + 1)
    for w in values:
        coeffs[w] += 1
    return BivariateEnum(N, tuple(coeffs))


def weight_enumerator(code: AdditiveCode) -> BivariateEnum:
    return _histogram((x.weight() for x in code.elements), code.shape.N)


def coweight_enumerator(code: AdditiveCode) -> BivariateEnum:
    return _histogram((x.coweight() for x in code.elements), code.shape.N)


# -- polynomial helpers ----------------------------------------------------

def _linear_power(p: int, q: int, k: int) -> list[int]:
    """Coefficients of ``(pA + qB)^k``."""
    return [math.comb(k, j) * p ** (k - j) * q**j for j in range(k + 1)]


def _convolve(f: Sequence, g: Sequence) -> list:
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def power_product(n_plus: int, n_minus: int) -> list[int]:
    """Coefficients of ``(A+3B)^n_plus (A-B)^n_minus``."""
    return _convolve(_linear_power(1, 3, n_plus), _linear_power(1, -1, n_minus))


def substitute(coeffs: Sequence[int], substitution=CORRECTED_SUBSTITUTION) -> list[int]:
    p, q, r, s = substitution
    N = len(coeffs) - 1
    out = [0] * (N + 1)
    for w, c in enumerate(coeffs):
        if c:
            term = _convolve(_linear_power(p, q, N - w), _linear_power(r, s, w))
            for j, t in enumerate(term):
                out[j] += c * t
    return out


def macwilliams_transform(en: BivariateEnum, code_size: int,
                          substitution=CORRECTED_SUBSTITUTION) -> BivariateEnum:
    """``(1/|C|) en(A+3B, A-B)`` expanded exactly.

    Raises TransformError if the result is not a nonnegative integer vector,
    which means the enumerator and code size do not belong to a dual pair.
    """
    if en.total() != code_size:
        raise ValueError(f"code size {code_size} disagrees with enumerator total {en.total()}")
    raw = substitute(en.coeffs, substitution)
    out = []
    for w, c in enumerate(raw):
        if c % code_size or c < 0:
            raise TransformError(f"coefficient {c}/{code_size} of B^{w} is not a count")
        out.append(c // code_size)
    return BivariateEnum(en.N, tuple(out))


def char_sum_poly(degree: int, terms: Iterable[tuple[GaussInt, int]]) -> list[GaussInt]:
    """``sum chi * A^(degree-w) B^w`` over ``(chi, w)`` terms, coefficientwise."""
    out = [GaussInt(0)] * (degree + 1)
    for chi, w in terms:
        out[w] = out[w] + chi
    return out


def _check_identity(lhs: list[GaussInt], n_plus: int, n_minus: int, where: str) -> tuple[int, int]:
    if lhs != power_product(n_plus, n_minus):
        raise ArithmeticError(f"character sum identity fails at {where}")
    return n_plus, n_minus


def e4_char_sum(a) -> list[GaussInt]:
    return char_sum_poly(2, ((char_i(e4_trace(a * v)), wt_e4(v)) for v in E4_ELEMENTS))


def char_sum_exponents(a) -> tuple[int, int]:
    """``(2 - wa(a), wa(a))``, after checking the E4 character sum equals
    ``(A+3B)^(2-wa a) (A-B)^(wa a)`` coefficient by coefficient."""
    k = wa_e4(a)
    return _check_identity(e4_char_sum(a), 2 - k, k, f"a={a}")


def f4_char_sum(b) -> list[GaussInt]:
    return char_sum_poly(1, ((char_i(2 * f4_trace(b * v)), wt_f4(v)) for v in F4_ELEMENTS))


def f4_char_sum_exponents(b) -> tuple[int, int]:
    k = wt_f4(b)
    return _check_identity(f4_char_sum(b), 1 - k, k, f"b={b}")


def z4_char_sum(c: int) -> list[GaussInt]:
    return char_sum_poly(1, ((char_i(c * v), wt_z4(v)) for v in Z4_ELEMENTS))


def z4_char_sum_exponents(c: int) -> tuple[int, int]:
    k = wt_z4(c)
    return _check_identity(z4_char_sum(c), 1 - k, k, f"c={c}")


# -- complete enumerators --------------------------------------------------

X_NAMES = tuple(f"X_{a}" for a in E4_ELEMENTS)
Y_NAMES = tuple(f"Y_{b}" for b in F4_ELEMENTS)
Z_NAMES = tuple(f"Z_{c}" for c in Z4_ELEMENTS)
VARIABLES = X_NAMES + Y_NAMES + Z_NAMES

_X_SLOT = {a: k for k, a in enumerate(E4_ELEMENTS)}
_Y_SLOT = {b: 16 + k for k, b in enumerate(F4_ELEMENTS)}
_Z_SLOT = {c: 20 + k for k, c in enumerate(Z4_ELEMENTS)}


@dataclass(frozen=True)
class CompleteEnum:
    """Coefficients indexed by exponent profiles over the 24 variables in ``VARIABLES``."""

    shape: SpaceShape
    profiles: Mapping[tuple[int, ...], int]

    def total(self) -> int:
        return sum(self.profiles.values())

    def to_json(self) -> dict:
        rows = []
        for prof, coeff in sorted(self.profiles.items(), reverse=True):
            exps = {VARIABLES[k]: e for k, e in enumerate(prof) if e}
            rows.append({"exponents": exps, "coeff": coeff})
        return {"profiles": rows}


def _profile(x: MixedVector) -> tuple[int, ...]:
    prof = [0] * 24
    for a in x.estar:
        prof[_X_SLOT[a]] += 1
    for b in x.fprime:
        prof[_Y_SLOT[b]] += 1
    for c in x.zsec:
        prof[_Z_SLOT[c]] += 1
    return tuple(prof)


def complete_weight_enumerator(code: AdditiveCode) -> CompleteEnum:
    profiles: dict[tuple[int, ...], int] = {}
    for x in code.elements:
        p = _profile(x)
        profiles[p] = profiles.get(p, 0) + 1
    return CompleteEnum(code.shape, profiles)


def specialize(ce: CompleteEnum, mode: str = "weight") -> BivariateEnum:
    """Identify every X/Y/Z variable with its A/B monomial and collect terms."""
    x_wt = {"weight": wt_e4, "coweight": wa_e4}[mode]
    slot_weight = ([x_wt(a) for a in E4_ELEMENTS] + [wt_f4(b) for b in F4_ELEMENTS]
                   + [wt_z4(c) for c in Z4_ELEMENTS])
    N = ce.shape.N
    coeffs = [0] * (N + 1)
    for prof, c in ce.profiles.items():
        coeffs[sum(e * w for e, w in zip(prof, slot_weight))] += c
    return BivariateEnum(N, tuple(coeffs))


# -- Fourier transform and Poisson summation -------------------------------

@dataclass
class FunctionTable:
    """A Gaussian-integer-valued function on the whole ambient space."""

    shape: object
    values: dict

    @classmethod
    def from_callable(cls, shape, fn: Callable, budget: int = DEFAULT_BUDGET) -> FunctionTable:
        return cls(shape, {v: GaussInt._coerce(fn(v)) for v in shape.vectors(budget)})

    @classmethod
    def indicator(cls, shape, members: Iterable, budget: int = DEFAULT_BUDGET) -> FunctionTable:
        members = set(members)
        return cls.from_callable(shape, lambda v: 1 if v in members else 0, budget)

    def __getitem__(self, v) -> GaussInt:
        return self.values[v]


def fourier_value(f: FunctionTable, u, pairing: Pairing = TR) -> GaussInt:
    acc = GaussInt(0)
    for v, fv in f.values.items():
        if fv:
            acc = acc + char_i(pairing(u, v)) * fv
    return acc


def fourier_transform(f: FunctionTable, pairing: Pairing = TR,
                      budget: int = DEFAULT_BUDGET) -> FunctionTable:
    check_budget(f.shape.ambient_size, budget)
    return FunctionTable(f.shape, {u: fourier_value(f, u, pairing) for u in f.values})


def poisson_check(code: AdditiveCode, f: FunctionTable, pairing: Pairing = TR,
                  budget: int = DEFAULT_BUDGET) -> tuple[GaussInt, GaussInt]:
    """Both sides of ``sum_{C-dual} f = (1/|C|) sum_{u in C} f^(u)``."""
    lhs = sum((f[z] for z in dual(code, pairing, budget)), GaussInt(0))
    total = sum((fourier_value(f, u, pairing) for u in code.elements), GaussInt(0))
    return lhs, total.exact_div(len(code))


def _coordinate_characters(shape: SpaceShape, pairing: Pairing):
    """Per-coordinate characters ``i^{pairing}`` read off on one-coordinate spaces.

    All supported pairings are sums of coordinatewise terms, so these tables
    determine the substitution in the complete-enumerator transform.
    """
    tables = []
    for seg_shape, present in ((SpaceShape(1, 0, 0), shape.m), (SpaceShape(0, 1, 0), shape.nprime),
                               (SpaceShape(0, 0, 1), shape.nsec)):
        if not present:
            tables.append(None)
            continue
        vecs = list(seg_shape.vectors())
        tables.append({u: [char_i(pairing(u, v)) for v in vecs] for u in vecs})
    return tables


def complete_transform_eval(code: AdditiveCode, assignment, pairing: Pairing = TR,
                            budget: int = DEFAULT_BUDGET) -> tuple[GaussInt, GaussInt]:
    """Evaluate both sides of the complete-enumerator MacWilliams identity.

    ``assignment`` maps variable names (``X_a:b``, ``Y_t``, ``Z_d``) to
    Gaussian integers, or is a sequence of 24 values in ``VARIABLES`` order.
    The left side sums monomials over the exhaustively computed dual; the
    right side evaluates the code's complete enumerator at the character-sum
    substitution and divides by ``|C|``.
    """
    if isinstance(assignment, Mapping):
        values = [GaussInt._coerce(assignment[name]) for name in VARIABLES]
    else:
        values = [GaussInt._coerce(v) for v in assignment]
        if len(values) != 24:
            raise ValueError("assignment needs 24 values")
    shape = code.shape

    lhs = GaussInt(0)
    for prof, c in complete_weight_enumerator(dual(code, pairing, budget)).profiles.items():
        lhs = lhs + _monomial(values, prof) * c

    xt, yt, zt = _coordinate_characters(shape, pairing)
    hat = list(values)
    if xt:
        for u, chis in xt.items():
            hat[_X_SLOT[u.estar[0]]] = _dot(chis, values[0:16])
    if yt:
        for u, chis in yt.items():
            hat[_Y_SLOT[u.fprime[0]]] = _dot(chis, values[16:20])
    if zt:
        for u, chis in zt.items():
            hat[_Z_SLOT[u.zsec[0]]] = _dot(chis, values[20:24])
    rhs = GaussInt(0)
    for prof, c in complete_weight_enumerator(code).profiles.items():
        rhs = rhs + _monomial(hat, prof) * c
    return lhs, rhs.exact_div(len(code))


def _dot(chis: Sequence[GaussInt], vals: Sequence[GaussInt]) -> GaussInt:
    acc = GaussInt(0)
    for c, v in zip(chis, vals):
        acc = acc + c * v
    return acc


def _monomial(values: Sequence[GaussInt], prof: Sequence[int]) -> GaussInt:
    acc = GaussInt(1)
    for v, e in zip(values, prof):
        if e:
            acc = acc * v**e
    return acc
