
import pytest

from conftest import E1, random_codes, v
from doobcodes.codes import (
    HERM,
    PSI_PAIRING,
    TR,
    AdditiveCode,
    Pairing,
    additive_closure,
    contains,
    dual,
    format_code_file,
    is_linear,
    linear_closure,
    parse_code_file,
    size,
)
from doobcodes.enumerators import weight_enumerator
from doobcodes.errors import BudgetExceededError, ParseError
from doobcodes.space import LMap, MixedVector, SpaceShape, enumerate_space

PAIRINGS = [TR, PSI_PAIRING]


def elems(code):
    return [str(x) for x in code]


def test_additive_closure_examples(code_C, code_D):
    assert elems(additive_closure(E1, [])) == ["0:0"]
    assert elems(code_D) == ["0:0", "1:3", "2:2", "3:1"]
    assert elems(code_C) == ["0:0", "0:2", "2:0", "2:2"]


def test_closure_is_subgroup():
    for code in random_codes(SpaceShape(1, 1, 1), 30, seed=5):
        members = set(code)
        assert code.shape.zero() in members
        assert all(x + y in members for x in members for y in members)
        assert all(-x in members for x in members)
        n = len(code)
        assert code.shape.ambient_size % n == 0 and n & (n - 1) == 0


def test_linear_closure_examples():
    assert elems(linear_closure(E1, [])) == ["0:0"]
    assert len(linear_closure(E1, [v("1:0")])) == 16
    assert elems(linear_closure(E1, [v("2:0")])) == ["0:0", "0:2", "2:0", "2:2"]
    with pytest.raises(ValueError):
        linear_closure(SpaceShape(1, 0, 1), [])


def test_is_linear(code_C, code_D):
    assert is_linear(code_C)
    assert not is_linear(code_D)
    assert is_linear(additive_closure(E1, []))
    for code in random_codes(SpaceShape(1, 1, 0), 20, seed=2, linear=True):
        assert is_linear(code)


def test_dual_examples(code_C, code_D):
    assert dual(code_C, TR) == code_C
    assert elems(dual(code_D, TR)) == ["0:0", "0:1", "0:2", "0:3"]
    assert dual(code_D, PSI_PAIRING) == code_D
    assert len(dual(additive_closure(E1, []))) == 16


def test_dual_matches_definition_against_every_codeword():
    # oracle: orthogonal to all codewords, not just generators
    shape = SpaceShape(1, 0, 1)
    space = list(enumerate_space(shape))
    for code in random_codes(shape, 10, seed=9):
        for pairing in PAIRINGS:
            expected = [u for u in space if all(pairing(u, c) == 0 for c in code)]
            assert list(dual(code, pairing).elements) == expected


def test_contains_and_size(code_C, code_D):
    assert contains(additive_closure(E1, []), v("0:0"))
    assert size(code_C) == 4
    assert not contains(code_D, v("0:1"))
    assert contains(code_D, v("3:1"))


@pytest.mark.parametrize("shape", [SpaceShape(1, 0, 0), SpaceShape(1, 1, 1), SpaceShape(0, 2, 2),
                                   SpaceShape(2, 1, 0)])
@pytest.mark.parametrize("pairing", PAIRINGS, ids=str)
def test_cardinality_and_double_dual(shape, pairing):
    for code in random_codes(shape, 8, seed=shape.ambient_size):
        d = dual(code, pairing)
        assert len(code) * len(d) == shape.ambient_size
        assert dual(d, pairing) == code


def test_dual_is_antitone():
    shape = SpaceShape(1, 1, 0)
    extra = v("0:1 | 1", shape)
    for code in random_codes(shape, 15, seed=4):
        bigger = additive_closure(shape, code.generators + (extra,))
        assert code <= bigger
        assert dual(bigger) <= dual(code)


def test_proposition1_small():
    shape = SpaceShape(1, 1, 0)
    for code in random_codes(shape, 10, seed=11, linear=True):
        d = dual(code, TR)
        for L in LMap.all_surjective():
            assert dual(code, Pairing.from_lmap(L)) == d


def test_hermitian_dual_is_conjugate_of_trace_dual():
    shape = SpaceShape(1, 1, 0)
    for code in random_codes(shape, 12, seed=13, linear=True):
        d, dh = dual(code, TR), dual(code, HERM)
        conj = {MixedVector([x.conj() for x in u.estar], [y.conj() for y in u.fprime]) for u in d}
        assert set(dh) == conj
        assert weight_enumerator(dh) == weight_enumerator(d)


def test_from_elements_rejects_non_subgroup():
    with pytest.raises(ValueError):
        AdditiveCode.from_elements(E1, [v("0:0"), v("1:0")])


def test_budget():
    with pytest.raises(BudgetExceededError):
        dual(additive_closure(SpaceShape(2), []), TR, budget=100)
    with pytest.raises(BudgetExceededError):
        additive_closure(SpaceShape(2), [v("1:0 0:0", SpaceShape(2)), v("0:0 1:0", SpaceShape(2))], budget=10)


def test_code_file_roundtrip():
    text = "# paper code D\nspace 1 0 0\ngen 3:1  # psi\n"
    rep, code = parse_code_file(text)
    assert rep == "e4"
    assert elems(code) == ["0:0", "1:3", "2:2", "3:1"]
    assert format_code_file(code) == "space 1 0 0\ngen 3:1\n"
    rep, code = parse_code_file("zspace 1 1 0\ngen 2:1 | 1:0\n")
    assert rep == "z4" and len(code) == 4  # (2:1 | 1:0) has order 4


@pytest.mark.parametrize("text", [
    "", "gen 1:0\n", "space 1 0\n", "space 1 0 0\ngen 4:0\n", "space 1 0 0\nfoo\n",
    "space a b c\n",
])
def test_code_file_errors(text):
    with pytest.raises(ParseError):
        parse_code_file(text)
