import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import v, vectors
from doobcodes.errors import BudgetExceededError, ParseError, ShapeMismatchError
from doobcodes.rings import E4_ELEMENTS, OMEGA, E4Elem, e4_trace
from doobcodes.space import (
    LMap,
    SpaceShape,
    coweight,
    distance,
    enumerate_space,
    graph_stats,
    inner_hermitian,
    inner_L,
    inner_std,
    inner_z4_psi,
    inner_z4_tr,
    parse_vector,
    psi_times,
    scalar_mul,
    vec_add,
    vec_neg,
    weight,
)

S111 = SpaceShape(1, 1, 1)
S110 = SpaceShape(1, 1, 0)
S010 = SpaceShape(0, 1, 0)
S001 = SpaceShape(0, 0, 1)


def test_shape_sizes():
    s = SpaceShape(2, 2, 2)
    assert s.ambient_size == 16**2 * 4**2 * 4**2
    assert s.N == 8
    with pytest.raises(ValueError):
        SpaceShape(-1, 0, 0)


def test_vector_text_roundtrip():
    s = SpaceShape(2, 2, 2)
    x = parse_vector("3:1 0:2 | w 1 | 2 0", s)
    assert str(x) == "3:1 0:2 | w 1 | 2 0"
    assert parse_vector("3:1 | - | 2", SpaceShape(1, 0, 1)) == parse_vector("3:1 | 2", SpaceShape(1, 0, 1))
    assert parse_vector("-", SpaceShape(0, 0, 0)) == SpaceShape(0, 0, 0).zero()
    assert str(parse_vector("2:0 | - | -", SpaceShape(1))) == "2:0"
    with pytest.raises(ParseError):
        parse_vector("3:1 0:2", SpaceShape(1))
    with pytest.raises(ParseError):
        parse_vector("3:1 | x", S110)


def test_add_neg_examples():
    x = parse_vector("3:1 | w | 3", S111)
    assert x + S111.zero() == x
    assert x + vec_neg(x) == S111.zero()
    assert vec_add(v("3:1"), v("3:1")) == v("2:2")
    with pytest.raises(ShapeMismatchError):
        vec_add(x, v("1:0"))


def test_scalar_mul_examples():
    x = parse_vector("1:0 | 1", S110)
    assert scalar_mul(E4Elem(1), x) == x
    assert scalar_mul(OMEGA, x) == parse_vector("0:1 | w", S110)
    assert scalar_mul(E4Elem(2), parse_vector("3:1 | w", S110)) == parse_vector("2:2 | 0", S110)
    with pytest.raises(ValueError):
        scalar_mul(OMEGA, S111.zero())


def test_weight_examples():
    x = parse_vector("3:1 | 1 | 2", S111)
    assert weight(S111.zero()) == 0
    assert weight(x) == 4
    assert coweight(x) == 3


def test_distance_examples():
    assert distance(v("1:0"), v("1:0")) == 0
    assert distance(v("0:0"), v("3:1")) == 2
    assert distance(v("1:0"), v("0:1")) == 2


@given(vectors(S111), vectors(S111), vectors(S111))
def test_distance_is_translation_invariant_metric(x, y, z):
    assert distance(x + z, y + z) == distance(x, y)
    assert distance(x, y) == distance(y, x)
    assert distance(x, z) <= distance(x, y) + distance(y, z)
    assert 0 <= weight(x) <= S111.N
    assert (weight(x) == 0) == (not x)


def test_inner_std_examples():
    assert inner_std(v("0:0"), v("2:3")) == E4Elem(0)
    assert inner_std(v("3:1"), v("3:1")) == OMEGA
    s = SpaceShape(0, 1, 0)
    assert inner_std(parse_vector("w", s), parse_vector("w", s)) == E4Elem(2, 2)
    with pytest.raises(ValueError):
        inner_std(S111.zero(), S111.zero())


def test_inner_hermitian_examples():
    assert inner_hermitian(v("0:0"), v("1:2")) == E4Elem(0)
    assert inner_hermitian(v("0:1"), v("0:1")) == E4Elem(1)
    assert inner_hermitian(v("3:1"), v("3:1")) == E4Elem(3, 0)


def test_inner_z4_tr_examples():
    assert inner_z4_tr(v("0:0"), v("1:1")) == 0
    assert inner_z4_tr(v("3:1"), v("3:1")) == 3
    assert inner_z4_tr(parse_vector("3", S001), parse_vector("3", S001)) == 1


def test_inner_z4_psi_examples():
    assert inner_z4_psi(v("0:0"), v("1:1")) == 0
    assert inner_z4_psi(v("3:1"), v("3:1")) == 0
    assert inner_z4_psi(v("1:0"), v("1:0")) == 1


def test_inner_z4_tr_is_trace_of_inner_std():
    for x, y in itertools.product(enumerate_space(S110), repeat=2):
        assert inner_z4_tr(x, y) == e4_trace(inner_std(x, y))


def test_lmaps():
    maps = LMap.all_surjective()
    assert len(maps) == 12
    assert LMap.trace() in maps
    for x in E4_ELEMENTS:
        assert LMap.trace()(x) == e4_trace(x)
    assert inner_L(v("0:1"), v("1:0"), LMap(1, 0)) == 0
    assert inner_L(v("0:0"), v("2:1"), LMap(1, 3)) == 0
    with pytest.raises(ValueError):
        inner_L(v("1:0"), v("1:0"), LMap(2, 2))
    for x, y in itertools.product(enumerate_space(S110), repeat=2):
        assert inner_L(x, y, LMap.trace()) == inner_z4_tr(x, y)


PRODUCTS = [inner_z4_tr, inner_z4_psi, lambda x, y: inner_L(x, y, LMap(3, 2))]


@pytest.mark.parametrize("form", PRODUCTS[:2])
@given(data=st.data())
def test_biadditivity(form, data):
    x, y, z = (data.draw(vectors(S111)) for _ in range(3))
    assert form(x + y, z) == (form(x, z) + form(y, z)) % 4
    assert form(z, x + y) == (form(z, x) + form(z, y)) % 4


@given(vectors(S110), vectors(S110), vectors(S110))
def test_lmap_biadditivity(x, y, z):
    form = PRODUCTS[2]
    assert form(x + y, z) == (form(x, z) + form(y, z)) % 4


def test_inner_std_scalar_compatibility():
    for x, y in itertools.product(enumerate_space(S110), repeat=2):
        for s in E4_ELEMENTS:
            assert inner_std(scalar_mul(s, x), y) == s * inner_std(x, y)


@pytest.mark.parametrize("shape, form", [
    (shape, form) for shape in (SpaceShape(1, 0, 0), S010, S001) for form in range(3)
    if not (form == 2 and shape.nsec)  # L-products need no Z4 coordinates
])
def test_nondegeneracy(shape, form):
    f = PRODUCTS[form]
    vecs = list(enumerate_space(shape))
    for x in vecs:
        if x:
            assert any(f(x, y) for y in vecs)


def test_wt_equals_wa_of_psi_multiple():
    for x in enumerate_space(S111):
        assert weight(x) == coweight(psi_times(x))


def test_enumerate_space():
    assert [str(x) for x in enumerate_space(S001)] == ["0", "1", "2", "3"]
    assert len(list(enumerate_space(SpaceShape(1)))) == 16
    vecs = list(enumerate_space(S111))
    assert len(vecs) == 256 == len(set(vecs))
    assert vecs == sorted(vecs)
    with pytest.raises(BudgetExceededError):
        list(enumerate_space(SpaceShape(2), budget=100))


def brute_force_srg(vertices, weight_fn):
    adj = {x: {y for y in vertices if weight_fn(y - x) == 1} for x in vertices}
    degrees = {len(s) for s in adj.values()}
    lam = {len(adj[x] & adj[y]) for x in vertices for y in adj[x]}
    mu = {len(adj[x] & adj[y]) for x in vertices for y in vertices if y != x and y not in adj[x]}
    return degrees, lam, mu


def test_graph_stats_shrikhande():
    stats = graph_stats(SpaceShape(1))
    vertices = list(enumerate_space(SpaceShape(1)))
    degrees, lam, mu = brute_force_srg(vertices, weight)
    assert (degrees, lam, mu) == ({6}, {2}, {2})
    assert stats.vertices == 16
    assert stats.weight.regular and stats.weight.degree_profile == {6: 16}
    assert stats.weight.srg == (16, 6, 2, 2)
    assert stats.coweight.srg == (16, 6, 2, 2)


def test_graph_stats_complete_graph():
    stats = graph_stats(S010)
    assert stats.vertices == 4
    assert stats.weight.degree_profile == {3: 4}
    assert stats.weight.srg == (4, 3, 2, 0)


def test_graph_stats_product_regularity():
    stats = graph_stats(S111)
    # one Shrikhande factor (degree 6) plus two K4 factors (degree 3 each)
    assert stats.weight.degree_profile == {12: 256}
    with pytest.raises(BudgetExceededError):
        graph_stats(SpaceShape(5))
