import json

import pytest
from hypothesis import given, strategies as st

from partbij.partitions import count_in_box
from partbij.series import (
    INFINITY,
    BoxMismatch,
    BoxTooSmall,
    CoefficientOverflow,
    DivergentInfiniteProduct,
    NonUnitConstantTerm,
    OutOfBox,
    SeriesError,
    TruncatedSeries,
    equal_in_box,
    first_mismatch,
    invert,
    mul,
    pochhammer,
    q_binomial,
    substitute,
)

BOX = {"q": 4, "z": 3}


@st.composite
def small_series(draw):
    terms = draw(st.lists(
        st.tuples(st.integers(0, 4), st.integers(0, 3), st.integers(-5, 5)),
        max_size=8,
    ))
    return TruncatedSeries.from_terms(
        BOX, [({"q": a, "z": b}, c) for a, b, c in terms]
    )


def test_variable_order_is_canonical():
    f = TruncatedSeries.zero({"z": 2, "q": 3, "s": 1, "z2": 1, "a": 1})
    assert f.variables == ("q", "z", "s", "z2", "a")


def test_monomial_and_coefficient():
    f = TruncatedSeries.monomial(BOX, {"q": 2, "z": 1}, 7)
    assert f.coefficient({"q": 2, "z": 1}) == 7
    assert f.coefficient({"q": 0}) == 0
    with pytest.raises(OutOfBox):
        TruncatedSeries.monomial(BOX, {"q": 5})
    with pytest.raises(OutOfBox):
        f.coefficient({"q": 9})


def test_from_terms_accumulates_and_drops():
    f = TruncatedSeries.from_terms(
        BOX, [({"q": 1}, 2), ({"q": 1}, 3), ({"q": 99}, 1)]
    )
    assert f.coefficient({"q": 1}) == 5
    assert list(f.terms()) == [({"q": 1}, 5)]


@given(small_series(), small_series(), small_series())
def test_ring_laws(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + TruncatedSeries.zero(BOX) == f
    assert f * TruncatedSeries.constant(BOX, 1) == f
    assert f - f == TruncatedSeries.zero(BOX)


@given(small_series(), small_series())
def test_truncation_is_exact(f, g):
    # multiplying in a larger box then restricting agrees with multiplying
    # in the small box directly
    big = {"q": 8, "z": 6}
    fb = TruncatedSeries.from_terms(big, f.terms())
    gb = TruncatedSeries.from_terms(big, g.terms())
    prod = TruncatedSeries.from_terms(BOX, (fb * gb).terms())
    assert prod == f * g


def test_int_scalars():
    f = TruncatedSeries.monomial(BOX, {"q": 1})
    assert (2 * f).coefficient({"q": 1}) == 2
    assert (f * 3).coefficient({"q": 1}) == 3
    assert (1 - f).coefficient({}) == 1
    assert (1 - f).coefficient({"q": 1}) == -1


def test_box_mismatch_rejected():
    f = TruncatedSeries.zero(BOX)
    g = TruncatedSeries.zero({"q": 4})
    with pytest.raises(BoxMismatch):
        f + g
    with pytest.raises(BoxMismatch):
        mul(f, g)


def test_invert_is_inverse():
    box = {"q": 10}
    f = 1 - TruncatedSeries.monomial(box, {"q": 1})
    g = invert(f)
    assert f * g == TruncatedSeries.constant(box, 1)
    assert all(g.coefficient({"q": n}) == 1 for n in range(11))


def test_invert_needs_unit_constant():
    with pytest.raises(NonUnitConstantTerm):
        invert(TruncatedSeries.monomial(BOX, {"q": 1}))
    with pytest.raises(NonUnitConstantTerm):
        invert(TruncatedSeries.constant(BOX, 2))


def test_pochhammer_known_polynomial():
    # (q;q)_2 = (1-q)(1-q^2)
    f = pochhammer({"q": 1}, {"q": 1}, 2, {"q": 6})
    assert f.text() == "1 - q - q^2 + q^3"


def test_pochhammer_infinite_truncates():
    box = {"q": 8}
    f = pochhammer({"q": 1}, {"q": 1}, INFINITY, box)
    g = pochhammer({"q": 1}, {"q": 1}, 9, box)
    assert f == g
    gen = invert(f)
    from partbij.partitions import count_partitions

    for n in range(9):
        assert gen.coefficient({"q": n}) == count_partitions(n)


def test_pochhammer_divergent_constant_ratio():
    with pytest.raises(DivergentInfiniteProduct):
        pochhammer({"q": 1}, {}, INFINITY, {"q": 4})
    # finite products with constant ratio are fine
    f = pochhammer({"q": 1}, {}, 2, {"q": 4})
    assert f == pochhammer({"q": 1}, {"q": 0}, 2, {"q": 4})


def test_q_binomial_known_and_symmetric():
    f = q_binomial(4, 2, "q", {"q": 6})
    assert f.text() == "1 + q + 2*q^2 + q^3 + q^4"
    assert q_binomial(5, 2, "q", {"q": 10}) == q_binomial(5, 3, "q", {"q": 10})
    assert q_binomial(3, 0, "q", {"q": 2}).text() == "1"


def test_q_binomial_counts_box_partitions():
    # sum of coefficients = number of partitions in a k by (n-k) box
    for n in range(7):
        for k in range(n + 1):
            f = q_binomial(n, k, "q", {"q": k * (n - k) + 1})
            total = sum(c for _, c in f.terms())
            assert total == count_in_box(n - k, k)


def test_q_binomial_box_too_small():
    with pytest.raises(BoxTooSmall):
        q_binomial(6, 3, "q", {"q": 4})
    with pytest.raises(BoxTooSmall):
        q_binomial(2, 1, "s", {"q": 5})


def test_substitute_maps_variable():
    box = {"q": 6, "z": 3}
    f = TruncatedSeries.from_terms(
        box, [({}, 1), ({"z": 1}, 2), ({"q": 1, "z": 2}, 5)]
    )
    g = substitute(f, "z", {"q": 2})
    assert g.coefficient({"q": 2}) == 2
    assert g.coefficient({"q": 5}) == 5
    h = substitute(f, "z", {"q": 3, "z": 1})
    assert h.coefficient({"q": 4, "z": 2}) == 0  # q exponent 1+6 left the box
    assert h.coefficient({"q": 3, "z": 1}) == 2


def test_text_rendering():
    f = TruncatedSeries.from_terms(
        BOX, [({}, 1), ({"q": 1}, -1), ({"q": 2, "z": 1}, 3)]
    )
    assert f.text() == "1 - q + 3*q^2*z"
    assert TruncatedSeries.zero(BOX).text() == "0"


def test_json_roundtrip():
    f = TruncatedSeries.from_terms(
        BOX, [({"q": 1}, 2), ({"q": 3, "z": 2}, -4)]
    )
    data = f.to_json()
    json.dumps(data)  # serializable, no numpy scalars
    assert TruncatedSeries.from_json(data) == f


def test_overflow_guard():
    box = {"q": 2}
    f = TruncatedSeries.constant(box, 2 ** 40)
    with pytest.raises(CoefficientOverflow):
        f * f


def test_first_mismatch_graded_lex():
    f = TruncatedSeries.zero(BOX)
    g = TruncatedSeries.from_terms(
        BOX, [({"q": 2}, 1), ({"q": 1, "z": 1}, 1), ({"z": 1}, 1)]
    )
    exps, cf, cg = first_mismatch(f, g)
    assert exps == {"z": 1}
    assert (cf, cg) == (0, 1)
    assert first_mismatch(f, f) is None
    assert equal_in_box(g, g)
    # ties in total degree break lexicographically on the exponent tuple
    h = TruncatedSeries.from_terms(BOX, [({"q": 1, "z": 1}, 1), ({"z": 2}, 1)])
    exps, _, _ = first_mismatch(TruncatedSeries.zero(BOX), h)
    assert exps == {"z": 2}


def test_negative_exponent_rejected():
    with pytest.raises(SeriesError):
        TruncatedSeries.monomial(BOX, {"q": -1})
