import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from neutrosophic.errors import DivisionByZero, EmptyOperand, EmptySet, MalformedInterval, NegativeOperand, ParseError
from neutrosophic.nonstd import MINUS_ZERO, ONE_PLUS, NsBound, Ordering, ns_add, ns_cmp, ns_mul, ns_sub, parse_bound
from neutrosophic.nsset import (
    UNIT,
    Interval,
    NsSet,
    clamp,
    contains,
    normalize,
    parse_set,
    set_add,
    set_div_scalar,
    set_inf,
    set_mul,
    set_sub,
    set_sup,
)

from oracles import sampled_hull
from strategies import exact_pieces, exact_sets, tagged_sets, to_set

P = parse_set
B = parse_bound


def iv(lo, hi, lo_open=False, hi_open=False):
    return Interval(B(lo), B(hi), lo_open, hi_open)


# -- normalize --------------------------------------------------------------


def test_normalize_keeps_disjoint_intervals():
    s = normalize([iv("0.3", "0.4"), iv("0.45", "0.5")])
    assert s.intervals == (iv("0.3", "0.4"), iv("0.45", "0.5"))
    assert s.points == ()


def test_normalize_merges_touching_closed_ends():
    assert normalize([iv("0.1", "0.3"), iv("0.3", "0.5")]) == P("[0.1,0.5]")


def test_normalize_absorbs_points():
    assert normalize([B("0.2"), iv("0.1", "0.4")]) == P("[0.1,0.4]")


def test_normalize_closes_open_end_with_point():
    assert normalize([iv("0.1", "0.2", hi_open=True), B("0.2")]) == P("[0.1,0.2]")


def test_normalize_keeps_gap_between_open_ends():
    s = P("]0.1,0.2[ U ]0.2,0.3[")
    assert len(s.intervals) == 2
    assert B("0.2") not in s


def test_normalize_merges_immediate_neighbours():
    assert normalize([iv("0.9", "1"), ONE_PLUS]) == P("[0.9,1+]")


def test_normalize_recombines_binad():
    s = normalize([B("0.5-"), B("0.5+")])
    assert s.points == (B("0.5-+"),)


def test_normalize_rejects_reversed_interval():
    with pytest.raises(MalformedInterval):
        normalize([iv("0.5", "0.3")])
    with pytest.raises(MalformedInterval):
        normalize([Interval(B("0.2-+"), B("0.5"))])


def test_degenerate_interval_becomes_point_or_vanishes():
    assert normalize([iv("0.2", "0.2")]) == NsSet.point("0.2")
    assert normalize([iv("0.2", "0.2", hi_open=True)]).is_empty
    # a degenerate range inside a monad still holds values
    assert normalize([iv("0.2+", "0.2+", True, True)]) == P("{0.2+}")
    assert set_mul(P("]0.01-,0.04-["), P("{0-}")) == P("{0-}")


@given(exact_pieces(max_pieces=5), st.randoms())
def test_normalize_idempotent_and_order_insensitive(pieces, rnd):
    s = to_set(pieces)
    assert normalize(list(s.intervals) + list(s.points)) == s
    shuffled = list(pieces)
    rnd.shuffle(shuffled)
    assert to_set(shuffled) == s


@given(tagged_sets(max_pieces=4))
def test_normalize_idempotent_with_tags(s):
    assert normalize(list(s.intervals) + list(s.points)) == s
    for a, b in zip(s.intervals, s.intervals[1:]):
        order = ns_cmp(a.hi, b.lo)
        assert order is Ordering.LESS or (order is Ordering.EQUAL and a.hi_open and b.lo_open)


# -- arithmetic examples ----------------------------------------------------


def test_add_examples():
    assert set_add(P("[0.1,0.2]"), P("[0.3,0.4]")) == P("[0.4,0.6]")
    s = P("[0.1,0.2] U {0.5}")
    assert set_add(P("{0}"), s) == s
    assert set_add(P("{0.3}"), s) == P("[0.4,0.5] U {0.8}")


def test_sub_examples():
    assert set_sub(P("{1+}"), P("[0.2,0.3]")) == P("[0.7+,0.8+]")
    s = P("[0.1,0.2] U {0.5}")
    assert set_sub(s, P("{0}")) == s
    assert set_sub(P("{0.2}"), P("[0.5,0.6]")) == P("[-0.4,-0.3]")


def test_mul_examples():
    assert set_mul(P("[0.2,0.4]"), P("[0.5,0.5]")) == P("[0.1,0.2]")
    s = P("[0.1,0.2] U {0.5}")
    assert set_mul(P("{1}"), s) == s
    assert set_mul(P("{0}"), s) == P("{0}")


def test_mul_by_one_plus_propagates_tags():
    assert set_mul(P("{1+}"), P("[0.2,0.5]")) == P("[0.2+,0.5+]")


def test_mul_rejects_negative_sets():
    with pytest.raises(NegativeOperand):
        set_mul(P("[-0.2,0.1]"), P("{0.5}"))


def test_open_flags_propagate():
    assert set_add(P("[0.1,0.2["), P("[0.3,0.4]")) == P("[0.4,0.6[")
    assert set_sub(P("[0.5,0.6]"), P("]0.1,0.2]")) == P("[0.3,0.5[")
    # an attained zero factor keeps the zero product attained
    assert set_mul(P("[0,0.5]"), P("]0.2,0.4[")) == P("[0,0.2[")


def test_binad_endpoints_widen():
    # 1+ - 1+ is a binad; as an interval end it widens to its outer monad
    assert set_sub(P("{1+}"), P("[0.5,1+]")) == P("[0-,0.5+]")
    assert set_sub(P("{1+}"), P("{1+}")) == P("{0-+}")


def test_div_scalar_examples():
    assert set_div_scalar(P("[0.2,0.4]"), 2) == P("[0.1,0.2]")
    s = P("[0.1,0.2[ U {0.5+}")
    assert set_div_scalar(s, 1) == s
    assert set_div_scalar(P("{0.6}"), 3) == P("{0.2}")


def test_div_by_negative_flips_order_and_sides():
    assert set_div_scalar(P("[0.2+,0.4["), -2) == P("]-0.2,-0.1-]")


def test_div_errors():
    with pytest.raises(DivisionByZero):
        set_div_scalar(P("{0.5}"), 0)
    with pytest.raises(ZeroDivisionError):
        set_div_scalar(P("{0.5}"), 0.0)


def test_empty_operands_rejected():
    empty = NsSet()
    for op in (set_add, set_sub, set_mul):
        with pytest.raises(EmptyOperand):
            op(empty, P("{0.1}"))
    with pytest.raises(EmptySet):
        set_inf(empty)


def test_operators():
    a, b = P("[0.2,0.3]"), P("[0.4,0.5]")
    assert a + b - a * b == P("[0.45,0.72]")
    assert 1 - a == P("[0.7,0.8]")
    assert a / 2 == P("[0.1,0.15]")


# -- inf / sup --------------------------------------------------------------


def test_inf_sup_examples():
    assert set_inf(UNIT) == MINUS_ZERO and set_sup(UNIT) == ONE_PLUS
    assert set_inf(P("]0-,1+[")) == MINUS_ZERO and set_sup(P("]0-,1+[")) == ONE_PLUS
    assert set_sup(P("[0.3,0.4] U {0.6}")) == B("0.6")
    assert set_inf(P("{0.5-+}")) == B("0.5-")
    assert set_sup(P("{0.5-+}")) == B("0.5+")


positive = exact_sets(lo=1)


@given(positive, positive)
def test_endpoint_homomorphism(s1, s2):
    assert set_inf(set_add(s1, s2)) == ns_add(set_inf(s1), set_inf(s2))
    assert set_sup(set_add(s1, s2)) == ns_add(set_sup(s1), set_sup(s2))
    assert set_inf(set_mul(s1, s2)) == ns_mul(set_inf(s1), set_inf(s2))
    assert set_sup(set_mul(s1, s2)) == ns_mul(set_sup(s1), set_sup(s2))
    assert set_inf(set_sub(s1, s2)) == ns_sub(set_inf(s1), set_sup(s2))
    assert set_sup(set_sub(s1, s2)) == ns_sub(set_sup(s1), set_inf(s2))


OPS = {"add": set_add, "sub": set_sub, "mul": set_mul}


@settings(max_examples=40, deadline=None)
@given(exact_pieces(max_pieces=2), exact_pieces(max_pieces=2), st.sampled_from(sorted(OPS)))
def test_sampling_hull_soundness(p1, p2, op):
    result = OPS[op](to_set(p1), to_set(p2))
    lo, hi, values = sampled_hull(op, p1, p2)
    assert abs(float(set_inf(result)) - lo) <= 1e-9
    assert abs(float(set_sup(result)) - hi) <= 1e-9
    step = 1000 if op != "mul" else 10**6
    for v in random.Random(0).sample(list(values), min(200, len(values))):
        assert contains(result, NsBound(Fraction(round(v * step), step)))


# -- clamp ------------------------------------------------------------------


def test_clamp_examples():
    assert clamp(P("[-0.4,-0.3]")) == P("{0-}")
    assert clamp(P("[0.9,1.3]")) == P("[0.9,1+]")
    assert clamp(P("[0.2,0.8]")) == P("[0.2,0.8]")


def test_clamp_partial_and_points():
    assert clamp(P("[-0.2,0.5[")) == P("[0-,0.5[")
    assert clamp(P("{-3, 0.5, 7}")) == P("{0-, 0.5, 1+}")
    assert clamp(P("{1-+}")) == P("{1-+}")


wide = st.lists(st.integers(-2000, 3000), min_size=2, max_size=6).map(
    lambda ks: to_set([(Fraction(min(a, b), 1000), Fraction(max(a, b) + 1, 1000)) for a, b in zip(ks, ks[1:])])
)


@given(wide)
def test_clamp_idempotent_and_in_range(s):
    c = clamp(s)
    assert clamp(c) == c
    assert ns_cmp(set_inf(c), MINUS_ZERO) is not Ordering.LESS
    assert ns_cmp(set_sup(c), ONE_PLUS) is not Ordering.GREATER


# -- contains ---------------------------------------------------------------


def test_contains_examples():
    assert not contains(P("[0.1,0.2["), B("0.2"))
    assert contains(P("[0.1,0.2]"), B("0.15"))
    assert contains(P("[0-,0.3]"), B("0"))


def test_contains_binad():
    assert contains(P("{0.5-+}"), B("0.5-"))
    assert not contains(P("{0.5-+}"), B("0.5"))
    assert contains(P("[0.4,0.6]"), B("0.5-+"))
    assert not contains(P("[0.5,0.6]"), B("0.5-+"))


# -- text form --------------------------------------------------------------


@pytest.mark.parametrize(
    "text",
    [
        "[0.3,0.4] U [0.45,0.5]",
        "{0.6} U [0.66,0.7]",
        "]0-,1+[",
        "{0.1, 0.5-+} U ]0.6,0.7]",
        "[-0.4,-0.3]",
        "{1/3}",
    ],
)
def test_print_parse_round_trip(text):
    assert str(parse_set(text)) == text


@given(tagged_sets(max_pieces=4))
def test_round_trip_property(s):
    assert parse_set(str(s)) == s


@pytest.mark.parametrize("text", ["[0.5,0.3]", "[0.2-+,0.4]", "{}", "[0.1,0.2", "{0.1} U", "{1.5+-}"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_set(text)
