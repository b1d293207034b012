import pytest
from hypothesis import given, settings

from nsg.errors import AmbientMismatch, TrivialSemigroup
from nsg.ideals import (
    RelativeIdeal,
    canonical_ideal,
    dual_ideal,
    gap_bound_check,
    ideal_sum,
    minimal_generators,
    trace_and_residue,
)
from nsg.semigroup import new_semigroup, pseudo_frobenius

from oracles import brute_members, brute_minimal_ideal_generators, brute_trace
from strategies import semigroups


def whole_semigroup_ideal(s):
    """The semigroup itself, as a relative ideal over itself."""
    members = s.members_below(s.frobenius + 1)
    head = [x for x in members if x <= s.frobenius]
    return RelativeIdeal(s, tuple(h for h in head if h < s.frobenius + 1), s.frobenius + 1).shift(0)


class TestCanonicalIdeal:
    def test_357(self):
        s = new_semigroup([3, 5, 7])
        k = canonical_ideal(s)
        assert k.head == (0, 2, 3) and k.conductor == 5
        assert minimal_generators(k) == (0, 2)

    def test_23_symmetric(self):
        s = new_semigroup([2, 3])
        k = canonical_ideal(s)
        assert k.head == (0,) and k.conductor == 2

    def test_56789(self):
        k = canonical_ideal(new_semigroup([5, 6, 7, 8, 9]))
        assert k.head == (0, 1, 2, 3) and k.conductor == 5

    def test_naturals_rejected(self):
        with pytest.raises(TrivialSemigroup):
            canonical_ideal(new_semigroup([1]))

    def test_min_gens_reflect_pf(self):
        for gens in ([3, 5, 7], [4, 5, 7], [5, 6, 7, 8, 9], [4, 6, 7]):
            s = new_semigroup(gens)
            k = canonical_ideal(s)
            pf = pseudo_frobenius(s).elements
            assert minimal_generators(k) == tuple(sorted(s.frobenius - nu for nu in pf))


class TestDualIdeal:
    def test_357(self):
        s = new_semigroup([3, 5, 7])
        d = dual_ideal(s, canonical_ideal(s))
        assert d.head == (3,) and d.conductor == 5

    def test_symmetric_self_dual(self):
        s = new_semigroup([2, 3])
        k = canonical_ideal(s)
        assert dual_ideal(s, k) == k

    def test_457(self):
        s = new_semigroup([4, 5, 7])
        k = canonical_ideal(s)
        assert k.head == (0, 3, 4, 5) and k.conductor == 7
        d = dual_ideal(s, k)
        assert d.head == (4, 5) and d.conductor == 7

    def test_tail_only_ideal(self):
        # a pure tail still constrains the dual through its early elements
        s = new_semigroup([3, 5, 7])
        tail = RelativeIdeal(s, (), 5)
        d = dual_ideal(s, tail)
        assert all(s.contains(z + x) for z in d.elements_below(20) for x in range(5, 30))
        assert not d.contains(-1)


class TestIdealSum:
    def test_trace_sum_357(self):
        s = new_semigroup([3, 5, 7])
        k = canonical_ideal(s)
        t = ideal_sum(k, dual_ideal(s, k))
        assert t.head == (3,) and t.conductor == 5

    def test_identity_with_whole_semigroup(self):
        s = new_semigroup([4, 5, 7])
        k = canonical_ideal(s)
        gamma = whole_semigroup_ideal(s)
        assert ideal_sum(k, gamma) == k

    def test_trace_sum_457(self):
        s = new_semigroup([4, 5, 7])
        k = canonical_ideal(s)
        t = ideal_sum(k, dual_ideal(s, k))
        assert t.head == (4, 5) and t.conductor == 7

    def test_ambient_mismatch(self):
        a = canonical_ideal(new_semigroup([3, 5, 7]))
        b = canonical_ideal(new_semigroup([2, 3]))
        with pytest.raises(AmbientMismatch):
            ideal_sum(a, b)


class TestMinimalGenerators:
    def test_trace_357(self):
        s = new_semigroup([3, 5, 7])
        assert trace_and_residue(s).trace_min_gens == (3, 5, 7)

    def test_whole_semigroup(self):
        s = new_semigroup([4, 5, 7])
        assert minimal_generators(whole_semigroup_ideal(s)) == (0,)

    def test_trace_of_lifted(self):
        s = new_semigroup([3, 10, 14])
        report = trace_and_residue(s)
        assert report.trace.head == (6, 9, 10) and report.trace.conductor == 12
        assert report.trace_min_gens == (6, 10, 14)


class TestTraceAndResidue:
    @pytest.mark.parametrize(
        "gens,residue,missing",
        [
            ([3, 5, 7], 1, (0,)),
            ([2, 3], 0, ()),
            ([5, 6, 7, 8, 9], 1, (0,)),
            ([4, 5, 7], 1, (0,)),
        ],
    )
    def test_examples(self, gens, residue, missing):
        r = trace_and_residue(new_semigroup(gens))
        assert r.residue == residue
        assert r.missing == missing
        assert r.nearly_gorenstein == (residue <= 1)
        assert r.gorenstein == (residue == 0)

    def test_question_holds_on_examples(self):
        r = trace_and_residue(new_semigroup([3, 5, 7]))
        assert r.gap_bound == 1 and r.question_holds

    def test_naturals(self):
        r = trace_and_residue(new_semigroup([1]))
        assert r.residue == 0 and r.gorenstein and r.trace.conductor == 0
        assert r.trace_min_gens == (0,)
        assert r.gap_bound == 0 and r.question_holds


class TestGapBoundCheck:
    @pytest.mark.parametrize(
        "gens,expected",
        [
            ([3, 5, 7], (1, 1, True, 0)),
            ([2, 3], (0, 0, True, 0)),
            ([4, 5, 7], (1, 1, True, 0)),
        ],
    )
    def test_examples(self, gens, expected):
        c = gap_bound_check(new_semigroup(gens))
        assert (c.residue, c.gap_bound, c.holds, c.slack) == expected

    def test_naturals_rejected(self):
        with pytest.raises(TrivialSemigroup):
            gap_bound_check(new_semigroup([1]))


@settings(max_examples=50, deadline=None)
@given(semigroups())
def test_trace_contained_in_semigroup_and_stable(s):
    t = trace_and_residue(s).trace
    assert all(s.contains(x) for x in t.head)
    assert t.conductor > s.frobenius
    assert t.is_stable()


@settings(max_examples=50, deadline=None)
@given(semigroups())
def test_trace_shift_invariance(s):
    k = canonical_ideal(s)
    trace = ideal_sum(k, dual_ideal(s, k))
    for a in (1, s.multiplicity, s.frobenius):
        shifted = k.shift(a)
        assert ideal_sum(shifted, dual_ideal(s, shifted)) == trace


@settings(max_examples=50, deadline=None)
@given(semigroups())
def test_trace_conductor_bound(s):
    t = trace_and_residue(s).trace
    assert t.conductor <= 2 * (s.frobenius + 1)


@settings(max_examples=50, deadline=None)
@given(semigroups())
def test_gorenstein_triad(s):
    r = trace_and_residue(s)
    gamma = whole_semigroup_ideal(s)
    assert r.gorenstein == (r.residue == 0) == (r.trace == gamma)


@settings(max_examples=25, deadline=None)
@given(semigroups(max_multiplicity=20, max_extra=6))
def test_canonical_duality_is_reflexive(s):
    # duality with respect to the canonical ideal is an involution on
    # relative ideals; the plain semigroup dual gives only a containment
    k = canonical_ideal(s)
    span = 4 * (s.frobenius + 2)
    window = range(-span // 2, span // 2)

    def k_dual(elems):
        return [z for z in range(-span, span) if all(k.contains(z + x) for x in elems)]

    for ideal in (k, trace_and_residue(s).trace, k.shift(3)):
        elems = [x for x in range(-span, span) if ideal.contains(x)]
        twice = set(k_dual(k_dual(elems)))
        assert {z for z in window if z in twice} == {z for z in window if ideal.contains(z)}


@settings(max_examples=50, deadline=None)
@given(semigroups(max_multiplicity=20, max_extra=6))
def test_double_semigroup_dual_contains_canonical(s):
    k = canonical_ideal(s)
    dd = dual_ideal(s, dual_ideal(s, k))
    assert all(dd.contains(x) for x in k.head)
    assert dd.conductor <= k.conductor


def test_double_semigroup_dual_is_strict_for_357():
    # 4 is in the double dual but not in the canonical ideal: the naive
    # double dual is not an involution on non-symmetric semigroups
    s = new_semigroup([3, 5, 7])
    k = canonical_ideal(s)
    dd = dual_ideal(s, dual_ideal(s, k))
    assert not k.contains(4)
    assert dd.contains(4)


@pytest.mark.parametrize(
    "gens",
    [[3, 5, 7], [2, 3], [4, 5, 7], [5, 6, 7, 8, 9], [3, 10, 14], [4, 6, 7], [6, 10, 15], [5, 7, 9], [4, 9, 11, 14]],
)
def test_trace_matches_brute_minkowski_oracle(gens):
    s = new_semigroup(gens)
    got = trace_and_residue(s).trace
    span = 2 * s.window_size
    expected = brute_trace(s.generators, s.window_size, s.frobenius)
    realized = {x for x in range(0, span + 1) if got.contains(x)}
    assert realized == expected


@pytest.mark.parametrize("gens", [[3, 5, 7], [4, 5, 7], [3, 10, 14], [5, 6, 7, 8, 9]])
def test_minimal_generators_match_direct_definition(gens):
    s = new_semigroup(gens)
    t = trace_and_residue(s).trace
    bound = t.conductor + s.multiplicity
    elements = set(t.elements_below(bound + 3 * s.generators[-1]))
    members = brute_members(s.generators, bound + 3 * s.generators[-1])
    assert list(trace_and_residue(s).trace_min_gens) == brute_minimal_ideal_generators(elements, members, bound)