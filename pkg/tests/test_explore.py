"""Explorer: balls, windows, exports, components, Euclid certificates."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nielsen.errors import ResourceCapError, UsageError
from nielsen.explore import (
    ball,
    components,
    euclid_reduce,
    fragment_from_jsonl,
    growth_profile,
)
from nielsen.groups import (
    BurnsideB23,
    FiniteAbelianExp,
    FiniteCayley,
    FreeGroup,
    InfiniteDihedral,
    Integers,
    cyclic_table,
)
from nielsen.moves import I, eval_word

from conftest import seeded

Z = Integers()
D = InfiniteDihedral()


def test_one_generator_integer_graph():
    frag = ball(Z, (1,), 5)
    assert len(frag) == 2
    assert set(frag.states) == {(1,), (-1,)}
    assert all(frag.expanded)
    assert frag.moves == (I(1),)


def test_radius_zero():
    frag = ball(Z, (2, 3), 0)
    assert len(frag) == 1 and sum(frag.expanded) == 0


def test_unit_ball_at_ones():
    frag = ball(Z, (1, 1), 1)
    assert set(frag.states) == {(1, 1), (2, 1), (0, 1), (1, 2), (1, 0), (-1, 1), (1, -1)}
    assert len(frag) == 7


def test_ball_rejects_bad_roots():
    with pytest.raises(UsageError):
        ball(Z, (2, 4), 2)
    with pytest.raises(UsageError):
        ball(Z, (1, 1), -1)
    with pytest.raises(ResourceCapError):
        ball(Z, (1, 1), 6, cap=10)


def test_ball_determinism_and_validation():
    f1 = ball(Z, (2, 3), 4)
    f2 = ball(Z, (2, 3), 4)
    assert f1.to_jsonl() == f2.to_jsonl()
    assert f1.to_dot() == f2.to_dot()
    f1.validate()
    frag = ball(D, ((0, 1), (1, 1)), 5)
    frag.validate()


def test_window_retains_frontier_unexpanded():
    frag = ball(Z, (1, 1), 4, window=2)
    outside = [v for v in range(len(frag)) if max(abs(x) for x in frag.states[v]) > 2]
    assert outside, "window should be exceeded by some discovered vertices"
    assert all(not frag.expanded[v] for v in outside)
    assert frag.truncated
    with pytest.raises(UsageError):
        growth_profile(frag)


def test_growth_profiles():
    # once the graph is exhausted the profile stays constant up to the radius
    prof = growth_profile(ball(Z, (1,), 4))
    assert prof == [(0, 1), (1, 2), (2, 2), (3, 2), (4, 2)]
    prof = dict(growth_profile(ball(D, ((0, 1), (1, 1)), 12)))
    assert all(prof[r] <= 40 * r for r in range(1, 13))
    prof = dict(growth_profile(ball(Z, (1, 1), 8)))
    for r in range(4, 8):
        assert prof[r] / prof[r - 1] >= 1.3


def test_free_group_ball_with_word_window():
    F = FreeGroup(2)
    frag = ball(F, F.standard_generators(), 3, window=4)
    assert len(frag) > 10
    frag.validate()


# ---------------------------------------------------------------------------
# exports


def test_jsonl_round_trip():
    frag = ball(Z, (2, 3), 3)
    clone = fragment_from_jsonl(Z, 2, frag.to_jsonl())
    assert frag.content_equal(clone)
    assert clone.to_jsonl() == frag.to_jsonl()


def test_dot_output_shape():
    frag = ball(Z, (1,), 2)
    dot = frag.to_dot()
    assert dot.startswith("graph nielsen {")
    assert '[label="I:1"]' in dot
    assert '// group: {"kind": "Integers"}' in dot
    assert dot.count(" -- ") == 2  # one line per dart


def test_dot_single_vertex():
    frag = ball(Z, (2, 3), 0)
    dot = frag.to_dot()
    assert dot.count(" -- ") == 0
    assert dot.count("[label=") == 1


# ---------------------------------------------------------------------------
# components of finite groups


def test_components_cyclic5():
    rep = components(FiniteCayley(cyclic_table(5), 0), 1)
    assert rep.sizes == [2, 2]
    sets = [set(rep.members(k)) for k in range(2)]
    assert {frozenset(s) for s in sets} == {frozenset({(1,), (4,)}), frozenset({(2,), (3,)})}


def test_components_elementary_abelian():
    rep = components(FiniteAbelianExp(3, 2), 2)
    assert rep.num_components == 1 and rep.sizes == [48]
    assert rep.generating_count == 48


def test_components_z2():
    rep = components(FiniteCayley(cyclic_table(2), 0), 1)
    assert rep.sizes == [1]
    assert rep.representatives == [(1,)]


def test_components_sizes_sum_to_generating_count():
    for group, n in ((FiniteCayley(cyclic_table(8), 0), 2), (BurnsideB23(), 2)):
        rep = components(group, n)
        direct = 0
        elems = list(group.elements())
        from itertools import product as iproduct

        for t in iproduct(elems, repeat=n):
            if group.is_generating(t):
                direct += 1
        assert sum(rep.sizes) == rep.generating_count == direct


def test_components_paths_agree():
    from nielsen.explore import _components_labelprop, _components_unionfind

    group = FiniteCayley(cyclic_table(6), 0)
    for n in (1, 2):
        total = group.order**n
        a = _components_unionfind(group, n, total)
        b = _components_labelprop(group, n, total)
        assert sorted(a.sizes) == sorted(b.sizes)
        assert a.generating_count == b.generating_count
        assert set(a.representatives) == set(b.representatives)


def test_components_requires_finite_group():
    with pytest.raises(UsageError):
        components(Z, 2)
    with pytest.raises(ResourceCapError):
        components(FiniteCayley(cyclic_table(16), 0), 5, cap=1000)


# ---------------------------------------------------------------------------
# Euclid reduction


def test_euclid_examples():
    assert euclid_reduce((1,)) == ()
    w = euclid_reduce((2, 3))
    assert eval_word(Z, (2, 3), w) == (1, 0)
    w = euclid_reduce((6, 10, 15))
    assert eval_word(Z, (6, 10, 15), w) == (1, 0, 0)
    assert euclid_reduce((-1,)) == (I(1),)


def test_euclid_rejects_non_generating():
    with pytest.raises(UsageError):
        euclid_reduce((2, 4))
    with pytest.raises(UsageError):
        euclid_reduce(())


@settings(max_examples=200)
@given(st.lists(st.integers(min_value=-(10**4), max_value=10**4), min_size=2, max_size=4))
def test_euclid_certificate(entries):
    t = tuple(entries)
    if math.gcd(*t) != 1:
        t = t[:-1] + (1,)
    w = euclid_reduce(t)
    assert eval_word(Z, t, w) == (1,) + (0,) * (len(t) - 1)


def test_euclid_certificate_bulk():
    rng = seeded(0xE0C11D)
    for n in (2, 3, 4):
        for _ in range(350):
            t = tuple(rng.randint(-(10**4), 10**4) for _ in range(n))
            if math.gcd(*t) != 1:
                continue
            w = euclid_reduce(t)
            assert eval_word(Z, t, w) == (1,) + (0,) * (n - 1)
