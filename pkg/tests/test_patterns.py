"""Reduction, occurrence, avoidance counts, closed forms, and bijections."""

import pytest

import golden_data as gold
from pascent.core import PAscentSequence, enumerate_sequences, is_p_ascent
from pascent.patterns import (
    NoClosedFormError,
    Pattern,
    avoider_counts,
    bijection_012_to_10,
    bijection_10_to_012,
    closed_count,
    count_avoiders,
    count_vincular_212_ternary,
    embed,
    gf_avoiders,
    iter_avoiders,
    occurs,
    project,
    red,
)
from pascent.series import scalar_coefficients

P01 = Pattern.parse("01")
P10 = Pattern.parse("10")
P00 = Pattern.parse("00")
P012 = Pattern.parse("012")
P212 = Pattern.parse("21-2")


def test_red():
    assert red((2, 3, 8, 5, 4, 3, 6, 2, 3)) == (0, 1, 5, 3, 2, 1, 4, 0, 1)
    assert red((0, 0, 0)) == (0, 0, 0)
    assert red((7,)) == (0,)
    assert red(()) == ()


def test_pattern_parse():
    assert P012.letters == (0, 1, 2) and P012.is_classical
    assert P212.letters == (1, 0, 1)
    assert P212.groups == ((0, 1), (2,))
    assert str(P212) == "10-1"
    assert str(Pattern.parse("00")) == "00"
    for bad in ("", "1-", "-1", "2--1", "ab"):
        with pytest.raises(ValueError):
            Pattern.parse(bad)


def test_pattern_invariants():
    with pytest.raises(ValueError):
        Pattern((1, 2), ((0,), (1,)))           # not reduced
    with pytest.raises(ValueError):
        Pattern((0, 1), ((1,), (0,)))           # groups out of order


def test_occurs_classical():
    assert occurs(P012, (0, 1, 0, 2))
    assert not occurs(P012, (0, 2, 0, 2))
    assert occurs(P00, (0, 1, 2, 0))
    assert not occurs(P00, (0, 1, 2))
    assert occurs(P10, (0, 1, 0))
    assert not occurs(P10, (0, 0, 1))


def test_occurs_vincular():
    # 21-2 needs an adjacent descent whose top value recurs strictly later
    assert occurs(P212, (2, 1, 2))
    assert occurs(P212, (2, 1, 0, 2))
    assert occurs(P212, (2, 0, 1, 2))
    assert occurs(P212, (3, 1, 3))
    assert occurs(P212, (0, 2, 1, 0, 2))
    assert not occurs(P212, (2, 1, 1))      # top value never recurs
    assert not occurs(P212, (2, 2, 1))
    assert not occurs(P212, (1, 2, 0, 1))   # the only descent (2,0) never returns to 2


def test_vincular_adjacency_is_enforced():
    # classical 101 occurs (positions 1, 3, 5) but no descent is adjacent
    host = (1, 2, 0, 3, 1)
    assert occurs(Pattern.classical((1, 0, 1)), host)
    assert not occurs(P212, host)


def test_avoid_00_means_all_distinct():
    for n in range(6):
        for seq in enumerate_sequences(3, n):
            w = seq.letters
            assert (not occurs(P00, w)) == (len(set(w)) == len(w))


@pytest.mark.parametrize(
    "p,pat,row",
    [
        (2, P012, gold.AVOID_2_012),
        (3, P012, gold.AVOID_3_012),
        (2, P10, gold.AVOID_2_10),
        (4, P00, gold.AVOID_4_00),
    ],
)
def test_printed_avoider_rows(p, pat, row):
    counts = avoider_counts(p, pat, len(row))
    assert counts[1:] == row


def test_printed_avoiders_3_00_bruteforce_range():
    assert avoider_counts(3, P00, 10)[1:] == gold.AVOID_3_00[:10]


def test_avoid_01_is_all_zero_words():
    for p in (1, 2, 4):
        assert avoider_counts(p, P01, 6) == [1] * 7
        assert avoider_counts(p, P01, 6, primitive_only=True) == [1, 1, 0, 0, 0, 0, 0]


def test_count_avoiders_single_value():
    assert count_avoiders(4, P00, 8) == 3794
    assert count_avoiders(2, P10, 3) == 8
    assert count_avoiders(2, P012, 0) == 1


def test_closed_count_examples():
    assert closed_count(2, P00, 5) == 11
    assert closed_count(2, P00, 5) == count_avoiders(2, P00, 5)
    assert closed_count(3, P012, 4) == 38
    assert closed_count(2, P10, 3) == 8
    assert [closed_count(4, P012, n) for n in range(1, 11)] == gold.AVOID_4_012


def test_closed_count_matches_brute_force():
    cases = [
        (P01, (1, 2, 3, 4), False), (P01, (1, 2, 3, 4), True),
        (P10, (1, 2, 3, 4), False), (P10, (1, 2, 3, 4), True),
        (P00, (2, 3), False), (P00, (2, 3), True),
        (P012, (2, 3, 4), False),
    ]
    for pat, ps, prim in cases:
        for p in ps:
            brute = avoider_counts(p, pat, 7, primitive_only=prim)
            closed = [closed_count(p, pat, n, primitive_only=prim) for n in range(8)]
            assert closed == brute, (str(pat), p, prim)


def test_closed_count_recursion_consistent_with_closed_forms():
    from pascent.patterns import _a012

    for p in (2, 3, 4):
        for n in range(1, 10):
            assert _a012(n, p) == closed_count(p, P012, n)
    # p = 5 only has the recursion; check it against brute force
    assert [closed_count(5, P012, n) for n in range(7)] == avoider_counts(5, P012, 6)


def test_closed_count_unsupported():
    with pytest.raises(NoClosedFormError):
        closed_count(4, P00, 5)
    with pytest.raises(NoClosedFormError):
        closed_count(1, P012, 5)
    with pytest.raises(NoClosedFormError):
        closed_count(2, P012, 5, primitive_only=True)
    with pytest.raises(NoClosedFormError):
        closed_count(2, Pattern.parse("001"), 4)


def test_gf_avoiders_10():
    got = scalar_coefficients(gf_avoiders(2, P10, 7))
    assert got == [1] + gold.AVOID_2_10
    prim = gf_avoiders(3, P10, 6, primitive_only=True)
    assert scalar_coefficients(prim)[4] == 10
    for p in (1, 2, 3, 4):
        for prim_flag in (False, True):
            series = gf_avoiders(p, P10, 8, primitive_only=prim_flag)
            assert scalar_coefficients(series) == avoider_counts(p, P10, 8, prim_flag)


def test_gf_avoiders_00_p3():
    got = scalar_coefficients(gf_avoiders(3, P00, 12))
    assert got[1:] == gold.AVOID_3_00


def test_gf_avoiders_01():
    assert scalar_coefficients(gf_avoiders(2, P01, 5)) == [1] * 6
    assert scalar_coefficients(gf_avoiders(2, P01, 5, primitive_only=True)) == [1, 1, 0, 0, 0, 0]


def test_gf_avoiders_unsupported():
    with pytest.raises(NoClosedFormError):
        gf_avoiders(2, P00, 5)
    with pytest.raises(NoClosedFormError):
        gf_avoiders(2, P012, 5)


def test_repetition_refinement_identity():
    from math import comb

    for p in (1, 2, 3, 4):
        brute = avoider_counts(p, P10, 10)
        for n in range(1, 11):
            total = sum(
                comb(n - 1, s - 1) * closed_count(p, P10, s, primitive_only=True)
                for s in range(1, n + 1)
            )
            assert total == brute[n]


def test_embed_project():
    assert embed(PAscentSequence(2, (0, 2, 0))).letters == (0, 1, 0, 2, 0)
    assert embed(PAscentSequence(1, (0, 1, 1))).letters == (0, 1, 1)
    assert embed(PAscentSequence(3, ())).letters == ()
    assert project(PAscentSequence(1, ()), 3).letters == ()
    seq = PAscentSequence(3, (0, 3, 1))
    assert project(embed(seq), 3) == seq
    with pytest.raises(ValueError):
        project(PAscentSequence(1, (0, 0, 1)), 2)   # prefix is 00, not 01
    with pytest.raises(ValueError):
        project(PAscentSequence(2, (0, 1, 0)), 2)   # input must have p = 1


def test_embed_validity_equivalence_small():
    for p in (2, 3):
        for n in range(6):
            ours = {s.letters for s in enumerate_sequences(p, n)}
            for seq in ours:
                assert is_p_ascent((0, 1) * (p - 1) + seq, 1)
            prefix = (0, 1) * (p - 1) + (0,)
            if n >= 1:
                images = {
                    s.letters[2 * p - 2 :]
                    for s in enumerate_sequences(1, n + 2 * p - 2, prefix=prefix)
                }
                assert images == ours


def test_bijection_examples():
    assert bijection_10_to_012(PAscentSequence(2, (0, 1, 1, 2))).letters == (0, 2, 0, 2)
    assert bijection_10_to_012(PAscentSequence(2, (0,))).letters == (0,)
    assert bijection_10_to_012(PAscentSequence(2, ())).letters == ()
    assert bijection_10_to_012(PAscentSequence(2, (0, 2, 3))).letters == (0, 1, 1)
    assert bijection_012_to_10(PAscentSequence(2, (0, 1))).letters == (0, 2)


def test_bijection_rejects_bad_input():
    with pytest.raises(ValueError):
        bijection_10_to_012(PAscentSequence(2, (0, 1, 0)))   # contains 10
    with pytest.raises(ValueError):
        bijection_10_to_012(PAscentSequence(1, (0, 1)))      # wrong p
    with pytest.raises(ValueError):
        bijection_012_to_10(PAscentSequence(2, (0, 1, 2)))   # contains 012


def test_bijection_is_bijection_small():
    for n in range(9):
        source = list(iter_avoiders(2, P10, n))
        target = {s.letters for s in iter_avoiders(2, P012, n)}
        images = {bijection_10_to_012(s).letters for s in source}
        assert images == target
        for seq in source:
            assert bijection_012_to_10(bijection_10_to_012(seq)) == seq
        expected = (n + 1) * 2 ** (n - 2) if n >= 2 else 1
        assert len(source) == len(target) == expected


def test_vincular_counts():
    assert count_vincular_212_ternary(1) == 1
    assert count_vincular_212_ternary(2) == 3
    assert count_vincular_212_ternary(5) == 57
    for n in range(1, 8):
        assert count_vincular_212_ternary(n) == count_avoiders(3, P00, n)


def test_vincular_fast_check_matches_generic_occurs():
    from itertools import product

    for length in range(6):
        expected = sum(
            1 for w in product((1, 2, 3), repeat=length) if not occurs(P212, w)
        )
        assert count_vincular_212_ternary(length + 1) == expected
