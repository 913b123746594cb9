import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import Z, Z2, brute_loc, full_shift, golden, golden_ratio_entropy
from subshifts.errors import GroupMismatch
from subshifts.patterns import PatternCoding
from subshifts.sft import (
    EmptyAt, SftPresentation, check_empty, entropy_upper_bound, subshift_distance, z_decide,
)


def short_range_sft(rng):
    """Z-SFT with supports inside {0, 1}, so every word graph has at most 4 vertices."""
    forb = []
    for _ in range(rng.randint(0, 4)):
        if rng.random() < 0.3:
            forb.append(PatternCoding(((),), (rng.randint(0, 1),)))
        else:
            forb.append(PatternCoding(((), ("x1",)), (rng.randint(0, 1), rng.randint(0, 1))))
    return SftPresentation(Z, (0, 1), tuple(forb))


def test_golden_mean_entropy():
    z = z_decide(golden())
    assert not z.empty
    assert abs(z.entropy - golden_ratio_entropy()) < 1e-9


def test_full_shift_entropy():
    assert z_decide(full_shift(Z, 2)).entropy == pytest.approx(math.log(2), abs=1e-12)
    assert z_decide(full_shift(Z, 3)).entropy == pytest.approx(math.log(3), abs=1e-12)


def test_forbidding_both_symbols_is_empty():
    X = SftPresentation(Z, (0, 1), (PatternCoding(((),), (0,)), PatternCoding(((),), (1,))))
    z = z_decide(X)
    assert z.empty and z.language(2) == ()


def test_entropy_zero_for_periodic_only():
    # 0 -> 1 -> 0 forced: only the two alternating points
    X = SftPresentation(Z, (0, 1), (PatternCoding(((), ("x1",)), (0, 0)), PatternCoding(((), ("x1",)), (1, 1))))
    z = z_decide(X)
    assert z.entropy == pytest.approx(0.0, abs=1e-12)
    assert len(z.language(3)) == 2


@pytest.mark.parametrize("seed", range(40))
def test_language_matches_extension_oracle(seed):
    # Any word that extends 4 steps each way lies on a cycle-reachable path, hence in the language.
    X = short_range_sft(random.Random(seed))
    z = z_decide(X)
    for n in range(3):
        brute = brute_loc(X, n, 4)
        order = list(Z.ball(n))
        pos = [order.index((i,)) for i in range(-n, n + 1)]
        expected = {tuple(p[i] for i in pos) for p in brute}
        assert set(z.language(n)) == expected
    assert z.empty == (not expected)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_emptiness_agrees_with_certificates(seed):
    X = short_range_sft(random.Random(seed))
    cert = check_empty(X, max_radius=3)
    z = z_decide(X)
    assert isinstance(cert, EmptyAt) == z.empty


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_entropy_bound_dominates(seed):
    X = short_range_sft(random.Random(seed))
    z = z_decide(X)
    if z.empty:
        return
    for n in (1, 2, 5, 12):
        assert entropy_upper_bound(X, n) >= z.entropy - 1e-12


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_periodic_word_is_admissible(seed):
    X = short_range_sft(random.Random(seed))
    z = z_decide(X)
    if z.empty:
        assert z.periodic_word() == ()
        return
    p = z.periodic_word()
    row = (p * (10 // len(p) + 2))[:10]
    for a, b in zip(row, row[1:]):
        for c in X.forbidden:
            if len(c) == 2:
                assert (a, b) != c.values
    for a in row:
        assert all(not (len(c) == 1 and c.values == (a,)) for c in X.forbidden)


def test_distance_examples():
    X = golden()
    assert subshift_distance(X, X) == 0
    assert subshift_distance(X, full_shift(Z, 2)) == 1
    assert subshift_distance(full_shift(Z, 2), full_shift(Z, 3)) == 2


def test_distance_is_symmetric():
    rng = random.Random(7)
    for _ in range(20):
        X, Y = short_range_sft(rng), short_range_sft(rng)
        assert subshift_distance(X, Y) == subshift_distance(Y, X)


def test_z_decide_rejects_other_groups():
    with pytest.raises(GroupMismatch):
        z_decide(full_shift(Z2, 2))
