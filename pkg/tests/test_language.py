import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import (
    Z, Z2, brute_loc, brute_valid_colorings, checkerboard_contradiction, full_shift, golden,
    golden_ratio_entropy, occurs, random_sft,
)
from subshifts.errors import ResourceLimit
from subshifts.groups import FreeGroup, cyclic_group
from subshifts.patterns import PatternCoding, realize
from subshifts.sft import (
    EmptyAt, NonemptyWitness, SftPresentation, Unknown, check_empty, entropy_upper_bound,
    fixed_points, has_fixed_point, locally_admissible, periodic_witness, satisfiable_on,
)
from subshifts.sft.language import box

F2 = FreeGroup(2)


def test_full_shift_language_is_everything():
    for G, n in ((Z, 2), (Z2, 1), (F2, 1)):
        X = full_shift(G, 2)
        assert len(locally_admissible(X, n, 1)) == 2 ** len(G.ball(n))


def test_golden_mean_loc1():
    L = locally_admissible(golden(), 1, 0)
    words = {tuple(dict(zip(L.support, p))[(i,)] for i in (-1, 0, 1)) for p in L}
    assert words == {(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 0, 1)}


def test_checkerboard_contradiction_loc_matches_brute_force():
    # Taken literally the rules admit the two-colour checkerboard, so Loc_1 is not empty.
    X = checkerboard_contradiction()
    assert set(locally_admissible(X, 1, 1)) == brute_loc(X, 1, 1)
    assert len(brute_loc(X, 1, 1)) == 2


@pytest.mark.parametrize("seed", range(25))
def test_loc_matches_brute_force(seed):
    rng = random.Random(seed)
    G = Z if seed % 2 else Z2
    X = random_sft(rng, G, max_cells=3)
    n, m = (rng.randint(0, 2), rng.randint(0, 1)) if G is Z else (rng.randint(0, 1), rng.randint(0, 1))
    assert set(locally_admissible(X, n, m)) == brute_loc(X, n, m)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_loc_monotone(seed):
    rng = random.Random(seed)
    X = random_sft(rng, Z, max_cells=3)
    for n in range(3):
        L = locally_admissible(X, n, 0)
        big = locally_admissible(X, n + 1, 0)
        assert big.restrict(L.support) <= set(L)
        assert set(locally_admissible(X, n, 1)) <= set(L)


def test_single_cell_forbidding_everything_is_empty_at_zero():
    X = SftPresentation(Z2, (0, 1), (PatternCoding(((),), (0,)), PatternCoding(((),), (1,))))
    assert check_empty(X) == EmptyAt(0)


def test_full_shift_has_constant_witness():
    cert = check_empty(full_shift(Z2, 3))
    assert cert == NonemptyWitness("fixed-point", 0)


def test_corrected_checkerboard_is_empty():
    forb = [PatternCoding(((), (s,)), (a, a)) for s in ("x1", "x2") for a in (0, 1)]
    forb += [PatternCoding(((), ("x1", "x2")), (a, a)) for a in (0, 1)]
    X = SftPresentation(Z2, (0, 1), tuple(forb))
    cert = check_empty(X)
    assert isinstance(cert, EmptyAt) and cert.radius <= 2


def _empty_sound(X, cert):
    G = X.group
    window = list(G.ball(cert.radius + X.max_support_radius()))
    # no colouring of the certified ball survives
    assert next(brute_valid_colorings(X, G.ball(cert.radius)), None) is None
    assert next(brute_valid_colorings(X, window), None) is None


@pytest.mark.parametrize("seed", range(40))
def test_empty_certificates_are_sound(seed):
    rng = random.Random(1000 + seed)
    G = Z if seed % 2 else Z2
    X = random_sft(rng, G, k=2, n_forbidden=rng.randint(3, 7), max_cells=2)
    cert = check_empty(X, max_radius=3, max_lookahead=1)
    if isinstance(cert, EmptyAt):
        if len(G.ball(cert.radius + X.max_support_radius())) <= 13:
            _empty_sound(X, cert)
    elif isinstance(cert, NonemptyWitness):
        if cert.kind == "fixed-point":
            assert cert.witness in fixed_points(X)
        elif cert.kind == "periodic":
            _check_periodic(X, cert.period, cert.witness)


def _check_periodic(X, periods, pattern):
    G = X.group
    vals = pattern.as_dict()

    def colour(g):
        return vals[tuple(a % p for a, p in zip(g, periods))]

    pats = [realize(c, G) for c in X.forbidden]
    span = X.max_support_radius() + max(periods)
    window = {g: colour(g) for g in box(G.d, -span, span + max(periods))}
    assert not occurs(G, pats, window)


def test_periodic_witness_checkerboard():
    X = checkerboard_contradiction()
    periods, pat = periodic_witness(X)
    assert periods == (2, 2)
    _check_periodic(X, periods, pat)


def test_finite_group_is_decided():
    C4 = cyclic_group(4)
    X = SftPresentation(C4, (0, 1), (PatternCoding(((), ("g",)), (0, 0)), PatternCoding(((), ("g",)), (1, 1))))
    cert = check_empty(X)
    assert isinstance(cert, NonemptyWitness) and cert.kind == "finite-group"
    C3 = cyclic_group(3)
    Y = SftPresentation(C3, (0, 1), X.forbidden)
    assert isinstance(check_empty(Y), EmptyAt)


def test_undecided_returns_unknown():
    # constant 1 survives here
    X = SftPresentation(F2, (0, 1), (PatternCoding(((),), (0,)), PatternCoding(((), ("a",)), (1, 0))))
    cert = check_empty(X, max_radius=1, max_lookahead=0)
    assert isinstance(cert, NonemptyWitness)
    # proper 2-colouring along a: nonempty, but with no constant or finite witness
    Y = SftPresentation(F2, (0, 1), (PatternCoding(((), ("a",)), (0, 0)), PatternCoding(((), ("a",)), (1, 1))))
    assert isinstance(check_empty(Y, max_radius=1, max_lookahead=0), Unknown)


def test_fixed_points_examples():
    assert has_fixed_point(full_shift(Z, 2))
    X = SftPresentation(Z, (0, 1, 2), tuple(PatternCoding(((), ("x1",)), (a, a)) for a in (0, 1, 2)))
    assert not has_fixed_point(X)
    assert fixed_points(golden()) == [0]


def test_satisfiable_on_respects_rules():
    X = golden()
    p = satisfiable_on(X, [(i,) for i in range(6)])
    vals = [p[(i,)] for i in range(6)]
    assert all(not (a == 1 and b == 1) for a, b in zip(vals, vals[1:]))


def test_entropy_bound_examples():
    assert entropy_upper_bound(full_shift(Z, 2), 5) == pytest.approx(math.log(2), abs=1e-12)
    assert entropy_upper_bound(full_shift(Z2, 2), 2) == pytest.approx(math.log(2), abs=1e-12)
    h = entropy_upper_bound(golden(), 12)
    assert golden_ratio_entropy() <= h <= golden_ratio_entropy() + 0.05
    assert h == pytest.approx(math.log(377) / 12, abs=1e-12)


def test_entropy_bound_golden_rows_on_z2():
    X = golden(Z2)
    h = entropy_upper_bound(X, 4)
    # F(6)^4 row patterns of length 4 avoiding 11, divided by the box volume
    assert h == pytest.approx(4 * math.log(8) / 16, abs=1e-12)
    assert golden_ratio_entropy() <= h <= math.log(2)


def test_pattern_budget_is_enforced():
    with pytest.raises(ResourceLimit):
        locally_admissible(full_shift(Z, 2), 4, 0, max_patterns=100)
