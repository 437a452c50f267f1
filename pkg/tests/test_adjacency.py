import itertools
from fractions import Fraction

import pytest

from conftest import brute_value, labelings
from cutcones.adjacency import (
    Certificate,
    NotAdjacentError,
    Reason,
    adjacent,
    certificate,
    is_crossing,
    max_certificate,
    min_certificate,
    nested_sides,
    symdiff_one,
    verify_certificate,
)
from cutcones.core import Instance, Sense, cut_from_vertices, enumerate_cuts


def cut(vs, n):
    return cut_from_vertices(vs, n)


def brute_crossing(n, a, b):
    v = set(range(n))
    return any(p & q and p - q and q - p and v - (p | q) for p, q in labelings(n, a, b))


def brute_min_symdiff(n, a, b):
    return min(len(p ^ q) for p, q in labelings(n, a, b))


def brute_values(n, weights):
    return {c: brute_value(n, weights, c.vertices()) for c in enumerate_cuts(n)}


# --- crossing / symmetric difference ---------------------------------------

@pytest.mark.parametrize("n, a, b, expected", [
    (4, [0, 1], [1, 2], True),
    (4, [0], [0, 1], False),
    (5, [1, 2], [3, 4], False),
])
def test_is_crossing_examples(n, a, b, expected):
    assert brute_crossing(n, a, b) == expected
    assert is_crossing(cut(a, n), cut(b, n)) == expected


@pytest.mark.parametrize("n, a, b, expected", [
    (5, [1], [1, 2], True),
    (4, [1], [2, 3], True),
    (6, [1, 2], [3, 4], False),
])
def test_symdiff_one_examples(n, a, b, expected):
    assert (brute_min_symdiff(n, a, b) == 1) == expected
    assert symdiff_one(cut(a, n), cut(b, n)) == expected


def test_min_symdiff_of_disjoint_pairs_in_k6():
    # {1,2} vs {3,4}: the complement labelling gives {0,5}
    assert brute_min_symdiff(6, [1, 2], [3, 4]) == 2


def test_criteria_match_set_oracle_exhaustively():
    for n in range(2, 8):
        cuts = enumerate_cuts(n)
        for x, y in itertools.combinations(cuts, 2):
            a, b = x.vertices(), y.vertices()
            assert is_crossing(x, y) == brute_crossing(n, a, b)
            assert symdiff_one(x, y) == (brute_min_symdiff(n, a, b) == 1)


def test_mismatched_n_rejected():
    with pytest.raises(ValueError):
        is_crossing(cut([1], 4), cut([1], 5))
    with pytest.raises(ValueError):
        symdiff_one(cut([1], 4), cut([1], 5))


# --- adjacency verdicts -----------------------------------------------------

def test_adjacent_examples():
    v = adjacent(cut([1], 5), cut([1, 2], 5), Sense.MIN)
    assert v.adjacent and v.reason is Reason.NOT_CROSSING
    v = adjacent(cut([2, 3], 4), cut([1, 2], 4), "min")
    assert not v.adjacent and v.reason is Reason.CROSSING
    v = adjacent(cut([1, 2], 6), cut([3, 4], 6), Sense.MAX)
    assert not v.adjacent and v.reason is Reason.SYMDIFF_LARGE


def test_adjacent_rejects_equal_cuts():
    with pytest.raises(ValueError):
        adjacent(cut([1], 4), cut([0, 2, 3], 4), Sense.MIN)


def test_adjacency_is_symmetric_and_branches_are_disjoint():
    for n in range(3, 8):
        for x, y in itertools.combinations(enumerate_cuts(n), 2):
            for s in Sense:
                assert adjacent(x, y, s) == adjacent(y, x, s)
            assert not (is_crossing(x, y) and symdiff_one(x, y))


def test_verdict_reason_consistency():
    for x, y in itertools.combinations(enumerate_cuts(6), 2):
        v = adjacent(x, y, Sense.MAX)
        assert v.adjacent == (v.reason in (Reason.CROSSING, Reason.SYMDIFF_ONE))


def test_nested_sides_is_a_strict_inclusion():
    for n in range(3, 7):
        full = 2 ** n - 1
        for x, y in itertools.combinations(enumerate_cuts(n), 2):
            nested = nested_sides(x, y)
            if is_crossing(x, y):
                assert nested is None
                continue
            s, t = nested
            assert s != t and s & ~t == 0
            assert {s, full ^ s} in ({x.mask, full ^ x.mask}, {y.mask, full ^ y.mask})


# --- certificates -----------------------------------------------------------

def test_min_certificate_n4_nested():
    cert = min_certificate(cut([1], 4), cut([1, 2], 4))
    inst = cert.instance
    assert inst.weight(1, 2) == 2
    assert inst.weight(2, 0) == inst.weight(2, 3) == 1
    assert inst.weight(1, 0) == inst.weight(1, 3) == Fraction(1, 2)
    assert inst.weight(0, 3) == 4
    vals = brute_values(4, inst.weights)
    assert vals[cut([1], 4)] == vals[cut([1, 2], 4)] == 3
    assert vals[cut([2], 4)] == 4
    others = [v for c, v in vals.items() if c not in (cut([1], 4), cut([1, 2], 4), cut([2], 4))]
    # brute force: {3} and {0} give 11/2, {1,3} and {2,3} give 15/2
    assert sorted(others) == [Fraction(11, 2)] * 2 + [Fraction(15, 2)] * 2
    assert verify_certificate(cert)


def test_min_certificate_n5():
    cert = min_certificate(cut([1], 5), cut([1, 2, 3], 5))
    vals = brute_values(5, cert.weights)
    assert vals[cut([1], 5)] == vals[cut([1, 2, 3], 5)] == 3
    assert vals[cut([2, 3], 5)] == 4
    assert verify_certificate(cert)


def test_min_certificate_disjoint_pair_normalised():
    x, y = cut([1], 4), cut([2, 3], 4)
    cert = min_certificate(x, y)
    vals = brute_values(4, cert.weights)
    assert vals[x] == vals[y] == 3
    assert all(v > 3 for c, v in vals.items() if c not in (x, y))


def test_max_certificate_crossing_n4():
    x, y = cut([2, 3], 4), cut([1, 2], 4)
    cert = max_certificate(x, y)
    inst = cert.instance
    assert inst.weight(1, 3) == 1 and inst.weight(0, 2) == 1
    assert inst.total() == 2
    vals = brute_values(4, inst.weights)
    assert vals[x] == vals[y] == 2
    assert all(v <= 1 for c, v in vals.items() if c not in (x, y))


def test_max_certificate_symdiff_n4():
    x, y = cut([1], 4), cut([1, 2], 4)
    inst = max_certificate(x, y).instance
    assert inst.weight(1, 0) == inst.weight(1, 3) == Fraction(1, 2)
    assert inst.total() == 1
    vals = brute_values(4, inst.weights)
    assert vals[x] == vals[y] == 1
    assert vals[cut([2], 4)] == 0 and vals[cut([3], 4)] == Fraction(1, 2)
    assert all(v < 1 for c, v in vals.items() if c not in (x, y))


def test_max_certificate_crossing_n5():
    x, y = cut([1, 2], 5), cut([2, 3], 5)
    inst = max_certificate(x, y).instance
    assert inst.weight(2, 0) == inst.weight(2, 4) == Fraction(1, 2)
    assert inst.weight(1, 3) == 1
    vals = brute_values(5, inst.weights)
    assert vals[x] == vals[y] == 2
    assert all(v < 2 for c, v in vals.items() if c not in (x, y))


def test_certificates_refused_for_non_adjacent_pairs():
    with pytest.raises(NotAdjacentError):
        min_certificate(cut([1, 2], 4), cut([2, 3], 4))
    with pytest.raises(NotAdjacentError):
        max_certificate(cut([1, 2], 6), cut([3, 4], 6))


def test_verify_certificate_rejects_flipped_sense_and_zero_weights():
    cert = min_certificate(cut([1], 4), cut([1, 2], 4))
    assert verify_certificate(cert)
    flipped = Certificate(cert.instance, cert.pair, Sense.MAX)
    check = verify_certificate(flipped)
    assert not check and check.violator is not None
    zero = Certificate(Instance.uniform(4, 0), cert.pair, Sense.MIN)
    assert not verify_certificate(zero)


def test_certificate_exists_iff_adjacent():
    for n in range(3, 8):
        for x, y in itertools.combinations(enumerate_cuts(n), 2):
            for s in Sense:
                if adjacent(x, y, s):
                    cert = certificate(x, y, s)
                    assert all(w >= 0 for w in cert.weights)
                    assert verify_certificate(cert), (n, x, y, s)
                else:
                    with pytest.raises(NotAdjacentError):
                        certificate(x, y, s)


def test_verify_certificate_agrees_with_brute_force_on_n4():
    for x, y in itertools.combinations(enumerate_cuts(4), 2):
        for s in Sense:
            if not adjacent(x, y, s):
                continue
            cert = certificate(x, y, s)
            vals = brute_values(4, cert.weights)
            tie = vals[x]
            better = (lambda v: v > tie) if s is Sense.MIN else (lambda v: v < tie)
            assert vals[y] == tie
            assert all(better(v) for c, v in vals.items() if c not in (x, y))
