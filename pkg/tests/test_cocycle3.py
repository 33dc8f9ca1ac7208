"""Degree-3 cocycles, the basis census and central-quotient classes."""

import pytest

from nilcoh.cochain import coboundary, cup, Cochain
from nilcoh.cocycle3 import (
    CentralQuotientGroup,
    b_correction,
    b_correction_printed,
    census_basis3,
    cobounding_identity_sides,
    corrected_3cocycle,
    corrected_3cocycle_printed,
    corrected_3cocycle_via_coboundary,
    gamma3,
    h3_rank,
    lattice_contains,
    phi_cocycle,
    triple_massey,
    triple_massey_obstructions,
)
from nilcoh.sampling import derive_rng, random_deep_element, random_word
from nilcoh.words import (
    commutator,
    generator,
    parse_word,
    standard_commutator,
    standard_sequences,
    witt_number,
)


def _tuples(rng, q, n, arity):
    for _ in range(n):
        yield tuple(random_word(rng, q) for _ in range(arity))


def test_gamma3_is_cocycle():
    rng = derive_rng(31, "gamma3-cocycle")
    q, k = 2, 3
    for I in standard_sequences(q, k):
        for s in (1, 2):
            d = coboundary(gamma3(s, I, k))
            for args in _tuples(rng, q, 40, 4):
                assert d(*args) == 0


def test_gamma3_descends():
    rng = derive_rng(32, "gamma3-descend")
    q, k = 2, 3
    for I in standard_sequences(q, k):
        f = gamma3(1, I, k)
        for args in _tuples(rng, q, 40, 3):
            x, y, z = args
            d = random_deep_element(rng, q, k)
            assert f(x, y, z) == f(x * d, y, z) == f(x, y * d, z) == f(x, y, z * d)


def test_corrected_3cocycle_matches_coboundary_path():
    rng = derive_rng(33, "corrected-match")
    q, k = 2, 3
    for I in standard_sequences(q, k + 1):
        for s in (1, 2):
            closed = corrected_3cocycle(s, I, k)
            via = corrected_3cocycle_via_coboundary(s, I, k)
            for args in _tuples(rng, q, 30, 3):
                assert closed(*args) == via(*args), (s, I, args)


def test_corrected_3cocycle_is_cocycle_and_descends():
    rng = derive_rng(34, "corrected-cocycle")
    q, k = 2, 3
    for I in standard_sequences(q, k + 1):
        f = corrected_3cocycle(1, I, k)
        d = coboundary(f)
        for args in _tuples(rng, q, 30, 4):
            assert d(*args) == 0
        for args in _tuples(rng, q, 30, 3):
            x, y, z = args
            dp = random_deep_element(rng, q, k)
            assert f(x, y, z) == f(x * dp, y, z) == f(x, y, z * dp)


def test_printed_correction_fails_descent():
    # documented discrepancy: the verbatim middle sign leaves a
    # length-k coefficient word, so the difference does not descend
    rng = derive_rng(35, "printed-correction")
    q, k = 2, 3
    I = standard_sequences(q, k + 1)[0]
    inner = corrected_3cocycle_via_coboundary(1, I, k)
    db_printed = coboundary(b_correction_printed(1, I, k))
    db = coboundary(b_correction(1, I, k))
    differs = False
    for args in _tuples(rng, q, 80, 3):
        if db_printed(*args) != db(*args):
            differs = True
            break
    assert differs


def test_census_values_and_rank():
    census = census_basis3(2, 3)
    assert census.total_rank == 1
    by_ell = {sl.ell: sl for sl in census.slices}
    assert by_ell[3].count == 1 and len(by_ell[3].pairs) == 2
    assert by_ell[4].count == 0 and len(by_ell[4].pairs) == 3
    # the printed filter overcounts the rank from (q, ell) = (2, 3) on
    assert len(by_ell[3].pairs) > by_ell[3].count


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("k", [3, 4, 5])
def test_census_rank_formula(q, k):
    census = census_basis3(q, k)
    for sl in census.slices:
        assert sl.count == q * witt_number(q, sl.ell) - witt_number(q, sl.ell + 1)
    assert census.total_rank == h3_rank(q, k)


def test_lattice_contains_basic():
    cols = [(2, 0), (0, 3)]
    assert lattice_contains(cols, (4, 3))
    assert not lattice_contains(cols, (1, 0))
    assert lattice_contains(cols, (0, 0))


G = CentralQuotientGroup(q=2, k=3, relators=((1, 1, 2),))


def test_quotient_equality():
    rel = standard_commutator((1, 1, 2))
    assert G.equal(rel, parse_word("1"))
    assert G.equal(rel * rel, parse_word("1"))
    assert not G.equal(standard_commutator((1, 2, 2)), parse_word("1"))
    # F_4 collapses entirely
    deep = commutator(standard_commutator((1, 1, 2)), generator(2))
    assert G.equal(deep, parse_word("1"))


def test_phi_representative_independence():
    rng = derive_rng(36, "phi-indep")
    phi = phi_cocycle(G, 0)
    for _ in range(120):
        g, h = random_word(rng, 2), random_word(rng, 2)
        moved = G.perturb(g, 0, rng.choice((-2, -1, 1, 2)))
        assert phi(g, h) == phi(moved, h)
        moved_h = G.perturb(h, 0, rng.choice((-1, 1)))
        assert phi(g, h) == phi(g, moved_h)


def test_phi_is_cocycle():
    rng = derive_rng(37, "phi-cocycle")
    d = coboundary(phi_cocycle(G, 0))
    for args in _tuples(rng, 2, 80, 3):
        assert d(*args) == 0


@pytest.mark.parametrize("r,s", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_cobounding_identities(r, s):
    rng = derive_rng(38, "cobounding")
    first, second = cobounding_identity_sides(G, r, 0, s)
    for args in _tuples(rng, 2, 70, 3):
        assert first[0](*args) == first[1](*args), (r, s, args)
        assert second[0](*args) == second[1](*args), (r, s, args)


def test_triple_massey_insufficient_precondition_detected():
    # the worked (r, s) = (2, 1) case on relator 112 carries nonzero
    # descent obstructions even though the index precondition holds
    obstructions = triple_massey_obstructions(G, 2, 0, 1)
    assert obstructions


def test_triple_massey_on_obstruction_free_example():
    H = CentralQuotientGroup(q=3, k=3, relators=((1, 2, 3),))
    assert not triple_massey_obstructions(H, 2, 0, 2)
    f = triple_massey(H, 2, 0, 2)
    d = coboundary(f)
    rng = derive_rng(39, "triple-free")
    for args in _tuples(rng, 3, 50, 4):
        assert d(*args) == 0
    for _ in range(50):
        x, y, z = (random_word(rng, 3) for _ in range(3))
        moved = H.perturb(y, 0, rng.choice((-1, 1)))
        assert f(x, y, z) == f(x, moved, z)
