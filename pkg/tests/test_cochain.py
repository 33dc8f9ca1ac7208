"""Bar-complex cochains, Massey 2-cocycles, extensions and pairings."""

import pytest

from nilcoh.cochain import (
    Cochain,
    coboundary,
    cup,
    defining_system,
    defining_system_sides,
    evaluate_word_in_extension,
    extension_identity,
    extension_lift,
    massey2,
    pairing,
    s_map,
    splitting_cochain,
)
from nilcoh.magnus import c, equal_mod_Fk
from nilcoh.sampling import derive_rng, random_deep_element, random_word
from nilcoh.words import Word, generator, parse_word, standard_commutator, standard_sequences


def test_coboundary_squares_to_zero():
    rng = derive_rng(21, "dd-zero")
    f = Cochain.functional((1, 2))
    ddf = coboundary(coboundary(f))
    for _ in range(40):
        args = tuple(random_word(rng, 2) for _ in range(3))
        assert ddf(*args) == 0


def test_cup_bilinear_sign():
    # degree (1,1) cup carries the (-1)^{pq} prefactor
    a, b = Cochain.functional((1,)), Cochain.functional((2,))
    x, y = generator(1), generator(2)
    assert cup(a, b)(x, y) == -1
    assert cup(b, a)(x, y) == 0


def test_massey2_is_cocycle():
    rng = derive_rng(22, "massey2-cocycle")
    for q, k in ((2, 2), (2, 3), (2, 4)):
        for I in standard_sequences(q, k):
            d = coboundary(massey2(I, k))
            for _ in range(60):
                args = tuple(random_word(rng, q) for _ in range(3))
                assert d(*args) == 0, (I, args)


def test_massey2_descends_to_quotient():
    rng = derive_rng(23, "massey2-descend")
    for q, k in ((2, 3), (2, 4)):
        for I in standard_sequences(q, k):
            f = massey2(I, k)
            for _ in range(40):
                x, y = random_word(rng, q), random_word(rng, q)
                d = random_deep_element(rng, q, k)
                assert f(x, y) == f(x * d, y) == f(x, d * y)


def test_defining_system_compatibility():
    rng = derive_rng(24, "defining-compat")
    for q, k in ((2, 3), (2, 4)):
        for I in standard_sequences(q, k):
            for s in range(1, k + 1):
                for t in range(s, k + 1):
                    if (s, t) == (1, k):
                        continue
                    lhs, rhs = defining_system_sides(I, k, s, t)
                    for _ in range(20):
                        x, y = random_word(rng, q), random_word(rng, q)
                        assert lhs(x, y) == rhs(x, y), (I, s, t)


def test_defining_system_shape():
    sys = defining_system((1, 1, 2), 3)
    assert (1, 3) not in sys
    assert set(sys) == {(1, 1), (2, 2), (3, 3), (1, 2), (2, 3)}


def test_lower_splitting_is_coboundary():
    # for |J| < k the splitting cochain cobounds via -d(c_J)
    rng = derive_rng(25, "lower-vanish")
    for J in ((1, 2), (1, 1, 2)):
        f = splitting_cochain(J)
        g = coboundary(Cochain.functional(J)).scale(-1)
        for _ in range(60):
            x, y = random_word(rng, 2), random_word(rng, 2)
            assert f(x, y) == g(x, y)


def test_extension_group_law():
    rng = derive_rng(26, "extension-law")
    q, k = 2, 3
    e = extension_identity(q, k)
    for _ in range(60):
        a = evaluate_word_in_extension(random_word(rng, q), q, k)
        b = evaluate_word_in_extension(random_word(rng, q), q, k)
        cth = evaluate_word_in_extension(random_word(rng, q), q, k)
        assert (a * b) * cth == a * (b * cth)
        assert a * a.inverse() == e
        assert a.inverse() * a == e


def test_extension_equality_matches_next_level():
    rng = derive_rng(27, "extension-equality")
    for q, k in ((2, 2), (2, 3)):
        for _ in range(150):
            u, v = random_word(rng, q), random_word(rng, q)
            same = evaluate_word_in_extension(u, q, k) == evaluate_word_in_extension(
                v, q, k
            )
            assert same == equal_mod_Fk(u, v, k + 1)


@pytest.mark.parametrize("q,k", [(2, 2), (2, 3), (2, 4), (2, 5), (3, 3), (3, 4), (3, 5)])
def test_s_map_identity_on_standard_commutators(q, k):
    seqs = standard_sequences(q, k)
    for pos, I in enumerate(seqs):
        fiber = s_map(standard_commutator(I), q, k)
        assert fiber == tuple(1 if j == pos else 0 for j in range(len(seqs)))


def test_pairing_requires_depth():
    with pytest.raises(ValueError):
        pairing((1, 2), generator(1))


def test_pairing_agrees_with_extension_fiber():
    rng = derive_rng(28, "pairing-fiber")
    for q, k in ((2, 3), (3, 3)):
        seqs = standard_sequences(q, k)
        for _ in range(100):
            w = random_deep_element(rng, q, k)
            fiber = s_map(w, q, k)
            for pos, I in enumerate(seqs):
                assert pairing(I, w) == fiber[pos]


def test_pairing_borromean_style_value():
    w = parse_word("abAB")
    assert pairing((1, 2), w) == 1
    assert pairing((2, 1), w) == -1
