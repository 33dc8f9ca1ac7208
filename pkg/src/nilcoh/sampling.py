"""Deterministic random samplers used by the verification sweeps.

Everything is driven by random.Random seeded explicitly, so a (seed,
parameters) pair pins down every sampled object and failures replay.
"""

from __future__ import annotations

import random

from .words import Word, commutator, generator


def derive_rng(seed: int, *labels) -> random.Random:
    """Child generator with a seed derived from a label path."""
    return random.Random((seed, labels).__repr__())


def random_word(rng: random.Random, q: int, max_len: int = 12) -> Word:
    n = rng.randint(0, max_len)
    return Word(
        tuple(rng.choice((1, -1)) * rng.randint(1, q) for _ in range(n))
    ).normalize()


def random_nontrivial_word(rng: random.Random, q: int, max_len: int = 12) -> Word:
    for _ in range(100):
        w = random_word(rng, q, max_len)
        if w.letters:
            return w
    return generator(1)


def random_weight_commutator(rng: random.Random, q: int, k: int) -> Word:
    """A left-normed commutator [[...[x_a, x_b], ...], x_c] of weight k."""
    if k < 2 or q < 2:
        raise ValueError("need k >= 2 and q >= 2")
    a = rng.randint(1, q)
    b = rng.choice([i for i in range(1, q + 1) if i != a])
    w = commutator(generator(a), generator(b))
    for _ in range(k - 2):
        w = commutator(w, generator(rng.randint(1, q)))
    return w


def random_deep_element(rng: random.Random, q: int, k: int) -> Word:
    """Product of 1 to 3 weight-k commutators; lies in F_k."""
    w = Word()
    for _ in range(rng.randint(1, 3)):
        piece = random_weight_commutator(rng, q, k)
        if rng.random() < 0.3:
            piece = piece.inverse()
        w = w * piece
    return w


def random_torelli_endomorphism(
    rng: random.Random, q: int, k: int
) -> dict[int, Word]:
    """Generator images x_i -> x_i * (element of F_k); some images unchanged."""
    images = {}
    for i in range(1, q + 1):
        if rng.random() < 0.3:
            images[i] = generator(i)
        else:
            images[i] = generator(i) * random_deep_element(rng, q, k)
    return images
