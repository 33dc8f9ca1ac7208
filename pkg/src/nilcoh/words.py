"""Free group words, standard (Lyndon) index sequences and Witt numbers.

Words in the free group on x_1, ..., x_q are stored as tuples of nonzero
signed integers: the letter +i stands for x_i and -i for its inverse.
Index sequences are tuples of generator indices (positive integers).

Two text syntaxes are accepted for words:

* compact: "abAB" means x_1 x_2 x_1^-1 x_2^-1 (a..z are generators 1..26,
  A..Z their inverses);
* explicit: "x1 x2 x1^-1 x2^-1" with whitespace-separated factors.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Word:
    """A (not necessarily reduced) word in a free group."""

    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for a in self.letters:
            if not isinstance(a, int) or a == 0:
                raise ValueError("letters must be nonzero integers, got %r" % (a,))

    def normalize(self) -> "Word":
        """Freely reduce, cancelling adjacent inverse pairs."""
        stack: list[int] = []
        for a in self.letters:
            if stack and stack[-1] == -a:
                stack.pop()
            else:
                stack.append(a)
        return Word(tuple(stack))

    def inverse(self) -> "Word":
        return Word(tuple(-a for a in reversed(self.letters)))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters).normalize()

    def __len__(self) -> int:
        return len(self.letters)

    def is_trivial(self) -> bool:
        return not self.normalize().letters

    def max_index(self) -> int:
        return max((abs(a) for a in self.letters), default=0)

    def __str__(self) -> str:
        return format_word(self)


def generator(i: int) -> Word:
    if i < 1:
        raise ValueError("generator index must be >= 1")
    return Word((i,))


def commutator(u: Word, v: Word) -> Word:
    """[u, v] = u v u^-1 v^-1, freely reduced."""
    return Word(
        u.letters + v.letters + u.inverse().letters + v.inverse().letters
    ).normalize()


_EXPLICIT = re.compile(r"^x(\d+)(?:\^(-?\d+))?$")


def parse_word(text: str) -> Word:
    """Parse either compact ("abAB") or explicit ("x1 x2^-1") word syntax."""
    text = text.strip()
    if not text or text in ("1", "e"):
        return Word()
    if text.split() and all(_EXPLICIT.match(tok) for tok in text.split()):
        letters: list[int] = []
        for tok in text.split():
            m = _EXPLICIT.match(tok)
            assert m is not None
            idx = int(m.group(1))
            if idx < 1:
                raise ValueError("bad generator index in %r" % tok)
            power = int(m.group(2)) if m.group(2) else 1
            sign = 1 if power >= 0 else -1
            letters.extend([sign * idx] * abs(power))
        return Word(tuple(letters))
    letters = []
    for ch in text:
        if "a" <= ch <= "z":
            letters.append(ord(ch) - ord("a") + 1)
        elif "A" <= ch <= "Z":
            letters.append(-(ord(ch) - ord("A") + 1))
        else:
            raise ValueError("cannot parse word %r" % text)
    return Word(tuple(letters))


def format_word(w: Word) -> str:
    """Compact text form; falls back to explicit syntax past index 26."""
    if not w.letters:
        return "1"
    if w.max_index() <= 26:
        out = []
        for a in w.letters:
            out.append(chr(ord("a") + a - 1) if a > 0 else chr(ord("A") - a - 1))
        return "".join(out)
    return " ".join("x%d" % a if a > 0 else "x%d^-1" % -a for a in w.letters)


def parse_index(text: str) -> tuple[int, ...]:
    """Index sequence from "112", "1,1,2" or "aab"."""
    text = text.strip()
    if "," in text:
        seq = tuple(int(p) for p in text.split(","))
    elif text.isdigit():
        seq = tuple(int(ch) for ch in text)
    else:
        seq = tuple(ord(ch) - ord("a") + 1 for ch in text if ch != " ")
    if not seq or any(i < 1 for i in seq):
        raise ValueError("bad index sequence %r" % text)
    return seq


def format_index(seq: Iterable[int]) -> str:
    return "".join(str(i) for i in seq)


@dataclass(frozen=True)
class StandardSequence:
    """A standard index sequence: smaller than each of its proper suffixes.

    Comparison is lexicographic with the convention that a proper prefix
    precedes the longer sequence (plain tuple comparison).
    """

    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        if not is_standard(self.indices):
            raise ValueError("%r is not a standard sequence" % (self.indices,))

    def __len__(self) -> int:
        return len(self.indices)


def is_standard(seq: tuple[int, ...]) -> bool:
    if not seq or any(i < 1 for i in seq):
        return False
    if len(seq) == 1:
        return True
    return all(seq < seq[s:] for s in range(1, len(seq)))


def standard_sequences(
    q: int, k: int, max_enumeration: int = 1 << 26
) -> list[tuple[int, ...]]:
    """All standard sequences of length k on indices 1..q, lexicographic.

    Uses Duval's generation of Lyndon words; the guard bounds the raw
    search space q**k to keep pathological requests from spinning.
    """
    if q < 1 or k < 1:
        raise ValueError("need q >= 1 and k >= 1")
    if q**k > max_enumeration:
        raise ValueError(
            "enumeration bound exceeded: %d**%d > %d" % (q, k, max_enumeration)
        )
    return [w for w in _duval(q, k) if len(w) == k]


def _duval(q: int, n: int) -> Iterator[tuple[int, ...]]:
    # Lyndon words of length <= n over {1..q} in lexicographic order.
    w = [1]
    while w:
        yield tuple(w)
        w = w * (n // len(w)) + w[: n % len(w)]
        while w and w[-1] == q:
            w.pop()
        if w:
            w[-1] += 1


def witt_number(q: int, k: int) -> int:
    """Number of standard sequences of length k: (1/k) sum_{d|k} mu(k/d) q^d."""
    if q < 1 or k < 1:
        raise ValueError("need q >= 1 and k >= 1")
    total = 0
    for d in range(1, k + 1):
        if k % d == 0:
            total += _mobius(k // d) * q**d
    assert total % k == 0
    return total // k


def _mobius(n: int) -> int:
    if n == 1:
        return 1
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        else:
            p += 1
    if n > 1:
        result = -result
    return result


def standard_factorization(seq: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split a standard sequence as J * K, K the longest proper standard suffix."""
    if len(seq) < 2:
        raise ValueError("need length >= 2")
    for s in range(1, len(seq)):
        if is_standard(seq[s:]):
            return seq[:s], seq[s:]
    raise AssertionError("unreachable: last letter is always standard")


def lyndon_bracketing(seq: tuple[int, ...]) -> Word:
    """Iterated commutator [W_J, W_K] along the standard factorization."""
    if not is_standard(seq):
        raise ValueError("%r is not standard" % (seq,))
    if len(seq) == 1:
        return generator(seq[0])
    left, right = standard_factorization(seq)
    return commutator(lyndon_bracketing(left), lyndon_bracketing(right))


def standard_commutator(seq: tuple[int, ...]) -> Word:
    """A word W_I in F_{|I|} with c_J(W_I) = delta_{I,J} on standard J.

    Starts from the Lyndon bracketing of I.  A single bracketing cannot
    satisfy the delta property in general (first failure at I = 11122),
    but the matrix c_J(bracketing of I) is unitriangular for the
    lexicographic order, so multiplying by bracketings of larger standard
    permutations of I clears the off-diagonal entries exactly.
    """
    if not is_standard(seq):
        raise ValueError("%r is not standard" % (seq,))
    w = lyndon_bracketing(seq)
    if len(seq) == 1:
        return w
    from .magnus import magnus_expand

    k = len(seq)
    larger = sorted(
        J
        for J in set(_permutation_standards(seq))
        if J > seq
    )
    for J in larger:
        coeff = magnus_expand(w, k + 1).coefficient(J)
        if coeff:
            corr = lyndon_bracketing(J)
            piece = corr if coeff < 0 else corr.inverse()
            for _ in range(abs(coeff)):
                w = w * piece
    return w


def _permutation_standards(seq: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    # standard sequences using exactly the letters of seq (with multiplicity)
    from itertools import permutations

    for p in set(permutations(seq)):
        if is_standard(p):
            yield p
