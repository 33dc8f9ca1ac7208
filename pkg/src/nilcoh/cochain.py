"""Group cochains on free nilpotent quotients and Massey 2-cocycles.

Cochains are functions on tuples of group elements, represented by free
group words; every functional used here is built from Magnus coefficients
of bounded degree and therefore descends to the quotient F/F_k in play.

Conventions (inhomogeneous bar complex):

  (d f)(g_1, ..., g_{n+1}) =
      f(g_2, ..., g_{n+1})
      + sum_i (-1)^i f(g_1, ..., g_i g_{i+1}, ..., g_{n+1})
      + (-1)^{n+1} f(g_1, ..., g_n)

  (u cup v)(g_1, ..., g_{p+q}) =
      (-1)^{pq} u(g_1, ..., g_p) v(g_{p+1}, ..., g_{p+q})
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .words import Word, standard_sequences
from .magnus import c, equal_mod_Fk, in_lower_central, magnus_expand


@dataclass(frozen=True)
class NilpotentElement:
    """An element of F/F_k, held as a free group word representative."""

    rep: Word
    k: int

    def key(self):
        p = magnus_expand(self.rep, self.k)
        return (self.k, tuple(p.canonical_items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NilpotentElement):
            return NotImplemented
        return self.k == other.k and equal_mod_Fk(self.rep, other.rep, self.k)

    def __hash__(self) -> int:
        return hash(self.key())

    def __mul__(self, other: "NilpotentElement") -> "NilpotentElement":
        if self.k != other.k:
            raise ValueError("levels differ")
        return NilpotentElement(self.rep * other.rep, self.k)

    def inverse(self) -> "NilpotentElement":
        return NilpotentElement(self.rep.inverse(), self.k)


class Cochain:
    """An integer n-cochain, evaluated on word representatives."""

    __slots__ = ("degree", "_fn")

    def __init__(self, degree: int, fn: Callable[..., int]):
        if degree < 0:
            raise ValueError("degree must be >= 0")
        self.degree = degree
        self._fn = fn

    def __call__(self, *args: Word) -> int:
        if len(args) != self.degree:
            raise ValueError(
                "degree %d cochain called with %d arguments" % (self.degree, len(args))
            )
        return self._fn(*args)

    @classmethod
    def zero(cls, degree: int) -> "Cochain":
        return cls(degree, lambda *a: 0)

    @classmethod
    def functional(cls, seq: tuple[int, ...]) -> "Cochain":
        """Degree-1 cochain w -> c_seq(w)."""
        return cls(1, lambda g: c(seq, g))

    def __add__(self, other: "Cochain") -> "Cochain":
        if self.degree != other.degree:
            raise ValueError("degrees differ")
        return Cochain(self.degree, lambda *a: self._fn(*a) + other._fn(*a))

    def __neg__(self) -> "Cochain":
        return Cochain(self.degree, lambda *a: -self._fn(*a))

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def scale(self, n: int) -> "Cochain":
        return Cochain(self.degree, lambda *a: n * self._fn(*a))


def coboundary(f: Cochain) -> Cochain:
    """Bar-complex coboundary, raising degree by one."""
    n = f.degree

    def df(*args: Word) -> int:
        total = f(*args[1:])
        sign = -1
        for i in range(n):
            merged = args[: i] + (args[i] * args[i + 1],) + args[i + 2:]
            total += sign * f(*merged)
            sign = -sign
        total += sign * f(*args[:-1])
        return total

    return Cochain(n + 1, df)


def cup(u: Cochain, v: Cochain) -> Cochain:
    p, q = u.degree, v.degree
    sign = -1 if (p * q) % 2 else 1

    def uv(*args: Word) -> int:
        return sign * u(*args[:p]) * v(*args[p:])

    return Cochain(p + q, uv)


def massey2(I: tuple[int, ...], k: int) -> Cochain:
    """The 2-cocycle of the length-k Massey product attached to I.

    (x, y) -> sum over proper splittings I = I' I'' of c_{I'}(x) c_{I''}(y).
    Defined on F/F_k for len(I) = k; a cocycle there because every proper
    part of I has length < k.
    """
    if len(I) != k:
        raise ValueError("index length %d must equal k = %d" % (len(I), k))
    if k < 2:
        raise ValueError("need k >= 2")
    return splitting_cochain(I)


def splitting_cochain(I: tuple[int, ...]) -> Cochain:
    """sum_{l=1}^{len(I)-1} c_{I[:l]}(x) c_{I[l:]}(y), for any index sequence."""
    if len(I) < 2:
        raise ValueError("need length >= 2")
    splits = [(I[:l], I[l:]) for l in range(1, len(I))]

    def f(x: Word, y: Word) -> int:
        return sum(c(a, x) * c(b, y) for a, b in splits)

    return Cochain(2, f)


def defining_system(I: tuple[int, ...], k: int) -> dict[tuple[int, int], Cochain]:
    """Defining system for the Massey product: a_{s,t} = c_{i_s ... i_t}.

    Indices are 1-based; the top pair (1, k) is omitted.  The system
    satisfies d a_{s,t} = sum_{r=s}^{t-1} a_{s,r} cup a_{r+1,t} (no sign),
    which the tests check pointwise.
    """
    if len(I) != k or k < 2:
        raise ValueError("need len(I) = k >= 2")
    out: dict[tuple[int, int], Cochain] = {}
    for s in range(1, k + 1):
        for t in range(s, k + 1):
            if (s, t) == (1, k):
                continue
            out[(s, t)] = Cochain.functional(I[s - 1: t])
    return out


def defining_system_sides(
    I: tuple[int, ...], k: int, s: int, t: int
) -> tuple[Cochain, Cochain]:
    """(d a_{s,t}, sum_r a_{s,r} cup a_{r+1,t}) for the system above."""
    system = defining_system(I, k)
    lhs = coboundary(system[(s, t)])
    rhs = Cochain.zero(2)
    for r in range(s, t):
        rhs = rhs + cup(system[(s, r)], system[(r + 1, t)])
    return lhs, rhs


# ---------------------------------------------------------------------------
# Central extension of F/F_k by Z^{N_k} classified by the Massey 2-cocycles.
# ---------------------------------------------------------------------------


def cocycle_vector(q: int, k: int, g: Word, h: Word) -> tuple[int, ...]:
    """Values of all standard Massey 2-cocycles at (g, h), lexicographic order."""
    return tuple(
        massey2(I, k)(g, h) for I in standard_sequences(q, k)
    )


@dataclass(frozen=True)
class ExtensionElement:
    """Element (g, v) of the extension of F/F_k by Z^{N_k}."""

    q: int
    k: int
    base: Word
    fiber: tuple[int, ...]

    def _check(self, other: "ExtensionElement") -> None:
        if (self.q, self.k) != (other.q, other.k):
            raise ValueError("mismatched extension parameters")
        if len(self.fiber) != len(other.fiber):
            raise ValueError("fiber ranks differ")

    def __mul__(self, other: "ExtensionElement") -> "ExtensionElement":
        self._check(other)
        vec = cocycle_vector(self.q, self.k, self.base, other.base)
        fiber = tuple(a + b + f for a, b, f in zip(self.fiber, other.fiber, vec))
        return ExtensionElement(self.q, self.k, self.base * other.base, fiber)

    def inverse(self) -> "ExtensionElement":
        ginv = self.base.inverse()
        vec = cocycle_vector(self.q, self.k, self.base, ginv)
        return ExtensionElement(
            self.q, self.k, ginv, tuple(-a - f for a, f in zip(self.fiber, vec))
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExtensionElement):
            return NotImplemented
        return (
            (self.q, self.k) == (other.q, other.k)
            and self.fiber == other.fiber
            and equal_mod_Fk(self.base, other.base, self.k)
        )

    def __hash__(self) -> int:
        return hash(
            (self.q, self.k, self.fiber, NilpotentElement(self.base, self.k).key())
        )


def extension_identity(q: int, k: int) -> ExtensionElement:
    rank = len(standard_sequences(q, k))
    return ExtensionElement(q, k, Word(), (0,) * rank)


def extension_lift(q: int, k: int, w: Word) -> ExtensionElement:
    rank = len(standard_sequences(q, k))
    return ExtensionElement(q, k, w, (0,) * rank)


def extension_multiply(a: ExtensionElement, b: ExtensionElement) -> ExtensionElement:
    return a * b


def evaluate_word_in_extension(w: Word, q: int, k: int) -> ExtensionElement:
    """Push a word through the extension letter by letter, lifting generators.

    Generators lift with zero fiber; inverse letters use the group inverse
    of the lift.  For w in F_k the base is trivial mod F_k and the fiber
    recovers the Magnus coefficients along standard sequences of length k.
    """
    acc = extension_identity(q, k)
    for a in w.normalize().letters:
        lift = extension_lift(q, k, Word((abs(a),)))
        acc = acc * (lift if a > 0 else lift.inverse())
    return acc


def pairing(I: tuple[int, ...], w: Word) -> int:
    """Pairing of the standard Massey product indexed by I with w in F_k.

    Equals c_I(w), computed at truncation len(I) + 1; agrees with the
    fiber of the extension evaluation (Fenn-Sjerve style formula).
    """
    k = len(I)
    if not in_lower_central(w, k):
        raise ValueError("word is not in the required lower central series term")
    return magnus_expand(w, k + 1).coefficient(I)


def s_map(w: Word, q: int, k: int) -> tuple[int, ...]:
    """Coordinates (c_I(w)) over standard I of length k, for w in F_k.

    Restricted to F_k mod F_{k+1} this is an isomorphism onto Z^{N_k};
    it sends the standard commutator W_I to the I-th unit vector.
    """
    if not in_lower_central(w, k):
        raise ValueError("word is not in the required lower central series term")
    p = magnus_expand(w, k + 1)
    return tuple(p.coefficient(I) for I in standard_sequences(q, k))
