"""Truncated Magnus expansion and the unitriangular matrix model.

The Magnus expansion sends x_i to 1 + X_i and x_i^-1 to the truncated
geometric series 1 - X_i + X_i^2 - ... inside the ring of noncommutative
integer polynomials with all monomials of degree >= k discarded.  The
induced map on the quotient F/F_k by the k-th lower central series term
is injective, which makes the expansion usable as a normal form.

Monomials X_{i_1} ... X_{i_t} are keyed by the index tuple (i_1, ..., i_t).
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product as iter_product

from .words import Word


class TruncatedPolynomial:
    """Noncommutative polynomial over Z, monomials of degree >= bound dropped."""

    __slots__ = ("degree_bound", "terms")

    def __init__(self, degree_bound: int, terms: dict[tuple[int, ...], int] | None = None):
        if degree_bound < 1:
            raise ValueError("degree bound must be >= 1")
        self.degree_bound = degree_bound
        clean: dict[tuple[int, ...], int] = {}
        for mono, coeff in (terms or {}).items():
            if coeff and len(mono) < degree_bound:
                clean[mono] = coeff
        self.terms = clean

    @classmethod
    def one(cls, degree_bound: int) -> "TruncatedPolynomial":
        return cls(degree_bound, {(): 1})

    @classmethod
    def variable(cls, i: int, degree_bound: int) -> "TruncatedPolynomial":
        return cls(degree_bound, {(i,): 1})

    def coefficient(self, mono: tuple[int, ...]) -> int:
        if len(mono) >= self.degree_bound:
            raise ValueError(
                "monomial %r has degree >= bound %d" % (mono, self.degree_bound)
            )
        return self.terms.get(mono, 0)

    def _check(self, other: "TruncatedPolynomial") -> None:
        if self.degree_bound != other.degree_bound:
            raise ValueError("degree bounds differ")

    def __add__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        self._check(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, 0) + coeff
        return TruncatedPolynomial(self.degree_bound, out)

    def __neg__(self) -> "TruncatedPolynomial":
        return TruncatedPolynomial(
            self.degree_bound, {m: -c for m, c in self.terms.items()}
        )

    def __sub__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        return self + (-other)

    def __mul__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        self._check(other)
        out: dict[tuple[int, ...], int] = {}
        bound = self.degree_bound
        for m1, c1 in self.terms.items():
            room = bound - len(m1)
            for m2, c2 in other.terms.items():
                if len(m2) < room:
                    key = m1 + m2
                    out[key] = out.get(key, 0) + c1 * c2
        return TruncatedPolynomial(bound, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedPolynomial):
            return NotImplemented
        return self.degree_bound == other.degree_bound and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.degree_bound, frozenset(self.terms.items())))

    def is_one(self) -> bool:
        return self.terms == {(): 1}

    def canonical_items(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in self.canonical_items():
            body = "".join("X%d" % i for i in mono) if mono else "1"
            if coeff == 1 and mono:
                term = body
            elif coeff == -1 and mono:
                term = "-" + body
            elif mono:
                term = "%d*%s" % (coeff, body)
            else:
                term = str(coeff)
            parts.append(term)
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __repr__(self) -> str:
        return "TruncatedPolynomial(%d, %s)" % (self.degree_bound, self)


@lru_cache(maxsize=200_000)
def _magnus_cached(letters: tuple[int, ...], k: int) -> TruncatedPolynomial:
    result = TruncatedPolynomial.one(k)
    for a in letters:
        i = abs(a)
        if a > 0:
            factor = TruncatedPolynomial(k, {(): 1, (i,): 1})
        else:
            factor = TruncatedPolynomial(
                k, {(i,) * m: (-1) ** m for m in range(0, k)}
            )
        result = result * factor
    return result


def magnus_expand(w: Word, k: int) -> TruncatedPolynomial:
    """Magnus expansion of w, truncated below total degree k."""
    if k < 2:
        raise ValueError("truncation degree must be >= 2")
    return _magnus_cached(w.normalize().letters, k)


def coefficient(p: TruncatedPolynomial, seq: tuple[int, ...]) -> int:
    return p.coefficient(seq)


def c(seq: tuple[int, ...], w: Word, k: int | None = None) -> int:
    """Magnus coefficient functional: the X_seq coefficient of the expansion.

    The value does not depend on the truncation as long as it exceeds
    len(seq); passing k only enforces the len(seq) < k precondition.
    """
    if not seq or any(i < 1 for i in seq):
        raise ValueError("bad index sequence %r" % (seq,))
    if k is not None and len(seq) >= k:
        raise ValueError("sequence length %d must be < k = %d" % (len(seq), k))
    return magnus_expand(w, len(seq) + 1).coefficient(seq)


def in_lower_central(w: Word, k: int) -> bool:
    """Whether w lies in the k-th lower central series term F_k."""
    return magnus_expand(w, k).is_one()


def equal_mod_Fk(u: Word, v: Word, k: int) -> bool:
    """Equality in the free nilpotent quotient F/F_k."""
    return magnus_expand(u, k) == magnus_expand(v, k)


def shuffles(J: tuple[int, ...], K: tuple[int, ...]) -> Counter:
    """Shuffles with overlap of two index sequences, as a multiset.

    Positions of J and K are interleaved order-preservingly; a position
    of J and one of K may land on the same output slot when their letters
    agree.  Each way of doing so contributes one copy of the resulting
    sequence.
    """
    if not J or not K:
        raise ValueError("shuffle arguments must be nonempty")
    out: Counter = Counter()

    def walk(i: int, j: int, acc: tuple[int, ...]) -> None:
        if i == len(J) and j == len(K):
            out[acc] += 1
            return
        if i < len(J):
            walk(i + 1, j, acc + (J[i],))
        if j < len(K):
            walk(i, j + 1, acc + (K[j],))
        if i < len(J) and j < len(K) and J[i] == K[j]:
            walk(i + 1, j + 1, acc + (J[i],))

    walk(0, 0, ())
    return out


def satisfies_shuffle_relations(p: TruncatedPolynomial, q: int) -> bool:
    """Test the image characterization of group-like elements.

    Requires constant term 1 and, for all nonempty sequences J, K with
    len(J) + len(K) < degree bound, a_J a_K = sum over shuffles-with-overlap
    of the coefficients a_L.
    """
    if p.coefficient(()) != 1:
        return False
    k = p.degree_bound
    alphabet = range(1, q + 1)
    for lj in range(1, k - 1):
        for lk in range(1, k - lj):
            for J in iter_product(alphabet, repeat=lj):
                for K in iter_product(alphabet, repeat=lk):
                    lhs = p.coefficient(J) * p.coefficient(K)
                    rhs = sum(
                        mult * p.coefficient(L)
                        for L, mult in shuffles(J, K).items()
                    )
                    if lhs != rhs:
                        return False
    return True


# ---------------------------------------------------------------------------
# Unitriangular matrix model over a commutative polynomial ring.
#
# Variables lam(i, j) play the role of the i-th superdiagonal slot of the
# j-th generator matrix; monomials are sorted tuples of ((i, j), exponent).
# ---------------------------------------------------------------------------


class CommPolynomial:
    """Sparse commutative polynomial over Z in variables lam(i, j)."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple, int] | None = None):
        self.terms = {m: c0 for m, c0 in (terms or {}).items() if c0}

    @classmethod
    def const(cls, n: int) -> "CommPolynomial":
        return cls({(): n} if n else {})

    @classmethod
    def lam(cls, i: int, j: int) -> "CommPolynomial":
        return cls({(((i, j), 1),): 1})

    def __add__(self, other: "CommPolynomial") -> "CommPolynomial":
        out = dict(self.terms)
        for m, c0 in other.terms.items():
            out[m] = out.get(m, 0) + c0
        return CommPolynomial(out)

    def __neg__(self) -> "CommPolynomial":
        return CommPolynomial({m: -c0 for m, c0 in self.terms.items()})

    def __sub__(self, other: "CommPolynomial") -> "CommPolynomial":
        return self + (-other)

    def __mul__(self, other: "CommPolynomial") -> "CommPolynomial":
        out: dict[tuple, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                merged: dict[tuple[int, int], int] = {}
                for var, e in m1 + m2:
                    merged[var] = merged.get(var, 0) + e
                key = tuple(sorted(merged.items()))
                out[key] = out.get(key, 0) + c1 * c2
        return CommPolynomial(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CommPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in sorted(self.terms.items()):
            factors = [
                "l%d_%d" % var + ("^%d" % e if e > 1 else "") for var, e in mono
            ]
            body = "*".join(factors) if factors else "1"
            if coeff == 1 and factors:
                parts.append(body)
            elif coeff == -1 and factors:
                parts.append("-" + body)
            elif factors:
                parts.append("%d*%s" % (coeff, body))
            else:
                parts.append(str(coeff))
        return " + ".join(parts).replace("+ -", "- ")


class UnitriangularMatrix:
    """k x k upper triangular matrix with unit diagonal, entries CommPolynomial."""

    __slots__ = ("k", "entries")

    def __init__(self, k: int, entries: dict[tuple[int, int], CommPolynomial] | None = None):
        if k < 2:
            raise ValueError("matrix size must be >= 2")
        self.k = k
        self.entries = {
            pos: val for pos, val in (entries or {}).items() if not val.is_zero()
        }
        for (r, s) in self.entries:
            if not (0 <= r < s < k):
                raise ValueError("entry %r not strictly upper triangular" % ((r, s),))

    def entry(self, r: int, s: int) -> CommPolynomial:
        if r == s:
            return CommPolynomial.const(1)
        return self.entries.get((r, s), CommPolynomial.const(0))

    @classmethod
    def identity(cls, k: int) -> "UnitriangularMatrix":
        return cls(k)

    @classmethod
    def generator(cls, j: int, k: int) -> "UnitriangularMatrix":
        """Matrix of x_j: superdiagonal slots lam(1, j), ..., lam(k-1, j)."""
        return cls(
            k, {(i, i + 1): CommPolynomial.lam(i + 1, j) for i in range(k - 1)}
        )

    def __mul__(self, other: "UnitriangularMatrix") -> "UnitriangularMatrix":
        if self.k != other.k:
            raise ValueError("sizes differ")
        out: dict[tuple[int, int], CommPolynomial] = {}
        for r in range(self.k):
            for s in range(r + 1, self.k):
                acc = CommPolynomial.const(0)
                for t in range(r, s + 1):
                    acc = acc + self.entry(r, t) * other.entry(t, s)
                out[(r, s)] = acc
        return UnitriangularMatrix(self.k, out)

    def inverse(self) -> "UnitriangularMatrix":
        # (1 + N)^-1 = sum (-N)^m, nilpotent of order k.
        n_entries = self.entries
        power = UnitriangularMatrix(self.k, dict(n_entries))
        total: dict[tuple[int, int], CommPolynomial] = {}
        sign = -1
        current = power
        for _ in range(self.k - 1):
            for pos, val in current.entries.items():
                scaled = CommPolynomial.const(sign) * val
                total[pos] = total.get(pos, CommPolynomial.const(0)) + scaled
            nxt: dict[tuple[int, int], CommPolynomial] = {}
            for (r, t), v1 in current.entries.items():
                for (t2, s), v2 in n_entries.items():
                    if t == t2:
                        nxt[(r, s)] = nxt.get(
                            (r, s), CommPolynomial.const(0)
                        ) + v1 * v2
            current = UnitriangularMatrix(self.k, nxt)
            sign = -sign
        return UnitriangularMatrix(self.k, total)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UnitriangularMatrix):
            return NotImplemented
        return self.k == other.k and self.entries == other.entries

    def is_identity(self) -> bool:
        return not self.entries

    def __str__(self) -> str:
        rows = []
        for r in range(self.k):
            row = []
            for s in range(self.k):
                if s < r:
                    row.append("0")
                elif s == r:
                    row.append("1")
                else:
                    row.append(str(self.entry(r, s)))
            rows.append("[" + ", ".join(row) + "]")
        return "\n".join(rows)


def upsilon(w: Word, k: int) -> UnitriangularMatrix:
    """The unipotent matrix representation of w at nilpotency class k.

    Kernel is exactly F_k, so the map factors through F/F_k faithfully.
    """
    result = UnitriangularMatrix.identity(k)
    gen_cache: dict[int, UnitriangularMatrix] = {}
    inv_cache: dict[int, UnitriangularMatrix] = {}
    for a in w.normalize().letters:
        j = abs(a)
        if a > 0:
            if j not in gen_cache:
                gen_cache[j] = UnitriangularMatrix.generator(j, k)
            result = result * gen_cache[j]
        else:
            if j not in inv_cache:
                inv_cache[j] = UnitriangularMatrix.generator(j, k).inverse()
            result = result * inv_cache[j]
    return result
