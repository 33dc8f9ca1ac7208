"""Milnor invariants, Johnson homomorphisms and the Morita criterion.

Everything here is word-level: longitudes are explicit free group words,
mapping classes appear only through the induced free-group endomorphism.
The Magnus expansion supplies both the membership tests (longitude depth,
Torelli depth) and the invariant values themselves.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .words import Word, commutator, generator
from .magnus import in_lower_central, magnus_expand


@dataclass(frozen=True)
class LongitudeSystem:
    """Longitude words w_l indexed by link component, at ambient level k."""

    q: int
    longitudes: dict[int, Word]
    k: int

    def word(self, component: int) -> Word:
        if component not in self.longitudes:
            raise KeyError("no longitude for component %d" % component)
        return self.longitudes[component]


def check_assumption(ls: LongitudeSystem, k: int) -> dict[int, bool]:
    """Depth-k admissibility per component: longitude lies in F_k."""
    return {
        comp: in_lower_central(w, k) for comp, w in sorted(ls.longitudes.items())
    }


def milnor_mu(ls: LongitudeSystem, I: tuple[int, ...], component: int) -> int:
    """mu(i_1 ... i_k; l): the X_I coefficient of the l-th longitude.

    Defined at depth k = len(I) only when the longitude lies in F_k.
    """
    k = len(I)
    w = ls.word(component)
    if not in_lower_central(w, k):
        raise ValueError(
            "longitude of component %d is not in F_%d: invariant undefined"
            % (component, k)
        )
    return magnus_expand(w, k + 1).coefficient(I)


def mu_pairing_crosscheck(
    ls: LongitudeSystem, I: tuple[int, ...], component: int
) -> tuple[int, int]:
    """(mu value, Massey-pairing value) which must agree.

    The second entry realizes the length-(k+1) Massey pairing with the
    peripheral relator: the X_{I + (l,)} coefficient of M([w_l, x_l]) one
    truncation level higher.  The relator must be oriented this way
    round; the opposite commutator gives -mu identically.

    The two values agree whenever I does not start with the component
    index itself; for i_1 = l the relator picks up the extra term
    -c_{I[1:] + (l,)}(w_l) and the comparison is not meaningful.
    """
    mu = milnor_mu(ls, I, component)
    k = len(I)
    rel = commutator(ls.word(component), generator(component))
    paired = magnus_expand(rel, k + 2).coefficient(I + (component,))
    return mu, paired


@dataclass(frozen=True)
class FreeEndomorphism:
    """Endomorphism of the free group, given by generator images."""

    images: dict[int, Word]

    def image(self, i: int) -> Word:
        return self.images.get(i, generator(i))

    def apply(self, w: Word) -> Word:
        out = Word()
        for a in w.letters:
            img = self.image(abs(a))
            out = out * (img if a > 0 else img.inverse())
        return out

    def compose(self, other: "FreeEndomorphism") -> "FreeEndomorphism":
        """self after other: (self.compose(other))(w) = self(other(w))."""
        keys = set(self.images) | set(other.images)
        return FreeEndomorphism(
            {i: self.apply(other.image(i)) for i in keys}
        )

    def defect(self, i: int) -> Word:
        """f(x_i) x_i^-1, the word whose depth grades the Torelli filtration."""
        return self.image(i) * generator(i).inverse()


def torelli_depth(f: FreeEndomorphism, max_k: int) -> int:
    """Largest k <= max_k with every defect in F_k (max_k if saturated)."""
    if max_k < 1:
        raise ValueError("need max_k >= 1")
    depth = max_k
    for i in sorted(f.images):
        d = f.defect(i)
        level = 1
        while level < depth and in_lower_central(d, level + 1):
            level += 1
        depth = min(depth, level)
        if depth == 1:
            break
    return depth


@dataclass(frozen=True)
class JohnsonValue:
    """Degree-k leading coefficients of the defects, per generator."""

    k: int
    coefficients: dict[int, dict[tuple[int, ...], int]] = field(default_factory=dict)

    def coefficient(self, i: int, seq: tuple[int, ...]) -> int:
        return self.coefficients.get(i, {}).get(seq, 0)

    def is_zero(self) -> bool:
        return all(not table for table in self.coefficients.values())

    def __add__(self, other: "JohnsonValue") -> "JohnsonValue":
        if self.k != other.k:
            raise ValueError("degrees differ")
        out: dict[int, dict[tuple[int, ...], int]] = {}
        for i in set(self.coefficients) | set(other.coefficients):
            table: dict[tuple[int, ...], int] = {}
            for seq in set(self.coefficients.get(i, {})) | set(
                other.coefficients.get(i, {})
            ):
                v = self.coefficient(i, seq) + other.coefficient(i, seq)
                if v:
                    table[seq] = v
            out[i] = table
        return JohnsonValue(self.k, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, JohnsonValue):
            return NotImplemented
        keys = set(self.coefficients) | set(other.coefficients)
        return self.k == other.k and all(
            {s: v for s, v in self.coefficients.get(i, {}).items() if v}
            == {s: v for s, v in other.coefficients.get(i, {}).items() if v}
            for i in keys
        )


def johnson_tau(f: FreeEndomorphism, k: int) -> JohnsonValue:
    """tau_k(f): degree-k Magnus coefficients of each defect f(x_i) x_i^-1.

    Requires f in T(k); lower-degree components then vanish automatically
    and the degree-k slice is a crossed-homomorphism value in
    Hom(H_1, F_k/F_{k+1}).
    """
    if torelli_depth(f, k) < k:
        raise ValueError("endomorphism is not in T(%d)" % k)
    out: dict[int, dict[tuple[int, ...], int]] = {}
    for i in sorted(f.images):
        p = magnus_expand(f.defect(i), k + 1)
        out[i] = {
            mono: coeff for mono, coeff in p.canonical_items() if len(mono) == k
        }
    return JohnsonValue(k, out)


def morita_vanishes(f: FreeEndomorphism, k: int) -> bool:
    """Vanishing criterion for the degree-k Morita class: depth >= 2k-1."""
    if k < 2:
        raise ValueError("need k >= 2")
    if torelli_depth(f, k) < k:
        raise ValueError("endomorphism is not in T(%d)" % k)
    return torelli_depth(f, 2 * k - 1) >= 2 * k - 1
