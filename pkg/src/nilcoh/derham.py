"""Symbolic differential forms on the Magnus image: the deRham calculus.

Coordinates are beta_w (one per nonempty index-word w) and the dual basis
1-forms dX_w.  Coefficients are integer polynomials in the beta_w; wedge
monomials are kept in a canonical order (index-words sorted by length,
then lexicographically) with sign normalization.

Convention.  Right translation by a generator x_h acts on coordinates by
deleting a leading letter:

    beta_w  ->  beta_w + delta_{w_1, h} beta_{w[1:]}        (beta_empty = 1)
    dX_w    ->  dX_w   + delta_{w_1, h} dX_{w[1:]}          (dX_empty = 0)

and the invariant 1-forms are the components of the left-invariant
Maurer-Cartan form M^-1 dM:

    gamma_J = sum over splittings J = P.S, S nonempty, of inv(P) dX_S,
    inv(P)  = sum over compositions P = b_1 ... b_u of (-1)^u
              beta_{b_1} ... beta_{b_u}                      (inv() = 1).

This reproduces the printed small examples gamma_ab = dX_ab - beta_a dX_b
and the four-term Massey 2-form verbatim.  Under it the structure
equation carries a global sign,

    d gamma_J = STRUCTURE_SIGN * sum_r gamma_{J[:r]} ^ gamma_{J[r:]},

with STRUCTURE_SIGN = -1 (d(M^-1 dM) = -(M^-1 dM) ^ (M^-1 dM)); the
mirror convention would flip both this sign and every printed small
example.  The printed three-letter 1-form gamma_abc follows neither
convention and fails invariance; see printed_gamma_abc.
"""

from __future__ import annotations

from itertools import combinations

from .words import Word
from .magnus import c

STRUCTURE_SIGN = -1

BetaWord = tuple[int, ...]
BetaMonomial = tuple[BetaWord, ...]  # sorted by (len, lex)


def _word_key(w: BetaWord):
    return (len(w), w)


class BetaPolynomial:
    """Integer commutative polynomial in the variables beta_w."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[BetaMonomial, int] | None = None):
        self.terms = {m: c0 for m, c0 in (terms or {}).items() if c0}

    @classmethod
    def const(cls, n: int) -> "BetaPolynomial":
        return cls({(): n} if n else {})

    @classmethod
    def beta(cls, w: BetaWord) -> "BetaPolynomial":
        if not w:
            return cls.const(1)
        return cls({(tuple(w),): 1})

    def __add__(self, other: "BetaPolynomial") -> "BetaPolynomial":
        out = dict(self.terms)
        for m, c0 in other.terms.items():
            out[m] = out.get(m, 0) + c0
        return BetaPolynomial(out)

    def __neg__(self) -> "BetaPolynomial":
        return BetaPolynomial({m: -c0 for m, c0 in self.terms.items()})

    def __sub__(self, other: "BetaPolynomial") -> "BetaPolynomial":
        return self + (-other)

    def __mul__(self, other: "BetaPolynomial") -> "BetaPolynomial":
        out: dict[BetaMonomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = tuple(sorted(m1 + m2, key=_word_key))
                out[key] = out.get(key, 0) + c1 * c2
        return BetaPolynomial(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BetaPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def substitute_beta(self, h: int) -> "BetaPolynomial":
        """Apply beta_w -> beta_w + delta_{w_1,h} beta_{w[1:]} everywhere."""
        out = BetaPolynomial.const(0)
        for mono, coeff in self.terms.items():
            prod = BetaPolynomial.const(coeff)
            for w in mono:
                sub = BetaPolynomial.beta(w)
                if w[0] == h:
                    sub = sub + BetaPolynomial.beta(w[1:])
                prod = prod * sub
            out = out + prod
        return out

    def evaluate(self, g: Word) -> int:
        """Numeric value with beta_w := c_w(g)."""
        total = 0
        for mono, coeff in self.terms.items():
            val = coeff
            for w in mono:
                val *= c(w, g)
                if not val:
                    break
            total += val
        return total

    def canonical_items(self):
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in self.canonical_items():
            factors = ["β_" + _format_word(w) for w in mono]
            body = "·".join(factors)
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(body)
            elif coeff == -1:
                parts.append("-" + body)
            else:
                parts.append("%d·%s" % (coeff, body))
        return " + ".join(parts).replace("+ -", "- ")


def _format_word(w: BetaWord) -> str:
    if all(1 <= i <= 26 for i in w):
        return "".join(chr(ord("a") + i - 1) for i in w)
    return "".join(str(i) for i in w)


WedgeKey = tuple[BetaWord, ...]


def _normalize_key(words: tuple[BetaWord, ...]) -> tuple[WedgeKey, int] | None:
    """Sort wedge factors, tracking the permutation sign; None if repeated."""
    if len(set(words)) != len(words):
        return None
    indexed = sorted(range(len(words)), key=lambda i: _word_key(words[i]))
    sign = 1
    perm = list(indexed)
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return tuple(words[i] for i in indexed), sign


class DifferentialForm:
    """Finite sum of BetaPolynomial-weighted wedge monomials of one grade."""

    __slots__ = ("grade", "terms")

    def __init__(self, grade: int, terms: dict[WedgeKey, BetaPolynomial] | None = None):
        if grade < 0:
            raise ValueError("grade must be >= 0")
        self.grade = grade
        clean: dict[WedgeKey, BetaPolynomial] = {}
        for key, poly in (terms or {}).items():
            if len(key) != grade:
                raise ValueError("wedge monomial %r has wrong grade" % (key,))
            if not poly.is_zero():
                clean[key] = poly
        self.terms = clean

    @classmethod
    def zero(cls, grade: int) -> "DifferentialForm":
        return cls(grade)

    @classmethod
    def from_poly(cls, poly: BetaPolynomial) -> "DifferentialForm":
        return cls(0, {(): poly})

    @classmethod
    def dx(cls, w: BetaWord) -> "DifferentialForm":
        if not w:
            return cls.zero(1)
        return cls(1, {(tuple(w),): BetaPolynomial.const(1)})

    def __add__(self, other: "DifferentialForm") -> "DifferentialForm":
        if self.grade != other.grade:
            raise ValueError("grades differ")
        out = dict(self.terms)
        for key, poly in other.terms.items():
            out[key] = out.get(key, BetaPolynomial.const(0)) + poly
        return DifferentialForm(self.grade, out)

    def __neg__(self) -> "DifferentialForm":
        return DifferentialForm(self.grade, {k: -p for k, p in self.terms.items()})

    def __sub__(self, other: "DifferentialForm") -> "DifferentialForm":
        return self + (-other)

    def scale_poly(self, poly: BetaPolynomial) -> "DifferentialForm":
        return DifferentialForm(
            self.grade, {k: poly * p for k, p in self.terms.items()}
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DifferentialForm):
            return NotImplemented
        return self.grade == other.grade and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms, key=lambda k: tuple(map(_word_key, k))):
            poly = self.terms[key]
            wedge = "∧".join("dX_" + _format_word(w) for w in key)
            items = poly.canonical_items()
            for mono, coeff in items:
                factors = "·".join("β_" + _format_word(w) for w in mono)
                body = (factors + " " if factors else "") + wedge if wedge else (
                    factors or str(coeff)
                )
                if not wedge and not factors:
                    parts.append(str(coeff))
                elif coeff == 1:
                    parts.append(body)
                elif coeff == -1:
                    parts.append("-" + body)
                else:
                    parts.append("%d %s" % (coeff, body))
        return " + ".join(parts).replace("+ -", "- ")


def wedge(a: DifferentialForm, b: DifferentialForm) -> DifferentialForm:
    out: dict[WedgeKey, BetaPolynomial] = {}
    for k1, p1 in a.terms.items():
        for k2, p2 in b.terms.items():
            norm = _normalize_key(k1 + k2)
            if norm is None:
                continue
            key, sign = norm
            contrib = p1 * p2
            if sign < 0:
                contrib = -contrib
            out[key] = out.get(key, BetaPolynomial.const(0)) + contrib
    return DifferentialForm(a.grade + b.grade, out)


def exterior_d(form: DifferentialForm) -> DifferentialForm:
    """d(beta_w) = dX_w, extended by Leibniz; dX-basis factors are closed."""
    out = DifferentialForm.zero(form.grade + 1)
    for key, poly in form.terms.items():
        base = DifferentialForm(
            form.grade, {key: BetaPolynomial.const(1)}
        )
        for mono, coeff in poly.terms.items():
            for pos in range(len(mono)):
                rest = BetaPolynomial.const(coeff)
                for j, w in enumerate(mono):
                    if j != pos:
                        rest = rest * BetaPolynomial.beta(w)
                out = out + wedge(
                    DifferentialForm.dx(mono[pos]).scale_poly(rest), base
                )
    return out


def pullback(form: DifferentialForm, h: int) -> DifferentialForm:
    """Translation action of the generator x_h (leading-letter deletion)."""
    out = DifferentialForm.zero(form.grade)
    for key, poly in form.terms.items():
        new_poly = poly.substitute_beta(h)
        expanded = DifferentialForm(0, {(): new_poly})
        for w in key:
            factor = DifferentialForm.dx(w)
            if w[0] == h:
                factor = factor + DifferentialForm.dx(w[1:])
            expanded = wedge(expanded, factor)
        out = out + expanded
    return out


def _inv_sum(P: BetaWord) -> BetaPolynomial:
    """sum over compositions P = b_1 ... b_u of (-1)^u prod beta_{b_i}."""
    if not P:
        return BetaPolynomial.const(1)
    total = BetaPolynomial.const(0)
    n = len(P)
    for bits in range(1 << (n - 1)):
        cuts = [0] + [i + 1 for i in range(n - 1) if bits >> i & 1] + [n]
        blocks = [P[cuts[i]: cuts[i + 1]] for i in range(len(cuts) - 1)]
        term = BetaPolynomial.const((-1) ** len(blocks))
        for b in blocks:
            term = term * BetaPolynomial.beta(b)
        total = total + term
    return total


def gamma_form(J: tuple[int, ...]) -> DifferentialForm:
    """The invariant 1-form attached to the index word J."""
    if not J:
        raise ValueError("need a nonempty index word")
    out = DifferentialForm.zero(1)
    for r in range(len(J)):
        out = out + DifferentialForm.dx(J[r:]).scale_poly(_inv_sum(J[:r]))
    return out


def structure_residual(J: tuple[int, ...]) -> DifferentialForm:
    """d gamma_J - STRUCTURE_SIGN * sum_r gamma_{J[:r]} ^ gamma_{J[r:]}."""
    rhs = DifferentialForm.zero(2)
    for r in range(1, len(J)):
        rhs = rhs + wedge(gamma_form(J[:r]), gamma_form(J[r:]))
    if STRUCTURE_SIGN < 0:
        rhs = -rhs
    return exterior_d(gamma_form(J)) - rhs


def massey_2form(I: tuple[int, ...]) -> DifferentialForm:
    """sum_{r=1}^{|I|-1} gamma_{I[:r]} ^ gamma_{I[r:]}: closed, invariant."""
    if len(I) < 2:
        raise ValueError("need length >= 2")
    out = DifferentialForm.zero(2)
    for r in range(1, len(I)):
        out = out + wedge(gamma_form(I[:r]), gamma_form(I[r:]))
    return out


# ---------------------------------------------------------------------------
# Verbatim transcriptions of the printed three-letter examples, retained
# for discrepancy reporting: printed_gamma_abc is not pullback-invariant
# under either letter convention, so it cannot equal any gamma_form.
# ---------------------------------------------------------------------------


def printed_gamma_abc(a: int, b: int, c0: int) -> DifferentialForm:
    """dX_abc - beta_c dX_ab - beta_b beta_c dX_a + beta_bc dX_a (as printed)."""
    bb = BetaPolynomial.beta
    return (
        DifferentialForm.dx((a, b, c0))
        + DifferentialForm.dx((a, b)).scale_poly(-bb((c0,)))
        + DifferentialForm.dx((a,)).scale_poly(
            bb((b, c0)) - bb((b,)) * bb((c0,))
        )
    )


def printed_massey_abcd(a: int, b: int, c0: int, d: int) -> DifferentialForm:
    """The printed three-line Massey 2-form for (a, b, c, d).

    Reads the stray "beta_a wedge (...)" of the last line as
    "gamma_a wedge (...)" = "dX_a wedge (...)"; built from the printed
    (faulty) three-letter 1-forms, so it differs from massey_2form.
    """
    bb = BetaPolynomial.beta
    gamma_ab = DifferentialForm.dx((a, b)) + DifferentialForm.dx((b,)).scale_poly(
        -bb((a,))
    )
    gamma_cd = DifferentialForm.dx((c0, d)) + DifferentialForm.dx((d,)).scale_poly(
        -bb((c0,))
    )
    gamma_bcd_printed = (
        DifferentialForm.dx((b, c0, d))
        + DifferentialForm.dx((b, c0)).scale_poly(-bb((d,)))
        + DifferentialForm.dx((b,)).scale_poly(bb((c0, d)) - bb((c0,)) * bb((d,)))
    )
    return (
        wedge(printed_gamma_abc(a, b, c0), DifferentialForm.dx((d,)))
        + wedge(gamma_ab, gamma_cd)
        + wedge(DifferentialForm.dx((a,)), gamma_bcd_printed)
    )


def compare_forms(lhs: DifferentialForm, rhs: DifferentialForm) -> list[str]:
    """Human-readable per-term differences between two canonical forms."""
    diff = lhs - rhs
    out = []
    for key, poly in sorted(
        diff.terms.items(), key=lambda kv: tuple(map(_word_key, kv[0]))
    ):
        wedge_txt = "∧".join("dX_" + _format_word(w) for w in key) or "1"
        out.append("%s: %s" % (wedge_txt, poly))
    return out


# ---------------------------------------------------------------------------
# Evaluation bridge to the group cochains.
# ---------------------------------------------------------------------------


def evaluate_segment(form: DifferentialForm, base: Word, step: Word) -> int:
    """Pair a 1-form with the segment from base to base*step.

    Substitutes beta_w := c_w(base) and dX_w := c_w(base*step) - c_w(base).
    For form = gamma_J the result is c_J(step), independent of base.
    """
    if form.grade != 1:
        raise ValueError("need a 1-form")
    end = base * step
    total = 0
    for (w,), poly in form.terms.items():
        coeff = poly.evaluate(base)
        if coeff:
            total += coeff * (c(w, end) - c(w, base))
    return total


def massey_bridge(I: tuple[int, ...], g: Word, h: Word) -> int:
    """Cochain value of the Massey 2-form on (g, h).

    Evaluates each wedge factor pair of the defining decomposition on the
    simplex (e, g, g h): the prefix form along e -> g, the suffix form
    along g -> g h.  Equals massey2(I, |I|)(g, h) exactly.
    """
    if len(I) < 2:
        raise ValueError("need length >= 2")
    e = Word()
    total = 0
    for r in range(1, len(I)):
        total += evaluate_segment(gamma_form(I[:r]), e, g) * evaluate_segment(
            gamma_form(I[r:]), g, h
        )
    return total
