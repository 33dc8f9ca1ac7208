"""Verification sweeps: named invariant checks with replayable failures.

Every check is a pair (generator of input records, probe).  The generator
produces JSON-serializable input dictionaries, either by enumerating a
finite case list or by sampling from a seeded generator; the probe
recomputes both sides of the invariant from an input record alone.  A
failing sweep therefore stores a counterexample that replays exactly,
and a tampered report is detected by re-probing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterator

from . import cochain, cocycle3, derham, magnus, sampling, topology, words
from .words import Word, format_word, parse_word, parse_index, format_index

SCHEMA_VERSION = 1

Inputs = dict[str, object]


@dataclass(frozen=True)
class Check:
    name: str
    module: str
    gen: Callable[["RunConfig"], Iterator[Inputs]]
    probe: Callable[[Inputs], tuple[object, object]]
    sampled: bool = True


@dataclass
class RunConfig:
    q: int = 2
    k: int = 3
    seed: int = 7
    samples: int = 200
    max_word_len: int = 8

    def __post_init__(self) -> None:
        if self.q < 1 or self.k < 2:
            raise ValueError("need q >= 1 and k >= 2")
        if self.samples < 1 or self.max_word_len < 1:
            raise ValueError("need positive samples and max_word_len")


@dataclass
class CheckResult:
    name: str
    module: str
    samples: int
    passed: bool
    counterexample: Inputs | None = None
    lhs: str | None = None
    rhs: str | None = None

    def to_dict(self) -> dict:
        out = {
            "name": self.name,
            "module": self.module,
            "samples": self.samples,
            "passed": self.passed,
        }
        if not self.passed:
            out["counterexample"] = self.counterexample
            out["lhs"] = self.lhs
            out["rhs"] = self.rhs
        return out


@dataclass
class VerificationReport:
    seed: int
    config: dict
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "seed": self.seed,
            "config": self.config,
            "passed": self.passed,
            "results": [r.to_dict() for r in self.results],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _str(v: object) -> str:
    return str(v)


def run_check(check: Check, cfg: RunConfig) -> CheckResult:
    count = 0
    for inputs in check.gen(cfg):
        count += 1
        lhs, rhs = check.probe(inputs)
        if _str(lhs) != _str(rhs):
            return CheckResult(
                check.name, check.module, count, False, inputs, _str(lhs), _str(rhs)
            )
        if check.sampled and count >= cfg.samples:
            break
    return CheckResult(check.name, check.module, count, True)


def run(modules: list[str], cfg: RunConfig) -> VerificationReport:
    report = VerificationReport(
        seed=cfg.seed,
        config={
            "q": cfg.q,
            "k": cfg.k,
            "samples": cfg.samples,
            "max_word_len": cfg.max_word_len,
        },
    )
    for check in REGISTRY:
        if check.module in modules:
            report.results.append(run_check(check, cfg))
    return report


def replay(report_dict: dict) -> VerificationReport:
    """Re-execute the recorded counterexamples of a serialized report.

    Passing entries are re-accepted as-is; failing entries are re-probed
    from their stored inputs and the recorded side values are compared
    against the fresh computation, so edits to the report are flagged.
    """
    if report_dict.get("schema") != SCHEMA_VERSION:
        raise ValueError("unsupported report schema: %r" % report_dict.get("schema"))
    by_name = {c.name: c for c in REGISTRY}
    out = VerificationReport(
        seed=report_dict["seed"], config=dict(report_dict["config"])
    )
    for entry in report_dict["results"]:
        name = entry["name"]
        if name not in by_name:
            raise ValueError("unknown check %r in report" % name)
        check = by_name[name]
        if entry["passed"]:
            out.results.append(
                CheckResult(name, check.module, entry["samples"], True)
            )
            continue
        inputs = entry["counterexample"]
        lhs, rhs = check.probe(inputs)
        consistent = _str(lhs) == entry["lhs"] and _str(rhs) == entry["rhs"]
        still_failing = _str(lhs) != _str(rhs)
        out.results.append(
            CheckResult(
                name,
                check.module,
                entry["samples"],
                not (consistent and still_failing),
                inputs,
                _str(lhs),
                _str(rhs),
            )
        )
    return out


# ---------------------------------------------------------------------------
# Generators.
# ---------------------------------------------------------------------------


def _rng(cfg: RunConfig, label: str):
    return sampling.derive_rng(cfg.seed, label)


def _word_pairs(cfg: RunConfig, label: str) -> Iterator[Inputs]:
    rng = _rng(cfg, label)
    while True:
        yield {
            "q": cfg.q,
            "k": cfg.k,
            "u": format_word(sampling.random_word(rng, cfg.q, cfg.max_word_len)),
            "v": format_word(sampling.random_word(rng, cfg.q, cfg.max_word_len)),
        }


def _standard_tuples(cfg: RunConfig, label: str, arity: int) -> Iterator[Inputs]:
    rng = _rng(cfg, label)
    seqs = words.standard_sequences(cfg.q, cfg.k)
    while True:
        rec: Inputs = {
            "q": cfg.q,
            "k": cfg.k,
            "I": format_index(rng.choice(seqs)),
        }
        for slot in range(arity):
            rec["xyzw"[slot]] = format_word(
                sampling.random_word(rng, cfg.q, cfg.max_word_len)
            )
        yield rec


# ---------------------------------------------------------------------------
# Probes: words / magnus.
# ---------------------------------------------------------------------------


def _gen_witt(cfg: RunConfig) -> Iterator[Inputs]:
    for q in range(1, 5):
        for k in range(1, 9):
            yield {"q": q, "k": k}


def _probe_witt(inp: Inputs):
    q, k = int(inp["q"]), int(inp["k"])
    return len(words.standard_sequences(q, k)), words.witt_number(q, k)


def _gen_delta(cfg: RunConfig) -> Iterator[Inputs]:
    for q in range(2, min(cfg.q, 3) + 1):
        for k in range(2, min(cfg.k, 4) + 1):
            yield {"q": q, "k": k}


def _probe_delta(inp: Inputs):
    q, k = int(inp["q"]), int(inp["k"])
    seqs = words.standard_sequences(q, k)
    got = []
    for I in seqs:
        w = words.standard_commutator(I)
        p = magnus.magnus_expand(w, k + 1)
        got.append(tuple(p.coefficient(J) for J in seqs))
    want = [
        tuple(1 if i == j else 0 for j in range(len(seqs)))
        for i in range(len(seqs))
    ]
    return got, want


def _probe_multiplicative(inp: Inputs):
    k = int(inp["k"])
    u, v = parse_word(str(inp["u"])), parse_word(str(inp["v"]))
    return (
        magnus.magnus_expand(u * v, k),
        magnus.magnus_expand(u, k) * magnus.magnus_expand(v, k),
    )


def _probe_inverse(inp: Inputs):
    k = int(inp["k"])
    u = parse_word(str(inp["u"]))
    prod = magnus.magnus_expand(u, k) * magnus.magnus_expand(u.inverse(), k)
    return prod.is_one(), True


def _probe_shuffle(inp: Inputs):
    q, k = int(inp["q"]), int(inp["k"])
    u = parse_word(str(inp["u"]))
    return magnus.satisfies_shuffle_relations(magnus.magnus_expand(u, k), q), True


def _probe_upsilon_equality(inp: Inputs):
    k = int(inp["k"])
    u, v = parse_word(str(inp["u"])), parse_word(str(inp["v"]))
    via_upsilon = magnus.upsilon(u * v.inverse(), k).is_identity()
    return via_upsilon, magnus.equal_mod_Fk(u, v, k)


def _gen_upsilon_commutators(cfg: RunConfig) -> Iterator[Inputs]:
    rng = _rng(cfg, "upsilon-commutators")
    while True:
        yield {
            "q": cfg.q,
            "k": cfg.k,
            "u": format_word(sampling.random_weight_commutator(rng, cfg.q, cfg.k)),
        }


def _probe_upsilon_commutator(inp: Inputs):
    k = int(inp["k"])
    u = parse_word(str(inp["u"]))
    return magnus.upsilon(u, k).is_identity(), True


# ---------------------------------------------------------------------------
# Probes: cochain.
# ---------------------------------------------------------------------------


def _probe_massey2_cocycle(inp: Inputs):
    k = int(inp["k"])
    I = parse_index(str(inp["I"]))
    f = cochain.massey2(I, k)
    args = tuple(parse_word(str(inp[s])) for s in ("x", "y", "z"))
    return cochain.coboundary(f)(*args), 0


def _probe_defining_system(inp: Inputs):
    k = int(inp["k"])
    I = parse_index(str(inp["I"]))
    s, t = int(inp["s"]), int(inp["t"])
    lhs, rhs = cochain.defining_system_sides(I, k, s, t)
    x, y = parse_word(str(inp["x"])), parse_word(str(inp["y"]))
    return lhs(x, y), rhs(x, y)


def _gen_defining_system(cfg: RunConfig) -> Iterator[Inputs]:
    rng = _rng(cfg, "defining-system")
    seqs = words.standard_sequences(cfg.q, cfg.k)
    pairs = [
        (s, t)
        for s in range(1, cfg.k + 1)
        for t in range(s, cfg.k + 1)
        if (s, t) != (1, cfg.k)
    ]
    while True:
        s, t = rng.choice(pairs)
        yield {
            "q": cfg.q,
            "k": cfg.k,
            "I": format_index(rng.choice(seqs)),
            "s": s,
            "t": t,
            "x": format_word(sampling.random_word(rng, cfg.q, cfg.max_word_len)),
            "y": format_word(sampling.random_word(rng, cfg.q, cfg.max_word_len)),
        }


def _gen_massey2_perturb(cfg: RunConfig) -> Iterator[Inputs]:
    rng = _rng(cfg, "massey2-perturb")
    seqs = words.standard_sequences(cfg.q, cfg.k)
    while True:
        yield {
            "q": cfg.q,
            "k": cfg.k,
            "I": format_index(rng.choice(seqs)),
            "x": format_word(sampling.random_word(rng, cfg.q, cfg.max_word_len)),
            "y": format_word(sampling.random_word(rng, cfg.q, cfg.max_word_len)),
            "d": format_word(sampling.random_deep_element(rng, cfg.q, cfg.k)),
            "slot": rng.randint(0, 1),
        }


def _probe_massey2_perturb(inp: Inputs):
    k = int(inp["k"])
    I = parse_index(str(inp["I"]))
    f = cochain.massey2(I, k)
    x, y = parse_word(str(inp["x"])), parse_word(str(inp["y"]))
    d = parse_word(str(inp["d"]))
    if int(inp["slot"]) == 0:
        return f(x, y), f(x * d, y)
    return f(x, y), f(x, d * y)


def _probe_extension_equality(inp: Inputs):
    q, k = int(inp["q"]), int(inp["k"])
    u, v = parse_word(str(inp["u"])), parse_word(str(inp["v"]))
    via_ext = cochain.evaluate_word_in_extension(
        u, q, k
    ) == cochain.evaluate_word_in_extension(v, q, k)
    return via_ext, magnus.equal_mod_Fk(u, v, k + 1)


def _gen_pairing(cfg: RunConfig) -> Iterator[Inputs]:
    rng = _rng(cfg, "pairing")
    seqs = words.standard_sequences(cfg.q, cfg.k)
    while True:
        yield {
            "q": cfg.q,
            "k": cfg.k,
            "I": format_index(rng.choice(seqs)),
            "w": format_word(sampling.random_deep_element(rng, cfg.q, cfg.k)),
        }


def _probe_pairing(inp: Inputs):
    q, k = int(inp["q"]), int(inp["k"])
    I = parse_index(str(inp["I"]))
    w = parse_word(str(inp["w"]))
    seqs = words.standard_sequences(q, k)
    fiber = cochain.s_map(w, q, k)
    return cochain.pairing(I, w), fiber[seqs.index(I)]


# ---------------------------------------------------------------------------
# Probes: cocycle3.
# ---------------------------------------------------------------------------


def _census_pairs(q: int, k: int) -> list[tuple[int, tuple[int, ...]]]:
    out = []
    for ell in (k, k + 1):
        for I in words.standard_sequences(q, ell):
            for s in range(1, q + 1):
                if cocycle3.append_is_standard(I, s):
                    out.append((s, I))
    return out


def _gen_census_cochains(
    cfg: RunConfig, label: str, arity: int, extra: int = 0
) -> Iterator[Inputs]:
    # degree-3 constructions need k >= 3; extra=1 draws length-(k+1) indices
    rng = _rng(cfg, label)
    k = max(cfg.k, 3)
    seqs = words.standard_sequences(cfg.q, k + extra)
    while True:
        rec: Inputs = {
            "q": cfg.q,
            "k": k,
            "s": rng.randint(1, cfg.q),
            "I": format_index(rng.choice(seqs)),
        }
        for slot in range(arity):
            rec["xyzw"[slot]] = format_word(
                sampling.random_word(rng, cfg.q, cfg.max_word_len)
            )
        yield rec


def _probe_gamma3_cocycle(inp: Inputs):
    k = int(inp["k"])
    f = cocycle3.gamma3(int(inp["s"]), parse_index(str(inp["I"])), k)
    args = tuple(parse_word(str(inp[c])) for c in "xyzw")
    return cochain.coboundary(f)(*args), 0


def _probe_corrected3_cocycle(inp: Inputs):
    k = int(inp["k"])
    f = cocycle3.corrected_3cocycle(int(inp["s"]), parse_index(str(inp["I"])), k)
    args = tuple(parse_word(str(inp[c])) for c in "xyzw")
    return cochain.coboundary(f)(*args), 0


def _gen_corrected3_perturb(cfg: RunConfig) -> Iterator[Inputs]:
    rng = _rng(cfg, "corrected3-perturb")
    base = _gen_census_cochains(cfg, "corrected3-perturb-base", 3, 1)
    for rec in base:
        rec["d"] = format_word(
            sampling.random_deep_element(rng, int(rec["q"]), int(rec["k"]))
        )
        rec["slot"] = rng.randint(0, 2)
        yield rec


def _probe_corrected3_perturb(inp: Inputs):
    k = int(inp["k"])
    f = cocycle3.corrected_3cocycle(int(inp["s"]), parse_index(str(inp["I"])), k)
    args = [parse_word(str(inp[c])) for c in "xyz"]
    before = f(*args)
    slot = int(inp["slot"])
    args[slot] = args[slot] * parse_word(str(inp["d"]))
    return before, f(*args)


def _probe_corrected3_matches(inp: Inputs):
    k = int(inp["k"])
    s, I = int(inp["s"]), parse_index(str(inp["I"]))
    args = tuple(parse_word(str(inp[c])) for c in "xyz")
    closed = cocycle3.corrected_3cocycle(s, I, k)
    via = cocycle3.corrected_3cocycle_via_coboundary(s, I, k)
    return closed(*args), via(*args)


def _gen_census_rank(cfg: RunConfig) -> Iterator[Inputs]:
    for q in (2, 3):
        for k in range(3, 6):
            yield {"q": q, "k": k}


def _probe_census_rank(inp: Inputs):
    q, k = int(inp["q"]), int(inp["k"])
    census = cocycle3.census_basis3(q, k)
    want = [
        q * words.witt_number(q, ell) - words.witt_number(q, ell + 1)
        for ell in range(k, 2 * k - 1)
    ]
    got = [sl.count for sl in census.slices]
    return (got, census.total_rank), (want, cocycle3.h3_rank(q, k))


def _quotient_group(q: int, k: int, relator: tuple[int, ...]):
    return cocycle3.CentralQuotientGroup(q=q, k=k, relators=(relator,))


def _gen_phi(cfg: RunConfig) -> Iterator[Inputs]:
    rng = _rng(cfg, "phi-independence")
    while True:
        yield {
            "q": 2,
            "k": 3,
            "relator": "112",
            "g": format_word(sampling.random_word(rng, 2, cfg.max_word_len)),
            "h": format_word(sampling.random_word(rng, 2, cfg.max_word_len)),
            "power": rng.choice((-2, -1, 1, 2)),
            "slot": rng.randint(0, 1),
        }


def _probe_phi(inp: Inputs):
    G = _quotient_group(int(inp["q"]), int(inp["k"]), parse_index(str(inp["relator"])))
    phi = cocycle3.phi_cocycle(G, 0)
    g, h = parse_word(str(inp["g"])), parse_word(str(inp["h"]))
    before = phi(g, h)
    moved = G.perturb(g if int(inp["slot"]) == 0 else h, 0, int(inp["power"]))
    if int(inp["slot"]) == 0:
        return before, phi(moved, h)
    return before, phi(g, moved)


def _gen_cobounding(cfg: RunConfig) -> Iterator[Inputs]:
    rng = _rng(cfg, "cobounding")
    while True:
        yield {
            "q": 2,
            "k": 3,
            "relator": "112",
            "r": rng.randint(1, 2),
            "s": rng.randint(1, 2),
            "side": rng.randint(0, 1),
            "x": format_word(sampling.random_word(rng, 2, cfg.max_word_len)),
            "y": format_word(sampling.random_word(rng, 2, cfg.max_word_len)),
            "z": format_word(sampling.random_word(rng, 2, cfg.max_word_len)),
        }


def _probe_cobounding(inp: Inputs):
    G = _quotient_group(int(inp["q"]), int(inp["k"]), parse_index(str(inp["relator"])))
    first, second = cocycle3.cobounding_identity_sides(
        G, int(inp["r"]), 0, int(inp["s"])
    )
    lhs, rhs = first if int(inp["side"]) == 0 else second
    args = tuple(parse_word(str(inp[c0])) for c0 in "xyz")
    return lhs(*args), rhs(*args)


def _gen_triple_massey(cfg: RunConfig) -> Iterator[Inputs]:
    rng = _rng(cfg, "triple-massey")
    while True:
        yield {
            "q": 3,
            "k": 3,
            "relator": "123",
            "r": 2,
            "s": 2,
            "x": format_word(sampling.random_word(rng, 3, cfg.max_word_len)),
            "y": format_word(sampling.random_word(rng, 3, cfg.max_word_len)),
            "z": format_word(sampling.random_word(rng, 3, cfg.max_word_len)),
            "w": format_word(sampling.random_word(rng, 3, cfg.max_word_len)),
        }


def _probe_triple_massey(inp: Inputs):
    G = _quotient_group(int(inp["q"]), int(inp["k"]), parse_index(str(inp["relator"])))
    f = cocycle3.triple_massey(G, int(inp["r"]), 0, int(inp["s"]))
    args = tuple(parse_word(str(inp[c])) for c in "xyzw")
    return cochain.coboundary(f)(*args), 0


# ---------------------------------------------------------------------------
# Probes: topology.
# ---------------------------------------------------------------------------


def _gen_mu(cfg: RunConfig) -> Iterator[Inputs]:
    rng = _rng(cfg, "mu-crosscheck")
    q = max(cfg.q, 3)
    k = min(cfg.k, 4)
    seqs = [
        I
        for I in words.standard_sequences(q, k)
        if len(set(I)) >= 1
    ]
    while True:
        I = rng.choice(seqs)
        comp = rng.choice([j for j in range(1, q + 1) if j != I[0]] or [q])
        yield {
            "q": q,
            "k": k,
            "I": format_index(I),
            "component": comp,
            "w": format_word(sampling.random_deep_element(rng, q, k)),
        }


def _probe_mu(inp: Inputs):
    q, k = int(inp["q"]), int(inp["k"])
    comp = int(inp["component"])
    ls = topology.LongitudeSystem(
        q, {comp: parse_word(str(inp["w"]))}, k
    )
    I = parse_index(str(inp["I"]))
    mu, paired = topology.mu_pairing_crosscheck(ls, I, comp)
    return mu, paired


def _gen_johnson(cfg: RunConfig) -> Iterator[Inputs]:
    rng = _rng(cfg, "johnson-additive")
    while True:
        f = sampling.random_torelli_endomorphism(rng, cfg.q, cfg.k)
        g = sampling.random_torelli_endomorphism(rng, cfg.q, cfg.k)
        yield {
            "q": cfg.q,
            "k": cfg.k,
            "f": {str(i): format_word(w) for i, w in f.items()},
            "g": {str(i): format_word(w) for i, w in g.items()},
        }


def _parse_endo(table: dict) -> topology.FreeEndomorphism:
    return topology.FreeEndomorphism(
        {int(i): parse_word(str(w)) for i, w in table.items()}
    )


def _probe_johnson(inp: Inputs):
    k = int(inp["k"])
    f = _parse_endo(inp["f"])  # type: ignore[arg-type]
    g = _parse_endo(inp["g"])  # type: ignore[arg-type]
    lhs = topology.johnson_tau(f.compose(g), k)
    rhs = topology.johnson_tau(f, k) + topology.johnson_tau(g, k)
    return sorted(
        (i, sorted(t.items())) for i, t in lhs.coefficients.items() if t
    ), sorted((i, sorted(t.items())) for i, t in rhs.coefficients.items() if t)


def _gen_tau_depth(cfg: RunConfig) -> Iterator[Inputs]:
    rng = _rng(cfg, "tau-depth")
    while True:
        depth = rng.choice((cfg.k, cfg.k + 1))
        f = sampling.random_torelli_endomorphism(rng, cfg.q, depth)
        yield {
            "q": cfg.q,
            "k": cfg.k,
            "f": {str(i): format_word(w) for i, w in f.items()},
        }


def _probe_tau_depth(inp: Inputs):
    k = int(inp["k"])
    f = _parse_endo(inp["f"])  # type: ignore[arg-type]
    tau_zero = topology.johnson_tau(f, k).is_zero()
    deep = topology.torelli_depth(f, k + 1) >= k + 1
    return tau_zero, deep


# ---------------------------------------------------------------------------
# Probes: derham.
# ---------------------------------------------------------------------------


def _gen_index_words(cfg: RunConfig, min_len: int = 1) -> Iterator[Inputs]:
    q = min(cfg.q, 3)
    for L in range(min_len, 5):
        for J in product(range(1, q + 1), repeat=L):
            yield {"q": q, "J": format_index(J)}


def _probe_gamma_invariance(inp: Inputs):
    q = int(inp["q"])
    J = parse_index(str(inp["J"]))
    g = derham.gamma_form(J)
    return all(derham.pullback(g, h) == g for h in range(1, q + 1)), True


def _probe_structure(inp: Inputs):
    J = parse_index(str(inp["J"]))
    return derham.structure_residual(J).is_zero(), True


def _probe_massey_form(inp: Inputs):
    q = int(inp["q"])
    I = parse_index(str(inp["I"]))
    m = derham.massey_2form(I)
    closed = derham.exterior_d(m).is_zero()
    inv = all(derham.pullback(m, h) == m for h in range(1, q + 1))
    return (closed, inv), (True, True)


def _gen_massey_forms(cfg: RunConfig) -> Iterator[Inputs]:
    q = min(cfg.q, 3)
    for L in (2, 3, 4):
        for I in product(range(1, q + 1), repeat=L):
            yield {"q": q, "I": format_index(I)}


def _gen_bridge(cfg: RunConfig) -> Iterator[Inputs]:
    rng = _rng(cfg, "derham-bridge")
    while True:
        k = rng.randint(2, 4)
        yield {
            "q": cfg.q,
            "k": k,
            "I": format_index(tuple(rng.randint(1, cfg.q) for _ in range(k))),
            "g": format_word(sampling.random_word(rng, cfg.q, cfg.max_word_len)),
            "h": format_word(sampling.random_word(rng, cfg.q, cfg.max_word_len)),
        }


def _probe_bridge(inp: Inputs):
    k = int(inp["k"])
    I = parse_index(str(inp["I"]))
    g, h = parse_word(str(inp["g"])), parse_word(str(inp["h"]))
    return derham.massey_bridge(I, g, h), cochain.massey2(I, k)(g, h)


# ---------------------------------------------------------------------------
# Registry.
# ---------------------------------------------------------------------------

REGISTRY: list[Check] = [
    Check("witt-enumeration-agreement", "words", _gen_witt, _probe_witt, False),
    Check("standard-commutator-delta", "words", _gen_delta, _probe_delta, False),
    Check(
        "expansion-multiplicative",
        "magnus",
        lambda c: _word_pairs(c, "multiplicative"),
        _probe_multiplicative,
    ),
    Check(
        "expansion-inverse",
        "magnus",
        lambda c: _word_pairs(c, "inverse"),
        _probe_inverse,
    ),
    Check(
        "shuffle-relations",
        "magnus",
        lambda c: _word_pairs(c, "shuffle"),
        _probe_shuffle,
    ),
    Check(
        "upsilon-magnus-equality",
        "magnus",
        lambda c: _word_pairs(c, "upsilon-equality"),
        _probe_upsilon_equality,
    ),
    Check(
        "upsilon-commutator-identity",
        "magnus",
        _gen_upsilon_commutators,
        _probe_upsilon_commutator,
    ),
    Check(
        "massey2-cocycle",
        "cochain",
        lambda c: _standard_tuples(c, "massey2-cocycle", 3),
        _probe_massey2_cocycle,
    ),
    Check(
        "defining-system-compatibility",
        "cochain",
        _gen_defining_system,
        _probe_defining_system,
    ),
    Check(
        "massey2-well-defined",
        "cochain",
        _gen_massey2_perturb,
        _probe_massey2_perturb,
    ),
    Check(
        "extension-vs-magnus-equality",
        "cochain",
        lambda c: _word_pairs(c, "extension-equality"),
        _probe_extension_equality,
    ),
    Check("pairing-dual-path", "cochain", _gen_pairing, _probe_pairing),
    Check(
        "gamma3-cocycle",
        "cocycle3",
        lambda c: _gen_census_cochains(c, "gamma3-cocycle", 4),
        _probe_gamma3_cocycle,
    ),
    Check(
        "corrected3-cocycle",
        "cocycle3",
        lambda c: _gen_census_cochains(c, "corrected3-cocycle", 4, 1),
        _probe_corrected3_cocycle,
    ),
    Check(
        "corrected3-well-defined",
        "cocycle3",
        _gen_corrected3_perturb,
        _probe_corrected3_perturb,
    ),
    Check(
        "corrected3-matches-coboundary-form",
        "cocycle3",
        lambda c: _gen_census_cochains(c, "corrected3-matches", 3, 1),
        _probe_corrected3_matches,
    ),
    Check("census-rank-formula", "cocycle3", _gen_census_rank, _probe_census_rank, False),
    Check("phi-representative-independence", "cocycle3", _gen_phi, _probe_phi),
    Check("cobounding-identities", "cocycle3", _gen_cobounding, _probe_cobounding),
    Check("triple-massey-cocycle", "cocycle3", _gen_triple_massey, _probe_triple_massey),
    Check("mu-pairing-crosscheck", "topology", _gen_mu, _probe_mu),
    Check("johnson-additivity", "topology", _gen_johnson, _probe_johnson),
    Check("tau-depth-equivalence", "topology", _gen_tau_depth, _probe_tau_depth),
    Check(
        "gamma-form-invariance",
        "derham",
        _gen_index_words,
        _probe_gamma_invariance,
        False,
    ),
    Check(
        "structure-equation",
        "derham",
        lambda c: _gen_index_words(c, 2),
        _probe_structure,
        False,
    ),
    Check(
        "massey-form-closed-invariant",
        "derham",
        _gen_massey_forms,
        _probe_massey_form,
        False,
    ),
    Check("cochain-bridge", "derham", _gen_bridge, _probe_bridge),
]

MODULES = sorted({c.module for c in REGISTRY})
