"""Command-line front end.

One static entry point (`nilcoh`) with batch subcommands; output is plain
text or versioned JSON ("schema": 1).  Integers that may exceed 64 bits
are emitted as decimal strings in JSON mode.  The environment variable
NILCOH_MAX_DEGREE caps the truncation level k globally (default 8); an
optional JSON config file supplies flag defaults.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import cochain, cocycle3, derham, magnus, topology, verify, words
from .words import Word, format_index, format_word, parse_index, parse_word

SCHEMA_VERSION = 1

_INT64_MAX = (1 << 63) - 1


class CommandError(Exception):
    """A violated precondition, reported as a structured usage error."""


def _max_degree() -> int:
    raw = os.environ.get("NILCOH_MAX_DEGREE", "8")
    try:
        return int(raw)
    except ValueError:
        raise CommandError("NILCOH_MAX_DEGREE must be an integer, got %r" % raw)


def _check_level(k: int) -> int:
    cap = _max_degree()
    if k > cap:
        raise CommandError(
            "k = %d exceeds NILCOH_MAX_DEGREE = %d" % (k, cap)
        )
    return k


def _jsonable(v):
    """Big ints become decimal strings so JSON consumers stay exact."""
    if isinstance(v, bool):
        return v
    if isinstance(v, int):
        return str(v) if abs(v) > _INT64_MAX else v
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _emit(args, payload: dict, text: str) -> None:
    if args.output == "json":
        payload = {"schema": SCHEMA_VERSION, **payload}
        print(json.dumps(_jsonable(payload), indent=2, sort_keys=True))
    else:
        print(text)


# ---------------------------------------------------------------------------
# Subcommand handlers.
# ---------------------------------------------------------------------------


def _cmd_witt(args) -> int:
    n = words.witt_number(args.q, args.k)
    _emit(args, {"q": args.q, "k": args.k, "witt": n}, str(n))
    return 0


def _cmd_lyndon(args) -> int:
    seqs = words.standard_sequences(args.q, args.k)
    _emit(
        args,
        {"q": args.q, "k": args.k, "sequences": [format_index(s) for s in seqs]},
        "\n".join(format_index(s) for s in seqs),
    )
    return 0


def _cmd_magnus(args) -> int:
    _check_level(args.k)
    w = parse_word(args.word)
    p = magnus.magnus_expand(w, args.k)
    table = {format_index(m) if m else "1": coeff for m, coeff in p.canonical_items()}
    _emit(
        args,
        {"word": format_word(w), "k": args.k, "coefficients": table},
        str(p),
    )
    return 0


def _cmd_upsilon(args) -> int:
    _check_level(args.k)
    w = parse_word(args.word)
    m = magnus.upsilon(w, args.k)
    rows = [
        ["0" if j < i else str(m.entry(i, j)) for j in range(args.k)]
        for i in range(args.k)
    ]
    _emit(
        args,
        {"word": format_word(w), "k": args.k, "matrix": rows},
        str(m),
    )
    return 0


def _cmd_massey2(args) -> int:
    I = parse_index(args.index)
    k = _check_level(len(I))
    f = cochain.massey2(I, k)
    x, y = parse_word(args.x), parse_word(args.y)
    v = f(x, y)
    _emit(
        args,
        {"index": format_index(I), "k": k, "x": format_word(x), "y": format_word(y), "value": v},
        str(v),
    )
    return 0


def _cmd_massey3(args) -> int:
    I = parse_index(args.index)
    if args.variant == "gamma":
        k = _check_level(len(I))
        f = cocycle3.gamma3(args.s, I, k)
    else:
        k = _check_level(len(I) - 1)
        f = (
            cocycle3.corrected_3cocycle
            if args.variant == "corrected"
            else cocycle3.corrected_3cocycle_printed
        )(args.s, I, k)
    xs = [parse_word(t) for t in (args.x, args.y, args.z)]
    v = f(*xs)
    _emit(
        args,
        {
            "variant": args.variant,
            "s": args.s,
            "index": format_index(I),
            "k": k,
            "args": [format_word(w) for w in xs],
            "value": v,
        },
        str(v),
    )
    return 0


def _cmd_census3(args) -> int:
    _check_level(args.k)
    census = cocycle3.census_basis3(args.q, args.k)
    lines = []
    slices = []
    for sl in census.slices:
        lines.append(
            "ell=%d  rank=%d  filter-pairs=%d%s"
            % (sl.ell, sl.count, len(sl.pairs), "  (emitted)" if sl.emitted else "")
        )
        slices.append(
            {
                "ell": sl.ell,
                "rank": sl.count,
                "filter_pairs": [
                    {"index": format_index(I), "s": s} for I, s in sl.pairs
                ],
                "emitted": sl.emitted,
            }
        )
    lines.append("total rank H^3 = %d" % census.total_rank)
    _emit(
        args,
        {"q": args.q, "k": args.k, "slices": slices, "total_rank": census.total_rank},
        "\n".join(lines),
    )
    return 0


def _cmd_pair(args) -> int:
    I = parse_index(args.index)
    _check_level(len(I))
    w = parse_word(args.word)
    v = cochain.pairing(I, w)
    _emit(
        args,
        {"index": format_index(I), "word": format_word(w), "value": v},
        str(v),
    )
    return 0


def _parse_relators(text: str) -> tuple[tuple[int, ...], ...]:
    return tuple(parse_index(part) for part in text.split(":") if part)


def _cmd_quotient(args) -> int:
    _check_level(args.k)
    G = cocycle3.CentralQuotientGroup(
        q=args.q, k=args.k, relators=_parse_relators(args.relators)
    )
    if args.action == "phi":
        f = cocycle3.phi_cocycle(G, args.j)
        x, y = parse_word(args.x), parse_word(args.y)
        v = f(x, y)
        _emit(
            args,
            {"action": "phi", "j": args.j, "x": format_word(x), "y": format_word(y), "value": v},
            str(v),
        )
        return 0
    obstructions = cocycle3.triple_massey_obstructions(G, args.r, args.j, args.s)
    f = cocycle3.triple_massey(G, args.r, args.j, args.s)
    xs = [parse_word(t) for t in (args.x, args.y, args.z)]
    v = f(*xs)
    text = str(v)
    if obstructions:
        text += "  (warning: descent obstructions %r)" % (obstructions,)
    _emit(
        args,
        {
            "action": "triple",
            "r": args.r,
            "j": args.j,
            "s": args.s,
            "args": [format_word(w) for w in xs],
            "value": v,
            "descent_obstructions": obstructions,
        },
        text,
    )
    return 0


def _cmd_mu(args) -> int:
    I = parse_index(args.index)
    _check_level(len(I))
    w = parse_word(args.longitude)
    ls = topology.LongitudeSystem(
        max(args.component, w.max_index(), max(I)), {args.component: w}, len(I)
    )
    v = topology.milnor_mu(ls, I, args.component)
    _emit(
        args,
        {
            "index": format_index(I),
            "component": args.component,
            "longitude": format_word(w),
            "value": v,
        },
        str(v),
    )
    return 0


def _parse_images(items: list[str]) -> topology.FreeEndomorphism:
    images = {}
    for item in items:
        if "=" not in item:
            raise CommandError("--image expects i=WORD, got %r" % item)
        i, w = item.split("=", 1)
        images[int(i)] = parse_word(w)
    return topology.FreeEndomorphism(images)


def _cmd_johnson(args) -> int:
    _check_level(args.k)
    f = _parse_images(args.image)
    tau = topology.johnson_tau(f, args.k)
    table = {
        str(i): {format_index(s): v for s, v in sorted(entries.items())}
        for i, entries in tau.coefficients.items()
    }
    lines = [
        "tau_%d[x_%s]: %s" % (args.k, i, entries or "0")
        for i, entries in sorted(table.items())
    ]
    payload = {"k": args.k, "tau": table, "tau_zero": tau.is_zero()}
    if args.morita:
        payload["morita_vanishes"] = topology.morita_vanishes(f, args.k)
        lines.append("morita vanishes: %s" % payload["morita_vanishes"])
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_forms(args) -> int:
    J = parse_index(args.index)
    if args.kind == "gamma":
        form = derham.gamma_form(J)
    else:
        if len(J) < 2:
            raise CommandError("forms massey needs an index of length >= 2")
        form = derham.massey_2form(J)
    _emit(
        args,
        {"kind": args.kind, "index": format_index(J), "grade": form.grade, "form": str(form)},
        str(form),
    )
    return 0


def _cmd_verify(args) -> int:
    _check_level(args.k)
    modules = verify.MODULES if args.module == "all" else [args.module]
    if args.module != "all" and args.module not in verify.MODULES:
        raise CommandError(
            "unknown module %r (have: %s)" % (args.module, ", ".join(verify.MODULES))
        )
    cfg = verify.RunConfig(
        q=args.q,
        k=args.k,
        seed=args.seed,
        samples=args.samples,
        max_word_len=args.max_len,
    )
    report = verify.run(modules, cfg)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(report.to_json() + "\n")
    if args.output == "json":
        print(report.to_json())
    else:
        for r in report.results:
            print(
                "%s  %-8s  %-36s  samples=%d"
                % ("PASS" if r.passed else "FAIL", r.module, r.name, r.samples)
            )
            if not r.passed:
                print("      counterexample: %s" % json.dumps(r.counterexample))
                print("      lhs=%s rhs=%s" % (r.lhs, r.rhs))
        print("overall: %s" % ("PASS" if report.passed else "FAIL"))
    return 0 if report.passed else 1


def _cmd_replay(args) -> int:
    with open(args.report_path) as fh:
        original = json.load(fh)
    replayed = verify.replay(original)
    tampered = []
    for before, after in zip(original["results"], replayed.results):
        if not before["passed"] and after.passed:
            tampered.append(before["name"])
    if args.output == "json":
        payload = replayed.to_dict()
        payload["tampered"] = tampered
        print(json.dumps(_jsonable(payload), indent=2, sort_keys=True))
    else:
        for before, after in zip(original["results"], replayed.results):
            if before["passed"]:
                status = "pass (accepted)"
            elif after.passed:
                status = "TAMPERED (recorded values do not reproduce)"
            else:
                status = "failure confirmed"
            print("%-36s  %s" % (before["name"], status))
    return 1 if tampered else 0


# ---------------------------------------------------------------------------
# Parser.
# ---------------------------------------------------------------------------


def _add_common(p, *, q=True, k=True):
    if q:
        p.add_argument("--q", type=int, default=2, help="number of generators")
    if k:
        p.add_argument("--k", type=int, default=3, help="truncation level")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilcoh",
        description="Exact-arithmetic cocycles of free nilpotent groups.",
    )
    parser.add_argument(
        "--output", choices=("text", "json"), default="text", help="output format"
    )
    parser.add_argument(
        "--config", default=None, help="JSON file with flag defaults"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("witt", help="Witt number N_k")
    _add_common(p)
    p.set_defaults(fn=_cmd_witt)

    p = sub.add_parser("lyndon", help="standard sequences of length k")
    _add_common(p)
    p.set_defaults(fn=_cmd_lyndon)

    p = sub.add_parser("magnus", help="truncated expansion of a word")
    p.add_argument("--word", required=True)
    _add_common(p, q=False)
    p.set_defaults(fn=_cmd_magnus)

    p = sub.add_parser("upsilon", help="unitriangular matrix representation")
    p.add_argument("--word", required=True)
    _add_common(p, q=False)
    p.set_defaults(fn=_cmd_upsilon)

    p = sub.add_parser("massey2", help="evaluate the length-k Massey 2-cocycle")
    p.add_argument("--index", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.set_defaults(fn=_cmd_massey2)

    p = sub.add_parser("massey3", help="evaluate a 3-cocycle")
    p.add_argument("--variant", choices=("gamma", "corrected", "printed"), default="corrected")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--index", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--z", required=True)
    p.set_defaults(fn=_cmd_massey3)

    p = sub.add_parser("census3", help="H^3 basis census")
    _add_common(p)
    p.set_defaults(fn=_cmd_census3)

    p = sub.add_parser("pair", help="pairing of a standard index with w in F_k")
    p.add_argument("--index", required=True)
    p.add_argument("--word", required=True)
    p.set_defaults(fn=_cmd_pair)

    p = sub.add_parser("quotient", help="central quotient cocycles")
    p.add_argument("action", choices=("phi", "triple"))
    _add_common(p)
    p.add_argument(
        "--relators",
        required=True,
        help="colon-separated standard length-k indices, e.g. 112:122",
    )
    p.add_argument("--j", type=int, default=0, help="relator position")
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--z", default="1")
    p.set_defaults(fn=_cmd_quotient)

    p = sub.add_parser("mu", help="Milnor invariant of a longitude")
    p.add_argument("--index", required=True)
    p.add_argument("--component", type=int, required=True)
    p.add_argument("--longitude", required=True)
    p.set_defaults(fn=_cmd_mu)

    p = sub.add_parser("johnson", help="Johnson homomorphism of an endomorphism")
    _add_common(p, q=False)
    p.add_argument(
        "--image",
        action="append",
        required=True,
        help="generator image i=WORD (repeatable)",
    )
    p.add_argument("--morita", action="store_true", help="also test Morita vanishing")
    p.set_defaults(fn=_cmd_johnson)

    p = sub.add_parser("forms", help="symbolic invariant differential forms")
    p.add_argument("kind", choices=("gamma", "massey"))
    p.add_argument("--index", required=True)
    p.set_defaults(fn=_cmd_forms)

    p = sub.add_parser("verify", help="run invariant sweeps")
    p.add_argument("module", help="module name or 'all'")
    _add_common(p)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--max-len", type=int, default=8, help="max sampled word length")
    p.add_argument("--report", default=None, help="write the JSON report here")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("replay", help="re-execute a recorded report")
    p.add_argument("report_path")
    p.set_defaults(fn=_cmd_replay)

    return parser


def _config_defaults(argv: list[str]) -> dict:
    for i, tok in enumerate(argv):
        if tok == "--config" and i + 1 < len(argv):
            path = argv[i + 1]
        elif tok.startswith("--config="):
            path = tok.split("=", 1)[1]
        else:
            continue
        with open(path) as fh:
            data = json.load(fh)
        if not isinstance(data, dict):
            raise CommandError("config file must hold a JSON object")
        return data
    return {}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        defaults = _config_defaults(argv)
        if defaults:
            # parser-level defaults beat per-argument defaults but not
            # explicit flags; subparsers need them applied individually
            parser.set_defaults(**defaults)
            for action in parser._actions:
                if isinstance(action, argparse._SubParsersAction):
                    for sub in action.choices.values():
                        sub.set_defaults(**defaults)
        args = parser.parse_args(argv)
        return args.fn(args)
    except CommandError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError) as exc:
        print("error: precondition violated: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
