"""Command-line front end.

Every subcommand prints either readable text or stable JSON (--format json);
term order is fixed by dominance-then-lex, so output is byte-stable across
runs.  Exit status: 0 on success, 1 when an identity check fails, 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import hl, hyper, thetas, typea, typec
from .mpoly import xvars, yvars
from .partitions import fmt_pair_set, fmt_parts, parse_pair_set, parse_parts
from .raising import Element

USAGE_ERROR = 2


def _out(args, payload_json, payload_text):
    if args.format == "json":
        print(json.dumps(payload_json, sort_keys=True))
    else:
        print(payload_text)


def _element_json(e: Element) -> dict:
    return e.to_json()


def _poly_json(p, m: int, k: int = 0) -> dict:
    return p.to_json(list(xvars(m)) + list(yvars(k)) + ([("t", 0)] if ("t", 0) in p.variables() else []))


def cmd_giambelli(args) -> int:
    alpha = parse_parts(args.index)
    if args.ring == "a":
        e = typea.giambelli_u(alpha)
    elif args.ring == "hl":
        e = hl.giambelli_v(alpha)
    else:
        dset = parse_pair_set(args.dset) if args.dset is not None else None
        e = typec.giambelli_w_dset(alpha, args.k, dset)
    _out(args, _element_json(e), str(e))
    return 0


def cmd_pieri(args) -> int:
    lam = parse_parts(getattr(args, "lambda"))
    if args.ring == "a":
        support = typea.pieri_u(args.p, lam)
        text = " + ".join(f"U[{fmt_parts(nu)}]" for nu in support) or "0"
        _out(args, {"terms": [{"index": list(nu), "coeff": [1]} for nu in support]}, text)
        return 0
    if args.ring == "hl":
        rows = hl.pieri_v(args.p, lam)
        text = " + ".join(f"({c})*V[{fmt_parts(mu)}]" for mu, c in rows) or "0"
        _out(args, {"terms": [{"index": list(mu), "coeff": list(c.coeffs)}
                              for mu, c in rows]}, text)
        return 0
    e = typec.pieri_w(args.p, lam, args.k,
                      "oracle" if args.oracle else "combinatorial")
    _out(args, _element_json(e), str(e))
    return 0


def cmd_mirror(args) -> int:
    lam = parse_parts(getattr(args, "lambda"))
    if args.ring == "a":
        rep = typea.mirror_u(lam)
    elif args.ring == "hl":
        rep = hl.mirror_v(lam)
    else:
        rep = typec.mirror_w(lam, args.k)
    ok = rep["ok"]
    if args.ring == "a":
        detail = {"ok": ok}
        text = f"mirror identities at {lam or '()'}: {'ok' if ok else 'FAIL'}"
    else:
        detail = {"ok": ok, "difference": _element_json(rep["difference"])}
        text = (f"mirror identity at {lam or '()'}: "
                + ("ok" if ok else f"FAIL, difference {rep['difference']}"))
    _out(args, detail, text)
    return 0 if ok else 1


def cmd_recursion(args) -> int:
    lam = parse_parts(getattr(args, "lambda"))
    if args.ring == "a":
        rep = typea.toprow_recursion_u(args.p, lam)
    elif args.ring == "c":
        rep = typec.toprow_recursion_w(args.p, lam, args.k)
    else:
        print("recursion supports --ring a or c", file=sys.stderr)
        return USAGE_ERROR
    ok = rep["ok"]
    _out(args, {"ok": ok, "lhs": _element_json(rep["lhs"])},
         f"top-row recursion at p={args.p}, lam={lam or '()'}: "
         + ("ok" if ok else f"FAIL, difference {rep['difference']}"))
    return 0 if ok else 1


def cmd_theta(args) -> int:
    lam = parse_parts(getattr(args, "lambda"))
    p = thetas.theta(lam, args.k, args.m, args.mode)
    _out(args, _poly_json(p, args.m, args.k), str(p))
    return 0


def cmd_skew_f(args) -> int:
    lam = parse_parts(getattr(args, "lambda"))
    mu = parse_parts(args.mu)
    p = thetas.skew_f(lam, mu, args.k, args.m)
    _out(args, _poly_json(p, args.m), str(p))
    return 0


def cmd_qexpand(args) -> int:
    lam = parse_parts(getattr(args, "lambda"))
    mu = parse_parts(args.mu)
    f = thetas.skew_f(lam, mu, args.k, args.m)
    coeffs = thetas.q_expansion(f, args.m)
    _out(args, {"coefficients": [{"index": list(nu), "coeff": c}
                                 for nu, c in coeffs.items()]},
         " + ".join(f"{c}*Q[{fmt_parts(nu)}]" for nu, c in coeffs.items()) or "0")
    return 0


def cmd_tableaux(args) -> int:
    from .tableaux import k_tableaux

    lam = parse_parts(getattr(args, "lambda"))
    mu = parse_parts(args.mu)
    rows_out = []
    lines = []
    for tab in k_tableaux(lam, mu, args.k, args.max_entry):
        rows_out.append({"rows": [list(r) for r in tab.rows()], "n": tab.n_stat,
                         "content": list(tab.content)})
        lines.append(str(tab) + f"\n  n = {tab.n_stat}")
    _out(args, {"count": len(rows_out), "tableaux": rows_out},
         "\n\n".join(lines) + f"\n\ntotal: {len(rows_out)}" if lines else "none")
    return 0


def cmd_bitableaux(args) -> int:
    from .tableaux import k_bitableaux

    lam = parse_parts(getattr(args, "lambda"))
    rows_out = []
    lines = []
    for bit in k_bitableaux(lam, args.k, args.max_entry):
        rows_out.append({"rows": [list(r) for r in bit.rows()], "n": bit.n_stat})
        lines.append(str(bit) + f"\n  n = {bit.n_stat}")
    _out(args, {"count": len(rows_out), "bitableaux": rows_out},
         "\n\n".join(lines) + f"\n\ntotal: {len(rows_out)}" if lines else "none")
    return 0


def cmd_stanley(args) -> int:
    w = tuple(parse_parts(args.window))
    if args.type == "a":
        p = hyper.stanley_a(w, args.m)
    else:
        p = hyper.stanley_c(w, args.m)
    _out(args, _poly_json(p, args.m), str(p))
    return 0


def cmd_schubert(args) -> int:
    w = tuple(parse_parts(args.window))
    n = args.n if args.n else len(w)
    p = hyper.schubert_bh(w, args.m, n)
    from .mpoly import MPoly
    variables = list(xvars(args.m)) + [("y", j) for j in range(1, n)]
    _out(args, p.to_json(variables), str(p))
    return 0


def cmd_grassmannian(args) -> int:
    if args.window:
        w = tuple(parse_parts(args.window))
        lam = hyper.partition_of(w, args.k)
        _out(args, {"partition": list(lam)}, fmt_parts(lam) or "()")
        return 0
    lam = parse_parts(getattr(args, "lambda"))
    w = hyper.grassmannian_element(lam, args.k, args.n)
    _out(args, {"window": list(w)}, fmt_parts(w))
    return 0


def cmd_reduced_words(args) -> int:
    w = tuple(parse_parts(args.window))
    if args.count:
        n = hyper.reduced_words(w, "count")
        _out(args, {"count": n}, str(n))
        return 0
    words = sorted(hyper.reduced_words(w))
    _out(args, {"count": len(words), "words": [list(word) for word in words]},
         "\n".join(fmt_parts(word) for word in words) + f"\ntotal: {len(words)}")
    return 0


def cmd_skew_check(args) -> int:
    w = tuple(parse_parts(args.window))
    result = hyper.is_skew(w, args.k, args.n)
    if result is None:
        _out(args, {"skew": False}, "not skew within the given rank")
        return 0
    lam, mu = result
    _out(args, {"skew": True, "lambda": list(lam), "mu": list(mu)},
         f"skew: lambda = {fmt_parts(lam) or '()'}, mu = {fmt_parts(mu) or '()'}")
    return 0


# ---------------------------------------------------------------------------
# verify suites


def _suite_pieri_a(args) -> list[tuple[str, bool]]:
    from .partitions import partitions_of
    from .raising import Element

    checks = []
    for n in range(args.max_size + 1):
        for lam in partitions_of(n):
            for p in range(args.max_p + 1):
                want = Element({nu: 1 for nu in typea.pieri_u(p, lam)}, "U")
                got = typea.pieri_u_oracle(p, lam)
                checks.append((f"pieri-a p={p} lam={lam}", want == got))
    return checks


def _suite_pieri_hl(args) -> list[tuple[str, bool]]:
    from .coeffs import TPoly
    from .partitions import partitions_of

    checks = []
    for n in range(args.max_size + 1):
        for lam in partitions_of(n):
            for p in range(args.max_p + 1):
                comb = {mu: TPoly(c) if isinstance(c, int) else c
                        for mu, c in hl.pieri_v(p, lam) if c}
                orac = {mu: TPoly(c) if isinstance(c, int) else c
                        for mu, c in hl.pieri_v_oracle(p, lam).terms.items()}
                checks.append((f"pieri-hl p={p} lam={lam}", comb == orac))
    return checks


def _suite_pieri_c(args) -> list[tuple[str, bool]]:
    from .partitions import k_strict_partitions_of

    checks = []
    for n in range(args.max_size + 1):
        for lam in k_strict_partitions_of(n, args.k, max_rows=4):
            for p in range(args.max_p + 1):
                a = typec.pieri_w(p, lam, args.k)
                b = typec.pieri_w(p, lam, args.k, "oracle")
                checks.append((f"pieri-c k={args.k} p={p} lam={lam}", a == b))
    return checks


def _suite_mirror_hl(args) -> list[tuple[str, bool]]:
    from .partitions import partitions_of

    return [(f"mirror-hl lam={lam}", hl.mirror_v(lam)["ok"])
            for n in range(args.max_size + 1) for lam in partitions_of(n)]


def _suite_mirror_c(args) -> list[tuple[str, bool]]:
    from .partitions import k_strict_partitions_of

    return [(f"mirror-c k={args.k} lam={lam}", typec.mirror_w(lam, args.k)["ok"])
            for n in range(args.max_size + 1)
            for lam in k_strict_partitions_of(n, args.k)]


def _suite_tableau_theta(args) -> list[tuple[str, bool]]:
    from .partitions import k_strict_partitions_of

    checks = []
    for n in range(args.max_size + 1):
        for lam in k_strict_partitions_of(n, args.k):
            a = thetas.theta(lam, args.k, args.m, "raising")
            b = thetas.theta(lam, args.k, args.m, "tableau")
            c = thetas.theta(lam, args.k, args.m, "reduction")
            checks.append((f"theta k={args.k} lam={lam} m={args.m}",
                           a == b and b == c))
    return checks


def _suite_abprop(args) -> list[tuple[str, bool]]:
    from .partitions import contains
    from .tableaux import count_standard_k_tableaux

    k, n, m = 1, 4, 3
    checks = []
    rng = hyper.grassmannian_range(k, n)
    for lam in rng:
        for mu in rng:
            if not contains(lam, mu):
                continue
            f = thetas.skew_f(lam, mu, k, m)
            compat = hyper.compatible_pair(lam, mu, k, n)
            std = count_standard_k_tableaux(lam, mu, k)
            ok = (bool(f) == compat == (std > 0))
            if ok and f:
                w = hyper.quotient_element(lam, mu, k, n)
                ok = f == hyper.stanley_c(w, m)
                if ok:
                    ok = all(c >= 0 for c in thetas.q_expansion(f, m).values())
            checks.append((f"abprop lam={lam} mu={mu}", ok))
    return checks


def _suite_stdcor(args) -> list[tuple[str, bool]]:
    from .partitions import contains, weight
    from .tableaux import count_standard_k_tableaux

    checks = []
    for k, n in ((1, 4), (2, 4)):
        rng = hyper.grassmannian_range(k, n)
        for lam in rng:
            for mu in rng:
                r = weight(lam) - weight(mu)
                if not contains(lam, mu) or not 0 < r <= 6:
                    continue
                if not hyper.compatible_pair(lam, mu, k, n):
                    continue
                w = hyper.quotient_element(lam, mu, k, n)
                words = hyper.reduced_words(w, "count")
                std = count_standard_k_tableaux(lam, mu, k)
                f = thetas.skew_f(lam, mu, k, r)
                coeff = f.terms.get(tuple((("x", i), 1) for i in range(1, r + 1)), 0)
                ok = words == std and coeff == words * (2 ** r)
                checks.append((f"stdcor k={k} lam={lam} mu={mu}", ok))
    return checks


SUITES = {
    "pieri-a": _suite_pieri_a,
    "pieri-hl": _suite_pieri_hl,
    "pieri-c": _suite_pieri_c,
    "mirror-hl": _suite_mirror_hl,
    "mirror-c": _suite_mirror_c,
    "tableau-theta": _suite_tableau_theta,
    "abprop": _suite_abprop,
    "stdcor": _suite_stdcor,
}


def cmd_verify(args) -> int:
    checks = SUITES[args.suite](args)
    failures = [name for name, ok in checks if not ok]
    if args.format == "json":
        print(json.dumps({"suite": args.suite, "checks": len(checks),
                          "failures": failures}, sort_keys=True))
    else:
        for name, ok in checks:
            print(f"{'ok  ' if ok else 'FAIL'} {name}")
        print(f"{args.suite}: {len(checks) - len(failures)}/{len(checks)} ok")
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# argument wiring


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="thetacalc",
                                  description=__doc__.splitlines()[0])
    top.add_argument("--format", choices=("text", "json"), default="text")
    sub = top.add_subparsers(dest="command", required=True)

    def ring_flags(p, rings=("a", "hl", "c")):
        p.add_argument("--ring", choices=rings, default="c")
        p.add_argument("--k", type=int, default=0)

    p = sub.add_parser("giambelli", help="expand a distinguished basis element")
    ring_flags(p)
    p.add_argument("--index", required=True)
    p.add_argument("--dset", default=None,
                   help="denominator set like '12,13' (ring c only)")
    p.set_defaults(fn=cmd_giambelli)

    p = sub.add_parser("pieri", help="a Pieri product in the distinguished basis")
    ring_flags(p)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--lambda", required=True)
    p.add_argument("--oracle", action="store_true",
                   help="use the ring oracle instead of the combinatorial rule")
    p.set_defaults(fn=cmd_pieri)

    p = sub.add_parser("mirror", help="verify a mirror identity")
    ring_flags(p)
    p.add_argument("--lambda", required=True)
    p.set_defaults(fn=cmd_mirror)

    p = sub.add_parser("recursion", help="verify a top-row recursion")
    ring_flags(p, rings=("a", "c"))
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--lambda", required=True)
    p.set_defaults(fn=cmd_recursion)

    p = sub.add_parser("theta", help="a theta polynomial in m variables")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--mode", choices=("raising", "tableau", "reduction"),
                   default="raising")
    p.set_defaults(fn=cmd_theta)

    p = sub.add_parser("skewF", help="the skew tableau function F^(k)_{lam/mu}")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", required=True)
    p.add_argument("--mu", default="")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(fn=cmd_skew_f)

    p = sub.add_parser("qexpand", help="Schur Q expansion of F^(k)_{lam/mu}")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", required=True)
    p.add_argument("--mu", default="")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(fn=cmd_qexpand)

    p = sub.add_parser("tableaux", help="enumerate k-tableaux")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", required=True)
    p.add_argument("--mu", default="")
    p.add_argument("--max-entry", type=int, required=True)
    p.set_defaults(fn=cmd_tableaux)

    p = sub.add_parser("bitableaux", help="enumerate k-bitableaux")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", required=True)
    p.add_argument("--max-entry", type=int, required=True,
                   help="largest unmarked entry")
    p.set_defaults(fn=cmd_bitableaux)

    p = sub.add_parser("stanley", help="a Stanley symmetric function")
    p.add_argument("--type", choices=("a", "c"), default="c")
    p.add_argument("--window", required=True, help="window like '2,-3,1'")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(fn=cmd_stanley)

    p = sub.add_parser("schubert", help="a Billey-Haiman Schubert polynomial")
    p.add_argument("--window", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, default=0)
    p.set_defaults(fn=cmd_schubert)

    p = sub.add_parser("grassmannian", help="the partition <-> window dictionary")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--lambda", default=None)
    p.add_argument("--window", default=None)
    p.set_defaults(fn=cmd_grassmannian)

    p = sub.add_parser("reduced-words", help="reduced words of a signed permutation")
    p.add_argument("--window", required=True)
    p.add_argument("--count", action="store_true")
    p.set_defaults(fn=cmd_reduced_words)

    p = sub.add_parser("skew-check", help="test whether an element is skew")
    p.add_argument("--window", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=cmd_skew_check)

    p = sub.add_parser("verify", help="run an identity suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--max-size", type=int, default=5)
    p.add_argument("--max-p", type=int, default=3)
    p.set_defaults(fn=cmd_verify)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
