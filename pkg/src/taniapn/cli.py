"""Command-line front end.

Commands: table, audit, check-apn, enumerate-beta, spectrum, classes,
witness, aut.  Global flags (before the command): --format, --workers,
--modulus, --seed.

Exit codes: 0 success / APN / verified; 1 audit or consistency failure;
2 usage error (including bad parameters and oversize requests);
3 negative verdict (not APN, not equivalent).

Field elements are read and printed as hex bit-patterns relative to the
modulus in use; with a --modulus override, cross-run comparisons require
matching moduli (a warning is printed).  All output is deterministic for
fixed flags; --workers never changes output bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from math import gcd

from . import counting, diffanalysis, equivalence, poly_roots
from .counting import CSV_HEADER, count_report
from .errors import TaniapnError, TooLarge
from .families import (
    GoldFunction,
    PottZhouParams,
    TaniguchiParams,
    gold,
    load_function,
    pott_zhou,
    save_function,
    taniguchi,
)
from .gf2m import FieldCtx, default_ctx

EXIT_OK = 0
EXIT_AUDIT_FAIL = 1
EXIT_USAGE = 2
EXIT_NEGATIVE = 3


@dataclass
class RunConfig:
    fmt: str = "pretty"
    workers: int | None = None          # None = auto
    modulus_overrides: dict[int, int] = field(default_factory=dict)
    seed: int | None = None
    _warned: set = field(default_factory=set)

    def ctx(self, m: int) -> FieldCtx:
        if m in self.modulus_overrides:
            if m not in self._warned:
                print(
                    f"warning: non-default modulus 0x{self.modulus_overrides[m]:X} "
                    f"for m={m}; element values are comparable only across runs "
                    f"with the same modulus",
                    file=sys.stderr,
                )
                self._warned.add(m)
            return FieldCtx(m, self.modulus_overrides[m])
        return default_ctx(m)


# ---------------------------------------------------------------------------
# Argument helpers
# ---------------------------------------------------------------------------

def _parse_m_spec(spec: str) -> list[int]:
    out: list[int] = []
    for token in spec.split(","):
        token = token.strip()
        if ".." in token:
            lo, hi = token.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(token))
    if not out:
        raise ValueError("empty m list")
    return out


def _parse_element(s: str) -> int:
    return int(s, 16)


def _parse_modulus_override(pairs: list[str]) -> dict[int, int]:
    out = {}
    for pair in pairs:
        if "=" not in pair:
            raise argparse.ArgumentTypeError(
                f"--modulus expects m=HEX, got {pair!r}")
        m_str, hex_str = pair.split("=", 1)
        m = int(m_str)
        modulus = int(hex_str, 16)
        FieldCtx(m, modulus)  # validates degree + irreducibility
        out[m] = modulus
    return out


def _parse_params_spec(spec: str) -> TaniguchiParams:
    parts = spec.split(",")
    if len(parts) != 4:
        raise ValueError(f"expected m,k,alpha,beta, got {spec!r}")
    m, k = int(parts[0]), int(parts[1])
    return TaniguchiParams(m=m, k=k, alpha=_parse_element(parts[2]),
                           beta=_parse_element(parts[3]))


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _emit_csv(header, rows) -> None:
    print(",".join(str(h) for h in header))
    for row in rows:
        print(",".join(str(v) for v in row))


def _emit_aligned(rows: list[tuple]) -> None:
    widths = [max(len(str(r[i])) for r in rows) for i in range(len(rows[0]))]
    for row in rows:
        print("  ".join(str(v).rjust(w) for v, w in zip(row, widths)))


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

def cmd_table(args, cfg: RunConfig) -> int:
    try:
        m_list = _parse_m_spec(args.m)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if any(m < 2 for m in m_list):
        print("error: table needs m >= 2", file=sys.stderr)
        return EXIT_USAGE
    reports = [count_report(m) for m in m_list]
    if cfg.fmt == "json":
        if args.full:
            _emit_json([r.to_json() for r in reports])
        else:
            _emit_json([{"m": r.m, "n": r.n_taniguchi, "bound": r.lower_bound}
                        for r in reports])
    elif cfg.fmt == "csv":
        if args.full:
            _emit_csv(CSV_HEADER, [r.csv_row() for r in reports])
        else:
            _emit_csv(("m", "n", "bound"),
                      [(r.m, r.n_taniguchi, r.lower_bound) for r in reports])
    else:
        if args.full:
            rows = [("m", "M", "N", "b", "eps", "#", "bound")]
            rows += [(r.m, r.capital_m, r.capital_n, r.b, r.epsilon,
                      r.n_taniguchi, r.lower_bound) for r in reports]
        else:
            rows = [("m", "#", "bound")]
            rows += [(r.m, r.n_taniguchi, r.lower_bound) for r in reports]
        _emit_aligned(rows)
    return EXIT_OK


# ---------------------------------------------------------------------------
# audit
# ---------------------------------------------------------------------------

def _audit_ks(m: int, policy: str) -> list[int]:
    if m == 1:
        return [1]
    if policy == "all":
        return [k for k in range(1, m) if gcd(k, m) == 1]
    ks = [1]
    for k in range((m - 1) // 2, 1, -1):  # largest k < m/2 coprime to m
        if gcd(k, m) == 1:
            ks.append(k)
            break
    return ks


def cmd_audit(args, cfg: RunConfig) -> int:
    failures = []
    lines = []
    for m in range(1, args.m_max + 1):
        ctx = cfg.ctx(m)
        want_m = counting.capital_m(m)
        want_n = counting.capital_n(m)
        want_b = counting.b_orbits(m)
        ks = _audit_ks(m, args.k_policy)
        bad = []
        for k in ks:
            got_m = len(poly_roots.phi_set(k, ctx))
            got_n = counting.oracle_capital_n(m, k, ctx)
            got_b = counting.oracle_b(m, k, ctx)
            if got_m != want_m:
                bad.append(f"k={k} M: formula={want_m} oracle={got_m}")
            if got_n != want_n:
                bad.append(f"k={k} N: formula={want_n} oracle={got_n}")
            if got_b != want_b:
                bad.append(f"k={k} b: formula={want_b} oracle={got_b}")
        k_str = ",".join(str(k) for k in ks)
        if bad:
            lines.append(f"m={m} k=[{k_str}] FAIL " + "; ".join(bad))
            failures.append(m)
        else:
            lines.append(
                f"m={m} k=[{k_str}] M={want_m} N={want_n} b={want_b} PASS")
    if cfg.fmt == "json":
        _emit_json({"lines": lines, "failures": failures})
    else:
        for line in lines:
            print(line)
    return EXIT_AUDIT_FAIL if failures else EXIT_OK


# ---------------------------------------------------------------------------
# check-apn / spectrum
# ---------------------------------------------------------------------------

def _build_function(args, cfg: RunConfig):
    """(function, params-dict, criterion verdict or None) for a family spec."""
    fam = args.family
    if fam == "taniguchi":
        if None in (args.m, args.k, args.alpha, args.beta):
            raise TaniapnError("taniguchi needs --m --k --alpha --beta")
        p = TaniguchiParams(m=args.m, k=args.k, alpha=args.alpha, beta=args.beta)
        f = taniguchi(p, cfg.ctx(args.m))
        desc = {"m": p.m, "k": p.k, "alpha": f"0x{p.alpha:X}", "beta": f"0x{p.beta:X}"}
        return f, desc, f.is_apn_criterion()
    if fam == "pott-zhou":
        if None in (args.m, args.k, args.s, args.alpha):
            raise TaniapnError("pott-zhou needs --m --k --s --alpha")
        p = PottZhouParams(m=args.m, k=args.k, s=args.s, alpha=args.alpha)
        f = pott_zhou(p, cfg.ctx(args.m))
        desc = {"m": p.m, "k": p.k, "s": p.s, "alpha": f"0x{p.alpha:X}"}
        return f, desc, f.is_apn_criterion()
    if fam == "gold":
        if None in (args.n, args.i):
            raise TaniapnError("gold needs --n --i")
        f = gold(args.n, args.i, cfg.ctx(args.n))
        desc = {"n": args.n, "i": args.i}
        return f, desc, True  # valid Gold parameters are known APN
    raise TaniapnError(f"unknown family {fam!r}")


def cmd_check_apn(args, cfg: RunConfig) -> int:
    f, desc, criterion = _build_function(args, cfg)
    scan = None
    spectrum = None
    if args.exhaustive:
        scan = diffanalysis.is_apn(f)
    if args.spectrum:
        spectrum = diffanalysis.differential_spectrum(f)
    if args.save_table is not None:
        if isinstance(f, GoldFunction):
            raise TaniapnError("truth-table files hold bivariate functions only")
        save_function(f, args.save_table)

    verdict = criterion if scan is None else scan
    mismatch = scan is not None and scan != criterion

    if cfg.fmt == "json":
        out = {"family": args.family, "params": desc, "criterion_apn": criterion}
        if scan is not None:
            out["scan_apn"] = scan
        if spectrum is not None:
            out["spectrum"] = spectrum.to_json()
        _emit_json(out)
    else:
        print(f"family     {args.family}")
        print("params     " + " ".join(f"{k}={v}" for k, v in desc.items()))
        print(f"criterion  {'APN' if criterion else 'NOT APN'}")
        if scan is not None:
            print(f"scan       {'APN' if scan else 'NOT APN'}")
        if spectrum is not None:
            print(f"uniformity {spectrum.uniformity}")
            for c, fr in sorted(spectrum.histogram.items()):
                print(f"  count {c}: {fr} pairs")
    if mismatch:
        print("error: criterion and exhaustive scan disagree", file=sys.stderr)
        return EXIT_AUDIT_FAIL
    return EXIT_OK if verdict else EXIT_NEGATIVE


def cmd_spectrum(args, cfg: RunConfig) -> int:
    if args.table is not None:
        f = load_function(args.table)
    elif args.family is None:
        print("error: spectrum needs a family or --table PATH", file=sys.stderr)
        return EXIT_USAGE
    else:
        f, _, _ = _build_function(args, cfg)
    spec = diffanalysis.differential_spectrum(f)
    if cfg.fmt == "json":
        _emit_json(spec.to_json())
    elif cfg.fmt == "csv":
        _emit_csv(("count", "pairs"), sorted(spec.histogram.items()))
    else:
        print(f"n          {spec.n}")
        print(f"uniformity {spec.uniformity}")
        for c, fr in sorted(spec.histogram.items()):
            print(f"  count {c}: {fr} pairs")
    return EXIT_OK


# ---------------------------------------------------------------------------
# enumerate-beta
# ---------------------------------------------------------------------------

def cmd_enumerate_beta(args, cfg: RunConfig) -> int:
    ctx = cfg.ctx(args.m)
    phi = poly_roots.phi_set(args.k, ctx)
    dec = poly_roots.frobenius_orbits(phi, ctx)
    if cfg.fmt == "json":
        _emit_json({"phi": phi.to_json(), "orbits": dec.to_json()})
    elif cfg.fmt == "csv":
        rows = []
        for beta in phi:
            rep = poly_roots.orbit_min(beta, ctx)
            rows.append((f"0x{beta:X}", f"0x{rep:X}",
                         poly_roots.orbit_length(beta, ctx)))
        _emit_csv(("beta", "orbit_representative", "orbit_length"), rows)
    else:
        print(f"m={args.m} k={args.k} |Phi|={len(phi)} orbits={len(dec)}")
        print("phi: " + " ".join(f"0x{b:X}" for b in phi))
        for rep, length in dec.orbits:
            print(f"orbit 0x{rep:X} length {length}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# classes
# ---------------------------------------------------------------------------

def cmd_classes(args, cfg: RunConfig) -> int:
    m = args.m
    if m < 3:
        print("error: classes needs m >= 3 (m=2 has the single class)",
              file=sys.stderr)
        return EXIT_USAGE
    ctx = cfg.ctx(m)
    if args.k is not None:
        if gcd(args.k, m) != 1:
            print(f"error: k={args.k} not coprime to m={m}", file=sys.stderr)
            return EXIT_USAGE
        k_stars = [min(args.k % m, m - args.k % m)]
    else:
        k_stars = [k for k in range(1, m // 2 + 1)
                   if gcd(k, m) == 1 and k < m / 2]
    rows = []
    for k in k_stars:
        if m % 2 == 0:
            noncubes = 2 * (ctx.order - 1) // 3
            rows.append({"k_star": k, "alpha_star": 0, "beta_star": None,
                         "members": noncubes})
        phi = poly_roots.phi_set(k, ctx)
        dec = poly_roots.frobenius_orbits(phi, ctx)
        for rep, length in dec.orbits:
            rows.append({"k_star": k, "alpha_star": 1,
                         "beta_star": f"0x{rep:X}", "members": length})
    if cfg.fmt == "json":
        _emit_json({"m": m, "classes": rows, "count": len(rows)})
    elif cfg.fmt == "csv":
        _emit_csv(("k_star", "alpha_star", "beta_star", "members"),
                  [(r["k_star"], r["alpha_star"], r["beta_star"] or "", r["members"])
                   for r in rows])
    else:
        print(f"m={m}: {len(rows)} classes" +
              ("" if args.k is not None else f" (n(m)={counting.n_taniguchi(m)})"))
        for r in rows:
            beta = r["beta_star"] if r["beta_star"] else "*"
            print(f"  (k={r['k_star']}, alpha={r['alpha_star']}, beta={beta})"
                  f"  members {r['members']}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# witness / aut
# ---------------------------------------------------------------------------

def cmd_witness(args, cfg: RunConfig) -> int:
    p1 = _parse_params_spec(getattr(args, "from"))
    p2 = _parse_params_spec(args.to)
    ctx = cfg.ctx(p1.m)
    w = equivalence.equivalence_witness(p1, p2, ctx)
    if w is None:
        if cfg.fmt == "json":
            _emit_json({"witness": None, "equivalent": False})
        else:
            print("no witness: members are CCZ-inequivalent "
                  "or no constructive path exists")
        return EXIT_NEGATIVE
    ok = equivalence.verify_witness(
        w, taniguchi(p1, ctx), taniguchi(p2, ctx))
    if cfg.fmt == "json":
        _emit_json({"witness": w.to_json(), "verified": ok})
    else:
        print(json.dumps(w.to_json(), indent=2, sort_keys=True))
        print(f"verified: {ok}")
    return EXIT_OK if ok else EXIT_AUDIT_FAIL


def cmd_aut(args, cfg: RunConfig) -> int:
    p = TaniguchiParams(m=args.m, k=args.k, alpha=args.alpha, beta=args.beta)
    orders = equivalence.aut_orders(p, cfg.ctx(args.m))
    note = "reported constant (single class)" if args.m in (2, 3) else None
    if cfg.fmt == "json":
        out = {"aut_el": orders.aut_el, "aut_ea": orders.aut_ea, "aut": orders.aut}
        if note:
            out["note"] = note
        _emit_json(out)
    else:
        print(f"aut_el {orders.aut_el}")
        print(f"aut_ea {orders.aut_ea}")
        print(f"aut    {orders.aut}" + (f"  ({note})" if note else ""))
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser / entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="taniapn",
        description="Taniguchi APN functions on GF(2^(2m)): verification, "
                    "equivalence classes, exact counts",
    )
    ap.add_argument("--format", choices=("pretty", "json", "csv"),
                    default="pretty", help="output format")
    ap.add_argument("--workers", default="auto",
                    help="worker count or 'auto' (never affects output bytes)")
    ap.add_argument("--modulus", action="append", default=[], metavar="m=HEX",
                    help="override the field modulus for degree m (repeatable)")
    ap.add_argument("--seed", type=int, default=None,
                    help="seed for randomized sampling; shipped commands are "
                         "deterministic")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="counting table: m, #classes, lower bound")
    p.add_argument("--m", required=True, help="m list, e.g. 2..16 or 3,5,7..9")
    p.add_argument("--full", action="store_true", help="add M, N, b, eps columns")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("audit", help="formula-vs-oracle agreement per m")
    p.add_argument("--m-max", type=int, required=True, choices=range(1, 25),
                   metavar="M", help="audit m = 1..M (M <= 24)")
    p.add_argument("--k-policy", choices=("default", "all"), default="default",
                   help="default: k=1 plus the largest k < m/2 coprime to m")
    p.set_defaults(func=cmd_audit)

    def add_family_args(p, with_table=False):
        p.add_argument("family", nargs="?" if with_table else None,
                       choices=("taniguchi", "pott-zhou", "gold"))
        p.add_argument("--m", type=int)
        p.add_argument("--k", type=int)
        p.add_argument("--alpha", type=_parse_element)
        p.add_argument("--beta", type=_parse_element)
        p.add_argument("--s", type=int)
        p.add_argument("--n", type=int)
        p.add_argument("--i", type=int)

    p = sub.add_parser("check-apn", help="criterion and optional exhaustive verdict")
    add_family_args(p)
    p.add_argument("--exhaustive", action="store_true",
                   help="run the 2^(2n) differential scan (2m <= 16)")
    p.add_argument("--spectrum", action="store_true",
                   help="also print the differential spectrum")
    p.add_argument("--save-table", default=None, metavar="PATH",
                   help="export the truth table (binary + JSON manifest)")
    p.set_defaults(func=cmd_check_apn)

    p = sub.add_parser("spectrum", help="differential spectrum of a function")
    add_family_args(p, with_table=True)
    p.add_argument("--table", default=None, metavar="PATH",
                   help="analyze a saved truth-table file instead of a family")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("enumerate-beta", help="dump Phi(m) and its orbits")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_enumerate_beta)

    p = sub.add_parser("classes", help="canonical class representatives")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("witness", help="produce and verify an equivalence witness")
    p.add_argument("--from", required=True, metavar="m,k,alpha,beta",
                   help="source params (alpha, beta in hex)")
    p.add_argument("--to", required=True, metavar="m,k,alpha,beta")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("aut", help="automorphism group orders")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--alpha", type=_parse_element, required=True)
    p.add_argument("--beta", type=_parse_element, required=True)
    p.set_defaults(func=cmd_aut)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    workers = args.workers
    if workers != "auto":
        try:
            workers = int(workers)
        except ValueError:
            print(f"error: --workers expects an integer or 'auto', got {workers!r}",
                  file=sys.stderr)
            return EXIT_USAGE
        if workers < 1:
            print("error: --workers must be >= 1", file=sys.stderr)
            return EXIT_USAGE
    try:
        overrides = _parse_modulus_override(args.modulus)
    except (TaniapnError, ValueError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    cfg = RunConfig(
        fmt=args.format,
        workers=None if workers == "auto" else workers,
        modulus_overrides=overrides,
        seed=args.seed,
    )
    try:
        return args.func(args, cfg)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TaniapnError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
