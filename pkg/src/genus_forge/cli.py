"""Command-line front door.

Subcommands: eisenstein, qn, genus, chiy, relations, hilbert, coadjoint,
polytope, selftest.  Exit codes are a stable contract: 0 success, 1 a
verification failed (nonzero residual, route disagreement, failed
self-test), 2 usage or validation error (argparse's own convention).

The default q-precision is 15, overridable with GENUS_FORGE_PREC or
--prec.  All output is plain text, or JSON under --json, with entries
sorted so runs are reproducible byte for byte.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import acceptance
from .coadjoint import (OrbitSpec, RootSystem, cpn_orbit, crosscheck_qI,
                        grassmannian_orbit, orbit_fixed_points,
                        q_I_via_divided_diff)
from .localization import (FixedPointData, build_relation, chi_y_from_counts,
                           divides_chi_y, genus_qexp, genus_via_chern,
                           hilbert_polynomial, verify_relation)
from .modular import eisenstein_qexp, qn_expansion_via_product, series_to_json
from .polytope import (FHVectors, betti_pattern, combinatorial_index,
                       h_divisibility)
from .symfunc import partition_str, partitions_at_most


def _default_precision() -> int:
    raw = os.environ.get("GENUS_FORGE_PREC", "")
    if not raw:
        return 15
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        print(f"error: GENUS_FORGE_PREC must be a positive integer, got {raw!r}",
              file=sys.stderr)
        sys.exit(2)
    return value


def _load_fixed_points(path: str) -> FixedPointData:
    with open(path, "r", encoding="utf-8") as fh:
        return FixedPointData.from_json(json.load(fh)).validate()


def _emit(payload: dict, as_json: bool, lines) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


# -- subcommands -----------------------------------------------------------------------


def cmd_eisenstein(args) -> int:
    series = eisenstein_qexp(args.weight, args.level, args.prec)
    _emit({"series": series_to_json(series, args.level)}, args.json,
          [f"G[{args.weight},{args.level}] = {series}"])
    return 0


def cmd_qn(args) -> int:
    qn = qn_expansion_via_product(args.level, args.x_order, args.prec)
    lines = [f"a_{k} = {qn.coeffs[k]}" for k in range(args.x_order)]
    payload = {"level": args.level,
               "coeffs": [[k, series_to_json(qn.coeffs[k], args.level)]
                          for k in range(args.x_order)]}
    _emit(payload, args.json, lines)
    return 0


def cmd_genus(args) -> int:
    fpd = _load_fixed_points(args.fixed_points)
    via_loc = genus_qexp(fpd, args.level, args.prec)
    via_chern = genus_via_chern(fpd, args.level, args.prec)
    agree = all(via_loc.coeff(k) == via_chern.coeff(k)
                for k in range(args.prec))
    payload = {"level": args.level, "agree": agree,
               "series": series_to_json(via_loc, args.level)}
    _emit(payload, args.json,
          [f"genus (localization)  = {via_loc}",
           f"genus (Chern numbers) = {via_chern}",
           f"routes agree: {'yes' if agree else 'NO'}"])
    return 0 if agree else 1


def cmd_chiy(args) -> int:
    fpd = _load_fixed_points(args.fixed_points)
    chi = chi_y_from_counts(fpd)
    euler = chi.evaluate([Fraction(-1)])
    lines = [f"chi_y = {chi}", f"chi_(-1) = {euler} ({len(fpd.points)} fixed points)"]
    payload = {"chi_y": str(chi), "euler": str(euler),
               "fixed_points": len(fpd.points)}
    code = 0
    if args.k0 is not None:
        report = divides_chi_y(chi, args.k0)
        if report["divisible"]:
            lines.append(f"divisible by 1 - y + ... + (-y)^{args.k0 - 1}: "
                         f"quotient {report['quotient']}")
        else:
            lines.append(f"NOT divisible: remainder {report['remainder']}")
            code = 1
        payload["divisibility"] = {k: str(v) for k, v in report.items()}
    _emit(payload, args.json, lines)
    return code


def cmd_relations(args) -> int:
    fpd = _load_fixed_points(args.fixed_points)
    if args.k_max < args.k_min:
        raise ValueError("k-max must be >= k-min")
    code = 0
    lines, items = [], []
    for k in range(args.k_min, args.k_max + 1):
        rel = build_relation(fpd, args.level, k)
        if not args.raw:
            rel = rel.primitive()
        entry = {"k": k, "relation": rel.to_json(), "display": rel.render()}
        line = f"k={k}: {rel.render()}"
        if args.verify:
            report = verify_relation(rel, args.prec)
            entry["verified"] = report["ok"]
            if report["ok"]:
                line += f"   [verified to q^{args.prec}]"
            else:
                line += f"   [FAILED: residual {report['residual']}]"
                code = 1
        lines.append(line)
        items.append(entry)
    _emit({"relations": items}, args.json, lines)
    return code


def cmd_hilbert(args) -> int:
    fpd = _load_fixed_points(args.fixed_points)
    ms = [args.m] if args.m is not None else list(range(fpd.n + 1))
    lines, items = [], []
    for m in ms:
        h = hilbert_polynomial(fpd, args.level, m)
        lines.append(f"H_{m}(x) = {h.polynomial}   (H_{m}(0) = {h(0)})")
        items.append({"m": m, "polynomial": str(h.polynomial),
                      "at_zero": str(h(0))})
    _emit({"hilbert": items}, args.json, lines)
    return 0


def _build_orbit(args) -> OrbitSpec:
    if args.cpn is not None:
        return cpn_orbit(args.cpn)
    if args.grassmannian is not None:
        return grassmannian_orbit(args.grassmannian)
    if args.family is None or args.rank is None:
        raise ValueError("give either --cpn, --grassmannian, or family and rank")
    return OrbitSpec(RootSystem(args.family, args.rank), args.J or [])


def cmd_coadjoint(args) -> int:
    orbit = _build_orbit(args)
    lines = [f"orbit: {orbit!r}",
             f"roots outside <J>: {orbit.complement_roots}",
             "cosets: " + ", ".join(
                 "*".join(f"s{j}" for j in w.word) or "e" for w in orbit.cosets)]
    payload = {"orbit": orbit.to_json(), "n": orbit.n,
               "longest_word": list(orbit.longest_rep.word)}
    code = 0
    if args.xi:
        fpd = orbit_fixed_points(orbit, args.xi)
        payload["fixed_points"] = fpd.to_json()
        lines += [f"fixed points at xi={tuple(args.xi)}:"] + [
            f"  {label}: {point}" for label, point in zip(fpd.labels, fpd.points)]
    if args.partition is not None:
        poly = q_I_via_divided_diff(orbit, tuple(args.partition))
        lines.append(f"q_{partition_str(args.partition)} = {poly}")
        payload["q_I"] = str(poly)
    if args.crosscheck:
        if not args.xi:
            raise ValueError("--crosscheck needs --xi")
        checks = []
        for k in range(orbit.n, orbit.n + 1 + args.extra_degrees):
            for I in partitions_at_most(k, orbit.n):
                checks.append(crosscheck_qI(orbit, I, args.xi))
        for report in checks:
            mark = "ok" if report["ok"] else "MISMATCH"
            lines.append(f"  {report['partition']}: divided-difference "
                         f"{report['divided_difference']} vs localization "
                         f"{report['localization']} [{mark}]")
            if not report["ok"]:
                code = 1
        payload["crosschecks"] = [
            {"partition": r["partition"], "ok": r["ok"],
             "divided_difference": str(r["divided_difference"]),
             "localization": str(r["localization"])} for r in checks]
    _emit(payload, args.json, lines)
    return code


def cmd_polytope(args) -> int:
    with open(args.input, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    lines, payload = [], {}
    code = 0
    k0 = args.k0
    if "edges" in data:
        edges = [(tuple(p), tuple(q)) for p, q in data["edges"]]
        index = combinatorial_index(edges)
        payload["index"] = index
        lines.append(f"combinatorial index = {index}")
        if k0 is None:
            k0 = index
    if "f" in data:
        f = [int(v) for v in data["f"]]
        fh_vectors = FHVectors(len(f) - 1, f)
        payload.update(fh_vectors.describe())
        lines.append(f"f = {fh_vectors.f}")
        lines.append(f"h = {fh_vectors.h} (palindromic: "
                     f"{'yes' if fh_vectors.palindromic() else 'NO'})")
        if k0 is not None:
            report = h_divisibility(fh_vectors.h, k0)
            payload["divisibility"] = report
            if report["divisible"]:
                lines.append(f"1 + y + ... + y^{k0 - 1} divides: "
                             f"quotient {report['quotient']}")
            else:
                lines.append(f"NOT divisible by 1 + ... + y^{k0 - 1}: "
                             f"remainder {report['remainder']}")
                code = 1
            pattern = betti_pattern(fh_vectors.n, k0, fh_vectors.h)
            payload["pattern"] = pattern
            lines.append(f"pattern: {pattern}")
            if pattern["ok"] is False:
                code = 1
    if not payload:
        raise ValueError('input JSON needs an "f" or "edges" entry')
    _emit(payload, args.json, lines)
    return code


def cmd_selftest(args) -> int:
    return 0 if acceptance.run_all(args.seed) else 1


# -- parser ------------------------------------------------------------------------------


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _level(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError("level N must be >= 2")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genus-forge",
        description="Exact arithmetic for level-N elliptic genera: Eisenstein "
                    "series, fixed-point localization, relations, and the "
                    "polytope combinatorics they constrain.")
    sub = parser.add_subparsers(dest="command", required=True)
    prec = _default_precision()

    def common(p, with_prec=True):
        if with_prec:
            p.add_argument("--prec", type=_positive_int, default=prec,
                           help=f"q-series precision (default {prec})")
        p.add_argument("--json", action="store_true", help="JSON output")

    p = sub.add_parser("eisenstein", help="q-expansion of G[k,N]")
    p.add_argument("weight", type=_positive_int)
    p.add_argument("level", type=_level)
    common(p)
    p.set_defaults(fn=cmd_eisenstein)

    p = sub.add_parser("qn", help="x-coefficients of the level-N expansion")
    p.add_argument("level", type=_level)
    p.add_argument("--x-order", type=_positive_int, default=7)
    common(p)
    p.set_defaults(fn=cmd_qn)

    p = sub.add_parser("genus", help="level-N genus q-expansion, two routes")
    p.add_argument("fixed_points", help="fixed-point data JSON file")
    p.add_argument("level", type=_level)
    common(p)
    p.set_defaults(fn=cmd_genus)

    p = sub.add_parser("chiy", help="chi_y genus from fixed-point counts")
    p.add_argument("fixed_points")
    p.add_argument("--k0", type=_positive_int,
                   help="also test divisibility at this index")
    common(p, with_prec=False)
    p.set_defaults(fn=cmd_chiy)

    p = sub.add_parser("relations", help="Eisenstein-product relations")
    p.add_argument("fixed_points")
    p.add_argument("level", type=_level)
    p.add_argument("k_min", type=_positive_int)
    p.add_argument("k_max", type=_positive_int)
    p.add_argument("--verify", action="store_true",
                   help="check each relation vanishes as a q-series")
    p.add_argument("--raw", action="store_true",
                   help="keep raw localization coefficients (no content division)")
    common(p)
    p.set_defaults(fn=cmd_relations)

    p = sub.add_parser("hilbert", help="interpolated twisted-index polynomials")
    p.add_argument("fixed_points")
    p.add_argument("level", type=_positive_int,
                   help="index divisor for the line-bundle power")
    p.add_argument("--m", type=int, help="single exterior-power degree")
    common(p, with_prec=False)
    p.set_defaults(fn=cmd_hilbert)

    p = sub.add_parser("coadjoint", help="orbit cosets, fixed points, crosschecks")
    p.add_argument("family", nargs="?", choices=("A", "B"))
    p.add_argument("rank", nargs="?", type=_positive_int)
    p.add_argument("--J", type=int, nargs="*", help="simple-root indices")
    p.add_argument("--cpn", type=_positive_int,
                   help="projective-space orbit of this dimension")
    p.add_argument("--grassmannian", type=_positive_int,
                   help="oriented 2-planes in R^(2m+1), give m")
    p.add_argument("--xi", type=int, nargs="*", help="circle direction")
    p.add_argument("--partition", type=int, nargs="*",
                   help="print q_I for this partition")
    p.add_argument("--crosscheck", action="store_true",
                   help="compare both q_I routes for |I| = n..n+extra")
    p.add_argument("--extra-degrees", type=int, default=2)
    common(p, with_prec=False)
    p.set_defaults(fn=cmd_coadjoint)

    p = sub.add_parser("polytope", help="h-vector, index, divisibility, pattern")
    p.add_argument("input", help='JSON file with "f" and/or "edges"')
    p.add_argument("--k0", type=_positive_int,
                   help="index to test against (default: from edges)")
    common(p, with_prec=False)
    p.set_defaults(fn=cmd_polytope)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.add_argument("--seed", type=int, default=acceptance.DEFAULT_SEED)
    p.set_defaults(fn=cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
