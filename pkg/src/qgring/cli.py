"""Command line front end.

Commands:
    analyze <spec>          full pipeline for one group
    sweep <family> ...      parameter sweeps with predicted vs computed verdicts
    verify-theorems         run the verification suite
    catalog                 list named groups

Global flags: --json, --cap N, --budget N, --seed N, --config PATH.
Exit codes for analyze: 0 ok, 2 parse error, 3 order cap exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from typing import Optional

from .catalog import bj1_group, build_spec, catalog_describe, catalog_names
from .components import (
    count_matrix_components,
    predict_nilpotent,
    predict_nonnilpotent,
)
from .config import load_config
from .errors import OrderCapExceeded, ParseError, QGRingError
from .groups import (
    FiniteGroup,
    center,
    fingerprint,
    order_q_matrix,
    semidirect_vector,
)
from .numutil import is_prime, ord_mod
from .props import classify_ssn, nd_verdict

SCHEMA = 1


def _idem_hash(e) -> str:
    payload = f"{e.den}:{','.join(map(str, e.nums))}".encode()
    return hashlib.sha256(payload).hexdigest()[:12]


def _prediction_for(G: FiniteGroup, cls) -> Optional[dict]:
    """Map a structural classification to a Theorem A/B prediction."""
    try:
        if cls.tag == "Hamiltonian":
            pred = predict_nilpotent({"family": "Hamiltonian",
                                      "e_rank": cls.params["e_rank"],
                                      "odd_invariants": cls.params["odd_invariants"]})
        elif cls.tag == "PGroupNCN":
            bj = cls.params.get("bj")
            p = cls.params["p"]
            if bj == "BJ1":
                found = None
                total = 0
                n0 = G.order
                while n0 > 1:
                    n0 //= p
                    total += 1
                for m in range(2, total):
                    n = total - m
                    ref = bj1_group(p, m, n)
                    if fingerprint(ref) == fingerprint(G):
                        found = (m, n)
                        break
                if found is None:
                    return None
                pred = predict_nilpotent({"family": "BJ1", "p": p,
                                          "m": found[0], "n": found[1]})
            elif bj == "BJ2":
                pred = predict_nilpotent({"family": "BJ2", "p": p,
                                          "z_order": center(G).order})
            elif bj == "BJ3":
                n = (G.order // 8).bit_length() - 1
                pred = predict_nilpotent({"family": "BJ3", "n": n})
            elif bj in ("BJ4", "BJ5", "BJ6", "BJ7", "BJ8", "BJ9"):
                pred = predict_nilpotent({"family": bj})
            else:
                return None
        elif cls.tag == "SolvableTypeI":
            pred = predict_nonnilpotent({"family": "faithful",
                                         "p": cls.params["p"],
                                         "n": cls.params["n"],
                                         "q": cls.params["q_order"]})
        elif cls.tag == "SolvableTypeII":
            pred = predict_nonnilpotent({"family": "nonfaithful",
                                         "p": cls.params["p"],
                                         "q": cls.params["q"],
                                         "k": cls.params["k"],
                                         "k0": cls.params["k0"],
                                         "r0": cls.params["r0"]})
        else:
            return None
    except QGRingError:
        return None
    return {"family": pred.family, "params": {k: v for k, v in pred.params.items()
                                              if k != "family"},
            "one_matrix": pred.one_matrix, "component": pred.component,
            "nd": pred.nd, "detail": pred.detail}


def cmd_analyze(args) -> int:
    cfg = load_config(args.config)
    cap = args.cap or cfg.order_cap
    budget = args.budget or cfg.witness_budget
    seed = cfg.probe_seed if args.seed is None else args.seed
    try:
        G = build_spec(args.spec, cap=cap)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OrderCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except QGRingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    timing = {}
    t0 = time.perf_counter()
    cls = classify_ssn(G)
    timing["classify_ms"] = int(1000 * (time.perf_counter() - t0))

    t0 = time.perf_counter()
    report = nd_verdict(G, budget=budget, probe_budget=cfg.probe_budget,
                        seed=seed)
    timing["nd_ms"] = int(1000 * (time.perf_counter() - t0))

    pcis_info = []
    try:
        t0 = time.perf_counter()
        cnt, comps = count_matrix_components(G, probe_budget=cfg.probe_budget,
                                             seed=seed)
        for sp, desc in comps:
            entry = {
                "pair": sp.describe(),
                "pair_kind": sp.kind,
                "idempotent": _idem_hash(sp.e),
                "dim": desc.dim_over_Q,
                "center_rank": desc.center_rank,
                "kind": desc.kind,
            }
            if args.json:
                entry["descriptor"] = desc.to_dict()
            pcis_info.append(entry)
        timing["pcis_ms"] = int(1000 * (time.perf_counter() - t0))
    except QGRingError:
        cnt = report.matrix_count

    pred = _prediction_for(G, cls)
    if pred is not None:
        pred["agreement"] = (pred["one_matrix"] == (cnt.exact == 1)
                             if cnt.exact is not None else None)

    out = {
        "schema": SCHEMA,
        "group": {"spec": getattr(G, "spec", args.spec), "name": G.name,
                  "order": G.order},
        "properties": {"sn": report.sn, "ssn": report.ssn, "ncn": report.ncn,
                       "class": cls.tag, "class_params": cls.params},
        "pcis": pcis_info,
        "matrix_count": cnt.to_json(),
        "nd": report.to_dict(spec=getattr(G, "spec", args.spec)),
        "prediction": pred,
    }
    if args.json:
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        print(f"group {out['group']['spec']}  (order {G.order}, {G.name})")
        print(f"  properties: sn={report.sn} ssn={report.ssn} ncn={report.ncn} "
              f"class={cls.tag} {cls.params}")
        if pcis_info:
            print(f"  primitive central idempotents ({len(pcis_info)}):")
            for row in pcis_info:
                print(f"    {row['pair']:<30} dim={row['dim']:<4} "
                      f"center_rank={row['center_rank']:<3} {row['kind']:<24} "
                      f"e#{row['idempotent']}")
        print(f"  matrix components: {cnt}")
        print(f"  nd: {report.verdict} ({report.reason})")
        if pred is not None:
            print(f"  prediction [{pred['family']}]: one_matrix={pred['one_matrix']} "
                  f"nd={pred['nd']} agreement={pred.get('agreement')}")
        print(f"  timing: {timing}")
    return 0


def _parse_range(text: str) -> list[int]:
    if ":" in text:
        lo, hi = text.split(":", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def cmd_sweep(args) -> int:
    cfg = load_config(args.config)
    cap = args.cap or cfg.order_cap
    seed = cfg.probe_seed if args.seed is None else args.seed
    rows = []
    if args.family == "BJ1":
        for p in _parse_range(args.p or "2:3"):
            if not is_prime(p):
                continue
            for m in _parse_range(args.m or "2:3"):
                for n in _parse_range(args.n or "1:2"):
                    pred = predict_nilpotent({"family": "BJ1", "p": p, "m": m,
                                              "n": n})
                    row = {"params": {"p": p, "m": m, "n": n},
                           "order": p ** (m + n),
                           "predicted_one_matrix": pred.one_matrix,
                           "nd": pred.nd}
                    if p ** (m + n) <= cap:
                        G = bj1_group(p, m, n, cap=cap)
                        cnt, _ = count_matrix_components(
                            G, probe_budget=cfg.probe_budget, seed=seed)
                        row["computed_one_matrix"] = cnt.exact == 1
                        row["matrix_count"] = cnt.to_json()
                        row["agreement"] = row["computed_one_matrix"] == pred.one_matrix
                    rows.append(row)
    elif args.family == "BJ3":
        for n in _parse_range(args.n or "2:4"):
            pred = predict_nilpotent({"family": "BJ3", "n": n})
            row = {"params": {"n": n}, "order": 2 ** (n + 3),
                   "predicted_one_matrix": pred.one_matrix, "nd": pred.nd}
            if 2 ** (n + 3) <= cap:
                G = build_spec(f"X(Q(8),C({2 ** n}))", cap=cap)
                cnt, _ = count_matrix_components(G, probe_budget=cfg.probe_budget,
                                                 seed=seed)
                row["computed_one_matrix"] = cnt.exact == 1
                row["matrix_count"] = cnt.to_json()
                row["agreement"] = row["computed_one_matrix"] == pred.one_matrix
            rows.append(row)
    elif args.family == "repunit":
        for n in _parse_range(args.n or "2:5"):
            for p in _parse_range(args.p or "2:7"):
                if not is_prime(p):
                    continue
                q = (p ** n - 1) // (p - 1)
                if q * (p - 1) != p ** n - 1 or not is_prime(q):
                    continue
                pred = predict_nonnilpotent({"family": "faithful", "p": p,
                                             "n": n, "q": q})
                row = {"params": {"p": p, "n": n, "q": q}, "order": p ** n * q,
                       "predicted_one_matrix": pred.one_matrix, "nd": pred.nd}
                if p ** n * q <= cap and ord_mod(q, p) == n:
                    M = order_q_matrix(p, n, q)
                    G = semidirect_vector(p, n, M, q, cap=cap)
                    cnt, _ = count_matrix_components(
                        G, probe_budget=cfg.probe_budget, seed=seed)
                    row["computed_one_matrix"] = cnt.exact == 1
                    row["matrix_count"] = cnt.to_json()
                    row["agreement"] = row["computed_one_matrix"] == pred.one_matrix
                rows.append(row)
    elif args.family == "nonfaithful":
        from .numutil import element_of_order
        for p in _parse_range(args.p or "3:7"):
            if not is_prime(p):
                continue
            for q in _parse_range(args.q or "2:3"):
                if not is_prime(q) or q == p:
                    continue
                for k in _parse_range(args.k or "2:3"):
                    k0 = int(args.k0 or 1)
                    if not (1 <= k0 < k) or (p - 1) % q ** k0:
                        continue
                    r0 = element_of_order(p, q ** k0)
                    pred = predict_nonnilpotent(
                        {"family": "nonfaithful", "p": p, "q": q,
                         "k": k, "k0": k0, "r0": r0})
                    row = {"params": {"p": p, "q": q, "k": k, "k0": k0,
                                      "r0": r0},
                           "order": p * q ** k,
                           "predicted_one_matrix": pred.one_matrix,
                           "nd": pred.nd,
                           "per_j_division": {str(j): v for j, v in
                                              pred.detail["per_j_division"].items()}}
                    if p * q ** k <= cap:
                        G = build_spec(f"SdCyc({p},{q ** k},{r0})", cap=cap)
                        cnt, _ = count_matrix_components(
                            G, probe_budget=cfg.probe_budget, seed=seed)
                        row["computed_one_matrix"] = cnt.exact == 1
                        row["matrix_count"] = cnt.to_json()
                        row["agreement"] = row["computed_one_matrix"] == pred.one_matrix
                    rows.append(row)
    else:
        print(f"error: unknown family {args.family!r} "
              f"(families: BJ1, BJ3, repunit, nonfaithful)", file=sys.stderr)
        return 2

    rows.sort(key=lambda r: tuple(sorted(r["params"].items())))
    if args.json:
        print(json.dumps({"schema": SCHEMA, "family": args.family,
                          "rows": rows}, indent=2, sort_keys=True))
    else:
        for row in rows:
            par = " ".join(f"{k}={v}" for k, v in row["params"].items())
            comp = row.get("computed_one_matrix")
            agree = row.get("agreement")
            print(f"{args.family} {par:<28} order={row['order']:<6} "
                  f"predicted_one={row['predicted_one_matrix']} "
                  f"computed_one={comp if comp is not None else '-'} "
                  f"agree={agree if agree is not None else '-'} nd={row['nd']}")
    bad = [r for r in rows if r.get("agreement") is False]
    return 1 if bad else 0


def cmd_verify(args) -> int:
    from .verify import CATEGORIES, run_all
    cfg = load_config(args.config)
    only = args.only.split(",") if args.only else None
    if only:
        unknown = [c for c in only if c not in CATEGORIES]
        if unknown:
            print(f"error: unknown categories {unknown}; "
                  f"choose from {', '.join(CATEGORIES)}", file=sys.stderr)
            return 2
    progress = None if args.json else (lambda row: print(row.line(), flush=True))
    rows = run_all(only=only, cap=args.cap or cfg.order_cap,
                   budget=args.budget or 20000,
                   probe_budget=cfg.probe_budget,
                   seed=cfg.probe_seed if args.seed is None else args.seed,
                   progress=progress)
    failed = [r for r in rows if not r.passed]
    if args.json:
        print(json.dumps({"schema": SCHEMA,
                          "rows": [{"category": r.category, "name": r.name,
                                    "passed": r.passed, "detail": r.detail}
                                   for r in rows],
                          "passed": len(rows) - len(failed),
                          "failed": len(failed)}, indent=2, sort_keys=True))
    else:
        print(f"--- {len(rows) - len(failed)}/{len(rows)} checks passed")
    return 1 if failed else 0


def cmd_catalog(args) -> int:
    from .catalog import build_named
    entries = []
    for name in catalog_names():
        G = build_named(name)
        entries.append({"name": name, "order": G.order,
                        "description": catalog_describe(name)})
    if args.json:
        print(json.dumps({"schema": SCHEMA, "groups": entries}, indent=2,
                         sort_keys=True))
    else:
        for ent in entries:
            print(f"{ent['name']:<10} order={ent['order']:<4} {ent['description']}")
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    # SUPPRESS keeps a subcommand's absent flags from overwriting values
    # already parsed at the top level (flags are accepted in both positions)
    shared = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    shared.add_argument("--json", action="store_true",
                        help="machine-readable output")
    shared.add_argument("--cap", type=int, help="group order cap")
    shared.add_argument("--budget", type=int,
                        help="witness search budget (integrality tests)")
    shared.add_argument("--seed", type=int, help="probe seed")
    shared.add_argument("--config", help="config file path")

    parser = argparse.ArgumentParser(
        prog="qgring", parents=[shared],
        description="Wedderburn data of rational group algebras and "
                    "nilpotent-decomposition verdicts for integral group rings")
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", parents=[shared], help="analyze one group")
    p_an.add_argument("spec", help="group spec, e.g. 'SdCyc(3,8,2)' or 'A4'")

    p_sw = sub.add_parser("sweep", parents=[shared],
                          help="sweep a parametric family")
    p_sw.add_argument("family", help="BJ1 | BJ3 | repunit | nonfaithful")
    p_sw.add_argument("--p", default=None, help="range lo:hi or single value")
    p_sw.add_argument("--q", default=None)
    p_sw.add_argument("--m", default=None)
    p_sw.add_argument("--n", default=None)
    p_sw.add_argument("--k", default=None)
    p_sw.add_argument("--k0", default=None)

    p_vt = sub.add_parser("verify-theorems", parents=[shared],
                          help="run the verification suite")
    p_vt.add_argument("--only", default=None,
                      help="comma-separated categories to run")

    sub.add_parser("catalog", parents=[shared], help="list named groups")

    args = parser.parse_args(argv)
    for name, default in [("json", False), ("cap", None), ("budget", None),
                          ("seed", None), ("config", None)]:
        if not hasattr(args, name):
            setattr(args, name, default)
    if args.command == "analyze":
        return cmd_analyze(args)
    if args.command == "sweep":
        return cmd_sweep(args)
    if args.command == "verify-theorems":
        return cmd_verify(args)
    if args.command == "catalog":
        return cmd_catalog(args)
    return 2


if __name__ == "__main__":
    sys.exit(main())
