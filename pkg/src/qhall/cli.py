"""Command-line entry point: identity catalog, single runs, suite profiles.

Exit codes: 0 = pass, 1 = fail or inconclusive, 2 = usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .identities import BY_ID, CATALOG, get_entry
from .partitions import Partition, StripMask
from .points import DEFAULT_SEED
from .reports import FAIL, PASS


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qhall",
        description=(
            "Exact verification of Hall-Littlewood and q-series identities. "
            "Partitions are comma-separated part lists (e.g. 6,3,3,1; 0 for "
            "the empty partition); masks are bit strings (e.g. 0110)."
        ),
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="print the identity catalog").add_argument(
        "--format", choices=("text", "json"), default="text"
    )

    run = sub.add_parser("run", help="run one identity check")
    run.add_argument("identity_id")
    run.add_argument("--degree", "-N", type=int, help="q-series order")
    run.add_argument("--xdeg", "-D", type=int, help="series degree / z-degree")
    run.add_argument("--vars", help="variable counts, e.g. 2,2")
    run.add_argument("--bound", help="summation bounds M1,M2")
    run.add_argument(
        "--partition",
        action="append",
        default=[],
        help="partition argument; repeat for identities taking several",
    )
    run.add_argument("--mask", help="column-constraint bit string")
    run.add_argument("--variant", help="identity variant selector")
    run.add_argument("--strategy", help="random_points or series")
    run.add_argument("--shift", help="shift triple k1,k2,k3")
    run.add_argument(
        "--param",
        action="append",
        default=[],
        help="extra key=value parameter (repeatable)",
    )
    run.add_argument("--seed", type=int, default=DEFAULT_SEED)
    run.add_argument("--format", choices=("text", "json"), default="text")

    suite = sub.add_parser("suite", help="run a curated profile")
    suite.add_argument("--profile", choices=("quick", "full"), default="quick")
    suite.add_argument("--seed", type=int, default=DEFAULT_SEED)
    suite.add_argument("--format", choices=("text", "json"), default="text")
    return ap


def _parse_int_tuple(text: str, expect: int, what: str):
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"malformed {what}: {text!r}") from None
    if len(values) != expect:
        raise UsageError(f"{what} needs {expect} comma-separated integers: {text!r}")
    return values


def build_params(entry, args) -> dict:
    """Map CLI flags onto the entry's keyword arguments, validating early."""
    cli = entry.cli
    params: dict = {}
    if args.degree is not None:
        if "degree" not in cli:
            raise UsageError(f"{entry.identity_id} takes no --degree")
        params[cli["degree"]] = args.degree
    if args.xdeg is not None:
        if "xdeg" not in cli:
            raise UsageError(f"{entry.identity_id} takes no --xdeg")
        params[cli["xdeg"]] = args.xdeg
    if args.vars is not None:
        names = cli.get("vars")
        if not names:
            raise UsageError(f"{entry.identity_id} takes no --vars")
        for name, value in zip(names, _parse_int_tuple(args.vars, len(names), "--vars")):
            params[name] = value
    if args.bound is not None:
        names = cli.get("bound")
        if not names:
            raise UsageError(f"{entry.identity_id} takes no --bound")
        for name, value in zip(names, _parse_int_tuple(args.bound, len(names), "--bound")):
            params[name] = value
    if args.partition:
        slots = cli.get("partitions")
        if not slots:
            raise UsageError(f"{entry.identity_id} takes no --partition")
        if len(args.partition) > len(slots):
            raise UsageError(
                f"{entry.identity_id} takes at most {len(slots)} partition(s)"
            )
        for name, text in zip(slots, args.partition):
            try:
                params[name] = Partition.from_string(text)
            except ValueError as exc:
                raise UsageError(f"malformed partition {text!r}: {exc}") from None
    if args.mask is not None:
        if "mask" not in cli:
            raise UsageError(f"{entry.identity_id} takes no --mask")
        if args.mask in ("", "none"):
            params[cli["mask"]] = None
        else:
            try:
                params[cli["mask"]] = StripMask.from_string(args.mask)
            except ValueError as exc:
                raise UsageError(f"malformed mask {args.mask!r}: {exc}") from None
    if args.variant is not None:
        if "variant" not in cli:
            raise UsageError(f"{entry.identity_id} takes no --variant")
        params[cli["variant"]] = args.variant
    if args.strategy is not None:
        if "strategy" not in cli:
            raise UsageError(f"{entry.identity_id} takes no --strategy")
        params[cli["strategy"]] = args.strategy
    if args.shift is not None:
        if "shift" not in cli:
            raise UsageError(f"{entry.identity_id} takes no --shift")
        params[cli["shift"]] = _parse_int_tuple(args.shift, 3, "--shift")
    extras = set(cli.get("params", ()))
    for item in args.param:
        if "=" not in item:
            raise UsageError(f"--param needs key=value, got {item!r}")
        key, _, value = item.partition("=")
        if key not in extras:
            raise UsageError(
                f"{entry.identity_id} has no tunable {key!r}; allowed: {sorted(extras)}"
            )
        try:
            params[key] = int(value)
        except ValueError:
            params[key] = value
    params["seed"] = args.seed
    return params


def catalog_json() -> list:
    return [
        {
            "identity_id": e.identity_id,
            "anchor": e.anchor,
            "defaults": {
                k: (
                    v.to_string()
                    if isinstance(v, Partition)
                    else "".join(str(b) for b in v)
                    if isinstance(v, StripMask)
                    else list(v)
                    if isinstance(v, tuple)
                    else v
                )
                for k, v in e.defaults.items()
            },
        }
        for e in CATALOG
    ]


def quick_profile() -> list:
    """Every identity exactly once, at its default (minimal) parameters."""
    return [(e.identity_id, {}) for e in CATALOG]


def full_profile() -> list:
    """Acceptance-grade parameters (the sizes used by the acceptance tests)."""
    runs = [
        ("pid.main", {"n": 2, "m": 2, "D": 6}),
        ("pid.main", {"n": 3, "m": 2, "D": 5}),
        ("cor1.skew", {"nu": Partition((2,)), "n": 2, "m": 2, "D": 5}),
        ("cor1.skew", {"nu": Partition((1, 1)), "n": 2, "m": 2, "D": 5}),
        ("cor2.skewq", {"nu": Partition((1,)), "eta": Partition((2,)), "n": 2, "m": 2, "D": 4}),
        ("cor2.skewq", {"nu": Partition((1, 1)), "eta": Partition((1,)), "n": 2, "m": 2, "D": 4}),
        ("cor3.linear", {"j": 2, "n": 2, "D": 6}),
        ("cor4.pps", {"n": 3, "m": 2, "deg_a": 5, "deg_b": 5, "N": 30}),
        ("cor4.pps", {"n": 2, "m": 2, "deg_a": 5, "deg_b": 5, "N": 30}),
        ("hua.an", {"rank": 3, "degree": 4, "N": 20}),
        ("inv.lemma", {"M1": 2, "M2": 2, "deg_a": 5, "deg_b": 5, "N": 25}),
        ("bl.bailey", {"M1": 3, "M2": 2, "points": 20}),
        ("bl.typeii", {"M1": 2, "M2": 2, "k": (2, -1, -1), "points": 20}),
        ("bl.drie", {"M1": 2, "M2": 2, "k": (2, -1, -1)}),
        ("euler.it1", {"M1": 4, "M2": 4}),
        ("rr.a2", {"N": 60}),
        ("rr.classical", {"N": 60}),
        ("macdonald.a2", {"N": 80}),
        ("proof.psiphi", {"lam": Partition((2, 2)), "mu": Partition((2, 1)), "D_z": 4, "N": 20}),
        ("proof.lemma41", {"mu": Partition((3, 2)), "mask": StripMask((1, 0, 1)), "D_z": 4, "N": 20}),
        ("proof.ab2", {"k": 6}),
        ("s6.npsom2", {"n": 2, "D": 5}),
        ("s6.psiqt", {"mu": Partition((2, 1)), "D_z": 4, "points": 20}),
        ("s6.an_ext", {"rank": 4, "D": 4, "N": 15}),
        ("s6.a3", {"D": 4, "N": 15}),
        ("s6.stem", {"n": 3, "kmax": 3, "points": 10}),
        ("s6.thmpf", {"n": 4, "kmax": 4, "points": 10}),
        ("s6.st", {"n": 3, "k": 3, "D_z": 6}),
        ("s6.st2", {"n": 3, "k": 3, "D_z": 6}),
        ("s6.fulman", {"k": 3, "N": 30}),
    ]
    for m1 in range(0, 7):
        for m2 in range(0, 7):
            for variant in ("standard", "q_inverse", "modulus3n_seed"):
                runs.append(("euler.a2", {"M1": m1, "M2": m2, "variant": variant}))
    for m1 in range(0, 5):
        for m2 in range(0, 5):
            runs.append(("euler.it1", {"M1": m1, "M2": m2}))
    for n in (2, 3):
        for variant in ("3n+1", "3n-1", "3n"):
            runs.append((f"family.{variant}", {"n": n, "N": 40}))
    for k in range(0, 6):
        for j in range(0, k + 1):
            for n in range(1, 6):
                runs.append(("cor3.hall", {"k": k, "j": j, "n": n}))
    runs.append(("cor3.hall", {"k": 4, "j": 4, "n": "inf", "N": 30}))
    return runs


def run_suite(profile: str, seed: int, fmt: str) -> int:
    runs = quick_profile() if profile == "quick" else full_profile()
    workers = max(1, int(os.environ.get("QHALL_WORKERS", "1")))

    def one(task):
        identity_id, params = task
        entry = get_entry(identity_id)
        return entry.run(**{**params, "seed": seed})

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(one, runs))
    else:
        reports = [one(task) for task in runs]

    failed = [r for r in reports if r.status == FAIL]
    if fmt == "json":
        print(
            json.dumps(
                {
                    "profile": profile,
                    "seed": seed,
                    "aggregate": "fail" if failed else "pass",
                    "total_runtime_ms": sum(r.runtime_ms for r in reports),
                    "reports": [r.to_json_dict() for r in reports],
                },
                sort_keys=True,
            )
        )
    else:
        for r in reports:
            print(r.summary_line())
        npass = sum(1 for r in reports if r.status == PASS)
        ninc = sum(1 for r in reports if r.status not in (PASS, FAIL))
        print(
            f"suite[{profile}]: {npass} pass, {len(failed)} fail, "
            f"{ninc} inconclusive, {sum(r.runtime_ms for r in reports)} ms total"
        )
    return 1 if failed else 0


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if args.command == "list":
            if args.format == "json":
                print(json.dumps(catalog_json(), sort_keys=True))
            else:
                for e in CATALOG:
                    print(f"{e.identity_id:16s} {e.anchor}")
            return 0
        if args.command == "run":
            if args.identity_id not in BY_ID:
                print(f"error: unknown identity {args.identity_id!r}", file=sys.stderr)
                return 2
            entry = get_entry(args.identity_id)
            params = build_params(entry, args)
            report = entry.run(**params)
            if args.format == "json":
                print(report.to_json())
            else:
                print(report.summary_line())
            return 0 if report.status == PASS else 1
        if args.command == "suite":
            return run_suite(args.profile, args.seed, args.format)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
