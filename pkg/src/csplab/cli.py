"""Command line front end.

    csp-lab list
    csp-lab verify <family> [--param val]... [--checker roots|orbits|both]
                            [--json] [--out PATH] [--cap N] [--corrupt-coeff I]
    csp-lab orbits <family> [--param val]... [--json] [--out PATH] [--cap N]
    csp-lab poly <name> <args>...

Exit codes: 0 pass, 1 sieving mismatch, 2 usage or cap error, 3 internal
invariant breach.  CSP_LAB_CAP overrides the default size cap.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import qpoly, sieve, tableaux
from .errors import (
    CapExceeded,
    CspLabError,
    InexactDivision,
    InternalInvariantError,
    NegativeExponent,
    NonIntegerEvaluation,
    NotNearlyFree,
    PreconditionError,
    UnknownFamily,
)

USAGE_ERRORS = (
    PreconditionError, CapExceeded, UnknownFamily, NotNearlyFree, ValueError,
)
INTERNAL_ERRORS = (
    InexactDivision, NonIntegerEvaluation, NegativeExponent,
    InternalInvariantError,
)

POLY_BUILDERS = {
    "qint": (1, lambda n: qpoly.q_int(n)),
    "qfact": (1, lambda n: qpoly.q_factorial(n)),
    "qbinom": (2, lambda n, k: qpoly.gaussian_binomial(n, k)),
    "qcatalan": (1, lambda n: qpoly.q_catalan(n)),
    "qfuss": (2, lambda n, m: qpoly.q_fuss_catalan_A(n, m)),
    "eulerian": (1, lambda n: qpoly.eulerian_poly(n)),
    "cyclotomic": (1, lambda d: qpoly.cyclotomic(d)),
    "qhook": (-1, lambda *lam: tableaux.q_count_syt(lam)),
    "face": (3, lambda k, n, d: qpoly.face_poly(k, n, d)),
    "propertri": (1, lambda n: qpoly.q_proper_triangulations(n)),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="csp-lab",
        description="construct sieving families and verify fixed-point counts "
        "against exact root-of-unity evaluations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="print the family catalogue")

    def add_family_options(p: argparse.ArgumentParser) -> None:
        p.add_argument("family", choices=sorted(sieve.FAMILIES))
        p.add_argument("--n", type=int)
        p.add_argument("--k", type=int)
        p.add_argument("--m", type=int)
        p.add_argument("--lam", type=str, help="partition, e.g. 3,1")
        p.add_argument("--gen", type=str, help="generator cycles, e.g. (1,2)(3,4)")
        p.add_argument("--base", type=str, help="base family for plethysm_derived")
        p.add_argument("--kind", choices=("h", "e"))
        p.add_argument("--json", action="store_true")
        p.add_argument("--out", type=str)
        p.add_argument("--cap", type=int, help="size cap override")

    pv = sub.add_parser("verify", help="run the sieving checkers on a family instance")
    add_family_options(pv)
    pv.add_argument("--checker", choices=("roots", "orbits", "both"), default="both")
    pv.add_argument(
        "--corrupt-coeff", type=int, metavar="I",
        help="test hook: bump the coefficient of q^I before checking",
    )

    po = sub.add_parser("orbits", help="print the orbit table of a family instance")
    add_family_options(po)

    pp = sub.add_parser("poly", help="print a named polynomial")
    pp.add_argument("name", choices=sorted(POLY_BUILDERS))
    pp.add_argument("args", type=int, nargs="*")
    return parser


def _collect_params(ns: argparse.Namespace) -> dict:
    params = {}
    for key in ("n", "k", "m", "lam", "gen", "base", "kind"):
        value = getattr(ns, key, None)
        if value is not None:
            params[key] = value
    return params


def _size_cap(ns: argparse.Namespace) -> int | None:
    if getattr(ns, "cap", None) is not None:
        return ns.cap
    env = os.environ.get("CSP_LAB_CAP")
    return int(env) if env else None


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _format_report(report: sieve.CSPReport) -> str:
    lines = [
        f"family {report.family}  params "
        + " ".join(f"{k}={v}" for k, v in report.params.items()),
        f"size {report.size}  order {report.order}  f = {report.polynomial}",
        "  j  ord  fixed  eval  match",
    ]
    for r in report.rows:
        value = "-" if r.value is None else r.value
        lines.append(
            f"{r.j:>3} {r.elem_order:>4} {r.fixed:>6} {value!s:>5}  "
            + ("yes" if r.match else "NO")
        )
    sizes = [len(o.members) for o in report.orbits]
    stabs = [o.stabilizer_order for o in report.orbits]
    lines.append(f"orbits: {len(sizes)} (sizes {sizes}, stabilizers {stabs})")
    lines.append(f"a: {list(report.a)}  census: {list(report.census)}")
    lines.append(f"verdict: {report.verdict.upper()}")
    return "\n".join(lines)


def cmd_verify(ns: argparse.Namespace) -> int:
    inst = sieve.registry_instantiate(ns.family, _collect_params(ns), _size_cap(ns))
    if ns.corrupt_coeff is not None:
        inst = sieve.CSPInstance(
            inst.action,
            sieve.corrupt_polynomial(inst.polynomial, ns.corrupt_coeff),
            inst.family,
            inst.params,
        )
    report = sieve.build_report(inst, ns.checker)
    if ns.json:
        _emit(json.dumps(report.to_dict(), indent=2), ns.out)
    else:
        _emit(_format_report(report), ns.out)
    return 0 if report.verdict == "pass" else 1


def cmd_orbits(ns: argparse.Namespace) -> int:
    inst = sieve.registry_instantiate(ns.family, _collect_params(ns), _size_cap(ns))
    report = sieve.build_report(inst)
    orbits = sieve.orbit_decompose(inst.action)
    if ns.json:
        payload = report.to_dict()
        del payload["rows"], payload["verdict"]
        payload["orbits"] = [
            {
                "size": len(o.members),
                "stab": o.stabilizer_order,
                "members": [inst.action.labels[i] for i in o.members],
            }
            for o in orbits
        ]
        _emit(json.dumps(payload, indent=2), ns.out)
        return 0
    lines = [
        f"family {inst.family}  params "
        + " ".join(f"{k}={v}" for k, v in inst.params_dict().items()),
        f"size {inst.action.size}  order {inst.action.order}",
    ]
    for o in orbits:
        members = " ".join(inst.action.labels[i] for i in o.members)
        lines.append(f"orbit size {len(o.members):>4}  stab {o.stabilizer_order:>4}  {members}")
    lines.append(f"a: {list(report.a)}")
    _emit("\n".join(lines), ns.out)
    return 0


def cmd_poly(ns: argparse.Namespace) -> int:
    arity, builder = POLY_BUILDERS[ns.name]
    if arity >= 0 and len(ns.args) != arity:
        raise PreconditionError(f"poly {ns.name} takes {arity} integer argument(s)")
    f = builder(*ns.args)
    print(f"{f}")
    print(f"coeffs: {list(f.coeffs)}  value at q=1: {f(1)}")
    return 0


def cmd_list() -> int:
    for fam in sieve.list_families():
        print(f"{fam.name:<22} {fam.signature:<42} {fam.description}")
    print(f"caps: size {sieve.DEFAULT_SIZE_CAP} (override with --cap or CSP_LAB_CAP), "
          f"order {sieve.ORDER_CAP}")
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        if ns.command == "list":
            return cmd_list()
        if ns.command == "verify":
            return cmd_verify(ns)
        if ns.command == "orbits":
            return cmd_orbits(ns)
        if ns.command == "poly":
            return cmd_poly(ns)
        raise PreconditionError(f"unknown command {ns.command}")
    except INTERNAL_ERRORS as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CspLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
