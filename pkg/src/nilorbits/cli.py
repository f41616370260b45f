"""Command-line front end.

Exit codes: 0 success, 1 domain error (unknown type, form or orbit), 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys

from .core import DomainError, SimpleType, named_automorphism
from .decision import (
    ProductOrbit,
    admits_real_structure_product,
    admits_real_structure_simple,
    classify_orbits,
)
from .oracle import run_fixtures
from .orbits import (
    OrbitLabel,
    enumerate_orbits,
    hasse_diagram,
    hasse_dot,
    hasse_json,
    orbit_dimension,
    orbit_table,
    weighted_dynkin,
)
from .realforms import catalog_forms, parse_form, product_structure, sigma_D_of_form, twist_class

SIGMA_D_CHOICES = ("swap34", "swap13", "swap14")


def _type(text: str) -> SimpleType:
    t = SimpleType.parse(text)
    if t.is_d3_alias:
        print("warning: D3 is isomorphic to A3; using type D partitions", file=sys.stderr)
    return t


def _classical(text: str) -> SimpleType:
    t = _type(text)
    if not t.is_classical:
        raise DomainError(f"no nilpotent orbit tables for exceptional type {t}")
    return t


def _star(t, form_text, sigma_d):
    form = parse_form(t, form_text)
    choice = named_automorphism(t, sigma_d) if sigma_d else None
    if choice is not None and not (t.family == "D" and t.rank == 4):
        raise DomainError("--sigma-d only applies to type D4")
    return sigma_D_of_form(form, choice)


def _print_report(d: dict) -> None:
    for k, v in d.items():
        if isinstance(v, bool):
            v = str(v).lower()
        print(f"{k}: {v}")


def cmd_orbits(args) -> None:
    t = _classical(args.type)
    if args.json:
        print(json.dumps(orbit_table(t), indent=2))
        return
    for o in enumerate_orbits(t):
        print(f"{str(o):<24} dim={orbit_dimension(t, o):<4} {weighted_dynkin(t, o)}")


def cmd_wdd(args) -> None:
    t = _classical(args.type)
    o = OrbitLabel.parse(args.orbit)
    print(weighted_dynkin(t, o))


def cmd_hasse(args) -> None:
    t = _classical(args.type)
    if args.dot:
        print(hasse_dot(t))
    elif args.json:
        print(hasse_json(t))
    else:
        for a, b in hasse_diagram(t):
            print(f"{a} > {b}")


def cmd_forms(args) -> None:
    t = _type(args.type)
    rows = []
    for f in catalog_forms(t):
        rows.append({
            "form": str(f),
            "split": f.is_split,
            "compact": f.is_compact,
            "twist_class": twist_class(f).value,
            "sigma_D": sigma_D_of_form(f).sigma_D.cycles_text(),
            "notes": list(f.notes),
        })
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    for r in rows:
        tags = [k for k in ("split", "compact") if r[k]] + r["notes"]
        extra = f"  [{'; '.join(tags)}]" if tags else ""
        print(f"{r['form']:<12} {r['twist_class']:<14} sigma_D={r['sigma_D']}{extra}")


def cmd_decide(args) -> None:
    t = _type(args.type)
    s = _star(t, args.form, args.sigma_d)
    orbit = OrbitLabel.parse(args.orbit) if t.is_classical else args.orbit
    report = admits_real_structure_simple(t, s, orbit)
    if args.json:
        print(report.to_json())
    else:
        _print_report(report.to_dict())


def cmd_classify(args) -> None:
    t = _classical(args.type)
    report = classify_orbits(t, _star(t, args.form, args.sigma_d))
    if args.json:
        print(report.to_json())
        return
    print(f"stable ({len(report.stable)}): " + " ".join(map(str, report.stable)))
    print(f"swapped pairs ({len(report.swapped_pairs)}):")
    for a, b in report.swapped_pairs:
        print(f"  {a} <-> {b}")


_LABEL_RE = re.compile(r"\[[^\]]*\](?:\^I{1,2})?")


def parse_product_orbit(text: str) -> ProductOrbit:
    """``([2],[1,1])`` or ``[2];[1,1]``."""
    labels = _LABEL_RE.findall(text.replace(" ", ""))
    if not labels:
        raise DomainError(f"cannot parse product orbit {text!r}")
    return ProductOrbit(tuple(OrbitLabel.parse(s) for s in labels))


def load_spec(path: str):
    """Read ``{"factors": [...], "pairing": [...], "forms": {slot: form}}``."""
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DomainError(f"cannot read spec file {path}: {exc}") from None
    if not isinstance(raw, dict) or not {"factors", "pairing", "forms"} <= raw.keys():
        raise DomainError("spec file needs the keys factors, pairing and forms")
    factors = [SimpleType.parse(f) for f in raw["factors"]]
    return product_structure(factors, raw["pairing"], {str(k): v for k, v in raw["forms"].items()})


def cmd_product_decide(args) -> None:
    spec = load_spec(args.spec_file)
    report = admits_real_structure_product(spec, parse_product_orbit(args.orbit))
    if args.json:
        print(report.to_json())
    else:
        _print_report(report.to_dict())


def cmd_verify(args) -> int:
    results = run_fixtures()
    for r in results:
        print(f"{'PASS' if r.ok else 'FAIL'}  {r.name}" + (f"  ({r.detail})" if r.detail else ""))
    return 0 if all(r.ok for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilorbits",
        description="Nilpotent orbits, weighted Dynkin diagrams and equivariant real structures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbits", help="list orbits with dimensions and weighted diagrams")
    p.add_argument("type")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("wdd", help="weighted Dynkin diagram of one orbit")
    p.add_argument("type")
    p.add_argument("orbit")
    p.set_defaults(func=cmd_wdd)

    p = sub.add_parser("hasse", help="closure order (covering relations)")
    p.add_argument("type")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("forms", help="real forms with twist class and sigma_D")
    p.add_argument("type")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_forms)

    for name, func, help_ in (
        ("decide", cmd_decide, "does an orbit admit an equivariant real structure?"),
        ("classify", cmd_classify, "split all orbits into stable ones and swapped pairs"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("type")
        p.add_argument("form")
        if name == "decide":
            p.add_argument("orbit")
        p.add_argument("--sigma-d", choices=SIGMA_D_CHOICES, default=None)
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("product-decide", help="decision for a semisimple group read from a JSON spec")
    p.add_argument("spec_file")
    p.add_argument("orbit")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_product_decide)

    p = sub.add_parser("verify", help="replay the exact matrix fixtures")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        rc = args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())
