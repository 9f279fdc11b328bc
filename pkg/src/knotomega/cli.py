"""Command-line interface: alex, factor, omega, grid-hfk, transverse, rim-family.

Every subcommand prints a human-readable report and can write the same data
as JSON with --json PATH ('-' for stdout).  Exit codes: 0 success, 1 domain
errors, 2 parse/usage errors.  The grid-size cap honors the environment
variable KNOTOMEGA_MAX_GRID when no --max-size flag is given.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .alexander import alexander_from_braid, irr_count
from .braid import (braid_to_grid, closure_components, parse_braid,
                    parse_quasipositive, self_linking, writhe)
from .errors import KnotomegaError, ParseError
from .gridhfk import (DEFAULT_MAX_SIZE, GridDiagram, deconvolve, homology,
                      is_nonzero_class, transverse_state)
from .polyalg import (GF2, RAT, RING_TAGS, LaurentPoly, factor, format_poly,
                      omega_module, omega_ring, parse_poly, poly_to_json,
                      substituted_reduction)
from .rimcalc import Certificate, FamilySpec, certify_family
from .polyalg import OmegaValue


def _grid_cap(args) -> int:
    if getattr(args, "max_size", None):
        return args.max_size
    env = os.environ.get("KNOTOMEGA_MAX_GRID")
    return int(env) if env else DEFAULT_MAX_SIZE


def _ring(tag: str):
    if tag not in ("f2", "q"):
        raise ParseError(f"unknown ring tag {tag!r}; use f2 or q")
    return RING_TAGS[tag]


# ---------------------------------------------------------------- subcommands


def _cmd_alex(args):
    braid = parse_braid(args.braid)
    delta = alexander_from_braid(braid)
    data = {"command": "alex", "braid": args.braid,
            "alexander": format_poly(delta),
            "alexander_json": poly_to_json(delta),
            "normalization": "symmetric, value 1 at t=1"}
    lines = [f"alexander: {format_poly(delta)}"]
    if args.irr:
        counts = {"f2": irr_count(delta, GF2).to_json(),
                  "q": irr_count(delta, RAT).to_json()}
        data["irr"] = counts
        lines.append(f"irr[{args.ring}]: {counts[args.ring]}")
        lines.append(f"irr (both rings): f2={counts['f2']} q={counts['q']}")
    return data, lines


def _cmd_factor(args):
    ring = _ring(args.ring)
    poly = parse_poly(args.poly, ring)
    fac = factor(poly)
    data = {"command": "factor", "poly": args.poly, "ring": args.ring,
            "unit": format_poly(fac.unit),
            "factors": [{"poly": format_poly(p), "multiplicity": m}
                        for p, m in fac.factors],
            "count": fac.count()}
    lines = [f"unit: {format_poly(fac.unit)}"]
    for p, m in fac.factors:
        lines.append(f"factor: ({format_poly(p)})^{m}")
    lines.append(f"irreducible factors with multiplicity: {fac.count()}")
    return data, lines


def _cmd_omega(args):
    ring = _ring(args.ring)
    if args.coords:
        coords = [parse_poly(part.strip(), ring)
                  for part in args.coords.split(";") if part.strip()]
        value = omega_module(coords)
        data = {"command": "omega", "coords": args.coords, "ring": args.ring,
                "omega": value.to_json()}
        return data, [f"omega (module gcd of {len(coords)} coordinates): {value}"]
    poly = parse_poly(args.poly, ring)
    if args.subst:
        vec = tuple(int(tok) for tok in args.subst.split(","))
        reduction = substituted_reduction(poly, vec)
        data = {"command": "omega", "poly": args.poly, "ring": args.ring,
                "subst": list(vec), "omega": reduction.value.to_json(),
                "unimodular_basis": reduction.basis_rows(),
                "reduced": format_poly(reduction.reduced)}
        return data, [f"omega of p(z^{vec}): {reduction.value}",
                      f"reduced to one variable: {format_poly(reduction.reduced)}"]
    value = omega_ring(poly)
    data = {"command": "omega", "poly": args.poly, "ring": args.ring,
            "omega": value.to_json()}
    return data, [f"omega: {value}"]


def _ranks_table(ranks) -> list[str]:
    lines = []
    for (m, a), v in ranks.ranks:
        lines.append(f"  M={m:3d}  A={a:3d}  rank {v}")
    return lines


def _cmd_grid_hfk(args):
    try:
        with open(args.grid) as handle:
            text = handle.read()
    except OSError as exc:
        raise KnotomegaError(f"file not found: {args.grid}") from exc
    grid = GridDiagram.from_text(text)
    cap = _grid_cap(args)
    gh = homology(grid, max_size=cap)
    hfk = deconvolve(gh, grid.size)
    euler = hfk.euler()
    data = {"command": "grid-hfk", "grid": args.grid, "size": grid.size,
            "components": grid.components(),
            "gh_ranks": [[m, a, v] for (m, a), v in gh.ranks],
            "gh_total": gh.total(),
            "hfk_ranks": [[m, a, v] for (m, a), v in hfk.ranks],
            "hfk_total": hfk.total(),
            "euler": format_poly(euler)}
    lines = [f"grid size: {grid.size}",
             f"full complex homology total rank: {gh.total()}",
             "knot Floer ranks (deconvolved):"]
    lines += _ranks_table(hfk)
    lines.append(f"euler characteristic: {format_poly(euler)}")
    return data, lines


def _cmd_transverse(args):
    braid = parse_braid(args.braid)
    grid = braid_to_grid(braid)
    cap = _grid_cap(args)
    if grid.size > cap:
        raise KnotomegaError(
            f"grid size {grid.size} exceeds cap {cap}; raise --max-size")
    cycle = transverse_state(grid, minus=args.minus)
    nonzero = is_nonzero_class(cycle, grid)
    sl = self_linking(braid)
    label = "minus" if args.minus else "plus"
    data = {"command": "transverse", "braid": args.braid, "variant": label,
            "grid_size": grid.size,
            "state": [r + 1 for r in sorted(cycle.states)[0]],
            "maslov": cycle.maslov, "alexander": cycle.alexander,
            "nonzero": nonzero, "self_linking": sl,
            "writhe": writhe(braid)}
    lines = [f"grid size: {grid.size}",
             f"transverse cycle ({label}): bigrading (M, A) = "
             f"({cycle.maslov}, {cycle.alexander})",
             f"self-linking of the braid closure: {sl}",
             f"nonzero in homology: {nonzero}"]
    return data, lines


def _parse_indices(text: str) -> tuple[int, ...]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return tuple(out)


def _cmd_rim_family(args):
    if (args.pattern_braid is None) == (args.pattern_poly is None):
        raise ParseError("give exactly one of --pattern-braid / --pattern-poly")
    if args.pattern_braid is not None:
        delta = alexander_from_braid(parse_braid(args.pattern_braid))
    else:
        from .alexander import symmetrize
        from .polyalg import INT
        delta = symmetrize(parse_poly(args.pattern_poly, INT))
    curve = tuple(int(tok) for tok in args.curve.split(","))
    base = OmegaValue.of(args.base_omega)
    spec = FamilySpec(genus=args.genus, curve=curve, pattern=delta,
                      indices=_parse_indices(args.n), ring=args.ring,
                      base_omega=base,
                      base_provenance="user-asserted" if args.base_omega else
                      "default-quasipositive")
    cert = certify_family(spec)
    data = cert.to_json()
    lines = [f"pattern: {format_poly(delta)}",
             f"curve: {curve}  genus: {args.genus}  ring: {args.ring}"]
    for row in cert.rows:
        lines.append(f"  n={row.index:3d}  omega_f2={row.omega_f2}  "
                     f"omega_q={row.omega_q}  lef={format_poly(row.lefschetz)}")
    lines.append("verdict: pairwise distinct (non-diffeomorphic family)"
                 if cert.verdict else
                 "verdict: NOT certified distinct")
    return data, lines


def _cmd_nonvanish(args):
    from .rimcalc import verify_nonvanishing
    word = parse_quasipositive(args.word)
    ok = verify_nonvanishing(word, max_grid=_grid_cap(args))
    data = {"command": "nonvanishing", "word": args.word, "nonzero": ok}
    return data, [f"transverse class nonzero: {ok}"]


# ---------------------------------------------------------------- driver


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotomega",
        description="Grid knot Floer homology, Laurent factor counts, and "
                    "rim-surgery distinctness certificates.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("alex", help="Alexander polynomial of a braid closure")
    p.add_argument("--braid", required=True, metavar='"n: g1 g2 ..."')
    p.add_argument("--ring", default="f2", choices=["f2", "q"])
    p.add_argument("--irr", action="store_true",
                   help="also count irreducible factors")
    p.set_defaults(handler=_cmd_alex)

    p = sub.add_parser("factor", help="factor a univariate Laurent polynomial")
    p.add_argument("--poly", required=True)
    p.add_argument("--ring", default="f2", choices=["f2", "q"])
    p.set_defaults(handler=_cmd_factor)

    p = sub.add_parser("omega", help="irreducible-factor count")
    p.add_argument("--poly", help="univariate polynomial")
    p.add_argument("--coords", help="semicolon-separated module coordinates")
    p.add_argument("--subst", help="integer vector a1,a2,... substituting t -> z^a")
    p.add_argument("--ring", default="f2", choices=["f2", "q"])
    p.set_defaults(handler=_cmd_omega)

    p = sub.add_parser("grid-hfk", help="knot Floer homology of a grid file")
    p.add_argument("--grid", required=True, metavar="FILE")
    p.add_argument("--max-size", type=int, default=None)
    p.set_defaults(handler=_cmd_grid_hfk)

    p = sub.add_parser("transverse", help="canonical transverse cycle of a braid closure")
    p.add_argument("--braid", required=True)
    p.add_argument("--minus", action="store_true",
                   help="use the companion (O-corner) cycle")
    p.add_argument("--max-size", type=int, default=None)
    p.set_defaults(handler=_cmd_transverse)

    p = sub.add_parser("rim-family", help="certify a 1-twist rim-surgery family")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--curve", required=True, metavar="a1,a2,...")
    p.add_argument("--pattern-braid", metavar='"n: g1 ..."')
    p.add_argument("--pattern-poly", metavar='"t^-1 + -1 + t"')
    p.add_argument("--n", required=True, metavar="1..10 or 1,3,5")
    p.add_argument("--ring", default="f2", choices=["f2", "q"])
    p.add_argument("--base-omega", type=int, default=0)
    p.set_defaults(handler=_cmd_rim_family)

    p = sub.add_parser("nonvanishing",
                       help="check the transverse class of a quasipositive word")
    p.add_argument("--word", required=True, metavar='"n: [w|j][w|j]..."')
    p.add_argument("--max-size", type=int, default=None)
    p.set_defaults(handler=_cmd_nonvanish)

    for sp in sub.choices.values():
        sp.add_argument("--json", metavar="PATH",
                        help="write the machine-readable report ('-' = stdout)")
    return parser


def _emit(data: dict, lines: list, json_path, out):
    for line in lines:
        print(line, file=out)
    if json_path:
        payload = json.dumps(data, indent=2, sort_keys=True, default=str) + "\n"
        if json_path == "-":
            out.write(payload)
        else:
            with open(json_path, "w") as handle:
                handle.write(payload)


def run(argv, out=None, err=None) -> int:
    """Execute one invocation; returns the exit code without exiting."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        data, lines = args.handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        _maybe_json_error(args, exc, "parse", out)
        return 2
    except KnotomegaError as exc:
        print(f"error: {exc}", file=err)
        _maybe_json_error(args, exc, type(exc).__name__, out)
        return 1
    data["tool_version"] = data.get("tool_version", __version__)
    _emit(data, lines, getattr(args, "json", None), out)
    return 0


def _maybe_json_error(args, exc, kind, out):
    path = getattr(args, "json", None)
    if not path:
        return
    payload = json.dumps({"error": {"kind": kind, "message": str(exc)},
                          "tool_version": __version__},
                         indent=2, sort_keys=True) + "\n"
    if path == "-":
        out.write(payload)
    else:
        with open(path, "w") as handle:
            handle.write(payload)


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
