"""Command-line interface: run pipelines from setup files and emit reports.

Commands: model, cohomology, kappa, taut-ring, invariants, check, kahler,
cp2-report, hilbert.  Input is a setup file (--setup FILE) or a bundled
preset (--preset NAME, optionally --n for the projective-space family).
Output is an aligned human table or a byte-stable JSON report
{setup_hash, command, results, hilbert, timing_ms}; wall-clock timing goes
to stderr so identical inputs give identical bytes.

Exit codes: 0 all checks pass, 1 check failure, 2 input error.
"""

import argparse
import json
import sys
import time
from pathlib import Path

from .checks import SUITES, disclosure_results, run_suite
from .dsl import (DslError, parse_setup, pipeline_from_setup,
                  render_cpn_setup, _build_element)
from .gca import (FreeGCA, algebra_hilbert_series, cohomology,
                  format_element)
from .presentations import invariant_subring
from .tautrings import KahlerRing, cp2_report, kappa_ring, l_kappa_readings

SETUP_DIR = Path(__file__).parent / "setups"
PRESETS = ("s-even", "s-odd", "cpn", "cpn-real", "cp2-euler-trivial")

_DISCLOSURE_SUITES = {
    "even-sphere": [0],
    "cpn": [1],
    "extended-kappa": [1],
    "chern-kernel": [1],
    "cp2-ledger": [2],
}


def _fmt(value):
    if value is None:
        return ""
    if hasattr(value, "terms"):
        return format_element(value)
    return str(value)


def result(name, degree=None, expression=None, check="n/a"):
    return {"name": name, "degree": degree, "expression": _fmt(expression),
            "check": check}


def load_setup(args):
    if args.setup and args.preset:
        raise DslError("give either --setup or --preset, not both")
    if args.setup:
        try:
            text = Path(args.setup).read_text()
        except OSError as exc:
            raise DslError(f"cannot read setup file: {exc}")
    elif args.preset:
        if args.preset not in PRESETS:
            raise DslError(f"unknown preset {args.preset!r}; available: "
                           + ", ".join(PRESETS))
        if args.n and args.preset in ("cpn", "cpn-real",
                                      "cp2-euler-trivial"):
            bundle = {"cpn": "complex", "cpn-real": "real",
                      "cp2-euler-trivial": "real-euler"}[args.preset]
            text = render_cpn_setup(args.n, bundle)
        else:
            text = (SETUP_DIR / f"{args.preset}.k").read_text()
    else:
        raise DslError("a setup is required: --setup FILE or --preset NAME")
    spec = parse_setup(text)
    return spec, pipeline_from_setup(spec, label=args.preset or args.setup)


def need_fm(pl):
    if pl.fm is None:
        raise DslError("this setup has no fiber-integration model "
                       "(the fiber must have a single even generator, or "
                       "be a single odd generator)")
    return pl.fm


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_model(args):
    spec, pl = load_setup(args)
    rows = []
    for (name, d) in pl.lxi.basis:
        rows.append(result(f"lie basis {name}", degree=d, check="n/a"))
    cd = pl.rm.base.cdga
    for g in cd.algebra.generators:
        img = cd.d(cd.algebra.gen(g.name))
        rows.append(result(f"d {g.name}", degree=g.degree + 1,
                           expression=img, check="n/a"))
    T = pl.rm.total
    for nm, _ in spec.fiber:
        rows.append(result(f"d {nm} (total)",
                           degree=dict(spec.fiber)[nm] + 1,
                           expression=T.d(T.algebra.gen(nm)), check="n/a"))
    for cname in sorted(pl.cochains):
        c = pl.cochains[cname]
        rows.append(result(f"cochain {cname}", degree=c.degree(),
                           expression=c, check="pass"))
    return spec, rows, []


def cmd_cohomology(args):
    spec, pl = load_setup(args)
    coh = cohomology(pl.rm.total, args.max_degree)
    rows = []
    hilbert = []
    for n in range(args.max_degree + 1):
        dim, reps = coh[n]
        hilbert.append(dim)
        for rep in reps:
            rows.append(result(f"H^{n}", degree=n, expression=rep,
                               check="n/a"))
        if dim == 0:
            rows.append(result(f"H^{n}", degree=n, expression="0",
                               check="n/a"))
    return spec, rows, hilbert


def cmd_kappa(args):
    spec, pl = load_setup(args)
    fm = need_fm(pl)
    from .dsl import _Parser
    expr = _Parser(args.cls).expression()
    degrees = {nm: fm.classes[nm].degree() for nm in fm.classes}
    F = FreeGCA(sorted(degrees.items(), key=lambda t: (t[1], t[0])))
    elem = _build_element(F, expr, "kappa class")
    val = fm.kappa(elem)
    fdim = fm.top * fm.x_degree
    rows = [result(f"kappa_{args.cls}",
                   degree=elem.degree() - fdim if not elem.is_zero() else None,
                   expression=val, check="pass")]
    return spec, rows, []


def cmd_taut_ring(args):
    spec, pl = load_setup(args)
    fm = need_fm(pl)
    cutoff = args.cutoff or spec.options.get("cutoff", 24)
    pres = kappa_ring(fm, cutoff=cutoff)
    rows = _presentation_rows(pres)
    return spec, rows, pres.hilbert


def cmd_invariants(args):
    spec, pl = load_setup(args)
    fm = need_fm(pl)
    if not pl.involution:
        raise DslError("no involution signs declared (options sign_<name>)")
    cutoff = args.cutoff or spec.options.get("cutoff", 24)
    signs = dict(pl.involution)
    for g in fm.base.generators:
        signs.setdefault(g.name, 1)
    pres = invariant_subring(fm.base, signs, cutoff)
    rows = _presentation_rows(pres)
    return spec, rows, pres.hilbert


def _presentation_rows(pres):
    rows = []
    for name, deg, elem in pres.generators:
        rows.append(result(f"generator {name}", degree=deg,
                           expression=elem, check="n/a"))
    for rel in pres.relations:
        rows.append(result("relation", degree=rel.degree(),
                           expression=rel, check="n/a"))
    rows.append(result("free", expression=str(pres.is_free), check="n/a"))
    if pres.equals_ambient is not None:
        rows.append(result("equals ambient ring",
                           expression=str(pres.equals_ambient),
                           check="n/a"))
    return rows


def cmd_check(args):
    rows = run_suite(args.suite, n=args.n)
    for idx in _DISCLOSURE_SUITES.get(args.suite, []):
        rows.append(disclosure_results()[idx])
    return None, rows, []


def cmd_kahler(args):
    m = args.m
    if m is None or m % 2 == 0 or m < 3:
        raise DslError("kahler requires an odd dimension --m >= 3")
    cutoff = args.cutoff or 24
    K = KahlerRing(m, cutoff=cutoff)
    rows = []
    hilbert = [K.exact_dimension(n) for n in range(cutoff + 1)]
    for i in range(1, K.k + 1):
        rd = l_kappa_readings(K, i)
        rows.append(result(f"kappa_L{i}", degree=4 * i - m,
                           expression=rd["computed"], check="pass"))
        rows.append(result(f"kappa_L{i} (leading p1 coefficient)",
                           expression=rd["coefficient"], check="n/a"))
        lit = rd["literal"]
        rows.append(result(f"kappa_L{i} (literal index reading)",
                           expression=lit,
                           check="pass" if lit == rd["computed"]
                           else "n/a"))
    return None, rows, hilbert


def cmd_cp2_report(args):
    rep = cp2_report(args.cutoff or 18)
    rows = []
    for name, entry in rep.items():
        if name == "all_ok":
            continue
        rows.append(result(f"cp2 {name}", expression=entry.get("value"),
                           check="pass" if entry.get("ok", True)
                           else "fail"))
    rows.append(disclosure_results()[2])
    return None, rows, []


def cmd_hilbert(args):
    spec, pl = load_setup(args)
    fm = need_fm(pl)
    cutoff = args.cutoff or spec.options.get("cutoff", 24)
    series = algebra_hilbert_series(fm.base, cutoff)
    pres = kappa_ring(fm, cutoff=cutoff)
    rows = [result("base ring Hilbert series",
                   expression=" ".join(map(str, series)), check="n/a"),
            result("kappa ring Hilbert series",
                   expression=" ".join(map(str, pres.hilbert)),
                   check="n/a")]
    return spec, rows, series


# ---------------------------------------------------------------------------
# report emission
# ---------------------------------------------------------------------------

def emit(spec, command, rows, hilbert, fmt, stream):
    report = {
        "setup_hash": spec.setup_hash() if spec is not None else "",
        "command": command,
        "results": rows,
        "hilbert": list(hilbert),
        "timing_ms": 0,
    }
    if fmt == "json":
        stream.write(json.dumps(report, sort_keys=True,
                                separators=(",", ":"), default=str) + "\n")
        return
    widths = [max([len("name")] + [len(r["name"]) for r in rows]),
              max([len("deg")] + [len(str(r["degree"] or "")) for r in rows]),
              max([len("expression")]
                  + [len(r["expression"]) for r in rows])]
    stream.write(f"command: {command}\n")
    if report["setup_hash"]:
        stream.write(f"setup: {report['setup_hash']}\n")
    header = (f"{'name':<{widths[0]}}  {'deg':>{widths[1]}}  "
              f"{'expression':<{widths[2]}}  check")
    stream.write(header + "\n")
    stream.write("-" * len(header) + "\n")
    for r in rows:
        deg = "" if r["degree"] is None else str(r["degree"])
        stream.write(f"{r['name']:<{widths[0]}}  {deg:>{widths[1]}}  "
                     f"{r['expression']:<{widths[2]}}  {r['check']}\n")
    if hilbert:
        stream.write("hilbert: " + " ".join(map(str, hilbert)) + "\n")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="charfib",
        description="characteristic classes of fibrations with fiberwise "
                    "bundles: exact rational pipelines and reports")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--setup", help="path to a setup (.k) file")
    common.add_argument("--preset", help="bundled preset name: "
                        + ", ".join(PRESETS))
    common.add_argument("--n", type=int, default=None,
                        help="projective-space dimension for cpn presets "
                             "or check suites")
    common.add_argument("--cutoff", type=int, default=None,
                        help="degree cutoff override")
    common.add_argument("--format", choices=("human", "json"),
                        default="human")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("model", parents=[common]).set_defaults(fn=cmd_model)
    p = sub.add_parser("cohomology", parents=[common])
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(fn=cmd_cohomology)
    p = sub.add_parser("kappa", parents=[common])
    p.add_argument("--class", dest="cls", required=True,
                   help="polynomial in the recorded class symbols")
    p.set_defaults(fn=cmd_kappa)
    sub.add_parser("taut-ring", parents=[common]) \
       .set_defaults(fn=cmd_taut_ring)
    sub.add_parser("invariants", parents=[common]) \
       .set_defaults(fn=cmd_invariants)
    p = sub.add_parser("check", parents=[common])
    p.add_argument("suite", choices=sorted(SUITES))
    p.set_defaults(fn=cmd_check)
    p = sub.add_parser("kahler", parents=[common])
    p.add_argument("--m", type=int, required=True,
                   help="odd sphere dimension")
    p.set_defaults(fn=cmd_kahler)
    sub.add_parser("cp2-report", parents=[common]) \
       .set_defaults(fn=cmd_cp2_report)
    sub.add_parser("hilbert", parents=[common]).set_defaults(fn=cmd_hilbert)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.time()
    try:
        spec, rows, hilbert = args.fn(args)
    except DslError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    emit(spec, args.command, rows, hilbert, args.format, sys.stdout)
    sys.stderr.write(f"elapsed: {1000 * (time.time() - t0):.0f} ms\n")
    if any(r["check"] == "fail" for r in rows):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
