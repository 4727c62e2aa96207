"""Command-line front end: ``horochow <subcommand> ...``."""
import argparse
import json
import re
import sys

from . import hasse as hs
from .catalog import CLASSIFICATION, available, load_spec, resolve
from .catalog.suite import SpecContext, SuiteOptions, reconstruction, run_suite, semisimplicity
from .chern import g2_fundamental_class
from .errors import HorochowError, UnknownVariety
from .schubert import GrassCtx, SpinorCycle, grass_mult, spinor_mult
from .symfunc import Partition, StrictPartition

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_SUPER = dict(zip("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789"))
_SUB = dict(zip("₀₁₂₃₄₅₆₇₈₉", "0123456789"))
_ASCII = {"τ": "t", "σ": "s", "γ": "g", "·": "*", "⊗": "(x)", "∫": "int", "̄": "", "≡": "=="}


def to_ascii(text):
    text = re.sub("[⁰¹²³⁴⁵⁶⁷⁸⁹]+", lambda m: "^" + "".join(_SUPER[c] for c in m.group()), text)
    text = "".join(_SUB.get(c, c) for c in text)
    for u, a in _ASCII.items():
        text = text.replace(u, a)
    return text


class _Out:
    def __init__(self, ascii_mode):
        self.ascii = ascii_mode

    def __call__(self, text=""):
        print(to_ascii(text) if self.ascii else text)


def _partition(text):
    text = text.strip()
    if text in ("0", ""):
        return Partition(())
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed partition {text!r}") from None
    if any(p <= 0 for p in parts) or list(parts) != sorted(parts, reverse=True):
        raise argparse.ArgumentTypeError(f"malformed partition {text!r}: parts must be positive and weakly decreasing")
    return Partition(parts)


def _strict_partition(text):
    lam = _partition(text)
    if len(set(lam)) != len(lam):
        raise argparse.ArgumentTypeError(f"{text!r} is not a strict partition")
    return StrictPartition(lam)


def _spec(args):
    if getattr(args, "spec", None):
        with open(args.spec, encoding="utf-8") as f:
            return load_spec(f.read())
    if not args.variety:
        raise UnknownVariety("no variety given")
    return resolve(args.variety)


# --- subcommands --------------------------------------------------------------


def cmd_verify(args, out):
    spec = _spec(args)
    if args.all:
        opts = SuiteOptions.everything()
    elif args.quantum:
        opts = SuiteOptions(classical=False, quantum=True)
    else:
        opts = SuiteOptions()
    report = run_suite(spec, opts)
    if args.json:
        print(report.to_json())
    else:
        for c in report:
            out(c.line())
        counts = report.counts()
        out(f"{counts['pass']} passed, {counts['fail']} failed, {counts['error']} errors")
    return EXIT_OK if report.ok else EXIT_FAIL


def table_rows(spec, basis="first", quantum=False):
    """Products computed from the ring, as (lhs label, rhs combination, diagram) triples."""
    ctx = SpecContext(spec)
    diag = spec.hasse
    if basis == "dual":
        if spec.dual_hasse is None:
            raise HorochowError(f"{spec.name} has no dual diagram")
        dual = ctx.dual_images
        if quantum:
            # lift each dual class through its expansion in the first basis
            dual = {
                w: sum((ctx.qimages[v] * c for (v, _), c in hs.express(diag, ctx.ring, ctx.images, elt).items()),
                       ctx.qring.scalar(0))
                for w, elt in dual.items()
            }
        diag, images = spec.dual_hasse, dual
    else:
        images = ctx.qimages if quantum else ctx.images
    ring = ctx.qring if quantum else ctx.ring
    labels = diag.labels()
    rows = []
    if quantum:
        second = next(g for g in spec.generators if not g.quantum and g.degree > 1)
        gen = ring.gen(second.name)
        for v in diag.vertices:
            if v.degree == 0:
                continue
            prod = hs.express(diag, ring, images, images[v.id] * gen)
            rows.append((f"{labels[v.id]}·{second.label or second.name}", prod))
        return rows, diag
    verts = [v for v in diag.vertices if v.degree >= 2]
    for i, a in enumerate(verts):
        for b in verts[i:]:
            if a.degree + b.degree > spec.dimension:
                continue
            prod = hs.express(diag, ring, images, images[a.id] * images[b.id])
            rows.append((f"{labels[a.id]}·{labels[b.id]}", prod))
    return rows, diag


def cmd_table(args, out):
    spec = _spec(args)
    rows, diag = table_rows(spec, args.basis, args.quantum)
    if args.format == "json":
        doc = [
            {
                "lhs": to_ascii(lhs) if args.ascii else lhs,
                "rhs": rhs.render(diag, ascii=args.ascii) if not args.ascii else to_ascii(rhs.render(diag, ascii=True)),
                "terms": {
                    (f"{v}*q^{k}" if k else v): str(c) for (v, k), c in sorted(rhs.items(), key=lambda kv: (kv[0][1], kv[0][0]))
                },
            }
            for lhs, rhs in rows
        ]
        print(json.dumps(doc, indent=2, ensure_ascii=False, sort_keys=True))
    else:
        for lhs, rhs in rows:
            out(f"{lhs} = {rhs.render(diag, ascii=args.ascii)}")
    return EXIT_OK


def cmd_degrees(args, out):
    spec = _spec(args)
    degs = hs.degrees_from_hasse(spec.hasse)
    labels = spec.hasse.labels()
    out(" ".join(f"{labels[v.id]}:{degs[v.id]}" for v in spec.hasse.vertices))
    return EXIT_OK


def cmd_fundamental(args, out):
    if args.variety != "g2":
        out(f"no fundamental-class pipeline for {args.variety!r}")
        return EXIT_USAGE
    res = g2_fundamental_class()
    for line in res.stages:
        out(line)
    return EXIT_OK


def cmd_reconstruct(args, out):
    spec = _spec(args)
    if "reconstruct" not in spec.golden:
        out(f"{spec.name} has no reconstruction data")
        return EXIT_USAGE
    res = reconstruction(spec)
    out(f"solution space dimension: {res.solution_dimension}")
    out(f"unknowns: {res.unknowns}")
    out(f"contains_true: {'yes' if res.contains_true else 'no'}")
    for label, ok in res.samples_checked:
        out(f"sample {label}: {'associative' if ok else 'NOT associative (flagged)'}")
    return EXIT_OK if res.contains_true else EXIT_FAIL


def cmd_semisimple(args, out):
    spec = _spec(args)
    if "semisimple" not in spec.golden or spec.quantum_generator is None:
        out(f"{spec.name} has no quantum semisimplicity data")
        return EXIT_USAGE
    cert, tried, alg, _ = semisimplicity(spec)
    out(f"algebra: quantum ring at q={spec.golden['semisimple']['q']}, dimension {alg.dimension}")
    for c in tried:
        out(f"{c.element}: minimal polynomial {c.min_poly_str()} (degree {c.degree}, "
            f"squarefree={'yes' if c.squarefree else 'no'}, generates={'yes' if c.generates else 'no'})")
    out("semisimple: yes" if cert else "semisimple: not certified")
    return EXIT_OK if cert else EXIT_FAIL


def cmd_grass(args, out):
    ctx = GrassCtx(args.k, args.n)
    for lam in (args.lam, args.mu):
        if not ctx.fits(lam):
            out(f"partition {','.join(map(str, lam)) or '0'} does not fit G({args.k},{args.n})")
            return EXIT_USAGE
    out(str(grass_mult(ctx.cycle(args.lam), ctx.cycle(args.mu))))
    return EXIT_OK


def cmd_spinor(args, out):
    for lam in (args.lam, args.mu):
        if lam and lam[0] > 4:
            out(f"partition {','.join(map(str, lam))} has a part larger than 4")
            return EXIT_USAGE
    out(str(spinor_mult(SpinorCycle({args.lam: 1}), SpinorCycle({args.mu: 1}))))
    return EXIT_OK


def cmd_catalog(args, out):
    for name in available():
        spec = resolve(name)
        triple = spec.metadata.get("triple")
        extra = f" triple ({', '.join(triple)})" if triple else ""
        out(f"{name}: group {spec.group}, dimension {spec.dimension}, index {spec.index}{extra}")
    out("classification:")
    for fam in CLASSIFICATION:
        cond = f" [{fam['condition']}]" if fam["condition"] else ""
        entry = f" -> {fam['catalog']}" if fam["catalog"] else ""
        out(f"  ({', '.join(fam['triple'])}){cond}{entry}")
    return EXIT_OK


# --- parser -------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="horochow", description=__doc__)
    p.add_argument("--ascii", action="store_true", help="transliterate Greek symbols and superscripts")
    sub = p.add_subparsers(dest="command", required=True)

    def variety(sp, spec_flag=True):
        sp.add_argument("variety", nargs="?" if spec_flag else None)
        if spec_flag:
            sp.add_argument("--spec", help="path to a variety spec JSON file")

    v = sub.add_parser("verify", help="run the verification suite")
    variety(v)
    mode = v.add_mutually_exclusive_group()
    mode.add_argument("--classical", action="store_true")
    mode.add_argument("--quantum", action="store_true")
    mode.add_argument("--all", action="store_true")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="print a multiplication table computed from the ring")
    variety(t)
    t.add_argument("--basis", choices=("first", "dual"), default="first")
    t.add_argument("--quantum", action="store_true", help="quantum multiplication by the second generator")
    t.add_argument("--format", choices=("text", "json"), default="text")
    t.set_defaults(func=cmd_table)

    d = sub.add_parser("degrees", help="degrees of the basis classes by path counting")
    variety(d)
    d.set_defaults(func=cmd_degrees)

    f = sub.add_parser("fundamental-class", help="class of the G2-variety in G(2,8)")
    f.add_argument("variety")
    f.set_defaults(func=cmd_fundamental)

    r = sub.add_parser("reconstruct", help="second-generator reconstruction experiment")
    variety(r)
    r.set_defaults(func=cmd_reconstruct)

    s = sub.add_parser("semisimple", help="semisimplicity certificate of the quantum ring")
    variety(s)
    s.set_defaults(func=cmd_semisimple)

    g = sub.add_parser("grass", help="Schubert calculus on G(k,n)")
    gsub = g.add_subparsers(dest="op", required=True)
    gp = gsub.add_parser("prod")
    gp.add_argument("k", type=int)
    gp.add_argument("n", type=int)
    gp.add_argument("lam", type=_partition)
    gp.add_argument("mu", type=_partition)
    gp.set_defaults(func=cmd_grass)

    sp = sub.add_parser("spinor", help="Schubert calculus on the spinor variety of Spin(10)")
    ssub = sp.add_subparsers(dest="op", required=True)
    spp = ssub.add_parser("prod")
    spp.add_argument("lam", type=_strict_partition)
    spp.add_argument("mu", type=_strict_partition)
    spp.set_defaults(func=cmd_spinor)

    c = sub.add_parser("catalog", help="catalog queries")
    csub = c.add_subparsers(dest="op", required=True)
    csub.add_parser("list").set_defaults(func=cmd_catalog)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Out(args.ascii)
    try:
        if args.command == "grass" and not 0 < args.k < args.n:
            out(f"need 0 < k < n, got G({args.k},{args.n})")
            return EXIT_USAGE
        return args.func(args, out)
    except UnknownVariety as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (HorochowError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
