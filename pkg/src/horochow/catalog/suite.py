"""Verification suites driven by the golden data of a VarietySpec."""
import re
from dataclasses import dataclass
from fractions import Fraction

from .. import hasse as hs
from ..chern import g2_fundamental_class
from ..errors import HorochowError
from ..polyexpr import parse_poly
from ..report import Check, CheckReport, check
from ..ringkit import build, find_semisimple_witness, semisimple_certificate, verify_certificate
from ..schubert import GrassCtx, SchubertCycle, gamma, spinor_integrate


@dataclass(frozen=True)
class SuiteOptions:
    classical: bool = True
    quantum: bool = False
    fundamental_class: bool = False
    reconstruct: bool = False
    semisimple: bool = False

    @classmethod
    def everything(cls):
        return cls(True, True, True, True, True)


class SpecContext:
    """Lazily built rings and images shared by the checks of one suite run."""

    def __init__(self, spec):
        self.spec = spec
        self.labels = spec.labels()
        self.aliases = spec.golden.get("aliases", {})
        self._cache = {}

    def _get(self, key, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    @property
    def ring(self):
        return self._get("ring", lambda: self._build_ring(False))

    @property
    def qring(self):
        return self._get("qring", lambda: self._build_ring(True))

    def _build_ring(self, quantum):
        expected = None if quantum else self.spec.golden.get("hilbert")
        return build(self.spec.presentation(quantum), expected)

    def _seeds(self, ring):
        return {v: parse_poly(t).to_poly(ring.names) for v, t in self.spec.seeds.items()}

    @property
    def images(self):
        return self._get("images", lambda: hs.giambelli_solve(self.spec.hasse, self.ring, self._seeds(self.ring)))

    @property
    def qimages(self):
        return self._get("qimages", lambda: hs.giambelli_solve(self.spec.hasse, self.qring, self._seeds(self.qring)))

    @property
    def dual_images(self):
        dual_of = self.spec.golden.get("dual_basis", {}).get("dual_of", {})
        return self._get("dual", lambda: hs.dual_images(self.spec.hasse, self.ring, self.images, dual_of))

    def env(self, quantum=False):
        ring = self.qring if quantum else self.ring
        env = dict(ring.env())
        env.update(self.qimages if quantum else self.images)
        if not quantum and self.spec.dual_hasse is not None:
            env.update(self.dual_images)
        for a, target in self.aliases.items():
            env[a] = env[target]
        return env

    def value(self, text, quantum=False):
        ring = self.qring if quantum else self.ring
        return ring.evaluate(parse_poly(text), self.env(quantum))

    def pretty(self, text):
        return parse_poly(text).pretty(self.labels)


class _Runner:
    def __init__(self, report):
        self.report = report

    def run(self, cid, fn):
        """Append the checks produced by ``fn``; failures become error entries."""
        try:
            out = fn()
        except (HorochowError, ArithmeticError, KeyError, ValueError) as exc:
            self.report.append(Check(cid, "error", "", detail=f"{type(exc).__name__}: {exc}"))
            return
        if isinstance(out, Check):
            out = [out]
        self.report.extend(out)


def _fmt_map(m):
    return " ".join(f"{k}:{v}" for k, v in m.items())


def _classical(ctx, run):
    spec, g = ctx.spec, ctx.spec.golden
    n = spec.name

    def hilbert():
        hil = ctx.ring.hilbert()
        ok = "hilbert" not in g or hil == g["hilbert"]
        return check(f"{n}.ring.hilbert", ok, f"Hilbert {tuple(hil)}, total {sum(hil)}", hil, g.get("hilbert"))

    run(f"{n}.ring.hilbert", hilbert)

    def degrees():
        want = {k: Fraction(v) for k, v in g["degrees"].items()}
        h = ctx.ring.gen(hs.diag_h_name(ctx.ring))
        by_ring = {
            v.id: ctx.ring.integrate(h ** (spec.dimension - v.degree) * ctx.images[v.id]) for v in spec.hasse.vertices
        }
        by_paths = hs.degrees_from_hasse(spec.hasse)
        labels = spec.hasse.labels()
        text = " ".join(f"{labels[v]}:{by_paths[v]}" for v in want)
        return [
            check(f"{n}.degrees.ring", by_ring == want, "degrees by ring integration", _fmt_map(by_ring), _fmt_map(want)),
            check(f"{n}.degrees.hasse", by_paths == want, f"degrees by path counting {text}", _fmt_map(by_paths), _fmt_map(want)),
        ]

    if "degrees" in g:
        run(f"{n}.degrees", degrees)

    for v, text in g.get("giambelli", {}).items():
        def giam(v=v, text=text):
            got, want = ctx.images[v], ctx.value(text)
            return check(f"{n}.giambelli.{v}", got == want, f"{ctx.labels[v]} = {ctx.pretty(text)}", got, want)

        run(f"{n}.giambelli.{v}", giam)

    dual = g.get("dual_basis")
    if dual and spec.dual_hasse is not None:
        def dual_check():
            rep, _ = hs.dual_diagram_check(
                spec.hasse, ctx.ring, ctx.images, spec.dual_hasse, dual["dual_of"], dual.get("formulas", {}),
                prefix=f"{n}.dual", labels=ctx.labels,
            )
            return list(rep)

        run(f"{n}.dual", dual_check)

    for name, rows in g.get("tables", {}).items():
        def table(rows=rows, name=name):
            diag = spec.hasse
            images = dict(ctx.images)
            if spec.dual_hasse is not None and any(
                parse_poly(r["lhs"]).identifiers() & set(spec.dual_hasse.by_id) for r in rows
            ):
                diag, images = spec.dual_hasse, dict(ctx.dual_images)
            env = ctx.env()
            for k in list(env):
                if k not in ctx.ring.env():
                    images.setdefault(k, env[k])
            return list(hs.verify_table(diag, ctx.ring, images, rows, f"{n}.table.{name}", ctx.aliases, ctx.labels))

        run(f"{n}.table.{name}", table)

    _identities(ctx, run, "classical")

    orth = g.get("orthogonality")
    if orth:
        def orthogonality():
            env = ctx.env()
            bad = [f"{a}·{b}" for a in orth["A1"] for b in orth["A2"] if env[a] * env[b]]
            return check(f"{n}.relation.A1A2", not bad, "A₁A₂=0", detail=", ".join(bad))

        run(f"{n}.relation.A1A2", orthogonality)

    for key, data in g.get("relation_checks", {}).items():
        run(f"{n}.relation.{key}", lambda key=key, data=data: _grass_relation(n, key, data))

    if "spinor" in g:
        run(f"{n}.spinor", lambda: _spinor(ctx, g["spinor"]))


def _identities(ctx, run, which):
    n = ctx.spec.name
    quantum = which == "quantum"
    for row in ctx.spec.golden.get("identities", []):
        if row.get("ring", "classical") != which:
            continue
        cid = f"{n}.quantum.identity.{row['id']}" if quantum else f"{n}.relation.{row['id']}"

        def ident(row=row, cid=cid):
            got, want = ctx.value(row["lhs"], quantum), ctx.value(row["rhs"], quantum)
            summary = row.get("summary") or f"{ctx.pretty(row['lhs'])} = {ctx.pretty(row['rhs'])}"
            detail = row.get("note", "")
            if got != want:
                ring = ctx.qring if quantum else ctx.ring
                images = ctx.qimages if quantum else ctx.images
                detail = f"engine gives {hs.express(ctx.spec.hasse, ring, images, got).render(ctx.spec.hasse)}"
            return check(cid, got == want, summary, got, want, detail)

        run(cid, ident)


def _cycle(ctx, data):
    return SchubertCycle({tuple(int(p) for p in k.split(",")): Fraction(v) for k, v in data.items()}, ctx)


def _grass_relation(name, key, data):
    g = GrassCtx(*data["grassmannian"])
    fund = _cycle(g, data["fundamental_class"])
    out = []
    for prod in data.get("products", []):
        got = fund * g.cycle(tuple(int(p) for p in prod["with"].split(",")))
        want = _cycle(g, prod["expect"])
        out.append(check(f"{name}.relation.{key}.{prod['with'].replace(',', '')}", got == want,
                         f"[X]·σ[{prod['with']}] = {want}", got, want))
    if "restricted_class" in data:
        s1, s11 = g.hyperplane(), g.cycle((1, 1))
        lifted = s11 * s11 * 3 - s1 * s1 * s11
        want = _cycle(g, data["restricted_class"])
        out.append(check(f"{name}.relation.{key}.restriction", lifted == want,
                         f"3σ[1,1]² - σ[1]²σ[1,1] = {want}", lifted, want))
        vanish = fund * want
        out.append(check(f"{name}.relation.{key}.vanishes", not vanish, f"[X]·({want}) = 0", vanish, 0))
    return out


_GAMMA = re.compile(r"^g(\d+)$")


def _gamma_env(names):
    env = {}
    for name in names:
        m = _GAMMA.match(name)
        if m:
            env[name] = gamma(tuple(int(c) for c in m.group(1)))
    return env


def _spinor_value(text):
    expr = parse_poly(text)
    return expr.evaluate(_gamma_env(expr.identifiers()), const=lambda c: gamma((), c))


def _spinor(ctx, data):
    n = ctx.spec.name
    out = []
    for i, row in enumerate(data.get("identities", []), start=1):
        got, want = _spinor_value(row["lhs"]), _spinor_value(row["rhs"])
        summary = f"{parse_poly(row['lhs']).pretty(_GAMMA_LABELS)} = {parse_poly(row['rhs']).pretty(_GAMMA_LABELS)}"
        out.append(check(f"{n}.spinor.identity.{i:02d}", got == want, summary, got, want))
    rc = data.get("relation_check")
    if rc:
        got, want = ctx.value(rc["lhs"]), ctx.value(rc["rhs"])
        out.append(check(f"{n}.spinor.r6_derivation", got == want and not got,
                         f"{ctx.pretty(rc['lhs'])} = {ctx.pretty(rc['rhs'])} = 0", got, want))
        restriction = {k: parse_poly(v) for k, v in data["restriction"].items()}
        expr = parse_poly(rc["lhs"])
        env = {k: e.evaluate(_gamma_env(e.identifiers()), const=lambda c: gamma((), c)) for k, e in restriction.items()}
        restricted = expr.evaluate(env, const=lambda c: gamma((), c))
        out.append(check(f"{n}.spinor.restricted_relation", not restricted,
                         "restriction of the R6 combination vanishes on the spinor variety", restricted, 0))
    if "degree" in data:
        top = gamma((1,)) ** 10
        deg = spinor_integrate(top)
        ring_deg = ctx.spec.normalization[2]
        want = Fraction(data["degree"])
        out.append(check(f"{n}.spinor.degree", deg == want == ring_deg, f"∫γ₁¹⁰ = {deg}", deg, want))
    return out


_GAMMA_LABELS = {f"g{d}": f"γ{d}" for d in ("1", "2", "3", "4", "21", "31", "32", "41", "42", "43", "321")}


def _quantum(ctx, run):
    spec, g = ctx.spec, ctx.spec.golden
    n = spec.name

    def degeneration():
        classical = ctx.ring.finite_algebra()
        at_zero = ctx.qring.finite_algebra(0)
        ok = classical.labels == at_zero.labels and classical.table == at_zero.table
        return check(f"{n}.quantum.q0", ok, "q = 0 recovers the classical structure constants")

    run(f"{n}.quantum.q0", degeneration)

    for v, text in g.get("quantum_giambelli", {}).items():
        def giam(v=v, text=text):
            got, want = ctx.qimages[v], ctx.value(text, True)
            return check(f"{n}.quantum.giambelli.{v}", got == want, f"{ctx.labels[v]} = {ctx.pretty(text)}", got, want)

        run(f"{n}.quantum.giambelli.{v}", giam)

    lines = g.get("quantum_chevalley", [])
    for row in lines:
        v = row["vertex"]

        def chev(v=v, row=row):
            h = ctx.qring.gen(hs.diag_h_name(ctx.qring))
            got, want = h * ctx.qimages[v], ctx.value(row["rhs"], True)
            return check(f"{n}.quantum.chevalley.{v}", got == want,
                         f"h·{ctx.labels[v]} = {ctx.pretty(row['rhs'])}", got, want)

        run(f"{n}.quantum.chevalley.{v}", chev)

    if lines:
        def corrected():
            # vertices whose quantum h-product differs from the classical edge data
            h = ctx.qring.gen(hs.diag_h_name(ctx.qring))
            found = []
            for vert in spec.hasse.vertices:
                classical = sum(
                    (ctx.qimages[e.target] * e.mult for e in spec.hasse.out_edges(vert.id)), ctx.qring.scalar(0)
                )
                if h * ctx.qimages[vert.id] != classical:
                    found.append(vert.id)
            listed = [row["vertex"] for row in lines if "q" in parse_poly(row["rhs"]).identifiers()]
            return check(f"{n}.quantum.corrections", sorted(found) == sorted(listed),
                         f"{len(found)} Chevalley lines carry q-corrections", found, listed)

        run(f"{n}.quantum.corrections", corrected)

    for name, rows in g.get("quantum_tables", {}).items():
        def table(rows=rows, name=name):
            env = ctx.env(True)
            images = {k: v for k, v in env.items() if k not in ctx.qring.env()}
            return list(hs.verify_table(spec.hasse, ctx.qring, {**ctx.qimages, **images}, rows,
                                        f"{n}.quantum.table.{name}", ctx.aliases, ctx.labels))

        run(f"{n}.quantum.table.{name}", table)

    _identities(ctx, run, "quantum")


def _fundamental(ctx, run):
    n = ctx.spec.name
    data = ctx.spec.golden.get("fundamental_class")
    if not data:
        return

    def fundamental():
        res = g2_fundamental_class()
        big = GrassCtx(*data["grassmannian"])
        want = _cycle(big, data["class"])
        evals = {",".join(map(str, k)): v for k, v in res.evaluations.items()}
        want_evals = {k: Fraction(v) for k, v in data["evaluations"].items()}
        return [
            check(f"{n}.fundamental.evaluations", evals == want_evals,
                  "evaluations " + ", ".join(f"{k}:{evals.get(k)}" for k in want_evals), evals, want_evals),
            check(f"{n}.fundamental.class", res.fundamental_class == want, f"[X] = {res.fundamental_class}",
                  res.fundamental_class, want),
            check(f"{n}.fundamental.schur_route", res.schur_route == want, f"second route gives {res.schur_route}",
                  res.schur_route, want),
        ]

    run(f"{n}.fundamental", fundamental)


def reconstruction(spec, ctx=None):
    """Run the second-generator reconstruction on the first diagram of ``spec``."""
    ctx = ctx or SpecContext(spec)
    sv = spec.golden["reconstruct"]["sigma_vertex"]
    diag = spec.hasse
    pairing = hs.ring_pairing(diag, ctx.ring, ctx.images)
    true_op = hs.ring_operator(diag, ctx.ring, ctx.images, ctx.images[sv], diag.degree(sv))
    return hs.reconstruct_second_generator(diag, pairing, sv, true_op)


def _reconstruct(ctx, run):
    n = ctx.spec.name
    if "reconstruct" not in ctx.spec.golden:
        return

    def recon():
        res = reconstruction(ctx.spec, ctx)
        flagged = [lab for lab, ok in res.samples_checked if not ok]
        detail = "non-associative samples flagged: " + ", ".join(flagged) if flagged else ""
        return check(f"{n}.reconstruct", res.contains_true, res.summary(), detail=detail)

    run(f"{n}.reconstruct", recon)


def semisimplicity(spec, ctx=None):
    """(certificate or None, attempts, algebra) for the quantum ring at the golden q value."""
    ctx = ctx or SpecContext(spec)
    data = spec.golden["semisimple"]
    alg = ctx.qring.specialize_q(Fraction(data["q"]))
    cands = [(text, alg.vector(ctx.value(text, True))) for text in data["candidates"]]
    cert, tried = find_semisimple_witness(alg, cands)
    return cert, tried, alg, dict(cands)


def _semisimple(ctx, run):
    n = ctx.spec.name
    if "semisimple" not in ctx.spec.golden:
        return

    def cert_check():
        cert, tried, alg, vecs = semisimplicity(ctx.spec, ctx)
        if cert is None:
            return check(f"{n}.semisimple.certificate", False, "no semisimple witness among the candidates",
                         detail="; ".join(f"{c.element}: degree {c.degree}" for c in tried))
        problems = verify_certificate(alg, vecs[cert.element], cert)
        return [
            check(f"{n}.semisimple.certificate", cert.semisimple,
                  f"q={ctx.spec.golden['semisimple']['q']}: {cert.element} has squarefree minimal polynomial of degree {cert.degree}",
                  cert.min_poly_str(), detail=cert.min_poly_str()),
            check(f"{n}.semisimple.reverified", not problems, "certificate re-derived independently",
                  detail="; ".join(problems)),
        ]

    run(f"{n}.semisimple", cert_check)

    def classical_check():
        alg = ctx.ring.finite_algebra()
        h = alg.vector(ctx.ring.gen(hs.diag_h_name(ctx.ring)))
        cert = semisimple_certificate(alg, h, "h")
        return check(f"{n}.semisimple.classical_nilpotent", not cert.squarefree,
                     f"classical ring: minimal polynomial of h is {cert.min_poly_str()}")

    run(f"{n}.semisimple.classical_nilpotent", classical_check)


def run_suite(spec, options=None):
    """Run the selected verifications in dependency order and collect every check."""
    options = options or SuiteOptions()
    ctx = SpecContext(spec)
    report = CheckReport()
    run = _Runner(report).run
    if options.classical:
        _classical(ctx, run)
    if options.fundamental_class:
        _fundamental(ctx, run)
    if options.quantum and spec.quantum_generator is not None:
        _quantum(ctx, run)
    if options.reconstruct:
        _reconstruct(ctx, run)
    if options.semisimple and spec.quantum_generator is not None:
        _semisimple(ctx, run)
    return report
